//! Recursive-descent parser for class declarations:
//!
//! ```text
//! program  := decl* ;
//! decl     := "class" NAME tparam? ext? "{" "}" ;
//! tparam   := "<" NAME ">" ;
//! ext      := "extends" NAME passthru? ;
//! passthru := "<" NAME ">" ;
//! ```

use std::collections::{BTreeMap, BTreeSet};

use super::lexer::{lex, Tok, Token};
use super::{canonical_class_name, ClassTable, BOTTOM, TOP};
use crate::error::{DeclError, Span};

const KEYWORDS: [&str; 3] = ["class", "extends", "super"];

struct RawDecl {
    name: String,
    at: Span,
    param: Option<String>,
    extends: Option<(String, Option<String>, Span)>,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> DeclError {
        let t = self.peek();
        DeclError::Syntax {
            at: t.at,
            message: format!("expected {wanted}, found {}", t.tok.describe()),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Span, DeclError> {
        if self.peek().tok == tok {
            Ok(self.bump().at)
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<Span, DeclError> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => Ok(self.bump().at),
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }

    fn name(&mut self) -> Result<(String, Span), DeclError> {
        match &self.peek().tok {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                let s = s.clone();
                Ok((s, self.bump().at))
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    fn angled_name(&mut self) -> Result<Option<String>, DeclError> {
        if self.peek().tok != Tok::Lt {
            return Ok(None);
        }
        self.bump();
        let (name, _) = self.name()?;
        self.expect(Tok::Gt)?;
        Ok(Some(name))
    }

    fn decl(&mut self) -> Result<RawDecl, DeclError> {
        self.keyword("class")?;
        let (name, at) = self.name()?;
        let param = self.angled_name()?;
        let extends = match &self.peek().tok {
            Tok::Ident(s) if s == "extends" => {
                self.bump();
                let (sup, sup_at) = self.name()?;
                let arg = self.angled_name()?;
                Some((sup, arg, sup_at))
            }
            _ => None,
        };
        self.expect(Tok::LBrace)?;
        self.expect(Tok::RBrace)?;
        Ok(RawDecl {
            name,
            at,
            param,
            extends,
        })
    }
}

pub(super) fn parse(source: &str) -> Result<ClassTable, DeclError> {
    let tokens = lex(source).map_err(|(at, message)| DeclError::Syntax { at, message })?;
    let mut parser = Parser { tokens, pos: 0 };
    let mut decls = Vec::new();
    while parser.peek().tok != Tok::Eof {
        decls.push(parser.decl()?);
    }

    let mut order = Vec::new();
    let mut generic = BTreeSet::new();
    let mut seen = BTreeMap::new();
    for d in &decls {
        if canonical_class_name(&d.name).is_some() {
            return Err(DeclError::Reserved {
                at: d.at,
                name: d.name.clone(),
            });
        }
        if seen.insert(d.name.clone(), d).is_some() {
            return Err(DeclError::Duplicate {
                at: d.at,
                name: d.name.clone(),
            });
        }
        order.push(d.name.clone());
        if d.param.is_some() {
            generic.insert(d.name.clone());
        }
    }

    let mut superclass = BTreeMap::new();
    for d in &decls {
        let Some((sup, arg, at)) = &d.extends else {
            superclass.insert(d.name.clone(), TOP.to_owned());
            continue;
        };
        let at = *at;
        let sup = match canonical_class_name(sup) {
            Some(TOP) => TOP.to_owned(),
            Some(_) => {
                return Err(DeclError::UndeclaredSuperclass {
                    at,
                    class: d.name.clone(),
                    superclass: sup.clone(),
                })
            }
            None if seen.contains_key(sup) => sup.clone(),
            None => {
                return Err(DeclError::UndeclaredSuperclass {
                    at,
                    class: d.name.clone(),
                    superclass: sup.clone(),
                })
            }
        };
        match (&d.param, generic.contains(&sup)) {
            (None, true) => {
                return Err(DeclError::NonGenericExtendsGeneric {
                    at,
                    class: d.name.clone(),
                    superclass: sup,
                })
            }
            (Some(param), true) if arg.as_ref() != Some(param) => {
                return Err(DeclError::BadPassThrough {
                    at,
                    class: d.name.clone(),
                    superclass: sup,
                    param: param.clone(),
                })
            }
            (_, false) if arg.is_some() => {
                return Err(DeclError::ArgumentToNonGeneric { at, superclass: sup })
            }
            _ => {}
        }
        superclass.insert(d.name.clone(), sup);
    }

    for start in &order {
        let mut steps = 0;
        let mut c = start.as_str();
        while c != TOP {
            c = &superclass[c];
            steps += 1;
            if steps > order.len() {
                return Err(DeclError::Cycle(start.clone()));
            }
        }
    }

    let mut classes = Vec::with_capacity(order.len() + 2);
    classes.push(TOP.to_owned());
    classes.extend(order);
    classes.push(BOTTOM.to_owned());
    Ok(ClassTable {
        classes,
        generic,
        superclass,
    })
}
