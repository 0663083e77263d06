use std::fmt;

use super::lexer::{lex, Tok, Token};
use super::{canonical_class_name, ClassTable, BOTTOM, TOP};
use crate::error::TypeError;
use crate::wildcards::{contravariant_label, covariant_label, WILDCARD};

/// A reference type with no type variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroundType {
    /// A non-generic class, including `O` and `N`.
    Class(String),
    /// A generic class applied to one argument.
    Inst(String, Box<TypeArg>),
}

/// A (possibly wildcard) type argument.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeArg {
    /// `?`
    Wild,
    /// `T`
    Inv(GroundType),
    /// `? <: T`
    Cov(GroundType),
    /// `? :> T`
    Con(GroundType),
}

impl GroundType {
    pub fn class(name: impl Into<String>) -> Self {
        GroundType::Class(name.into())
    }

    pub fn inst(name: impl Into<String>, arg: TypeArg) -> Self {
        GroundType::Inst(name.into(), Box::new(arg))
    }

    pub fn top() -> Self {
        Self::class(TOP)
    }

    pub fn bottom() -> Self {
        Self::class(BOTTOM)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, GroundType::Class(c) if c == TOP)
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, GroundType::Class(c) if c == BOTTOM)
    }

    /// The class this type is built from.
    pub fn head(&self) -> &str {
        match self {
            GroundType::Class(c) | GroundType::Inst(c, _) => c,
        }
    }

    pub fn arg(&self) -> Option<&TypeArg> {
        match self {
            GroundType::Class(_) => None,
            GroundType::Inst(_, a) => Some(a),
        }
    }

    /// Rewrites every argument into its unique spelling, innermost first.
    pub fn normalize(self) -> Self {
        match self {
            GroundType::Class(_) => self,
            GroundType::Inst(c, a) => GroundType::Inst(c, Box::new(a.normalize())),
        }
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl TypeArg {
    /// `? <: t`, coalescing `? <: O` to `?` and `? <: N` to `N`.
    pub fn covariant(t: GroundType) -> Self {
        if t.is_top() {
            TypeArg::Wild
        } else if t.is_bottom() {
            TypeArg::Inv(t)
        } else {
            TypeArg::Cov(t)
        }
    }

    /// `? :> t`, coalescing `? :> N` to `?` and `? :> O` to `O`.
    pub fn contravariant(t: GroundType) -> Self {
        if t.is_bottom() {
            TypeArg::Wild
        } else if t.is_top() {
            TypeArg::Inv(t)
        } else {
            TypeArg::Con(t)
        }
    }

    pub fn bound(&self) -> Option<&GroundType> {
        match self {
            TypeArg::Wild => None,
            TypeArg::Inv(t) | TypeArg::Cov(t) | TypeArg::Con(t) => Some(t),
        }
    }

    pub fn normalize(self) -> Self {
        match self {
            TypeArg::Wild => TypeArg::Wild,
            TypeArg::Inv(t) => TypeArg::Inv(t.normalize()),
            TypeArg::Cov(t) => TypeArg::covariant(t.normalize()),
            TypeArg::Con(t) => TypeArg::contravariant(t.normalize()),
        }
    }

    pub fn is_normal(&self) -> bool {
        self.clone().normalize() == *self
    }
}

impl fmt::Display for GroundType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundType::Class(c) => f.write_str(c),
            GroundType::Inst(c, a) => write!(f, "{c}<{a}>"),
        }
    }
}

impl fmt::Display for TypeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeArg::Wild => f.write_str(WILDCARD),
            TypeArg::Inv(t) => write!(f, "{t}"),
            TypeArg::Cov(t) => f.write_str(&covariant_label(&t.to_string())),
            TypeArg::Con(t) => f.write_str(&contravariant_label(&t.to_string())),
        }
    }
}

/// The unique printed form of a normalized type; also its vertex label.
pub fn canonical_label(t: &GroundType) -> String {
    t.to_string()
}

/// Nesting depth: the first approximation index at which `t` is a vertex.
///
/// Plain classes are 0, `c<?>` is 1, and `c<a>` with bound `b` is
/// `1 + max(1, rank(b))`: a bound, even a plain class, is only available
/// as an argument once the first approximation exists.
pub fn rank(t: &GroundType) -> usize {
    match t.arg() {
        None => 0,
        Some(TypeArg::Wild) => 1,
        Some(a) => 1 + rank(a.bound().expect("non-wild argument has a bound")).max(1),
    }
}

struct TypeParser<'t> {
    tokens: Vec<Token>,
    pos: usize,
    table: &'t ClassTable,
}

impl TypeParser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> TypeError {
        let t = &self.tokens[self.pos];
        TypeError::Syntax {
            at: t.at,
            message: format!("expected {wanted}, found {}", t.tok.describe()),
        }
    }

    fn ground_type(&mut self) -> Result<GroundType, TypeError> {
        let name = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.unexpected("a class name")),
        };
        self.bump();
        let name = match canonical_class_name(&name) {
            Some(c) => c.to_owned(),
            None if self.table.contains(&name) => name,
            None => return Err(TypeError::UnknownClass(name)),
        };
        let generic = self.table.is_generic(&name);
        if *self.peek() != Tok::Lt {
            return if generic {
                Err(TypeError::MissingArgument(name))
            } else {
                Ok(GroundType::Class(name))
            };
        }
        if !generic {
            return Err(TypeError::ArgumentToNonGeneric(name));
        }
        self.bump();
        let arg = self.type_arg()?;
        if *self.peek() != Tok::Gt {
            return Err(self.unexpected("`>`"));
        }
        self.bump();
        Ok(GroundType::Inst(name, Box::new(arg)))
    }

    fn type_arg(&mut self) -> Result<TypeArg, TypeError> {
        if *self.peek() != Tok::Question {
            return Ok(TypeArg::Inv(self.ground_type()?));
        }
        self.bump();
        let covariant = match self.peek() {
            Tok::SubOp => true,
            Tok::SuperOp => false,
            Tok::Ident(s) if s == "extends" => true,
            Tok::Ident(s) if s == "super" => false,
            _ => return Ok(TypeArg::Wild),
        };
        self.bump();
        let bound = self.ground_type()?;
        Ok(if covariant {
            TypeArg::covariant(bound)
        } else {
            TypeArg::contravariant(bound)
        })
    }
}

/// Parses and normalizes a type expression over `table`.
pub fn parse_ground_type(text: &str, table: &ClassTable) -> Result<GroundType, TypeError> {
    let tokens = lex(text).map_err(|(at, message)| TypeError::Syntax { at, message })?;
    let mut p = TypeParser {
        tokens,
        pos: 0,
        table,
    };
    let t = p.ground_type()?;
    if *p.peek() != Tok::Eof {
        return Err(p.unexpected("end of input"));
    }
    Ok(t)
}
