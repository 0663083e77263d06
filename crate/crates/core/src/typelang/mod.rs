//! Class tables and ground types.
//!
//! A [`ClassTable`] comes from parsing class declarations and always holds
//! the synthetic top `O` (Object) and bottom `N` (Null). Ground types are
//! the query-side language (`C<? <: D<?>>`), kept in a normal form where
//! every type has exactly one spelling.

mod decl;
mod lexer;
mod ty;

use std::collections::{BTreeMap, BTreeSet};

pub use ty::{canonical_label, parse_ground_type, rank, GroundType, TypeArg};

use crate::error::{DeclError, GraphError};
use crate::graph::{EdgeTag, LabeledDigraph};
use crate::pcgp::PartitionedGraph;
use crate::wildcards::BipointedGraph;

/// Name of the top class (Object).
pub const TOP: &str = "O";
/// Name of the bottom class (Null).
pub const BOTTOM: &str = "N";

/// Maps the reserved spellings to `O`/`N`; `None` for ordinary names.
pub(crate) fn canonical_class_name(name: &str) -> Option<&'static str> {
    match name {
        "O" | "Object" => Some(TOP),
        "N" | "Null" => Some(BOTTOM),
        _ => None,
    }
}

/// The subclassing relation of a program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable {
    /// `O`, then user classes in declaration order, then `N`.
    classes: Vec<String>,
    generic: BTreeSet<String>,
    /// Direct superclass of every user class.
    superclass: BTreeMap<String, String>,
}

/// Parses class declarations into a [`ClassTable`].
pub fn parse_declarations(source: &str) -> Result<ClassTable, DeclError> {
    decl::parse(source)
}

impl ClassTable {
    pub fn parse(source: &str) -> Result<Self, DeclError> {
        parse_declarations(source)
    }

    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn contains(&self, name: &str) -> bool {
        name == TOP || name == BOTTOM || self.superclass.contains_key(name)
    }

    pub fn generic_classes(&self) -> &BTreeSet<String> {
        &self.generic
    }

    pub fn is_generic(&self, name: &str) -> bool {
        self.generic.contains(name)
    }

    pub fn non_generic_classes(&self) -> impl Iterator<Item = &str> + '_ {
        self.classes
            .iter()
            .map(String::as_str)
            .filter(|c| !self.is_generic(c))
    }

    /// Direct superclass; `None` for `O` and `N`.
    pub fn superclass(&self, name: &str) -> Option<&str> {
        self.superclass.get(name).map(String::as_str)
    }

    /// Reflexive-transitive subclassing, by walking superclass links.
    pub fn is_subclass(&self, sub: &str, sup: &str) -> bool {
        if sub == sup || sub == BOTTOM || sup == TOP {
            return true;
        }
        let mut c = sub;
        while let Some(parent) = self.superclass(c) {
            if parent == sup {
                return true;
            }
            c = parent;
        }
        false
    }

    /// User classes nobody extends; these sit directly above `N`.
    fn minimal_classes(&self) -> impl Iterator<Item = &str> + '_ {
        let extended: BTreeSet<&str> = self.superclass.values().map(String::as_str).collect();
        self.superclass
            .keys()
            .map(String::as_str)
            .filter(move |c| !extended.contains(c))
    }

    /// The Hasse diagram of subclassing, edges tagged [`EdgeTag::Inherit`].
    pub fn subclassing_graph(&self) -> LabeledDigraph {
        let mut edges: Vec<(&str, &str, EdgeTag)> = self
            .superclass
            .iter()
            .map(|(c, s)| (c.as_str(), s.as_str(), EdgeTag::Inherit))
            .collect();
        let minimal: Vec<&str> = self.minimal_classes().collect();
        if minimal.is_empty() {
            edges.push((BOTTOM, TOP, EdgeTag::Inherit));
        }
        edges.extend(minimal.into_iter().map(|c| (BOTTOM, c, EdgeTag::Inherit)));
        LabeledDigraph::from_parts(self.classes.iter().map(String::as_str), edges)
            .expect("parsed class tables are acyclic")
    }

    pub fn bipointed(&self) -> BipointedGraph {
        BipointedGraph::new(self.subclassing_graph(), TOP, BOTTOM)
            .expect("parsed class tables have O on top and N at the bottom")
    }

    /// The subclassing graph split at the generic classes.
    pub fn partition(&self) -> Result<PartitionedGraph, GraphError> {
        PartitionedGraph::new(self.subclassing_graph(), self.generic.iter().cloned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(t: &ClassTable) -> Vec<(String, String)> {
        t.subclassing_graph()
            .edges()
            .map(|(a, b, _)| (a.to_owned(), b.to_owned()))
            .collect()
    }

    fn e(a: &str, b: &str) -> (String, String) {
        (a.to_owned(), b.to_owned())
    }

    #[test]
    fn single_generic_class() {
        let t = ClassTable::parse("class C<T> {}").unwrap();
        assert_eq!(t.classes(), ["O", "C", "N"]);
        assert_eq!(t.generic_classes().iter().collect::<Vec<_>>(), ["C"]);
        assert_eq!(edges(&t), vec![e("C", "O"), e("N", "C")]);
    }

    #[test]
    fn mixed_generic_and_plain() {
        let t = ClassTable::parse("class C {} // non-generic\nclass D<T> {}").unwrap();
        assert_eq!(t.classes(), ["O", "C", "D", "N"]);
        assert!(t.is_generic("D") && !t.is_generic("C"));
    }

    #[test]
    fn pass_through_inheritance() {
        let t = ClassTable::parse("class C<T> {} class E<T> extends C<T> {}").unwrap();
        assert_eq!(edges(&t), vec![e("C", "O"), e("E", "C"), e("N", "E")]);
        assert!(t.is_subclass("E", "C"));
        assert!(!t.is_subclass("C", "E"));
    }

    #[test]
    fn empty_program_and_aliases() {
        let t = ClassTable::parse("").unwrap();
        assert_eq!(edges(&t), vec![e("N", "O")]);
        let t = ClassTable::parse("class C extends Object {}").unwrap();
        assert_eq!(t.superclass("C"), Some("O"));
    }

    #[test]
    fn forward_references_are_allowed() {
        let t = ClassTable::parse("class E extends C {} class C {}").unwrap();
        assert_eq!(t.superclass("E"), Some("C"));
        assert_eq!(t.classes(), ["O", "E", "C", "N"]);
    }

    #[test]
    fn declaration_errors() {
        use crate::error::Span;
        let err = |src: &str| ClassTable::parse(src).unwrap_err();
        assert!(matches!(
            err("class C<T> {"),
            DeclError::Syntax { at: Span { line: 1, column: 13 }, .. }
        ));
        assert!(matches!(err("class C {}\nclass C {}"), DeclError::Duplicate { at: Span { line: 2, .. }, .. }));
        assert!(matches!(err("class C extends D {}"), DeclError::UndeclaredSuperclass { .. }));
        assert!(matches!(err("class C extends N {}"), DeclError::UndeclaredSuperclass { .. }));
        assert!(matches!(err("class Null {}"), DeclError::Reserved { .. }));
        assert!(matches!(err("class O {}"), DeclError::Reserved { .. }));
        assert!(matches!(
            err("class C<T> {} class E<U> extends C<T> {}"),
            DeclError::BadPassThrough { .. }
        ));
        assert!(matches!(
            err("class C<T> {} class E<T> extends C {}"),
            DeclError::BadPassThrough { .. }
        ));
        assert!(matches!(
            err("class C<T> {} class E extends C {}"),
            DeclError::NonGenericExtendsGeneric { .. }
        ));
        assert!(matches!(
            err("class C {} class E<T> extends C<T> {}"),
            DeclError::ArgumentToNonGeneric { .. }
        ));
        assert!(matches!(err("class A extends B {} class B extends A {}"), DeclError::Cycle(_)));
        assert!(matches!(err("class extends {}"), DeclError::Syntax { .. }));
    }

    #[test]
    fn example_five_graph() {
        let t = ClassTable::parse(
            "class C {} class E extends C {} class D {} class F<T> extends D {}",
        )
        .unwrap();
        assert_eq!(
            edges(&t),
            vec![
                e("C", "O"),
                e("D", "O"),
                e("E", "C"),
                e("F", "D"),
                e("N", "E"),
                e("N", "F"),
            ]
        );
        let pg = t.partition().unwrap();
        assert_eq!(pg.product_vertices().iter().collect::<Vec<_>>(), ["F"]);
    }
}
