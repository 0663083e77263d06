//! Rule-based subtyping and containment, by structural recursion over the
//! types. Nothing here touches the graph machinery; the construction in
//! [`crate::builder`] is checked against it.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::builder::run;
use crate::error::Error;
use crate::typelang::{ClassTable, GroundType, TypeArg};

/// Whether argument `inner` is contained in argument `outer`.
pub fn contains(inner: &TypeArg, outer: &TypeArg, table: &ClassTable) -> bool {
    if inner == outer {
        return true;
    }
    match (inner, outer) {
        (_, TypeArg::Wild) => true,
        (TypeArg::Cov(t) | TypeArg::Inv(t), TypeArg::Cov(u)) => subtype(t, u, table),
        (TypeArg::Con(t) | TypeArg::Inv(t), TypeArg::Con(u)) => subtype(u, t, table),
        _ => false,
    }
}

/// Whether `sub <: sup`.
pub fn subtype(sub: &GroundType, sup: &GroundType, table: &ClassTable) -> bool {
    if sub.is_bottom() || sup.is_top() || sub == sup {
        return true;
    }
    if !table.is_subclass(sub.head(), sup.head()) {
        return false;
    }
    match (sub.arg(), sup.arg()) {
        (_, None) => true,
        // arguments pass through inheritance unchanged
        (Some(a), Some(b)) => contains(a, b, table),
        (None, Some(_)) => false,
    }
}

/// Every normalized type of rank at most `max_rank`, sorted by label.
pub fn enumerate_types(table: &ClassTable, max_rank: usize) -> Vec<GroundType> {
    let plain: Vec<GroundType> = table.non_generic_classes().map(GroundType::class).collect();
    let mut level: BTreeSet<GroundType> = plain.iter().cloned().collect();
    for r in 1..=max_rank {
        let mut next: BTreeSet<GroundType> = plain.iter().cloned().collect();
        for c in table.generic_classes() {
            next.insert(GroundType::inst(c.as_str(), TypeArg::Wild));
            if r == 1 {
                continue;
            }
            for bound in &level {
                for arg in [
                    TypeArg::Inv(bound.clone()),
                    TypeArg::covariant(bound.clone()),
                    TypeArg::contravariant(bound.clone()),
                ] {
                    next.insert(GroundType::inst(c.as_str(), arg));
                }
            }
        }
        level = next;
    }
    let mut out: Vec<GroundType> = level.into_iter().collect();
    out.sort_by_cached_key(|t| t.to_string());
    out
}

/// One disagreement between the two procedures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub sub: String,
    pub sup: String,
    pub by_graph: bool,
    pub by_rules: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialReport {
    pub max_rank: usize,
    pub types: usize,
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl DifferentialReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares graph subtyping against [`subtype`] on every ordered pair of
/// types up to `max_rank`. Disagreements are reported, not raised.
pub fn differential_check(table: &ClassTable, max_rank: usize) -> Result<DifferentialReport, Error> {
    let trace = run(table, max_rank.max(1))?;
    let types = enumerate_types(table, max_rank);
    let mut mismatches = Vec::new();
    for a in &types {
        for b in &types {
            let by_graph = trace.subtype(a, b)?;
            let by_rules = subtype(a, b, table);
            if by_graph != by_rules {
                mismatches.push(Mismatch {
                    sub: a.to_string(),
                    sup: b.to_string(),
                    by_graph,
                    by_rules,
                });
            }
        }
    }
    Ok(DifferentialReport {
        max_rank,
        types: types.len(),
        pairs: types.len() * types.len(),
        mismatches,
    })
}
