//! Successive approximations of the subtyping relation.
//!
//! `S1` is the subclassing graph with every generic class `c` renamed to
//! `c<?>`. Each further step takes the wildcards graph of the previous
//! approximation and forms the partial product of the subclassing graph
//! with it, over the generic classes:
//!
//! ```text
//! S(i+1) = C  partial-product over generic classes  triangle(S(i))
//! ```
//!
//! The full relation is the limit of this sequence and is infinite as soon
//! as one class is generic, so the number of steps is always caller-chosen.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{LabeledDigraph, Reachability};
use crate::pcgp::partial_product;
use crate::typelang::{canonical_label, rank, ClassTable, GroundType, BOTTOM, TOP};
use crate::wildcards::{triangle, BipointedGraph, WILDCARD};

/// Vertex label of `class<arg>`.
pub fn instantiate(class: &str, arg: &str) -> String {
    format!("{class}<{arg}>")
}

/// The containment graph before the first step: a lone `?`.
pub fn initial_wildcards() -> LabeledDigraph {
    LabeledDigraph::singleton(WILDCARD)
}

/// `S1`: the subclassing graph with each generic class `c` relabeled `c<?>`.
pub fn initial_approximation(table: &ClassTable) -> BipointedGraph {
    let graph = table
        .subclassing_graph()
        .relabel(|c| {
            if table.is_generic(c) {
                instantiate(c, WILDCARD)
            } else {
                c.to_owned()
            }
        })
        .expect("generic instantiations never collide with class names");
    BipointedGraph::new(graph, TOP, BOTTOM).expect("relabeling keeps O and N")
}

/// One step of the iteration.
pub fn step(table: &ClassTable, current: &BipointedGraph) -> Result<BipointedGraph, Error> {
    let args = triangle(current)?;
    let next = partial_product(&table.partition()?, &args, instantiate)?;
    Ok(BipointedGraph::new(next, TOP, BOTTOM)?)
}

/// Size and order of one approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StepStats {
    pub iteration: usize,
    pub vertices: usize,
    pub edges: usize,
}

/// `S1..Sk` for one class table.
#[derive(Debug)]
pub struct IterationTrace {
    table: ClassTable,
    graphs: Vec<BipointedGraph>,
    closures: Vec<OnceLock<Reachability>>,
    fixed_point: bool,
}

/// Runs `iterations` steps, stopping early at a fixed point (which happens
/// exactly when no class is generic).
pub fn run(table: &ClassTable, iterations: usize) -> Result<IterationTrace, Error> {
    if iterations == 0 {
        return Err(Error::ZeroIterations);
    }
    let mut graphs = vec![initial_approximation(table)];
    let mut fixed_point = false;
    loop {
        let last = graphs.last().expect("trace is never empty");
        let next = step(table, last)?;
        if next.graph() == last.graph() {
            fixed_point = true;
            break;
        }
        if graphs.len() == iterations {
            break;
        }
        graphs.push(next);
    }
    Ok(IterationTrace {
        table: table.clone(),
        closures: graphs.iter().map(|_| OnceLock::new()).collect(),
        graphs,
        fixed_point,
    })
}

impl IterationTrace {
    pub fn table(&self) -> &ClassTable {
        &self.table
    }

    pub fn graphs(&self) -> &[BipointedGraph] {
        &self.graphs
    }

    /// `S_k`, 1-based.
    pub fn approximation(&self, k: usize) -> Option<&BipointedGraph> {
        k.checked_sub(1).and_then(|i| self.graphs.get(i))
    }

    pub fn last(&self) -> &BipointedGraph {
        self.graphs.last().expect("trace is never empty")
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn reached_fixed_point(&self) -> bool {
        self.fixed_point
    }

    pub fn stats(&self) -> Vec<StepStats> {
        self.graphs
            .iter()
            .enumerate()
            .map(|(i, g)| StepStats {
                iteration: i + 1,
                vertices: g.graph().vertex_count(),
                edges: g.graph().edge_count(),
            })
            .collect()
    }

    fn closure(&self, k: usize) -> &Reachability {
        self.closures[k - 1].get_or_init(|| self.graphs[k - 1].graph().reachability())
    }

    /// Smallest approximation index holding both types.
    pub fn depth_for(&self, sub: &GroundType, sup: &GroundType) -> Result<usize, Error> {
        let needed = rank(sub).max(rank(sup)).max(1);
        if needed <= self.len() {
            Ok(needed)
        } else if self.fixed_point {
            Ok(self.len())
        } else {
            Err(Error::RankExceedsTrace {
                rank: needed,
                depth: self.len(),
            })
        }
    }

    /// Subtyping read off the constructed graphs.
    pub fn subtype(&self, sub: &GroundType, sup: &GroundType) -> Result<bool, Error> {
        let k = self.depth_for(sub, sup)?;
        let graph = self.graphs[k - 1].graph();
        let (a, b) = (canonical_label(sub), canonical_label(sup));
        for l in [&a, &b] {
            if !graph.contains_vertex(l) {
                return Err(crate::error::GraphError::UnknownVertex(l.clone()).into());
            }
        }
        Ok(self.closure(k).reaches(&a, &b))
    }
}

/// Subtyping read off the constructed graphs; see [`IterationTrace::subtype`].
pub fn subtype_by_graph(
    trace: &IterationTrace,
    sub: &GroundType,
    sup: &GroundType,
) -> Result<bool, Error> {
    trace.subtype(sub, sup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::typelang::parse_ground_type;

    fn counts(src: &str, k: usize) -> Vec<usize> {
        let t = ClassTable::parse(src).unwrap();
        run(&t, k).unwrap().stats().iter().map(|s| s.vertices).collect()
    }

    #[test]
    fn first_approximations() {
        let t = ClassTable::parse("class C<T> {}").unwrap();
        let s1 = initial_approximation(&t);
        let expected =
            LabeledDigraph::from_pairs(["N", "C<?>", "O"], [("N", "C<?>"), ("C<?>", "O")]).unwrap();
        assert!(s1.graph().same_shape(&expected));

        let t = ClassTable::parse("class C {} class D<T> {}").unwrap();
        let s21 = initial_approximation(&t);
        let labels: Vec<&str> = s21.graph().vertices().collect();
        assert_eq!(labels, ["C", "D<?>", "N", "O"]);
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(counts("class C<T> {}", 3), [3, 8, 23]);
        assert_eq!(counts("class C<T> {} class D<T> {}", 2), [4, 20]);
        assert_eq!(
            counts("class C {} class E extends C {} class D {} class F<T> extends D {}", 2),
            [6, 20]
        );
    }

    #[test]
    fn second_approximation_edges() {
        let t = ClassTable::parse("class C<T> {}").unwrap();
        let trace = run(&t, 2).unwrap();
        let s12 = trace.last().graph();
        assert_eq!(s12.edge_count(), 10);
        for v in ["C<N>", "C<O>", "C<C<?>>"] {
            assert!(s12.has_edge("N", v), "N -> {v}");
        }
        assert!(s12.has_edge("C<?>", "O"));
        assert!(s12.reachable("C<N>", "C<?>").unwrap());
    }

    #[test]
    fn non_generic_program_is_its_own_fixed_point() {
        let t = ClassTable::parse("class C {} class E extends C {}").unwrap();
        let trace = run(&t, 5).unwrap();
        assert_eq!(trace.len(), 1);
        assert!(trace.reached_fixed_point());
        assert_eq!(trace.last().graph(), &t.subclassing_graph());
    }

    #[test]
    fn zero_iterations_rejected() {
        let t = ClassTable::parse("class C<T> {}").unwrap();
        assert_eq!(run(&t, 0).unwrap_err(), Error::ZeroIterations);
    }

    #[test]
    fn queries_need_enough_depth() {
        let t = ClassTable::parse("class C<T> {}").unwrap();
        let trace = run(&t, 1).unwrap();
        let ty = |s: &str| parse_ground_type(s, &t).unwrap();
        assert!(trace.subtype(&ty("C<?>"), &ty("O")).unwrap());
        assert!(trace.subtype(&ty("N"), &ty("C<?>")).unwrap());
        assert_eq!(
            trace.subtype(&ty("C<O>"), &ty("C<?>")),
            Err(Error::RankExceedsTrace { rank: 2, depth: 1 })
        );
    }
}
