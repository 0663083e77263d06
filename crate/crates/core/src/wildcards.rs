//! The wildcards ("triangle") graph: the containment order over every type
//! argument that can be formed from the types of a subtyping graph.
//!
//! Three copies of the input meet at the corners. The covariant copy
//! `? <: T` keeps the input order, the contravariant copy `? :> T` reverses
//! it, and the invariant copy `T` is an antichain linked up into both. The
//! corners coalesce: `? <: O` and `? :> N` are `?`, `? :> O` is `O`, and
//! `? <: N` is `N`.

use crate::error::GraphError;
use crate::graph::{EdgeTag, LabeledDigraph};

/// The default wildcard argument.
pub const WILDCARD: &str = "?";

pub fn covariant_label(bound: &str) -> String {
    format!("? <: {bound}")
}

pub fn contravariant_label(bound: &str) -> String {
    format!("? :> {bound}")
}

/// A DAG with a unique sink `top` and a unique source `bottom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipointedGraph {
    graph: LabeledDigraph,
    top: String,
    bottom: String,
}

impl BipointedGraph {
    pub fn new(
        graph: LabeledDigraph,
        top: impl Into<String>,
        bottom: impl Into<String>,
    ) -> Result<Self, GraphError> {
        let (top, bottom) = (top.into(), bottom.into());
        let bad = |why: String| Err(GraphError::MalformedBipointing(why));
        if graph.vertex_count() < 2 {
            return Err(GraphError::TooSmall(graph.vertex_count()));
        }
        for corner in [&top, &bottom] {
            if !graph.contains_vertex(corner) {
                return bad(format!("`{corner}` is not a vertex"));
            }
        }
        if top == bottom {
            return bad(format!("top and bottom are both `{top}`"));
        }
        let reach = graph.reachability();
        if let Some(v) = graph.vertices().find(|v| !reach.reaches(v, &top)) {
            return bad(format!("`{v}` does not reach the top `{top}`"));
        }
        if let Some(v) = graph.vertices().find(|v| !reach.reaches(&bottom, v)) {
            return bad(format!("the bottom `{bottom}` does not reach `{v}`"));
        }
        Ok(Self { graph, top, bottom })
    }

    pub fn graph(&self) -> &LabeledDigraph {
        &self.graph
    }

    pub fn into_graph(self) -> LabeledDigraph {
        self.graph
    }

    pub fn top(&self) -> &str {
        &self.top
    }

    pub fn bottom(&self) -> &str {
        &self.bottom
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Label of `? <: t` after corner coalescing.
    pub fn covariant_arg(&self, t: &str) -> String {
        if t == self.top {
            WILDCARD.to_owned()
        } else if t == self.bottom {
            self.bottom.clone()
        } else {
            covariant_label(t)
        }
    }

    /// Label of `? :> t` after corner coalescing.
    pub fn contravariant_arg(&self, t: &str) -> String {
        if t == self.bottom {
            WILDCARD.to_owned()
        } else if t == self.top {
            self.top.clone()
        } else {
            contravariant_label(t)
        }
    }
}

/// `3 * (n - 1)`: the number of distinct arguments over `n` types.
pub fn triangle_size(n: usize) -> Result<usize, GraphError> {
    if n < 2 {
        return Err(GraphError::TooSmall(n));
    }
    Ok(3 * (n - 1))
}

/// Containment graph of all wildcard arguments over `g`, in reduced form.
/// `u -> v` means argument `u` is contained in argument `v`.
pub fn triangle(g: &BipointedGraph) -> Result<LabeledDigraph, GraphError> {
    let mut out = LabeledDigraph::new();
    for t in g.graph.vertices() {
        for label in [t.to_owned(), g.covariant_arg(t), g.contravariant_arg(t)] {
            out.add_vertex(label);
        }
    }
    let expected = triangle_size(g.vertex_count())?;
    if out.vertex_count() != expected {
        // an input label already spells a wildcard argument
        let clash = g
            .graph
            .vertices()
            .find(|v| *v == WILDCARD || v.starts_with("? "))
            .unwrap_or(WILDCARD);
        return Err(GraphError::LabelCollision(clash.to_owned()));
    }

    for (t1, t2, _) in g.graph.edges() {
        out.add_edge(g.covariant_arg(t1), g.covariant_arg(t2), EdgeTag::Covariant)?;
        out.add_edge(
            g.contravariant_arg(t2),
            g.contravariant_arg(t1),
            EdgeTag::Contravariant,
        )?;
    }
    for t in g.graph.vertices() {
        if t == g.top || t == g.bottom {
            continue;
        }
        out.add_edge(t.to_owned(), covariant_label(t), EdgeTag::InvLink)?;
        out.add_edge(t.to_owned(), contravariant_label(t), EdgeTag::InvLink)?;
    }
    Ok(out.checked()?.transitive_reduction())
}
