//! Partial Cartesian graph product.
//!
//! Given a graph `G1` whose vertices are split into product vertices `V_p`
//! and the rest `V_n`, and a second graph `G2`, the partial product takes the
//! Cartesian product of `G1[V_p]` with `G2` and keeps `V_n` as single
//! vertices. Edges between the two halves of `G1` fan out over every vertex
//! of `G2`:
//!
//! * `u1 -> u2` inside `V_p` gives `(u1, v) -> (u2, v)`,
//! * `u1 -> u2` from `V_p` to `V_n` gives `(u1, v) -> u2`,
//! * `u1 -> u2` from `V_n` to `V_p` gives `u1 -> (u2, v)`,
//! * `u1 -> u2` inside `V_n` is copied,
//!
//! for every `v` in `G2`, plus the edges of `G2` inside each product copy.
//!
//! [`partial_product`] builds this directly. [`partial_product_via_merge`]
//! takes the full Cartesian product and collapses the copies of each
//! non-product vertex; the two must agree after reduction.

use std::collections::BTreeSet;

use crate::error::GraphError;
use crate::graph::{cartesian_product, EdgeTag, LabeledDigraph};

/// A graph together with its product vertex subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    base: LabeledDigraph,
    product_vertices: BTreeSet<String>,
}

/// The four-way split of the base edges by endpoint membership.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeClasses {
    pub pp: Vec<(String, String, EdgeTag)>,
    pub pn: Vec<(String, String, EdgeTag)>,
    pub np: Vec<(String, String, EdgeTag)>,
    pub nn: Vec<(String, String, EdgeTag)>,
}

impl EdgeClasses {
    pub fn len(&self) -> usize {
        self.pp.len() + self.pn.len() + self.np.len() + self.nn.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl PartitionedGraph {
    pub fn new<I, S>(base: LabeledDigraph, product_vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let product_vertices: BTreeSet<String> =
            product_vertices.into_iter().map(Into::into).collect();
        if let Some(stray) = product_vertices.iter().find(|v| !base.contains_vertex(v)) {
            return Err(GraphError::UnknownVertex(stray.clone()));
        }
        Ok(Self {
            base,
            product_vertices,
        })
    }

    pub fn base(&self) -> &LabeledDigraph {
        &self.base
    }

    pub fn product_vertices(&self) -> &BTreeSet<String> {
        &self.product_vertices
    }

    pub fn is_product(&self, v: &str) -> bool {
        self.product_vertices.contains(v)
    }

    pub fn non_product_vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.base.vertices().filter(|v| !self.is_product(v))
    }

    pub fn classify_edges(&self) -> EdgeClasses {
        let mut classes = EdgeClasses::default();
        for (a, b, tag) in self.base.edges() {
            let bucket = match (self.is_product(a), self.is_product(b)) {
                (true, true) => &mut classes.pp,
                (true, false) => &mut classes.pn,
                (false, true) => &mut classes.np,
                (false, false) => &mut classes.nn,
            };
            bucket.push((a.to_owned(), b.to_owned(), tag));
        }
        classes
    }
}

/// Direct construction from the four edge cases, returned in reduced form.
///
/// Edges inside product copies keep their factor tag; boundary edges and
/// copied non-product edges are tagged [`EdgeTag::Inherit`].
pub fn partial_product<F>(
    pg: &PartitionedGraph,
    right: &LabeledDigraph,
    combine: F,
) -> Result<LabeledDigraph, GraphError>
where
    F: Fn(&str, &str) -> String,
{
    if right.is_empty() {
        return Err(GraphError::EmptyFactor);
    }
    let mut out = LabeledDigraph::new();
    for u in pg.base.vertices() {
        if pg.is_product(u) {
            for v in right.vertices() {
                let label = combine(u, v);
                if !out.add_vertex(label.clone()) {
                    return Err(GraphError::LabelCollision(label));
                }
            }
        } else if !out.add_vertex(u.to_owned()) {
            return Err(GraphError::LabelCollision(u.to_owned()));
        }
    }

    let classes = pg.classify_edges();
    for (u1, u2, tag) in &classes.pp {
        for v in right.vertices() {
            out.add_edge(combine(u1, v), combine(u2, v), *tag)?;
        }
    }
    for u in &pg.product_vertices {
        for (v1, v2, tag) in right.edges() {
            out.add_edge(combine(u, v1), combine(u, v2), tag)?;
        }
    }
    for (u1, u2, _) in &classes.pn {
        for v in right.vertices() {
            out.add_edge(combine(u1, v), u2.clone(), EdgeTag::Inherit)?;
        }
    }
    for (u1, u2, _) in &classes.np {
        for v in right.vertices() {
            out.add_edge(u1.clone(), combine(u2, v), EdgeTag::Inherit)?;
        }
    }
    for (u1, u2, _) in &classes.nn {
        out.add_edge(u1.clone(), u2.clone(), EdgeTag::Inherit)?;
    }
    Ok(out.checked()?.transitive_reduction())
}

/// Full Cartesian product, then merge every non-product vertex's copies
/// into one vertex carrying the original label, then reduce.
pub fn partial_product_via_merge<F>(
    pg: &PartitionedGraph,
    right: &LabeledDigraph,
    combine: F,
) -> Result<LabeledDigraph, GraphError>
where
    F: Fn(&str, &str) -> String,
{
    let Some(first) = right.vertices().next() else {
        return Err(GraphError::EmptyFactor);
    };
    let mut g = cartesian_product(&pg.base, right, &combine)?;
    let mut renames = std::collections::HashMap::new();
    for n in pg.non_product_vertices() {
        let kept = combine(n, first);
        let cluster: Vec<String> = right.vertices().map(|v| combine(n, v)).collect();
        g = g.merge_vertices(&cluster, &kept)?;
        renames.insert(kept, n.to_owned());
    }
    let g = g.relabel(|l| renames.get(l).cloned().unwrap_or_else(|| l.to_owned()))?;
    Ok(g.checked()?.transitive_reduction())
}
