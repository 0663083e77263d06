//! Finite labeled DAGs and the order-theoretic algorithms the rest of the
//! crate composes.
//!
//! A vertex *is* its label: two graphs that both contain `C<?>` talk about
//! the same vertex. Edges point from the smaller element to the larger one
//! (`u -> v` reads "u is a subtype of v", or "u is contained in v" for type
//! arguments). Every graph is acyclic, has no self-loops and at most one
//! edge per ordered pair. Iteration is always lexicographic by label, so
//! every construction and export is reproducible.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Provenance of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeTag {
    /// Ordering due to the covariant (`? <: T`) rule.
    Covariant,
    /// Ordering due to the contravariant (`? :> T`) rule.
    Contravariant,
    /// `T` contained in `? <: T` or `? :> T`.
    InvLink,
    /// Declared inheritance, or a boundary edge derived from it.
    Inherit,
    /// No single generating edge: implied by transitivity, or supplied by a caller.
    Product,
}

impl EdgeTag {
    pub const ALL: [EdgeTag; 5] = [
        EdgeTag::Covariant,
        EdgeTag::Contravariant,
        EdgeTag::InvLink,
        EdgeTag::Inherit,
        EdgeTag::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EdgeTag::Covariant => "covariant",
            EdgeTag::Contravariant => "contravariant",
            EdgeTag::InvLink => "inv_link",
            EdgeTag::Inherit => "inherit",
            EdgeTag::Product => "product",
        }
    }
}

impl fmt::Display for EdgeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite directed acyclic graph over label strings with tagged edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabeledDigraph {
    vertices: BTreeSet<String>,
    edges: BTreeMap<(String, String), EdgeTag>,
}

impl LabeledDigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: impl Into<String>) -> Self {
        let mut g = Self::new();
        g.vertices.insert(label.into());
        g
    }

    /// Builds a graph, checking every structural invariant.
    ///
    /// Repeated edges are coalesced; the first occurrence fixes the tag.
    pub fn from_parts<V, E, S>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (S, S, EdgeTag)>,
        S: Into<String>,
    {
        let mut g = Self::new();
        for v in vertices {
            g.vertices.insert(v.into());
        }
        for (from, to, tag) in edges {
            g.add_edge(from.into(), to.into(), tag)?;
        }
        g.checked()
    }

    /// Shorthand for tests and callers that do not care about provenance.
    pub fn from_pairs<V, E, S>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        Self::from_parts(
            vertices,
            edges.into_iter().map(|(a, b)| (a, b, EdgeTag::Product)),
        )
    }

    pub(crate) fn add_vertex(&mut self, label: String) -> bool {
        self.vertices.insert(label)
    }

    /// Adds an edge between existing vertices. Does not check acyclicity;
    /// callers finish with [`LabeledDigraph::checked`].
    pub(crate) fn add_edge(
        &mut self,
        from: String,
        to: String,
        tag: EdgeTag,
    ) -> Result<(), GraphError> {
        if !self.vertices.contains(&from) {
            return Err(GraphError::UnknownVertex(from));
        }
        if !self.vertices.contains(&to) {
            return Err(GraphError::UnknownVertex(to));
        }
        if from == to {
            return Err(GraphError::SelfLoop(from));
        }
        self.edges.entry((from, to)).or_insert(tag);
        Ok(())
    }

    pub(crate) fn checked(self) -> Result<Self, GraphError> {
        self.topological_order()?;
        Ok(self)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, label: &str) -> bool {
        self.vertices.contains(label)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn vertex_set(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    /// Edges in lexicographic `(from, to)` order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, EdgeTag)> + '_ {
        self.edges
            .iter()
            .map(|((a, b), t)| (a.as_str(), b.as_str(), *t))
    }

    pub fn edge_tag(&self, from: &str, to: &str) -> Option<EdgeTag> {
        self.edges
            .get(&(from.to_owned(), to.to_owned()))
            .copied()
    }

    pub fn has_edge(&self, from: &str, to: &str) -> bool {
        self.edge_tag(from, to).is_some()
    }

    pub fn successors<'a>(&'a self, label: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.edges
            .range((label.to_owned(), String::new())..)
            .take_while(move |((a, _), _)| a == label)
            .map(|((_, b), _)| b.as_str())
    }

    pub fn out_degree(&self, label: &str) -> usize {
        self.successors(label).count()
    }

    pub fn in_degree(&self, label: &str) -> usize {
        self.edges.keys().filter(|(_, b)| b == label).count()
    }

    /// Vertex and edge sets agree; tags are not compared.
    pub fn same_shape(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges.keys().eq(other.edges.keys())
    }

    /// Kahn's algorithm with lexicographic tie-breaking.
    pub fn topological_order(&self) -> Result<Vec<&str>, GraphError> {
        let mut indegree: BTreeMap<&str, usize> =
            self.vertices.iter().map(|v| (v.as_str(), 0)).collect();
        for (_, b) in self.edges.keys() {
            *indegree.get_mut(b.as_str()).expect("edge endpoint is a vertex") += 1;
        }
        let mut ready: BTreeSet<&str> = indegree
            .iter()
            .filter(|(_, d)| **d == 0)
            .map(|(v, _)| *v)
            .collect();
        let mut order = Vec::with_capacity(self.vertices.len());
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for w in self.successors(v) {
                let d = indegree.get_mut(w).expect("edge endpoint is a vertex");
                *d -= 1;
                if *d == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() != self.vertices.len() {
            let stuck = indegree
                .iter()
                .find(|(_, d)| **d > 0)
                .map(|(v, _)| v.to_string())
                .unwrap_or_default();
            return Err(GraphError::Cycle(stuck));
        }
        Ok(order)
    }

    pub fn reachability(&self) -> Reachability {
        Reachability::new(self)
    }

    /// True iff `from == to` or a directed path leads from `from` to `to`.
    pub fn reachable(&self, from: &str, to: &str) -> Result<bool, GraphError> {
        for l in [from, to] {
            if !self.contains_vertex(l) {
                return Err(GraphError::UnknownVertex(l.to_owned()));
            }
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                return Ok(true);
            }
            if seen.insert(v) {
                stack.extend(self.successors(v));
            }
        }
        Ok(false)
    }

    /// The closure stores every pair `u -> v` with a path from `u` to `v`,
    /// `u != v`. Reflexive pairs are implicit. Surviving edges keep their
    /// tag; implied edges are tagged [`EdgeTag::Product`].
    pub fn transitive_closure(&self) -> LabeledDigraph {
        let reach = self.reachability();
        let mut out = LabeledDigraph {
            vertices: self.vertices.clone(),
            edges: BTreeMap::new(),
        };
        for u in &self.vertices {
            for v in reach.above(u) {
                if v == u {
                    continue;
                }
                let tag = self.edge_tag(u, v).unwrap_or(EdgeTag::Product);
                out.edges.insert((u.clone(), v.to_owned()), tag);
            }
        }
        out
    }

    /// The unique minimal edge subset with the same reachability.
    pub fn transitive_reduction(&self) -> LabeledDigraph {
        let reach = self.reachability();
        let mut out = LabeledDigraph {
            vertices: self.vertices.clone(),
            edges: BTreeMap::new(),
        };
        for ((u, v), tag) in &self.edges {
            let redundant = self
                .successors(u)
                .any(|w| w != v && reach.reaches(w, v));
            if !redundant {
                out.edges.insert((u.clone(), v.clone()), *tag);
            }
        }
        out
    }

    /// Same vertices, every edge flipped.
    pub fn reversed(&self) -> LabeledDigraph {
        LabeledDigraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|((a, b), t)| ((b.clone(), a.clone()), *t))
                .collect(),
        }
    }

    /// Applies `rename` to every label; it must be injective on this graph.
    pub fn relabel<F>(&self, rename: F) -> Result<LabeledDigraph, GraphError>
    where
        F: Fn(&str) -> String,
    {
        let mapping: HashMap<&str, String> =
            self.vertices.iter().map(|v| (v.as_str(), rename(v))).collect();
        let mut out = LabeledDigraph::new();
        for v in &self.vertices {
            if !out.add_vertex(mapping[v.as_str()].clone()) {
                return Err(GraphError::LabelCollision(mapping[v.as_str()].clone()));
            }
        }
        for ((a, b), tag) in &self.edges {
            out.edges
                .insert((mapping[a.as_str()].clone(), mapping[b.as_str()].clone()), *tag);
        }
        Ok(out)
    }

    /// Collapses `cluster` into the single vertex `kept`.
    ///
    /// Incident edges are redirected, self-loops are dropped, and parallel
    /// edges coalesce with the first tag in lexicographic edge order winning.
    /// Fails if the merge closes a cycle.
    pub fn merge_vertices<I, S>(&self, cluster: I, kept: &str) -> Result<LabeledDigraph, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut members = BTreeSet::new();
        for c in cluster {
            let c = c.as_ref();
            if !self.contains_vertex(c) {
                return Err(GraphError::UnknownVertex(c.to_owned()));
            }
            members.insert(c.to_owned());
        }
        if !members.contains(kept) {
            return Err(GraphError::KeptNotInCluster(kept.to_owned()));
        }
        let project = |v: &String| -> String {
            if members.contains(v) {
                kept.to_owned()
            } else {
                v.clone()
            }
        };
        let mut out = LabeledDigraph::new();
        for v in &self.vertices {
            out.add_vertex(project(v));
        }
        for ((a, b), tag) in &self.edges {
            let (a, b) = (project(a), project(b));
            if a != b {
                out.edges.entry((a, b)).or_insert(*tag);
            }
        }
        out.checked()
    }

    /// The subgraph induced by `keep`. Labels not in the graph are ignored.
    pub fn induced_subgraph<I, S>(&self, keep: I) -> LabeledDigraph
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let vertices: BTreeSet<String> = keep
            .into_iter()
            .map(|s| s.as_ref().to_owned())
            .filter(|s| self.vertices.contains(s))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|((a, b), _)| vertices.contains(a) && vertices.contains(b))
            .map(|(k, t)| (k.clone(), *t))
            .collect();
        LabeledDigraph { vertices, edges }
    }

    /// True iff `map` is a bijection from this graph's vertices onto
    /// `other`'s that preserves and reflects reachability.
    pub fn order_isomorphic<F>(&self, other: &LabeledDigraph, map: F) -> bool
    where
        F: Fn(&str) -> String,
    {
        if self.vertex_count() != other.vertex_count() {
            return false;
        }
        let image: Vec<(&str, String)> = self.vertices().map(|v| (v, map(v))).collect();
        let distinct: BTreeSet<&str> = image.iter().map(|(_, w)| w.as_str()).collect();
        if distinct.len() != image.len() || !distinct.iter().all(|w| other.contains_vertex(w)) {
            return false;
        }
        let here = self.reachability();
        let there = other.reachability();
        image.iter().all(|(a, fa)| {
            image
                .iter()
                .all(|(b, fb)| here.reaches(a, b) == there.reaches(fa, fb))
        })
    }
}

/// The standard Cartesian graph product.
///
/// `(u1, v1) -> (u2, v2)` iff `u1 -> u2` and `v1 == v2`, or `u1 == u2` and
/// `v1 -> v2`. Each edge keeps the tag of the factor edge that generated it.
pub fn cartesian_product<F>(
    left: &LabeledDigraph,
    right: &LabeledDigraph,
    combine: F,
) -> Result<LabeledDigraph, GraphError>
where
    F: Fn(&str, &str) -> String,
{
    let mut out = LabeledDigraph::new();
    for u in left.vertices() {
        for v in right.vertices() {
            let label = combine(u, v);
            if !out.add_vertex(label.clone()) {
                return Err(GraphError::LabelCollision(label));
            }
        }
    }
    for (u1, u2, tag) in left.edges() {
        for v in right.vertices() {
            out.add_edge(combine(u1, v), combine(u2, v), tag)?;
        }
    }
    for u in left.vertices() {
        for (v1, v2, tag) in right.edges() {
            out.add_edge(combine(u, v1), combine(u, v2), tag)?;
        }
    }
    Ok(out)
}

/// Union of two graphs with disjoint vertex sets.
pub fn disjoint_union(
    left: &LabeledDigraph,
    right: &LabeledDigraph,
) -> Result<LabeledDigraph, GraphError> {
    if let Some(shared) = left.vertices.intersection(&right.vertices).next() {
        return Err(GraphError::OverlappingLabels(shared.clone()));
    }
    let mut out = left.clone();
    out.vertices.extend(right.vertices.iter().cloned());
    out.edges
        .extend(right.edges.iter().map(|(k, t)| (k.clone(), *t)));
    Ok(out)
}

/// Reachability matrix of a DAG, reflexive.
#[derive(Clone, Debug)]
pub struct Reachability {
    index: HashMap<String, usize>,
    labels: Vec<String>,
    rows: Vec<Vec<u64>>,
}

impl Reachability {
    fn new(g: &LabeledDigraph) -> Self {
        let labels: Vec<String> = g.vertices.iter().cloned().collect();
        let index: HashMap<String, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let words = labels.len().div_ceil(64);
        let mut rows = vec![vec![0u64; words]; labels.len()];
        let order = g
            .topological_order()
            .expect("LabeledDigraph values are acyclic");
        for v in order.into_iter().rev() {
            let i = index[v];
            let mut row = vec![0u64; words];
            row[i / 64] |= 1 << (i % 64);
            for w in g.successors(v) {
                for (dst, src) in row.iter_mut().zip(&rows[index[w]]) {
                    *dst |= *src;
                }
            }
            rows[i] = row;
        }
        Self {
            index,
            labels,
            rows,
        }
    }

    /// `false` if either label is unknown.
    pub fn reaches(&self, from: &str, to: &str) -> bool {
        match (self.index.get(from), self.index.get(to)) {
            (Some(&i), Some(&j)) => self.rows[i][j / 64] & (1 << (j % 64)) != 0,
            _ => false,
        }
    }

    /// Every vertex reachable from `from`, including itself.
    pub fn above<'a>(&'a self, from: &str) -> impl Iterator<Item = &'a str> + 'a {
        let row = self.index.get(from).map(|&i| &self.rows[i]);
        self.labels
            .iter()
            .enumerate()
            .filter(move |(j, _)| row.is_some_and(|r| r[j / 64] & (1 << (j % 64)) != 0))
            .map(|(_, l)| l.as_str())
    }
}
