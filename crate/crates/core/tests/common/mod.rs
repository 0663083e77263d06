#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use jsubgraph::{ClassTable, EdgeTag, LabeledDigraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn program_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/programs")
        .join(format!("{name}.decls"))
}

pub fn program(name: &str) -> ClassTable {
    let src = std::fs::read_to_string(program_path(name)).unwrap();
    ClassTable::parse(&src).unwrap()
}

/// The five worked example programs, in order.
pub fn examples() -> Vec<(&'static str, ClassTable)> {
    ["ex1", "ex2", "ex3", "ex4", "ex5"]
        .into_iter()
        .map(|n| (n, program(n)))
        .collect()
}

pub fn pair(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// A random DAG on up to `max_n` vertices with shuffled labels, so label
/// order and topological order are unrelated.
pub fn random_dag(rng: &mut ChaCha8Rng, prefix: &str, max_n: usize) -> LabeledDigraph {
    let n = rng.gen_range(1..=max_n);
    let mut names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    names.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.35) {
                let tag = *EdgeTag::ALL.choose(rng).unwrap();
                edges.push((names[i].clone(), names[j].clone(), tag));
            }
        }
    }
    LabeledDigraph::from_parts(names.clone(), edges).unwrap()
}

/// Reflexive reachability by Floyd-Warshall over the raw edge list.
pub struct BruteReach {
    names: Vec<String>,
    m: Vec<Vec<bool>>,
}

impl BruteReach {
    pub fn new(g: &LabeledDigraph) -> Self {
        let names: Vec<String> = g.vertices().map(str::to_owned).collect();
        let idx = |s: &str| names.iter().position(|n| n == s).unwrap();
        let n = names.len();
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b, _) in g.edges() {
            m[idx(a)][idx(b)] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if m[i][k] && m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
        Self { names, m }
    }

    pub fn reaches(&self, a: &str, b: &str) -> bool {
        let i = self.names.iter().position(|n| n == a).unwrap();
        let j = self.names.iter().position(|n| n == b).unwrap();
        self.m[i][j]
    }

    /// Pairs `(u, v)`, `u != v`, with `u` reaching `v`.
    pub fn strict_pairs(&self) -> BTreeSet<(String, String)> {
        let mut out = BTreeSet::new();
        for (i, a) in self.names.iter().enumerate() {
            for (j, b) in self.names.iter().enumerate() {
                if i != j && self.m[i][j] {
                    out.insert((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    /// Cover pairs: `u < v` with nothing strictly between.
    pub fn covers(&self) -> BTreeSet<(String, String)> {
        let n = self.names.len();
        let mut out = BTreeSet::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.m[i][j] {
                    continue;
                }
                let between = (0..n).any(|k| k != i && k != j && self.m[i][k] && self.m[k][j]);
                if !between {
                    out.insert((self.names[i].clone(), self.names[j].clone()));
                }
            }
        }
        out
    }
}

pub fn edge_pairs(g: &LabeledDigraph) -> BTreeSet<(String, String)> {
    g.edges().map(|(a, b, _)| (a.to_owned(), b.to_owned())).collect()
}
