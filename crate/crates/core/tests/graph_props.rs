mod common;

use std::collections::BTreeSet;

use common::{edge_pairs, pair, BruteReach};
use jsubgraph::graph::cartesian_product;
use jsubgraph::oracle::differential_check;
use jsubgraph::pcgp::{partial_product, partial_product_via_merge, PartitionedGraph};
use jsubgraph::wildcards::{contravariant_label, covariant_label, triangle, triangle_size, WILDCARD};
use jsubgraph::{BipointedGraph, ClassTable, EdgeTag, LabeledDigraph};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn dag(prefix: &'static str, max_n: usize) -> impl Strategy<Value = LabeledDigraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let names = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
            let bits = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            let tags = proptest::collection::vec(0..EdgeTag::ALL.len(), n * (n - 1) / 2);
            (Just(n), names, bits, tags)
        })
        .prop_map(move |(n, names, bits, tags)| {
            let label = |i: usize| format!("{prefix}{}", names[i]);
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((label(i), label(j), EdgeTag::ALL[tags[k]]));
                    }
                    k += 1;
                }
            }
            LabeledDigraph::from_parts((0..n).map(label), edges).unwrap()
        })
}

/// A random DAG squeezed between a fresh bottom `N` and top `O`.
fn bipointed(max_n: usize) -> impl Strategy<Value = BipointedGraph> {
    (dag("t", max_n), any::<bool>()).prop_map(|(inner, empty)| {
        let inner = if empty { LabeledDigraph::new() } else { inner };
        let mut edges: Vec<(String, String)> = edge_pairs(&inner).into_iter().collect();
        edges.push(("N".into(), "O".into()));
        for v in inner.vertices() {
            edges.push(("N".into(), v.to_owned()));
            edges.push((v.to_owned(), "O".into()));
        }
        let vertices = inner.vertices().map(str::to_owned).chain(["N".into(), "O".into()]);
        let g = LabeledDigraph::from_pairs(vertices, edges).unwrap().transitive_reduction();
        BipointedGraph::new(g, "O", "N").unwrap()
    })
}

/// Pre-reduction edge set of the partial product, straight from the four cases.
fn partial_product_by_definition(
    g1: &LabeledDigraph,
    vp: &BTreeSet<String>,
    g2: &LabeledDigraph,
) -> LabeledDigraph {
    let mut vertices = Vec::new();
    for u in g1.vertices() {
        if vp.contains(u) {
            vertices.extend(g2.vertices().map(|v| pair(u, v)));
        } else {
            vertices.push(u.to_owned());
        }
    }
    let mut edges = Vec::new();
    for (a, b, _) in g1.edges() {
        for v in g2.vertices() {
            match (vp.contains(a), vp.contains(b)) {
                (true, true) => edges.push((pair(a, v), pair(b, v))),
                (true, false) => edges.push((pair(a, v), b.to_owned())),
                (false, true) => edges.push((a.to_owned(), pair(b, v))),
                (false, false) => edges.push((a.to_owned(), b.to_owned())),
            }
        }
    }
    for p in vp {
        for (v1, v2, _) in g2.edges() {
            edges.push((pair(p, v1), pair(p, v2)));
        }
    }
    LabeledDigraph::from_pairs(vertices, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reduction_and_closure_laws(g in dag("v", 8)) {
        let tr = g.transitive_reduction();
        let rtc = g.transitive_closure();
        prop_assert_eq!(rtc.transitive_reduction(), tr.clone());
        prop_assert!(tr.transitive_closure().same_shape(&rtc));
        prop_assert_eq!(tr.transitive_reduction(), tr.clone());

        let brute = BruteReach::new(&g);
        prop_assert_eq!(edge_pairs(&tr), brute.covers());
        prop_assert_eq!(edge_pairs(&rtc), brute.strict_pairs());
        for (a, b, tag) in tr.edges() {
            prop_assert_eq!(g.edge_tag(a, b), Some(tag));
        }
        for a in g.vertices() {
            for b in g.vertices() {
                let r = g.reachable(a, b).unwrap();
                prop_assert_eq!(r, brute.reaches(a, b));
                if a != b {
                    prop_assert_eq!(r, rtc.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn cartesian_product_counts(g1 in dag("a", 6), g2 in dag("b", 6)) {
        let p = cartesian_product(&g1, &g2, pair).unwrap();
        prop_assert_eq!(p.vertex_count(), g1.vertex_count() * g2.vertex_count());
        prop_assert_eq!(
            p.edge_count(),
            g1.edge_count() * g2.vertex_count() + g1.vertex_count() * g2.edge_count()
        );
    }

    #[test]
    fn partial_product_matches_definition_and_merge_route(
        (g1, vp) in dag("a", 7).prop_flat_map(|g| {
            let vs: Vec<String> = g.vertices().map(str::to_owned).collect();
            let n = vs.len();
            (Just(g), subsequence(vs, 0..=n))
        }),
        g2 in dag("b", 5),
    ) {
        let vp: BTreeSet<String> = vp.into_iter().collect();
        let pg = PartitionedGraph::new(g1.clone(), vp.iter().cloned()).unwrap();
        let direct = partial_product(&pg, &g2, pair).unwrap();
        let merged = partial_product_via_merge(&pg, &g2, pair).unwrap();
        prop_assert!(direct.same_shape(&merged));

        let by_def = partial_product_by_definition(&g1, &vp, &g2);
        prop_assert_eq!(edge_pairs(&direct), BruteReach::new(&by_def).covers());
        prop_assert_eq!(
            direct.vertex_count(),
            vp.len() * g2.vertex_count() + g1.vertex_count() - vp.len()
        );
        prop_assert!(direct.topological_order().is_ok());

        let classes = pg.classify_edges();
        prop_assert_eq!(classes.len(), g1.edge_count());
        for (a, b, _) in classes.pp.iter() {
            prop_assert!(vp.contains(a) && vp.contains(b));
        }
        for (a, b, _) in classes.nn.iter() {
            prop_assert!(!vp.contains(a) && !vp.contains(b));
        }
    }

    #[test]
    fn triangle_laws(g in bipointed(6)) {
        let t = triangle(&g).unwrap();
        let n = g.vertex_count();
        prop_assert_eq!(t.vertex_count(), triangle_size(n).unwrap());

        // covariant side is an order-isomorphic copy
        let cov_map = |v: &str| g.covariant_arg(v);
        let cov_side: Vec<String> = g.graph().vertices().map(cov_map).collect();
        let cov = t.transitive_closure().induced_subgraph(&cov_side);
        prop_assert!(g.graph().order_isomorphic(&cov, cov_map));

        // contravariant side is an anti-isomorphic copy
        let con_map = |v: &str| g.contravariant_arg(v);
        let con_side: Vec<String> = g.graph().vertices().map(con_map).collect();
        let con = t.transitive_closure().induced_subgraph(&con_side).reversed();
        prop_assert!(g.graph().order_isomorphic(&con, con_map));

        // invariant copies are pairwise unrelated
        let reach = t.reachability();
        let inner: Vec<&str> = g.graph().vertices().filter(|v| *v != "O" && *v != "N").collect();
        for a in &inner {
            prop_assert!(t.has_edge(a, &covariant_label(a)));
            prop_assert!(t.has_edge(a, &contravariant_label(a)));
            for b in &inner {
                if a != b {
                    prop_assert!(!reach.reaches(a, b));
                }
            }
        }

        // `?` is the unique sink
        for v in t.vertices() {
            prop_assert!(reach.reaches(v, WILDCARD));
            prop_assert_eq!(t.out_degree(v) == 0, v == WILDCARD);
        }
    }
}

/// Random class tables honoring the pass-through restriction.
fn class_table(max_classes: usize) -> impl Strategy<Value = ClassTable> {
    proptest::collection::vec((any::<bool>(), any::<prop::sample::Index>(), any::<bool>()), 1..=max_classes)
        .prop_map(|spec| {
            let mut generic = Vec::new();
            let mut src = String::new();
            for (i, (gen, parent, has_parent)) in spec.into_iter().enumerate() {
                let parent = (has_parent && i > 0).then(|| parent.index(i));
                let gen = gen || parent.is_some_and(|p| generic[p]);
                generic.push(gen);
                src.push_str(&format!("class K{i}"));
                if gen {
                    src.push_str("<T>");
                }
                if let Some(p) = parent {
                    src.push_str(&format!(" extends K{p}"));
                    if generic[p] {
                        src.push_str("<T>");
                    }
                }
                src.push_str(" {}\n");
            }
            ClassTable::parse(&src).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graph_and_rules_agree_on_random_programs(table in class_table(4)) {
        let report = differential_check(&table, 2).unwrap();
        prop_assert!(report.is_clean(), "{:?}", report.mismatches);
    }
}
