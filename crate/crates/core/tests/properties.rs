use std::f64::consts::SQRT_2;

use proptest::prelude::*;
use sombor_core::audit::{join_coindex_decomposition, union_coindex_decomposition};
use sombor_core::closed_forms::FENCE_ERRATUM;
use sombor_core::graph::pair_count;
use sombor_core::invariants::integer_indices;
use sombor_core::*;

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

fn small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_labeled_graphs(n).unwrap())
        .collect()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap()).unwrap()
        })
    })
}

#[test]
fn complement_is_an_involution_with_dual_degrees() {
    for g in small_graphs(5) {
        let c = g.complement();
        assert_eq!(c.complement(), g);
        for u in 0..g.n() {
            assert_eq!(c.degree(u), g.n() - 1 - g.degree(u));
        }
    }
}

#[test]
fn edges_and_non_edges_partition_the_pairs() {
    for g in small_graphs(5) {
        let mut all = g.edges();
        all.extend(g.non_edges());
        all.sort();
        let expected: Vec<_> = g.pairs().collect();
        assert_eq!(all, expected);
        assert_eq!(g.non_edges().len(), g.coedge_count());
        assert_eq!(g.edge_count() + g.coedge_count(), pair_count(g.n()));
    }
}

#[test]
fn operation_edge_counts_and_degrees() {
    let graphs = small_graphs(4);
    for g1 in &graphs {
        for g2 in &graphs {
            let (n1, n2) = (g1.n(), g2.n());
            let (m1, m2) = (g1.edge_count(), g2.edge_count());

            let j = graph_join(g1, g2);
            assert_eq!(j.edge_count(), m1 + m2 + n1 * n2);

            let u = graph_union(g1, g2);
            assert_eq!(u.edge_count(), m1 + m2);

            let cp = cartesian_product(g1, g2);
            assert_eq!(cp.edge_count(), n1 * m2 + m1 * n2);
            let co = composition(g1, g2);
            assert_eq!(co.edge_count(), n1 * m2 + m1 * n2 * n2);
            for a in 0..n1 {
                for b in 0..n2 {
                    let v = a * n2 + b;
                    assert_eq!(cp.degree(v), g1.degree(a) + g2.degree(b));
                    assert_eq!(co.degree(v), n2 * g1.degree(a) + g2.degree(b));
                }
            }
            for a in 0..n1 {
                assert_eq!(j.degree(a), g1.degree(a) + n2);
            }
            for b in 0..n2 {
                assert_eq!(j.degree(n1 + b), g2.degree(b) + n1);
            }
        }
    }
}

#[test]
fn closed_forms_match_brute_force() {
    let mut specs = Vec::new();
    for n in 3..=12 {
        specs.extend([
            FamilySpec::Path { n },
            FamilySpec::Cycle { n },
            FamilySpec::Complete { n },
            FamilySpec::Empty { n },
            FamilySpec::Star { n },
        ]);
    }
    for p in 1..=8 {
        for q in 1..=8 {
            specs.push(FamilySpec::CompleteBipartite { p, q });
        }
    }
    for p in 3..=6 {
        for q in 3..=6 {
            specs.push(FamilySpec::Nanotorus { p, q });
        }
    }
    for n in 3..=8 {
        specs.push(FamilySpec::ClosedFence { n });
    }
    for spec in specs {
        let g = generate_family(&spec).unwrap();
        let closed = closed_sombor_coindex(&spec, Variant::Corrected).unwrap();
        assert!(rel_close(closed.value, sombor_coindex(&g)), "{spec}");
        if let Ok(so) = closed_sombor_index(&spec) {
            assert!(rel_close(so, sombor_index(&g)), "{spec}");
        }
    }
}

#[test]
fn fence_erratum_is_constant() {
    for n in 3..=8 {
        let spec = FamilySpec::ClosedFence { n };
        let a = closed_sombor_coindex(&spec, Variant::AsPublished)
            .unwrap()
            .value;
        let b = closed_sombor_coindex(&spec, Variant::Corrected)
            .unwrap()
            .value;
        assert!((a - b - 20.0 * SQRT_2).abs() <= 1e-9);
        assert!((a - b - FENCE_ERRATUM).abs() <= 1e-9);
    }
}

#[test]
fn regular_formula_matches_every_small_regular_graph() {
    let mut seen = 0;
    for g in small_graphs(6) {
        let s = g.degree_stats();
        if s.is_regular {
            let closed = regular_coindex(g.n(), s.max_degree).unwrap();
            assert!(rel_close(closed, sombor_coindex(&g)), "{g:?}");
            seen += 1;
        }
    }
    assert!(seen > 100);
}

#[test]
fn general_first_zagreb_reproduces_m1_and_f() {
    for g in small_graphs(5) {
        assert!(rel_close(
            general_first_zagreb(&g, 2.0).unwrap(),
            first_zagreb(&g)
        ));
        assert!(rel_close(
            general_first_zagreb(&g, 3.0).unwrap(),
            forgotten_index(&g)
        ));
    }
}

#[test]
fn graph6_rejects_out_of_range_bytes_and_length_changes() {
    for g in small_graphs(5) {
        let s = encode_graph6(&g).unwrap();
        for pos in 0..s.len() {
            for bad in *b" \x7f0>" {
                let mut bytes = s.clone().into_bytes();
                bytes[pos] = bad;
                let corrupted = String::from_utf8(bytes).unwrap();
                assert!(parse_graph6(&corrupted).is_err(), "{corrupted:?}");
            }
        }
        if g.n() > 1 {
            assert!(parse_graph6(&s[..s.len() - 1]).is_err());
        }
        assert!(parse_graph6(&format!("{s}?")).is_err());
    }
}

proptest! {
    #[test]
    fn indices_satisfy_their_identities(g in arb_graph(12)) {
        let v = compute_all(&g);
        let n = g.n() as f64;
        let m = g.edge_count() as f64;
        let ints = integer_indices(&g);

        prop_assert_eq!(v.m1_coindex, 2.0 * m * (n - 1.0) - v.m1);
        prop_assert_eq!(v.m1_coindex, first_zagreb_coindex(&g.complement()));
        // vertex and edge forms
        prop_assert_eq!(ints.m1 as f64, first_zagreb(&g));
        prop_assert_eq!(ints.f as f64, forgotten_index(&g));
        prop_assert_eq!(v.m2, second_zagreb(&g));
        prop_assert_eq!(v.m2_coindex, second_zagreb_coindex(&g));
        prop_assert_eq!(v.f_coindex, forgotten_coindex(&g));
        prop_assert!(rel_close(v.so, sombor_index(&g)));
        prop_assert!(rel_close(v.so_coindex, sombor_coindex(&g)));
        for x in [v.so, v.so_coindex, v.m1, v.m1_coindex, v.m2, v.m2_coindex, v.f, v.f_coindex] {
            prop_assert!(x >= 0.0);
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let s = encode_graph6(&g).unwrap();
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(encode_graph6(&back).unwrap(), s);
    }

    #[test]
    fn operation_decompositions_on_larger_pairs(g1 in arb_graph(7), g2 in arb_graph(7)) {
        let u = sombor_coindex(&graph_union(&g1, &g2));
        prop_assert!(rel_close(u, union_coindex_decomposition(&g1, &g2)));
        let j = sombor_coindex(&graph_join(&g1, &g2));
        prop_assert!(rel_close(j, join_coindex_decomposition(&g1, &g2)));
        for op in GraphOperation::ALL {
            let r = op.eval_bounds(&g1, &g2);
            prop_assert_eq!(r.holds, Some(true), "{:?}", r);
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(15)) {
        let mut text = format!("n {}\n", g.n());
        for (u, v) in g.edges() {
            text.push_str(&format!("{u} {v}\n"));
        }
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
