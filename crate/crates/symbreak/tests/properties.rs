//! Randomized invariants over small graphs and formula parameters.

use proptest::prelude::*;
use symbreak::aut::{
    enumerate_automorphisms, is_vertex_distinguishing, preserves_edge_labeling,
    preserves_vertex_labeling,
};
use symbreak::formulas;
use symbreak::graph::{induced_edge_permutation, Graph};
use symbreak::search::{
    exact_distinguishing_index, exact_distinguishing_number, SearchOptions,
};

/// Random simple graph on up to `max_n` vertices.
fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::ANY, slots).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn small_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    small_graph(max_n).prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn corona_counts_match_closed_form(g in small_graph(5), h in small_graph(4)) {
        let c = Graph::corona(&g, &h).unwrap();
        let (ng, nh) = (g.vertex_count(), h.vertex_count());
        prop_assert_eq!(c.vertex_count(), ng * (1 + nh));
        prop_assert_eq!(c.edge_count(), g.edge_count() + ng * (h.edge_count() + nh));
    }

    #[test]
    fn cartesian_counts_match_closed_form(g in small_graph(5), h in small_graph(4)) {
        let c = Graph::cartesian_product(&g, &h).unwrap();
        let (ng, nh) = (g.vertex_count(), h.vertex_count());
        prop_assert_eq!(c.vertex_count(), ng * nh);
        prop_assert_eq!(c.edge_count(), ng * h.edge_count() + nh * g.edge_count());
    }

    #[test]
    fn automorphism_group_satisfies_axioms(g in small_graph(6)) {
        let group = enumerate_automorphisms(&g, None).unwrap();
        prop_assert!(group.verify_axioms(200));
        prop_assert_eq!(group.order() as usize, group.elements().len());
    }

    #[test]
    fn inverse_preserves_labeling_iff_element_does(
        g in small_graph(6),
        raw in proptest::collection::vec(1usize..=3, 6),
    ) {
        let group = enumerate_automorphisms(&g, None).unwrap();
        let vlabels: Vec<usize> = raw.iter().copied().take(g.vertex_count()).collect();
        let elabels: Vec<usize> = (0..g.edge_count()).map(|e| raw[e % raw.len()]).collect();
        for p in group.elements() {
            let inv = p.inverse();
            prop_assert_eq!(
                preserves_vertex_labeling(p, &vlabels).unwrap(),
                preserves_vertex_labeling(&inv, &vlabels).unwrap()
            );
            prop_assert_eq!(
                preserves_edge_labeling(&g, p, &elabels).unwrap(),
                preserves_edge_labeling(&g, &inv, &elabels).unwrap()
            );
        }
    }

    #[test]
    fn edge_permutation_induced_by_automorphism_is_bijective(g in small_graph(6)) {
        let group = enumerate_automorphisms(&g, None).unwrap();
        for p in group.elements() {
            let induced = induced_edge_permutation(&g, p).unwrap();
            let mut seen = vec![false; induced.len()];
            for &e in &induced {
                prop_assert!(!seen[e]);
                seen[e] = true;
            }
        }
    }

    #[test]
    fn one_label_is_distinguishing_iff_graph_is_asymmetric(g in small_graph(6)) {
        let group = enumerate_automorphisms(&g, None).unwrap();
        let ones = vec![1usize; g.vertex_count()];
        prop_assert_eq!(
            is_vertex_distinguishing(&g, &group, &ones).unwrap(),
            group.order() == 1
        );
    }

    #[test]
    fn search_value_is_independent_of_thread_count(g in small_connected_graph(6)) {
        let single = SearchOptions { threads: 1, ..SearchOptions::default() };
        let multi = SearchOptions { threads: 4, ..SearchOptions::default() };
        let a = exact_distinguishing_number(&g, &single).unwrap();
        let b = exact_distinguishing_number(&g, &multi).unwrap();
        prop_assert_eq!(a.value, b.value);
        let a = exact_distinguishing_index(&g, &single).unwrap();
        let b = exact_distinguishing_index(&g, &multi).unwrap();
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(a.none_reason, b.none_reason);
    }

    #[test]
    fn witness_from_search_uses_reported_label_count(g in small_connected_graph(6)) {
        let r = exact_distinguishing_number(&g, &SearchOptions::default()).unwrap();
        let (value, witness) = (r.value.unwrap(), r.witness.unwrap());
        prop_assert_eq!(witness.iter().copied().max().unwrap(), value);
        let group = enumerate_automorphisms(&g, None).unwrap();
        prop_assert!(is_vertex_distinguishing(&g, &group, &witness).unwrap());
    }

    #[test]
    fn friendship_formulas_agree_with_threshold_form(n in 2u64..5000) {
        let number = formulas::dist_number_friendship(n).unwrap();
        prop_assert!(!number.mismatch);
        let k = number.formula_value;
        prop_assert!(k * (k - 1) / 2 >= n && (k - 1) * (k - 2) / 2 < n);

        let index = formulas::dist_index_friendship(n).unwrap();
        prop_assert!(!index.mismatch);
        let k = index.formula_value;
        prop_assert!(k * k * k - k * k >= 2 * n);
        prop_assert!(k == 2 || (k - 1).pow(3) - (k - 1).pow(2) < 2 * n);
    }

    #[test]
    fn book_number_formula_agrees_with_threshold_form(n in 2u64..5000) {
        let number = formulas::dist_number_book(n).unwrap();
        prop_assert!(!number.mismatch);
        let k = number.formula_value;
        prop_assert!(k * k >= n && (k - 1) * (k - 1) < n);
    }

    #[test]
    fn star_path_index_satisfies_defining_inequality(n in 1u64..2000, m in 2u64..6) {
        let k = formulas::dist_index_star_path(n, m).unwrap().formula_value;
        // least k with k^(2m-1) >= n, bumped by one on the cube exception
        prop_assert!(k.pow(2 * m as u32 - 1) >= n);
        if k > 1 && !(m == 2 && formulas::kth_root(n, 3).pow(3) == n) {
            prop_assert!((k - 1).pow(2 * m as u32 - 1) < n);
        }
    }

    #[test]
    fn dominant_g_bound_minimum_expression_is_minimal(d_g in 2u64..200, d_h in 1u64..200) {
        prop_assume!(d_g > d_h);
        let r = formulas::corona_number_bound_special(d_g, d_h).unwrap();
        let k = r.min_expression_value.unwrap() - d_h;
        prop_assert!((k + 1) * (d_h + k) >= d_g);
        prop_assert!(k == 0 || k * (d_h + k - 1) < d_g);
        // the radical form can undershoot but never exceeds the threshold form
        prop_assert!(r.formula_value <= r.min_expression_value.unwrap());
        prop_assert_eq!(r.mismatch, r.formula_value != r.min_expression_value.unwrap());
    }

    #[test]
    fn count_vector_table_matches_binomials(m in 2u64..10, k in 1usize..8) {
        let n = formulas::binomial(m + k as u64 - 1, k as u64 - 1);
        prop_assume!(n <= u64::MAX as u128);
        let table = formulas::corona_edge_bound_table(m, n as u64, k).unwrap();
        prop_assert!(table.threshold <= k);
        for (r, (&x, &y)) in table.x.iter().zip(table.y.iter()).enumerate() {
            let r = r as u64 + 1;
            prop_assert_eq!(x as u128, formulas::binomial(m - 1, r - 1));
            prop_assert_eq!(y as u128, formulas::binomial(m + r - 2, r - 1));
        }
    }
}
