mod common;

use common::*;
use graphdecomp::generate::{random_digraph, random_subset};
use graphdecomp::graph::{Digraph, Graph, VertexSet};
use graphdecomp::inflation::{
    hull, hyperinflate, hyperinflation, inflate, inflate_n, is_hyperinflation, is_stable,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn arb_case(max_p: usize) -> impl Strategy<Value = (Digraph, VertexSet, VertexSet)> {
    (1..=max_p, any::<u64>(), 0.05f64..0.6).prop_map(|(p, seed, d)| {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_digraph(&mut rng, p, d, true);
        let x = random_subset(&mut rng, p);
        let y = random_subset(&mut rng, p);
        (g, x, y)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn inflate_matches_definition((g, x, _y) in arb_case(10)) {
        prop_assert_eq!(to_btree(&inflate(&g, &x).unwrap()), naive_inflate(&g, &to_btree(&x)));
        prop_assert_eq!(to_btree(&hyperinflation(&g, &x).unwrap()), naive_hull(&g, &to_btree(&x)));
    }

    #[test]
    fn extensive_and_monotone((g, x, y) in arb_case(10)) {
        let u = x.intersection(&y);
        let inf_u = inflate(&g, &u).unwrap();
        let inf_x = inflate(&g, &x).unwrap();
        prop_assert!(u.is_subset(&inf_u));
        prop_assert!(inf_u.is_subset(&inf_x));
    }

    #[test]
    fn hull_is_a_closure_operator((g, x, y) in arb_case(10)) {
        let u = x.intersection(&y);
        let hx = hull(&g, &x).unwrap();
        prop_assert!(x.is_subset(&hx));
        prop_assert!(hull(&g, &u).unwrap().is_subset(&hx));
        prop_assert_eq!(hull(&g, &hx).unwrap(), hx.clone());
        prop_assert!(is_stable(&g, &hx).unwrap());
    }

    #[test]
    fn stable_sets_intersect_to_stable((g, x, y) in arb_case(10)) {
        let hx = hull(&g, &x).unwrap();
        let hy = hull(&g, &y).unwrap();
        prop_assert!(is_stable(&g, &hx.intersection(&hy)).unwrap());
    }

    #[test]
    fn entry_lemma((g, x, _y) in arb_case(10)) {
        let hx = hull(&g, &x).unwrap();
        for v in hx.complement().iter() {
            prop_assert!(g.outputs(v).intersection(&hx).is_subset(&x));
        }
    }

    #[test]
    fn trace_is_short_and_layered((g, x, _y) in arb_case(10)) {
        let trace = hyperinflate(&g, &x).unwrap();
        prop_assert!(trace.layers().len() <= g.order() + 1);
        prop_assert_eq!(trace.layers()[0].clone(), x.clone());
        for w in trace.layers().windows(2) {
            prop_assert!(w[0].is_subset(&w[1]) && w[0] != w[1]);
        }
        prop_assert_eq!(inflate_n(&g, &x, g.order()).unwrap(), trace.fixpoint().clone());
    }

    #[test]
    fn generator_witness((g, x, _y) in arb_case(8)) {
        let hx = hull(&g, &x).unwrap();
        let w = is_hyperinflation(&g, &hx).unwrap().expect("a hull is a hyperinflation");
        prop_assert!(w.is_subset(&hx));
        prop_assert_eq!(hull(&g, &w).unwrap(), hx);
        if !is_stable(&g, &x).unwrap() {
            prop_assert_eq!(is_hyperinflation(&g, &x).unwrap(), None);
        }
    }
}

#[test]
fn undirected_inflation_collapses_after_one_step() {
    for p in 0..=5 {
        let subsets = all_subsets(p);
        for g in all_graphs(p) {
            for u in &subsets {
                let once = inflate(&g, u).unwrap();
                assert_eq!(inflate_n(&g, u, 2).unwrap(), once);
                assert_eq!(hyperinflation(&g, u).unwrap(), once);
            }
        }
    }
}
