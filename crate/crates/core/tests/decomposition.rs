mod common;

use std::collections::BTreeSet;

use common::*;
use graphdecomp::decomposition::{
    interval_decomposition, jet_layers, jet_to_interval, region_of, regions, seeded_decomposition,
    unique_heading_witness, verify_jet, HeadingArcs, LowestVertex,
};
use graphdecomp::generate::{
    random_digraph, random_jet, random_permutation, random_subset, with_backward_arc,
};
use graphdecomp::graph::{Digraph, Graph, VertexId, VertexSet};
use graphdecomp::inflation::hull;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn check_nesting(g: &Digraph) {
    let all = regions(g);
    for a in &all {
        for b in &all {
            assert!(
                !a.intersects(b) || a.is_subset(b) || b.is_subset(a),
                "{g:?}: {a:?} {b:?}"
            );
        }
    }
}

#[test]
fn regions_are_disjoint_or_nested() {
    for p in 0..=4 {
        for g in all_digraphs(p, false) {
            check_nesting(&g);
        }
    }
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..2000 {
        let p = rng.gen_range(1..=4);
        check_nesting(&random_digraph(&mut rng, p, 0.4, true));
    }
    for _ in 0..500 {
        check_nesting(&sample_digraph(&mut rng, 1, 8));
    }
}

#[test]
fn intervals_are_the_maximal_regions() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..500 {
        let g = sample_digraph(&mut rng, 0, 8);
        let d = interval_decomposition(&g);
        d.validate(&g).unwrap();
        assert_eq!(partition(d.components()), naive_intervals(&g));
        let all = regions(&g);
        for (c, seed) in d.components().iter().zip(d.seeds()) {
            let headings: Vec<VertexId> = c.iter().filter(|h| &all[h.0] == c).collect();
            assert!(!headings.is_empty());
            assert!(seed.len() == 1 && headings.contains(&seed.first().unwrap()));
            assert!(!all.iter().any(|r| c.is_subset(r) && r != c));
        }
    }
}

#[test]
fn interval_decomposition_is_label_independent() {
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..200 {
        let g = sample_digraph(&mut rng, 1, 8);
        let p = g.order();
        let expected = partition(interval_decomposition(&g).components());
        for _ in 0..20 {
            let perm = random_permutation(&mut rng, p);
            let h = g.relabel(&perm).unwrap();
            let mut inverse = vec![0; p];
            for (v, &t) in perm.iter().enumerate() {
                inverse[t] = v;
            }
            let back: BTreeSet<BTreeSet<usize>> = interval_decomposition(&h)
                .components()
                .iter()
                .map(|c| c.iter().map(|v| inverse[v.0]).collect())
                .collect();
            assert_eq!(back, expected);
        }
    }
}

fn singleton_condition(g: &Digraph) -> bool {
    g.vertices().iter().all(|v| {
        let ins = g.inputs(v);
        ins.len() != 1 || ins.contains(v)
    })
}

#[test]
fn singleton_criterion() {
    for p in 0..=3 {
        for g in all_digraphs(p, true) {
            let all_singletons = interval_decomposition(&g)
                .components()
                .iter()
                .all(|c| c.len() == 1);
            assert_eq!(all_singletons, singleton_condition(&g), "{g:?}");
        }
    }
}

#[test]
fn entering_arcs_hit_the_unique_heading() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..500 {
        let g = sample_digraph(&mut rng, 1, 7);
        for x in g.vertices().iter() {
            let r = region_of(&g, x).unwrap();
            let witness = unique_heading_witness(&g, &r).unwrap();
            for y in r.vertices.complement().iter() {
                let entry = g.outputs(y).intersection(&r.vertices);
                if !entry.is_empty() {
                    assert_eq!(entry, r.headings);
                    assert!(witness.is_some());
                }
            }
        }
    }
}

#[test]
fn seeded_decomposition_with_random_connected_seeds() {
    let mut rng = StdRng::seed_from_u64(41);
    for _ in 0..500 {
        let g = sample_digraph(&mut rng, 0, 8);
        let p = g.order();
        let d = seeded_decomposition(&g, LowestVertex).unwrap();
        d.validate(&g).unwrap();
        assert!(d.len() <= p);

        let mut local = StdRng::seed_from_u64(rng.gen());
        let mut rounds = 0;
        let mut last_covered = 0;
        let d = seeded_decomposition(&g, |g: &Digraph, uncovered: &VertexSet| {
            rounds += 1;
            assert!(rounds <= g.order());
            let covered = g.order() - uncovered.len();
            assert!(rounds == 1 || covered > last_covered);
            last_covered = covered;
            // A random subset of the uncovered vertices, shrunk to the
            // strongly connected piece around its smallest vertex.
            let start = uncovered.first()?;
            let mut w = random_subset(&mut local, g.order()).intersection(uncovered);
            w.insert(start);
            let comp: VertexSet = VertexSet::from_ids(
                g.order(),
                w.iter().filter(|&v| {
                    g.is_connected_subset(
                        &VertexSet::from_ids(g.order(), [start, v]).intersection(&w),
                    )
                    .unwrap()
                }),
            );
            Some(if g.is_connected_subset(&comp).unwrap() {
                comp
            } else {
                VertexSet::singleton(g.order(), start)
            })
        })
        .unwrap();
        d.validate(&g).unwrap();
        for (c, s) in d.components().iter().zip(d.seeds()) {
            assert_eq!(&hull(&g, s).unwrap(), c);
        }
    }
}

#[test]
fn jet_round_trip_and_perturbations() {
    let mut rng = StdRng::seed_from_u64(51);
    for _ in 0..500 {
        let layers = rng.gen_range(1..=5);
        let density = rng.gen_range(0.0..0.6);
        let (h, jet) = random_jet(&mut rng, layers, 3, density);
        assert!(verify_jet(&h, &jet).unwrap().is_valid());
        let later = jet.vertices(h.order()).difference(&jet.layers[0]);
        let closing = HeadingArcs {
            back: random_subset(&mut rng, h.order()).intersection(&later),
            heading_loop: rng.gen_bool(0.5),
        };
        let interval = jet_to_interval(&h, &jet, &closing).unwrap();
        let g = &interval.graph;
        let region = region_of(g, interval.heading).unwrap();
        assert_eq!(region.vertices, g.vertices());
        let recovered = jet_layers(g, &region, interval.heading).unwrap();
        let as_indices = |ls: &[VertexSet]| -> Vec<Vec<usize>> {
            ls.iter().map(|l| l.iter().map(|v| v.0).collect()).collect()
        };
        assert_eq!(as_indices(&recovered.layers), as_indices(&jet.layers));

        if let Some(broken) = with_backward_arc(&mut rng, &h, &jet) {
            assert!(!verify_jet(&broken, &jet).unwrap().is_valid());
        }
    }
}

#[test]
fn jet_without_path_support_is_rejected() {
    // W1 = {0}, W2 = {1}, W3 = {2} with 0 -> 2 only: 2 has no predecessor in W2.
    let g = Digraph::new(3, [(0, 1), (0, 2)]).unwrap();
    let jet = graphdecomp::decomposition::Jet::new(vec![
        VertexSet::singleton(3, VertexId(0)),
        VertexSet::singleton(3, VertexId(1)),
        VertexSet::singleton(3, VertexId(2)),
    ]);
    assert!(!verify_jet(&g, &jet).unwrap().is_valid());
}
