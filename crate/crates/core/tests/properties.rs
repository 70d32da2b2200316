use longcycle_core::families::{theta, uniform_theta};
use longcycle_core::graph6;
use longcycle_core::invariants::{
    circumference, connectivity, cummerbund_cover_set, detour_cover_set, detour_order, girth,
    InvariantProfile,
};
use longcycle_core::recognition::{
    is_induced_free, is_threshold, threshold_witness, uniform_theta_params, Pattern,
};
use longcycle_core::{canonical, is_isomorphic, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs), 0.0f64..1.0)
    })
    .prop_map(|(n, bits, _)| {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

fn permuted(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Threshold graphs built by adding isolated or dominating vertices.
fn threshold_graph() -> impl Strategy<Value = Graph> {
    proptest::collection::vec(any::<bool>(), 0..=16).prop_map(|steps| {
        let mut g = Graph::null();
        for dominating in steps {
            let k1 = Graph::empty(1);
            g = if dominating { g.join(&k1) } else { g.disjoint_union(&k1) };
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&s).unwrap(), g.clone());
        if g.order() < 63 {
            let m = longcycle_oracle::Mat::from_edges(g.order(), &g.edges());
            prop_assert_eq!(s, longcycle_oracle::graph6(&m));
        }
    }

    #[test]
    fn certificate_ignores_labels((g, perm) in permuted(12)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical(&g).canon, canonical(&h).canon);
        prop_assert!(is_isomorphic(&g, &h));
        let c = canonical(&g);
        prop_assert_eq!(g.relabel(&c.relabeling).unwrap(), c.graph());
    }

    #[test]
    fn certificate_matches_isomorphism(g in graph(7), h in graph(7)) {
        let m = |x: &Graph| longcycle_oracle::Mat::from_edges(x.order(), &x.edges());
        prop_assert_eq!(
            canonical(&g).canon == canonical(&h).canon,
            longcycle_oracle::isomorphic(&m(&g), &m(&h))
        );
    }

    #[test]
    fn profile_relations(g in graph(11)) {
        let p = InvariantProfile::of(&g);
        if p.circumference >= 3 {
            prop_assert!(p.cc >= p.circumference);
        } else {
            prop_assert_eq!(p.cc, 0);
        }
        prop_assert!(p.dc >= p.detour_order);
        prop_assert!(p.dc <= p.order && p.cc <= p.order);
        prop_assert_eq!(p.detour_covered, p.dc == p.order);
        prop_assert_eq!(p.cummerbund_covered, p.cc == p.order && p.circumference >= 3);
        if let Some(gi) = p.girth {
            prop_assert!(gi <= p.circumference);
        }
    }

    #[test]
    fn join_with_vertex_shifts_covering(g in graph(11)) {
        let h = g.join(&Graph::empty(1));
        // An edgeless G has one-vertex detours, which close up to no cycle.
        if g.size() > 0 {
            prop_assert_eq!(detour_cover_set(&g).len() + 1, cummerbund_cover_set(&h).len());
        }
        if g.order() >= 1 {
            prop_assert_eq!(connectivity(&h), connectivity(&g) + 1);
        }
    }

    #[test]
    fn adding_an_edge_is_monotone(g in graph(10), a in 0usize..10, b in 0usize..10) {
        let n = g.order();
        prop_assume!(n >= 2);
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b && !g.has_edge(a, b));
        let h = g.with_edge(a, b).unwrap();
        prop_assert!(circumference(&h).0 >= circumference(&g).0);
        prop_assert!(detour_order(&h).0 >= detour_order(&g).0);
    }

    #[test]
    fn threshold_weights_realize_graph(g in threshold_graph(), perm_seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let g = g.relabel(&perm).unwrap();
        let w = threshold_witness(&g).expect("built as threshold");
        prop_assert!(w.realizes(&g));
    }

    #[test]
    fn theta_girth_and_circumference(lengths in proptest::collection::vec(2usize..7, 2..5)) {
        let g = theta(&lengths).unwrap();
        prop_assume!(g.order() <= 20);
        let mut l = lengths.clone();
        l.sort_unstable();
        let k = l.len();
        prop_assert_eq!(girth(&g), Some(l[0] + l[1]));
        prop_assert_eq!(circumference(&g).0, l[k - 1] + l[k - 2]);
    }
}

#[test]
fn threshold_agrees_with_forbidden_triple() {
    let forbidden = [Pattern::p4(), Pattern::c4(), Pattern::two_k2()];
    for n in 0..=8 {
        for g in longcycle_core::enumeration::enumerate(&longcycle_core::enumeration::UniverseSpec::new(n))
            .unwrap()
        {
            assert_eq!(is_threshold(&g), is_induced_free(&g, &forbidden), "{g:?}");
            if let Some(w) = threshold_witness(&g) {
                assert!(w.realizes(&g));
            }
        }
    }
}

#[test]
fn uniform_thetas_have_one_cycle_length() {
    for a in 2..=5 {
        for m in 2..=5 {
            let g = uniform_theta(a, m).unwrap();
            assert_eq!(girth(&g), Some(2 * a));
            assert_eq!(circumference(&g).0, 2 * a);
            if m >= 3 {
                assert_eq!(uniform_theta_params(&g).map(|t| (t.a, t.m)), Some((a, m)));
            }
        }
    }
}
