//! Structural statements about longest cycles and paths, checked
//! exhaustively over small universes.

use longcycle_core::enumeration::{enumerate, UniverseSpec};
use longcycle_core::invariants::{
    circumference, connectivity, for_each_cummerbund, for_each_detour, girth, is_dominating,
};
use longcycle_core::recognition::{is_cycle_graph, is_induced_free, is_uniform_theta, Pattern};
use longcycle_core::{Graph, VertexSet};

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

/// Edge count of `G - S` and its vertex count.
fn remainder(g: &Graph, s: VertexSet) -> (usize, usize) {
    let rest = g.vertex_set().bits() & !s.bits();
    let k = rest.count_ones() as usize;
    let e = VertexSet(rest)
        .iter()
        .map(|v| (g.rows()[v] & rest).count_ones() as usize)
        .sum::<usize>()
        / 2;
    (e, k)
}

#[derive(Default)]
struct Tally {
    graphs: usize,
    dominating_checked: usize,
    remainder_checked: usize,
    equal_girth: usize,
}

fn two_connected_checks(n: usize, tally: &mut Tally) {
    let two_k2 = [Pattern::two_k2()];
    for g in enumerate(&UniverseSpec::new(n).k_connected(2)).unwrap() {
        tally.graphs += 1;
        let (c, _) = circumference(&g);
        if girth(&g) == Some(c) {
            tally.equal_girth += 1;
            assert!(is_cycle_graph(&g) || is_uniform_theta(&g), "{g:?}");
        }
        if c == n {
            continue;
        }
        let kappa = connectivity(&g);
        let short = c < 3 * kappa;
        let free = is_induced_free(&g, &two_k2);
        let dense = 3 * g.min_degree() >= n;
        if !(short || free || dense) {
            continue;
        }
        for_each_cummerbund(&g, |cyc| {
            let s = set(cyc);
            if short || free {
                tally.dominating_checked += 1;
                assert!(is_dominating(&g, s), "{g:?} {cyc:?}");
            }
            if dense {
                tally.remainder_checked += 1;
                let (e, k) = remainder(&g, s);
                assert!(e == 0 || e == k * (k - 1) / 2, "{g:?} {cyc:?}");
            }
        });
    }
}

#[test]
fn two_connected_up_to_nine() {
    let mut t = Tally::default();
    for n in 3..=9 {
        two_connected_checks(n, &mut t);
    }
    assert!(t.graphs > 190_000);
    assert!(t.dominating_checked > 0 && t.remainder_checked > 0 && t.equal_girth > 0);
}

#[test]
#[ignore = "extended tier: enumerates all graphs of order 10"]
fn two_connected_order_ten() {
    let mut t = Tally::default();
    two_connected_checks(10, &mut t);
}

#[test]
fn detours_of_two_k2_free_graphs_dominate() {
    let mut checked = 0;
    for n in 1..=9 {
        let spec = UniverseSpec::new(n).connected().induced_free(&["2K2"]);
        for g in enumerate(&spec).unwrap() {
            for_each_detour(&g, |p| {
                checked += 1;
                assert!(is_dominating(&g, set(p)), "{g:?} {p:?}");
            });
        }
    }
    assert!(checked > 0);
}
