//! Exact long-cycle and long-path invariants.
//!
//! Conventions: acyclic graphs have circumference 0, an empty cummerbund
//! cover set and are never cummerbund covered. A single vertex is a path, so
//! every graph with at least one vertex has detour order at least 1; the null
//! graph has detour order 0.

mod connectivity;
mod search;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, Bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use connectivity::{articulation_points, blocks, connectivity, is_k_connected, local_connectivity};
pub use search::Budget;

/// A simple path given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
}

impl PathWitness {
    /// Validates `vertices` as a path of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<PathWitness> {
        check_walk(g, &vertices, false)?;
        Ok(PathWitness { vertices })
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

/// A cycle, stored from its smallest vertex in the direction whose second
/// vertex is smaller, so equal witnesses are equal subgraphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleWitness {
    vertices: Vec<usize>,
}

impl CycleWitness {
    /// Validates `vertices` as a cycle of `g` in any rotation or direction.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<CycleWitness> {
        if vertices.len() < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        check_walk(g, &vertices, true)?;
        Ok(CycleWitness::normalized(vertices))
    }

    pub(crate) fn normalized(mut v: Vec<usize>) -> CycleWitness {
        let k = v.len();
        let m = (0..k).min_by_key(|&i| v[i]).expect("cycle is non-empty");
        v.rotate_left(m);
        if v[k - 1] < v[1] {
            v[1..].reverse();
        }
        CycleWitness { vertices: v }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Distance between `x` and `y` along the cycle: the shorter arc.
    pub fn cycle_distance(&self, x: usize, y: usize) -> Option<usize> {
        let i = self.vertices.iter().position(|&v| v == x)?;
        let j = self.vertices.iter().position(|&v| v == y)?;
        let d = i.abs_diff(j);
        Some(d.min(self.len() - d))
    }
}

fn check_walk(g: &Graph, vs: &[usize], closed: bool) -> Result<()> {
    let n = g.order();
    let mut seen = 0u64;
    for &v in vs {
        if v >= n {
            return Err(Error::InvalidVertex { vertex: v, order: n });
        }
        if seen & bit(v) != 0 {
            return Err(Error::InvalidParameter(format!("vertex {v} repeats")));
        }
        seen |= bit(v);
    }
    for w in vs.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::NoSuchEdge(w[0], w[1]));
        }
    }
    if closed && vs.len() >= 3 {
        let (a, b) = (vs[vs.len() - 1], vs[0]);
        if !g.has_edge(a, b) {
            return Err(Error::NoSuchEdge(a, b));
        }
    }
    Ok(())
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in Bits(g.rows()[u]) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

fn blocks_by_size(g: &Graph) -> Vec<u64> {
    let mut b = blocks(g);
    b.sort_by(|x, y| y.count_ones().cmp(&x.count_ones()).then(x.cmp(y)));
    b
}

fn components_by_size(g: &Graph) -> Vec<u64> {
    let mut c: Vec<u64> = g.components().into_iter().map(|s| s.bits()).collect();
    c.sort_by(|x, y| y.count_ones().cmp(&x.count_ones()).then(x.cmp(y)));
    c
}

/// Circumference and one longest cycle; `(0, None)` for forests.
pub fn circumference(g: &Graph) -> (usize, Option<CycleWitness>) {
    circumference_with(g, &mut Budget::unlimited()).expect("unbounded search")
}

pub fn circumference_with(g: &Graph, budget: &mut Budget) -> Result<(usize, Option<CycleWitness>)> {
    let mut best: Option<Vec<usize>> = None;
    for b in blocks_by_size(g) {
        let floor = best.as_ref().map_or(2, Vec::len);
        if (b.count_ones() as usize) <= floor {
            break;
        }
        if let Some(c) = search::longest_cycle_in(g.rows(), b, floor, budget)? {
            best = Some(c);
        }
    }
    Ok(match best {
        Some(c) => (c.len(), Some(CycleWitness::normalized(c))),
        None => (0, None),
    })
}

/// Detour order and one longest path.
pub fn detour_order(g: &Graph) -> (usize, Option<PathWitness>) {
    detour_order_with(g, &mut Budget::unlimited()).expect("unbounded search")
}

pub fn detour_order_with(g: &Graph, budget: &mut Budget) -> Result<(usize, Option<PathWitness>)> {
    let mut best: Option<Vec<usize>> = None;
    for comp in components_by_size(g) {
        let floor = best.as_ref().map_or(0, Vec::len);
        if (comp.count_ones() as usize) <= floor {
            break;
        }
        if let Some(p) = search::longest_path_in(g.rows(), comp, floor, budget)? {
            best = Some(p);
        }
    }
    Ok(match best {
        Some(p) => (p.len(), Some(PathWitness { vertices: p })),
        None => (0, None),
    })
}

/// Vertices lying on some longest cycle.
pub fn cummerbund_cover_set(g: &Graph) -> VertexSet {
    cummerbund_cover_set_with(g, &mut Budget::unlimited()).expect("unbounded search")
}

pub fn cummerbund_cover_set_with(g: &Graph, budget: &mut Budget) -> Result<VertexSet> {
    let (c, w) = circumference_with(g, budget)?;
    cummerbund_scan(g, c, w.as_ref(), false, budget)
}

/// Vertices lying on some longest path.
pub fn detour_cover_set(g: &Graph) -> VertexSet {
    detour_cover_set_with(g, &mut Budget::unlimited()).expect("unbounded search")
}

pub fn detour_cover_set_with(g: &Graph, budget: &mut Budget) -> Result<VertexSet> {
    let (l, w) = detour_order_with(g, budget)?;
    detour_scan(g, l, w.as_ref(), false, budget)
}

/// Marks every vertex on a cycle of length `c`. With `stop_on_miss` the scan
/// ends at the first vertex that lies on none.
fn cummerbund_scan(
    g: &Graph,
    c: usize,
    witness: Option<&CycleWitness>,
    stop_on_miss: bool,
    budget: &mut Budget,
) -> Result<VertexSet> {
    let Some(w) = witness else {
        return Ok(VertexSet::EMPTY);
    };
    let mut covered = w.vertex_set().bits();
    let big: Vec<u64> = blocks(g).into_iter().filter(|b| b.count_ones() as usize >= c).collect();
    for v in 0..g.order() {
        if covered & bit(v) != 0 {
            continue;
        }
        for &b in big.iter().filter(|&&b| b & bit(v) != 0) {
            if let Some(cyc) = search::cycle_through(g.rows(), v, c, b, budget)? {
                for u in cyc {
                    covered |= bit(u);
                }
                break;
            }
        }
        if stop_on_miss && covered & bit(v) == 0 {
            break;
        }
    }
    Ok(VertexSet(covered))
}

fn detour_scan(
    g: &Graph,
    l: usize,
    witness: Option<&PathWitness>,
    stop_on_miss: bool,
    budget: &mut Budget,
) -> Result<VertexSet> {
    let Some(w) = witness else {
        return Ok(VertexSet::EMPTY);
    };
    let mut covered = w.vertex_set().bits();
    let comps = components_by_size(g);
    for v in 0..g.order() {
        if covered & bit(v) != 0 {
            continue;
        }
        let comp = *comps.iter().find(|&&c| c & bit(v) != 0).expect("components partition V");
        if comp.count_ones() as usize >= l {
            if let Some(p) = search::path_through(g.rows(), v, l, comp, budget)? {
                for u in p {
                    covered |= bit(u);
                }
            }
        }
        if stop_on_miss && covered & bit(v) == 0 {
            break;
        }
    }
    Ok(VertexSet(covered))
}

/// Cummerbund covering number.
pub fn cc(g: &Graph) -> usize {
    cummerbund_cover_set(g).len()
}

/// Detour covering number.
pub fn dc(g: &Graph) -> usize {
    detour_cover_set(g).len()
}

pub fn is_cummerbund_covered(g: &Graph) -> bool {
    is_cummerbund_covered_with(g, &mut Budget::unlimited()).expect("unbounded search")
}

pub fn is_cummerbund_covered_with(g: &Graph, budget: &mut Budget) -> Result<bool> {
    let n = g.order();
    if n < 3 || g.min_degree() < 2 {
        return Ok(false);
    }
    let (c, w) = circumference_with(g, budget)?;
    if c == 0 {
        return Ok(false);
    }
    Ok(cummerbund_scan(g, c, w.as_ref(), true, budget)?.len() == n)
}

pub fn is_detour_covered(g: &Graph) -> bool {
    is_detour_covered_with(g, &mut Budget::unlimited()).expect("unbounded search")
}

pub fn is_detour_covered_with(g: &Graph, budget: &mut Budget) -> Result<bool> {
    let (l, w) = detour_order_with(g, budget)?;
    Ok(detour_scan(g, l, w.as_ref(), true, budget)?.len() == g.order())
}

/// Calls `f` once per longest cycle, as a normalized vertex sequence.
pub fn for_each_cummerbund(g: &Graph, f: impl FnMut(&[usize])) {
    for_each_cummerbund_with(g, &mut Budget::unlimited(), f).expect("unbounded search")
}

pub fn for_each_cummerbund_with(
    g: &Graph,
    budget: &mut Budget,
    mut f: impl FnMut(&[usize]),
) -> Result<()> {
    let (c, _) = circumference_with(g, budget)?;
    if c == 0 {
        return Ok(());
    }
    for b in blocks(g) {
        if b.count_ones() as usize >= c {
            search::for_each_cycle_in(g.rows(), b, c, budget, &mut f)?;
        }
    }
    Ok(())
}

/// Calls `f` once per longest path, listed from its smaller endpoint.
pub fn for_each_detour(g: &Graph, f: impl FnMut(&[usize])) {
    for_each_detour_with(g, &mut Budget::unlimited(), f).expect("unbounded search")
}

pub fn for_each_detour_with(g: &Graph, budget: &mut Budget, mut f: impl FnMut(&[usize])) -> Result<()> {
    let (l, _) = detour_order_with(g, budget)?;
    search::for_each_path(g.rows(), g.order(), l, budget, &mut f)
}

pub fn count_cummerbunds(g: &Graph) -> usize {
    let mut k = 0;
    for_each_cummerbund(g, |_| k += 1);
    k
}

pub fn count_detours(g: &Graph) -> usize {
    let mut k = 0;
    for_each_detour(g, |_| k += 1);
    k
}

/// Whether `G - S` has no edges.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    let rest = g.vertex_set().bits() & !s.bits();
    Bits(rest).all(|v| g.rows()[v] & rest == 0)
}

/// Shape of the graph left after deleting a longest cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Remainder {
    /// No edges (including the null graph).
    Empty,
    /// Complete with at least one edge.
    Complete,
    Mixed,
}

/// Classifies `G - V(W)` for a longest cycle `W`.
pub fn complement_structure_after_cummerbund(g: &Graph, w: &CycleWitness) -> Result<Remainder> {
    check_walk(g, w.vertices(), true).map_err(|e| Error::NotACummerbund(e.to_string()))?;
    let (c, _) = circumference(g);
    if w.len() != c {
        return Err(Error::NotACummerbund(format!(
            "cycle has {} vertices but the circumference is {c}",
            w.len()
        )));
    }
    let rest = g.vertex_set().bits() & !w.vertex_set().bits();
    let k = rest.count_ones() as usize;
    let edges: usize = Bits(rest).map(|v| (g.rows()[v] & rest).count_ones() as usize).sum::<usize>() / 2;
    Ok(if edges == 0 {
        Remainder::Empty
    } else if edges == k * (k - 1) / 2 {
        Remainder::Complete
    } else {
        Remainder::Mixed
    })
}

/// Every exact invariant of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub kappa: usize,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub circumference: usize,
    pub detour_order: usize,
    pub dc: usize,
    pub cc: usize,
    pub detour_covered: bool,
    pub cummerbund_covered: bool,
    pub bipartite: bool,
}

impl InvariantProfile {
    pub fn of(g: &Graph) -> InvariantProfile {
        Self::with_sets(g, &mut Budget::unlimited())
            .expect("unbounded search")
            .0
    }

    pub fn of_with(g: &Graph, budget: &mut Budget) -> Result<InvariantProfile> {
        Ok(Self::with_sets(g, budget)?.0)
    }

    /// The profile together with the detour and cummerbund cover sets.
    pub fn with_sets(g: &Graph, budget: &mut Budget) -> Result<(InvariantProfile, CoverSets)> {
        let n = g.order();
        let (c, cw) = circumference_with(g, budget)?;
        let (l, pw) = detour_order_with(g, budget)?;
        let cummerbund = cummerbund_scan(g, c, cw.as_ref(), false, budget)?;
        let detour = detour_scan(g, l, pw.as_ref(), false, budget)?;
        let profile = InvariantProfile {
            order: n,
            size: g.size(),
            min_degree: g.min_degree(),
            kappa: connectivity(g),
            girth: girth(g),
            circumference: c,
            detour_order: l,
            dc: detour.len(),
            cc: cummerbund.len(),
            detour_covered: detour.len() == n,
            cummerbund_covered: c >= 3 && cummerbund.len() == n,
            bipartite: g.is_bipartite(),
        };
        Ok((profile, CoverSets { detour, cummerbund }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSets {
    pub detour: VertexSet,
    pub cummerbund: VertexSet,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    fn petersen() -> Graph {
        Graph::from_edge_list(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn cycles_and_paths() {
        for n in 3..12 {
            let c = cycle(n);
            assert_eq!(circumference(&c).0, n);
            assert_eq!(cc(&c), n);
            assert_eq!(count_cummerbunds(&c), 1);
            assert!(is_cummerbund_covered(&c));
            let p = path(n);
            assert_eq!(detour_order(&p).0, n);
            assert_eq!(dc(&p), n);
            assert_eq!(count_detours(&p), 1);
            assert_eq!(circumference(&p).0, 0);
            assert!(!is_cummerbund_covered(&p));
            assert_eq!(girth(&p), None);
            assert_eq!(girth(&c), Some(n));
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_cummerbunds(&complete(4)), 3);
        assert_eq!(count_detours(&complete(3)), 3);
        assert_eq!(detour_order(&Graph::empty(1)).0, 1);
        assert_eq!(detour_order(&Graph::null()).0, 0);
        assert_eq!(count_detours(&Graph::empty(3)), 3);
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(detour_order(&star).0, 3);
        assert_eq!(dc(&star), 4);
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let (c, w) = circumference(&petersen());
        assert_eq!(c, 9);
        assert_eq!(w.unwrap().len(), 9);
        assert_eq!(cc(&petersen()), 10);
        assert_eq!(detour_order(&petersen()).0, 10);
        assert_eq!(girth(&petersen()), Some(5));
    }

    #[test]
    fn witnesses_are_normalized() {
        let g = cycle(5);
        let a = CycleWitness::new(&g, vec![3, 2, 1, 0, 4]).unwrap();
        let b = CycleWitness::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(a.cycle_distance(0, 3), Some(2));
        assert_eq!(a.cycle_distance(1, 1), Some(0));
        assert!(CycleWitness::new(&g, vec![0, 2, 1, 3, 4]).is_err());
    }

    #[test]
    fn domination() {
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_dominating(&star, [0].into_iter().collect()));
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_dominating(&two_k2, [0, 1].into_iter().collect()));
        assert!(is_dominating(&two_k2, two_k2.vertex_set()));
    }

    #[test]
    fn remainder_after_cummerbund() {
        let g = complete(4);
        let (_, w) = circumference(&g);
        assert_eq!(complement_structure_after_cummerbund(&g, &w.unwrap()), Ok(Remainder::Empty));
        let tri = CycleWitness::new(&g, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            complement_structure_after_cummerbund(&g, &tri),
            Err(Error::NotACummerbund(_))
        ));
    }

    #[test]
    fn budget_reports_timeout() {
        let mut b = Budget::nodes(3);
        assert_eq!(circumference_with(&petersen(), &mut b), Err(Error::Timeout(3)));
    }
}
