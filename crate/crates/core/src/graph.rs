//! Immutable simple graphs on at most 64 vertices with one adjacency word per
//! vertex.
//!
//! Combinators label deterministically: the left operand keeps its labels and
//! new vertices are appended after the existing ones.

use std::collections::VecDeque;
use std::fmt;

use crate::bits::{bit, low_mask, Bits, VertexSet};
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Outcome of a 2-colouring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Vertices in the set get colour 1, the others colour 0.
    Coloring(VertexSet),
    /// Vertex sequence of an odd cycle.
    OddCycle(Vec<usize>),
}

impl Graph {
    /// The edgeless graph of order `n`.
    ///
    /// Panics if `n > 64`.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    /// The null graph `K_0`.
    pub fn null() -> Graph {
        Graph::empty(0)
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::NotSymmetric(format!("row {v} has bits beyond the order")));
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in Bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::NotSymmetric(format!("{v}->{u} without {u}->{v}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Adjacency rows; bit `u` of `rows()[v]` is set iff `uv` is an edge.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// `δ(G)`; zero for the null graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet(low_mask(self.n))
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let rows = (0..self.n).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        Graph::from_rows_unchecked(rows)
    }

    /// `G ∨ H`. Panics if the result would exceed 64 vertices.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_ORDER, "join of order {n} exceeds {MAX_ORDER}");
        let left = low_mask(self.n);
        let right = low_mask(n) & !left;
        let mut rows = Vec::with_capacity(n);
        rows.extend(self.adj.iter().map(|&r| r | right));
        rows.extend(other.adj.iter().map(|&r| (r << self.n) | left));
        Graph::from_rows_unchecked(rows)
    }

    /// `G + H`. Panics if the result would exceed 64 vertices.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_ORDER, "union of order {n} exceeds {MAX_ORDER}");
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|&r| r << self.n));
        Graph::from_rows_unchecked(rows)
    }

    /// Appends a vertex whose neighbourhood is exactly `N(v)`.
    pub fn duplicate_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n == MAX_ORDER {
            return Err(Error::TooLarge(self.n + 1));
        }
        Ok(self.add_vertex(self.adj[v]))
    }

    /// Appends a vertex adjacent to the given set of existing vertices.
    pub(crate) fn add_vertex(&self, nbrs: u64) -> Graph {
        let n = self.n;
        let mut rows = Vec::with_capacity(n + 1);
        rows.extend(
            self.adj
                .iter()
                .enumerate()
                .map(|(u, &r)| if nbrs & bit(u) != 0 { r | bit(n) } else { r }),
        );
        rows.push(nbrs);
        Graph::from_rows_unchecked(rows)
    }

    /// Replaces the edge `uv` by a path `u w v` through a new last vertex `w`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        if self.n == MAX_ORDER {
            return Err(Error::TooLarge(self.n + 1));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g.add_vertex(bit(u) | bit(v)))
    }

    /// `G[S]`, relabelled by increasing original label.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut rows = vec![0u64; keep.len()];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &w) in keep.iter().enumerate() {
                if self.adj[u] & bit(w) != 0 {
                    rows[i] |= bit(j);
                }
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    /// `G - v`, with labels above `v` shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(VertexSet(self.vertex_set().0 & !bit(v))))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != low_mask(self.n) {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            for u in Bits(self.adj[v]) {
                rows[perm[v]] |= bit(perm[u]);
            }
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = self.reach(v, left);
            out.push(VertexSet(c));
            left &= !c;
        }
        out
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, low_mask(self.n)) == low_mask(self.n)
    }

    pub fn bipartition(&self) -> Bipartition {
        let n = self.n;
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in Bits(self.adj[u]) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return Bipartition::OddCycle(odd_cycle(&parent, &depth, u, w));
                    }
                }
            }
        }
        Bipartition::Coloring((0..n).filter(|&v| color[v] == 1).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Coloring(_))
    }
}

/// Closes the BFS-tree paths from `u` and `w` at their common ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], mut u: usize, mut w: usize) -> Vec<usize> {
    let mut left = vec![u];
    let mut right = vec![w];
    while depth[u] > depth[w] {
        u = parent[u];
        left.push(u);
    }
    while depth[w] > depth[u] {
        w = parent[w];
        right.push(w);
    }
    while u != w {
        u = parent[u];
        w = parent[w];
        left.push(u);
        right.push(w);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn edge_list_examples() {
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.size(), 3);
        assert_eq!(c3.min_degree(), 2);
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components().len(), 2);
        let dup = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.size(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::InvalidVertex { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edge_list(65, &[]), Err(Error::TooLarge(65)));
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn join_counts() {
        let k1 = Graph::empty(1);
        let w = k1.join(&cycle(4));
        assert_eq!(w.order(), 5);
        assert_eq!(w.size(), 8);
        assert_eq!(Graph::null().join(&cycle(5)), cycle(5));
        let mixed = Graph::empty(2).join(&Graph::from_edge_list(5, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(mixed.order(), 7);
        assert_eq!(mixed.size(), 2 + 10);
    }

    #[test]
    fn union_counts() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let two = k2.disjoint_union(&k2);
        assert_eq!(two, Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(two.disjoint_union(&Graph::null()), two);
        let g = two.disjoint_union(&Graph::empty(3));
        assert_eq!((g.order(), g.size()), (7, 2));
    }

    #[test]
    fn duplicate_leaf_of_p3() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let g = p3.duplicate_vertex(0).unwrap();
        assert_eq!((g.order(), g.size()), (4, 3));
        assert_eq!(g.neighbors(3), g.neighbors(0));
        assert!(!g.has_edge(0, 3));
        assert_eq!(p3.duplicate_vertex(3), Err(Error::InvalidVertex { vertex: 3, order: 3 }));
    }

    #[test]
    fn duplicate_on_cycle() {
        let g = cycle(4).duplicate_vertex(2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.neighbors(4).to_vec(), vec![1, 3]);
        assert_eq!(g.delete_vertex(4).unwrap(), cycle(4));
    }

    #[test]
    fn subdivide() {
        let g = cycle(3).subdivide_edge(0, 1).unwrap();
        assert_eq!((g.order(), g.size()), (4, 4));
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.neighbors(3).to_vec(), vec![0, 1]);
        assert_eq!(cycle(3).subdivide_edge(0, 0), Err(Error::NoSuchEdge(0, 0)));
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.subdivide_edge(0, 2), Err(Error::NoSuchEdge(0, 2)));
    }

    #[test]
    fn induced() {
        let c5 = cycle(5);
        let p3 = c5.induced_subgraph([1, 2, 3].into_iter().collect());
        assert_eq!(p3, Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(c5.induced_subgraph(c5.vertex_set()), c5);
    }

    #[test]
    fn bipartition_witnesses() {
        match cycle(6).bipartition() {
            Bipartition::Coloring(side) => {
                let g = cycle(6);
                for (u, v) in g.edges() {
                    assert_ne!(side.contains(u), side.contains(v));
                }
            }
            other => panic!("{other:?}"),
        }
        for n in [3, 5, 7] {
            match cycle(n).bipartition() {
                Bipartition::OddCycle(c) => {
                    assert_eq!(c.len() % 2, 1);
                    let g = cycle(n);
                    for i in 0..c.len() {
                        assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                    }
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn connectivity_helpers() {
        assert!(Graph::null().is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(cycle(7).is_connected());
        assert_eq!(cycle(7).min_degree(), 2);
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        assert!(cycle(3).relabel(&[0, 0, 1]).is_err());
        assert!(cycle(3).relabel(&[0, 1]).is_err());
        assert_eq!(cycle(3).relabel(&[2, 0, 1]).unwrap(), cycle(3));
    }
}
