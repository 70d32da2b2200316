//! Vertex connectivity by unit-capacity flow, and block decomposition.

use std::collections::VecDeque;

use crate::bits::{bit, Bits};
use crate::graph::Graph;

/// `κ(G)`: 0 for disconnected graphs, `K_0` and `K_1`; `n - 1` for `K_n`.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    if g.size() == n * (n - 1) / 2 {
        return n - 1;
    }
    let mut flow = FlowNet::new(n);
    let mut best = g.min_degree();
    let mut i = 0;
    while i < n && i <= best {
        for j in 0..n {
            if j <= i || g.has_edge(i, j) {
                continue;
            }
            best = best.min(flow.disjoint_paths(g, i, j, best));
            if best == 0 {
                return 0;
            }
        }
        i += 1;
    }
    best
}

/// Whether `κ(G) ≥ k`, which also requires `n ≥ k + 1`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    match k {
        0 => true,
        1 => n >= 2 && g.is_connected(),
        2 => n >= 3 && g.is_connected() && articulation_points(g) == 0,
        _ => {
            if n < k + 1 || g.min_degree() < k {
                return false;
            }
            if g.size() == n * (n - 1) / 2 {
                return true;
            }
            let mut flow = FlowNet::new(n);
            for i in 0..k {
                for j in 0..n {
                    if j <= i || g.has_edge(i, j) {
                        continue;
                    }
                    if flow.disjoint_paths(g, i, j, k) < k {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Max number of internally disjoint `s`-`t` paths, stopping at `cap`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    FlowNet::new(g.order()).disjoint_paths(g, s, t, cap)
}

/// Split-vertex residual network: node `2v` is `v_in`, `2v + 1` is `v_out`.
struct FlowNet {
    nodes: usize,
    cap: Vec<i8>,
    prev: Vec<usize>,
    queue: VecDeque<usize>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        let nodes = 2 * n;
        FlowNet {
            nodes,
            cap: vec![0; nodes * nodes],
            prev: vec![usize::MAX; nodes],
            queue: VecDeque::with_capacity(nodes),
        }
    }

    fn disjoint_paths(&mut self, g: &Graph, s: usize, t: usize, cap: usize) -> usize {
        let m = self.nodes;
        self.cap.iter_mut().for_each(|c| *c = 0);
        for v in 0..g.order() {
            self.cap[(2 * v) * m + 2 * v + 1] = if v == s || v == t { 64 } else { 1 };
            for u in Bits(g.rows()[v]) {
                self.cap[(2 * v + 1) * m + 2 * u] = 1;
            }
        }
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < cap && self.augment(source, sink) {
            flow += 1;
        }
        flow
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let m = self.nodes;
        self.prev.iter_mut().for_each(|p| *p = usize::MAX);
        self.prev[source] = source;
        self.queue.clear();
        self.queue.push_back(source);
        while let Some(x) = self.queue.pop_front() {
            for y in 0..m {
                if self.prev[y] == usize::MAX && self.cap[x * m + y] > 0 {
                    self.prev[y] = x;
                    if y == sink {
                        let mut cur = sink;
                        while cur != source {
                            let p = self.prev[cur];
                            self.cap[p * m + cur] -= 1;
                            self.cap[cur * m + p] += 1;
                            cur = p;
                        }
                        return true;
                    }
                    self.queue.push_back(y);
                }
            }
        }
        false
    }
}

/// Bitmask of cut vertices.
pub fn articulation_points(g: &Graph) -> u64 {
    let mut t = Tarjan::new(g);
    t.run();
    t.cut
}

/// Vertex sets of the blocks (maximal 2-connected subgraphs and bridges);
/// isolated vertices are omitted.
pub fn blocks(g: &Graph) -> Vec<u64> {
    let mut t = Tarjan::new(g);
    t.run();
    t.blocks
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    cut: u64,
    blocks: Vec<u64>,
}

impl<'a> Tarjan<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Tarjan {
            g,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            cut: 0,
            blocks: Vec::new(),
        }
    }

    fn run(&mut self) {
        for v in 0..self.g.order() {
            if self.disc[v] == usize::MAX {
                self.visit(v, usize::MAX);
            }
        }
    }

    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for w in Bits(self.g.rows()[u]) {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent != usize::MAX || children > 1 {
                        self.cut |= bit(u);
                    }
                    let mut block = 0u64;
                    while let Some((a, b)) = self.stack.pop() {
                        block |= bit(a) | bit(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Connected pieces of `within` reachable from `from`.
#[inline]
pub(crate) fn closure(adj: &[u64], from: u64, within: u64) -> u64 {
    let mut seen = from & within;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    #[test]
    fn standard_values() {
        for n in 3..10 {
            assert_eq!(connectivity(&cycle(n)), 2);
        }
        assert_eq!(connectivity(&complete(5)), 4);
        assert_eq!(connectivity(&complete(1)), 0);
        assert_eq!(connectivity(&Graph::null()), 0);
        assert_eq!(connectivity(&Graph::empty(3)), 0);
        let path = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(connectivity(&path), 1);
    }

    #[test]
    fn k_connected_agrees_with_connectivity() {
        let graphs = [cycle(5), complete(4), complete(6), cycle(3).disjoint_union(&cycle(3))];
        for g in &graphs {
            let k = connectivity(g);
            for t in 0..7 {
                assert_eq!(is_k_connected(g, t), t <= k && g.order() > t, "{g:?} t={t}");
            }
        }
    }

    #[test]
    fn blocks_of_bowtie() {
        // two triangles sharing vertex 2, plus a pendant edge 4-5
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)])
            .unwrap();
        let mut b = blocks(&g);
        b.sort_unstable();
        assert_eq!(b, vec![0b000111, 0b011100, 0b110000]);
        assert_eq!(articulation_points(&g), bit(2) | bit(4));
    }
}
