//! Slow reference implementations used to cross-check the fast engines.
//!
//! Nothing here shares code with `longcycle-core`: graphs are boolean
//! adjacency matrices and every quantity is computed by plain exhaustive
//! search.

use rand::Rng;

/// Simple graph as a symmetric boolean matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<Vec<bool>>,
}

impl Mat {
    pub fn new(n: usize) -> Mat {
        Mat {
            n,
            a: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Mat {
        let mut m = Mat::new(n);
        for &(u, v) in edges {
            m.a[u][v] = true;
            m.a[v][u] = true;
        }
        m
    }

    /// Graph whose upper-triangle pairs `(i, j)`, `i < j` in column-major
    /// order, are present according to the bits of `code`.
    pub fn from_code(n: usize, code: u64) -> Mat {
        let mut m = Mat::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if code >> k & 1 == 1 {
                    m.a[i][j] = true;
                    m.a[j][i] = true;
                }
                k += 1;
            }
        }
        m
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.a[i][j] {
                    e.push((i, j));
                }
            }
        }
        e
    }

    pub fn degree(&self, v: usize) -> usize {
        self.a[v].iter().filter(|&&b| b).count()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&vec![false; self.n])
    }

    fn is_connected_without(&self, removed: &[bool]) -> bool {
        let Some(start) = (0..self.n).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for (w, s) in seen.iter_mut().enumerate() {
                if self.a[u][w] && !*s {
                    *s = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Longest cycles and paths by enumerating every simple cycle and path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongestStats {
    pub circumference: usize,
    /// Vertices on some longest cycle.
    pub cycle_cover: Vec<bool>,
    /// Distinct longest cycles (as subgraphs).
    pub cycle_count: usize,
    pub girth: Option<usize>,
    /// Vertex count of a longest path.
    pub detour_order: usize,
    pub path_cover: Vec<bool>,
    /// Distinct longest paths (a path equals its reverse).
    pub path_count: usize,
}

pub fn longest_stats(g: &Mat) -> LongestStats {
    let n = g.n;
    let mut st = LongestStats {
        circumference: 0,
        cycle_cover: vec![false; n],
        cycle_count: 0,
        girth: None,
        detour_order: 0,
        path_cover: vec![false; n],
        path_count: 0,
    };
    // Every cycle is found twice from its smallest vertex (once per direction);
    // every path of two or more vertices twice (once from each end).
    let mut path = Vec::new();
    let mut on = vec![false; n];
    for s in 0..n {
        path.push(s);
        on[s] = true;
        walk(g, s, &mut path, &mut on, &mut st);
        on[s] = false;
        path.pop();
    }
    st.cycle_count /= 2;
    if st.detour_order >= 2 {
        st.path_count /= 2;
    }
    st
}

fn walk(g: &Mat, s: usize, path: &mut Vec<usize>, on: &mut [bool], st: &mut LongestStats) {
    let len = path.len();
    let cur = *path.last().unwrap();
    record_path(path, st);
    if len >= 3 && g.a[cur][s] && path.iter().all(|&v| v >= s) {
        record_cycle(path, st);
    }
    for w in 0..g.n {
        if g.a[cur][w] && !on[w] {
            on[w] = true;
            path.push(w);
            walk(g, s, path, on, st);
            path.pop();
            on[w] = false;
        }
    }
}

fn record_path(path: &[usize], st: &mut LongestStats) {
    let len = path.len();
    if len > st.detour_order {
        st.detour_order = len;
        st.path_cover.iter_mut().for_each(|b| *b = false);
        st.path_count = 0;
    }
    if len == st.detour_order {
        for &v in path {
            st.path_cover[v] = true;
        }
        st.path_count += 1;
    }
}

fn record_cycle(path: &[usize], st: &mut LongestStats) {
    let len = path.len();
    st.girth = Some(st.girth.map_or(len, |g| g.min(len)));
    if len > st.circumference {
        st.circumference = len;
        st.cycle_cover.iter_mut().for_each(|b| *b = false);
        st.cycle_count = 0;
    }
    if len == st.circumference {
        for &v in path {
            st.cycle_cover[v] = true;
        }
        st.cycle_count += 1;
    }
}

/// Vertex connectivity as the size of a smallest separating set, trying
/// every subset; `n - 1` for complete graphs and 0 for disconnected ones.
pub fn connectivity(g: &Mat) -> usize {
    let n = g.n;
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    for k in 1..n.saturating_sub(1) {
        let mut removed = vec![false; n];
        if separates(g, k, 0, &mut removed) {
            return k;
        }
    }
    n - 1
}

fn separates(g: &Mat, k: usize, from: usize, removed: &mut [bool]) -> bool {
    if k == 0 {
        return !g.is_connected_without(removed);
    }
    for v in from..g.n {
        removed[v] = true;
        let hit = separates(g, k - 1, v + 1, removed);
        removed[v] = false;
        if hit {
            return true;
        }
    }
    false
}

/// Isomorphism by backtracking over degree-preserving vertex maps.
pub fn isomorphic(g: &Mat, h: &Mat) -> bool {
    if g.n != h.n || g.edges().len() != h.edges().len() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n).map(|v| h.degree(v)).collect();
    let (dg0, dh0) = (dg.clone(), dh.clone());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![usize::MAX; g.n];
    let mut used = vec![false; g.n];
    extend(g, h, &dg0, &dh0, 0, &mut map, &mut used)
}

fn extend(
    g: &Mat,
    h: &Mat,
    dg: &[usize],
    dh: &[usize],
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == g.n {
        return true;
    }
    for x in 0..h.n {
        if used[x] || dg[v] != dh[x] {
            continue;
        }
        if (0..v).any(|u| g.a[u][v] != h.a[map[u]][x]) {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if extend(g, h, dg, dh, v + 1, map, used) {
            return true;
        }
        used[x] = false;
    }
    map[v] = usize::MAX;
    false
}

/// One representative per isomorphism class among all labelled graphs on
/// `n` vertices that satisfy `keep`, found by pairwise isomorphism tests
/// within buckets of a simple invariant.
pub fn classes(n: usize, keep: impl Fn(&Mat) -> bool) -> Vec<Mat> {
    use std::collections::HashMap;
    let pairs = n * n.saturating_sub(1) / 2;
    let mut buckets: HashMap<Vec<(usize, usize)>, Vec<Mat>> = HashMap::new();
    let mut order = Vec::new();
    for code in 0..1u64 << pairs {
        let g = Mat::from_code(n, code);
        if !keep(&g) {
            continue;
        }
        let key = invariant(&g);
        let bucket = buckets.entry(key.clone()).or_default();
        if bucket.iter().any(|r| isomorphic(r, &g)) {
            continue;
        }
        bucket.push(g);
        order.push((key, bucket.len() - 1));
    }
    order
        .into_iter()
        .map(|(k, i)| buckets[&k][i].clone())
        .collect()
}

/// Sorted (degree, triangles-at-vertex) pairs.
fn invariant(g: &Mat) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = (0..g.n)
        .map(|x| {
            let mut t = 0;
            for y in 0..g.n {
                for z in y + 1..g.n {
                    if g.a[x][y] && g.a[x][z] && g.a[y][z] {
                        t += 1;
                    }
                }
            }
            (g.degree(x), t)
        })
        .collect();
    v.sort_unstable();
    v
}

/// Reference graph6 encoder for orders below 63.
pub fn graph6(g: &Mat) -> String {
    assert!(g.n < 63);
    let mut bits = Vec::new();
    for j in 1..g.n {
        for i in 0..j {
            bits.push(g.a[i][j]);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((g.n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8);
        s.push((v + 63) as char);
    }
    s
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Mat {
    let mut m = Mat::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                m.a[i][j] = true;
                m.a[j][i] = true;
            }
        }
    }
    m
}

/// Whether the vertex set `s` leaves no edge outside it.
pub fn dominating(g: &Mat, s: &[bool]) -> bool {
    (0..g.n).all(|u| s[u] || (0..g.n).all(|v| s[v] || !g.a[u][v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let k4 = Mat::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let s = longest_stats(&k4);
        assert_eq!(s.circumference, 4);
        assert_eq!(s.cycle_count, 3);
        assert_eq!(s.girth, Some(3));
        assert_eq!(connectivity(&k4), 3);
        let star = Mat::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let s = longest_stats(&star);
        assert_eq!(s.detour_order, 3);
        assert!(s.path_cover.iter().all(|&b| b));
        assert_eq!(s.path_count, 3);
        assert_eq!(graph6(&Mat::from_edges(3, &[(0, 1), (0, 2), (1, 2)])), "Bw");
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| classes(n, |_| true).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }
}
