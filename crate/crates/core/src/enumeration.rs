//! Isomorph-free generation of graphs by canonical augmentation.
//!
//! Every graph of order `l + 1` is produced from its canonical parent, the
//! graph left after deleting a distinguished vertex `w`. `w` is the vertex
//! with the highest canonical position among those maximizing a cheap
//! invariant key (degree, neighbour degree sum, triangles). A child `P + v`
//! survives iff `v` attains the maximal key and deleting `w` gives back `P`;
//! isomorphic siblings are then removed by certificate. Graphs are emitted
//! in their canonical labelling.
//!
//! Hereditary filters (bipartite, girth, forbidden induced subgraphs, edge
//! cap) prune every level; the others are applied at the leaves only.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, Bits};
use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::is_k_connected;
use crate::recognition::{contains_induced_at, Pattern};

/// Largest order the enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 13;
/// Above this order a bipartite or girth ≥ 6 filter is required.
pub const UNFILTERED_LIMIT: usize = 11;

/// Order and filters of a graph universe.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniverseSpec {
    pub n: usize,
    #[serde(default)]
    pub connected: bool,
    /// Minimum vertex connectivity.
    #[serde(default)]
    pub min_connectivity: Option<usize>,
    #[serde(default)]
    pub bipartite: bool,
    #[serde(default)]
    pub min_girth: Option<usize>,
    /// Pattern names (`P4`, `C4`, `2K2`, `K13`).
    #[serde(default)]
    pub induced_free: Vec<String>,
    #[serde(default)]
    pub min_degree: Option<usize>,
    #[serde(default)]
    pub max_edges: Option<usize>,
}

impl UniverseSpec {
    pub fn new(n: usize) -> Self {
        UniverseSpec {
            n,
            ..UniverseSpec::default()
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn k_connected(mut self, k: usize) -> Self {
        self.min_connectivity = Some(k);
        self
    }

    pub fn bipartite(mut self) -> Self {
        self.bipartite = true;
        self
    }

    pub fn girth_at_least(mut self, g: usize) -> Self {
        self.min_girth = Some(g);
        self
    }

    pub fn induced_free(mut self, names: &[&str]) -> Self {
        self.induced_free = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = Some(d);
        self
    }

    pub fn max_edges(mut self, m: usize) -> Self {
        self.max_edges = Some(m);
        self
    }

    fn patterns(&self) -> Result<Vec<Pattern>> {
        self.induced_free
            .iter()
            .map(|name| {
                Pattern::by_name(name)
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown pattern {name:?}")))
            })
            .collect()
    }

    /// Rejects universes beyond the size guard.
    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_ENUMERATION_ORDER {
            return Err(Error::UniverseTooLarge(format!(
                "order {} exceeds the enumeration cap {MAX_ENUMERATION_ORDER}",
                self.n
            )));
        }
        let sparse = self.bipartite || self.min_girth.is_some_and(|g| g >= 6);
        if self.n > UNFILTERED_LIMIT && !sparse {
            return Err(Error::UniverseTooLarge(format!(
                "order {} needs a bipartite or girth >= 6 filter",
                self.n
            )));
        }
        self.patterns().map(|_| ())
    }

    /// Whether `g` passes every filter; independent of the generator.
    pub fn accepts(&self, g: &Graph) -> bool {
        let Ok(patterns) = self.patterns() else {
            return false;
        };
        g.order() == self.n
            && self.leaf_ok(g)
            && (!self.bipartite || g.is_bipartite())
            && self
                .min_girth
                .is_none_or(|k| crate::invariants::girth(g).is_none_or(|x| x >= k))
            && self.max_edges.is_none_or(|m| g.size() <= m)
            && crate::recognition::is_induced_free(g, &patterns)
    }

    fn leaf_ok(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && self.min_degree.is_none_or(|d| g.order() == 0 || g.min_degree() >= d)
            && self.min_connectivity.is_none_or(|k| is_k_connected(g, k))
    }

    fn split_level(&self) -> usize {
        if self.n <= 3 {
            self.n
        } else {
            self.n - 2
        }
    }
}

/// All graphs of `spec`, one per isomorphism class.
pub fn enumerate(spec: &UniverseSpec) -> Result<Enumeration> {
    shard(spec, 0, 1)
}

/// The `index`-th of `count` disjoint parts of [`enumerate`]`(spec)`. Nodes
/// of the augmentation tree at order `n − 2` are dealt round-robin.
pub fn shard(spec: &UniverseSpec, index: usize, count: usize) -> Result<Enumeration> {
    if count == 0 || index >= count {
        return Err(Error::InvalidParameter(format!("shard {index}/{count}")));
    }
    spec.validate()?;
    let patterns = spec.patterns()?;
    let mut e = Enumeration {
        ctx: Ctx {
            spec: spec.clone(),
            patterns,
        },
        stack: Vec::new(),
        pending: None,
        split: spec.split_level(),
        index,
        count,
        at_split: 0,
    };
    let root = if spec.n == 0 { Vec::new() } else { vec![0u64] };
    let g = Graph::from_rows_unchecked(root.clone());
    if e.ctx.hereditary_ok(&g) && (g.order() < spec.n || spec.leaf_ok(&g)) {
        e.pending = e.admit(root);
    }
    Ok(e)
}

pub fn count(spec: &UniverseSpec) -> Result<usize> {
    Ok(enumerate(spec)?.count())
}

struct Ctx {
    spec: UniverseSpec,
    patterns: Vec<Pattern>,
}

impl Ctx {
    /// Full hereditary check, used only for the root.
    fn hereditary_ok(&self, g: &Graph) -> bool {
        (!self.spec.bipartite || g.is_bipartite())
            && self.spec.max_edges.is_none_or(|m| g.size() <= m)
            && crate::recognition::is_induced_free(g, &self.patterns)
    }
}

struct Frame {
    rows: Vec<u64>,
    size: usize,
    next: u64,
    end: u64,
    /// `near[a]`: vertices other than `a` too close to `a` for both to join
    /// a new vertex under the girth bound.
    near: Vec<u64>,
    seen: HashSet<Vec<u64>>,
}

impl Frame {
    fn new(rows: Vec<u64>, spec: &UniverseSpec) -> Frame {
        let l = rows.len();
        let size = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        let reach = spec.min_girth.map_or(0, |g| g.saturating_sub(3));
        let near = (0..l)
            .map(|a| {
                let mut ball = bit(a);
                let mut frontier = bit(a);
                for _ in 0..reach {
                    let mut next = 0;
                    for u in Bits(frontier) {
                        next |= rows[u];
                    }
                    frontier = next & !ball;
                    ball |= next;
                }
                ball & !bit(a)
            })
            .collect();
        Frame {
            rows,
            size,
            next: 0,
            end: 1u64 << l,
            near,
            seen: HashSet::new(),
        }
    }
}

/// Streaming enumeration; see [`enumerate`] and [`shard`].
pub struct Enumeration {
    ctx: Ctx,
    stack: Vec<Frame>,
    pending: Option<Graph>,
    split: usize,
    index: usize,
    count: usize,
    at_split: usize,
}

impl Enumeration {
    /// Routes an accepted canonical node: deals it to a shard at the split
    /// level, then emits it as a leaf or pushes it for expansion.
    fn admit(&mut self, rows: Vec<u64>) -> Option<Graph> {
        let level = rows.len();
        if level == self.split {
            let mine = self.at_split % self.count == self.index;
            self.at_split += 1;
            if !mine {
                return None;
            }
        }
        if level == self.ctx.spec.n {
            Some(Graph::from_rows_unchecked(rows))
        } else {
            self.stack.push(Frame::new(rows, &self.ctx.spec));
            None
        }
    }
}

impl Iterator for Enumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.pending.take() {
            return Some(g);
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next == top.end {
                self.stack.pop();
                continue;
            }
            let s = top.next;
            top.next += 1;
            if let Some(rows) = child(&self.ctx, top, s) {
                if let Some(g) = self.admit(rows) {
                    return Some(g);
                }
            }
        }
    }
}

/// Invariant key used to pick the deletion vertex.
fn keys(rows: &[u64], out: &mut Vec<u64>) {
    out.clear();
    for &r in rows {
        let deg = u64::from(r.count_ones());
        let mut nsum = 0u64;
        let mut tri = 0u64;
        for x in Bits(r) {
            nsum += u64::from(rows[x].count_ones());
            tri += u64::from((rows[x] & r).count_ones());
        }
        out.push((deg << 40) | (nsum << 20) | tri);
    }
}

/// The canonical child `parent + v` with `N(v) = s`, if it is the one kept.
fn child(ctx: &Ctx, parent: &mut Frame, s: u64) -> Option<Vec<u64>> {
    let spec = &ctx.spec;
    let v = parent.rows.len();
    if spec.max_edges.is_some_and(|m| parent.size + s.count_ones() as usize > m) {
        return None;
    }
    if spec.min_girth.is_some() && Bits(s).any(|a| s & parent.near[a] != 0) {
        return None;
    }
    let mut rows = Vec::with_capacity(v + 1);
    rows.extend(
        parent
            .rows
            .iter()
            .enumerate()
            .map(|(u, &r)| if s & bit(u) != 0 { r | bit(v) } else { r }),
    );
    rows.push(s);
    let mut key = Vec::with_capacity(v + 1);
    keys(&rows, &mut key);
    let top = *key.iter().max().expect("child has a vertex");
    if key[v] != top {
        return None;
    }
    let g = Graph::from_rows_unchecked(rows);
    if spec.bipartite && !g.is_bipartite() {
        return None;
    }
    if ctx.patterns.iter().any(|p| contains_induced_at(&g, p, v)) {
        return None;
    }
    if v + 1 == spec.n && !spec.leaf_ok(&g) {
        return None;
    }
    let form = CanonicalForm::of(&g);
    let w = (0..=v)
        .filter(|&u| key[u] == top)
        .max_by_key(|&u| form.lab[u])
        .expect("v attains the key");
    if w != v {
        let h = g.delete_vertex(w).expect("w is a vertex");
        if CanonicalForm::of(&h).rows != parent.rows {
            return None;
        }
    }
    if !parent.seen.insert(form.rows.clone()) {
        return None;
    }
    Some(form.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_unfiltered_counts() {
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(count(&UniverseSpec::new(n)).unwrap(), want, "n={n}");
        }
    }

    #[test]
    fn filtered_counts() {
        assert_eq!(count(&UniverseSpec::new(4).connected()).unwrap(), 6);
        assert_eq!(count(&UniverseSpec::new(3).girth_at_least(4)).unwrap(), 3);
        assert_eq!(count(&UniverseSpec::new(5).k_connected(2)).unwrap(), 10);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(enumerate(&UniverseSpec::new(14)), Err(Error::UniverseTooLarge(_))));
        assert!(matches!(enumerate(&UniverseSpec::new(12)), Err(Error::UniverseTooLarge(_))));
        assert!(enumerate(&UniverseSpec::new(12).bipartite()).is_ok());
        assert!(enumerate(&UniverseSpec::new(12).girth_at_least(6)).is_ok());
        assert!(matches!(shard(&UniverseSpec::new(5), 2, 2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn shards_partition() {
        let spec = UniverseSpec::new(6);
        let all: Vec<Graph> = enumerate(&spec).unwrap().collect();
        let mut union: Vec<Graph> = (0..4).flat_map(|i| shard(&spec, i, 4).unwrap()).collect();
        assert_eq!(union.len(), all.len());
        union.sort();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(union, sorted);
    }
}
