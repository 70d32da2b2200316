//! Forbidden induced subgraphs, threshold graphs, and cycle / uniform theta
//! recognition.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, low_mask, Bits, VertexSet};
use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_PATTERN_ORDER: usize = 6;

/// A small graph searched for as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Graph,
    degrees: Vec<usize>,
    canon: Vec<u64>,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<Pattern> {
        if graph.order() > MAX_PATTERN_ORDER {
            return Err(Error::PatternTooLarge(graph.order()));
        }
        let mut degrees = graph.degree_sequence();
        degrees.sort_unstable();
        let canon = CanonicalForm::of(&graph).rows;
        Ok(Pattern {
            name: name.into(),
            graph,
            degrees,
            canon,
        })
    }

    fn named(name: &str, n: usize, edges: &[(usize, usize)]) -> Pattern {
        let g = Graph::from_edge_list(n, edges).expect("fixed pattern is simple");
        Pattern::new(name, g).expect("fixed pattern is small")
    }

    pub fn p4() -> Pattern {
        Pattern::named("P4", 4, &[(0, 1), (1, 2), (2, 3)])
    }

    pub fn c4() -> Pattern {
        Pattern::named("C4", 4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    pub fn two_k2() -> Pattern {
        Pattern::named("2K2", 4, &[(0, 1), (2, 3)])
    }

    pub fn claw() -> Pattern {
        Pattern::named("K13", 4, &[(0, 1), (0, 2), (0, 3)])
    }

    /// Looks up `P4`, `C4`, `2K2` or `K13` (also `claw`), case-insensitively.
    pub fn by_name(name: &str) -> Option<Pattern> {
        match name.to_ascii_lowercase().as_str() {
            "p4" => Some(Pattern::p4()),
            "c4" => Some(Pattern::c4()),
            "2k2" => Some(Pattern::two_k2()),
            "k13" | "claw" => Some(Pattern::claw()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// The lexicographically first vertex subset inducing a copy of `p`.
pub fn find_induced(g: &Graph, p: &Pattern) -> Option<VertexSet> {
    let k = p.graph.order();
    if k > g.order() {
        return None;
    }
    if k == 0 {
        return Some(VertexSet::EMPTY);
    }
    let mut s = Subsets {
        adj: g.rows(),
        n: g.order(),
        k,
        edges: p.graph.size(),
        p,
        skip: 0,
        degs: Vec::with_capacity(k),
    };
    s.choose(0, 0, 0).map(VertexSet)
}

/// Whether some induced copy of `p` uses vertex `v`.
pub(crate) fn contains_induced_at(g: &Graph, p: &Pattern, v: usize) -> bool {
    let k = p.graph.order();
    if k == 0 || k > g.order() {
        return false;
    }
    let mut s = Subsets {
        adj: g.rows(),
        n: g.order(),
        k,
        edges: p.graph.size(),
        p,
        skip: bit(v),
        degs: Vec::with_capacity(k),
    };
    s.choose(0, bit(v), 0).is_some()
}

struct Subsets<'a> {
    adj: &'a [u64],
    n: usize,
    k: usize,
    edges: usize,
    p: &'a Pattern,
    skip: u64,
    degs: Vec<usize>,
}

impl Subsets<'_> {
    fn choose(&mut self, from: usize, chosen: u64, edges: usize) -> Option<u64> {
        let have = chosen.count_ones() as usize;
        if edges > self.edges {
            return None;
        }
        if have == self.k {
            return (edges == self.edges && self.matches(chosen)).then_some(chosen);
        }
        for v in from..=self.n - (self.k - have) {
            if self.skip & bit(v) != 0 {
                continue;
            }
            let e = edges + (self.adj[v] & chosen).count_ones() as usize;
            if let Some(found) = self.choose(v + 1, chosen | bit(v), e) {
                return Some(found);
            }
        }
        None
    }

    fn matches(&mut self, s: u64) -> bool {
        self.degs.clear();
        self.degs
            .extend(Bits(s).map(|v| (self.adj[v] & s).count_ones() as usize));
        self.degs.sort_unstable();
        if self.degs != self.p.degrees {
            return false;
        }
        let verts: Vec<usize> = Bits(s).collect();
        let rows = verts
            .iter()
            .map(|&v| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v] & bit(u) != 0)
                    .fold(0u64, |r, (i, _)| r | bit(i))
            })
            .collect();
        CanonicalForm::of(&Graph::from_rows_unchecked(rows)).rows == self.p.canon
    }
}

pub fn contains_induced(g: &Graph, p: &Pattern) -> bool {
    find_induced(g, p).is_some()
}

pub fn is_induced_free(g: &Graph, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|p| !contains_induced(g, p))
}

pub fn is_claw_free(g: &Graph) -> bool {
    // A claw centred at v is an independent triple in N(v).
    (0..g.order()).all(|v| {
        let nb = g.rows()[v];
        Bits(nb).all(|a| {
            let rest = nb & !g.rows()[a] & !low_mask(a + 1);
            Bits(rest).all(|b| rest & !g.rows()[b] & !low_mask(b + 1) == 0)
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Removal {
    Isolated,
    Universal,
}

/// Elimination order of a threshold graph with weights realizing it:
/// `uv` is an edge iff `weights[u] + weights[v] > threshold`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdWitness {
    pub order: Vec<(usize, Removal)>,
    pub weights: Vec<u64>,
    pub threshold: u64,
}

impl ThresholdWitness {
    /// Whether the weights reproduce exactly the edges of `g`.
    pub fn realizes(&self, g: &Graph) -> bool {
        let n = g.order();
        self.weights.len() == n
            && (0..n).all(|u| {
                (u + 1..n).all(|v| (self.weights[u] + self.weights[v] > self.threshold) == g.has_edge(u, v))
            })
    }
}

/// Repeatedly removes the smallest isolated or universal vertex; the graph is
/// threshold iff this empties it.
pub fn threshold_witness(g: &Graph) -> Option<ThresholdWitness> {
    let n = g.order();
    let big = 2 * n as u64;
    let mut alive = g.vertex_set().bits();
    let mut order = Vec::with_capacity(n);
    let mut weights = vec![0u64; n];
    for rank in 1..=n as u64 {
        let rest = |v: usize| alive & !bit(v);
        let pick = Bits(alive).find_map(|v| {
            let nb = g.rows()[v] & alive;
            if nb == 0 {
                Some((v, Removal::Isolated))
            } else if nb == rest(v) {
                Some((v, Removal::Universal))
            } else {
                None
            }
        })?;
        let (v, how) = pick;
        weights[v] = match how {
            Removal::Isolated => rank,
            Removal::Universal => big - rank,
        };
        order.push(pick);
        alive &= !bit(v);
    }
    Some(ThresholdWitness {
        order,
        weights,
        threshold: big,
    })
}

pub fn is_threshold(g: &Graph) -> bool {
    threshold_witness(g).is_some()
}

/// Connected and 2-regular.
pub fn is_cycle_graph(g: &Graph) -> bool {
    g.order() >= 3 && (0..g.order()).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Parameters of a uniform theta graph `θ(a^m)`, `m ≥ 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformTheta {
    pub a: usize,
    pub m: usize,
}

/// Recognizes `θ(a^m)` with `m ≥ 3`: two hubs of degree `m`, all other
/// vertices of degree 2, and every branch from one hub reaches the other
/// after exactly `a` edges.
pub fn uniform_theta_params(g: &Graph) -> Option<UniformTheta> {
    let n = g.order();
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) != 2).collect();
    let [x, y] = hubs[..] else {
        return None;
    };
    let m = g.degree(x);
    if m < 3 || g.degree(y) != m || !g.is_connected() {
        return None;
    }
    let mut a = None;
    for start in Bits(g.rows()[x]) {
        let (mut prev, mut cur, mut len) = (x, start, 1);
        while cur != y {
            if cur == x {
                return None;
            }
            let next = Bits(g.rows()[cur] & !bit(prev)).next()?;
            prev = cur;
            cur = next;
            len += 1;
        }
        match a {
            None => a = Some(len),
            Some(l) if l != len => return None,
            _ => {}
        }
    }
    a.map(|a| UniformTheta { a, m })
}

pub fn is_uniform_theta(g: &Graph) -> bool {
    uniform_theta_params(g).is_some()
}
