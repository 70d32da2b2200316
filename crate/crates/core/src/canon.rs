//! Canonical labelling by colour refinement and individualisation.
//!
//! The search tree individualises vertices of the first non-singleton cell of
//! an equitable ordered partition. Every leaf is a vertex ordering; the
//! canonical form is the ordering whose relabelled adjacency rows are
//! lexicographically largest. Leaves that reproduce the first or the best
//! leaf graph yield automorphisms, which prune siblings in the same orbit of
//! the pointwise stabiliser of the current prefix and trigger a jump back to
//! the common ancestor.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, low_mask, Bits};
use crate::graph::Graph;

/// Exact isomorphism certificate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Certificate {
    /// Order byte followed by the canonically relabelled adjacency rows,
    /// each packed little-endian into `ceil(n / 8)` bytes.
    pub canon: Vec<u8>,
    /// `relabeling[v]` is the canonical position of vertex `v`.
    pub relabeling: Vec<usize>,
}

impl Certificate {
    /// The canonically relabelled graph.
    pub fn graph(&self) -> Graph {
        let n = self.canon[0] as usize;
        let width = n.div_ceil(8);
        let rows = (0..n)
            .map(|i| {
                let chunk = &self.canon[1 + i * width..1 + (i + 1) * width];
                chunk
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (k, &b)| acc | (u64::from(b) << (8 * k)))
            })
            .collect();
        Graph::from_rows_unchecked(rows)
    }
}

pub fn canonical(g: &Graph) -> Certificate {
    let form = CanonicalForm::of(g);
    Certificate {
        canon: pack_rows(&form.rows),
        relabeling: form.lab.iter().map(|&p| p as usize).collect(),
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    CanonicalForm::of(g).rows == CanonicalForm::of(h).rows
}

pub(crate) fn pack_rows(rows: &[u64]) -> Vec<u8> {
    let n = rows.len();
    let width = n.div_ceil(8);
    let mut out = Vec::with_capacity(1 + n * width);
    out.push(n as u8);
    for &r in rows {
        out.extend_from_slice(&r.to_le_bytes()[..width]);
    }
    out
}

/// Canonical adjacency rows plus the labelling that produced them.
#[derive(Clone, Debug)]
pub(crate) struct CanonicalForm {
    pub rows: Vec<u64>,
    /// `lab[v]` is the canonical position of `v`.
    pub lab: Vec<u8>,
}

impl CanonicalForm {
    pub fn of(g: &Graph) -> CanonicalForm {
        let n = g.order();
        if n <= 1 {
            return CanonicalForm {
                rows: g.rows().to_vec(),
                lab: vec![0; n],
            };
        }
        let mut s = Search {
            adj: g.rows(),
            n,
            first: None,
            best: None,
            auts: Vec::new(),
        };
        let mut path = Vec::with_capacity(n);
        s.descend(vec![low_mask(n)], &mut path);
        let best = s.best.expect("search reaches at least one leaf");
        CanonicalForm {
            rows: best.rows,
            lab: best.lab,
        }
    }
}

struct Leaf {
    rows: Vec<u64>,
    lab: Vec<u8>,
    path: Vec<u8>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms found so far, as vertex maps.
    auts: Vec<Vec<u8>>,
}

const MAX_STORED_AUTS: usize = 128;

impl Search<'_> {
    /// Returns `Some(depth)` to abandon every node deeper than `depth`.
    fn descend(&mut self, mut cells: Vec<u64>, path: &mut Vec<u8>) -> Option<usize> {
        refine(self.adj, &mut cells, self.n);
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let t = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let target = cells[t];
        let mut explored = 0u64;
        for v in Bits(target) {
            if explored != 0 && self.orbit_hits(v, explored, path) {
                continue;
            }
            explored |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[t + 1..]);
            path.push(v as u8);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(depth) = jump {
                if path.len() > depth {
                    return Some(depth);
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with an explored sibling under the stored
    /// automorphisms that fix `path` pointwise.
    fn orbit_hits(&self, v: usize, explored: u64, path: &[u8]) -> bool {
        let fixing: Vec<&Vec<u8>> = self
            .auts
            .iter()
            .filter(|a| path.iter().all(|&p| a[p as usize] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut orbit = bit(v);
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for x in Bits(frontier) {
                for a in &fixing {
                    next |= bit(a[x] as usize);
                }
            }
            next &= !orbit;
            if next & explored != 0 {
                return true;
            }
            orbit |= next;
            frontier = next;
        }
        false
    }

    fn leaf(&mut self, cells: &[u64], path: &[u8]) -> Option<usize> {
        let n = self.n;
        let mut lab = vec![0u8; n];
        for (pos, &c) in cells.iter().enumerate() {
            lab[c.trailing_zeros() as usize] = pos as u8;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            let mut r = 0u64;
            for u in Bits(self.adj[v]) {
                r |= bit(lab[u] as usize);
            }
            rows[lab[v] as usize] = r;
        }
        let Some(first) = &self.first else {
            let leaf = Leaf {
                rows,
                lab,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                rows: leaf.rows.clone(),
                lab: leaf.lab.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if rows == first.rows {
            let depth = common_prefix(path, &first.path);
            let aut = automorphism(&lab, &first.lab);
            self.record(aut);
            return Some(depth);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let depth = common_prefix(path, &best.path);
                let aut = automorphism(&lab, &best.lab);
                self.record(aut);
                Some(depth)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf {
                    rows,
                    lab,
                    path: path.to_vec(),
                });
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }

    fn record(&mut self, aut: Vec<u8>) {
        if self.auts.len() < MAX_STORED_AUTS {
            self.auts.push(aut);
        }
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The map sending each vertex at position `p` of the reference leaf to the
/// vertex at position `p` of the current leaf.
fn automorphism(lab: &[u8], reference_lab: &[u8]) -> Vec<u8> {
    let n = lab.len();
    let mut at = vec![0u8; n];
    for (v, &p) in lab.iter().enumerate() {
        at[p as usize] = v as u8;
    }
    (0..n).map(|v| at[reference_lab[v] as usize]).collect()
}

/// Refines an ordered partition to the coarsest equitable refinement reachable
/// by repeatedly splitting every cell on neighbour counts into every cell.
/// Sub-cells are ordered by their count signature, so the result is
/// equivariant under relabelling.
pub(crate) fn refine(adj: &[u64], cells: &mut Vec<u64>, n: usize) {
    let mut keyed: Vec<(u64, u8)> = Vec::with_capacity(n);
    loop {
        if cells.len() == n {
            return;
        }
        let before = cells.len();
        let mut out = Vec::with_capacity(n);
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                out.push(cell);
                continue;
            }
            keyed.clear();
            for v in Bits(cell) {
                let row = adj[v];
                let mut h = 0xcbf2_9ce4_8422_2325u64;
                for &c in cells.iter() {
                    h = (h ^ u64::from((row & c).count_ones())).wrapping_mul(0x0100_0000_01b3);
                }
                keyed.push((h, v as u8));
            }
            keyed.sort_unstable();
            let mut mask = 0u64;
            let mut key = keyed[0].0;
            for &(h, v) in &keyed {
                if h != key {
                    out.push(mask);
                    mask = 0;
                    key = h;
                }
                mask |= bit(v as usize);
            }
            out.push(mask);
        }
        *cells = out;
        if cells.len() == before {
            return;
        }
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
    fn relabelled_cycle_is_isomorphic() {
        let c5 = cycle(5);
        let h = c5.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert!(is_isomorphic(&c5, &h));
        assert_eq!(canonical(&c5).canon, canonical(&h).canon);
    }

    #[test]
    fn c6_is_not_two_triangles() {
        let two_k3 = cycle(3).disjoint_union(&cycle(3));
        assert!(!is_isomorphic(&cycle(6), &two_k3));
        assert_ne!(canonical(&cycle(6)).canon, canonical(&two_k3).canon);
    }

    #[test]
    fn relabeling_reproduces_canonical_graph() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let cert = canonical(&g);
        assert_eq!(g.relabel(&cert.relabeling).unwrap(), cert.graph());
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(canonical(&Graph::null()).canon, vec![0]);
        assert_eq!(canonical(&Graph::empty(1)).canon, vec![1, 0]);
    }

    #[test]
    fn vertex_transitive_graphs() {
        let k = Graph::empty(1).complement();
        let mut k10 = k.clone();
        for _ in 1..10 {
            k10 = k10.join(&k);
        }
        let h = k10.relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        assert!(is_isomorphic(&k10, &h));
        let petersen = Graph::from_edge_list(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let p2 = petersen.relabel(&[4, 2, 0, 8, 6, 1, 3, 5, 7, 9]).unwrap();
        assert!(is_isomorphic(&petersen, &p2));
    }
}
