//! Named graph families with the invariant values they are known to have.
//!
//! Labelling is deterministic. Joins put the left operand first. Theta graphs
//! have hubs 0 and 1 with branch interiors appended in the given order. The
//! bipartite family puts its 8-cycle on 0..=7 and appends the attached
//! vertices.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{self, InvariantProfile};
use crate::recognition::{self, Pattern};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).expect("path edges are valid")
}

/// `qK_2`: vertices `2i` and `2i + 1` are matched.
pub fn matching(q: usize) -> Graph {
    let edges: Vec<_> = (0..q).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edge_list(2 * q, &edges).expect("matching edges are valid")
}

pub fn star(leaves: usize) -> Graph {
    Graph::empty(1).join(&Graph::empty(leaves))
}

pub fn petersen() -> Graph {
    Graph::from_edge_list(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .expect("Petersen edges are valid")
}

fn fits(n: usize) -> Result<()> {
    if n > crate::MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    Ok(())
}

/// `kK_1 ∨ (qK_2 + mK_1)`: the `k` hubs come first, then the matching, then
/// the isolated part.
pub fn mixed_join(k: usize, q: usize, m: usize) -> Result<Graph> {
    let n = k + 2 * q + m;
    if n == 0 {
        return Err(invalid("mixed join needs at least one vertex"));
    }
    fits(n)?;
    Ok(Graph::empty(k).join(&matching(q).disjoint_union(&Graph::empty(m))))
}

/// The sharp example for the cummerbund bound under a `k`-connectivity
/// hypothesis: `kK_1 ∨ (kK_2 + (n−3k)K_1)`, for `n > 3k`.
pub fn extremal_cc(k: usize, n: usize) -> Result<Graph> {
    if k == 0 || n <= 3 * k {
        return Err(invalid(format!("need k ≥ 1 and n > 3k, got k={k}, n={n}")));
    }
    mixed_join(k, k, n - 3 * k)
}

/// The sharp example for the detour bound: `kK_1 ∨ ((k+1)K_2 + (n−3k−2)K_1)`,
/// for `n > 3k + 2`.
pub fn extremal_dc(k: usize, n: usize) -> Result<Graph> {
    if k == 0 || n <= 3 * k + 2 {
        return Err(invalid(format!("need k ≥ 1 and n > 3k+2, got k={k}, n={n}")));
    }
    mixed_join(k, k + 1, n - 3 * k - 2)
}

/// 2-connected, minimum degree `⌈n/3⌉ − 1`, not cummerbund covered (`n ≥ 9`).
pub fn uncovered_cc(n: usize) -> Result<Graph> {
    if n < 9 {
        return Err(invalid(format!("need n ≥ 9, got {n}")));
    }
    let k = n / 3;
    match n % 3 {
        0 => mixed_join(k - 1, k - 1, 3),
        1 => mixed_join(k, k, 1),
        _ => mixed_join(k, k, 2),
    }
}

/// Connected, minimum degree `⌈(n−2)/3⌉ − 1`, not detour covered (`n ≥ 6`).
pub fn uncovered_dc(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(invalid(format!("need n ≥ 6, got {n}")));
    }
    let k = n / 3;
    match n % 3 {
        0 => mixed_join(k - 1, k, 1),
        1 => mixed_join(k - 1, k, 2),
        _ => mixed_join(k - 1, k, 3),
    }
}

/// `K_2 ∨ (aK_1 + bK_2)` for `a ≥ 1`, `b ≥ 3`: induced-{P4, C4}-free yet
/// covered in neither sense.
pub fn uncovered_cograph(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 3 {
        return Err(invalid(format!("need a ≥ 1 and b ≥ 3, got a={a}, b={b}")));
    }
    fits(a + 2 * b + 2)?;
    Ok(complete(2).join(&Graph::empty(a).disjoint_union(&matching(b))))
}

/// Two hubs joined by internally disjoint paths with the given edge counts.
pub fn theta(lengths: &[usize]) -> Result<Graph> {
    if lengths.len() < 2 {
        return Err(invalid("a theta graph needs at least two paths"));
    }
    if lengths.contains(&0) {
        return Err(invalid("path lengths must be positive"));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::NotSimple("more than one path of length 1".into()));
    }
    if lengths.iter().filter(|&&l| l >= 2).count() < 2 {
        return Err(invalid("at least two paths must have length ≥ 2"));
    }
    let n = 2 + lengths.iter().map(|l| l - 1).sum::<usize>();
    fits(n)?;
    let mut edges = Vec::with_capacity(n + lengths.len());
    let mut next = 2;
    for &l in lengths {
        let mut prev = 0;
        for _ in 1..l {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::from_edge_list(n, &edges)
}

/// `θ(a^m)`.
pub fn uniform_theta(a: usize, m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(invalid("a theta graph needs at least two paths"));
    }
    if a < 2 {
        return Err(Error::NotSimple(format!("θ(1^{m}) has parallel edges")));
    }
    theta(&vec![a; m])
}

/// 2-connected graphs of order `n` and girth `girth` with the smallest
/// possible cummerbund covering number for that girth: 6 for girth 4
/// (`n ≥ 8`), 8 for girth 5 (`n ≥ 10`), and for girth 6 either 8 (even
/// `n ≥ 12`) or 9 (odd `n ≥ 13`).
pub fn girth_extremal(girth: usize, n: usize) -> Result<Graph> {
    let threes = |base: usize| vec![3; (n - base) / 2];
    let bad = || invalid(format!("no girth-{girth} construction for n={n}"));
    match girth {
        4 if n >= 8 => {
            let mut l = vec![3, 3];
            l.extend(vec![2; n - 6]);
            theta(&l)
        }
        5 if n >= 11 && n % 2 == 1 => {
            let mut l = vec![4, 4];
            l.extend(threes(9));
            l.push(2);
            theta(&l)
        }
        5 if n >= 10 && n.is_multiple_of(2) => {
            // θ(4,4,3,...,3,2) of order n−1 with branch 0-2-3-4-1; the edge
            // 0-4 is added and then subdivided by the new vertex.
            let mut l = vec![4, 4];
            l.extend(threes(10));
            l.push(2);
            let t = theta(&l)?;
            t.with_edge(0, 4)?.subdivide_edge(0, 4)
        }
        6 if n >= 12 && n.is_multiple_of(2) => {
            let mut l = vec![4, 4];
            l.extend(threes(8));
            theta(&l)
        }
        6 if n >= 13 && n % 2 == 1 => {
            let mut l = vec![5, 4];
            l.extend(threes(9));
            theta(&l)
        }
        _ => Err(bad()),
    }
}

/// The cummerbund covering number of [`girth_extremal`]`(girth, n)`.
pub fn girth_extremal_cc(girth: usize, n: usize) -> Option<usize> {
    match girth {
        4 if n >= 8 => Some(6),
        5 if n >= 10 => Some(8),
        6 if n >= 12 && n.is_multiple_of(2) => Some(8),
        6 if n >= 13 => Some(9),
        _ => None,
    }
}

/// Chords of the 8-cycle `0..=7` for members 1 to 7 of the bipartite family.
const CHORDS: [&[(usize, usize)]; 7] = [
    &[],
    &[(0, 3)],
    &[(0, 3), (0, 5)],
    &[(0, 3), (1, 4)],
    &[(0, 3), (4, 7)],
    &[(0, 3), (0, 5), (1, 4)],
    &[(0, 3), (0, 5), (1, 4), (4, 7)],
];

/// Member `i` (1 to 7) of the 2-connected bipartite graphs of order `n ≥ 9`
/// with cummerbund covering number 8: an 8-cycle with chords plus `n − 8`
/// independent vertices each adjacent to cycle vertices 0 and 4.
pub fn bipartite_family(i: usize, n: usize) -> Result<Graph> {
    bipartite_family_attached(i, n, (0, 4))
}

/// As [`bipartite_family`] but attaching the extra vertices to cycle vertices
/// 3 and 7, the other antipodal pair allowed by the chord structure.
pub fn bipartite_family_alt(i: usize, n: usize) -> Result<Graph> {
    bipartite_family_attached(i, n, (3, 7))
}

fn bipartite_family_attached(i: usize, n: usize, at: (usize, usize)) -> Result<Graph> {
    if !(1..=7).contains(&i) || n < 9 {
        return Err(invalid(format!("need 1 ≤ i ≤ 7 and n ≥ 9, got i={i}, n={n}")));
    }
    fits(n)?;
    let mut g = cycle(8)?;
    for &(u, v) in CHORDS[i - 1] {
        g = g.with_edge(u, v)?;
    }
    for _ in 8..n {
        g = g.add_vertex(bit(at.0) | bit(at.1));
    }
    Ok(g)
}

/// A constructor call that can be rebuilt and certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Complete { n: usize },
    Empty { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Matching { q: usize },
    Star { leaves: usize },
    Petersen,
    MixedJoin { k: usize, q: usize, m: usize },
    ExtremalCc { k: usize, n: usize },
    ExtremalDc { k: usize, n: usize },
    UncoveredCc { n: usize },
    UncoveredDc { n: usize },
    UncoveredCograph { a: usize, b: usize },
    Theta { lengths: Vec<usize> },
    UniformTheta { a: usize, m: usize },
    GirthExtremal { girth: usize, n: usize },
    Bipartite { i: usize, n: usize },
}

/// Named integer parameters used to select a family from text.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub q: Option<usize>,
    pub m: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub i: Option<usize>,
    pub girth: Option<usize>,
    pub lengths: Vec<usize>,
}

impl Family {
    pub const IDS: [&'static str; 17] = [
        "complete",
        "empty",
        "cycle",
        "path",
        "matching",
        "star",
        "petersen",
        "mixed-join",
        "extremal-cc",
        "extremal-dc",
        "uncovered-cc",
        "uncovered-dc",
        "uncovered-cograph",
        "theta",
        "uniform-theta",
        "girth-extremal",
        "bipartite",
    ];

    /// Builds a family from its id and the parameters it needs.
    pub fn parse(id: &str, p: &Params) -> Result<Family> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| invalid(format!("family {id} needs parameter --{name}")))
        };
        Ok(match id {
            "complete" => Family::Complete { n: need(p.n, "n")? },
            "empty" => Family::Empty { n: need(p.n, "n")? },
            "cycle" => Family::Cycle { n: need(p.n, "n")? },
            "path" => Family::Path { n: need(p.n, "n")? },
            "matching" => Family::Matching { q: need(p.q, "q")? },
            "star" => Family::Star { leaves: need(p.n, "n")? },
            "petersen" => Family::Petersen,
            "mixed-join" => Family::MixedJoin {
                k: need(p.k, "k")?,
                q: need(p.q, "q")?,
                m: need(p.m, "m")?,
            },
            "extremal-cc" => Family::ExtremalCc {
                k: need(p.k, "k")?,
                n: need(p.n, "n")?,
            },
            "extremal-dc" => Family::ExtremalDc {
                k: need(p.k, "k")?,
                n: need(p.n, "n")?,
            },
            "uncovered-cc" => Family::UncoveredCc { n: need(p.n, "n")? },
            "uncovered-dc" => Family::UncoveredDc { n: need(p.n, "n")? },
            "uncovered-cograph" => Family::UncoveredCograph {
                a: need(p.a, "a")?,
                b: need(p.b, "b")?,
            },
            "theta" => Family::Theta {
                lengths: p.lengths.clone(),
            },
            "uniform-theta" => Family::UniformTheta {
                a: need(p.a, "a")?,
                m: need(p.m, "m")?,
            },
            "girth-extremal" => Family::GirthExtremal {
                girth: need(p.girth, "girth")?,
                n: need(p.n, "n")?,
            },
            "bipartite" => Family::Bipartite {
                i: need(p.i, "i")?,
                n: need(p.n, "n")?,
            },
            other => {
                return Err(invalid(format!(
                    "unknown family {other:?}; known: {}",
                    Family::IDS.join(", ")
                )))
            }
        })
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete { n } => {
                fits(n)?;
                Ok(complete(n))
            }
            Family::Empty { n } => {
                fits(n)?;
                Ok(empty(n))
            }
            Family::Cycle { n } => {
                fits(n)?;
                cycle(n)
            }
            Family::Path { n } => {
                fits(n)?;
                Ok(path(n))
            }
            Family::Matching { q } => {
                fits(2 * q)?;
                Ok(matching(q))
            }
            Family::Star { leaves } => {
                fits(leaves + 1)?;
                Ok(star(leaves))
            }
            Family::Petersen => Ok(petersen()),
            Family::MixedJoin { k, q, m } => mixed_join(k, q, m),
            Family::ExtremalCc { k, n } => extremal_cc(k, n),
            Family::ExtremalDc { k, n } => extremal_dc(k, n),
            Family::UncoveredCc { n } => uncovered_cc(n),
            Family::UncoveredDc { n } => uncovered_dc(n),
            Family::UncoveredCograph { a, b } => uncovered_cograph(a, b),
            Family::Theta { ref lengths } => theta(lengths),
            Family::UniformTheta { a, m } => uniform_theta(a, m),
            Family::GirthExtremal { girth, n } => girth_extremal(girth, n),
            Family::Bipartite { i, n } => bipartite_family(i, n),
        }
    }

    /// The invariant values this family is asserted to have.
    pub fn claims(&self) -> Claims {
        let mut c = Claims::default();
        match *self {
            Family::Complete { n } => {
                c.order = Some(n);
                c.kappa = Some(n.saturating_sub(1));
                if n >= 3 {
                    c.circumference = Some(n);
                    c.cummerbund_covered = Some(true);
                }
            }
            Family::Empty { n } => {
                c.order = Some(n);
                c.size = Some(0);
                c.circumference = Some(0);
            }
            Family::Cycle { n } => {
                c.order = Some(n);
                c.circumference = Some(n);
                c.girth = Some(n);
                c.cc = Some(n);
                c.count_cummerbunds = Some(1);
            }
            Family::Path { n } => {
                c.order = Some(n);
                c.detour_order = Some(n);
                c.dc = Some(n);
                c.count_detours = Some(1.min(n));
            }
            Family::Matching { q } => {
                c.order = Some(2 * q);
                c.size = Some(q);
            }
            Family::Star { leaves } => {
                c.order = Some(leaves + 1);
                c.dc = Some(leaves + 1);
            }
            Family::Petersen => {
                c.order = Some(10);
                c.girth = Some(5);
                c.circumference = Some(9);
                c.kappa = Some(3);
            }
            Family::MixedJoin { k, q, m } => {
                c.order = Some(k + 2 * q + m);
            }
            Family::ExtremalCc { k, n } => {
                c.order = Some(n);
                c.kappa = Some(k);
                c.circumference = Some(3 * k);
                c.cc = Some(3 * k);
            }
            Family::ExtremalDc { k, n } => {
                c.order = Some(n);
                c.kappa = Some(k);
                c.detour_order = Some(3 * k + 2);
                c.dc = Some(3 * k + 2);
            }
            Family::UncoveredCc { n } => {
                c.order = Some(n);
                c.min_degree = Some(n.div_ceil(3) - 1);
                c.kappa_at_least = Some(2);
                c.cummerbund_covered = Some(false);
            }
            Family::UncoveredDc { n } => {
                c.order = Some(n);
                c.min_degree = Some((n - 2).div_ceil(3) - 1);
                c.kappa_at_least = Some(1);
                c.detour_covered = Some(false);
            }
            Family::UncoveredCograph { a, b } => {
                c.order = Some(a + 2 * b + 2);
                c.kappa_at_least = Some(2);
                c.induced_free = vec!["P4".into(), "C4".into()];
                c.detour_covered = Some(false);
                c.cummerbund_covered = Some(false);
            }
            Family::Theta { ref lengths } => {
                let mut l = lengths.clone();
                l.sort_unstable();
                c.order = Some(2 + l.iter().map(|x| x.saturating_sub(1)).sum::<usize>());
                if l.len() >= 2 {
                    c.girth = Some(l[0] + l[1]);
                    c.circumference = Some(l[l.len() - 1] + l[l.len() - 2]);
                }
                c.kappa_at_least = Some(2);
            }
            Family::UniformTheta { a, m } => {
                c.order = Some(2 + m * a.saturating_sub(1));
                c.girth = Some(2 * a);
                c.circumference = Some(2 * a);
                c.cummerbund_covered = Some(true);
            }
            Family::GirthExtremal { girth, n } => {
                c.order = Some(n);
                c.girth = Some(girth);
                c.kappa = Some(2);
                c.cc = girth_extremal_cc(girth, n);
            }
            Family::Bipartite { n, .. } => {
                c.order = Some(n);
                c.bipartite = Some(true);
                c.kappa_at_least = Some(2);
                c.circumference = Some(8);
                c.cc = Some(8);
            }
        }
        c
    }

    /// Builds the graph and compares it with every claim.
    pub fn certify(&self) -> Result<Certification> {
        let g = self.build()?;
        let claims = self.claims();
        let profile = InvariantProfile::of(&g);
        let mismatches = claims.mismatches(&g, &profile);
        Ok(Certification {
            family: self.clone(),
            profile,
            mismatches,
        })
    }
}

/// Claimed values; `None` means the family makes no claim.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claims {
    pub order: Option<usize>,
    pub size: Option<usize>,
    pub min_degree: Option<usize>,
    pub kappa: Option<usize>,
    pub kappa_at_least: Option<usize>,
    pub girth: Option<usize>,
    pub circumference: Option<usize>,
    pub detour_order: Option<usize>,
    pub dc: Option<usize>,
    pub cc: Option<usize>,
    pub detour_covered: Option<bool>,
    pub cummerbund_covered: Option<bool>,
    pub bipartite: Option<bool>,
    pub count_detours: Option<usize>,
    pub count_cummerbunds: Option<usize>,
    /// Names of patterns the graph must not contain as induced subgraphs.
    pub induced_free: Vec<String>,
}

impl Claims {
    /// One line per claim that `profile` contradicts.
    pub fn mismatches(&self, g: &Graph, p: &InvariantProfile) -> Vec<String> {
        let mut out = Vec::new();
        let mut eq = |name: &str, claimed: Option<String>, actual: String| {
            if let Some(c) = claimed {
                if c != actual {
                    out.push(format!("{name}: claimed {c}, computed {actual}"));
                }
            }
        };
        let s = |v: Option<usize>| v.map(|x| x.to_string());
        let b = |v: Option<bool>| v.map(|x| x.to_string());
        eq("order", s(self.order), p.order.to_string());
        eq("size", s(self.size), p.size.to_string());
        eq("min_degree", s(self.min_degree), p.min_degree.to_string());
        eq("kappa", s(self.kappa), p.kappa.to_string());
        eq(
            "girth",
            s(self.girth),
            p.girth.map_or_else(|| "inf".to_string(), |x| x.to_string()),
        );
        eq("circumference", s(self.circumference), p.circumference.to_string());
        eq("detour_order", s(self.detour_order), p.detour_order.to_string());
        eq("dc", s(self.dc), p.dc.to_string());
        eq("cc", s(self.cc), p.cc.to_string());
        eq("detour_covered", b(self.detour_covered), p.detour_covered.to_string());
        eq("cummerbund_covered", b(self.cummerbund_covered), p.cummerbund_covered.to_string());
        eq("bipartite", b(self.bipartite), p.bipartite.to_string());
        if self.count_detours.is_some() {
            eq("count_detours", s(self.count_detours), invariants::count_detours(g).to_string());
        }
        if self.count_cummerbunds.is_some() {
            eq(
                "count_cummerbunds",
                s(self.count_cummerbunds),
                invariants::count_cummerbunds(g).to_string(),
            );
        }
        if let Some(k) = self.kappa_at_least {
            if p.kappa < k {
                out.push(format!("kappa: claimed at least {k}, computed {}", p.kappa));
            }
        }
        for name in &self.induced_free {
            match Pattern::by_name(name) {
                Some(pat) => {
                    if let Some(w) = recognition::find_induced(g, &pat) {
                        out.push(format!("induced {name} at {:?}", VertexSet::to_vec(w)));
                    }
                }
                None => out.push(format!("unknown pattern {name}")),
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certification {
    #[serde(flatten)]
    pub family: Family,
    pub profile: InvariantProfile,
    pub mismatches: Vec<String>,
}

impl Certification {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}
