//! Executable checks over enumerated universes and family constructors.
//!
//! Each check has a gating parameter set (minutes on one core) and an
//! extended one. `CheckParams::n` and `k` override the tier defaults.

use std::collections::BTreeMap;
use std::time::Instant;

use longcycle_core::enumeration::UniverseSpec;
use longcycle_core::families;
use longcycle_core::invariants::{self as inv, Budget};
use longcycle_core::recognition::{self, Pattern};
use longcycle_core::{canonical, graph6, Bits, Error, Graph, Result, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::report::{CheckReport, GraphRecord, Outcome};
use crate::runner::{Runner, Tally};
use crate::witness;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    #[default]
    Gating,
    Extended,
}

impl Tier {
    fn pick<T>(self, gating: T, extended: T) -> T {
        match self {
            Tier::Gating => gating,
            Tier::Extended => extended,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckParams {
    pub tier: Tier,
    /// Largest order for range checks, the single order otherwise.
    pub n: Option<usize>,
    pub k: Option<usize>,
    /// Sub-claim selector for `girth-cc`: `g4`, `g5`, `g6even` or `g6odd`.
    pub part: Option<String>,
    pub seed: Option<u64>,
}

/// Check ids in the order `all-gating` runs them.
pub const CHECK_IDS: [&str; 12] = [
    "enum-counts",
    "degree-cc",
    "degree-dc",
    "join-duality",
    "connectivity-cc",
    "connectivity-dc",
    "bipartite-cc",
    "equal-girth",
    "girth-cc",
    "domination",
    "pair-free",
    "subdivision-witness",
];

pub fn run_check(id: &str, p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    match id {
        "enum-counts" => enum_counts(p, r),
        "degree-cc" => degree_cc(p, r),
        "degree-dc" => degree_dc(p, r),
        "join-duality" => join_duality(p, r),
        "connectivity-cc" => connectivity_cc(p, r),
        "connectivity-dc" => connectivity_dc(p, r),
        "bipartite-cc" => bipartite_cc(p, r),
        "equal-girth" => equal_girth(p, r),
        "girth-cc" => girth_cc(p, r),
        "domination" => domination(p, r),
        "pair-free" => pair_free(p, r),
        "subdivision-witness" => witness::subdivision_witness(p.n.unwrap_or(12), r),
        _ => Err(Error::InvalidParameter(format!(
            "unknown check {id:?}; expected one of {}",
            CHECK_IDS.join(", ")
        ))),
    }
}

/// Every check at its gating parameters.
pub fn run_all(tier: Tier, r: &Runner) -> Result<Vec<CheckReport>> {
    let p = CheckParams {
        tier,
        ..CheckParams::default()
    };
    CHECK_IDS.iter().map(|id| run_check(id, &p, r)).collect()
}

/// Collects scan results into a report.
pub(crate) struct Draft {
    id: &'static str,
    params: Value,
    universe: Vec<String>,
    tally: Tally,
    mismatches: Vec<String>,
    details: BTreeMap<String, Value>,
    witnesses: Vec<GraphRecord>,
    seed: Option<u64>,
    started: Instant,
}

impl Draft {
    pub(crate) fn new(id: &'static str, params: Value) -> Draft {
        Draft {
            id,
            params,
            universe: Vec::new(),
            tally: Tally::default(),
            mismatches: Vec::new(),
            details: BTreeMap::new(),
            witnesses: Vec::new(),
            seed: None,
            started: Instant::now(),
        }
    }

    pub(crate) fn scan<F>(&mut self, r: &Runner, label: String, spec: &UniverseSpec, visit: F) -> Result<Tally>
    where
        F: Fn(&Graph, &mut Tally, &mut Budget) -> Result<()> + Sync,
    {
        let t = r.scan(spec, visit)?;
        self.universe.push(format!("{label} ({})", t.examined));
        Ok(t)
    }

    /// Checks on explicit graphs count towards the universe too.
    pub(crate) fn constructed(&mut self, label: &str, graphs: &[Graph], r: &Runner, visit: impl Fn(&Graph, &mut Tally, &mut Budget) -> Result<()> + Sync) {
        let t = r.scan_graphs(graphs, visit);
        self.universe.push(format!("{label} ({})", t.examined));
        self.tally.merge(t);
    }

    /// Serial variant of [`Draft::constructed`] for graphs tagged with the
    /// parameter they were built from.
    pub(crate) fn tagged<T>(
        &mut self,
        label: &str,
        items: &[(T, Graph)],
        r: &Runner,
        visit: impl Fn(&T, &Graph, &mut Tally, &mut Budget) -> Result<()>,
    ) {
        let mut t = Tally::default();
        for (tag, g) in items {
            r.visit_one(g, &mut t, &|g: &Graph, t: &mut Tally, b: &mut Budget| visit(tag, g, t, b));
        }
        self.universe.push(format!("{label} ({})", t.examined));
        self.tally.merge(t);
    }

    pub(crate) fn universe_label(&mut self, label: String) {
        self.universe.push(label);
    }

    pub(crate) fn absorb(&mut self, t: Tally) {
        self.tally.merge(t);
    }

    pub(crate) fn mismatch(&mut self, m: impl Into<String>) {
        self.mismatches.push(m.into());
    }

    pub(crate) fn detail(&mut self, key: &str, v: Value) {
        self.details.insert(key.to_string(), v);
    }

    pub(crate) fn witness(&mut self, rec: GraphRecord) {
        self.witnesses.push(rec);
    }

    pub(crate) fn seed(&mut self, s: u64) {
        self.seed = Some(s);
    }

    pub(crate) fn finish(mut self, empty_outcome: Option<Outcome>) -> CheckReport {
        let t = &self.tally;
        let outcome = if !t.failures.is_empty() {
            Outcome::Counterexample
        } else if t.counter("timeouts") > 0 {
            Outcome::Partial
        } else if !self.mismatches.is_empty() {
            Outcome::Mismatch
        } else {
            empty_outcome.unwrap_or(Outcome::Pass)
        };
        self.details.insert("summary".into(), t.summary());
        self.details.insert("failure_count".into(), json!(t.failure_count));
        if !self.mismatches.is_empty() {
            self.details.insert("mismatches".into(), json!(self.mismatches));
        }
        let report = CheckReport {
            check_id: self.id.to_string(),
            params: self.params,
            universe: self.universe.join("; "),
            universe_size: t.examined,
            outcome,
            counterexamples: t.failures.values().cloned().collect(),
            witnesses: self.witnesses,
            details: self.details,
            seed: self.seed,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        };
        report.self_audit();
        report
    }
}

fn too_big(what: &str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::UniverseTooLarge(format!("{what} supports n ≤ {max}, got {n}")));
    }
    Ok(())
}

fn two_connected(n: usize) -> UniverseSpec {
    UniverseSpec::new(n).k_connected(2)
}

/// Published numbers of unlabelled graphs on 0..=10 vertices.
pub const GRAPH_COUNTS: [u64; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

fn enum_counts(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let n_max = p.n.unwrap_or(p.tier.pick(9, 10));
    too_big("enum-counts", n_max, 10)?;
    let mut d = Draft::new("enum-counts", json!({ "n_max": n_max }));
    let mut counts = BTreeMap::new();
    for (n, &expected) in GRAPH_COUNTS.iter().enumerate().take(n_max + 1).skip(1) {
        let dedup = n <= 9;
        let t = d.scan(r, format!("all graphs n={n}"), &UniverseSpec::new(n), move |g, t, _| {
            if dedup {
                t.add_to_class("certificates", g);
            }
            Ok(())
        })?;
        if t.examined != expected {
            d.mismatch(format!("n={n}: {} graphs, expected {expected}", t.examined));
        }
        if dedup && t.class("certificates").len() as u64 != t.examined {
            d.mismatch(format!("n={n}: duplicate certificates in the stream"));
        }
        counts.insert(n.to_string(), t.examined);
        let mut t = t;
        t.classes.clear();
        d.absorb(t);
    }
    d.detail("counts", json!(counts));
    Ok(d.finish(None))
}

fn degree_cc(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let n_max = p.n.unwrap_or(p.tier.pick(9, 10));
    too_big("degree-cc", n_max, 10)?;
    let mut d = Draft::new("degree-cc", json!({ "n_max": n_max }));
    for n in 3..=n_max {
        let spec = two_connected(n).min_degree(n.div_ceil(3));
        let t = d.scan(r, format!("2-connected n={n}, δ ≥ {}", n.div_ceil(3)), &spec, |g, t, b| {
            if !inv::is_cummerbund_covered_with(g, b)? {
                t.fail(g, "minimum degree at least n/3 but not cummerbund covered");
            }
            Ok(())
        })?;
        d.absorb(t);
    }
    let sharp: Vec<Graph> = (9..=15).map(families::uncovered_cc).collect::<Result<_>>()?;
    d.constructed("degree-sharpness family n=9..15", &sharp, r, |g, t, b| {
        let n = g.order();
        if g.min_degree() != n.div_ceil(3) - 1 {
            t.fail(g, "sharpness family: minimum degree is not ⌈n/3⌉ − 1");
        } else if !inv::is_k_connected(g, 2) {
            t.fail(g, "sharpness family: not 2-connected");
        } else if inv::is_cummerbund_covered_with(g, b)? {
            t.fail(g, "sharpness family: unexpectedly cummerbund covered");
        }
        Ok(())
    });
    Ok(d.finish(None))
}

fn dc_threshold(n: usize) -> usize {
    n.saturating_sub(2).div_ceil(3)
}

fn degree_dc(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let n_max = p.n.unwrap_or(p.tier.pick(9, 10));
    too_big("degree-dc", n_max, 10)?;
    let mut d = Draft::new("degree-dc", json!({ "n_max": n_max }));
    for n in 1..=n_max {
        let spec = UniverseSpec::new(n).connected().min_degree(dc_threshold(n));
        let t = d.scan(r, format!("connected n={n}, δ ≥ {}", dc_threshold(n)), &spec, |g, t, b| {
            let covered = inv::is_detour_covered_with(g, b)?;
            if !covered {
                t.fail(g, "minimum degree at least (n−2)/3 but not detour covered");
            }
            if g.size() > 0 {
                let h = g.join(&Graph::empty(1));
                if inv::is_cummerbund_covered_with(&h, b)? != covered {
                    t.fail(g, "detour coverage differs from cummerbund coverage of G ∨ K1");
                }
                t.bump("join_consistent");
            }
            Ok(())
        })?;
        d.absorb(t);
    }
    let sharp: Vec<Graph> = (6..=15).map(families::uncovered_dc).collect::<Result<_>>()?;
    d.constructed("detour-sharpness family n=6..15", &sharp, r, |g, t, b| {
        let n = g.order();
        if g.min_degree() + 1 != dc_threshold(n) {
            t.fail(g, "sharpness family: minimum degree is not ⌈(n−2)/3⌉ − 1");
        } else if !g.is_connected() {
            t.fail(g, "sharpness family: disconnected");
        } else if inv::is_detour_covered_with(g, b)? {
            t.fail(g, "sharpness family: unexpectedly detour covered");
        }
        Ok(())
    });
    Ok(d.finish(None))
}

/// `count` graphs `G(n, p)` with `n` uniform in `1..=n_max` and `p` uniform
/// in `[0.1, 0.9)`.
pub fn random_graphs(seed: u64, count: usize, n_max: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=n_max);
            let p: f64 = rng.gen_range(0.1..0.9);
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).expect("valid random edges")
        })
        .collect()
}

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

fn join_duality(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let n_max = p.n.unwrap_or(p.tier.pick(7, 8));
    too_big("join-duality", n_max, 9)?;
    let seed = p.seed.unwrap_or(DEFAULT_SEED);
    let samples = p.tier.pick(300, 2000);
    let mut d = Draft::new(
        "join-duality",
        json!({ "n_max": n_max, "random": samples, "random_n_max": 12 }),
    );
    d.seed(seed);
    let visit = |g: &Graph, t: &mut Tally, b: &mut Budget| -> Result<()> {
        let h = g.join(&Graph::empty(1));
        if inv::connectivity(&h) != inv::connectivity(g) + 1 {
            t.fail(g, "κ(G ∨ K1) ≠ κ(G) + 1");
        }
        if g.size() == 0 {
            // A single vertex is a detour here, while G ∨ K1 is a star.
            t.bump("edgeless");
            return Ok(());
        }
        let dc = inv::detour_cover_set_with(g, b)?.len();
        let cc = inv::cummerbund_cover_set_with(&h, b)?.len();
        if dc + 1 != cc {
            t.fail(g, format!("dc(G) = {dc} but cc(G ∨ K1) = {cc}"));
        }
        Ok(())
    };
    for n in 1..=n_max {
        let t = d.scan(r, format!("all graphs n={n}"), &UniverseSpec::new(n), visit)?;
        d.absorb(t);
    }
    let sample = random_graphs(seed, samples, 12);
    d.constructed("random G(n,p), n ≤ 12", &sample, r, visit);
    Ok(d.finish(None))
}

fn connectivity_universe(n: usize, k: usize) -> UniverseSpec {
    if k <= 1 {
        UniverseSpec::new(n).connected()
    } else {
        UniverseSpec::new(n).k_connected(k)
    }
}

fn n_range(p: &CheckParams, from: usize, gating: usize, extended: usize) -> Vec<usize> {
    match p.n {
        Some(n) => vec![n],
        None => (from..=p.tier.pick(gating, extended)).collect(),
    }
}

fn connectivity_cc(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let k = p.k.unwrap_or(2);
    if k < 2 {
        return Err(Error::InvalidParameter("connectivity-cc needs k ≥ 2".into()));
    }
    let orders = n_range(p, 7, 9, 10);
    let mut d = Draft::new("connectivity-cc", json!({ "k": k, "n": orders }));
    for &n in &orders {
        too_big("connectivity-cc", n, 10)?;
        let bound = n.min(3 * k);
        let key = format!("min_cc_n{n}");
        let t = d.scan(r, format!("{k}-connected n={n}"), &connectivity_universe(n, k), |g, t, b| {
            let cc = inv::cummerbund_cover_set_with(g, b)?.len();
            if cc < bound {
                t.fail(g, format!("cc = {cc} below min(n, 3k) = {bound}"));
            }
            t.observe_min(&key, cc, g);
            Ok(())
        })?;
        match t.minimum(&key) {
            Some(m) if m == bound => {}
            Some(m) => d.mismatch(format!("n={n}: minimum cc {m}, expected {bound}")),
            None => d.mismatch(format!("n={n}: empty universe")),
        }
        d.absorb(t);
    }
    let built: Vec<(usize, Graph)> = (2..=4)
        .flat_map(|k| (3 * k + 1..=16).map(move |n| families::extremal_cc(k, n).map(|g| (k, g))))
        .collect::<Result<_>>()?;
    d.tagged("extremal constructors k=2..4, n ≤ 16", &built, r, |&k, g, t, b| {
        let cc = inv::cummerbund_cover_set_with(g, b)?.len();
        if inv::connectivity(g) != k || cc != 3 * k {
            t.fail(g, format!("constructor for k={k}: expected κ = {k} and cc = {}", 3 * k));
        }
        Ok(())
    });
    Ok(d.finish(None))
}

fn connectivity_dc(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let k = p.k.unwrap_or(1);
    if k < 1 {
        return Err(Error::InvalidParameter("connectivity-dc needs k ≥ 1".into()));
    }
    let orders = n_range(p, 6, 9, 10);
    let mut d = Draft::new("connectivity-dc", json!({ "k": k, "n": orders }));
    for &n in &orders {
        too_big("connectivity-dc", n, 10)?;
        let bound = n.min(3 * k + 2);
        let key = format!("min_dc_n{n}");
        let t = d.scan(r, format!("{k}-connected n={n}"), &connectivity_universe(n, k), |g, t, b| {
            let dc = inv::detour_cover_set_with(g, b)?.len();
            if dc < bound {
                t.fail(g, format!("dc = {dc} below min(n, 3k+2) = {bound}"));
            }
            t.observe_min(&key, dc, g);
            Ok(())
        })?;
        match t.minimum(&key) {
            Some(m) if m == bound => {}
            Some(m) => d.mismatch(format!("n={n}: minimum dc {m}, expected {bound}")),
            None => d.mismatch(format!("n={n}: empty universe")),
        }
        d.absorb(t);
    }
    let built: Vec<(usize, Graph)> = (1..=4)
        .flat_map(|k| (3 * k + 3..=16).map(move |n| families::extremal_dc(k, n).map(|g| (k, g))))
        .collect::<Result<_>>()?;
    d.tagged("extremal constructors k=1..4, n ≤ 16", &built, r, |&k, g, t, b| {
        let dc = inv::detour_cover_set_with(g, b)?.len();
        if inv::connectivity(g) != k || dc != 3 * k + 2 {
            t.fail(g, format!("constructor for k={k}: expected κ = {k} and dc = {}", 3 * k + 2));
        }
        Ok(())
    });
    Ok(d.finish(None))
}

fn bipartite_cc(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let n = p.n.unwrap_or(p.tier.pick(9, 10));
    if n < 9 {
        return Err(Error::InvalidParameter(format!("bipartite-cc needs n ≥ 9, got {n}")));
    }
    too_big("bipartite-cc", n, 12)?;
    let mut d = Draft::new("bipartite-cc", json!({ "n": n }));
    let spec = two_connected(n).bipartite();
    let t = d.scan(r, format!("2-connected bipartite n={n}"), &spec, |g, t, b| {
        let (c, _) = inv::circumference_with(g, b)?;
        let cc = inv::cummerbund_cover_set_with(g, b)?.len();
        if cc < 8 {
            t.fail(g, format!("cc = {cc} below 8"));
        } else if cc == 8 {
            t.add_to_class("equality", g);
        }
        if c <= 6 && cc != g.order() {
            t.fail(g, format!("circumference {c} ≤ 6 but not cummerbund covered"));
        }
        Ok(())
    })?;
    let family: BTreeMap<Vec<u8>, usize> = (1..=7)
        .map(|i| families::bipartite_family(i, n).map(|g| (canonical(&g).canon, i)))
        .collect::<Result<_>>()?;
    let found = t.class("equality");
    let members: Vec<Value> = t.classes.get("equality").into_iter().flatten().map(|(c, g6)| {
        json!({ "graph6": g6, "family_member": family.get(c) })
    }).collect();
    d.detail("equality_class", json!(members));
    d.detail("equality_class_size", json!(found.len()));
    if family.len() != 7 {
        d.mismatch(format!("family members are not pairwise non-isomorphic ({} classes)", family.len()));
    }
    if found != family.keys().cloned().collect::<Vec<_>>() {
        d.mismatch("equality class differs from the seven family members");
    }
    let mut t = t;
    t.classes.clear();
    d.absorb(t);
    let built: Vec<Graph> = (1..=7)
        .flat_map(|i| (9..=12).map(move |m| families::bipartite_family(i, m)))
        .collect::<Result<_>>()?;
    d.constructed("family members n=9..12", &built, r, |g, t, b| {
        let cc = inv::cummerbund_cover_set_with(g, b)?.len();
        if cc != 8 || !g.is_bipartite() || !inv::is_k_connected(g, 2) {
            t.fail(g, format!("family member: cc = {cc}, expected 8 on a 2-connected bipartite graph"));
        }
        Ok(())
    });
    Ok(d.finish(None))
}

fn equal_girth(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let n_max = p.n.unwrap_or(p.tier.pick(9, 10));
    too_big("equal-girth", n_max, 10)?;
    let mut d = Draft::new("equal-girth", json!({ "n_max": n_max }));
    let visit = |g: &Graph, t: &mut Tally, b: &mut Budget| -> Result<()> {
        let (c, _) = inv::circumference_with(g, b)?;
        let equal = inv::girth(g) == Some(c);
        let shaped = recognition::is_cycle_graph(g) || recognition::is_uniform_theta(g);
        match (equal, shaped) {
            (true, false) => t.fail(g, "girth equals circumference but not a cycle or uniform theta"),
            (false, true) => t.fail(g, "cycle or uniform theta with girth ≠ circumference"),
            (true, true) => t.bump("equal"),
            (false, false) => {}
        }
        Ok(())
    };
    for n in 3..=n_max {
        let t = d.scan(r, format!("2-connected n={n}"), &two_connected(n), visit)?;
        d.absorb(t);
    }
    let mut built = vec![families::theta(&[4, 3, 3])?];
    for a in 2..=5 {
        for m in 3..=5 {
            built.push(families::uniform_theta(a, m)?);
        }
    }
    d.constructed("theta graphs", &built, r, visit);
    Ok(d.finish(None))
}

/// The four sub-claims of the girth bound: (name, girth, value, gating orders,
/// extended orders).
const GIRTH_PARTS: [(&str, usize, &[usize], &[usize]); 4] = [
    ("g4", 4, &[8, 9], &[8, 9, 10]),
    ("g5", 5, &[10, 11], &[10, 11]),
    ("g6even", 6, &[12], &[12]),
    ("g6odd", 6, &[13], &[13]),
];

fn girth_value(part: &str) -> usize {
    match part {
        "g4" => 6,
        "g5" | "g6even" => 8,
        _ => 9,
    }
}

fn girth_cc(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let parts: Vec<_> = match &p.part {
        None => GIRTH_PARTS.to_vec(),
        Some(name) => {
            let found: Vec<_> = GIRTH_PARTS.iter().filter(|x| x.0 == name).cloned().collect();
            if found.is_empty() {
                return Err(Error::InvalidParameter(format!(
                    "unknown part {name:?}; expected g4, g5, g6even or g6odd"
                )));
            }
            found
        }
    };
    let plan: Vec<(&str, usize, Vec<usize>)> = parts
        .iter()
        .map(|&(name, girth, gating, extended)| {
            let orders = p.n.map_or_else(|| p.tier.pick(gating, extended).to_vec(), |n| vec![n]);
            (name, girth, orders)
        })
        .collect();
    let params = json!(plan.iter().map(|(name, g, o)| json!({ "part": name, "girth": g, "n": o })).collect::<Vec<_>>());
    let mut d = Draft::new("girth-cc", params);
    for (name, girth, orders) in &plan {
        let value = girth_value(name);
        for &n in orders {
            let (lo, parity) = match *name {
                "g4" => (8, None),
                "g5" => (10, None),
                "g6even" => (12, Some(0)),
                _ => (13, Some(1)),
            };
            if n < lo || parity.is_some_and(|par| n % 2 != par) {
                return Err(Error::InvalidParameter(format!("part {name} does not cover n={n}")));
            }
            let key = format!("{name}_n{n}");
            let spec = two_connected(n).girth_at_least(*girth);
            let t = d.scan(r, format!("2-connected girth ≥ {girth} n={n}"), &spec, |g, t, b| {
                let cc = inv::cummerbund_cover_set_with(g, b)?.len();
                if cc < value {
                    t.fail(g, format!("girth ≥ {girth} with cc = {cc} below {value}"));
                }
                t.observe_min(&key, cc, g);
                Ok(())
            })?;
            match t.minimum(&key) {
                Some(m) if m == value => {}
                Some(m) => d.mismatch(format!("{name} n={n}: minimum cc {m}, expected {value}")),
                None => d.mismatch(format!("{name} n={n}: empty universe")),
            }
            d.absorb(t);
        }
        let built: Vec<Graph> = (lo_order(name)..=20)
            .filter(|n| families::girth_extremal_cc(*girth, *n) == Some(value))
            .map(|n| families::girth_extremal(*girth, n))
            .collect::<Result<_>>()?;
        let girth = *girth;
        d.constructed(&format!("{name} constructors n ≤ 20"), &built, r, move |g, t, b| {
            let cc = inv::cummerbund_cover_set_with(g, b)?.len();
            if inv::girth(g) != Some(girth) || !inv::is_k_connected(g, 2) || cc != value {
                t.fail(g, format!("constructor: expected 2-connected, girth {girth}, cc {value}; cc = {cc}"));
            }
            Ok(())
        });
    }
    if p.part.as_deref().is_none_or(|x| x == "g4") && p.n.is_none() {
        // The statement starts at order 8; smaller orders are recorded only.
        let mut info = BTreeMap::new();
        for n in 6..=7 {
            let t = r.scan(&two_connected(n).girth_at_least(4), |g, t, b| {
                t.observe_min("min", inv::cummerbund_cover_set_with(g, b)?.len(), g);
                Ok(())
            })?;
            info.insert(format!("n{n}"), t.summary()["minima"]["min"].clone());
        }
        d.detail("g4_small_orders", json!(info));
    }
    Ok(d.finish(None))
}

fn lo_order(part: &str) -> usize {
    match part {
        "g4" => 8,
        "g5" => 10,
        "g6even" => 12,
        _ => 13,
    }
}

fn remainder_is_clique_or_empty(g: &Graph, cyc: &[usize]) -> bool {
    let on: u64 = cyc.iter().fold(0, |a, &v| a | 1 << v);
    let rest = g.vertex_set().bits() & !on;
    let k = rest.count_ones() as usize;
    let edges: usize = Bits(rest).map(|v| (g.rows()[v] & rest).count_ones() as usize).sum::<usize>() / 2;
    edges == 0 || edges == k * (k - 1) / 2
}

fn dominating(g: &Graph, vs: &[usize]) -> bool {
    inv::is_dominating(g, VertexSet(vs.iter().fold(0, |a, &v| a | 1 << v)))
}

fn domination(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let n_max = p.n.unwrap_or(p.tier.pick(8, 9));
    too_big("domination", n_max, 9)?;
    let mut d = Draft::new("domination", json!({ "n_max": n_max }));
    let two_k2 = [Pattern::two_k2()];
    for n in 3..=n_max {
        let t = d.scan(r, format!("2-connected n={n}"), &two_connected(n), |g, t, b| {
            let n = g.order();
            let (c, _) = inv::circumference_with(g, b)?;
            let high_degree = 3 * g.min_degree() >= n;
            let low_circumference = c < 3 * inv::connectivity(g);
            let pair_free = recognition::is_induced_free(g, &two_k2);
            if !(high_degree || low_circumference || pair_free) {
                return Ok(());
            }
            let (mut cycles, mut mixed, mut undominated) = (0u64, 0u64, 0u64);
            inv::for_each_cummerbund_with(g, b, |cyc| {
                cycles += 1;
                if high_degree && !remainder_is_clique_or_empty(g, cyc) {
                    mixed += 1;
                }
                if (low_circumference || pair_free) && !dominating(g, cyc) {
                    undominated += 1;
                }
            })?;
            if high_degree {
                t.add("high_degree_cycles", cycles);
                if mixed > 0 {
                    t.fail(g, "δ ≥ n/3 but a longest cycle leaves a remainder neither empty nor complete");
                }
            }
            if low_circumference {
                t.add("low_circumference_cycles", cycles);
            }
            if pair_free {
                t.add("2k2_free_cycles", cycles);
            }
            if undominated > 0 {
                let why = if low_circumference { "c ≤ 3κ − 1" } else { "induced-2K2-free" };
                t.fail(g, format!("{why} but a longest cycle is not dominating"));
            }
            Ok(())
        })?;
        d.absorb(t);
    }
    for n in 1..=n_max {
        let spec = UniverseSpec::new(n).induced_free(&["2k2"]);
        let t = d.scan(r, format!("induced-2K2-free n={n}"), &spec, |g, t, b| {
            let (mut paths, mut undominated) = (0u64, 0u64);
            inv::for_each_detour_with(g, b, |path| {
                paths += 1;
                if !dominating(g, path) {
                    undominated += 1;
                }
            })?;
            t.add("2k2_free_detours", paths);
            if undominated > 0 {
                t.fail(g, "induced-2K2-free but a longest path is not dominating");
            }
            Ok(())
        })?;
        d.absorb(t);
    }
    Ok(d.finish(None))
}

fn pair_free(p: &CheckParams, r: &Runner) -> Result<CheckReport> {
    let n_max = p.n.unwrap_or(p.tier.pick(8, 9));
    too_big("pair-free", n_max, 9)?;
    let mut d = Draft::new("pair-free", json!({ "n_max": n_max }));
    for n in 1..=n_max {
        let spec = UniverseSpec::new(n).connected().induced_free(&["p4", "2k2"]);
        let t = d.scan(r, format!("connected induced-{{P4,2K2}}-free n={n}"), &spec, |g, t, b| {
            let threshold = recognition::is_threshold(g);
            if threshold {
                t.bump("threshold_connected");
            }
            if !inv::is_detour_covered_with(g, b)? {
                t.fail(g, "connected {P4,2K2}-free but not detour covered");
            }
            if n >= 3 && inv::is_k_connected(g, 2) {
                t.bump("two_connected");
                if threshold {
                    t.bump("threshold_2connected");
                }
                if !inv::is_cummerbund_covered_with(g, b)? {
                    t.fail(g, "2-connected {P4,2K2}-free but not cummerbund covered");
                }
            }
            Ok(())
        })?;
        d.absorb(t);
    }
    let cographs: Vec<Graph> = (1..=2)
        .flat_map(|a| (3..=5).map(move |b| families::uncovered_cograph(a, b)))
        .collect::<Result<_>>()?;
    let p4c4 = [Pattern::p4(), Pattern::c4()];
    d.constructed("uncovered cographs a ≤ 2, b = 3..5", &cographs, r, |g, t, b| {
        if !recognition::is_induced_free(g, &p4c4) || !inv::is_k_connected(g, 2) {
            t.fail(g, "family member is not a 2-connected {P4,C4}-free graph");
        } else if inv::is_detour_covered_with(g, b)? || inv::is_cummerbund_covered_with(g, b)? {
            t.fail(g, "family member is covered");
        }
        Ok(())
    });
    // Dropping 2K2 from the forbidden pair already admits uncovered graphs.
    let mut uncovered = BTreeMap::new();
    for n in 1..=n_max {
        let spec = UniverseSpec::new(n).connected().induced_free(&["p4"]);
        let t = r.scan(&spec, |g, t, b| {
            if !inv::is_detour_covered_with(g, b)? {
                t.add_to_class("uncovered", g);
            }
            Ok(())
        })?;
        if t.counter("timeouts") > 0 {
            d.absorb(t.clone());
        }
        if let Some(m) = t.classes.get("uncovered") {
            uncovered.extend(m.clone());
        }
    }
    d.detail("p4_free_uncovered_count", json!(uncovered.len()));
    match uncovered.values().next() {
        Some(g6) => {
            let g = graph6::decode(g6)?;
            d.witness(GraphRecord::new(&g, "connected P4-free, not detour covered"));
        }
        None => d.mismatch("no connected P4-free graph fails detour coverage"),
    }
    Ok(d.finish(None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_precedence() {
        let g = families::cycle(5).unwrap();
        let mut d = Draft::new("t", json!({}));
        d.mismatch("aggregate");
        let mut t = Tally::default();
        t.bump("timeouts");
        d.absorb(t.clone());
        assert_eq!(d.finish(None).outcome, Outcome::Partial);

        let mut d = Draft::new("t", json!({}));
        d.mismatch("aggregate");
        assert_eq!(d.finish(None).outcome, Outcome::Mismatch);

        let mut d = Draft::new("t", json!({}));
        t.fail(&g, "planted");
        d.absorb(t);
        let r = d.finish(None);
        assert_eq!(r.outcome, Outcome::Counterexample);
        assert_eq!(r.counterexamples.len(), 1);
        assert!(r.counterexamples[0].audit());
    }

    #[test]
    fn failure_records_are_capped_and_sorted() {
        let mut t = Tally::default();
        for n in 3..40 {
            t.fail(&families::cycle(n).unwrap(), "planted");
        }
        assert_eq!(t.failure_count, 37);
        assert_eq!(t.failures.len(), crate::runner::MAX_RECORDS);
        assert!(t.failures.keys().is_sorted());
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_graphs(3, 20, 12);
        assert_eq!(a, random_graphs(3, 20, 12));
        assert!(a.iter().all(|g| (1..=12).contains(&g.order())));
    }
}
