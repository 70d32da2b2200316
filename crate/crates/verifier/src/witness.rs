//! Searches for graphs with a prescribed invariant profile.

use longcycle_core::enumeration::UniverseSpec;
use longcycle_core::invariants::Budget;
use longcycle_core::recognition::{self, Pattern};
use longcycle_core::{graph6, Error, Graph, InvariantProfile, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::checks::Draft;
use crate::report::{CheckReport, GraphRecord, Outcome};
use crate::runner::Runner;

/// Largest order accepted by exhaustive search.
pub const MAX_EXHAUSTIVE_ORDER: usize = 9;

/// One required value of an [`InvariantProfile`] field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Requirement {
    KConnected(usize),
    DetourCovered(bool),
    CummerbundCovered(bool),
    Circumference(usize),
    DetourOrder(usize),
    Dc(usize),
    Cc(usize),
    /// Pattern names as accepted by [`Pattern::by_name`].
    InducedFree(Vec<String>),
}

impl Requirement {
    /// Distance from satisfying the requirement; 0 iff met.
    fn violation(&self, g: &Graph, p: &InvariantProfile) -> usize {
        let diff = |a: usize, b: usize| a.abs_diff(b);
        match self {
            Requirement::KConnected(k) => k.saturating_sub(p.kappa),
            Requirement::DetourCovered(want) => usize::from(p.detour_covered != *want),
            Requirement::CummerbundCovered(want) => usize::from(p.cummerbund_covered != *want),
            Requirement::Circumference(c) => diff(p.circumference, *c),
            Requirement::DetourOrder(l) => diff(p.detour_order, *l),
            Requirement::Dc(x) => diff(p.dc, *x),
            Requirement::Cc(x) => diff(p.cc, *x),
            Requirement::InducedFree(names) => names
                .iter()
                .filter_map(|s| Pattern::by_name(s))
                .filter(|pat| recognition::contains_induced(g, pat))
                .count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessProfile {
    pub name: String,
    pub order: usize,
    pub requirements: Vec<Requirement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    /// Edge-flip local search; `budget` counts candidate evaluations.
    Randomized { budget: u64, seed: u64 },
}

impl WitnessProfile {
    /// Order 7, 2-connected, traceable, detour covered, circumference 6 and
    /// not cummerbund covered.
    pub fn traceable_uncovered() -> WitnessProfile {
        WitnessProfile {
            name: "a".into(),
            order: 7,
            requirements: vec![
                Requirement::KConnected(2),
                Requirement::DetourCovered(true),
                Requirement::CummerbundCovered(false),
                Requirement::Circumference(6),
                Requirement::DetourOrder(7),
            ],
        }
    }

    /// Order 12, 2-connected, cummerbund covered but not detour covered,
    /// circumference 8, detour order 11.
    pub fn cummerbund_only() -> WitnessProfile {
        WitnessProfile {
            name: "b".into(),
            order: 12,
            requirements: vec![
                Requirement::KConnected(2),
                Requirement::CummerbundCovered(true),
                Requirement::DetourCovered(false),
                Requirement::Circumference(8),
                Requirement::DetourOrder(11),
            ],
        }
    }

    /// Order 12, induced-{2K2, C4}-free, detour order 11, circumference 9,
    /// `dc = cc = 11`.
    pub fn pair_free_uncovered() -> WitnessProfile {
        WitnessProfile {
            name: "c".into(),
            order: 12,
            requirements: vec![
                Requirement::InducedFree(vec!["2k2".into(), "c4".into()]),
                Requirement::DetourOrder(11),
                Requirement::Circumference(9),
                Requirement::Dc(11),
                Requirement::Cc(11),
            ],
        }
    }

    pub fn by_name(name: &str) -> Option<WitnessProfile> {
        match name {
            "a" => Some(Self::traceable_uncovered()),
            "b" => Some(Self::cummerbund_only()),
            "c" => Some(Self::pair_free_uncovered()),
            _ => None,
        }
    }

    /// Sum of requirement violations; 0 iff `g` matches.
    pub fn score(&self, g: &Graph, budget: &mut Budget) -> Result<usize> {
        let p = InvariantProfile::of_with(g, budget)?;
        Ok(usize::from(g.order() != self.order)
            + self.requirements.iter().map(|r| r.violation(g, &p)).sum::<usize>())
    }

    /// The enumeration universe with every hereditary or leaf filter the
    /// requirements allow.
    fn universe(&self) -> Result<UniverseSpec> {
        let mut spec = UniverseSpec::new(self.order);
        for r in &self.requirements {
            match r {
                Requirement::KConnected(k) if *k >= 1 => spec = spec.k_connected(*k),
                Requirement::InducedFree(names) => {
                    let names: Vec<&str> = names.iter().map(String::as_str).collect();
                    spec = spec.induced_free(&names);
                }
                _ => {}
            }
        }
        spec.validate()?;
        Ok(spec)
    }
}

pub fn witness_search(profile: &WitnessProfile, mode: SearchMode, r: &Runner) -> Result<CheckReport> {
    let params = json!({ "profile": profile, "mode": mode });
    let mut d = Draft::new("witness-search", params);
    match mode {
        SearchMode::Exhaustive => {
            if profile.order > MAX_EXHAUSTIVE_ORDER {
                return Err(Error::UniverseTooLarge(format!(
                    "exhaustive witness search supports order ≤ {MAX_EXHAUSTIVE_ORDER}, got {}",
                    profile.order
                )));
            }
            let spec = profile.universe()?;
            let t = d.scan(r, format!("profile {} universe n={}", profile.name, profile.order), &spec, |g, t, b| {
                if profile.score(g, b)? == 0 {
                    t.add_to_class("witnesses", g);
                }
                Ok(())
            })?;
            for g6 in t.classes.get("witnesses").into_iter().flat_map(|m| m.values()) {
                let g = graph6::decode(g6)?;
                d.witness(GraphRecord::new(&g, format!("matches profile {}", profile.name)));
            }
            let mut t = t;
            let found = t.classes.remove("witnesses").map_or(0, |m| m.len());
            d.detail("witness_count", json!(found));
            d.absorb(t);
            Ok(d.finish((found == 0).then_some(Outcome::NotFound)))
        }
        SearchMode::Randomized { budget, seed } => {
            d.seed(seed);
            let (found, evaluations, best) = local_search(profile, budget, seed, r)?;
            d.absorb(crate::runner::Tally {
                examined: evaluations,
                ..Default::default()
            });
            d.universe_label(format!("random order-{} graphs by edge flips", profile.order));
            d.detail("best_score", json!(best));
            match found {
                Some(g) => {
                    d.witness(GraphRecord::new(&g, format!("matches profile {}", profile.name)));
                    Ok(d.finish(None))
                }
                None => Ok(d.finish(Some(Outcome::Partial))),
            }
        }
    }
}

/// Flips one random pair per step, keeping non-worsening moves (and rare
/// worsening ones) and restarting after a long plateau.
fn local_search(
    profile: &WitnessProfile,
    budget: u64,
    seed: u64,
    r: &Runner,
) -> Result<(Option<Graph>, u64, usize)> {
    const RESTART_AFTER: u64 = 400;
    let n = profile.order;
    if n < 2 {
        return Err(Error::InvalidParameter("randomized search needs order ≥ 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let score = |g: &Graph| -> Result<usize> {
        match profile.score(g, &mut r.fresh_budget()) {
            Err(Error::Timeout(_)) => Ok(usize::MAX),
            other => other,
        }
    };
    let fresh = |rng: &mut ChaCha8Rng| -> Graph {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges).expect("valid random edges")
    };
    let mut g = fresh(&mut rng);
    let mut cur = score(&g)?;
    let mut best = cur;
    let mut evaluations = 1;
    let mut stale = 0;
    while cur > 0 && evaluations < budget {
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        let h = if g.has_edge(u, v) { g.without_edge(u, v)? } else { g.with_edge(u, v)? };
        let s = score(&h)?;
        evaluations += 1;
        if s < cur {
            stale = 0;
        } else {
            stale += 1;
        }
        if s <= cur || rng.gen_bool(0.02) {
            g = h;
            cur = s;
            best = best.min(s);
        }
        if stale > RESTART_AFTER && cur > 0 {
            g = fresh(&mut rng);
            cur = score(&g)?;
            evaluations += 1;
            stale = 0;
        }
    }
    Ok(((cur == 0).then_some(g), evaluations, best))
}

/// Finds every order-7 witness of the traceable, non-cummerbund-covered
/// profile, then for each witness edge `uv` repeatedly subdivides the edge
/// between `u` and the newest vertex up to `max_order`, recording the edges
/// whose subdivisions stay detour covered and not cummerbund covered at every
/// order.
pub fn subdivision_witness(max_order: usize, r: &Runner) -> Result<CheckReport> {
    if !(8..=16).contains(&max_order) {
        return Err(Error::InvalidParameter(format!("max order must be in 8..=16, got {max_order}")));
    }
    let profile = WitnessProfile::traceable_uncovered();
    let base = witness_search(&profile, SearchMode::Exhaustive, r)?;
    let mut d = Draft::new("subdivision-witness", json!({ "profile": "a", "max_order": max_order }));
    let mut t = crate::runner::Tally {
        examined: base.universe_size,
        ..Default::default()
    };
    t.add("witnesses", base.witnesses.len() as u64);
    d.absorb(t);
    let mut eligible = Vec::new();
    let mut examined = 0u64;
    for rec in &base.witnesses {
        let w = graph6::decode(&rec.graph6)?;
        d.witness(rec.clone());
        for (u, v) in w.edges() {
            let mut h = w.clone();
            let mut newest = v;
            let mut ok = true;
            let mut last = None;
            for n in w.order() + 1..=max_order {
                h = h.subdivide_edge(u, newest)?;
                newest = n - 1;
                examined += 1;
                let p = InvariantProfile::of(&h);
                let holds = p.kappa >= 2 && p.detour_covered && !p.cummerbund_covered;
                last = Some((p.circumference, p.detour_order));
                if !holds {
                    ok = false;
                    break;
                }
            }
            if ok {
                let (c, l) = last.expect("at least one subdivision");
                eligible.push(json!({
                    "witness": rec.graph6,
                    "edge": [u, v],
                    "final": graph6::encode(&h),
                    "final_circumference": c,
                    "final_detour_order": l,
                }));
            }
        }
    }
    d.detail("subdivided_graphs_examined", json!(examined));
    d.detail("eligible_edges", json!(eligible));
    if base.witnesses.is_empty() {
        return Ok(d.finish(Some(Outcome::NotFound)));
    }
    if eligible.is_empty() {
        d.mismatch("no witness edge keeps the profile under repeated subdivision");
    }
    Ok(d.finish(None))
}
