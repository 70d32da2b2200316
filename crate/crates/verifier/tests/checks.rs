use longcycle_core::{families, graph6, InvariantProfile};
use longcycle_verifier::{
    run_check, witness_search, CheckParams, CheckReport, GraphRecord, Outcome, Runner, SearchMode, Tally,
    WitnessProfile, CHECK_IDS,
};
use proptest::prelude::*;

fn params(n: usize) -> CheckParams {
    CheckParams {
        n: Some(n),
        ..CheckParams::default()
    }
}

#[test]
fn report_json_round_trips() {
    let r = run_check("degree-cc", &params(7), &Runner::default()).unwrap();
    assert_eq!(r.outcome, Outcome::Pass);
    let back: CheckReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["check_id", "params", "universe_size", "outcome", "counterexamples", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn reruns_are_identical_modulo_time() {
    let a = run_check("connectivity-cc", &params(7), &Runner::default()).unwrap();
    let b = run_check("connectivity-cc", &params(7), &Runner::new(3, 5)).unwrap();
    assert_eq!(a.stable_json(), b.stable_json());
}

#[test]
fn connectivity_minima_from_the_examples() {
    let dc = |k, n| CheckParams {
        k: Some(k),
        n: Some(n),
        ..CheckParams::default()
    };
    for (k, n, min) in [(1, 7, 5), (2, 7, 7)] {
        let r = run_check("connectivity-dc", &dc(k, n), &Runner::default()).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        let key = format!("min_dc_n{n}");
        assert_eq!(r.details["summary"]["minima"][key]["value"], min);
    }
    let r = run_check(
        "connectivity-cc",
        &CheckParams {
            k: Some(2),
            n: Some(9),
            ..CheckParams::default()
        },
        &Runner::default(),
    )
    .unwrap();
    assert_eq!(r.details["summary"]["minima"]["min_cc_n9"]["value"], 6);
}

#[test]
fn girth_parts_report_their_minima() {
    for (part, n, value) in [("g4", 8, 6), ("g5", 10, 8)] {
        let p = CheckParams {
            part: Some(part.into()),
            n: Some(n),
            ..CheckParams::default()
        };
        let r = run_check("girth-cc", &p, &Runner::default()).unwrap();
        assert_eq!(r.outcome, Outcome::Pass, "{part}");
        assert_eq!(r.details["summary"]["minima"][format!("{part}_n{n}")]["value"], value);
    }
    let bad = CheckParams {
        part: Some("g6odd".into()),
        n: Some(12),
        ..CheckParams::default()
    };
    assert!(run_check("girth-cc", &bad, &Runner::default()).is_err());
}

#[test]
fn unknown_ids_and_oversized_requests_are_errors() {
    assert!(run_check("no-such-check", &CheckParams::default(), &Runner::default()).is_err());
    assert!(run_check("degree-cc", &params(11), &Runner::default()).is_err());
    let b = WitnessProfile::by_name("b").unwrap();
    assert!(witness_search(&b, SearchMode::Exhaustive, &Runner::default()).is_err());
    assert_eq!(CHECK_IDS.len(), 12);
}

#[test]
fn tiny_budget_gives_partial() {
    let r = run_check("degree-cc", &params(7), &Runner::default().with_budget(Some(1))).unwrap();
    assert_eq!(r.outcome, Outcome::Partial);
    assert!(r.counterexamples.is_empty());
    assert_eq!(r.outcome.exit_code(), 2);
}

#[test]
fn exhaustive_witness_search_finds_the_traceable_profile() {
    let a = WitnessProfile::traceable_uncovered();
    let r = witness_search(&a, SearchMode::Exhaustive, &Runner::default()).unwrap();
    assert_eq!(r.outcome, Outcome::Pass);
    assert!(!r.witnesses.is_empty());
    for w in &r.witnesses {
        let p = &w.profile;
        assert!(p.kappa >= 2 && p.detour_covered && !p.cummerbund_covered);
        assert_eq!((p.order, p.circumference, p.detour_order), (7, 6, 7));
    }
    // No order-5 graph is traceable with circumference 6.
    let mut impossible = a.clone();
    impossible.order = 5;
    let r = witness_search(&impossible, SearchMode::Exhaustive, &Runner::default()).unwrap();
    assert_eq!(r.outcome, Outcome::NotFound);
}

#[test]
fn randomized_search_is_seeded() {
    let b = WitnessProfile::cummerbund_only();
    let mode = SearchMode::Randomized { budget: 30, seed: 11 };
    let x = witness_search(&b, mode, &Runner::default()).unwrap();
    let y = witness_search(&b, mode, &Runner::default()).unwrap();
    assert_eq!(x.stable_json(), y.stable_json());
    assert_eq!(x.seed, Some(11));
    assert!(matches!(x.outcome, Outcome::Partial | Outcome::Pass));
    // A profile a member already satisfies is found on the first evaluations.
    let mut easy = WitnessProfile::traceable_uncovered();
    easy.requirements.clear();
    let r = witness_search(&easy, SearchMode::Randomized { budget: 5, seed: 1 }, &Runner::default()).unwrap();
    assert_eq!(r.outcome, Outcome::Pass);
    assert_eq!(r.witnesses.len(), 1);
}

#[test]
fn records_audit_against_recomputation() {
    let g = families::uncovered_cc(9).unwrap();
    let mut rec = GraphRecord::new(&g, "test");
    assert!(rec.audit());
    assert_eq!(rec.profile, InvariantProfile::of(&graph6::decode(&rec.graph6).unwrap()));
    rec.profile.cc += 1;
    assert!(!rec.audit());
    rec.graph6 = "not graph6 \u{7f}".into();
    assert!(!rec.audit());
}

#[test]
fn outcome_severity_and_exit_codes() {
    use Outcome::*;
    assert_eq!(Pass.worst(Partial), Partial);
    assert_eq!(Partial.worst(Counterexample), Counterexample);
    assert_eq!(Mismatch.worst(NotFound), Mismatch);
    assert_eq!([Pass, Partial, NotFound, Mismatch, Counterexample].map(Outcome::exit_code), [0, 2, 1, 1, 1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn results_do_not_depend_on_threads_or_shards(threads in 1usize..5, shards in 1usize..9) {
        let base = run_check("equal-girth", &params(6), &Runner::default()).unwrap();
        let other = run_check("equal-girth", &params(6), &Runner::new(threads, shards)).unwrap();
        prop_assert_eq!(base.stable_json(), other.stable_json());
    }

    #[test]
    fn tally_merge_is_order_insensitive(codes in proptest::collection::vec(0u64..1 << 15, 1..40), split in 0usize..40) {
        let graphs: Vec<_> = codes
            .iter()
            .map(|&c| {
                let edges: Vec<(usize, usize)> = (0..15)
                    .filter(|k| c >> k & 1 == 1)
                    .map(|k| PAIRS6[k])
                    .collect();
                longcycle_core::Graph::from_edge_list(6, &edges).unwrap()
            })
            .collect();
        let visit = |g: &longcycle_core::Graph, t: &mut Tally| {
            t.bump("seen");
            t.observe_min("size", g.size(), g);
            if g.size().is_multiple_of(3) {
                t.fail(g, "size divisible by three");
            }
            t.add_to_class("all", g);
        };
        let mut whole = Tally::default();
        graphs.iter().for_each(|g| visit(g, &mut whole));
        let cut = split.min(graphs.len());
        let (mut a, mut b) = (Tally::default(), Tally::default());
        graphs[..cut].iter().for_each(|g| visit(g, &mut a));
        graphs[cut..].iter().rev().for_each(|g| visit(g, &mut b));
        b.merge(a);
        prop_assert_eq!(&whole.counters, &b.counters);
        prop_assert_eq!(&whole.minima, &b.minima);
        prop_assert_eq!(&whole.classes, &b.classes);
        prop_assert_eq!(&whole.failures, &b.failures);
        prop_assert_eq!(whole.failure_count, b.failure_count);
    }
}

const PAIRS6: [(usize, usize); 15] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];
