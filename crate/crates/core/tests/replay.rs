//! Counterexample search and witness replay.

use softtop::suite::{replay, run_suite, search_counterexample, SearchOutcome, PROPERTIES};
use softtop::SuiteConfig;

fn found(id: &str) -> softtop::PropertyCase {
    match search_counterexample(id, 64, 7, None).unwrap() {
        SearchOutcome::Found(c) => c,
        SearchOutcome::Exhausted { tried } => panic!("{id}: no counterexample in {tried} candidates"),
    }
}

#[test]
fn inverted_probe_fails_immediately_and_replays() {
    let c = found("not-thm-3.4");
    assert!(!c.holds());
    assert!(c.population.contains("attempt=0"), "{}", c.population);
    let w = c.witness.expect("failures carry a witness");
    assert!(!replay("not-thm-3.4", &w).unwrap());
    // The same instance satisfies the real statement.
    assert!(replay("thm-3.4", &w).unwrap());
}

#[test]
fn converse_search_finds_continuity_without_open_preimages() {
    let c = found("prop-2.16-converse");
    let w = c.witness.unwrap();
    assert!(w.contains("\"soft_continuous\":true"), "{w}");
    assert!(!replay("prop-2.16-converse", &w).unwrap());
    assert!(replay("prop-2.16", &w).unwrap());
}

#[test]
fn searches_are_deterministic_per_seed() {
    assert_eq!(
        search_counterexample("not-thm-3.4", 64, 11, Some(1)).unwrap(),
        search_counterexample("not-thm-3.4", 64, 11, Some(4)).unwrap()
    );
}

#[test]
fn homomorphism_continuity_search_is_exhausted() {
    match search_counterexample("thm-5.11", 64, 0, None).unwrap() {
        SearchOutcome::Exhausted { tried } => assert!(tried > 0),
        SearchOutcome::Found(c) => panic!("unexpected counterexample {}", c.line()),
    }
}

#[test]
fn replay_rejects_unknown_or_malformed_input() {
    assert!(replay("thm-3.4", "not json").is_err());
    assert!(replay("thm-6.5", "{}").is_err());
    assert!(search_counterexample("no-such-property", 1, 0, None).is_err());
}

#[test]
fn every_listed_property_runs() {
    let ids: Vec<String> = PROPERTIES.iter().map(|p| p.id.to_string()).collect();
    let cases = run_suite(&ids, &SuiteConfig { seed: 1, budget: 8, threads: None }).unwrap();
    for p in PROPERTIES {
        let mine: Vec<_> = cases.iter().filter(|c| c.property == p.id).collect();
        assert!(!mine.is_empty(), "{} produced no cases", p.id);
        assert!(mine.iter().all(|c| c.checked > 0), "{} checked nothing", p.id);
        // Deliberately inverted probes must fail; everything else must hold.
        let inverted = !p.default;
        assert_eq!(mine.iter().any(|c| !c.holds()), inverted, "{}", p.id);
        for c in mine.iter().filter(|c| !c.holds()) {
            assert!(c.witness.is_some(), "{} failed without a witness", p.id);
        }
    }
}
