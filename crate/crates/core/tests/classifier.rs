use std::collections::HashSet;

use skein_core::classify::{
    classify_window, corollary_check, enumerate_candidates, match_realizations,
    reference_realizations, RealizationIndex,
};
use skein_core::table::mod2_annihilator;
use skein_core::{DegreeWindow, KnotExpr, KnotTable, LPoly1, SearchConfig};

fn window(lo: i64, hi: i64) -> DegreeWindow {
    DegreeWindow::new(lo, hi).unwrap()
}

#[test]
fn count_law_for_span_ten() {
    for lo in (-20..=20).step_by(2) {
        let c = enumerate_candidates(window(lo, lo + 10));
        assert_eq!(c.len(), 16, "lo={lo}");
        for p in &c {
            let minus_one = p - &LPoly1::one(p.ring());
            assert!(minus_one.is_divisible_by(&mod2_annihilator()).unwrap());
        }
    }
}

#[test]
fn realizations_reverify() {
    let table = KnotTable::bundled();
    let index = RealizationIndex::build(&table, &SearchConfig::default()).unwrap();
    for lo in [-4, -2] {
        let w = window(lo, lo + 10);
        let report = match_realizations(w, &enumerate_candidates(w), &table, &index).unwrap();
        assert!(report.is_fully_realized());
        for e in &report.entries {
            let expr = e.realization.as_ref().unwrap();
            assert_eq!(expr.eval_mod(2, 1, &table).unwrap(), e.polynomial);
            assert_eq!(e.matches_reference, Some(true), "{}", e.polynomial);
        }
    }
}

#[test]
fn mirror_and_shift_closure() {
    let table = KnotTable::bundled();
    let index = RealizationIndex::build(&table, &SearchConfig::default()).unwrap();
    let shift = KnotExpr::torus(7).unwrap();
    for lo in [-4, -2] {
        let w = window(lo, lo + 10);
        for p in enumerate_candidates(w) {
            let (e, _) = index.lookup(&p).unwrap();
            assert!(index.lookup(&p.mirror()).is_some(), "mirror of {p}");
            let shifted = e.connect(&shift);
            assert_eq!(shifted.eval_mod(2, 1, &table).unwrap(), p.shift(6));
        }
    }
}

#[test]
fn reference_multisets_match() {
    let table = KnotTable::bundled();
    for lo in [-4, -2] {
        let w = window(lo, lo + 10);
        let reference = reference_realizations(w).unwrap();
        let from_ref: HashSet<LPoly1> = reference.iter().map(|(_, p)| p.clone()).collect();
        let cands: HashSet<LPoly1> = enumerate_candidates(w).into_iter().collect();
        assert_eq!(reference.len(), 16);
        assert_eq!(from_ref, cands);
        for (e, p) in &reference {
            assert_eq!(&e.eval_mod(2, 1, &table).unwrap(), p, "{e}");
        }
    }
}

#[test]
fn corollary_bound() {
    let table = KnotTable::bundled();
    let config = SearchConfig::default();
    let index = RealizationIndex::build(&table, &config).unwrap();
    let low = classify_window(window(-4, 6), &table, &config).unwrap();
    let mid = classify_window(window(-2, 8), &table, &config).unwrap();
    let out = corollary_check(&low, &mid, &table, &index).unwrap();
    assert_eq!(out.t, 7);
    assert_eq!(out.reference_max, 6);
    for e in &out.shifted.entries {
        let expr = e.realization.as_ref().unwrap();
        assert_eq!(expr.eval_mod(2, 1, &table).unwrap(), e.polynomial);
        assert!(e.braid_index_bound.unwrap() <= 7);
    }
}

#[test]
fn wider_window_is_exploratory() {
    let table = KnotTable::bundled();
    let report = classify_window(window(-4, 8), &table, &SearchConfig::default()).unwrap();
    assert_eq!(report.candidate_count, 32);
    assert_eq!(report.realized_count + report.unrealized_count, 32);
}
