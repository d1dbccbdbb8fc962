//! Suite-level checks of the identity registry: a zero-residual sweep at
//! larger bounds than the unit tests, agreement of the two independent
//! verification routes for the rational-function identity, and witness
//! soundness under mutation.

use degenpoly::identities::{
    registry, sides_for, thm24_cleared_sides, verify, verify_all, verify_all_mutated, Params,
    Sides, Verdict,
};

#[test]
fn zero_residual_sweep() {
    let reports = verify_all(5, 5);
    for r in &reports {
        assert_ne!(r.verdict, Verdict::Fail, "{} at {}: {:?}", r.id, r.params, r.residual);
    }
    // At these bounds nothing is vacuous.
    assert!(reports.iter().all(|r| r.verdict == Verdict::Pass));
}

#[test]
fn rational_and_cleared_routes_agree() {
    for n in 0..=8 {
        let displayed = verify("thm2.4", &Params::for_n(n)).unwrap();
        let (lhs, rhs) = thm24_cleared_sides(n);
        let cleared_pass = lhs == rhs;
        assert_eq!(
            displayed.verdict == Verdict::Pass,
            cleared_pass,
            "routes disagree at n = {n}"
        );
        assert_eq!(displayed.verdict, Verdict::Pass, "n = {n}");
    }
}

#[test]
fn every_case_is_buildable_at_its_smallest_point() {
    for case in registry() {
        let p = case
            .grid(2, 2)
            .into_iter()
            .next()
            .unwrap_or_else(|| panic!("{} has an empty grid at (2,2)", case.id));
        let sides = sides_for(case.id, &p).unwrap();
        assert!(sides.holds(), "{} at {p}", case.id);
        // The one rational-arithmetic case should really come back as such.
        if case.id == "thm2.4" {
            assert!(matches!(sides, Sides::Rats(_)));
        }
    }
}

#[test]
fn chain_cases_compare_every_adjacent_pair() {
    // The three-sided chains must actually contain three entries, not
    // collapse to a two-way comparison.
    for id in ["thm2.2-symbolic", "cor2.3"] {
        match sides_for(id, &Params::for_n(2)).unwrap() {
            Sides::Polys(v) => assert_eq!(v.len(), 3, "{id}"),
            Sides::Rats(_) => panic!("{id} should be polynomial"),
        }
    }
}

#[test]
fn mutations_are_caught_case_by_case() {
    // Spot-check a representative subset here; the acceptance suite runs
    // all nineteen.
    for id in ["eq15", "thm2.4", "cor2.5", "thm2.9-symbolic", "aux-sum"] {
        let reports = verify_all_mutated(Some(id), 6, 6);
        let fails: Vec<_> = reports.iter().filter(|r| r.verdict == Verdict::Fail).collect();
        assert!(!fails.is_empty(), "mutation of {id} went undetected");
        assert!(fails.iter().all(|r| r.id == id), "collateral failures from {id}");
        assert!(fails.iter().all(|r| r.residual.is_some()));
    }
    // Unmutated control: the same sweep is clean.
    assert!(verify_all(6, 6).iter().all(|r| r.verdict != Verdict::Fail));
}
