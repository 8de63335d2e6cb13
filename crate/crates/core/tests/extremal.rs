use hypermatch::constructions::h12;
use hypermatch::extremal::{
    candidate_points, certify_counterexample, closed_form_max, max_matching_structural_bound,
    realize_structural_matching, sweep_max_sigma2, threshold, CandidateFormula,
};
use hypermatch::matching::{max_matching, MatchingCertificate};

#[test]
fn sweep_equals_closed_form() {
    for n in (15..=60).step_by(3) {
        let sweep = sweep_max_sigma2(n).unwrap();
        assert!(sweep.construction_backed);
        assert_eq!(sweep.max, closed_form_max(n).unwrap(), "n={n}");
        let cands = candidate_points(n).unwrap();
        let best = cands.iter().filter(|c| c.in_range).map(|c| c.value).max();
        assert_eq!(best, Some(sweep.max), "n={n}");
        assert!(sweep.argmax.iter().any(|&(x, y)| {
            y == n / 3 - x - 1
                && cands
                    .iter()
                    .any(|c| c.in_range && c.x == x && c.value == sweep.max)
        }));
    }
}

#[test]
fn argmax_for_multiples_of_fifteen() {
    for n in [15, 30, 45, 60] {
        let sweep = sweep_max_sigma2(n).unwrap();
        let x = (n + 1) / 5;
        assert!(sweep.argmax.contains(&(x, n / 3 - x - 1)), "n={n}");
        let c = candidate_points(n).unwrap();
        assert!(c
            .iter()
            .any(|c| c.formula == CandidateFormula::F2 && c.x == x && c.value == sweep.max));
    }
}

#[test]
fn formula_sweep_beyond_construction_range() {
    let sweep = sweep_max_sigma2(75).unwrap();
    assert!(!sweep.construction_backed);
    assert_eq!(sweep.max, closed_form_max(75).unwrap());
}

#[test]
fn structural_bound_is_exact() {
    for n in [9, 12, 15, 18] {
        for x in 0..n / 3 {
            for y in 0..n / 3 - x {
                let g = h12(n, x, y).unwrap().graph;
                let b = max_matching_structural_bound(n, x, y).unwrap();
                assert_eq!(max_matching(&g).size, b.size, "n={n} x={x} y={y}");
                let m = realize_structural_matching(n, x, y, b.counts);
                assert_eq!(MatchingCertificate::verify(&g, m).unwrap().size, b.size);
            }
        }
    }
    for n in [21, 24, 27, 30, 33] {
        for x in 0..n / 3 {
            let y = n / 3 - x - 1;
            let g = h12(n, x, y).unwrap().graph;
            let b = max_matching_structural_bound(n, x, y).unwrap();
            assert_eq!(max_matching(&g).size, b.size, "n={n} x={x} y={y}");
            assert!(b.size <= x + y);
        }
    }
}

#[test]
fn counterexample_conditions_through_33() {
    for n in (15..=33).step_by(3) {
        let r = certify_counterexample(n).unwrap();
        assert!(r.all_conditions_hold, "n={n}");
        assert!(r.closed_form_agrees);
        assert_eq!(r.threshold, threshold(n));
        assert!(r.max_matching < n / 3);
        assert!(r.independence_number <= n / 3);
    }
}

#[test]
fn certified_values() {
    for (n, sigma2, thr) in [(15, 94, 92), (21, 201, 198), (30, 442, 432)] {
        let r = certify_counterexample(n).unwrap();
        assert_eq!((r.sigma2, r.threshold), (sigma2, thr));
        assert!(r.all_conditions_hold);
    }
}
