//! Grid search against a one-dimensional oracle.
//!
//! For fixed `p1` every objective is affine in `p2`, and the feasible `p2`
//! form an interval, so the exact maximum over `p2` sits at an endpoint.
//! Scanning `p1` densely then gives the true maximum without any 2-D grid.

use horadam::bounds::{bound_a2, ClassPoint, Variant};
use horadam::poly::{family_params, Family};
use horadam::verify::{search_max, GridSpec, Objective, VIOLATION_TOL};

fn oracle(pt: &ClassPoint, objective: Objective) -> f64 {
    let (h2, h3) = (pt.h2(), pt.h3());
    let slope = (3.0 * h2 * h2 - 4.0 * h3) / (2.0 * h2);
    let steps = 200_000;
    let mut best = 0.0f64;
    for i in 0..=steps {
        let p1 = -1.0 + 2.0 * i as f64 / steps as f64;
        let centre = slope * p1 * p1;
        let (lo, hi) = ((centre - 1.0).max(-1.0), (centre + 1.0).min(1.0));
        if lo > hi {
            continue;
        }
        for p2 in [lo, hi] {
            let a2 = h2 * p1 / 2.0;
            let a3 = (h2 * p2 + h3 * p1 * p1) / 3.0;
            let v = match objective {
                Objective::A2 => a2.abs(),
                Objective::A3 => a3.abs(),
                Objective::FeketeSzego(eta) => (a3 - eta * a2 * a2).abs(),
            };
            best = best.max(v);
        }
    }
    best
}

fn points() -> Vec<ClassPoint> {
    let mut out = Vec::new();
    for tag in [
        Family::Fibonacci,
        Family::Pell,
        Family::ChebyshevU,
        Family::Lucas,
        Family::ChebyshevT,
    ] {
        for x in [0.3, 0.6, 1.0, 1.7] {
            out.push(ClassPoint::new(family_params(tag), x));
        }
    }
    out
}

#[test]
fn search_matches_oracle() {
    let grid = GridSpec::default();
    let objectives = [
        Objective::A2,
        Objective::A3,
        Objective::FeketeSzego(0.0),
        Objective::FeketeSzego(1.0),
        Objective::FeketeSzego(3.0),
        Objective::FeketeSzego(-2.0),
    ];
    for pt in points() {
        for obj in objectives {
            let found = search_max(&pt, obj, &grid).unwrap();
            let truth = oracle(&pt, obj);
            assert!(
                (found.max_value - truth).abs() <= 1e-3 * truth.max(1.0),
                "{} x={} {obj:?}: grid {} oracle {truth}",
                pt.params.family,
                pt.x,
                found.max_value
            );
            assert!(found.max_value <= truth + 1e-9);
        }
    }
}

#[test]
fn a2_attains_min_of_cap_and_bound() {
    for pt in points() {
        let r = search_max(&pt, Objective::A2, &GridSpec::default()).unwrap();
        let bound = bound_a2(&pt, Variant::Derived).map_or(f64::INFINITY, |b| b.value);
        let expected = (pt.h2().abs() / 2.0).min(bound);
        assert!(
            (r.max_value - expected).abs() <= 1e-3,
            "{pt:?}: {} vs {expected}",
            r.max_value
        );
        assert!(r.margin_derived >= -VIOLATION_TOL);
        assert!((oracle(&pt, Objective::A2) - expected).abs() <= 1e-4);
    }
}

#[test]
fn fekete_szego_stays_below_derived_bound() {
    for pt in points() {
        for eta in [-3.0, 0.0, 0.5, 1.0, 2.0, 3.0, 7.0] {
            let r = search_max(&pt, Objective::FeketeSzego(eta), &GridSpec::new(101).unwrap()).unwrap();
            assert!(!r.is_violation(), "{pt:?} eta={eta}: {r:?}");
        }
    }
}

#[test]
fn eta_one_reaches_a_third_of_h2() {
    for pt in points() {
        let r = search_max(&pt, Objective::FeketeSzego(1.0), &GridSpec::default()).unwrap();
        assert!((r.max_value - pt.h2().abs() / 3.0).abs() <= 1e-3);
        // The published bound is twice what is reachable.
        assert!((r.bound_published - 2.0 * r.bound_derived).abs() <= 1e-12);
    }
}

#[test]
fn refinement_improves_on_the_coarse_grid() {
    let pt = ClassPoint::new(family_params(Family::Fibonacci), 1.0);
    let coarse = GridSpec::new(21).unwrap().with_refine_rounds(0);
    let refined = GridSpec::new(21).unwrap();
    let c = search_max(&pt, Objective::A2, &coarse).unwrap();
    let r = search_max(&pt, Objective::A2, &refined).unwrap();
    let target = 1.0 / 5f64.sqrt();
    assert!(r.max_value >= c.max_value);
    assert!((r.max_value - target).abs() < 1e-4);
    assert!((c.max_value - target).abs() > 1e-3);
}
