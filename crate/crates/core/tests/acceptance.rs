//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use horadam::bounds::{
    chebyshev_corollary_check, fekete_szego_bound, published_second_branch, published_threshold, ClassPoint, Variant,
};
use horadam::poly::{binet_eval, characteristic_roots, family_params, horadam, horadam_eval, horadam_sequence, Family};
use horadam::rational::{int, ratio, to_f64, Rational};
use horadam::series::{generating_series, TruncatedSeries};
use horadam::verify::{a3_forms, search_max, GridSpec, Objective, SchwarzPoint, VIOLATION_TOL};
use num_traits::{Signed, Zero};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn generating_identity() -> Outcome {
    let start = Instant::now();
    let xs = [int(-2), int(-1), ratio(-1, 2), int(0), ratio(1, 2), int(1), int(2)];
    let mut checked = 0;
    for tag in Family::NAMED {
        let params = family_params(tag);
        let seq = horadam_sequence(&params, 50);
        for x in &xs {
            let s = generating_series(&params, x, 49);
            for (k, poly) in seq.iter().enumerate() {
                ensure(s.coeffs()[k] == poly.eval(x), || format!("{tag} x = {x} n = {}", k + 1))?;
                checked += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("{checked} coefficients exact in {:.2?}", start.elapsed()))
}

fn binet_oracle() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut checked = 0;
    for tag in Family::NAMED {
        let params = family_params(tag);
        for x in [0.5, 1.0, 2.0] {
            if characteristic_roots(&params, x).is_repeated(&params, x) {
                continue;
            }
            for n in 1..=50 {
                let rec = horadam_eval(&params, n, x).map_err(|e| e.to_string())?;
                let closed = binet_eval(&params, n, x).map_err(|e| e.to_string())?;
                // An exact zero of the sequence has no relative error; compare absolutely there.
                let err = if rec == 0.0 {
                    closed.abs()
                } else {
                    ((closed - rec) / rec).abs()
                };
                ensure(err <= 1e-9, || format!("{tag} x = {x} n = {n}: {closed} vs {rec}"))?;
                worst = worst.max(err);
                checked += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{checked} values, worst relative error {worst:.2e}"))
}

fn chebyshev_corollary() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut worst_ratio = 0.0f64;
    for k in 0..=8 {
        let t = 0.55 + 0.05 * k as f64;
        for eta in [1.0, 2.0, 3.0, 5.0] {
            let c = chebyshev_corollary_check(t, eta).map_err(|e| e.to_string())?;
            ensure(c.max_residual() <= 1e-12, || format!("t = {t} eta = {eta}: {c:?}"))?;
            worst = worst.max(c.max_residual());
            if let Some(r) = c.second_branch_ratio {
                let dev = (r - t.powi(3)).abs();
                ensure(dev <= 1e-12, || format!("t = {t} eta = {eta}: ratio {r} vs t^3"))?;
                worst_ratio = worst_ratio.max(dev);
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "max residual {worst:.2e}, ratio - t^3 at most {worst_ratio:.2e}"
    ))
}

fn corollary_value() -> Outcome {
    let pt = ClassPoint::new(family_params(Family::ChebyshevU), 0.75).with_eta(1.0);
    let v = fekete_szego_bound(&pt, Variant::Published)
        .map_err(|e| e.to_string())?
        .value;
    ensure(v == 1.0, || format!("got {v:?}"))?;
    Ok("published bound is exactly 1".into())
}

fn harness() -> Outcome {
    let start = Instant::now();
    let grid = GridSpec::new(201).map_err(|e| e.to_string())?;
    let objectives = [
        Objective::A2,
        Objective::FeketeSzego(0.0),
        Objective::FeketeSzego(1.0),
        Objective::FeketeSzego(3.0),
    ];
    let mut min_margin = f64::INFINITY;
    let mut cells = 0;
    for tag in [Family::Fibonacci, Family::Pell, Family::ChebyshevU] {
        for x in [0.6, 1.0] {
            let pt = ClassPoint::new(family_params(tag), x);
            for obj in objectives {
                let r = search_max(&pt, obj, &grid).map_err(|e| format!("{tag} x = {x} {obj:?}: {e}"))?;
                ensure(r.margin_derived >= -VIOLATION_TOL, || {
                    format!("{tag} x = {x} {}: margin {}", obj.label(), r.margin_derived)
                })?;
                min_margin = min_margin.min(r.margin_derived);
                if obj == Objective::A2 {
                    let expected = (pt.h2().abs() / 2.0).min(r.bound_derived);
                    ensure((r.max_value - expected).abs() <= 1e-3, || {
                        format!("{tag} x = {x}: max |a2| {} vs {expected}", r.max_value)
                    })?;
                    if tag == Family::Fibonacci && x == 1.0 {
                        ensure((r.max_value - 0.44721).abs() <= 1e-3, || {
                            format!("Fibonacci x = 1: {}", r.max_value)
                        })?;
                    }
                }
                cells += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "{cells} cells, smallest margin {min_margin:.3e}, {:.2?}",
        start.elapsed()
    ))
}

fn a3_consistency() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let strategy = (
        proptest::sample::select(Family::NAMED.to_vec()),
        0.05f64..2.0,
        -1.0f64..1.0,
        -1.0f64..1.0,
    );
    let (mut feasible, mut worst) = (0usize, 0.0f64);
    let mut draws = 0;
    while feasible < 10_000 {
        draws += 1;
        ensure(draws <= 1_000_000, || format!("only {feasible} feasible points found"))?;
        let (tag, x, p1, p2) = strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let pt = ClassPoint::new(family_params(tag), x);
        let Ok(s) = SchwarzPoint::solve(&pt, p1, p2) else {
            continue;
        };
        if !s.is_feasible() {
            continue;
        }
        let (direct, via_gap) = a3_forms(&pt, &s);
        let dev = (direct - via_gap).abs();
        ensure(dev <= 1e-9, || {
            format!("{tag} x = {x} p = ({p1}, {p2}): {direct} vs {via_gap}")
        })?;
        worst = worst.max(dev);
        feasible += 1;
    }
    Ok(format!("{feasible} feasible points of {draws}, worst {worst:.2e}"))
}

fn inversion() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let coeff = (-20i64..=20, 1i64..=9).prop_map(|(n, d)| ratio(n, d));
    let tail = proptest::collection::vec(coeff, 9);
    for case in 0..100 {
        let rest = tail.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let mut c = vec![Rational::zero(), int(1)];
        c.extend(rest);
        let f = TruncatedSeries::new(c, 10);
        let g = f.invert(10).map_err(|e| e.to_string())?;
        ensure(
            f.compose(&g).map_err(|e| e.to_string())? == TruncatedSeries::identity(10),
            || format!("case {case}: f(g(w)) != w"),
        )?;
        let (a2, a3, a4) = (f.coeff(2), f.coeff(3), f.coeff(4));
        ensure(g.coeff(2) == -a2.clone(), || format!("case {case}: w^2"))?;
        ensure(g.coeff(3) == int(2) * &a2 * &a2 - &a3, || format!("case {case}: w^3"))?;
        let w4 = -(int(5) * &a2 * &a2 * &a2 - int(5) * &a2 * &a3 + &a4);
        ensure(g.coeff(4) == w4, || format!("case {case}: w^4"))?;
    }
    Ok("100 series invert exactly; w^2, w^3, w^4 coefficients match".into())
}

fn continuity() -> Outcome {
    let delta = 1e-3;
    let mut worst_ratio = 0.0f64;
    for tag in [Family::Fibonacci, Family::Pell, Family::ChebyshevU] {
        for x in [0.6, 0.75, 1.5] {
            let pt = ClassPoint::new(family_params(tag), x);
            let bound = |eta: f64| fekete_szego_bound(&pt.clone().with_eta(eta), Variant::Derived).map(|r| r.value);
            let Ok(at_zero) = fekete_szego_bound(&pt.clone().with_eta(0.0), Variant::Derived) else {
                continue;
            };
            let cutoff = at_zero.threshold.expect("derived reports carry a threshold");
            let (h2, h3) = (pt.h2(), pt.h3());
            let lipschitz = 2.0 * h2.abs() * h2 * h2 / (6.0 * h2 * h2 - 8.0 * h3).abs();
            // Both branch points 1 ± cutoff, 200 steps either side.
            for centre in [1.0 - cutoff, 1.0 + cutoff] {
                for k in -200..200 {
                    let eta = centre + k as f64 * delta;
                    let jump =
                        (bound(eta + delta).map_err(|e| e.to_string())? - bound(eta).map_err(|e| e.to_string())?).abs();
                    let ratio = jump / (lipschitz * delta);
                    ensure(ratio <= 1.0 + 1e-9, || {
                        format!("{tag} x = {x} eta = {eta}: jump {jump}")
                    })?;
                    worst_ratio = worst_ratio.max(ratio);
                }
            }
        }
    }

    // Published variant: at |eta - 1| equal to the cutoff the first branch is exactly
    // twice the second. Checked in exact arithmetic on a t grid for Chebyshev U.
    let u = family_params(Family::ChebyshevU);
    let (h2p, h3p) = (horadam(&u, 2).unwrap(), horadam(&u, 3).unwrap());
    for k in 11..=19 {
        let t = ratio(k, 20);
        let (h2, h3) = (h2p.eval(&t), h3p.eval(&t));
        let tau = int(1) - (int(4) * &h3).abs() / (int(3) * &h2 * &h2);
        let first = (int(2) * &h2).abs() / int(3);
        let second = h2.abs() * &h2 * &h2 * &tau / (int(3) * &h2 * &h2 - int(4) * &h3).abs();
        ensure(first == int(2) * &second, || format!("exact gap fails at t = {t}"))?;
        let pt = ClassPoint::new(u.clone(), to_f64(&t));
        let tau_f = published_threshold(&pt).map_err(|e| e.to_string())?;
        let second_f = published_second_branch(&pt.clone().with_eta(1.0 + tau_f)).map_err(|e| e.to_string())?;
        let first_f = (2.0 * pt.h2()).abs() / 3.0;
        ensure((first_f - 2.0 * second_f).abs() <= 4.0 * f64::EPSILON * first_f, || {
            format!("float gap at t = {t}: {first_f} vs 2 * {second_f}")
        })?;
    }
    let pt = ClassPoint::new(u, 0.75);
    let second = published_second_branch(&pt.clone().with_eta(1.0 + 7.0 / 27.0)).map_err(|e| e.to_string())?;
    ensure((second - 0.5).abs() <= f64::EPSILON, || {
        format!("t = 0.75: second branch {second}")
    })?;
    Ok(format!(
        "jump at most {worst_ratio:.4} L delta; published branches differ by exactly 2 at the cutoff"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("generating function identity", generating_identity),
        ("Binet oracle", binet_oracle),
        ("Chebyshev corollary reproduction", chebyshev_corollary),
        ("Chebyshev Fekete-Szego value at t = 0.75", corollary_value),
        ("harness soundness and attainment", harness),
        ("a3 double-formula consistency", a3_consistency),
        ("series inversion", inversion),
        ("derived Fekete-Szego continuity", continuity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
