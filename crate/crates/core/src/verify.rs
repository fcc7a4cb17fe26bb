//! Brute-force maximisation of `|a2|`, `|a3|` and `|a3 - eta a2^2|` over the
//! Schwarz-coefficient set that the coefficient identities allow.
//!
//! For a class point with `h2 = b x`, `h3 = p b x^2 + a q`:
//!
//! ```text
//! q1 = -p1
//! q2 = p1^2 (3 h2^2 - 4 h3) / (2 h2) - p2
//! a2 = h2 p1 / 2
//! a3 = a2^2 + h2 (p2 - q2) / 6 = (h2 p2 + h3 p1^2) / 3
//! ```
//!
//! A pair `(p1, p2)` in `[-1, 1]^2` is feasible when `|q2| <= 1`. The search
//! scans a uniform grid, then refines around the incumbent with progressively
//! finer local grids. Ties go to the lexicographically smallest `(p1, p2)`,
//! which makes the reduction independent of evaluation order.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_a2, bound_a3, fekete_szego_bound, BoundReport, ClassPoint, Variant};
use crate::error::{Error, Result};
use crate::poly::Family;

/// Slack on `|q2| <= 1` so boundary points computed with rounding stay feasible.
pub const FEASIBILITY_TOL: f64 = 1e-12;

/// A margin below `-VIOLATION_TOL` is reported as a bound violation.
pub const VIOLATION_TOL: f64 = 1e-6;

pub const MIN_GRID: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Objective {
    A2,
    A3,
    FeketeSzego(f64),
}

impl Objective {
    pub fn label(&self) -> String {
        match self {
            Objective::A2 => "a2".to_string(),
            Objective::A3 => "a3".to_string(),
            Objective::FeketeSzego(eta) => format!("fs(eta={eta})"),
        }
    }
}

/// Schwarz coefficients with `q1 = -p1` implicit and `q2` solved.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchwarzPoint {
    pub p1: f64,
    pub p2: f64,
    pub q2: f64,
}

impl SchwarzPoint {
    /// Solves `q2` from `p1`, `p2`. The result may be infeasible.
    pub fn solve(pt: &ClassPoint, p1: f64, p2: f64) -> Result<Self> {
        let slope = Landscape::slope(pt)?;
        Ok(SchwarzPoint {
            p1,
            p2,
            q2: slope * p1 * p1 - p2,
        })
    }

    pub fn q1(&self) -> f64 {
        -self.p1
    }

    pub fn is_feasible(&self) -> bool {
        self.p1.abs() <= 1.0 && self.p2.abs() <= 1.0 && self.q2.abs() <= 1.0 + FEASIBILITY_TOL
    }
}

/// `(a2, a3)` for a feasible Schwarz point, with `a3` taken from the `p2 - q2` form.
pub fn coeffs_from_schwarz(pt: &ClassPoint, s: &SchwarzPoint) -> Result<(f64, f64)> {
    check_normalized(pt)?;
    let h2 = pt.nonzero_h2()?;
    if !s.is_feasible() {
        return Err(Error::InfeasiblePoint(format!(
            "p1 = {}, p2 = {}, q2 = {}",
            s.p1, s.p2, s.q2
        )));
    }
    let a2 = h2 * s.p1 / 2.0;
    let a3 = a2 * a2 + h2 * (s.p2 - s.q2) / 6.0;
    Ok((a2, a3))
}

/// Both closed forms of `a3` at `s`: `(h2 p2 + h3 p1^2) / 3` and `a2^2 + h2 (p2 - q2) / 6`.
pub fn a3_forms(pt: &ClassPoint, s: &SchwarzPoint) -> (f64, f64) {
    let (h2, h3) = (pt.h2(), pt.h3());
    let direct = (h2 * s.p2 + h3 * s.p1 * s.p1) / 3.0;
    let a2 = h2 * s.p1 / 2.0;
    (direct, a2 * a2 + h2 * (s.p2 - s.q2) / 6.0)
}

fn check_normalized(pt: &ClassPoint) -> Result<()> {
    if pt.derivative_constant_term() != 1.0 {
        return Err(Error::AlphaShiftMismatch {
            alpha_shift: pt.alpha_shift,
            a: crate::rational::to_f64(&pt.params.a),
        });
    }
    Ok(())
}

/// Grid and refinement settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Points per axis of the coarse grid.
    pub resolution: usize,
    pub refine_rounds: usize,
    /// Each refinement round divides the spacing by this factor.
    pub shrink: usize,
    /// Replace `|p2| <= 1` with `|p2| <= 1 - |p1|^2`.
    pub schwarz_pick: bool,
    /// Number of phases per coefficient for the complex sweep; `None` keeps `p1`, `p2` real.
    pub phases: Option<usize>,
}

impl GridSpec {
    pub fn new(resolution: usize) -> Result<Self> {
        if resolution < MIN_GRID {
            return Err(Error::GridTooCoarse(resolution));
        }
        Ok(GridSpec {
            resolution,
            refine_rounds: 3,
            shrink: 10,
            schwarz_pick: false,
            phases: None,
        })
    }

    pub fn with_schwarz_pick(mut self, on: bool) -> Self {
        self.schwarz_pick = on;
        self
    }

    pub fn with_phases(mut self, phases: Option<usize>) -> Self {
        self.phases = phases.map(|k| k.max(1));
        self
    }

    pub fn with_refine_rounds(mut self, rounds: usize) -> Self {
        self.refine_rounds = rounds;
        self
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::new(201).expect("201 >= 11")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub objective: Objective,
    pub max_value: f64,
    /// In the complex sweep this holds the moduli `|p1|`, `|p2|`, `|q2|`.
    pub argmax: SchwarzPoint,
    /// Phases of `p1`, `p2` at the maximiser (complex sweep only).
    pub argmax_phases: Option<[f64; 2]>,
    /// `+inf` where the closed form divides by zero.
    #[serde(with = "extended_float")]
    pub bound_published: f64,
    #[serde(with = "extended_float")]
    pub bound_derived: f64,
    #[serde(with = "extended_float")]
    pub margin_derived: f64,
    pub grid: GridSpec,
}

impl SearchResult {
    pub fn is_violation(&self) -> bool {
        self.margin_derived < -VIOLATION_TOL
    }
}

/// JSON has no infinities; they travel as the strings `"inf"`, `"-inf"`, `"nan"`.
mod extended_float {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if v.is_nan() {
            s.serialize_str("nan")
        } else if *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Number(v) => Ok(v),
            Repr::Text(t) => match t.as_str() {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                "nan" => Ok(f64::NAN),
                other => Err(serde::de::Error::custom(format!("not a number: {other:?}"))),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Candidate {
    value: f64,
    p1: f64,
    p2: f64,
}

impl Candidate {
    /// Total order: larger value first, then smaller `(p1, p2)`.
    fn rank(&self, other: &Candidate) -> Ordering {
        self.value
            .total_cmp(&other.value)
            .then_with(|| other.p1.total_cmp(&self.p1))
            .then_with(|| other.p2.total_cmp(&self.p2))
    }

    fn best(self, other: Candidate) -> Candidate {
        if other.rank(&self) == Ordering::Greater {
            other
        } else {
            self
        }
    }
}

/// Objective restricted to the feasible set.
struct Landscape {
    h2: f64,
    slope: f64,
    objective: Objective,
    schwarz_pick: bool,
}

impl Landscape {
    fn slope(pt: &ClassPoint) -> Result<f64> {
        let h2 = pt.nonzero_h2()?;
        Ok((3.0 * h2 * h2 - 4.0 * pt.h3()) / (2.0 * h2))
    }

    fn new(pt: &ClassPoint, objective: Objective, grid: &GridSpec) -> Result<Self> {
        Ok(Landscape {
            h2: pt.nonzero_h2()?,
            slope: Self::slope(pt)?,
            objective,
            schwarz_pick: grid.schwarz_pick,
        })
    }

    fn eval_real(&self, p1: f64, p2: f64) -> Option<f64> {
        if p1.abs() > 1.0 || p2.abs() > 1.0 {
            return None;
        }
        if self.schwarz_pick && p2.abs() > 1.0 - p1 * p1 + FEASIBILITY_TOL {
            return None;
        }
        let q2 = self.slope * p1 * p1 - p2;
        if q2.abs() > 1.0 + FEASIBILITY_TOL {
            return None;
        }
        let a2 = self.h2 * p1 / 2.0;
        let a3 = a2 * a2 + self.h2 * (p2 - q2) / 6.0;
        Some(match self.objective {
            Objective::A2 => a2.abs(),
            Objective::A3 => a3.abs(),
            Objective::FeketeSzego(eta) => (a3 - eta * a2 * a2).abs(),
        })
    }

    fn eval_complex(&self, p1: Complex64, p2: Complex64) -> Option<(f64, f64)> {
        let (r1, r2) = (p1.norm(), p2.norm());
        if r1 > 1.0 || r2 > 1.0 {
            return None;
        }
        if self.schwarz_pick && r2 > 1.0 - r1 * r1 + FEASIBILITY_TOL {
            return None;
        }
        let q2 = p1 * p1 * self.slope - p2;
        if q2.norm() > 1.0 + FEASIBILITY_TOL {
            return None;
        }
        let a2 = p1 * (self.h2 / 2.0);
        let a3 = a2 * a2 + (p2 - q2) * (self.h2 / 6.0);
        let value = match self.objective {
            Objective::A2 => a2.norm(),
            Objective::A3 => a3.norm(),
            Objective::FeketeSzego(eta) => (a3 - a2 * a2 * eta).norm(),
        };
        Some((value, q2.norm()))
    }
}

fn axis(resolution: usize) -> Vec<f64> {
    let last = (resolution - 1) as f64;
    (0..resolution).map(|i| -1.0 + 2.0 * i as f64 / last).collect()
}

fn scan<F>(xs: &[f64], ys: &[f64], seed: Candidate, eval: F) -> Candidate
where
    F: Fn(f64, f64) -> Option<f64> + Sync,
{
    xs.par_iter()
        .filter_map(|&p1| {
            ys.iter()
                .filter_map(|&p2| eval(p1, p2).map(|value| Candidate { value, p1, p2 }))
                .reduce(Candidate::best)
        })
        .reduce(|| seed, Candidate::best)
}

fn local_axis(center: f64, step: f64, shrink: usize, lo: f64) -> Vec<f64> {
    let k = shrink as i64;
    (-k..=k)
        .map(|i| center + i as f64 * step)
        .filter(|v| *v >= lo && *v <= 1.0)
        .collect()
}

/// Upper bound on re-centred scans per refinement round.
const MAX_RECENTRES: usize = 10_000;

/// Local grid refinement around `best`. Each round divides the spacing by
/// `grid.shrink` and re-centres on the incumbent until it stops moving, so the
/// search can follow thin feasible ridges.
fn refine<F>(mut best: Candidate, grid: &GridSpec, lo: f64, eval: F) -> Candidate
where
    F: Fn(f64, f64) -> Option<f64> + Sync,
{
    let mut step = 2.0 / (grid.resolution - 1) as f64;
    for _ in 0..grid.refine_rounds {
        let fine = step / grid.shrink as f64;
        for _ in 0..MAX_RECENTRES {
            let xs = local_axis(best.p1, fine, grid.shrink, lo);
            let ys = local_axis(best.p2, fine, grid.shrink, lo);
            let next = scan(&xs, &ys, best, &eval);
            if next == best {
                break;
            }
            best = next;
        }
        step = fine;
    }
    best
}

/// Maximum of `|objective|` over the feasible set.
pub fn search_max(pt: &ClassPoint, objective: Objective, grid: &GridSpec) -> Result<SearchResult> {
    if grid.resolution < MIN_GRID {
        return Err(Error::GridTooCoarse(grid.resolution));
    }
    check_normalized(pt)?;
    let pt = match objective {
        Objective::FeketeSzego(eta) => pt.clone().with_eta(eta),
        _ => pt.clone(),
    };
    let land = Landscape::new(&pt, objective, grid)?;

    let (best, phases) = match grid.phases {
        None => (search_real(&land, grid)?, None),
        Some(k) => {
            let (c, ph) = search_complex(&land, grid, k)?;
            (c, Some(ph))
        }
    };

    let argmax = match phases {
        None => SchwarzPoint {
            p1: best.p1,
            p2: best.p2,
            q2: land.slope * best.p1 * best.p1 - best.p2,
        },
        Some([t1, t2]) => {
            let p1 = Complex64::from_polar(best.p1, t1);
            let p2 = Complex64::from_polar(best.p2, t2);
            SchwarzPoint {
                p1: best.p1,
                p2: best.p2,
                q2: (p1 * p1 * land.slope - p2).norm(),
            }
        }
    };

    let (published, derived) = bounds_for(&pt, objective)?;

    Ok(SearchResult {
        objective,
        max_value: best.value,
        argmax,
        argmax_phases: phases,
        bound_published: published,
        bound_derived: derived,
        margin_derived: derived - best.value,
        grid: *grid,
    })
}

/// Published and derived bounds for `objective`.
///
/// Where `3 h2^2 - 4 h3` vanishes the closed forms divide by zero and the
/// bound is vacuous, reported as `+inf`. At `eta = 1` the Fekete-Szegő
/// functional is `h2 (p2 - q2) / 6` without that division, so the bounds stay
/// finite: `|2 h2| / 3` published, `|h2| / 3` derived.
fn bounds_for(pt: &ClassPoint, objective: Objective) -> Result<(f64, f64)> {
    let value = |r: Result<BoundReport>| match r {
        Ok(b) => Ok(b.value),
        Err(Error::DegenerateDenominator { .. }) => Ok(f64::INFINITY),
        Err(e) => Err(e),
    };
    match objective {
        Objective::A2 => Ok((
            value(bound_a2(pt, Variant::Published))?,
            value(bound_a2(pt, Variant::Derived))?,
        )),
        Objective::A3 => {
            let v = value(bound_a3(pt))?;
            Ok((v, v))
        }
        Objective::FeketeSzego(eta) => {
            let published = fekete_szego_bound(pt, Variant::Published);
            let derived = fekete_szego_bound(pt, Variant::Derived);
            if eta == 1.0 && (published.is_err() || derived.is_err()) {
                let h2 = pt.nonzero_h2()?.abs();
                return Ok((2.0 * h2 / 3.0, h2 / 3.0));
            }
            Ok((value(published)?, value(derived)?))
        }
    }
}

fn search_real(land: &Landscape, grid: &GridSpec) -> Result<Candidate> {
    let origin = land.eval_real(0.0, 0.0).ok_or(Error::EmptyFeasibleSet)?;
    let seed = Candidate {
        value: origin,
        p1: 0.0,
        p2: 0.0,
    };
    let coarse = axis(grid.resolution);
    let best = scan(&coarse, &coarse, seed, |p1, p2| land.eval_real(p1, p2));
    Ok(refine(best, grid, -1.0, |p1, p2| land.eval_real(p1, p2)))
}

/// Moduli grid on `[0, 1]^2` times `phases^2` phase combinations; refinement
/// runs on the moduli at the best phase pair.
fn search_complex(land: &Landscape, grid: &GridSpec, phases: usize) -> Result<(Candidate, [f64; 2])> {
    let angles: Vec<f64> = (0..phases).map(|k| 2.0 * PI * k as f64 / phases as f64).collect();
    let moduli: Vec<f64> = axis(grid.resolution).into_iter().filter(|r| *r >= 0.0).collect();
    let origin = land
        .eval_complex(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
        .ok_or(Error::EmptyFeasibleSet)?
        .0;
    let seed = Candidate {
        value: origin,
        p1: 0.0,
        p2: 0.0,
    };

    let pairs: Vec<(usize, usize)> = (0..phases).flat_map(|i| (0..phases).map(move |j| (i, j))).collect();
    let eval_at = |t1: f64, t2: f64| {
        move |r1: f64, r2: f64| {
            land.eval_complex(Complex64::from_polar(r1, t1), Complex64::from_polar(r2, t2))
                .map(|(v, _)| v)
        }
    };
    let (best, (i, j)) = pairs
        .iter()
        .map(|&(i, j)| (scan(&moduli, &moduli, seed, eval_at(angles[i], angles[j])), (i, j)))
        .fold((seed, (0, 0)), |acc, cur| {
            if cur.0.rank(&acc.0) == Ordering::Greater {
                cur
            } else {
                acc
            }
        });
    let (t1, t2) = (angles[i], angles[j]);
    let best = refine(best, grid, 0.0, eval_at(t1, t2));
    Ok((best, [t1, t2]))
}

/// One cell of a margin sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub family: Family,
    pub x: f64,
    pub objective: Objective,
    pub outcome: Result<SearchResult>,
}

impl SweepRow {
    pub fn is_violation(&self) -> bool {
        matches!(&self.outcome, Ok(r) if r.is_violation())
    }
}

/// Runs [`search_max`] for every `(point, objective)` pair. Cell errors are
/// kept in their rows; the sweep never aborts.
pub fn margin_sweep(points: &[ClassPoint], objectives: &[Objective], grid: &GridSpec) -> Vec<SweepRow> {
    let cells: Vec<(&ClassPoint, Objective)> = points
        .iter()
        .flat_map(|pt| objectives.iter().map(move |&obj| (pt, obj)))
        .collect();
    cells
        .into_par_iter()
        .map(|(pt, objective)| SweepRow {
            family: pt.params.family,
            x: pt.x,
            objective,
            outcome: search_max(pt, objective, grid),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{family_params, HoradamParams};
    use crate::rational::int;

    fn fib() -> ClassPoint {
        ClassPoint::new(family_params(Family::Fibonacci), 1.0)
    }

    #[test]
    fn origin_gives_zero_coefficients() {
        let pt = fib();
        let s = SchwarzPoint::solve(&pt, 0.0, 0.0).unwrap();
        assert_eq!(s.q2, 0.0);
        assert_eq!(coeffs_from_schwarz(&pt, &s).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn infeasible_point_is_rejected() {
        let pt = fib();
        let s = SchwarzPoint::solve(&pt, 0.8f64.sqrt(), 1.0).unwrap();
        assert!((s.q2 + 3.0).abs() < 1e-12);
        assert!(matches!(coeffs_from_schwarz(&pt, &s), Err(Error::InfeasiblePoint(_))));
    }

    #[test]
    fn extremal_point_attains_a2_bound() {
        let pt = fib();
        let s = SchwarzPoint::solve(&pt, 0.8f64.sqrt(), -1.0).unwrap();
        assert!((s.q2 + 1.0).abs() < 1e-12);
        let (a2, a3) = coeffs_from_schwarz(&pt, &s).unwrap();
        assert!((a2 - 1.0 / 5f64.sqrt()).abs() < 1e-12);
        assert!((a3 - 0.2).abs() < 1e-12);
        let (direct, via_gap) = a3_forms(&pt, &s);
        assert!((direct - via_gap).abs() < 1e-12);
    }

    #[test]
    fn alpha_shift_must_match_a() {
        let pt = fib().with_alpha_shift(0.25);
        let s = SchwarzPoint::solve(&pt, 0.0, 0.0).unwrap();
        assert!(matches!(
            coeffs_from_schwarz(&pt, &s),
            Err(Error::AlphaShiftMismatch { .. })
        ));
    }

    #[test]
    fn coarse_grid_is_refused() {
        assert_eq!(GridSpec::new(5), Err(Error::GridTooCoarse(5)));
        let g = GridSpec {
            resolution: 7,
            ..GridSpec::default()
        };
        assert_eq!(search_max(&fib(), Objective::A2, &g), Err(Error::GridTooCoarse(7)));
    }

    #[test]
    fn fibonacci_a2_and_a3() {
        let g = GridSpec::new(201).unwrap();
        let r = search_max(&fib(), Objective::A2, &g).unwrap();
        assert!((r.max_value - 0.44721).abs() < 1e-3);
        assert!(r.margin_derived >= -VIOLATION_TOL && r.margin_derived < 1e-3);

        let r = search_max(&fib(), Objective::A3, &g).unwrap();
        assert!((r.max_value - 1.0 / 3.0).abs() < 1e-3);
        assert!((r.margin_derived - 0.25).abs() < 1e-3);
        // tie between p2 = -1 and p2 = 1 at p1 = 0 goes to the smaller point
        assert_eq!((r.argmax.p1, r.argmax.p2), (0.0, -1.0));
    }

    #[test]
    fn degenerate_feasible_set_gives_zero() {
        // Huge slope: any p1 != 0 on the grid forces |q2| > 1, and the objective
        // vanishes at p1 = 0 for a2.
        let params = HoradamParams::custom(int(1), int(1), int(1), int(-1000));
        let pt = ClassPoint::new(params, 1.0);
        let g = GridSpec::new(11).unwrap().with_refine_rounds(0);
        let r = search_max(&pt, Objective::A2, &g).unwrap();
        assert_eq!(r.max_value, 0.0);
        assert_eq!(r.argmax.p1, 0.0);
    }

    #[test]
    fn fs_eta_one_reaches_h2_over_three() {
        let pt = ClassPoint::new(family_params(Family::ChebyshevU), 0.6);
        let r = search_max(&pt, Objective::FeketeSzego(1.0), &GridSpec::default()).unwrap();
        assert!((r.max_value - pt.h2().abs() / 3.0).abs() < 1e-3);
        assert!((r.bound_derived - pt.h2().abs() / 3.0).abs() < 1e-15);
        assert!((r.bound_published - 2.0 * r.bound_derived).abs() < 1e-15);
    }

    #[test]
    fn schwarz_pick_shrinks_the_maximum() {
        let g = GridSpec::new(101).unwrap();
        let plain = search_max(&fib(), Objective::A3, &g).unwrap();
        let strict = search_max(&fib(), Objective::A3, &g.with_schwarz_pick(true)).unwrap();
        assert!(strict.max_value <= plain.max_value + 1e-15);
        assert!(strict.argmax.p2.abs() <= 1.0 - strict.argmax.p1.powi(2) + 1e-12);
    }

    #[test]
    fn complex_sweep_stays_below_derived_bound() {
        let g = GridSpec::new(41).unwrap().with_phases(Some(8));
        for obj in [Objective::A2, Objective::FeketeSzego(0.0), Objective::FeketeSzego(3.0)] {
            let r = search_max(&fib(), obj, &g).unwrap();
            assert!(r.argmax_phases.is_some());
            assert!(r.margin_derived >= -VIOLATION_TOL, "{obj:?}: {r:?}");
        }
    }

    #[test]
    fn vacuous_bounds_at_degenerate_gap() {
        // Chebyshev U at x = 1: 3 h2^2 - 4 h3 = 12 - 12 = 0.
        let pt = ClassPoint::new(family_params(Family::ChebyshevU), 1.0);
        let g = GridSpec::new(101).unwrap();
        let r = search_max(&pt, Objective::A2, &g).unwrap();
        assert_eq!(r.bound_derived, f64::INFINITY);
        assert_eq!(r.margin_derived, f64::INFINITY);
        assert!((r.max_value - 1.0).abs() < 1e-12);
        let r = search_max(&pt, Objective::FeketeSzego(1.0), &g).unwrap();
        assert!((r.bound_derived - 2.0 / 3.0).abs() < 1e-15);
        assert!((r.bound_published - 4.0 / 3.0).abs() < 1e-15);
        assert!((r.max_value - 2.0 / 3.0).abs() < 1e-9);
        let r = search_max(&pt, Objective::FeketeSzego(3.0), &g).unwrap();
        assert_eq!(r.bound_derived, f64::INFINITY);

        let json = serde_json::to_string(&search_max(&pt, Objective::A2, &g).unwrap()).unwrap();
        assert!(json.contains("\"inf\""));
        let back: SearchResult = serde_json::from_str(&json).unwrap();
        assert_eq!(back.bound_derived, f64::INFINITY);
    }

    #[test]
    fn sweep_isolates_errors() {
        let pts = vec![
            fib(),
            ClassPoint::new(family_params(Family::Pell), 0.0),
            ClassPoint::new(family_params(Family::ChebyshevU), 0.6),
        ];
        let rows = margin_sweep(&pts, &[Objective::A2], &GridSpec::new(51).unwrap());
        assert_eq!(rows.len(), 3);
        assert!(rows[0].outcome.is_ok());
        assert!(matches!(rows[1].outcome, Err(Error::DegenerateDenominator { .. })));
        assert!(rows[2].outcome.is_ok());
        assert!(margin_sweep(&pts, &[], &GridSpec::default()).is_empty());
    }
}
