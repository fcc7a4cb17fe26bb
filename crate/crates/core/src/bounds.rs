//! Closed-form coefficient bounds for the Horadam-subordinate bi-univalent class.
//!
//! With `h2 = b x` and `h3 = p b x^2 + a q`:
//!
//! * `|a2| <= |h2|^(3/2) / sqrt|3 h2^2 - 4 h3|`
//! * `|a3| <= |h2| / 3 + h2^2 / 4`
//! * `|a3 - eta a2^2|` has two forms. [`Variant::Published`] is the piecewise
//!   statement in `|eta - 1|` (first branch `|2bx|/3`). [`Variant::Derived`] is
//!   `2 |h2| max(|Θ|, 1/6)` with `Θ = h2^2 (1 - eta) / (6 h2^2 - 8 h3)`, which is
//!   what the coefficient identities actually give and is continuous in `eta`.
//!
//! The published first branch is twice the derived one; both are always available.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{family_params, Family, HoradamParams};
use crate::rational::to_f64;

const SIXTH: f64 = 1.0 / 6.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    Published,
    Derived,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Published => "published",
            Variant::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    First,
    Second,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::First => "First",
            Branch::Second => "Second",
        }
    }
}

/// A bound value together with how it was produced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub value: f64,
    pub variant: Variant,
    /// Set only for the Fekete-Szegő functional.
    pub branch: Option<Branch>,
    pub theta: Option<f64>,
    /// `|eta - 1|` cutoff between the two branches.
    pub threshold: Option<f64>,
}

impl BoundReport {
    fn plain(value: f64, variant: Variant) -> Self {
        BoundReport {
            value,
            variant,
            branch: None,
            theta: None,
            threshold: None,
        }
    }
}

/// A member of the parameterised class: Horadam constants, argument `x`, and `eta`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassPoint {
    pub params: HoradamParams,
    pub x: f64,
    pub eta: Option<f64>,
    /// Shift in `f'(z) ≺ Ω(x, z) + 1 - alpha`. Only `alpha = a` gives `f'(0) = 1`.
    pub alpha_shift: f64,
}

impl ClassPoint {
    pub fn new(params: HoradamParams, x: f64) -> Self {
        let alpha_shift = to_f64(&params.a);
        ClassPoint {
            params,
            x,
            eta: None,
            alpha_shift,
        }
    }

    pub fn with_eta(mut self, eta: f64) -> Self {
        self.eta = Some(eta);
        self
    }

    pub fn with_alpha_shift(mut self, alpha_shift: f64) -> Self {
        self.alpha_shift = alpha_shift;
        self
    }

    pub fn h2(&self) -> f64 {
        let [_, b, _, _] = self.params.as_f64();
        b * self.x
    }

    pub fn h3(&self) -> f64 {
        let [a, b, p, q] = self.params.as_f64();
        p * b * self.x * self.x + a * q
    }

    /// Constant term of `Ω(x, Φ(z)) + 1 - alpha`, which must be 1.
    pub fn derivative_constant_term(&self) -> f64 {
        1.0 + to_f64(&self.params.a) - self.alpha_shift
    }

    pub(crate) fn nonzero_h2(&self) -> Result<f64> {
        let h2 = self.h2();
        if h2 == 0.0 {
            Err(Error::degenerate("h2 = 0"))
        } else {
            Ok(h2)
        }
    }

    pub(crate) fn eta(&self) -> Result<f64> {
        self.eta.ok_or(Error::MissingEta)
    }

    /// `3 h2^2 - 4 h3`, refused when it cancels to rounding level.
    pub(crate) fn gap(&self) -> Result<f64> {
        let (h2, h3) = (self.h2(), self.h3());
        let gap = 3.0 * h2 * h2 - 4.0 * h3;
        if gap.abs() <= 16.0 * f64::EPSILON * (3.0 * h2 * h2 + 4.0 * h3.abs()) {
            Err(Error::degenerate("3h2^2 - 4h3 = 0"))
        } else {
            Ok(gap)
        }
    }
}

/// Bound on `|a2|`.
///
/// The published route evaluates `|bx| sqrt|bx| / sqrt|b x^2 (3b - 4p) - 4aq|`
/// from the raw constants; the derived route evaluates `sqrt(|h2|^3 / |3h2^2 - 4h3|)`.
pub fn bound_a2(pt: &ClassPoint, variant: Variant) -> Result<BoundReport> {
    let h2 = pt.nonzero_h2()?;
    let gap = pt.gap()?;
    let value = match variant {
        Variant::Published => {
            let [a, b, p, q] = pt.params.as_f64();
            let x = pt.x;
            let bx = (b * x).abs();
            bx * bx.sqrt() / (b * x * x * (3.0 * b - 4.0 * p) - 4.0 * a * q).abs().sqrt()
        }
        Variant::Derived => (h2.abs().powi(3) / gap.abs()).sqrt(),
    };
    Ok(BoundReport::plain(value, variant))
}

/// Bound on `|a3|`: `|bx|/3 + (bx)^2/4`. Both variants agree.
pub fn bound_a3(pt: &ClassPoint) -> Result<BoundReport> {
    let h2 = pt.nonzero_h2()?;
    Ok(BoundReport::plain(h2.abs() / 3.0 + h2 * h2 / 4.0, Variant::Derived))
}

/// `Θ(η, x) = h2^2 (1 - η) / (6 h2^2 - 8 h3)`.
pub fn theta(pt: &ClassPoint) -> Result<f64> {
    let eta = pt.eta()?;
    let (h2, h3) = (pt.h2(), pt.h3());
    let den = 6.0 * h2 * h2 - 8.0 * h3;
    if den.abs() <= 32.0 * f64::EPSILON * (6.0 * h2 * h2 + 8.0 * h3.abs()) {
        return Err(Error::degenerate("6h2^2 - 8h3 = 0"));
    }
    Ok(h2 * h2 * (1.0 - eta) / den)
}

/// `1 - |4 h3| / (3 h2^2)`: the published `|eta - 1|` cutoff.
pub fn published_threshold(pt: &ClassPoint) -> Result<f64> {
    let h2 = pt.nonzero_h2()?;
    Ok(1.0 - (4.0 * pt.h3()).abs() / (3.0 * h2 * h2))
}

/// Published second branch `|bx|^3 |1 - eta| / |3 b^2 x^2 - 4(p b x^2 + q a)|`,
/// evaluated regardless of which branch applies.
pub fn published_second_branch(pt: &ClassPoint) -> Result<f64> {
    let eta = pt.eta()?;
    let h2 = pt.nonzero_h2()?;
    let gap = pt.gap()?;
    Ok(h2.abs().powi(3) * (1.0 - eta).abs() / gap.abs())
}

/// Bound on `|a3 - eta a2^2|`.
pub fn fekete_szego_bound(pt: &ClassPoint, variant: Variant) -> Result<BoundReport> {
    let eta = pt.eta()?;
    let h2 = pt.nonzero_h2()?;
    let gap = pt.gap()?;
    let theta = theta(pt)?;
    let report = match variant {
        Variant::Published => {
            let threshold = published_threshold(pt)?;
            // eta = 1 always takes the first branch, even for a negative cutoff.
            let (branch, value) = if eta == 1.0 || (eta - 1.0).abs() <= threshold {
                (Branch::First, (2.0 * h2).abs() / 3.0)
            } else {
                (Branch::Second, published_second_branch(pt)?)
            };
            BoundReport {
                value,
                variant,
                branch: Some(branch),
                theta: Some(theta),
                threshold: Some(threshold),
            }
        }
        Variant::Derived => {
            let branch = if theta.abs() <= SIXTH {
                Branch::First
            } else {
                Branch::Second
            };
            BoundReport {
                value: 2.0 * h2.abs() * theta.abs().max(SIXTH),
                variant,
                branch: Some(branch),
                theta: Some(theta),
                threshold: Some(gap.abs() / (3.0 * h2 * h2)),
            }
        }
    };
    Ok(report)
}

/// Residuals between the generic bounds at the Chebyshev-U row and their
/// closed-form specialisations in `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorollaryCheck {
    pub t: f64,
    pub eta: f64,
    /// `|a2|` bound vs `t sqrt(2t) / sqrt|1 - t^2|`
    pub a2: f64,
    /// `|a3|` bound vs `2t/3 + t^2`
    pub a3: f64,
    /// published first branch vs `4t/3`
    pub fs_first: f64,
    /// published cutoff vs `(1 - t^2) / (3t^2)`
    pub fs_threshold: f64,
    /// published value at `eta = 1` vs `4t/3`
    pub fs_eta_one: f64,
    /// generic second branch over `2|eta - 1| / (1 - t^2)`; `None` at `eta = 1`.
    pub second_branch_ratio: Option<f64>,
}

impl CorollaryCheck {
    pub fn max_residual(&self) -> f64 {
        [self.a2, self.a3, self.fs_first, self.fs_threshold, self.fs_eta_one]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// Compares the generic formulas at `(a, b, p, q) = (1, 2, 2, -1)`, `x = t` with
/// their specialised forms. Meaningful for `t` in `(1/2, 1)`.
pub fn chebyshev_corollary_check(t: f64, eta: f64) -> Result<CorollaryCheck> {
    let base = ClassPoint::new(family_params(Family::ChebyshevU), t);
    let pt = base.clone().with_eta(eta);
    let one_minus = 1.0 - t * t;

    let a2 = bound_a2(&pt, Variant::Published)?.value - t * (2.0 * t).sqrt() / one_minus.abs().sqrt();
    let a3 = bound_a3(&pt)?.value - (2.0 * t / 3.0 + t * t);
    let first = (2.0 * pt.h2()).abs() / 3.0 - 4.0 * t / 3.0;
    let cutoff = published_threshold(&pt)? - one_minus / (3.0 * t * t);
    let at_one = fekete_szego_bound(&base.with_eta(1.0), Variant::Published)?.value - 4.0 * t / 3.0;
    let second_branch_ratio = if eta == 1.0 {
        None
    } else {
        let corollary = 2.0 * (eta - 1.0).abs() / one_minus;
        Some(published_second_branch(&pt)? / corollary)
    };
    Ok(CorollaryCheck {
        t,
        eta,
        a2: a2.abs(),
        a3: a3.abs(),
        fs_first: first.abs(),
        fs_threshold: cutoff.abs(),
        fs_eta_one: at_one.abs(),
        second_branch_ratio,
    })
}
