//! Horadam polynomials `h_n(x)`, their characteristic roots and the named special families.
//!
//! The family is seeded by `h_1 = a`, `h_2 = b x` and continues with
//! `h_n = p x h_{n-1} + q h_{n-2}`. Indices are 1-based throughout; the classical
//! names are reached through [`Family::index_offset`], e.g. Lucas has `h_n = L_{n-1}`.
//!
//! Exact work goes through [`Polynomial`] with rational coefficients. The `f64`
//! routines ([`horadam_eval`], [`binet_eval`]) are independent code paths.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, to_f64, Rational};

/// Named rows of the Horadam parameter table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Fibonacci,
    Lucas,
    Pell,
    PellLucas,
    ChebyshevU,
    ChebyshevT,
    HoradamNumbers,
    Custom,
}

impl Family {
    /// Every tag with a fixed parameter row.
    pub const NAMED: [Family; 7] = [
        Family::Fibonacci,
        Family::Lucas,
        Family::Pell,
        Family::PellLucas,
        Family::ChebyshevU,
        Family::ChebyshevT,
        Family::HoradamNumbers,
    ];

    /// `(a, b, p, q)` for the tag, `None` for [`Family::Custom`].
    pub fn row(self) -> Option<[i64; 4]> {
        Some(match self {
            Family::Fibonacci => [1, 1, 1, 1],
            Family::Lucas => [2, 1, 1, 1],
            Family::Pell => [1, 2, 2, 1],
            Family::PellLucas => [2, 2, 2, 1],
            Family::ChebyshevU => [1, 2, 2, -1],
            // T_0 = 1, T_1 = x forces b = 1.
            Family::ChebyshevT => [1, 1, 2, -1],
            // Jacobsthal row; read at x = 1 through `horadam_number`.
            Family::HoradamNumbers => [1, 1, 1, 2],
            Family::Custom => return None,
        })
    }

    /// Shift between `h_n` and the classical index: `h_n = F_{n - offset}`.
    pub fn index_offset(self) -> usize {
        match self {
            Family::Lucas | Family::PellLucas | Family::ChebyshevU | Family::ChebyshevT => 1,
            _ => 0,
        }
    }

    /// Kebab-case name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Family::Fibonacci => "fibonacci",
            Family::Lucas => "lucas",
            Family::Pell => "pell",
            Family::PellLucas => "pell-lucas",
            Family::ChebyshevU => "chebyshev-u",
            Family::ChebyshevT => "chebyshev-t",
            Family::HoradamNumbers => "horadam-numbers",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        Ok(match key.as_str() {
            "fibonacci" => Family::Fibonacci,
            "lucas" => Family::Lucas,
            "pell" => Family::Pell,
            "pelllucas" => Family::PellLucas,
            "chebyshevu" | "u" => Family::ChebyshevU,
            "chebyshevt" | "t" => Family::ChebyshevT,
            "horadamnumbers" | "horadam" | "jacobsthal" => Family::HoradamNumbers,
            "custom" => Family::Custom,
            _ => return Err(Error::ParseNumber(s.to_string())),
        })
    }
}

/// The constants `(a, b, p, q)` seeding a Horadam family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HoradamParams {
    pub a: Rational,
    pub b: Rational,
    pub p: Rational,
    pub q: Rational,
    pub family: Family,
}

impl HoradamParams {
    pub fn custom(a: Rational, b: Rational, p: Rational, q: Rational) -> Self {
        HoradamParams {
            a,
            b,
            p,
            q,
            family: Family::Custom,
        }
    }

    /// Builds a tagged parameter set, rejecting rows that disagree with the table.
    pub fn tagged(a: Rational, b: Rational, p: Rational, q: Rational, family: Family) -> Result<Self> {
        let params = HoradamParams { a, b, p, q, family };
        if let Some(row) = family.row() {
            if [&params.a, &params.b, &params.p, &params.q]
                .iter()
                .zip(row)
                .any(|(have, want)| **have != int(want))
            {
                return Err(Error::FamilyMismatch {
                    family: family.name().to_string(),
                    expected: format!("{row:?}"),
                });
            }
        }
        Ok(params)
    }

    pub fn as_f64(&self) -> [f64; 4] {
        [to_f64(&self.a), to_f64(&self.b), to_f64(&self.p), to_f64(&self.q)]
    }
}

impl fmt::Display for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (a={}, b={}, p={}, q={})",
            self.family,
            fmt_rational(&self.a),
            fmt_rational(&self.b),
            fmt_rational(&self.p),
            fmt_rational(&self.q)
        )
    }
}

/// Table row for a named family. [`Family::Custom`] yields all-zero constants.
pub fn family_params(tag: Family) -> HoradamParams {
    let [a, b, p, q] = tag.row().unwrap_or([0; 4]);
    HoradamParams {
        a: int(a),
        b: int(b),
        p: int(p),
        q: int(q),
        family: tag,
    }
}

/// Dense polynomial in `x` with rational coefficients, ascending degree.
///
/// Canonical: no trailing zero coefficients, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// Multiplies by `c x`.
    pub fn mul_x(&self, c: &Rational) -> Self {
        if self.is_zero() || c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().map(|k| k * c));
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|k| k * c).collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Renders in descending degree, e.g. `4x^2 - 1` or `(1/2)x + 3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let body = fmt_rational(&magnitude);
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    if !magnitude.is_one() {
                        if magnitude.is_integer() {
                            f.write_str(&body)?;
                        } else {
                            write!(f, "({body})")?;
                        }
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `h_1, ..., h_n` as exact polynomials.
pub fn horadam_sequence(params: &HoradamParams, n: usize) -> Vec<Polynomial> {
    let mut seq: Vec<Polynomial> = Vec::with_capacity(n);
    for k in 1..=n {
        let next = match k {
            1 => Polynomial::constant(params.a.clone()),
            2 => Polynomial::monomial(params.b.clone(), 1),
            _ => &seq[k - 2].mul_x(&params.p) + &seq[k - 3].scale(&params.q),
        };
        seq.push(next);
    }
    seq
}

/// `h_n(x)` as an exact polynomial.
pub fn horadam(params: &HoradamParams, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidIndex(n));
    }
    Ok(horadam_sequence(params, n).pop().expect("n >= 1"))
}

/// `h_n(x)` evaluated with the three-term recurrence in floating point.
pub fn horadam_eval(params: &HoradamParams, n: usize, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidIndex(n));
    }
    let [a, b, p, q] = params.as_f64();
    let (mut prev, mut cur) = (a, b * x);
    if n == 1 {
        return Ok(prev);
    }
    let px = p * x;
    for _ in 2..n {
        (prev, cur) = (cur, px * cur + q * prev);
    }
    Ok(cur)
}

/// Horadam number `h_n(1)`, exact.
pub fn horadam_number(params: &HoradamParams, n: usize) -> Result<Rational> {
    Ok(horadam(params, n)?.eval(&Rational::one()))
}

/// Roots of `t^2 - p x t - q = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootPair {
    pub alpha: Complex64,
    pub beta: Complex64,
    /// `p^2 x^2 + 4q`
    pub discriminant: f64,
}

impl RootPair {
    /// True when the roots coincide to working precision.
    pub fn is_repeated(&self, params: &HoradamParams, x: f64) -> bool {
        let [_, _, p, q] = params.as_f64();
        let scale = (p * x).powi(2) + 4.0 * q.abs();
        self.discriminant.abs() <= 4.0 * f64::EPSILON * scale
    }
}

/// `alpha = (px + sqrt(D)) / 2`, `beta = (px - sqrt(D)) / 2` with `D = p^2 x^2 + 4q`.
///
/// In the real case the smaller-magnitude root is recovered from `alpha beta = -q`
/// to avoid cancellation.
pub fn characteristic_roots(params: &HoradamParams, x: f64) -> RootPair {
    let [_, _, p, q] = params.as_f64();
    let px = p * x;
    let discriminant = px * px + 4.0 * q;
    let (alpha, beta) = if discriminant >= 0.0 {
        let root = discriminant.sqrt();
        let big = 0.5 * (px + px.signum() * root);
        if px == 0.0 {
            (0.5 * root, -0.5 * root)
        } else if px > 0.0 {
            (big, -q / big)
        } else {
            (-q / big, big)
        }
    } else {
        let im = 0.5 * (-discriminant).sqrt();
        return RootPair {
            alpha: Complex64::new(0.5 * px, im),
            beta: Complex64::new(0.5 * px, -im),
            discriminant,
        };
    };
    RootPair {
        alpha: Complex64::new(alpha, 0.0),
        beta: Complex64::new(beta, 0.0),
        discriminant,
    }
}

/// Closed form `A alpha^(n-1) + B beta^(n-1)` fitted to `h_1 = a`, `h_2 = b x`.
///
/// Refuses coincident roots; the recurrence covers that case.
pub fn binet_eval(params: &HoradamParams, n: usize, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidIndex(n));
    }
    let roots = characteristic_roots(params, x);
    if roots.is_repeated(params, x) {
        return Err(Error::RepeatedRoot);
    }
    let [a, b, _, _] = params.as_f64();
    let k = (n - 1) as i32;
    if roots.discriminant > 0.0 {
        let (alpha, beta) = (roots.alpha.re, roots.beta.re);
        let gap = alpha - beta;
        let coef_alpha = (b * x - a * beta) / gap;
        let coef_beta = (a * alpha - b * x) / gap;
        return Ok(coef_alpha * alpha.powi(k) + coef_beta * beta.powi(k));
    }
    let (alpha, beta) = (roots.alpha, roots.beta);
    let h2 = Complex64::new(b * x, 0.0);
    let gap = alpha - beta;
    let coef_alpha = (h2 - beta * a) / gap;
    let coef_beta = (alpha * a - h2) / gap;
    Ok((coef_alpha * alpha.powi(k) + coef_beta * beta.powi(k)).re)
}
