//! Truncated power series `c_0 + c_1 z + ... + c_N z^N`.
//!
//! The scalar is a type parameter: [`Rational`] for exact identities, `f64` for
//! numerics. Mixing the two is a type error; convert explicitly with
//! [`TruncatedSeries::to_f64`].
//!
//! Every binary operation truncates to the smaller of the two orders. In a
//! composition the inner series is zero-padded, never extrapolated.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

use crate::error::{Error, Result};
use crate::poly::HoradamParams;
use crate::rational::{to_f64, Rational};

/// Scalar ring used for series coefficients.
pub trait Coefficient: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T: Clone + Debug + PartialEq + Num + Neg<Output = T>> Coefficient for T {}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl<T: Coefficient> TruncatedSeries<T> {
    /// Series of the given order; missing coefficients are zero, extra ones dropped.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    /// `z` through `order` (which must be at least 1 to be meaningful).
    pub fn identity(order: usize) -> Self {
        Self::new(vec![T::zero(), T::one()], order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new(
            (0..=n)
                .map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
                .collect(),
            n,
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new(
            (0..=n)
                .map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
                .collect(),
            n,
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|k| k.clone() * c.clone()).collect(),
        }
    }

    /// Cauchy product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Long division `self / rhs`; requires a nonzero constant term in `rhs`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let lead = rhs.coeffs[0].clone();
        if lead.is_zero() {
            return Err(Error::DivisionByZeroConstantTerm);
        }
        let n = self.order().min(rhs.order());
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc = acc - rhs.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(acc / lead.clone());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `outer(inner(z))`; `inner` must vanish at 0.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InnerConstantTermNonzero);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        // Horner in the inner series.
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Compositional inverse of `f = z + c_2 z^2 + ...` through `order`.
    ///
    /// Coefficients are solved one order at a time: `[w^k] f(g(w)) = 0` is linear
    /// in `g_k` with unit slope, so `g_k` is minus the residual obtained with `g_k = 0`.
    pub fn invert(&self, order: usize) -> Result<Self> {
        if !self.coeff(0).is_zero() || self.order() < 1 || self.coeffs[1] != T::one() {
            return Err(Error::NotNormalized);
        }
        let n = order.min(self.order());
        let mut g = Self::identity(n);
        for k in 2..=n {
            let f_k = self.truncate(k);
            let residual = f_k.compose(&g.truncate(k))?.coeffs[k].clone();
            g.coeffs[k] = -residual;
        }
        Ok(g)
    }

    /// Formal derivative; the result has order one less (minimum 0).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::constant(T::zero(), 0);
        }
        let mut out = Vec::with_capacity(n);
        let mut k_scalar = T::zero();
        for c in &self.coeffs[1..] {
            k_scalar = k_scalar + T::one();
            out.push(c.clone() * k_scalar.clone());
        }
        TruncatedSeries { coeffs: out }
    }
}

impl TruncatedSeries<Rational> {
    pub fn to_f64(&self) -> TruncatedSeries<f64> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(to_f64).collect(),
        }
    }
}

/// Binary arithmetic dispatch.
pub fn series_arith<T: Coefficient>(
    lhs: &TruncatedSeries<T>,
    rhs: &TruncatedSeries<T>,
    op: SeriesOp,
) -> Result<TruncatedSeries<T>> {
    Ok(match op {
        SeriesOp::Add => lhs.add(rhs),
        SeriesOp::Sub => lhs.sub(rhs),
        SeriesOp::Mul => lhs.mul(rhs),
        SeriesOp::Div => lhs.div(rhs)?,
    })
}

pub fn compose<T: Coefficient>(outer: &TruncatedSeries<T>, inner: &TruncatedSeries<T>) -> Result<TruncatedSeries<T>> {
    outer.compose(inner)
}

pub fn invert_series<T: Coefficient>(f: &TruncatedSeries<T>, order: usize) -> Result<TruncatedSeries<T>> {
    f.invert(order)
}

/// Expansion of `(a + (b - a p) x z) / (1 - p x z - q z^2)` through `z^order`.
///
/// The coefficient of `z^(n-1)` is `h_n(x)`.
pub fn generating_series(params: &HoradamParams, x: &Rational, order: usize) -> TruncatedSeries<Rational> {
    let slope = (&params.b - &params.a * &params.p) * x;
    let numerator = TruncatedSeries::new(vec![params.a.clone(), slope], order);
    let denominator = TruncatedSeries::new(
        vec![Rational::from_integer(1.into()), -(&params.p * x), -params.q.clone()],
        order,
    );
    numerator.div(&denominator).expect("denominator has constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{family_params, Family};
    use crate::rational::{int, ratio};

    fn s(coeffs: &[i64], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    #[test]
    fn arithmetic_examples() {
        let one = s(&[1], 3);
        assert_eq!(series_arith(&one, &one, SeriesOp::Mul).unwrap(), one);
        let geo = series_arith(&s(&[1], 3), &s(&[1, -1], 3), SeriesOp::Div).unwrap();
        assert_eq!(geo, s(&[1, 1, 1, 1], 3));
        let sq = s(&[1, 1], 2).mul(&s(&[1, -1], 2));
        assert_eq!(sq, s(&[1, 0, -1], 2));
        assert_eq!(s(&[1], 3).div(&s(&[0, 1], 3)), Err(Error::DivisionByZeroConstantTerm));
    }

    #[test]
    fn orders_truncate_to_minimum() {
        let a = s(&[1, 2, 3, 4], 3);
        let b = s(&[1, 1], 1);
        assert_eq!(a.add(&b).order(), 1);
        assert_eq!(a.mul(&b), s(&[1, 3], 1));
        assert_eq!(a.compose(&s(&[0, 1], 2)).unwrap().order(), 2);
    }

    #[test]
    fn composition_examples() {
        let g = s(&[0, 3, -1, 5], 3);
        assert_eq!(s(&[0, 1], 3).compose(&g).unwrap(), g);
        assert_eq!(
            s(&[0, 0, 1], 3).compose(&s(&[0, 1, 1], 3)).unwrap(),
            s(&[0, 0, 1, 2], 3)
        );
        assert_eq!(s(&[1, 2, 3], 2).compose(&s(&[0, 1], 2)).unwrap(), s(&[1, 2, 3], 2));
        assert_eq!(
            s(&[1, 2], 2).compose(&s(&[1, 1], 2)),
            Err(Error::InnerConstantTermNonzero)
        );
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(s(&[0, 1], 5).invert(5).unwrap(), s(&[0, 1], 5));
        assert_eq!(s(&[0, 1, 1, 1], 3).invert(3).unwrap(), s(&[0, 1, -1, 1], 3));
        assert_eq!(s(&[0, 2, 1], 3).invert(3), Err(Error::NotNormalized));
        assert_eq!(s(&[1, 1, 1], 3).invert(3), Err(Error::NotNormalized));
        // order capped by the input
        assert_eq!(s(&[0, 1, 1], 2).invert(6).unwrap().order(), 2);
    }

    #[test]
    fn generating_examples() {
        let fib = family_params(Family::Fibonacci);
        assert_eq!(generating_series(&fib, &int(1), 3), s(&[1, 1, 2, 3], 3));
        let custom = HoradamParams::custom(int(3), int(5), int(7), int(-2));
        assert_eq!(generating_series(&custom, &int(0), 2), s(&[3, 0, -6], 2));
        let u = family_params(Family::ChebyshevU);
        assert_eq!(generating_series(&u, &ratio(1, 2), 2), s(&[1, 1, 0], 2));
    }

    #[test]
    fn float_mode() {
        let f = TruncatedSeries::new(vec![0.0, 1.0, 0.5], 4);
        let g = f.invert(4).unwrap();
        let id = f.compose(&g).unwrap();
        for (k, c) in id.coeffs().iter().enumerate() {
            let want: f64 = if k == 1 { 1.0 } else { 0.0 };
            assert!((c - want).abs() < 1e-12);
        }
        let d = TruncatedSeries::new(vec![1.0, 2.0, 3.0], 2).derivative();
        assert_eq!(d.coeffs(), &[2.0, 6.0]);
    }
}
