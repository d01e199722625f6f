//! Truncated formal power series in `t`.
//!
//! Coefficients are stored plainly (`S(t) = Σ c_n t^n`). The exponential view
//! `a_n = c_n [n]_q!`, in which products become q-binomial convolutions, is
//! available through [`TruncSeries::to_exponential`] and
//! [`TruncSeries::from_exponential`]. Two series can only be combined when their
//! truncation orders agree; nothing is ever re-truncated behind the caller's back.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::qcore::{QContext, Scalar};

/// The coefficient rings a [`TruncSeries`] can be built over.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    /// Multiplicative inverse, if this element is a unit.
    fn try_inverse(&self) -> Option<Self>;
}

impl Coeff for Scalar {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn is_ring_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Coeff for Poly {
    fn ring_zero() -> Self {
        Poly::zero()
    }
    fn ring_one() -> Self {
        Poly::one()
    }
    fn is_ring_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Scalar) -> Self {
        Poly::scale(self, c)
    }
    /// Only nonzero constants are units in `Q[x]`.
    fn try_inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(Poly::constant(self.coeff(0).recip())),
            _ => None,
        }
    }
}

/// `c_0 + c_1 t + ... + c_N t^N (mod t^{N+1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Coeff> TruncSeries<R> {
    /// Builds a series of order `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty; a series always has at least its constant term.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::ring_zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |n| {
            if n == 0 {
                R::ring_one()
            } else {
                R::ring_zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.ring_add(b))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.ring_sub(b))
                .collect(),
        ))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Cauchy product modulo `t^{N+1}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![R::ring_zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_ring_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                out[i + j] = out[i + j].ring_add(&a.ring_mul(b));
            }
        }
        Ok(Self::new(out))
    }

    /// `1/S` modulo `t^{N+1}`; needs an invertible constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonUnitConstantTerm)?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = R::ring_zero();
            for k in 1..=n {
                acc = acc.ring_add(&self.coeffs[k].ring_mul(&out[n - k]));
            }
            out.push(R::ring_zero().ring_sub(&acc).ring_mul(&inv0));
        }
        Ok(Self::new(out))
    }

    /// `S^m` for any integer `m`; negative powers go through the reciprocal.
    pub fn pow(&self, m: i64) -> Result<Self> {
        let base = if m < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut exp = m.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut square = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&square)?;
            }
            exp >>= 1;
            if exp > 0 {
                square = square.mul(&square)?;
            }
        }
        Ok(acc)
    }

    /// `D_{q,t} S`. The result has order `N - 1`: its `t^{N}` coefficient would
    /// need `c_{N+1}`, which is not known.
    pub fn q_derivative(&self, ctx: &QContext) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::OrderUnderflow);
        }
        Ok(Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.scale(&ctx.number(n)))
                .collect(),
        ))
    }

    /// `t · D_{q,t} S`, which keeps order `N` exactly (`c_n ↦ [n]_q c_n`).
    pub fn t_q_derivative(&self, ctx: &QContext) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&ctx.number(n)))
                .collect(),
        )
    }

    /// `t · S`, raising the order by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(R::ring_zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Exponential-normalized coefficients `a_n = c_n [n]_q!`.
    pub fn to_exponential(&self, ctx: &QContext) -> Vec<R> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&ctx.factorial(n)))
            .collect()
    }

    /// Inverse of [`Self::to_exponential`]: `c_n = a_n / [n]_q!`.
    pub fn from_exponential(ctx: &QContext, a: &[R]) -> Self {
        Self::new(
            a.iter()
                .enumerate()
                .map(|(n, an)| an.scale(&ctx.small_exp_coeff(n)))
                .collect(),
        )
    }
}

/// `E_q(xt) mod t^{N+1}`, a series in `t` over polynomials in `x`.
pub fn big_qexp_xt(ctx: &QContext, order: usize) -> TruncSeries<Poly> {
    TruncSeries::from_fn(order, |n| Poly::monomial(ctx.big_exp_coeff(n), n))
}

/// `E_q(c t) mod t^{N+1}` for a scalar `c`.
pub fn big_qexp(ctx: &QContext, c: &Scalar, order: usize) -> TruncSeries<Scalar> {
    let mut power = Scalar::one();
    TruncSeries::from_fn(order, |n| {
        let term = ctx.big_exp_coeff(n) * &power;
        power *= c;
        term
    })
}

/// `e_q(c t) mod t^{N+1}` for a scalar `c`.
pub fn small_qexp(ctx: &QContext, c: &Scalar, order: usize) -> TruncSeries<Scalar> {
    let mut power = Scalar::one();
    TruncSeries::from_fn(order, |n| {
        let term = ctx.small_exp_coeff(n) * &power;
        power *= c;
        term
    })
}

/// q-binomial convolution of two exponential coefficient streams:
/// `Σ_k [n, k]_q a_k b_{n-k}`.
pub fn qbinomial_convolution<R: Coeff>(ctx: &QContext, a: &[R], b: &[R]) -> Result<Vec<R>> {
    if a.len() != b.len() {
        return Err(Error::OrderMismatch {
            left: a.len().saturating_sub(1),
            right: b.len().saturating_sub(1),
        });
    }
    Ok((0..a.len())
        .map(|n| {
            (0..=n).fold(R::ring_zero(), |acc, k| {
                acc.ring_add(&a[k].ring_mul(&b[n - k]).scale(&ctx.binomial(n, k as i64)))
            })
        })
        .collect())
}

/// `α_0..α_N` in exponential normalization, where
/// `t D_{q,t}A(t) / A(t) = Σ α_n t^n / [n]_q!` and `a` holds the exponential
/// coefficients of `A`.
pub fn alpha_coefficients(ctx: &QContext, a: &[Scalar]) -> Result<Vec<Scalar>> {
    if a.is_empty() {
        return Err(Error::InsufficientCoefficients {
            requested: 0,
            available: 0,
        });
    }
    let series = TruncSeries::from_exponential(ctx, a);
    let ratio = series.t_q_derivative(ctx).mul(&series.reciprocal()?)?;
    Ok(ratio.to_exponential(ctx))
}
