//! Type-II q-Appell sequences, i.e. polynomial sets with
//! `D_q f_n(x) = [n]_q f_{n-1}(qx)`.
//!
//! A sequence is stored through its determining coefficients `a_0..a_N` in
//! exponential normalization, `A(t) = Σ a_n t^n / [n]_q!`. The polynomials are
//! derived on demand and can be produced by three independent routes:
//!
//! - the explicit sum `f_n(x) = Σ_k [n,k]_q q^{binom(n-k,2)} a_k x^{n-k}`
//!   ([`AppellSeq::polynomial`]),
//! - the operator form `(Σ_k a_k q^{binom(n-k,2)} / [k]_q! D_q^k) x^n`
//!   ([`AppellSeq::operator_form_polynomial`]),
//! - coefficient extraction from `A(t) E_q(xt)` ([`AppellSeq::genfun_polynomials`]).
//!
//! Under the star product, which multiplies determining functions, the
//! sequences of a fixed truncation order form a commutative group whose
//! identity is `I = {q^{binom(n,2)} x^n}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Derivative, Poly};
use crate::qcore::{QContext, Scalar};
use crate::series::{alpha_coefficients, big_qexp_xt, TruncSeries};

/// Index of the first `n ≥ 1` with `D_q f_n ≠ [n]_q f_{n-1}(qx)`, if any.
pub fn first_type2_violation(ctx: &QContext, polys: &[Poly]) -> Option<usize> {
    (1..polys.len())
        .find(|&n| polys[n].q_derivative(ctx) != polys[n - 1].dilate(ctx.q()).scale(&ctx.number(n)))
}

pub fn is_type2_appell(ctx: &QContext, polys: &[Poly]) -> bool {
    first_type2_violation(ctx, polys).is_none()
}

/// The logarithmic-derivative stream `t D_{q,t}A(t) / A(t) = Σ α_n t^n / [n]_q!`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaStream(Vec<Scalar>);

impl AlphaStream {
    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    pub fn get(&self, n: usize) -> &Scalar {
        &self.0[n]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AppellSeq {
    ctx: QContext,
    coeffs: Vec<Scalar>,
    name: Option<String>,
}

impl AppellSeq {
    pub fn from_coeffs(ctx: QContext, coeffs: Vec<Scalar>) -> Result<Self> {
        match coeffs.first() {
            Some(a0) if !a0.is_zero() => Ok(Self {
                ctx,
                coeffs,
                name: None,
            }),
            _ => Err(Error::ZeroLeadingCoefficient),
        }
    }

    /// From a plain-coefficient determining function `A(t)`.
    pub fn from_determining_function(ctx: QContext, series: &TruncSeries<Scalar>) -> Result<Self> {
        let coeffs = series.to_exponential(&ctx);
        Self::from_coeffs(ctx, coeffs)
    }

    /// Recovers the determining coefficients of an explicitly given polynomial
    /// set. Since `f_n(0) = a_n`, only the constant terms are needed, but the
    /// degrees and the type-II relation are validated first.
    pub fn from_polynomials(ctx: QContext, polys: &[Poly]) -> Result<Self> {
        if let Some(index) = polys
            .iter()
            .enumerate()
            .position(|(n, p)| p.degree() != Some(n))
        {
            return Err(Error::WrongDegree { index });
        }
        if let Some(index) = first_type2_violation(&ctx, polys) {
            return Err(Error::NotTypeTwo { index });
        }
        Self::from_coeffs(ctx, polys.iter().map(|p| p.coeff(0)).collect())
    }

    /// `I = {q^{binom(n,2)} x^n}`, determining function `A(t) = 1`.
    pub fn identity(ctx: QContext, order: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); order + 1];
        coeffs[0] = Scalar::one();
        Self {
            ctx,
            coeffs,
            name: Some("identity".into()),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Highest `n` for which `f_n` can be produced.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn determining_function(&self) -> TruncSeries<Scalar> {
        TruncSeries::from_exponential(&self.ctx, &self.coeffs)
    }

    fn check_index(&self, n: usize) -> Result<()> {
        if n > self.order() {
            Err(Error::InsufficientCoefficients {
                requested: n,
                available: self.order(),
            })
        } else {
            Ok(())
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// `f_n(x) = Σ_{k=0}^n [n,k]_q q^{binom(n-k,2)} a_k x^{n-k}`.
    pub fn polynomial(&self, n: usize) -> Result<Poly> {
        self.check_index(n)?;
        let ctx = &self.ctx;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        for (k, ak) in self.coeffs[..=n].iter().enumerate() {
            coeffs[n - k] = ctx.binomial(n, k as i64) * ctx.pow_binom2(n - k) * ak;
        }
        Ok(Poly::new(coeffs))
    }

    /// `f_0..f_upto`.
    pub fn polynomials(&self, upto: usize) -> Result<Vec<Poly>> {
        (0..=upto).map(|n| self.polynomial(n)).collect()
    }

    /// `(Σ_{k=0}^n a_k q^{binom(n-k,2)} / [k]_q! D_q^k) x^n`.
    ///
    /// The operator depends on `n` through `q^{binom(n-k,2)}`; terms with
    /// `k > n` annihilate `x^n` and are dropped.
    pub fn operator_form_polynomial(&self, n: usize) -> Result<Poly> {
        self.check_index(n)?;
        let ctx = &self.ctx;
        let mut power = Poly::monomial(Scalar::one(), n);
        let mut sum = Poly::zero();
        for (k, ak) in self.coeffs[..=n].iter().enumerate() {
            if k > 0 {
                power = power.q_derivative_power(ctx, 1, Derivative::Forward);
            }
            let weight = ak * ctx.pow_binom2(n - k) / ctx.factorial(k);
            sum = &sum + &power.scale(&weight);
        }
        Ok(sum)
    }

    /// `f_0..f_upto` read off `A(t) E_q(xt) = Σ f_n(x) t^n / [n]_q!`.
    pub fn genfun_polynomials(&self, upto: usize) -> Result<Vec<Poly>> {
        self.check_index(upto)?;
        let ctx = &self.ctx;
        let a = TruncSeries::from_fn(upto, |n| {
            Poly::constant(self.coeffs[n].clone() / ctx.factorial(n))
        });
        let product = a.mul(&big_qexp_xt(ctx, upto))?;
        Ok(product.to_exponential(ctx))
    }

    /// Sum of determining functions. Needs `a_0 + b_0 ≠ 0`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs: Vec<Scalar> = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        if coeffs[0].is_zero() {
            return Err(Error::DegenerateSum);
        }
        Self::from_coeffs(self.ctx.clone(), coeffs)
    }

    /// The star product: determining function `A(t) B(t)`.
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let product = self
            .determining_function()
            .mul(&other.determining_function())?;
        Self::from_determining_function(self.ctx.clone(), &product)
    }

    /// `(f*g)_n(x) = Σ_k α(n,k) q^{-binom(k,2)} g_k(x)` where `α(n,k)` is the
    /// coefficient of `x^k` in `f_n`. This is the polynomial-level definition
    /// of the star product and does not touch determining functions of `f*g`.
    pub fn star_component(&self, other: &Self, n: usize) -> Result<Poly> {
        self.check_compatible(other)?;
        let fn_poly = self.polynomial(n)?;
        let mut sum = Poly::zero();
        for k in 0..=n {
            let weight = fn_poly.coeff(k) * self.ctx.pow(-crate::qcore::binom2(k));
            sum = &sum + &other.polynomial(k)?.scale(&weight);
        }
        Ok(sum)
    }

    /// Group inverse: determining function `1/A(t)`.
    pub fn inverse(&self) -> Result<Self> {
        let recip = self
            .determining_function()
            .reciprocal()
            .map_err(|_| Error::ZeroLeadingCoefficient)?;
        Self::from_determining_function(self.ctx.clone(), &recip)
    }

    /// `f^m` under the star product, with `f^0 = I`.
    pub fn pow(&self, m: i64) -> Result<Self> {
        let base = if m < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity(self.ctx.clone(), self.order());
        acc.name = None;
        for _ in 0..m.unsigned_abs() {
            acc = base.star(&acc)?;
        }
        Ok(acc)
    }

    /// Coefficients `c_0..c_n` with `x^n = Σ_k c_k f_{n-k}(x)`, namely
    /// `c_k = q^{-binom(n,2)} [n,k]_q b_k` where `1/A(t) = Σ b_k t^k / [k]_q!`.
    pub fn power_representation(&self, n: usize) -> Result<Vec<Scalar>> {
        self.check_index(n)?;
        let b = self.inverse()?.coeffs;
        let scale = self.ctx.pow(-crate::qcore::binom2(n));
        Ok((0..=n)
            .map(|k| &scale * self.ctx.binomial(n, k as i64) * &b[k])
            .collect())
    }

    /// `Σ_k c_k f_{n-k}(x)`; equals `x^n` exactly.
    pub fn reconstruct_power(&self, n: usize) -> Result<Poly> {
        let c = self.power_representation(n)?;
        let mut sum = Poly::zero();
        for (k, ck) in c.iter().enumerate() {
            sum = &sum + &self.polynomial(n - k)?.scale(ck);
        }
        Ok(sum)
    }

    pub fn alpha(&self) -> Result<AlphaStream> {
        alpha_coefficients(&self.ctx, &self.coeffs).map(AlphaStream)
    }

    /// `f_n(x/q) - (1/[n]_q) Σ_k [n,k]_q α_k f_{n-k}(x) - q^{-1} x f_{n-1}(x)`,
    /// identically zero for a type-II sequence. Needs `n ≥ 1`.
    pub fn recursion_residual(&self, n: usize) -> Result<Poly> {
        if n == 0 {
            return Err(Error::RecursionIndex);
        }
        self.check_index(n)?;
        let ctx = &self.ctx;
        let alpha = self.alpha()?;
        let q_inv = ctx.pow(-1);
        let lhs = self.polynomial(n)?.dilate(&q_inv);
        let mut sum = Poly::zero();
        for k in 0..=n {
            let weight = ctx.binomial(n, k as i64) * alpha.get(k);
            sum = &sum + &self.polynomial(n - k)?.scale(&weight);
        }
        let shifted = &Poly::monomial(q_inv, 1) * &self.polynomial(n - 1)?;
        let rhs = &sum.scale(&ctx.number(n).recip()) + &shifted;
        Ok(&lhs - &rhs)
    }

    pub fn recursion_holds(&self, n: usize) -> Result<bool> {
        Ok(self.recursion_residual(n)?.is_zero())
    }

    /// Left-hand side of
    /// `Σ_k q^{binom(k,2)}/[k]_q! α_k D_{1/q}^k f_n + (x/q) D_{1/q} f_n - [n]_q f_n(x/q) = 0`.
    /// Residual of `Σ α_k/[k]_q! D_{1/q}^k f_n + (x/q) D_{1/q} f_n - [n]_q f_n(x/q)`.
    ///
    /// Iterating the defining relation gives `D_q^k f_n(x) = q^C(k,2) [n]!/[n-k]! f_(n-k)(q^k x)`,
    /// so `D_{1/q}^k f_n = [n]!/[n-k]! f_(n-k)` and no `q^C(k,2)` weight survives.
    pub fn q_difference_residual(&self, n: usize) -> Result<Poly> {
        self.q_difference_residual_with(n, DifferenceWeight::Plain)
    }

    pub fn q_difference_holds(&self, n: usize) -> Result<bool> {
        Ok(self.q_difference_residual(n)?.is_zero())
    }

    /// Same equation with every `α_k` term carrying an extra `q^C(k,2)`.
    /// Only vanishes when `α_k = 0` for all `k >= 2`.
    pub fn weighted_q_difference_residual(&self, n: usize) -> Result<Poly> {
        self.q_difference_residual_with(n, DifferenceWeight::Binom2)
    }

    fn q_difference_residual_with(&self, n: usize, weight: DifferenceWeight) -> Result<Poly> {
        self.check_index(n)?;
        let ctx = &self.ctx;
        let alpha = self.alpha()?;
        let f = self.polynomial(n)?;
        let mut lhs = Poly::zero();
        let mut derivative = f.clone();
        for k in 0..=n {
            if k > 0 {
                derivative = derivative.q_inverse_derivative(ctx);
            }
            let mut w = alpha.get(k) / ctx.factorial(k);
            if weight == DifferenceWeight::Binom2 {
                w *= ctx.pow_binom2(k);
            }
            lhs = &lhs + &derivative.scale(&w);
        }
        let q_inv = ctx.pow(-1);
        lhs = &lhs + &(&Poly::monomial(q_inv.clone(), 1) * &f.q_inverse_derivative(ctx));
        lhs = &lhs - &f.dilate(&q_inv).scale(&ctx.number(n));
        Ok(lhs)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum DifferenceWeight {
    Plain,
    Binom2,
}
