//! Orthogonal and quasi-orthogonal type-II q-Appell sets, checked structurally
//! through their recurrences.
//!
//! The orthogonal sets are `P_{n+1} = (q^n x + B_0) P_n + C_1 (1 - q^n) P_{n-1}`
//! with `P_0 = 1`, `P_1 = x + B_0`. When `z^2 + B_0 z - C_1` splits over the
//! rationals with roots `α, β`, this is the modified Al-Salam–Carlitz II
//! sequence for `(α, β)`.
//!
//! The quasi-orthogonal companion is tied to `P` by the connection sum
//!
//! ```text
//! P_n = [n]_q!/λ^n · Σ_{k=0}^n λ^k/[k]_q! · Q_k
//! ```
//!
//! whose inverse is `Q_n = P_n - ([n]_q/λ) P_{n-1}`. The coefficient
//! `[n]_q!/λ^n` in front of `P_{n-1}` (see [`QuasiCoefficient::Factorial`])
//! agrees with it only for `n ≤ 1`, and with it the sequence stops being
//! type II from `n = 3` on when `λ = 1` and `q ≠ 2`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{RecurrenceForm, ADOPTED_FORM};
use crate::poly::Poly;
use crate::qcore::{QContext, Scalar};

/// `(B_0, C_1)` of a nondegenerate orthogonal recurrence.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeTermSpec {
    ctx: QContext,
    b0: Scalar,
    c1: Scalar,
}

impl ThreeTermSpec {
    pub fn new(ctx: QContext, b0: Scalar, c1: Scalar) -> Result<Self> {
        if c1.is_zero() {
            return Err(Error::DegenerateRecurrence);
        }
        Ok(Self { ctx, b0, c1 })
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn b0(&self) -> &Scalar {
        &self.b0
    }

    pub fn c1(&self) -> &Scalar {
        &self.c1
    }

    /// `(A_n, B_n, C_n) = (q^n, B_0, C_1 (1 - q^n))`.
    pub fn coefficients(&self, n: usize) -> (Scalar, Scalar, Scalar) {
        ADOPTED_FORM.coefficients(&self.ctx, &self.b0, &self.c1, n)
    }

    /// Rational `(α, β)` with `α + β = -B_0` and `αβ = -C_1`, if they exist.
    pub fn asc2_parameters(&self) -> Option<(Scalar, Scalar)> {
        rational_roots(&self.b0, &self.c1)
    }
}

/// `(B_0, C_1, λ)` of a quasi-orthogonal type-II set.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiSpec {
    base: ThreeTermSpec,
    lambda: Scalar,
}

impl QuasiSpec {
    pub fn new(ctx: QContext, b0: Scalar, c1: Scalar, lambda: Scalar) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        Ok(Self {
            base: ThreeTermSpec::new(ctx, b0, c1)?,
            lambda,
        })
    }

    pub fn base(&self) -> &ThreeTermSpec {
        &self.base
    }

    pub fn ctx(&self) -> &QContext {
        &self.base.ctx
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }
}

/// Roots of `z^2 + B_0 z - C_1` when both are rational.
pub fn rational_roots(b0: &Scalar, c1: &Scalar) -> Option<(Scalar, Scalar)> {
    let disc = b0 * b0 + c1 * Scalar::from_integer(4.into());
    let root = rational_sqrt(&disc)?;
    let two = Scalar::from_integer(2.into());
    Some(((-b0 + &root) / &two, (-b0 - root) / two))
}

fn rational_sqrt(value: &Scalar) -> Option<Scalar> {
    use num_traits::Signed;
    if value.is_negative() {
        return None;
    }
    let num = value.numer().sqrt();
    let den = value.denom().sqrt();
    (&num * &num == *value.numer() && &den * &den == *value.denom()).then(|| Scalar::new(num, den))
}

/// `P_0..P_order` for the orthogonal type-II set with parameters `spec`.
pub fn orthogonal_appell_family(spec: &ThreeTermSpec, order: usize) -> Vec<Poly> {
    ADOPTED_FORM.generate(&spec.ctx, &spec.b0, &spec.c1, order)
}

fn step_rhs(factor_x: Scalar, constant: Scalar, prev: Scalar, cur: &Poly, before: &Poly) -> Poly {
    &(&Poly::new(vec![constant, factor_x]) * cur) + &before.scale(&prev)
}

/// `P_{n+1} = (q^n x + B_0) P_n + C_1 (1 - q^n) P_{n-1}` for `n ≥ 1`;
/// `P_1 = x + B_0` and `P_0 = 1` for `n = 0`.
pub fn three_term_holds(polys: &[Poly], spec: &ThreeTermSpec, n: usize) -> bool {
    if n + 1 >= polys.len() {
        return false;
    }
    if n == 0 {
        return polys[0] == Poly::one()
            && polys[1] == Poly::new(vec![spec.b0.clone(), Scalar::one()]);
    }
    let (a, b, c) = spec.coefficients(n);
    polys[n + 1] == step_rhs(a, b, c, &polys[n], &polys[n - 1])
}

/// The coefficient `c_n` in `Q_n = P_n - c_n P_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuasiCoefficient {
    /// `[n]_q / λ`: the exact inverse of the connection sum.
    QNumber,
    /// `[n]_q! / λ^n`.
    Factorial,
}

impl QuasiCoefficient {
    pub fn value(self, ctx: &QContext, lambda: &Scalar, n: usize) -> Scalar {
        match self {
            QuasiCoefficient::QNumber => ctx.number(n) / lambda,
            QuasiCoefficient::Factorial => {
                ctx.factorial(n) / num_traits::pow::Pow::pow(lambda, n as i64)
            }
        }
    }
}

/// `Q_0 = P_0`, `Q_n = P_n - c_n P_{n-1}`.
pub fn quasi_transform(
    ctx: &QContext,
    p: &[Poly],
    lambda: &Scalar,
    coefficient: QuasiCoefficient,
) -> Vec<Poly> {
    p.iter()
        .enumerate()
        .map(|(n, pn)| {
            if n == 0 {
                pn.clone()
            } else {
                pn - &p[n - 1].scale(&coefficient.value(ctx, lambda, n))
            }
        })
        .collect()
}

/// `Q_0..Q_order` for the quasi-orthogonal type-II set with parameters `spec`.
pub fn quasi_orthogonal_family(spec: &QuasiSpec, order: usize) -> Vec<Poly> {
    let p = orthogonal_appell_family(&spec.base, order);
    quasi_transform(spec.ctx(), &p, &spec.lambda, QuasiCoefficient::QNumber)
}

/// `T_k = λ^k / [k]_q!`.
pub fn tail_weight(ctx: &QContext, lambda: &Scalar, k: usize) -> Scalar {
    num_traits::pow::Pow::pow(lambda, k as i64) / ctx.factorial(k)
}

/// `E_n = [n]_q! / λ^n`.
pub fn tail_scale(ctx: &QContext, lambda: &Scalar, n: usize) -> Scalar {
    ctx.factorial(n) / num_traits::pow::Pow::pow(lambda, n as i64)
}

/// `[n]_q!/λ^n · Σ_{k=0}^n λ^k/[k]_q! · Q_k`.
pub fn connection_sum(ctx: &QContext, q_polys: &[Poly], lambda: &Scalar, n: usize) -> Poly {
    let mut sum = Poly::zero();
    for (k, qk) in q_polys[..=n].iter().enumerate() {
        sum = &sum + &qk.scale(&tail_weight(ctx, lambda, k));
    }
    sum.scale(&tail_scale(ctx, lambda, n))
}

pub fn connection_sum_check(
    ctx: &QContext,
    q_polys: &[Poly],
    p_polys: &[Poly],
    lambda: &Scalar,
    n: usize,
) -> bool {
    n < q_polys.len() && n < p_polys.len() && connection_sum(ctx, q_polys, lambda, n) == p_polys[n]
}

fn tail_sum(ctx: &QContext, q_polys: &[Poly], lambda: &Scalar, n: usize) -> Poly {
    let mut tail = Poly::zero();
    for (k, qk) in q_polys.iter().enumerate().take(n.saturating_sub(1)) {
        tail = &tail + &qk.scale(&tail_weight(ctx, lambda, k));
    }
    tail
}

/// Tests
/// `Q_{n+1} = (A_n x + B_n) Q_n + C_n Q_{n-1} + [n]_q!/λ^n Σ_{k=0}^{n-2} λ^k/[k]_q! Q_k`
/// where `(A_n, B_n, C_n)` come from `form` (for [`RecurrenceForm::QPowerX`]:
/// `(q^n, B_0, C_1(1 - q^n))`). The tail is empty for `n < 2`.
pub fn tailed_recurrence_holds(
    q_polys: &[Poly],
    spec: &QuasiSpec,
    n: usize,
    form: RecurrenceForm,
) -> bool {
    if n == 0 || n + 1 >= q_polys.len() {
        return false;
    }
    let ctx = spec.ctx();
    let (a, b, c) = form.coefficients(ctx, &spec.base.b0, &spec.base.c1, n);
    let tail = tail_sum(ctx, q_polys, &spec.lambda, n).scale(&tail_scale(ctx, &spec.lambda, n));
    q_polys[n + 1] == &step_rhs(a, b, c, &q_polys[n], &q_polys[n - 1]) + &tail
}

/// Coefficients of the tailed recurrence that the quasi-orthogonal family
/// actually satisfies:
///
/// ```text
/// Q_{n+1} = (q^n x + B_0 - 1/λ) Q_n + C_n Q_{n-1} + E_n Σ_{k=0}^{n-2} λ^k/[k]_q! Q_k
/// C_n = (1 - q^n)(C_1 + B_0/λ) - [n]_q/λ^2
/// E_n = [n]_q!/λ^{n+1} · ((1-q) λ B_0 + (1-q)^2 λ^2 C_1 - 1)
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct TailedCoefficients {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub e: Scalar,
}

impl TailedCoefficients {
    pub fn derive(spec: &QuasiSpec, n: usize) -> Self {
        let ctx = spec.ctx();
        let lambda = &spec.lambda;
        let b0 = &spec.base.b0;
        let c1 = &spec.base.c1;
        let one = Scalar::one();
        let qn = ctx.pow(n as i64);
        let one_minus_q = &one - ctx.q();
        let b = b0 - lambda.recip();
        let c = (&one - &qn) * (c1 + b0 / lambda) - ctx.number(n) / (lambda * lambda);
        let k = &one_minus_q * lambda;
        let e = ctx.factorial(n) / num_traits::pow::Pow::pow(lambda, n as i64 + 1)
            * (&k * b0 + &k * &k * c1 - one);
        Self { a: qn, b, c, e }
    }
}

/// Tests the recurrence with the [`TailedCoefficients`] of `spec`.
pub fn derived_tailed_recurrence_holds(q_polys: &[Poly], spec: &QuasiSpec, n: usize) -> bool {
    if n == 0 || n + 1 >= q_polys.len() {
        return false;
    }
    let ctx = spec.ctx();
    let co = TailedCoefficients::derive(spec, n);
    let tail = tail_sum(ctx, q_polys, &spec.lambda, n).scale(&co.e);
    q_polys[n + 1] == &step_rhs(co.a, co.b, co.c, &q_polys[n], &q_polys[n - 1]) + &tail
}
