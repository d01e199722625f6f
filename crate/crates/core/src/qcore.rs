//! Exact rational scalars and the q-combinatorial quantities built on them.
//!
//! Everything here is computed by closed forms and finite products in exact
//! arithmetic. The deformation parameter lives in a [`QContext`], which
//! rejects `q ∈ {0, 1, -1}` so that every `[n]_q` with `n ≥ 1` is nonzero
//! and every q-factorial is invertible.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field: arbitrary-precision rationals, always in lowest terms.
pub type Scalar = BigRational;

/// Parses `"p/q"`, `"-p/q"` or an integer literal into a [`Scalar`].
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let trimmed = text.trim();
    if let Some((_, den)) = trimmed.split_once('/') {
        if den
            .trim()
            .parse::<BigInt>()
            .map(|d| d.is_zero())
            .unwrap_or(true)
        {
            return Err(Error::ParseScalar(text.to_string()));
        }
    }
    Scalar::from_str(trimmed).map_err(|_| Error::ParseScalar(text.to_string()))
}

/// Lossless textual form: `"num/den"`, or `"num"` when the denominator is one.
pub fn format_scalar(value: &Scalar) -> String {
    value.to_string()
}

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// `n(n-1)/2`, the exponent carried by `q^{binom(n,2)}` factors.
pub fn binom2(n: usize) -> i64 {
    let n = n as i64;
    n * (n - 1) / 2
}

/// The deformation parameter `q` together with all q-combinatorics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QContext {
    q: Scalar,
}

impl QContext {
    pub fn new(q: Scalar) -> Result<Self> {
        if q.is_zero() || q.abs().is_one() {
            return Err(Error::InvalidQ);
        }
        Ok(Self { q })
    }

    /// Convenience constructor for `q = num/den`.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ParseScalar(format!("{num}/{den}")));
        }
        Self::new(ratio(num, den))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_scalar(text)?)
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    /// The context with `q` replaced by `1/q`, used for `D_{1/q}`.
    pub fn inverse(&self) -> QContext {
        QContext { q: self.q.recip() }
    }

    /// `q^e` for any integer exponent.
    pub fn pow(&self, e: i64) -> Scalar {
        Pow::pow(&self.q, e)
    }

    /// `q^{binom(n,2)}`.
    pub fn pow_binom2(&self, n: usize) -> Scalar {
        self.pow(binom2(n))
    }

    /// `[n]_q = 1 + q + ... + q^{n-1}`.
    pub fn number(&self, n: usize) -> Scalar {
        (Scalar::one() - self.pow(n as i64)) / (Scalar::one() - &self.q)
    }

    /// `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
    pub fn factorial(&self, n: usize) -> Scalar {
        let one = Scalar::one();
        let mut power = one.clone();
        let mut product = one.clone();
        for _ in 0..n {
            power *= &self.q;
            product *= &one - &power;
        }
        product / Pow::pow(&one - &self.q, n as i64)
    }

    /// Gaussian binomial; zero when `k` lies outside `0..=n`.
    pub fn binomial(&self, n: usize, k: i64) -> Scalar {
        if k < 0 || k as usize > n {
            return Scalar::zero();
        }
        let k = (k as usize).min(n - k as usize);
        let one = Scalar::one();
        let mut top = one.clone();
        let mut bottom = one.clone();
        for j in 0..k {
            top *= &one - self.pow((n - j) as i64);
            bottom *= &one - self.pow(j as i64 + 1);
        }
        top / bottom
    }

    /// `(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})`.
    pub fn pochhammer(&self, a: &Scalar, n: usize) -> Scalar {
        let mut product = Scalar::one();
        let mut term = a.clone();
        for _ in 0..n {
            product *= Scalar::one() - &term;
            term *= &self.q;
        }
        product
    }

    /// Coefficient of `x^k` in `E_q(x)`: `q^{binom(k,2)} / [k]_q!`.
    pub fn big_exp_coeff(&self, k: usize) -> Scalar {
        self.pow_binom2(k) / self.factorial(k)
    }

    /// Coefficient of `x^k` in `e_q(x)`: `1 / [k]_q!`.
    pub fn small_exp_coeff(&self, k: usize) -> Scalar {
        self.factorial(k).recip()
    }
}

impl fmt::Debug for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QContext(q = {})", self.q)
    }
}

impl fmt::Display for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}
