//! Exact computation of type-II q-Appell polynomial sequences.
//!
//! A type-II q-Appell set satisfies `D_q f_n(x) = [n]_q f_{n-1}(qx)`, where
//! `D_q f(x) = (f(x) - f(qx)) / ((1 - q) x)`. Such a set is pinned down by its
//! determining function `A(t)`, through `A(t) E_q(xt) = Σ f_n(x) t^n / [n]_q!`.
//!
//! Everything is computed over [`Scalar`] (arbitrary-precision rationals), so
//! every identity is checked with exact equality.
//!
//! - [`qcore`]: scalars, [`QContext`] and the q-combinatorics
//! - [`poly`]: dense polynomials with dilation and q-derivatives
//! - [`series`]: truncated power series in `t`
//! - [`appell`]: [`AppellSeq`], its constructions, star-product group, recursion
//!   and q-difference checks
//! - [`families`]: q-Bernoulli, q-Euler, identity and Al-Salam–Carlitz II
//! - [`ortho`]: orthogonal and quasi-orthogonal sets

pub mod appell;
pub mod error;
pub mod families;
pub mod ortho;
pub mod poly;
pub mod qcore;
pub mod series;

pub use appell::{first_type2_violation, is_type2_appell, AlphaStream, AppellSeq};
pub use error::{Error, Result};
pub use poly::{Derivative, Poly};
pub use qcore::{format_scalar, parse_scalar, QContext, Scalar};
pub use series::TruncSeries;
