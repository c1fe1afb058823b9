//! Exact coefficient arithmetic: rationals, sparse multivariate polynomials
//! and multivariate truncated power series.
//!
//! Every indeterminate is either a *polynomial* variable, kept exactly, or a
//! *series* variable, carrying its own degree cap in a [`Profile`]. A
//! variable is a series variable of a [`TruncatedSeries`] exactly when it
//! appears in that series' profile.

mod monomial;
mod poly;
mod series;
mod var;

pub use monomial::Monomial;
pub use poly::SparsePoly;
pub use series::{Profile, TruncatedSeries};
pub use var::Var;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num::BigRational;

/// Arbitrary-precision integer.
pub type Integer = num::BigInt;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
