//! Specialization of the main identity to the contents of a partition:
//! `X_k ↦ d_k(λ)`, `z ↦ |λ|`, which yields the expansion of
//! `(y - x)_λ / (y)_λ` in powers of `x` and `1/y`.

use std::fmt;
use std::str::FromStr;

use num::{Signed, Zero};

use crate::combinat::{binom_int, rising_factorial};
use crate::error::{Error, Result};
use crate::exactring::{int, Monomial, Profile, Rational, SparsePoly, TruncatedSeries, Var};
use crate::identities::{Case, VerificationReport};
use crate::partitions::Partition;
use crate::pjk::{p_jk, XVariables};

/// The Jack parameter, restricted to positive rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaParam(Rational);

impl AlphaParam {
    pub fn new(alpha: Rational) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::Domain {
                op: "alpha",
                reason: format!("`{alpha}` is not positive"),
            });
        }
        Ok(AlphaParam(alpha))
    }

    pub fn int(a: i64) -> Result<Self> {
        Self::new(int(a))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for AlphaParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let r: Rational = s.trim().parse().map_err(|_| Error::Domain {
            op: "alpha",
            reason: format!("cannot parse `{s}`"),
        })?;
        Self::new(r)
    }
}

/// `j - 1 - (i - 1)/α` for every cell `(i, j)`, row by row.
pub fn contents(lambda: &Partition, alpha: &AlphaParam) -> Vec<Rational> {
    lambda
        .cells()
        .into_iter()
        .map(|(i, j)| int(j as i64 - 1) - int(i as i64 - 1) / alpha.value())
        .collect()
}

/// `d_k(λ) = Σ_cells c^k`; `d_0 = |λ|`.
pub fn d_k(lambda: &Partition, alpha: &AlphaParam, k: u32) -> Rational {
    contents(lambda, alpha)
        .iter()
        .fold(Rational::zero(), |acc, c| {
            acc + num::pow::pow(c.clone(), k as usize)
        })
}

/// `∏_cells (shift + c)`.
pub fn pochhammer_lambda(lambda: &Partition, alpha: &AlphaParam, shift: &SparsePoly) -> SparsePoly {
    contents(lambda, alpha)
        .into_iter()
        .fold(SparsePoly::one(), |acc, c| {
            &acc * &(shift + &SparsePoly::constant(c))
        })
}

/// `P_jk` evaluated at `X_i = d_i(λ)`.
pub fn f_jk(lambda: &Partition, alpha: &AlphaParam, j: u32, k: u32) -> Rational {
    let x = XVariables::new(j.max(1) as usize);
    let values: Vec<Rational> = (1..=x.len() as u32)
        .map(|i| d_k(lambda, alpha, i))
        .collect();
    let p = p_jk(j, k, &x).expect("enough X variables by construction");
    p.evaluate(&x.assign(&values))
        .as_constant()
        .expect("all X assigned")
}

/// `Σ_{k ≤ min(i,j)} binom(|λ| - j, i - k) F_jk(λ)`.
pub fn coefficient_sum(lambda: &Partition, alpha: &AlphaParam, i: u32, j: u32) -> Rational {
    let n = lambda.weight() as i64;
    (0..=i.min(j)).fold(Rational::zero(), |acc, k| {
        acc + binom_int(n - j as i64, i as i64 - k as i64) * f_jk(lambda, alpha, j, k)
    })
}

fn x_var() -> Var {
    Var::new("x")
}

fn w_var() -> Var {
    Var::new("w")
}

fn profile(cap_w: u32, cap_x: u32) -> Profile {
    Profile::new().with(w_var(), cap_w).with(x_var(), cap_x)
}

/// `∏(1 + (c - x) w) / ∏(1 + c w)`, the left side with `w = 1/y`.
pub fn content_quotient(
    lambda: &Partition,
    alpha: &AlphaParam,
    cap_w: u32,
    cap_x: u32,
) -> Result<TruncatedSeries> {
    let prof = profile(cap_w, cap_x);
    let (w, x) = (SparsePoly::var(w_var()), SparsePoly::var(x_var()));
    let mut num = SparsePoly::one();
    let mut den = SparsePoly::one();
    for c in contents(lambda, alpha) {
        let cw = w.scale(&c);
        num = &num * &(SparsePoly::one() + cw.clone() - &x * &w);
        den = &den * &(SparsePoly::one() + cw);
    }
    TruncatedSeries::new(num, prof.clone()).mul(&TruncatedSeries::new(den, prof).inverse()?)
}

/// `Σ_{i+j ≤ cap_w} (-1)^{i+j} x^i w^{i+j} Σ_k binom(|λ|-j, i-k) F_jk(λ)`.
pub fn content_expansion(
    lambda: &Partition,
    alpha: &AlphaParam,
    cap_w: u32,
    cap_x: u32,
) -> TruncatedSeries {
    let mut poly = SparsePoly::zero();
    for i in 0..=cap_w.min(cap_x) {
        for j in 0..=cap_w - i {
            let sign = if (i + j) % 2 == 0 { int(1) } else { int(-1) };
            let m = Monomial::var_pow(x_var(), i).mul(&Monomial::var_pow(w_var(), i + j));
            poly.add_term(m, sign * coefficient_sum(lambda, alpha, i, j));
        }
    }
    TruncatedSeries::new(poly, profile(cap_w, cap_x))
}

/// Exact comparison of both sides, plus the bound `deg_x(LHS) ≤ |λ|`
/// checked on the product before the `x` truncation.
pub fn verify_content_expansion(
    lambda: &Partition,
    alpha: &AlphaParam,
    cap_w: u32,
    cap_x: u32,
) -> Result<VerificationReport> {
    let n = lambda.weight();
    if cap_x < n {
        return Err(Error::Precondition(format!(
            "x cap {cap_x} is below |λ| = {n}"
        )));
    }
    let case = Case::new("content_expansion")
        .param("partition", lambda.to_string())
        .param("alpha", alpha.to_string())
        .param("w_cap", cap_w)
        .param("x_cap", cap_x);
    // With x left uncapped the degree bound is visible directly.
    let wide = content_quotient(lambda, alpha, cap_w, cap_w.max(n) + 1)?;
    let degree = wide.poly().degree_in(x_var());
    if degree > n {
        return Ok(case.compare_values(&[(
            "deg_x".into(),
            degree.to_string(),
            format!("at most {n}"),
        )]));
    }
    let lhs = content_quotient(lambda, alpha, cap_w, cap_x)?;
    let rhs = content_expansion(lambda, alpha, cap_w, cap_x);
    case.compare(&lhs, &rhs)
}

/// `Σ_k binom(|λ|-j, i-k) F_jk(λ) = 0` for every `i` in `i_range`, `j` in
/// `j_range`; every `i` must exceed `|λ|`.
pub fn verify_vanishing(
    lambda: &Partition,
    alpha: &AlphaParam,
    i_range: impl IntoIterator<Item = u32> + Clone,
    j_range: impl IntoIterator<Item = u32> + Clone,
) -> Result<VerificationReport> {
    let n = lambda.weight();
    if let Some(i) = i_range.clone().into_iter().find(|&i| i <= n) {
        return Err(Error::Precondition(format!(
            "i = {i} is not above |λ| = {n}"
        )));
    }
    let case = Case::new("vanishing")
        .param("partition", lambda.to_string())
        .param("alpha", alpha.to_string());
    let mut values = Vec::new();
    for i in i_range {
        for j in j_range.clone() {
            values.push((
                format!("i={i},j={j}"),
                coefficient_sum(lambda, alpha, i, j).to_string(),
                "0".to_string(),
            ));
        }
    }
    Ok(case.compare_values(&values))
}

/// The row case `λ = (n)`: runs the general check for several `α`,
/// requires the left side not to depend on `α`, and compares it with
/// `(y - x)_n / (y)_n` built from the classical rising factorial.
pub fn chu_vandermonde_demo(n: u32, cap_w: u32) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::Precondition("row length must be at least 1".into()));
    }
    let lambda = Partition::row(n);
    let cap_x = n + 2;
    let case = Case::new("chu_vandermonde")
        .param("n", n)
        .param("w_cap", cap_w);
    let alphas = [
        AlphaParam::int(1)?,
        AlphaParam::int(2)?,
        AlphaParam::new(Rational::new(1.into(), 2.into()))?,
    ];
    for alpha in &alphas {
        let r = verify_content_expansion(&lambda, alpha, cap_w, cap_x)?;
        if !r.passed() {
            return Ok(VerificationReport {
                identity: "chu_vandermonde".into(),
                ..r
            });
        }
    }

    // w^n (y - x)_n = Σ_m r_m (1 - x w)^m w^{n-m}, where (y)_n = Σ_m r_m y^m.
    let prof = profile(cap_w, cap_x);
    let y = Var::new("y");
    let rising = rising_factorial(y, n);
    let (w, x) = (SparsePoly::var(w_var()), SparsePoly::var(x_var()));
    let mut num = SparsePoly::zero();
    let mut den = SparsePoly::zero();
    for (m, r) in rising.collect_in(y) {
        let r = r.as_constant().expect("rational coefficients");
        let wpow = w.pow(n - m);
        num = num + (&(SparsePoly::one() - &x * &w).pow(m) * &wpow).scale(&r);
        den = den + wpow.scale(&r);
    }
    let classical =
        TruncatedSeries::new(num, prof.clone()).mul(&TruncatedSeries::new(den, prof).inverse()?)?;
    let base = content_quotient(&lambda, &alphas[0], cap_w, cap_x)?;
    let mut pairs = vec![(base.clone(), classical)];
    for alpha in &alphas[1..] {
        pairs.push((
            base.clone(),
            content_quotient(&lambda, alpha, cap_w, cap_x)?,
        ));
    }
    let refs: Vec<_> = pairs.iter().map(|(a, b)| (a, b)).collect();
    case.compare_all(&refs)
}
