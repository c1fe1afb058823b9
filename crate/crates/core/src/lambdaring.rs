//! Action of symmetric functions on formal sums of rank-1 monomials.
//!
//! A [`LambdaElement`] is `Σ c_u · u` where each `u` is a monomial in
//! rank-1 atoms (products of rank-1 elements are rank-1) and each `c_u` is a
//! polynomial of degree at most 1 in the one binomial-type symbol fixed by the
//! [`LambdaContext`]. The action is
//!
//! * `ψ^i[Σ c u] = Σ c u^i`
//! * `λ_t[Σ c u] = ∏ (1 + t u)^c`
//! * `σ_t[Σ c u] = ∏ (1 - t u)^{-c}`
//!
//! The element `q` is never primitive: it is stored as `q' - 1` with `q'` a
//! rank-1 atom, and results are re-expressed in `q` by `q' = 1 + q`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactring::{Monomial, Profile, Rational, SparsePoly, TruncatedSeries, Var};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symfun::{power_sum_expansion, Basis, PowerSumExpansion};

/// `Σ c_u u`: rank-1 monomials with binomial-type coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LambdaElement {
    terms: BTreeMap<Monomial, SparsePoly>,
}

impl LambdaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(SparsePoly::one())
    }

    /// A binomial-type element `c · 1`.
    pub fn constant(c: SparsePoly) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn atom(v: Var) -> Self {
        Self::term(SparsePoly::one(), Monomial::var(v))
    }

    /// A single rank-1 monomial with coefficient 1.
    pub fn atom_monomial(u: Monomial) -> Self {
        Self::term(SparsePoly::one(), u)
    }

    pub fn term(c: SparsePoly, u: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_term(u, c);
        e
    }

    /// `q' - 1` for a rank-1 atom `q'`.
    pub fn shifted_atom(qprime: Var) -> Self {
        Self::atom(qprime) - Self::one()
    }

    pub fn add_term(&mut self, u: Monomial, c: SparsePoly) {
        let entry = self.terms.entry(u).or_default();
        *entry = &*entry + &c;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &SparsePoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &SparsePoly) -> LambdaElement {
        let mut out = LambdaElement::zero();
        for (u, d) in &self.terms {
            out.add_term(u.clone(), d * c);
        }
        out
    }

    /// The element read as an ordinary polynomial.
    pub fn to_poly(&self) -> SparsePoly {
        self.terms
            .iter()
            .fold(SparsePoly::zero(), |acc, (u, c)| acc + c.mul_monomial(u))
    }
}

impl Add for &LambdaElement {
    type Output = LambdaElement;
    fn add(self, rhs: &LambdaElement) -> LambdaElement {
        let mut out = self.clone();
        for (u, c) in &rhs.terms {
            out.add_term(u.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LambdaElement {
    type Output = LambdaElement;
    fn sub(self, rhs: &LambdaElement) -> LambdaElement {
        self + &(-rhs)
    }
}

impl Neg for &LambdaElement {
    type Output = LambdaElement;
    fn neg(self) -> LambdaElement {
        LambdaElement {
            terms: self.terms.iter().map(|(u, c)| (u.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LambdaElement {
    type Output = LambdaElement;
    fn mul(self, rhs: &LambdaElement) -> LambdaElement {
        let mut out = LambdaElement::zero();
        for (u, c) in &self.terms {
            for (v, d) in &rhs.terms {
                out.add_term(u.mul(v), c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LambdaElement {
            type Output = LambdaElement;
            fn $method(self, rhs: LambdaElement) -> LambdaElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LambdaElement {
    type Output = LambdaElement;
    fn neg(self) -> LambdaElement {
        -&self
    }
}

/// Replaces `q'` by `1 + q`.
pub fn reexpress_q(p: &SparsePoly, qprime: Var, q: Var) -> SparsePoly {
    p.substitute(qprime, &(SparsePoly::one() + SparsePoly::var(q)))
}

/// Fixes the binomial-type symbol and evaluates the action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaContext {
    binomial: Var,
}

impl LambdaContext {
    pub fn new(binomial: Var) -> Self {
        LambdaContext { binomial }
    }

    pub fn binomial(&self) -> Var {
        self.binomial
    }

    pub fn validate(&self, e: &LambdaElement) -> Result<()> {
        for (u, c) in e.terms() {
            if u.mentions(self.binomial) {
                return Err(Error::Precondition(format!(
                    "binomial symbol `{}` used as a rank-1 atom",
                    self.binomial
                )));
            }
            let foreign = c.vars().into_iter().any(|v| v != self.binomial);
            if foreign || c.degree_in(self.binomial) > 1 {
                return Err(Error::BinomialDegree(c.to_string()));
            }
        }
        Ok(())
    }

    /// Adams operation `ψ^i`.
    pub fn psi(&self, i: u32, e: &LambdaElement) -> LambdaElement {
        let mut out = LambdaElement::zero();
        for (u, c) in e.terms() {
            out.add_term(u.pow(i), c.clone());
        }
        out
    }

    /// `ψ^μ[e] = ∏ ψ^{μ_k}[e]`.
    pub fn psi_mu(&self, mu: &Partition, e: &LambdaElement) -> LambdaElement {
        mu.parts()
            .iter()
            .fold(LambdaElement::one(), |acc, &p| &acc * &self.psi(p, e))
    }

    fn product_action(
        &self,
        e: &LambdaElement,
        t: Var,
        profile: &Profile,
        sign: i64,
    ) -> Result<TruncatedSeries> {
        self.validate(e)?;
        if !profile.is_series(t) {
            return Err(Error::Precondition(format!("`{t}` has no truncation cap")));
        }
        let mut out = TruncatedSeries::one(profile.clone());
        for (u, c) in e.terms() {
            let tu = SparsePoly::var(t).mul_monomial(u);
            let base = TruncatedSeries::new(
                SparsePoly::one() + tu.scale(&Rational::from_integer(sign.into())),
                profile.clone(),
            );
            let exponent = if sign > 0 { c.clone() } else { -c };
            out = out.mul(&base.pow_symbolic(&exponent)?)?;
        }
        Ok(out)
    }

    /// `λ_t[e] = ∏ (1 + t u)^{c_u}`.
    pub fn lambda_t(
        &self,
        e: &LambdaElement,
        t: Var,
        profile: &Profile,
    ) -> Result<TruncatedSeries> {
        self.product_action(e, t, profile, 1)
    }

    /// `σ_t[e] = ∏ (1 - t u)^{-c_u}`.
    pub fn sigma_t(&self, e: &LambdaElement, t: Var, profile: &Profile) -> Result<TruncatedSeries> {
        self.product_action(e, t, profile, -1)
    }

    fn coeff_via(&self, i: u32, e: &LambdaElement, sign: i64) -> Result<SparsePoly> {
        let t = Var::new("_t");
        let profile = Profile::new().with(t, i);
        Ok(self
            .product_action(e, t, &profile, sign)?
            .coefficient_of(t, i))
    }

    /// `Λ^i[e]`.
    pub fn lambda_coeff(&self, i: u32, e: &LambdaElement) -> Result<SparsePoly> {
        self.coeff_via(i, e, 1)
    }

    /// `S^i[e]`.
    pub fn sigma_coeff(&self, i: u32, e: &LambdaElement) -> Result<SparsePoly> {
        self.coeff_via(i, e, -1)
    }

    /// `f[e]` for `f` given in power sums.
    pub fn apply(&self, f: &PowerSumExpansion, e: &LambdaElement) -> Result<SparsePoly> {
        self.validate(e)?;
        Ok(f.terms().fold(SparsePoly::zero(), |acc, (nu, c)| {
            acc + self.psi_mu(nu, e).to_poly().scale(c)
        }))
    }

    /// `ψ^μ[q]` with `q = q' - 1`, re-expressed in `q`.
    pub fn psi_mu_of_q(&self, mu: &Partition, qprime: Var, q: Var) -> SparsePoly {
        let e = self.psi_mu(mu, &LambdaElement::shifted_atom(qprime));
        reexpress_q(&e.to_poly(), qprime, q)
    }

    /// Evaluates every line of the sum and product rules at degree `i`.
    pub fn sum_product_rules(
        &self,
        p: &LambdaElement,
        q: &LambdaElement,
        i: u32,
    ) -> Result<RuleReport> {
        let sum = p + q;
        let prod = p * q;
        self.validate(&prod)?;

        let mut sum_complete = SparsePoly::zero();
        let mut sum_elementary = SparsePoly::zero();
        for j in 0..=i {
            sum_complete = sum_complete + &self.sigma_coeff(i - j, p)? * &self.sigma_coeff(j, q)?;
            sum_elementary =
                sum_elementary + &self.lambda_coeff(i - j, p)? * &self.lambda_coeff(j, q)?;
        }
        let additive = [
            self.sigma_coeff(i, &sum)? == sum_complete,
            self.lambda_coeff(i, &sum)? == sum_elementary,
        ];

        let t = Var::new("_t");
        let profile = Profile::new().with(t, i);
        let series = [
            self.sigma_t(&sum, t, &profile)?
                == self
                    .sigma_t(p, t, &profile)?
                    .mul(&self.sigma_t(q, t, &profile)?)?,
            self.lambda_t(&sum, t, &profile)?
                == self
                    .lambda_t(p, t, &profile)?
                    .mul(&self.lambda_t(q, t, &profile)?)?,
        ];

        let direct_s = self.sigma_coeff(i, &prod)?;
        let direct_l = self.lambda_coeff(i, &prod)?;
        let mut lines_s: [SparsePoly; 3] = Default::default();
        let mut lines_l: [SparsePoly; 3] = Default::default();
        for mu in enumerate_partitions(i) {
            let inv_z = Rational::new(1.into(), mu.z().into());
            let sign = if (i - mu.len() as u32).is_multiple_of(2) {
                1
            } else {
                -1
            };
            let pp =
                (&self.psi_mu(&mu, p).to_poly() * &self.psi_mu(&mu, q).to_poly()).scale(&inv_z);
            lines_s[0] = &lines_s[0] + &pp;
            lines_l[0] = &lines_l[0] + &pp.scale(&Rational::from_integer(sign.into()));

            let m_p = self.apply(&power_sum_expansion(Basis::Monomial, &mu), p)?;
            let mut h_q = SparsePoly::one();
            let mut e_q = SparsePoly::one();
            for &part in mu.parts() {
                h_q = &h_q * &self.sigma_coeff(part, q)?;
                e_q = &e_q * &self.lambda_coeff(part, q)?;
            }
            lines_s[1] = &lines_s[1] + &(&m_p * &h_q);
            lines_l[1] = &lines_l[1] + &(&m_p * &e_q);

            let s_p = self.apply(&power_sum_expansion(Basis::Schur, &mu), p)?;
            let s_q = self.apply(&power_sum_expansion(Basis::Schur, &mu), q)?;
            let s_q_conj = self.apply(&power_sum_expansion(Basis::Schur, &mu.conjugate()), q)?;
            lines_s[2] = &lines_s[2] + &(&s_p * &s_q);
            lines_l[2] = &lines_l[2] + &(&s_p * &s_q_conj);
        }
        Ok(RuleReport {
            additive,
            series,
            complete_product: lines_s.map(|l| l == direct_s),
            elementary_product: lines_l.map(|l| l == direct_l),
        })
    }

    pub fn check_sum_product_rules(
        &self,
        p: &LambdaElement,
        q: &LambdaElement,
        i: u32,
    ) -> Result<bool> {
        Ok(self.sum_product_rules(p, q, i)?.holds())
    }
}

/// Per-line outcome of the sum and product rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleReport {
    /// `S^i[P+Q]`, `Λ^i[P+Q]` as convolutions.
    pub additive: [bool; 2],
    /// `σ_t`, `λ_t` additive-to-multiplicative, up to truncation.
    pub series: [bool; 2],
    /// The three expansions of `S^i[PQ]`.
    pub complete_product: [bool; 3],
    /// The three expansions of `Λ^i[PQ]`.
    pub elementary_product: [bool; 3],
}

impl RuleReport {
    pub fn holds(&self) -> bool {
        self.additive
            .iter()
            .chain(&self.series)
            .chain(&self.complete_product)
            .chain(&self.elementary_product)
            .all(|&b| b)
    }
}
