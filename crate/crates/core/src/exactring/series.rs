use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use super::{Monomial, Rational, SparsePoly, Var};
use crate::error::{Error, Result};

/// Degree caps for the series variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Profile {
    caps: BTreeMap<Var, u32>,
}

impl Profile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, cap: u32) -> Self {
        self.caps.insert(v, cap);
        self
    }

    pub fn cap(&self, v: Var) -> Option<u32> {
        self.caps.get(&v).copied()
    }

    pub fn is_series(&self, v: Var) -> bool {
        self.caps.contains_key(&v)
    }

    pub fn caps(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.caps.iter().map(|(v, c)| (*v, *c))
    }

    pub fn without(&self, v: Var) -> Profile {
        let mut caps = self.caps.clone();
        caps.remove(&v);
        Profile { caps }
    }

    /// Pointwise minimum; a variable capped on one side only keeps that cap.
    pub fn merge(&self, other: &Profile) -> Profile {
        let mut caps = self.caps.clone();
        for (v, c) in &other.caps {
            caps.entry(*v)
                .and_modify(|x| *x = (*x).min(*c))
                .or_insert(*c);
        }
        Profile { caps }
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        m.iter().all(|(v, e)| self.cap(v).is_none_or(|c| e <= c))
    }

    /// True when the monomial has no series variable in it.
    pub fn is_constant(&self, m: &Monomial) -> bool {
        m.iter().all(|(v, _)| !self.is_series(v))
    }
}

/// A polynomial read modulo the degree caps of its profile.
///
/// Arithmetic re-truncates eagerly, so every stored term respects the caps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    poly: SparsePoly,
    profile: Profile,
}

impl TruncatedSeries {
    pub fn new(poly: SparsePoly, profile: Profile) -> Self {
        let poly = poly.filter(|m| profile.admits(m));
        TruncatedSeries { poly, profile }
    }

    pub fn zero(profile: Profile) -> Self {
        TruncatedSeries {
            poly: SparsePoly::zero(),
            profile,
        }
    }

    pub fn one(profile: Profile) -> Self {
        Self::new(SparsePoly::one(), profile)
    }

    pub fn constant(c: Rational, profile: Profile) -> Self {
        Self::new(SparsePoly::constant(c), profile)
    }

    pub fn var(v: Var, profile: Profile) -> Self {
        Self::new(SparsePoly::var(v), profile)
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn into_poly(self) -> SparsePoly {
        self.poly
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.poly.coeff(m)
    }

    /// Terms free of series variables; a polynomial in the exact variables.
    pub fn constant_term(&self) -> SparsePoly {
        self.poly.filter(|m| self.profile.is_constant(m))
    }

    fn classing(&self, other: &TruncatedSeries) -> Result<Profile> {
        for (v, _) in self.profile.caps() {
            if !other.profile.is_series(v) && other.poly.mentions(v) {
                return Err(Error::ClassingConflict(v));
            }
        }
        for (v, _) in other.profile.caps() {
            if !self.profile.is_series(v) && self.poly.mentions(v) {
                return Err(Error::ClassingConflict(v));
            }
        }
        Ok(self.profile.merge(&other.profile))
    }

    /// Re-reads the series under a tighter profile.
    pub fn retruncate(&self, profile: &Profile) -> TruncatedSeries {
        Self::new(self.poly.clone(), self.profile.merge(profile))
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let profile = self.classing(other)?;
        Ok(Self::new(&self.poly + &other.poly, profile))
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let profile = self.classing(other)?;
        Ok(Self::new(&self.poly - &other.poly, profile))
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            poly: -&self.poly,
            profile: self.profile.clone(),
        }
    }

    pub fn scale(&self, s: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            poly: self.poly.scale(s),
            profile: self.profile.clone(),
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let profile = self.classing(other)?;
        Ok(self.mul_unchecked(other, profile))
    }

    fn mul_unchecked(&self, other: &TruncatedSeries, profile: Profile) -> TruncatedSeries {
        let a = self.poly.filter(|m| profile.admits(m));
        let b = other.poly.filter(|m| profile.admits(m));
        let poly = a.mul_filtered(&b, |m| profile.admits(m));
        TruncatedSeries { poly, profile }
    }

    /// Multiplies by a polynomial in the exact variables.
    pub fn mul_poly(&self, p: &SparsePoly) -> Result<TruncatedSeries> {
        self.mul(&TruncatedSeries::new(p.clone(), Profile::new()))
    }

    pub fn pow(&self, e: u32) -> TruncatedSeries {
        let mut result = TruncatedSeries::one(self.profile.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base, self.profile.clone());
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base, self.profile.clone());
            }
        }
        result
    }

    /// Multiplicative inverse.
    ///
    /// Requires the constant term to be a nonzero rational.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = self.constant_term();
        let c = match c0.as_constant() {
            Some(c) if !c.is_zero() => c,
            Some(_) => return Err(Error::NotInvertible("constant term is zero".into())),
            None => {
                return Err(Error::NotInvertible(format!(
                    "constant term `{c0}` is not a rational number"
                )))
            }
        };
        let inv_c = c.recip();
        // self = c (1 + r), 1/self = (1/c) Σ (-r)^k; r is nilpotent under the caps.
        let minus_r = TruncatedSeries {
            poly: &SparsePoly::one() - &self.poly.scale(&inv_c),
            profile: self.profile.clone(),
        };
        let mut sum = TruncatedSeries::one(self.profile.clone());
        let mut term = sum.clone();
        loop {
            term = term.mul_unchecked(&minus_r, self.profile.clone());
            if term.is_zero() {
                break;
            }
            sum.poly = &sum.poly + &term.poly;
        }
        Ok(sum.scale(&inv_c))
    }

    /// `log(1 + s) = Σ_{k≥1} (-1)^{k-1} s^k / k`; the constant term must be exactly 1.
    pub fn log(&self) -> Result<TruncatedSeries> {
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(Error::Domain {
                op: "log",
                reason: format!("constant term is `{c0}`, expected 1"),
            });
        }
        let s = TruncatedSeries {
            poly: &self.poly - &SparsePoly::one(),
            profile: self.profile.clone(),
        };
        let mut sum = TruncatedSeries::zero(self.profile.clone());
        let mut power = TruncatedSeries::one(self.profile.clone());
        let mut k: i64 = 1;
        loop {
            power = power.mul_unchecked(&s, self.profile.clone());
            if power.is_zero() {
                break;
            }
            let c = Rational::new(if k % 2 == 1 { 1 } else { -1 }.into(), k.into());
            sum.poly = &sum.poly + &power.poly.scale(&c);
            k += 1;
        }
        Ok(sum)
    }

    /// `exp(s) = Σ s^k / k!`; `s` must have no constant term.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::Domain {
                op: "exp",
                reason: format!("constant term is `{c0}`, expected 0"),
            });
        }
        let mut sum = TruncatedSeries::one(self.profile.clone());
        let mut term = sum.clone();
        let mut k: i64 = 1;
        loop {
            term = term
                .mul_unchecked(self, self.profile.clone())
                .scale(&Rational::new(1.into(), k.into()));
            if term.is_zero() {
                break;
            }
            sum.poly = &sum.poly + &term.poly;
            k += 1;
        }
        Ok(sum)
    }

    /// `self^g = exp(g · log self)` for `g` a polynomial in exact variables.
    pub fn pow_symbolic(&self, g: &SparsePoly) -> Result<TruncatedSeries> {
        for v in g.vars() {
            if self.profile.is_series(v) {
                return Err(Error::ClassingConflict(v));
            }
        }
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(Error::Domain {
                op: "pow_symbolic",
                reason: format!("constant term is `{c0}`, expected 1"),
            });
        }
        self.log()?.mul_poly(g)?.exp()
    }

    /// Replaces `v` by `replacement`. `v` may be exact or a series variable
    /// of `self`; the result carries the merged profile without `v`
    /// (unless `replacement` itself is capped in `v`).
    pub fn substitute(&self, v: Var, replacement: &TruncatedSeries) -> Result<TruncatedSeries> {
        let groups = self.poly.collect_in(v);
        let base_profile = self.profile.without(v);
        let template = TruncatedSeries::zero(base_profile);
        let profile = template.classing(replacement)?;
        for coeff in groups.values() {
            TruncatedSeries::new(coeff.clone(), template.profile.clone()).classing(replacement)?;
        }
        let mut out = SparsePoly::zero();
        let mut power = TruncatedSeries::one(profile.clone());
        let mut current = 0;
        for (e, coeff) in groups {
            while current < e {
                power = power.mul_unchecked(replacement, profile.clone());
                current += 1;
            }
            let c = TruncatedSeries::new(coeff, profile.clone());
            out = &out + &c.mul_unchecked(&power, profile.clone()).poly;
        }
        Ok(TruncatedSeries::new(out, profile))
    }

    /// Coefficient of `v^e` as a series in the other variables.
    pub fn coefficient_of(&self, v: Var, e: u32) -> SparsePoly {
        self.poly.coefficient_of(v, e)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)?;
        for (v, c) in self.profile.caps() {
            write!(f, " + O({v}^{})", c + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
