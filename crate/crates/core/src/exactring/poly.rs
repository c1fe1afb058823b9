use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{Monomial, Rational, Var};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by monomial, so iteration and
/// rendering follow the canonical order. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|p| p.0))
            .collect()
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.mentions(v))
    }

    /// Largest exponent of `v` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: Var, e: u32) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let (k, rest) = m.split(v);
            if k == e {
                out.terms.insert(rest, c.clone());
            }
        }
        out
    }

    /// Groups terms by the exponent of `v`: `self = Σ_e out[e] · v^e`.
    pub fn collect_in(&self, v: Var) -> BTreeMap<u32, SparsePoly> {
        let mut out: BTreeMap<u32, SparsePoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (k, rest) = m.split(v);
            out.entry(k).or_default().terms.insert(rest, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> SparsePoly {
        if s.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Product keeping only the monomials accepted by `keep`.
    ///
    /// `keep` must be closed under division (if `m·n` is kept so are its
    /// factors); truncation profiles satisfy this.
    pub fn mul_filtered<F: Fn(&Monomial) -> bool>(
        &self,
        other: &SparsePoly,
        keep: F,
    ) -> SparsePoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if !keep(&m) {
                    continue;
                }
                let c = ca * cb;
                match acc.entry(m) {
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    Entry::Occupied(mut e) => *e.get_mut() += c,
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SparsePoly { terms: acc }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut result = SparsePoly::one();
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// Keeps the terms accepted by `keep`.
    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces `v` by the polynomial `replacement` everywhere.
    pub fn substitute(&self, v: Var, replacement: &SparsePoly) -> SparsePoly {
        let groups = self.collect_in(v);
        let mut out = SparsePoly::zero();
        let mut power = SparsePoly::one();
        let mut current = 0;
        for (e, coeff) in groups {
            while current < e {
                power = &power * replacement;
                current += 1;
            }
            out = &out + &(&coeff * &power);
        }
        out
    }

    /// Substitutes rational values for the given variables.
    pub fn evaluate(&self, values: &BTreeMap<Var, Rational>) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.iter() {
                match values.get(&v) {
                    Some(x) => coeff *= num::pow(x.clone(), e as usize),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), coeff);
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Var> for SparsePoly {
    fn from(v: Var) -> Self {
        SparsePoly::var(v)
    }
}

impl From<Rational> for SparsePoly {
    fn from(c: Rational) -> Self {
        SparsePoly::constant(c)
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.mul_filtered(rhs, |_| true)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: &SparsePoly) -> SparsePoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    fn x(name: &str) -> SparsePoly {
        SparsePoly::var(Var::new(name))
    }

    #[test]
    fn rendering_is_canonical() {
        let p = x("X2").scale(&rat(1, 2)) + x("X1").pow(2).scale(&rat(1, 2));
        assert_eq!(p.to_string(), "1/2*X1^2 + 1/2*X2");
        let q = x("z").pow(3) - x("z").pow(2).scale(&rat(3, 1)) + x("z").scale(&rat(2, 1));
        assert_eq!(q.to_string(), "2*z - 3*z^2 + z^3");
        assert_eq!((-SparsePoly::one() + x("t").pow(2)).to_string(), "-1 + t^2");
        assert_eq!(SparsePoly::zero().to_string(), "0");
    }

    #[test]
    fn like_terms_collect_and_cancel() {
        let (z, u) = (x("z"), x("u"));
        assert_eq!(&z * &u + u.clone(), (&z + &SparsePoly::one()) * &u);
        assert!((&u - &u).is_zero());
    }

    #[test]
    fn substitution_and_evaluation() {
        let z = Var::new("z");
        let p = x("z").pow(2) + x("z");
        let shifted = p.substitute(z, &(x("z") - SparsePoly::int(1)));
        assert_eq!(shifted, x("z").pow(2) - x("z"));
        let mut vals = BTreeMap::new();
        vals.insert(z, rat(5, 1));
        assert_eq!(p.evaluate(&vals), SparsePoly::int(30));
    }

    #[test]
    fn coefficient_extraction() {
        let t = Var::new("t");
        let p = (x("t") + x("a")).pow(2);
        assert_eq!(p.coefficient_of(t, 1), x("a").scale(&rat(2, 1)));
        assert_eq!(p.degree_in(t), 2);
        assert_eq!(p.collect_in(t).len(), 3);
    }
}
