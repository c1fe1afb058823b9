//! The polynomials `P_jk(X) = Σ_{|μ|=j} ⟨μ,k⟩/z_μ ∏ X_i^{m_i(μ)}`.

use std::collections::BTreeMap;

use num::Zero;

use crate::combinat::gen_binom;
use crate::error::{Error, Result};
use crate::exactring::{Monomial, Rational, SparsePoly, Var};
use crate::partitions::enumerate_partitions;
use crate::symfun::{monomial, power_sum, Alphabet};

/// The indeterminates `X_1, ..., X_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XVariables(Vec<Var>);

impl XVariables {
    /// `X1, ..., X{m}`.
    pub fn new(m: usize) -> Self {
        XVariables((1..=m).map(|i| Var::indexed("X", i)).collect())
    }

    pub fn from_vars(vars: Vec<Var>) -> Self {
        XVariables(vars)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `X_i`, 1-indexed.
    pub fn get(&self, i: usize) -> Result<Var> {
        i.checked_sub(1)
            .and_then(|k| self.0.get(k))
            .copied()
            .ok_or_else(|| Error::MissingVariable(format!("X{i}")))
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    /// The substitution map `X_i ↦ values[i-1]`.
    pub fn assign(&self, values: &[Rational]) -> BTreeMap<Var, Rational> {
        self.0.iter().copied().zip(values.iter().cloned()).collect()
    }
}

pub fn p_jk(j: u32, k: u32, x: &XVariables) -> Result<SparsePoly> {
    if (x.len() as u32) < j {
        return Err(Error::MissingVariable(format!("X{j}")));
    }
    let mut out = SparsePoly::zero();
    if k > j {
        return Ok(out);
    }
    for mu in enumerate_partitions(j) {
        if mu.len() as u32 > k {
            continue;
        }
        let g = gen_binom(&mu, k);
        if g.is_zero() {
            continue;
        }
        let c = Rational::new(g.into(), mu.z().into());
        let m = Monomial::from_pairs(
            mu.multiplicities()
                .into_iter()
                .map(|(i, mult)| (x.vars()[i as usize - 1], mult as u32)),
        );
        out.add_term(m, c);
    }
    Ok(out)
}

/// `P_jk(-X)` at `X_i = ψ^i(A)`, computed as `(-1)^k Σ_{|μ|=j, l(μ)=k} ψ_μ(A)`.
pub fn p_jk_via_monomials(j: u32, k: u32, a: &Alphabet) -> SparsePoly {
    let sum = enumerate_partitions(j)
        .into_iter()
        .filter(|mu| mu.len() as u32 == k)
        .fold(SparsePoly::zero(), |acc, mu| acc + monomial(a, &mu));
    if k % 2 == 1 {
        -sum
    } else {
        sum
    }
}

/// `P_jk` from its defining sum, followed by `X_i ↦ -ψ^i(A)`; the other
/// route to [`p_jk_via_monomials`].
pub fn p_jk_negated_on_alphabet(j: u32, k: u32, a: &Alphabet) -> Result<SparsePoly> {
    let x = XVariables::new(j as usize);
    let mut poly = p_jk(j, k, &x)?;
    for (i, &var) in x.vars().iter().enumerate() {
        poly = poly.substitute(var, &-power_sum(a, i + 1));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{int, rat};

    fn xv(i: usize) -> SparsePoly {
        SparsePoly::var(Var::indexed("X", i))
    }

    #[test]
    fn small_cases() {
        let x = XVariables::new(8);
        assert_eq!(p_jk(0, 0, &x).unwrap(), SparsePoly::one());
        assert_eq!(
            p_jk(2, 2, &x).unwrap(),
            (xv(2) + xv(1).pow(2)).scale(&rat(1, 2))
        );
        assert_eq!(p_jk(3, 2, &x).unwrap(), xv(3) + &xv(1) * &xv(2));
        assert_eq!(p_jk(2, 2, &x).unwrap().to_string(), "1/2*X1^2 + 1/2*X2");
        assert!(p_jk(2, 3, &x).unwrap().is_zero());
    }

    #[test]
    fn missing_variables() {
        assert_eq!(
            p_jk(4, 2, &XVariables::new(3)),
            Err(Error::MissingVariable("X4".into()))
        );
    }

    #[test]
    fn closed_forms_for_k_one_and_two() {
        let x = XVariables::new(8);
        for j in 1..=8u32 {
            assert_eq!(p_jk(j, 1, &x).unwrap(), xv(j as usize));
            let mut expected = xv(j as usize).scale(&rat(j as i64 - 1, 2));
            for j1 in 1..j {
                expected = expected + (&xv(j1 as usize) * &xv((j - j1) as usize)).scale(&rat(1, 2));
            }
            assert_eq!(p_jk(j, 2, &x).unwrap(), expected, "j = {j}");
        }
    }

    #[test]
    fn vanishing_and_degree() {
        let x = XVariables::new(8);
        for j in 1..=8u32 {
            assert!(p_jk(j, 0, &x).unwrap().is_zero());
            for k in 0..=j + 1 {
                let p = p_jk(j, k, &x).unwrap();
                assert!(p.total_degree() <= k);
                // X_i carries weight i.
                for (m, _) in p.terms() {
                    let w: u32 = m
                        .iter()
                        .map(|(v, e)| v.name()[1..].parse::<u32>().unwrap() * e)
                        .sum();
                    assert_eq!(w, j);
                }
            }
        }
    }

    #[test]
    fn monomial_route_examples() {
        let a = Alphabet::indexed("a", 3);
        let a1 = SparsePoly::var(Var::new("a1"));
        let a2 = SparsePoly::var(Var::new("a2"));
        let a3 = SparsePoly::var(Var::new("a3"));
        let e2 = &a1 * &a2 + &a1 * &a3 + &a2 * &a3;
        assert_eq!(p_jk_via_monomials(2, 2, &a), e2);
        assert_eq!(p_jk_negated_on_alphabet(2, 2, &a).unwrap(), e2);
        assert_eq!(p_jk_via_monomials(1, 1, &a), -(a1 + a2 + a3));
        assert!(p_jk_via_monomials(2, 3, &a).is_zero());
        assert!(p_jk_negated_on_alphabet(2, 3, &a).unwrap().is_zero());
    }

    #[test]
    fn both_routes_agree_on_six_letters() {
        let a = Alphabet::indexed("a", 6);
        for j in 0..=6 {
            for k in 0..=j {
                assert_eq!(
                    p_jk_via_monomials(j, k, &a),
                    p_jk_negated_on_alphabet(j, k, &a).unwrap(),
                    "j={j} k={k}"
                );
            }
        }
    }

    #[test]
    fn numeric_assignment() {
        let x = XVariables::new(2);
        let p = p_jk(2, 2, &x).unwrap();
        let vals = x.assign(&[int(2), int(4)]);
        assert_eq!(p.evaluate(&vals).as_constant(), Some(int(4)));
    }
}
