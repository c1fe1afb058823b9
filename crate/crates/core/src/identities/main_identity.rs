use num::Zero;
use rayon::prelude::*;

use super::report::{Case, VerificationReport};
use super::{u_var, z_var};
use crate::combinat::{binom_int, binom_poly, gen_binom};
use crate::error::{Error, Result};
use crate::exactring::{int, Monomial, Profile, Rational, SparsePoly, TruncatedSeries, Var};
use crate::partitions::enumerate_partitions;
use crate::pjk::{p_jk, XVariables};

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn require_x(x: &XVariables, cap_u: u32) -> Result<()> {
    if (x.len() as u32) < cap_u {
        return Err(Error::MissingVariable(format!("X{cap_u}")));
    }
    Ok(())
}

/// `z + s Σ_{k=1}^{cap} u^k (i)_k/k! X_k`, with `s = ±1`.
pub(crate) fn inner_factor(
    i: u32,
    x: &XVariables,
    u: Var,
    cap_u: u32,
    x_sign: i64,
) -> Result<TruncatedSeries> {
    let mut poly = SparsePoly::var(z_var());
    for k in 1..=cap_u {
        // (i)_k / k! = binom(i+k-1, k)
        let c = binom_int(i as i64 + k as i64 - 1, k as i64) * int(x_sign);
        poly = poly
            + SparsePoly::var(x.get(k as usize)?)
                .mul_monomial(&Monomial::var_pow(u, k))
                .scale(&c);
    }
    Ok(TruncatedSeries::new(poly, Profile::new().with(u, cap_u)))
}

/// `Σ_{|μ|=n} weight(μ) ∏_i (inner factor for i)^{m_i(μ)}`.
pub(crate) fn partition_sum<F>(
    n: u32,
    x: &XVariables,
    u: Var,
    cap_u: u32,
    x_sign: i64,
    weight: F,
) -> Result<TruncatedSeries>
where
    F: Fn(&crate::partitions::Partition) -> Rational,
{
    let profile = Profile::new().with(u, cap_u);
    let mut out = TruncatedSeries::zero(profile.clone());
    for mu in enumerate_partitions(n) {
        let w = weight(&mu);
        if w.is_zero() {
            continue;
        }
        let mut prod = TruncatedSeries::one(profile.clone());
        for (i, m) in mu.multiplicities() {
            prod = prod.mul(&inner_factor(i, x, u, cap_u, x_sign)?.pow(m as u32))?;
        }
        out = out.add(&prod.scale(&w))?;
    }
    Ok(out)
}

/// `binom(z - j, m)` as a polynomial in `z`.
pub(crate) fn binom_shifted(j: u32, m: u32) -> SparsePoly {
    let z = z_var();
    binom_poly(z, m).substitute(z, &(SparsePoly::var(z) - SparsePoly::int(j as i64)))
}

/// `Σ_{|μ|=n} (-1)^{r-l(μ)} ⟨μ,r⟩/z_μ ∏_i (z + Σ_k u^k (i)_k/k! X_k)^{m_i(μ)}`.
pub fn partition_side(
    n: u32,
    r: u32,
    x: &XVariables,
    u: Var,
    cap_u: u32,
) -> Result<TruncatedSeries> {
    require_x(x, cap_u)?;
    partition_sum(n, x, u, cap_u, 1, |mu| {
        let g = gen_binom(mu, r);
        sign(r as i64 - mu.len() as i64) * Rational::new(g.into(), mu.z().into())
    })
}

/// `Σ_j u^j binom(n+j-1, n-r) Σ_{k≤min(r,j)} binom(z-j, r-k) P_jk(X)`.
pub fn pjk_side(n: u32, r: u32, x: &XVariables, u: Var, cap_u: u32) -> Result<TruncatedSeries> {
    require_x(x, cap_u)?;
    let mut poly = SparsePoly::zero();
    for j in 0..=cap_u {
        let outer = binom_int(n as i64 + j as i64 - 1, n as i64 - r as i64);
        if outer.is_zero() {
            continue;
        }
        let mut inner = SparsePoly::zero();
        for k in 0..=r.min(j) {
            inner = inner + &binom_shifted(j, r - k) * &p_jk(j, k, x)?;
        }
        poly = poly + inner.scale(&outer).mul_monomial(&Monomial::var_pow(u, j));
    }
    Ok(TruncatedSeries::new(poly, Profile::new().with(u, cap_u)))
}

/// `Σ_{|μ|=n} (-1)^{n-l(μ)}/z_μ ∏_i (...)^{m_i(μ)}`.
pub fn diagonal_partition_side(
    n: u32,
    x: &XVariables,
    u: Var,
    cap_u: u32,
) -> Result<TruncatedSeries> {
    require_x(x, cap_u)?;
    partition_sum(n, x, u, cap_u, 1, |mu| {
        sign(n as i64 - mu.len() as i64) * Rational::new(1.into(), mu.z().into())
    })
}

/// `Σ_j u^j Σ_{k≤min(n,j)} binom(z-j, n-k) P_jk(X)`.
pub fn diagonal_pjk_side(n: u32, x: &XVariables, u: Var, cap_u: u32) -> Result<TruncatedSeries> {
    require_x(x, cap_u)?;
    let mut poly = SparsePoly::zero();
    for j in 0..=cap_u {
        for k in 0..=n.min(j) {
            let term = &binom_shifted(j, n - k) * &p_jk(j, k, x)?;
            poly = poly + term.mul_monomial(&Monomial::var_pow(u, j));
        }
    }
    Ok(TruncatedSeries::new(poly, Profile::new().with(u, cap_u)))
}

/// Every `1 ≤ r ≤ n ≤ n_max`. The `(n, n)` report also covers `r = n + 1`,
/// where both sides must vanish.
pub fn verify_main_identity(n_max: u32, cap_u: u32) -> Result<Vec<VerificationReport>> {
    let cases: Vec<(u32, u32)> = (1..=n_max)
        .flat_map(|n| (1..=n).map(move |r| (n, r)))
        .collect();
    cases
        .into_par_iter()
        .map(|(n, r)| {
            let x = XVariables::new(cap_u as usize);
            let u = u_var();
            let mut case = Case::new("main_identity")
                .param("n", n)
                .param("r", r)
                .param("u_cap", cap_u);
            let lhs = partition_side(n, r, &x, u, cap_u)?;
            let rhs = pjk_side(n, r, &x, u, cap_u)?;
            if r < n {
                return case.compare(&lhs, &rhs);
            }
            case = case.param("r_plus_one_vanishes", true);
            let lhs1 = partition_side(n, n + 1, &x, u, cap_u)?;
            let rhs1 = pjk_side(n, n + 1, &x, u, cap_u)?;
            let zero = TruncatedSeries::zero(Profile::new().with(u, cap_u));
            case.compare_all(&[(&lhs, &rhs), (&lhs1, &zero), (&rhs1, &zero)])
        })
        .collect()
}

/// Per `n ≤ n_max`: the identity itself, agreement with the `r = n` case of
/// the general identity, and the `X = 0` degeneration (both sides reduce to
/// `binom(z, n)`, and the general identity to `binom(n-1, r-1) binom(z, r)`).
pub fn verify_diagonal_case(n_max: u32, cap_u: u32) -> Result<Vec<VerificationReport>> {
    let reports: Result<Vec<Vec<VerificationReport>>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let x = XVariables::new(cap_u as usize);
            let u = u_var();
            let profile = Profile::new().with(u, cap_u);
            let lhs = diagonal_partition_side(n, &x, u, cap_u)?;
            let rhs = diagonal_pjk_side(n, &x, u, cap_u)?;
            let main = Case::new("diagonal_case")
                .param("n", n)
                .param("u_cap", cap_u)
                .compare(&lhs, &rhs)?;

            let lhs1 = partition_side(n, n, &x, u, cap_u)?;
            let rhs1 = pjk_side(n, n, &x, u, cap_u)?;
            let agree = Case::new("diagonal_matches_main")
                .param("n", n)
                .param("u_cap", cap_u)
                .compare_all(&[(&lhs, &lhs1), (&rhs, &rhs1)])?;

            let zeros = x.assign(&vec![int(0); x.len()]);
            let at_zero = |s: &TruncatedSeries| {
                TruncatedSeries::new(s.poly().evaluate(&zeros), profile.clone())
            };
            let closed2 = TruncatedSeries::new(binom_poly(z_var(), n), profile.clone());
            let mut owned = vec![(at_zero(&lhs), closed2.clone()), (at_zero(&rhs), closed2)];
            for r in 1..=n {
                let closed = TruncatedSeries::new(
                    binom_poly(z_var(), r).scale(&binom_int(n as i64 - 1, r as i64 - 1)),
                    profile.clone(),
                );
                owned.push((
                    at_zero(&partition_side(n, r, &x, u, cap_u)?),
                    closed.clone(),
                ));
                owned.push((at_zero(&pjk_side(n, r, &x, u, cap_u)?), closed));
            }
            let pairs: Vec<(&TruncatedSeries, &TruncatedSeries)> =
                owned.iter().map(|(a, b)| (a, b)).collect();
            let degenerate = Case::new("x_zero_degeneration")
                .param("n", n)
                .param("u_cap", cap_u)
                .compare_all(&pairs)?;
            Ok(vec![main, agree, degenerate])
        })
        .collect();
    Ok(reports?.into_iter().flatten().collect())
}

/// `Σ_{i≥j} binom(i-1, j-1) t^{i-j} = 1/(1-t)^j`, truncated at `t^{cap_t}`.
pub fn binomial_series_identity(j: u32, cap_t: u32) -> Result<bool> {
    if j == 0 {
        return Err(Error::Precondition(
            "binomial series identity needs j ≥ 1".into(),
        ));
    }
    let t = Var::new("t");
    let profile = Profile::new().with(t, cap_t);
    let mut lhs = SparsePoly::zero();
    for i in j..=j + cap_t {
        lhs = lhs
            + SparsePoly::term(
                binom_int(i as i64 - 1, j as i64 - 1),
                Monomial::var_pow(t, i - j),
            );
    }
    let lhs = TruncatedSeries::new(lhs, profile.clone());
    let base = TruncatedSeries::new(SparsePoly::one() - SparsePoly::var(t), profile);
    let rhs = base.pow(j).inverse()?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::rat;

    fn xv(i: usize) -> SparsePoly {
        SparsePoly::var(Var::indexed("X", i))
    }

    #[test]
    fn single_part_case() {
        let x = XVariables::new(3);
        let u = u_var();
        let expected = SparsePoly::var(z_var())
            + &SparsePoly::var(u) * &xv(1)
            + &SparsePoly::var(u).pow(2) * &xv(2)
            + &SparsePoly::var(u).pow(3) * &xv(3);
        assert_eq!(partition_side(1, 1, &x, u, 3).unwrap().poly(), &expected);
        assert_eq!(pjk_side(1, 1, &x, u, 3).unwrap().poly(), &expected);
    }

    #[test]
    fn trivial_for_r_above_n() {
        let x = XVariables::new(3);
        assert!(partition_side(2, 3, &x, u_var(), 3).unwrap().is_zero());
        assert!(pjk_side(2, 3, &x, u_var(), 3).unwrap().is_zero());
    }

    #[test]
    fn constant_coefficient_for_n2_r2() {
        let x = XVariables::new(3);
        let lhs = partition_side(2, 2, &x, u_var(), 3).unwrap();
        let z = SparsePoly::var(z_var());
        let expected = (z.pow(2) - z).scale(&rat(1, 2));
        assert_eq!(lhs.coefficient_of(u_var(), 0), expected);
    }

    #[test]
    fn missing_x_variables() {
        let x = XVariables::new(2);
        assert!(matches!(
            partition_side(1, 1, &x, u_var(), 3),
            Err(Error::MissingVariable(_))
        ));
    }

    #[test]
    fn rhs_reduces_to_diagonal_case() {
        let x = XVariables::new(4);
        for n in 1..=4 {
            assert_eq!(
                pjk_side(n, n, &x, u_var(), 4).unwrap(),
                diagonal_pjk_side(n, &x, u_var(), 4).unwrap()
            );
        }
    }

    #[test]
    fn rhs_u_coefficients_have_bounded_z_degree() {
        let x = XVariables::new(5);
        for n in 1..=4 {
            for r in 1..=n {
                let rhs = pjk_side(n, r, &x, u_var(), 5).unwrap();
                for j in 0..=5 {
                    assert!(rhs.coefficient_of(u_var(), j).degree_in(z_var()) <= r);
                }
            }
        }
    }

    #[test]
    fn small_sweeps_pass() {
        let reports = verify_main_identity(3, 3).unwrap();
        assert_eq!(reports.len(), 6);
        assert!(reports.iter().all(|r| r.passed()));
        let reports = verify_diagonal_case(3, 3).unwrap();
        assert!(reports.iter().all(|r| r.passed()), "{reports:?}");
    }

    #[test]
    fn binomial_series() {
        assert!(binomial_series_identity(1, 5).unwrap());
        assert!(binomial_series_identity(2, 4).unwrap());
        assert!(binomial_series_identity(5, 6).unwrap());
        let t = Var::new("t");
        let inv = TruncatedSeries::new(
            SparsePoly::one() - SparsePoly::var(t),
            Profile::new().with(t, 4),
        )
        .pow(2)
        .inverse()
        .unwrap();
        let expected: Vec<Rational> = (0..=4).map(|k| int(k + 1)).collect();
        for (k, c) in expected.iter().enumerate() {
            assert_eq!(&inv.coeff(&Monomial::var_pow(t, k as u32)), c);
        }
    }
}
