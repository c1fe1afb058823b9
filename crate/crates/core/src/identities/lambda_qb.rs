use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::report::{Case, VerificationReport};
use super::z_var;
use crate::error::Result;
use crate::exactring::{Profile, SparsePoly, TruncatedSeries, Var};
use crate::lambdaring::{reexpress_q, LambdaContext, LambdaElement};
use crate::partitions::{partitions_bounded, Partition};
use crate::symfun::{monomial, Alphabet};

/// Truncation caps for `t`, `q` and every alphabet letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QbCaps {
    pub t: u32,
    pub q: u32,
    pub a: u32,
}

impl QbCaps {
    pub fn new(t: u32, q: u32, a: u32) -> Self {
        QbCaps { t, q, a }
    }
}

fn t_var() -> Var {
    Var::new("t")
}

fn q_var() -> Var {
    Var::new("q")
}

fn letters(p: usize) -> Vec<Var> {
    (1..=p).map(|i| Var::indexed("a", i)).collect()
}

fn full_profile(p: usize, caps: QbCaps) -> Profile {
    letters(p).into_iter().fold(
        Profile::new().with(t_var(), caps.t).with(q_var(), caps.q),
        |acc, a| acc.with(a, caps.a),
    )
}

fn series(p: SparsePoly, profile: &Profile) -> TruncatedSeries {
    TruncatedSeries::new(p, profile.clone())
}

/// `λ_t[qB]` with `B = z + Σ_i (1 - a'_i)`, computed by the action engine on
/// the rank-1 atoms `q' = 1 + q` and `a'_i = 1/(1 - a_i)`, then expanded.
pub fn lambda_qb_engine(p: usize, caps: QbCaps) -> Result<TruncatedSeries> {
    let z = z_var();
    let ctx = LambdaContext::new(z);
    let qprime = Var::new("qp");
    let mut b = LambdaElement::constant(SparsePoly::var(z));
    for i in 1..=p {
        b = &(&b + &LambdaElement::one()) - &LambdaElement::atom(Var::indexed("ap", i));
    }
    let qb = &LambdaElement::shifted_atom(qprime) * &b;
    let mut out = ctx.lambda_t(&qb, t_var(), &Profile::new().with(t_var(), caps.t))?;

    let q = q_var();
    let shifted = reexpress_q(&SparsePoly::var(qprime), qprime, q);
    out = out.substitute(qprime, &series(shifted, &Profile::new().with(q, caps.q)))?;
    for (i, a) in letters(p).into_iter().enumerate() {
        let profile = Profile::new().with(a, caps.a);
        let geometric =
            (0..=caps.a).fold(SparsePoly::zero(), |acc, k| acc + SparsePoly::var(a).pow(k));
        out = out.substitute(Var::indexed("ap", i + 1), &series(geometric, &profile))?;
    }
    Ok(out.retruncate(&full_profile(p, caps)))
}

/// `y = -qt/(1+t)` and `1/(1+t)`, under the full profile.
fn y_and_inv(profile: &Profile) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let t = SparsePoly::var(t_var());
    let inv = series(SparsePoly::one() + t.clone(), profile).inverse()?;
    let y = inv.mul(&series(-(&t * &SparsePoly::var(q_var())), profile))?;
    Ok((y, inv))
}

/// `(1-y)^z ∏_a (1-y)(1+t-a)/(1+t(1+q)-a)`.
pub fn lambda_qb_closed_form(p: usize, caps: QbCaps) -> Result<TruncatedSeries> {
    let profile = full_profile(p, caps);
    let (y, _) = y_and_inv(&profile)?;
    let one_minus_y = TruncatedSeries::one(profile.clone()).sub(&y)?;
    let mut out = one_minus_y.pow_symbolic(&SparsePoly::var(z_var()))?;
    let t = SparsePoly::var(t_var());
    for a in letters(p) {
        let a = SparsePoly::var(a);
        let num = series(SparsePoly::one() + t.clone() - a.clone(), &profile);
        let den = series(
            SparsePoly::one() + &t * &(SparsePoly::one() + SparsePoly::var(q_var())) - a,
            &profile,
        );
        out = out.mul(&one_minus_y)?.mul(&num)?.mul(&den.inverse()?)?;
    }
    Ok(out)
}

/// The partitions `ν` that can contribute: parts at most the letter cap,
/// length at most `min(p, cap_q)`.
pub fn lambda_qb_nu_range(p: usize, caps: QbCaps) -> Vec<Partition> {
    let max_len = p.min(caps.q as usize);
    let mut out = Vec::new();
    for w in 0..=caps.a * p as u32 {
        out.extend(partitions_bounded(w, caps.a, max_len));
    }
    out
}

/// `Σ_ν m_ν(A) y^{l(ν)} (1+t)^{-|ν|} (1-y)^{z-|ν|}`.
pub fn lambda_qb_expansion(p: usize, caps: QbCaps) -> Result<TruncatedSeries> {
    let profile = full_profile(p, caps);
    let alphabet = Alphabet::formal(&letters(p));
    let (y, inv) = y_and_inv(&profile)?;
    let one_minus_y = TruncatedSeries::one(profile.clone()).sub(&y)?;
    let z = SparsePoly::var(z_var());
    let mut by_weight: BTreeMap<u32, TruncatedSeries> = BTreeMap::new();
    let mut out = TruncatedSeries::zero(profile.clone());
    for nu in lambda_qb_nu_range(p, caps) {
        let w = nu.weight();
        let factor = match by_weight.entry(w) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => {
                let exponent = z.clone() - SparsePoly::int(w as i64);
                e.insert(one_minus_y.pow_symbolic(&exponent)?.mul(&inv.pow(w))?)
            }
        };
        let m = series(monomial(&alphabet, &nu), &profile);
        let term = m.mul(&y.pow(nu.len() as u32))?.mul(factor)?;
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Engine result against the expansion and the closed product form.
pub fn verify_lambda_qb(p: usize, caps: QbCaps) -> Result<VerificationReport> {
    let case = Case::new("lambda_qb")
        .param("letters", p)
        .param("t_cap", caps.t)
        .param("q_cap", caps.q)
        .param("a_cap", caps.a);
    let lhs = lambda_qb_engine(p, caps)?;
    let rhs = lambda_qb_expansion(p, caps)?;
    let closed = lambda_qb_closed_form(p, caps)?;
    case.compare_all(&[(&lhs, &rhs), (&lhs, &closed)])
}

/// `(1-y)^z` alone, for callers that want the empty-alphabet value.
pub fn one_minus_y_pow_z(caps: QbCaps) -> Result<TruncatedSeries> {
    let profile = full_profile(0, caps);
    let (y, _) = y_and_inv(&profile)?;
    TruncatedSeries::one(profile)
        .sub(&y)?
        .pow_symbolic(&SparsePoly::var(z_var()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_alphabet() {
        let caps = QbCaps::new(3, 3, 3);
        let expected = one_minus_y_pow_z(caps).unwrap();
        assert_eq!(lambda_qb_engine(0, caps).unwrap(), expected);
        assert_eq!(lambda_qb_expansion(0, caps).unwrap(), expected);
    }

    #[test]
    fn one_letter_at_a_zero() {
        let caps = QbCaps::new(2, 2, 2);
        let lhs = lambda_qb_engine(1, caps).unwrap();
        let empty = lambda_qb_engine(0, caps).unwrap();
        assert_eq!(lhs.coefficient_of(Var::new("a1"), 0), *empty.poly());
    }

    #[test]
    fn nu_range_two_letters() {
        let got: Vec<String> = lambda_qb_nu_range(2, QbCaps::new(2, 2, 2))
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(got, ["-", "1", "2", "1,1", "2,1", "2,2"]);
    }

    #[test]
    fn small_cases_pass() {
        for p in 0..=2 {
            let r = verify_lambda_qb(p, QbCaps::new(2, 2, 2)).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
