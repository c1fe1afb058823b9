use num::Zero;

use super::main_identity::{binom_shifted, partition_side, partition_sum, pjk_side};
use super::report::{Case, VerificationReport};
use super::u_var;
use crate::combinat::{binom_int, gen_binom};
use crate::error::Result;
use crate::exactring::{int, Monomial, Profile, Rational, SparsePoly, TruncatedSeries, Var};
use crate::pjk::{p_jk, XVariables};

/// Whether the `X_k` stay symbolic or are set to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XMode {
    Symbolic,
    Zero,
}

fn flip_x(p: &SparsePoly, x: &XVariables) -> SparsePoly {
    x.vars()
        .iter()
        .fold(p.clone(), |acc, &v| acc.substitute(v, &-SparsePoly::var(v)))
}

fn specialize(p: &SparsePoly, x: &XVariables, mode: XMode) -> SparsePoly {
    match mode {
        XMode::Symbolic => p.clone(),
        XMode::Zero => p.evaluate(&x.assign(&vec![int(0); x.len()])),
    }
}

fn signed_tq(n: u32, r: u32, t: Var, q: Var) -> SparsePoly {
    let sign = if (n + r).is_multiple_of(2) { 1 } else { -1 };
    SparsePoly::term(
        int(sign),
        Monomial::var_pow(t, n).mul(&Monomial::var_pow(q, r)),
    )
}

/// Partial sums over `1 ≤ r ≤ n ≤ n_max` of the two sides of the
/// generating-function form, built directly with `X_k ↦ -X_k` inside.
pub fn generating_function_sides(
    n_max: u32,
    caps_tq: (u32, u32),
    cap_u: u32,
    mode: XMode,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let (t, q, u) = (Var::new("t"), Var::new("q"), u_var());
    let x = XVariables::new(cap_u as usize);
    let profile = Profile::new()
        .with(t, caps_tq.0)
        .with(q, caps_tq.1)
        .with(u, cap_u);
    let mut lhs = TruncatedSeries::zero(profile.clone());
    let mut rhs = TruncatedSeries::zero(profile.clone());
    for n in 1..=n_max {
        for r in 1..=n {
            let tq = signed_tq(n, r, t, q);
            let left = partition_sum(n, &x, u, cap_u, -1, |mu| {
                let s = if (r as usize + mu.len()).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                int(s) * Rational::new(gen_binom(mu, r).into(), mu.z().into())
            })?;
            let left = specialize(left.poly(), &x, mode);
            lhs = lhs.add(&TruncatedSeries::new(&left * &tq, profile.clone()))?;

            let mut right = SparsePoly::zero();
            for j in 0..=cap_u {
                let outer = binom_int(n as i64 + j as i64 - 1, n as i64 - r as i64);
                if outer.is_zero() {
                    continue;
                }
                for k in 0..=r.min(j) {
                    let p = specialize(&flip_x(&p_jk(j, k, &x)?, &x), &x, mode);
                    let term = &binom_shifted(j, r - k) * &p;
                    right = right + term.scale(&outer).mul_monomial(&Monomial::var_pow(u, j));
                }
            }
            rhs = rhs.add(&TruncatedSeries::new(&right * &tq, profile.clone()))?;
        }
    }
    Ok((lhs, rhs))
}

/// Checks that the directly built partial sums agree with each other and
/// with the per-`(n, r)` sides of the main identity after `X ↦ -X`,
/// weighting by `(-t)^n (-q)^r`. Only partial sums are compared: the full
/// generating function is equivalent to the individual `(n, r)` cases.
pub fn verify_generating_function(
    n_max: u32,
    caps_tq: (u32, u32),
    cap_u: u32,
    mode: XMode,
) -> Result<VerificationReport> {
    let case = Case::new("generating_function")
        .param("n_max", n_max)
        .param("t_cap", caps_tq.0)
        .param("q_cap", caps_tq.1)
        .param("u_cap", cap_u)
        .param("x_zero", mode == XMode::Zero);
    let (t, q, u) = (Var::new("t"), Var::new("q"), u_var());
    let x = XVariables::new(cap_u as usize);
    let profile = Profile::new()
        .with(t, caps_tq.0)
        .with(q, caps_tq.1)
        .with(u, cap_u);
    let (lhs, rhs) = generating_function_sides(n_max, caps_tq, cap_u, mode)?;
    let mut lhs1 = TruncatedSeries::zero(profile.clone());
    let mut rhs1 = TruncatedSeries::zero(profile.clone());
    for n in 1..=n_max {
        for r in 1..=n {
            let tq = signed_tq(n, r, t, q);
            let l = specialize(
                &flip_x(partition_side(n, r, &x, u, cap_u)?.poly(), &x),
                &x,
                mode,
            );
            let r_ = specialize(&flip_x(pjk_side(n, r, &x, u, cap_u)?.poly(), &x), &x, mode);
            lhs1 = lhs1.add(&TruncatedSeries::new(&l * &tq, profile.clone()))?;
            rhs1 = rhs1.add(&TruncatedSeries::new(&r_ * &tq, profile.clone()))?;
        }
    }
    case.compare_all(&[(&lhs, &rhs), (&lhs, &lhs1), (&rhs, &rhs1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_sums_agree() {
        assert!(verify_generating_function(1, (3, 3), 3, XMode::Symbolic)
            .unwrap()
            .passed());
        assert!(verify_generating_function(3, (3, 3), 3, XMode::Symbolic)
            .unwrap()
            .passed());
        assert!(verify_generating_function(3, (3, 3), 3, XMode::Zero)
            .unwrap()
            .passed());
    }

    #[test]
    fn single_term_shape() {
        // n = r = 1: (-t)(-q)(z - u X_1 - u^2 X_2) on both sides.
        let (lhs, rhs) = generating_function_sides(1, (2, 2), 2, XMode::Symbolic).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.poly().to_string(), "-X1*q*t*u - X2*q*t*u^2 + q*t*z");
    }
}
