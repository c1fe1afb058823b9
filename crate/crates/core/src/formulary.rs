//! The supporting formulas behind the main identities, packaged as
//! [`VerificationReport`]s: generalized binomials against brute force, the
//! two constructions of `P_jk`, the λ-ring rules on seeded random elements,
//! and the symmetric-function expansions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinat::{
    factorial, falling_factorial, gen_binom, gen_binom_brute, gen_binom_row, rising_factorial,
};
use crate::error::Result;
use crate::exactring::{int, rat, Monomial, Profile, Rational, SparsePoly, TruncatedSeries, Var};
use crate::identities::{binomial_series_identity, Case, VerificationReport};
use crate::lambdaring::{reexpress_q, LambdaContext, LambdaElement};
use crate::partitions::enumerate_partitions;
use crate::pjk::{p_jk, p_jk_negated_on_alphabet, p_jk_via_monomials, XVariables};
use crate::symfun::{check_cauchy, check_kernel_expansions, subset_product_expand, Alphabet};

fn exact(p: SparsePoly) -> TruncatedSeries {
    TruncatedSeries::new(p, Profile::new())
}

fn compare_polys(case: Case, pairs: Vec<(SparsePoly, SparsePoly)>) -> Result<VerificationReport> {
    let owned: Vec<_> = pairs
        .into_iter()
        .map(|(a, b)| (exact(a), exact(b)))
        .collect();
    let refs: Vec<_> = owned.iter().map(|(a, b)| (a, b)).collect();
    case.compare_all(&refs)
}

fn flags(case: Case, checks: Vec<(String, bool)>) -> VerificationReport {
    let values: Vec<_> = checks
        .into_iter()
        .map(|(label, ok)| {
            (
                label,
                if ok { "holds" } else { "fails" }.to_string(),
                "holds".to_string(),
            )
        })
        .collect();
    case.compare_values(&values)
}

/// Row computation against subset counting for every `|λ| ≤ max_weight`,
/// plus `Σ_r ⟨λ, r⟩ = ∏ (2^{λ_i} - 1)`.
pub fn verify_generalized_binomials(max_weight: u32) -> Result<VerificationReport> {
    let case = Case::new("generalized_binomial").param("max_weight", max_weight);
    let mut values = Vec::new();
    for n in 0..=max_weight {
        for lambda in enumerate_partitions(n) {
            for r in 0..=n + 1 {
                let brute = gen_binom_brute(&lambda, r)?;
                values.push((
                    format!("({lambda}) r={r}"),
                    gen_binom(&lambda, r).to_string(),
                    brute.to_string(),
                ));
            }
            let total: num::BigUint = gen_binom_row(&lambda).into_iter().sum();
            let product: num::BigUint = lambda
                .parts()
                .iter()
                .map(|&p| (num::BigUint::from(1u32) << p) - 1u32)
                .product();
            values.push((
                format!("({lambda}) sum"),
                total.to_string(),
                product.to_string(),
            ));
        }
    }
    Ok(case.compare_values(&values))
}

/// The defining sum of `P_jk` taken to `X_i = -ψ^i(A)` against the
/// monomial-function construction, for `k ≤ j ≤ j_max` on `letters` letters;
/// and the closed forms of `P_j1`, `P_j2` for `j ≤ closed_max`.
pub fn verify_pjk(j_max: u32, letters: usize, closed_max: u32) -> Result<Vec<VerificationReport>> {
    let a = Alphabet::indexed("a", letters);
    let case = Case::new("pjk_two_routes")
        .param("j_max", j_max)
        .param("letters", letters);
    let mut routes = Vec::new();
    for j in 0..=j_max {
        for k in 0..=j {
            routes.push((
                p_jk_negated_on_alphabet(j, k, &a)?,
                p_jk_via_monomials(j, k, &a),
            ));
        }
    }
    let first = compare_polys(case, routes)?;

    let case = Case::new("pjk_closed_forms").param("j_max", closed_max);
    let x = XVariables::new(closed_max as usize);
    let xv = |i: u32| SparsePoly::var(x.vars()[i as usize - 1]);
    let mut closed = Vec::new();
    for j in 1..=closed_max {
        closed.push((p_jk(j, 1, &x)?, xv(j)));
        let mut two = xv(j).scale(&rat(j as i64 - 1, 2));
        for j1 in 1..j {
            two = two + (&xv(j1) * &xv(j - j1)).scale(&rat(1, 2));
        }
        closed.push((p_jk(j, 2, &x)?, two));
    }
    let second = compare_polys(case, closed)?;
    Ok(vec![first, second])
}

/// A pair `(P, Q)` of small random elements over rank-1 atoms `a, b, q'`.
/// Only `P` carries the binomial symbol, so `PQ` stays admissible.
pub fn random_pair(rng: &mut impl Rng, binomial: Var) -> (LambdaElement, LambdaElement) {
    let atoms = [Var::new("a"), Var::new("b"), Var::new("qp")];
    let element = |with_binomial: bool, rng: &mut dyn rand::RngCore| {
        let mut e = LambdaElement::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let u = Monomial::from_pairs(atoms.iter().map(|&v| (v, rng.gen_range(0..=2u32))));
            let mut c = SparsePoly::constant(rat(rng.gen_range(-3..=3), rng.gen_range(1..=2)));
            if with_binomial && rng.gen_bool(0.5) {
                c = c + SparsePoly::var(binomial).scale(&int(rng.gen_range(-2..=2)));
            }
            e.add_term(u, c);
        }
        e
    };
    let p = element(true, rng);
    let q = element(false, rng);
    (p, q)
}

/// The λ-ring formulary: the action on constants and rank-1 atoms, the sum
/// and product rules on `count` seeded random pairs for `i ≤ i_max`,
/// rank-1 products, the values on `q = q' - 1`, and `ψ^μ[q] = Σ ⟨μ, k⟩ q^k`.
pub fn verify_lambda_formulary(
    seed: u64,
    count: usize,
    i_max: u32,
    mu_max: u32,
) -> Result<Vec<VerificationReport>> {
    let z = Var::new("z");
    let ctx = LambdaContext::new(z);
    let (qp, q) = (Var::new("qp"), Var::new("q"));
    let zp = SparsePoly::var(z);
    let mut reports = Vec::new();

    let case = Case::new("lambda_constants_rank1").param("i_max", mu_max);
    let ze = LambdaElement::constant(zp.clone());
    let u = Var::new("u");
    let ue = LambdaElement::atom(u);
    let mut table = Vec::new();
    for i in 1..=mu_max {
        let fact = factorial(i).recip();
        table.push((ctx.psi(i, &ze).to_poly(), zp.clone()));
        table.push((
            ctx.sigma_coeff(i, &ze)?,
            rising_factorial(z, i).scale(&fact),
        ));
        table.push((
            ctx.lambda_coeff(i, &ze)?,
            falling_factorial(z, i).scale(&fact),
        ));
        table.push((ctx.psi(i, &ue).to_poly(), SparsePoly::var(u).pow(i)));
        table.push((ctx.sigma_coeff(i, &ue)?, SparsePoly::var(u).pow(i)));
        let rank1 = if i == 1 {
            SparsePoly::var(u)
        } else {
            SparsePoly::zero()
        };
        table.push((ctx.lambda_coeff(i, &ue)?, rank1));
    }
    reports.push(compare_polys(case, table)?);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<_> = (0..count).map(|_| random_pair(&mut rng, z)).collect();

    let rules = Case::new("lambda_sum_product_rules")
        .param("seed", seed)
        .param("count", count)
        .param("i_max", i_max);
    let per_pair: Vec<Vec<(String, bool)>> = pairs
        .par_iter()
        .enumerate()
        .map(|(n, (p, qe))| {
            let mut checks = Vec::new();
            for i in 0..=i_max {
                let r = ctx.sum_product_rules(p, qe, i)?;
                let lines = [
                    ("sum", &r.additive[..]),
                    ("series", &r.series[..]),
                    ("complete", &r.complete_product[..]),
                    ("elementary", &r.elementary_product[..]),
                ];
                for (name, oks) in lines {
                    for (l, &ok) in oks.iter().enumerate() {
                        checks.push((format!("pair {n} i={i} {name}[{l}]"), ok));
                    }
                }
            }
            Ok(checks)
        })
        .collect::<Result<_>>()?;
    reports.push(flags(rules, per_pair.into_iter().flatten().collect()));

    // Products of rank-1 monomials are rank-1: λ_t[uv] = 1 + t·uv.
    let rank1 = Case::new("lambda_rank1_products").param("seed", seed);
    let t = Var::new("t");
    let profile = Profile::new().with(t, i_max);
    let mut products = Vec::new();
    for (p, qe) in &pairs {
        for (m1, _) in p.terms() {
            for (m2, _) in qe.terms() {
                let uv = m1.mul(m2);
                let lhs = ctx.lambda_t(&LambdaElement::atom_monomial(uv.clone()), t, &profile)?;
                let tuv = SparsePoly::var(t).mul_monomial(&uv);
                products.push((
                    lhs.into_poly(),
                    (SparsePoly::one() + tuv).filter(|m| profile.admits(m)),
                ));
            }
        }
    }
    reports.push(compare_polys(rank1, products)?);

    let case = Case::new("lambda_q_values").param("mu_max", mu_max);
    let qe = LambdaElement::shifted_atom(qp);
    let qpoly = SparsePoly::var(q);
    let mut q_values = Vec::new();
    for n in 0..=mu_max {
        for mu in enumerate_partitions(n) {
            let mut lam = SparsePoly::one();
            let mut sig = SparsePoly::one();
            for &part in mu.parts() {
                lam = &lam * &ctx.lambda_coeff(part, &qe)?;
                sig = &sig * &ctx.sigma_coeff(part, &qe)?;
            }
            let l = mu.len() as u32;
            let sign = if (n - l).is_multiple_of(2) {
                int(1)
            } else {
                int(-1)
            };
            q_values.push((reexpress_q(&lam, qp, q), qpoly.pow(l).scale(&sign)));
            let expected = &(SparsePoly::one() + qpoly.clone()).pow(n - l) * &qpoly.pow(l);
            q_values.push((reexpress_q(&sig, qp, q), expected));
        }
    }
    reports.push(compare_polys(case, q_values)?);

    let case = Case::new("lambda_adams_of_q").param("mu_max", mu_max);
    let mut adams = Vec::new();
    for n in 0..=mu_max {
        for mu in enumerate_partitions(n) {
            let expected = (0..=n).fold(SparsePoly::zero(), |acc, k| {
                acc + SparsePoly::term(
                    Rational::from_integer(gen_binom(&mu, k).into()),
                    Monomial::var_pow(q, k),
                )
            });
            adams.push((ctx.psi_mu_of_q(&mu, qp, q), expected));
        }
    }
    reports.push(compare_polys(case, adams)?);
    Ok(reports)
}

/// Cauchy formulas for `i ≤ cauchy_max` on 3 to 5 letters, the six kernel
/// expansion lines for `i ≤ kernel_max`, the binomial-series identity for
/// `j ≤ binomial_max`, and the subset-product identity on up to
/// `subset_letters` letters.
pub fn verify_symfun_formulary(
    cauchy_max: u32,
    kernel_max: u32,
    binomial_max: u32,
    subset_letters: usize,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();

    let case = Case::new("cauchy").param("i_max", cauchy_max);
    let mut checks = Vec::new();
    for p in 3..=5 {
        let a = Alphabet::indexed("a", p);
        for i in 0..=cauchy_max {
            checks.push((format!("i={i} letters={p}"), check_cauchy(i, &a)));
        }
    }
    reports.push(flags(case, checks));

    let case = Case::new("kernel_expansions").param("i_max", kernel_max);

    let a = Alphabet::indexed("a", 2);
    let b = Alphabet::indexed("b", 3);
    let checks = (0..=kernel_max)
        .map(|i| (format!("i={i}"), check_kernel_expansions(i, &a, &b)))
        .collect();
    reports.push(flags(case, checks));

    let case = Case::new("binomial_series").param("j_max", binomial_max);
    let mut checks = Vec::new();
    for j in 1..=binomial_max {
        checks.push((
            format!("j={j}"),
            binomial_series_identity(j, binomial_max + 1)?,
        ));
    }
    reports.push(flags(case, checks));

    let case = Case::new("subset_product").param("max_letters", subset_letters);
    let (v, y) = (Var::new("v"), Var::new("y"));
    let mut pairs = Vec::new();
    for p in 1..=subset_letters {
        let a = Alphabet::indexed("a", p);
        for n in 0..=p + 1 {
            let r = subset_product_expand(&a, v, y, n, 6);
            pairs.push((r.lhs, r.rhs));
        }
    }
    let refs: Vec<_> = pairs.iter().map(|(a, b)| (a, b)).collect();
    reports.push(case.compare_all(&refs)?);
    Ok(reports)
}
