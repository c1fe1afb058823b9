//! The λ-ring action on sums of rank-1 monomials with binomial-type
//! coefficients.

use lamring::exactring::{Profile, SparsePoly, Var};
use lamring::lambdaring::{reexpress_q, LambdaContext, LambdaElement};
use lamring::partitions::Partition;

fn main() -> lamring::Result<()> {
    let z = Var::new("z");
    let ctx = LambdaContext::new(z);
    let t = Var::new("t");
    let profile = Profile::new().with(t, 3);

    let ze = LambdaElement::constant(SparsePoly::var(z));
    println!("λ_t[z] = {}", ctx.lambda_t(&ze, t, &profile)?);
    println!("σ_t[z] = {}", ctx.sigma_t(&ze, t, &profile)?);

    // q is handled as q' - 1 with q' of rank 1.
    let (qp, q) = (Var::new("qp"), Var::new("q"));
    let qe = LambdaElement::shifted_atom(qp);
    for i in 1..=4 {
        let l = reexpress_q(&ctx.lambda_coeff(i, &qe)?, qp, q);
        let s = reexpress_q(&ctx.sigma_coeff(i, &qe)?, qp, q);
        println!("Λ^{i}[q] = {l},  S^{i}[q] = {s}");
    }
    let mu: Partition = "3,2".parse()?;
    println!("ψ^({mu})[q] = {}", ctx.psi_mu_of_q(&mu, qp, q));

    let p = &ze + &LambdaElement::atom(Var::new("a"));
    let r = ctx.sum_product_rules(&p, &qe, 3)?;
    println!("sum and product rules at degree 3 for P = z + a, Q = q: {r:?}");
    Ok(())
}
