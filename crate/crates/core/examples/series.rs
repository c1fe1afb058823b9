//! Truncated series arithmetic: inverses, log/exp and symbolic powers.

use lamring::exactring::{Profile, SparsePoly, TruncatedSeries, Var};

fn main() -> lamring::Result<()> {
    let (t, y, z) = (Var::new("t"), Var::new("y"), Var::new("z"));

    let one_minus_t = TruncatedSeries::new(
        SparsePoly::one() - SparsePoly::var(t),
        Profile::new().with(t, 5),
    );
    println!("1/(1-t)^2      = {}", one_minus_t.pow(2).inverse()?);
    println!("log(1-t)       = {}", one_minus_t.log()?);
    println!("exp(log(1-t))  = {}", one_minus_t.log()?.exp()?);

    // (1 - y)^(z - 2) has coefficients polynomial in z.
    let base = TruncatedSeries::new(
        SparsePoly::one() - SparsePoly::var(y),
        Profile::new().with(y, 3),
    );
    let exponent = SparsePoly::var(z) - SparsePoly::int(2);
    println!("(1-y)^(z-2)    = {}", base.pow_symbolic(&exponent)?);
    Ok(())
}
