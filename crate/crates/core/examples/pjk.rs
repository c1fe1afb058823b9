//! The polynomials P_jk(X), and their value at X_i = -p_i(A) computed
//! through monomial symmetric functions.
//!
//! Usage: cargo run --example pjk -- [j_max]

use lamring::pjk::{p_jk, p_jk_negated_on_alphabet, p_jk_via_monomials, XVariables};
use lamring::symfun::Alphabet;

fn main() -> lamring::Result<()> {
    let j_max: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let x = XVariables::new(j_max as usize);
    for j in 0..=j_max {
        for k in 0..=j {
            println!("P_{j}{k} = {}", p_jk(j, k, &x)?);
        }
    }

    let a = Alphabet::indexed("a", 3);
    let via_monomials = p_jk_via_monomials(3, 2, &a);
    println!("P_32(-p(A)) on 3 letters = {via_monomials}");
    println!(
        "agrees with the defining sum: {}",
        via_monomials == p_jk_negated_on_alphabet(3, 2, &a)?
    );
    Ok(())
}
