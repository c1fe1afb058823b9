//! Counts r-subsets of a Ferrers diagram that meet every row, two ways.
//!
//! Usage: cargo run --example generalized_binomial -- [partition]

use lamring::combinat::{gen_binom_brute, gen_binom_row};
use lamring::partitions::Partition;

fn main() -> lamring::Result<()> {
    let lambda: Partition = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("3,2,1")
        .parse()?;
    println!("λ = ({lambda}), |λ| = {}", lambda.weight());
    let row = gen_binom_row(&lambda);
    for (r, count) in row.iter().enumerate() {
        let brute = gen_binom_brute(&lambda, r as u32)?;
        println!("⟨λ, {r}⟩ = {count}  (subset count {brute})");
    }
    let total: num::BigUint = row.iter().sum();
    println!("sum over r = {total}");
    Ok(())
}
