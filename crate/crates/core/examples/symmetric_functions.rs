//! Classical bases on a formal alphabet and their power-sum expansions.
//!
//! Usage: cargo run --example symmetric_functions -- [partition] [letters]

use num::Signed;

use lamring::partitions::Partition;
use lamring::symfun::{check_cauchy, mu_indexed, power_sum_expansion, Alphabet, Basis};

fn main() -> lamring::Result<()> {
    let mut args = std::env::args().skip(1);
    let mu: Partition = args.next().as_deref().unwrap_or("2,1").parse()?;
    let p: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let a = Alphabet::indexed("a", p);

    for basis in Basis::ALL {
        println!("{basis:?}_({mu}) on {p} letters:");
        println!("    {}", mu_indexed(basis, &a, &mu));
        let mut line = String::new();
        for (nu, c) in power_sum_expansion(basis, &mu).terms() {
            let sign = if c.is_negative() {
                " - "
            } else if line.is_empty() {
                ""
            } else {
                " + "
            };
            line.push_str(&format!("{sign}{}·p_({nu})", c.abs()));
        }
        println!("    = {line}");
    }
    for i in 0..=4 {
        println!("Cauchy formulas at degree {i}: {}", check_cauchy(i, &a));
    }
    Ok(())
}
