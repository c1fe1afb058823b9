//! Enumerates partitions of n with their conjugates, lengths and z_λ.
//!
//! Usage: cargo run --example partitions -- [n]

use lamring::partitions::enumerate_partitions;

fn main() {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let all = enumerate_partitions(n);
    println!("{} partitions of {n}", all.len());
    println!("{:<12} {:<12} {:>3} {:>6}", "λ", "λ'", "l", "z_λ");
    for p in &all {
        println!(
            "{:<12} {:<12} {:>3} {:>6}",
            p.to_string(),
            p.conjugate().to_string(),
            p.len(),
            p.z()
        );
    }
}
