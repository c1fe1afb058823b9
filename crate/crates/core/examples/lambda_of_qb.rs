//! Expands λ_t[qB] through the action engine and compares it with the
//! sum over ν and with the closed product form.
//!
//! Usage: cargo run --example lambda_of_qb -- [letters] [t_cap q_cap a_cap]

use lamring::identities::{lambda_qb_engine, lambda_qb_nu_range, verify_lambda_qb, QbCaps};

fn main() -> lamring::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let p = args.first().copied().unwrap_or(2) as usize;
    let caps = match args.get(1..4) {
        Some(c) => QbCaps::new(c[0], c[1], c[2]),
        None => QbCaps::new(3, 3, 3),
    };

    let nus: Vec<String> = lambda_qb_nu_range(p, caps)
        .iter()
        .map(|nu| format!("({nu})"))
        .collect();
    println!("contributing ν: {}", nus.join(" "));

    if p <= 1 {
        println!("λ_t[qB] = {}", lambda_qb_engine(p, caps)?);
    }
    let report = verify_lambda_qb(p, caps)?;
    println!(
        "{} letters, caps {:?}: {:?} in {} ms",
        p, caps, report.status, report.millis
    );
    Ok(())
}
