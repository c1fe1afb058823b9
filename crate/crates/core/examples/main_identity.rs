//! Both sides of the main identity for one (n, r), then a small sweep.
//!
//! Usage: cargo run --example main_identity -- [n] [r] [u_cap]

use lamring::identities::{partition_side, pjk_side, u_var, verify_main_identity};
use lamring::pjk::XVariables;

fn main() -> lamring::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, r, cap) = (
        args.first().copied().unwrap_or(3),
        args.get(1).copied().unwrap_or(2),
        args.get(2).copied().unwrap_or(2),
    );
    let x = XVariables::new(cap as usize);
    let lhs = partition_side(n, r, &x, u_var(), cap)?;
    let rhs = pjk_side(n, r, &x, u_var(), cap)?;
    println!("n = {n}, r = {r}, truncated at u^{cap}");
    println!("partition side: {lhs}");
    println!("P_jk side:      {rhs}");
    println!("equal: {}", lhs == rhs);

    for report in verify_main_identity(4, 3)? {
        println!("{}", lamring::cli::render_text(&report));
    }
    Ok(())
}
