//! The content specialization: (y - x)_λ / (y)_λ expanded in x and w = 1/y.
//!
//! Usage: cargo run --example content_expansion -- [partition] [alpha]

use lamring::application::{
    chu_vandermonde_demo, content_quotient, contents, d_k, f_jk, verify_content_expansion,
    verify_vanishing, AlphaParam,
};
use lamring::partitions::Partition;

fn main() -> lamring::Result<()> {
    let mut args = std::env::args().skip(1);
    let lambda: Partition = args.next().as_deref().unwrap_or("2,1").parse()?;
    let alpha: AlphaParam = args.next().as_deref().unwrap_or("2").parse()?;
    let n = lambda.weight();

    let cs: Vec<String> = contents(&lambda, &alpha)
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!("λ = ({lambda}), α = {alpha}, contents {}", cs.join(" "));
    for k in 0..=3 {
        println!("d_{k} = {}", d_k(&lambda, &alpha, k));
    }
    for j in 0..=3 {
        let row: Vec<String> = (0..=j)
            .map(|k| f_jk(&lambda, &alpha, j, k).to_string())
            .collect();
        println!("F_{j}k = {}", row.join(", "));
    }
    println!(
        "(y-x)_λ/(y)_λ = {}",
        content_quotient(&lambda, &alpha, 4, n + 2)?
    );

    for report in [
        verify_content_expansion(&lambda, &alpha, 6, n + 2)?,
        verify_vanishing(&lambda, &alpha, n + 1..=n + 3, 0..=4)?,
        chu_vandermonde_demo(3, 6)?,
    ] {
        println!("{}", lamring::cli::render_text(&report));
    }
    Ok(())
}
