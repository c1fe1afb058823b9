//! Generalized binomial coefficients `⟨λ, r⟩` and the factorial polynomials.

use num::{BigInt, BigUint, One, Zero};

use crate::error::Error;
use crate::exactring::{Rational, SparsePoly, Var};
use crate::partitions::Partition;

/// Largest weight accepted by [`gen_binom_brute`].
pub const BRUTE_FORCE_BOUND: usize = 20;

/// Coefficients of `(1+q)^n - 1`, indexed by the power of `q`.
fn shifted_binomial_row(n: u32) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 1..=n as usize {
        let prev = row[k - 1].clone();
        row.push(prev * BigUint::from(n as usize - k + 1) / BigUint::from(k));
    }
    row[0] = BigUint::zero();
    row
}

/// Coefficients of `∏_i ((1+q)^{λ_i} - 1)`.
pub fn gen_binom_row(p: &Partition) -> Vec<BigUint> {
    let mut acc = vec![BigUint::one()];
    for &part in p.parts() {
        let factor = shifted_binomial_row(part);
        let mut next = vec![BigUint::zero(); acc.len() + factor.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, f) in factor.iter().enumerate() {
                next[i + j] += a * f;
            }
        }
        acc = next;
    }
    acc
}

/// `⟨λ, r⟩`: the number of ways to choose `r` cells of the diagram with at
/// least one cell in every row.
pub fn gen_binom(p: &Partition, r: u32) -> BigUint {
    gen_binom_row(p)
        .get(r as usize)
        .cloned()
        .unwrap_or_else(BigUint::zero)
}

/// Counts `r`-subsets of the cells meeting every row by exhaustive enumeration.
pub fn gen_binom_brute(p: &Partition, r: u32) -> Result<u64, Error> {
    let n = p.weight() as usize;
    if n > BRUTE_FORCE_BOUND {
        return Err(Error::OracleScale {
            weight: n,
            bound: BRUTE_FORCE_BOUND,
        });
    }
    let row_of: Vec<u32> = p.cells().iter().map(|c| c.0).collect();
    let rows = p.len();
    let mut count = 0u64;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() != r {
            continue;
        }
        let mut hit = vec![false; rows];
        for (bit, &row) in row_of.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                hit[row as usize - 1] = true;
            }
        }
        if hit.iter().all(|&h| h) {
            count += 1;
        }
    }
    Ok(count)
}

/// `(z)_n = z(z+1)...(z+n-1)`.
pub fn rising_factorial(z: Var, n: u32) -> SparsePoly {
    (0..n).fold(SparsePoly::one(), |acc, i| {
        &acc * &(SparsePoly::var(z) + SparsePoly::int(i as i64))
    })
}

/// `[z]_n = z(z-1)...(z-n+1)`.
pub fn falling_factorial(z: Var, n: u32) -> SparsePoly {
    (0..n).fold(SparsePoly::one(), |acc, i| {
        &acc * &(SparsePoly::var(z) - SparsePoly::int(i as i64))
    })
}

/// `binom(z, n) = [z]_n / n!`.
pub fn binom_poly(z: Var, n: u32) -> SparsePoly {
    falling_factorial(z, n).scale(&factorial(n).recip())
}

pub fn factorial(n: u32) -> Rational {
    let f: BigInt = (1..=n as u64).map(BigInt::from).product();
    Rational::from_integer(f)
}

/// `binom(m, k)` for any integer `m`: zero when `k < 0`, else `[m]_k / k!`.
pub fn binom_int(m: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(m - i);
    }
    Rational::new(num, factorial(k as u32).to_integer())
}
