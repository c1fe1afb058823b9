//! Integer partitions and their statistics.
//!
//! Cells of the Ferrers diagram use 1-indexed `(row, column)` coordinates.

use std::fmt;
use std::str::FromStr;

use num::BigUint;

use crate::error::Error;

/// A weakly decreasing finite sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// The single-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// `m_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Distinct part values with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some(last) if last.0 == p => last.1 += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::from(1u32);
        for (i, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigUint::from(i) * BigUint::from(k);
            }
        }
        z
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.largest();
        Partition(
            (1..=cols)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    pub fn cells(&self) -> Vec<(u32, u32)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
            .collect()
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with parts at most `max_part` and at most `max_len` parts,
/// in reverse lexicographic order.
pub fn partitions_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, max_part.min(n), max_len, &mut current, &mut out);
    out
}

fn fill(
    rest: u32,
    max_part: u32,
    max_len: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if current.len() == max_len {
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        current.push(part);
        fill(rest - part, part, max_len, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1,1"`; `"-"` (or the empty string) is the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(parts) => Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string())),
            Err(_) => Err(Error::InvalidPartition(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    // Euler's pentagonal recurrence, independent of the enumerator.
    fn pentagonal_counts(n_max: usize) -> Vec<u64> {
        let mut p = vec![0i64; n_max + 1];
        p[0] = 1;
        for n in 1..=n_max as i64 {
            let mut sum = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * p[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    sum += sign * p[(n - g2) as usize];
                }
                k += 1;
            }
            p[n as usize] = sum;
        }
        p.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<String> = enumerate_partitions(4)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(8).len(), 22);
    }

    #[test]
    fn enumeration_counts_match_pentagonal_recurrence() {
        let counts = pentagonal_counts(30);
        for n in 0..=30u32 {
            assert_eq!(
                enumerate_partitions(n).len() as u64,
                counts[n as usize],
                "n = {n}"
            );
        }
    }

    #[test]
    fn enumeration_has_no_duplicates_and_is_reverse_lex() {
        for n in 0..=12 {
            let ps = enumerate_partitions(n);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn multiplicities_and_statistics() {
        let p = part("2,1,1");
        assert_eq!(p.multiplicity(1), 2);
        assert_eq!(p.multiplicity(2), 1);
        assert_eq!(p.multiplicity(3), 0);
        for n in 0..=10 {
            for p in enumerate_partitions(n) {
                let weighted: u32 = p.multiplicities().iter().map(|&(i, m)| i * m as u32).sum();
                let count: usize = p.multiplicities().iter().map(|&(_, m)| m).sum();
                assert_eq!(weighted, p.weight());
                assert_eq!(count, p.len());
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(part("1,1,1").z(), BigUint::from(6u32));
        assert_eq!(part("3").z(), BigUint::from(3u32));
        assert_eq!(part("2,1").z(), BigUint::from(2u32));
        assert_eq!(Partition::empty().z(), BigUint::from(1u32));
        // Σ_{|μ|=n} 1/z_μ = 1 (class equation of the symmetric group).
        for n in 1..=8 {
            let sum: num::BigRational = enumerate_partitions(n)
                .iter()
                .map(|p| num::BigRational::new(1.into(), p.z().into()))
                .sum();
            assert_eq!(sum, num::BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
        assert_eq!(part("2,2").conjugate(), part("2,2"));
        for n in 0..=8 {
            for p in enumerate_partitions(n) {
                let c = p.conjugate();
                assert_eq!(c.conjugate(), p);
                assert_eq!(c.weight(), p.weight());
                assert_eq!(c.len() as u32, p.largest());
                assert_eq!(c.largest() as usize, p.len());
            }
        }
    }

    #[test]
    fn cells_cover_the_diagram() {
        assert_eq!(part("2,1").cells(), vec![(1, 1), (1, 2), (2, 1)]);
        assert!(Partition::empty().cells().is_empty());
        for n in 0..=8 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.cells().len() as u32, p.weight());
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(part("3,1,1").parts(), &[3, 1, 1]);
        assert_eq!(part("-"), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn bounded_enumeration() {
        let ps = partitions_bounded(4, 2, 2);
        assert_eq!(ps, vec![part("2,2")]);
    }
}
