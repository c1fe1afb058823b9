//! Symmetric functions evaluated on finite alphabets.
//!
//! Alphabets are finite; statements about infinite alphabets are checked with
//! at least as many letters as the degree involved. On fewer letters the
//! generating families are no longer algebraically independent and nothing
//! here certifies otherwise.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::exactring::{Monomial, Profile, Rational, SparsePoly, TruncatedSeries, Var};
use crate::partitions::{enumerate_partitions, partitions_bounded, Partition};

/// A finite list of letters, each either a formal variable or a rational number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<SparsePoly>,
}

impl Alphabet {
    pub fn formal(vars: &[Var]) -> Self {
        Alphabet {
            letters: vars.iter().map(|&v| SparsePoly::var(v)).collect(),
        }
    }

    /// `prefix1, ..., prefix{p}`.
    pub fn indexed(prefix: &str, p: usize) -> Self {
        let vars: Vec<Var> = (1..=p).map(|i| Var::indexed(prefix, i)).collect();
        Self::formal(&vars)
    }

    pub fn numeric(values: &[Rational]) -> Self {
        Alphabet {
            letters: values.iter().cloned().map(SparsePoly::constant).collect(),
        }
    }

    pub fn letters(&self) -> &[SparsePoly] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The alphabet `{a·b : a ∈ self, b ∈ other}`.
    pub fn product(&self, other: &Alphabet) -> Alphabet {
        let mut letters = Vec::with_capacity(self.len() * other.len());
        for a in &self.letters {
            for b in &other.letters {
                letters.push(a * b);
            }
        }
        Alphabet { letters }
    }
}

/// Coefficients of `∏_{a}(1 + t a)` up to degree `i`.
fn elementary_row(a: &Alphabet, i: usize) -> Vec<SparsePoly> {
    let mut row = vec![SparsePoly::zero(); i + 1];
    row[0] = SparsePoly::one();
    for letter in &a.letters {
        for k in (1..=i).rev() {
            let add = &row[k - 1] * letter;
            row[k] = &row[k] + &add;
        }
    }
    row
}

/// Coefficients of `∏_{a} 1/(1 - t a)` up to degree `i`.
fn complete_row(a: &Alphabet, i: usize) -> Vec<SparsePoly> {
    let mut row = vec![SparsePoly::zero(); i + 1];
    row[0] = SparsePoly::one();
    for letter in &a.letters {
        for k in 1..=i {
            let add = &row[k - 1] * letter;
            row[k] = &row[k] + &add;
        }
    }
    row
}

/// `Λ^i(A)`.
pub fn elementary(a: &Alphabet, i: usize) -> SparsePoly {
    elementary_row(a, i).pop().unwrap()
}

/// `S^i(A)`.
pub fn complete(a: &Alphabet, i: usize) -> SparsePoly {
    complete_row(a, i).pop().unwrap()
}

/// `ψ^i(A) = Σ a^i`; `ψ^0` is taken as 1.
pub fn power_sum(a: &Alphabet, i: usize) -> SparsePoly {
    if i == 0 {
        return SparsePoly::one();
    }
    a.letters
        .iter()
        .fold(SparsePoly::zero(), |acc, l| acc + l.pow(i as u32))
}

/// `ψ_μ(A)`: the sum of all distinct monomials whose exponent vector is a
/// rearrangement of `μ`.
pub fn monomial(a: &Alphabet, mu: &Partition) -> SparsePoly {
    let p = a.len();
    if mu.len() > p {
        return SparsePoly::zero();
    }
    let mut exps: Vec<u32> = mu.parts().to_vec();
    exps.resize(p, 0);
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for e in exps {
        *counts.entry(e).or_default() += 1;
    }
    let mut out = SparsePoly::zero();
    let mut current = Vec::with_capacity(p);
    arrangements(&mut counts, p, &mut current, &mut |exps: &[u32]| {
        let term = exps
            .iter()
            .zip(&a.letters)
            .fold(
                SparsePoly::one(),
                |acc, (&e, l)| if e == 0 { acc } else { acc * l.pow(e) },
            );
        out = &out + &term;
    });
    out
}

fn arrangements<F: FnMut(&[u32])>(
    counts: &mut BTreeMap<u32, usize>,
    len: usize,
    current: &mut Vec<u32>,
    visit: &mut F,
) {
    if current.len() == len {
        visit(current);
        return;
    }
    let keys: Vec<u32> = counts
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(&k, _)| k)
        .collect();
    for k in keys {
        *counts.get_mut(&k).unwrap() -= 1;
        current.push(k);
        arrangements(counts, len, current, visit);
        current.pop();
        *counts.get_mut(&k).unwrap() += 1;
    }
}

/// Determinant by cofactor expansion along the first row.
fn determinant(m: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = m.len();
    if n == 0 {
        return SparsePoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = SparsePoly::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SparsePoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &determinant(&minor);
        det = if col % 2 == 0 { det + term } else { det - term };
    }
    det
}

/// `S_μ(A)` by the Jacobi–Trudi determinant `det(S^{μ_i - i + j})`.
pub fn schur(a: &Alphabet, mu: &Partition) -> SparsePoly {
    let l = mu.len();
    let top = mu.largest() as usize + l;
    let h = complete_row(a, top);
    let matrix: Vec<Vec<SparsePoly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = mu.parts()[i] as i64 - i as i64 + j as i64;
                    if k < 0 {
                        SparsePoly::zero()
                    } else {
                        h[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// The five classical families.
///
/// `Elementary`, `Complete` and `PowerSum` name the multiplicative bases
/// `f^μ = ∏ f^{μ_i}`; `Monomial` and `Schur` are indexed by the partition itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Elementary,
    Complete,
    PowerSum,
    Monomial,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Elementary,
        Basis::Complete,
        Basis::PowerSum,
        Basis::Monomial,
        Basis::Schur,
    ];
}

/// `f^μ = ∏_i f^{μ_i}` for the three multiplicative families.
pub fn mu_indexed(basis: Basis, a: &Alphabet, mu: &Partition) -> SparsePoly {
    let single = |i: usize| match basis {
        Basis::Elementary => elementary(a, i),
        Basis::Complete => complete(a, i),
        Basis::PowerSum => power_sum(a, i),
        Basis::Monomial | Basis::Schur => unreachable!(),
    };
    match basis {
        Basis::Monomial => monomial(a, mu),
        Basis::Schur => schur(a, mu),
        _ => mu
            .parts()
            .iter()
            .fold(SparsePoly::one(), |acc, &p| acc * single(p as usize)),
    }
}

/// A symmetric function written in the power-sum basis: `Σ_ν c_ν ψ^ν`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumExpansion {
    terms: BTreeMap<Partition, Rational>,
}

impl PowerSumExpansion {
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, nu: &Partition) -> Rational {
        self.terms.get(nu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn evaluate(&self, a: &Alphabet) -> SparsePoly {
        self.terms.iter().fold(SparsePoly::zero(), |acc, (nu, c)| {
            acc + mu_indexed(Basis::PowerSum, a, nu).scale(c)
        })
    }
}

/// Expands `basis_μ` in power sums by solving the linear system given by its
/// values on `|μ|` formal letters, where the `ψ^ν` with `|ν| = |μ|` are
/// linearly independent.
pub fn power_sum_expansion(basis: Basis, mu: &Partition) -> PowerSumExpansion {
    let d = mu.weight();
    let letters = Alphabet::indexed("x", d as usize);
    let vars: Vec<Var> = (1..=d as usize).map(|i| Var::indexed("x", i)).collect();
    let parts = enumerate_partitions(d);
    let leading = |lambda: &Partition| {
        Monomial::from_pairs(
            lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &e)| (vars[i], e)),
        )
    };
    let target = mu_indexed(basis, &letters, mu);
    let columns: Vec<SparsePoly> = parts
        .iter()
        .map(|nu| mu_indexed(Basis::PowerSum, &letters, nu))
        .collect();
    let n = parts.len();
    let mut matrix: Vec<Vec<Rational>> = parts
        .iter()
        .map(|lambda| {
            let m = leading(lambda);
            let mut row: Vec<Rational> = columns.iter().map(|c| c.coeff(&m)).collect();
            row.push(target.coeff(&m));
            row
        })
        .collect();
    let solution = solve(&mut matrix, n);
    PowerSumExpansion {
        terms: parts
            .into_iter()
            .zip(solution)
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    }
}

/// Gauss–Jordan elimination on an `n × (n+1)` augmented matrix.
fn solve(m: &mut [Vec<Rational>], n: usize) -> Vec<Rational> {
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("power sums of a fixed degree are linearly independent");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
    }
    m.iter().map(|row| row[n].clone()).collect()
}

fn sign(exponent: u32) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn inv_z(mu: &Partition) -> Rational {
    Rational::new(1.into(), mu.z().into())
}

/// Power-sum side of the two Cauchy formulas on `A`:
/// `(Σ (-1)^{i-l(μ)} ψ^μ/z_μ, Σ ψ^μ/z_μ)`.
pub fn cauchy_sums(i: u32, a: &Alphabet) -> (SparsePoly, SparsePoly) {
    let mut e = SparsePoly::zero();
    let mut h = SparsePoly::zero();
    for mu in enumerate_partitions(i) {
        let term = mu_indexed(Basis::PowerSum, a, &mu).scale(&inv_z(&mu));
        e = e + term.scale(&sign(i - mu.len() as u32));
        h = h + term;
    }
    (e, h)
}

/// Both Cauchy formulas for `Λ^i` and `S^i` hold on `A`.
pub fn check_cauchy(i: u32, a: &Alphabet) -> bool {
    let (e, h) = cauchy_sums(i, a);
    e == elementary(a, i as usize) && h == complete(a, i as usize)
}

/// The kernel expansions of `S^i[PQ]` and `Λ^i[PQ]` for `P = Σ A`, `Q = Σ B`
/// with rank-1 letters, i.e. evaluated on the product alphabet.
#[derive(Clone, Debug)]
pub struct KernelExpansions {
    pub complete_direct: SparsePoly,
    /// `Σ ψ^μ[P]ψ^μ[Q]/z_μ`, `Σ ψ_μ[P] S^μ[Q]`, `Σ S_μ[P] S_μ[Q]`.
    pub complete_lines: [SparsePoly; 3],
    pub elementary_direct: SparsePoly,
    /// `Σ (-1)^{i-l} ψ^μ[P]ψ^μ[Q]/z_μ`, `Σ ψ_μ[P] Λ^μ[Q]`, `Σ S_μ[P] S_{μ'}[Q]`.
    pub elementary_lines: [SparsePoly; 3],
}

impl KernelExpansions {
    pub fn holds(&self) -> bool {
        self.complete_lines
            .iter()
            .all(|l| *l == self.complete_direct)
            && self
                .elementary_lines
                .iter()
                .all(|l| *l == self.elementary_direct)
    }
}

pub fn kernel_expansions(i: u32, a: &Alphabet, b: &Alphabet) -> KernelExpansions {
    let ab = a.product(b);
    let mut complete_lines: [SparsePoly; 3] = Default::default();
    let mut elementary_lines: [SparsePoly; 3] = Default::default();
    for mu in enumerate_partitions(i) {
        let pp = &mu_indexed(Basis::PowerSum, a, &mu) * &mu_indexed(Basis::PowerSum, b, &mu);
        let pp = pp.scale(&inv_z(&mu));
        let m_a = monomial(a, &mu);
        let s_a = schur(a, &mu);
        complete_lines[0] = &complete_lines[0] + &pp;
        complete_lines[1] = &complete_lines[1] + &(&m_a * &mu_indexed(Basis::Complete, b, &mu));
        complete_lines[2] = &complete_lines[2] + &(&s_a * &schur(b, &mu));
        elementary_lines[0] = &elementary_lines[0] + &pp.scale(&sign(i - mu.len() as u32));
        elementary_lines[1] =
            &elementary_lines[1] + &(&m_a * &mu_indexed(Basis::Elementary, b, &mu));
        elementary_lines[2] = &elementary_lines[2] + &(&s_a * &schur(b, &mu.conjugate()));
    }
    KernelExpansions {
        complete_direct: complete(&ab, i as usize),
        complete_lines,
        elementary_direct: elementary(&ab, i as usize),
        elementary_lines,
    }
}

pub fn check_kernel_expansions(i: u32, a: &Alphabet, b: &Alphabet) -> bool {
    kernel_expansions(i, a, b).holds()
}

/// Both sides of
/// `Σ_{N ⊂ A, |N| = n} ∏_{a∈N} y·va/(1-va) = y^n Σ_{l(ν)=n} v^{|ν|} ψ_ν(A)`,
/// truncated at `v^{cap_v}`.
#[derive(Clone, Debug)]
pub struct SubsetProduct {
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

impl SubsetProduct {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn subset_product_expand(a: &Alphabet, v: Var, y: Var, n: usize, cap_v: u32) -> SubsetProduct {
    let profile = Profile::new().with(v, cap_v);
    let yv = SparsePoly::var(y);
    let vv = SparsePoly::var(v);
    // y·va/(1-va) = y Σ_{k≥1} (va)^k
    let factors: Vec<TruncatedSeries> = a
        .letters
        .iter()
        .map(|l| {
            let va = &vv * l;
            let geo = (1..=cap_v).fold(SparsePoly::zero(), |acc, k| acc + va.pow(k));
            TruncatedSeries::new(&yv * &geo, profile.clone())
        })
        .collect();
    let mut lhs = TruncatedSeries::zero(profile.clone());
    for_each_subset(factors.len(), n, &mut |subset: &[usize]| {
        let prod = subset
            .iter()
            .fold(TruncatedSeries::one(profile.clone()), |acc, &i| {
                acc.mul(&factors[i]).expect("single profile")
            });
        lhs = lhs.add(&prod).expect("single profile");
    });

    let mut rhs_poly = SparsePoly::zero();
    if n <= a.len() {
        for weight in n as u32..=cap_v {
            for nu in partitions_bounded(weight, weight, n) {
                if nu.len() != n {
                    continue;
                }
                rhs_poly = rhs_poly + monomial(a, &nu).mul_monomial(&Monomial::var_pow(v, weight));
            }
        }
    }
    let rhs = TruncatedSeries::new(
        rhs_poly.mul_monomial(&Monomial::var_pow(y, n as u32)),
        profile,
    );
    SubsetProduct { lhs, rhs }
}

fn for_each_subset<F: FnMut(&[usize])>(len: usize, k: usize, visit: &mut F) {
    fn go<F: FnMut(&[usize])>(
        start: usize,
        len: usize,
        k: usize,
        cur: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in start..len {
            cur.push(i);
            go(i + 1, len, k, cur, visit);
            cur.pop();
        }
    }
    if k <= len {
        go(0, len, k, &mut Vec::with_capacity(k), visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{int, rat};

    fn v(name: &str) -> SparsePoly {
        SparsePoly::var(Var::new(name))
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn basic_values_on_two_letters() {
        let a = Alphabet::indexed("a", 2);
        assert_eq!(elementary(&a, 2), &v("a1") * &v("a2"));
        assert_eq!(
            complete(&a, 2),
            v("a1").pow(2) + &v("a1") * &v("a2") + v("a2").pow(2)
        );
        let m21 = &v("a1").pow(2) * &v("a2") + &v("a1") * &v("a2").pow(2);
        assert_eq!(monomial(&a, &part("2,1")), m21);
        assert_eq!(schur(&a, &part("2,1")), m21);
        assert_eq!(elementary(&a, 3), SparsePoly::zero());
        assert_eq!(monomial(&a, &part("1,1,1")), SparsePoly::zero());
        assert_eq!(schur(&a, &part("1,1,1")), SparsePoly::zero());
    }

    #[test]
    fn mu_indexed_products() {
        let a = Alphabet::indexed("a", 2);
        let p2 = v("a1").pow(2) + v("a2").pow(2);
        let p1 = v("a1") + v("a2");
        assert_eq!(mu_indexed(Basis::PowerSum, &a, &part("2,1")), &p2 * &p1);
        assert_eq!(
            mu_indexed(Basis::Elementary, &a, &part("1,1")),
            elementary(&a, 1).pow(2)
        );
        let one = Alphabet::indexed("a", 1);
        assert_eq!(
            mu_indexed(Basis::Complete, &one, &part("2")),
            v("a1").pow(2)
        );
    }

    #[test]
    fn numeric_alphabet() {
        let a = Alphabet::numeric(&[int(1), int(2), int(3)]);
        assert_eq!(elementary(&a, 2), SparsePoly::int(11));
        assert_eq!(power_sum(&a, 2), SparsePoly::int(14));
        assert_eq!(complete(&a, 2), SparsePoly::int(25));
    }

    #[test]
    fn newton_identities() {
        let a = Alphabet::indexed("a", 6);
        for i in 1..=6usize {
            let mut rhs = SparsePoly::zero();
            for k in 1..=i {
                let t = &elementary(&a, i - k) * &power_sum(&a, k);
                rhs = rhs + t.scale(&sign(k as u32 - 1));
            }
            assert_eq!(elementary(&a, i).scale(&int(i as i64)), rhs, "i = {i}");
        }
    }

    /// Exact division by a divisor known to divide `num`, using lex-leading terms.
    fn exact_div(num: &SparsePoly, den: &SparsePoly) -> SparsePoly {
        // Pure lex order on a1 > a2 > ...; the canonical storage order is not a
        // monomial order.
        let key = |m: &Monomial| -> Vec<u32> {
            (1..=9).map(|i| m.exponent(Var::indexed("a", i))).collect()
        };
        let lead = |p: &SparsePoly| {
            p.terms()
                .max_by_key(|(m, _)| key(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap()
        };
        let (dm, dc) = lead(den);
        let mut rem = num.clone();
        let mut quot = SparsePoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = lead(&rem);
            let mut pairs = Vec::new();
            for (var, e) in rm.iter() {
                let d = dm.exponent(var);
                assert!(e >= d, "not divisible");
                pairs.push((var, e - d));
            }
            for (var, _) in dm.iter() {
                assert!(rm.exponent(var) > 0, "not divisible");
            }
            let qm = Monomial::from_pairs(pairs);
            let qc = &rc / &dc;
            let t = SparsePoly::term(qc, qm);
            rem = rem - &t * den;
            quot = quot + t;
        }
        quot
    }

    fn alternant(a: &Alphabet, exps: &[u32]) -> SparsePoly {
        let n = a.len();
        let m: Vec<Vec<SparsePoly>> = (0..n)
            .map(|i| (0..n).map(|j| a.letters()[j].pow(exps[i])).collect())
            .collect();
        determinant(&m)
    }

    #[test]
    fn jacobi_trudi_matches_quotient_of_alternants() {
        let n = 5usize;
        let a = Alphabet::indexed("a", n);
        let delta: Vec<u32> = (0..n as u32).rev().collect();
        let vandermonde = alternant(&a, &delta);
        for w in 0..=5 {
            for mu in enumerate_partitions(w) {
                let mut exps: Vec<u32> = mu.parts().to_vec();
                exps.resize(n, 0);
                let shifted: Vec<u32> = exps.iter().zip(&delta).map(|(x, d)| x + d).collect();
                let quotient = exact_div(&alternant(&a, &shifted), &vandermonde);
                assert_eq!(schur(&a, &mu), quotient, "mu = {mu:?}");
            }
        }
    }

    #[test]
    fn cauchy_formulas() {
        let a3 = Alphabet::indexed("a", 3);
        let (e2, _) = cauchy_sums(2, &a3);
        let expected =
            (mu_indexed(Basis::PowerSum, &a3, &part("1,1")) - power_sum(&a3, 2)).scale(&rat(1, 2));
        assert_eq!(e2, expected);
        assert!(check_cauchy(0, &a3));
        assert!(check_cauchy(5, &Alphabet::indexed("a", 5)));
        for p in 3..=5 {
            let a = Alphabet::indexed("a", p);
            for i in 0..=6 {
                assert!(check_cauchy(i, &a), "i={i} p={p}");
            }
        }
    }

    #[test]
    fn kernel_expansion_examples() {
        let a2 = Alphabet::indexed("a", 2);
        let b2 = Alphabet::indexed("b", 2);
        let b3 = Alphabet::indexed("b", 3);
        assert!(check_kernel_expansions(1, &a2, &b2));
        assert!(check_kernel_expansions(2, &a2, &b2));
        assert!(check_kernel_expansions(3, &a2, &b3));
    }

    #[test]
    fn power_sum_expansions_reproduce_the_functions() {
        let a = Alphabet::indexed("a", 4);
        for w in 0..=4 {
            for mu in enumerate_partitions(w) {
                for basis in Basis::ALL {
                    let exp = power_sum_expansion(basis, &mu);
                    assert_eq!(
                        exp.evaluate(&a),
                        mu_indexed(basis, &a, &mu),
                        "{basis:?} {mu:?}"
                    );
                }
            }
        }
        // e_2 = (p_1^2 - p_2)/2
        let e2 = power_sum_expansion(Basis::Elementary, &part("2"));
        assert_eq!(e2.coeff(&part("1,1")), rat(1, 2));
        assert_eq!(e2.coeff(&part("2")), rat(-1, 2));
    }

    #[test]
    fn subset_products() {
        let (vv, y) = (Var::new("v"), Var::new("y"));
        let one = Alphabet::indexed("a", 1);
        let r = subset_product_expand(&one, vv, y, 1, 3);
        let va = &v("v") * &v("a1");
        let expected = &v("y") * &(va.clone() + va.pow(2) + va.pow(3));
        assert_eq!(r.lhs.poly(), &expected);
        assert!(r.equal());

        let two = Alphabet::indexed("a", 2);
        let r = subset_product_expand(&two, vv, y, 2, 4);
        assert!(r.equal());
        let coeff = r.lhs.coefficient_of(y, 2).coefficient_of(vv, 2);
        assert_eq!(coeff, &v("a1") * &v("a2"));

        let r = subset_product_expand(&two, vv, y, 3, 4);
        assert!(r.lhs.is_zero() && r.rhs.is_zero());
    }
}
