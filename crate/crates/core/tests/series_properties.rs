//! Algebraic laws of truncated series on random inputs.

use lamring::exactring::{rat, Monomial, Profile, Rational, SparsePoly, TruncatedSeries, Var};
use proptest::prelude::*;

fn profile() -> Profile {
    Profile::new().with(Var::new("t"), 3).with(Var::new("u"), 2)
}

fn coeff() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

/// Random polynomials in the series variables `t`, `u` and the exact `z`.
fn poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((coeff(), 0u32..=3, 0u32..=2, 0u32..=1), 0..6).prop_map(|terms| {
        let mut p = SparsePoly::zero();
        for (c, et, eu, ez) in terms {
            let m = Monomial::from_pairs([
                (Var::new("t"), et),
                (Var::new("u"), eu),
                (Var::new("z"), ez),
            ]);
            p.add_term(m, c);
        }
        p
    })
}

fn series() -> impl Strategy<Value = TruncatedSeries> {
    poly().prop_map(|p| TruncatedSeries::new(p, profile()))
}

/// Series with constant term 1 and no `z`, so log and inverse apply.
fn unit() -> impl Strategy<Value = TruncatedSeries> {
    poly().prop_map(|p| {
        let p = p.filter(|m| !m.mentions(Var::new("z")) && !m.is_one()) + SparsePoly::one();
        TruncatedSeries::new(p, profile())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn inverse_is_two_sided(a in unit()) {
        let one = TruncatedSeries::one(profile());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&a).unwrap(), one);
    }

    #[test]
    fn exp_inverts_log(a in unit(), b in unit()) {
        prop_assert_eq!(a.log().unwrap().exp().unwrap(), a.clone());
        let lhs = a.mul(&b).unwrap().log().unwrap();
        let rhs = a.log().unwrap().add(&b.log().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integer_powers(a in series(), e in 0u32..5) {
        let repeated = (0..e).fold(TruncatedSeries::one(profile()), |acc, _| acc.mul(&a).unwrap());
        prop_assert_eq!(a.pow(e), repeated);
    }

    #[test]
    fn symbolic_power_at_integers(a in unit(), e in -3i64..=4) {
        let via_log = a.pow_symbolic(&SparsePoly::int(e)).unwrap();
        let direct = if e >= 0 { a.pow(e as u32) } else { a.inverse().unwrap().pow((-e) as u32) };
        prop_assert_eq!(via_log, direct);
    }

    #[test]
    fn symbolic_powers_add(a in unit()) {
        let z = SparsePoly::var(Var::new("z"));
        let lhs = a.pow_symbolic(&(z.clone() + SparsePoly::one())).unwrap();
        let rhs = a.pow_symbolic(&z).unwrap().mul(&a).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncation_is_a_morphism(p in poly(), q in poly()) {
        let wide = Profile::new().with(Var::new("t"), 6).with(Var::new("u"), 4);
        let a = TruncatedSeries::new(p.clone(), wide.clone());
        let b = TruncatedSeries::new(q.clone(), wide);
        let narrow = profile();
        prop_assert_eq!(
            a.mul(&b).unwrap().retruncate(&narrow),
            a.retruncate(&narrow).mul(&b.retruncate(&narrow)).unwrap()
        );
        prop_assert_eq!(
            a.add(&b).unwrap().retruncate(&narrow),
            a.retruncate(&narrow).add(&b.retruncate(&narrow)).unwrap()
        );
    }

    #[test]
    fn substitution_is_a_morphism(p in poly(), q in poly(), r in poly()) {
        // Replacing z by a series commutes with products.
        let z = Var::new("z");
        let repl = TruncatedSeries::new(r.filter(|m| !m.mentions(z)), profile());
        let a = TruncatedSeries::new(p, profile());
        let b = TruncatedSeries::new(q, profile());
        prop_assert_eq!(
            a.mul(&b).unwrap().substitute(z, &repl).unwrap(),
            a.substitute(z, &repl).unwrap().mul(&b.substitute(z, &repl).unwrap()).unwrap()
        );
    }
}
