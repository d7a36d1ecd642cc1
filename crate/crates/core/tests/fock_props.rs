mod common;

use proptest::prelude::*;
use qset_core::fock::{
    self, annihilate, canonicalize, create, inner, is_null, norm_squared, parse_vector, similar,
};
use qset_core::stats::{
    count_arrangements, enumerate_arrangements, CountingProblem, CountingStatistics,
};
use qset_core::{ExactComplex, FockVector, ModeIndex, Sign, Statistics};

fn coeff() -> impl Strategy<Value = ExactComplex> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(a, b, c, d)| ExactComplex::from_parts((a, b), (c, d)))
}

fn modes(max_len: usize) -> impl Strategy<Value = Vec<ModeIndex>> {
    prop::collection::vec((0u32..4).prop_map(ModeIndex), 0..=max_len)
}

fn vector(stats: Statistics) -> impl Strategy<Value = FockVector> {
    prop::collection::vec((modes(3), coeff()), 0..5).prop_map(move |terms| {
        let mut v = FockVector::zero(stats);
        for (m, c) in terms {
            v.push_raw(&m, c);
        }
        v
    })
}

fn stats() -> impl Strategy<Value = Statistics> {
    prop_oneof![Just(Statistics::Boson), Just(Statistics::Fermion)]
}

fn pair() -> impl Strategy<Value = (FockVector, FockVector)> {
    stats().prop_flat_map(|s| (vector(s), vector(s)))
}

/// Combination of doubly occupied fermion kets.
fn null_vector() -> impl Strategy<Value = FockVector> {
    prop::collection::vec((0u32..4, modes(2), coeff()), 0..4).prop_map(|terms| {
        let mut v = FockVector::zero(Statistics::Fermion);
        for (m, rest, c) in terms {
            let mut raw = vec![ModeIndex(m), ModeIndex(m)];
            raw.extend(rest);
            v.push_raw(&raw, c);
        }
        v
    })
}

proptest! {
    #[test]
    fn hermitian_symmetry((u, v) in pair()) {
        let s = u.statistics();
        prop_assert_eq!(inner(&u, &v, s).unwrap(), inner(&v, &u, s).unwrap().conj());
    }

    #[test]
    fn sesquilinearity((u, v) in pair(), k in coeff()) {
        let s = u.statistics();
        let w = &v.scale(&k) + &u;
        let lhs = inner(&u, &w, s).unwrap();
        let rhs = &(&k * &inner(&u, &v, s).unwrap()) + &inner(&u, &u, s).unwrap();
        prop_assert_eq!(lhs, rhs);
        let left = inner(&u.scale(&k), &v, s).unwrap();
        prop_assert_eq!(left, &k.conj() * &inner(&u, &v, s).unwrap());
    }

    #[test]
    fn norms_are_nonnegative_reals(v in stats().prop_flat_map(vector)) {
        let n = norm_squared(&v);
        prop_assert!(n.is_real());
        prop_assert!(n.re >= num::BigRational::from_integer(0.into()));
    }

    #[test]
    fn null_vectors_form_a_radical(n in null_vector(), m in null_vector(), v in vector(Statistics::Fermion), k in coeff()) {
        prop_assert!(is_null(&n));
        prop_assert!(is_null(&(&n + &m.scale(&k))));
        prop_assert!(inner(&n, &v, Statistics::Fermion).unwrap().is_zero());
        prop_assert!(inner(&v, &n, Statistics::Fermion).unwrap().is_zero());
    }

    #[test]
    fn similarity_is_a_congruence(u in vector(Statistics::Fermion), v in vector(Statistics::Fermion), n in null_vector(), m in null_vector()) {
        let un = &u + &n;
        prop_assert!(similar(&u, &un).unwrap());
        prop_assert!(similar(&un, &u).unwrap());
        let vm = &v + &m;
        prop_assert!(similar(&(&u + &v), &(&un + &vm)).unwrap());
        prop_assert_eq!(
            inner(&un, &vm, Statistics::Fermion).unwrap(),
            inner(&u, &v, Statistics::Fermion).unwrap()
        );
    }

    #[test]
    fn display_round_trips(v in stats().prop_flat_map(vector)) {
        let text = v.to_string();
        if v.is_zero() {
            prop_assert_eq!(text, "0");
        } else {
            prop_assert_eq!(parse_vector(&text, v.statistics()).unwrap(), v);
        }
    }

    #[test]
    fn permutations_are_unobservable(seq in modes(5).prop_flat_map(|s| {
        let n = s.len();
        (Just(s), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })) {
        let (seq, p) = seq;
        let permuted: Vec<ModeIndex> = p.iter().map(|&i| seq[i]).collect();
        let (b0, _) = canonicalize(&seq, Statistics::Boson);
        let (b1, _) = canonicalize(&permuted, Statistics::Boson);
        prop_assert_eq!(b0, b1);
        let (f0, s0) = canonicalize(&seq, Statistics::Fermion);
        let (f1, s1) = canonicalize(&permuted, Statistics::Fermion);
        prop_assert_eq!(f0.modes(), f1.modes());
        if f0.has_repeated_mode() {
            prop_assert!(f0.is_null_basis());
        } else {
            let flip = if common::is_odd(&p) { Sign::Minus } else { Sign::Plus };
            prop_assert_eq!(s1, s0 * flip);
        }
    }

    #[test]
    fn ladder_operators_are_adjoint((x, y) in pair(), m in 0u32..4) {
        let s = x.statistics();
        let lhs = inner(&create(ModeIndex(m), &x), &y, s).unwrap();
        let rhs = inner(&x, &annihilate(ModeIndex(m), &y), s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn particle_number_tracks_sectors(v in stats().prop_flat_map(vector)) {
        let counts: std::collections::BTreeSet<usize> = v.terms().map(|(k, _)| k.particle_count()).collect();
        match fock::particle_number(&v) {
            Ok(Some(n)) => prop_assert!(counts.len() == 1 && counts.contains(&n)),
            Ok(None) => prop_assert!(counts.len() > 1),
            Err(_) => prop_assert!(v.is_zero()),
        }
    }

    #[test]
    fn enumeration_matches_count(n in 0usize..6, k in 0usize..6, s in prop::sample::select(CountingStatistics::ALL.to_vec())) {
        let p = CountingProblem::new(n, k, s);
        let listed = enumerate_arrangements(&p, 1_000_000).unwrap();
        prop_assert_eq!(num::BigUint::from(listed.len()), count_arrangements(&p));
        prop_assert!(listed.iter().all(|a| a.occupation.iter().sum::<usize>() == n));
    }
}
