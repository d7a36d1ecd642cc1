//! The boson and fermion scalar products and the notions built on them.
//!
//! On basis kets the boson product is a sum over all permutations of the
//! right-hand index list of products of Kronecker deltas, and the fermion
//! product is the same sum weighted by the permutation sign. With both
//! index lists in canonical order these collapse to closed forms:
//!
//! * boson: `prod_k n_k!` when the two kets have the same occupations, else 0;
//! * fermion: 1 when the two kets coincide and have no repeated mode, else 0.

use num::{BigInt, One};

use super::state::{states_with_support, OccupationState, Statistics};
use super::vector::FockVector;
use crate::error::{Error, Result};
use crate::scalar::ExactComplex;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Product of two basis kets, including their ordering signs.
pub fn basis_inner(a: &OccupationState, b: &OccupationState) -> Result<BigInt> {
    if a.statistics() != b.statistics() {
        return Err(Error::StatisticsMismatch {
            left: a.statistics(),
            right: b.statistics(),
        });
    }
    if a.modes() != b.modes() {
        return Ok(BigInt::from(0));
    }
    let magnitude = match a.statistics() {
        Statistics::Boson => a
            .occupations()
            .iter()
            .fold(BigInt::one(), |acc, &(_, n)| acc * factorial(n)),
        Statistics::Fermion if a.has_repeated_mode() => BigInt::from(0),
        Statistics::Fermion => BigInt::one(),
    };
    let sign = (a.canonical_sign() * b.canonical_sign()).as_i64();
    Ok(magnitude * BigInt::from(sign))
}

fn sesquilinear(u: &FockVector, v: &FockVector) -> ExactComplex {
    // distinct canonical kets are orthogonal, so only shared keys contribute
    let mut acc = ExactComplex::zero();
    let (small, large, flip) = if u.len() <= v.len() {
        (u, v, false)
    } else {
        (v, u, true)
    };
    for (key, c_small) in small.terms() {
        let c_large = large.coefficient(key);
        if c_large.is_zero() {
            continue;
        }
        let weight = basis_inner(key, key).expect("keys share statistics");
        if weight == BigInt::from(0) {
            continue;
        }
        let (left, right) = if flip {
            (c_large, c_small.clone())
        } else {
            (c_small.clone(), c_large)
        };
        let term = &left.conj() * &right;
        acc += &term.scale_big(&weight);
    }
    acc
}

fn require(v: &FockVector, stats: Statistics) -> Result<()> {
    if v.statistics() != stats {
        return Err(Error::StatisticsMismatch {
            left: stats,
            right: v.statistics(),
        });
    }
    Ok(())
}

/// Boson product, conjugate-linear in the left argument.
pub fn boson_inner(u: &FockVector, v: &FockVector) -> Result<ExactComplex> {
    require(u, Statistics::Boson)?;
    require(v, Statistics::Boson)?;
    Ok(sesquilinear(u, v))
}

/// Fermion product, conjugate-linear in the left argument.
pub fn fermion_inner(u: &FockVector, v: &FockVector) -> Result<ExactComplex> {
    require(u, Statistics::Fermion)?;
    require(v, Statistics::Fermion)?;
    Ok(sesquilinear(u, v))
}

pub fn inner(u: &FockVector, v: &FockVector, stats: Statistics) -> Result<ExactComplex> {
    match stats {
        Statistics::Boson => boson_inner(u, v),
        Statistics::Fermion => fermion_inner(u, v),
    }
}

pub fn norm_squared(v: &FockVector) -> ExactComplex {
    sesquilinear(v, v)
}

/// Whether `v` lies in the radical of the scalar product.
///
/// Every ket with the same particle number and the same set of occupied
/// modes as one of `v`'s terms is tested; kets outside that family are
/// orthogonal to every term of `v`.
pub fn is_null(v: &FockVector) -> bool {
    let mut probed = std::collections::BTreeSet::new();
    for (key, _) in v.terms() {
        for probe in states_with_support(&key.support(), key.particle_count(), v.statistics()) {
            if !probed.insert(probe.clone()) {
                continue;
            }
            let b = FockVector::from_state(&probe);
            if !sesquilinear(&b, v).is_zero() {
                return false;
            }
        }
    }
    true
}

/// `u ~ v` iff `u - v` is a combination of null-norm vectors.
pub fn similar(u: &FockVector, v: &FockVector) -> Result<bool> {
    Ok(is_null(&u.try_sub(v)?))
}

/// Total occupation shared by every term, or `None` when the vector mixes
/// particle-number sectors.
pub fn particle_number(v: &FockVector) -> Result<Option<usize>> {
    let mut counts = v.terms().map(|(k, _)| k.particle_count());
    let first = counts.next().ok_or(Error::ZeroVector)?;
    Ok(counts.all(|n| n == first).then_some(first))
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: Statistics = Statistics::Boson;
    const F: Statistics = Statistics::Fermion;

    fn ket(ids: &[u32], stats: Statistics) -> FockVector {
        FockVector::basis_ids(ids, stats)
    }

    fn int(n: i64) -> ExactComplex {
        ExactComplex::from_integer(n)
    }

    #[test]
    fn boson_examples() {
        assert_eq!(
            boson_inner(&ket(&[1, 2], B), &ket(&[1, 2], B)).unwrap(),
            int(1)
        );
        assert_eq!(
            boson_inner(&ket(&[1, 1], B), &ket(&[1, 1], B)).unwrap(),
            int(2)
        );
        assert_eq!(
            boson_inner(&ket(&[1], B), &ket(&[1, 2], B)).unwrap(),
            int(0)
        );
    }

    #[test]
    fn fermion_examples() {
        assert_eq!(
            fermion_inner(&ket(&[1, 2], F), &ket(&[1, 2], F)).unwrap(),
            int(1)
        );
        assert_eq!(
            fermion_inner(&ket(&[1, 1], F), &ket(&[1, 1], F)).unwrap(),
            int(0)
        );
        assert_eq!(
            fermion_inner(&ket(&[1, 2], F), &ket(&[2, 1], F)).unwrap(),
            int(-1)
        );
    }

    #[test]
    fn dispatch_and_mismatch() {
        let b = ket(&[1, 1], B);
        let f = ket(&[1, 2], F);
        assert_eq!(inner(&b, &b, B).unwrap(), boson_inner(&b, &b).unwrap());
        assert_eq!(inner(&f, &f, F).unwrap(), fermion_inner(&f, &f).unwrap());
        assert!(matches!(
            inner(&b, &f, B),
            Err(Error::StatisticsMismatch { .. })
        ));
        assert!(matches!(
            boson_inner(&f, &f),
            Err(Error::StatisticsMismatch { .. })
        ));
    }

    #[test]
    fn norms() {
        assert_eq!(norm_squared(&ket(&[1, 1], B)), int(2));
        assert_eq!(norm_squared(&ket(&[1, 1], F)), int(0));
        assert_eq!(norm_squared(&FockVector::zero(B)), int(0));
        assert_eq!(norm_squared(&FockVector::vacuum(F)), int(1));
        let v = &ket(&[1], B).scale(&ExactComplex::i()) + &ket(&[2, 2, 2], B);
        // |i|^2 * 1 + 3!
        assert_eq!(norm_squared(&v), int(7));
    }

    #[test]
    fn null_detection() {
        assert!(is_null(&ket(&[1, 1], F)));
        assert!(!is_null(&ket(&[1, 2], F)));
        assert!(!is_null(&ket(&[1, 1], B)));
        assert!(is_null(&FockVector::zero(F)));
        let mixed = &ket(&[1, 1, 2], F) + &ket(&[3, 3], F).scale(&ExactComplex::i());
        assert!(is_null(&mixed));
    }

    #[test]
    fn similarity_examples() {
        let v = ket(&[1, 2], F);
        assert!(similar(&v, &v).unwrap());
        let padded = &v + &ket(&[3, 3], F).scale(&int(5));
        assert!(similar(&v, &padded).unwrap());
        assert!(!similar(&v, &ket(&[1, 3], F)).unwrap());
        assert!(similar(&v, &ket(&[1], B)).is_err());
    }

    #[test]
    fn particle_numbers() {
        assert_eq!(particle_number(&ket(&[1, 2], B)).unwrap(), Some(2));
        let two_and_five = &ket(&[1, 2], B) + &ket(&[1, 1, 2, 3, 4], B);
        assert_eq!(particle_number(&two_and_five).unwrap(), None);
        let same = &ket(&[1, 1], B).scale(&ExactComplex::from_ratio(1, 2))
            + &ket(&[2, 3], B).scale(&int(3));
        assert_eq!(particle_number(&same).unwrap(), Some(2));
        assert_eq!(
            particle_number(&FockVector::zero(B)),
            Err(Error::ZeroVector)
        );
    }
}
