use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{Signed, Zero};

use super::state::{canonicalize, ModeIndex, OccupationState, Statistics};
use crate::error::{Error, Result};
use crate::scalar::ExactComplex;

/// Finite linear combination of canonical basis kets.
///
/// Keys are canonical with the ordering sign folded into the coefficient,
/// and zero coefficients are never stored. The empty map is the zero vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    statistics: Statistics,
    terms: BTreeMap<OccupationState, ExactComplex>,
}

impl FockVector {
    pub fn zero(stats: Statistics) -> Self {
        FockVector {
            statistics: stats,
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum(stats: Statistics) -> Self {
        Self::from_state(&OccupationState::vacuum(stats))
    }

    /// The ket with the raw (not necessarily sorted) index list `raw`.
    pub fn basis(raw: &[ModeIndex], stats: Statistics) -> Self {
        let mut v = Self::zero(stats);
        v.push_raw(raw, ExactComplex::one());
        v
    }

    pub fn basis_ids(ids: &[u32], stats: Statistics) -> Self {
        let raw: Vec<ModeIndex> = ids.iter().copied().map(ModeIndex).collect();
        Self::basis(&raw, stats)
    }

    /// `sign * |modes)` for a state carrying its ordering sign.
    pub fn from_state(state: &OccupationState) -> Self {
        let mut v = Self::zero(state.statistics());
        v.add_term(
            state.unsigned(),
            ExactComplex::from_integer(state.canonical_sign().as_i64()),
        );
        v
    }

    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OccupationState, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &OccupationState) -> ExactComplex {
        self.terms
            .get(&key.unsigned())
            .cloned()
            .unwrap_or_else(ExactComplex::zero)
    }

    /// Adds `coeff * key`, where `key` must already be canonical. Its
    /// `canonical_sign` is applied to the coefficient.
    pub fn add_term(&mut self, key: OccupationState, coeff: ExactComplex) {
        assert_eq!(
            key.statistics(),
            self.statistics,
            "term statistics must match the vector"
        );
        let coeff = coeff.scale(key.canonical_sign().as_i64());
        match self.terms.entry(key.unsigned()) {
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `coeff * |raw)` after canonicalizing the index list.
    pub fn push_raw(&mut self, raw: &[ModeIndex], coeff: ExactComplex) {
        let (state, _) = canonicalize(raw, self.statistics);
        self.add_term(state, coeff);
    }

    pub fn scale(&self, k: &ExactComplex) -> Self {
        let mut out = Self::zero(self.statistics);
        if k.is_zero() {
            return out;
        }
        for (s, c) in &self.terms {
            out.terms.insert(s.clone(), c * k);
        }
        out
    }

    pub fn try_add(&self, other: &FockVector) -> Result<FockVector> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &FockVector) -> Result<FockVector> {
        self.try_add(&-other)
    }

    pub(crate) fn check_same(&self, other: &FockVector) -> Result<()> {
        if self.statistics != other.statistics {
            return Err(Error::StatisticsMismatch {
                left: self.statistics,
                right: other.statistics,
            });
        }
        Ok(())
    }

    /// Applies `f` to every term and sums the results.
    pub(crate) fn map_terms<F>(&self, mut f: F) -> FockVector
    where
        F: FnMut(&OccupationState, &ExactComplex, &mut FockVector),
    {
        let mut out = Self::zero(self.statistics);
        for (s, c) in &self.terms {
            f(s, c, &mut out);
        }
        out
    }
}

impl Neg for &FockVector {
    type Output = FockVector;
    fn neg(self) -> FockVector {
        self.scale(&ExactComplex::from_integer(-1))
    }
}

/// Panics if the statistics differ; use [`FockVector::try_add`] otherwise.
impl Add for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        self.try_add(rhs)
            .expect("adding vectors of different statistics")
    }
}

/// Panics if the statistics differ; use [`FockVector::try_sub`] otherwise.
impl Sub for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        self.try_sub(rhs)
            .expect("subtracting vectors of different statistics")
    }
}

/// Renders in the state-expression grammar accepted by
/// [`parse_vector`](super::parse_vector); the zero vector renders as `0`.
impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (state, c)) in self.terms.iter().enumerate() {
            let negative_real = c.is_real() && c.re.is_negative();
            let pure_imag_negative = c.re.is_zero() && c.im.is_negative();
            let (sign, mag) = if negative_real || pure_imag_negative {
                ('-', -c)
            } else {
                ('+', c.clone())
            };
            if k == 0 {
                if sign == '-' {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag != ExactComplex::one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{state}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_pruned() {
        let mut v = FockVector::basis_ids(&[1, 2], Statistics::Fermion);
        v.push_raw(&[ModeIndex(2), ModeIndex(1)], ExactComplex::one());
        // |2,1) = -|1,2), so the sum cancels
        assert!(v.is_zero());
    }

    #[test]
    fn fermion_sign_is_absorbed() {
        let v = FockVector::basis_ids(&[2, 1], Statistics::Fermion);
        let key = OccupationState::from_ids(&[1, 2], Statistics::Fermion);
        assert_eq!(v.coefficient(&key), ExactComplex::from_integer(-1));
        assert!(v
            .terms()
            .all(|(k, _)| k.canonical_sign() == super::super::Sign::Plus));
    }

    #[test]
    fn vector_space_laws() {
        let stats = Statistics::Boson;
        let a = &FockVector::basis_ids(&[1], stats).scale(&ExactComplex::from_ratio(1, 2))
            + &FockVector::basis_ids(&[2, 2], stats);
        let b = FockVector::basis_ids(&[1], stats).scale(&ExactComplex::i());
        let g = ExactComplex::from_parts((2, 3), (-1, 1));
        let key = OccupationState::from_ids(&[1], stats);
        // (g * c)(f) = g (c(f)) and (c1 + c2)(f) = c1(f) + c2(f)
        assert_eq!(a.scale(&g).coefficient(&key), &g * &a.coefficient(&key));
        assert_eq!(
            (&a + &b).coefficient(&key),
            &a.coefficient(&key) + &b.coefficient(&key)
        );
        assert_eq!(&a + &FockVector::zero(stats), a);
    }

    #[test]
    fn mismatched_statistics_is_an_error() {
        let a = FockVector::basis_ids(&[1], Statistics::Boson);
        let b = FockVector::basis_ids(&[1], Statistics::Fermion);
        assert!(matches!(
            a.try_add(&b),
            Err(Error::StatisticsMismatch { .. })
        ));
    }

    #[test]
    fn display_uses_expression_grammar() {
        let stats = Statistics::Boson;
        let v = &(&FockVector::basis_ids(&[2, 1, 2], stats)
            .scale(&ExactComplex::from_parts((1, 2), (3, 1)))
            + &FockVector::basis_ids(&[3], stats))
            - &FockVector::vacuum(stats);
        assert_eq!(v.to_string(), "-|) + (1/2+3i)*|1,2,2) + |3)");
        assert_eq!(FockVector::zero(stats).to_string(), "0");
    }
}
