//! Reference construction in the labeled tensor-product space.
//!
//! Particles carry slot labels here; a many-particle ket is an explicit
//! (anti)symmetrized sum over all slot permutations. Nothing in this module
//! calls into the occupation-number kernel except to read the mode list of
//! an [`OccupationState`] and to evaluate the product being compared.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fock::{self, FockVector, ModeIndex, OccupationState, Statistics};
use crate::scalar::ExactComplex;

/// Finite combination of labeled product kets `|m_1> (x) ... (x) |m_n>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledVector {
    n_particles: usize,
    terms: BTreeMap<Vec<ModeIndex>, ExactComplex>,
}

impl LabeledVector {
    pub fn zero(n_particles: usize) -> Self {
        LabeledVector {
            n_particles,
            terms: BTreeMap::new(),
        }
    }

    pub fn n_particles(&self) -> usize {
        self.n_particles
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<ModeIndex>, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, slots: &[ModeIndex]) -> ExactComplex {
        self.terms
            .get(slots)
            .cloned()
            .unwrap_or_else(ExactComplex::zero)
    }

    /// Adds `coeff` to the coefficient of the product ket `slots`. Panics if
    /// the length differs from the particle number.
    pub fn add(&mut self, slots: Vec<ModeIndex>, coeff: &ExactComplex) {
        assert_eq!(slots.len(), self.n_particles);
        let entry = self.terms.entry(slots).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, k: &ExactComplex) -> LabeledVector {
        let mut out = LabeledVector::zero(self.n_particles);
        for (s, c) in &self.terms {
            out.add(s.clone(), &(c * k));
        }
        out
    }
}

/// All permutations of `0..n` paired with their sign, Heap's algorithm.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![(perm.clone(), 1)];
    let mut sign = 1;
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            out.push((perm.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `sum_p s(p) |modes[p(1)]> (x) ... (x) |modes[p(n)]>` over all `n!` slot
/// permutations, unnormalized; `s(p)` is the permutation sign for fermions
/// and 1 for bosons.
pub fn symmetrize_sequence(modes: &[ModeIndex], stats: Statistics) -> LabeledVector {
    let mut out = LabeledVector::zero(modes.len());
    for (perm, sign) in permutations(modes.len()) {
        let slots: Vec<ModeIndex> = perm.iter().map(|&k| modes[k]).collect();
        let weight = match stats {
            Statistics::Boson => 1,
            Statistics::Fermion => sign,
        };
        out.add(slots, &ExactComplex::from_integer(weight));
    }
    out
}

/// Symmetrized image of a ket, carrying the ket's ordering sign.
pub fn symmetrize(state: &OccupationState) -> LabeledVector {
    symmetrize_sequence(state.modes(), state.statistics())
        .scale(&ExactComplex::from_integer(state.canonical_sign().as_i64()))
}

/// Product-basis scalar product, conjugate-linear on the left. Kets with
/// different particle numbers are orthogonal.
pub fn labeled_inner(u: &LabeledVector, v: &LabeledVector) -> ExactComplex {
    if u.n_particles != v.n_particles {
        return ExactComplex::zero();
    }
    u.terms
        .iter()
        .filter_map(|(slots, cu)| v.terms.get(slots).map(|cv| &cu.conj() * cv))
        .sum()
}

/// Side-by-side evaluation of the occupation-number product and the labeled
/// product of the symmetrized images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerComparison {
    pub vq: ExactComplex,
    pub labeled: ExactComplex,
    /// Sector constant `n!` relating the two unnormalized products.
    pub factor: u64,
    pub ratio_ok: bool,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn compare_inner(a: &OccupationState, b: &OccupationState) -> Result<InnerComparison> {
    if a.statistics() != b.statistics() {
        return Err(Error::StatisticsMismatch {
            left: a.statistics(),
            right: b.statistics(),
        });
    }
    if a.particle_count() != b.particle_count() {
        return Err(Error::SectorMismatch {
            left: a.particle_count(),
            right: b.particle_count(),
        });
    }
    let stats = a.statistics();
    let vq = fock::inner(
        &FockVector::from_state(a),
        &FockVector::from_state(b),
        stats,
    )?;
    let labeled = labeled_inner(&symmetrize(a), &symmetrize(b));
    let factor = factorial(a.particle_count());
    let ratio_ok = labeled == vq.scale(factor as i64);
    Ok(InnerComparison {
        vq,
        labeled,
        factor,
        ratio_ok,
    })
}

/// Outcome of comparing every same-sector pair of kets up to a cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonSummary {
    pub statistics: Statistics,
    pub pairs_checked: usize,
    pub failures: Vec<(OccupationState, OccupationState)>,
}

impl ComparisonSummary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`compare_inner`] over all canonical pairs (null kets included) with
/// up to `max_particles` particles over `max_modes` modes.
pub fn compare_all(max_particles: usize, max_modes: u32, stats: Statistics) -> ComparisonSummary {
    let mut summary = ComparisonSummary {
        statistics: stats,
        pairs_checked: 0,
        failures: Vec::new(),
    };
    for n in 0..=max_particles {
        let kets = fock::basis_states(n, max_modes, stats, true);
        for a in &kets {
            for b in &kets {
                summary.pairs_checked += 1;
                let ok = compare_inner(a, b).map(|r| r.ratio_ok).unwrap_or(false);
                if !ok {
                    summary.failures.push((a.clone(), b.clone()));
                }
            }
        }
    }
    summary
}
