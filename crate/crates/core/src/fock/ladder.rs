//! Single-mode creation, annihilation and number operators.
//!
//! Creation prepends a mode to each ket with no normalization factor.
//! Annihilation is the formal adjoint of creation under the scalar product
//! of the vector's statistics, which fixes its form:
//!
//! * boson: `a_m |..)` is `n_m` times the ket with one `m` removed;
//! * fermion: `c_m` removes `m` with sign `(-1)^k`, `k` the number of modes
//!   before it; null-norm kets are sent to zero, as any image of a null
//!   vector under an adjoint must itself be null.

use super::state::{ModeIndex, Statistics};
use super::vector::FockVector;

pub fn create(mode: ModeIndex, v: &FockVector) -> FockVector {
    v.map_terms(|key, c, out| {
        let mut raw = Vec::with_capacity(key.particle_count() + 1);
        raw.push(mode);
        raw.extend_from_slice(key.modes());
        out.push_raw(&raw, c.clone());
    })
}

pub fn annihilate(mode: ModeIndex, v: &FockVector) -> FockVector {
    let stats = v.statistics();
    v.map_terms(|key, c, out| {
        let Some(pos) = key.modes().iter().position(|m| *m == mode) else {
            return;
        };
        let mut rest = key.modes().to_vec();
        rest.remove(pos);
        let coeff = match stats {
            Statistics::Boson => c.scale(key.occupation(mode) as i64),
            Statistics::Fermion if key.has_repeated_mode() => return,
            Statistics::Fermion if pos % 2 == 1 => -c,
            Statistics::Fermion => c.clone(),
        };
        out.push_raw(&rest, coeff);
    })
}

/// Scales each ket by its occupation of `mode`.
pub fn number_operator(mode: ModeIndex, v: &FockVector) -> FockVector {
    v.map_terms(|key, c, out| {
        let n = key.occupation(mode);
        if n > 0 {
            out.add_term(key.clone(), c.scale(n as i64));
        }
    })
}

/// `a_i a+_j - a+_j a_i` applied to `v`.
pub fn commutator(i: ModeIndex, j: ModeIndex, v: &FockVector) -> FockVector {
    let lhs = annihilate(i, &create(j, v));
    let rhs = create(j, &annihilate(i, v));
    &lhs - &rhs
}

/// `c_i c+_j + c+_j c_i` applied to `v`.
pub fn anticommutator(i: ModeIndex, j: ModeIndex, v: &FockVector) -> FockVector {
    let lhs = annihilate(i, &create(j, v));
    let rhs = create(j, &annihilate(i, v));
    &lhs + &rhs
}

/// `delta_ij * v`.
pub fn kronecker(i: ModeIndex, j: ModeIndex, v: &FockVector) -> FockVector {
    if i == j {
        v.clone()
    } else {
        FockVector::zero(v.statistics())
    }
}
