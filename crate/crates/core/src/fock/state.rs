use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// Label of a single-particle mode (an eigenvalue of the observable that
/// defines the occupation-number basis).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModeIndex(pub u32);

impl fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for ModeIndex {
    fn from(id: u32) -> Self {
        ModeIndex(id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Statistics {
    Boson,
    Fermion,
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistics::Boson => f.write_str("boson"),
            Statistics::Fermion => f.write_str("fermion"),
        }
    }
}

impl std::str::FromStr for Statistics {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "boson" => Ok(Statistics::Boson),
            "fermion" => Ok(Statistics::Fermion),
            other => Err(format!(
                "unknown statistics `{other}` (expected boson or fermion)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

/// A basis ket `|e1 e2 ... en)` in canonical form.
///
/// Modes are stored sorted non-decreasing. `canonical_sign` records the
/// sign picked up when the raw index list this state was built from was
/// sorted; it is always `Plus` for bosons.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccupationState {
    statistics: Statistics,
    modes: Vec<ModeIndex>,
    canonical_sign: Sign,
}

/// Sorts `raw` into canonical order and returns the state with the sign
/// relating the input ordering to the canonical one.
///
/// For fermions the sign is the parity of the number of strict inversions,
/// i.e. of the sorting permutation. A repeated mode is kept; such states
/// have null norm.
pub fn canonicalize(raw: &[ModeIndex], stats: Statistics) -> (OccupationState, Sign) {
    let sign = match stats {
        Statistics::Boson => Sign::Plus,
        Statistics::Fermion => Sign::from_parity(strict_inversions(raw) % 2 == 1),
    };
    let mut modes = raw.to_vec();
    modes.sort_unstable();
    (
        OccupationState {
            statistics: stats,
            modes,
            canonical_sign: sign,
        },
        sign,
    )
}

fn strict_inversions(seq: &[ModeIndex]) -> usize {
    let mut count = 0;
    for (i, a) in seq.iter().enumerate() {
        count += seq[i + 1..].iter().filter(|b| *b < a).count();
    }
    count
}

impl OccupationState {
    pub fn new(raw: &[ModeIndex], stats: Statistics) -> Self {
        canonicalize(raw, stats).0
    }

    pub fn from_ids(ids: &[u32], stats: Statistics) -> Self {
        let raw: Vec<ModeIndex> = ids.iter().copied().map(ModeIndex).collect();
        Self::new(&raw, stats)
    }

    pub fn vacuum(stats: Statistics) -> Self {
        OccupationState {
            statistics: stats,
            modes: Vec::new(),
            canonical_sign: Sign::Plus,
        }
    }

    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    pub fn modes(&self) -> &[ModeIndex] {
        &self.modes
    }

    pub fn canonical_sign(&self) -> Sign {
        self.canonical_sign
    }

    /// Same ket with the ordering sign dropped; this is the form used as a
    /// key in [`FockVector`](super::FockVector).
    pub fn unsigned(&self) -> OccupationState {
        OccupationState {
            canonical_sign: Sign::Plus,
            ..self.clone()
        }
    }

    pub fn particle_count(&self) -> usize {
        self.modes.len()
    }

    pub fn occupation(&self, mode: ModeIndex) -> usize {
        self.modes.iter().filter(|m| **m == mode).count()
    }

    /// `(mode, occupation)` pairs in increasing mode order.
    pub fn occupations(&self) -> Vec<(ModeIndex, usize)> {
        let mut out: Vec<(ModeIndex, usize)> = Vec::new();
        for &m in &self.modes {
            match out.last_mut() {
                Some((last, n)) if *last == m => *n += 1,
                _ => out.push((m, 1)),
            }
        }
        out
    }

    /// Distinct occupied modes.
    pub fn support(&self) -> Vec<ModeIndex> {
        self.occupations().into_iter().map(|(m, _)| m).collect()
    }

    pub fn has_repeated_mode(&self) -> bool {
        self.modes.windows(2).any(|w| w[0] == w[1])
    }

    /// A fermionic ket with some occupation >= 2 has null norm.
    pub fn is_null_basis(&self) -> bool {
        self.statistics == Statistics::Fermion && self.has_repeated_mode()
    }
}

impl fmt::Display for OccupationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for (k, m) in self.modes.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(")")
    }
}

/// All canonical `n`-particle kets over modes `0..n_modes`, in lexicographic
/// order of their mode sequences. Fermionic kets with repeated modes are
/// included only when `include_null` is set.
pub fn basis_states(
    n_particles: usize,
    n_modes: u32,
    stats: Statistics,
    include_null: bool,
) -> Vec<OccupationState> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n_particles);
    let strict = stats == Statistics::Fermion && !include_null;
    fn rec(
        start: u32,
        remaining: usize,
        n_modes: u32,
        strict: bool,
        current: &mut Vec<ModeIndex>,
        out: &mut Vec<Vec<ModeIndex>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for m in start..n_modes {
            current.push(ModeIndex(m));
            rec(
                if strict { m + 1 } else { m },
                remaining - 1,
                n_modes,
                strict,
                current,
                out,
            );
            current.pop();
        }
    }
    let mut seqs = Vec::new();
    rec(0, n_particles, n_modes, strict, &mut current, &mut seqs);
    out.extend(seqs.into_iter().map(|modes| OccupationState {
        statistics: stats,
        modes,
        canonical_sign: Sign::Plus,
    }));
    out
}

/// Canonical kets with `n_particles` particles whose set of occupied modes is
/// exactly `support` (each mode of `support` occupied at least once).
pub fn states_with_support(
    support: &[ModeIndex],
    n_particles: usize,
    stats: Statistics,
) -> Vec<OccupationState> {
    let k = support.len();
    if k > n_particles || (k == 0) != (n_particles == 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut extra = vec![0usize; k];
    // distribute the n - k surplus particles over the k modes
    fn rec(
        idx: usize,
        left: usize,
        extra: &mut [usize],
        support: &[ModeIndex],
        stats: Statistics,
        out: &mut Vec<OccupationState>,
    ) {
        if idx + 1 >= extra.len() {
            if let Some(last) = extra.last_mut() {
                *last = left;
            }
            let mut modes = Vec::new();
            for (m, e) in support.iter().zip(extra.iter()) {
                modes.extend(std::iter::repeat(*m).take(e + 1));
            }
            out.push(OccupationState {
                statistics: stats,
                modes,
                canonical_sign: Sign::Plus,
            });
            return;
        }
        for take in (0..=left).rev() {
            extra[idx] = take;
            rec(idx + 1, left - take, extra, support, stats, out);
        }
    }
    if k == 0 {
        return vec![OccupationState::vacuum(stats)];
    }
    rec(0, n_particles - k, &mut extra, support, stats, &mut out);
    out.sort();
    out
}
