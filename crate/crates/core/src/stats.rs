//! Counting and listing the ways `n` particles can occupy `k` cells under
//! Maxwell-Boltzmann, Bose-Einstein and Fermi-Dirac statistics.

use std::fmt;
use std::str::FromStr;

use num::{BigUint, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CountingStatistics {
    MaxwellBoltzmann,
    BoseEinstein,
    FermiDirac,
}

impl CountingStatistics {
    pub const ALL: [CountingStatistics; 3] = [
        CountingStatistics::MaxwellBoltzmann,
        CountingStatistics::BoseEinstein,
        CountingStatistics::FermiDirac,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            CountingStatistics::MaxwellBoltzmann => "mb",
            CountingStatistics::BoseEinstein => "be",
            CountingStatistics::FermiDirac => "fd",
        }
    }
}

impl fmt::Display for CountingStatistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for CountingStatistics {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "mb" => Ok(CountingStatistics::MaxwellBoltzmann),
            "be" => Ok(CountingStatistics::BoseEinstein),
            "fd" => Ok(CountingStatistics::FermiDirac),
            other => Err(format!(
                "unknown statistics `{other}` (expected mb, be or fd)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountingProblem {
    pub n_particles: usize,
    pub n_cells: usize,
    pub statistics: CountingStatistics,
}

impl CountingProblem {
    pub fn new(n_particles: usize, n_cells: usize, statistics: CountingStatistics) -> Self {
        CountingProblem {
            n_particles,
            n_cells,
            statistics,
        }
    }

    /// Fermi-Dirac placements exist only when no cell must hold two particles.
    pub fn is_feasible(&self) -> bool {
        match self.statistics {
            CountingStatistics::FermiDirac => self.n_particles <= self.n_cells,
            _ => self.n_cells > 0 || self.n_particles == 0,
        }
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn count_arrangements(p: &CountingProblem) -> BigUint {
    let (n, k) = (p.n_particles, p.n_cells);
    match p.statistics {
        CountingStatistics::MaxwellBoltzmann => BigUint::from(k).pow(n as u32),
        CountingStatistics::BoseEinstein if k == 0 => {
            if n == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        }
        CountingStatistics::BoseEinstein => binomial(n + k - 1, n),
        CountingStatistics::FermiDirac => binomial(k, n),
    }
}

/// One arrangement: cell occupations, plus the particle-to-cell map for the
/// labeled (Maxwell-Boltzmann) case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrangement {
    pub occupation: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Vec<usize>>,
}

fn occupation_of(cells: &[usize], n_cells: usize) -> Vec<usize> {
    let mut occ = vec![0; n_cells];
    for &c in cells {
        occ[c] += 1;
    }
    occ
}

/// Lists every arrangement counted by [`count_arrangements`].
///
/// Bose-Einstein and Fermi-Dirac entries are ordered by their sorted cell
/// lists (so `(2,0)` precedes `(1,1)` precedes `(0,2)`); Maxwell-Boltzmann
/// entries by the assignment tuple.
pub fn enumerate_arrangements(p: &CountingProblem, cap: u64) -> Result<Vec<Arrangement>> {
    let count = count_arrangements(p);
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            count: count.to_string(),
            cap,
        });
    }
    let expected = count.to_usize().expect("bounded by cap");
    let (n, k) = (p.n_particles, p.n_cells);
    let mut out = Vec::with_capacity(expected);
    let mut cells = Vec::with_capacity(n);

    fn rec<F: FnMut(&[usize])>(
        cells: &mut Vec<usize>,
        n: usize,
        k: usize,
        next_start: &dyn Fn(usize) -> usize,
        first: usize,
        emit: &mut F,
    ) {
        if cells.len() == n {
            emit(cells);
            return;
        }
        for c in first..k {
            cells.push(c);
            rec(cells, n, k, next_start, next_start(c), emit);
            cells.pop();
        }
    }

    match p.statistics {
        CountingStatistics::MaxwellBoltzmann => {
            rec(&mut cells, n, k, &|_| 0, 0, &mut |cs| {
                out.push(Arrangement {
                    occupation: occupation_of(cs, k),
                    assignment: Some(cs.to_vec()),
                })
            });
        }
        CountingStatistics::BoseEinstein => {
            rec(&mut cells, n, k, &|c| c, 0, &mut |cs| {
                out.push(Arrangement {
                    occupation: occupation_of(cs, k),
                    assignment: None,
                })
            });
        }
        CountingStatistics::FermiDirac => {
            rec(&mut cells, n, k, &|c| c + 1, 0, &mut |cs| {
                out.push(Arrangement {
                    occupation: occupation_of(cs, k),
                    assignment: None,
                })
            });
        }
    }
    debug_assert_eq!(out.len(), expected);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use CountingStatistics::*;

    fn count(n: usize, k: usize, s: CountingStatistics) -> u64 {
        count_arrangements(&CountingProblem::new(n, k, s))
            .to_u64()
            .unwrap()
    }

    #[test]
    fn two_particles_two_boxes() {
        assert_eq!(count(2, 2, MaxwellBoltzmann), 4);
        assert_eq!(count(2, 2, BoseEinstein), 3);
        assert_eq!(count(2, 2, FermiDirac), 1);
    }

    #[test]
    fn enumeration_examples() {
        let be =
            enumerate_arrangements(&CountingProblem::new(2, 2, BoseEinstein), DEFAULT_CAP).unwrap();
        let occ: Vec<Vec<usize>> = be.into_iter().map(|a| a.occupation).collect();
        assert_eq!(occ, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);

        let fd =
            enumerate_arrangements(&CountingProblem::new(2, 2, FermiDirac), DEFAULT_CAP).unwrap();
        assert_eq!(fd.len(), 1);
        assert_eq!(fd[0].occupation, vec![1, 1]);

        for s in CountingStatistics::ALL {
            let v = enumerate_arrangements(&CountingProblem::new(0, 3, s), DEFAULT_CAP).unwrap();
            assert_eq!(v.len(), 1);
            assert_eq!(v[0].occupation, vec![0, 0, 0]);
        }

        let mb = enumerate_arrangements(&CountingProblem::new(2, 2, MaxwellBoltzmann), DEFAULT_CAP)
            .unwrap();
        let maps: Vec<Vec<usize>> = mb.into_iter().map(|a| a.assignment.unwrap()).collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn infeasible_and_capped() {
        assert_eq!(count(3, 2, FermiDirac), 0);
        assert!(!CountingProblem::new(3, 2, FermiDirac).is_feasible());
        assert!(
            enumerate_arrangements(&CountingProblem::new(3, 2, FermiDirac), 10)
                .unwrap()
                .is_empty()
        );
        let err = enumerate_arrangements(&CountingProblem::new(10, 10, MaxwellBoltzmann), 1000);
        assert!(matches!(err, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn parse_short_names() {
        for s in CountingStatistics::ALL {
            assert_eq!(s.short_name().parse::<CountingStatistics>().unwrap(), s);
        }
        assert!("xx".parse::<CountingStatistics>().is_err());
    }
}
