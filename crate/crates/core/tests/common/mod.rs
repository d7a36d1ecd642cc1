//! Brute-force reference computations shared by the integration tests.
//! Each one follows a definition literally and avoids the library's
//! shortcuts.

#![allow(dead_code)]

use std::collections::BTreeSet;

use qset_core::lattice::{Element, GreechieDiagram, Lattice};
use qset_core::stats::CountingStatistics;
use qset_core::ModeIndex;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Parity of a permutation from its cycle decomposition: odd when the
/// number of even-length cycles is odd.
pub fn is_odd(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut even_cycles = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            even_cycles += 1;
        }
    }
    even_cycles % 2 == 1
}

/// `sum_p prod_i delta(a_i, b_p(i))`, optionally weighted by `sgn p`.
fn delta_sum(a: &[ModeIndex], b: &[ModeIndex], signed: bool) -> i64 {
    if a.len() != b.len() {
        return 0;
    }
    permutations(a.len())
        .iter()
        .filter(|p| (0..a.len()).all(|i| a[i] == b[p[i]]))
        .map(|p| if signed && is_odd(p) { -1 } else { 1 })
        .sum()
}

pub fn delta_permanent(a: &[ModeIndex], b: &[ModeIndex]) -> i64 {
    delta_sum(a, b, false)
}

pub fn delta_determinant(a: &[ModeIndex], b: &[ModeIndex]) -> i64 {
    delta_sum(a, b, true)
}

/// Counts arrangements by listing all `k^n` particle-to-cell maps and
/// identifying those the statistics cannot tell apart.
pub fn brute_count(n: usize, k: usize, stats: CountingStatistics) -> usize {
    let mut maps: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        maps = maps
            .into_iter()
            .flat_map(|m| {
                (0..k).map(move |c| {
                    let mut m = m.clone();
                    m.push(c);
                    m
                })
            })
            .collect();
    }
    match stats {
        CountingStatistics::MaxwellBoltzmann => maps.len(),
        CountingStatistics::BoseEinstein => maps
            .into_iter()
            .map(|mut m| {
                m.sort();
                m
            })
            .collect::<BTreeSet<_>>()
            .len(),
        CountingStatistics::FermiDirac => maps
            .into_iter()
            .filter(|m| m.iter().collect::<BTreeSet<_>>().len() == m.len())
            .map(|mut m| {
                m.sort();
                m
            })
            .collect::<BTreeSet<_>>()
            .len(),
    }
}

/// Central elements found as those commuting with every element.
pub fn brute_center(l: &Lattice) -> Vec<Element> {
    l.elements()
        .filter(|&z| l.elements().all(|x| l.commutes(z, x)))
        .collect()
}

/// Whether some choice of one atom per block is consistent, i.e. every atom
/// is chosen in all of its blocks or in none. Exhaustive odometer over all
/// choice vectors.
pub fn brute_diagram_valuation(g: &GreechieDiagram) -> bool {
    let sizes: Vec<usize> = g.blocks.iter().map(|b| b.len()).collect();
    let mut choice = vec![0usize; sizes.len()];
    loop {
        let chosen: Vec<&String> = g.blocks.iter().zip(&choice).map(|(b, &i)| &b[i]).collect();
        let consistent = g.blocks.iter().zip(&choice).all(|(b, &i)| {
            b.iter()
                .enumerate()
                .all(|(j, a)| j == i || !chosen.contains(&a))
        });
        if consistent {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == sizes.len() {
                return false;
            }
            choice[pos] += 1;
            if choice[pos] < sizes[pos] {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}
