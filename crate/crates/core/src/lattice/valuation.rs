//! Two-valued homomorphisms on blocks and their consistent families.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{blocks, Block, Element, Lattice};

/// A map from a subset of the lattice into `{false, true}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BooleanHomomorphism {
    pub values: BTreeMap<Element, bool>,
}

impl BooleanHomomorphism {
    /// The homomorphism on a block that sends exactly the elements above
    /// `atom` to true.
    pub fn from_atom(l: &Lattice, block: &Block, atom: Element) -> Self {
        BooleanHomomorphism {
            values: block
                .elements
                .iter()
                .map(|&e| (e, l.leq(atom, e)))
                .collect(),
        }
    }

    pub fn value(&self, e: Element) -> Option<bool> {
        self.values.get(&e).copied()
    }

    /// Checks bounds and preservation of meet, join and complement wherever
    /// both sides lie in the domain.
    pub fn verify(&self, l: &Lattice) -> bool {
        if self.value(l.bottom()) == Some(true) || self.value(l.top()) == Some(false) {
            return false;
        }
        self.values.iter().all(|(&a, &va)| {
            self.value(l.ortho(a)).is_none_or(|v| v == !va)
                && self.values.iter().all(|(&b, &vb)| {
                    self.value(l.meet(a, b)).is_none_or(|v| v == (va && vb))
                        && self.value(l.join(a, b)).is_none_or(|v| v == (va || vb))
                })
        })
    }
}

/// One atom chosen per block such that the induced block homomorphisms
/// agree on every shared element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalValuation {
    pub blocks: Vec<Block>,
    pub chosen: Vec<Element>,
}

impl GlobalValuation {
    pub fn per_block(&self, l: &Lattice) -> Vec<BooleanHomomorphism> {
        self.blocks
            .iter()
            .zip(&self.chosen)
            .map(|(b, &a)| BooleanHomomorphism::from_atom(l, b, a))
            .collect()
    }

    /// Value of `e` read off any block containing it.
    pub fn value(&self, l: &Lattice, e: Element) -> Option<bool> {
        self.blocks
            .iter()
            .zip(&self.chosen)
            .find(|(b, _)| b.contains(e))
            .map(|(_, &a)| l.leq(a, e))
    }

    /// Each block map is a homomorphism and all of them agree on overlaps.
    pub fn verify(&self, l: &Lattice) -> bool {
        let homs = self.per_block(l);
        if !homs.iter().all(|h| h.verify(l)) {
            return false;
        }
        let mut seen: BTreeMap<Element, bool> = BTreeMap::new();
        for h in &homs {
            for (&e, &v) in &h.values {
                if *seen.entry(e).or_insert(v) != v {
                    return false;
                }
            }
        }
        true
    }

    pub fn true_atoms(&self) -> Vec<Element> {
        let mut v = self.chosen.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

pub fn exists_global_valuation(l: &Lattice) -> Option<GlobalValuation> {
    search_valuation(l, &blocks(l), &vec![None; l.len()])
}

/// Backtracking over atom choices, block by block. `forced[e]`, when set,
/// fixes the value every block containing `e` must give it.
pub(crate) fn search_valuation(
    l: &Lattice,
    blocks: &[Block],
    forced: &[Option<bool>],
) -> Option<GlobalValuation> {
    // Elements each block shares with an earlier one.
    let shared: Vec<Vec<(usize, Vec<Element>)>> = blocks
        .iter()
        .enumerate()
        .map(|(j, bj)| {
            blocks[..j]
                .iter()
                .enumerate()
                .filter_map(|(i, bi)| {
                    let common: Vec<Element> = bj
                        .elements
                        .iter()
                        .copied()
                        .filter(|&e| e != l.bottom() && e != l.top() && bi.contains(e))
                        .collect();
                    (!common.is_empty()).then_some((i, common))
                })
                .collect()
        })
        .collect();
    let candidates: Vec<Vec<Element>> = blocks
        .iter()
        .map(|b| {
            b.atoms
                .iter()
                .copied()
                .filter(|&a| {
                    b.elements
                        .iter()
                        .all(|&e| forced[e].is_none_or(|v| v == l.leq(a, e)))
                })
                .collect()
        })
        .collect();

    fn rec(
        l: &Lattice,
        j: usize,
        shared: &[Vec<(usize, Vec<Element>)>],
        candidates: &[Vec<Element>],
        chosen: &mut Vec<Element>,
    ) -> bool {
        if j == candidates.len() {
            return true;
        }
        for &a in &candidates[j] {
            let consistent = shared[j]
                .iter()
                .all(|(i, common)| common.iter().all(|&e| l.leq(a, e) == l.leq(chosen[*i], e)));
            if consistent {
                chosen.push(a);
                if rec(l, j + 1, shared, candidates, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::with_capacity(blocks.len());
    rec(l, 0, &shared, &candidates, &mut chosen).then(|| GlobalValuation {
        blocks: blocks.to_vec(),
        chosen,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean_lattice, chain2, mo, product};

    #[test]
    fn small_lattices_have_valuations() {
        for l in [boolean_lattice(3).unwrap(), mo(3).unwrap(), chain2()] {
            let v = exists_global_valuation(&l).expect("valuation");
            assert!(v.verify(&l));
            assert_eq!(v.value(&l, l.top()), Some(true));
            assert_eq!(v.value(&l, l.bottom()), Some(false));
        }
    }

    #[test]
    fn forced_values_are_respected() {
        let p = product(&chain2(), &mo(2).unwrap()).unwrap();
        let bs = blocks(&p);
        let z = p.element("(1,0)").unwrap();
        let mut forced = vec![None; p.len()];
        forced[z] = Some(false);
        let v = search_valuation(&p, &bs, &forced).unwrap();
        assert_eq!(v.value(&p, z), Some(false));
        assert!(v.verify(&p));
        forced[p.ortho(z)] = Some(false);
        assert!(search_valuation(&p, &bs, &forced).is_none());
    }

    #[test]
    fn broken_homomorphism_is_detected() {
        let b = boolean_lattice(2).unwrap();
        let bs = blocks(&b);
        let mut h = BooleanHomomorphism::from_atom(&b, &bs[0], 1);
        assert!(h.verify(&b));
        h.values.insert(2, true);
        assert!(!h.verify(&b));
    }
}
