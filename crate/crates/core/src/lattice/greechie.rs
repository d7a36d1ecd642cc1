//! Orthomodular lattices pasted from Greechie diagrams.
//!
//! Each block of the diagram becomes a full Boolean algebra over its atoms.
//! Blocks are glued along shared atoms: a subset of the shared atoms names
//! the same element in both blocks, and so does its complement. The result
//! is checked, never repaired; diagrams with short loops fail here.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{verify_oml, Lattice};
use crate::error::{Error, Result};

/// Atoms per block beyond which the Boolean block is not materialized.
const MAX_BLOCK_ATOMS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreechieDiagram {
    pub atoms: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

impl GreechieDiagram {
    pub fn new<S: Into<String>>(atoms: Vec<S>, blocks: Vec<Vec<S>>) -> Result<Self> {
        let g = GreechieDiagram {
            atoms: atoms.into_iter().map(Into::into).collect(),
            blocks: blocks
                .into_iter()
                .map(|b| b.into_iter().map(Into::into).collect())
                .collect(),
        };
        g.validate()?;
        Ok(g)
    }

    /// Builds a diagram whose atoms are listed in order of first appearance.
    pub fn from_blocks<S: Into<String>>(blocks: Vec<Vec<S>>) -> Result<Self> {
        let blocks: Vec<Vec<String>> = blocks
            .into_iter()
            .map(|b| b.into_iter().map(Into::into).collect())
            .collect();
        let mut atoms: Vec<String> = Vec::new();
        for a in blocks.iter().flatten() {
            if !atoms.contains(a) {
                atoms.push(a.clone());
            }
        }
        GreechieDiagram::new(atoms, blocks)
    }

    pub fn validate(&self) -> Result<()> {
        self.block_indices().map(|_| ())
    }

    /// Blocks as sorted atom indices.
    pub(crate) fn block_indices(&self) -> Result<Vec<Vec<usize>>> {
        let mut index = BTreeMap::new();
        for (i, a) in self.atoms.iter().enumerate() {
            if index.insert(a.as_str(), i).is_some() {
                return Err(Error::InvalidDiagram(format!(
                    "atom `{a}` is declared twice"
                )));
            }
        }
        if self.blocks.is_empty() {
            return Err(Error::InvalidDiagram("diagram has no blocks".into()));
        }
        let mut out = Vec::with_capacity(self.blocks.len());
        for (k, block) in self.blocks.iter().enumerate() {
            let mut ids = Vec::with_capacity(block.len());
            for a in block {
                let &i = index.get(a.as_str()).ok_or_else(|| {
                    Error::InvalidDiagram(format!("block {k} uses undeclared atom `{a}`"))
                })?;
                ids.push(i);
            }
            ids.sort_unstable();
            if ids.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDiagram(format!("block {k} repeats an atom")));
            }
            if ids.len() < 2 {
                return Err(Error::InvalidDiagram(format!(
                    "block {k} has fewer than two atoms"
                )));
            }
            if ids.len() > MAX_BLOCK_ATOMS {
                return Err(Error::SizeExceeded {
                    size: ids.len(),
                    limit: MAX_BLOCK_ATOMS,
                });
            }
            out.push(ids);
        }
        for i in 0..out.len() {
            for j in i + 1..out.len() {
                if out[i] == out[j] {
                    return Err(Error::InvalidDiagram(format!(
                        "blocks {i} and {j} coincide"
                    )));
                }
                let shared = out[i].iter().filter(|a| out[j].contains(a)).count();
                if shared > 1 {
                    return Err(Error::InvalidDiagram(format!(
                        "blocks {i} and {j} share {shared} atoms"
                    )));
                }
            }
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if !out.iter().any(|b| b.contains(&i)) {
                return Err(Error::InvalidDiagram(format!("atom `{a}` is in no block")));
            }
        }
        Ok(out)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Element ordering key: bottom, atoms, atom complements, other elements by
/// first appearance, top.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Rank {
    Bottom,
    Atom(usize),
    Coatom(usize),
    Other(usize, u32),
    Top,
}

pub fn from_greechie(g: &GreechieDiagram) -> Result<Lattice> {
    let blocks = g.block_indices()?;
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0usize, |acc, b| {
            let o = *acc;
            *acc += 1 << b.len();
            Some(o)
        })
        .collect();
    let total = offsets.last().unwrap() + (1 << blocks.last().unwrap().len());
    let node = |k: usize, mask: u32| offsets[k] + mask as usize;
    let full = |k: usize| (1u32 << blocks[k].len()) - 1;
    let mask_of =
        |k: usize, atom: usize| 1u32 << blocks[k].iter().position(|&a| a == atom).unwrap();

    let mut uf = UnionFind((0..total).collect());
    for k in 1..blocks.len() {
        uf.union(node(0, 0), node(k, 0));
        uf.union(node(0, full(0)), node(k, full(k)));
    }
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            for &a in blocks[i].iter().filter(|a| blocks[j].contains(a)) {
                let (mi, mj) = (mask_of(i, a), mask_of(j, a));
                uf.union(node(i, mi), node(j, mj));
                uf.union(node(i, full(i) ^ mi), node(j, full(j) ^ mj));
            }
        }
    }

    let mut rank: BTreeMap<usize, Rank> = BTreeMap::new();
    for (k, b) in blocks.iter().enumerate() {
        for mask in 0..=full(k) {
            let r = match mask {
                0 => Rank::Bottom,
                m if m == full(k) => Rank::Top,
                m if m.count_ones() == 1 => Rank::Atom(b[m.trailing_zeros() as usize]),
                m if m.count_ones() == b.len() as u32 - 1 => {
                    Rank::Coatom(b[(full(k) ^ m).trailing_zeros() as usize])
                }
                m => Rank::Other(k, m),
            };
            let root = uf.find(node(k, mask));
            let e = rank.entry(root).or_insert(r);
            *e = (*e).min(r);
        }
    }
    for (k, b) in blocks.iter().enumerate() {
        for mask in 1..full(k) {
            if mask.count_ones() < 2 {
                continue;
            }
            if let Rank::Atom(a) = rank[&uf.find(node(k, mask))] {
                let joined: Vec<&str> = b
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| g.atoms[x].as_str())
                    .collect();
                return Err(Error::InvalidDiagram(format!(
                    "pasting forces atom `{}` to equal `{}`",
                    g.atoms[a],
                    joined.join("+")
                )));
            }
        }
    }
    let mut classes: Vec<(Rank, usize)> = rank.iter().map(|(&root, &r)| (r, root)).collect();
    classes.sort();
    let id_of: BTreeMap<usize, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, &(_, root))| (root, i))
        .collect();
    let n = classes.len();

    let mut elem = |k: usize, mask: u32| id_of[&uf.find(node(k, mask))];
    let mut leq = vec![vec![false; n]; n];
    let mut ortho: Vec<Option<usize>> = vec![None; n];
    let mut label: Vec<Option<String>> = vec![None; n];
    for (k, b) in blocks.iter().enumerate() {
        let members: Vec<usize> = (0..=full(k)).map(|m| elem(k, m)).collect();
        let mut distinct = members.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != members.len() {
            return Err(Error::NotOrthomodular(format!(
                "pasting identifies distinct elements of block {k}"
            )));
        }
        for s in 0..=full(k) {
            let comp = members[(full(k) ^ s) as usize];
            match ortho[members[s as usize]] {
                Some(c) if c != comp => {
                    return Err(Error::NotOrthomodular(format!(
                        "inconsistent complement in block {k}"
                    )))
                }
                _ => ortho[members[s as usize]] = Some(comp),
            }
            for t in 0..=full(k) {
                if s & t == s {
                    leq[members[s as usize]][members[t as usize]] = true;
                }
            }
            let slot = &mut label[members[s as usize]];
            if slot.is_none() {
                let atoms: Vec<&str> = b
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| s >> i & 1 == 1)
                    .map(|(_, &a)| g.atoms[a].as_str())
                    .collect();
                *slot = Some(atoms.join("+"));
            }
        }
    }

    let names: Vec<String> = classes
        .iter()
        .enumerate()
        .map(|(i, (r, _))| match *r {
            Rank::Bottom => "0".to_string(),
            Rank::Top => "1".to_string(),
            Rank::Atom(a) => g.atoms[a].clone(),
            Rank::Coatom(a) => format!("{}'", g.atoms[a]),
            Rank::Other(..) => label[i].clone().expect("every class has a label"),
        })
        .collect();
    let ortho: Vec<usize> = ortho
        .into_iter()
        .map(|o| o.expect("every class has a complement"))
        .collect();
    // The union of block orders must already be transitive.
    for a in 0..n {
        for b in 0..n {
            if leq[a][b] && (0..n).any(|c| leq[b][c] && !leq[a][c]) {
                return Err(Error::NotOrthomodular(format!(
                    "block orders do not compose at `{}` <= `{}`",
                    names[a], names[b]
                )));
            }
        }
    }
    let lattice = Lattice::from_order(names, leq, ortho)?;
    let report = verify_oml(&lattice);
    if let Some(v) = report.violations.first() {
        return Err(Error::NotOrthomodular(format!(
            "{} fails at ({})",
            v.law,
            v.elements.join(", ")
        )));
    }
    Ok(lattice)
}

/// Exactly-one-true-per-block search directly on the diagram. Blocks are
/// visited in diagram order and atoms in block order, so the first solution
/// prefers earlier atoms.
pub fn greechie_valuation_fast(g: &GreechieDiagram) -> Result<Option<Vec<(String, bool)>>> {
    g.validate()?;
    let index: BTreeMap<&str, usize> = g
        .atoms
        .iter()
        .enumerate()
        .map(|(i, a)| (a.as_str(), i))
        .collect();
    let blocks: Vec<Vec<usize>> = g
        .blocks
        .iter()
        .map(|b| b.iter().map(|a| index[a.as_str()]).collect())
        .collect();

    fn rec(blocks: &[Vec<usize>], j: usize, value: &mut Vec<Option<bool>>) -> bool {
        let Some(block) = blocks.get(j) else {
            return true;
        };
        let trues = block.iter().filter(|&&a| value[a] == Some(true)).count();
        if trues > 1 {
            return false;
        }
        let choices: Vec<usize> = if trues == 1 {
            block
                .iter()
                .copied()
                .filter(|&a| value[a] == Some(true))
                .collect()
        } else {
            block
                .iter()
                .copied()
                .filter(|&a| value[a].is_none())
                .collect()
        };
        for t in choices {
            let saved = value.clone();
            for &a in block {
                value[a] = Some(a == t);
            }
            if rec(blocks, j + 1, value) {
                return true;
            }
            *value = saved;
        }
        false
    }

    let mut value = vec![None; g.atoms.len()];
    Ok(rec(&blocks, 0, &mut value).then(|| {
        g.atoms
            .iter()
            .zip(value)
            .map(|(a, v)| (a.clone(), v.expect("every atom is in a block")))
            .collect()
    }))
}

/// Counting certificate for the absence of a valuation: when every atom lies
/// in exactly two blocks, a valuation marks one atom per block, so the
/// number of blocks is twice the number of true atoms. An odd block count
/// therefore rules valuations out.
pub fn parity_obstruction(g: &GreechieDiagram) -> bool {
    g.blocks.len() % 2 == 1
        && g.atoms
            .iter()
            .all(|a| g.blocks.iter().filter(|b| b.contains(a)).count() == 2)
}
