//! Maximal Boolean subalgebras, found as maximal sets of pairwise
//! orthogonal atoms.

use serde::Serialize;

use super::{Element, Lattice};

/// Atoms beyond this count per block are not materialized.
const MAX_BLOCK_ATOMS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub atoms: Vec<Element>,
    /// Joins of all subsets of `atoms`, sorted.
    pub elements: Vec<Element>,
}

impl Block {
    pub fn contains(&self, e: Element) -> bool {
        self.elements.binary_search(&e).is_ok()
    }
}

/// Blocks of an atomic orthomodular lattice whose atom sets join to the top,
/// sorted by atom list.
pub fn blocks(l: &Lattice) -> Vec<Block> {
    let atoms = l.atoms();
    let n = atoms.len();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && l.orthogonal(atoms[i], atoms[j]))
                .collect()
        })
        .collect();
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, Vec::new(), (0..n).collect(), Vec::new(), &mut cliques);

    let mut out: Vec<Block> = cliques
        .into_iter()
        .map(|c| {
            let mut block_atoms: Vec<Element> = c.iter().map(|&i| atoms[i]).collect();
            block_atoms.sort_unstable();
            assert!(
                block_atoms.len() <= MAX_BLOCK_ATOMS,
                "block too large to enumerate"
            );
            let mut elements: Vec<Element> = (0..1u32 << block_atoms.len())
                .map(|mask| {
                    l.join_all(
                        block_atoms
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> i & 1 == 1)
                            .map(|(_, &a)| a),
                    )
                })
                .collect();
            elements.sort_unstable();
            elements.dedup();
            Block {
                atoms: block_atoms,
                elements,
            }
        })
        .collect();
    out.sort_by(|a, b| a.atoms.cmp(&b.atoms));
    out
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = *p
        .iter()
        .chain(x.iter())
        .max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count())
        .expect("p is non-empty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.retain(|&u| u != v);
        x.push(v);
    }
}
