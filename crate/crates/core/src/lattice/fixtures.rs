//! Named lattices and diagrams used by tests, benchmarks and the CLI.

use super::{boolean_lattice, chain2, from_greechie, mo, product, GreechieDiagram, Lattice};
use crate::error::{Error, Result};

/// Eighteen atoms in nine four-atom blocks, every atom in exactly two blocks.
const P9_BLOCKS: [[usize; 4]; 9] = [
    [1, 2, 8, 15],
    [1, 6, 10, 13],
    [3, 7, 9, 15],
    [5, 9, 10, 17],
    [2, 6, 11, 12],
    [4, 7, 11, 17],
    [3, 8, 14, 16],
    [0, 5, 13, 14],
    [0, 4, 12, 16],
];

/// A cubic-like graph on 13 vertices with girth 5, one vertex of degree 4.
/// Vertices become blocks and edges become atoms, so every atom lies in two
/// blocks and the block count is odd.
const ODD13_EDGES: [(usize, usize); 20] = [
    (0, 8),
    (0, 9),
    (0, 11),
    (1, 2),
    (1, 8),
    (1, 12),
    (2, 3),
    (2, 11),
    (3, 4),
    (3, 5),
    (4, 6),
    (4, 7),
    (4, 8),
    (5, 9),
    (5, 10),
    (6, 9),
    (6, 12),
    (7, 10),
    (7, 11),
    (10, 12),
];

pub fn p9() -> GreechieDiagram {
    let atoms: Vec<String> = (1..=18).map(|i| format!("v{i:02}")).collect();
    let blocks = P9_BLOCKS
        .iter()
        .map(|b| b.iter().map(|&i| atoms[i].clone()).collect())
        .collect();
    GreechieDiagram::new(atoms, blocks).expect("valid fixture")
}

pub fn odd13() -> GreechieDiagram {
    let atoms: Vec<String> = (1..=ODD13_EDGES.len())
        .map(|i| format!("x{i:02}"))
        .collect();
    let blocks = (0..13)
        .map(|v| {
            ODD13_EDGES
                .iter()
                .enumerate()
                .filter(|(_, &(p, q))| p == v || q == v)
                .map(|(i, _)| atoms[i].clone())
                .collect()
        })
        .collect();
    GreechieDiagram::new(atoms, blocks).expect("valid fixture")
}

pub fn two_block() -> GreechieDiagram {
    GreechieDiagram::from_blocks(vec![vec!["a", "b", "c"], vec!["c", "d", "e"]])
        .expect("valid fixture")
}

pub fn three_block() -> GreechieDiagram {
    GreechieDiagram::from_blocks(vec![
        vec!["a", "b", "c"],
        vec!["c", "d", "e"],
        vec!["e", "f", "g"],
    ])
    .expect("valid fixture")
}

/// A built-in addressed by name.
#[derive(Clone, Debug)]
pub enum Fixture {
    Lattice(Lattice),
    Diagram(GreechieDiagram),
}

/// Names accepted by [`builtin`], excluding the parametrized families
/// `boolean<n>`, `mo<n>` and `chain2x<name>`.
pub const NAMED: [&str; 5] = ["chain2", "two-block", "three-block", "p9", "odd13"];

/// Resolves `chain2`, `boolean<n>`, `mo<n>`, `two-block`, `three-block`,
/// `p9`, `odd13` and `chain2x<name>` (product of the chain with a lattice).
pub fn builtin(name: &str) -> Result<Fixture> {
    let unknown = || Error::UnknownElement(format!("builtin:{name}"));
    let size = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    Ok(match name {
        "chain2" => Fixture::Lattice(chain2()),
        "two-block" => Fixture::Diagram(two_block()),
        "three-block" => Fixture::Diagram(three_block()),
        "p9" => Fixture::Diagram(p9()),
        "odd13" => Fixture::Diagram(odd13()),
        _ => {
            if let Some(n) = name.strip_prefix("boolean") {
                Fixture::Lattice(boolean_lattice(size(n)?)?)
            } else if let Some(n) = name.strip_prefix("mo") {
                Fixture::Lattice(mo(size(n)?)?)
            } else if let Some(inner) = name.strip_prefix("chain2x") {
                let l = match builtin(inner)? {
                    Fixture::Lattice(l) => l,
                    Fixture::Diagram(g) => from_greechie(&g)?,
                };
                Fixture::Lattice(product(&chain2(), &l)?)
            } else {
                return Err(unknown());
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::parity_obstruction;

    #[test]
    fn parity_fixtures_are_double_covers() {
        for g in [p9(), odd13()] {
            assert!(parity_obstruction(&g));
        }
        assert_eq!(p9().blocks.len(), 9);
        assert!(p9().blocks.iter().all(|b| b.len() == 4));
        assert_eq!(odd13().blocks.len(), 13);
    }

    #[test]
    fn builtins_resolve() {
        assert!(matches!(builtin("boolean3"), Ok(Fixture::Lattice(l)) if l.len() == 8));
        assert!(matches!(builtin("mo4"), Ok(Fixture::Lattice(l)) if l.len() == 10));
        assert!(matches!(builtin("chain2xmo2"), Ok(Fixture::Lattice(l)) if l.len() == 12));
        assert!(matches!(builtin("p9"), Ok(Fixture::Diagram(_))));
        assert!(builtin("nope").is_err());
        assert!(builtin("boolean9").is_err());
    }
}
