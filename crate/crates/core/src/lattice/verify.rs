use serde::Serialize;

use super::{Element, Lattice};

/// Number of violations kept in a report; the rest are only counted.
const MAX_REPORTED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: &'static str,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmlReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub total_violations: usize,
}

struct Collector<'a> {
    l: &'a Lattice,
    violations: Vec<Violation>,
    total: usize,
}

impl Collector<'_> {
    fn check(&mut self, holds: bool, law: &'static str, elements: &[Element]) {
        if holds {
            return;
        }
        self.total += 1;
        if self.violations.len() < MAX_REPORTED {
            self.violations.push(Violation {
                law,
                elements: elements
                    .iter()
                    .map(|&e| self.l.name(e).to_string())
                    .collect(),
            });
        }
    }
}

/// Checks every orthomodular-lattice law by exhaustive enumeration.
pub fn verify_oml(l: &Lattice) -> OmlReport {
    let mut c = Collector {
        l,
        violations: Vec::new(),
        total: 0,
    };
    let (bot, top) = (l.bottom(), l.top());
    for a in l.elements() {
        c.check(l.leq(a, a), "reflexivity", &[a]);
        c.check(l.leq(bot, a) && l.leq(a, top), "bounds", &[a]);
        c.check(l.ortho(l.ortho(a)) == a, "involution", &[a]);
        c.check(l.meet(a, l.ortho(a)) == bot, "complement meet", &[a]);
        c.check(l.join(a, l.ortho(a)) == top, "complement join", &[a]);
    }
    for a in l.elements() {
        for b in l.elements() {
            let ab = l.leq(a, b);
            if a != b {
                c.check(!(ab && l.leq(b, a)), "antisymmetry", &[a, b]);
            }
            let m = l.meet(a, b);
            let j = l.join(a, b);
            c.check(l.leq(m, a) && l.leq(m, b), "meet is a lower bound", &[a, b]);
            c.check(
                l.leq(a, j) && l.leq(b, j),
                "join is an upper bound",
                &[a, b],
            );
            c.check(
                !ab || l.leq(l.ortho(b), l.ortho(a)),
                "order reversal",
                &[a, b],
            );
            if ab {
                let rhs = l.join(a, l.meet(b, l.ortho(a)));
                c.check(b == rhs, "orthomodular law", &[a, b]);
            }
            for x in l.elements() {
                if ab && l.leq(b, x) {
                    c.check(l.leq(a, x), "transitivity", &[a, b, x]);
                }
                if l.leq(x, a) && l.leq(x, b) {
                    c.check(l.leq(x, m), "meet is greatest", &[a, b, x]);
                }
                if l.leq(a, x) && l.leq(b, x) {
                    c.check(l.leq(j, x), "join is least", &[a, b, x]);
                }
            }
        }
    }
    OmlReport {
        ok: c.total == 0,
        violations: c.violations,
        total_violations: c.total,
    }
}

/// Whether `elems` contains the bounds and is closed under meet, join and
/// complement, with meets distributing over joins.
pub fn is_boolean_subalgebra(l: &Lattice, elems: &[Element]) -> bool {
    let mut member = vec![false; l.len()];
    for &e in elems {
        if e >= l.len() {
            return false;
        }
        member[e] = true;
    }
    if !member[l.bottom()] || !member[l.top()] {
        return false;
    }
    for &a in elems {
        if !member[l.ortho(a)] {
            return false;
        }
        for &b in elems {
            if !member[l.meet(a, b)] || !member[l.join(a, b)] {
                return false;
            }
            for &x in elems {
                if l.meet(a, l.join(b, x)) != l.join(l.meet(a, b), l.meet(a, x)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_distributive(l: &Lattice) -> bool {
    let all: Vec<Element> = l.elements().collect();
    is_boolean_subalgebra(l, &all)
}

/// Modular law: `a <= c` implies `a ∨ (b ∧ c) = (a ∨ b) ∧ c`.
pub fn is_modular(l: &Lattice) -> bool {
    l.elements().all(|a| {
        l.elements().all(|c| {
            !l.leq(a, c)
                || l.elements()
                    .all(|b| l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), c))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean_lattice, mo};

    /// The benzene ring O6: an ortholattice that is not orthomodular.
    fn benzene() -> Lattice {
        // 0, a, b, b', a', 1 with a < b and b' < a'
        let names: Vec<String> = ["0", "a", "b", "b'", "a'", "1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let n = 6;
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
            leq[0][i] = true;
            leq[i][5] = true;
        }
        leq[1][2] = true;
        leq[3][4] = true;
        Lattice::from_order(names, leq, vec![5, 4, 3, 2, 1, 0]).unwrap()
    }

    #[test]
    fn benzene_fails_only_orthomodularity() {
        let r = verify_oml(&benzene());
        assert!(!r.ok);
        assert!(r.violations.iter().all(|v| v.law == "orthomodular law"));
        assert_eq!(r.violations[0].elements, vec!["a", "b"]);
    }

    #[test]
    fn corrupted_tables_are_caught() {
        let b = boolean_lattice(2).unwrap();
        let n = b.len();
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|x| (0..n).map(|y| b.leq(x, y)).collect())
            .collect();
        let meet: Vec<Vec<Element>> = (0..n)
            .map(|x| (0..n).map(|y| b.meet(x, y)).collect())
            .collect();
        let join: Vec<Vec<Element>> = (0..n)
            .map(|x| (0..n).map(|y| b.join(x, y)).collect())
            .collect();
        // a' := a
        let mut ortho: Vec<Element> = (0..n).map(|x| b.ortho(x)).collect();
        ortho[1] = 1;
        let bad = Lattice::from_tables(b.names().to_vec(), leq, meet, join, ortho, 0, 3).unwrap();
        let r = verify_oml(&bad);
        assert!(!r.ok);
        assert!(r.violations.iter().any(|v| v.law == "involution"));
    }

    #[test]
    fn modularity_diagnostics() {
        assert!(is_modular(&mo(3).unwrap()));
        assert!(!is_distributive(&mo(3).unwrap()));
        assert!(!is_modular(&benzene()));
        assert!(is_distributive(&boolean_lattice(3).unwrap()));
    }
}
