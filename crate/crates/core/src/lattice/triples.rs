//! Distributive triples and the center.

use super::{Element, Lattice};
use crate::error::Result;

#[inline]
fn d_raw(l: &Lattice, a: Element, b: Element, c: Element) -> bool {
    l.meet(l.join(a, b), c) == l.join(l.meet(a, c), l.meet(b, c))
}

#[inline]
fn dstar_raw(l: &Lattice, a: Element, b: Element, c: Element) -> bool {
    l.join(l.meet(a, b), c) == l.meet(l.join(a, c), l.join(b, c))
}

fn t_raw(l: &Lattice, a: Element, b: Element, c: Element) -> bool {
    [
        (a, b, c),
        (a, c, b),
        (b, a, c),
        (b, c, a),
        (c, a, b),
        (c, b, a),
    ]
    .iter()
    .all(|&(x, y, z)| d_raw(l, x, y, z) && dstar_raw(l, x, y, z))
}

/// `(a ∨ b) ∧ c = (a ∧ c) ∨ (b ∧ c)`.
pub fn d_triple(l: &Lattice, a: Element, b: Element, c: Element) -> Result<bool> {
    Ok(d_raw(l, l.check(a)?, l.check(b)?, l.check(c)?))
}

/// `(a ∧ b) ∨ c = (a ∨ c) ∧ (b ∨ c)`.
pub fn dstar_triple(l: &Lattice, a: Element, b: Element, c: Element) -> Result<bool> {
    Ok(dstar_raw(l, l.check(a)?, l.check(b)?, l.check(c)?))
}

/// Both distributive laws hold for every ordering of the three elements.
pub fn t_triple(l: &Lattice, a: Element, b: Element, c: Element) -> Result<bool> {
    Ok(t_raw(l, l.check(a)?, l.check(b)?, l.check(c)?))
}

/// Elements `z` such that `(a, b, z)` is a distributive triple for every
/// `a`, `b`. Since the triple property is symmetric, unordered pairs suffice.
pub fn center(l: &Lattice) -> Vec<Element> {
    l.elements()
        .filter(|&z| {
            l.elements()
                .all(|a| (a..l.len()).all(|b| t_raw(l, a, b, z)))
        })
        .collect()
}
