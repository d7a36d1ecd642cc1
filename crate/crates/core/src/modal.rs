//! Modal extensions: the possibility operator, possibility spaces and
//! actualizations compatible with a two-valued state of the possibility
//! space.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{
    blocks, center, exists_global_valuation, is_boolean_subalgebra, search_valuation, verify_oml,
    BooleanHomomorphism, Element, GlobalValuation, Lattice,
};

/// An orthomodular lattice embedded in a Boolean saturated one.
#[derive(Clone, Debug)]
pub struct ModalExtension {
    base: Lattice,
    extended: Lattice,
    embedding: Vec<Element>,
    center: Vec<Element>,
    diamond: Vec<Element>,
}

impl ModalExtension {
    pub fn base(&self) -> &Lattice {
        &self.base
    }

    pub fn extended(&self) -> &Lattice {
        &self.extended
    }

    pub fn embedding(&self) -> &[Element] {
        &self.embedding
    }

    pub fn embed(&self, e: Element) -> Element {
        self.embedding[e]
    }

    /// Center of the extended lattice.
    pub fn center(&self) -> &[Element] {
        &self.center
    }

    fn build(base: Lattice, extended: Lattice, embedding: Vec<Element>) -> Result<Self> {
        let center = center(&extended);
        let mut diamond = Vec::with_capacity(extended.len());
        for p in extended.elements() {
            let above: Vec<Element> = center
                .iter()
                .copied()
                .filter(|&z| extended.leq(p, z))
                .collect();
            let min = above
                .iter()
                .copied()
                .find(|&z| above.iter().all(|&w| extended.leq(z, w)))
                .ok_or_else(|| {
                    Error::NotSaturated(format!(
                        "no least central element above `{}`",
                        extended.name(p)
                    ))
                })?;
            diamond.push(min);
        }
        Ok(ModalExtension {
            base,
            extended,
            embedding,
            center,
            diamond,
        })
    }
}

fn require_oml(l: &Lattice, which: &str) -> Result<()> {
    match verify_oml(l).violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::NotOrthomodular(format!(
            "{which}: {} fails at ({})",
            v.law,
            v.elements.join(", ")
        ))),
    }
}

/// The lattice as its own extension, embedded by the identity.
pub fn identity_extension(l: &Lattice) -> Result<ModalExtension> {
    require_oml(l, "base")?;
    ModalExtension::build(l.clone(), l.clone(), l.elements().collect())
}

/// Validates an explicit embedding of `base` into `extended`.
pub fn custom_extension(
    base: &Lattice,
    extended: &Lattice,
    embedding: Vec<Element>,
) -> Result<ModalExtension> {
    require_oml(base, "base")?;
    require_oml(extended, "extended")?;
    if embedding.len() != base.len() {
        return Err(Error::NotEmbedding(format!(
            "map has {} entries for {} base elements",
            embedding.len(),
            base.len()
        )));
    }
    if let Some(&e) = embedding.iter().find(|&&e| e >= extended.len()) {
        return Err(Error::NotEmbedding(format!("image {e} is not an element")));
    }
    let name = |a: Element| base.name(a).to_string();
    let f = |a: Element| embedding[a];
    for a in base.elements() {
        for b in a + 1..base.len() {
            if f(a) == f(b) {
                return Err(Error::NotEmbedding(format!(
                    "not injective: `{}` and `{}` share an image",
                    name(a),
                    name(b)
                )));
            }
        }
    }
    if f(base.bottom()) != extended.bottom() {
        return Err(Error::NotEmbedding("0 is not preserved".into()));
    }
    if f(base.top()) != extended.top() {
        return Err(Error::NotEmbedding("1 is not preserved".into()));
    }
    for a in base.elements() {
        if f(base.ortho(a)) != extended.ortho(f(a)) {
            return Err(Error::NotEmbedding(format!(
                "complement of `{}` is not preserved",
                name(a)
            )));
        }
        for b in base.elements() {
            if f(base.meet(a, b)) != extended.meet(f(a), f(b)) {
                return Err(Error::NotEmbedding(format!(
                    "meet of `{}` and `{}` is not preserved",
                    name(a),
                    name(b)
                )));
            }
            if f(base.join(a, b)) != extended.join(f(a), f(b)) {
                return Err(Error::NotEmbedding(format!(
                    "join of `{}` and `{}` is not preserved",
                    name(a),
                    name(b)
                )));
            }
        }
    }
    ModalExtension::build(base.clone(), extended.clone(), embedding)
}

/// Least central element of the extended lattice above `p`.
pub fn diamond(ext: &ModalExtension, p: Element) -> Result<Element> {
    Ok(ext.diamond[ext.extended.check(p)?])
}

/// Subalgebra of the extended lattice generated by the possibility images
/// of embedded base elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PossibilitySpace {
    pub elements: Vec<Element>,
    pub atoms: Vec<Element>,
    /// Outcome of checking the closure against the Boolean-subalgebra laws.
    pub is_boolean: bool,
}

impl PossibilitySpace {
    pub fn contains(&self, e: Element) -> bool {
        self.elements.binary_search(&e).is_ok()
    }
}

pub fn possibility_space(ext: &ModalExtension) -> PossibilitySpace {
    let l = &ext.extended;
    let mut member = vec![false; l.len()];
    let mut frontier: Vec<Element> = vec![l.bottom(), l.top()];
    frontier.extend(ext.embedding.iter().map(|&e| ext.diamond[e]));
    let mut elements: Vec<Element> = Vec::new();
    while let Some(x) = frontier.pop() {
        if member[x] {
            continue;
        }
        member[x] = true;
        elements.push(x);
        frontier.push(l.ortho(x));
        for &y in &elements {
            frontier.push(l.meet(x, y));
            frontier.push(l.join(x, y));
        }
    }
    elements.sort_unstable();
    let atoms = elements
        .iter()
        .copied()
        .filter(|&a| {
            a != l.bottom()
                && elements
                    .iter()
                    .all(|&x| x == a || x == l.bottom() || !l.leq(x, a))
        })
        .collect();
    let is_boolean = is_boolean_subalgebra(l, &elements);
    PossibilitySpace {
        elements,
        atoms,
        is_boolean,
    }
}

/// Every homomorphism from the possibility space to `{false, true}`: one per
/// atom, sending exactly the elements above it to true.
pub fn homomorphisms(ext: &ModalExtension, space: &PossibilitySpace) -> Vec<BooleanHomomorphism> {
    let l = &ext.extended;
    space
        .atoms
        .iter()
        .map(|&a| BooleanHomomorphism {
            values: space.elements.iter().map(|&e| (e, l.leq(a, e))).collect(),
        })
        .collect()
}

/// A global valuation of the base lattice agreeing with `f` on every base
/// element whose image lies in the possibility space.
pub fn compatible_actualization(
    ext: &ModalExtension,
    f: &BooleanHomomorphism,
) -> Result<Option<GlobalValuation>> {
    let space = possibility_space(ext);
    if !f.values.keys().copied().eq(space.elements.iter().copied()) {
        return Err(Error::DomainMismatch);
    }
    let forced: Vec<Option<bool>> = ext.base.elements().map(|w| f.value(ext.embed(w))).collect();
    Ok(search_valuation(&ext.base, &blocks(&ext.base), &forced))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MksReport {
    pub has_global_valuation: bool,
    pub has_f_with_actualization: bool,
    pub theorem_holds: bool,
    pub homomorphisms_checked: usize,
    /// Possibility-space atom of the first homomorphism that admits an
    /// actualization, as an extended-lattice element.
    pub witness_atom: Option<Element>,
}

/// Evaluates both sides of the equivalence between global valuations and
/// compatible actualizations, each by its own search.
pub fn mks_verify(ext: &ModalExtension) -> MksReport {
    let left = exists_global_valuation(&ext.base).is_some();
    let space = possibility_space(ext);
    let homs = homomorphisms(ext, &space);
    let witness_atom = space.atoms.iter().zip(&homs).find_map(|(&atom, f)| {
        compatible_actualization(ext, f)
            .expect("domain is the possibility space")
            .map(|_| atom)
    });
    let right = witness_atom.is_some();
    MksReport {
        has_global_valuation: left,
        has_f_with_actualization: right,
        theorem_holds: left == right,
        homomorphisms_checked: homs.len(),
        witness_atom,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean_lattice, chain2, mo, product};

    fn chain_mo2() -> Lattice {
        product(&chain2(), &mo(2).unwrap()).unwrap()
    }

    #[test]
    fn diamond_examples() {
        let m = identity_extension(&mo(2).unwrap()).unwrap();
        let l = m.extended();
        assert_eq!(diamond(&m, l.bottom()).unwrap(), l.bottom());
        for p in l.elements().filter(|&p| p != l.bottom()) {
            assert_eq!(diamond(&m, p).unwrap(), l.top());
        }
        assert!(diamond(&m, 99).is_err());

        let p = identity_extension(&chain_mo2()).unwrap();
        let e = |s: &str| p.extended().element(s).unwrap();
        assert_eq!(diamond(&p, e("(1,a)")).unwrap(), e("(1,1)"));
        assert_eq!(diamond(&p, e("(0,a)")).unwrap(), e("(0,1)"));
    }

    #[test]
    fn possibility_space_examples() {
        let m = identity_extension(&mo(2).unwrap()).unwrap();
        assert_eq!(possibility_space(&m).elements, vec![0, 5]);
        let b = identity_extension(&boolean_lattice(2).unwrap()).unwrap();
        let s = possibility_space(&b);
        assert_eq!(s.elements.len(), 4);
        assert!(s.is_boolean);
        let p = identity_extension(&chain_mo2()).unwrap();
        let s = possibility_space(&p);
        assert_eq!(s.elements, p.center().to_vec());
        assert_eq!(s.atoms.len(), 2);
    }

    #[test]
    fn custom_extensions() {
        let c2 = chain2();
        let big = chain_mo2();
        let e = |s: &str| big.element(s).unwrap();
        let ext = custom_extension(&c2, &big, vec![e("(0,0)"), e("(1,1)")]).unwrap();
        assert_eq!(diamond(&ext, e("(1,a)")).unwrap(), e("(1,1)"));
        assert!(custom_extension(
            &mo(2).unwrap(),
            &mo(3).unwrap(),
            (0..5).chain([7]).collect()
        )
        .is_ok());

        let m2 = mo(2).unwrap();
        // a -> (1,a) with a' -> (1,a') breaks complements; with a' -> (0,a')
        // the meet of a and b lands on (1,0) instead of (0,0)
        let attempt =
            |names: [&str; 6]| custom_extension(&m2, &big, names.iter().map(|n| e(n)).collect());
        assert!(matches!(
            attempt(["(0,0)", "(1,a)", "(1,a')", "(1,b)", "(1,b')", "(1,1)"]),
            Err(Error::NotEmbedding(_))
        ));
        assert!(matches!(
            attempt(["(0,0)", "(1,a)", "(0,a')", "(1,b)", "(0,b')", "(1,1)"]),
            Err(Error::NotEmbedding(_))
        ));
        assert!(matches!(
            custom_extension(&m2, &m2, vec![0, 1, 1, 3, 4, 5]),
            Err(Error::NotEmbedding(_))
        ));
    }

    #[test]
    fn actualizations() {
        let m = identity_extension(&mo(2).unwrap()).unwrap();
        let space = possibility_space(&m);
        let homs = homomorphisms(&m, &space);
        assert_eq!(homs.len(), 1);
        let v = compatible_actualization(&m, &homs[0]).unwrap().unwrap();
        assert!(v.verify(m.base()));

        let b = identity_extension(&boolean_lattice(2).unwrap()).unwrap();
        let space = possibility_space(&b);
        let homs = homomorphisms(&b, &space);
        let a = b.base().element("a").unwrap();
        let f = homs.iter().find(|h| h.value(a) == Some(true)).unwrap();
        let v = compatible_actualization(&b, f).unwrap().unwrap();
        assert_eq!(v.true_atoms(), vec![a]);

        let mut wrong = homs[0].clone();
        wrong.values.remove(&a);
        assert_eq!(
            compatible_actualization(&b, &wrong),
            Err(Error::DomainMismatch)
        );
    }

    #[test]
    fn mks_on_small_lattices() {
        for l in [mo(2).unwrap(), boolean_lattice(3).unwrap(), chain_mo2()] {
            let r = mks_verify(&identity_extension(&l).unwrap());
            assert!(r.has_global_valuation && r.has_f_with_actualization && r.theorem_holds);
        }
    }
}
