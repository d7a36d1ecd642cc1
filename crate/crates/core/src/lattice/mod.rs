//! Finite ortholattices given by explicit tables.
//!
//! Elements are dense indices `0..len()`. All tables are precomputed, so
//! every lattice operation is a lookup and every law can be checked by
//! exhaustive enumeration.

mod blocks;
mod build;
pub mod fixtures;
mod greechie;
mod triples;
mod valuation;
mod verify;

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub use blocks::{blocks, Block};
pub use build::{boolean_lattice, chain2, mo, product, MAX_ELEMENTS};
pub use greechie::{from_greechie, greechie_valuation_fast, parity_obstruction, GreechieDiagram};
pub use triples::{center, d_triple, dstar_triple, t_triple};
pub use valuation::{exists_global_valuation, BooleanHomomorphism, GlobalValuation};
pub use verify::{
    is_boolean_subalgebra, is_distributive, is_modular, verify_oml, OmlReport, Violation,
};

pub(crate) use valuation::search_valuation;

pub type Element = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    names: Vec<String>,
    index: BTreeMap<String, Element>,
    leq: Vec<bool>,
    meet: Vec<Element>,
    join: Vec<Element>,
    ortho: Vec<Element>,
    bottom: Element,
    top: Element,
}

impl Lattice {
    /// Builds a lattice from raw tables without checking any law. Use
    /// [`verify_oml`] to find out whether the result is orthomodular.
    ///
    /// Returns an error only when table dimensions disagree or names repeat.
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        meet: Vec<Vec<Element>>,
        join: Vec<Vec<Element>>,
        ortho: Vec<Element>,
        bottom: Element,
        top: Element,
    ) -> Result<Lattice> {
        let n = names.len();
        let square = |t: usize, rows: usize, cols: &dyn Fn(usize) -> usize| {
            t == n && (0..rows).all(|r| cols(r) == n)
        };
        if !square(leq.len(), leq.len(), &|r| leq[r].len())
            || !square(meet.len(), meet.len(), &|r| meet[r].len())
            || !square(join.len(), join.len(), &|r| join[r].len())
            || ortho.len() != n
            || bottom >= n
            || top >= n
        {
            return Err(Error::NotOrthomodular("table dimensions disagree".into()));
        }
        let in_range = |e: &Element| *e < n;
        if !meet.iter().flatten().all(in_range)
            || !join.iter().flatten().all(in_range)
            || !ortho.iter().all(in_range)
        {
            return Err(Error::NotOrthomodular("table entry out of range".into()));
        }
        let index = Self::index_names(&names)?;
        Ok(Lattice {
            names,
            index,
            leq: leq.into_iter().flatten().collect(),
            meet: meet.into_iter().flatten().collect(),
            join: join.into_iter().flatten().collect(),
            ortho,
            bottom,
            top,
        })
    }

    /// Builds a lattice from a partial order and an orthocomplementation,
    /// deriving meets and joins. Fails if some pair lacks an infimum or a
    /// supremum, or there is no least or greatest element.
    pub fn from_order(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        ortho: Vec<Element>,
    ) -> Result<Lattice> {
        let n = names.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) || ortho.len() != n {
            return Err(Error::NotOrthomodular("table dimensions disagree".into()));
        }
        if n == 0 {
            return Err(Error::NotOrthomodular("empty lattice".into()));
        }
        let bottom = (0..n)
            .find(|&a| (0..n).all(|b| leq[a][b]))
            .ok_or_else(|| Error::NotOrthomodular("no least element".into()))?;
        let top = (0..n)
            .find(|&a| (0..n).all(|b| leq[b][a]))
            .ok_or_else(|| Error::NotOrthomodular("no greatest element".into()))?;
        let below: Vec<usize> = (0..n)
            .map(|a| (0..n).filter(|&b| leq[b][a]).count())
            .collect();
        let above: Vec<usize> = (0..n)
            .map(|a| (0..n).filter(|&b| leq[a][b]).count())
            .collect();

        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let lower: Vec<Element> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .max_by_key(|&c| below[c])
                    .filter(|&c| lower.iter().all(|&d| leq[d][c]))
                    .ok_or_else(|| {
                        Error::NotOrthomodular(format!(
                            "`{}` and `{}` have no meet",
                            names[a], names[b]
                        ))
                    })?;
                let upper: Vec<Element> = (0..n).filter(|&c| leq[a][c] && leq[b][c]).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .max_by_key(|&c| above[c])
                    .filter(|&c| upper.iter().all(|&d| leq[c][d]))
                    .ok_or_else(|| {
                        Error::NotOrthomodular(format!(
                            "`{}` and `{}` have no join",
                            names[a], names[b]
                        ))
                    })?;
                meet[a][b] = glb;
                meet[b][a] = glb;
                join[a][b] = lub;
                join[b][a] = lub;
            }
        }
        Self::from_tables(names, leq, meet, join, ortho, bottom, top)
    }

    fn index_names(names: &[String]) -> Result<BTreeMap<String, Element>> {
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::NotOrthomodular(format!(
                    "duplicate element name `{name}`"
                )));
            }
        }
        Ok(index)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.len()
    }

    pub fn name(&self, e: Element) -> &str {
        &self.names[e]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Result<Element> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn check(&self, e: Element) -> Result<Element> {
        if e < self.len() {
            Ok(e)
        } else {
            Err(Error::UnknownElement(e.to_string()))
        }
    }

    #[inline]
    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.leq[a * self.len() + b]
    }

    #[inline]
    pub fn meet(&self, a: Element, b: Element) -> Element {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: Element, b: Element) -> Element {
        self.join[a * self.len() + b]
    }

    #[inline]
    pub fn ortho(&self, a: Element) -> Element {
        self.ortho[a]
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<Element> {
        self.elements()
            .filter(|&a| {
                a != self.bottom
                    && self
                        .elements()
                        .all(|x| !self.leq(x, a) || x == a || x == self.bottom)
            })
            .collect()
    }

    /// `a ⊥ b`, i.e. `a <= b'`.
    pub fn orthogonal(&self, a: Element, b: Element) -> bool {
        self.leq(a, self.ortho(b))
    }

    /// `a` commutes with `b`: `a = (a ∧ b) ∨ (a ∧ b')`.
    pub fn commutes(&self, a: Element, b: Element) -> bool {
        a == self.join(self.meet(a, b), self.meet(a, self.ortho(b)))
    }

    /// Join of a set of elements; the bottom for the empty set.
    pub fn join_all(&self, xs: impl IntoIterator<Item = Element>) -> Element {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = Element>) -> Element {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }
}
