//! Exact many-particle state spaces without particle labels, counting
//! statistics, and finite orthomodular lattices with modal extensions.
//!
//! * [`fock`]: occupation-number kets, boson and fermion scalar products,
//!   null vectors, ladder operators and a parser for state expressions.
//! * [`oracle`]: the labeled tensor-product construction used to cross-check
//!   the occupation-number products.
//! * [`stats`]: Maxwell-Boltzmann, Bose-Einstein and Fermi-Dirac counts.
//! * [`lattice`]: table-based orthomodular lattices, Greechie pasting,
//!   centers, blocks and global valuations.
//! * [`modal`]: the possibility operator, possibility spaces and compatible
//!   actualizations.

pub mod error;
pub mod fock;
pub mod lattice;
pub mod modal;
pub mod oracle;
pub mod scalar;
pub mod stats;

pub use error::{Error, Result};
pub use fock::{FockVector, ModeIndex, OccupationState, Sign, Statistics};
pub use lattice::{Element, GreechieDiagram, Lattice};
pub use modal::{ModalExtension, PossibilitySpace};
pub use num::{BigInt, BigRational, BigUint};
pub use scalar::{format_rational, ExactComplex};
pub use stats::{CountingProblem, CountingStatistics};
