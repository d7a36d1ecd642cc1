//! Occupation-number kets, exact linear combinations of them, the boson and
//! fermion scalar products, and single-mode ladder operators.

mod ladder;
mod parse;
mod product;
mod state;
mod vector;

pub use ladder::{annihilate, anticommutator, commutator, create, kronecker, number_operator};
pub use parse::{parse_terms, parse_vector, RawTerm};
pub use product::{
    basis_inner, boson_inner, fermion_inner, inner, is_null, norm_squared, particle_number, similar,
};
pub use state::{
    basis_states, canonicalize, states_with_support, ModeIndex, OccupationState, Sign, Statistics,
};
pub use vector::FockVector;
