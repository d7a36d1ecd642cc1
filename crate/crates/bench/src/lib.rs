use qset_core::fock::parse_vector;
use qset_core::{FockVector, Statistics};

/// A superposition over every `n`-particle ket on `modes` modes with
/// coefficients `1, 2, 3, ...`.
pub fn dense_vector(n: usize, modes: u32, stats: Statistics) -> FockVector {
    let terms: Vec<String> = qset_core::fock::basis_states(n, modes, stats, false)
        .iter()
        .enumerate()
        .map(|(k, s)| format!("{}*{}", k + 1, s))
        .collect();
    parse_vector(&terms.join(" + "), stats).expect("generated expression parses")
}
