//! Compiler and numeric verifier for Hamiltonian-simulation constructions.
//!
//! The pipeline lowers a k-local target Hamiltonian through a sequence of
//! representations, each of which can be checked numerically at desk scale:
//!
//! 1. [`pauli`] — weighted Pauli-term Hamiltonians: parsing, spectral bounds,
//!    nonnegative shifts, and the qudit-to-qubit encoding.
//! 2. [`circuit`] — gate-level IR with an exact statevector simulator.
//! 3. [`pe`] — the Trotterized, nearest-neighbor phase-estimation circuit
//!    that writes energy eigenvalues into ancilla bits.
//! 4. [`sparsify`] — grid embedding with spatial-sparsity certification,
//!    uncomputation, and idling.
//! 5. [`clock`] — the clock-register circuit-to-Hamiltonian mapping with
//!    bit-wise output penalties and a verified coupling schedule.
//! 6. [`chain`] — the nearest-neighbor chain of 8-dimensional qudits that
//!    encodes the same computation in one dimension.
//! 7. [`gadgets`] — the reduction ladder to real, Y-free, 2-local, and
//!    single-interaction-type Hamiltonians.
//! 8. [`verify`] — eigensolvers, simulation checks, and bound checkers that
//!    certify every stage against its advertised tolerances.

pub mod acceptance;
pub mod chain;
pub mod circuit;
pub mod clock;
pub mod gadgets;
pub mod linalg;
pub mod pauli;
pub mod pe;
pub mod report;
pub mod sparse;
pub mod sparsify;
pub mod synth;
pub mod verify;

pub use pauli::{LocalHamiltonian, Pauli, PauliTerm, QuditHamiltonian};
