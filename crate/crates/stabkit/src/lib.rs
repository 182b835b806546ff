//! Stabilizer-algebra toolkit: exact Pauli-group arithmetic over GF(2),
//! binary symplectic geometry, canonical bases of Pauli subgroups, local
//! views with pseudo-stabilizer certification, magic-state and rotated-CSS
//! Hamiltonians, and a dense statevector oracle for brute-force verification
//! at desk scale.

pub mod bits;
pub mod dense;
pub mod error;
pub mod group;
pub mod hamiltonian;
pub mod local;
pub mod oracle;
pub mod pauli;
pub mod sim;
pub mod symplectic;
pub mod tableau;
pub mod tol;

pub use error::{Error, Result};
pub use group::{CanonicalBasis, PauliSubgroup};
pub use hamiltonian::{HamTerm, LocalHamiltonian, TermKind};
pub use local::{PseudoStabCertificate, QubitSet, TypeWitness, WitnessKind};
pub use pauli::{Letter, PauliWord};
pub use sim::{Circuit, Gate, Statevector};
pub use symplectic::{F2Subspace, SymplecticVector};
