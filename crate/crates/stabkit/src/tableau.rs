//! Heisenberg-picture propagation of Pauli words through Clifford gates.
//!
//! This exists as a cross-check oracle for the statevector extraction (and as
//! the fast source of random stabilizer groups for the verification sweeps);
//! it is not a production tableau simulator.

use crate::error::{Error, Result};
use crate::group::PauliSubgroup;
use crate::pauli::{Letter, PauliWord};
use crate::sim::{Circuit, Gate};

/// U P U† for a single Clifford gate, with the exact sign.
pub fn conjugate(p: &PauliWord, gate: &Gate) -> Result<PauliWord> {
    let n = p.n();
    let mut x = p.x_bits().clone();
    let mut z = p.z_bits().clone();
    let mut phase = p.phase_exp();
    match gate {
        Gate::H(q) => {
            let (xb, zb) = (x.get(*q), z.get(*q));
            // X <-> Z, Y -> -Y
            x.set(*q, zb);
            z.set(*q, xb);
            if xb && zb {
                phase = (phase + 2) % 4;
            }
        }
        Gate::S(q) => {
            let (xb, zb) = (x.get(*q), z.get(*q));
            // X -> Y, Y -> -X, Z -> Z
            if xb {
                if zb {
                    phase = (phase + 2) % 4;
                }
                z.set(*q, !zb);
            }
        }
        Gate::Cnot(c, t) => {
            let (xc, zc) = (x.get(*c), z.get(*c));
            let (xt, zt) = (x.get(*t), z.get(*t));
            if xc && zt && xt == zc {
                phase = (phase + 2) % 4;
            }
            x.set(*t, xt ^ xc);
            z.set(*c, zc ^ zt);
        }
        Gate::Rot { .. } => {
            return Err(Error::Precondition(
                "tableau conjugation requires a Clifford gate".into(),
            ));
        }
    }
    PauliWord::from_parts(n, phase, x, z)
}

/// Propagate stab(|0…0⟩) = ⟨Z_1, …, Z_n⟩ through a Clifford circuit, giving
/// the stabilizer group of the output state.
pub fn propagate_stabilizers(circuit: &Circuit) -> Result<PauliSubgroup> {
    if !circuit.is_clifford() {
        return Err(Error::Precondition(
            "tableau propagation requires a Clifford circuit".into(),
        ));
    }
    let n = circuit.n;
    let mut gens: Vec<PauliWord> = (0..n)
        .map(|q| PauliWord::single(n, q, Letter::Z).unwrap())
        .collect();
    for gate in &circuit.gates {
        for g in gens.iter_mut() {
            *g = conjugate(g, gate)?;
        }
    }
    PauliSubgroup::stabilizer(n, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::CMatrix;
    use crate::sim;
    use num_complex::Complex64;

    fn gate_matrix(gate: &Gate, n: usize) -> CMatrix {
        // build the 2^n matrix of a 1- or 2-qubit Clifford gate
        let mut m = CMatrix::identity(1 << n);
        match gate {
            Gate::H(q) => {
                let mut psi_cols = Vec::new();
                for col in 0..(1 << n) {
                    let mut e = vec![Complex64::ZERO; 1 << n];
                    e[col] = Complex64::ONE;
                    let mut sv = sim::Statevector::from_amplitudes(n, e).unwrap();
                    sv.apply_h(*q);
                    psi_cols.push(sv);
                }
                for (col, sv) in psi_cols.iter().enumerate() {
                    for row in 0..(1 << n) {
                        m[(row, col)] = sv.amplitudes()[row];
                    }
                }
            }
            Gate::S(q) => {
                for col in 0..(1 << n) {
                    let v = if (col >> q) & 1 == 1 { Complex64::I } else { Complex64::ONE };
                    m[(col, col)] = v;
                }
            }
            Gate::Cnot(c, t) => {
                m = CMatrix::zeros(1 << n);
                for col in 0..(1 << n) {
                    let row = if (col >> c) & 1 == 1 { col ^ (1 << t) } else { col };
                    m[(row, col)] = Complex64::ONE;
                }
            }
            Gate::Rot { .. } => unreachable!(),
        }
        m
    }

    #[test]
    fn conjugation_matches_dense_oracle_exhaustively() {
        let gates = [
            Gate::H(0),
            Gate::H(1),
            Gate::S(0),
            Gate::S(1),
            Gate::Cnot(0, 1),
            Gate::Cnot(1, 0),
        ];
        for gate in &gates {
            let u = gate_matrix(gate, 2);
            let udag = u.dagger();
            for raw in 0u64..16 {
                for phase in [0u8, 1, 2, 3] {
                    let p = PauliWord::from_parts(
                        2,
                        phase,
                        crate::bits::BitVec::from_u64(raw & 3, 2),
                        crate::bits::BitVec::from_u64(raw >> 2, 2),
                    )
                    .unwrap();
                    let fast = conjugate(&p, gate).unwrap();
                    let slow = u.mul(&CMatrix::pauli_word(&p)).mul(&udag);
                    assert!(
                        slow.approx_eq(&CMatrix::pauli_word(&fast), 1e-12),
                        "gate {gate:?} on {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn propagation_matches_statevector_extraction() {
        // Gottesman-Knill spot check: for pure Clifford circuits the
        // propagated group equals the scanned group
        for seed in 0..25u64 {
            let n = 2 + (seed % 3) as usize;
            let c = sim::random_circuit(n, 3, 0, seed);
            let tableau_group = propagate_stabilizers(&c).unwrap();
            let psi = sim::simulate(&c).unwrap();
            let scanned = sim::extract_stabilizer_group(&psi, crate::tol::TOL_STAB).unwrap();
            assert_eq!(tableau_group.dim(), n);
            assert_eq!(scanned.dim(), n);
            // same group: every propagated generator is a signed member of
            // the scanned group, and vice versa
            for g in tableau_group.generators() {
                assert!(scanned.member(g).unwrap(), "{g} missing from scan");
            }
            for g in scanned.generators() {
                assert!(tableau_group.member(g).unwrap(), "{g} missing from tableau");
            }
        }
    }

    #[test]
    fn rejects_non_clifford() {
        let mut c = Circuit::new(1);
        c.gates = vec![Gate::Rot {
            axis: PauliWord::parse("Z").unwrap(),
            angle: 0.2,
        }];
        assert!(propagate_stabilizers(&c).is_err());
    }
}
