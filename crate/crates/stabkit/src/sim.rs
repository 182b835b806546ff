//! Dense statevector simulation of Clifford + Pauli-rotation circuits, and
//! the exhaustive stabilizer-group extraction built on top of it.
//!
//! Amplitude layout is little-endian: bit `i` of the basis index is qubit
//! `i`. The same convention is used by the circuit file format.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::group::PauliSubgroup;
use crate::pauli::PauliWord;
use crate::symplectic::F2Subspace;
use crate::tol;

/// Cap on dense simulation.
pub const SIM_QUBIT_CAP: usize = 14;
/// Cap on the 4^n stabilizer-extraction scan.
pub const SCAN_QUBIT_CAP: usize = 8;

/// A circuit gate. `Rot { axis, angle }` denotes e^{iθP}.
#[derive(Clone, Debug, PartialEq)]
pub enum Gate {
    H(usize),
    S(usize),
    Cnot(usize, usize),
    Rot { axis: PauliWord, angle: f64 },
}

/// An ordered list of gates on `n` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    pub n: usize,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Circuit { n, gates: Vec::new() }
    }

    /// Number of Pauli-rotation gates (the t in "Clifford + t rotations").
    pub fn rotation_count(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| matches!(g, Gate::Rot { .. }))
            .count()
    }

    pub fn is_clifford(&self) -> bool {
        self.rotation_count() == 0
    }

    fn check_targets(&self) -> Result<()> {
        for g in &self.gates {
            match g {
                Gate::H(q) | Gate::S(q) => {
                    if *q >= self.n {
                        return Err(Error::QubitOutOfRange { index: *q, n: self.n });
                    }
                }
                Gate::Cnot(c, t) => {
                    if *c >= self.n {
                        return Err(Error::QubitOutOfRange { index: *c, n: self.n });
                    }
                    if *t >= self.n {
                        return Err(Error::QubitOutOfRange { index: *t, n: self.n });
                    }
                    if c == t {
                        return Err(Error::Precondition("CNOT targets must be distinct".into()));
                    }
                }
                Gate::Rot { axis, .. } => {
                    if axis.n() != self.n {
                        return Err(Error::DimensionMismatch { left: axis.n(), right: self.n });
                    }
                }
            }
        }
        Ok(())
    }

    /// Parse the circuit text format: header `CIRC n=<n>`, then one gate per
    /// line (`H <q>`, `S <q>`, `CNOT <q1> <q2>`, `ROT <angle> <pauli>`).
    /// Qubit indices are 0-based. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| Error::Parse {
            position: 0,
            message: "empty circuit file".into(),
        })?;
        let n = header
            .strip_prefix("CIRC n=")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse {
                position: hline + 1,
                message: format!("expected header 'CIRC n=<n>', got '{header}'"),
            })?;
        let mut circuit = Circuit::new(n);
        for (lineno, line) in lines {
            let err = |message: String| Error::Parse { position: lineno + 1, message };
            let mut parts = line.split_whitespace();
            let kind = parts.next().unwrap();
            let gate = match kind {
                "H" | "S" => {
                    let q: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err(format!("{kind} expects one qubit index")))?;
                    if kind == "H" {
                        Gate::H(q)
                    } else {
                        Gate::S(q)
                    }
                }
                "CNOT" => {
                    let c: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err("CNOT expects two qubit indices".into()))?;
                    let t: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err("CNOT expects two qubit indices".into()))?;
                    Gate::Cnot(c, t)
                }
                "ROT" => {
                    let angle: f64 = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err("ROT expects an angle in radians".into()))?;
                    let axis = PauliWord::parse(
                        parts
                            .next()
                            .ok_or_else(|| err("ROT expects a Pauli string".into()))?,
                    )?;
                    Gate::Rot { axis, angle }
                }
                other => return Err(err(format!("unknown gate '{other}'"))),
            };
            if parts.next().is_some() {
                return Err(err(format!("trailing tokens after {kind}")));
            }
            circuit.gates.push(gate);
        }
        circuit.check_targets()?;
        Ok(circuit)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CIRC n={}", self.n)?;
        for g in &self.gates {
            match g {
                Gate::H(q) => writeln!(f, "H {q}")?,
                Gate::S(q) => writeln!(f, "S {q}")?,
                Gate::Cnot(c, t) => writeln!(f, "CNOT {c} {t}")?,
                Gate::Rot { axis, angle } => writeln!(f, "ROT {angle} {}", axis.phaseless())?,
            }
        }
        Ok(())
    }
}

/// A dense unit-norm state on `n` qubits.
#[derive(Clone, Debug)]
pub struct Statevector {
    n: usize,
    amps: Vec<Complex64>,
}

impl Statevector {
    /// |0…0⟩.
    pub fn zero_state(n: usize) -> Self {
        let mut amps = vec![Complex64::ZERO; 1 << n];
        amps[0] = Complex64::ONE;
        Statevector { n, amps }
    }

    /// Wrap raw amplitudes; the norm must be 1 within 1e-12.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch { left: amps.len(), right: 1 << n });
        }
        let psi = Statevector { n, amps };
        let norm = psi.norm();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Precondition(format!(
                "statevector norm is {norm}, not 1"
            )));
        }
        Ok(psi)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply_h(&mut self, q: usize) {
        let bit = 1usize << q;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for j in 0..self.amps.len() {
            if j & bit == 0 {
                let a0 = self.amps[j];
                let a1 = self.amps[j | bit];
                self.amps[j] = (a0 + a1) * s;
                self.amps[j | bit] = (a0 - a1) * s;
            }
        }
    }

    pub fn apply_s(&mut self, q: usize) {
        let bit = 1usize << q;
        for j in 0..self.amps.len() {
            if j & bit != 0 {
                self.amps[j] *= Complex64::I;
            }
        }
    }

    pub fn apply_cnot(&mut self, c: usize, t: usize) {
        let cbit = 1usize << c;
        let tbit = 1usize << t;
        for j in 0..self.amps.len() {
            if j & cbit != 0 && j & tbit == 0 {
                self.amps.swap(j, j | tbit);
            }
        }
    }

    /// The state P|ψ⟩ for a Pauli word P (exact phase included).
    pub fn apply_pauli(&self, p: &PauliWord) -> Result<Statevector> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch { left: p.n(), right: self.n });
        }
        let xmask = p.x_bits().to_u64() as usize;
        let zmask = p.z_bits().to_u64() as usize;
        let y_count = p.x_bits().and_weight(p.z_bits());
        let base = Complex64::I.powu((p.phase_exp() as u32 + y_count as u32) % 4);
        let mut out = vec![Complex64::ZERO; self.amps.len()];
        for (j, amp) in self.amps.iter().enumerate() {
            let sign = if ((j & zmask).count_ones() & 1) == 1 { -1.0 } else { 1.0 };
            out[j ^ xmask] = base * sign * amp;
        }
        Ok(Statevector { n: self.n, amps: out })
    }

    /// In-place e^{iθP}|ψ⟩ = cos θ·|ψ⟩ + i sin θ·P|ψ⟩.
    pub fn apply_rot(&mut self, axis: &PauliWord, angle: f64) -> Result<()> {
        let rotated = self.apply_pauli(axis)?;
        let (c, s) = (angle.cos(), angle.sin());
        let is = Complex64::new(0.0, s);
        for (a, r) in self.amps.iter_mut().zip(rotated.amps.iter()) {
            *a = c * *a + is * r;
        }
        Ok(())
    }

    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        match gate {
            Gate::H(q) => self.apply_h(*q),
            Gate::S(q) => self.apply_s(*q),
            Gate::Cnot(c, t) => self.apply_cnot(*c, *t),
            Gate::Rot { axis, angle } => self.apply_rot(axis, *angle)?,
        }
        Ok(())
    }

    /// Apply a dense 2^k × 2^k matrix on the (ascending) support qubits,
    /// without materializing anything 2^n-sized. Sub-index bit `p`
    /// corresponds to the p-th smallest support qubit.
    pub fn apply_matrix_on_support(
        &self,
        m: &crate::dense::CMatrix,
        support: &[usize],
    ) -> Result<Statevector> {
        let k = support.len();
        if m.dim() != 1 << k {
            return Err(Error::DimensionMismatch { left: m.dim(), right: 1 << k });
        }
        for &q in support {
            if q >= self.n {
                return Err(Error::QubitOutOfRange { index: q, n: self.n });
            }
        }
        let mut out = vec![Complex64::ZERO; self.amps.len()];
        let sub_size = 1usize << k;
        let support_mask: usize = support.iter().map(|&q| 1usize << q).sum();
        for rest in 0..self.amps.len() {
            if rest & support_mask != 0 {
                continue;
            }
            // gather
            let mut gathered = vec![Complex64::ZERO; sub_size];
            for (sub, g) in gathered.iter_mut().enumerate() {
                let mut j = rest;
                for (p, &q) in support.iter().enumerate() {
                    if (sub >> p) & 1 == 1 {
                        j |= 1 << q;
                    }
                }
                *g = self.amps[j];
            }
            // multiply and scatter
            for row in 0..sub_size {
                let mut acc = Complex64::ZERO;
                for (col, g) in gathered.iter().enumerate() {
                    acc += m[(row, col)] * g;
                }
                let mut j = rest;
                for (p, &q) in support.iter().enumerate() {
                    if (row >> p) & 1 == 1 {
                        j |= 1 << q;
                    }
                }
                out[j] = acc;
            }
        }
        Ok(Statevector { n: self.n, amps: out })
    }

    /// ⟨ψ|P|ψ⟩, exactly (up to floating point).
    pub fn expectation_pauli(&self, p: &PauliWord) -> Result<Complex64> {
        let applied = self.apply_pauli(p)?;
        Ok(overlap(self, &applied))
    }
}

/// ⟨ψ|φ⟩.
pub fn overlap(psi: &Statevector, phi: &Statevector) -> Complex64 {
    psi.amps
        .iter()
        .zip(phi.amps.iter())
        .map(|(a, b)| a.conj() * b)
        .sum()
}

/// Run the circuit on |0…0⟩. ROT gates apply cos θ·I + i sin θ·P exactly.
pub fn simulate(c: &Circuit) -> Result<Statevector> {
    if c.n > SIM_QUBIT_CAP {
        return Err(Error::CapExceeded { n: c.n, cap: SIM_QUBIT_CAP, what: "simulation".into() });
    }
    c.check_targets()?;
    let mut psi = Statevector::zero_state(c.n);
    for g in &c.gates {
        psi.apply_gate(g)?;
    }
    Ok(psi)
}

/// The circuit preparing ψ_t = (D|+⟩)^⊗t ⊗ |0⟩^⊗(n−t): H then e^{iπ/8 Y} on
/// each of the first t qubits.
pub fn psi_t_circuit(n: usize, t: usize) -> Result<Circuit> {
    if t > n {
        return Err(Error::Precondition(format!("t = {t} exceeds n = {n}")));
    }
    let mut c = Circuit::new(n);
    for q in 0..t {
        c.gates.push(Gate::H(q));
        c.gates.push(Gate::Rot {
            axis: PauliWord::single(n, q, crate::pauli::Letter::Y)?,
            angle: std::f64::consts::PI / 8.0,
        });
    }
    Ok(c)
}

/// ψ_t itself, the extremal family for the magic-state energy bound.
pub fn prepare_psi_t(n: usize, t: usize) -> Result<Statevector> {
    simulate(&psi_t_circuit(n, t)?)
}

/// Exhaustive 4^n scan for stab(|ψ⟩): every phase-less word whose
/// expectation has magnitude within `tol` of 1 is snapped to its stabilizing
/// phase α ∈ {±1, ±i} and kept. The result is reduced to independent
/// generators and re-verified Abelian and −I-free by the stabilizer
/// constructor.
pub fn extract_stabilizer_group(psi: &Statevector, tol: f64) -> Result<PauliSubgroup> {
    let n = psi.n;
    if n > SCAN_QUBIT_CAP {
        return Err(Error::CapExceeded { n, cap: SCAN_QUBIT_CAP, what: "stabilizer extraction".into() });
    }
    let mut found: Vec<PauliWord> = Vec::new();
    let mut span = F2Subspace::zero(2 * n);
    for xmask in 0u64..(1 << n) {
        for zmask in 0u64..(1 << n) {
            if xmask == 0 && zmask == 0 {
                continue;
            }
            let w = PauliWord::from_parts(
                n,
                0,
                crate::bits::BitVec::from_u64(xmask, n),
                crate::bits::BitVec::from_u64(zmask, n),
            )?;
            if span.member(&w.to_pauli_vector()) {
                continue;
            }
            let c = psi.expectation_pauli(&w)?;
            if c.norm() < 1.0 - tol {
                continue;
            }
            // αW|ψ⟩ = |ψ⟩ forces α = conj(⟨ψ|W|ψ⟩); snap to the unit set
            let target = c.conj();
            let (phase_exp, snapped) = [
                Complex64::ONE,
                Complex64::I,
                -Complex64::ONE,
                -Complex64::I,
            ]
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                (target - *a)
                    .norm()
                    .partial_cmp(&(target - *b).norm())
                    .unwrap()
            })
            .map(|(i, a)| (i as u8, *a))
            .unwrap();
            if (target - snapped).norm() > 1e3 * tol {
                return Err(Error::VerificationFailed(format!(
                    "word {w}: expectation {c} has unit magnitude but no Pauli-compatible phase"
                )));
            }
            let p = w.with_phase_exp(phase_exp);
            found.push(p);
            let mut rows = span.basis().to_vec();
            rows.push(w.to_pauli_vector());
            span = F2Subspace::from_rows(2 * n, &rows)?;
        }
    }
    PauliSubgroup::stabilizer(n, &found)
}

/// dim stab(|ψ⟩); equals n exactly when |ψ⟩ is a stabilizer state.
pub fn stabilizer_dimension(psi: &Statevector) -> Result<usize> {
    Ok(extract_stabilizer_group(psi, tol::TOL_STAB)?.dim())
}

/// Outcome of the anti-commuting-stabilizer fidelity bound check.
#[derive(Clone, Debug)]
pub struct FidelityReport {
    /// A pair (g₁ ∈ stab(ψ), g₂ ∈ stab(φ)) with ⟦g₁,g₂⟧ = −1, when one exists.
    pub witness: Option<(PauliWord, PauliWord)>,
    pub overlap_abs: f64,
    /// |⟨ψ|φ⟩| ≤ 1/√2 + tol; `None` when no witness pair exists.
    pub bound_holds: Option<bool>,
}

/// Search for anti-commuting stabilizers of the two states; when found, the
/// overlap must satisfy |⟨ψ|φ⟩| ≤ 1/√2 + tol. Searching generator pairs
/// suffices: the commutator is bilinear over Pauli vectors.
pub fn fidelity_bound_check(psi: &Statevector, phi: &Statevector, tol: f64) -> Result<FidelityReport> {
    let g_psi = extract_stabilizer_group(psi, tol)?;
    let g_phi = extract_stabilizer_group(phi, tol)?;
    let overlap_abs = overlap(psi, phi).norm();
    let mut witness = None;
    'outer: for a in g_psi.generators() {
        for b in g_phi.generators() {
            if a.commutator(b)? == -1 {
                witness = Some((a.clone(), b.clone()));
                break 'outer;
            }
        }
    }
    let bound_holds = witness
        .as_ref()
        .map(|_| overlap_abs <= std::f64::consts::FRAC_1_SQRT_2 + tol);
    Ok(FidelityReport { witness, overlap_abs, bound_holds })
}

/// How rotation angles are drawn in random circuits.
#[derive(Clone, Debug)]
pub enum AngleDistribution {
    /// Uniform choice among {π/8, π/5, 1.0, uniform(0, 2π)}. π/8 exercises
    /// the T/D gates; the irrational entries guard against accidental
    /// Cliffordness.
    Mixed,
    Uniform,
    Fixed(f64),
}

impl AngleDistribution {
    fn draw(&self, rng: &mut ChaCha12Rng) -> f64 {
        match self {
            AngleDistribution::Mixed => match rng.random_range(0..4u8) {
                0 => std::f64::consts::PI / 8.0,
                1 => std::f64::consts::PI / 5.0,
                2 => 1.0,
                _ => rng.random_range(0.0..std::f64::consts::TAU),
            },
            AngleDistribution::Uniform => rng.random_range(0.0..std::f64::consts::TAU),
            AngleDistribution::Fixed(a) => *a,
        }
    }
}

/// `clifford_depth` layers of n uniformly random {H, S, CNOT} gates, with `t`
/// ROT gates (random non-identity axis, angle per `angles`) spliced in at
/// random positions. Deterministic under the seed.
pub fn random_circuit_with_angles(
    n: usize,
    clifford_depth: usize,
    t: usize,
    seed: u64,
    angles: &AngleDistribution,
) -> Circuit {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut gates: Vec<Gate> = Vec::new();
    for _ in 0..clifford_depth {
        for _ in 0..n {
            let kind = rng.random_range(0..3u8);
            let gate = if kind == 2 && n >= 2 {
                let c = rng.random_range(0..n);
                let mut t = rng.random_range(0..n);
                while t == c {
                    t = rng.random_range(0..n);
                }
                Gate::Cnot(c, t)
            } else if kind == 1 {
                Gate::S(rng.random_range(0..n))
            } else {
                Gate::H(rng.random_range(0..n))
            };
            gates.push(gate);
        }
    }
    for _ in 0..t {
        let axis = loop {
            let x = rng.random_range(0..(1u64 << n));
            let z = rng.random_range(0..(1u64 << n));
            if x != 0 || z != 0 {
                break PauliWord::from_parts(
                    n,
                    0,
                    crate::bits::BitVec::from_u64(x, n),
                    crate::bits::BitVec::from_u64(z, n),
                )
                .unwrap();
            }
        };
        let angle = angles.draw(&mut rng);
        let pos = rng.random_range(0..=gates.len());
        gates.insert(pos, Gate::Rot { axis, angle });
    }
    Circuit { n, gates }
}

/// [`random_circuit_with_angles`] with the default mixed angle set.
pub fn random_circuit(n: usize, clifford_depth: usize, t: usize, seed: u64) -> Circuit {
    random_circuit_with_angles(n, clifford_depth, t, seed, &AngleDistribution::Mixed)
}
