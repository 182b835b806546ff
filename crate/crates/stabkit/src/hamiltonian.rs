//! Construction and exact evaluation of the magic-state Hamiltonian H_D,
//! stabilizer/CSS Hamiltonians, and their D-rotated forms.
//!
//! Dense matrices are materialized per term (2^k) only; the full 2^n matrix
//! exists solely inside the diagonalization oracle, which is capped at n ≤ 6.

use num_complex::Complex64;

use crate::dense::{CMatrix, DENSE_QUBIT_CAP};
use crate::error::{Error, Result};
use crate::local::QubitSet;
use crate::pauli::{Letter, PauliWord};
use crate::sim::Statevector;
use crate::tol;

/// Payload of a single k-local term.
#[derive(Clone, Debug)]
pub enum TermKind {
    /// (I − S)/2 for a signed Pauli word S.
    PauliProjector(PauliWord),
    /// (I − H^⊗k)/2 on the support.
    HadamardType,
    /// (I − (−XHX)^⊗k)/2 on the support, the D-image of a Z-type projector.
    ConjHadamardType,
    /// An explicit Hermitian PSD matrix with spectral norm ≤ 1, acting on the
    /// support qubits in ascending order.
    Dense(CMatrix),
}

/// One term of a local Hamiltonian, with its support set.
#[derive(Clone, Debug)]
pub struct HamTerm {
    pub support: QubitSet,
    pub kind: TermKind,
}

impl HamTerm {
    pub fn k(&self) -> usize {
        self.support.size()
    }

    /// The 2^k × 2^k matrix of the term on its support (ascending qubit
    /// order; sub-index bit p is the p-th smallest support qubit).
    pub fn dense_on_support(&self) -> CMatrix {
        let k = self.k();
        match &self.kind {
            TermKind::PauliProjector(s) => {
                let mut m = CMatrix::identity(1);
                for &q in self.support.members().iter().rev() {
                    m = m.kron(&CMatrix::letter(s.letter(q)));
                }
                let sign = Complex64::I.powu(s.phase_exp() as u32);
                let id = CMatrix::identity(1 << k);
                id.add(&m.scale(-sign)).scale(Complex64::new(0.5, 0.0))
            }
            TermKind::HadamardType => {
                let h = CMatrix::hadamard().kron_power(k);
                CMatrix::identity(1 << k)
                    .add(&h.scale(-Complex64::ONE))
                    .scale(Complex64::new(0.5, 0.0))
            }
            TermKind::ConjHadamardType => {
                let h = CMatrix::conj_hadamard().kron_power(k);
                CMatrix::identity(1 << k)
                    .add(&h.scale(-Complex64::ONE))
                    .scale(Complex64::new(0.5, 0.0))
            }
            TermKind::Dense(m) => m.clone(),
        }
    }
}

/// A normalized k-local Hamiltonian (1/m) Σ h_i.
#[derive(Clone, Debug)]
pub struct LocalHamiltonian {
    n: usize,
    terms: Vec<HamTerm>,
}

impl LocalHamiltonian {
    pub fn new(n: usize, terms: Vec<HamTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Precondition("a Hamiltonian needs at least one term".into()));
        }
        for t in &terms {
            if t.support.n() != n {
                return Err(Error::DimensionMismatch { left: t.support.n(), right: n });
            }
            if t.support.size() == 0 {
                return Err(Error::Precondition("term with empty support".into()));
            }
            if let TermKind::Dense(m) = &t.kind {
                if m.dim() != 1 << t.k() {
                    return Err(Error::DimensionMismatch { left: m.dim(), right: 1 << t.k() });
                }
                if !m.is_hermitian(1e-10) {
                    return Err(Error::Precondition("dense term is not Hermitian".into()));
                }
                let eigs = m.hermitian_eigenvalues()?;
                let min = eigs.first().copied().unwrap_or(0.0);
                let max = eigs.last().copied().unwrap_or(0.0);
                if min < -1e-10 || max > 1.0 + 1e-10 {
                    return Err(Error::Precondition(format!(
                        "dense term spectrum [{min}, {max}] leaves [0, 1]"
                    )));
                }
            }
            if let TermKind::PauliProjector(s) = &t.kind {
                if s.phase_exp() % 2 == 1 {
                    return Err(Error::Precondition(format!(
                        "projector word {s} has imaginary phase"
                    )));
                }
                if s.support() != t.support.members() {
                    return Err(Error::Precondition(format!(
                        "support set disagrees with the word {s}"
                    )));
                }
            }
        }
        Ok(LocalHamiltonian { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[HamTerm] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// 1/m.
    pub fn normalization(&self) -> f64 {
        1.0 / self.terms.len() as f64
    }

    /// Largest support size among the terms.
    pub fn max_locality(&self) -> usize {
        self.terms.iter().map(|t| t.k()).max().unwrap_or(0)
    }

    /// Largest number of terms acting on any single qubit.
    pub fn max_qubit_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for t in &self.terms {
            for &q in t.support.members() {
                deg[q] += 1;
            }
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// The smallest k for which this is a k-local Hamiltonian with each qubit
    /// acted on by at most k terms.
    pub fn locality_parameter(&self) -> usize {
        self.max_locality().max(self.max_qubit_degree())
    }

    /// Serialize to the Hamiltonian text format. Dense terms have no file
    /// representation.
    pub fn to_text(&self) -> Result<String> {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "HAM n={} norm={}", self.n, self.normalization()).unwrap();
        for t in &self.terms {
            match &t.kind {
                TermKind::PauliProjector(s) => writeln!(out, "PROJ {s}").unwrap(),
                TermKind::HadamardType => {
                    let idx: Vec<String> =
                        t.support.members().iter().map(|q| q.to_string()).collect();
                    writeln!(out, "HADTYPE {}", idx.join(",")).unwrap();
                }
                TermKind::ConjHadamardType => {
                    let idx: Vec<String> =
                        t.support.members().iter().map(|q| q.to_string()).collect();
                    writeln!(out, "CONJHADTYPE {}", idx.join(",")).unwrap();
                }
                TermKind::Dense(_) => {
                    return Err(Error::Precondition(
                        "dense terms have no text representation".into(),
                    ));
                }
            }
        }
        Ok(out)
    }

    /// Parse the Hamiltonian text format. The header's norm field must match
    /// 1/m.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .enumerate()
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| Error::Parse {
            position: 0,
            message: "empty Hamiltonian file".into(),
        })?;
        let header_err = || Error::Parse {
            position: hline + 1,
            message: format!("expected header 'HAM n=<n> norm=<1/m>', got '{header}'"),
        };
        let rest = header.strip_prefix("HAM n=").ok_or_else(header_err)?;
        let (n_str, norm_str) = rest.split_once(" norm=").ok_or_else(header_err)?;
        let n: usize = n_str.trim().parse().map_err(|_| header_err())?;
        let norm: f64 = norm_str.trim().parse().map_err(|_| header_err())?;
        let mut terms = Vec::new();
        for (lineno, line) in lines {
            let err = |message: String| Error::Parse { position: lineno + 1, message };
            let (kind, arg) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| err(format!("malformed term line '{line}'")))?;
            let term = match kind {
                "PROJ" => {
                    let s = PauliWord::parse(arg.trim())?;
                    if s.n() != n {
                        return Err(err(format!("word {s} has {} letters, expected {n}", s.n())));
                    }
                    let support = QubitSet::new(n, &s.support())?;
                    HamTerm { support, kind: TermKind::PauliProjector(s) }
                }
                "HADTYPE" | "CONJHADTYPE" => {
                    let idx: Vec<usize> = arg
                        .split(',')
                        .map(|s| s.trim().parse::<usize>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| err(format!("bad support list '{arg}'")))?;
                    let support = QubitSet::new(n, &idx)?;
                    let k = if kind == "HADTYPE" {
                        TermKind::HadamardType
                    } else {
                        TermKind::ConjHadamardType
                    };
                    HamTerm { support, kind: k }
                }
                other => return Err(err(format!("unknown term kind '{other}'"))),
            };
            terms.push(term);
        }
        let ham = LocalHamiltonian::new(n, terms)?;
        if (norm - ham.normalization()).abs() > 1e-9 * ham.normalization().max(1.0) {
            return Err(Error::Parse {
                position: hline + 1,
                message: format!(
                    "header norm {} does not match 1/m = {}",
                    norm,
                    ham.normalization()
                ),
            });
        }
        Ok(ham)
    }

    /// Full 2^n × 2^n matrix; the diagonalization oracle only (n ≤ 6).
    pub fn dense_full(&self) -> Result<CMatrix> {
        if self.n > DENSE_QUBIT_CAP {
            return Err(Error::CapExceeded {
                n: self.n,
                cap: DENSE_QUBIT_CAP,
                what: "global dense Hamiltonian".into(),
            });
        }
        let dim = 1usize << self.n;
        let mut full = CMatrix::zeros(dim);
        let w = Complex64::new(self.normalization(), 0.0);
        for t in &self.terms {
            let local = t.dense_on_support().scale(w);
            let support = t.support.members();
            let support_mask: usize = support.iter().map(|&q| 1usize << q).sum();
            let sub = 1usize << t.k();
            for rest in 0..dim {
                if rest & support_mask != 0 {
                    continue;
                }
                for row in 0..sub {
                    let mut jr = rest;
                    for (p, &q) in support.iter().enumerate() {
                        if (row >> p) & 1 == 1 {
                            jr |= 1 << q;
                        }
                    }
                    for col in 0..sub {
                        let mut jc = rest;
                        for (p, &q) in support.iter().enumerate() {
                            if (col >> p) & 1 == 1 {
                                jc |= 1 << q;
                            }
                        }
                        full[(jr, jc)] += local[(row, col)];
                    }
                }
            }
        }
        Ok(full)
    }

    /// Minimum eigenvalue by dense diagonalization (n ≤ 6).
    pub fn ground_energy_oracle(&self) -> Result<f64> {
        self.dense_full()?.min_eigenvalue()
    }
}

/// H_D = (1/n) Σ (I − H_i)/2: n Hadamard-type 1-local terms.
pub fn build_magic_hamiltonian(n: usize) -> Result<LocalHamiltonian> {
    let terms: Vec<HamTerm> = (0..n)
        .map(|q| {
            Ok(HamTerm {
                support: QubitSet::new(n, &[q])?,
                kind: TermKind::HadamardType,
            })
        })
        .collect::<Result<_>>()?;
    LocalHamiltonian::new(n, terms)
}

/// Stabilizer Hamiltonian (1/|S|) Σ (I − S)/2, one projector per generator.
/// The locality parameter is inferred as the smallest valid k.
pub fn build_stabilizer_hamiltonian(gens: &[PauliWord]) -> Result<LocalHamiltonian> {
    let n = gens
        .first()
        .map(|g| g.n())
        .ok_or_else(|| Error::Precondition("need at least one generator".into()))?;
    let terms: Vec<HamTerm> = gens
        .iter()
        .map(|s| {
            if s.n() != n {
                return Err(Error::DimensionMismatch { left: s.n(), right: n });
            }
            Ok(HamTerm {
                support: QubitSet::new(n, &s.support())?,
                kind: TermKind::PauliProjector(s.clone()),
            })
        })
        .collect::<Result<_>>()?;
    LocalHamiltonian::new(n, terms)
}

/// Like [`build_stabilizer_hamiltonian`] but enforcing a declared locality:
/// every generator must act on at most `k` qubits and every qubit may be
/// acted on by at most `k` terms.
pub fn build_stabilizer_hamiltonian_with_locality(
    gens: &[PauliWord],
    k: usize,
) -> Result<LocalHamiltonian> {
    let ham = build_stabilizer_hamiltonian(gens)?;
    if ham.max_locality() > k {
        return Err(Error::Precondition(format!(
            "a generator acts on {} qubits, over the declared locality {k}",
            ham.max_locality()
        )));
    }
    if ham.max_qubit_degree() > k {
        return Err(Error::Precondition(format!(
            "a qubit is acted on by {} terms, over the declared locality {k}",
            ham.max_qubit_degree()
        )));
    }
    Ok(ham)
}

/// D-rotate a CSS Hamiltonian: X-type projectors become Hadamard-type terms,
/// Z-type projectors become conjugated-Hadamard-type terms; supports are
/// unchanged. Generators must carry a + sign and be pure X or pure Z.
pub fn rotate_css(h: &LocalHamiltonian) -> Result<LocalHamiltonian> {
    let mut terms = Vec::with_capacity(h.term_count());
    for (i, t) in h.terms().iter().enumerate() {
        let TermKind::PauliProjector(s) = &t.kind else {
            return Err(Error::NotCss { which: i, word: "<non-projector term>".into() });
        };
        if s.phase_exp() != 0 {
            return Err(Error::NotCss { which: i, word: s.to_string() });
        }
        let letters: Vec<Letter> = s.support().iter().map(|&q| s.letter(q)).collect();
        let kind = if letters.iter().all(|l| *l == Letter::X) {
            TermKind::HadamardType
        } else if letters.iter().all(|l| *l == Letter::Z) {
            TermKind::ConjHadamardType
        } else {
            return Err(Error::NotCss { which: i, word: s.to_string() });
        };
        terms.push(HamTerm { support: t.support.clone(), kind });
    }
    LocalHamiltonian::new(h.n(), terms)
}

/// ⟨ψ|h|ψ⟩ for a single term, computed through the term's 2^k action on its
/// support. The imaginary residue must stay within 1e-12 and is clipped.
pub fn term_energy(term: &HamTerm, psi: &Statevector) -> Result<f64> {
    let applied = match &term.kind {
        TermKind::PauliProjector(s) => {
            let spsi = psi.apply_pauli(s)?;
            let e = crate::sim::overlap(psi, &spsi);
            return clip_real(Complex64::new(
                (1.0 - e.re) / 2.0,
                -e.im / 2.0,
            ));
        }
        TermKind::HadamardType => {
            let mut phi = psi.clone();
            let h = CMatrix::hadamard();
            for &q in term.support.members() {
                phi = phi.apply_matrix_on_support(&h, &[q])?;
            }
            let e = crate::sim::overlap(psi, &phi);
            return clip_real(Complex64::new((1.0 - e.re) / 2.0, -e.im / 2.0));
        }
        TermKind::ConjHadamardType => {
            let mut phi = psi.clone();
            let h = CMatrix::conj_hadamard();
            for &q in term.support.members() {
                phi = phi.apply_matrix_on_support(&h, &[q])?;
            }
            let e = crate::sim::overlap(psi, &phi);
            return clip_real(Complex64::new((1.0 - e.re) / 2.0, -e.im / 2.0));
        }
        TermKind::Dense(m) => psi.apply_matrix_on_support(m, term.support.members())?,
    };
    clip_real(crate::sim::overlap(psi, &applied))
}

fn clip_real(v: Complex64) -> Result<f64> {
    if v.im.abs() > tol::TOL_IMAG {
        return Err(Error::VerificationFailed(format!(
            "energy has imaginary residue {}",
            v.im
        )));
    }
    Ok(v.re)
}

/// ⟨ψ|H|ψ⟩ = (1/m) Σ ⟨ψ|h_i|ψ⟩, summed in ascending term order.
pub fn energy(h: &LocalHamiltonian, psi: &Statevector) -> Result<f64> {
    if psi.n() != h.n() {
        return Err(Error::DimensionMismatch { left: psi.n(), right: h.n() });
    }
    let mut acc = 0.0;
    for t in h.terms() {
        acc += term_energy(t, psi)?;
    }
    Ok(acc * h.normalization())
}

/// The magic-state energy lower bound max(0, 1 − t/n) · sin²(π/8).
pub fn theorem1_bound(n: usize, t: usize) -> f64 {
    let frac = 1.0 - t as f64 / n as f64;
    frac.max(0.0) * tol::sin2_pi_8()
}

/// Z_i Z_{i+1} chain generators of the n-qubit repetition code (2-local).
pub fn repetition_code_zz(n: usize) -> Result<Vec<PauliWord>> {
    if n < 2 {
        return Err(Error::Precondition("repetition code needs n >= 2".into()));
    }
    (0..n - 1)
        .map(|i| {
            let mut z = crate::bits::BitVec::zeros(n);
            z.set(i, true);
            z.set(i + 1, true);
            PauliWord::from_parts(n, 0, crate::bits::BitVec::zeros(n), z)
        })
        .collect()
}

/// 3-local sliding-window presentation of the repetition code:
/// Z_i Z_{i+1} Z_{i+2} for i = 0..n−3. Generates the same group as the ZZ
/// chain, with odd-size supports and per-qubit degree ≤ 3.
pub fn repetition_code_z3_windows(n: usize) -> Result<Vec<PauliWord>> {
    if n < 3 {
        return Err(Error::Precondition("3-window repetition code needs n >= 3".into()));
    }
    (0..n - 2)
        .map(|i| {
            let mut z = crate::bits::BitVec::zeros(n);
            z.set(i, true);
            z.set(i + 1, true);
            z.set(i + 2, true);
            PauliWord::from_parts(n, 0, crate::bits::BitVec::zeros(n), z)
        })
        .collect()
}

/// The six X/Z generators of the Steane [[7,1,3]] code, from the Hamming
/// parity-check rows {0001111, 0110011, 1010101}.
pub fn steane_generators() -> Vec<PauliWord> {
    const ROWS: [[usize; 4]; 3] = [[3, 4, 5, 6], [1, 2, 5, 6], [0, 2, 4, 6]];
    let mut gens = Vec::with_capacity(6);
    for row in ROWS {
        let mut x = crate::bits::BitVec::zeros(7);
        for q in row {
            x.set(q, true);
        }
        gens.push(PauliWord::from_parts(7, 0, x, crate::bits::BitVec::zeros(7)).unwrap());
    }
    for row in ROWS {
        let mut z = crate::bits::BitVec::zeros(7);
        for q in row {
            z.set(q, true);
        }
        gens.push(PauliWord::from_parts(7, 0, crate::bits::BitVec::zeros(7), z).unwrap());
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{prepare_psi_t, simulate, Circuit, Gate, Statevector};
    use crate::tol::sin2_pi_8;

    fn w(s: &str) -> PauliWord {
        PauliWord::parse(s).unwrap()
    }

    #[test]
    fn magic_hamiltonian_shape() {
        let h = build_magic_hamiltonian(3).unwrap();
        assert_eq!(h.term_count(), 3);
        assert_eq!(h.max_locality(), 1);
        assert!((h.normalization() - 1.0 / 3.0).abs() < 1e-15);
        for (q, t) in h.terms().iter().enumerate() {
            assert_eq!(t.support.members(), &[q]);
            assert!(matches!(t.kind, TermKind::HadamardType));
        }
    }

    #[test]
    fn magic_hamiltonian_dense_expansion_n2() {
        // (1/2) [ (I - H x I)/2 + (I - I x H)/2 ] built by hand
        let h = build_magic_hamiltonian(2).unwrap();
        let full = h.dense_full().unwrap();
        let had = CMatrix::hadamard();
        let id = CMatrix::identity(2);
        let t0 = CMatrix::identity(4)
            .add(&id.kron(&had).scale(-Complex64::ONE))
            .scale(Complex64::new(0.5, 0.0));
        let t1 = CMatrix::identity(4)
            .add(&had.kron(&id).scale(-Complex64::ONE))
            .scale(Complex64::new(0.5, 0.0));
        let oracle = t0.add(&t1).scale(Complex64::new(0.5, 0.0));
        assert!(full.approx_eq(&oracle, 1e-12));
    }

    #[test]
    fn stabilizer_hamiltonian_ground_spaces() {
        // all-Z: unique ground state |0...0>
        let gens: Vec<PauliWord> = (0..3)
            .map(|q| PauliWord::single(3, q, Letter::Z).unwrap())
            .collect();
        let h = build_stabilizer_hamiltonian(&gens).unwrap();
        let zero = Statevector::zero_state(3);
        assert!(energy(&h, &zero).unwrap().abs() < 1e-12);
        assert!(h.ground_energy_oracle().unwrap().abs() < 1e-10);

        // repetition code {ZZI, IZZ}: ground space spanned by |000>, |111>
        let h = build_stabilizer_hamiltonian(&repetition_code_zz(3).unwrap()).unwrap();
        let full = h.dense_full().unwrap();
        let eigs = full.hermitian_eigenvalues().unwrap();
        assert!(eigs[0].abs() < 1e-10);
        assert!(eigs[1].abs() < 1e-10);
        assert!(eigs[2] > 1e-3);
        let mut c = Circuit::new(3);
        c.gates = vec![Gate::H(0), Gate::Cnot(0, 1), Gate::Cnot(1, 2)];
        let ghz = simulate(&c).unwrap();
        assert!(energy(&h, &ghz).unwrap().abs() < 1e-12);
    }

    #[test]
    fn steane_code_ground_energy() {
        let gens = steane_generators();
        let h = build_stabilizer_hamiltonian(&gens).unwrap();
        assert_eq!(h.term_count(), 6);
        assert_eq!(h.max_locality(), 4);
        // encode logical |0>: project |0^7> onto the +1 space of the X gens
        let mut psi = Statevector::zero_state(7);
        for g in &gens[..3] {
            let gpsi = psi.apply_pauli(g).unwrap();
            let mut amps: Vec<Complex64> = psi
                .amplitudes()
                .iter()
                .zip(gpsi.amplitudes())
                .map(|(a, b)| (a + b) / 2.0)
                .collect();
            let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            for a in amps.iter_mut() {
                *a /= norm;
            }
            psi = Statevector::from_amplitudes(7, amps).unwrap();
        }
        assert!(energy(&h, &psi).unwrap().abs() < 1e-12);
    }

    #[test]
    fn frustration_freeness_random_stabilizer_hams() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(31);
        for _ in 0..10 {
            let n = 4;
            let c = crate::sim::random_circuit(n, 3, 0, rand::Rng::random(&mut rng));
            let group = crate::tableau::propagate_stabilizers(&c).unwrap();
            let h = build_stabilizer_hamiltonian(group.generators()).unwrap();
            assert!(h.ground_energy_oracle().unwrap().abs() < 1e-9);
            let psi = simulate(&c).unwrap();
            assert!(energy(&h, &psi).unwrap().abs() < 1e-9);
        }
    }

    #[test]
    fn rotate_css_examples() {
        // (I - X1X2X3)/2 -> (I - H^3)/2 on the same support
        let h = build_stabilizer_hamiltonian(&[w("XXX")]).unwrap();
        let rot = rotate_css(&h).unwrap();
        assert!(matches!(rot.terms()[0].kind, TermKind::HadamardType));
        assert_eq!(rot.terms()[0].support.members(), &[0, 1, 2]);

        // (I - Z1Z2)/2 -> conjugated type, k = 2 allowed at build time
        let h = build_stabilizer_hamiltonian(&[w("ZZ")]).unwrap();
        let rot = rotate_css(&h).unwrap();
        assert!(matches!(rot.terms()[0].kind, TermKind::ConjHadamardType));

        // non-CSS generator is rejected by name
        let h = build_stabilizer_hamiltonian(&[w("XZ")]).unwrap();
        match rotate_css(&h) {
            Err(Error::NotCss { word, .. }) => assert_eq!(word, "XZ"),
            other => panic!("expected NotCss, got {other:?}"),
        }
        // signed generator is rejected
        let h = build_stabilizer_hamiltonian(&[w("-XX")]).unwrap();
        assert!(rotate_css(&h).is_err());
    }

    #[test]
    fn rotation_consistency_dense() {
        // dense(rotate_css(h)) == D^n dense(h) D†^n, k = 1 and k = 2, n <= 3
        for gens in [vec![w("XII"), w("IZI"), w("IIX")], vec![w("XXI"), w("IZZ")]] {
            let n = 3;
            let h = build_stabilizer_hamiltonian(&gens).unwrap();
            let rot = rotate_css(&h).unwrap();
            let d = CMatrix::d_gate().kron_power(n);
            let oracle = d.mul(&h.dense_full().unwrap()).mul(&d.dagger());
            assert!(rot.dense_full().unwrap().approx_eq(&oracle, 1e-12));
        }
        // the k = 1 identity to 1e-12: D (I-X)/2 D† == (I-H)/2
        let h = build_stabilizer_hamiltonian(&[w("X")]).unwrap();
        let rot = rotate_css(&h).unwrap();
        let d = CMatrix::d_gate();
        let oracle = d.mul(&h.dense_full().unwrap()).mul(&d.dagger());
        assert!(rot.dense_full().unwrap().approx_eq(&oracle, 1e-12));
    }

    #[test]
    fn term_energy_examples() {
        let zero = Statevector::zero_state(1);
        let had_term = HamTerm {
            support: QubitSet::new(1, &[0]).unwrap(),
            kind: TermKind::HadamardType,
        };
        // <0|H|0> = 1/sqrt(2), so the term gives sin^2(pi/8)
        assert!((term_energy(&had_term, &zero).unwrap() - sin2_pi_8()).abs() < 1e-12);

        let dplus = prepare_psi_t(1, 1).unwrap();
        assert!(term_energy(&had_term, &dplus).unwrap().abs() < 1e-12);

        // (I - Z)/2 on |1> gives 1
        let one = {
            let m = CMatrix::letter(Letter::X);
            zero.apply_matrix_on_support(&m, &[0]).unwrap()
        };
        let proj = HamTerm {
            support: QubitSet::new(1, &[0]).unwrap(),
            kind: TermKind::PauliProjector(w("Z")),
        };
        assert!((term_energy(&proj, &one).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn energy_examples() {
        // psi_t under H_D: (1 - t/n) sin^2(pi/8), exactly
        for n in 1..=6usize {
            let h = build_magic_hamiltonian(n).unwrap();
            for t in 0..=n {
                let psi = prepare_psi_t(n, t).unwrap();
                let e = energy(&h, &psi).unwrap();
                let expect = (1.0 - t as f64 / n as f64) * sin2_pi_8();
                assert!((e - expect).abs() < 1e-12, "n={n} t={t}: {e} vs {expect}");
                assert!((-1e-12..=1.0 + 1e-12).contains(&e));
            }
        }
        // |0^n>: every term contributes sin^2(pi/8)
        let h = build_magic_hamiltonian(4).unwrap();
        let zero = Statevector::zero_state(4);
        assert!((energy(&h, &zero).unwrap() - sin2_pi_8()).abs() < 1e-12);
    }

    #[test]
    fn theorem1_bound_values() {
        assert!((theorem1_bound(5, 0) - sin2_pi_8()).abs() < 1e-15);
        assert_eq!(theorem1_bound(5, 5), 0.0);
        assert_eq!(theorem1_bound(3, 7), 0.0);
        assert!((theorem1_bound(8, 2) - 0.75 * sin2_pi_8()).abs() < 1e-15);
    }

    #[test]
    fn locality_declaration() {
        // Steane: weight-4 generators, per-qubit degree up to 6
        let gens = steane_generators();
        let h = build_stabilizer_hamiltonian(&gens).unwrap();
        assert_eq!(h.locality_parameter(), 6);
        assert!(build_stabilizer_hamiltonian_with_locality(&gens, 6).is_ok());
        assert!(build_stabilizer_hamiltonian_with_locality(&gens, 4).is_err());

        // 3-window repetition code: k = 3 works exactly
        let gens = repetition_code_z3_windows(8).unwrap();
        let h = build_stabilizer_hamiltonian_with_locality(&gens, 3).unwrap();
        assert_eq!(h.max_locality(), 3);
        assert_eq!(h.max_qubit_degree(), 3);
    }

    #[test]
    fn z3_windows_generate_the_repetition_group() {
        use crate::group::PauliSubgroup;
        let n = 6;
        let windows = PauliSubgroup::phaseless(n, &repetition_code_z3_windows(n).unwrap()).unwrap();
        let chain = PauliSubgroup::phaseless(n, &repetition_code_zz(n).unwrap()).unwrap();
        assert_eq!(windows.to_subspace(), chain.to_subspace());
    }

    #[test]
    fn ham_text_roundtrip() {
        let h = build_stabilizer_hamiltonian(&[w("XXI"), w("IZZ")]).unwrap();
        let rot = rotate_css(&h).unwrap();
        for ham in [h, rot] {
            let text = ham.to_text().unwrap();
            let parsed = LocalHamiltonian::parse(&text).unwrap();
            assert_eq!(parsed.n(), ham.n());
            assert_eq!(parsed.term_count(), ham.term_count());
            let zero = Statevector::zero_state(3);
            assert!(
                (energy(&parsed, &zero).unwrap() - energy(&ham, &zero).unwrap()).abs() < 1e-15
            );
        }
    }

    #[test]
    fn ham_parse_errors() {
        assert!(LocalHamiltonian::parse("").is_err());
        assert!(LocalHamiltonian::parse("HAM n=2 norm=0.5\nWAT 0\n").is_err());
        // wrong norm is rejected
        assert!(LocalHamiltonian::parse("HAM n=2 norm=0.25\nPROJ ZZ\n").is_err());
        // out-of-range support
        assert!(LocalHamiltonian::parse("HAM n=2 norm=1\nHADTYPE 5\n").is_err());
    }
}
