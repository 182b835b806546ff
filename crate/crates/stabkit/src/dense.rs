//! Small dense complex matrices: the brute-force side of every matrix-level
//! cross-check. Matrices here are materialized per term (dimension 2^k) or,
//! for the diagonalization oracle, up to a hard cap of n ≤ 6 qubits.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliWord};

/// Hard cap for globally materialized 2^n × 2^n matrices.
pub const DENSE_QUBIT_CAP: usize = 6;

/// Row-major square complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let dim = rows.len();
        let mut m = CMatrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim);
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        m
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += *b;
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> CMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn dagger(&self) -> CMatrix {
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let (a, b) = (self.dim, other.dim);
        let mut out = CMatrix::zeros(a * b);
        for i in 0..a {
            for j in 0..a {
                let s = self[(i, j)];
                if s == Complex64::ZERO {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        out[(i * b + k, j * b + l)] = s * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn approx_eq(&self, other: &CMatrix, tol: f64) -> bool {
        self.dim == other.dim
            && self
                .data
                .iter()
                .zip(other.data.iter())
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.approx_eq(&self.dagger(), tol)
    }

    /// 2×2 matrix of a single Pauli letter.
    pub fn letter(l: Letter) -> CMatrix {
        let o = Complex64::ZERO;
        let one = Complex64::ONE;
        let i = Complex64::I;
        match l {
            Letter::I => CMatrix::from_rows(&[&[one, o], &[o, one]]),
            Letter::X => CMatrix::from_rows(&[&[o, one], &[one, o]]),
            Letter::Y => CMatrix::from_rows(&[&[o, -i], &[i, o]]),
            Letter::Z => CMatrix::from_rows(&[&[one, o], &[o, -one]]),
        }
    }

    /// Full 2^n × 2^n matrix of a Pauli word, including its phase. Qubit 0 is
    /// the low index bit, so the Kronecker chain runs from qubit n−1 down.
    pub fn pauli_word(p: &PauliWord) -> CMatrix {
        assert!(p.n() <= 10, "dense Pauli words are for small-n oracles only");
        let mut m = CMatrix::identity(1);
        for q in (0..p.n()).rev() {
            m = m.kron(&CMatrix::letter(p.letter(q)));
        }
        let phase = Complex64::I.powu(p.phase_exp() as u32);
        m.scale(phase)
    }

    /// The Hadamard matrix.
    pub fn hadamard() -> CMatrix {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        CMatrix::from_rows(&[&[s, s], &[s, -s]])
    }

    /// −XHX = (Z − X)/√2, the single-qubit image of Z under D-rotation.
    pub fn conj_hadamard() -> CMatrix {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        CMatrix::from_rows(&[&[s, -s], &[-s, -s]])
    }

    /// D = e^{iπ/8 Y} = cos(π/8) I + i sin(π/8) Y.
    pub fn d_gate() -> CMatrix {
        let (c, s) = {
            let t = std::f64::consts::PI / 8.0;
            (t.cos(), t.sin())
        };
        let cc = Complex64::new(c, 0.0);
        let ss = Complex64::new(s, 0.0);
        CMatrix::from_rows(&[&[cc, ss], &[-ss, cc]])
    }

    /// n-fold Kronecker power of a single-qubit matrix.
    pub fn kron_power(&self, n: usize) -> CMatrix {
        let mut m = CMatrix::identity(1);
        for _ in 0..n {
            m = m.kron(self);
        }
        m
    }

    /// All eigenvalues, for Hermitian input, via the real-symmetric embedding
    /// [[Re, −Im], [Im, Re]] (each eigenvalue appears twice; duplicates are
    /// collapsed by returning the sorted list of the embedded spectrum).
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.is_hermitian(1e-10) {
            return Err(Error::Precondition("matrix is not Hermitian".into()));
        }
        let n = self.dim;
        let mut real = nalgebra::DMatrix::<f64>::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                let v = self[(i, j)];
                real[(i, j)] = v.re;
                real[(i + n, j + n)] = v.re;
                real[(i + n, j)] = v.im;
                real[(i, j + n)] = -v.im;
            }
        }
        let eig = nalgebra::SymmetricEigen::new(real);
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // embedded spectrum doubles multiplicities; keep every other entry
        Ok(vals.into_iter().step_by(2).collect())
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(self
            .hermitian_eigenvalues()?
            .first()
            .copied()
            .unwrap_or(0.0))
    }

    /// Spectral norm of a Hermitian matrix (max |eigenvalue|).
    pub fn hermitian_spectral_norm(&self) -> Result<f64> {
        Ok(self
            .hermitian_eigenvalues()?
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs())))
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_letter_algebra() {
        let x = CMatrix::letter(Letter::X);
        let y = CMatrix::letter(Letter::Y);
        let z = CMatrix::letter(Letter::Z);
        // XY = iZ
        assert!(x.mul(&y).approx_eq(&z.scale(Complex64::I), 1e-15));
        // H = (X + Z)/sqrt(2)
        let h = x.add(&z).scale(Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0));
        assert!(h.approx_eq(&CMatrix::hadamard(), 1e-15));
    }

    #[test]
    fn d_conjugation_identities() {
        let d = CMatrix::d_gate();
        let dd = d.dagger();
        // D X D† = H
        let rot_x = d.mul(&CMatrix::letter(Letter::X)).mul(&dd);
        assert!(rot_x.approx_eq(&CMatrix::hadamard(), 1e-12));
        // D Z D† = −XHX
        let rot_z = d.mul(&CMatrix::letter(Letter::Z)).mul(&dd);
        assert!(rot_z.approx_eq(&CMatrix::conj_hadamard(), 1e-12));
        // D Y D† = Y
        let rot_y = d.mul(&CMatrix::letter(Letter::Y)).mul(&dd);
        assert!(rot_y.approx_eq(&CMatrix::letter(Letter::Y), 1e-12));
    }

    #[test]
    fn hermitian_eigenvalues_of_z_kron_z() {
        let z = CMatrix::letter(Letter::Z);
        let zz = z.kron(&z);
        let eigs = zz.hermitian_eigenvalues().unwrap();
        assert_eq!(eigs.len(), 4);
        assert!((eigs[0] + 1.0).abs() < 1e-12);
        assert!((eigs[3] - 1.0).abs() < 1e-12);
        assert!((zz.hermitian_spectral_norm().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn min_eigenvalue_of_projector() {
        // (I - Z)/2 has eigenvalues {0, 1}
        let z = CMatrix::letter(Letter::Z);
        let proj = CMatrix::identity(2)
            .add(&z.scale(-Complex64::ONE))
            .scale(Complex64::new(0.5, 0.0));
        assert!(proj.min_eigenvalue().unwrap().abs() < 1e-12);
    }
}
