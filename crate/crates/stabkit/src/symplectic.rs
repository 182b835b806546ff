//! Linear and symplectic algebra over GF(2): subspaces of F₂^{2n}, orthogonal
//! complements, radicals, isotropic/Lagrangian structure.
//!
//! The universal subspace representation is a row-reduced echelon basis, so
//! equality, membership and containment are row-reduction queries with
//! deterministic output.

use std::collections::BTreeSet;

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// Default cap on `enumerate_lagrangians` (count grows as ∏ (2^i + 1)).
pub const LAGRANGIAN_ENUM_CAP: usize = 4;

/// An element of F₂^{2n} in the layout `[a | b]` with a, b ∈ F₂^n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticVector {
    bits: BitVec,
}

impl SymplecticVector {
    /// Wrap a bit vector; the length must be even.
    pub fn new(bits: BitVec) -> Result<Self> {
        if bits.len() % 2 != 0 {
            return Err(Error::OddVectorLength(bits.len()));
        }
        Ok(SymplecticVector { bits })
    }

    /// Like [`SymplecticVector::new`] but panics on odd length; for internal
    /// construction where evenness is structural.
    pub(crate) fn from_bits(bits: BitVec) -> Self {
        assert!(bits.len() % 2 == 0);
        SymplecticVector { bits }
    }

    pub fn zeros(len: usize) -> Result<Self> {
        SymplecticVector::new(BitVec::zeros(len))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// n, where the vector lives in F₂^{2n}.
    pub fn half_len(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    /// ω(x, y) = ⟨x_a, y_b⟩ + ⟨x_b, y_a⟩ mod 2; bilinear and alternating.
    pub fn symplectic_product(&self, other: &SymplecticVector) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { left: self.len(), right: other.len() });
        }
        let n = self.half_len();
        let xa = self.bits.slice(0, n);
        let xb = self.bits.slice(n, n);
        let ya = other.bits.slice(0, n);
        let yb = other.bits.slice(n, n);
        Ok(xa.dot(&yb) ^ xb.dot(&ya))
    }

    /// The half-swapped vector J·x = [b | a], so that ω(x, y) = ⟨Jx, y⟩.
    fn swap_halves(&self) -> SymplecticVector {
        let n = self.half_len();
        let a = self.bits.slice(0, n);
        let b = self.bits.slice(n, n);
        SymplecticVector::from_bits(b.concat(&a))
    }

    /// Zero out coordinates away from the qubit set: keeps positions
    /// `i` and `n + i` for `i ∈ members`.
    pub fn project_qubits(&self, members: &[usize]) -> SymplecticVector {
        let n = self.half_len();
        let mut out = BitVec::zeros(2 * n);
        for &q in members {
            if self.bits.get(q) {
                out.set(q, true);
            }
            if self.bits.get(n + q) {
                out.set(n + q, true);
            }
        }
        SymplecticVector::from_bits(out)
    }
}

/// Gauss-Jordan reduced row echelon form over GF(2). Returns reduced rows
/// sorted by strictly increasing pivot; zero rows are dropped.
fn rref_rows(mut rows: Vec<BitVec>, ncols: usize) -> Vec<BitVec> {
    let mut pivot_rows: Vec<BitVec> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..ncols {
        let Some(r) = rows.iter().position(|r| r.get(col)) else {
            continue;
        };
        let pivot = rows.swap_remove(r);
        for other in rows.iter_mut() {
            if other.get(col) {
                other.xor_assign(&pivot);
            }
        }
        for (existing, _) in pivot_rows.iter_mut().zip(pivot_cols.iter()) {
            if existing.get(col) {
                existing.xor_assign(&pivot);
            }
        }
        pivot_rows.push(pivot);
        pivot_cols.push(col);
    }
    pivot_rows
}

/// Basis of the null space { x : ⟨r, x⟩ = 0 for every row r }.
fn kernel_of_rows(rows: &[BitVec], ncols: usize) -> Vec<BitVec> {
    let reduced = rref_rows(rows.to_vec(), ncols);
    let pivots: Vec<usize> = reduced.iter().map(|r| r.first_one().unwrap()).collect();
    let mut kernel = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = BitVec::zeros(ncols);
        v.set(free, true);
        for (row, &p) in reduced.iter().zip(pivots.iter()) {
            if row.get(free) {
                v.set(p, true);
            }
        }
        kernel.push(v);
    }
    kernel
}

/// A subspace of F₂^{2n}, stored as a canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Subspace {
    ambient_dim: usize,
    basis: Vec<SymplecticVector>,
}

impl F2Subspace {
    /// Canonical basis of the span of the given rows (Gauss-Jordan over
    /// GF(2)); equal subspaces yield bit-identical bases. Empty input gives
    /// the zero subspace.
    pub fn from_rows(ambient_dim: usize, rows: &[SymplecticVector]) -> Result<Self> {
        if ambient_dim % 2 != 0 {
            return Err(Error::OddVectorLength(ambient_dim));
        }
        for r in rows {
            if r.len() != ambient_dim {
                return Err(Error::DimensionMismatch { left: r.len(), right: ambient_dim });
            }
        }
        let reduced = rref_rows(rows.iter().map(|r| r.bits.clone()).collect(), ambient_dim);
        Ok(F2Subspace {
            ambient_dim,
            basis: reduced.into_iter().map(SymplecticVector::from_bits).collect(),
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        assert!(ambient_dim % 2 == 0);
        F2Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows: Vec<SymplecticVector> = (0..ambient_dim)
            .map(|i| {
                let mut b = BitVec::zeros(ambient_dim);
                b.set(i, true);
                SymplecticVector::from_bits(b)
            })
            .collect();
        F2Subspace::from_rows(ambient_dim, &rows).unwrap()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SymplecticVector] {
        &self.basis
    }

    /// Reduce `v` against the basis; membership holds iff the residue is zero.
    pub fn member(&self, v: &SymplecticVector) -> bool {
        let mut r = v.bits.clone();
        for row in &self.basis {
            let p = row.bits.first_one().unwrap();
            if r.get(p) {
                r.xor_assign(&row.bits);
            }
        }
        r.is_zero()
    }

    pub fn contains(&self, other: &F2Subspace) -> bool {
        other.basis.iter().all(|v| self.member(v))
    }

    /// Span of the union of the two subspaces.
    pub fn sum(&self, other: &F2Subspace) -> Result<F2Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        F2Subspace::from_rows(self.ambient_dim, &rows)
    }

    /// Intersection via the Zassenhaus construction: row-reduce
    /// [A | A; B | 0] and read the right halves of rows whose left half
    /// vanished. Avoids element enumeration.
    pub fn intersect(&self, other: &F2Subspace) -> Result<F2Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        let d = self.ambient_dim;
        let mut stacked: Vec<BitVec> = Vec::new();
        for a in &self.basis {
            stacked.push(a.bits.concat(&a.bits));
        }
        let zero = BitVec::zeros(d);
        for b in &other.basis {
            stacked.push(b.bits.concat(&zero));
        }
        let reduced = rref_rows(stacked, 2 * d);
        let mut inter_rows = Vec::new();
        for row in reduced {
            if row.slice(0, d).is_zero() {
                inter_rows.push(SymplecticVector::from_bits(row.slice(d, d)));
            }
        }
        F2Subspace::from_rows(d, &inter_rows)
    }

    /// W⊥ = { x : ω(x, w) = 0 for all w ∈ W } in the standard non-degenerate
    /// symplectic space; dim W + dim W⊥ = 2n.
    pub fn orthogonal_complement(&self) -> F2Subspace {
        let rows: Vec<BitVec> = self.basis.iter().map(|b| b.swap_halves().bits).collect();
        let kernel = kernel_of_rows(&rows, self.ambient_dim);
        let vecs: Vec<SymplecticVector> =
            kernel.into_iter().map(SymplecticVector::from_bits).collect();
        F2Subspace::from_rows(self.ambient_dim, &vecs).unwrap()
    }

    /// rad(W) = W ∩ W⊥.
    pub fn radical(&self) -> F2Subspace {
        self.intersect(&self.orthogonal_complement()).unwrap()
    }

    /// W ⊆ W⊥, equivalently ω vanishes on all basis pairs.
    pub fn is_isotropic(&self) -> bool {
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                if a.symplectic_product(b).unwrap() {
                    return false;
                }
            }
        }
        true
    }

    /// W = W⊥ (canonical bases are compared bit for bit).
    pub fn is_lagrangian(&self) -> bool {
        *self == self.orthogonal_complement()
    }

    /// Symplectic Gram-Schmidt on the basis: extracts hyperbolic pairs by
    /// pivoting on the first ω-non-orthogonal pair, then sweeps the rest.
    /// Returns (leftover vectors spanning rad(W), pairs spanning a
    /// non-degenerate complement). Deterministic given the basis order.
    fn gram_schmidt_pairs(&self) -> (Vec<SymplecticVector>, Vec<(SymplecticVector, SymplecticVector)>) {
        let mut remaining: Vec<SymplecticVector> = self.basis.to_vec();
        let mut pairs = Vec::new();
        loop {
            let mut found = None;
            'scan: for i in 0..remaining.len() {
                for j in (i + 1)..remaining.len() {
                    if remaining[i].symplectic_product(&remaining[j]).unwrap() {
                        found = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((i, j)) = found else { break };
            let v = remaining.remove(j);
            let u = remaining.remove(i);
            for w in remaining.iter_mut() {
                if w.symplectic_product(&v).unwrap() {
                    w.bits.xor_assign(&u.bits);
                }
                if w.symplectic_product(&u).unwrap() {
                    w.bits.xor_assign(&v.bits);
                }
            }
            pairs.push((u, v));
        }
        (remaining, pairs)
    }

    /// Decompose W = rad(W) ⊕ S with S non-degenerate under the restricted
    /// form; dims add.
    pub fn radical_decomposition(&self) -> (F2Subspace, F2Subspace) {
        let (leftover, pairs) = self.gram_schmidt_pairs();
        let rad = F2Subspace::from_rows(self.ambient_dim, &leftover).unwrap();
        let mut s_rows = Vec::new();
        for (u, v) in &pairs {
            s_rows.push(u.clone());
            s_rows.push(v.clone());
        }
        let s = F2Subspace::from_rows(self.ambient_dim, &s_rows).unwrap();
        (rad, s)
    }

    /// A maximal isotropic subspace of W under the restricted form:
    /// rad(W) plus one side of each hyperbolic pair. Its dimension is
    /// (dim W + dim rad W)/2.
    pub fn maximal_isotropic_within(&self) -> F2Subspace {
        let (leftover, pairs) = self.gram_schmidt_pairs();
        let mut rows = leftover;
        for (u, _) in &pairs {
            rows.push(u.clone());
        }
        F2Subspace::from_rows(self.ambient_dim, &rows).unwrap()
    }

    /// Greedily adjoin vectors of W⊥ \ W until W = W⊥. Each adjunction
    /// preserves isotropy, so the result is Lagrangian and contains the input.
    pub fn extend_to_lagrangian(&self) -> Result<F2Subspace> {
        if !self.is_isotropic() {
            return Err(Error::NotIsotropic);
        }
        let mut w = self.clone();
        loop {
            let perp = w.orthogonal_complement();
            if w == perp {
                return Ok(w);
            }
            let v = perp
                .basis
                .iter()
                .find(|v| !w.member(v))
                .expect("dim W < dim W-perp guarantees a fresh vector");
            let mut rows = w.basis.clone();
            rows.push(v.clone());
            w = F2Subspace::from_rows(self.ambient_dim, &rows)?;
        }
    }

    /// Every element of the subspace (all 2^dim of them). Guarded: oracles
    /// only.
    pub fn elements(&self) -> Result<Vec<SymplecticVector>> {
        if self.dim() > 16 {
            return Err(Error::CapExceeded {
                n: self.dim(),
                cap: 16,
                what: "subspace element enumeration".into(),
            });
        }
        let mut out = Vec::with_capacity(1 << self.dim());
        for mask in 0u64..(1 << self.dim()) {
            let mut v = BitVec::zeros(self.ambient_dim);
            for (i, b) in self.basis.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    v.xor_assign(&b.bits);
                }
            }
            out.push(SymplecticVector::from_bits(v));
        }
        Ok(out)
    }

    /// The local view at a qubit set: every basis vector with coordinates
    /// zeroed outside `members ∪ (n + members)`, re-spanned.
    pub fn local_view(&self, members: &[usize]) -> F2Subspace {
        let rows: Vec<SymplecticVector> =
            self.basis.iter().map(|b| b.project_qubits(members)).collect();
        F2Subspace::from_rows(self.ambient_dim, &rows).unwrap()
    }
}

/// ∏_{i=1..n} (2^i + 1), the number of Lagrangian subspaces of F₂^{2n}.
pub fn lagrangian_count(n: usize) -> u64 {
    (1..=n).map(|i| (1u64 << i) + 1).product()
}

/// Yield every Lagrangian subspace of F₂^{2n} exactly once, in a
/// deterministic order. Refuses n beyond the cap with a size estimate.
pub fn enumerate_lagrangians(n: usize) -> Result<Vec<F2Subspace>> {
    enumerate_lagrangians_with_cap(n, LAGRANGIAN_ENUM_CAP)
}

/// Cap-adjustable variant of [`enumerate_lagrangians`]; the harness uses this
/// for the optional extended run at n = 5.
pub fn enumerate_lagrangians_with_cap(n: usize, cap: usize) -> Result<Vec<F2Subspace>> {
    if n > cap {
        return Err(Error::EnumerationTooLarge { n, estimate: lagrangian_count(n), cap });
    }
    let d = 2 * n;
    // Level-by-level closure over isotropic subspaces, deduplicated by the
    // canonical RREF basis (each row packs into a u64 since d <= 2*cap <= 64).
    let mut level: BTreeSet<Vec<u64>> = BTreeSet::new();
    level.insert(Vec::new());
    for _ in 0..n {
        let mut next: BTreeSet<Vec<u64>> = BTreeSet::new();
        for key in &level {
            let w = subspace_from_key(d, key);
            for raw in 1u64..(1 << d) {
                let v = SymplecticVector::from_bits(BitVec::from_u64(raw, d));
                if w.member(&v) {
                    continue;
                }
                if w
                    .basis
                    .iter()
                    .any(|b| b.symplectic_product(&v).unwrap())
                {
                    continue;
                }
                let mut rows = w.basis.clone();
                rows.push(v);
                let bigger = F2Subspace::from_rows(d, &rows)?;
                next.insert(subspace_key(&bigger));
            }
        }
        level = next;
    }
    Ok(level.iter().map(|k| subspace_from_key(d, k)).collect())
}

fn subspace_key(w: &F2Subspace) -> Vec<u64> {
    w.basis.iter().map(|b| b.bits.to_u64()).collect()
}

fn subspace_from_key(d: usize, key: &[u64]) -> F2Subspace {
    let rows: Vec<SymplecticVector> = key
        .iter()
        .map(|&raw| SymplecticVector::from_bits(BitVec::from_u64(raw, d)))
        .collect();
    F2Subspace::from_rows(d, &rows).unwrap()
}
