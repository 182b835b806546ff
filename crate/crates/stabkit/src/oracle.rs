//! Brute-force oracles. Everything here recomputes a quantity by exhaustive
//! enumeration, independently of the polynomial-time route it cross-checks,
//! and is only meant for desk-scale inputs.

use std::collections::BTreeSet;

use crate::bits::BitVec;
use crate::group::PauliSubgroup;
use crate::pauli::PauliWord;
use crate::symplectic::{F2Subspace, SymplecticVector};

/// The center of M found by filtering every element against every generator.
pub fn center_by_element_filter(m: &PauliSubgroup) -> PauliSubgroup {
    let central: Vec<PauliWord> = m
        .elements()
        .expect("oracle inputs stay under the enumeration cap")
        .into_iter()
        .filter(|e| {
            m.generators()
                .iter()
                .all(|g| e.commutator(g).unwrap() == 1)
        })
        .collect();
    PauliSubgroup::phaseless(m.n(), &central).unwrap()
}

fn subspace_key(w: &F2Subspace) -> Vec<u64> {
    w.basis().iter().map(|b| b.bits().to_u64()).collect()
}

/// Dimension of a largest isotropic subspace contained in `w`, by level-wise
/// exhaustive search over its elements.
pub fn max_isotropic_dim_bruteforce(w: &F2Subspace) -> usize {
    let elements = w
        .elements()
        .expect("oracle inputs stay under the enumeration cap");
    let mut level: BTreeSet<Vec<u64>> = BTreeSet::new();
    level.insert(Vec::new());
    let mut best = 0;
    loop {
        let mut next: BTreeSet<Vec<u64>> = BTreeSet::new();
        for key in &level {
            let rows: Vec<SymplecticVector> = key
                .iter()
                .map(|&raw| {
                    SymplecticVector::new(BitVec::from_u64(raw, w.ambient_dim())).unwrap()
                })
                .collect();
            let current = F2Subspace::from_rows(w.ambient_dim(), &rows).unwrap();
            for v in &elements {
                if v.is_zero() || current.member(v) {
                    continue;
                }
                if current
                    .basis()
                    .iter()
                    .any(|b| b.symplectic_product(v).unwrap())
                {
                    continue;
                }
                let mut bigger_rows = current.basis().to_vec();
                bigger_rows.push(v.clone());
                let bigger = F2Subspace::from_rows(w.ambient_dim(), &bigger_rows).unwrap();
                next.insert(subspace_key(&bigger));
            }
        }
        if next.is_empty() {
            return best;
        }
        best += 1;
        level = next;
    }
}

/// c(M) by exhaustive search: commuting subgroups of M are exactly the
/// isotropic subspaces of its Pauli-vector span.
pub fn max_commuting_dim_bruteforce(m: &PauliSubgroup) -> usize {
    max_isotropic_dim_bruteforce(&m.to_subspace())
}

/// Every subspace of F₂^d, found by closing under vector adjoining. The
/// count for d = 4 is 67.
pub fn enumerate_all_subspaces(d: usize) -> Vec<F2Subspace> {
    assert!(d <= 8, "exhaustive subspace enumeration is for tiny ambients");
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    seen.insert(Vec::new());
    let mut frontier: Vec<Vec<u64>> = vec![Vec::new()];
    while let Some(key) = frontier.pop() {
        let rows: Vec<SymplecticVector> = key
            .iter()
            .map(|&raw| SymplecticVector::new(BitVec::from_u64(raw, d)).unwrap())
            .collect();
        let current = F2Subspace::from_rows(d, &rows).unwrap();
        for raw in 1u64..(1 << d) {
            let v = SymplecticVector::new(BitVec::from_u64(raw, d)).unwrap();
            if current.member(&v) {
                continue;
            }
            let mut bigger_rows = current.basis().to_vec();
            bigger_rows.push(v);
            let bigger = F2Subspace::from_rows(d, &bigger_rows).unwrap();
            let k = subspace_key(&bigger);
            if seen.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    seen.iter()
        .map(|key| {
            let rows: Vec<SymplecticVector> = key
                .iter()
                .map(|&raw| SymplecticVector::new(BitVec::from_u64(raw, d)).unwrap())
                .collect();
            F2Subspace::from_rows(d, &rows).unwrap()
        })
        .collect()
}

/// The local view of a group computed the slow way: project every single
/// element and re-span.
pub fn local_view_by_elements(g: &PauliSubgroup, members: &[usize]) -> PauliSubgroup {
    let projected: Vec<PauliWord> = g
        .elements()
        .expect("oracle inputs stay under the enumeration cap")
        .iter()
        .map(|e| {
            let v = e.to_pauli_vector().project_qubits(members);
            PauliWord::from_pauli_vector(&v)
        })
        .collect();
    PauliSubgroup::phaseless(g.n(), &projected).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PauliWord {
        PauliWord::parse(s).unwrap()
    }

    #[test]
    fn subspace_count_of_f2_4() {
        // 1 + 15 + 35 + 15 + 1
        assert_eq!(enumerate_all_subspaces(4).len(), 67);
    }

    #[test]
    fn brute_force_c_on_known_groups() {
        // full quotient P1: c = 1
        let p1 = PauliSubgroup::phaseless(1, &[w("X"), w("Z")]).unwrap();
        assert_eq!(max_commuting_dim_bruteforce(&p1), 1);
        // commuting group: c = dim
        let c = PauliSubgroup::phaseless(3, &[w("ZZI"), w("IZZ")]).unwrap();
        assert_eq!(max_commuting_dim_bruteforce(&c), 2);
    }

    #[test]
    fn fact6_matches_bruteforce_on_all_subgroups_of_p2() {
        for w in enumerate_all_subspaces(4) {
            let m = PauliSubgroup::from_subspace(&w);
            assert_eq!(
                m.max_commuting_dimension().unwrap(),
                max_commuting_dim_bruteforce(&m),
                "mismatch on {m:?}"
            );
        }
    }
}
