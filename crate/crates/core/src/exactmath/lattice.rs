//! Sublattices of ℤⁿ in Hermite normal form.
//!
//! Convention: basis vectors `b₁, …, b_r` are the columns of a lower
//! triangular echelon matrix. Each `bⱼ` has a pivot (its first nonzero
//! coordinate) at row `pⱼ` with `p₁ < p₂ < … < p_r`, the pivot entry is
//! positive, and every earlier vector is reduced against it:
//! `0 ≤ bᵢ[pⱼ] < bⱼ[pⱼ]` for `i < j`. This form is unique per lattice.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Index of a sublattice in ℤⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    /// The sublattice has rank below `n`.
    Infinite,
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(k) => write!(f, "{k}"),
            LatticeIndex::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    n: usize,
    basis: Vec<Vec<BigInt>>,
}

fn pivot(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn axpy(target: &mut [BigInt], k: &BigInt, v: &[BigInt]) {
    for (t, x) in target.iter_mut().zip(v) {
        *t -= k * x;
    }
}

/// Hermite normal form of the lattice spanned by `vectors` in ℤⁿ.
///
/// # Panics
/// If a vector does not have length `n`.
pub fn hnf(vectors: &[Vec<BigInt>], n: usize) -> LatticeBasis {
    assert!(
        vectors.iter().all(|v| v.len() == n),
        "vector length must equal ambient dimension"
    );
    let mut pool: Vec<Vec<BigInt>> = vectors
        .iter()
        .filter(|v| pivot(v).is_some())
        .cloned()
        .collect();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for row in 0..n {
        // Euclid on the vectors whose leading coordinate sits in this row.
        let mut active: Vec<Vec<BigInt>> = Vec::new();
        pool.retain(|v| {
            if pivot(v) == Some(row) {
                active.push(v.clone());
                false
            } else {
                true
            }
        });
        while active.len() > 1 {
            let (min_idx, _) = active
                .iter()
                .enumerate()
                .min_by_key(|(_, v)| v[row].abs())
                .expect("nonempty");
            let piv = active.swap_remove(min_idx);
            let mut rest = Vec::with_capacity(active.len());
            for mut v in active.drain(..) {
                let q = v[row].div_floor(&piv[row]);
                axpy(&mut v, &q, &piv);
                if v[row].is_zero() {
                    if pivot(&v).is_some() {
                        pool.push(v);
                    }
                } else {
                    rest.push(v);
                }
            }
            rest.push(piv);
            active = rest;
        }
        if let Some(mut v) = active.pop() {
            if v[row].is_negative() {
                v.iter_mut().for_each(|x| *x = -x.clone());
            }
            basis.push(v);
        }
    }
    for j in 0..basis.len() {
        let p = pivot(&basis[j]).expect("basis vectors are nonzero");
        let (head, tail) = basis.split_at_mut(j);
        let bj = &tail[0];
        for bi in head.iter_mut() {
            let q = bi[p].div_floor(&bj[p]);
            if !q.is_zero() {
                axpy(bi, &q, bj);
            }
        }
    }
    LatticeBasis { n, basis }
}

impl LatticeBasis {
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| pivot(v).expect("nonzero"))
            .collect()
    }

    /// Product of the pivots for full-rank lattices.
    pub fn index(&self) -> LatticeIndex {
        if self.rank() < self.n {
            return LatticeIndex::Infinite;
        }
        let prod = self
            .basis
            .iter()
            .zip(self.pivots())
            .fold(BigInt::one(), |acc, (v, p)| acc * &v[p]);
        LatticeIndex::Finite(prod)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut w = v.to_vec();
        for b in &self.basis {
            let p = pivot(b).expect("nonzero");
            if w[..p].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = w[p].div_rem(&b[p]);
            if !r.is_zero() {
                return false;
            }
            axpy(&mut w, &q, b);
        }
        w.iter().all(Zero::is_zero)
    }

    /// `self ⊆ other`.
    pub fn is_sublattice_of(&self, other: &LatticeBasis) -> bool {
        self.n == other.n && self.basis.iter().all(|b| other.contains(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn standard_examples() {
        let id = hnf(&vs(&[&[1, 0], &[0, 1]]), 2);
        assert_eq!(id.basis(), vs(&[&[1, 0], &[0, 1]]).as_slice());
        assert_eq!(id.index(), LatticeIndex::Finite(1.into()));
        let two = hnf(&vs(&[&[2, 0], &[0, 2]]), 2);
        assert_eq!(two.index(), LatticeIndex::Finite(4.into()));
        // columns of I − A for the cat map: (−1, −1), (−1, 0)
        let cat = hnf(&vs(&[&[-1, -1], &[-1, 0]]), 2);
        assert_eq!(cat.index(), LatticeIndex::Finite(1.into()));
        assert_eq!(hnf(&[], 3).index(), LatticeIndex::Infinite);
        assert_eq!(hnf(&vs(&[&[0, 0]]), 2).rank(), 0);
    }

    #[test]
    fn reduced_and_idempotent() {
        let l = hnf(&vs(&[&[3, 5, 1], &[0, 4, 7], &[6, 1, 1], &[9, 9, 9]]), 3);
        assert_eq!(hnf(l.basis(), 3), l);
        let piv = l.pivots();
        for (j, bj) in l.basis().iter().enumerate() {
            assert!(bj[piv[j]].is_positive());
            for bi in &l.basis()[..j] {
                assert!(!bi[piv[j]].is_negative() && bi[piv[j]] < bj[piv[j]]);
            }
        }
    }

    #[test]
    fn membership() {
        let l = hnf(&vs(&[&[2, 1], &[0, 3]]), 2);
        assert!(l.contains(&vs(&[&[2, 4]])[0]));
        assert!(!l.contains(&vs(&[&[1, 0]])[0]));
        assert_eq!(l.index(), LatticeIndex::Finite(6.into()));
    }
}
