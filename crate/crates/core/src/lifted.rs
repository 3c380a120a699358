//! The lifted groups of a dynamics acting on a universal cover.
//!
//! For an orientation-preserving (`ε = 1`) or reversing (`ε = −1`) circle map
//! the lifted group is `ℤ ⋉_ε ℤ`; for a toral automorphism `A ∈ GL_n(ℤ)` it is
//! the affine group `ℤ ⋉_A ℤⁿ` acting on `ℝⁿ` by `(k, v)·x = Aᵏx + v`.
//!
//! Both families use the affine product
//!
//! ```text
//! (k, v)(k′, v′) = (k + k′, v + Aᵏ v′)      inverse (−k, −A⁻ᵏ v)
//! ```
//!
//! with `A = ε` in the circle case. This is the law that composes the affine
//! maps `x ↦ Aᵏx + v`, and the stated inverse is its two-sided inverse.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exactmath::{hnf, ExactError, IntegerMatrix, LatticeBasis, LatticeIndex};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LiftedError {
    #[error("elements belong to different lifted groups")]
    ContextMismatch,
    #[error("epsilon must be +1 or -1 (got {0})")]
    BadEpsilon(i64),
    #[error("vector has length {got}, expected {expected}")]
    BadVector { expected: usize, got: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `ε ∈ {+1, −1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Orientation(i8);

impl Orientation {
    pub const PRESERVING: Orientation = Orientation(1);
    pub const REVERSING: Orientation = Orientation(-1);

    pub fn new(epsilon: i64) -> Result<Self, LiftedError> {
        match epsilon {
            1 => Ok(Self::PRESERVING),
            -1 => Ok(Self::REVERSING),
            e => Err(LiftedError::BadEpsilon(e)),
        }
    }

    pub fn value(self) -> i64 {
        self.0 as i64
    }

    /// `εᵏ`.
    pub fn pow(self, k: i64) -> i64 {
        if self.0 == 1 || k.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

/// `(m, n) ∈ ℤ ⋉_ε ℤ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircleLiftedElement {
    pub m: i64,
    pub n: BigInt,
    pub epsilon: Orientation,
}

impl CircleLiftedElement {
    pub fn new(m: i64, n: impl Into<BigInt>, epsilon: Orientation) -> Self {
        CircleLiftedElement {
            m,
            n: n.into(),
            epsilon,
        }
    }

    pub fn identity(epsilon: Orientation) -> Self {
        Self::new(0, 0, epsilon)
    }

    fn check(&self, other: &Self) -> Result<(), LiftedError> {
        if self.epsilon != other.epsilon {
            return Err(LiftedError::ContextMismatch);
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, LiftedError> {
        self.check(other)?;
        let twist = BigInt::from(self.epsilon.pow(self.m));
        Ok(Self::new(
            self.m + other.m,
            &self.n + twist * &other.n,
            self.epsilon,
        ))
    }

    pub fn inverse(&self) -> Self {
        let twist = BigInt::from(self.epsilon.pow(self.m));
        Self::new(-self.m, -(twist * &self.n), self.epsilon)
    }

    /// `x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, other: &Self) -> Result<Self, LiftedError> {
        self.multiply(other)?
            .multiply(&self.inverse())?
            .multiply(&other.inverse())
    }
}

/// `(k, v) ∈ ℤ ⋉_A ℤⁿ`. The matrix is shared between elements of one group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToralLiftedElement {
    pub k: i64,
    pub v: Vec<BigInt>,
    pub a: Arc<IntegerMatrix>,
}

impl ToralLiftedElement {
    pub fn new(k: i64, v: Vec<BigInt>, a: Arc<IntegerMatrix>) -> Result<Self, LiftedError> {
        if v.len() != a.dim() {
            return Err(LiftedError::BadVector {
                expected: a.dim(),
                got: v.len(),
            });
        }
        if !a.is_unimodular() {
            return Err(ExactError::NotUnimodular { det: a.det() }.into());
        }
        Ok(ToralLiftedElement { k, v, a })
    }

    pub fn identity(a: Arc<IntegerMatrix>) -> Self {
        let n = a.dim();
        ToralLiftedElement {
            k: 0,
            v: vec![BigInt::zero(); n],
            a,
        }
    }

    fn check(&self, other: &Self) -> Result<(), LiftedError> {
        if !Arc::ptr_eq(&self.a, &other.a) && self.a != other.a {
            return Err(LiftedError::ContextMismatch);
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, LiftedError> {
        self.check(other)?;
        let moved = self.a.pow(self.k)?.apply(&other.v)?;
        let v = self.v.iter().zip(moved).map(|(x, y)| x + y).collect();
        Ok(ToralLiftedElement {
            k: self.k + other.k,
            v,
            a: Arc::clone(&self.a),
        })
    }

    pub fn inverse(&self) -> Result<Self, LiftedError> {
        let back = self.a.pow(-self.k)?.apply(&self.v)?;
        Ok(ToralLiftedElement {
            k: -self.k,
            v: back.into_iter().map(|x| -x).collect(),
            a: Arc::clone(&self.a),
        })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self, LiftedError> {
        self.multiply(other)?
            .multiply(&self.inverse()?)?
            .multiply(&other.inverse()?)
    }

    /// `(k, v)·x = Aᵏx + v` on integer points of ℝⁿ.
    pub fn act(&self, x: &[BigInt]) -> Result<Vec<BigInt>, LiftedError> {
        let ax = self.a.pow(self.k)?.apply(x)?;
        Ok(ax.into_iter().zip(&self.v).map(|(p, q)| p + q).collect())
    }
}

/// Element of either family, for callers that mix them dynamically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftedElement {
    Circle(CircleLiftedElement),
    Toral(ToralLiftedElement),
}

pub fn multiply(x: &LiftedElement, y: &LiftedElement) -> Result<LiftedElement, LiftedError> {
    match (x, y) {
        (LiftedElement::Circle(a), LiftedElement::Circle(b)) => {
            a.multiply(b).map(LiftedElement::Circle)
        }
        (LiftedElement::Toral(a), LiftedElement::Toral(b)) => {
            a.multiply(b).map(LiftedElement::Toral)
        }
        _ => Err(LiftedError::ContextMismatch),
    }
}

pub fn inverse(x: &LiftedElement) -> Result<LiftedElement, LiftedError> {
    match x {
        LiftedElement::Circle(a) => Ok(LiftedElement::Circle(a.inverse())),
        LiftedElement::Toral(a) => a.inverse().map(LiftedElement::Toral),
    }
}

pub fn commutator(x: &LiftedElement, y: &LiftedElement) -> Result<LiftedElement, LiftedError> {
    match (x, y) {
        (LiftedElement::Circle(a), LiftedElement::Circle(b)) => {
            a.commutator(b).map(LiftedElement::Circle)
        }
        (LiftedElement::Toral(a), LiftedElement::Toral(b)) => {
            a.commutator(b).map(LiftedElement::Toral)
        }
        _ => Err(LiftedError::ContextMismatch),
    }
}

pub const DEFAULT_KMAX: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorLattice {
    pub basis: LatticeBasis,
    pub index: LatticeIndex,
    /// Number of commutators whose translation parts generated the lattice.
    pub generators: usize,
}

/// The sublattice of `0 × ℤⁿ` generated by the commutators
/// `[(k, v), (k′, v′)]` with `|k|, |k′| ≤ k_max` and `v, v′ ∈ {0, e₁, …, eₙ}`.
///
/// This contains the columns of `I − Aᵏ` for `1 ≤ |k| ≤ k_max`. The index is
/// reported as computed; it need not be 1 (it equals `|det(I − A)|` whenever
/// that is nonzero).
pub fn commutator_lattice(a: &IntegerMatrix, k_max: u32) -> Result<CommutatorLattice, LiftedError> {
    let n = a.dim();
    let a = Arc::new(a.clone());
    let k_max = k_max as i64;
    let mut translations: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]];
    for i in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::from(1);
        translations.push(e);
    }
    let mut elements = Vec::new();
    for k in -k_max..=k_max {
        for v in &translations {
            elements.push(ToralLiftedElement::new(k, v.clone(), Arc::clone(&a))?);
        }
    }
    let mut generators = Vec::new();
    for x in &elements {
        for y in &elements {
            let c = x.commutator(y)?;
            debug_assert_eq!(c.k, 0);
            if c.v.iter().any(|t| !t.is_zero()) {
                generators.push(c.v);
            }
        }
    }
    let basis = hnf(&generators, n);
    let index = basis.index();
    Ok(CommutatorLattice {
        basis,
        index,
        generators: generators.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> Arc<IntegerMatrix> {
        Arc::new(IntegerMatrix::from_i64(&[[2, 1], [1, 1]]).unwrap())
    }

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&t| BigInt::from(t)).collect()
    }

    #[test]
    fn toral_product_example() {
        let a = cat();
        let x = ToralLiftedElement::new(1, v(&[0, 0]), a.clone()).unwrap();
        let y = ToralLiftedElement::new(0, v(&[1, 0]), a.clone()).unwrap();
        let p = x.multiply(&y).unwrap();
        assert_eq!((p.k, p.v), (1, v(&[2, 1])));
    }

    #[test]
    fn toral_inverse_formula() {
        let a = cat();
        let x = ToralLiftedElement::new(1, v(&[3, -2]), a.clone()).unwrap();
        let inv = x.inverse().unwrap();
        let expected = a.inverse().unwrap().apply(&v(&[3, -2])).unwrap();
        assert_eq!(inv.k, -1);
        assert_eq!(inv.v, expected.into_iter().map(|t| -t).collect::<Vec<_>>());
        assert_eq!(
            x.multiply(&inv).unwrap(),
            ToralLiftedElement::identity(a.clone())
        );
        assert_eq!(inv.multiply(&x).unwrap(), ToralLiftedElement::identity(a));
    }

    #[test]
    fn toral_commutator_with_generator() {
        let a = cat();
        let x = ToralLiftedElement::new(0, v(&[1, 0]), a.clone()).unwrap();
        let t = ToralLiftedElement::new(1, v(&[0, 0]), a.clone()).unwrap();
        let c = x.commutator(&t).unwrap();
        assert_eq!((c.k, c.v), (0, v(&[-1, -1])));
        assert_eq!(x.commutator(&x).unwrap(), ToralLiftedElement::identity(a));
    }

    #[test]
    fn circle_law_and_inverse_agree() {
        let eps = Orientation::REVERSING;
        let x = CircleLiftedElement::new(1, 0, eps);
        assert_eq!(x.multiply(&x).unwrap(), CircleLiftedElement::new(2, 0, eps));
        let y = CircleLiftedElement::new(1, 5, eps);
        let z = CircleLiftedElement::new(3, -2, eps);
        // (1,5)(3,−2) = (4, 5 + (−1)·(−2))
        assert_eq!(y.multiply(&z).unwrap(), CircleLiftedElement::new(4, 7, eps));
        assert_eq!(
            y.multiply(&y.inverse()).unwrap(),
            CircleLiftedElement::identity(eps)
        );
        assert_eq!(
            y.inverse().multiply(&y).unwrap(),
            CircleLiftedElement::identity(eps)
        );
    }

    #[test]
    fn circle_matches_one_dimensional_toral_group() {
        // ℤ ⋉_ε ℤ is ℤ ⋉_A ℤ¹ with A = (ε).
        for eps in [Orientation::PRESERVING, Orientation::REVERSING] {
            let a = Arc::new(IntegerMatrix::from_i64(&[[eps.value()]]).unwrap());
            for (m1, n1, m2, n2) in [(1, 2, 1, 3), (-3, 1, 2, -7), (2, -4, -5, 1)] {
                let c = CircleLiftedElement::new(m1, n1, eps)
                    .multiply(&CircleLiftedElement::new(m2, n2, eps))
                    .unwrap();
                let t = ToralLiftedElement::new(m1, v(&[n1]), a.clone())
                    .unwrap()
                    .multiply(&ToralLiftedElement::new(m2, v(&[n2]), a.clone()).unwrap())
                    .unwrap();
                assert_eq!((c.m, vec![c.n]), (t.k, t.v));
            }
        }
    }

    #[test]
    fn context_mismatch() {
        let x = CircleLiftedElement::new(1, 0, Orientation::PRESERVING);
        let y = CircleLiftedElement::new(1, 0, Orientation::REVERSING);
        assert_eq!(x.multiply(&y), Err(LiftedError::ContextMismatch));
        let t = ToralLiftedElement::identity(cat());
        assert_eq!(
            multiply(&LiftedElement::Circle(x), &LiftedElement::Toral(t)),
            Err(LiftedError::ContextMismatch)
        );
        assert_eq!(Orientation::new(2), Err(LiftedError::BadEpsilon(2)));
    }

    #[test]
    fn commutator_lattices() {
        let cat = IntegerMatrix::from_i64(&[[2, 1], [1, 1]]).unwrap();
        assert_eq!(
            commutator_lattice(&cat, 1).unwrap().index,
            LatticeIndex::Finite(1.into())
        );
        let id = IntegerMatrix::identity(2);
        let l = commutator_lattice(&id, 3).unwrap();
        assert_eq!((l.index, l.basis.rank()), (LatticeIndex::Infinite, 0));
        // det(I − A) = −2 for A = [[3,1],[2,1]]
        let a = IntegerMatrix::from_i64(&[[3, 1], [2, 1]]).unwrap();
        assert_eq!(
            commutator_lattice(&a, 6).unwrap().index,
            LatticeIndex::Finite(2.into())
        );
        // the swap is not hyperbolic; I − A has rank 1
        let swap = IntegerMatrix::from_i64(&[[0, 1], [1, 0]]).unwrap();
        let l = commutator_lattice(&swap, 2).unwrap();
        assert_eq!(l.basis.rank(), 1);
        assert_eq!(l.basis.basis(), &[v(&[1, -1])]);
    }
}
