//! Square integer matrices with exact determinant, inverse and powers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::{ExactError, IntegerPolynomial, QuadraticNumber};

/// An `n × n` integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerMatrix {
    rows: Vec<Vec<BigInt>>,
}

/// Serializes as nested arrays; entries outside `i64` become decimal strings.
impl Serialize for IntegerMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Row<'a>(&'a [BigInt]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for x in self.0 {
                    match i64::try_from(x) {
                        Ok(v) => seq.serialize_element(&v)?,
                        Err(_) => seq.serialize_element(&x.to_string())?,
                    }
                }
                seq.end()
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.rows.len()))?;
        for r in &self.rows {
            seq.serialize_element(&Row(r))?;
        }
        seq.end()
    }
}

impl IntegerMatrix {
    /// Total order preferring "simple" matrices: smaller largest entry, then
    /// fewer nonzero entries, then fewer nonzero off-diagonal entries, then
    /// row-major lexicographic with `0 < 1 < −1 < 2 < −2 < …`.
    pub fn simplicity_cmp(&self, other: &Self) -> std::cmp::Ordering {
        let nonzero = |m: &Self| m.rows.iter().flatten().filter(|x| !x.is_zero()).count();
        let off_diagonal = |m: &Self| {
            m.rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, x)| i != j && !x.is_zero())
                        .count()
                })
                .sum::<usize>()
        };
        let key = |v: &BigInt| (v.abs(), v.is_negative());
        self.max_abs_entry()
            .cmp(&other.max_abs_entry())
            .then_with(|| nonzero(self).cmp(&nonzero(other)))
            .then_with(|| off_diagonal(self).cmp(&off_diagonal(other)))
            .then_with(|| {
                self.rows
                    .iter()
                    .flatten()
                    .map(key)
                    .cmp(other.rows.iter().flatten().map(key))
            })
    }

    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self, ExactError> {
        let n = rows.len();
        if n == 0 {
            return Err(ExactError::NotSquare);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(ExactError::NotSquare);
        }
        Ok(IntegerMatrix { rows })
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, ExactError> {
        Self::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        IntegerMatrix { rows }
    }

    pub fn zero(n: usize) -> Self {
        IntegerMatrix {
            rows: vec![vec![BigInt::zero(); n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.dim()).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        IntegerMatrix {
            rows: self.columns(),
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim()).map(|i| self.rows[i][i].clone()).sum()
    }

    fn check_dim(&self, other: &Self) -> Result<(), ExactError> {
        if self.dim() != other.dim() {
            return Err(ExactError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_dim(other)?;
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.rows[i][k] * &other.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(IntegerMatrix { rows })
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_dim(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
            .collect();
        Ok(IntegerMatrix { rows })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntegerMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x * k).collect())
                .collect(),
        }
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>, ExactError> {
        if v.len() != self.dim() {
            return Err(ExactError::DimensionMismatch {
                left: self.dim(),
                right: v.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim();
        let mut m = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Integer inverse; exists iff the determinant is ±1.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(ExactError::NotUnimodular { det });
        }
        // A⁻¹ = adj(A)/det and det = ±1, so A⁻¹ = det · adj(A).
        let n = self.dim();
        if n == 1 {
            return Ok(IntegerMatrix {
                rows: vec![vec![det]],
            });
        }
        let cofactor = |i: usize, j: usize| {
            let minor = self.minor(i, j).det();
            if (i + j).is_multiple_of(2) {
                minor
            } else {
                -minor
            }
        };
        let rows = (0..n)
            .map(|j| (0..n).map(|i| cofactor(i, j) * &det).collect())
            .collect();
        Ok(IntegerMatrix { rows })
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != row)
            .map(|(_, r)| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        IntegerMatrix { rows }
    }

    /// `A^k` for any integer `k`; negative powers need a unimodular matrix.
    pub fn pow(&self, k: i64) -> Result<Self, ExactError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.dim());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier; every
    /// division in the recurrence is exact over ℤ.
    pub fn charpoly(&self) -> IntegerPolynomial {
        let n = self.dim();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let ident = Self::identity(n);
        let mut m = Self::zero(n);
        for k in 1..=n {
            m = self
                .mul(&m)
                .and_then(|am| am.add(&ident.scale(&coeffs[n - k + 1])))
                .expect("same dimension");
            let tr = self.mul(&m).expect("same dimension").trace();
            coeffs[n - k] = -(tr / BigInt::from(k));
        }
        IntegerPolynomial::new(coeffs)
    }

    /// Applies the 2×2 matrix as a homography in column layout:
    /// `[[a, c], [b, d]]` sends `τ ↦ (aτ + b)/(cτ + d)`.
    ///
    /// Under this layout `(M·N)·τ = N·(M·τ)`, i.e. the matrices act on the
    /// right. The transpose convention (`[[a, b], [c, d]]`) acts on the left.
    pub fn apply_homography(&self, tau: &QuadraticNumber) -> Result<QuadraticNumber, ExactError> {
        if self.dim() != 2 {
            return Err(ExactError::DimensionMismatch {
                left: 2,
                right: self.dim(),
            });
        }
        let (a, c) = (&self.rows[0][0], &self.rows[0][1]);
        let (b, d) = (&self.rows[1][0], &self.rows[1][1]);
        let den = tau.mul_integer(c).add_integer(d);
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        tau.mul_integer(a).add_integer(b).div(&den)
    }

    /// Largest absolute entry.
    pub fn max_abs_entry(&self) -> BigInt {
        self.rows
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or_default()
    }

    /// `gcd` of all entries (0 for the zero matrix).
    pub fn content(&self) -> BigInt {
        self.rows
            .iter()
            .flatten()
            .fold(BigInt::zero(), |g, x| g.gcd(x))
    }
}

/// `qn_apply_homography`: the column-layout homography action on a quadratic
/// number. See [`IntegerMatrix::apply_homography`].
pub fn qn_apply_homography(
    m: &IntegerMatrix,
    tau: &QuadraticNumber,
) -> Result<QuadraticNumber, ExactError> {
    m.apply_homography(tau)
}

impl fmt::Display for IntegerMatrix {
    /// Bracketed row list, `[[2,1],[1,1]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[[i64; 2]]) -> IntegerMatrix {
        IntegerMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn determinant_and_inverse() {
        let cat = m(&[[2, 1], [1, 1]]);
        assert_eq!(cat.det(), BigInt::from(1));
        let inv = cat.inverse().unwrap();
        assert_eq!(inv, m(&[[1, -1], [-1, 2]]));
        assert_eq!(cat.mul(&inv).unwrap(), IntegerMatrix::identity(2));
        let a3 = IntegerMatrix::from_i64(&[[1, 2, 0], [0, 1, 3], [1, 0, 1]]).unwrap();
        assert_eq!(a3.det(), BigInt::from(7));
        let u3 = IntegerMatrix::from_i64(&[[1, 2, 3], [0, 1, 4], [0, 0, -1]]).unwrap();
        assert_eq!(
            u3.mul(&u3.inverse().unwrap()).unwrap(),
            IntegerMatrix::identity(3)
        );
        assert!(matches!(
            m(&[[2, 0], [0, 1]]).inverse(),
            Err(ExactError::NotUnimodular { .. })
        ));
    }

    #[test]
    fn zero_pivot_determinant() {
        let a = IntegerMatrix::from_i64(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        assert_eq!(a.det(), BigInt::from(-1));
        assert_eq!(m(&[[1, 2], [2, 4]]).det(), BigInt::from(0));
    }

    #[test]
    fn powers() {
        let cat = m(&[[2, 1], [1, 1]]);
        assert_eq!(cat.pow(2).unwrap(), m(&[[5, 3], [3, 2]]));
        assert_eq!(cat.pow(-1).unwrap(), cat.inverse().unwrap());
        assert_eq!(cat.pow(0).unwrap(), IntegerMatrix::identity(2));
        assert_eq!(
            cat.pow(3).unwrap().mul(&cat.pow(-3).unwrap()).unwrap(),
            IntegerMatrix::identity(2)
        );
    }

    #[test]
    fn characteristic_polynomials() {
        let i64s =
            |p: IntegerPolynomial| p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
        assert_eq!(
            i64s(IntegerMatrix::identity(2).charpoly()),
            ["1", "-2", "1"]
        );
        assert_eq!(i64s(m(&[[2, 1], [1, 1]]).charpoly()), ["1", "-3", "1"]);
        assert_eq!(i64s(m(&[[0, -1], [1, 0]]).charpoly()), ["1", "0", "1"]);
        // companion of x³ − 2x + 5
        let c = IntegerMatrix::from_i64(&[[0, 0, -5], [1, 0, 2], [0, 1, 0]]).unwrap();
        assert_eq!(i64s(c.charpoly()), ["5", "-2", "0", "1"]);
    }

    #[test]
    fn homography_examples() {
        let r2 = QuadraticNumber::sqrt(2);
        let t = m(&[[1, 0], [1, 1]]);
        assert_eq!(
            t.apply_homography(&r2).unwrap(),
            QuadraticNumber::new(1, 1, 1, 2).unwrap()
        );
        let s = m(&[[0, 1], [1, 0]]);
        let phi = QuadraticNumber::new(1, 1, 2, 5).unwrap();
        assert_eq!(
            s.apply_homography(&phi).unwrap(),
            QuadraticNumber::new(-1, 1, 2, 5).unwrap()
        );
        // [[2,1],[1,1]]: τ ↦ (2τ+1)/(τ+1)
        let x = m(&[[2, 1], [1, 1]]).apply_homography(&r2).unwrap();
        let f = 2f64.sqrt();
        assert!((x.to_f64() - (2.0 * f + 1.0) / (f + 1.0)).abs() < 1e-12);
        assert_eq!(x, QuadraticNumber::new(3, -1, 1, 2).unwrap());
    }

    #[test]
    fn homography_zero_denominator() {
        // τ = −1, M = [[1,1],[0,1]]: (τ + 0)/(τ + 1)
        let minus_one = QuadraticNumber::from_integer(-1);
        let mm = m(&[[1, 1], [0, 1]]);
        assert_eq!(
            mm.apply_homography(&minus_one),
            Err(ExactError::ZeroDenominator)
        );
    }

    #[test]
    fn display() {
        assert_eq!(m(&[[2, 1], [-1, 1]]).to_string(), "[[2,1],[-1,1]]");
    }
}
