//! Rigid circle rotations up to isomorphism of their orbit stacks.
//!
//! Two irrational rotation numbers give isomorphic stacks exactly when they
//! lie in one orbit of `GL₂(ℤ)` acting by homographies. For rationals and
//! real quadratic irrationals this is decidable: by Serret's theorem two
//! irrationals are `GL₂(ℤ)`-equivalent iff their continued fractions
//! eventually agree, and for quadratic irrationals the expansions are
//! eventually periodic, so the test reduces to comparing periods up to
//! cyclic rotation.
//!
//! The full group (determinant ±1) is used throughout. The finer `SL₂(ℤ)`
//! classification, which adds a parity condition on the tails, is not
//! implemented.
//!
//! All rational rotation numbers fall into a single class; their stacks are
//! all `S¹ × ∗//ℤ`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactmath::{ExactError, IntegerMatrix, QuadraticField, QuadraticNumber};

/// `[a₀; a₁, …, a_r, (period)…]`. The period is empty iff the value is
/// rational; otherwise it is minimal, and the preperiod is the shortest one
/// that still contains `a₀` (so the golden ratio is `[1; (1)]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    pub preperiod: Vec<BigInt>,
    pub period: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn is_rational(&self) -> bool {
        self.period.is_empty()
    }

    /// Digit `i` of the expansion, or `None` past the end of a finite one.
    pub fn digit(&self, i: usize) -> Option<&BigInt> {
        if i < self.preperiod.len() {
            return self.preperiod.get(i);
        }
        if self.period.is_empty() {
            return None;
        }
        let j = (i - self.preperiod.len()) % self.period.len();
        self.period.get(j)
    }

    /// The first `n` digits (fewer for a short rational expansion).
    pub fn digits(&self, n: usize) -> Vec<BigInt> {
        (0..n).map_while(|i| self.digit(i).cloned()).collect()
    }

    /// Least rotation of the period under lexicographic order.
    pub fn canonical_period(&self) -> Vec<BigInt> {
        least_rotation(&self.period).0
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        f.write_str("[")?;
        if let Some((head, tail)) = self.preperiod.split_first() {
            write!(f, "{head}")?;
            if !tail.is_empty() || !self.period.is_empty() {
                f.write_str(";")?;
            }
            f.write_str(&join(tail))?;
            if !tail.is_empty() && !self.period.is_empty() {
                f.write_str(",")?;
            }
        } else {
            f.write_str(";")?;
        }
        if !self.period.is_empty() {
            write!(f, "({})", join(&self.period))?;
        }
        f.write_str("]")
    }
}

/// Returns the least rotation and its offset: `rot = v[k..] ++ v[..k]`.
fn least_rotation(v: &[BigInt]) -> (Vec<BigInt>, usize) {
    let n = v.len();
    let rotate = |k: usize| v[k..].iter().chain(&v[..k]).cloned().collect::<Vec<_>>();
    (0..n.max(1))
        .map(|k| (rotate(k.min(n)), k))
        .min()
        .unwrap_or_default()
}

/// State of the surd recurrence: the complete quotient `(P + √D)/Q` with
/// `Q | D − P²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Surd {
    p: BigInt,
    q: BigInt,
}

/// Continued fraction expansion of a rational or real quadratic number.
pub fn cf_expand(tau: &QuadraticNumber) -> ContinuedFraction {
    let Some(d) = tau.field().radicand() else {
        return expand_rational(tau.a(), tau.c());
    };
    let (a, b, c) = (tau.a(), tau.b(), tau.c());
    let s = if b.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let p0 = &s * a;
    let q0 = &s * c;
    let d0 = b * b * BigInt::from(d);
    let big_d = &d0 * &q0 * &q0;
    let mut state = Surd {
        p: &p0 * q0.abs(),
        q: &q0 * q0.abs(),
    };
    let root = big_d.sqrt();
    let mut seen: HashMap<Surd, usize> = HashMap::new();
    let mut digits = Vec::new();
    loop {
        if let Some(&j) = seen.get(&state) {
            let period = digits.split_off(j);
            return ContinuedFraction {
                preperiod: digits,
                period,
            };
        }
        // a₀ always stays in the preperiod
        if !digits.is_empty() {
            seen.insert(state.clone(), digits.len());
        }
        let digit = if state.q.is_positive() {
            (&state.p + &root).div_floor(&state.q)
        } else {
            -(&state.p + &root).div_floor(&-&state.q) - 1
        };
        let p_next = &digit * &state.q - &state.p;
        let q_next = (&big_d - &p_next * &p_next) / &state.q;
        digits.push(digit);
        state = Surd {
            p: p_next,
            q: q_next,
        };
    }
}

fn expand_rational(num: &BigInt, den: &BigInt) -> ContinuedFraction {
    let (mut n, mut m) = (num.clone(), den.clone());
    let mut digits = Vec::new();
    while !m.is_zero() {
        let (q, r) = n.div_mod_floor(&m);
        digits.push(q);
        n = m;
        m = r;
    }
    ContinuedFraction {
        preperiod: digits,
        period: Vec::new(),
    }
}

/// Which test settled an equivalence question.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum EquivReason {
    BothRational,
    RationalAndIrrational,
    DifferentFields {
        left: String,
        right: String,
    },
    MatchingPeriods {
        period: Vec<String>,
    },
    DifferentPeriods {
        left: Vec<String>,
        right: Vec<String>,
    },
}

impl fmt::Display for EquivReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivReason::BothRational => f.write_str("both rational"),
            EquivReason::RationalAndIrrational => f.write_str("one rational, one irrational"),
            EquivReason::DifferentFields { left, right } => {
                write!(f, "different fields {left} and {right}")
            }
            EquivReason::MatchingPeriods { period } => {
                write!(f, "periods agree up to rotation: ({})", period.join(","))
            }
            EquivReason::DifferentPeriods { left, right } => {
                write!(
                    f,
                    "periods differ: ({}) vs ({})",
                    left.join(","),
                    right.join(",")
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationVerdict {
    pub equivalent: bool,
    pub reason: EquivReason,
    /// For equivalent pairs, a matrix `M` (column layout) with `M·τ = σ`.
    pub witness: Option<IntegerMatrix>,
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Standard-layout product `Π [[aᵢ, 1], [1, 0]]`, the matrix of
/// `x ↦ [a₀; a₁, …, a_k, x]`.
fn convergent_matrix(digits: &[BigInt]) -> IntegerMatrix {
    let mut acc = IntegerMatrix::identity(2);
    for a in digits {
        let step = IntegerMatrix::new(vec![
            vec![a.clone(), BigInt::one()],
            vec![BigInt::one(), BigInt::zero()],
        ])
        .expect("2x2");
        acc = acc.mul(&step).expect("2x2");
    }
    acc
}

/// Decides `GL₂(ℤ)`-homography equivalence and, when equivalent, produces a
/// certified witness.
pub fn gl2z_equivalent(tau: &QuadraticNumber, sigma: &QuadraticNumber) -> RotationVerdict {
    let no = |reason| RotationVerdict {
        equivalent: false,
        reason,
        witness: None,
    };
    match (tau.field(), sigma.field()) {
        (QuadraticField::Rational, QuadraticField::Rational) => {
            let (ct, cs) = (cf_expand(tau), cf_expand(sigma));
            // τ = S_τ(∞), σ = S_σ(∞)
            let h = convergent_matrix(&cs.preperiod)
                .mul(
                    &convergent_matrix(&ct.preperiod)
                        .inverse()
                        .expect("unimodular"),
                )
                .expect("2x2");
            return certified(tau, sigma, h.transpose(), EquivReason::BothRational);
        }
        (QuadraticField::Rational, _) | (_, QuadraticField::Rational) => {
            return no(EquivReason::RationalAndIrrational);
        }
        (f, g) if f != g => {
            return no(EquivReason::DifferentFields {
                left: f.to_string(),
                right: g.to_string(),
            });
        }
        _ => {}
    }
    let (et, es) = (cf_expand(tau), cf_expand(sigma));
    let (rt, kt) = least_rotation(&et.period);
    let (rs, ks) = least_rotation(&es.period);
    if rt != rs {
        return no(EquivReason::DifferentPeriods {
            left: strings(&et.period),
            right: strings(&es.period),
        });
    }
    // x (start of τ's period) advanced by kt steps and y advanced by ks steps
    // both equal the purely periodic number with period rt. Let j be the
    // offset that takes x to y.
    let n = et.period.len();
    let j = (kt + n - ks) % n;
    let s_tau = convergent_matrix(&et.preperiod);
    let s_sigma = convergent_matrix(&es.preperiod);
    let r = convergent_matrix(&et.period[..j]);
    // τ = S_τ·R·y and σ = S_σ·y in the standard layout.
    let h = s_sigma
        .mul(&r.inverse().expect("unimodular"))
        .and_then(|m| m.mul(&s_tau.inverse().expect("unimodular")))
        .expect("2x2");
    certified(
        tau,
        sigma,
        h.transpose(),
        EquivReason::MatchingPeriods {
            period: strings(&rt),
        },
    )
}

fn certified(
    tau: &QuadraticNumber,
    sigma: &QuadraticNumber,
    m: IntegerMatrix,
    reason: EquivReason,
) -> RotationVerdict {
    assert_eq!(
        m.apply_homography(tau).as_ref(),
        Ok(sigma),
        "homography witness failed verification"
    );
    RotationVerdict {
        equivalent: true,
        reason,
        witness: Some(m),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleResult {
    Found(IntegerMatrix),
    NotFoundWithinBound,
}

/// Exhaustive search over unimodular `M` with entries in `[−bound, bound]`
/// for `M·τ = σ` (column layout). Only `Found` is conclusive.
///
/// The witness is the least solution under [`IntegerMatrix::simplicity_cmp`],
/// so `τ = σ` yields the identity.
pub fn brute_force_equiv_oracle(
    tau: &QuadraticNumber,
    sigma: &QuadraticNumber,
    bound: u32,
) -> OracleResult {
    if tau.field().join(sigma.field()).is_err() {
        return OracleResult::NotFoundWithinBound;
    }
    let b = bound as i64;
    let values: Vec<i64> = std::iter::once(0)
        .chain((1..=b).flat_map(|k| [k, -k]))
        .collect();
    for height in 0..=b {
        let vals: Vec<i64> = values
            .iter()
            .copied()
            .filter(|x| x.abs() <= height)
            .collect();
        let mut best: Option<IntegerMatrix> = None;
        for &a in &vals {
            for &c in &vals {
                for &bb in &vals {
                    for &d in &vals {
                        if [a, c, bb, d].iter().all(|x| x.abs() < height) {
                            continue;
                        }
                        let det = a * d - c * bb;
                        if det != 1 && det != -1 {
                            continue;
                        }
                        let m = IntegerMatrix::from_i64(&[[a, c], [bb, d]]).expect("2x2");
                        match m.apply_homography(tau) {
                            Ok(x) if &x == sigma => {
                                if best.as_ref().is_none_or(|b| m.simplicity_cmp(b).is_lt()) {
                                    best = Some(m);
                                }
                            }
                            Ok(_) | Err(ExactError::ZeroDenominator) => {}
                            Err(e) => unreachable!("fields already checked: {e}"),
                        }
                    }
                }
            }
        }
        if let Some(m) = best {
            return OracleResult::Found(m);
        }
    }
    OracleResult::NotFoundWithinBound
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: u64) -> QuadraticNumber {
        QuadraticNumber::new(a, b, c, d).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn classical_expansions() {
        let phi = cf_expand(&q(1, 1, 2, 5));
        assert_eq!((phi.preperiod, phi.period), (ints(&[1]), ints(&[1])));
        let r2 = cf_expand(&QuadraticNumber::sqrt(2));
        assert_eq!((r2.preperiod, r2.period), (ints(&[1]), ints(&[2])));
        let r = cf_expand(&QuadraticNumber::from_ratio(7, 3).unwrap());
        assert_eq!((r.preperiod, r.period), (ints(&[2, 3]), ints(&[])));
        // √7 = [2; (1,1,1,4)]
        let r7 = cf_expand(&QuadraticNumber::sqrt(7));
        assert_eq!((r7.preperiod, r7.period), (ints(&[2]), ints(&[1, 1, 1, 4])));
    }

    #[test]
    fn negative_and_conjugate_surds() {
        // −√2 = [−2; 1, (2)]
        let x = cf_expand(&q(0, -1, 1, 2));
        assert_eq!(x.digits(5), ints(&[-2, 1, 1, 2, 2]));
        // (1 − √5)/2 ≈ −0.618 = [−1; 2, (1)]
        let y = cf_expand(&q(1, -1, 2, 5));
        assert_eq!(y.digits(4), ints(&[-1, 2, 1, 1]));
        assert!((y.period == ints(&[1])));
    }

    #[test]
    fn rational_canonical_form() {
        for (n, d) in [(1, 1), (-5, 3), (13, 8), (0, 7), (22, 7)] {
            let cf = cf_expand(&QuadraticNumber::from_ratio(n, d).unwrap());
            if cf.preperiod.len() > 1 {
                assert!(cf.preperiod.last().unwrap() >= &BigInt::from(2));
            }
        }
        assert_eq!(
            cf_expand(&QuadraticNumber::from_ratio(-5, 3).unwrap()).preperiod,
            ints(&[-2, 3])
        );
    }

    #[test]
    fn display_cf() {
        assert_eq!(
            cf_expand(&QuadraticNumber::sqrt(7)).to_string(),
            "[2;(1,1,1,4)]"
        );
        assert_eq!(
            cf_expand(&QuadraticNumber::from_ratio(7, 3).unwrap()).to_string(),
            "[2;3]"
        );
        assert_eq!(cf_expand(&q(1, 1, 2, 5)).to_string(), "[1;(1)]");
    }

    #[test]
    fn equivalence_examples() {
        let r2 = QuadraticNumber::sqrt(2);
        let v = gl2z_equivalent(&r2, &r2.add_integer(&BigInt::one()));
        assert!(v.equivalent);
        let v = gl2z_equivalent(&q(1, 1, 2, 5), &r2);
        assert!(!v.equivalent);
        assert!(matches!(v.reason, EquivReason::DifferentFields { .. }));
        let v = gl2z_equivalent(&r2, &q(0, 2, 1, 2));
        assert!(!v.equivalent);
        assert!(matches!(v.reason, EquivReason::DifferentPeriods { .. }));
        let v = gl2z_equivalent(
            &QuadraticNumber::from_ratio(3, 7).unwrap(),
            &QuadraticNumber::from_integer(-2),
        );
        assert!(v.equivalent && v.reason == EquivReason::BothRational);
        assert!(!gl2z_equivalent(&r2, &QuadraticNumber::one()).equivalent);
    }

    #[test]
    fn witness_from_periods() {
        let r2 = QuadraticNumber::sqrt(2);
        let m = IntegerMatrix::from_i64(&[[2, 3], [-1, -1]]).unwrap();
        let sigma = m.apply_homography(&r2).unwrap();
        let v = gl2z_equivalent(&r2, &sigma);
        assert!(v.equivalent);
        assert_eq!(v.witness.unwrap().apply_homography(&r2).unwrap(), sigma);
    }

    #[test]
    fn oracle_examples() {
        let r2 = QuadraticNumber::sqrt(2);
        assert_eq!(
            brute_force_equiv_oracle(&r2, &r2, 1),
            OracleResult::Found(IntegerMatrix::identity(2))
        );
        assert_eq!(
            brute_force_equiv_oracle(&r2, &q(1, 1, 1, 2), 1),
            OracleResult::Found(IntegerMatrix::from_i64(&[[1, 0], [1, 1]]).unwrap())
        );
        assert_eq!(
            brute_force_equiv_oracle(&q(1, 1, 2, 5), &r2, 3),
            OracleResult::NotFoundWithinBound
        );
    }
}
