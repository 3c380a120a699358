use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use orbistack::exactmath::{
    count_real_roots_in, hnf, qn_apply_homography, IntegerMatrix, IntegerPolynomial,
    QuadraticField, QuadraticNumber,
};
use proptest::prelude::*;

const RADICANDS: [u64; 6] = [2, 3, 5, 6, 7, 10];

fn element(d: u64) -> impl Strategy<Value = QuadraticNumber> {
    (-30i64..=30, -30i64..=30, 1i64..=12)
        .prop_map(move |(a, b, c)| QuadraticNumber::new(a, b, c, d).unwrap())
}

fn same_field_pair() -> impl Strategy<Value = (u64, QuadraticNumber, QuadraticNumber)> {
    proptest::sample::select(RADICANDS.to_vec())
        .prop_flat_map(|d| (Just(d), element(d), element(d)))
}

fn unimodular() -> impl Strategy<Value = IntegerMatrix> {
    [-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4]
        .prop_filter("det = ±1", |e| (e[0] * e[3] - e[1] * e[2]).abs() == 1)
        .prop_map(|e| IntegerMatrix::from_i64(&[[e[0], e[1]], [e[2], e[3]]]).unwrap())
}

/// Lowest terms, positive denominator, and a field that agrees with `b`.
fn canonical(x: &QuadraticNumber, d: u64) -> bool {
    let g = x.a().gcd(x.b()).gcd(x.c());
    let field_ok = if x.b().is_zero() {
        x.field() == QuadraticField::Rational
    } else {
        x.field() == QuadraticField::Real(d)
    };
    x.c().is_positive() && g.is_one() && field_ok
}

proptest! {
    #[test]
    fn field_closure((d, x, y) in same_field_pair()) {
        let sum = x.add(&y).unwrap();
        let prod = x.mul(&y).unwrap();
        prop_assert!(canonical(&sum, d));
        prop_assert!(canonical(&prod, d));
        prop_assert_eq!(sum.sub(&y).unwrap(), x.clone());
        if !x.is_zero() {
            let inv = x.inv().unwrap();
            prop_assert!(canonical(&inv, d));
            prop_assert_eq!(x.mul(&inv).unwrap(), QuadraticNumber::one());
        }
        let approx = x.to_f64() * y.to_f64();
        prop_assert!((prod.to_f64() - approx).abs() <= 1e-9 * (1.0 + approx.abs()));
    }

    #[test]
    fn homography_acts_on_the_right(m in unimodular(), n in unimodular(), tau in element(2)) {
        prop_assume!(!tau.is_rational());
        let mn = m.mul(&n).unwrap();
        let lhs = qn_apply_homography(&mn, &tau).unwrap();
        let rhs = qn_apply_homography(&n, &qn_apply_homography(&m, &tau).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(qn_apply_homography(&IntegerMatrix::identity(2), &tau).unwrap(), tau);
    }

    #[test]
    fn hnf_depends_only_on_the_lattice(
        gens in proptest::collection::vec(proptest::collection::vec(-9i64..=9, 3), 1..5),
        ops in proptest::collection::vec((0usize..8, 0usize..8, -3i64..=3), 0..12),
        extra in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 0..3),
    ) {
        let big = |v: &Vec<i64>| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let original: Vec<Vec<BigInt>> = gens.iter().map(big).collect();
        // row additions and sign flips, reversed order, plus redundant
        // integer combinations
        let mut other = original.clone();
        let k = other.len();
        for &(i, j, t) in &ops {
            let (i, j) = (i % k, j % k);
            if i != j {
                let row: Vec<BigInt> = other[j].iter().map(|x| x * t).collect();
                for (a, b) in other[i].iter_mut().zip(row) {
                    *a += b;
                }
            } else {
                other[i].iter_mut().for_each(|x| *x = -x.clone());
            }
        }
        other.reverse();
        for coeffs in &extra {
            let mut v = vec![BigInt::zero(); 3];
            for (row, c) in original.iter().zip(coeffs) {
                for (a, b) in v.iter_mut().zip(row) {
                    *a += b * c;
                }
            }
            other.push(v);
        }
        prop_assert_eq!(hnf(&original, 3), hnf(&other, 3));
    }

    #[test]
    fn sturm_counts_constructed_roots(
        roots in proptest::collection::vec((-12i64..=12, 1i64..=3), 0..5),
        repeat in proptest::collection::vec(1u32..=2, 5),
        complex in 0i64..=3,
        lo in -6i64..=0,
        width in 1i64..=8,
        open in any::<bool>(),
    ) {
        // ∏ (b x − a)^m · (x² + complex) has the distinct real roots a/b
        let mut p = IntegerPolynomial::from_i64(&[1]);
        let mut distinct: Vec<BigRational> = Vec::new();
        for (i, &(a, b)) in roots.iter().enumerate() {
            for _ in 0..repeat[i] {
                p = p.mul(&IntegerPolynomial::from_i64(&[-a, b]));
            }
            let r = BigRational::new(a.into(), b.into());
            if !distinct.contains(&r) {
                distinct.push(r);
            }
        }
        if complex > 0 {
            p = p.mul(&IntegerPolynomial::from_i64(&[complex, 0, 1]));
        }
        let lo = BigRational::from_integer(lo.into());
        let hi = &lo + BigRational::from_integer(width.into());
        let expected = distinct
            .iter()
            .filter(|r| if open { **r > lo && **r < hi } else { **r >= lo && **r <= hi })
            .count();
        prop_assert_eq!(count_real_roots_in(&p, &lo, &hi, open), expected);
    }

    #[test]
    fn sturm_agrees_with_descartes_bisection(
        coeffs in proptest::collection::vec(-9i64..=9, 2..=7),
        lo in -8i64..=2,
        width in 1i64..=10,
        open in any::<bool>(),
    ) {
        let p = IntegerPolynomial::from_i64(&coeffs);
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let expected = oracle::distinct_roots(&big, lo, lo + width, open);
        let (l, h) = (BigRational::from_integer(lo.into()), BigRational::from_integer((lo + width).into()));
        prop_assert_eq!(count_real_roots_in(&p, &l, &h, open), expected);
    }
}

#[test]
fn homography_example_matches_floating_point() {
    let m = IntegerMatrix::from_i64(&[[2, 1], [1, 1]]).unwrap();
    let tau = QuadraticNumber::sqrt(2);
    let x = qn_apply_homography(&m, &tau).unwrap();
    assert_eq!(x, QuadraticNumber::new(3, -1, 1, 2).unwrap());
    let s = 2f64.sqrt();
    assert!((x.to_f64() - (2.0 * s + 1.0) / (s + 1.0)).abs() < 1e-12);
}

/// Root counting by Descartes' rule of signs with bisection on the squarefree
/// part, written from scratch over `Vec<BigInt>` (constant term first).
mod oracle {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::{One, Signed, Zero};

    type Poly = Vec<BigInt>;
    type QPoly = Vec<BigRational>;

    fn trim<T: Zero>(mut p: Vec<T>) -> Vec<T> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    fn rem(a: &QPoly, b: &QPoly) -> QPoly {
        let mut r = a.clone();
        let lead = b.last().unwrap();
        while r.len() >= b.len() {
            let k = r.len() - b.len();
            let f = r.last().unwrap() / lead;
            for (i, c) in b.iter().enumerate() {
                r[i + k] -= &f * c;
            }
            r = trim(r);
        }
        r
    }

    fn div(a: &QPoly, b: &QPoly) -> QPoly {
        let mut r = a.clone();
        let mut q = vec![BigRational::zero(); a.len() + 1 - b.len()];
        let lead = b.last().unwrap();
        while r.len() >= b.len() {
            let k = r.len() - b.len();
            let f = r.last().unwrap() / lead;
            for (i, c) in b.iter().enumerate() {
                r[i + k] -= &f * c;
            }
            q[k] = f;
            r.pop();
            r = trim(r);
        }
        q
    }

    fn squarefree(p: &Poly) -> Poly {
        let q: QPoly = p
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let dq: QPoly = trim(
            (1..q.len())
                .map(|i| &q[i] * BigRational::from_integer(i.into()))
                .collect(),
        );
        let (mut a, mut b) = (q.clone(), dq);
        while !b.is_empty() {
            let r = rem(&a, &b);
            a = b;
            b = r;
        }
        let s = div(&q, &a);
        let den = s.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        s.iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect()
    }

    fn eval(p: &Poly, x: &BigRational) -> BigRational {
        p.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    /// `p(x + t)`
    fn shift(p: &Poly, t: &BigInt) -> Poly {
        let mut c = p.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let add = &c[j + 1] * t;
                c[j] += add;
            }
        }
        c
    }

    /// `p(w x)`
    fn scale(p: &Poly, w: &BigInt) -> Poly {
        let mut f = BigInt::one();
        p.iter()
            .map(|c| {
                let v = c * &f;
                f *= w;
                v
            })
            .collect()
    }

    fn variations(p: &Poly) -> usize {
        let signs: Vec<bool> = p
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Roots in the open interval (0, 1) of a squarefree polynomial.
    fn roots01(p: &Poly) -> usize {
        let mut p = trim(p.clone());
        if p.first().is_some_and(Zero::is_zero) {
            p.remove(0);
        }
        if p.len() <= 1 {
            return 0;
        }
        let rev: Poly = p.iter().rev().cloned().collect();
        match variations(&shift(&rev, &BigInt::one())) {
            0 => 0,
            1 => 1,
            _ => {
                // 2ⁿ p(x/2) on (0, 1) and its shift cover (0, ½) and (½, 1)
                let n = p.len() - 1;
                let half: Poly = p.iter().enumerate().map(|(i, c)| c << (n - i)).collect();
                let right = shift(&half, &BigInt::one());
                let mid = usize::from(right[0].is_zero());
                roots01(&half) + mid + roots01(&right)
            }
        }
    }

    pub fn distinct_roots(p: &Poly, lo: i64, hi: i64, open: bool) -> usize {
        let p = squarefree(&trim(p.clone()));
        let moved = scale(&shift(&p, &BigInt::from(lo)), &BigInt::from(hi - lo));
        let ends = if open {
            0
        } else {
            [lo, hi]
                .iter()
                .filter(|&&x| eval(&p, &BigRational::from_integer(x.into())).is_zero())
                .count()
        };
        roots01(&moved) + ends
    }
}

#[test]
fn oracle_on_known_polynomials() {
    let p = |c: &[i64]| c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(oracle::distinct_roots(&p(&[-2, 0, 1]), 0, 2, true), 1);
    assert_eq!(oracle::distinct_roots(&p(&[-2, 0, 1]), -2, 2, true), 2);
    // (x − 1)(x − 2)(x − 3)
    assert_eq!(oracle::distinct_roots(&p(&[-6, 11, -6, 1]), 1, 3, false), 3);
    assert_eq!(oracle::distinct_roots(&p(&[-6, 11, -6, 1]), 1, 3, true), 1);
    // (x − 1)²(x + 1)
    assert_eq!(oracle::distinct_roots(&p(&[1, -1, -1, 1]), -5, 5, true), 2);
    // 4x² − 4x + 1 = (2x − 1)²
    assert_eq!(oracle::distinct_roots(&p(&[1, -4, 4]), 0, 1, true), 1);
}
