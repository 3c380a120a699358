//! Hyperbolic toral automorphisms up to isomorphism of their orbit stacks.
//!
//! `T^n // f_A ≃ T^n // f_B` iff `A` is `GL_n(ℤ)`-conjugate to `B` or `B⁻¹`.
//! Conjugacy is decided completely for `n = 2` through the Latimer–MacDuffee
//! correspondence, and semi-decided for every `n` by a bounded search.
//!
//! # Latimer–MacDuffee for `n = 2`
//!
//! For `A = [[a, b], [c, d]]` with irreducible characteristic polynomial
//! `x² − tx + n` and root `θ`, the vector `u = (b, θ − a)` satisfies
//! `Au = θu`, and its entries span the ideal `I_A = ℤb + ℤ(θ − a)` of
//! `ℤ[θ]`. `A` and `B` are conjugate iff `I_A = γ·I_B` for some `γ ∈ ℚ(θ)*`,
//! i.e. iff the slopes `ω = (θ − a)/b` are related by an integral homography.
//! Real orders (`t² − 4n > 0`) are compared through the periodic continued
//! fractions of the slopes, which walk the cycle of reduced ideals; imaginary
//! orders through the reduced positive definite form of the slope.
//!
//! In both cases the homography `ω_A = M·ω_B` is turned into a conjugator:
//! `u_A ∝ N·u_B` for an integral `N`, so `P = N⁻¹` satisfies `PAP⁻¹ = B`.
//! Every `Yes` carries such a `P`, checked exactly before it is returned.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactmath::{
    count_real_roots_in, ExactError, IntegerMatrix, IntegerPolynomial, QuadraticNumber,
};
use crate::rotation::{cf_expand, gl2z_equivalent};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ToralError {
    #[error("matrices have different dimensions ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: BigInt },
    #[error("matrix {0} is not hyperbolic")]
    NotHyperbolic(IntegerMatrix),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn require_unimodular(a: &IntegerMatrix) -> Result<(), ToralError> {
    let det = a.det();
    if !det.abs().is_one() {
        return Err(ToralError::NotUnimodular { det });
    }
    Ok(())
}

/// `x ↦ Ax` on `ℝⁿ/ℤⁿ` has no eigenvalue of modulus one.
///
/// 2×2 inputs use the trace test; larger ones the Sturm test of
/// [`is_hyperbolic_sturm`].
pub fn is_hyperbolic(a: &IntegerMatrix) -> Result<bool, ToralError> {
    if a.dim() == 2 {
        is_hyperbolic_trace(a)
    } else {
        is_hyperbolic_sturm(a)
    }
}

/// 2×2 criterion: `det = 1` needs `|tr| > 2`, `det = −1` needs `tr ≠ 0`.
pub fn is_hyperbolic_trace(a: &IntegerMatrix) -> Result<bool, ToralError> {
    require_unimodular(a)?;
    if a.dim() != 2 {
        return Err(ToralError::DimensionMismatch {
            left: 2,
            right: a.dim(),
        });
    }
    let t = a.trace();
    Ok(if a.det().is_one() {
        t.abs() > BigInt::from(2)
    } else {
        !t.is_zero()
    })
}

/// Any dimension. With `f` the characteristic polynomial, every root on the
/// unit circle is a root of `g = gcd(f, xⁿf(1/x))`. Roots ±1 are tested
/// directly; otherwise `g` is palindromic of degree `2m` and
/// `g(z) = z^m·h(z + 1/z)`, and `z` lies on the unit circle iff `z + 1/z` is a
/// real number in `(−2, 2)`, which Sturm counting decides.
pub fn is_hyperbolic_sturm(a: &IntegerMatrix) -> Result<bool, ToralError> {
    require_unimodular(a)?;
    let f = a.charpoly();
    let g = f.gcd(&f.reversed());
    if g.degree().unwrap_or(0) == 0 {
        return Ok(true);
    }
    if g.eval(&BigInt::one()).is_zero() || g.eval(&-BigInt::one()).is_zero() {
        return Ok(false);
    }
    let h = palindromic_to_trace_polynomial(&g);
    let two = BigRational::from_integer(BigInt::from(2));
    Ok(count_real_roots_in(&h, &-two.clone(), &two, true) == 0)
}

/// For palindromic `g` of degree `2m`, the `h` of degree `m` with
/// `g(z) = z^m·h(z + 1/z)`, via `z^k + z^{−k} = D_k(w)`,
/// `D₁ = w`, `D₂ = w² − 2`, `D_{k+1} = w·D_k − D_{k−1}`.
fn palindromic_to_trace_polynomial(g: &IntegerPolynomial) -> IntegerPolynomial {
    let c = g.coeffs();
    let deg = c.len() - 1;
    debug_assert!(
        deg.is_multiple_of(2) && c.iter().eq(c.iter().rev()),
        "palindromic of even degree"
    );
    let m = deg / 2;
    let w = IntegerPolynomial::from_i64(&[0, 1]);
    let mut prev = IntegerPolynomial::from_i64(&[2]);
    let mut cur = w.clone();
    let mut h = IntegerPolynomial::new(vec![c[m].clone()]);
    for k in 1..=m {
        let term = IntegerPolynomial::new(cur.coeffs().iter().map(|x| x * &c[m + k]).collect());
        h = h.sub(&term.mul(&IntegerPolynomial::from_i64(&[-1])));
        let next = w.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    h
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    LatimerMacduffee,
    BoundedSearch,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::LatimerMacduffee => "latimer_macduffee",
            Method::BoundedSearch => "bounded_search",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugacyConfig {
    pub method: Method,
    /// Entry bound for the bounded search.
    pub bound: u32,
}

impl Default for ConjugacyConfig {
    fn default() -> Self {
        ConjugacyConfig {
            method: Method::LatimerMacduffee,
            bound: 20,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
        })
    }
}

/// A checkable reason for a `No`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Obstruction {
    CharpolyMismatch {
        left: String,
        right: String,
    },
    /// Different ideal classes; `left`/`right` are the class invariants
    /// (canonical reduced cycles or reduced forms).
    DistinctIdealClasses {
        left: String,
        right: String,
    },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::CharpolyMismatch { left, right } => {
                write!(f, "charpoly mismatch: {left} vs {right}")
            }
            Obstruction::DistinctIdealClasses { left, right } => {
                write!(f, "distinct ideal classes: {left} vs {right}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyVerdict {
    pub status: Status,
    /// For `Yes`: `P` with `P·A·P⁻¹ = B` and `det P = ±1`.
    pub certificate: Option<IntegerMatrix>,
    pub obstruction: Option<Obstruction>,
    /// The search bound, when the answer came from (or fell back to) a search.
    pub bound: Option<u32>,
    pub method: Method,
    pub notes: Vec<String>,
}

impl ConjugacyVerdict {
    fn no(obstruction: Obstruction, method: Method) -> Self {
        ConjugacyVerdict {
            status: Status::No,
            certificate: None,
            obstruction: Some(obstruction),
            bound: None,
            method,
            notes: Vec::new(),
        }
    }
}

/// `P·A·P⁻¹ = B`, checked as `P·A = B·P` with `det P = ±1`.
pub fn verify_certificate(a: &IntegerMatrix, b: &IntegerMatrix, p: &IntegerMatrix) -> bool {
    p.is_unimodular() && p.mul(a).ok() == b.mul(p).ok()
}

/// An ideal `ℤq + ℤ(p + θ)` of `ℤ[θ]`, `θ² = tθ − n`, with `q > 0` and
/// `0 ≤ p < q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIdeal {
    pub q: BigInt,
    pub p: BigInt,
    pub trace: BigInt,
    pub norm: BigInt,
}

impl QuadraticIdeal {
    /// `I_A = ℤb + ℤ(θ − a)`, normalized. Needs `b ≠ 0`, which holds whenever
    /// the characteristic polynomial is irreducible.
    pub fn from_matrix(a: &IntegerMatrix) -> Option<Self> {
        if a.dim() != 2 || a.get(0, 1).is_zero() {
            return None;
        }
        let q = a.get(0, 1).abs();
        let p = (-a.get(0, 0)).mod_floor(&q);
        Some(QuadraticIdeal {
            q,
            p,
            trace: a.trace(),
            norm: a.det(),
        })
    }

    pub fn discriminant(&self) -> BigInt {
        &self.trace * &self.trace - BigInt::from(4) * &self.norm
    }

    /// Closed under multiplication by `θ`: `q | p² + tp + n`.
    pub fn is_module(&self) -> bool {
        (&self.p * &self.p + &self.trace * &self.p + &self.norm).is_multiple_of(&self.q)
    }

    /// The slope `(p + θ)/q` for real orders, `θ = (t + √Δ)/2`.
    pub fn slope(&self) -> Option<QuadraticNumber> {
        let disc = self.discriminant().to_u64()?;
        QuadraticNumber::new(
            BigInt::from(2) * &self.p + &self.trace,
            1,
            BigInt::from(2) * &self.q,
            disc,
        )
        .ok()
    }

    /// Canonical cycle of reduced ideals, read off the period of the slope's
    /// continued fraction (least rotation). Real orders only.
    pub fn reduced_cycle(&self) -> Option<Vec<BigInt>> {
        self.slope().map(|w| cf_expand(&w).canonical_period())
    }
}

/// Positive definite form `(A, B, C)` with root `ω = (−B + i√|Δ|)/(2A)` in the
/// upper half plane.
#[derive(Clone, Debug, PartialEq, Eq)]
struct DefiniteForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl fmt::Display for DefiniteForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

fn m2(rows: [[BigInt; 2]; 2]) -> IntegerMatrix {
    let [[a, b], [c, d]] = rows;
    IntegerMatrix::new(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// Reduces the slope of `A` (imaginary order) to the unique reduced form.
/// Returns the form and `T` with `u_A ∝ T·(1, ω_reduced)`.
fn reduce_imaginary(a: &IntegerMatrix) -> (DefiniteForm, IntegerMatrix) {
    let (aa, bb, cc, dd) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let one = BigInt::one;
    let zero = BigInt::zero;
    // ω = (θ − a)/b is a root of b x² + (a − d) x − c; flip to the upper half
    // plane when b < 0.
    let (mut form, mut t) = if bb.is_positive() {
        (
            DefiniteForm {
                a: bb.clone(),
                b: aa - dd,
                c: -cc,
            },
            IntegerMatrix::identity(2),
        )
    } else {
        (
            DefiniteForm {
                a: -bb,
                b: aa - dd,
                c: cc.clone(),
            },
            m2([[one(), zero()], [zero(), -one()]]),
        )
    };
    loop {
        // ω = ω′ + k moves B to B + 2Ak; choose k with B in (−A, A].
        let two_a = BigInt::from(2) * &form.a;
        let k = -(&form.b + &form.a - BigInt::one()).div_floor(&two_a);
        if !k.is_zero() {
            let new_c = &form.a * &k * &k + &form.b * &k + &form.c;
            form.b += &two_a * &k;
            form.c = new_c;
            t = t.mul(&m2([[one(), zero()], [k, one()]])).expect("2x2");
        }
        let swap = form.a > form.c || (form.a == form.c && form.b.is_negative());
        if !swap {
            return (form, t);
        }
        // ω = −1/ω′
        form = DefiniteForm {
            a: form.c.clone(),
            b: -&form.b,
            c: form.a.clone(),
        };
        t = t
            .mul(&m2([[zero(), one()], [-one(), zero()]]))
            .expect("2x2");
    }
}

/// Latimer–MacDuffee test for 2×2 matrices with equal irreducible
/// characteristic polynomial.
fn latimer_macduffee_2x2(a: &IntegerMatrix, b: &IntegerMatrix) -> ConjugacyVerdict {
    let ia = QuadraticIdeal::from_matrix(a).expect("irreducible");
    let ib = QuadraticIdeal::from_matrix(b).expect("irreducible");
    debug_assert!(ia.is_module() && ib.is_module());
    let method = Method::LatimerMacduffee;
    let n_matrix = if ia.discriminant().is_positive() {
        let slope = |m: &IntegerMatrix| {
            let disc = ia
                .discriminant()
                .to_u64()
                .expect("discriminant fits in u64");
            let (aa, bb, dd) = (m.get(0, 0), m.get(0, 1), m.get(1, 1));
            QuadraticNumber::new(dd - aa, 1, BigInt::from(2) * bb, disc).expect("b != 0")
        };
        let (wa, wb) = (slope(a), slope(b));
        let verdict = gl2z_equivalent(&wb, &wa);
        if !verdict.equivalent {
            let cycle = |w: &QuadraticNumber| {
                let p = cf_expand(w).canonical_period();
                format!(
                    "({})",
                    p.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            return ConjugacyVerdict::no(
                Obstruction::DistinctIdealClasses {
                    left: cycle(&wa),
                    right: cycle(&wb),
                },
                method,
            );
        }
        // M = [[α, γ], [β, δ]] sends ω_B to ω_A, so (1, ω_A) ∝ [[δ, γ], [β, α]]·(1, ω_B).
        let m = verdict
            .witness
            .expect("equivalent verdicts carry a witness");
        m2([
            [m.get(1, 1).clone(), m.get(0, 1).clone()],
            [m.get(1, 0).clone(), m.get(0, 0).clone()],
        ])
    } else {
        let (fa, ta) = reduce_imaginary(a);
        let (fb, tb) = reduce_imaginary(b);
        if fa != fb {
            return ConjugacyVerdict::no(
                Obstruction::DistinctIdealClasses {
                    left: fa.to_string(),
                    right: fb.to_string(),
                },
                method,
            );
        }
        ta.mul(&tb.inverse().expect("unimodular")).expect("2x2")
    };
    // u_A ∝ N·u_B gives N⁻¹·A·N = B.
    let p = n_matrix.inverse().expect("unimodular");
    assert!(
        verify_certificate(a, b, &p),
        "ideal-class certificate failed verification"
    );
    ConjugacyVerdict {
        status: Status::Yes,
        certificate: Some(p),
        obstruction: None,
        bound: None,
        method,
        notes: Vec::new(),
    }
}

/// Reduced row echelon form over ℚ; returns pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let row_r = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row_r) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Least (in [`IntegerMatrix::simplicity_cmp`]) unimodular `P` with entries in
/// `[−bound, bound]` and `P·A = B·P`, if any.
///
/// The linear constraints `P·A = B·P` are solved first; only the free
/// coordinates of the solution space are enumerated, and each determines the
/// rest. This visits exactly the integer matrices a naive enumeration would
/// accept.
pub fn bounded_conjugator_search(
    a: &IntegerMatrix,
    b: &IntegerMatrix,
    bound: u32,
) -> Option<IntegerMatrix> {
    let n = a.dim();
    let vars = n * n;
    let rat = |x: &BigInt| BigRational::from_integer(x.clone());
    // Equation (i, j): Σ_k P[i][k]·A[k][j] − Σ_k B[i][k]·P[k][j] = 0.
    let mut system = vec![vec![BigRational::zero(); vars]; vars];
    for i in 0..n {
        for j in 0..n {
            let row = &mut system[i * n + j];
            for k in 0..n {
                row[i * n + k] += rat(a.get(k, j));
                row[k * n + j] -= rat(b.get(i, k));
            }
        }
    }
    let pivots = rref(&mut system);
    let free: Vec<usize> = (0..vars).filter(|v| !pivots.contains(v)).collect();
    // Pivot variable x_p = −Σ_f r_{p,f}·x_f, scaled to integers: L·x_p = −Σ c_f·x_f.
    let relations: Vec<(usize, i128, Vec<i128>)> = pivots
        .iter()
        .enumerate()
        .map(|(r, &p)| {
            let l = free
                .iter()
                .fold(BigInt::one(), |acc, &f| acc.lcm(system[r][f].denom()));
            let coeffs = free
                .iter()
                .map(|&f| {
                    (&system[r][f] * BigRational::from_integer(l.clone()))
                        .to_integer()
                        .to_i128()
                        .expect("coefficient fits in i128")
                })
                .collect();
            (p, l.to_i128().expect("denominator fits in i128"), coeffs)
        })
        .collect();
    let bound = bound as i128;
    let mut best: Option<IntegerMatrix> = None;
    let mut point = vec![-bound; free.len()];
    let mut entries = vec![0i128; vars];
    'outer: loop {
        for (f, &v) in free.iter().zip(&point) {
            entries[*f] = v;
        }
        let mut ok = true;
        for (p, l, coeffs) in &relations {
            let s: i128 = coeffs.iter().zip(&point).map(|(c, x)| c * x).sum();
            if s % l != 0 {
                ok = false;
                break;
            }
            let v = -s / l;
            if v.abs() > bound {
                ok = false;
                break;
            }
            entries[*p] = v;
        }
        if ok {
            let rows: Vec<Vec<BigInt>> = entries
                .chunks(n)
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let cand = IntegerMatrix::new(rows).expect("square");
            if cand.is_unimodular() && best.as_ref().is_none_or(|b| cand.simplicity_cmp(b).is_lt())
            {
                best = Some(cand);
            }
        }
        // odometer over the free coordinates
        for i in (0..point.len()).rev() {
            if point[i] < bound {
                point[i] += 1;
                continue 'outer;
            }
            point[i] = -bound;
        }
        break;
    }
    if let Some(p) = &best {
        assert!(
            verify_certificate(a, b, p),
            "search certificate failed verification"
        );
    }
    best
}

fn search_verdict(
    a: &IntegerMatrix,
    b: &IntegerMatrix,
    bound: u32,
    notes: Vec<String>,
) -> ConjugacyVerdict {
    let found = bounded_conjugator_search(a, b, bound);
    ConjugacyVerdict {
        status: if found.is_some() {
            Status::Yes
        } else {
            Status::Unknown
        },
        certificate: found,
        obstruction: None,
        bound: Some(bound),
        method: Method::BoundedSearch,
        notes,
    }
}

/// Largest certificate entry for which the ideal-class certificate is
/// replaced by the least one in [`IntegerMatrix::simplicity_cmp`].
const CANONICALIZE_LIMIT: u32 = 64;

/// Decides `GL_n(ℤ)`-conjugacy of `A` and `B`.
pub fn glnz_conjugate(
    a: &IntegerMatrix,
    b: &IntegerMatrix,
    config: ConjugacyConfig,
) -> Result<ConjugacyVerdict, ToralError> {
    if a.dim() != b.dim() {
        return Err(ToralError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    require_unimodular(a)?;
    require_unimodular(b)?;
    let (fa, fb) = (a.charpoly(), b.charpoly());
    if fa != fb {
        return Ok(ConjugacyVerdict::no(
            Obstruction::CharpolyMismatch {
                left: fa.to_string(),
                right: fb.to_string(),
            },
            config.method,
        ));
    }
    match config.method {
        Method::BoundedSearch => Ok(search_verdict(a, b, config.bound, Vec::new())),
        Method::LatimerMacduffee => {
            if a.dim() != 2 {
                let note = format!("latimer_macduffee is implemented for n = 2 only; used bounded_search for n = {}", a.dim());
                return Ok(search_verdict(a, b, config.bound, vec![note]));
            }
            let disc = a.trace() * a.trace() - BigInt::from(4) * a.det();
            if !disc.is_negative() && disc.sqrt().pow(2) == disc {
                let note =
                    "characteristic polynomial is reducible; used bounded_search".to_string();
                return Ok(search_verdict(a, b, config.bound, vec![note]));
            }
            let mut verdict = latimer_macduffee_2x2(a, b);
            if let Some(p) = &verdict.certificate {
                let h = p.max_abs_entry().to_u32().unwrap_or(u32::MAX);
                if h <= CANONICALIZE_LIMIT {
                    verdict.certificate = bounded_conjugator_search(a, b, h);
                    debug_assert!(verdict.certificate.is_some());
                }
            }
            Ok(verdict)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `A ~ B`
    Direct,
    /// `A ~ B⁻¹`
    Inverse,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackVerdict {
    pub status: Status,
    /// The branch that produced a `Yes`.
    pub branch: Option<Branch>,
    pub direct: ConjugacyVerdict,
    /// Absent when the direct branch already answered `Yes`.
    pub inverse: Option<ConjugacyVerdict>,
}

impl StackVerdict {
    /// Certificate of the deciding branch.
    pub fn certificate(&self) -> Option<&IntegerMatrix> {
        match self.branch {
            Some(Branch::Direct) => self.direct.certificate.as_ref(),
            Some(Branch::Inverse) => self.inverse.as_ref().and_then(|v| v.certificate.as_ref()),
            None => None,
        }
    }
}

/// `T^n // f_A ≃ T^n // f_B`: `A` conjugate to `B` or to `B⁻¹`.
pub fn toral_stack_equiv(
    a: &IntegerMatrix,
    b: &IntegerMatrix,
    config: ConjugacyConfig,
) -> Result<StackVerdict, ToralError> {
    for m in [a, b] {
        if !is_hyperbolic(m)? {
            return Err(ToralError::NotHyperbolic(m.clone()));
        }
    }
    let direct = glnz_conjugate(a, b, config)?;
    if direct.status == Status::Yes {
        return Ok(StackVerdict {
            status: Status::Yes,
            branch: Some(Branch::Direct),
            direct,
            inverse: None,
        });
    }
    let inverse = glnz_conjugate(a, &b.inverse()?, config)?;
    let (status, branch) = match (direct.status, inverse.status) {
        (_, Status::Yes) => (Status::Yes, Some(Branch::Inverse)),
        (Status::No, Status::No) => (Status::No, None),
        _ => (Status::Unknown, None),
    };
    Ok(StackVerdict {
        status,
        branch,
        direct,
        inverse: Some(inverse),
    })
}
