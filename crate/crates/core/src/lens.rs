//! Lens spaces `L(p, q)` classified up to homotopy, homeomorphism and
//! isomorphism of the orbit stack `S³ // f_{p,q}`.
//!
//! All three predicates are decided by direct enumeration modulo `p`:
//!
//! | level       | `L(p,q) ~ L(p,q′)` iff            |
//! |-------------|-----------------------------------|
//! | homotopy    | `q·q′ ≡ ±x² (mod p)` for some `x` |
//! | homeomorph. | `q′ ≡ ±q^{±1} (mod p)`            |
//! | stack       | `q′ ≡ ±q (mod p)`                 |

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LensError {
    #[error("p must be at least 2 (got {0})")]
    BadModulus(i64),
    #[error("q = {q} is not coprime to p = {p}")]
    NotCoprime { p: u64, q: i64 },
    #[error("classification is not an equivalence relation at level {0}")]
    NotEquivalence(Level),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Homotopy,
    Homeo,
    Stack,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::Homotopy, Level::Homeo, Level::Stack];
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Homotopy => "homotopy",
            Level::Homeo => "homeo",
            Level::Stack => "stack",
        })
    }
}

/// `(p, q)` with `q` reduced into `[1, p − 1]` and coprime to `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensParams {
    p: u64,
    q: u64,
}

impl LensParams {
    pub fn new(p: i64, q: i64) -> Result<Self, LensError> {
        if p < 2 {
            return Err(LensError::BadModulus(p));
        }
        let pu = p as u64;
        let qr = q.rem_euclid(p) as u64;
        if qr.gcd(&pu) != 1 {
            return Err(LensError::NotCoprime { p: pu, q });
        }
        Ok(LensParams { p: pu, q: qr })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Multiplicative inverse of `q` modulo `p`.
    pub fn q_inverse(&self) -> u64 {
        (1..self.p)
            .find(|&x| (x * self.q) % self.p == 1)
            .expect("q is a unit mod p")
    }
}

fn params(p: i64, q: i64, q2: i64) -> Result<(LensParams, LensParams), LensError> {
    Ok((LensParams::new(p, q)?, LensParams::new(p, q2)?))
}

fn neg(p: u64, x: u64) -> u64 {
    (p - x) % p
}

pub fn homotopy_equiv(p: i64, q: i64, q2: i64) -> Result<bool, LensError> {
    let (a, b) = params(p, q, q2)?;
    Ok(homotopy_canonical(a, b))
}

fn homotopy_canonical(a: LensParams, b: LensParams) -> bool {
    let p = a.p;
    let prod = (a.q * b.q) % p;
    (0..p).any(|x| {
        let sq = (x * x) % p;
        sq == prod || neg(p, sq) == prod
    })
}

pub fn homeo_equiv(p: i64, q: i64, q2: i64) -> Result<bool, LensError> {
    let (a, b) = params(p, q, q2)?;
    Ok(homeo_canonical(a, b))
}

fn homeo_canonical(a: LensParams, b: LensParams) -> bool {
    let p = a.p;
    let inv = a.q_inverse();
    [a.q, neg(p, a.q), inv, neg(p, inv)].contains(&b.q)
}

pub fn stack_equiv(p: i64, q: i64, q2: i64) -> Result<bool, LensError> {
    let (a, b) = params(p, q, q2)?;
    Ok(stack_canonical(a, b))
}

fn stack_canonical(a: LensParams, b: LensParams) -> bool {
    b.q == a.q || b.q == neg(a.p, a.q)
}

pub fn equiv(level: Level, p: i64, q: i64, q2: i64) -> Result<bool, LensError> {
    match level {
        Level::Homotopy => homotopy_equiv(p, q, q2),
        Level::Homeo => homeo_equiv(p, q, q2),
        Level::Stack => stack_equiv(p, q, q2),
    }
}

/// The three partitions of `{q : 1 ≤ q < p, gcd(p, q) = 1}`. Classes are
/// sorted internally and ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub p: u64,
    pub homotopy: Vec<Vec<u64>>,
    pub homeo: Vec<Vec<u64>>,
    pub stack: Vec<Vec<u64>>,
}

impl Classification {
    pub fn classes(&self, level: Level) -> &[Vec<u64>] {
        match level {
            Level::Homotopy => &self.homotopy,
            Level::Homeo => &self.homeo,
            Level::Stack => &self.stack,
        }
    }
}

/// Checks reflexivity, symmetry and transitivity of `rel` on `units`, then
/// partitions.
fn partition(
    level: Level,
    units: &[LensParams],
    rel: impl Fn(LensParams, LensParams) -> bool,
) -> Result<Vec<Vec<u64>>, LensError> {
    let n = units.len();
    let m: Vec<Vec<bool>> = units
        .iter()
        .map(|&a| units.iter().map(|&b| rel(a, b)).collect())
        .collect();
    for i in 0..n {
        if !m[i][i] {
            return Err(LensError::NotEquivalence(level));
        }
        for j in 0..n {
            if m[i][j] != m[j][i] {
                return Err(LensError::NotEquivalence(level));
            }
            if m[i][j] && (0..n).any(|k| m[j][k] && !m[i][k]) {
                return Err(LensError::NotEquivalence(level));
            }
        }
    }
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let class: Vec<u64> = (0..n)
            .filter(|&j| m[i][j])
            .inspect(|&j| seen[j] = true)
            .map(|j| units[j].q)
            .collect();
        classes.push(class);
    }
    Ok(classes)
}

pub fn classify(p: i64) -> Result<Classification, LensError> {
    if p < 2 {
        return Err(LensError::BadModulus(p));
    }
    let units: Vec<LensParams> = (1..p).filter_map(|q| LensParams::new(p, q).ok()).collect();
    Ok(Classification {
        p: p as u64,
        homotopy: partition(Level::Homotopy, &units, homotopy_canonical)?,
        homeo: partition(Level::Homeo, &units, homeo_canonical)?,
        stack: partition(Level::Stack, &units, stack_canonical)?,
    })
}
