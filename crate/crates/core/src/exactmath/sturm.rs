//! Real-root counting with Sturm sequences over ℚ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{div_rem_rational, to_rational};
use super::IntegerPolynomial;

/// Sturm chain `p₀ = p/gcd(p, p′)`, `p₁ = p₀′`, `pᵢ₊₁ = −rem(pᵢ₋₁, pᵢ)`.
fn sturm_chain(p: &IntegerPolynomial) -> Vec<Vec<BigRational>> {
    let sqfree = {
        let g = p.gcd(&p.derivative());
        if g.degree().unwrap_or(0) == 0 {
            p.clone()
        } else {
            p.div_exact(&g).expect("primitive gcd divides p in Z[x]")
        }
    };
    let mut chain = vec![to_rational(&sqfree), to_rational(&sqfree.derivative())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let (_, r) = div_rem_rational(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sign_changes(chain: &[Vec<BigRational>], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in `(lo, hi)` when `open_endpoints`
/// is set, or in `[lo, hi]` otherwise.
///
/// # Panics
/// If `p` is the zero polynomial.
pub fn count_real_roots_in(
    p: &IntegerPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    open_endpoints: bool,
) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    if lo > hi {
        return 0;
    }
    let chain = sturm_chain(p);
    // For squarefree p₀, V(lo) − V(hi) counts roots in the half-open (lo, hi].
    let half_open = sign_changes(&chain, lo) - sign_changes(&chain, hi);
    let root_at = |x: &BigRational| p.eval_rational(x).is_zero();
    if open_endpoints {
        half_open - usize::from(lo != hi && root_at(hi))
    } else {
        half_open + usize::from(root_at(lo))
    }
}

/// Convenience wrapper taking integer endpoints.
pub fn count_real_roots_between(
    p: &IntegerPolynomial,
    lo: i64,
    hi: i64,
    open_endpoints: bool,
) -> usize {
    count_real_roots_in(
        p,
        &BigRational::from_integer(BigInt::from(lo)),
        &BigRational::from_integer(BigInt::from(hi)),
        open_endpoints,
    )
}
