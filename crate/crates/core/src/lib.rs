//! Exact decision procedures for isomorphism of orbit stacks of discrete
//! dynamical systems.
//!
//! - [`exactmath`]: quadratic numbers, integer matrices, polynomials, HNF.
//! - [`groupoid`]: finite action groupoids, Morita morphisms and their
//!   factorization through a free quotient.
//! - [`lifted`]: the groups `ℤ ⋉_ε ℤ` and `ℤ ⋉_A ℤⁿ` acting on universal covers.
//! - [`rotation`]: circle rotations up to `GL₂(ℤ)` homographies.
//! - [`toral`]: hyperbolic toral automorphisms up to conjugacy and inversion.
//! - [`lens`]: the homotopy, homeomorphism and stack classifications of
//!   lens spaces.

pub mod exactmath;
pub mod groupoid;
pub mod lens;
pub mod lifted;
pub mod rotation;
pub mod toral;
