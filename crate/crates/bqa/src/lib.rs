//! Exact-arithmetic toolkit for bi-quadratic algebra presentations
//!
//! A bi-quadratic algebra on n generators is defined by relations
//!
//! ```text
//! x_i x_j - q_ij x_j x_i = sum_k a_ijk x_k + b_ij      (i > j)
//! ```
//!
//! with invertible q's over an exact ground field (the rationals or a prime
//! field GF(p)). This crate decides whether the ordered monomials form a
//! basis (the PBW property), rewrites free-algebra elements to normal form,
//! classifies consistent 3-generator presentations into canonical families
//! under monomial-affine changes of generators, and extracts diskew
//! polynomial / generalized Weyl structure where the families carry it.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals or
//! prime-field residues, and every verdict is a zero test, never a
//! tolerance.
//!
//! Entry points:
//!
//! - [`field`]: exact scalars and n-th power coset classes
//! - [`freealg`]: words, deglex order, free-algebra polynomials, parsing
//! - [`rewrite`]: normal forms and the overlap consistency oracle
//! - [`consistency3`]: the explicit ten-residue criterion for n = 3
//! - [`transform`]: the shift/torus/permutation group acting on
//!   presentations
//! - [`classify`]: canonical forms, torus orbit invariants, Lie-type
//!   classification
//! - [`structure`]: diskew polynomial and generalized Weyl presentations
//! - [`selftest`]: the randomized and exhaustive verification suites
//! - [`cli`]: the command-line front end (see the `bqa` binary)

pub mod classify;
pub mod cli;
pub mod consistency3;
pub mod field;
pub mod freealg;
pub mod rewrite;
pub mod selftest;
pub mod structure;
pub mod transform;
