//! Exact combinatorics of the diagonal action of the hyperoctahedral group
//! `B_n` on two sets of variables.
//!
//! The hyperoctahedral group `B_n` (signed permutations of `1..n`) acts
//! diagonally on the polynomial ring `Q[x_1..x_n, y_1..y_n]`, permuting both
//! alphabets simultaneously and flipping signs. This crate implements, in
//! exact arithmetic throughout, the combinatorial machinery describing the
//! diagonally invariant polynomials and the bigraded character theory of the
//! associated coinvariant spaces:
//!
//! - [`group_core`]: signed permutations in window notation, flag statistics
//!   (descents, flag major index), local descent vectors, the `°` involution,
//!   signed cycle types, and group enumeration.
//! - [`symfunc`]: integer partitions, irreducible `S_n`-characters, truncated
//!   bivariate power series with rational coefficients, plethystic evaluation
//!   of `p`/`h`/`e`/Schur symmetric functions on `(q,t)`-alphabets, and
//!   expansions in the wreath-product power-sum basis `p_{(mu,nu)}`.
//! - [`frobenius`]: conjugacy classes and irreducible labels of `B_n`, graded
//!   and bigraded Frobenius characteristics of the coinvariant algebra, closed
//!   product formulas for graded multiplicities, and verification routines for
//!   the flip symmetry and the positivity of normalized multiplicity series.
//! - [`ediagrams`]: `e`-diagrams (multisets of even-weight biexponent cells),
//!   their descent/schism sets, classifying signed permutations, local moves,
//!   compactification, and the partition-pair parametrization of each fiber.
//! - [`odiagrams`]: `o`-diagrams (sets of odd-weight cells), colabel
//!   classification, the weight-preserving correspondence with compact
//!   `e`-diagrams, and the parallel fiber parametrization.
//! - [`polyring`]: sparse polynomials in `x_1..x_n, y_1..y_n` over `Q`, the
//!   diagonal `B_n`-action, symmetrized monomials `M_D`, alternants, and the
//!   straightening algorithm expanding any `M_D` over the compact basis with
//!   an exact certificate.
//!
//! All coefficients are `num_rational::BigRational`; there is no floating
//! point anywhere. Series are truncated per variable at a caller-chosen order
//! and all reported identities hold coefficient-for-coefficient at zero
//! tolerance.
//!
//! # Example
//!
//! ```
//! use bncomb::group_core::SignedPerm;
//!
//! // A signed permutation in window notation; overbars are entered as '-'.
//! let beta = SignedPerm::parse("-2 -1 -5 4 3").unwrap();
//! let stats = beta.stats();
//! assert_eq!(stats.des, vec![1, 4]);
//! assert_eq!(stats.fmaj, 2 * stats.maj + stats.neg);
//! ```

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod ediagrams;
pub mod frobenius;
pub mod group_core;
pub mod odiagrams;
pub mod polyring;
pub mod symfunc;
