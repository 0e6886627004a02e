//! Exact-arithmetic toolkit for GJMS operator polynomials on the Möbius
//! sphere S^{q,p} = S^q × S^p.
//!
//! On the product sphere the order-2N GJMS operator acts on joint
//! spherical-harmonic eigenspaces as a polynomial in two commuting
//! variables X = C + B and Y = C − B, where B² and C² are the shifted
//! Laplacians of the factor spheres. This crate constructs those
//! polynomials exactly over arbitrary-precision rationals, forms the
//! 2^{N−1}-term weighted sums over compositions that drive the recursive
//! formulas for the operators and their Q-curvatures, and verifies every
//! identity involved — closed forms, partial sums, classical
//! hypergeometric summations, finite-difference lemmas — by exact rational
//! or polynomial comparison. There are no tolerances anywhere.
//!
//! - [`exact`]: Pochhammer symbols, factorials, generalized binomials
//! - [`composition`]: compositions of N and their multiplicities
//! - [`poly`]: polynomial algebra, generic over the coefficient scalar
//! - [`operators`]: operator polynomials and memoized composition products
//! - [`hypergeom`]: terminating hypergeometric series, classical summations
//! - [`finite_diff`]: finite-difference identities for polynomials
//! - [`verifier`] / [`randomized`]: the identity checks as record streams
//! - [`report`]: check records and their JSON-lines form
//! - [`cli`]: the command-line driver

pub mod cli;
pub mod composition;
pub mod exact;
pub mod finite_diff;
pub mod hypergeom;
pub mod operators;
pub mod poly;
pub mod randomized;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod verifier;

/// The scalar of all verification work: arbitrary-precision rational,
/// always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// Dense univariate polynomial over [`Rat`].
pub type RatUniPoly = poly::UniPoly<Rat>;

/// Centered-Pochhammer-basis polynomial over [`Rat`].
pub type RatPochPoly = poly::PochPoly<Rat>;

/// Sparse bivariate polynomial in X, Y over [`Rat`].
pub type RatBiPoly = poly::BiPoly<Rat>;

pub use composition::Composition;
pub use report::{CheckRecord, CheckStatus};
pub use verifier::Verifier;
