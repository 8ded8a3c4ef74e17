//! Exact coefficients and integrality of power sums of arithmetic progressions.
//!
//! For a step `m >= 1`, offset `r >= 0` and exponent `n >= 1`, the sum
//!
//! ```text
//! S_{m,r}^n(l) = r^n + (m+r)^n + (2m+r)^n + ... + ((l-1)m + r)^n
//! ```
//!
//! is a polynomial in the term count `l` of degree `n+1` with rational
//! coefficients.  This crate computes those coefficients exactly, by two
//! independent routes:
//!
//! * [`powersum::coeffs_whitney`] expands the sum over the r-Whitney numbers
//!   of the progression and signed Stirling numbers of the first kind;
//! * [`powersum::coeffs_bernoulli`] evaluates the closed form in terms of
//!   Bernoulli polynomials.
//!
//! Whether all coefficients are integers is governed by a divisibility
//! threshold `F(n)`: the coefficients are integral exactly when `F(n) | m`.
//! The [`integrality`] module computes `F(n)` from the von Staudt–Clausen
//! denominators and sweeps parameter grids to cross-check the criterion
//! against the coefficients themselves.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`); no floating point
//! appears anywhere, including in the CSV/JSON serialization, which renders
//! every numeric as a string.

pub mod bernoulli;
pub mod error;
pub mod integrality;
pub mod poly;
pub mod powersum;
pub mod rat;
pub mod report;
pub mod triangles;

pub use error::Error;
pub use poly::PolyQ;
pub use powersum::ProgressionParams;
pub use rat::{Int, Rat};
