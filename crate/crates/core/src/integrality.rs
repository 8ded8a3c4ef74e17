//! Integrality of the power-sum coefficients.
//!
//! For fixed `n` the coefficients of `S_{m,r}^n` are integers exactly when `m`
//! is divisible by a threshold `F(n)` depending on `n` alone.  `F(n)` is
//! assembled from the von Staudt–Clausen denominators: with `L_j` the product
//! of the primes `p` such that `(p-1) | j`,
//!
//! ```text
//! f(n,j) = lcm over i = j..n of  L_j / gcd(L_j, C(n+1,i)*C(i,j))    (j even)
//! F(n)   = lcm(rad(n+1), f(n,2), f(n,4), ..., f(n, n or n-1))
//! ```
//!
//! The two sides of the criterion are computed by independent code paths —
//! the coefficient routes never consult `F(n)` and `F(n)` never consults a
//! coefficient — so the sweep in [`verify_integrality_grid`] is a genuine
//! cross-check rather than a tautology.

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bernoulli::{rad, von_staudt_denominator};
use crate::error::Error;
use crate::poly::PolyQ;
use crate::powersum::{coeffs_whitney, ProgressionParams};
use crate::rat::Int;
use crate::triangles::binomial;

/// `f(n,j)`: the part of the coefficient denominator that survives the
/// binomial factors, for even `j` with `2 <= j <= n`.
pub fn denominator_contribution(n: u32, j: u32) -> Result<Int, Error> {
    if j < 2 || j > n || !j.is_multiple_of(2) {
        return Err(Error::ContributionIndex { n, j });
    }
    let lambda = von_staudt_denominator(u64::from(j))?;
    let mut acc = Int::one();
    for i in j..=n {
        let c = binomial(u64::from(n) + 1, u64::from(i)) * binomial(u64::from(i), u64::from(j));
        acc = acc.lcm(&(&lambda / lambda.gcd(&c)));
    }
    Ok(acc)
}

/// `F(n)`, the least `m` for which the coefficients become integers: the lcm
/// of `rad(n+1)` and `f(n,j)` over even `j <= n`.  For `n = 1` the `f` list is
/// empty and `F(1) = rad(2) = 2`.
pub fn integrality_threshold(n: u32) -> Int {
    let mut acc = rad(u64::from(n) + 1).expect("n + 1 >= 1 has a radical");
    for j in (2..=n).step_by(2) {
        let f = denominator_contribution(n, j).expect("even j in 2..=n is admissible");
        acc = acc.lcm(&f);
    }
    acc
}

/// Left-hand side of the criterion: are all coefficients of `S_{m,r}^n`
/// integers?  Decided from the coefficients alone.
pub fn is_integral_poly(p: &ProgressionParams) -> Result<bool, Error> {
    Ok(coeffs_whitney(p)?.is_integral())
}

/// Right-hand side of the criterion: does `F(n)` divide `m`?  Decided without
/// computing any coefficient.
pub fn predicted_integral(m: i64, n: u32) -> bool {
    (Int::from(m) % integrality_threshold(n)).is_zero()
}

/// Outcome of checking one grid point `(m, r, n)` from both sides.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityReport {
    pub params: ProgressionParams,
    pub coeffs: PolyQ,
    /// Whether every coefficient is an integer (from `coeffs` alone).
    pub is_integral: bool,
    /// `F(n)` for this point's `n`.
    pub threshold: Int,
    /// Whether `F(n) | m`.
    pub predicate: bool,
    /// `is_integral == predicate`.
    pub agrees: bool,
}

/// Sweep the grid `m in 1..=max_m`, `r in 0..=max_r`, `n in 1..=max_n` and
/// report both sides of the criterion at every point.  With `coprime_only`
/// the grid is restricted to `gcd(m, r) = 1`, the setting in which the
/// criterion is an equivalence; disagreements are returned, never dropped.
///
/// Points are processed in parallel but reported in lexicographic `(n, m, r)`
/// order.
pub fn verify_integrality_grid(
    max_m: i64,
    max_r: i64,
    max_n: u32,
    coprime_only: bool,
) -> Vec<IntegralityReport> {
    let thresholds: Vec<Int> = (0..=max_n).map(integrality_threshold).collect();
    let mut points = Vec::new();
    for n in 1..=max_n {
        for m in 1..=max_m {
            for r in 0..=max_r {
                if coprime_only && m.gcd(&r) != 1 {
                    continue;
                }
                points.push((n, m, r));
            }
        }
    }
    points
        .into_par_iter()
        .map(|(n, m, r)| {
            let params = ProgressionParams::new(m, r, n);
            let coeffs = coeffs_whitney(&params).expect("grid parameters are valid");
            let is_integral = coeffs.is_integral();
            let threshold = thresholds[n as usize].clone();
            let predicate = (Int::from(m) % &threshold).is_zero();
            IntegralityReport {
                params,
                coeffs,
                is_integral,
                threshold,
                predicate,
                agrees: is_integral == predicate,
            }
        })
        .collect()
}
