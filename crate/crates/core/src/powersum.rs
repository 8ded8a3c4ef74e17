//! Coefficients of the power sum r^n + (m+r)^n + ... + ((l-1)m+r)^n as an exact
//! polynomial in l, by two independent routes, plus the brute-force oracle both
//! are checked against.
//!
//! The Stirling/Whitney route expands (mx+r)^n in the falling-factorial basis,
//! sums the basis elements in closed form, and converts back to powers of l.
//! The Bernoulli route evaluates Bernoulli polynomials at r/m. For parameters in
//! both domains the two agree coefficient-by-coefficient.

use num_traits::Zero;

use crate::bernoulli::bernoulli_poly_at;
use crate::error::Error;
use crate::poly::PolyQ;
use crate::rat::{Int, Rat};
use crate::triangles::{binomial, stirling1_row, stirling2_row, whitney_row};

/// The triple (m, r, n): step m, offset r, exponent n of the progression power sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProgressionParams {
    pub m: i64,
    pub r: i64,
    pub n: u32,
}

impl ProgressionParams {
    pub fn new(m: i64, r: i64, n: u32) -> Self {
        ProgressionParams { m, r, n }
    }

    /// The Stirling/Whitney route's domain: m >= 1, r >= 0, n >= 1.
    pub fn validate(&self) -> Result<(), Error> {
        if self.m < 1 {
            return Err(Error::StepOutOfRange(self.m));
        }
        if self.r < 0 {
            return Err(Error::OffsetOutOfRange(self.r));
        }
        if self.n < 1 {
            return Err(Error::ExponentOutOfRange);
        }
        Ok(())
    }
}

/// Ground truth: sum_{x=0}^{ell-1} (m x + r)^n by direct exact summation.
pub fn brute_force_sum(p: &ProgressionParams, ell: u64) -> Int {
    let mut acc = Int::zero();
    for x in 0..ell {
        let term = Int::from(p.m) * Int::from(x) + Int::from(p.r);
        acc += term.pow(p.n);
    }
    acc
}

/// The Stirling/Whitney route: coefficient of l^i is
/// sum_{k=0}^{n} m^k W_{m,r}(n, k) S_1(k+1, i) / (k+1).
///
/// Returns a polynomial of degree n+1 with zero constant term and leading
/// coefficient m^n/(n+1). Requires m >= 1, r >= 0, n >= 1.
pub fn coeffs_whitney(p: &ProgressionParams) -> Result<PolyQ, Error> {
    p.validate()?;
    let n = p.n as usize;
    let whitney = whitney_row(p.m, p.r, n);
    Ok(assemble_from_falling_basis(&whitney, |k| {
        Int::from(p.m).pow(k as u32)
    }))
}

/// The Bernoulli route: (m^n/(n+1)) sum_{k=0}^{n} C(n+1, k) B_k(r/m) l^{n+1-k}.
///
/// Defined for any nonzero step (r/m is formed as an exact rational) and n >= 1;
/// steps below 1 are outside the Stirling/Whitney route's domain but still yield
/// the unique polynomial interpolating the direct sums.
pub fn coeffs_bernoulli(p: &ProgressionParams) -> Result<PolyQ, Error> {
    if p.m == 0 {
        return Err(Error::ZeroStep);
    }
    if p.n < 1 {
        return Err(Error::ExponentOutOfRange);
    }
    let n = p.n as usize;
    let x = Rat::new(Int::from(p.r), Int::from(p.m));
    let lead = Rat::new(Int::from(p.m).pow(p.n), Int::from(n as u64 + 1));
    let mut coeffs = vec![Rat::zero(); n + 2];
    for k in 0..=n {
        coeffs[n + 1 - k] =
            &lead * Rat::from_integer(binomial(n as u64 + 1, k as u64)) * bernoulli_poly_at(k, &x);
    }
    Ok(PolyQ::new(coeffs))
}

/// The power sum 1^n + 2^n + ... + (l-1)^n: coefficient of l^i is
/// sum_k S_2(n, k) S_1(k+1, i) / (k+1). Equals the Stirling/Whitney route at
/// (m, r) = (1, 0).
pub fn classical_coeffs(n: u32) -> PolyQ {
    let stirling2 = stirling2_row(n as usize);
    assemble_from_falling_basis(&stirling2, |_| Int::from(1))
}

/// sum_{x=0}^{l-1} x(x-1)...(x-k+1) as a polynomial in l: the falling factorial
/// of l of order k+1, divided by k+1.
pub fn falling_factorial_sum_poly(k: u32) -> PolyQ {
    let stirling1 = stirling1_row(k as usize + 1);
    let coeffs = stirling1
        .into_iter()
        .map(|s| Rat::new(s, Int::from(u64::from(k) + 1)))
        .collect();
    PolyQ::new(coeffs)
}

/// sum_k weight(k) row[k] / (k+1) l^{falling k+1}, expanded into powers of l.
fn assemble_from_falling_basis(row: &[Int], weight: impl Fn(usize) -> Int) -> PolyQ {
    let n = row.len() - 1;
    let mut coeffs = vec![Rat::zero(); n + 2];
    for (k, w) in row.iter().enumerate() {
        let factor = Rat::new(weight(k) * w, Int::from(k as u64 + 1));
        if factor.is_zero() {
            continue;
        }
        for (i, s) in stirling1_row(k + 1).into_iter().enumerate() {
            if !s.is_zero() {
                coeffs[i] += &factor * Rat::from_integer(s);
            }
        }
    }
    PolyQ::new(coeffs)
}
