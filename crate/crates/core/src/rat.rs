//! Exact arbitrary-precision integer and rational scalars.
//!
//! `Rat` is always canonical: the denominator is positive, the sign lives in the
//! numerator, and numerator and denominator are coprime. Canonical form is enforced
//! on construction and preserved by every arithmetic operation, so equality is
//! field-wise and exact. No floating point appears anywhere in this crate.
//!
//! Rendering is `num/den`, with the denominator omitted when it is 1; `str::parse`
//! accepts the same forms back.

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// The smallest positive integer `d` such that `d * q` is an integer.
pub fn denominator(q: &Rat) -> Int {
    q.denom().clone()
}

/// `num/den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// An integer as an exact rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}
