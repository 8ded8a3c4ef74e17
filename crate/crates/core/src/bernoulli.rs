//! Exact Bernoulli numbers and polynomials, von Staudt-Clausen denominators,
//! and radicals.
//!
//! The convention throughout is B_1 = -1/2, i.e. B_k = B_k(0) for the polynomials
//! generated by t e^{tx} / (e^t - 1). Numbers come from the recurrence
//! sum_{j=0}^{k} C(k+1, j) B_j = 0 (k >= 1) with B_0 = 1; the von Staudt-Clausen
//! product is computed independently of it, so the denominators of the two routes
//! can be checked against each other.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::PolyQ;
use crate::rat::{Int, Rat};
use crate::triangles::binomial;

fn cache() -> &'static RwLock<Vec<Rat>> {
    static CACHE: OnceLock<RwLock<Vec<Rat>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Rat::one()]))
}

/// The k-th Bernoulli number, exactly (B_1 = -1/2).
pub fn bernoulli_number(k: usize) -> Rat {
    {
        let values = cache().read().expect("bernoulli lock poisoned");
        if let Some(v) = values.get(k) {
            return v.clone();
        }
    }
    let mut values = cache().write().expect("bernoulli lock poisoned");
    while values.len() <= k {
        let next = values.len() as u64;
        let mut sum = Rat::zero();
        for (j, b) in values.iter().enumerate() {
            sum += b * Rat::from_integer(binomial(next + 1, j as u64));
        }
        values.push(-sum / Rat::from_integer(Int::from(next + 1)));
    }
    values[k].clone()
}

/// The k-th Bernoulli polynomial B_k(x) = sum_j C(k, j) B_j x^{k-j}, monic of degree k.
pub fn bernoulli_polynomial(k: usize) -> PolyQ {
    let coeffs = (0..=k)
        .map(|i| Rat::from_integer(binomial(k as u64, i as u64)) * bernoulli_number(k - i))
        .collect();
    PolyQ::new(coeffs)
}

/// Exact value of B_k at a rational point.
pub fn bernoulli_poly_at(k: usize, x: &Rat) -> Rat {
    bernoulli_polynomial(k).eval(x)
}

/// The denominator of B_k for even k >= 2: the product of the primes p with (p-1) | k.
/// Square-free and divisible by 6.
pub fn von_staudt_denominator(k: u64) -> Result<Int, Error> {
    if k == 0 || !k.is_multiple_of(2) {
        return Err(Error::VonStaudtIndex(k));
    }
    let mut product = Int::one();
    for d in 1..=k {
        if k.is_multiple_of(d) && is_prime(d + 1) {
            product *= Int::from(d + 1);
        }
    }
    Ok(product)
}

/// rad(n): the product of the distinct prime divisors of n; rad(1) = 1.
pub fn rad(n: u64) -> Result<Int, Error> {
    if n == 0 {
        return Err(Error::ZeroRadicand);
    }
    let mut product = Int::one();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            product *= Int::from(p);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        product *= Int::from(rest);
    }
    Ok(product)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{denominator, int, rat};

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn odd_bernoulli_numbers_vanish() {
        for k in (3..=59usize).step_by(2) {
            assert_eq!(bernoulli_number(k), int(0), "k = {k}");
        }
    }

    #[test]
    fn bernoulli_polynomials() {
        assert_eq!(bernoulli_polynomial(0), PolyQ::from_int_coeffs(&[1]));
        assert_eq!(
            bernoulli_polynomial(1),
            PolyQ::new(vec![rat(-1, 2), int(1)])
        );
        assert_eq!(
            bernoulli_polynomial(2),
            PolyQ::new(vec![rat(1, 6), int(-1), int(1)])
        );
    }

    #[test]
    fn polynomials_are_monic_of_degree_k() {
        for k in 0..=20usize {
            let p = bernoulli_polynomial(k);
            assert_eq!(p.degree(), k as i64);
            assert_eq!(p.coeff(k), int(1));
        }
    }

    #[test]
    fn poly_at_examples() {
        assert_eq!(bernoulli_poly_at(2, &int(0)), rat(1, 6));
        assert_eq!(bernoulli_poly_at(1, &rat(1, 2)), int(0));
        assert_eq!(bernoulli_poly_at(3, &int(1)), int(0));
    }

    #[test]
    fn von_staudt_values() {
        assert_eq!(von_staudt_denominator(2).unwrap(), Int::from(6));
        assert_eq!(von_staudt_denominator(4).unwrap(), Int::from(30));
        assert_eq!(von_staudt_denominator(12).unwrap(), Int::from(2730));
        assert_eq!(
            von_staudt_denominator(12).unwrap(),
            denominator(&bernoulli_number(12))
        );
    }

    #[test]
    fn von_staudt_rejects_bad_indices() {
        assert_eq!(von_staudt_denominator(0), Err(Error::VonStaudtIndex(0)));
        assert_eq!(von_staudt_denominator(7), Err(Error::VonStaudtIndex(7)));
    }

    #[test]
    fn rad_values() {
        assert_eq!(rad(12).unwrap(), Int::from(6));
        assert_eq!(rad(1).unwrap(), Int::from(1));
        assert_eq!(rad(2730).unwrap(), Int::from(2730));
        assert_eq!(rad(0), Err(Error::ZeroRadicand));
    }

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..=30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
