//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_traits::{One, Signed, Zero};

use crate::rat::{Int, Rat};

/// A polynomial in one variable over [`Rat`]; `coeffs[i]` is the coefficient of the
/// i-th power.
///
/// The highest stored coefficient is always nonzero. The zero polynomial is the empty
/// coefficient vector and reports degree -1 (rendered as "-").
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    /// `c * l^power`.
    pub fn monomial(c: Rat, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); power + 1];
        coeffs[power] = c;
        PolyQ { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(Int::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of the i-th power; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Degree for rendering: "-" for the zero polynomial.
    pub fn degree_string(&self) -> String {
        if self.is_zero() {
            "-".to_string()
        } else {
            self.degree().to_string()
        }
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, x: &Int) -> Rat {
        self.eval(&Rat::from_integer(x.clone()))
    }

    /// True iff every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients lowest degree first, each rendered `num/den` (`num` when integral).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Space-separated coefficient list, lowest degree first.
    pub fn coeff_list_string(&self) -> String {
        self.coeff_strings().join(" ")
    }

    pub fn scaled(&self, factor: &Rat) -> PolyQ {
        if factor.is_zero() {
            return Self::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;

    fn add(self, rhs: &PolyQ) -> PolyQ {
        let mut coeffs = vec![Rat::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        PolyQ::new(coeffs)
    }
}

impl AddAssign<&PolyQ> for PolyQ {
    fn add_assign(&mut self, rhs: &PolyQ) {
        *self = &*self + rhs;
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;

    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::new(coeffs)
    }
}

/// Human-readable form, highest degree first, in the variable `l`,
/// e.g. `2*l^4 - l^2` or `1/2*l^2 - 1/2*l`.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("l")?;
                    } else {
                        write!(f, "l^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn zero_polynomial_representation() {
        let z = PolyQ::new(vec![Rat::zero(), Rat::zero()]);
        assert!(z.is_zero());
        assert_eq!(z.coeffs().len(), 0);
        assert_eq!(z.degree(), -1);
        assert_eq!(z.degree_string(), "-");
        assert_eq!(z.to_string(), "0");
        assert!(z.is_integral());
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = PolyQ::new(vec![int(1), int(2), Rat::zero()]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.coeff(2), Rat::zero());
        assert_eq!(p.coeff(7), Rat::zero());
    }

    #[test]
    fn eval_examples() {
        // 2l^4 - l^2 at 2
        let p = PolyQ::from_int_coeffs(&[0, 0, -1, 0, 2]);
        assert_eq!(p.eval_int(&Int::from(2)), int(28));
        // l(l-1)/2 at 3
        let q = PolyQ::new(vec![Rat::zero(), rat(-1, 2), rat(1, 2)]);
        assert_eq!(q.eval_int(&Int::from(3)), int(3));
        assert_eq!(q.eval_int(&Int::from(0)), q.coeff(0));
    }

    #[test]
    fn integrality_examples() {
        assert!(PolyQ::from_int_coeffs(&[0, 0, -1, 0, 2]).is_integral());
        let p = PolyQ::new(vec![Rat::zero(), rat(47, 3), int(8), rat(4, 3)]);
        assert!(!p.is_integral());
        assert!(PolyQ::zero().is_integral());
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            PolyQ::from_int_coeffs(&[0, 0, -1, 0, 2]).to_string(),
            "2*l^4 - l^2"
        );
        let half = PolyQ::new(vec![Rat::zero(), rat(-1, 2), rat(1, 2)]);
        assert_eq!(half.to_string(), "1/2*l^2 - 1/2*l");
        assert_eq!(PolyQ::from_int_coeffs(&[3]).to_string(), "3");
        assert_eq!(PolyQ::from_int_coeffs(&[-1, 1]).to_string(), "l - 1");
        assert_eq!(PolyQ::from_int_coeffs(&[1, -1]).to_string(), "-l + 1");
    }

    #[test]
    fn coefficient_list_is_lowest_first() {
        let p = PolyQ::new(vec![Rat::zero(), rat(47, 3), int(8), rat(4, 3)]);
        assert_eq!(p.coeff_list_string(), "0 47/3 8 4/3");
    }

    fn arb_poly() -> impl Strategy<Value = PolyQ> {
        prop::collection::vec((-30i64..=30, 1i64..=6).prop_map(|(n, d)| rat(n, d)), 0..6)
            .prop_map(PolyQ::new)
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), x in -20i64..=20) {
            let x = int(x);
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        }

        #[test]
        fn leading_coefficient_is_nonzero(p in arb_poly()) {
            if let Some(last) = p.coeffs().last() {
                prop_assert!(!last.is_zero());
            }
        }
    }
}
