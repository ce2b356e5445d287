//! Dense univariate polynomials over the integers, just enough for cyclotomic
//! arithmetic: multiplication, subtraction, and division by a monic divisor.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients in ascending degree; always trimmed, so `coeffs` is empty
/// exactly for the zero polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// `x^k`.
    pub fn x_power(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// `x^m - 1`.
    pub fn x_power_minus_one(m: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = -BigInt::one();
        coeffs[m] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Long division by a monic divisor; returns `(quotient, remainder)` with
    /// `deg(remainder) < deg(divisor)`. Panics if the divisor is not monic.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert!(
            divisor.coeffs[dd].is_one(),
            "divisor must be monic for exact integer division"
        );
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPoly::zero(), IntPoly::new(rem));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[k]);
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate().take(dd) {
                let delta = c * &lead;
                rem[k - dd + j] -= delta;
            }
            quot[k - dd] = lead;
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Exact division: panics if the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &IntPoly) -> IntPoly {
        let (q, r) = self.div_rem_monic(divisor);
        assert!(r.is_zero(), "division was not exact");
        q
    }
}

#[cfg(test)]
impl IntPoly {
    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::new(coeffs)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPoly {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn mul_and_divide_back() {
        let a = poly(&[-1, 2, 1]); // x^2 + 2x - 1
        let b = poly(&[3, 0, 1]); // x^2 + 3
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact_monic(&b), a);
        let (q, r) = prod.add(&IntPoly::one()).div_rem_monic(&b);
        assert_eq!(q, a);
        assert_eq!(r, IntPoly::one());
    }

    #[test]
    fn x_power_minus_one_shape() {
        let p = IntPoly::x_power_minus_one(3);
        assert_eq!(p, poly(&[-1, 0, 0, 1]));
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn trimming() {
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[1, 0]).degree(), Some(0));
    }
}
