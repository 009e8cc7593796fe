//! Exact arithmetic in a real quadratic extension `Q(sqrt(D))`.
//!
//! Elements are `a + b*sqrt(D)` with rational `a`, `b`. On construction the
//! radicand is reduced to its squarefree part; when it reduces all the way
//! to 1 the element collapses to a plain rational, which is exactly the
//! degeneracy the friendly-squares parameters rely on.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// An exact element `a + b*sqrt(d)` of a real quadratic field. `d` is kept
/// squarefree; `b = 0` embeds the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    d: u64,
}

/// Splits `n` into `(s, f)` with `n = s^2 * f` and `f` squarefree.
fn square_part(n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut f = n;
    let mut p = 2u64;
    while p * p <= f {
        while f.is_multiple_of(p * p) {
            f /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, f)
}

impl QuadraticNumber {
    /// Builds `a + b*sqrt(d)`, reducing the radicand to squarefree form.
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::OutOfRange("radicand must be positive"));
        }
        let (s, f) = square_part(d);
        let scaled = b * Rational::from_integer(s.into());
        if f == 1 {
            Ok(QuadraticNumber {
                a: a + scaled,
                b: Rational::zero(),
                d: 1,
            })
        } else {
            Ok(QuadraticNumber { a, b: scaled, d: f })
        }
    }

    pub fn from_rational(a: Rational, d: u64) -> Result<Self> {
        Self::new(a, Rational::zero(), d)
    }

    /// The element `sqrt(d)` itself (a rational when `d` is a square).
    pub fn sqrt_d(d: u64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of `sqrt(d)` after radicand reduction.
    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Extracts the rational value, failing when a sqrt component remains.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.a.clone())
        } else {
            Err(Error::OutOfRange("irrational part did not cancel"))
        }
    }

    pub fn conjugate(&self) -> QuadraticNumber {
        QuadraticNumber {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    fn check_field(&self, other: &QuadraticNumber) -> Result<()> {
        // rationals live in every Q(sqrt(d))
        if self.d != other.d && !self.is_rational() && !other.is_rational() {
            return Err(Error::OutOfRange("mixed radicands"));
        }
        Ok(())
    }

    fn common_d(&self, other: &QuadraticNumber) -> u64 {
        if self.is_rational() {
            other.d
        } else {
            self.d
        }
    }

    pub fn add(&self, other: &QuadraticNumber) -> Result<QuadraticNumber> {
        self.check_field(other)?;
        Ok(QuadraticNumber {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.common_d(other),
        })
    }

    pub fn sub(&self, other: &QuadraticNumber) -> Result<QuadraticNumber> {
        self.check_field(other)?;
        Ok(QuadraticNumber {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.common_d(other),
        })
    }

    pub fn mul(&self, other: &QuadraticNumber) -> Result<QuadraticNumber> {
        self.check_field(other)?;
        let d = Rational::from_integer(self.common_d(other).into());
        Ok(QuadraticNumber {
            a: &self.a * &other.a + &self.b * &other.b * &d,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.common_d(other),
        })
    }

    /// Exact field inverse: `(a - b*sqrt(d)) / (a^2 - b^2 d)`.
    pub fn recip(&self) -> Result<QuadraticNumber> {
        let d = Rational::from_integer(self.d.into());
        let norm = &self.a * &self.a - &self.b * &self.b * &d;
        if norm.is_zero() {
            return Err(Error::OutOfRange("inverse of zero"));
        }
        Ok(QuadraticNumber {
            a: &self.a / &norm,
            b: -&self.b / &norm,
            d: self.d,
        })
    }

    /// Integer power, negative exponents through the field inverse.
    pub fn pow(&self, n: i64) -> Result<QuadraticNumber> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut acc = QuadraticNumber {
            a: Rational::one(),
            b: Rational::zero(),
            d: self.d,
        };
        let mut b = base;
        let mut m = n.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&b)?;
            }
            m >>= 1;
            if m > 0 {
                b = b.mul(&b)?;
            }
        }
        Ok(acc)
    }

    /// Approximate value as f64, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let approx = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
        approx(&self.a) + approx(&self.b) * num_traits::Float::sqrt(self.d as f64)
    }
}

impl core::ops::Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn quad(a: Rational, b: Rational, d: u64) -> QuadraticNumber {
        QuadraticNumber::new(a, b, d).unwrap()
    }

    #[test]
    fn square_part_extraction() {
        assert_eq!(square_part(45), (3, 5));
        assert_eq!(square_part(9), (3, 1));
        assert_eq!(square_part(13), (1, 13));
        assert_eq!(square_part(1), (1, 1));
    }

    #[test]
    fn perfect_square_collapses() {
        // 1 + 3*sqrt(9) = 10
        let x = quad(rat(1), rat(3), 9);
        assert!(x.is_rational());
        assert_eq!(x.to_rational().unwrap(), rat(10));
    }

    #[test]
    fn golden_ratio_identity() {
        // phi^2 = phi + 1
        let phi = quad(ratio(1, 2), ratio(1, 2), 5);
        let lhs = phi.mul(&phi).unwrap();
        let rhs = phi.add(&quad(rat(1), rat(0), 5)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_roundtrip() {
        let x = quad(ratio(1, 2), ratio(1, 2), 13);
        let prod = x.mul(&x.recip().unwrap()).unwrap();
        assert_eq!(prod.to_rational().unwrap(), rat(1));
        assert_eq!(x.pow(-3).unwrap(), x.recip().unwrap().pow(3).unwrap());
    }

    #[test]
    fn conjugate_difference_is_pure_sqrt() {
        let q = quad(ratio(1, 2), ratio(1, 2), 13);
        let diff = q
            .pow(7)
            .unwrap()
            .sub(&q.conjugate().pow(7).unwrap())
            .unwrap();
        assert!(diff.rational_part().is_zero());
        assert!(!diff.irrational_part().is_zero());
    }
}
