//! Fibonacci numbers of order k, Jacobsthal numbers, and their Pauli
//! counterparts.
//!
//! The order-k family satisfies `F(n) = F(n-1) + k*F(n-2)` with `F(0) = 0`,
//! `F(1) = 1`; order one is Fibonacci, order two is Jacobsthal. Negative
//! indices run the recurrence backwards and produce exact rationals with
//! denominators dividing `k^|n|`. The Binet closed form lives in
//! `Q(sqrt(1+4k))` and is evaluated exactly; when `1+4k` is a perfect square
//! the field collapses to the rationals (the friendly-squares degeneracy).
//!
//! Pauli sequences sample the plain sequence at half indices: even `n` maps
//! to `F(n/2)`, odd `n` to `F((n+3)/2)`. That mapping is the definition
//! here; the floating-point closed forms (`*_closed`) are verification
//! targets that must reproduce it to within 1e-9.

use num_complex::Complex;
use num_traits::{Float, One, Zero};

use crate::element::GradedElement;
use crate::error::{Error, Result};
use crate::multi_index::{CommutationMode, MultiIndex};
use crate::pyramid::{binomial, compositions};
use crate::quadratic::QuadraticNumber;
use crate::{Int, Rational, MAX_DIM};

/// Which sequence family a consumer asks for: order `k`, plain or Pauli.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceKind {
    pub order: u32,
    pub pauli: bool,
}

impl SequenceKind {
    pub fn new(order: u32, pauli: bool) -> Result<Self> {
        if order < 1 {
            return Err(Error::OutOfRange("sequence order must be >= 1"));
        }
        Ok(SequenceKind { order, pauli })
    }

    /// The exact value at index `n`.
    pub fn value(&self, n: i64) -> Result<Rational> {
        if self.pauli {
            pauli_order_k(n, self.order)
        } else {
            fib_k(n, self.order)
        }
    }
}

/// Order-k Fibonacci number by the recurrence, both index directions.
pub fn fib_k(n: i64, k: u32) -> Result<Rational> {
    if k < 1 {
        return Err(Error::OutOfRange("order k must be >= 1"));
    }
    let k = Rational::from_integer(Int::from(k));
    if n >= 0 {
        let mut prev = Rational::zero();
        let mut curr = Rational::one();
        if n == 0 {
            return Ok(prev);
        }
        for _ in 1..n {
            let next = &curr + &k * &prev;
            prev = curr;
            curr = next;
        }
        Ok(curr)
    } else {
        // F(i-1) = (F(i+1) - F(i)) / k, walking down from (F(1), F(0))
        let mut upper = Rational::one();
        let mut lower = Rational::zero();
        for _ in 0..-n {
            let below = (&upper - &lower) / &k;
            upper = lower;
            lower = below;
        }
        Ok(lower)
    }
}

/// Order-k Fibonacci number by the exact Binet closed form
/// `(q1^n - q2^n) / sqrt(1+4k)` with `q_{1,2} = (1 +- sqrt(1+4k)) / 2`,
/// evaluated in `Q(sqrt(1+4k))`. The sqrt component of the quotient must
/// vanish identically; only the rational part is returned.
pub fn binet_k(n: i64, k: u32) -> Result<Rational> {
    if k < 1 {
        return Err(Error::OutOfRange("order k must be >= 1"));
    }
    let d = 1 + 4 * k as u64;
    let half = Rational::new(Int::one(), Int::from(2));
    let q1 = QuadraticNumber::new(half.clone(), half.clone(), d)?;
    let q2 = QuadraticNumber::new(half.clone(), -half, d)?;
    let diff = q1.pow(n)?.sub(&q2.pow(n)?)?;
    let quotient = diff.mul(&QuadraticNumber::sqrt_d(d)?.recip()?)?;
    quotient.to_rational()
}

/// Checks the negative-index identity `F(-n) * (-k)^n = -F(n)`, i.e.
/// `F(-n) = (-1)^(n+1) F(n) / k^n`, exactly. Inverting the Binet roots
/// swaps them (`q1*q2 = -k`), which flips the numerator's sign; at order
/// one this is the classic `F(-n) = (-1)^(n-1) F(n)`.
pub fn negative_index_identity_check(n: u32, k: u32) -> Result<bool> {
    let positive = fib_k(n as i64, k)?;
    let negative = fib_k(-(n as i64), k)?;
    let mut scale = Rational::from_integer(Int::from(k)).pow(n as i32);
    if n % 2 == 1 {
        scale = -scale;
    }
    Ok(negative * scale == -positive)
}

/// Pauli Fibonacci number: the half-index sampling of the plain sequence.
pub fn pauli_fib(n: i64) -> Rational {
    pauli_order_k(n, 1).expect("order 1 is valid")
}

/// Pauli Jacobsthal number: the half-index sampling of the Jacobsthal
/// sequence, including `PJ(-2) = J(-1) = 1/2` on the negative side.
pub fn pauli_jacobsthal(n: i64) -> Rational {
    pauli_order_k(n, 2).expect("order 2 is valid")
}

/// The twofold-symmetry mapping for any order: even `n -> F(n/2)`,
/// odd `n -> F((n+3)/2)`.
pub fn pauli_order_k(n: i64, k: u32) -> Result<Rational> {
    if n % 2 == 0 {
        fib_k(n / 2, k)
    } else {
        fib_k((n + 3) / 2, k)
    }
}

/// A floating-point closed-form value together with the magnitude of the
/// imaginary residue left over by the complex arithmetic. A residue above
/// the verification tolerance signals an implementation bug, not a property
/// of the sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForm {
    pub value: f64,
    pub imag_residual: f64,
}

const PI: f64 = core::f64::consts::PI;

/// Whole-form closed expression for Pauli Fibonacci numbers: the Binet
/// formula with exponent `(2n + 3 + 3cos(pi(n-1))) / 4`. The cosine is +-1
/// at integers, so the exponent is itself an integer selecting `n/2` or
/// `(n+3)/2`; it is evaluated through integer powers of the two roots.
pub fn pauli_fib_exponent_closed(n: i64) -> f64 {
    let nf = n as f64;
    let exponent = (2.0 * nf + 3.0 + 3.0 * Float::cos(PI * (nf - 1.0))) / 4.0;
    let e = Float::round(exponent) as i32;
    debug_assert!(Float::abs(exponent - e as f64) < 1e-6);
    let sqrt5 = Float::sqrt(5.0);
    let phi = (1.0 + sqrt5) / 2.0;
    let psi = (1.0 - sqrt5) / 2.0;
    (Float::powi(phi, e) - Float::powi(psi, e)) / sqrt5
}

/// Split-form closed expression for Pauli Fibonacci numbers: two four-term
/// brackets over `+-sqrt(q)` bases, one covering the even indices and one
/// (shifted by 3) the odd ones. The sign pairings cancel the imaginary
/// parts by construction; the residue is reported.
pub fn pauli_fib_closed(n: i64) -> ClosedForm {
    split_order_k_closed(n, 1)
}

/// Closed form for Pauli Jacobsthal numbers:
/// `( (1+sqrt 8) sqrt2^n + (1-sqrt 8)(-sqrt2)^n - (1-i) i^n - (1+i)(-i)^n ) / 6`.
pub fn pauli_jacobsthal_closed(n: i64) -> ClosedForm {
    let sqrt2 = Complex::new(Float::sqrt(2.0), 0.0);
    let sqrt8 = Float::sqrt(8.0);
    let i = Complex::new(0.0, 1.0);
    let e = n as i32;
    let total = (Complex::new(1.0 + sqrt8, 0.0) * sqrt2.powi(e)
        + Complex::new(1.0 - sqrt8, 0.0) * (-sqrt2).powi(e)
        - (Complex::new(1.0, 0.0) - i) * i.powi(e)
        - (Complex::new(1.0, 0.0) + i) * (-i).powi(e))
        / 6.0;
    ClosedForm {
        value: total.re,
        imag_residual: Float::abs(total.im),
    }
}

/// Closed form for order-3 Pauli Fibonacci numbers: the split form with
/// `sqrt((1 +- sqrt 13)/2)` bases. The second base is the conjugate root,
/// mirroring the order-1 and order-2 forms.
pub fn pauli_fib3_closed(n: i64) -> ClosedForm {
    split_order_k_closed(n, 3)
}

/// Shared split form for any order: with `q_{1,2} = (1 +- sqrt(1+4k))/2` and
/// `p = sqrt(q1)`, `m = sqrt(q2)` (imaginary, since `q2 < 0`),
///
/// ```text
/// PF(n) = [ p^n + (-p)^n - m^n - (-m)^n
///         + p^(n+3) + (-p)^(n+3) - m^(n+3) - (-m)^(n+3) ] / (2 sqrt(1+4k))
/// ```
///
/// For even n the unshifted bracket collapses to `2(q1^(n/2) - q2^(n/2))`
/// and the shifted one vanishes; for odd n the roles swap, reproducing the
/// even/odd half-index mapping.
pub fn split_order_k_closed(n: i64, k: u32) -> ClosedForm {
    let disc = (1 + 4 * k) as f64;
    let sqrt_disc = Float::sqrt(disc);
    let q1 = Complex::new((1.0 + sqrt_disc) / 2.0, 0.0);
    let q2 = Complex::new((1.0 - sqrt_disc) / 2.0, 0.0);
    let p = q1.sqrt();
    let m = q2.sqrt();
    let bracket = |e: i32| p.powi(e) + (-p).powi(e) - m.powi(e) - (-m).powi(e);
    let total = (bracket(n as i32) + bracket(n as i32 + 3)) / (2.0 * sqrt_disc);
    ClosedForm {
        value: total.re,
        imag_residual: Float::abs(total.im),
    }
}

/// Sum of hyperpyramid coefficients along the Fibonacci diagonal
/// `m_1 + 2(m_2 + ... + m_{k+1}) = n - 1` in dimension `k+1`.
///
/// Commutative coefficients reproduce `fib_k(n, k)`; anticommutative ones
/// reproduce the Pauli sequence of that order under the identity index
/// correspondence (calibrated against the order-1 and order-2 tables and
/// frozen; no offset is applied).
pub fn fib_from_diagonals(n: u32, k: u32, mode: CommutationMode) -> Result<Int> {
    if n < 1 {
        return Err(Error::OutOfRange("diagonal index must be >= 1"));
    }
    if !(1..=64).contains(&k) {
        return Err(Error::OutOfRange("order k must be in 1..=64"));
    }
    match mode {
        CommutationMode::Commutative => {
            // The rest-compositions of s collapse: multinomial summed over
            // the k rest slots is C(m1+s, s) * k^s.
            let mut total = Int::zero();
            let mut s = 0u32;
            while 2 * s < n {
                let m1 = (n - 1 - 2 * s) as u64;
                total += binomial(m1 + s as u64, s as u64) * Int::from(k).pow(s);
                s += 1;
            }
            Ok(total)
        }
        CommutationMode::AntiCommutative => {
            let dim = k as usize + 1;
            if dim > MAX_DIM {
                return Err(Error::InvalidDimension(dim));
            }
            let x = GradedElement::generator_sum(dim, mode)?;
            // layers 0..n-1, built in one sweep
            let mut layers = alloc::vec![GradedElement::one(dim, mode)?];
            for _ in 1..n {
                let next = layers.last().expect("nonempty").multiply(&x)?;
                layers.push(next);
            }
            let mut total = Rational::zero();
            let mut s = 0u32;
            while 2 * s < n {
                let m1 = (n - 1 - 2 * s) as i32;
                for rest in compositions(s, k as usize) {
                    let mut exps = alloc::vec![m1];
                    exps.extend_from_slice(&rest);
                    let layer_index = (m1 as u32 + s) as usize;
                    total += layers[layer_index].coefficient(&MultiIndex::from(&exps[..]));
                }
                s += 1;
            }
            debug_assert!(total.is_integer());
            Ok(total.to_integer())
        }
    }
}

/// The parameters `k = (m^2 - 1)/4` for odd `m`, which make the Binet
/// discriminant `1 + 4k = m^2` a perfect square and the roots
/// `(1 +- m)/2` rational.
pub fn friendly_squares(m: u64) -> Result<(Int, (Rational, Rational))> {
    if m.is_multiple_of(2) || m < 1 {
        return Err(Error::OutOfRange("friendly squares require odd m >= 1"));
    }
    let m_int = Int::from(m);
    let k = (&m_int * &m_int - Int::one()) / Int::from(4);
    debug_assert_eq!(Int::from(4) * &k + Int::one(), &m_int * &m_int);
    let q_plus = Rational::new(Int::one() + &m_int, Int::from(2));
    let q_minus = Rational::new(Int::one() - &m_int, Int::from(2));
    Ok((k, (q_plus, q_minus)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn fib3_values() {
        let expected = [1i64, 1, 4, 7, 19, 40, 97, 217];
        for (i, &v) in expected.iter().enumerate() {
            assert_eq!(fib_k(i as i64 + 1, 3).unwrap(), rat(v));
        }
        assert_eq!(fib_k(0, 5).unwrap(), rat(0));
    }

    #[test]
    fn negative_fib_values() {
        assert_eq!(fib_k(-4, 3).unwrap(), ratio(-7, 81));
        assert_eq!(fib_k(-4, 2).unwrap(), ratio(-5, 16));
        assert_eq!(fib_k(-5, 1).unwrap(), rat(5));
        assert_eq!(fib_k(-6, 3).unwrap(), ratio(-40, 729));
    }

    #[test]
    fn binet_matches_recurrence() {
        for k in 1..=10u32 {
            for n in -20..=20i64 {
                assert_eq!(binet_k(n, k).unwrap(), fib_k(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binet_degenerate_discriminants() {
        // k = 2 and k = 6 give square discriminants 9 and 25
        assert_eq!(binet_k(6, 2).unwrap(), rat(21));
        assert_eq!(binet_k(-5, 3).unwrap(), ratio(19, 243));
        assert_eq!(binet_k(1, 6).unwrap(), rat(1));
        assert_eq!(binet_k(5, 6).unwrap(), fib_k(5, 6).unwrap());
    }

    #[test]
    fn negative_index_identity() {
        for k in 1..=6u32 {
            for n in 1..=25u32 {
                assert!(negative_index_identity_check(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn mapping_consistency_at_index_level() {
        for m in -20..=20i64 {
            assert_eq!(
                pauli_fib(2 * m),
                fib_k(m, 1).unwrap(),
                "even index {}",
                2 * m
            );
            assert_eq!(
                pauli_fib(2 * m + 1),
                fib_k(m + 2, 1).unwrap(),
                "odd index {}",
                2 * m + 1
            );
        }
    }

    #[test]
    fn values_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<GradedElement>();
        assert_send_sync::<QuadraticNumber>();
        assert_send_sync::<crate::CoefficientTable>();
        assert_send_sync::<crate::divergent::DiagonalSeries>();
    }

    #[test]
    fn pauli_fib_table() {
        // indices -1..=9 map to F1,F0,F2,F1,F3,F2,F4,F3,F5,F4,F6
        let expected = [1i64, 0, 1, 1, 2, 1, 3, 2, 5, 3, 8];
        for (i, &v) in expected.iter().enumerate() {
            assert_eq!(pauli_fib(i as i64 - 1), rat(v), "index {}", i as i64 - 1);
        }
    }

    #[test]
    fn pauli_jacobsthal_table() {
        let pairs: [(i64, Rational); 13] = [
            (-3, rat(0)),
            (-2, ratio(1, 2)),
            (-1, rat(1)),
            (0, rat(0)),
            (1, rat(1)),
            (2, rat(1)),
            (3, rat(3)),
            (4, rat(1)),
            (5, rat(5)),
            (6, rat(3)),
            (7, rat(11)),
            (8, rat(5)),
            (9, rat(21)),
        ];
        for (n, v) in pairs {
            assert_eq!(pauli_jacobsthal(n), v, "PJ({n})");
        }
    }

    #[test]
    fn closed_forms_match_exact() {
        use num_traits::ToPrimitive;
        for n in -30..=30i64 {
            let exact = pauli_fib(n).to_f64().unwrap();
            let whole = pauli_fib_exponent_closed(n);
            let split = pauli_fib_closed(n);
            assert!((whole - exact).abs() < 1e-9, "whole form at {n}");
            assert!((split.value - exact).abs() < 1e-9, "split form at {n}");
            assert!(split.imag_residual < 1e-9, "residual at {n}");
        }
        for n in 0..=30i64 {
            let exact = pauli_jacobsthal(n).to_f64().unwrap();
            let closed = pauli_jacobsthal_closed(n);
            assert!((closed.value - exact).abs() < 1e-9, "PJ closed at {n}");
            assert!(closed.imag_residual < 1e-9);
            let exact3 = pauli_order_k(n, 3).unwrap().to_f64().unwrap();
            let closed3 = pauli_fib3_closed(n);
            assert!((closed3.value - exact3).abs() < 1e-9, "PF3 closed at {n}");
            assert!(closed3.imag_residual < 1e-9);
        }
        // spot values
        assert!((pauli_fib_closed(9).value - 8.0).abs() < 1e-9);
        assert!((pauli_fib_closed(4).value - 1.0).abs() < 1e-9);
        assert!((pauli_jacobsthal_closed(9).value - 21.0).abs() < 1e-9);
        assert!((pauli_jacobsthal_closed(12).value - 21.0).abs() < 1e-9);
        assert!((pauli_fib3_closed(8).value - 7.0).abs() < 1e-9);
        assert!(pauli_fib3_closed(0).value.abs() < 1e-9);
    }

    #[test]
    fn diagonals_commutative() {
        assert_eq!(
            fib_from_diagonals(5, 3, CommutationMode::Commutative).unwrap(),
            Int::from(19)
        );
        assert_eq!(
            fib_from_diagonals(1, 7, CommutationMode::Commutative).unwrap(),
            Int::from(1)
        );
        for k in 1..=4u32 {
            for n in 1..=20u32 {
                let diag = fib_from_diagonals(n, k, CommutationMode::Commutative).unwrap();
                assert_eq!(Rational::from_integer(diag), fib_k(n as i64, k).unwrap());
            }
        }
    }

    #[test]
    fn diagonals_anticommutative_match_pauli_tables() {
        for n in 1..=18u32 {
            let diag = fib_from_diagonals(n, 1, CommutationMode::AntiCommutative).unwrap();
            assert_eq!(Rational::from_integer(diag), pauli_fib(n as i64), "PF({n})");
            let diag = fib_from_diagonals(n, 2, CommutationMode::AntiCommutative).unwrap();
            assert_eq!(
                Rational::from_integer(diag),
                pauli_jacobsthal(n as i64),
                "PJ({n})"
            );
        }
        // spot check from the order-1 diagonal through the Pauli triangle
        assert_eq!(
            fib_from_diagonals(7, 1, CommutationMode::AntiCommutative).unwrap(),
            Int::from(5)
        );
    }

    #[test]
    fn friendly_square_table() {
        let expected: [(u64, i64); 6] = [(1, 0), (3, 2), (5, 6), (7, 12), (9, 20), (11, 30)];
        for (m, k) in expected {
            let (got_k, (q1, q2)) = friendly_squares(m).unwrap();
            assert_eq!(got_k, Int::from(k));
            assert_eq!(q1, ratio(1 + m as i64, 2));
            assert_eq!(q2, ratio(1 - m as i64, 2));
        }
        assert!(friendly_squares(4).is_err());
    }
}
