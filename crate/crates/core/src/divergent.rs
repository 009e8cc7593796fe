//! Value assignment for the divergent diagonal series of the negative
//! pyramids.
//!
//! The primary method is analytic continuation in the spirit of Euler's
//! treatment of the geometric series: a diagonal regroups into finitely many
//! families whose generating functions are the closed forms `x^s/(1-rx)^m`,
//! and the family's value is that rational function evaluated at the
//! family's ratio point, however far outside the radius of convergence.
//! The Euler binomial transform is kept as an independent second method
//! with a smaller domain; where both apply they must agree exactly.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pyramid::{binomial, gamma_multinomial};
use crate::{Int, Rational};

// ---------------------------------------------------------------------------
// polynomials and rational generating functions
// ---------------------------------------------------------------------------

/// Dense univariate polynomial with exact rational coefficients, ascending
/// order, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Poly(coefficients)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(alloc::vec![Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(alloc::vec![c])
    }

    /// The monomial `c * x^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = alloc::vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let mut out = alloc::vec![Rational::zero(); len];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = alloc::vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|c| c * factor).collect())
    }

    /// Euclidean division, returning (quotient, remainder).
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.0.last().expect("nonzero").clone();
        let ddeg = divisor.0.len() - 1;
        let mut rem = self.0.clone();
        let mut quot = alloc::vec![
            Rational::zero();
            self.0.len().saturating_sub(divisor.0.len()) + 1
        ];
        while rem.len() > ddeg && !rem.is_empty() {
            let rdeg = rem.len() - 1;
            let factor = rem.last().expect("nonempty") / &dlead;
            if factor.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rdeg - ddeg;
            quot[shift] = factor.clone();
            for (i, c) in divisor.0.iter().enumerate() {
                rem[shift + i] -= c * &factor;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly(rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.0.last().expect("nonzero").clone();
        a.scale(&lead.recip())
    }
}

/// A rational generating function in one formal variable, kept in lowest
/// terms with a monic denominator. The formal expansion of `num/den` is the
/// series whose value assignment [`abel_sum`] computes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Poly,
    denominator: Poly,
}

impl RationalGF {
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::PoleAtEvaluation);
        }
        let g = numerator.gcd(&denominator);
        let (numerator, denominator) = if g.is_zero() || g.degree() == Some(0) {
            (numerator, denominator)
        } else {
            (numerator.divrem(&g).0, denominator.divrem(&g).0)
        };
        let lead = denominator.0.last().expect("nonzero").clone();
        Ok(RationalGF {
            numerator: numerator.scale(&lead.recip()),
            denominator: denominator.scale(&lead.recip()),
        })
    }

    /// The family `x^shift / (1 - r x)^power`.
    pub fn geometric_family(shift: usize, r: &Rational, power: u32) -> Self {
        let base = Poly::new(alloc::vec![Rational::one(), -r.clone()]);
        let mut den = Poly::one();
        for _ in 0..power {
            den = den.mul(&base);
        }
        RationalGF::new(Poly::monomial(Rational::one(), shift), den)
            .expect("denominator is a power of 1 - r x")
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    pub fn add(&self, other: &RationalGF) -> Result<RationalGF> {
        RationalGF::new(
            self.numerator
                .mul(&other.denominator)
                .add(&other.numerator.mul(&self.denominator)),
            self.denominator.mul(&other.denominator),
        )
    }

    pub fn scale(&self, factor: &Rational) -> RationalGF {
        RationalGF {
            numerator: self.numerator.scale(factor),
            denominator: self.denominator.clone(),
        }
    }

    /// The Taylor coefficients of the formal expansion at 0, by long
    /// division; used to exhibit the series a GF stands for.
    pub fn expansion(&self, len: usize) -> Vec<Rational> {
        let den0 = self
            .denominator
            .coefficients()
            .first()
            .expect("monic denominator is nonzero")
            .clone();
        assert!(!den0.is_zero(), "expansion requires den(0) != 0");
        let mut out = Vec::with_capacity(len);
        let num = self.numerator.coefficients();
        let den = self.denominator.coefficients();
        for i in 0..len {
            let mut c = num.get(i).cloned().unwrap_or_else(Rational::zero);
            for j in 1..=i.min(den.len() - 1) {
                c -= &den[j] * &out[i - j];
            }
            out.push(c / &den0);
        }
        out
    }
}

/// The analytic-continuation value of the series represented by `gf`,
/// at evaluation point `x0`: simply `num(x0)/den(x0)`, defined whenever
/// `x0` is not a pole.
pub fn abel_sum(gf: &RationalGF, x0: &Rational) -> Result<Rational> {
    let den = gf.denominator().eval(x0);
    if den.is_zero() {
        return Err(Error::PoleAtEvaluation);
    }
    Ok(gf.numerator().eval(x0) / den)
}

// ---------------------------------------------------------------------------
// diagonal series and the Euler transform
// ---------------------------------------------------------------------------

/// The fixed regrouping scheme for diagonal series: terms are grouped by
/// total absolute degree of the lattice points before summation. Divergent
/// series are regrouping-sensitive; freezing the scheme makes every value
/// in this module reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regrouping {
    ByTotalDegree,
}

/// A regrouped diagonal series: a generator of exact terms plus a record of
/// where it came from.
pub struct DiagonalSeries {
    terms: Box<dyn Fn(usize) -> Rational + Send + Sync>,
    pub regrouping: Regrouping,
    pub provenance: String,
}

impl DiagonalSeries {
    pub fn new<F>(provenance: impl Into<String>, terms: F) -> Self
    where
        F: Fn(usize) -> Rational + Send + Sync + 'static,
    {
        DiagonalSeries {
            terms: Box::new(terms),
            regrouping: Regrouping::ByTotalDegree,
            provenance: provenance.into(),
        }
    }

    /// A series with finitely many explicit terms, zero afterwards.
    pub fn from_terms(provenance: impl Into<String>, terms: Vec<Rational>) -> Self {
        Self::new(provenance, move |i| {
            terms.get(i).cloned().unwrap_or_else(Rational::zero)
        })
    }

    pub fn term(&self, index: usize) -> Rational {
        (self.terms)(index)
    }

    pub fn prefix(&self, len: usize) -> Vec<Rational> {
        (0..len).map(|i| self.term(i)).collect()
    }
}

impl core::fmt::Debug for DiagonalSeries {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("DiagonalSeries")
            .field("regrouping", &self.regrouping)
            .field("provenance", &self.provenance)
            .finish()
    }
}

/// Result of a summation attempt: an exact value, or a report that the
/// method did not close within its budget. `Divergent` is a value, not an
/// error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Summation {
    Exact(Rational),
    Divergent,
}

/// Window of terms the transform works on. The inputs this crate produces
/// close (terminate or turn geometric) well inside this window or not at
/// all.
const HORIZON: usize = 40;
/// Zero-tail length demanded before a series counts as terminating.
const TAIL_GUARD: usize = 6;
/// How deep into the window a geometric tail may start.
const MAX_GEOMETRIC_START: usize = 10;

/// Sums a series by iterated Euler (binomial) transforms
/// `a_n -> sum_j C(n,j) a_j / 2^(n+1)`.
///
/// Before each transform (and after the last) the current series is checked
/// for an exact closure: either it terminates, or from some early index on
/// it is exactly geometric with ratio in (-1, 1). In both cases the sum is
/// exact. Anything else after `max_steps` transforms reports `Divergent`.
pub fn euler_transform_sum(series: &DiagonalSeries, max_steps: u32) -> Summation {
    let mut terms = series.prefix(HORIZON);
    for step in 0..=max_steps {
        if let Some(value) = close_exactly(&terms) {
            return Summation::Exact(value);
        }
        if step < max_steps {
            terms = euler_transform(&terms);
        }
    }
    Summation::Divergent
}

/// One Euler transform step over an exact term window.
fn euler_transform(terms: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(terms.len());
    let two = Rational::from_integer(Int::from(2));
    for n in 0..terms.len() {
        let mut acc = Rational::zero();
        for (j, a) in terms.iter().enumerate().take(n + 1) {
            acc += Rational::from_integer(binomial(n as u64, j as u64)) * a;
        }
        out.push(acc / two.pow(n as i32 + 1));
    }
    out
}

fn close_exactly(terms: &[Rational]) -> Option<Rational> {
    // terminating: a zero tail of at least TAIL_GUARD terms
    let last_nonzero = terms.iter().rposition(|c| !c.is_zero());
    match last_nonzero {
        None => return Some(Rational::zero()),
        Some(last) if last + TAIL_GUARD < terms.len() => {
            return Some(terms[..=last].iter().sum());
        }
        _ => {}
    }
    // geometric tail with |ratio| < 1
    for start in 0..=MAX_GEOMETRIC_START {
        if terms[start].is_zero() {
            continue;
        }
        let ratio = &terms[start + 1] / &terms[start];
        if ratio.abs() >= Rational::one() {
            continue;
        }
        let tail_ok = (start..terms.len() - 1).all(|i| &terms[i] * &ratio == terms[i + 1]);
        if tail_ok {
            let prefix: Rational = terms[..start].iter().sum();
            let tail = &terms[start] / (Rational::one() - ratio);
            return Some(prefix + tail);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// negative-diagonal constructions
// ---------------------------------------------------------------------------

/// One regrouped family of a negative diagonal: the lattice points at fixed
/// dominant offset collapse to the series
/// `weight * C(t+order-1, t) * ratio^t`, whose generating function is
/// `weight / (1-x)^order` evaluated at `ratio`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalFamily {
    /// Power of the geometric family: the GF is `1/(1-x)^order`.
    pub order: u32,
    /// Value of the family's base lattice point (its `t = 0` coefficient).
    pub weight: Rational,
    /// Evaluation point `-(k-1)` of the order-k construction.
    pub ratio: Rational,
    /// Total exponent of the hyperpyramid layer the family lives in.
    pub layer: i64,
    /// Exponent of the leading generator shared by all points of the family.
    pub dominant_offset: i64,
}

impl DiagonalFamily {
    /// The `t`-th regrouped term of the family.
    pub fn term(&self, t: usize) -> Rational {
        &self.weight
            * Rational::from_integer(binomial(t as u64 + self.order as u64 - 1, t as u64))
            * self.ratio.pow(t as i32)
    }

    /// The family's series, for cross-checks against the transform method.
    pub fn series(&self, provenance: impl Into<String>) -> DiagonalSeries {
        let f = self.clone();
        DiagonalSeries::new(provenance, move |t| f.term(t))
    }

    /// The family's assigned value: `weight / (1 - ratio)^order`.
    pub fn value(&self) -> Rational {
        let gf = RationalGF::geometric_family(0, &Rational::one(), self.order);
        abel_sum(&gf, &self.ratio).expect("1 - ratio != 0 for ratio <= 0") * &self.weight
    }
}

/// The diagonal families of `F(-n)` for the order-k sequence, read off the
/// Gamma-extended multinomials of the (k+1)-dimensional negative
/// hyperpyramid whose dominant generator is the second one. Family `order`
/// (nu) collects the points with dominant offset `2nu - n - 1`; the points
/// with nonnegative layer vanish under the Gamma extension, which leaves
/// the finite list `nu = ceil((n+1)/2) ..= n`.
pub fn negative_diagonal_families(n: u32, k: u32) -> Result<Vec<DiagonalFamily>> {
    if n < 1 {
        return Err(Error::OutOfRange("diagonal index must be >= 1"));
    }
    if k < 1 {
        return Err(Error::OutOfRange("order k must be >= 1"));
    }
    let n = n as i64;
    let k = k as i64;
    let ratio = Rational::from_integer(Int::from(-(k - 1)));
    let mut families = Vec::new();
    let lowest = (n + 2) / 2; // ceil((n+1)/2)
    for nu in lowest..=n {
        let dominant_offset = 2 * nu - n - 1;
        let layer = nu - n - 1;
        let mut parts = alloc::vec![0i64; k as usize + 1];
        parts[0] = dominant_offset;
        parts[1] = -nu;
        let weight = gamma_multinomial(layer, &parts)?;
        families.push(DiagonalFamily {
            order: nu as u32,
            weight,
            ratio: ratio.clone(),
            layer,
            dominant_offset,
        });
    }
    Ok(families)
}

fn order_k_negative_diagonal(n: u32, k: u32) -> Result<Rational> {
    let mut total = Rational::zero();
    for family in negative_diagonal_families(n, k)? {
        total += family.value();
    }
    Ok(total)
}

/// Negative Jacobsthal number as the value assigned to its divergent
/// diagonal: the sum over the diagonal's families of
/// `abel_sum(1/(1-x)^order, -1)`, each weighted by the family's base
/// coefficient. Equals `binet_k(-n, 2)`.
pub fn jacobsthal_negative_diagonal(n: u32) -> Result<Rational> {
    order_k_negative_diagonal(n, 2)
}

/// Negative order-3 Fibonacci number by the same construction with ratio
/// point -2 (the alternating powers-of-two series and its derivatives).
/// Equals `binet_k(-n, 3)`.
pub fn fib3_negative_diagonal(n: u32) -> Result<Rational> {
    order_k_negative_diagonal(n, 3)
}

/// Negative Pauli Jacobsthal number for odd `n`, assembled the way the
/// four-periodic series split:
///
/// each family of the `J(-(n+1)/2)` diagonal appears with every term
/// doubled - the `+ + - -` pattern - and splits into two identical
/// alternating subseries, each assigned by [`abel_sum`]; the `J(-(n-1)/2)`
/// diagonal contributes once more (nothing when that index is zero). The
/// total is `J((1-n)/2) + 2 J((-1-n)/2) = PJ(-n)` by the Jacobsthal
/// recurrence.
pub fn pauli_jacobsthal_negative_diagonal(n: u32) -> Result<Rational> {
    if n.is_multiple_of(2) {
        return Err(Error::OutOfRange(
            "the negative Pauli diagonal is exhibited for odd indices only",
        ));
    }
    let doubled = n.div_ceil(2);
    let single = (n - 1) / 2;
    let mut total = Rational::zero();
    for family in negative_diagonal_families(doubled, 2)? {
        // two alternating subseries, one per copy of the doubled terms
        total += family.value() * Rational::from_integer(Int::from(2));
    }
    if single >= 1 {
        for family in negative_diagonal_families(single, 2)? {
            total += family.value();
        }
    }
    Ok(total)
}

/// The doubled and single series whose values
/// [`pauli_jacobsthal_negative_diagonal`] adds up, in the order they are
/// summed: first each four-periodic doubled family, then the alternating
/// single families.
pub fn pauli_jacobsthal_negative_series(n: u32) -> Result<Vec<DiagonalSeries>> {
    if n.is_multiple_of(2) {
        return Err(Error::OutOfRange(
            "the negative Pauli diagonal is exhibited for odd indices only",
        ));
    }
    let doubled = n.div_ceil(2);
    let single = (n - 1) / 2;
    let mut out = Vec::new();
    for family in negative_diagonal_families(doubled, 2)? {
        let f = family.clone();
        out.push(DiagonalSeries::new(
            alloc::format!(
                "PJ(-{n}): doubled J(-{doubled}) family of order {}",
                family.order
            ),
            move |i| f.term(i / 2),
        ));
    }
    if single >= 1 {
        for family in negative_diagonal_families(single, 2)? {
            out.push(family.series(alloc::format!(
                "PJ(-{n}): single J(-{single}) family of order {}",
                family.order
            )));
        }
    }
    Ok(out)
}
