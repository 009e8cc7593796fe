//! Sparse exact elements of the (anti)commutative generator algebra.
//!
//! A [`GradedElement`] is a sparse map from normal-ordered generator words
//! (multi-indices) to exact rational coefficients. Products distribute over
//! terms; the normal-ordering sign rule supplies the -1 factors in
//! anticommutative mode. Negative total exponents are handled as truncated
//! Laurent series in a designated dominant generator: the series `x^-1`,
//! `x^-2`, ... are exactly the rows of the negative Pascal and Pauli Pascal
//! structures.

use alloc::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multi_index::{normal_order_sign, CommutationMode, MultiIndex};
use crate::{Rational, MAX_DIM};

/// Laurent bookkeeping: which generator may carry negative exponents and how
/// many correction orders past the leading term are retained.
///
/// Truncation is relative: a term is kept when its dominant exponent is at
/// least `leading - truncation`, where `leading` is the element's maximal
/// dominant exponent. This matches the open-ended rows of the negative
/// triangles, which are indexed by correction order rather than absolute
/// degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Laurent {
    pub dominant: usize,
    pub truncation: u32,
}

/// A sparse element of the d-generator algebra under a fixed commutation
/// mode. Immutable once built; all operations return new elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    dim: usize,
    mode: CommutationMode,
    laurent: Option<Laurent>,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl GradedElement {
    /// The zero element (empty term map).
    pub fn zero(dim: usize, mode: CommutationMode) -> Result<Self> {
        check_dim(dim)?;
        Ok(GradedElement {
            dim,
            mode,
            laurent: None,
            terms: BTreeMap::new(),
        })
    }

    /// The scalar multiple `value * 1`.
    pub fn scalar(dim: usize, mode: CommutationMode, value: Rational) -> Result<Self> {
        let mut e = Self::zero(dim, mode)?;
        if !value.is_zero() {
            e.terms.insert(MultiIndex::zero(dim), value);
        }
        Ok(e)
    }

    /// The multiplicative unit.
    pub fn one(dim: usize, mode: CommutationMode) -> Result<Self> {
        Self::scalar(dim, mode, Rational::one())
    }

    /// The single generator `g_position` (0-based).
    pub fn generator(dim: usize, mode: CommutationMode, position: usize) -> Result<Self> {
        let mut e = Self::zero(dim, mode)?;
        e.terms
            .insert(MultiIndex::unit(dim, position)?, Rational::one());
        Ok(e)
    }

    /// The grade-1 vector `c_0 g_0 + ... + c_{d-1} g_{d-1}`.
    pub fn vector(mode: CommutationMode, coefficients: &[Rational]) -> Result<Self> {
        let dim = coefficients.len();
        let mut e = Self::zero(dim, mode)?;
        for (i, c) in coefficients.iter().enumerate() {
            if !c.is_zero() {
                e.terms.insert(MultiIndex::unit(dim, i)?, c.clone());
            }
        }
        Ok(e)
    }

    /// The sum of all `dim` generators, the expansion base of every layer.
    pub fn generator_sum(dim: usize, mode: CommutationMode) -> Result<Self> {
        check_dim(dim)?;
        Self::vector(mode, &alloc::vec![Rational::one(); dim])
    }

    /// Builds an element from explicit terms, enforcing every invariant:
    /// matching dimensions, sign constraints, no stored zeros, and Laurent
    /// truncation when metadata is given.
    pub fn from_terms<I>(
        dim: usize,
        mode: CommutationMode,
        laurent: Option<Laurent>,
        terms: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        check_dim(dim)?;
        if let Some(l) = laurent {
            if l.dominant >= dim {
                return Err(Error::InvalidPosition(l.dominant));
            }
        }
        let mut map = BTreeMap::new();
        for (idx, coeff) in terms {
            if idx.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: idx.dim(),
                });
            }
            match laurent {
                None if !idx.is_polynomial() => return Err(Error::NegativeExponent),
                Some(l) if !idx.is_laurent_ok(l.dominant) => return Err(Error::NegativeExponent),
                _ => {}
            }
            if coeff.is_zero() {
                continue;
            }
            let entry = map.entry(idx).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        map.retain(|_, c: &mut Rational| !c.is_zero());
        let mut e = GradedElement {
            dim,
            mode,
            laurent,
            terms: map,
        };
        e.truncate();
        Ok(e)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> CommutationMode {
        self.mode
    }

    pub fn laurent(&self) -> Option<Laurent> {
        self.laurent
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True if the element is exactly the scalar 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&MultiIndex::zero(self.dim))
                .is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic multi-index) order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    /// The coefficient at `index`, zero when absent.
    pub fn coefficient(&self, index: &MultiIndex) -> Rational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Maximal exponent of the given position over all terms, if any.
    pub fn leading_exponent(&self, position: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(position)).max()
    }

    /// True if every term has even exponents only (such elements are central
    /// in anticommutative mode).
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(MultiIndex::is_even)
    }

    /// True if every term is a single generator to the first power.
    pub fn is_grade1_vector(&self) -> bool {
        !self.terms.is_empty()
            && self
                .terms
                .keys()
                .all(|m| m.total_degree() == 1 && m.exponents().iter().all(|&e| e == 0 || e == 1))
    }

    /// Sum of two elements of identical dimension and mode.
    pub fn add(&self, other: &GradedElement) -> Result<GradedElement> {
        self.check_compatible(other)?;
        let laurent = merge_laurent(self.laurent, other.laurent)?;
        let mut terms = self.terms.clone();
        for (idx, c) in &other.terms {
            let entry = terms.entry(idx.clone()).or_insert_with(Rational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        let mut e = GradedElement {
            dim: self.dim,
            mode: self.mode,
            laurent,
            terms,
        };
        e.truncate();
        Ok(e)
    }

    pub fn sub(&self, other: &GradedElement) -> Result<GradedElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: &Rational) -> GradedElement {
        if factor.is_zero() {
            return GradedElement {
                dim: self.dim,
                mode: self.mode,
                laurent: self.laurent,
                terms: BTreeMap::new(),
            };
        }
        GradedElement {
            dim: self.dim,
            mode: self.mode,
            laurent: self.laurent,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Product, distributing over terms with the normal-ordering sign.
    /// If either operand is Laurent the result is truncated to the tighter
    /// correction order.
    pub fn multiply(&self, other: &GradedElement) -> Result<GradedElement> {
        self.check_compatible(other)?;
        let laurent = merge_laurent(self.laurent, other.laurent)?;
        let terms = self.mul_raw(other)?;
        let mut e = GradedElement {
            dim: self.dim,
            mode: self.mode,
            laurent,
            terms,
        };
        e.truncate();
        Ok(e)
    }

    /// Nonnegative power by binary exponentiation; `x^0` is the scalar 1.
    pub fn power(&self, n: u32) -> Result<GradedElement> {
        let mut acc = GradedElement {
            dim: self.dim,
            mode: self.mode,
            laurent: self.laurent,
            terms: GradedElement::one(self.dim, self.mode)?.terms,
        };
        acc.truncate();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(acc)
    }

    /// Truncated Laurent inverse with the given dominant generator.
    ///
    /// Supported shapes: a grade-1 vector (sum of distinct single-generator
    /// terms), or an element whose unique leading term in the dominant
    /// position is a pure dominant power and whose remaining terms commute
    /// with everything in play (any commutative element of that shape; an
    /// all-even element in anticommutative mode).
    ///
    /// For a grade-1 vector `x` in anticommutative mode, `x^2` is central, so
    /// `x^-1 = x * (x^2)^-1` and `(x^2)^-1` expands as a geometric series in
    /// the non-dominant squares over the dominant square. In commutative mode
    /// the classical `(1+u)^-1` expansion applies directly.
    pub fn inverse_series(&self, dominant: usize, truncation: u32) -> Result<GradedElement> {
        if self.laurent.is_some() {
            return Err(Error::LaurentInput);
        }
        if dominant >= self.dim {
            return Err(Error::InvalidPosition(dominant));
        }
        if self.mode.is_anticommutative() && !self.is_even() {
            if !self.is_grade1_vector() {
                return Err(Error::UnsupportedShape);
            }
            // x^-1 = x * (x^2)^-1 with x^2 central.
            let square = self.multiply(self)?;
            let square_inv = square.central_inverse(dominant, truncation + 1)?;
            let mut y = self.multiply(&square_inv)?;
            y.laurent = Some(Laurent {
                dominant,
                truncation,
            });
            y.truncate();
            Ok(y)
        } else {
            self.central_inverse(dominant, truncation)
        }
    }

    /// Negative power as a truncated Laurent series, following the even/odd
    /// factorization `x^-2k = (x^2)^-k`, `x^-(2k+1) = x * (x^2)^-(k+1)` in
    /// anticommutative mode.
    pub fn power_series(&self, n: i64, dominant: usize, truncation: u32) -> Result<GradedElement> {
        if n >= 0 {
            return Err(Error::OutOfRange("power_series requires n < 0"));
        }
        if self.laurent.is_some() {
            return Err(Error::LaurentInput);
        }
        let m = n.unsigned_abs() as u32;
        if self.mode.is_anticommutative() && !self.is_even() {
            if !self.is_grade1_vector() {
                return Err(Error::UnsupportedShape);
            }
            let square = self.multiply(self)?;
            let square_inv = square.central_inverse(dominant, truncation + 1)?;
            let result = if m.is_multiple_of(2) {
                laurent_power(&square_inv, m / 2)?
            } else {
                self.multiply(&laurent_power(&square_inv, m / 2 + 1)?)?
            };
            let mut result = result;
            result.laurent = Some(Laurent {
                dominant,
                truncation,
            });
            result.truncate();
            Ok(result)
        } else {
            let inv = self.central_inverse(dominant, truncation)?;
            laurent_power(&inv, m)
        }
    }

    /// Geometric-series inversion about the unique leading dominant term.
    /// The leading term must be a pure power of the dominant generator; all
    /// arithmetic goes through the graded product, so the result is valid in
    /// either mode whenever the shape precondition holds.
    fn central_inverse(&self, dominant: usize, truncation: u32) -> Result<GradedElement> {
        let leading = self
            .leading_exponent(dominant)
            .ok_or(Error::DominantAbsent)?;
        if leading < 1 {
            return Err(Error::DominantAbsent);
        }
        let mut leaders = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(dominant) == leading);
        let (lead_idx, lead_coeff) = leaders.next().expect("leading term exists");
        if leaders.next().is_some() {
            return Err(Error::UnsupportedShape);
        }
        if lead_idx.total_degree() != leading as i64 {
            // leading term mixes in other generators: not a pure dominant power
            return Err(Error::UnsupportedShape);
        }
        let lead_idx = lead_idx.clone();
        let lead_inv_idx = lead_idx.negate();
        let lead_inv_coeff = lead_coeff.recip();

        // rest = self - leading; u = rest * leading^-1 lowers the dominant
        // exponent by at least one per factor.
        let mut rest = self.terms.clone();
        rest.remove(&lead_idx);
        let rest = GradedElement {
            dim: self.dim,
            mode: self.mode,
            laurent: None,
            terms: rest,
        };
        let lead_inv = GradedElement {
            dim: self.dim,
            mode: self.mode,
            laurent: None,
            terms: [(lead_inv_idx.clone(), lead_inv_coeff.clone())]
                .into_iter()
                .collect(),
        };
        let u = rest.mul_raw(&lead_inv)?;
        let u = GradedElement {
            dim: self.dim,
            mode: self.mode,
            laurent: None,
            terms: u,
        };
        let gap = match u.leading_exponent(dominant) {
            None => {
                // exact inverse of a single term
                let mut e = lead_inv;
                e.laurent = Some(Laurent {
                    dominant,
                    truncation,
                });
                return Ok(e);
            }
            Some(top) => -(top as i64),
        };
        debug_assert!(gap >= 1);

        // acc = sum_j (-u)^j, kept above the absolute floor -truncation.
        let floor = -(truncation as i64);
        let mut acc = GradedElement::one(self.dim, self.mode)?.terms;
        let mut pow = GradedElement::one(self.dim, self.mode)?;
        let mut j: i64 = 0;
        loop {
            j += 1;
            if j * gap > truncation as i64 {
                break;
            }
            let mut next = pow.mul_raw(&u)?;
            prune_floor(&mut next, dominant, floor);
            pow = GradedElement {
                dim: self.dim,
                mode: self.mode,
                laurent: None,
                terms: next,
            };
            if pow.is_zero() {
                break;
            }
            let sign = if j % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            for (m, c) in pow.terms() {
                let entry = acc.entry(m.clone()).or_insert_with(Rational::zero);
                *entry += c * &sign;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        let acc = GradedElement {
            dim: self.dim,
            mode: self.mode,
            laurent: None,
            terms: acc,
        };
        let mut result = acc.mul_raw(&lead_inv)?;
        result.retain(|_, c| !c.is_zero());
        let mut e = GradedElement {
            dim: self.dim,
            mode: self.mode,
            laurent: Some(Laurent {
                dominant,
                truncation,
            }),
            terms: result,
        };
        e.truncate();
        Ok(e)
    }

    /// Raw distributed product without truncation or metadata.
    fn mul_raw(&self, other: &GradedElement) -> Result<BTreeMap<MultiIndex, Rational>> {
        let mut terms: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
        for (ml, cl) in &self.terms {
            for (mr, cr) in &other.terms {
                let sign = normal_order_sign(ml, mr, self.mode)?;
                let idx = ml.add(mr)?;
                let mut c = cl * cr;
                if sign < 0 {
                    c = -c;
                }
                let entry = terms.entry(idx).or_insert_with(Rational::zero);
                *entry += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(terms)
    }

    fn check_compatible(&self, other: &GradedElement) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    /// Drops terms past the retained correction order, relative to the
    /// current leading dominant exponent.
    fn truncate(&mut self) {
        let Some(l) = self.laurent else { return };
        let Some(leading) = self.leading_exponent(l.dominant) else {
            return;
        };
        let floor = leading as i64 - l.truncation as i64;
        self.terms
            .retain(|m, _| m.exponent(l.dominant) as i64 >= floor);
    }
}

/// Power of an already-truncated Laurent series (binary exponentiation over
/// the truncating multiply).
fn laurent_power(base: &GradedElement, n: u32) -> Result<GradedElement> {
    let mut acc: Option<GradedElement> = None;
    let mut b = base.clone();
    let mut n = n;
    debug_assert!(n >= 1);
    while n > 0 {
        if n & 1 == 1 {
            acc = Some(match acc {
                None => b.clone(),
                Some(a) => a.multiply(&b)?,
            });
        }
        n >>= 1;
        if n > 0 {
            b = b.multiply(&b)?;
        }
    }
    Ok(acc.expect("n >= 1"))
}

fn merge_laurent(a: Option<Laurent>, b: Option<Laurent>) -> Result<Option<Laurent>> {
    match (a, b) {
        (None, None) => Ok(None),
        (Some(l), None) | (None, Some(l)) => Ok(Some(l)),
        (Some(l), Some(r)) => {
            if l.dominant != r.dominant {
                return Err(Error::UnsupportedShape);
            }
            Ok(Some(Laurent {
                dominant: l.dominant,
                truncation: l.truncation.min(r.truncation),
            }))
        }
    }
}

fn prune_floor(terms: &mut BTreeMap<MultiIndex, Rational>, dominant: usize, floor: i64) {
    terms.retain(|m, _| m.exponent(dominant) as i64 >= floor);
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::InvalidDimension(dim));
    }
    Ok(())
}
