//! Multi-indices addressing coefficients of Pascal space, and the
//! normal-ordering sign rule of the anticommutative product.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::MAX_DIM;

/// Whether generators commute or anticommute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommutationMode {
    Commutative,
    AntiCommutative,
}

impl CommutationMode {
    pub fn is_anticommutative(self) -> bool {
        matches!(self, CommutationMode::AntiCommutative)
    }
}

/// Exponent vector over the `d` ordered generators of Pascal space.
///
/// The `i`-th entry is the exponent of generator `g_i`. In polynomial mode
/// every exponent is nonnegative; in Laurent mode exactly one designated
/// dominant position may go negative. Multi-indices order lexicographically,
/// which fixes the canonical term order everywhere downstream.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<i32>);

impl MultiIndex {
    /// Builds a multi-index, checking only the dimension bound; exponent
    /// sign constraints depend on context and are checked by the element.
    pub fn new(exponents: Vec<i32>) -> Result<Self> {
        if exponents.is_empty() || exponents.len() > MAX_DIM {
            return Err(Error::InvalidDimension(exponents.len()));
        }
        Ok(MultiIndex(exponents))
    }

    /// The all-zero index of dimension `dim` (the scalar slot).
    pub fn zero(dim: usize) -> Self {
        MultiIndex(alloc::vec![0; dim])
    }

    /// The index of the single generator at `position` (0-based).
    pub fn unit(dim: usize, position: usize) -> Result<Self> {
        if position >= dim {
            return Err(Error::InvalidPosition(position));
        }
        let mut e = alloc::vec![0; dim];
        e[position] = 1;
        Ok(MultiIndex(e))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn exponent(&self, position: usize) -> i32 {
        self.0[position]
    }

    /// Total degree: the sum of all exponents.
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// True if every exponent is even. Even words are central in the
    /// anticommutative algebra: each generator squares to a scalar.
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|&e| e % 2 == 0)
    }

    /// True if every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Checks the Laurent constraint: only `dominant` may be negative.
    pub fn is_laurent_ok(&self, dominant: usize) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e >= 0 || i == dominant)
    }

    /// Componentwise sum, the exponent law of the product.
    pub fn add(&self, other: &MultiIndex) -> Result<MultiIndex> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Componentwise negation (used to invert a pure generator power).
    pub fn negate(&self) -> MultiIndex {
        MultiIndex(self.0.iter().map(|&e| -e).collect())
    }
}

impl From<&[i32]> for MultiIndex {
    fn from(exps: &[i32]) -> Self {
        MultiIndex(exps.to_vec())
    }
}

/// Sign produced when the concatenated word `left * right` is brought back
/// into normal order (generators sorted by position).
///
/// Each unit of `right`'s exponent at position `q` must move left past every
/// `left` generator at a position `> q`; in anticommutative mode each such
/// transposition contributes a factor -1. Exponents may be negative in
/// Laurent mode: a generator squares to a scalar, so its inverse anticommutes
/// exactly like the generator itself and only the parity of the transposition
/// count matters.
pub fn normal_order_sign(
    left: &MultiIndex,
    right: &MultiIndex,
    mode: CommutationMode,
) -> Result<i8> {
    if left.dim() != right.dim() {
        return Err(Error::DimensionMismatch {
            left: left.dim(),
            right: right.dim(),
        });
    }
    if mode == CommutationMode::Commutative {
        return Ok(1);
    }
    let exps_l = left.exponents();
    let exps_r = right.exponents();
    // only the parity of the transposition count matters, so work mod 2
    let mut parity: i32 = 0;
    // parity of the sum of left exponents at positions > q
    let mut suffix: i32 = 0;
    for q in (0..exps_l.len()).rev() {
        parity ^= exps_r[q].rem_euclid(2) & suffix;
        suffix ^= exps_l[q].rem_euclid(2);
    }
    Ok(if parity == 0 { 1 } else { -1 })
}
