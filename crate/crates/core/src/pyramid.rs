//! Coefficient layers of Pascal and Pauli Pascal triangles, pyramids, and
//! hyperpyramids, for positive and negative total exponents.
//!
//! A layer is the set of coefficients of `(g_1 + ... + g_d)^n` at fixed `n`.
//! For `n >= 0` and commutative generators these are the multinomial
//! coefficients; anticommutative layers come from the engine and show the
//! interleaved zeros of the Pauli structures. For `n < 0` a layer is an
//! open-ended Laurent series and is generated to a caller-chosen correction
//! order; the `d` negative structures per dimension differ only in which
//! generator is dominant.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::element::GradedElement;
use crate::error::{Error, Result};
use crate::multi_index::{CommutationMode, MultiIndex};
use crate::{Int, Rational, MAX_DIM};

/// Exact factorial.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Exact binomial coefficient, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc *= Int::from(n - i);
        acc /= Int::from(i + 1);
    }
    acc
}

/// Exact multinomial coefficient `n! / (parts[0]! ... parts[d-1]!)`.
/// The parts must be nonnegative and sum to `n`.
pub fn multinomial(n: u64, parts: &[i64]) -> Result<Int> {
    let mut sum: i64 = 0;
    for &p in parts {
        if p < 0 {
            return Err(Error::NegativePart);
        }
        sum += p;
    }
    if sum != n as i64 {
        return Err(Error::SumMismatch);
    }
    let mut acc = Int::one();
    let mut remaining = n;
    for &p in parts {
        acc *= binomial(remaining, p as u64);
        remaining -= p as u64;
    }
    Ok(acc)
}

/// Coefficient `j` of row `n` of the anticommutative (Pauli) triangle, by
/// the closed threefold rule: zero when `n` is even and `j` odd, otherwise
/// an ordinary binomial at the halved indices. The rule is derived, not
/// tabulated: [`verify_pauli_binomial_rule`] checks it against the engine
/// and runs in the test suite and the `verify` command.
pub fn pauli_binomial(n: u64, j: u64) -> Result<Int> {
    if j > n {
        return Err(Error::OutOfRange("pauli_binomial requires j <= n"));
    }
    if n.is_multiple_of(2) && j % 2 == 1 {
        return Ok(Int::zero());
    }
    Ok(binomial(n / 2, j / 2))
}

/// Compares [`pauli_binomial`] with the engine expansion of `(g1+g2)^n` for
/// every `0 <= j <= n <= max_n`, returning the first mismatch if any.
pub fn verify_pauli_binomial_rule(max_n: u64) -> core::result::Result<(), (u64, u64)> {
    let x =
        GradedElement::generator_sum(2, CommutationMode::AntiCommutative).expect("dim 2 is valid");
    let mut row = GradedElement::one(2, CommutationMode::AntiCommutative).expect("dim 2");
    for n in 0..=max_n {
        if n > 0 {
            row = row.multiply(&x).expect("compatible");
        }
        for j in 0..=n {
            let idx = MultiIndex::from(&[(n - j) as i32, j as i32][..]);
            let engine = row.coefficient(&idx);
            let rule = Rational::from_integer(pauli_binomial(n, j).expect("j <= n"));
            if engine != rule {
                return Err((n, j));
            }
        }
    }
    Ok(())
}

/// The Gamma-extended multinomial: the `h -> 0` limit of
/// `Gamma(n+1+h) / (Gamma(m_1+1+h) * prod Gamma(m_i+1))`
/// where `h` is attached to the upper argument and to the unique negative
/// lower argument. All lower arguments are explicit and must sum to `n`.
///
/// At negative integers `n` and `m` the Gamma ratio has the finite limit
/// `(-1)^(m-n) * (-m-1)! / (-n-1)!`, which extends the multinomial to the
/// lattice points of the negative hyperpyramids; with a negative lower
/// argument but `n >= 0` the unpaired pole in the denominator sends the
/// value to zero. More than one negative lower argument leaves a pole and
/// is an error.
pub fn gamma_multinomial(n: i64, parts: &[i64]) -> Result<Rational> {
    let sum: i64 = parts.iter().sum();
    if sum != n {
        return Err(Error::SumMismatch);
    }
    let negatives: Vec<i64> = parts.iter().copied().filter(|&p| p < 0).collect();
    match negatives.len() {
        0 => Ok(Rational::from_integer(multinomial(n as u64, parts)?)),
        1 => {
            if n >= 0 {
                // Gamma(n+1+h) stays finite while Gamma(m+1+h) blows up.
                return Ok(Rational::zero());
            }
            let m = negatives[0];
            let mut denominator = factorial((-n - 1) as u64);
            for &p in parts.iter().filter(|&&p| p >= 0) {
                denominator *= factorial(p as u64);
            }
            let numerator = factorial((-m - 1) as u64);
            let mut value = Rational::new(numerator, denominator);
            if (m - n).rem_euclid(2) == 1 {
                value = -value;
            }
            Ok(value)
        }
        _ => Err(Error::PoleRemains),
    }
}

/// Closed form for a commutative negative-layer coefficient: with `s` the
/// total exponent over the non-dominant generators `rest`, the coefficient
/// at dominant exponent `n - s` is
/// `(-1)^s * multinomial(|n|-1+s; rest..., |n|-1)`.
pub fn negative_multinomial(n: i64, rest: &[i64]) -> Result<Rational> {
    if n >= 0 {
        return Err(Error::OutOfRange("negative_multinomial requires n < 0"));
    }
    let s: i64 = rest.iter().sum();
    let mut parts: Vec<i64> = rest.to_vec();
    parts.push(-n - 1);
    let magnitude = multinomial((-n - 1 + s) as u64, &parts)?;
    let value = Rational::from_integer(magnitude);
    Ok(if s % 2 == 1 { -value } else { value })
}

/// Description of one layer: ambient dimension, total exponent, mode, and
/// (for negative `n`) the dominant generator and correction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerSpec {
    pub dim: usize,
    pub n: i64,
    pub mode: CommutationMode,
    /// 0-based dominant generator position; required iff `n < 0`.
    pub dominant: Option<usize>,
    /// Retained correction orders past the leading term; required iff `n < 0`.
    pub truncation: Option<u32>,
}

impl LayerSpec {
    pub fn positive(dim: usize, n: u32, mode: CommutationMode) -> Self {
        LayerSpec {
            dim,
            n: n as i64,
            mode,
            dominant: None,
            truncation: None,
        }
    }

    pub fn negative(
        dim: usize,
        n: i64,
        mode: CommutationMode,
        dominant: usize,
        truncation: u32,
    ) -> Self {
        LayerSpec {
            dim,
            n,
            mode,
            dominant: Some(dominant),
            truncation: Some(truncation),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim < 2 || self.dim > MAX_DIM {
            return Err(Error::InvalidDimension(self.dim));
        }
        if self.n < 0 {
            let dominant = self.dominant.ok_or(Error::DominantAbsent)?;
            if dominant >= self.dim {
                return Err(Error::InvalidPosition(dominant));
            }
            if self.truncation.is_none() {
                return Err(Error::OutOfRange("negative layers require a truncation"));
            }
        }
        Ok(())
    }
}

/// A queryable layer of hyperpyramid coefficients at fixed total exponent.
/// Zero coefficients inside the support hull are not stored; the renderer
/// reinstates them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    spec: LayerSpec,
    entries: BTreeMap<MultiIndex, Rational>,
}

impl CoefficientTable {
    pub fn spec(&self) -> &LayerSpec {
        &self.spec
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coefficient at the given exponents, zero when absent.
    pub fn coefficient(&self, exponents: &[i32]) -> Rational {
        self.entries
            .get(&MultiIndex::from(exponents))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Builds a positive layer (`spec.n >= 0`). Commutative layers are the
/// multinomial coefficients; anticommutative layers are the term map of the
/// engine power.
pub fn layer(spec: &LayerSpec) -> Result<CoefficientTable> {
    spec.validate()?;
    if spec.n < 0 {
        return Err(Error::OutOfRange("layer requires n >= 0"));
    }
    let n = spec.n as u32;
    let entries = match spec.mode {
        CommutationMode::Commutative => {
            let mut entries = BTreeMap::new();
            for comp in compositions(n, spec.dim) {
                let parts: Vec<i64> = comp.iter().map(|&e| e as i64).collect();
                let value = multinomial(n as u64, &parts)?;
                entries.insert(MultiIndex::from(&comp[..]), Rational::from_integer(value));
            }
            entries
        }
        CommutationMode::AntiCommutative => {
            let x = GradedElement::generator_sum(spec.dim, spec.mode)?;
            x.power(n)?
                .terms()
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect()
        }
    };
    Ok(CoefficientTable {
        spec: spec.clone(),
        entries,
    })
}

/// Builds a negative layer (`spec.n < 0`) as a truncated Laurent term map.
pub fn negative_layer(spec: &LayerSpec) -> Result<CoefficientTable> {
    spec.validate()?;
    if spec.n >= 0 {
        return Err(Error::OutOfRange("negative_layer requires n < 0"));
    }
    let dominant = spec.dominant.expect("validated");
    let truncation = spec.truncation.expect("validated");
    let x = GradedElement::generator_sum(spec.dim, spec.mode)?;
    let series = x.power_series(spec.n, dominant, truncation)?;
    Ok(CoefficientTable {
        spec: spec.clone(),
        entries: series
            .terms()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect(),
    })
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative
/// integers, in lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<i32>> {
    fn rec(total: u32, parts: usize, prefix: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if parts == 1 {
            prefix.push(total as i32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for head in 0..=total {
            prefix.push(head as i32);
            rec(total - head, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}
