//! Parser for generating-function spec strings: terms of the form
//! `x^s/(1-r*x)^m` joined by `+`, with `r` a (possibly signed) rational.
//! `x`, `1`, a missing denominator, and a missing `^m` are accepted
//! shorthands for the obvious special cases.

use pauli_pascal::divergent::{Poly, RationalGF};
use pauli_pascal::Rational;

use crate::serial::parse_rational;

/// Splits on `+` at parenthesis depth zero.
fn split_terms(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn parse_shift(text: &str) -> Option<usize> {
    let text = text.trim();
    match text {
        "1" => Some(0),
        "x" => Some(1),
        _ => {
            let s = text.strip_prefix("x^")?;
            s.trim().parse().ok()
        }
    }
}

/// Parses `(1-r*x)^m`, returning `(r, m)`. A `+` inside flips the sign of
/// the coefficient that follows, since the family is written in `1 - r x`
/// form.
fn parse_denominator(text: &str) -> Option<(Rational, u32)> {
    let text = text.trim();
    let inner_end = text.find(')')?;
    let inner = text.strip_prefix('(')?.get(..inner_end - 1)?;
    let power = match text[inner_end + 1..].trim() {
        "" => 1u32,
        rest => rest.strip_prefix('^')?.trim().parse().ok()?,
    };
    let inner = inner.trim();
    let after_one = inner.strip_prefix('1')?.trim_start();
    let (negate, tail) = match after_one.chars().next()? {
        '-' => (false, &after_one[1..]),
        '+' => (true, &after_one[1..]),
        _ => return None,
    };
    let tail = tail.trim();
    let coeff_text = tail.strip_suffix('x')?.trim_end();
    let coeff_text = coeff_text.strip_suffix('*').unwrap_or(coeff_text).trim();
    let r = if coeff_text.is_empty() {
        Rational::from_integer(1.into())
    } else {
        parse_rational(coeff_text)?
    };
    Some((if negate { -r } else { r }, power))
}

fn parse_term(text: &str) -> Option<RationalGF> {
    let text = text.trim();
    let mut depth = 0usize;
    let mut slash = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '/' if depth == 0 => {
                slash = Some(i);
                break;
            }
            _ => {}
        }
    }
    match slash {
        None => {
            let shift = parse_shift(text)?;
            RationalGF::new(
                Poly::monomial(Rational::from_integer(1.into()), shift),
                Poly::one(),
            )
            .ok()
        }
        Some(i) => {
            let shift = parse_shift(&text[..i])?;
            let (r, power) = parse_denominator(&text[i + 1..])?;
            Some(RationalGF::geometric_family(shift, &r, power))
        }
    }
}

/// Parses a full GF spec: `+`-joined terms, summed as rational functions.
pub fn parse_gf_spec(text: &str) -> Option<RationalGF> {
    let mut total: Option<RationalGF> = None;
    for part in split_terms(text) {
        let term = parse_term(part)?;
        total = Some(match total {
            None => term,
            Some(acc) => acc.add(&term).ok()?,
        });
    }
    total
}
