//! Canonical serialization of elements and coefficient tables: JSON with
//! terms sorted lexicographically by exponent list, and the per-entry CSV
//! export. Parsers for both formats support the round-trip tests.

use pauli_pascal::multi_index::CommutationMode;
use pauli_pascal::pyramid::LayerSpec;
use pauli_pascal::{CoefficientTable, GradedElement, Rational};
use serde_json::{json, Value};

pub fn mode_name(mode: CommutationMode) -> &'static str {
    match mode {
        CommutationMode::Commutative => "commutative",
        CommutationMode::AntiCommutative => "anticommutative",
    }
}

pub fn mode_from_name(name: &str) -> Option<CommutationMode> {
    match name {
        "commutative" => Some(CommutationMode::Commutative),
        "anticommutative" => Some(CommutationMode::AntiCommutative),
        _ => None,
    }
}

/// Exact rational as text: `num/den`, the denominator omitted when 1.
pub fn format_rational(value: &Rational) -> String {
    if value.denom() == &1.into() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = num.trim().parse().ok()?;
    let den: pauli_pascal::Int = den.trim().parse().ok()?;
    if den == 0.into() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn term_value(exponents: &[i32], value: &Rational) -> Value {
    json!([
        exponents,
        value.numer().to_string(),
        value.denom().to_string(),
    ])
}

/// Canonical JSON of a graded element: `{dim, mode, terms}` with terms
/// sorted lexicographically by exponent list (the element's native order).
pub fn element_to_json(element: &GradedElement) -> Value {
    let terms: Vec<Value> = element
        .terms()
        .map(|(idx, value)| term_value(idx.exponents(), value))
        .collect();
    json!({
        "dim": element.dim(),
        "mode": mode_name(element.mode()),
        "terms": terms,
    })
}

pub fn spec_to_json(spec: &LayerSpec) -> Value {
    json!({
        "dim": spec.dim,
        "n": spec.n,
        "mode": mode_name(spec.mode),
        // dominant is 1-based in every user-facing surface
        "dominant": spec.dominant.map(|d| d + 1),
        "truncation": spec.truncation,
    })
}

/// Canonical JSON of a coefficient table: `{spec, entries}`.
pub fn table_to_json(table: &CoefficientTable) -> Value {
    let entries: Vec<Value> = table
        .entries()
        .map(|(idx, value)| term_value(idx.exponents(), value))
        .collect();
    json!({
        "spec": spec_to_json(table.spec()),
        "entries": entries,
    })
}

/// Per-entry CSV export: header `e1..ed,num,den`, one sorted row per entry.
pub fn table_to_csv(table: &CoefficientTable) -> String {
    csv_from_entries(
        table.spec().dim,
        table
            .entries()
            .map(|(idx, value)| (idx.exponents().to_vec(), value.clone())),
    )
}

/// The same CSV from raw rows, so a parsed table can be re-rendered
/// byte-identically.
pub fn csv_from_entries<I>(dim: usize, entries: I) -> String
where
    I: IntoIterator<Item = (Vec<i32>, Rational)>,
{
    let mut out = String::new();
    for i in 1..=dim {
        out.push_str(&format!("e{i},"));
    }
    out.push_str("num,den\n");
    for (exponents, value) in entries {
        for e in exponents {
            out.push_str(&format!("{e},"));
        }
        out.push_str(&format!("{},{}\n", value.numer(), value.denom()));
    }
    out
}

/// Parses the per-entry CSV back into (exponents, value) rows.
pub fn parse_table_csv(text: &str) -> Option<Vec<(Vec<i32>, Rational)>> {
    let mut lines = text.lines();
    let header = lines.next()?;
    let columns = header.split(',').count();
    let dim = columns.checked_sub(2)?;
    let mut entries = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != columns {
            return None;
        }
        let exponents: Option<Vec<i32>> = fields[..dim].iter().map(|f| f.parse().ok()).collect();
        let num: pauli_pascal::Int = fields[dim].parse().ok()?;
        let den: pauli_pascal::Int = fields[dim + 1].parse().ok()?;
        entries.push((exponents?, Rational::new(num, den)));
    }
    Some(entries)
}

/// Parses the canonical table JSON back into (exponents, value) rows.
pub fn parse_table_json(value: &Value) -> Option<Vec<(Vec<i32>, Rational)>> {
    let entries = value.get("entries")?.as_array()?;
    let mut out = Vec::new();
    for entry in entries {
        let triple = entry.as_array()?;
        let exponents: Option<Vec<i32>> = triple[0]
            .as_array()?
            .iter()
            .map(|e| e.as_i64().map(|v| v as i32))
            .collect();
        let num: pauli_pascal::Int = triple[1].as_str()?.parse().ok()?;
        let den: pauli_pascal::Int = triple[2].as_str()?.parse().ok()?;
        out.push((exponents?, Rational::new(num, den)));
    }
    Some(out)
}
