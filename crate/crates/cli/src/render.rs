//! Text, CSV, and SVG rendering of triangle rows and pyramid layers.
//!
//! Text layout centers each row with single-space gutters and prints the
//! zeros inside the support hull explicitly, the way the anticommutative
//! rows display their threefold pattern. SVG output is one text node per
//! coefficient, rows running downward (the positive coordinate direction).

use pauli_pascal::{CoefficientTable, Rational};

use crate::serial::format_rational;

/// The coefficients of one triangle row in display order. Positive rows run
/// over the second generator's exponent; negative rows run over correction
/// order, whichever generator is dominant.
pub fn triangle_row_values(table: &CoefficientTable) -> Vec<Rational> {
    let spec = table.spec();
    let n = spec.n;
    if n >= 0 {
        (0..=n as i32)
            .map(|j| table.coefficient(&[n as i32 - j, j]))
            .collect()
    } else {
        let t = spec.truncation.expect("negative layers carry a truncation") as i32;
        let dominant = spec.dominant.expect("negative layers carry a dominant");
        (0..=t)
            .map(|j| match dominant {
                0 => table.coefficient(&[n as i32 - j, j]),
                _ => table.coefficient(&[j, n as i32 - j]),
            })
            .collect()
    }
}

/// A pyramid layer as a 2-D grid over the two non-dominant exponents.
/// Row index is the first free exponent, column index the second; the hull
/// is `row + col <= n` for positive layers and `row + col <= truncation`
/// for negative ones.
pub fn pyramid_grid_values(table: &CoefficientTable) -> Vec<Vec<Rational>> {
    let spec = table.spec();
    let n = spec.n;
    let (size, dominant) = if n >= 0 {
        (n as i32, 3) // no dominant: rows over e2, columns over e3
    } else {
        (
            spec.truncation.expect("negative layers carry a truncation") as i32,
            spec.dominant.expect("negative layers carry a dominant") as i32,
        )
    };
    let mut grid = Vec::new();
    for row in 0..=size {
        let mut cells = Vec::new();
        for col in 0..=(size - row) {
            let exps = match dominant {
                0 => [n as i32 - row - col, row, col],
                1 => [row, n as i32 - row - col, col],
                2 => [row, col, n as i32 - row - col],
                _ => [n as i32 - row - col, row, col],
            };
            cells.push(table.coefficient(&exps));
        }
        grid.push(cells);
    }
    grid
}

/// Centers rows of cells with single-space gutters; trailing spaces are
/// trimmed so output is byte-stable.
pub fn center_rows(rows: &[Vec<String>]) -> String {
    let rendered: Vec<String> = rows.iter().map(|cells| cells.join(" ")).collect();
    let width = rendered
        .iter()
        .map(|r| r.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for row in rendered {
        let pad = (width - row.chars().count()) / 2;
        for _ in 0..pad {
            out.push(' ');
        }
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn cells_of(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn escape_xml(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// SVG with one text node per coefficient. Each row of cells is centered;
/// rows advance downward.
pub fn rows_to_svg(rows: &[Vec<String>]) -> String {
    let cell_chars = rows
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(1);
    let max_cols = rows.iter().map(Vec::len).max().unwrap_or(1);
    let cell_w = (cell_chars as u32 + 1) * 10;
    let cell_h = 24u32;
    let margin = 12u32;
    let width = max_cols as u32 * cell_w + 2 * margin;
    let height = rows.len() as u32 * cell_h + 2 * margin;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    );
    for (i, cells) in rows.iter().enumerate() {
        let y = margin + (i as u32) * cell_h + cell_h / 2;
        let row_width = cells.len() as u32 * cell_w;
        let start = margin + (width - 2 * margin - row_width) / 2 + cell_w / 2;
        for (j, cell) in cells.iter().enumerate() {
            let x = start + j as u32 * cell_w;
            out.push_str(&format!(
                "  <text x=\"{x}\" y=\"{y}\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">{}</text>\n",
                escape_xml(cell)
            ));
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Minimal well-formedness check used by the tests: tags balance and every
/// `<` has a matching `>`.
pub fn xml_is_well_formed(text: &str) -> bool {
    let mut stack: Vec<String> = Vec::new();
    let mut rest = text;
    while let Some(open) = rest.find('<') {
        let Some(close) = rest[open..].find('>') else {
            return false;
        };
        let tag = &rest[open + 1..open + close];
        rest = &rest[open + close + 1..];
        if let Some(name) = tag.strip_prefix('/') {
            match stack.pop() {
                Some(top) if top == name => {}
                _ => return false,
            }
        } else if !tag.ends_with('/') && !tag.starts_with('?') && !tag.starts_with('!') {
            let name: String = tag.split_whitespace().next().unwrap_or("").to_string();
            stack.push(name);
        }
    }
    stack.is_empty() && !rest.contains('>')
}
