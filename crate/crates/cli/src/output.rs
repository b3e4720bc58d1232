//! Result records and their table / CSV rendering.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

/// One named output quantity. The derived order is the column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Column {
    /// Warehouse level in a one-echelon model (1-based).
    Level(usize),
    /// Echelon total of a chain (1-based).
    Echelon(usize),
    /// Warehouse `i` of echelon `e` in a full network.
    Warehouse(usize, usize),
    Total,
    Aggregate,
    AggregateGap,
    Iterations,
    Residual,
}

impl Column {
    pub fn label(&self) -> String {
        match self {
            Column::Level(i) => format!("y{i}"),
            Column::Echelon(e) => format!("x{e}"),
            Column::Warehouse(e, i) => format!("y{e}_{i}"),
            Column::Total => "total".into(),
            Column::Aggregate => "y_a".into(),
            Column::AggregateGap => "y_a_gap".into(),
            Column::Iterations => "iterations".into(),
            Column::Residual => "residual".into(),
        }
    }

    /// Full-precision cell; residuals use exponent notation.
    pub fn exact(&self, v: f64) -> String {
        match self {
            Column::Residual => format!("{v:e}"),
            _ => full(v),
        }
    }

    pub fn rounded(&self, v: f64, digits: usize) -> String {
        match self {
            Column::Iterations => format!("{}", v as u64),
            Column::Residual => format!("{v:.1e}"),
            _ => fixed(v, digits),
        }
    }
}

pub type Record = BTreeMap<Column, f64>;

/// Shortest representation that parses back to the same `f64`.
pub fn full(v: f64) -> String {
    format!("{v}")
}

pub fn fixed(v: f64, digits: usize) -> String {
    let s = format!("{v:.digits$}");
    // Avoid printing "-0.000".
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_owned()
    } else {
        s
    }
}

pub fn csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

/// Left-aligned first column, right-aligned others.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = vec![0; cols];
    for r in std::iter::once(header).chain(rows.iter().map(|r| r.as_slice())) {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in std::iter::once(header).chain(rows.iter().map(|r| r.as_slice())) {
        let mut line = String::new();
        for (k, cell) in r.iter().enumerate() {
            if k > 0 {
                line.push_str("  ");
            }
            if k == 0 {
                let _ = write!(line, "{cell:<w$}", w = width[k]);
            } else {
                let _ = write!(line, "{cell:>w$}", w = width[k]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders one row per record after the already formatted `prefix` columns.
/// The record columns are the union over all records; missing cells are
/// left empty.
pub fn render_wide(
    prefix: &[String],
    prefix_rows: &[Vec<String>],
    records: &[Record],
    as_csv: bool,
    digits: usize,
) -> String {
    let columns: BTreeSet<Column> = records.iter().flat_map(|r| r.keys().copied()).collect();
    let mut header = prefix.to_vec();
    header.extend(columns.iter().map(Column::label));
    let rows: Vec<Vec<String>> = prefix_rows
        .iter()
        .zip(records)
        .map(|(p, r)| {
            let mut row = p.clone();
            row.extend(columns.iter().map(|col| match r.get(col) {
                None => String::new(),
                Some(v) if as_csv => col.exact(*v),
                Some(v) => col.rounded(*v, digits),
            }));
            row
        })
        .collect();
    if as_csv {
        csv(&header, &rows)
    } else {
        table(&header, &rows)
    }
}
