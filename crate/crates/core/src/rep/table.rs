//! Character tables as JSON and as aligned text.

use serde::Serialize;

use crate::corpus::format::{serialize_elem, SerElem};
use crate::rep::irr::IrrData;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub algebra: String,
    pub degrees: Vec<u32>,
    /// One row per irreducible character, one column per basis element.
    pub rows: Vec<Vec<SerElem>>,
}

impl CharacterTable {
    pub fn new(algebra: &str, irr: &IrrData) -> Self {
        CharacterTable {
            algebra: algebra.to_string(),
            degrees: irr.degrees(),
            rows: irr
                .characters()
                .map(|c| c.values.iter().map(serialize_elem).collect())
                .collect(),
        }
    }
}

/// Rows `chi_0, chi_1, ...`, columns `b0, b1, ...`, entries in `z` notation.
pub fn character_table_text(label: &str, irr: &IrrData) -> String {
    let n = irr.blocks.first().map_or(0, |b| b.character.values.len());
    let mut cells: Vec<Vec<String>> = Vec::with_capacity(irr.len() + 1);
    let mut header = vec![String::new(), "deg".to_string()];
    header.extend((0..n).map(|i| format!("b{i}")));
    cells.push(header);
    for (i, b) in irr.blocks.iter().enumerate() {
        let mut row = vec![format!("{label}{i}"), b.degree.to_string()];
        row.extend(b.character.values.iter().map(|v| v.to_string()));
        cells.push(row);
    }
    let widths: Vec<usize> = (0..n + 2)
        .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
