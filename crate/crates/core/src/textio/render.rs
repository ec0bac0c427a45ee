use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::temap::TeMap;

use super::{expr::render_term, names_or_default, VariableNames};

const GRAY2: [u64; 4] = [0b00, 0b01, 0b11, 0b10];

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Overlap table with `x` on the diagonal, then the totals and the tail
/// quotients of every implicant.
pub fn render_te_map(map: &TeMap, names: Option<&VariableNames>) -> Result<String> {
    let names = names_or_default(names, map.width())?;
    let labels: Vec<String> = map
        .implicants()
        .iter()
        .map(|c| render_term(c, &names))
        .collect();

    let mut rows = vec![];
    rows.push(
        std::iter::once("x".to_string())
            .chain(labels.iter().cloned())
            .collect::<Vec<_>>(),
    );
    for (i, label) in labels.iter().enumerate() {
        let mut row = vec![label.clone()];
        for j in 0..map.len() {
            row.push(match map.entry(i, j) {
                None => "x".to_string(),
                Some(e) => e.count.to_string(),
            });
        }
        rows.push(row);
    }
    let mut totals = vec!["Total Overlaps".to_string()];
    totals.extend(map.totals().iter().map(u64::to_string));
    rows.push(totals);
    let mut quotients = vec!["Tail Quotient".to_string()];
    quotients.extend(map.quotients().iter().map(i64::to_string));
    rows.push(quotients);
    Ok(table(&rows))
}

/// Karnaugh map with Gray-coded axes: `AB` across and `C`/`CD` down for
/// three and four variables, `B` across and `A` down for two.
pub fn render_kmap(cover: &Cover, names: Option<&VariableNames>) -> Result<String> {
    let width = cover.width();
    if !(2..=4).contains(&width) {
        return Err(Error::KmapWidth(width));
    }
    let names = names_or_default(names, width)?;
    let (col_vars, row_vars) = match width {
        2 => (vec![1], vec![0]),
        3 => (vec![0, 1], vec![2]),
        _ => (vec![0, 1], vec![2, 3]),
    };
    let axis = |vars: &[usize]| -> (String, Vec<u64>) {
        let label = vars
            .iter()
            .map(|&v| names.get(v))
            .collect::<Vec<_>>()
            .join("");
        let codes = if vars.len() == 1 {
            vec![0, 1]
        } else {
            GRAY2.to_vec()
        };
        (label, codes)
    };
    let (col_label, col_codes) = axis(&col_vars);
    let (row_label, row_codes) = axis(&row_vars);
    let bits = |code: u64, len: usize| format!("{code:0len$b}");

    let mut rows = vec![];
    let mut head = vec![format!("{row_label}\\{col_label}")];
    head.extend(col_codes.iter().map(|&c| bits(c, col_vars.len())));
    rows.push(head);
    for &r in &row_codes {
        let mut row = vec![bits(r, row_vars.len())];
        for &c in &col_codes {
            let minterm = if width == 2 {
                (r << 1) | c
            } else {
                (c << row_vars.len()) | r
            };
            row.push(if cover.covers(minterm) { "1" } else { "0" }.to_string());
        }
        rows.push(row);
    }
    Ok(table(&rows))
}
