//! Report rendering: aligned text tables and CSV.

/// Renders rows as aligned columns. The first row is the header.
pub fn aligned_table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Plain comma-joined CSV; all cell values here are identifiers or numbers,
/// so no quoting is needed.
pub fn csv_table(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn fmt_score(v: f64) -> String {
    format!("{v:.4}")
}

pub fn fmt_mean_count(v: f64) -> String {
    format!("{v:.1}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let rows = vec![
            vec!["id".to_string(), "value".to_string()],
            vec!["a".to_string(), "1".to_string()],
            vec!["longer".to_string(), "2".to_string()],
        ];
        let table = aligned_table(&rows);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[0], "id      value");
        assert_eq!(lines[2], "longer  2");
    }

    #[test]
    fn csv_joins_cells() {
        let rows = vec![vec!["a".to_string(), "b".to_string()]];
        assert_eq!(csv_table(&rows), "a,b\n");
    }
}
