//! Plain-text matrices: the first line holds `N`, then `N` rows of `N`
//! whitespace-separated reals. Blank lines are ignored.

use std::path::Path;

use coneproj::SymMatrix;

use crate::numfmt::fmt_f64;

pub fn parse_matrix(text: &str) -> Result<SymMatrix, String> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or("empty matrix file")?;
    let n: usize = header
        .parse()
        .map_err(|_| format!("expected the dimension on the first line, found `{header}`"))?;
    if n == 0 {
        return Err("dimension must be at least 1".into());
    }
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| format!("expected {n} rows, found {i}"))?;
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<f64>().map_err(|_| format!("invalid number `{t}` in row {}", i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(format!("row {} has {} entries, expected {n}", i + 1, row.len()));
        }
        data.extend(row);
    }
    if lines.next().is_some() {
        return Err(format!("more than {n} rows"));
    }
    SymMatrix::from_row_major(n, &data).map_err(|e| e.to_string())
}

pub fn read_matrix_file(path: &Path) -> Result<SymMatrix, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_matrix(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn write_matrix(m: &SymMatrix) -> String {
    let n = m.dim();
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = m.row(i).iter().map(|&v| fmt_f64(v)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_writes() {
        let m = parse_matrix("2\n1 -2\n-2 1\n").unwrap();
        assert_eq!(m.get(0, 1), -2.0);
        assert_eq!(write_matrix(&m), "2\n1 -2\n-2 1\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("2\n1 2\n").is_err());
        assert!(parse_matrix("2\n1 2\n3 4\n").is_err());
        assert!(parse_matrix("2\n1 x\n1 1\n").is_err());
        assert!(parse_matrix("1\n1\n2\n").is_err());
    }
}
