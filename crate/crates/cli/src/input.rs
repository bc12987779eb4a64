//! Polynomial and root files: one vector per line, comma-separated `re,im`
//! pairs ascending in power. Blank lines and lines starting with `#` are
//! skipped.

use std::io::Read;

use num_complex::Complex64;

/// One parsed line and its 1-based line number.
pub struct Row {
    pub line: usize,
    pub values: Vec<Complex64>,
}

pub fn parse_pairs(text: &str) -> Result<Vec<Row>, String> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        if fields.len() % 2 != 0 {
            return Err(format!("line {line}: odd number of fields ({}), expected re,im pairs", fields.len()));
        }
        let nums = fields
            .iter()
            .map(|f| {
                let x: f64 = f.parse().map_err(|_| format!("line {line}: not a number: {f:?}"))?;
                if x.is_finite() {
                    Ok(x)
                } else {
                    Err(format!("line {line}: non-finite value {f:?}"))
                }
            })
            .collect::<Result<Vec<f64>, String>>()?;
        let values = nums.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect();
        rows.push(Row { line, values });
    }
    Ok(rows)
}

/// Read a path, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

/// Comma-separated list of numbers.
pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad list entry {t:?}")))
        .collect()
}
