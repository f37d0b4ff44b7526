//! Deterministic table rendering: CSV/TSV/JSON with preformatted cells, and
//! the fixed significant-digit number formatter ('.' decimal separator, no
//! grouping).

use std::io::Write;

pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<const N: usize>(headers: [&str; N]) -> Self {
        Table {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn from_headers(headers: Vec<String>) -> Self {
        Table {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn row<const N: usize>(&mut self, cells: [String; N]) {
        debug_assert_eq!(N, self.headers.len());
        self.rows.push(cells.to_vec());
    }

    pub fn row_vec(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    pub fn write_delimited(&self, out: &mut dyn Write, sep: &str) -> std::io::Result<()> {
        writeln!(out, "{}", self.headers.join(sep))?;
        for row in &self.rows {
            writeln!(out, "{}", row.join(sep))?;
        }
        Ok(())
    }

    /// Array of objects keyed by header; all values are strings so exact
    /// big-integer counts survive any JSON consumer.
    pub fn write_json(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let objects: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: serde_json::Map<String, serde_json::Value> = self
                    .headers
                    .iter()
                    .zip(row)
                    .map(|(h, v)| (h.clone(), serde_json::Value::String(v.clone())))
                    .collect();
                serde_json::Value::Object(map)
            })
            .collect();
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&serde_json::Value::Array(objects)).expect("json")
        )
    }
}

/// `x` at `digits` significant digits: plain decimal in a comfortable
/// exponent range, normalized scientific notation outside it.
pub fn format_sig(x: f64, digits: u32) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let d = digits.max(1) as usize;
    let sci = format!("{:.*e}", d - 1, x);
    let (_, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent value");
    if (-4..d as i32).contains(&exp) {
        let decimals = (d as i32 - 1 - exp).max(0) as usize;
        format!("{:.*}", decimals, x)
    } else {
        sci
    }
}

/// Truncate a stored decimal-constant string to `digits` significant digits
/// (digits beyond binary64 are truncated, not re-rounded).
pub fn truncate_decimal(decimal: &str, digits: u32) -> String {
    if digits <= 17 {
        let v: f64 = decimal.parse().expect("stored constant parses");
        return format_sig(v, digits);
    }
    let mut significant = 0u32;
    let mut end = decimal.len();
    for (i, ch) in decimal.char_indices() {
        if ch.is_ascii_digit() && !(significant == 0 && ch == '0') {
            significant += 1;
        }
        if significant == digits {
            end = i + 1;
            break;
        }
    }
    decimal[..end].to_string()
}
