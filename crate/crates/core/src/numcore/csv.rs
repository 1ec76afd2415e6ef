use super::DenseMatrix;
use crate::error::{FracError, Result};
use std::io::Write;

/// Formats a value with 17 significant digits, the round-trip precision of
/// an `f64`.
pub fn fmt17(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// Writes a header line and rows of already formatted fields, LF endings.
pub fn write_csv<W: Write>(out: &mut W, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    for r in rows {
        if r.len() != header.len() {
            return Err(FracError::Shape(format!(
                "row with {} fields under a {}-column header",
                r.len(),
                header.len()
            )));
        }
    }
    let mut buf = String::new();
    buf.push_str(&header.join(","));
    buf.push('\n');
    for r in rows {
        buf.push_str(&r.join(","));
        buf.push('\n');
    }
    out.write_all(buf.as_bytes())?;
    Ok(())
}

/// Writes a matrix with header `c0,c1,...`.
pub fn write_matrix_csv<W: Write>(out: &mut W, m: &DenseMatrix) -> Result<()> {
    let header: Vec<String> = (0..m.cols()).map(|j| format!("c{j}")).collect();
    let href: Vec<&str> = header.iter().map(String::as_str).collect();
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|&v| fmt17(v)).collect()).collect();
    write_csv(out, &href, &rows)
}
