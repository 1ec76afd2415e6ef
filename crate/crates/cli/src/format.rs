//! C-style `%.15g` output.

use fraclab::ComplexValue;

/// Formats like printf's `%.15g`.
pub fn g15(v: f64) -> String {
    const P: i32 = 15;
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.*e}", (P - 1) as usize, v);
    let (mant, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-4..P).contains(&exp) {
        let mant = trim(mant);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mant}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (P - 1 - exp).max(0) as usize;
        trim(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `a+bi` / `a-bi` with both parts in `%.15g`.
pub fn complex(z: ComplexValue) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", g15(z.re), g15(-z.im))
    } else {
        format!("{}+{}i", g15(z.re), g15(z.im.abs()))
    }
}
