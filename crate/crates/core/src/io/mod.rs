//! File and wire formats shared by the CLI and the HTTP service.
//!
//! All numbers are written with at most 12 significant digits, so writing a
//! parsed document again yields identical bytes.

mod csv;
mod json;

pub use self::csv::{
    parse_decision_csv, parse_judgment, parse_pairwise_csv, parse_weights_csv, read_decision_csv,
    serialize_decision_csv,
};
pub use self::json::{
    parse_result_json, render_json, serialize_result_json, AhpJson, JsonNumber, ResultJson, SensitivityJson,
};

/// Rounds to 12 significant digits.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Shortest decimal text of `x` rounded to 12 significant digits.
pub fn format_number(x: f64) -> String {
    let r = round_sig12(x);
    if r == r.trunc() && r.abs() < 1e15 {
        format!("{}", r as i64)
    } else {
        format!("{r}")
    }
}
