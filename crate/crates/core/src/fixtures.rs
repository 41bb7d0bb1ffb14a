//! Bundled project-selection case study: five optical-fibre expansion projects
//! scored on net present value, rate of return, payback period and project risk.
//!
//! The printed tables below carry two-decimal rounding between stages. Two
//! quirks in the printed source are kept as-is here:
//! - the optimal row's PB share is printed as 0.02, while the weighted value
//!   0.044 = 0.22 x 0.20 shows it is 0.20;
//! - the printed S column equals the row sum divided by 4. Utility degrees and
//!   ranks do not change when S is scaled, and this crate always reports S as
//!   the plain row sum.

use crate::io::parse_decision_csv;
use crate::model::{DecisionMatrix, WeightVector};

/// Decision matrix and weights in `DecisionCsv` form.
pub const CASE_STUDY_CSV: &str = include_str!("../data/case_study.csv");

/// Pairwise judgments consistent with w = (4/7, 2/7, 1/7).
pub const CONSISTENT_3_CSV: &str = include_str!("../data/consistent3.csv");

/// Mildly inconsistent 3x3 judgments `[[1,3,5],[1/3,1,3],[1/5,1/3,1]]`.
pub const JUDGMENTS_3_CSV: &str = include_str!("../data/judgments3.csv");

/// Strongly inconsistent 3x3 judgments (CR well above 0.10).
pub const INCONSISTENT_3_CSV: &str = include_str!("../data/inconsistent3.csv");

pub const CASE_STUDY_ALTERNATIVES: [&str; 5] = ["Project 1", "Project 2", "Project 3", "Project 4", "Project 5"];

pub const CASE_STUDY_WEIGHTS: [f64; 4] = [0.29, 0.34, 0.22, 0.15];

/// Ranking as printed for the table-reproducing pipeline.
pub const CASE_STUDY_RANKING: [&str; 5] = ["Project 2", "Project 3", "Project 5", "Project 1", "Project 4"];

/// First-pass column shares as printed (rows = projects).
pub const PRINTED_FIRST_PASS: [[f64; 4]; 5] = [
    [0.18, 0.18, 0.15, 0.24],
    [0.24, 0.29, 0.18, 0.31],
    [0.16, 0.06, 0.20, 0.03],
    [0.20, 0.18, 0.20, 0.24],
    [0.22, 0.29, 0.26, 0.17],
];

/// Optimal row A₀ appended to the first-pass shares, as printed.
pub const PRINTED_OPTIMAL_ROW: [f64; 4] = [1.00, 1.00, 0.15, 0.03];

/// Cost columns after the reciprocal step (rows = A₀, projects), as printed.
pub const PRINTED_MAXIMIZED: [[f64; 4]; 6] = [
    [1.00, 1.00, 6.67, 33.33],
    [0.18, 0.18, 6.67, 4.17],
    [0.24, 0.29, 5.56, 3.23],
    [0.16, 0.06, 5.00, 33.33],
    [0.20, 0.18, 5.00, 4.17],
    [0.22, 0.29, 3.85, 5.88],
];

/// Weighted normalized matrix (rows = A₀, projects), as printed.
pub const PRINTED_WEIGHTED: [[f64; 4]; 6] = [
    [0.145, 0.17, 0.044, 0.06],
    [0.026, 0.031, 0.044, 0.008],
    [0.034, 0.051, 0.037, 0.006],
    [0.023, 0.010, 0.033, 0.06],
    [0.029, 0.031, 0.033, 0.008],
    [0.032, 0.051, 0.026, 0.010],
];

/// Utility degrees K (A₀ first), as printed.
pub const PRINTED_K: [f64; 6] = [1.0, 0.257, 0.304, 0.295, 0.238, 0.276];

pub fn case_study_matrix() -> DecisionMatrix {
    parse_decision_csv(CASE_STUDY_CSV).expect("bundled case study parses").0
}

pub fn case_study_weights() -> WeightVector {
    WeightVector::new(CASE_STUDY_WEIGHTS.to_vec()).expect("bundled weights are valid")
}
