//! Multi-criteria ranking of alternatives.
//!
//! Criterion weights come from expert pairwise judgments ([`ahp`]); the
//! alternatives are ranked by Additive Ratio Assessment ([`aras`]) against a
//! synthetic optimal alternative. [`sensitivity`] sweeps single weights to find
//! rank reversals, [`io`] holds the CSV and JSON formats, and [`cli`] / [`api`]
//! expose the pipeline on the command line and over HTTP.
//!
//! ```
//! use mcda::{aras, fixtures, PipelineMode};
//!
//! let matrix = fixtures::case_study_matrix();
//! let weights = fixtures::case_study_weights();
//! let result = aras::evaluate(&matrix, &weights, PipelineMode::Paper2011).unwrap();
//! assert_eq!(result.best(), "Project 2");
//! ```

pub mod ahp;
pub mod api;
pub mod aras;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod model;
pub mod sensitivity;

pub use error::{Error, Result};
pub use model::{
    validate_matrix, Criterion, DecisionMatrix, Direction, EvaluationResult, OptimalRow, PipelineMode, WeightVector,
};
