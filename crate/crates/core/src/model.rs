//! Domain types shared by the AHP, ARAS and sensitivity modules.
//!
//! Every type here validates its invariants on construction and is immutable
//! afterwards, so values can be shared freely between threads.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest admissible raw value in a cost column. Anything below is rejected
/// so the reciprocal stays bounded.
pub const MIN_COST_VALUE: f64 = 1e-12;

/// Allowed deviation of a weight vector's sum from 1.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-6;

/// Whether larger (`Benefit`, "max") or smaller (`Cost`, "min") raw values are better.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "max", alias = "benefit", alias = "MAX")]
    Benefit,
    #[serde(rename = "min", alias = "cost", alias = "MIN")]
    Cost,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Benefit => "max",
            Direction::Cost => "min",
        }
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "max" | "benefit" => Ok(Direction::Benefit),
            "min" | "cost" => Ok(Direction::Cost),
            other => Err(other.to_string()),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criterion {
    pub name: String,
    pub direction: Direction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
}

impl Criterion {
    pub fn new(name: impl Into<String>, direction: Direction) -> Self {
        Self {
            name: name.into(),
            direction,
            unit: None,
        }
    }

    pub fn benefit(name: impl Into<String>) -> Self {
        Self::new(name, Direction::Benefit)
    }

    pub fn cost(name: impl Into<String>) -> Self {
        Self::new(name, Direction::Cost)
    }

    pub fn with_unit(mut self, unit: impl Into<String>) -> Self {
        self.unit = Some(unit.into());
        self
    }
}

/// Variant of the ARAS pipeline.
///
/// `Paper2011` normalizes the raw columns first and then appends an optimal
/// row of 1.00 (benefit) / column minimum (cost) before the reciprocal and
/// second normalization passes. `StandardAras` picks the optimal row from the
/// raw values and normalizes once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum PipelineMode {
    #[serde(rename = "paper-2011", alias = "paper2011")]
    Paper2011,
    #[default]
    #[serde(rename = "standard", alias = "standard-aras")]
    StandardAras,
}

impl PipelineMode {
    pub fn as_str(self) -> &'static str {
        match self {
            PipelineMode::Paper2011 => "paper-2011",
            PipelineMode::StandardAras => "standard",
        }
    }
}

impl FromStr for PipelineMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paper-2011" | "paper2011" => Ok(PipelineMode::Paper2011),
            "standard" | "standard-aras" => Ok(PipelineMode::StandardAras),
            other => Err(format!("unknown mode `{other}` (expected paper-2011 or standard)")),
        }
    }
}

impl fmt::Display for PipelineMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Raw scores of `m` alternatives against `n` criteria.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDecisionMatrix")]
pub struct DecisionMatrix {
    criteria: Vec<Criterion>,
    alternatives: Vec<String>,
    values: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct RawDecisionMatrix {
    criteria: Vec<Criterion>,
    alternatives: Vec<String>,
    values: Vec<Vec<f64>>,
}

impl TryFrom<RawDecisionMatrix> for DecisionMatrix {
    type Error = Error;

    fn try_from(raw: RawDecisionMatrix) -> Result<Self> {
        DecisionMatrix::new(raw.criteria, raw.alternatives, raw.values)
    }
}

impl DecisionMatrix {
    pub fn new(criteria: Vec<Criterion>, alternatives: Vec<String>, values: Vec<Vec<f64>>) -> Result<Self> {
        let matrix = Self {
            criteria,
            alternatives,
            values,
        };
        matrix.check()?;
        Ok(matrix)
    }

    fn check(&self) -> Result<()> {
        if self.criteria.is_empty() || self.alternatives.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        unique_names("criterion", self.criteria.iter().map(|c| c.name.as_str()))?;
        unique_names("alternative", self.alternatives.iter().map(String::as_str))?;
        if self.values.len() != self.alternatives.len() {
            return Err(Error::DimensionMismatch {
                what: "value rows",
                expected: self.alternatives.len(),
                found: self.values.len(),
            });
        }
        let n = self.criteria.len();
        for (i, row) in self.values.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    what: "values per row",
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFiniteValue { row: i, column: j });
                }
                let criterion = &self.criteria[j];
                match criterion.direction {
                    Direction::Cost if v < MIN_COST_VALUE => {
                        return Err(Error::NonPositiveCostValue {
                            alternative: self.alternatives[i].clone(),
                            criterion: criterion.name.clone(),
                            value: v,
                        })
                    }
                    Direction::Benefit if v < 0.0 => {
                        return Err(Error::NegativeBenefitValue {
                            alternative: self.alternatives[i].clone(),
                            criterion: criterion.name.clone(),
                            value: v,
                        })
                    }
                    _ => {}
                }
            }
        }
        for (j, criterion) in self.criteria.iter().enumerate() {
            if criterion.direction == Direction::Benefit && self.values.iter().all(|row| row[j] == 0.0) {
                return Err(Error::DegenerateColumn {
                    criterion: criterion.name.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn criteria(&self) -> &[Criterion] {
        &self.criteria
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.criteria.iter().map(|c| c.direction).collect()
    }

    pub fn criterion_index(&self, name: &str) -> Option<usize> {
        self.criteria.iter().position(|c| c.name == name)
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.values.iter().map(|row| row[j]).collect()
    }
}

fn unique_names<'a>(what: &'static str, names: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for name in names {
        if name.trim().is_empty() {
            return Err(Error::EmptyName { what });
        }
        if !seen.insert(name) {
            return Err(Error::DuplicateName {
                what,
                name: name.to_string(),
            });
        }
    }
    Ok(())
}

/// Criterion importances; strictly positive and summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        check_positive(&weights)?;
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::WeightSumViolation { sum });
        }
        Ok(Self(weights))
    }

    /// Accepts any positive weights and rescales them to sum to 1.
    pub fn renormalized(weights: Vec<f64>) -> Result<Self> {
        check_positive(&weights)?;
        let sum: f64 = weights.iter().sum();
        Self::new(weights.into_iter().map(|w| w / sum).collect())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, j: usize) -> f64 {
        self.0[j]
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }
}

fn check_positive(weights: &[f64]) -> Result<()> {
    if weights.is_empty() {
        return Err(Error::DimensionMismatch {
            what: "weights",
            expected: 1,
            found: 0,
        });
    }
    for (index, &value) in weights.iter().enumerate() {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::NonPositiveWeight { index, value });
        }
    }
    Ok(())
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = Error;

    fn try_from(weights: Vec<f64>) -> Result<Self> {
        WeightVector::new(weights)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl AsRef<[f64]> for WeightVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// The synthetic best alternative A₀ (one value per criterion).
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalRow {
    pub values: Vec<f64>,
    pub provenance: PipelineMode,
}

/// Outcome of one ARAS run.
///
/// Index 0 of `s_scores`, `k_degrees` and `weighted_matrix` is the optimal
/// row A₀; indices 1..=m follow `alternatives` (input order).
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationResult {
    pub mode: PipelineMode,
    pub criteria: Vec<String>,
    pub alternatives: Vec<String>,
    pub s_scores: Vec<f64>,
    pub k_degrees: Vec<f64>,
    /// Alternative names, best first.
    pub ranking: Vec<String>,
    pub weighted_matrix: Vec<Vec<f64>>,
}

impl EvaluationResult {
    pub fn best(&self) -> &str {
        &self.ranking[0]
    }

    /// Utility degree of an alternative by name.
    pub fn k_of(&self, name: &str) -> Option<f64> {
        self.alternatives
            .iter()
            .position(|a| a == name)
            .map(|i| self.k_degrees[i + 1])
    }

    /// 1-based rank of an alternative by name.
    pub fn rank_of(&self, name: &str) -> Option<usize> {
        self.ranking.iter().position(|a| a == name).map(|r| r + 1)
    }
}

/// Checks a matrix/weight pair and hands it back unchanged.
pub fn validate_matrix(matrix: DecisionMatrix, weights: WeightVector) -> Result<(DecisionMatrix, WeightVector)> {
    matrix.check()?;
    if weights.len() != matrix.n_criteria() {
        return Err(Error::DimensionMismatch {
            what: "weights",
            expected: matrix.n_criteria(),
            found: weights.len(),
        });
    }
    check_positive(weights.as_slice())?;
    let sum = weights.sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        return Err(Error::WeightSumViolation { sum });
    }
    Ok((matrix, weights))
}
