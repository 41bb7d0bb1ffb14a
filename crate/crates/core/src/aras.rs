//! Additive Ratio Assessment.
//!
//! Every alternative is compared against a synthetic optimal alternative A₀:
//! columns are turned into shares (cost columns via their reciprocals first),
//! shares are weighted, summed into an optimality score S_i, and the utility
//! degree K_i = S_i / S_0 ranks the alternatives.

use crate::error::{Error, Result};
use crate::model::{
    DecisionMatrix, Direction, EvaluationResult, OptimalRow, PipelineMode, WeightVector, MIN_COST_VALUE,
};

/// Which step of the pipeline produced a [`NormalizedMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// Raw columns turned into shares, without A₀ (paper-2011 mode only).
    FirstPass,
    /// A₀ on top, cost columns replaced by reciprocals.
    Maximized,
    /// Column shares over A₀ and all alternatives.
    FinalShares,
    /// Shares multiplied by criterion weights.
    Weighted,
}

/// Grid of per-stage values. Row 0 is A₀ in every stage except `FirstPass`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    rows: Vec<Vec<f64>>,
    stage: Stage,
}

impl NormalizedMatrix {
    pub fn new(rows: Vec<Vec<f64>>, stage: Stage) -> Self {
        Self { rows, stage }
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn n_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    fn map_columns(&self, stage: Stage, mut f: impl FnMut(usize, Vec<f64>) -> Result<Vec<f64>>) -> Result<Self> {
        let mut rows = vec![Vec::with_capacity(self.n_columns()); self.rows.len()];
        for j in 0..self.n_columns() {
            for (row, v) in rows.iter_mut().zip(f(j, self.column(j))?) {
                row.push(v);
            }
        }
        Ok(Self { rows, stage })
    }
}

/// x_i / Σ x. Values must be non-negative with a positive sum.
pub fn column_shares(values: &[f64]) -> Result<Vec<f64>> {
    let sum: f64 = values.iter().sum();
    if values.iter().any(|v| !v.is_finite() || *v < 0.0) || sum <= 0.0 || !sum.is_finite() {
        return Err(Error::DegenerateColumn {
            criterion: String::from("<column>"),
        });
    }
    Ok(values.iter().map(|v| v / sum).collect())
}

/// 1 / x_i, turning a cost column into a benefit column.
pub fn reciprocals(values: &[f64]) -> Result<Vec<f64>> {
    checked_reciprocals(values).map_err(|(i, value)| Error::NonPositiveCostValue {
        alternative: format!("row {i}"),
        criterion: String::from("<column>"),
        value,
    })
}

fn checked_reciprocals(values: &[f64]) -> std::result::Result<Vec<f64>, (usize, f64)> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            if v.is_finite() && v >= MIN_COST_VALUE {
                Ok(1.0 / v)
            } else {
                Err((i, v))
            }
        })
        .collect()
}

/// Builds A₀ from the rows it will be stacked onto.
///
/// `StandardAras` expects raw values: column maximum for benefit criteria,
/// column minimum for cost criteria. `Paper2011` expects first-pass shares:
/// 1.00 for benefit criteria, column minimum for cost criteria.
pub fn insert_optimal_row(rows: &[Vec<f64>], directions: &[Direction], mode: PipelineMode) -> OptimalRow {
    let column = |j: usize| rows.iter().map(move |r| r[j]);
    let values = directions
        .iter()
        .enumerate()
        .map(|(j, direction)| match (direction, mode) {
            (Direction::Cost, _) => column(j).fold(f64::INFINITY, f64::min),
            (Direction::Benefit, PipelineMode::StandardAras) => column(j).fold(f64::NEG_INFINITY, f64::max),
            (Direction::Benefit, PipelineMode::Paper2011) => 1.0,
        })
        .collect();
    OptimalRow {
        values,
        provenance: mode,
    }
}

pub fn apply_weights(shares: &NormalizedMatrix, weights: &WeightVector) -> Result<NormalizedMatrix> {
    debug_assert_eq!(shares.stage(), Stage::FinalShares);
    if shares.n_columns() != weights.len() {
        return Err(Error::DimensionMismatch {
            what: "weights",
            expected: shares.n_columns(),
            found: weights.len(),
        });
    }
    let rows = shares
        .rows()
        .iter()
        .map(|row| row.iter().zip(weights.as_slice()).map(|(x, w)| x * w).collect())
        .collect();
    Ok(NormalizedMatrix::new(rows, Stage::Weighted))
}

/// Row sums S_i (S_0 first).
pub fn optimality_scores(weighted: &NormalizedMatrix) -> Vec<f64> {
    weighted.rows().iter().map(|r| r.iter().sum()).collect()
}

/// K_i = S_i / S_0, with K_0 pinned to exactly 1.
pub fn utility_degrees(s_scores: &[f64]) -> Result<Vec<f64>> {
    let s0 = s_scores.first().copied().unwrap_or(0.0);
    if s0 <= 0.0 || !s0.is_finite() {
        return Err(Error::DegenerateOptimal { s0 });
    }
    Ok(s_scores
        .iter()
        .enumerate()
        .map(|(i, s)| if i == 0 { 1.0 } else { s / s0 })
        .collect())
}

/// Names ordered by descending K; equal K keeps input order.
pub fn rank_alternatives(k_degrees: &[f64], names: &[String]) -> Vec<String> {
    debug_assert_eq!(k_degrees.len(), names.len());
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by(|&a, &b| k_degrees[b].total_cmp(&k_degrees[a]));
    order.into_iter().map(|i| names[i].clone()).collect()
}

/// All intermediate grids of one pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineTrace {
    pub mode: PipelineMode,
    /// Shares of the raw columns (paper-2011 only).
    pub first_pass: Option<NormalizedMatrix>,
    pub optimal: OptimalRow,
    pub maximized: NormalizedMatrix,
    pub final_shares: NormalizedMatrix,
    pub weighted: NormalizedMatrix,
    pub s_scores: Vec<f64>,
    pub k_degrees: Vec<f64>,
}

pub fn trace(matrix: &DecisionMatrix, weights: &WeightVector, mode: PipelineMode) -> Result<PipelineTrace> {
    let (matrix, weights) = crate::model::validate_matrix(matrix.clone(), weights.clone())?;
    let directions = matrix.directions();
    let name_of = |j: usize| matrix.criteria()[j].name.clone();
    let raw = NormalizedMatrix::new(matrix.values().to_vec(), Stage::FirstPass);

    let (first_pass, base) = match mode {
        PipelineMode::Paper2011 => {
            let shares = raw.map_columns(Stage::FirstPass, |j, col| {
                column_shares(&col).map_err(|_| Error::DegenerateColumn { criterion: name_of(j) })
            })?;
            (Some(shares.clone()), shares)
        }
        PipelineMode::StandardAras => (None, raw),
    };

    let optimal = insert_optimal_row(base.rows(), &directions, mode);
    let mut stacked = Vec::with_capacity(base.rows().len() + 1);
    stacked.push(optimal.values.clone());
    stacked.extend(base.rows().iter().cloned());
    let stacked = NormalizedMatrix::new(stacked, Stage::Maximized);

    let alternative_of = |i: usize| match i {
        0 => String::from("A0"),
        i => matrix.alternatives()[i - 1].clone(),
    };
    let maximized = stacked.map_columns(Stage::Maximized, |j, col| match directions[j] {
        Direction::Benefit => Ok(col),
        Direction::Cost => checked_reciprocals(&col).map_err(|(i, value)| Error::NonPositiveCostValue {
            alternative: alternative_of(i),
            criterion: name_of(j),
            value,
        }),
    })?;

    let final_shares = maximized.map_columns(Stage::FinalShares, |j, col| {
        column_shares(&col).map_err(|_| Error::DegenerateColumn { criterion: name_of(j) })
    })?;
    let weighted = apply_weights(&final_shares, &weights)?;
    let s_scores = optimality_scores(&weighted);
    let k_degrees = utility_degrees(&s_scores)?;

    Ok(PipelineTrace {
        mode,
        first_pass,
        optimal,
        maximized,
        final_shares,
        weighted,
        s_scores,
        k_degrees,
    })
}

/// Runs the full pipeline and ranks the alternatives.
pub fn evaluate(matrix: &DecisionMatrix, weights: &WeightVector, mode: PipelineMode) -> Result<EvaluationResult> {
    let trace = trace(matrix, weights, mode)?;
    let ranking = rank_alternatives(&trace.k_degrees[1..], matrix.alternatives());
    Ok(EvaluationResult {
        mode,
        criteria: matrix.criteria().iter().map(|c| c.name.clone()).collect(),
        alternatives: matrix.alternatives().to_vec(),
        s_scores: trace.s_scores,
        k_degrees: trace.k_degrees,
        ranking,
        weighted_matrix: trace.weighted.rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::Criterion;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn shares_examples() {
        let npv = column_shares(&[10.0, 13.0, 9.0, 11.0, 12.0]).unwrap();
        assert!(close(&npv, &[0.1818, 0.2364, 0.1636, 0.2000, 0.2182], 1e-4));
        assert!((npv.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(column_shares(&[1.0; 4]).unwrap(), vec![0.25; 4]);
        assert_eq!(column_shares(&[7.0]).unwrap(), vec![1.0]);
        assert_eq!(column_shares(&[0.0, 0.0]).unwrap_err().code(), "DegenerateColumn");
        assert_eq!(column_shares(&[0.0, 2.0]).unwrap(), vec![0.0, 1.0]);
    }

    #[test]
    fn reciprocal_examples() {
        let pb = reciprocals(&[0.15, 0.18, 0.20, 0.20, 0.26]).unwrap();
        assert!(close(&pb, &[6.67, 5.56, 5.0, 5.0, 3.85], 0.005));
        assert_eq!(reciprocals(&[1.0]).unwrap(), vec![1.0]);
        assert_eq!(reciprocals(&[4.0, 0.5]).unwrap(), vec![0.25, 2.0]);
        assert_eq!(reciprocals(&[0.0]).unwrap_err().code(), "NonPositiveCostValue");
    }

    #[test]
    fn optimal_row_examples() {
        let m = fixtures::case_study_matrix();
        let dirs = m.directions();
        let standard = insert_optimal_row(m.values(), &dirs, PipelineMode::StandardAras);
        assert_eq!(standard.values, vec![13.0, 5.0, 6.0, 1.0]);

        let printed: Vec<Vec<f64>> = fixtures::PRINTED_FIRST_PASS.iter().map(|r| r.to_vec()).collect();
        let paper = insert_optimal_row(&printed, &dirs, PipelineMode::Paper2011);
        assert_eq!(paper.values, fixtures::PRINTED_OPTIMAL_ROW.to_vec());

        let all_benefit = insert_optimal_row(
            &[vec![0.3, 0.6], vec![0.7, 0.4]],
            &[Direction::Benefit; 2],
            PipelineMode::Paper2011,
        );
        assert_eq!(all_benefit.values, vec![1.0, 1.0]);
    }

    #[test]
    fn weighting_examples() {
        let shares = NormalizedMatrix::new(vec![vec![0.12, 0.15, 0.17, 0.04]], Stage::FinalShares);
        let weighted = apply_weights(&shares, &fixtures::case_study_weights()).unwrap();
        assert!(close(&weighted.rows()[0], &[0.034, 0.051, 0.037, 0.006], 0.001));
        assert_eq!(weighted.stage(), Stage::Weighted);

        let single = NormalizedMatrix::new(vec![vec![0.4], vec![0.0]], Stage::FinalShares);
        let w = apply_weights(&single, &WeightVector::new(vec![1.0]).unwrap()).unwrap();
        assert_eq!(w.rows(), &[vec![0.4], vec![0.0]]);

        let err = apply_weights(&single, &fixtures::case_study_weights()).unwrap_err();
        assert_eq!(err.code(), "DimensionMismatch");
    }

    #[test]
    fn score_and_degree_examples() {
        let weighted = NormalizedMatrix::new(vec![vec![0.026, 0.031, 0.044, 0.008], vec![0.0; 4]], Stage::Weighted);
        let s = optimality_scores(&weighted);
        assert!((s[0] - 0.109).abs() < 1e-12);
        assert_eq!(s[1], 0.0);

        let k = utility_degrees(&[0.105, 0.027, 0.032, 0.031, 0.025, 0.029]).unwrap();
        assert!(close(&k, &[1.0, 0.257, 0.305, 0.295, 0.238, 0.276], 0.005));
        assert_eq!(k[0], 1.0);
        let scaled: Vec<f64> = [0.105, 0.027, 0.032].iter().map(|s| s * 4.0).collect();
        let k2 = utility_degrees(&scaled).unwrap();
        assert!(close(&k2[..3], &k[..3], 1e-15));
        assert_eq!(utility_degrees(&[0.2, 0.2]).unwrap(), vec![1.0, 1.0]);
        assert_eq!(utility_degrees(&[0.0, 0.1]).unwrap_err().code(), "DegenerateOptimal");
    }

    #[test]
    fn ranking_examples() {
        let names: Vec<String> = fixtures::CASE_STUDY_ALTERNATIVES
            .iter()
            .map(|s| s.to_string())
            .collect();
        let ranking = rank_alternatives(&[0.257, 0.304, 0.295, 0.238, 0.276], &names);
        assert_eq!(ranking, fixtures::CASE_STUDY_RANKING);
        assert_eq!(rank_alternatives(&[0.5; 5], &names), names);
        assert_eq!(rank_alternatives(&[0.1], &names[..1]), vec!["Project 1"]);
    }

    #[test]
    fn case_study_paper_mode() {
        let r = evaluate(
            &fixtures::case_study_matrix(),
            &fixtures::case_study_weights(),
            PipelineMode::Paper2011,
        )
        .unwrap();
        assert_eq!(r.ranking, fixtures::CASE_STUDY_RANKING);
        assert!(close(&r.k_degrees, &fixtures::PRINTED_K, 0.015));
        assert_eq!(r.k_degrees[0], 1.0);
    }

    #[test]
    fn single_alternative() {
        let m = DecisionMatrix::new(
            vec![Criterion::benefit("a"), Criterion::cost("b")],
            vec!["only".into()],
            vec![vec![3.0, 2.0]],
        )
        .unwrap();
        let w = WeightVector::new(vec![0.6, 0.4]).unwrap();
        for mode in [PipelineMode::Paper2011, PipelineMode::StandardAras] {
            let r = evaluate(&m, &w, mode).unwrap();
            assert_eq!(r.ranking, vec!["only"]);
            assert!(r.k_degrees[1] > 0.0 && r.k_degrees[1] <= 1.0);
        }
    }

    #[test]
    fn first_pass_only_in_paper_mode() {
        let (m, w) = (fixtures::case_study_matrix(), fixtures::case_study_weights());
        assert!(trace(&m, &w, PipelineMode::Paper2011).unwrap().first_pass.is_some());
        assert!(trace(&m, &w, PipelineMode::StandardAras).unwrap().first_pass.is_none());
    }
}
