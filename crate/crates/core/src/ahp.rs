//! Criterion weights from pairwise judgments (Analytic Hierarchy Process).
//!
//! Priorities are the principal right eigenvector of the reciprocal judgment
//! matrix, found by power iteration. Judgment coherence is summarized by the
//! consistency ratio CR = CI / RI with CI = (λ_max − n) / (n − 1).

#![allow(clippy::needless_range_loop)]

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::WeightVector;

/// Lower end of the 1/9..9 judgment scale.
pub const SCALE_MIN: f64 = 1.0 / 9.0;
/// Upper end of the 1/9..9 judgment scale.
pub const SCALE_MAX: f64 = 9.0;

/// Relative tolerance for a_ji = 1/a_ij.
pub const RECIPROCITY_TOLERANCE: f64 = 1e-9;

pub const POWER_ITERATION_TOLERANCE: f64 = 1e-10;
pub const POWER_ITERATION_MAX_STEPS: usize = 10_000;

/// CR below this is acceptable.
pub const CONSISTENCY_THRESHOLD: f64 = 0.10;

/// Saaty random consistency index, indexed by matrix order (0..=10).
pub const RANDOM_INDEX: [f64; 11] = [0.0, 0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.49, 1.49];

/// Random index for order `n`. Orders above 10 reuse the last tabulated value.
pub fn random_index(n: usize) -> f64 {
    RANDOM_INDEX[n.min(RANDOM_INDEX.len() - 1)]
}

/// Square reciprocal judgment matrix on the 1/9..9 scale.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(into = "Vec<Vec<f64>>")]
pub struct PairwiseComparisonMatrix {
    entries: Vec<Vec<f64>>,
}

impl From<PairwiseComparisonMatrix> for Vec<Vec<f64>> {
    fn from(m: PairwiseComparisonMatrix) -> Self {
        m.entries
    }
}

// scale bounds are compared with a little slack so aggregated values like
// exp(ln 9) = 9.000000000000002 are not rejected
const SCALE_SLACK: f64 = 1e-12;

impl PairwiseComparisonMatrix {
    pub fn new(entries: Vec<Vec<f64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::NotSquare {
                rows: 0,
                row: 0,
                columns: 0,
            });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: i,
                    columns: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let v = entries[i][j];
                if !(SCALE_MIN * (1.0 - SCALE_SLACK)..=SCALE_MAX * (1.0 + SCALE_SLACK)).contains(&v) {
                    return Err(Error::ScaleViolation {
                        row: i,
                        column: j,
                        value: v,
                    });
                }
            }
        }
        for i in 0..n {
            if entries[i][i] != 1.0 {
                return Err(Error::ReciprocityViolation { row: i, column: i });
            }
            for j in (i + 1)..n {
                let product = entries[i][j] * entries[j][i];
                if (product - 1.0).abs() > RECIPROCITY_TOLERANCE {
                    return Err(Error::ReciprocityViolation { row: i, column: j });
                }
            }
        }
        Ok(Self { entries })
    }

    /// Perfectly consistent matrix a_ij = w_i / w_j.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        let entries = weights
            .iter()
            .map(|wi| weights.iter().map(|wj| wi / wj).collect())
            .collect();
        Self::new(entries)
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    /// Same judgments with criteria reordered: new index k holds old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let entries = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| self.entries[i][j]).collect())
            .collect();
        Self::new(entries)
    }

    fn multiply(&self, v: &[f64]) -> Vec<f64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub lambda_max: f64,
    pub consistency_index: f64,
    pub random_index: f64,
    pub consistency_ratio: f64,
    pub acceptable: bool,
}

/// Combines several experts' judgments by element-wise geometric mean.
///
/// Only the upper triangle is averaged; the lower triangle is filled with the
/// exact reciprocals.
pub fn aggregate_judgments(matrices: &[PairwiseComparisonMatrix]) -> Result<PairwiseComparisonMatrix> {
    let first = matrices.first().ok_or(Error::EmptyInput)?;
    let n = first.order();
    if let Some(bad) = matrices.iter().find(|m| m.order() != n) {
        return Err(Error::OrderMismatch {
            expected: n,
            found: bad.order(),
        });
    }
    let count = matrices.len() as f64;
    let mut entries = vec![vec![1.0; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let log_mean = matrices.iter().map(|m| m.get(i, j).ln()).sum::<f64>() / count;
            let value = log_mean.exp();
            entries[i][j] = value;
            entries[j][i] = 1.0 / value;
        }
    }
    PairwiseComparisonMatrix::new(entries)
}

/// Principal eigenvector by power iteration, normalized to sum 1.
pub fn derive_weights(matrix: &PairwiseComparisonMatrix) -> Result<WeightVector> {
    let n = matrix.order();
    let mut current = vec![1.0 / n as f64; n];
    let mut delta = f64::INFINITY;
    for _ in 0..POWER_ITERATION_MAX_STEPS {
        let mut next = matrix.multiply(&current);
        let sum: f64 = next.iter().sum();
        next.iter_mut().for_each(|x| *x /= sum);
        delta = next.iter().zip(&current).map(|(a, b)| (a - b).abs()).sum();
        current = next;
        if delta <= POWER_ITERATION_TOLERANCE {
            return WeightVector::new(current);
        }
    }
    Err(Error::NoConvergence {
        iterations: POWER_ITERATION_MAX_STEPS,
        delta,
    })
}

/// Normalized row geometric means. Only used as an independent cross-check of
/// [`derive_weights`]; both coincide on consistent matrices.
pub fn row_geometric_mean_weights(matrix: &PairwiseComparisonMatrix) -> Result<WeightVector> {
    let n = matrix.order() as f64;
    let means: Vec<f64> = matrix
        .entries()
        .iter()
        .map(|row| (row.iter().map(|a| a.ln()).sum::<f64>() / n).exp())
        .collect();
    WeightVector::renormalized(means)
}

pub fn consistency(matrix: &PairwiseComparisonMatrix, weights: &WeightVector) -> Result<ConsistencyReport> {
    let n = matrix.order();
    if weights.len() != n {
        return Err(Error::DimensionMismatch {
            what: "weights",
            expected: n,
            found: weights.len(),
        });
    }
    let w = weights.as_slice();
    let aw = matrix.multiply(w);
    let lambda_max = aw.iter().zip(w).map(|(a, x)| a / x).sum::<f64>() / n as f64;
    let consistency_index = if n >= 2 {
        (lambda_max - n as f64) / (n as f64 - 1.0)
    } else {
        0.0
    };
    let random_index = random_index(n);
    let consistency_ratio = if n >= 3 { consistency_index / random_index } else { 0.0 };
    Ok(ConsistencyReport {
        lambda_max,
        consistency_index,
        random_index,
        consistency_ratio,
        acceptable: consistency_ratio < CONSISTENCY_THRESHOLD,
    })
}

/// Aggregates (when more than one matrix is given), derives weights and
/// reports consistency.
pub fn weigh(matrices: &[PairwiseComparisonMatrix]) -> Result<(WeightVector, ConsistencyReport)> {
    let combined = match matrices {
        [single] => single.clone(),
        _ => aggregate_judgments(matrices)?,
    };
    let weights = derive_weights(&combined)?;
    let report = consistency(&combined, &weights)?;
    Ok((weights, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pcm(rows: &[&[f64]]) -> PairwiseComparisonMatrix {
        PairwiseComparisonMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn all_ones_gives_uniform_weights() {
        let m = pcm(&[&[1.0; 3], &[1.0; 3], &[1.0; 3]]);
        let w = derive_weights(&m).unwrap();
        for x in w.as_slice() {
            assert!((x - 1.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn consistent_matrix_recovers_generator() {
        let m = pcm(&[&[1.0, 2.0, 4.0], &[0.5, 1.0, 2.0], &[0.25, 0.5, 1.0]]);
        let w = derive_weights(&m).unwrap();
        let expected = [4.0 / 7.0, 2.0 / 7.0, 1.0 / 7.0];
        for (a, b) in w.as_slice().iter().zip(expected) {
            assert!((a - b).abs() < 1e-9);
        }
        assert!((w.sum() - 1.0).abs() <= 1e-12);
        let report = consistency(&m, &w).unwrap();
        assert!(report.consistency_ratio.abs() < 1e-8);
        assert!(report.acceptable);
    }

    #[test]
    fn two_by_two_is_always_consistent() {
        let m = pcm(&[&[1.0, 7.0], &[1.0 / 7.0, 1.0]]);
        let w = derive_weights(&m).unwrap();
        let report = consistency(&m, &w).unwrap();
        assert_eq!(report.consistency_ratio, 0.0);
        assert!((report.lambda_max - 2.0).abs() < 1e-9);
    }

    #[test]
    fn single_criterion() {
        let m = pcm(&[&[1.0]]);
        let w = derive_weights(&m).unwrap();
        assert_eq!(w.as_slice(), &[1.0]);
        let report = consistency(&m, &w).unwrap();
        assert_eq!(report.consistency_index, 0.0);
        assert_eq!(report.consistency_ratio, 0.0);
    }

    #[test]
    fn aggregation_examples() {
        let a = pcm(&[&[1.0, 2.0], &[0.5, 1.0]]);
        let b = pcm(&[&[1.0, 8.0], &[0.125, 1.0]]);
        let g = aggregate_judgments(&[a.clone(), b]).unwrap();
        assert!((g.get(0, 1) - 4.0).abs() < 1e-12);
        assert!((g.get(1, 0) - 0.25).abs() < 1e-12);
        assert_eq!(g.get(1, 0), 1.0 / g.get(0, 1));

        let same = aggregate_judgments(&[a.clone(), a.clone()]).unwrap();
        assert!((same.get(0, 1) - 2.0).abs() < 1e-12);

        let up = pcm(&[&[1.0, 3.0], &[1.0 / 3.0, 1.0]]);
        let down = pcm(&[&[1.0, 1.0 / 3.0], &[3.0, 1.0]]);
        let g = aggregate_judgments(&[up, down]).unwrap();
        assert!((g.get(0, 1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn aggregation_errors() {
        assert_eq!(aggregate_judgments(&[]).unwrap_err().code(), "EmptyInput");
        let a = pcm(&[&[1.0]]);
        let b = pcm(&[&[1.0, 2.0], &[0.5, 1.0]]);
        assert_eq!(aggregate_judgments(&[a, b]).unwrap_err().code(), "OrderMismatch");
    }

    #[test]
    fn validation_errors() {
        let err = PairwiseComparisonMatrix::new(vec![vec![1.0, 3.0], vec![0.5, 1.0]]).unwrap_err();
        assert_eq!(err.code(), "ReciprocityViolation");
        let err = PairwiseComparisonMatrix::new(vec![vec![1.0, 10.0], vec![0.1, 1.0]]).unwrap_err();
        assert_eq!(err.code(), "ScaleViolation");
        let err = PairwiseComparisonMatrix::new(vec![vec![1.0, 2.0, 1.0], vec![0.5, 1.0, 1.0]]).unwrap_err();
        assert_eq!(err.code(), "NotSquare");
        let err = PairwiseComparisonMatrix::new(vec![vec![2.0]]).unwrap_err();
        assert_eq!(err.code(), "ReciprocityViolation");
        // scale edges are inclusive
        assert!(PairwiseComparisonMatrix::new(vec![vec![1.0, 9.0], vec![1.0 / 9.0, 1.0]]).is_ok());
    }

    #[test]
    fn geometric_mean_agrees_on_consistent_input() {
        let m = PairwiseComparisonMatrix::from_weights(&[0.29, 0.34, 0.22, 0.15]).unwrap();
        let a = derive_weights(&m).unwrap();
        let b = row_geometric_mean_weights(&m).unwrap();
        for (x, y) in a.as_slice().iter().zip(b.as_slice()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn dimension_mismatch_in_consistency() {
        let m = pcm(&[&[1.0, 2.0], &[0.5, 1.0]]);
        let w = WeightVector::new(vec![1.0]).unwrap();
        assert_eq!(consistency(&m, &w).unwrap_err().code(), "DimensionMismatch");
    }
}
