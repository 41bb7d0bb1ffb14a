//! What-if analysis over a single criterion weight.
//!
//! The swept criterion takes weight `g`; every other weight is multiplied by
//! `(1 − g) / (1 − w_baseline)` so the vector still sums to 1 and the
//! untouched criteria keep their relative importance.

use crate::aras::evaluate;
use crate::error::{Error, Result};
use crate::model::{DecisionMatrix, PipelineMode, WeightVector};

/// Resolution used for the stability interval attached to a sweep report.
pub const DEFAULT_RESOLUTION: f64 = 1e-3;
pub const MAX_RESOLUTION: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct SensitivityReport {
    pub criterion: String,
    pub mode: PipelineMode,
    pub baseline_weight: f64,
    pub grid: Vec<f64>,
    pub alternatives: Vec<String>,
    /// `k_trajectories[i][g]`: K of alternative `i` at grid point `g`.
    pub k_trajectories: Vec<Vec<f64>>,
    /// Ranking (best first) at each grid point.
    pub rankings: Vec<Vec<String>>,
    /// Grid indices whose ranking differs from the previous grid point's.
    pub rank_change_points: Vec<usize>,
    /// `None` when the baseline top alternative is tied.
    pub stability_interval: Option<StabilityInterval>,
}

/// Open weight interval `(low, high)` around the baseline weight.
///
/// `low` and `high` are the nearest scanned weights at which the top
/// alternative differs from the baseline one, or 0 / 1 when no scanned weight
/// on that side changes it. Every scanned weight strictly inside keeps the
/// baseline top alternative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityInterval {
    pub low: f64,
    pub high: f64,
    pub resolution: f64,
}

impl StabilityInterval {
    pub fn contains(&self, w: f64) -> bool {
        self.low < w && w < self.high
    }

    pub fn is_within(&self, other: &StabilityInterval) -> bool {
        other.low <= self.low && self.high <= other.high
    }
}

/// Weight vector with criterion `index` set to `g` and the rest rescaled.
pub fn perturbed_weights(weights: &WeightVector, index: usize, g: f64) -> Result<WeightVector> {
    if weights.len() == 1 {
        // a lone criterion always carries the full weight
        return Ok(weights.clone());
    }
    let factor = (1.0 - g) / (1.0 - weights.get(index));
    let values = weights
        .as_slice()
        .iter()
        .enumerate()
        .map(|(j, &w)| if j == index { g } else { w * factor })
        .collect();
    WeightVector::new(values)
}

fn check_grid_value(value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(Error::GridOutOfRange { value })
    }
}

fn locate(matrix: &DecisionMatrix, criterion: &str) -> Result<usize> {
    matrix
        .criterion_index(criterion)
        .ok_or_else(|| Error::UnknownCriterion {
            name: criterion.to_string(),
        })
}

pub fn weight_sweep(
    matrix: &DecisionMatrix,
    weights: &WeightVector,
    mode: PipelineMode,
    criterion: &str,
    grid: &[f64],
) -> Result<SensitivityReport> {
    weight_sweep_with_resolution(matrix, weights, mode, criterion, grid, DEFAULT_RESOLUTION)
}

pub fn weight_sweep_with_resolution(
    matrix: &DecisionMatrix,
    weights: &WeightVector,
    mode: PipelineMode,
    criterion: &str,
    grid: &[f64],
    resolution: f64,
) -> Result<SensitivityReport> {
    let index = locate(matrix, criterion)?;
    grid.iter().try_for_each(|&g| check_grid_value(g))?;

    let m = matrix.n_alternatives();
    let mut k_trajectories = vec![Vec::with_capacity(grid.len()); m];
    let mut rankings = Vec::with_capacity(grid.len());
    for &g in grid {
        let result = evaluate(matrix, &perturbed_weights(weights, index, g)?, mode)?;
        for (trajectory, k) in k_trajectories.iter_mut().zip(&result.k_degrees[1..]) {
            trajectory.push(*k);
        }
        rankings.push(result.ranking);
    }
    let rank_change_points = rankings
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0] != pair[1])
        .map(|(i, _)| i + 1)
        .collect();

    let stability_interval = match stability_interval(matrix, weights, mode, criterion, resolution) {
        Ok(interval) => Some(interval),
        Err(Error::AmbiguousTop { .. }) => None,
        Err(e) => return Err(e),
    };

    Ok(SensitivityReport {
        criterion: criterion.to_string(),
        mode,
        baseline_weight: weights.get(index),
        grid: grid.to_vec(),
        alternatives: matrix.alternatives().to_vec(),
        k_trajectories,
        rankings,
        rank_change_points,
        stability_interval,
    })
}

/// Scan points strictly inside (0, 1) spaced `resolution` apart.
///
/// When 1/resolution is an integer N the points are k/N, so grids at nested
/// resolutions share bit-identical points.
pub fn scan_points(resolution: f64) -> Vec<f64> {
    let steps = 1.0 / resolution;
    let rounded = steps.round();
    if (steps - rounded).abs() <= 1e-9 * rounded {
        let n = rounded as u64;
        (1..n).map(|k| k as f64 / n as f64).collect()
    } else {
        (1..).map(|k| k as f64 * resolution).take_while(|&p| p < 1.0).collect()
    }
}

pub fn stability_interval(
    matrix: &DecisionMatrix,
    weights: &WeightVector,
    mode: PipelineMode,
    criterion: &str,
    resolution: f64,
) -> Result<StabilityInterval> {
    let index = locate(matrix, criterion)?;
    if !(resolution > 0.0 && resolution <= MAX_RESOLUTION) {
        return Err(Error::GridOutOfRange { value: resolution });
    }
    let baseline = evaluate(matrix, weights, mode)?;
    if baseline.ranking.len() > 1 {
        let first = &baseline.ranking[0];
        let second = &baseline.ranking[1];
        let (k1, k2) = (baseline.k_of(first).unwrap(), baseline.k_of(second).unwrap());
        if (k1 - k2).abs() <= 1e-12 {
            return Err(Error::AmbiguousTop {
                first: first.clone(),
                second: second.clone(),
            });
        }
    }
    let top = baseline.best().to_string();
    let keeps_top = |g: f64| -> Result<bool> {
        let r = evaluate(matrix, &perturbed_weights(weights, index, g)?, mode)?;
        Ok(r.best() == top)
    };

    let w = weights.get(index);
    let points = scan_points(resolution);
    let split = points.partition_point(|&p| p <= w);

    let mut low = 0.0;
    for &p in points[..split].iter().rev() {
        if !keeps_top(p)? {
            low = p;
            break;
        }
    }
    let mut high = 1.0;
    for &p in &points[split..] {
        if !keeps_top(p)? {
            high = p;
            break;
        }
    }
    Ok(StabilityInterval { low, high, resolution })
}
