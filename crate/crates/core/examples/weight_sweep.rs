//! Sweeps one criterion weight and reports where the ranking changes.

use mcda::sensitivity::weight_sweep;
use mcda::{fixtures, PipelineMode};

fn main() -> mcda::Result<()> {
    let matrix = fixtures::case_study_matrix();
    let weights = fixtures::case_study_weights();
    let grid: Vec<f64> = (1..10).map(|k| f64::from(k) / 10.0).collect();

    let report = weight_sweep(&matrix, &weights, PipelineMode::Paper2011, "ROR", &grid)?;
    for (g, ranking) in report.grid.iter().zip(&report.rankings) {
        let marker = if report.rank_change_points.iter().any(|&i| report.grid[i] == *g) {
            "*"
        } else {
            " "
        };
        println!("{marker} ROR = {g:.1}: {}", ranking.join(" > "));
    }
    Ok(())
}
