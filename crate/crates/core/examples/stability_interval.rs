//! Finds the weight range over which each criterion keeps the current winner.

use mcda::aras::evaluate;
use mcda::sensitivity::stability_interval;
use mcda::{fixtures, PipelineMode};

fn main() -> mcda::Result<()> {
    let matrix = fixtures::case_study_matrix();
    let weights = fixtures::case_study_weights();
    let mode = PipelineMode::Paper2011;
    println!("winner: {}", evaluate(&matrix, &weights, mode)?.best());

    for (j, criterion) in matrix.criteria().iter().enumerate() {
        for resolution in [1e-2, 1e-3] {
            let s = stability_interval(&matrix, &weights, mode, &criterion.name, resolution)?;
            println!(
                "{:<4} w = {:.2}  stable in ({:.3}, {:.3}) at resolution {resolution}",
                criterion.name,
                weights.get(j),
                s.low,
                s.high
            );
        }
    }
    Ok(())
}
