//! Ranks the bundled five-project case study in both pipeline modes.
//!
//! Run with `cargo run --example rank_case_study`.

use mcda::aras::evaluate;
use mcda::{fixtures, PipelineMode};

fn main() -> mcda::Result<()> {
    let matrix = fixtures::case_study_matrix();
    let weights = fixtures::case_study_weights();

    for mode in [PipelineMode::Paper2011, PipelineMode::StandardAras] {
        let result = evaluate(&matrix, &weights, mode)?;
        println!("{mode}");
        for (rank, name) in result.ranking.iter().enumerate() {
            println!("  {}. {name:<10} K = {:.6}", rank + 1, result.k_of(name).unwrap());
        }
    }
    Ok(())
}
