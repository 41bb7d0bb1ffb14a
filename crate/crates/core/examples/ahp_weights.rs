//! Derives criterion weights from one expert's pairwise judgments and checks
//! their consistency.

use mcda::ahp::{consistency, derive_weights};
use mcda::io::parse_pairwise_csv;

const JUDGMENTS: &str = "\
1,3,5,7
1/3,1,3,5
1/5,1/3,1,3
1/7,1/5,1/3,1
";

fn main() -> mcda::Result<()> {
    let matrix = parse_pairwise_csv(JUDGMENTS)?;
    let weights = derive_weights(&matrix)?;
    let report = consistency(&matrix, &weights)?;

    for (j, w) in weights.as_slice().iter().enumerate() {
        println!("w{} = {w:.4}", j + 1);
    }
    println!(
        "lambda_max = {:.4}, CR = {:.4} ({})",
        report.lambda_max,
        report.consistency_ratio,
        if report.acceptable {
            "acceptable"
        } else {
            "revise the judgments"
        }
    );
    Ok(())
}
