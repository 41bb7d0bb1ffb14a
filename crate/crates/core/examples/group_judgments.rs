//! Combines several experts' judgments by element-wise geometric mean.

use mcda::ahp::{aggregate_judgments, derive_weights, weigh, PairwiseComparisonMatrix};

fn main() -> mcda::Result<()> {
    let experts = [
        vec![
            vec![1.0, 3.0, 5.0],
            vec![1.0 / 3.0, 1.0, 3.0],
            vec![0.2, 1.0 / 3.0, 1.0],
        ],
        vec![vec![1.0, 2.0, 4.0], vec![0.5, 1.0, 2.0], vec![0.25, 0.5, 1.0]],
        vec![vec![1.0, 5.0, 7.0], vec![0.2, 1.0, 2.0], vec![1.0 / 7.0, 0.5, 1.0]],
    ]
    .into_iter()
    .map(PairwiseComparisonMatrix::new)
    .collect::<mcda::Result<Vec<_>>>()?;

    let group = aggregate_judgments(&experts)?;
    for row in group.entries() {
        println!(
            "{}",
            row.iter().map(|x| format!("{x:7.4}")).collect::<Vec<_>>().join(" ")
        );
    }

    let (weights, report) = weigh(&experts)?;
    assert_eq!(weights, derive_weights(&group)?);
    println!("group weights {:?}", weights.as_slice());
    println!("group CR {:.4}", report.consistency_ratio);
    Ok(())
}
