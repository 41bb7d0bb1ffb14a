//! Builds a decision matrix in code, writes it as CSV, reads it back and emits
//! the ranking as JSON.

use mcda::aras::evaluate;
use mcda::io::{parse_decision_csv, serialize_decision_csv, serialize_result_json};
use mcda::{Criterion, DecisionMatrix, PipelineMode, WeightVector};

fn main() -> mcda::Result<()> {
    let matrix = DecisionMatrix::new(
        vec![
            Criterion::benefit("capacity"),
            Criterion::cost("price"),
            Criterion::cost("latency"),
        ],
        vec!["Vendor A".into(), "Vendor B, Ltd".into(), "Vendor C".into()],
        vec![
            vec![40.0, 12000.0, 3.5],
            vec![55.0, 15500.0, 4.0],
            vec![32.0, 9800.0, 2.5],
        ],
    )?;
    let weights = WeightVector::new(vec![0.5, 0.3, 0.2])?;

    let csv = serialize_decision_csv(&matrix, Some(&weights));
    print!("{csv}");
    let (parsed, parsed_weights) = parse_decision_csv(&csv)?;
    assert_eq!(parsed, matrix);

    let result = evaluate(
        &parsed,
        &parsed_weights.expect("weight row"),
        PipelineMode::StandardAras,
    )?;
    print!("{}", serialize_result_json(&result));
    Ok(())
}
