//! Decision-matrix and pairwise-judgment CSV.
//!
//! Decision CSV layout:
//!
//! ```text
//! alternative,NPV,ROR,PB,PR
//! direction,max,max,min,min
//! weight,0.29,0.34,0.22,0.15      (optional)
//! Project 1,10,3,6,7
//! ```

use csv::{ReaderBuilder, StringRecord, Terminator, WriterBuilder};

use super::format_number;
use crate::ahp::PairwiseComparisonMatrix;
use crate::error::{Error, Result};
use crate::model::{Criterion, DecisionMatrix, Direction, WeightVector};

fn records(text: &str) -> Result<Vec<StringRecord>> {
    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for record in reader.records() {
        match record {
            Ok(r) => out.push(r),
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                return Err(Error::parse(line, 0, e.to_string()));
            }
        }
    }
    Ok(out)
}

fn line_of(record: &StringRecord) -> u64 {
    record.position().map_or(0, |p| p.line())
}

fn parse_real(field: &str, line: u64, column: usize) -> Result<f64> {
    let trimmed = field.trim();
    match trimmed.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::parse(line, column, format!("invalid number `{trimmed}`"))),
    }
}

fn expect_label(record: &StringRecord, label: &str) -> Result<()> {
    let first = record.get(0).unwrap_or("").trim();
    if first.eq_ignore_ascii_case(label) {
        Ok(())
    } else {
        Err(Error::parse(
            line_of(record),
            1,
            format!("expected `{label}` in the first field, found `{first}`"),
        ))
    }
}

fn check_width(record: &StringRecord, expected: usize) -> Result<()> {
    if record.len() == expected {
        Ok(())
    } else {
        Err(Error::RaggedRow {
            line: line_of(record),
            expected,
            found: record.len(),
        })
    }
}

/// Matrix plus the raw weight row, if present, without checking the weights.
pub fn read_decision_csv(text: &str) -> Result<(DecisionMatrix, Option<Vec<f64>>)> {
    let records = records(text)?;
    let mut rows = records.iter();
    let header = rows.next().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    expect_label(header, "alternative")?;
    let width = header.len();
    if width < 2 {
        return Err(Error::parse(line_of(header), 2, "no criteria in header"));
    }
    let names: Vec<String> = header.iter().skip(1).map(|s| s.trim().to_string()).collect();

    let direction_row = rows
        .next()
        .ok_or_else(|| Error::parse(line_of(header) + 1, 1, "missing direction row"))?;
    expect_label(direction_row, "direction")?;
    check_width(direction_row, width)?;
    let mut criteria = Vec::with_capacity(names.len());
    for (name, token) in names.into_iter().zip(direction_row.iter().skip(1)) {
        let direction = token.parse::<Direction>().map_err(|_| Error::Direction {
            line: line_of(direction_row),
            token: token.trim().to_string(),
        })?;
        criteria.push(Criterion::new(name, direction));
    }

    let mut rows = rows.peekable();
    let mut weights = None;
    if let Some(row) = rows.peek() {
        if row.get(0).is_some_and(|f| f.trim().eq_ignore_ascii_case("weight")) {
            check_width(row, width)?;
            let line = line_of(row);
            weights = Some(
                row.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(c, f)| parse_real(f, line, c + 1))
                    .collect::<Result<Vec<_>>>()?,
            );
            rows.next();
        }
    }

    let mut alternatives = Vec::new();
    let mut values = Vec::new();
    for row in rows {
        check_width(row, width)?;
        let line = line_of(row);
        alternatives.push(row.get(0).unwrap_or("").trim().to_string());
        values.push(
            row.iter()
                .enumerate()
                .skip(1)
                .map(|(c, f)| parse_real(f, line, c + 1))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let matrix = DecisionMatrix::new(criteria, alternatives, values)?;
    Ok((matrix, weights))
}

pub fn parse_decision_csv(text: &str) -> Result<(DecisionMatrix, Option<WeightVector>)> {
    let (matrix, weights) = read_decision_csv(text)?;
    let weights = weights.map(WeightVector::new).transpose()?;
    if let Some(w) = &weights {
        if w.len() != matrix.n_criteria() {
            return Err(Error::DimensionMismatch {
                what: "weights",
                expected: matrix.n_criteria(),
                found: w.len(),
            });
        }
    }
    Ok((matrix, weights))
}

pub fn serialize_decision_csv(matrix: &DecisionMatrix, weights: Option<&WeightVector>) -> String {
    let mut writer = WriterBuilder::new()
        .terminator(Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut write = |fields: Vec<String>| writer.write_record(&fields).expect("in-memory write");

    let mut header = vec!["alternative".to_string()];
    header.extend(matrix.criteria().iter().map(|c| c.name.clone()));
    write(header);
    let mut directions = vec!["direction".to_string()];
    directions.extend(matrix.criteria().iter().map(|c| c.direction.as_str().to_string()));
    write(directions);
    if let Some(w) = weights {
        let mut row = vec!["weight".to_string()];
        row.extend(w.as_slice().iter().map(|&x| format_number(x)));
        write(row);
    }
    for (name, values) in matrix.alternatives().iter().zip(matrix.values()) {
        let mut row = vec![name.clone()];
        row.extend(values.iter().map(|&x| format_number(x)));
        write(row);
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

/// Judgment entry: a decimal or an exact fraction such as `1/3`.
pub fn parse_judgment(field: &str, line: u64, column: usize) -> Result<f64> {
    let trimmed = field.trim();
    match trimmed.split_once('/') {
        Some((num, den)) => {
            let num = parse_real(num, line, column)?;
            let den = parse_real(den, line, column)?;
            if den == 0.0 {
                return Err(Error::parse(line, column, "zero denominator"));
            }
            Ok(num / den)
        }
        None => parse_real(trimmed, line, column),
    }
}

pub fn parse_pairwise_csv(text: &str) -> Result<PairwiseComparisonMatrix> {
    let records = records(text)?;
    if records.is_empty() {
        return Err(Error::parse(1, 1, "empty input"));
    }
    let entries = records
        .iter()
        .map(|row| {
            let line = line_of(row);
            row.iter()
                .enumerate()
                .map(|(c, f)| parse_judgment(f, line, c + 1))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PairwiseComparisonMatrix::new(entries)
}

/// Weight list from a CSV line (`0.29,0.34,...`, optionally prefixed with `weight`).
pub fn parse_weights_csv(text: &str) -> Result<Vec<f64>> {
    let records = records(text)?;
    let row = records
        .iter()
        .find(|r| r.iter().any(|f| !f.trim().is_empty()))
        .ok_or_else(|| Error::parse(1, 1, "no weights"))?;
    let line = line_of(row);
    let skip = usize::from(row.get(0).is_some_and(|f| f.trim().eq_ignore_ascii_case("weight")));
    row.iter()
        .enumerate()
        .skip(skip)
        .map(|(c, f)| parse_real(f, line, c + 1))
        .collect()
}
