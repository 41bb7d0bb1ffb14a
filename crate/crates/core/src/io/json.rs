use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::round_sig12;
use crate::ahp::ConsistencyReport;
use crate::error::{Error, Result};
use crate::model::{EvaluationResult, PipelineMode, WeightVector};
use crate::sensitivity::SensitivityReport;

/// JSON number written with at most 12 significant digits; integral values
/// are written without a fraction (`1`, not `1.0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JsonNumber(pub f64);

impl Serialize for JsonNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let x = round_sig12(self.0);
        if x == x.trunc() && x.abs() < 1e15 {
            serializer.serialize_i64(x as i64)
        } else {
            serializer.serialize_f64(x)
        }
    }
}

impl<'de> Deserialize<'de> for JsonNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        f64::deserialize(deserializer).map(JsonNumber)
    }
}

fn numbers(xs: &[f64]) -> Vec<JsonNumber> {
    xs.iter().copied().map(JsonNumber).collect()
}

fn floats(xs: &[JsonNumber]) -> Vec<f64> {
    xs.iter().map(|x| x.0).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreJson {
    #[serde(rename = "S")]
    pub s: JsonNumber,
    #[serde(rename = "K")]
    pub k: JsonNumber,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternativeJson {
    pub name: String,
    #[serde(rename = "S")]
    pub s: JsonNumber,
    #[serde(rename = "K")]
    pub k: JsonNumber,
    pub rank: usize,
}

/// Weighted normalized matrix; `rows[0]` labels the optimal row, the rest
/// follow the input order of the alternatives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedMatrixJson {
    pub columns: Vec<String>,
    pub rows: Vec<String>,
    pub values: Vec<Vec<JsonNumber>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultJson {
    pub mode: PipelineMode,
    pub optimal: ScoreJson,
    /// Sorted by rank, best first.
    pub alternatives: Vec<AlternativeJson>,
    pub weighted_matrix: WeightedMatrixJson,
}

pub const OPTIMAL_ROW_LABEL: &str = "A0";

impl From<&EvaluationResult> for ResultJson {
    fn from(r: &EvaluationResult) -> Self {
        let alternatives = r
            .ranking
            .iter()
            .enumerate()
            .map(|(pos, name)| {
                let i = r
                    .alternatives
                    .iter()
                    .position(|a| a == name)
                    .expect("ranked name exists")
                    + 1;
                AlternativeJson {
                    name: name.clone(),
                    s: JsonNumber(r.s_scores[i]),
                    k: JsonNumber(r.k_degrees[i]),
                    rank: pos + 1,
                }
            })
            .collect();
        let mut rows = vec![OPTIMAL_ROW_LABEL.to_string()];
        rows.extend(r.alternatives.iter().cloned());
        ResultJson {
            mode: r.mode,
            optimal: ScoreJson {
                s: JsonNumber(r.s_scores[0]),
                k: JsonNumber(r.k_degrees[0]),
            },
            alternatives,
            weighted_matrix: WeightedMatrixJson {
                columns: r.criteria.clone(),
                rows,
                values: r.weighted_matrix.iter().map(|row| numbers(row)).collect(),
            },
        }
    }
}

impl TryFrom<ResultJson> for EvaluationResult {
    type Error = Error;

    fn try_from(doc: ResultJson) -> Result<Self> {
        let inconsistent = |message: &str| Error::parse(0, 0, message);
        let names: Vec<String> = doc.weighted_matrix.rows.iter().skip(1).cloned().collect();
        if names.len() != doc.alternatives.len() || doc.weighted_matrix.values.len() != names.len() + 1 {
            return Err(inconsistent("weighted_matrix rows do not match alternatives"));
        }
        let mut s_scores = vec![doc.optimal.s.0];
        let mut k_degrees = vec![doc.optimal.k.0];
        for name in &names {
            let entry = doc
                .alternatives
                .iter()
                .find(|a| &a.name == name)
                .ok_or_else(|| inconsistent("alternative missing from ranking"))?;
            s_scores.push(entry.s.0);
            k_degrees.push(entry.k.0);
        }
        let mut ranked: Vec<&AlternativeJson> = doc.alternatives.iter().collect();
        ranked.sort_by_key(|a| a.rank);
        Ok(EvaluationResult {
            mode: doc.mode,
            criteria: doc.weighted_matrix.columns.clone(),
            alternatives: names,
            s_scores,
            k_degrees,
            ranking: ranked.into_iter().map(|a| a.name.clone()).collect(),
            weighted_matrix: doc.weighted_matrix.values.iter().map(|r| floats(r)).collect(),
        })
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON documents serialize");
    text.push('\n');
    text
}

pub fn serialize_result_json(result: &EvaluationResult) -> String {
    render_json(&ResultJson::from(result))
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line() as u64, e.column(), e.to_string())
}

pub fn parse_result_json(text: &str) -> Result<EvaluationResult> {
    let doc: ResultJson = serde_json::from_str(text).map_err(json_error)?;
    doc.try_into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyJson {
    pub lambda_max: JsonNumber,
    pub consistency_index: JsonNumber,
    pub random_index: JsonNumber,
    pub consistency_ratio: JsonNumber,
    pub acceptable: bool,
}

/// Derived weights together with the consistency report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AhpJson {
    pub weights: Vec<JsonNumber>,
    pub consistency: ConsistencyJson,
}

impl AhpJson {
    pub fn new(weights: &WeightVector, report: &ConsistencyReport) -> Self {
        Self {
            weights: numbers(weights.as_slice()),
            consistency: ConsistencyJson {
                lambda_max: JsonNumber(report.lambda_max),
                consistency_index: JsonNumber(report.consistency_index),
                random_index: JsonNumber(report.random_index),
                consistency_ratio: JsonNumber(report.consistency_ratio),
                acceptable: report.acceptable,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryJson {
    pub name: String,
    #[serde(rename = "K")]
    pub k: Vec<JsonNumber>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub low: JsonNumber,
    pub high: JsonNumber,
    pub resolution: JsonNumber,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SensitivityJson {
    pub criterion: String,
    pub mode: PipelineMode,
    pub baseline_weight: JsonNumber,
    pub grid: Vec<JsonNumber>,
    pub k_trajectories: Vec<TrajectoryJson>,
    pub rankings: Vec<Vec<String>>,
    pub rank_change_points: Vec<usize>,
    pub stability_interval: Option<IntervalJson>,
}

impl From<&SensitivityReport> for SensitivityJson {
    fn from(r: &SensitivityReport) -> Self {
        Self {
            criterion: r.criterion.clone(),
            mode: r.mode,
            baseline_weight: JsonNumber(r.baseline_weight),
            grid: numbers(&r.grid),
            k_trajectories: r
                .alternatives
                .iter()
                .zip(&r.k_trajectories)
                .map(|(name, k)| TrajectoryJson {
                    name: name.clone(),
                    k: numbers(k),
                })
                .collect(),
            rankings: r.rankings.clone(),
            rank_change_points: r.rank_change_points.clone(),
            stability_interval: r.stability_interval.map(|s| IntervalJson {
                low: JsonNumber(s.low),
                high: JsonNumber(s.high),
                resolution: JsonNumber(s.resolution),
            }),
        }
    }
}
