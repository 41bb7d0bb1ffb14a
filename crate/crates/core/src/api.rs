//! Stateless JSON-over-HTTP facade.
//!
//! | route                    | body                                              |
//! |--------------------------|---------------------------------------------------|
//! | `POST /api/evaluate`     | `{matrix, weights, mode}` → result document       |
//! | `POST /api/ahp/weights`  | `{matrices: [pairwise...]}` → weights/consistency |
//! | `POST /api/sensitivity`  | `{matrix, weights, mode, criterion, grid}`        |
//! | `GET  /api/health`       | `{status, version}`                               |
//!
//! Errors come back as `{"error": code, "message": text}`: 400 for bodies
//! that are not valid JSON or do not have the expected shape, 422 for domain
//! violations.

use std::net::SocketAddr;

use axum::body::Bytes;
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::{Deserialize, Serialize};
use tower_http::cors::CorsLayer;

use crate::ahp::{weigh, PairwiseComparisonMatrix};
use crate::aras::evaluate;
use crate::error::Error;
use crate::io::{render_json, AhpJson, ResultJson, SensitivityJson};
use crate::model::{Criterion, DecisionMatrix, PipelineMode, WeightVector};
use crate::sensitivity::{weight_sweep_with_resolution, DEFAULT_RESOLUTION};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// JSON body plus status, independent of the HTTP stack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reply {
    pub status: StatusCode,
    pub body: String,
}

impl Reply {
    fn ok<T: Serialize>(value: &T) -> Self {
        Self {
            status: StatusCode::OK,
            body: render_json(value),
        }
    }

    fn error(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        #[derive(Serialize)]
        struct ErrorBody<'a> {
            error: &'a str,
            message: String,
        }
        Self {
            status,
            body: render_json(&ErrorBody {
                error: code,
                message: message.into(),
            }),
        }
    }

    fn domain(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => StatusCode::BAD_REQUEST,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        Self::error(status, e.code(), e.to_string())
    }
}

impl IntoResponse for Reply {
    fn into_response(self) -> Response {
        (self.status, [(header::CONTENT_TYPE, "application/json")], self.body).into_response()
    }
}

fn decode<'a, T: Deserialize<'a>>(body: &'a [u8]) -> Result<T, Reply> {
    if body.iter().all(u8::is_ascii_whitespace) {
        return Err(Reply::error(
            StatusCode::BAD_REQUEST,
            "MalformedJson",
            "empty request body",
        ));
    }
    serde_json::from_slice(body).map_err(|e| {
        let code = if e.is_data() { "InvalidRequest" } else { "MalformedJson" };
        Reply::error(StatusCode::BAD_REQUEST, code, e.to_string())
    })
}

/// Matrix as sent by clients; validated after decoding so violations map to 422.
#[derive(Debug, Deserialize)]
struct MatrixBody {
    criteria: Vec<Criterion>,
    alternatives: Vec<String>,
    values: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
struct EvaluateRequest {
    matrix: MatrixBody,
    weights: Vec<f64>,
    #[serde(default)]
    mode: PipelineMode,
    #[serde(default)]
    renormalize: bool,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Judgment {
    Number(f64),
    Text(String),
}

#[derive(Debug, Deserialize)]
struct AhpRequest {
    matrices: Vec<Vec<Vec<Judgment>>>,
}

#[derive(Debug, Deserialize)]
struct SensitivityRequest {
    matrix: MatrixBody,
    weights: Vec<f64>,
    #[serde(default)]
    mode: PipelineMode,
    #[serde(default)]
    renormalize: bool,
    criterion: String,
    grid: Vec<f64>,
    resolution: Option<f64>,
}

fn build_inputs(
    matrix: MatrixBody,
    weights: Vec<f64>,
    renormalize: bool,
) -> Result<(DecisionMatrix, WeightVector), Error> {
    let matrix = DecisionMatrix::new(matrix.criteria, matrix.alternatives, matrix.values)?;
    let weights = if renormalize {
        WeightVector::renormalized(weights)?
    } else {
        WeightVector::new(weights)?
    };
    crate::model::validate_matrix(matrix, weights)
}

pub fn handle_evaluate(body: &[u8]) -> Reply {
    let request: EvaluateRequest = match decode(body) {
        Ok(r) => r,
        Err(reply) => return reply,
    };
    let outcome = build_inputs(request.matrix, request.weights, request.renormalize)
        .and_then(|(m, w)| evaluate(&m, &w, request.mode));
    match outcome {
        Ok(result) => Reply::ok(&ResultJson::from(&result)),
        Err(e) => Reply::domain(e),
    }
}

pub fn handle_ahp_weights(body: &[u8]) -> Reply {
    let request: AhpRequest = match decode(body) {
        Ok(r) => r,
        Err(reply) => return reply,
    };
    let outcome = request
        .matrices
        .into_iter()
        .map(|grid| {
            let entries = grid
                .into_iter()
                .enumerate()
                .map(|(i, row)| {
                    row.into_iter()
                        .enumerate()
                        .map(|(j, entry)| match entry {
                            Judgment::Number(x) => Ok(x),
                            Judgment::Text(text) => crate::io::parse_judgment(&text, i as u64 + 1, j + 1),
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            PairwiseComparisonMatrix::new(entries)
        })
        .collect::<Result<Vec<_>, _>>()
        .and_then(|matrices| weigh(&matrices));
    match outcome {
        Ok((weights, report)) => Reply::ok(&AhpJson::new(&weights, &report)),
        Err(e) => Reply::domain(e),
    }
}

pub fn handle_sensitivity(body: &[u8]) -> Reply {
    let request: SensitivityRequest = match decode(body) {
        Ok(r) => r,
        Err(reply) => return reply,
    };
    let outcome = build_inputs(request.matrix, request.weights, request.renormalize).and_then(|(m, w)| {
        weight_sweep_with_resolution(
            &m,
            &w,
            request.mode,
            &request.criterion,
            &request.grid,
            request.resolution.unwrap_or(DEFAULT_RESOLUTION),
        )
    });
    match outcome {
        Ok(report) => Reply::ok(&SensitivityJson::from(&report)),
        Err(e) => Reply::domain(e),
    }
}

pub fn handle_health() -> Reply {
    #[derive(Serialize)]
    struct Health {
        status: &'static str,
        version: &'static str,
    }
    Reply::ok(&Health {
        status: "ok",
        version: VERSION,
    })
}

#[derive(Debug, Clone, Default)]
pub struct ServiceOptions {
    /// Origin allowed to call the API from a browser; CORS is off when `None`.
    pub cors_origin: Option<String>,
}

pub fn router(options: &ServiceOptions) -> Result<Router, String> {
    let mut app = Router::new()
        .route(
            "/api/evaluate",
            post(|body: Bytes| async move { handle_evaluate(&body) }),
        )
        .route(
            "/api/ahp/weights",
            post(|body: Bytes| async move { handle_ahp_weights(&body) }),
        )
        .route(
            "/api/sensitivity",
            post(|body: Bytes| async move { handle_sensitivity(&body) }),
        )
        .route("/api/health", get(|| async { handle_health() }));
    if let Some(origin) = &options.cors_origin {
        let origin = HeaderValue::from_str(origin).map_err(|e| format!("invalid CORS origin `{origin}`: {e}"))?;
        app = app.layer(
            CorsLayer::new()
                .allow_origin(origin)
                .allow_methods([Method::GET, Method::POST])
                .allow_headers([header::CONTENT_TYPE]),
        );
    }
    Ok(app)
}

pub async fn serve(addr: SocketAddr, options: ServiceOptions) -> std::io::Result<()> {
    let app = router(&options).map_err(std::io::Error::other)?;
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, app).await
}
