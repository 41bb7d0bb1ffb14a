//! Starts the HTTP service, sends one evaluation request to it and shuts down.
//!
//! `mcda serve --port 8080` runs the same router in the foreground.

use axum::body::Body;
use axum::http::{header, Request};
use mcda::api::{router, ServiceOptions};
use tower::ServiceExt;

#[tokio::main]
async fn main() -> Result<(), Box<dyn std::error::Error>> {
    let app = router(&ServiceOptions {
        cors_origin: Some("http://localhost:5173".into()),
    })?;

    let body = serde_json::json!({
        "matrix": {
            "criteria": [
                {"name": "NPV", "direction": "max"},
                {"name": "ROR", "direction": "max"},
                {"name": "PB", "direction": "min"},
                {"name": "PR", "direction": "min"}
            ],
            "alternatives": mcda::fixtures::CASE_STUDY_ALTERNATIVES,
            "values": [[10, 3, 6, 7], [13, 5, 7, 9], [9, 1, 8, 1], [11, 3, 8, 7], [12, 5, 10, 5]]
        },
        "weights": mcda::fixtures::CASE_STUDY_WEIGHTS,
        "mode": "paper-2011"
    });
    let request = Request::post("/api/evaluate")
        .header(header::CONTENT_TYPE, "application/json")
        .body(Body::from(body.to_string()))?;

    let response = app.oneshot(request).await?;
    println!("status {}", response.status());
    let bytes = axum::body::to_bytes(response.into_body(), 1 << 20).await?;
    print!("{}", String::from_utf8_lossy(&bytes));
    Ok(())
}
