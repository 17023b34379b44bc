//! Local HTTP service used by the watch-face front end.
//!
//! * `POST /parse` with `{"query": "...", "mode": "bl"|"iv"|"ivt"}`
//! * `GET /lexicon/version`
//! * `GET /health`
//!
//! The lexicon is shared read-only between requests.

use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use qsq_core::{Lexicon, ParserMode};
use serde::Deserialize;
use serde_json::json;
use tokio::net::TcpListener;
use tower_http::cors::CorsLayer;

use crate::analyze;

#[derive(Debug, Deserialize)]
struct ParseRequest {
    query: String,
    #[serde(default)]
    mode: ParserMode,
}

fn bad_request(message: impl Into<String>) -> Response {
    (
        StatusCode::BAD_REQUEST,
        Json(json!({ "error": message.into() })),
    )
        .into_response()
}

async fn parse_handler(State(lex): State<Arc<Lexicon>>, body: Bytes) -> Response {
    let request: ParseRequest = match serde_json::from_slice(&body) {
        Ok(r) => r,
        Err(e) => return bad_request(format!("invalid request body: {e}")),
    };
    match analyze(&lex, &request.query, request.mode) {
        // same serializer as the CLI, so bodies match `qsq parse` byte for byte
        Ok(analysis) => (
            [(header::CONTENT_TYPE, "application/json")],
            analysis.to_json(),
        )
            .into_response(),
        Err(e) => bad_request(e.to_string()),
    }
}

async fn version_handler(State(lex): State<Arc<Lexicon>>) -> Json<serde_json::Value> {
    Json(json!({ "version": lex.version() }))
}

async fn health_handler() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok" }))
}

pub fn router(lex: Arc<Lexicon>) -> Router {
    Router::new()
        .route("/parse", post(parse_handler))
        .route("/lexicon/version", get(version_handler))
        .route("/health", get(health_handler))
        .layer(CorsLayer::permissive())
        .with_state(lex)
}

/// Serves on an already-bound listener until the future is dropped.
pub async fn serve_on(listener: TcpListener, lex: Arc<Lexicon>) -> std::io::Result<()> {
    axum::serve(listener, router(lex)).await
}

pub async fn serve(addr: SocketAddr, lex: Arc<Lexicon>) -> std::io::Result<()> {
    let listener = TcpListener::bind(addr).await?;
    log_endpoints(listener.local_addr()?);
    axum::serve(listener, router(lex))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

fn log_endpoints(addr: SocketAddr) {
    eprintln!("qsq serving on http://{addr}");
    eprintln!("  POST /parse            {{\"query\": ..., \"mode\": \"bl|iv|ivt\"}}");
    eprintln!("  GET  /lexicon/version");
    eprintln!("  GET  /health");
}
