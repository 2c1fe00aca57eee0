//! Stateless local HTTP service over the core operations.
//!
//! Every handler is a pure function of the request body. Polygons travel as
//! [`PolygonDocument`]s; responses are serialized with a fixed field order
//! so identical requests produce identical bytes.

use std::net::{Ipv4Addr, SocketAddr};

use axum::body::Bytes;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use popkit_core::{
    find_pockets, pocket_flip, pocket_flipturn, pop, popturn, AlternatingSpec, Pocket, Polygon, PolygonError,
    Rational, SignVector,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::document::{DocumentError, PolygonDocument};
use crate::svg::{render_svg, SvgOptions};

pub const DEFAULT_PORT: u16 = 8765;
pub const PORT_ENV: &str = "POPKIT_PORT";

/// `$POPKIT_PORT` when set and valid, otherwise [`DEFAULT_PORT`].
pub fn default_port() -> u16 {
    std::env::var(PORT_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_PORT)
}

pub fn router() -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/polygon/pop", post(pop_handler))
        .route("/polygon/popturn", post(popturn_handler))
        .route("/polygon/check", post(check_handler))
        .route("/polygon/pockets", post(pockets_handler))
        .route("/polygon/flip", post(flip_handler))
        .route("/polygon/flipturn", post(flipturn_handler))
        .route("/alternating/build", post(build_handler))
        .route("/render", post(render_handler))
}

/// Serve on the loopback interface until the process is stopped.
pub async fn serve(port: u16) -> std::io::Result<()> {
    let addr = SocketAddr::from((Ipv4Addr::LOCALHOST, port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router()).await
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    error: &'static str,
    path: Option<String>,
    message: Option<String>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<&'a str>,
}

impl ApiError {
    fn malformed(path: impl Into<String>, message: impl ToString) -> Self {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            error: "malformed",
            path: Some(path.into()),
            message: Some(message.to_string()),
        }
    }

    fn unprocessable(error: &'static str) -> Self {
        ApiError { status: StatusCode::UNPROCESSABLE_ENTITY, error, path: None, message: None }
    }

    fn from_document(prefix: &str, e: DocumentError) -> Self {
        ApiError::malformed(format!("{prefix}.{}", e.path()), e)
    }

    fn from_polygon(e: PolygonError, index_field: &str) -> Self {
        match e {
            PolygonError::Hairpin(_) => ApiError::unprocessable("hairpin"),
            PolygonError::NotSimple => ApiError::unprocessable("not-simple"),
            PolygonError::StalePocket(..) => ApiError::unprocessable("stale-pocket"),
            PolygonError::IndexOutOfRange { .. } => ApiError::malformed(index_field, e),
            other => ApiError::malformed("polygon", other),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody {
            error: self.error,
            path: self.path.as_deref(),
            message: self.message.as_deref(),
        };
        (self.status, json_bytes(&body)).into_response()
    }
}

struct Json(Vec<u8>);

impl IntoResponse for Json {
    fn into_response(self) -> Response {
        ([(header::CONTENT_TYPE, "application/json")], self.0).into_response()
    }
}

fn json_bytes(value: &impl Serialize) -> Json {
    Json(serde_json::to_vec(value).expect("response serializes"))
}

fn parse_body<T: DeserializeOwned>(body: &[u8]) -> Result<T, ApiError> {
    let de = &mut serde_json::Deserializer::from_slice(body);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        ApiError::malformed(if path == "." { String::new() } else { path }, e.inner())
    })
}

fn polygon_of(doc: &PolygonDocument) -> Result<Polygon, ApiError> {
    doc.to_polygon().map_err(|e| ApiError::from_document("polygon", e))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonRequest {
    polygon: PolygonDocument,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexRequest {
    polygon: PolygonDocument,
    vertex: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PocketRequest {
    polygon: PolygonDocument,
    pocket_index: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BuildRequest {
    x: String,
    y: String,
    sigma: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RenderRequest {
    polygon: PolygonDocument,
    #[serde(default)]
    options: RenderOptions,
}

#[derive(Deserialize)]
#[serde(default, deny_unknown_fields)]
struct RenderOptions {
    show_axes: bool,
    label_vertices: bool,
    canvas_size: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        let d = SvgOptions::default();
        RenderOptions { show_axes: d.show_axes, label_vertices: d.label_vertices, canvas_size: d.canvas_size }
    }
}

#[derive(Serialize)]
struct PolygonResponse {
    polygon: PolygonDocument,
}

#[derive(Serialize)]
struct PocketsResponse {
    pockets: Vec<Pocket>,
}

fn respond_polygon(result: Polygon, source: &PolygonDocument) -> Json {
    json_bytes(&PolygonResponse {
        polygon: PolygonDocument::from_polygon(&result).with_metadata(source.metadata.clone()),
    })
}

async fn health() -> &'static str {
    "ok"
}

type Handled = Result<Json, ApiError>;

fn vertex_op(body: &[u8], op: fn(&Polygon, usize) -> Result<Polygon, PolygonError>) -> Handled {
    let req: VertexRequest = parse_body(body)?;
    let polygon = polygon_of(&req.polygon)?;
    let result = op(&polygon, req.vertex).map_err(|e| ApiError::from_polygon(e, "vertex"))?;
    Ok(respond_polygon(result, &req.polygon))
}

async fn pop_handler(body: Bytes) -> Handled {
    vertex_op(&body, pop)
}

async fn popturn_handler(body: Bytes) -> Handled {
    vertex_op(&body, popturn)
}

async fn check_handler(body: Bytes) -> Handled {
    let req: PolygonRequest = parse_body(&body)?;
    Ok(json_bytes(&polygon_of(&req.polygon)?.classify()))
}

async fn pockets_handler(body: Bytes) -> Handled {
    let req: PolygonRequest = parse_body(&body)?;
    let polygon = polygon_of(&req.polygon)?;
    let pockets = find_pockets(&polygon).map_err(|e| ApiError::from_polygon(e, "polygon"))?;
    Ok(json_bytes(&PocketsResponse { pockets }))
}

fn pocket_op(body: &[u8], op: fn(&Polygon, &Pocket) -> Result<Polygon, PolygonError>) -> Handled {
    let req: PocketRequest = parse_body(body)?;
    let polygon = polygon_of(&req.polygon)?;
    let pockets = find_pockets(&polygon).map_err(|e| ApiError::from_polygon(e, "polygon"))?;
    let pocket = pockets.get(req.pocket_index).ok_or_else(|| {
        ApiError::malformed(
            "pocket_index",
            format!("pocket {} out of range, polygon has {} pockets", req.pocket_index, pockets.len()),
        )
    })?;
    let result = op(&polygon, pocket).map_err(|e| ApiError::from_polygon(e, "pocket_index"))?;
    Ok(respond_polygon(result, &req.polygon))
}

async fn flip_handler(body: Bytes) -> Handled {
    pocket_op(&body, pocket_flip)
}

async fn flipturn_handler(body: Bytes) -> Handled {
    pocket_op(&body, pocket_flipturn)
}

fn rationals(field: &str, list: &str) -> Result<Vec<Rational>, ApiError> {
    list.split(',')
        .enumerate()
        .map(|(i, t)| t.trim().parse().map_err(|e| ApiError::malformed(format!("{field}[{i}]"), e)))
        .collect()
}

async fn build_handler(body: Bytes) -> Handled {
    let req: BuildRequest = parse_body(&body)?;
    let x = rationals("x", &req.x)?;
    let y = rationals("y", &req.y)?;
    let sigma: SignVector = req.sigma.parse().map_err(|e| ApiError::malformed("sigma", e))?;
    let spec = AlternatingSpec::new(x, y, sigma).map_err(|e| ApiError::malformed("", e))?;
    let doc = PolygonDocument::from_polygon(&spec.build());
    Ok(json_bytes(&PolygonResponse { polygon: doc }))
}

async fn render_handler(body: Bytes) -> Result<Response, ApiError> {
    let req: RenderRequest = parse_body(&body)?;
    let polygon = polygon_of(&req.polygon)?;
    if req.options.canvas_size == 0 {
        return Err(ApiError::malformed("options.canvas_size", "canvas_size must be positive"));
    }
    let options = SvgOptions {
        show_axes: req.options.show_axes,
        label_vertices: req.options.label_vertices,
        canvas_size: req.options.canvas_size,
    };
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], render_svg(&polygon, &options)).into_response())
}
