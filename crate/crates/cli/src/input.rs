use std::path::Path;

use gitkit_core::polytopes::{hull, Polytope};
use gitkit_core::rational::{parse_q, parse_q_list};
use gitkit_core::torus_git::ProjPoint;
use gitkit_core::{DominantWeight, Error, Weight, Q};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

/// Failure reported on stderr as `{code, message, context}`.
#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub context: Value,
}

impl CliError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        CliError { code: code.into(), message: message.into(), context: Value::Null }
    }

    pub fn to_json(&self) -> Value {
        json!({ "code": self.code, "message": self.message, "context": self.context })
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::new(e.code(), e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn qs(s: &str) -> CliResult<Vec<Q>> {
    Ok(parse_q_list(s)?)
}

pub fn q1(s: &str) -> CliResult<Q> {
    Ok(parse_q(s)?)
}

pub fn ints(s: &str) -> CliResult<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::new("parse", format!("not an integer: {x:?}"))))
        .collect()
}

pub fn indices(s: &str) -> CliResult<Vec<usize>> {
    ints(s)?
        .into_iter()
        .map(|x| usize::try_from(x).map_err(|_| CliError::new("parse", format!("negative index {x}"))))
        .collect()
}

pub fn floats(s: &str) -> CliResult<Vec<f64>> {
    s.split(',').map(|x| x.trim().parse().map_err(|_| CliError::new("parse", format!("not a number: {x:?}")))).collect()
}

pub fn weight(s: &str) -> CliResult<Weight> {
    Ok(Weight::new(qs(s)?))
}

pub fn dominant(s: &str) -> CliResult<DominantWeight> {
    Ok(DominantWeight::new(weight(s)?)?)
}

/// `"a,b;c,d"` as a list of weights.
pub fn weights(s: &str) -> CliResult<Vec<Weight>> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(weight).collect()
}

fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::new("malformed_json", format!("{what}: {e}")))
}

/// Text of a structured argument: file contents if it names a file, else the
/// argument itself.
fn source(arg: &str) -> CliResult<String> {
    let t = arg.trim();
    if t.starts_with('{') || t.starts_with('[') || !Path::new(t).is_file() {
        return Ok(t.to_string());
    }
    std::fs::read_to_string(t).map_err(|e| CliError::new("io", format!("{t}: {e}")))
}

fn looks_like_json(s: &str) -> bool {
    s.starts_with('{') || s.starts_with('[')
}

pub fn load<T: DeserializeOwned>(arg: &str, what: &str) -> CliResult<T> {
    parse_json(&source(arg)?, what)
}

pub fn point(arg: &str) -> CliResult<ProjPoint> {
    load(arg, "point")
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointsInput {
    Object { vertices: Vec<Weight> },
    List(Vec<Weight>),
}

pub fn weight_list(arg: &str) -> CliResult<Vec<Weight>> {
    let text = source(arg)?;
    if !looks_like_json(&text) {
        return weights(&text);
    }
    Ok(match parse_json::<PointsInput>(&text, "weights")? {
        PointsInput::Object { vertices } | PointsInput::List(vertices) => vertices,
    })
}

pub fn polytope(arg: &str) -> CliResult<Polytope> {
    Ok(hull(&weight_list(arg)?)?)
}
