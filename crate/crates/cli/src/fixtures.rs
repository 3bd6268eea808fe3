//! Fixture lookup: `<dir>/toric/<name>.json` or `<dir>/paired/<name>.json` first, then the
//! fixtures built into the library.
//!
//! `<dir>` is `$OKOUNKOV_FIXTURES` when set, else the `fixtures/` directory shipped with this
//! crate. A toric fixture file holds `{"fan", "divisor", "flags"}`; a paired fixture file holds
//! `{"model", "class", "points", "body", "n", "weights"}`.

use std::path::PathBuf;

use serde::Deserialize;

use okounkov_core::exactgeom::Polytope;
use okounkov_core::invariants::{fixtures as paired, WeightVec};
use okounkov_core::surfacepic::{PicClass, SurfaceModel};
use okounkov_core::toricbody::{fixtures as toric, Fan, ToricDivisor, ToricFlagSpec};

use crate::CliError;

pub const ENV_VAR: &str = "OKOUNKOV_FIXTURES";

pub fn fixture_dir() -> PathBuf {
    std::env::var_os(ENV_VAR)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")))
}

#[derive(Debug, Clone, Deserialize)]
pub struct ToricData {
    pub fan: Fan,
    pub divisor: ToricDivisor,
    pub flags: ToricFlagSpec,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PairedData {
    pub model: SurfaceModel,
    pub class: PicClass,
    pub points: Vec<usize>,
    pub body: Polytope,
    pub n: usize,
    pub weights: Vec<WeightVec>,
}

fn from_file<T: serde::de::DeserializeOwned>(group: &str, name: &str) -> Result<Option<T>, CliError> {
    if name.is_empty() || name.contains(['/', '\\']) || name.starts_with('.') {
        return Err(CliError::input(format!("$.input.fixture: invalid fixture name {name:?}")));
    }
    let path = fixture_dir().join(group).join(format!("{name}.json"));
    let Ok(text) = std::fs::read_to_string(&path) else {
        return Ok(None);
    };
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de)
        .map(Some)
        .map_err(|e| CliError::input(format!("{}: {}: {}", path.display(), e.path(), e.inner())))
}

pub fn toric(name: &str) -> Result<ToricData, CliError> {
    if let Some(d) = from_file::<ToricData>("toric", name)? {
        return Ok(d);
    }
    toric::by_name(name)
        .map(|f| ToricData { fan: f.fan, divisor: f.divisor, flags: f.flags })
        .ok_or_else(|| CliError::input(format!("$.input.fixture: unknown toric fixture {name:?}")))
}

pub fn paired(name: &str) -> Result<PairedData, CliError> {
    if let Some(d) = from_file::<PairedData>("paired", name)? {
        return Ok(d);
    }
    paired::by_name(name)
        .map_err(CliError::from)?
        .map(|f| PairedData { model: f.model, class: f.class, points: f.points, body: f.body, n: f.n, weights: f.weights })
        .ok_or_else(|| CliError::input(format!("$.input.fixture: unknown paired fixture {name:?}")))
}
