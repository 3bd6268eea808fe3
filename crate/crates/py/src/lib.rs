//! Python bindings. Structured values cross the boundary as JSON strings in the same format
//! the CLI reads and writes; exact numbers come back as strings such as `"1/2"` or `"2*sqrt(2)"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::de::DeserializeOwned;

use okounkov_core::exactgeom::{parse_rat, Polytope, Rat};
use okounkov_core::invariants::{self, WeightVec};
use okounkov_core::surfacepic::{PicClass, SurfaceModel};
use okounkov_core::toricbody::{self, fixtures, Fan, ToricDivisor, ToricFlagSpec};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: DeserializeOwned>(what: &str, s: &str) -> PyResult<T> {
    serde_json::from_str(s).map_err(|e| PyValueError::new_err(format!("{what}: {e}")))
}

fn dump<T: serde::Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(err)
}

fn rats(xs: &[String]) -> PyResult<Vec<Rat>> {
    xs.iter().map(|x| parse_rat(x).map_err(err)).collect()
}

/// Names of the shipped toric fixtures.
#[pyfunction]
fn toric_fixtures() -> Vec<&'static str> {
    fixtures::all().into_iter().map(|f| f.name).collect()
}

/// Body of a shipped toric fixture, as polytope JSON.
#[pyfunction]
fn toric_fixture_body(name: &str) -> PyResult<String> {
    let f = fixtures::by_name(name).ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))?;
    dump(&toricbody::extended_body_toric(&f.fan, &f.divisor, &f.flags).map_err(err)?)
}

#[pyfunction]
fn toric_body(fan: &str, divisor: &str, flags: &str) -> PyResult<String> {
    let fan: Fan = parse("fan", fan)?;
    let divisor: ToricDivisor = parse("divisor", divisor)?;
    let flags: ToricFlagSpec = parse("flags", flags)?;
    dump(&toricbody::extended_body_toric(&fan, &divisor, &flags).map_err(err)?)
}

/// Intrinsic-dimensional volume of a polytope.
#[pyfunction]
fn volume(polytope: &str) -> PyResult<String> {
    let p: Polytope = parse("polytope", polytope)?;
    Ok(p.volume().to_string())
}

#[pyfunction]
fn seshadri(model: &str, class: &str, points: Vec<usize>, weights: Vec<u64>) -> PyResult<String> {
    let model: SurfaceModel = parse("model", model)?;
    let class: PicClass = parse("class", class)?;
    let w = WeightVec::new(weights).map_err(err)?;
    Ok(invariants::seshadri_eps_at(&model, &class, &points, &w).map_err(err)?.to_string())
}

#[pyfunction]
fn nakayama(model: &str, class: &str, points: Vec<usize>) -> PyResult<String> {
    let model: SurfaceModel = parse("model", model)?;
    let class: PicClass = parse("class", class)?;
    Ok(invariants::nakayama_mu_at(&model, &class, &points).map_err(err)?.to_string())
}

#[pyfunction]
fn xi(body: &str, weights: Vec<u64>, n: usize) -> PyResult<String> {
    let body: Polytope = parse("body", body)?;
    let w = WeightVec::new(weights).map_err(err)?;
    Ok(invariants::xi_constant(&body, &w, n).map_err(err)?.to_string())
}

#[pyfunction]
fn nagata(r: u64, d: String, m: Vec<String>) -> PyResult<bool> {
    let d = parse_rat(&d).map_err(err)?;
    Ok(invariants::nagata_check(r, &d, &rats(&m)?))
}

#[pymodule]
fn okounkov(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(toric_fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(toric_fixture_body, m)?)?;
    m.add_function(wrap_pyfunction!(toric_body, m)?)?;
    m.add_function(wrap_pyfunction!(volume, m)?)?;
    m.add_function(wrap_pyfunction!(seshadri, m)?)?;
    m.add_function(wrap_pyfunction!(nakayama, m)?)?;
    m.add_function(wrap_pyfunction!(xi, m)?)?;
    m.add_function(wrap_pyfunction!(nagata, m)?)?;
    Ok(())
}
