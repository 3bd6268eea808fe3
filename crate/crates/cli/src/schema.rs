//! Job-file validation. Every offending path is reported, not just the first.

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{Map, Value};

use okounkov_core::exactgeom::rat::serde_rat;
use okounkov_core::exactgeom::{Polytope, Rat, RatVec};
use okounkov_core::invariants::WeightVec;
use okounkov_core::surfacepic::{PicClass, SurfaceModel};
use okounkov_core::toricbody::{Fan, ToricDivisor, ToricFlagSpec};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Deserialize)]
pub struct R(#[serde(with = "serde_rat")] pub Rat);

/// Element-wise so that a bad entry is reported with its index.
pub struct RList(pub RatVec);

impl<'de> Deserialize<'de> for RList {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<R>::deserialize(d)?;
        Ok(RList(v.into_iter().map(|r| r.0).collect()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ty {
    Rat,
    RatList,
    Count,
    CountList,
    Name,
    Model,
    Class,
    Polytope,
    Fan,
    Divisor,
    Flags,
    Weights,
    WeightsList,
}

impl Ty {
    fn check(self, v: &Value) -> Result<(), (String, String)> {
        match self {
            Ty::Rat => probe::<R>(v),
            Ty::RatList => probe::<RList>(v),
            Ty::Count => probe::<u64>(v),
            Ty::CountList => probe::<Vec<usize>>(v),
            Ty::Name => probe::<String>(v),
            Ty::Model => probe::<SurfaceModel>(v),
            Ty::Class => probe::<PicClass>(v),
            Ty::Polytope => probe::<Polytope>(v),
            Ty::Fan => probe::<Fan>(v),
            Ty::Divisor => probe::<ToricDivisor>(v),
            Ty::Flags => probe::<ToricFlagSpec>(v),
            Ty::Weights => probe::<WeightVec>(v),
            Ty::WeightsList => probe::<Vec<WeightVec>>(v),
        }
    }
}

/// Deserialize `v` as `T`, returning the inner path and message on failure.
fn probe<T: DeserializeOwned>(v: &Value) -> Result<(), (String, String)> {
    serde_path_to_error::deserialize::<_, T>(v).map(|_| ()).map_err(|e| {
        let inner = e.path().to_string();
        let inner = match inner.as_str() {
            "." => String::new(),
            i if i.starts_with('[') => i.to_string(),
            i => format!(".{i}"),
        };
        (inner, e.into_inner().to_string())
    })
}

pub struct KindSpec {
    pub kind: &'static str,
    pub fields: &'static [(&'static str, Ty)],
    /// Alternative sets of required fields; at least one must be fully present.
    pub required: &'static [&'static [&'static str]],
}

pub const KINDS: &[KindSpec] = &[
    KindSpec {
        kind: "toric-body",
        fields: &[("fixture", Ty::Name), ("fan", Ty::Fan), ("divisor", Ty::Divisor), ("flags", Ty::Flags), ("method", Ty::Name)],
        required: &[&["fixture"], &["fan", "divisor", "flags"]],
    },
    KindSpec {
        kind: "semigroup-sample",
        fields: &[("fixture", Ty::Name), ("fan", Ty::Fan), ("divisor", Ty::Divisor), ("flags", Ty::Flags), ("m_max", Ty::Count)],
        required: &[&["fixture"], &["fan", "divisor", "flags"]],
    },
    KindSpec { kind: "surface-zariski", fields: &[("model", Ty::Model), ("class", Ty::Class)], required: &[&["model", "class"]] },
    KindSpec {
        kind: "surface-body",
        fields: &[("model", Ty::Model), ("class", Ty::Class), ("points", Ty::CountList), ("grid_step", Ty::Rat), ("t_max", Ty::Rat)],
        required: &[&["model", "class", "points"]],
    },
    KindSpec {
        kind: "seshadri",
        fields: &[("model", Ty::Model), ("class", Ty::Class), ("weights", Ty::Weights), ("points", Ty::CountList)],
        required: &[&["model", "class", "weights"]],
    },
    KindSpec {
        kind: "nakayama",
        fields: &[("model", Ty::Model), ("class", Ty::Class), ("points", Ty::CountList)],
        required: &[&["model", "class"]],
    },
    KindSpec {
        kind: "xi",
        fields: &[("fixture", Ty::Name), ("body", Ty::Polytope), ("n", Ty::Count), ("weights", Ty::Weights)],
        required: &[&["fixture", "weights"], &["body", "n", "weights"]],
    },
    KindSpec {
        kind: "eps-xi-check",
        fields: &[
            ("fixture", Ty::Name),
            ("model", Ty::Model),
            ("class", Ty::Class),
            ("points", Ty::CountList),
            ("body", Ty::Polytope),
            ("n", Ty::Count),
            ("weights", Ty::WeightsList),
        ],
        required: &[&["fixture"], &["model", "class", "points", "body", "n", "weights"]],
    },
    KindSpec {
        kind: "slice-volume",
        fields: &[("fixture", Ty::Name), ("body", Ty::Polytope), ("n", Ty::Count), ("vol_x", Ty::Rat), ("weights", Ty::Weights)],
        required: &[&["fixture", "weights"], &["body", "n", "vol_x", "weights"]],
    },
    KindSpec { kind: "nagata", fields: &[("r", Ty::Count), ("d", Ty::Rat), ("m", Ty::RatList)], required: &[&["r", "d", "m"]] },
    KindSpec { kind: "standard-form", fields: &[("d", Ty::Rat), ("m", Ty::RatList)], required: &[&["d", "m"]] },
    KindSpec {
        kind: "irrationality",
        fields: &[("s", Ty::Count), ("d", Ty::Rat), ("m", Ty::RatList)],
        required: &[&["s", "d", "m"]],
    },
    KindSpec {
        kind: "homogeneous",
        fields: &[("s", Ty::Count), ("d", Ty::Rat), ("c", Ty::Rat)],
        required: &[&["s", "d", "c"]],
    },
    KindSpec { kind: "nef-boundary", fields: &[("d", Ty::Rat), ("m", Ty::RatList)], required: &[&["d", "m"]] },
];

pub fn kind_spec(kind: &str) -> Option<&'static KindSpec> {
    KINDS.iter().find(|k| k.kind == kind)
}

/// A job that passed validation.
#[derive(Debug, Clone)]
pub struct Job {
    pub kind: &'static str,
    pub input: Map<String, Value>,
    pub render: bool,
    pub output: Option<String>,
}

pub fn validate(root: &Value) -> Result<Job, Vec<String>> {
    let mut errs = Vec::new();
    let Some(obj) = root.as_object() else {
        return Err(vec!["$: job must be a JSON object".into()]);
    };
    for key in obj.keys() {
        if !["schema", "kind", "input", "render", "output"].contains(&key.as_str()) {
            errs.push(format!("$.{key}: unknown field"));
        }
    }
    match obj.get("schema") {
        Some(v) if v.as_u64() == Some(SCHEMA_VERSION) => {}
        Some(v) => errs.push(format!("$.schema: expected {SCHEMA_VERSION}, got {v}")),
        None => errs.push("$.schema: missing required field".into()),
    }
    let spec = match obj.get("kind") {
        Some(Value::String(k)) => {
            let spec = kind_spec(k);
            if spec.is_none() {
                let known: Vec<&str> = KINDS.iter().map(|k| k.kind).collect();
                errs.push(format!("$.kind: unknown kind {k:?}; expected one of {}", known.join(", ")));
            }
            spec
        }
        Some(v) => {
            errs.push(format!("$.kind: expected a string, got {v}"));
            None
        }
        None => {
            errs.push("$.kind: missing required field".into());
            None
        }
    };
    let render = match obj.get("render") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(v) => {
            errs.push(format!("$.render: expected a boolean, got {v}"));
            false
        }
    };
    let output = match obj.get("output") {
        None => None,
        Some(Value::String(s)) if valid_file_name(s) => Some(s.clone()),
        Some(v) => {
            errs.push(format!("$.output: expected a plain file name, got {v}"));
            None
        }
    };
    let input = match obj.get("input") {
        Some(Value::Object(m)) => Some(m),
        Some(v) => {
            errs.push(format!("$.input: expected an object, got {v}"));
            None
        }
        None => {
            errs.push("$.input: missing required field".into());
            None
        }
    };
    if let (Some(spec), Some(input)) = (spec, input) {
        validate_input(spec, input, &mut errs);
    }
    if errs.is_empty() {
        Ok(Job { kind: spec.unwrap().kind, input: input.unwrap().clone(), render, output })
    } else {
        Err(errs)
    }
}

fn valid_file_name(s: &str) -> bool {
    !s.is_empty() && !s.contains(['/', '\\']) && s != "." && s != ".."
}

fn validate_input(spec: &KindSpec, input: &Map<String, Value>, errs: &mut Vec<String>) {
    for (key, value) in input {
        match spec.fields.iter().find(|(name, _)| name == key) {
            None => errs.push(format!("$.input.{key}: unknown field for kind {}", spec.kind)),
            Some((_, ty)) => {
                if let Err((inner, msg)) = ty.check(value) {
                    errs.push(format!("$.input.{key}{inner}: {msg}"));
                }
            }
        }
    }
    let satisfied = spec.required.iter().any(|group| group.iter().all(|k| input.contains_key(*k)));
    if !satisfied {
        if spec.required.len() == 1 {
            for k in spec.required[0].iter().filter(|k| !input.contains_key(**k)) {
                errs.push(format!("$.input.{k}: missing required field"));
            }
        } else {
            let alts: Vec<String> = spec.required.iter().map(|g| g.join(" + ")).collect();
            errs.push(format!("$.input: expected one of: {}", alts.join(" | ")));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn collects_every_offending_path() {
        let job = json!({
            "schema": 2,
            "kind": "nagata",
            "input": { "r": -1, "d": "1/0", "m": ["1", "x"], "extra": 1 }
        });
        let errs = validate(&job).unwrap_err();
        let joined = errs.join("\n");
        for path in ["$.schema", "$.input.r", "$.input.d", "$.input.m[1]", "$.input.extra"] {
            assert!(joined.contains(&format!("{path}:")), "{path} missing from\n{joined}");
        }
    }

    #[test]
    fn nested_paths_reach_into_models() {
        let job = json!({
            "schema": 1,
            "kind": "seshadri",
            "input": { "model": { "s": 2, "mode": "delpezzo-general" }, "class": { "d": "1", "m": ["0", "1/0"] }, "weights": [1, 0] }
        });
        let joined = validate(&job).unwrap_err().join("\n");
        assert!(joined.contains("$.input.class.m"), "{joined}");
        assert!(joined.contains("$.input.weights"), "{joined}");
    }

    #[test]
    fn alternatives_are_named() {
        let job = json!({ "schema": 1, "kind": "toric-body", "input": { "fan": { "dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]] } } });
        let errs = validate(&job).unwrap_err();
        assert_eq!(errs, vec!["$.input: expected one of: fixture | fan + divisor + flags".to_string()]);
    }

    #[test]
    fn valid_job_passes() {
        let job = json!({ "schema": 1, "kind": "nagata", "input": { "r": 9, "d": 3, "m": [1, 1, 1, 1, 1, 1, 1, 1, 1] }, "render": false });
        assert_eq!(validate(&job).unwrap().kind, "nagata");
    }
}
