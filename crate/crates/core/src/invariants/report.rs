//! Report assembly.

use serde::{Deserialize, Serialize};

use super::arithmetic::Assumption;
use crate::exactgeom::radval::{QuadSurd, RadVal};
use crate::exactgeom::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), pass, detail: detail.into() }
    }
}

/// Computed invariants plus the checks run on them. Absent values are omitted from JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub epsilon: Option<RadVal>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu: Option<QuadSurd>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_rat")]
    pub xi: Option<Rat>,
    /// `[lower, upper]`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bounds: Option<[QuadSurd; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub slice_volume: Option<RadVal>,
    pub assumption: Option<Assumption>,
    pub note: String,
    pub checks: Vec<Check>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

mod opt_rat {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactgeom::rat::{fmt_rat, parse_rat, Rat};

    pub fn serialize<S: Serializer>(v: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(q) => s.serialize_str(&fmt_rat(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
        let s: Option<String> = Option::deserialize(d)?;
        s.map(|s| parse_rat(&s).map_err(serde::de::Error::custom)).transpose()
    }
}
