//! Fixtures carrying both an exact body and a curve-list model of the same surface.
//!
//! | name | body from | model | class | flagged points |
//! |------|-----------|-------|-------|----------------|
//! | bl1 | toric `bl1` | general, s = 1 | H | x₁ |
//! | bl2 | surface grid, step 1/2 | general, s = 2 | H | x₁, x₂ |
//! | bl3 | toric `bl3` | general, s = 3 | H | x₁ |
//! | infinitely-near | toric `infinitely-near` | user, s = 2 | H | x₂ |
//! | infinitely-near-twisted | monomial body | user, s = 2 | H + E₁ | x₂ |
//!
//! On the infinitely near model `E₁ − E₂` is the strict transform of the first exceptional
//! curve, so `x₂` lies on a curve the pullback of a line through `x₁` contracts; that is what
//! makes the base-locus criteria non-trivial there.

use crate::error::Result;
use crate::exactgeom::polytope::Polytope;
use crate::exactgeom::rat::ratq;
use crate::surfacepic::{surface_body_outer, PicClass, SurfaceModel};
use crate::toricbody::fixtures::{self as toric, infinitely_near_fan};
use crate::toricbody::{extended_body_toric, monomial_body, ToricDivisor, ToricFlagSpec};

use super::WeightVec;

#[derive(Clone, Debug)]
pub struct PairedFixture {
    pub name: &'static str,
    pub model: SurfaceModel,
    pub class: PicClass,
    /// Blown-up points carrying the flags, in block order.
    pub points: Vec<usize>,
    pub body: Polytope,
    pub n: usize,
    pub weights: Vec<WeightVec>,
}

impl PairedFixture {
    pub fn r(&self) -> usize {
        self.points.len()
    }
}

fn weights(list: &[&[u64]]) -> Vec<WeightVec> {
    list.iter().map(|w| WeightVec::new(w.to_vec()).expect("positive fixture weights")).collect()
}

fn toric_body(name: &str) -> Result<Polytope> {
    let f = toric::by_name(name).expect("shipped toric fixture");
    extended_body_toric(&f.fan, &f.divisor, &f.flags)
}

/// The strict transform `E₁ − E₂`, then `E₂` and the line through both points.
pub fn infinitely_near_model() -> SurfaceModel {
    SurfaceModel::user(
        2,
        vec![PicClass::from_ints(0, &[-1, 1]), PicClass::e(2, 1), PicClass::from_ints(1, &[1, 1])],
    )
    .expect("valid curve list")
}

pub fn all() -> Result<Vec<PairedFixture>> {
    let m2 = SurfaceModel::delpezzo_general(2)?;
    let bl2_body = surface_body_outer(&m2, &PicClass::h(2), &[0, 1], &ratq(1, 2), None)?.body;
    // D_{−e₁−e₂} + D_{e₁+e₂} + D_{e₁+2e₂} ~ H + E₁, with a nonzero coefficient on the flag ray.
    let twisted = ToricDivisor::from_terms(5, &[(4, 1), (1, 1), (2, 1)]);
    let twisted_body = monomial_body(&infinitely_near_fan(), &twisted, &ToricFlagSpec::new(vec![vec![2, 3]]))?;
    Ok(vec![
        PairedFixture {
            name: "bl1",
            model: SurfaceModel::delpezzo_general(1)?,
            class: PicClass::h(1),
            points: vec![0],
            body: toric_body("bl1")?,
            n: 2,
            weights: weights(&[&[1], &[2]]),
        },
        PairedFixture {
            name: "bl2",
            model: m2,
            class: PicClass::h(2),
            points: vec![0, 1],
            body: bl2_body,
            n: 2,
            weights: weights(&[&[1, 1], &[2, 1], &[1, 2], &[3, 2]]),
        },
        PairedFixture {
            name: "bl3",
            model: SurfaceModel::delpezzo_general(3)?,
            class: PicClass::h(3),
            points: vec![0],
            body: toric_body("bl3")?,
            n: 2,
            weights: weights(&[&[1], &[3]]),
        },
        PairedFixture {
            name: "infinitely-near",
            model: infinitely_near_model(),
            class: PicClass::h(2),
            points: vec![1],
            body: toric_body("infinitely-near")?,
            n: 2,
            weights: weights(&[&[1], &[2]]),
        },
        PairedFixture {
            name: "infinitely-near-twisted",
            model: infinitely_near_model(),
            class: PicClass::from_ints(1, &[-1, 0]),
            points: vec![1],
            body: twisted_body,
            n: 2,
            weights: weights(&[&[1]]),
        },
    ])
}

pub fn by_name(name: &str) -> Result<Option<PairedFixture>> {
    Ok(all()?.into_iter().find(|f| f.name == name))
}
