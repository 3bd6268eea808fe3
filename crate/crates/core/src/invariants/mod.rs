//! Local positivity invariants and their cross-checks.
//!
//! On the supported models the Seshadri constant is the nef threshold over the model's curve
//! list ("model-exact, not variety-general"); the Nakayama constant is the bigness
//! threshold found by the chamber walk; `ξ` is read off an extended body by LP duality.

pub mod arithmetic;
pub mod checks;
pub mod fixtures;
pub mod report;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use arithmetic::*;
pub use checks::*;
pub use report::{Check, InvariantReport};

use crate::error::{Error, Result};
use crate::exactgeom::polytope::Polytope;
use crate::exactgeom::radval::{QuadSurd, RadVal};
use crate::exactgeom::rat::{rat, Rat, RatVec};
use crate::exactgeom::slice::inverted_simplex_generators;
use crate::surfacepic::class::intersect_unchecked;
use crate::surfacepic::{bigness_walk, PicClass, SurfaceModel};

pub const MODEL_EXACT: &str = "model-exact, not variety-general";

/// Positive integer weights `(m_1, …, m_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct WeightVec(Vec<u64>);

impl WeightVec {
    pub fn new(w: Vec<u64>) -> Result<Self> {
        if w.is_empty() || w.contains(&0) {
            return Err(Error::InvalidInput(format!("weights must be a nonempty list of positive integers, got {w:?}")));
        }
        Ok(Self(w))
    }

    pub fn ones(r: usize) -> Self {
        Self(vec![1; r])
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn rats(&self) -> RatVec {
        self.0.iter().map(|&x| rat(x as i64)).collect()
    }

    pub fn is_uniform(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl TryFrom<Vec<u64>> for WeightVec {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        WeightVec::new(v)
    }
}

impl From<WeightVec> for Vec<u64> {
    fn from(w: WeightVec) -> Self {
        w.0
    }
}

/// Nef threshold of `L − a Σ w_p E_p` over the weighted points `points`.
pub fn seshadri_eps_at(model: &SurfaceModel, l: &PicClass, points: &[usize], w: &WeightVec) -> Result<RadVal> {
    model.check_class(l)?;
    if points.len() != w.r() {
        return Err(Error::ShapeMismatch(format!("{} points but {} weights", points.len(), w.r())));
    }
    if points.iter().any(|&p| p >= model.s) {
        return Err(Error::InvalidInput(format!("points {points:?} out of range for {} blown-up points", model.s)));
    }
    if !model.is_nef(l)? {
        return Err(Error::NotNef(format!("{l}")));
    }
    let weights = w.rats();
    let mut best: Option<Rat> = None;
    for c in model.generators() {
        // E_p · C = m_p(C)
        let den: Rat = points.iter().zip(&weights).map(|(&p, wp)| wp * &c.m[p]).sum();
        if den.is_positive() {
            let q = intersect_unchecked(l, &c) / den;
            if best.as_ref().is_none_or(|b| q < *b) {
                best = Some(q);
            }
        }
    }
    let eps = best.ok_or_else(|| Error::Unbounded("no curve meets the weighted points".into()))?;
    Ok(RadVal::from_rat(eps.max(Rat::zero())))
}

/// `ε_m(L; x_1, …, x_r)` with all `s = r` blown-up points weighted.
pub fn seshadri_eps(model: &SurfaceModel, l: &PicClass, w: &WeightVec) -> Result<RadVal> {
    if w.r() != model.s {
        return Err(Error::ShapeMismatch(format!("{} weights on a model with {} points", w.r(), model.s)));
    }
    let points: Vec<usize> = (0..model.s).collect();
    seshadri_eps_at(model, l, &points, w)
}

/// Bigness threshold of `L − a Σ_{p ∈ points} E_p`.
pub fn nakayama_mu_at(model: &SurfaceModel, l: &PicClass, points: &[usize]) -> Result<QuadSurd> {
    let mut w = vec![Rat::zero(); model.s];
    for &p in points {
        if p >= model.s {
            return Err(Error::InvalidInput(format!("point {p} out of range")));
        }
        w[p] = rat(1);
    }
    Ok(bigness_walk(model, l, &PicClass::exceptional_sum(&w))?.threshold)
}

/// `μ(L; x_1, …, x_s)` with equal weights on all points.
pub fn nakayama_mu(model: &SurfaceModel, l: &PicClass) -> Result<QuadSurd> {
    let points: Vec<usize> = (0..model.s).collect();
    nakayama_mu_at(model, l, &points)
}

/// Largest `a` with `Δ^{-r}_{(m_1 a, …, m_r a)} ⊆ body`; zero when the origin is outside.
pub fn xi_constant(body: &Polytope, w: &WeightVec, n: usize) -> Result<Rat> {
    let r = w.r();
    if body.ambient_dim() != n * r {
        return Err(Error::DimensionMismatch { expected: n * r, got: body.ambient_dim() });
    }
    if !body.contains_point(&vec![Rat::zero(); n * r])? {
        return Ok(Rat::zero());
    }
    // The simplex at scale a is a·conv(generators), so the constraint ⟨h, a g⟩ ≤ c binds at
    // a = c / ⟨h, g⟩ whenever ⟨h, g⟩ > 0.
    let gens = inverted_simplex_generators(&w.rats(), n);
    let mut best: Option<Rat> = None;
    for h in body.hrep().halfspaces() {
        for g in &gens[1..] {
            let hg = crate::exactgeom::rat::dot(&h.normal, g);
            if hg.is_positive() {
                let a = &h.offset / hg;
                if best.as_ref().is_none_or(|b| a < *b) {
                    best = Some(a);
                }
            }
        }
    }
    best.ok_or_else(|| Error::Unbounded("inverted simplices of every size fit".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{ratq, rmat};

    fn w(v: &[u64]) -> WeightVec {
        WeightVec::new(v.to_vec()).unwrap()
    }

    #[test]
    fn seshadri_examples() {
        let m1 = SurfaceModel::delpezzo_general(1).unwrap();
        assert_eq!(seshadri_eps(&m1, &PicClass::h(1), &w(&[1])).unwrap(), RadVal::from_rat(rat(1)));
        let m2 = SurfaceModel::delpezzo_general(2).unwrap();
        assert_eq!(seshadri_eps(&m2, &PicClass::h(2), &w(&[1, 1])).unwrap(), RadVal::from_rat(ratq(1, 2)));
        assert_eq!(seshadri_eps(&m2, &PicClass::h(2), &w(&[2, 1])).unwrap(), RadVal::from_rat(ratq(1, 3)));
        assert!(seshadri_eps(&m2, &PicClass::from_ints(1, &[1, 1]), &w(&[1, 1])).is_err());
    }

    #[test]
    fn nakayama_examples() {
        let m1 = SurfaceModel::delpezzo_general(1).unwrap();
        assert_eq!(nakayama_mu(&m1, &PicClass::h(1)).unwrap(), QuadSurd::from_rat(rat(1)));
        let m2 = SurfaceModel::delpezzo_general(2).unwrap();
        assert_eq!(nakayama_mu(&m2, &PicClass::h(2)).unwrap(), QuadSurd::from_rat(rat(1)));
        let m4 = SurfaceModel::delpezzo_general(4).unwrap();
        assert_eq!(nakayama_mu(&m4, &PicClass::h(4)).unwrap(), QuadSurd::from_rat(ratq(1, 2)));
        assert!(nakayama_mu(&m1, &PicClass::from_ints(1, &[1])).is_err());
    }

    #[test]
    fn xi_examples() {
        let tri = Polytope::hull(&rmat(&[&[0, 0], &[1, 0], &[1, 1]]), 2).unwrap();
        assert_eq!(xi_constant(&tri, &w(&[1]), 2).unwrap(), rat(1));
        let off = tri.translate(&[rat(1), rat(0)]).unwrap();
        assert_eq!(xi_constant(&off, &w(&[1]), 2).unwrap(), rat(0));
        assert_eq!(xi_constant(&tri, &w(&[2]), 2).unwrap(), ratq(1, 2));
    }

    #[test]
    fn weights_validate() {
        assert!(WeightVec::new(vec![]).is_err());
        assert!(WeightVec::new(vec![1, 0]).is_err());
        assert!(serde_json::from_str::<WeightVec>("[1,0]").is_err());
    }
}
