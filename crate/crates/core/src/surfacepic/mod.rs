//! Picard-lattice computations on blow-ups of the plane.
//!
//! Classes are `dH − Σ m_i E_i` with `H² = 1`, `E_i² = −1`. A [`SurfaceModel`] carries the
//! negative curves that generate, together with `H` and the `H − E_i`, the effective cone;
//! for `s ≤ 8` general points these are the (−1)-classes.

pub mod body;
pub mod class;
pub mod model;
pub mod walk;
pub mod zariski;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use body::{surface_body_outer, SurfaceBody, SurfaceBodyMeta};
pub use class::{intersect, PicClass};
pub use model::{neg_curve_classes, Mode, SurfaceModel};
pub use walk::{bigness_walk, BignessWalk};
pub use zariski::{zariski, NegativeTerm, ZariskiDecomp};

use crate::error::{Error, Result};

/// Restricted and augmented base loci, as lists of curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseLoci {
    pub bminus: Vec<PicClass>,
    pub bplus: Vec<PicClass>,
}

/// `B₋ = Supp N`, `B₊ = Supp N ∪ {C : P·C = 0}`.
pub fn base_loci(model: &SurfaceModel, d: &PicClass) -> Result<BaseLoci> {
    if !model.is_big(d)? {
        return Err(Error::NotBig(format!("{d}")));
    }
    let z = zariski(model, d)?;
    let bminus: Vec<PicClass> = z.negative_support.iter().map(|t| t.curve.clone()).collect();
    let mut bplus = bminus.clone();
    for c in &model.neg_curves {
        if !bplus.contains(c) && class::intersect_unchecked(&z.positive, c).is_zero() {
            bplus.push(c.clone());
        }
    }
    bplus.sort();
    Ok(BaseLoci { bminus, bplus })
}

impl BaseLoci {
    /// Whether the `i`-th blown-up point lies in the restricted base locus downstairs.
    pub fn point_in_bminus(&self, i: usize) -> bool {
        point_in_locus(&self.bminus, &self.bminus, i)
    }

    /// Whether the `i`-th blown-up point lies in the augmented base locus downstairs.
    pub fn point_in_bplus(&self, i: usize) -> bool {
        point_in_locus(&self.bminus, &self.bplus, i)
    }
}

/// For a pullback class, the point under `E_i` is in a base locus when `E_i` itself is a
/// fixed component, or when another curve of the locus meets `E_i`. `E_i` lying in the null
/// locus alone says nothing: every pullback is trivial on `E_i`.
fn point_in_locus(fixed: &[PicClass], locus: &[PicClass], i: usize) -> bool {
    let Some(first) = locus.first() else { return false };
    let e = PicClass::e(first.s(), i);
    fixed.contains(&e) || locus.iter().any(|c| *c != e && class::intersect_unchecked(c, &e).is_positive())
}
