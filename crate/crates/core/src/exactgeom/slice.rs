//! Weighted diagonal slices of `ℝ^{nr}` and inverted slice simplices.
//!
//! Coordinates of `ℝ^{nr}` are grouped in `r` blocks of `n`; index `(i, j)` lives at `i*n + j`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::{det, gram};
use super::polytope::{Halfspace, Polytope};
use super::radval::RadVal;
use super::rat::{dot, Rat, RatVec};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceSpec {
    pub n: usize,
    pub r: usize,
    #[serde(with = "super::rat::serde_rat_vec")]
    pub weights: RatVec,
}

impl SliceSpec {
    pub fn new(n: usize, weights: RatVec) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyInput("slice needs at least one weight".into()));
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::InvalidInput("slice weights must be positive".into()));
        }
        Ok(Self { n, r: weights.len(), weights })
    }

    /// `b_j = Σ_i m_i e_{(i, j)}`.
    pub fn basis(&self) -> Vec<RatVec> {
        (0..self.n).map(|j| {
            let mut b = vec![Rat::zero(); self.n * self.r];
            for (i, m) in self.weights.iter().enumerate() {
                b[i * self.n + j] = m.clone();
            }
            b
        }).collect()
    }

    /// `√det(Gram(b)) = (Σ m_i²)^{n/2}`.
    pub fn gram_scale(&self) -> RadVal {
        RadVal::sqrt(&det(&gram(&self.basis()))).expect("Gram determinant is positive")
    }
}

/// `P ∩ span(b)` in `b`-coordinates, together with the volume scale factor.
pub fn intersect_subspace(p: &Polytope, s: &SliceSpec) -> Result<(Polytope, RadVal)> {
    if p.ambient_dim() != s.n * s.r {
        return Err(Error::DimensionMismatch { expected: s.n * s.r, got: p.ambient_dim() });
    }
    let scale = s.gram_scale();
    if p.is_empty() {
        return Ok((Polytope::empty(s.n), scale));
    }
    let basis = s.basis();
    let pull = |h: &Halfspace| {
        Halfspace::new(basis.iter().map(|b| dot(&h.normal, b)).collect(), h.offset.clone())
    };
    let h = p.hrep();
    let ineqs: Vec<Halfspace> = h.facets.iter().map(pull).collect();
    let eqs: Vec<Halfspace> = h.equalities.iter().map(pull).collect();
    // The pulled-back system is bounded because b is injective, but equalities may have
    // become trivial (0 = 0) or contradictory (0 = c).
    let mut kept = Vec::new();
    for e in eqs {
        if e.normal.iter().all(|x| x.is_zero()) {
            if !e.offset.is_zero() {
                return Ok((Polytope::empty(s.n), scale));
            }
        } else {
            kept.push(e);
        }
    }
    let mut live = Vec::new();
    for f in ineqs {
        if f.normal.iter().all(|x| x.is_zero()) {
            if f.offset.is_negative() {
                return Ok((Polytope::empty(s.n), scale));
            }
        } else {
            live.push(f);
        }
    }
    Ok((Polytope::from_halfspaces(s.n, &live, &kept)?, scale))
}

/// `conv{0, v_1, v_1 + v_2, …, v_1 + v_n}` with `v_j = Σ_i ξ_i e_{(i, j)}`.
pub fn inverted_slice_simplex(xi: &[Rat], n: usize) -> Result<Polytope> {
    if n == 0 || xi.is_empty() {
        return Err(Error::InvalidInput("inverted slice simplex needs n ≥ 1 and r ≥ 1".into()));
    }
    if xi.iter().any(|x| x.is_negative()) {
        return Err(Error::NegativeSize("inverted slice simplex sizes must be nonnegative".into()));
    }
    Polytope::hull(&inverted_simplex_generators(xi, n), n * xi.len())
}

/// The `n + 1` generator points `0, v_1, v_1 + v_2, …`.
pub fn inverted_simplex_generators(xi: &[Rat], n: usize) -> Vec<RatVec> {
    let r = xi.len();
    let v = |j: usize| {
        let mut x = vec![Rat::zero(); n * r];
        for (i, s) in xi.iter().enumerate() {
            x[i * n + j] = s.clone();
        }
        x
    };
    let v1 = v(0);
    let mut pts = vec![vec![Rat::zero(); n * r], v1.clone()];
    for j in 1..n {
        pts.push(super::rat::add(&v1, &v(j)));
    }
    pts
}
