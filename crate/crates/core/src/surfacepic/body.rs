//! The parametric outer body of a big class with infinitesimal flags on exceptional curves.
//!
//! Block `i` of a point is `(ν_1, ν_2)` for the flag on `E_{p_i}`. Over a grid of first
//! coordinates `t`, the class `D − Σ (s_i + t_i) E_{p_i}` is decomposed and the second
//! coordinate ranges over `[α_i, β_i] = [0, P·E_{p_i}]`: flag points are taken general on
//! `E_{p_i}`, so negative-part components never pass through them and `α_i = 0`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::class::{intersect_unchecked, PicClass};
use super::model::SurfaceModel;
use super::walk::bigness_walk;
use super::zariski::zariski;
use crate::error::{Error, Result};
use crate::exactgeom::polytope::Polytope;
use crate::exactgeom::rat::{floor, Rat, RatVec};

pub const ALPHA_CONVENTION: &str = "alpha=0: flag points general on the exceptional curves";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceBodyMeta {
    #[serde(with = "crate::exactgeom::rat::serde_rat")]
    pub grid_step: Rat,
    #[serde(with = "crate::exactgeom::rat::serde_rat")]
    pub t_max: Rat,
    #[serde(with = "crate::exactgeom::rat::serde_rat_vec")]
    pub shifts: RatVec,
    /// Exact chamber walls added to the grid (single-flag case only).
    #[serde(with = "crate::exactgeom::rat::serde_rat_vec")]
    pub chamber_walls: RatVec,
    pub samples: usize,
    pub alpha_convention: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceBody {
    pub body: Polytope,
    pub meta: SurfaceBodyMeta,
}

/// Sample the parametric body of `d` for flags on `E_{p}` for `p` in `points`.
///
/// `t_max` defaults to `max_i (d − m_{p_i} − s_i)`, past which no first coordinate can go.
pub fn surface_body_outer(
    model: &SurfaceModel,
    d: &PicClass,
    points: &[usize],
    grid_step: &Rat,
    t_max: Option<Rat>,
) -> Result<SurfaceBody> {
    model.check_class(d)?;
    if points.is_empty() {
        return Err(Error::InvalidFlags("at least one flagged point is required".into()));
    }
    let mut seen = points.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != points.len() || seen.iter().any(|&p| p >= model.s) {
        return Err(Error::InvalidFlags(format!("flagged points {points:?} must be distinct and < {}", model.s)));
    }
    if !grid_step.is_positive() {
        return Err(Error::InvalidInput("grid step must be positive".into()));
    }
    if !model.is_big(d)? {
        return Err(Error::NotBig(format!("{d}")));
    }
    let s = model.s;
    let z0 = zariski(model, d)?;
    let shifts: RatVec = points.iter().map(|&p| z0.multiplicity_of(&PicClass::e(s, p))).collect();
    let base = points.iter().zip(&shifts).fold(d.clone(), |acc, (&p, sh)| acc.sub(&PicClass::e(s, p).scale(sh)));
    let t_max = t_max.unwrap_or_else(|| {
        points.iter().map(|&p| &base.d - &base.m[p]).max().unwrap().max(Rat::zero())
    });
    if t_max.is_negative() {
        return Err(Error::InvalidInput("t_max must be nonnegative".into()));
    }
    let mut axis: RatVec = Vec::new();
    let steps = floor(&(&t_max / grid_step));
    let mut k = num_bigint::BigInt::zero();
    while k <= steps {
        axis.push(Rat::from_integer(k.clone()) * grid_step);
        k += 1;
    }
    axis.push(t_max.clone());
    let mut walls = Vec::new();
    if points.len() == 1 {
        let w = bigness_walk(model, &base, &PicClass::e(s, points[0]))?;
        walls.extend(w.breakpoints.into_iter().filter(|b| *b <= t_max));
        if let Some(end) = w.threshold.to_rat() {
            if end <= t_max {
                walls.push(end);
            }
        }
        axis.extend(walls.iter().cloned());
    }
    axis.sort();
    axis.dedup();

    let r = points.len();
    let mut corners: Vec<RatVec> = Vec::new();
    let mut samples = 0;
    let mut idx = vec![0usize; r];
    'grid: loop {
        let t: RatVec = idx.iter().map(|&i| axis[i].clone()).collect();
        let dt = points.iter().zip(&t).fold(base.clone(), |acc, (&p, ti)| acc.sub(&PicClass::e(s, p).scale(ti)));
        if model.is_psef(&dt)? {
            samples += 1;
            let p = zariski(model, &dt)?.positive;
            let betas: RatVec = points.iter().map(|&q| intersect_unchecked(&p, &PicClass::e(s, q))).collect();
            for mask in 0..(1u32 << r) {
                if (0..r).any(|i| mask & (1 << i) != 0 && betas[i].is_zero()) {
                    continue;
                }
                let mut pt = Vec::with_capacity(2 * r);
                for i in 0..r {
                    pt.push(&shifts[i] + &t[i]);
                    pt.push(if mask & (1 << i) != 0 { betas[i].clone() } else { Rat::zero() });
                }
                corners.push(pt);
            }
        }
        for pos in (0..r).rev() {
            idx[pos] += 1;
            if idx[pos] < axis.len() {
                continue 'grid;
            }
            idx[pos] = 0;
        }
        break;
    }
    let body = Polytope::hull(&corners, 2 * r)?;
    Ok(SurfaceBody {
        body,
        meta: SurfaceBodyMeta {
            grid_step: grid_step.clone(),
            t_max,
            shifts,
            chamber_walls: walls,
            samples,
            alpha_convention: ALPHA_CONVENTION.into(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::polytope::Halfspace;
    use crate::exactgeom::rat::{rat, ratq, rmat};

    #[test]
    fn one_point_line_class() {
        let m = SurfaceModel::delpezzo_general(1).unwrap();
        let b = surface_body_outer(&m, &PicClass::h(1), &[0], &ratq(1, 3), None).unwrap();
        assert_eq!(b.body, Polytope::hull(&rmat(&[&[0, 0], &[1, 0], &[1, 1]]), 2).unwrap());
        assert_eq!(b.meta.t_max, rat(1));
    }

    #[test]
    fn two_point_line_class_is_exact_on_half_grid() {
        let m = SurfaceModel::delpezzo_general(2).unwrap();
        let b = surface_body_outer(&m, &PicClass::h(2), &[0, 1], &ratq(1, 2), None).unwrap();
        // {t_i ≥ 0, y_i ≥ 0, y_1 ≤ min(t_1, 1 − t_2), y_2 ≤ min(t_2, 1 − t_1)} in (t_1, y_1, t_2, y_2)
        let hs = |n: [i64; 4], c: i64| Halfspace::new(n.iter().map(|&x| rat(x)).collect(), rat(c));
        let exact = Polytope::from_halfspaces(
            4,
            &[
                hs([-1, 0, 0, 0], 0), hs([0, -1, 0, 0], 0), hs([0, 0, -1, 0], 0), hs([0, 0, 0, -1], 0),
                hs([-1, 1, 0, 0], 0), hs([0, 1, 1, 0], 1), hs([0, 0, -1, 1], 0), hs([1, 0, 0, 1], 1),
            ],
            &[],
        )
        .unwrap();
        assert_eq!(b.body, exact);
    }

    #[test]
    fn rejects_bad_input() {
        let m = SurfaceModel::delpezzo_general(2).unwrap();
        assert!(surface_body_outer(&m, &PicClass::h(2), &[0, 0], &rat(1), None).is_err());
        assert!(surface_body_outer(&m, &PicClass::h(2), &[0], &rat(0), None).is_err());
        assert!(matches!(
            surface_body_outer(&m, &PicClass::from_ints(1, &[1, 1]), &[0], &rat(1), None),
            Err(Error::NotBig(_))
        ));
    }
}
