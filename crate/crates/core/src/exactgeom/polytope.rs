//! Bounded rational polytopes with a canonical vertex list and an on-demand H-representation.

use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::dd::extreme_rays;
use super::linalg::{nullspace, rank, rref, solve};
use super::rat::{add, dot, primitive, scale, sub, Rat, RatMat, RatVec};
use crate::error::{Error, Result};

/// One linear constraint `⟨normal, x⟩ ≤ offset` (or `=` for equalities).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halfspace {
    #[serde(with = "super::rat::serde_rat_vec")]
    pub normal: RatVec,
    #[serde(with = "super::rat::serde_rat")]
    pub offset: Rat,
}

impl Halfspace {
    pub fn new(normal: RatVec, offset: Rat) -> Self {
        Self { normal, offset }
    }

    /// Scale so that `(normal, offset)` is a primitive integer vector.
    fn canonical(self) -> Self {
        let mut all = self.normal.clone();
        all.push(self.offset.clone());
        let mut p = primitive(&all);
        let offset = p.pop().unwrap();
        Self { normal: p, offset }
    }

    pub fn slack(&self, x: &[Rat]) -> Rat {
        &self.offset - dot(&self.normal, x)
    }
}

/// Facets plus the equalities cutting out the affine hull.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRep {
    pub equalities: Vec<Halfspace>,
    pub facets: Vec<Halfspace>,
}

impl HRep {
    pub fn satisfied_by(&self, x: &[Rat]) -> bool {
        self.equalities.iter().all(|h| h.slack(x).is_zero())
            && self.facets.iter().all(|h| !h.slack(x).is_negative())
    }

    /// Everything as `≤` constraints, equalities split in two.
    pub fn halfspaces(&self) -> Vec<Halfspace> {
        let mut out = self.facets.clone();
        for e in &self.equalities {
            out.push(e.clone());
            out.push(Halfspace::new(e.normal.iter().map(|x| -x).collect(), -&e.offset));
        }
        out
    }
}

/// Coordinates adapted to the affine hull of a point set.
pub(crate) struct AffineFrame {
    pub base: RatVec,
    /// RREF rows spanning the direction space; row `j` has a 1 at `pivots[j]`.
    pub rows: RatMat,
    pub pivots: Vec<usize>,
}

impl AffineFrame {
    pub fn of(points: &[RatVec]) -> Self {
        let base = points[0].clone();
        let diffs: RatMat = points[1..].iter().map(|p| sub(p, &base)).collect();
        let (r, pivots) = rref(&diffs);
        let rows = r.into_iter().take(pivots.len()).collect();
        Self { base, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn reduce(&self, p: &[Rat]) -> RatVec {
        self.pivots.iter().map(|&c| &p[c] - &self.base[c]).collect()
    }

    pub fn equalities(&self) -> Vec<Halfspace> {
        let n = self.base.len();
        nullspace(&self.rows, n)
            .into_iter()
            .map(|w| {
                let off = dot(&w, &self.base);
                Halfspace::new(w, off).canonical()
            })
            .collect()
    }
}

/// Facets `y0 + ⟨y, z⟩ ≥ 0` of a full-dimensional point set in `ℝ^k` (k ≥ 1), as `(y0, y)`.
pub(crate) fn full_dim_facets(points: &[RatVec], k: usize) -> Vec<(Rat, RatVec)> {
    let rows: RatMat = points.iter().map(|p| {
        let mut r = vec![Rat::one()];
        r.extend(p.iter().cloned());
        r
    }).collect();
    let rays = extreme_rays(&rows, k + 1).expect("full-dimensional point set");
    rays.into_iter().map(|mut r| {
        let y0 = r.remove(0);
        (y0, r)
    }).collect()
}

#[derive(Clone, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<RatVec>,
    hrep: OnceLock<HRep>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Polytope {
    pub fn empty(ambient_dim: usize) -> Self {
        Self { ambient_dim, vertices: Vec::new(), hrep: OnceLock::new() }
    }

    pub fn point(p: RatVec) -> Self {
        Self { ambient_dim: p.len(), vertices: vec![p], hrep: OnceLock::new() }
    }

    /// Convex hull with irredundant, lexicographically sorted vertices.
    pub fn hull(points: &[RatVec], ambient_dim: usize) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, got: p.len() });
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() <= 1 {
            return Ok(Self { ambient_dim, vertices: pts, hrep: OnceLock::new() });
        }
        let frame = AffineFrame::of(&pts);
        let k = frame.dim();
        let reduced: Vec<RatVec> = pts.iter().map(|p| frame.reduce(p)).collect();
        let facets = full_dim_facets(&reduced, k);
        let vertices: Vec<RatVec> = pts.iter().zip(&reduced).filter(|(_, z)| {
            let tight: RatMat = facets.iter()
                .filter(|(y0, y)| (y0 + dot(y, z)).is_zero())
                .map(|(_, y)| y.clone())
                .collect();
            rank(&tight) == k
        }).map(|(p, _)| p.clone()).collect();
        let hrep = lift_hrep(&frame, &facets);
        let lock = OnceLock::new();
        let _ = lock.set(hrep);
        Ok(Self { ambient_dim, vertices, hrep: lock })
    }

    /// `{x : ⟨a, x⟩ ≤ b for facets, ⟨e, x⟩ = f for equalities}`; empty when infeasible.
    pub fn from_halfspaces(ambient_dim: usize, ineqs: &[Halfspace], eqs: &[Halfspace]) -> Result<Self> {
        for h in ineqs.iter().chain(eqs) {
            if h.normal.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, got: h.normal.len() });
            }
        }
        // Parametrise the equality solution set as x = x0 + N z.
        let em: RatMat = eqs.iter().map(|h| h.normal.clone()).collect();
        let eb: RatVec = eqs.iter().map(|h| h.offset.clone()).collect();
        let x0 = if eqs.is_empty() { vec![Rat::zero(); ambient_dim] } else {
            match solve(&em, &eb) {
                Some(x) => x,
                None => return Ok(Self::empty(ambient_dim)),
            }
        };
        let basis = nullspace(&em, ambient_dim);
        let k = basis.len();
        let lift = |z: &[Rat]| {
            let mut x = x0.clone();
            for (zj, b) in z.iter().zip(&basis) {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += zj * bi;
                }
            }
            x
        };
        if k == 0 {
            let ok = ineqs.iter().all(|h| !h.slack(&x0).is_negative());
            return Ok(if ok { Self::point(x0) } else { Self::empty(ambient_dim) });
        }
        let reduced: Vec<(RatVec, Rat)> = ineqs.iter().map(|h| {
            let a: RatVec = basis.iter().map(|b| dot(&h.normal, b)).collect();
            (a, h.slack(&x0))
        }).collect();
        // Cone {(w, z) : b w - ⟨a, z⟩ ≥ 0, w ≥ 0}.
        let mut rows: RatMat = reduced.iter().map(|(a, b)| {
            let mut r = vec![b.clone()];
            r.extend(a.iter().map(|x| -x));
            r
        }).collect();
        let mut w = vec![Rat::zero(); k + 1];
        w[0] = Rat::one();
        rows.push(w);
        let normals: RatMat = reduced.iter().map(|(a, _)| a.clone()).collect();
        if rank(&normals) < k {
            // Either empty or unbounded; an LP-free check: look for any feasible point
            // of the bounded part via a box would be arbitrary, so decide by feasibility.
            let feasible = super::lp::feasible_point(&feasibility_rows(&reduced, k), &feasibility_rhs(&reduced)).is_some();
            return if feasible {
                Err(Error::Unbounded("halfspace system has a recession direction".into()))
            } else {
                Ok(Self::empty(ambient_dim))
            };
        }
        let rays = extreme_rays(&rows, k + 1).expect("pointed");
        let mut pts = Vec::new();
        let mut recession = false;
        for r in rays {
            if r[0].is_zero() {
                recession = true;
            } else {
                let z: RatVec = r[1..].iter().map(|x| x / &r[0]).collect();
                pts.push(lift(&z));
            }
        }
        if pts.is_empty() {
            return Ok(Self::empty(ambient_dim));
        }
        if recession {
            return Err(Error::Unbounded("halfspace system has a recession direction".into()));
        }
        Self::hull(&pts, ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the affine hull; `-1` for the empty set.
    pub fn dim(&self) -> isize {
        if self.vertices.is_empty() {
            return -1;
        }
        AffineFrame::of(&self.vertices).dim() as isize
    }

    pub fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| {
            if self.vertices.is_empty() {
                // 0 ≤ -1 on the first coordinate direction (or the zero vector).
                let mut n = vec![Rat::zero(); self.ambient_dim];
                if let Some(x) = n.first_mut() {
                    *x = Rat::one();
                }
                let m: RatVec = n.iter().map(|x| -x).collect();
                return HRep {
                    equalities: Vec::new(),
                    facets: vec![Halfspace::new(n, Rat::zero()), Halfspace::new(m, -Rat::one())],
                };
            }
            let frame = AffineFrame::of(&self.vertices);
            let k = frame.dim();
            let facets = if k == 0 {
                Vec::new()
            } else {
                let reduced: Vec<RatVec> = self.vertices.iter().map(|p| frame.reduce(p)).collect();
                full_dim_facets(&reduced, k)
            };
            lift_hrep(&frame, &facets)
        })
    }

    pub fn contains_point(&self, x: &[Rat]) -> Result<bool> {
        if x.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: x.len() });
        }
        if self.vertices.is_empty() {
            return Ok(false);
        }
        Ok(self.hrep().satisfied_by(x))
    }

    /// `inner ⊆ self`, exactly.
    pub fn contains(&self, inner: &Polytope) -> Result<bool> {
        if inner.ambient_dim != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: inner.ambient_dim });
        }
        if inner.is_empty() {
            return Ok(true);
        }
        if self.is_empty() {
            return Ok(false);
        }
        let h = self.hrep();
        Ok(inner.vertices.iter().all(|v| h.satisfied_by(v)))
    }

    /// Hull of `{M v + t}`; `M` has `t.len()` rows and `ambient_dim` columns.
    pub fn affine_image(&self, m: &[RatVec], t: &[Rat]) -> Result<Self> {
        if m.len() != t.len() || m.iter().any(|r| r.len() != self.ambient_dim) {
            return Err(Error::ShapeMismatch(format!(
                "matrix must be {}x{}",
                t.len(),
                self.ambient_dim
            )));
        }
        let pts: Vec<RatVec> = self.vertices.iter()
            .map(|v| add(&super::linalg::mat_vec(m, v), t))
            .collect();
        Self::hull(&pts, t.len())
    }

    pub fn translate(&self, t: &[Rat]) -> Result<Self> {
        if t.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: t.len() });
        }
        let mut pts: Vec<RatVec> = self.vertices.iter().map(|v| add(v, t)).collect();
        pts.sort();
        Ok(Self { ambient_dim: self.ambient_dim, vertices: pts, hrep: OnceLock::new() })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return if self.is_empty() { self.clone() } else { Self::point(vec![Rat::zero(); self.ambient_dim]) };
        }
        let mut pts: Vec<RatVec> = self.vertices.iter().map(|v| scale(c, v)).collect();
        pts.sort();
        Self { ambient_dim: self.ambient_dim, vertices: pts, hrep: OnceLock::new() }
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Self> {
        if other.ambient_dim != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: other.ambient_dim });
        }
        let pts: Vec<RatVec> = self.vertices.iter()
            .flat_map(|a| other.vertices.iter().map(move |b| add(a, b)))
            .collect();
        Self::hull(&pts, self.ambient_dim)
    }

    /// Hull of `{p / level}` for graded points: the level-one slice of the cone they span.
    pub fn cone_base(graded: &[(RatVec, u64)]) -> Result<Self> {
        let Some(first) = graded.first() else {
            return Err(Error::EmptyInput("cone_base needs at least one graded point".into()));
        };
        let dim = first.0.len();
        let mut pts = Vec::with_capacity(graded.len());
        for (p, level) in graded {
            if *level == 0 {
                return Err(Error::InvalidInput("graded levels must be positive".into()));
            }
            let inv = Rat::new(1.into(), (*level).into());
            pts.push(scale(&inv, p));
        }
        Self::hull(&pts, dim)
    }

    /// Intersection with extra `≤` constraints.
    pub fn intersect_halfspaces(&self, extra: &[Halfspace]) -> Result<Self> {
        if self.is_empty() {
            return Ok(self.clone());
        }
        let h = self.hrep();
        let mut ineqs = h.facets.clone();
        ineqs.extend(extra.iter().cloned());
        Self::from_halfspaces(self.ambient_dim, &ineqs, &h.equalities)
    }

    pub fn intersect(&self, other: &Polytope) -> Result<Self> {
        if other.is_empty() {
            return Ok(Self::empty(self.ambient_dim));
        }
        self.intersect_halfspaces(&other.hrep().halfspaces())
    }

    /// Coordinate projection onto `coords` (in that order).
    pub fn project(&self, coords: &[usize]) -> Result<Self> {
        if let Some(&c) = coords.iter().find(|&&c| c >= self.ambient_dim) {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: c + 1 });
        }
        let pts: Vec<RatVec> = self.vertices.iter()
            .map(|v| coords.iter().map(|&c| v[c].clone()).collect())
            .collect();
        Self::hull(&pts, coords.len())
    }

    /// Exact `d`-volume in the metric induced from the ambient space.
    pub fn volume(&self) -> super::radval::RadVal {
        super::volume::volume(self)
    }
}

fn feasibility_rows(reduced: &[(RatVec, Rat)], k: usize) -> RatMat {
    // a z + s = b with z = z⁺ - z⁻, all variables ≥ 0.
    let m = reduced.len();
    reduced.iter().enumerate().map(|(i, (a, _))| {
        let mut r: RatVec = a.clone();
        r.extend(a.iter().map(|x| -x));
        r.extend((0..m).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
        debug_assert_eq!(r.len(), 2 * k + m);
        r
    }).collect()
}

fn feasibility_rhs(reduced: &[(RatVec, Rat)]) -> RatVec {
    reduced.iter().map(|(_, b)| b.clone()).collect()
}

/// Facets found in frame coordinates, written back in ambient coordinates.
fn lift_hrep(frame: &AffineFrame, facets: &[(Rat, RatVec)]) -> HRep {
    let n = frame.base.len();
    let mut out: Vec<Halfspace> = facets.iter().map(|(y0, y)| {
        // y0 + ⟨y, x_piv - base_piv⟩ ≥ 0  ⇔  ⟨-y, x_piv⟩ ≤ y0 - ⟨y, base_piv⟩
        let mut normal = vec![Rat::zero(); n];
        let mut off = y0.clone();
        for (yj, &c) in y.iter().zip(&frame.pivots) {
            normal[c] = -yj;
            off -= yj * &frame.base[c];
        }
        Halfspace::new(normal, off).canonical()
    }).collect();
    out.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
    HRep { equalities: frame.equalities(), facets: out }
}

#[derive(Serialize, Deserialize)]
struct PolytopeRepr {
    ambient_dim: usize,
    #[serde(with = "super::rat::serde_rat_mat")]
    vertices: RatMat,
}

impl Serialize for Polytope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeRepr { ambient_dim: self.ambient_dim, vertices: self.vertices.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = PolytopeRepr::deserialize(d)?;
        Polytope::hull(&r.vertices, r.ambient_dim).map_err(D::Error::custom)
    }
}
