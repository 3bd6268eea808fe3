//! Smooth complete fans, torus-invariant divisors and flag cone selections.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::linalg::{det, solve, transpose};
use crate::exactgeom::lp::feasible_point;
use crate::exactgeom::rat::{rat, Rat, RatMat, RatVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct FanRepr {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for Fan {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FanRepr::deserialize(d)?;
        Fan::new(r.dim, r.rays, r.max_cones).map_err(serde::de::Error::custom)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

impl Fan {
    /// Validates smoothness and completeness; invalid fans are rejected.
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidFan("dimension must be positive".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::InvalidFan(format!("ray {i} has length {}, expected {dim}", r.len())));
            }
            if r.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
                return Err(Error::InvalidFan(format!("ray {i} is not a primitive nonzero vector")));
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (c, cone) in max_cones.iter().enumerate() {
            let mut sorted = cone.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != dim || cone.len() != dim {
                return Err(Error::InvalidFan(format!("cone {c} needs {dim} distinct rays")));
            }
            if let Some(&bad) = sorted.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!("cone {c} references missing ray {bad}")));
            }
            cones.push(sorted);
        }
        let fan = Fan { dim, rays, max_cones: cones };
        for (c, cone) in fan.max_cones.iter().enumerate() {
            if det(&fan.cone_matrix(cone)).abs() != rat(1) {
                return Err(Error::InvalidFan(format!("cone {c} is not smooth (|det| != 1)")));
            }
        }
        for i in 0..fan.rays.len() {
            if !fan.max_cones.iter().any(|c| c.contains(&i)) {
                return Err(Error::InvalidFan(format!("ray {i} lies in no maximal cone")));
            }
        }
        fan.check_complete()?;
        Ok(fan)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn ray(&self, i: usize) -> RatVec {
        self.rays[i].iter().map(|&x| rat(x)).collect()
    }

    /// Rays of a cone as the rows of a matrix.
    fn cone_matrix(&self, cone: &[usize]) -> RatMat {
        cone.iter().map(|&i| self.ray(i)).collect()
    }

    pub fn is_max_cone(&self, rays: &[usize]) -> bool {
        let mut s = rays.to_vec();
        s.sort_unstable();
        self.max_cones.contains(&s)
    }

    /// Every ridge lies in exactly two maximal cones, on opposite sides, and a generic
    /// vector lies in exactly one open cone: the cones tile `ℝⁿ`.
    fn check_complete(&self) -> Result<()> {
        let mut ridges: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, cone) in self.max_cones.iter().enumerate() {
            for (k, &left_out) in cone.iter().enumerate() {
                let mut ridge = cone.clone();
                ridge.remove(k);
                ridges.entry(ridge).or_default().push((c, left_out));
            }
        }
        for (ridge, owners) in &ridges {
            if owners.len() != 2 {
                return Err(Error::InvalidFan(format!(
                    "ridge {ridge:?} lies in {} maximal cones, expected 2",
                    owners.len()
                )));
            }
            // Opposite sides: the two leftover rays have opposite orientation w.r.t. the ridge.
            let side = |extra: usize| {
                let mut m = self.cone_matrix(ridge);
                m.push(self.ray(extra));
                det(&m).signum()
            };
            if side(owners[0].1) == side(owners[1].1) {
                return Err(Error::InvalidFan(format!("cones on ridge {ridge:?} overlap")));
            }
        }
        for attempt in 0..16i64 {
            let probe: RatVec = (0..self.dim as i64)
                .map(|k| Rat::new((1 + 7919 * (k + 1) + 104729 * attempt * (k + 2) * (k + 2)).into(), (k + 3).into()))
                .map(|x| if attempt % 2 == 1 { -x } else { x })
                .collect();
            let mut inside = 0;
            let mut on_boundary = false;
            for cone in &self.max_cones {
                let lam = solve(&transpose(&self.cone_matrix(cone)), &probe).expect("smooth cone");
                if lam.iter().any(|x| x.is_zero()) {
                    on_boundary = true;
                    break;
                }
                if lam.iter().all(|x| x.is_positive()) {
                    inside += 1;
                }
            }
            if on_boundary {
                continue;
            }
            return if inside == 1 {
                Ok(())
            } else {
                Err(Error::InvalidFan(format!("a generic vector lies in {inside} maximal cones")))
            };
        }
        Err(Error::InvalidFan("could not find a generic probe vector".into()))
    }
}

/// `D = Σ a_ρ D_ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricDivisor {
    #[serde(with = "crate::exactgeom::rat::serde_rat_vec")]
    pub coeffs: RatVec,
}

impl ToricDivisor {
    pub fn new(coeffs: RatVec) -> Self {
        Self { coeffs }
    }

    /// `Σ c·D_ρ` over the listed `(ray, c)` pairs.
    pub fn from_terms(n_rays: usize, terms: &[(usize, i64)]) -> Self {
        let mut coeffs = vec![Rat::zero(); n_rays];
        for &(i, c) in terms {
            coeffs[i] += rat(c);
        }
        Self { coeffs }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }

    pub fn add(&self, other: &ToricDivisor) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_integer())
    }

    pub(crate) fn check_len(&self, fan: &Fan) -> Result<()> {
        if self.coeffs.len() != fan.rays.len() {
            return Err(Error::DimensionMismatch { expected: fan.rays.len(), got: self.coeffs.len() });
        }
        Ok(())
    }
}

/// Ordered flag cones `σ_1, …, σ_r`, each listing its rays `v_1^{(i)}, …, v_n^{(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricFlagSpec {
    pub flags: Vec<Vec<usize>>,
}

impl ToricFlagSpec {
    pub fn new(flags: Vec<Vec<usize>>) -> Self {
        Self { flags }
    }

    pub fn r(&self) -> usize {
        self.flags.len()
    }

    pub fn single(&self, i: usize) -> Self {
        Self { flags: vec![self.flags[i].clone()] }
    }

    pub fn flag_rays(&self) -> impl Iterator<Item = usize> + '_ {
        self.flags.iter().flatten().copied()
    }

    pub fn validate(&self, fan: &Fan) -> Result<()> {
        if self.flags.is_empty() {
            return Err(Error::InvalidFlags("at least one flag cone is required".into()));
        }
        for (i, f) in self.flags.iter().enumerate() {
            if !fan.is_max_cone(f) || f.len() != fan.dim {
                return Err(Error::InvalidFlags(format!("flag {i} ({f:?}) is not an ordered maximal cone")));
            }
        }
        for i in 0..self.flags.len() {
            for j in i + 1..self.flags.len() {
                if self.flags[i].iter().any(|x| self.flags[j].contains(x)) {
                    return Err(Error::InvalidFlags(format!("flag cones {i} and {j} share a ray")));
                }
                if cones_meet(fan, &self.flags[i], &self.flags[j]) {
                    return Err(Error::InvalidFlags(format!("flag cones {i} and {j} intersect nontrivially")));
                }
            }
        }
        Ok(())
    }
}

/// LP test for a nonzero common point: `Σλ v = Σμ w`, `λ, μ ≥ 0`, `Σλ = 1`.
fn cones_meet(fan: &Fan, a: &[usize], b: &[usize]) -> bool {
    let n = fan.dim;
    let mut rows: RatMat = (0..n).map(|k| {
        let mut row: RatVec = a.iter().map(|&i| rat(fan.rays[i][k])).collect();
        row.extend(b.iter().map(|&i| rat(-fan.rays[i][k])));
        row
    }).collect();
    let mut norm: RatVec = a.iter().map(|_| rat(1)).collect();
    norm.extend(b.iter().map(|_| rat(0)));
    rows.push(norm);
    let mut rhs = vec![rat(0); n];
    rhs.push(rat(1));
    feasible_point(&rows, &rhs).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_fans() {
        // singular cone
        assert!(Fan::new(2, vec![vec![1, 0], vec![1, 2], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![2, 0]]).is_err());
        // incomplete: missing a cone
        assert!(Fan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2]]).is_err());
        // non-primitive ray
        assert!(Fan::new(1, vec![vec![2], vec![-1]], vec![vec![0], vec![1]]).is_err());
        // the square fan of P1 x P1 is fine
        let rays = vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]];
        let cones = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]];
        assert!(Fan::new(2, rays, cones).is_ok());
    }

    #[test]
    fn flag_validation() {
        let fan = Fan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![2, 0]]).unwrap();
        assert!(ToricFlagSpec::new(vec![vec![1, 0]]).validate(&fan).is_ok());
        assert!(ToricFlagSpec::new(vec![vec![0, 1], vec![1, 2]]).validate(&fan).is_err());
        assert!(ToricFlagSpec::new(vec![vec![0, 2, 1]]).validate(&fan).is_err());
    }

    #[test]
    fn projective_line() {
        assert!(Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).is_ok());
    }
}
