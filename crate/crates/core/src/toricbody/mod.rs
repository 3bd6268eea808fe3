//! Extended Okounkov bodies of torus-invariant divisors.
//!
//! For flags given by maximal cones `σ_1, …, σ_r` and a divisor vanishing on every flag
//! ray, the body is the image of the divisor polytope `P_D` under
//! `φ̄(u) = (⟨u, v_j^{(i)}⟩)_{i,j}`. A lattice-point sampler over `P_{mD}` gives an
//! independent inner approximation through the graded semigroup.

pub mod fan;
pub mod fixtures;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use fan::{Fan, ToricDivisor, ToricFlagSpec};

use crate::error::{Error, Result};
use crate::exactgeom::polytope::{Halfspace, Polytope};
use crate::exactgeom::rat::{ceil, dot, floor, rat, Rat, RatMat, RatVec};

/// `P_D = {m : ⟨m, u_ρ⟩ ≥ -a_ρ}`.
pub fn divisor_polytope(fan: &Fan, d: &ToricDivisor) -> Result<Polytope> {
    d.check_len(fan)?;
    let hs: Vec<Halfspace> = (0..fan.rays().len())
        .map(|i| Halfspace::new(fan.ray(i).iter().map(|x| -x).collect(), d.coeffs[i].clone()))
        .collect();
    Polytope::from_halfspaces(fan.dim(), &hs, &[])
}

/// The `nr × n` matrix whose row `(i, j)` is `v_j^{(i)}`.
pub fn flag_matrix(fan: &Fan, flags: &ToricFlagSpec) -> Result<RatMat> {
    flags.validate(fan)?;
    Ok(flags.flag_rays().map(|i| fan.ray(i)).collect())
}

pub fn extended_body_toric(fan: &Fan, d: &ToricDivisor, flags: &ToricFlagSpec) -> Result<Polytope> {
    d.check_len(fan)?;
    let m = flag_matrix(fan, flags)?;
    if let Some(ray) = flags.flag_rays().find(|&i| !d.coeffs[i].is_zero()) {
        return Err(Error::UnrepresentedDivisor {
            ray,
            hint: "choose a linearly equivalent representative supported away from the flag cones".into(),
        });
    }
    if !d.is_integral() {
        return Err(Error::InvalidInput("divisor coefficients must be integers; rescale and use homogeneity".into()));
    }
    let p = divisor_polytope(fan, d)?;
    if p.is_empty() {
        return Err(Error::InvalidInput("divisor has no global sections (empty P_D)".into()));
    }
    p.affine_image(&m, &vec![rat(0); m.len()])
}

/// Valuation vector of one monomial section, with the level (multiple of `D`) it lives in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ValuationVector {
    pub entries: Vec<BigInt>,
    pub level: u64,
}

/// `ν(χ^u)_j^{(i)} = a_{v_j^{(i)}} + ⟨u, v_j^{(i)}⟩`.
pub fn monomial_valuation(fan: &Fan, d: &ToricDivisor, flags: &ToricFlagSpec, u: &[BigInt]) -> Result<ValuationVector> {
    monomial_valuation_at_level(fan, d, flags, u, 1)
}

fn monomial_valuation_at_level(
    fan: &Fan,
    d: &ToricDivisor,
    flags: &ToricFlagSpec,
    u: &[BigInt],
    level: u64,
) -> Result<ValuationVector> {
    d.check_len(fan)?;
    flags.validate(fan)?;
    if u.len() != fan.dim() {
        return Err(Error::DimensionMismatch { expected: fan.dim(), got: u.len() });
    }
    if !d.is_integral() {
        return Err(Error::InvalidInput("monomial valuations need an integral divisor".into()));
    }
    let ur: RatVec = u.iter().map(|x| Rat::from_integer(x.clone())).collect();
    for i in 0..fan.rays().len() {
        if (dot(&ur, &fan.ray(i)) + &d.coeffs[i]).is_negative() {
            return Err(Error::NotInPolytope(format!("lattice point {u:?} violates ray {i}")));
        }
    }
    let entries = flags
        .flag_rays()
        .map(|i| (&d.coeffs[i] + dot(&ur, &fan.ray(i))).to_integer())
        .collect();
    Ok(ValuationVector { entries, level })
}

/// Image of `P_D` under the monomial valuation map `u ↦ a + φ̄(u)`.
///
/// With one flag this is the Okounkov body of `D` for any (rational) coefficients: twisting by
/// the character that clears the flag-ray coefficients turns it into the formula above. With
/// several flags it is the hull of monomial valuations only.
pub fn monomial_body(fan: &Fan, d: &ToricDivisor, flags: &ToricFlagSpec) -> Result<Polytope> {
    d.check_len(fan)?;
    let m = flag_matrix(fan, flags)?;
    let shift: RatVec = flags.flag_rays().map(|i| d.coeffs[i].clone()).collect();
    let p = divisor_polytope(fan, d)?;
    if p.is_empty() {
        return Ok(Polytope::empty(m.len()));
    }
    p.affine_image(&m, &shift)
}

/// Lattice points of a polytope, by bounding-box scan; sorted.
pub fn lattice_points(p: &Polytope) -> Vec<Vec<BigInt>> {
    if p.is_empty() {
        return Vec::new();
    }
    let n = p.ambient_dim();
    let lo: Vec<BigInt> = (0..n).map(|k| ceil(p.vertices().iter().map(|v| &v[k]).min().unwrap())).collect();
    let hi: Vec<BigInt> = (0..n).map(|k| floor(p.vertices().iter().map(|v| &v[k]).max().unwrap())).collect();
    if lo.iter().zip(&hi).any(|(a, b)| a > b) {
        return Vec::new();
    }
    let h = p.hrep();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let x: RatVec = cur.iter().map(|c| Rat::from_integer(c.clone())).collect();
        if h.satisfied_by(&x) {
            out.push(cur.clone());
        }
        // odometer
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                for c in k + 1..n {
                    cur[c] = lo[c].clone();
                }
                break;
            }
        }
    }
}

/// Valuation vectors of all monomials in `H⁰(mD)`, `1 ≤ m ≤ m_max`.
pub fn semigroup_sample(fan: &Fan, d: &ToricDivisor, flags: &ToricFlagSpec, m_max: u64) -> Result<Vec<ValuationVector>> {
    if m_max == 0 {
        return Err(Error::InvalidInput("m_max must be at least 1".into()));
    }
    let mut out = Vec::new();
    for m in 1..=m_max {
        let dm = d.scale(&rat(m as i64));
        let p = divisor_polytope(fan, &dm)?;
        for u in lattice_points(&p) {
            out.push(monomial_valuation_at_level(fan, &dm, flags, &u, m)?);
        }
    }
    Ok(out)
}

pub fn semigroup_body_approx(fan: &Fan, d: &ToricDivisor, flags: &ToricFlagSpec, m_max: u64) -> Result<Polytope> {
    let sample = semigroup_sample(fan, d, flags, m_max)?;
    if sample.is_empty() {
        return Ok(Polytope::empty(fan.dim() * flags.r()));
    }
    let graded: Vec<(RatVec, u64)> = sample
        .into_iter()
        .map(|v| (v.entries.into_iter().map(Rat::from_integer).collect(), v.level))
        .collect();
    Polytope::cone_base(&graded)
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::exactgeom::rat::{rmat, rvec};

    fn poly(pts: &[&[i64]]) -> Polytope {
        Polytope::hull(&rmat(pts), pts[0].len()).unwrap()
    }

    #[test]
    fn divisor_polytopes() {
        let p2 = p2_fan();
        let o1 = ToricDivisor::from_terms(3, &[(2, 1)]);
        assert_eq!(divisor_polytope(&p2, &o1).unwrap(), poly(&[&[0, 0], &[1, 0], &[0, 1]]));
        assert_eq!(divisor_polytope(&p2, &ToricDivisor::from_terms(3, &[])).unwrap(), poly(&[&[0, 0]]));
        let bl1 = bl1_fan();
        let h = ToricDivisor::from_terms(4, &[(3, 1)]);
        assert_eq!(divisor_polytope(&bl1, &h).unwrap(), poly(&[&[0, 0], &[1, 0], &[0, 1]]));
    }

    #[test]
    fn flag_matrices() {
        assert_eq!(flag_matrix(&p2_fan(), &ToricFlagSpec::new(vec![vec![0, 1]])).unwrap(), rmat(&[&[1, 0], &[0, 1]]));
        assert_eq!(flag_matrix(&bl1_fan(), &ToricFlagSpec::new(vec![vec![2, 0]])).unwrap(), rmat(&[&[1, 1], &[1, 0]]));
        let m = flag_matrix(&bl2_fan(), &ToricFlagSpec::new(vec![vec![2, 0], vec![3, 1]])).unwrap();
        assert_eq!(m, rmat(&[&[1, 1], &[1, 0], &[-1, 0], &[0, 1]]));
        assert!(flag_matrix(&bl2_fan(), &ToricFlagSpec::new(vec![vec![2, 0], vec![0, 4]])).is_err());
    }

    #[test]
    fn toric_bodies() {
        let p2 = p2_fan();
        let b = extended_body_toric(&p2, &ToricDivisor::from_terms(3, &[(2, 1)]), &ToricFlagSpec::new(vec![vec![0, 1]])).unwrap();
        assert_eq!(b, poly(&[&[0, 0], &[1, 0], &[0, 1]]));
        let bl1 = bl1_fan();
        let b = extended_body_toric(&bl1, &ToricDivisor::from_terms(4, &[(3, 1)]), &ToricFlagSpec::new(vec![vec![2, 0]])).unwrap();
        assert_eq!(b, poly(&[&[0, 0], &[1, 1], &[1, 0]]));
        // P_D is the segment {0} × [0, 1], so the two-point body is a segment as well.
        let bl2 = bl2_fan();
        let flags = ToricFlagSpec::new(vec![vec![2, 0], vec![3, 1]]);
        let b = extended_body_toric(&bl2, &ToricDivisor::from_terms(5, &[(4, 1)]), &flags).unwrap();
        assert_eq!(b, poly(&[&[0, 0, 0, 0], &[1, 0, 0, 1]]));
        let sampled = semigroup_body_approx(&bl2, &ToricDivisor::from_terms(5, &[(4, 1)]), &flags, 3).unwrap();
        assert_eq!(sampled, b);
    }

    #[test]
    fn unrepresented_divisor_is_rejected() {
        let bl1 = bl1_fan();
        let d = ToricDivisor::from_terms(4, &[(0, 1), (3, 1)]);
        assert!(matches!(
            extended_body_toric(&bl1, &d, &ToricFlagSpec::new(vec![vec![2, 0]])),
            Err(Error::UnrepresentedDivisor { ray: 0, .. })
        ));
    }

    #[test]
    fn monomial_valuations() {
        let bl1 = bl1_fan();
        let d = ToricDivisor::from_terms(4, &[(3, 1)]);
        let f = ToricFlagSpec::new(vec![vec![2, 0]]);
        let v = |a: i64, b: i64| monomial_valuation(&bl1, &d, &f, &[a.into(), b.into()]).unwrap().entries;
        assert_eq!(v(0, 0), vec![BigInt::from(0), BigInt::from(0)]);
        assert_eq!(v(1, 0), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(v(0, 1), vec![BigInt::from(1), BigInt::from(0)]);
        assert!(monomial_valuation(&bl1, &d, &f, &[2.into(), 0.into()]).is_err());
    }

    #[test]
    fn sampler_examples() {
        let p2 = p2_fan();
        let f = ToricFlagSpec::new(vec![vec![0, 1]]);
        let o1 = ToricDivisor::from_terms(3, &[(2, 1)]);
        assert_eq!(semigroup_body_approx(&p2, &o1, &f, 1).unwrap(), extended_body_toric(&p2, &o1, &f).unwrap());
        let zero = ToricDivisor::from_terms(3, &[]);
        for m in 1..4 {
            assert_eq!(semigroup_body_approx(&p2, &zero, &f, m).unwrap(), poly(&[&[0, 0]]));
        }
    }

    #[test]
    fn lattice_point_scan() {
        let p = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(lattice_points(&p).len(), 6);
        let q = Polytope::hull(&[rvec(&[0, 0]), vec![Rat::new(1.into(), 2.into()), rat(0)]], 2).unwrap();
        assert_eq!(lattice_points(&q).len(), 1);
    }
}
