//! Surface models: the blow-up of the plane together with the curves that control its cones.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::class::{intersect_unchecked, PicClass};
use crate::error::{Error, Result};
use crate::exactgeom::lp::in_cone;
use crate::exactgeom::rat::rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// `s ≤ 8` points in general position; curves are the (−1)-classes.
    DelpezzoGeneral,
    /// Caller-provided negative curves (special or infinitely near points).
    #[serde(alias = "user-supplied")]
    User,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceModel {
    pub s: usize,
    pub mode: Mode,
    pub neg_curves: Vec<PicClass>,
}

#[derive(Deserialize)]
struct ModelRepr {
    s: usize,
    mode: Mode,
    #[serde(default)]
    neg_curves: Option<Vec<PicClass>>,
}

impl<'de> Deserialize<'de> for SurfaceModel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = ModelRepr::deserialize(d)?;
        match (r.mode, r.neg_curves) {
            (Mode::DelpezzoGeneral, _) => SurfaceModel::delpezzo_general(r.s).map_err(D::Error::custom),
            (Mode::User, Some(c)) => SurfaceModel::user(r.s, c).map_err(D::Error::custom),
            (Mode::User, None) => Err(D::Error::custom("user mode needs neg_curves")),
        }
    }
}

/// The (−1)-classes on the blow-up at `s ≤ 8` general points: integral solutions of
/// `C² = −1`, `C·K = −1`, sorted by `(d, m)`.
pub fn neg_curve_classes(s: usize) -> Result<Vec<PicClass>> {
    if s == 0 {
        return Ok(Vec::new());
    }
    if s > 8 {
        return Err(Error::UnsupportedGenerality(format!(
            "{s} general points: the negative curves are not a finite known list; supply them explicitly"
        )));
    }
    let mut out = Vec::new();
    for i in 0..s {
        out.push(PicClass::e(s, i));
    }
    // d ≥ 1: m_i ≥ 0, Σ m = 3d − 1, Σ m² = d² + 1; d ≤ 6 suffices for s ≤ 8.
    for d in 1..=6i64 {
        let mut m = Vec::with_capacity(s);
        search(s, d, 3 * d - 1, d * d + 1, d, &mut m, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Nonincreasing `m` (then all permutations) with the given remaining sum and square sum.
fn search(s: usize, d: i64, sum: i64, sq: i64, cap: i64, m: &mut Vec<i64>, out: &mut Vec<PicClass>) {
    let left = (s - m.len()) as i64;
    if left == 0 {
        if sum == 0 && sq == 0 {
            for p in distinct_permutations(m) {
                out.push(PicClass::from_ints(d, &p));
            }
        }
        return;
    }
    if sum < 0 || sq < 0 || sum > cap * left || sq > cap * cap * left {
        return;
    }
    for v in (0..=cap.min(sum)).rev() {
        m.push(v);
        search(s, d, sum - v, sq - v * v, v, m, out);
        m.pop();
    }
}

fn distinct_permutations(sorted_desc: &[i64]) -> Vec<Vec<i64>> {
    let mut v = sorted_desc.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next_permutation over the ascending start
    loop {
        let n = v.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

impl SurfaceModel {
    pub fn delpezzo_general(s: usize) -> Result<Self> {
        Ok(Self { s, mode: Mode::DelpezzoGeneral, neg_curves: neg_curve_classes(s)? })
    }

    /// A model with caller-provided negative curves; each must have negative self-intersection.
    pub fn user(s: usize, neg_curves: Vec<PicClass>) -> Result<Self> {
        for c in &neg_curves {
            if c.s() != s {
                return Err(Error::ShapeMismatch(format!("curve {c} is not on {s} points")));
            }
            if !c.self_intersection().is_negative() {
                return Err(Error::InvalidInput(format!("curve {c} has nonnegative self-intersection")));
            }
        }
        Ok(Self { s, mode: Mode::User, neg_curves })
    }

    /// `neg_curves ∪ {H} ∪ {H − E_i}`: generators of the effective cone, and the test classes
    /// for nefness.
    pub fn generators(&self) -> Vec<PicClass> {
        let mut g = self.neg_curves.clone();
        g.push(PicClass::h(self.s));
        for i in 0..self.s {
            g.push(PicClass::h(self.s).sub(&PicClass::e(self.s, i)));
        }
        g
    }

    pub fn check_class(&self, d: &PicClass) -> Result<()> {
        if d.s() != self.s {
            return Err(Error::ShapeMismatch(format!("class {d} on a model with {} points", self.s)));
        }
        Ok(())
    }

    pub fn is_nef(&self, d: &PicClass) -> Result<bool> {
        self.check_class(d)?;
        Ok(self.generators().iter().all(|c| !intersect_unchecked(d, c).is_negative()))
    }

    pub fn is_psef(&self, d: &PicClass) -> Result<bool> {
        self.check_class(d)?;
        let gens: Vec<_> = self.generators().iter().map(|c| c.coords()).collect();
        Ok(in_cone(&gens, &d.coords()))
    }

    pub fn is_big(&self, d: &PicClass) -> Result<bool> {
        if !self.is_psef(d)? {
            return Ok(false);
        }
        Ok(super::zariski::zariski(self, d)?.positive.self_intersection().is_positive())
    }

    /// Ample: positive on every generator and positive square.
    pub fn is_ample(&self, d: &PicClass) -> Result<bool> {
        self.check_class(d)?;
        Ok(self.generators().iter().all(|c| intersect_unchecked(d, c).is_positive())
            && d.self_intersection().is_positive())
    }

    /// `P²` of the positive part for psef classes, 0 otherwise.
    pub fn vol(&self, d: &PicClass) -> Result<crate::exactgeom::Rat> {
        if !self.is_psef(d)? {
            return Ok(rat(0));
        }
        let p = super::zariski::zariski(self, d)?.positive.self_intersection();
        Ok(if p.is_zero() { rat(0) } else { p })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::ratq;

    #[test]
    fn classical_counts() {
        let counts: Vec<usize> = (1..=8).map(|s| neg_curve_classes(s).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 6, 10, 16, 27, 56, 240]);
        assert!(matches!(neg_curve_classes(9), Err(Error::UnsupportedGenerality(_))));
    }

    #[test]
    fn small_lists() {
        assert_eq!(neg_curve_classes(1).unwrap(), vec![PicClass::e(1, 0)]);
        let two = neg_curve_classes(2).unwrap();
        assert!(two.contains(&PicClass::from_ints(1, &[1, 1])));
        assert_eq!(two.len(), 3);
        let six = neg_curve_classes(6).unwrap();
        let by_degree = |d: i64| six.iter().filter(|c| c.d == rat(d)).count();
        assert_eq!((by_degree(0), by_degree(1), by_degree(2)), (6, 15, 6));
    }

    #[test]
    fn cone_predicates() {
        let m2 = SurfaceModel::delpezzo_general(2).unwrap();
        let half = PicClass::new(rat(1), vec![ratq(1, 2), ratq(1, 2)]);
        assert!(m2.is_nef(&half).unwrap());
        let t = PicClass::new(rat(1), vec![ratq(3, 5), ratq(3, 5)]);
        assert!(!m2.is_nef(&t).unwrap());
        let m1 = SurfaceModel::delpezzo_general(1).unwrap();
        let d = PicClass::from_ints(1, &[-2]);
        assert!(m1.is_psef(&d).unwrap());
        assert!(m1.is_big(&d).unwrap());
        assert!(!m1.is_nef(&d).unwrap());
        assert!(!m1.is_psef(&PicClass::from_ints(-1, &[0])).unwrap());
        assert_eq!(m1.vol(&d).unwrap(), rat(1));
        assert_eq!(m1.vol(&PicClass::from_ints(-1, &[0])).unwrap(), rat(0));
    }
}
