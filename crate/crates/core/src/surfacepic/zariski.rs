//! Zariski decomposition by iterated support growth.
//!
//! Written over an ordered field so the same code runs on rationals and on first-order
//! "dual numbers" `a + bδ` (δ a positive infinitesimal), which is how the bigness walk reads
//! off the decomposition just to the right of a breakpoint.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::class::PicClass;
use super::model::SurfaceModel;
use crate::error::{Error, Result};
use crate::exactgeom::rat::Rat;

pub trait Scalar:
    Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_rat(q: Rat) -> Self;
    fn sign(&self) -> Ordering;
    /// `None` on division by zero.
    fn try_div(&self, o: &Self) -> Option<Self>;
}

impl Scalar for Rat {
    fn from_rat(q: Rat) -> Self {
        q
    }
    fn sign(&self) -> Ordering {
        self.cmp(&Rat::zero())
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        (!o.is_zero()).then(|| self / o)
    }
}

/// `v + d·δ`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual {
    pub v: Rat,
    pub d: Rat,
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual { v: self.v + o.v, d: self.d + o.d }
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual { v: self.v - o.v, d: self.d - o.d }
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual { d: &self.v * &o.d + &self.d * &o.v, v: self.v * o.v }
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual { v: -self.v, d: -self.d }
    }
}

impl Scalar for Dual {
    fn from_rat(q: Rat) -> Self {
        Dual { v: q, d: Rat::zero() }
    }
    fn sign(&self) -> Ordering {
        match self.v.cmp(&Rat::zero()) {
            Ordering::Equal => self.d.cmp(&Rat::zero()),
            s => s,
        }
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if o.v.is_zero() {
            return None;
        }
        let v = &self.v / &o.v;
        let d = (&self.d * &o.v - &self.v * &o.d) / (&o.v * &o.v);
        Some(Dual { v, d })
    }
}

/// A class with scalar coordinates `(d; m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GClass<S> {
    pub d: S,
    pub m: Vec<S>,
}

impl<S: Scalar> GClass<S> {
    pub fn from_pic(c: &PicClass) -> Self {
        Self { d: S::from_rat(c.d.clone()), m: c.m.iter().map(|x| S::from_rat(x.clone())).collect() }
    }

    pub fn dot(&self, o: &GClass<S>) -> S {
        self.m.iter().zip(&o.m).fold(self.d.clone() * o.d.clone(), |acc, (a, b)| acc - a.clone() * b.clone())
    }

    pub fn dot_pic(&self, c: &PicClass) -> S {
        self.dot(&GClass::from_pic(c))
    }

    pub fn sub_scaled(&self, k: &S, c: &PicClass) -> Self {
        let g = GClass::<S>::from_pic(c);
        Self {
            d: self.d.clone() - k.clone() * g.d,
            m: self.m.iter().zip(g.m).map(|(a, b)| a.clone() - k.clone() * b).collect(),
        }
    }
}

/// `D = P + Σ a_Γ Γ` over scalars `S`; support indices refer to `model.neg_curves`.
#[derive(Clone, Debug)]
pub struct GZariski<S> {
    pub positive: GClass<S>,
    pub support: Vec<usize>,
    pub mult: Vec<S>,
}

/// Solve `M a = b` for square `M` by Gaussian elimination over `S`.
fn solve_square<S: Scalar>(mut m: Vec<Vec<S>>, mut b: Vec<S>) -> Option<Vec<S>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&i| m[i][c].sign() != Ordering::Equal)?;
        m.swap(c, p);
        b.swap(c, p);
        for i in 0..n {
            if i != c && m[i][c].sign() != Ordering::Equal {
                let f = m[i][c].try_div(&m[c][c])?;
                for j in c..n {
                    let t = f.clone() * m[c][j].clone();
                    m[i][j] = m[i][j].clone() - t;
                }
                let t = f * b[c].clone();
                b[i] = b[i].clone() - t;
            }
        }
    }
    (0..n).map(|i| b[i].try_div(&m[i][i])).collect()
}

/// Iterated support growth; the caller guarantees pseudo-effectivity.
pub fn zariski_generic<S: Scalar>(model: &SurfaceModel, d: &GClass<S>) -> Result<GZariski<S>> {
    let curves = &model.neg_curves;
    let mut support: Vec<usize> = Vec::new();
    let mut positive = d.clone();
    let mut mult: Vec<S> = Vec::new();
    loop {
        let fresh: Vec<usize> = (0..curves.len())
            .filter(|i| !support.contains(i) && positive.dot_pic(&curves[*i]).sign() == Ordering::Less)
            .collect();
        if fresh.is_empty() {
            return Ok(GZariski { positive, support, mult });
        }
        support.extend(fresh);
        support.sort_unstable();
        let mat: Vec<Vec<S>> = support.iter().map(|&i| {
            support.iter().map(|&j| S::from_rat(super::class::intersect_unchecked(&curves[i], &curves[j]))).collect()
        }).collect();
        let rhs: Vec<S> = support.iter().map(|&i| d.dot_pic(&curves[i])).collect();
        mult = solve_square(mat, rhs).ok_or_else(|| {
            Error::SingularSupport("intersection matrix of the negative support is singular".into())
        })?;
        positive = d.clone();
        for (k, &i) in support.iter().enumerate() {
            positive = positive.sub_scaled(&mult[k], &curves[i]);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeTerm {
    pub curve: PicClass,
    #[serde(with = "crate::exactgeom::rat::serde_rat")]
    pub mult: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZariskiDecomp {
    pub positive: PicClass,
    pub negative_support: Vec<NegativeTerm>,
}

impl ZariskiDecomp {
    pub fn negative_part(&self, s: usize) -> PicClass {
        self.negative_support.iter().fold(PicClass::zero(s), |acc, t| acc.add(&t.curve.scale(&t.mult)))
    }

    pub fn multiplicity_of(&self, c: &PicClass) -> Rat {
        self.negative_support.iter().find(|t| &t.curve == c).map_or(Rat::zero(), |t| t.mult.clone())
    }

    /// Checks all defining properties; returns a description of the first failure.
    pub fn verify(&self, model: &SurfaceModel, d: &PicClass) -> std::result::Result<(), String> {
        if self.positive.add(&self.negative_part(model.s)) != *d {
            return Err("P + N does not reconstruct D".into());
        }
        if !model.is_nef(&self.positive).map_err(|e| e.to_string())? {
            return Err(format!("positive part {} is not nef", self.positive));
        }
        for t in &self.negative_support {
            if !t.mult.is_positive() {
                return Err(format!("nonpositive multiplicity on {}", t.curve));
            }
            if !super::class::intersect_unchecked(&self.positive, &t.curve).is_zero() {
                return Err(format!("P·{} != 0", t.curve));
            }
        }
        let curves: Vec<&PicClass> = self.negative_support.iter().map(|t| &t.curve).collect();
        if !negative_definite(&curves) {
            return Err("support intersection matrix is not negative definite".into());
        }
        Ok(())
    }
}

/// Sylvester: `−M` has all leading principal minors positive.
pub fn negative_definite(curves: &[&PicClass]) -> bool {
    let n = curves.len();
    let m: Vec<Vec<Rat>> = curves.iter().map(|a| {
        curves.iter().map(|b| -super::class::intersect_unchecked(a, b)).collect()
    }).collect();
    (1..=n).all(|k| {
        let minor: Vec<Vec<Rat>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        crate::exactgeom::linalg::det(&minor).is_positive()
    })
}

/// Zariski decomposition of a pseudo-effective class.
pub fn zariski(model: &SurfaceModel, d: &PicClass) -> Result<ZariskiDecomp> {
    model.check_class(d)?;
    if !model.is_psef(d)? {
        return Err(Error::NotPsef(format!("{d}")));
    }
    let g = zariski_generic::<Rat>(model, &GClass::from_pic(d))?;
    let positive = PicClass::new(g.positive.d, g.positive.m);
    let mut negative_support: Vec<NegativeTerm> = g.support.iter().zip(g.mult)
        .filter(|(_, a)| !a.is_zero())
        .map(|(&i, mult)| NegativeTerm { curve: model.neg_curves[i].clone(), mult })
        .collect();
    negative_support.sort_by(|a, b| a.curve.cmp(&b.curve));
    let out = ZariskiDecomp { positive, negative_support };
    debug_assert!(out.verify(model, d).is_ok(), "{:?}", out.verify(model, d));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{rat, ratq};

    #[test]
    fn worked_decompositions() {
        let m1 = SurfaceModel::delpezzo_general(1).unwrap();
        let z = zariski(&m1, &PicClass::from_ints(1, &[-2])).unwrap();
        assert_eq!(z.positive, PicClass::h(1));
        assert_eq!(z.negative_support, vec![NegativeTerm { curve: PicClass::e(1, 0), mult: rat(2) }]);

        let m2 = SurfaceModel::delpezzo_general(2).unwrap();
        let t = ratq(3, 5);
        let d = PicClass::new(rat(1), vec![t.clone(), t.clone()]);
        let z = zariski(&m2, &d).unwrap();
        let line = PicClass::from_ints(1, &[1, 1]);
        assert_eq!(z.multiplicity_of(&line), ratq(1, 5));
        assert_eq!(z.positive, PicClass::from_ints(2, &[1, 1]).scale(&ratq(2, 5)));
        assert!(z.verify(&m2, &d).is_ok());

        let nef = PicClass::from_ints(3, &[1, 1]);
        let z = zariski(&m2, &nef).unwrap();
        assert_eq!(z.positive, nef);
        assert!(z.negative_support.is_empty());
    }

    #[test]
    fn non_psef_is_an_error() {
        let m1 = SurfaceModel::delpezzo_general(1).unwrap();
        assert!(matches!(zariski(&m1, &PicClass::from_ints(0, &[1])), Err(Error::NotPsef(_))));
    }

    #[test]
    fn dual_numbers_order_lexicographically() {
        let a = Dual { v: rat(0), d: rat(-1) };
        assert_eq!(a.sign(), Ordering::Less);
        let b = Dual { v: rat(2), d: rat(1) };
        let q = b.try_div(&Dual { v: rat(1), d: rat(1) }).unwrap();
        assert_eq!(q, Dual { v: rat(2), d: rat(-1) });
    }
}
