//! Exact bigness thresholds along rays `t ↦ D − tF` by walking Zariski chambers.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::class::PicClass;
use super::model::SurfaceModel;
use super::zariski::{zariski_generic, Dual, GClass};
use crate::error::{Error, Result};
use crate::exactgeom::radval::{QuadSurd, RadVal};
use crate::exactgeom::rat::Rat;

/// Where `D − tF` stops being big, plus the rational chamber walls crossed on the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BignessWalk {
    pub threshold: QuadSurd,
    #[serde(with = "crate::exactgeom::rat::serde_rat_vec")]
    pub breakpoints: Vec<Rat>,
}

fn dual_class(d: &PicClass, f: &PicClass, t: &Rat) -> GClass<Dual> {
    let at = |x: &Rat, y: &Rat| Dual { v: x - t * y, d: -y.clone() };
    GClass { d: at(&d.d, &f.d), m: d.m.iter().zip(&f.m).map(|(x, y)| at(x, y)).collect() }
}

fn split(g: &GClass<Dual>) -> (PicClass, PicClass) {
    (
        PicClass::new(g.d.v.clone(), g.m.iter().map(|x| x.v.clone()).collect()),
        PicClass::new(g.d.d.clone(), g.m.iter().map(|x| x.d.clone()).collect()),
    )
}

/// Smallest `x > 0` with `A + 2Bx + Cx² = 0`.
fn first_positive_root(a: &Rat, b: &Rat, c: &Rat) -> Result<Option<QuadSurd>> {
    if c.is_zero() {
        if b.is_negative() {
            return Ok(Some(QuadSurd::from_rat(-a / (Rat::from_integer(2.into()) * b))));
        }
        return Ok(None);
    }
    let disc = b * b - a * c;
    if disc.is_negative() {
        return Ok(None);
    }
    let root = RadVal::sqrt(&disc)?.scale(&(Rat::from_integer(1.into()) / c));
    let base = -b / c;
    let candidates = [QuadSurd::new(base.clone(), root.clone()), QuadSurd::new(base, root.scale(&Rat::from_integer((-1).into())))];
    Ok(candidates.into_iter().filter(|x| x.signum() == Ordering::Greater).min())
}

/// Walks from `t = 0`; `D` must be big.
pub fn bigness_walk(model: &SurfaceModel, d: &PicClass, f: &PicClass) -> Result<BignessWalk> {
    model.check_class(d)?;
    model.check_class(f)?;
    if !model.is_big(d)? {
        return Err(Error::NotBig(format!("{d}")));
    }
    let mut t = Rat::zero();
    let mut breakpoints = Vec::new();
    // Each chamber is entered once; the bound only guards against a wrong curve list.
    for _ in 0..=4 * (model.neg_curves.len() + 2) {
        let z = zariski_generic::<Dual>(model, &dual_class(d, f, &t))?;
        let (p, dp) = split(&z.positive);
        let mut next: Option<Rat> = None;
        let mut consider = |s: Rat| {
            if next.as_ref().is_none_or(|n| s < *n) {
                next = Some(s);
            }
        };
        for (i, c) in model.neg_curves.iter().enumerate() {
            if z.support.contains(&i) {
                continue;
            }
            let (pc, qc) = (super::class::intersect_unchecked(&p, c), super::class::intersect_unchecked(&dp, c));
            if qc.is_negative() {
                consider(&t - pc / qc);
            }
        }
        for a in &z.mult {
            if a.d.is_negative() {
                consider(&t - &a.v / &a.d);
            }
        }
        let sq = p.self_intersection();
        let lin = super::class::intersect_unchecked(&p, &dp);
        let quad = dp.self_intersection();
        let root = first_positive_root(&sq, &lin, &quad)?.map(|x| x.add_rat(&t));
        match (root, next) {
            (Some(r), Some(n)) if r <= QuadSurd::from_rat(n.clone()) => {
                return Ok(BignessWalk { threshold: r, breakpoints });
            }
            (Some(r), None) => return Ok(BignessWalk { threshold: r, breakpoints }),
            (_, Some(n)) => {
                breakpoints.push(n.clone());
                t = n;
            }
            (None, None) => return Err(Error::Unbounded(format!("{d} − t·{f} stays big for all t"))),
        }
    }
    Err(Error::SingularSupport("chamber walk did not terminate; check the curve list".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{rat, ratq};

    fn mu(s: usize) -> BignessWalk {
        let m = SurfaceModel::delpezzo_general(s).unwrap();
        let f = PicClass::exceptional_sum(&vec![rat(1); s]);
        bigness_walk(&m, &PicClass::h(s), &f).unwrap()
    }

    #[test]
    fn nakayama_constants_of_the_line_class() {
        assert_eq!(mu(1).threshold, QuadSurd::from_rat(rat(1)));
        assert_eq!(mu(2).threshold, QuadSurd::from_rat(rat(1)));
        assert_eq!(mu(2).breakpoints, vec![ratq(1, 2)]);
        assert_eq!(mu(3).threshold, QuadSurd::from_rat(ratq(2, 3)));
        assert_eq!(mu(4).threshold, QuadSurd::from_rat(ratq(1, 2)));
    }

    #[test]
    fn roots() {
        // 1 − x² : root 1
        assert_eq!(first_positive_root(&rat(1), &rat(0), &rat(-1)).unwrap(), Some(QuadSurd::from_rat(rat(1))));
        // 2 − 2x·... : 1 − 2x → x = 1/2
        assert_eq!(first_positive_root(&rat(1), &rat(-1), &rat(0)).unwrap(), Some(QuadSurd::from_rat(ratq(1, 2))));
        // 1 − 3x² : 1/√3
        let r = first_positive_root(&rat(1), &rat(0), &rat(-3)).unwrap().unwrap();
        assert_eq!(r.square(), QuadSurd::from_rat(ratq(1, 3)));
        assert_eq!(first_positive_root(&rat(1), &rat(1), &rat(0)).unwrap(), None);
    }
}
