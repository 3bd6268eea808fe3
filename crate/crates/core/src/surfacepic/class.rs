//! Divisor classes `dH − Σ m_i E_i` on the blow-up of the plane at `s` points.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::rat::{fmt_rat, rat, Rat, RatVec};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PicClass {
    #[serde(with = "crate::exactgeom::rat::serde_rat")]
    pub d: Rat,
    #[serde(with = "crate::exactgeom::rat::serde_rat_vec")]
    pub m: RatVec,
}

impl PicClass {
    pub fn new(d: Rat, m: RatVec) -> Self {
        Self { d, m }
    }

    pub fn from_ints(d: i64, m: &[i64]) -> Self {
        Self { d: rat(d), m: m.iter().map(|&x| rat(x)).collect() }
    }

    pub fn s(&self) -> usize {
        self.m.len()
    }

    pub fn zero(s: usize) -> Self {
        Self { d: Rat::zero(), m: vec![Rat::zero(); s] }
    }

    pub fn h(s: usize) -> Self {
        Self { d: Rat::one(), m: vec![Rat::zero(); s] }
    }

    /// The exceptional curve `E_i` (0-based), i.e. `m_i = −1`.
    pub fn e(s: usize, i: usize) -> Self {
        let mut m = vec![Rat::zero(); s];
        m[i] = -Rat::one();
        Self { d: Rat::zero(), m }
    }

    /// `Σ_i w_i E_i`.
    pub fn exceptional_sum(weights: &[Rat]) -> Self {
        Self { d: Rat::zero(), m: weights.iter().map(|w| -w).collect() }
    }

    /// `−3H + Σ E_i`.
    pub fn canonical(s: usize) -> Self {
        Self { d: rat(-3), m: vec![rat(-1); s] }
    }

    pub fn add(&self, o: &PicClass) -> Self {
        Self { d: &self.d + &o.d, m: self.m.iter().zip(&o.m).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &PicClass) -> Self {
        Self { d: &self.d - &o.d, m: self.m.iter().zip(&o.m).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self { d: &self.d * c, m: self.m.iter().map(|a| a * c).collect() }
    }

    /// Coordinates `(d, −m_1, …, −m_s)` in the basis `H, E_1, …, E_s`.
    pub fn coords(&self) -> RatVec {
        let mut v = vec![self.d.clone()];
        v.extend(self.m.iter().map(|x| -x));
        v
    }

    pub fn self_intersection(&self) -> Rat {
        intersect_unchecked(self, self)
    }

    pub fn check_same_s(&self, o: &PicClass) -> Result<()> {
        if self.s() != o.s() {
            return Err(Error::ShapeMismatch(format!("classes on {} and {} points", self.s(), o.s())));
        }
        Ok(())
    }
}

pub(crate) fn intersect_unchecked(a: &PicClass, b: &PicClass) -> Rat {
    a.m.iter().zip(&b.m).fold(&a.d * &b.d, |acc, (x, y)| acc - x * y)
}

/// `dd' − Σ m_i m_i'`.
pub fn intersect(a: &PicClass, b: &PicClass) -> Result<Rat> {
    a.check_same_s(b)?;
    Ok(intersect_unchecked(a, b))
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.m.iter().map(fmt_rat).collect();
        write!(f, "({}; {})", fmt_rat(&self.d), ms.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let h = PicClass::h(2);
        let e = PicClass::e(2, 0);
        assert_eq!(intersect(&h, &h).unwrap(), rat(1));
        assert_eq!(intersect(&e, &e).unwrap(), rat(-1));
        assert_eq!(intersect(&h, &e).unwrap(), rat(0));
        assert!(intersect(&h, &PicClass::h(3)).is_err());
    }

    #[test]
    fn worked_squares() {
        assert_eq!(PicClass::from_ints(3, &[1; 9]).self_intersection(), rat(0));
        assert_eq!(PicClass::from_ints(1, &[1, 1]).self_intersection(), rat(-1));
        let k = PicClass::canonical(2);
        assert_eq!(intersect(&PicClass::e(2, 1), &k).unwrap(), rat(-1));
    }
}
