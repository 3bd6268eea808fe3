//! Numbers of the form `q·√k` and `a + q·√k` with rational `a, q` and square-free `k`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::{fmt_rat, parse_rat, Rat};
use crate::error::{Error, Result};

/// Split `n ≥ 1` as `s²·f` with `f` square-free.
///
/// Trial division runs only while `p³ ≤ cofactor`; what survives has at most two prime
/// factors, so it is either square-free or a perfect square.
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "square_free_split needs a positive integer");
    let mut rest = n.clone();
    let mut outside = BigInt::one();
    let mut inside = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        outside *= p.pow(e / 2);
        if e % 2 == 1 {
            inside *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        outside *= r;
    } else {
        inside *= rest;
    }
    (outside, inside)
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// `coeff · √radicand` with `radicand` square-free; zero is `0·√1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadVal {
    coeff: Rat,
    radicand: BigInt,
}

impl RadVal {
    pub fn new(coeff: Rat, radicand: BigInt) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::InvalidInput(format!("negative radicand {radicand}")));
        }
        if coeff.is_zero() || radicand.is_zero() {
            return Ok(Self::zero());
        }
        let (out, inside) = square_free_split(&radicand);
        Ok(Self { coeff: coeff * Rat::from_integer(out), radicand: inside })
    }

    pub fn zero() -> Self {
        Self { coeff: Rat::zero(), radicand: BigInt::one() }
    }

    pub fn from_rat(q: Rat) -> Self {
        Self { coeff: q, radicand: BigInt::one() }
    }

    /// `√q` for a nonnegative rational: `√(p/q) = √(pq)/q`.
    pub fn sqrt(q: &Rat) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::InvalidInput(format!("square root of negative {}", fmt_rat(q))));
        }
        let den = q.denom().clone();
        Self::new(Rat::new(BigInt::one(), den.clone()), q.numer() * den)
    }

    pub fn coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coeff.clone())
    }

    /// Exact square, always rational.
    pub fn square(&self) -> Rat {
        &self.coeff * &self.coeff * Rat::from_integer(self.radicand.clone())
    }

    pub fn mul(&self, other: &RadVal) -> RadVal {
        Self::new(&self.coeff * &other.coeff, &self.radicand * &other.radicand)
            .expect("product of nonnegative radicands")
    }

    pub fn scale(&self, q: &Rat) -> RadVal {
        if q.is_zero() {
            return Self::zero();
        }
        Self { coeff: &self.coeff * q, radicand: self.radicand.clone() }
    }

    /// Sum of two values with the same radicand (or one of them zero).
    pub fn try_add(&self, other: &RadVal) -> Option<RadVal> {
        if self.coeff.is_zero() {
            return Some(other.clone());
        }
        if other.coeff.is_zero() {
            return Some(self.clone());
        }
        if self.radicand != other.radicand {
            return None;
        }
        let c = &self.coeff + &other.coeff;
        Some(if c.is_zero() { Self::zero() } else { Self { coeff: c, radicand: self.radicand.clone() } })
    }

    pub fn signum(&self) -> Ordering {
        self.coeff.cmp(&Rat::zero())
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.coeff.to_f64().unwrap_or(f64::NAN) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    pub fn as_surd(&self) -> QuadSurd {
        QuadSurd::new(Rat::zero(), self.clone())
    }
}

impl PartialOrd for RadVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RadVal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.as_surd().cmp(&other.as_surd())
    }
}

impl fmt::Display for RadVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", fmt_rat(&self.coeff))
        } else if self.coeff.is_one() {
            write!(f, "sqrt({})", self.radicand)
        } else {
            write!(f, "{}*sqrt({})", fmt_rat(&self.coeff), self.radicand)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RadRepr {
    coeff: String,
    radicand: String,
}

impl Serialize for RadVal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RadRepr { coeff: fmt_rat(&self.coeff), radicand: self.radicand.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RadVal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = RadRepr::deserialize(d)?;
        let c = parse_rat(&r.coeff).map_err(D::Error::custom)?;
        let k: BigInt = r.radicand.trim().parse().map_err(|_| D::Error::custom("malformed radicand"))?;
        RadVal::new(c, k).map_err(D::Error::custom)
    }
}

/// `shift + coeff·√radicand`: the quadratic irrationals produced by bigness thresholds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    shift: Rat,
    coeff: Rat,
    radicand: BigInt,
}

impl QuadSurd {
    pub fn new(shift: Rat, rad: RadVal) -> Self {
        Self { shift, coeff: rad.coeff, radicand: rad.radicand }.normalized()
    }

    pub fn from_rat(q: Rat) -> Self {
        Self { shift: q, coeff: Rat::zero(), radicand: BigInt::one() }
    }

    pub fn shift(&self) -> &Rat {
        &self.shift
    }

    pub fn radical(&self) -> RadVal {
        RadVal { coeff: self.coeff.clone(), radicand: self.radicand.clone() }
    }

    /// Collapse `q·√1` into the shift.
    fn normalized(mut self) -> Self {
        if self.radicand.is_one() || self.coeff.is_zero() {
            self.shift += &self.coeff;
            self.coeff = Rat::zero();
            self.radicand = BigInt::one();
        }
        self
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero() || self.radicand.is_one()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        let n = self.clone().normalized();
        n.coeff.is_zero().then_some(n.shift)
    }

    /// Pure radical (zero shift) view, if it is one.
    pub fn to_radval(&self) -> Option<RadVal> {
        let n = self.clone().normalized();
        if n.shift.is_zero() {
            Some(n.radical())
        } else if n.coeff.is_zero() {
            Some(RadVal::from_rat(n.shift))
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        Self { shift: -&self.shift, coeff: -&self.coeff, radicand: self.radicand.clone() }
    }

    pub fn add_rat(&self, q: &Rat) -> Self {
        Self { shift: &self.shift + q, ..self.clone() }
    }

    pub fn scale(&self, q: &Rat) -> Self {
        Self { shift: &self.shift * q, coeff: &self.coeff * q, radicand: self.radicand.clone() }.normalized()
    }

    pub fn sub_radval(&self, r: &RadVal) -> Result<Self> {
        if self.is_rational() {
            return Ok(QuadSurd::new(self.to_rat().unwrap(), r.scale(&-Rat::one())).normalized());
        }
        if r.coeff.is_zero() {
            return Ok(self.clone());
        }
        if r.radicand != self.radicand {
            return Err(Error::HigherDegree("sum of two unrelated square roots".into()));
        }
        Ok(Self { coeff: &self.coeff - &r.coeff, ..self.clone() }.normalized())
    }

    /// Exact square, which stays in the same quadratic field.
    pub fn square(&self) -> Self {
        let k = Rat::from_integer(self.radicand.clone());
        Self {
            shift: &self.shift * &self.shift + &self.coeff * &self.coeff * &k,
            coeff: Rat::from_integer(BigInt::from(2)) * &self.shift * &self.coeff,
            radicand: self.radicand.clone(),
        }
        .normalized()
    }

    /// `q / self`, rationalising the denominator.
    pub fn div_into(&self, q: &Rat) -> Result<Self> {
        let norm = &self.shift * &self.shift - &self.coeff * &self.coeff * Rat::from_integer(self.radicand.clone());
        if norm.is_zero() {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        let f = q / norm;
        Ok(Self { shift: &self.shift * &f, coeff: -&self.coeff * &f, radicand: self.radicand.clone() }.normalized())
    }

    pub fn signum(&self) -> Ordering {
        sign3(&self.shift, &self.coeff, &self.radicand, &Rat::zero(), &BigInt::one())
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.shift.to_f64().unwrap_or(f64::NAN) + self.radical().to_f64()
    }
}

/// Sign of `a + b√k + c√l` for nonnegative `k, l`.
fn sign3(a: &Rat, b: &Rat, k: &BigInt, c: &Rat, l: &BigInt) -> Ordering {
    // u = a + b√k, v = -c√l; sign(u - v).
    let su = sign2(a, b, k);
    let sv = (-c).cmp(&Rat::zero());
    if c.is_zero() || l.is_zero() {
        return su;
    }
    if su != sv {
        // u and v have different signs (or one is zero): u - v has the sign of the larger.
        return match (su, sv) {
            (Ordering::Equal, s) => s.reverse(),
            (s, _) => s,
        };
    }
    // Same strict sign: compare u² and v².
    let kk = Rat::from_integer(k.clone());
    let u2a = a * a + b * b * &kk;
    let u2b = Rat::from_integer(BigInt::from(2)) * a * b;
    let v2 = c * c * Rat::from_integer(l.clone());
    let diff = sign2(&(u2a - v2), &u2b, k);
    if su == Ordering::Greater {
        diff
    } else {
        diff.reverse()
    }
}

/// Sign of `a + b√k`.
fn sign2(a: &Rat, b: &Rat, k: &BigInt) -> Ordering {
    let sa = a.cmp(&Rat::zero());
    let sb = b.cmp(&Rat::zero());
    if sb == Ordering::Equal || k.is_zero() {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // Opposite signs: compare a² with b²k.
    let lhs = a * a;
    let rhs = b * b * Rat::from_integer(k.clone());
    match lhs.cmp(&rhs) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => sa,
        Ordering::Less => sb,
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = &self.shift - &other.shift;
        if self.radicand == other.radicand {
            return sign2(&a, &(&self.coeff - &other.coeff), &self.radicand);
        }
        sign3(&a, &self.coeff, &self.radicand, &-&other.coeff, &other.radicand)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.clone().normalized();
        if n.coeff.is_zero() {
            write!(f, "{}", fmt_rat(&n.shift))
        } else if n.shift.is_zero() {
            write!(f, "{}", n.radical())
        } else {
            write!(f, "{} + {}", fmt_rat(&n.shift), n.radical())
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SurdRepr {
    shift: String,
    coeff: String,
    radicand: String,
}

impl Serialize for QuadSurd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.clone().normalized();
        SurdRepr { shift: fmt_rat(&n.shift), coeff: fmt_rat(&n.coeff), radicand: n.radicand.to_string() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadSurd {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = SurdRepr::deserialize(d)?;
        let a = parse_rat(&r.shift).map_err(D::Error::custom)?;
        let c = parse_rat(&r.coeff).map_err(D::Error::custom)?;
        let k: BigInt = r.radicand.trim().parse().map_err(|_| D::Error::custom("malformed radicand"))?;
        Ok(QuadSurd::new(a, RadVal::new(c, k).map_err(D::Error::custom)?).normalized())
    }
}
