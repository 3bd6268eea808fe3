//! Exact arithmetic around the Nagata conjecture and its consequences at `s ≥ 9` points.
//!
//! Nothing here decides effectivity at nine or more general points. Every verdict that rests
//! on the standard-form non-effectivity conjecture carries an [`Assumption`] tag saying so.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::radval::RadVal;
use crate::exactgeom::rat::{rat, Rat, RatVec};

/// What a verdict rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Assumption {
    #[serde(rename = "unconditional")]
    Unconditional,
    /// Classes in standard form with negative self-intersection are not effective.
    #[serde(rename = "standard-form-non-effective")]
    StandardFormNonEffective,
    /// The same statement restricted to quasi-homogeneous classes on `s + 1` points.
    #[serde(rename = "standard-form-non-effective-quasi-homogeneous")]
    StandardFormNonEffectiveQuasiHomogeneous,
}

impl Assumption {
    pub fn tag(&self) -> &'static str {
        match self {
            Assumption::Unconditional => "unconditional",
            Assumption::StandardFormNonEffective => "standard-form-non-effective",
            Assumption::StandardFormNonEffectiveQuasiHomogeneous => "standard-form-non-effective-quasi-homogeneous",
        }
    }

    pub fn is_conditional(&self) -> bool {
        *self != Assumption::Unconditional
    }
}

fn self_intersection(d: &Rat, m: &[Rat]) -> Rat {
    d * d - m.iter().map(|x| x * x).sum::<Rat>()
}

fn sorted_desc(m: &[Rat]) -> RatVec {
    let mut v = m.to_vec();
    v.sort_by(|a, b| b.cmp(a));
    v
}

fn padded(m: &[Rat], len: usize) -> RatVec {
    let mut v = m.to_vec();
    v.resize(len.max(m.len()), Rat::zero());
    v
}

/// `d ≥ (1/√r) Σ m_i`, decided as `d ≥ 0 ∧ r d² ≥ (Σ m_i)²` (entries are nonnegative).
pub fn nagata_check(r: u64, d: &Rat, m: &[Rat]) -> bool {
    let sum: Rat = m.iter().sum();
    if !sum.is_positive() {
        return true;
    }
    !d.is_negative() && rat(r as i64) * d * d >= &sum * &sum
}

/// `m_1 ≥ … ≥ m_s ≥ 0` and `d ≥ m_1 + m_2 + m_3`, zero-padded to three entries.
pub fn is_standard_form(d: &Rat, m: &[Rat]) -> bool {
    let m = padded(m, 3);
    let sorted = m.windows(2).all(|w| w[0] >= w[1]);
    sorted && !m.last().unwrap().is_negative() && *d >= &m[0] + &m[1] + &m[2]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EffectivityVerdict {
    NotEffective,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonEffectivity {
    pub verdict: EffectivityVerdict,
    pub assumption: Assumption,
    #[serde(with = "crate::exactgeom::rat::serde_rat")]
    pub self_intersection: Rat,
}

/// Conditional non-effectivity: after sorting, standard form with `D² < 0`.
pub fn conditional_non_effectivity(d: &Rat, m: &[Rat]) -> NonEffectivity {
    let sorted = sorted_desc(m);
    let sq = self_intersection(d, &sorted);
    if is_standard_form(d, &sorted) && sq.is_negative() {
        NonEffectivity {
            verdict: EffectivityVerdict::NotEffective,
            assumption: Assumption::StandardFormNonEffective,
            self_intersection: sq,
        }
    } else {
        NonEffectivity { verdict: EffectivityVerdict::Unknown, assumption: Assumption::Unconditional, self_intersection: sq }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrationalityCertificate {
    pub certified: bool,
    /// `√(L²)`, present only when certified.
    pub epsilon: Option<RadVal>,
    pub irrational: bool,
    pub assumption: Assumption,
    /// Failed conditions, empty when certified.
    pub failures: Vec<String>,
}

/// Conditions (i) `m` nonincreasing and nonnegative, (ii)
/// `m_1+m_2+m_3 ≤ d < ((m_1+m_2)² + Σ m_i²) / (2(m_1+m_2))`, with `s ≥ 9`; together they force
/// `ε(L; x) = √(L²)` at a general point, conditionally on non-effectivity at `s + 1` points.
pub fn irrationality_certificate(s: usize, d: &Rat, m: &[Rat]) -> IrrationalityCertificate {
    let mut failures = Vec::new();
    if s < 9 {
        failures.push(format!("s = {s} < 9"));
    }
    if m.len() != s {
        failures.push(format!("{} multiplicities given for s = {s}", m.len()));
    }
    let mp = padded(m, 3);
    if !(mp.windows(2).all(|w| w[0] >= w[1]) && !mp.last().unwrap().is_negative()) {
        failures.push("(i) multiplicities must be nonincreasing and nonnegative".into());
    }
    let head = &mp[0] + &mp[1];
    let sum_sq: Rat = mp.iter().map(|x| x * x).sum();
    if *d < &head + &mp[2] {
        failures.push(format!("(ii) d = {d} < m1+m2+m3 = {}", &head + &mp[2]));
    }
    if !head.is_positive() {
        failures.push("(ii) m1 + m2 must be positive".into());
    } else {
        let upper = (&head * &head + &sum_sq) / (rat(2) * &head);
        if *d >= upper {
            failures.push(format!("(ii) d = {d} is not below {upper}"));
        }
    }
    let sq = d * d - &sum_sq;
    if !sq.is_positive() {
        failures.push(format!("L² = {sq} is not positive"));
    }
    if !failures.is_empty() {
        return IrrationalityCertificate {
            certified: false,
            epsilon: None,
            irrational: false,
            assumption: Assumption::Unconditional,
            failures,
        };
    }
    let eps = RadVal::sqrt(&sq).expect("positive");
    IrrationalityCertificate {
        certified: true,
        irrational: !eps.is_rational(),
        epsilon: Some(eps),
        assumption: Assumption::StandardFormNonEffective,
        failures,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum HomogeneousBranch {
    /// `c/d ≥ 4/(s+4)`: `ε = √(d² − s c²)`.
    Exact { epsilon: RadVal },
    /// `c/d < 4/(s+4)`: `ε ≥ d − 2c`.
    LowerBound {
        #[serde(with = "crate::exactgeom::rat::serde_rat")]
        bound: Rat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousVerdict {
    #[serde(flatten)]
    pub branch: HomogeneousBranch,
    pub assumption: Assumption,
    /// Ampleness of `dH − cΣE_i` is taken from the caller, not checked.
    pub ample_asserted: bool,
}

/// Seshadri constant of `L = dH − c Σ E_i` at one further general point.
pub fn homogeneous_eps(s: usize, d: &Rat, c: &Rat) -> Result<HomogeneousVerdict> {
    if s < 9 {
        return Err(Error::InvalidInput(format!("quasi-homogeneous estimate needs s ≥ 9, got {s}")));
    }
    if !d.is_positive() || c.is_negative() {
        return Err(Error::InvalidInput("need d > 0 and c ≥ 0".into()));
    }
    let threshold = Rat::new(4.into(), ((s + 4) as i64).into());
    let sq = d * d - rat(s as i64) * c * c;
    let branch = if c / d >= threshold {
        if !sq.is_positive() {
            return Err(Error::NotBig(format!("L² = {sq} ≤ 0; L cannot be ample")));
        }
        let epsilon = RadVal::sqrt(&sq)?;
        if c / d == threshold {
            // On the wall both branches meet: √(L²) = d − 2c.
            debug_assert_eq!(epsilon, RadVal::from_rat(d - rat(2) * c));
        }
        HomogeneousBranch::Exact { epsilon }
    } else {
        HomogeneousBranch::LowerBound { bound: d - rat(2) * c }
    };
    Ok(HomogeneousVerdict {
        branch,
        assumption: Assumption::StandardFormNonEffectiveQuasiHomogeneous,
        ample_asserted: true,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NefBoundaryVerdict {
    Nef,
    CriterionFails,
    CriterionPassesOffBoundary,
    PreconditionFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NefCondition {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NefBoundaryReport {
    pub verdict: NefBoundaryVerdict,
    pub nef: bool,
    #[serde(with = "crate::exactgeom::rat::serde_rat")]
    pub self_intersection: Rat,
    pub conditions: Vec<NefCondition>,
}

/// The four numerical conditions under which a class with `L² = 0` on the pseudo-effective
/// boundary is nef. Multiplicities are sorted descending and zero-padded to eight.
///
/// (1) `d ≥ m_2 + m_3`; (2) `2d ≥ m_2 + … + m_6`; (3) `3√(Σ m_i²) > 2m_2 + m_3 + … + m_8`,
/// squared after a sign check; (4) `d² − ((t+3)/(t+2)) (m_2² + … + m_{t+1}²) > 0` for
/// `2 ≤ t ≤ s − 1`.
pub fn nef_boundary_check(d: &Rat, m: &[Rat]) -> NefBoundaryReport {
    let m = padded(&sorted_desc(m), 8);
    let s = m.len();
    let mut conditions = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        conditions.push(NefCondition { name: name.into(), pass, detail });
    };

    let rhs1 = &m[1] + &m[2];
    push("(1)", *d >= rhs1, format!("d = {d} vs m2+m3 = {rhs1}"));

    let lhs2 = rat(2) * d;
    let rhs2: Rat = m[1..6].iter().sum();
    push("(2)", lhs2 >= rhs2, format!("2d = {lhs2} vs m2+…+m6 = {rhs2}"));

    let sum_sq: Rat = m.iter().map(|x| x * x).sum();
    let rhs3: Rat = &m[1] + m[1..8].iter().sum::<Rat>();
    let lhs3 = rat(9) * &sum_sq;
    let pass3 = rhs3.is_negative() || lhs3 > &rhs3 * &rhs3;
    push("(3)", pass3, format!("9Σm² = {lhs3} vs (2m2+m3+…+m8)² = {}", &rhs3 * &rhs3));

    let mut pass4 = true;
    let mut worst = None;
    for t in 2..s {
        let partial: Rat = m[1..=t].iter().map(|x| x * x).sum();
        let val = d * d - Rat::new((t + 3).into(), (t + 2).into()) * partial;
        if !val.is_positive() {
            pass4 = false;
        }
        if worst.as_ref().is_none_or(|(_, w)| val < *w) {
            worst = Some((t, val));
        }
    }
    let (wt, wv) = worst.expect("s ≥ 8");
    push("(4)", pass4, format!("minimum over t is {wv} at t = {wt}"));

    let sq = d * d - &sum_sq;
    let all = conditions.iter().all(|c| c.pass);
    let verdict = match (sq.is_zero(), all) {
        (true, true) => NefBoundaryVerdict::Nef,
        (true, false) => NefBoundaryVerdict::CriterionFails,
        (false, true) => NefBoundaryVerdict::CriterionPassesOffBoundary,
        (false, false) => NefBoundaryVerdict::PreconditionFailed,
    };
    NefBoundaryReport { nef: verdict == NefBoundaryVerdict::Nef, verdict, self_intersection: sq, conditions }
}

/// `(value, …, value)` with `count` entries: homogeneous multiplicities.
pub fn repeated(value: i64, count: usize) -> RatVec {
    vec![rat(value); count]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::rvec;

    #[test]
    fn nagata_examples() {
        assert!(nagata_check(9, &rat(3), &repeated(1, 9)));
        assert!(!nagata_check(10, &rat(3), &repeated(1, 10)));
        assert!(nagata_check(10, &rat(0), &repeated(0, 10)));
    }

    #[test]
    fn standard_form_examples() {
        assert!(is_standard_form(&rat(3), &rvec(&[1, 1, 1])));
        assert!(!is_standard_form(&rat(2), &rvec(&[1, 1, 1])));
        assert!(is_standard_form(&rat(5), &rvec(&[2, 2, 1, 1])));
        assert!(!is_standard_form(&rat(9), &rvec(&[1, 2])));
        assert!(is_standard_form(&rat(1), &rvec(&[1])));
    }

    #[test]
    fn non_effectivity_examples() {
        let v = conditional_non_effectivity(&rat(3), &repeated(1, 10));
        assert_eq!(v.verdict, EffectivityVerdict::NotEffective);
        assert_eq!(v.assumption, Assumption::StandardFormNonEffective);
        assert_eq!(v.self_intersection, rat(-1));
        assert_eq!(conditional_non_effectivity(&rat(2), &repeated(1, 10)).verdict, EffectivityVerdict::Unknown);
        assert_eq!(conditional_non_effectivity(&rat(3), &repeated(1, 9)).verdict, EffectivityVerdict::Unknown);
        // sorting happens before the standard-form test
        assert_eq!(conditional_non_effectivity(&rat(4), &rvec(&[0, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1])).verdict, EffectivityVerdict::NotEffective);
    }

    #[test]
    fn irrationality_examples() {
        let c = irrationality_certificate(10, &rat(13), &repeated(4, 10));
        assert!(c.certified && !c.irrational);
        assert_eq!(c.epsilon, Some(RadVal::from_rat(rat(3))));
        assert!(c.assumption.is_conditional());

        let c = irrationality_certificate(10, &rat(10), &repeated(3, 10));
        assert!(c.certified && c.irrational);
        assert_eq!(c.epsilon, Some(RadVal::sqrt(&rat(10)).unwrap()));

        let c = irrationality_certificate(9, &rat(13), &repeated(4, 9));
        assert!(!c.certified && c.epsilon.is_none());
        assert!(c.failures.iter().any(|f| f.contains("not below 13")));

        assert!(!irrationality_certificate(8, &rat(13), &repeated(4, 8)).certified);
    }

    #[test]
    fn homogeneous_examples() {
        let v = homogeneous_eps(12, &rat(4), &rat(1)).unwrap();
        assert_eq!(v.branch, HomogeneousBranch::Exact { epsilon: RadVal::from_rat(rat(2)) });
        assert_eq!(v.assumption, Assumption::StandardFormNonEffectiveQuasiHomogeneous);
        let v = homogeneous_eps(12, &rat(5), &rat(1)).unwrap();
        assert_eq!(v.branch, HomogeneousBranch::LowerBound { bound: rat(3) });
        // wall at s = 20: c/d = 4/24 with d = 6, c = 1, √(36 − 20) = 4 = d − 2c
        let v = homogeneous_eps(20, &rat(6), &rat(1)).unwrap();
        assert_eq!(v.branch, HomogeneousBranch::Exact { epsilon: RadVal::from_rat(rat(4)) });
        assert!(homogeneous_eps(8, &rat(4), &rat(1)).is_err());
    }

    #[test]
    fn nef_boundary_examples() {
        let r = nef_boundary_check(&rat(3), &repeated(1, 9));
        assert_eq!(r.verdict, NefBoundaryVerdict::Nef);
        assert!(r.conditions[2].detail.contains("81") && r.conditions[2].detail.contains("64"));
        assert!(r.conditions[3].detail.contains("1/5 at t = 8"));

        let r = nef_boundary_check(&rat(1), &rvec(&[1, 1]));
        assert_eq!(r.verdict, NefBoundaryVerdict::PreconditionFailed);
        assert_eq!(r.self_intersection, rat(-1));

        let r = nef_boundary_check(&rat(4), &rvec(&[2, 2, 2]));
        assert_eq!(r.verdict, NefBoundaryVerdict::CriterionPassesOffBoundary);
        assert!(r.conditions[2].detail.contains("108") && r.conditions[2].detail.contains("36"));
        assert_eq!(r.self_intersection, rat(4));
    }
}
