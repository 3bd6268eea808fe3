//! Cross-checks between the invariants and the bodies they are read from.

use num_traits::{Signed, Zero};

use super::report::{Check, InvariantReport};
use super::{nakayama_mu, seshadri_eps, seshadri_eps_at, xi_constant, WeightVec, MODEL_EXACT};
use crate::error::{Error, Result};
use crate::exactgeom::polytope::{Halfspace, Polytope};
use crate::exactgeom::radval::{QuadSurd, RadVal};
use crate::exactgeom::rat::{fmt_rat, rat, Rat};
use crate::exactgeom::slice::{intersect_subspace, inverted_simplex_generators, inverted_slice_simplex, SliceSpec};
use crate::surfacepic::{BaseLoci, PicClass, SurfaceModel};
use crate::toricbody::{extended_body_toric, monomial_body, semigroup_sample, Fan, ToricDivisor, ToricFlagSpec};

/// `ε_m` from the curve list against `ξ_m` from the body; they must agree exactly.
pub fn check_eps_eq_xi(
    model: &SurfaceModel,
    l: &PicClass,
    points: &[usize],
    w: &WeightVec,
    body: &Polytope,
    n: usize,
) -> Result<InvariantReport> {
    let eps = seshadri_eps_at(model, l, points, w)?;
    let xi = xi_constant(body, w, n)?;
    let equal = eps.to_rat().as_ref() == Some(&xi);
    let detail = format!("weights {:?}: epsilon = {eps}, xi = {}", w.as_slice(), fmt_rat(&xi));
    Ok(InvariantReport {
        epsilon: Some(eps),
        xi: Some(xi),
        assumption: Some(super::Assumption::Unconditional),
        note: MODEL_EXACT.into(),
        checks: vec![Check::new("epsilon = xi", equal, detail)],
        ..Default::default()
    })
}

/// `(√r)^{n−2} / n!`.
pub fn slice_factor(n: usize, r: usize) -> RadVal {
    let fact: i64 = (1..=n as i64).product();
    let inv_fact = Rat::new(1.into(), fact.into());
    if n < 2 {
        return RadVal::sqrt(&Rat::new(1.into(), (r as i64).into())).expect("r > 0").scale(&inv_fact);
    }
    let root = RadVal::sqrt(&rat(r as i64)).expect("r ≥ 0");
    (2..n).fold(RadVal::from_rat(inv_fact), |acc, _| acc.mul(&root))
}

/// Volume of the weighted diagonal slice against `(√r)^{n−2}/n! · vol_X(D)`.
///
/// Equal weights: equality. Surfaces with unequal weights: the upper bound `vol_X(D)/2`.
/// Otherwise the volume is reported without a claim.
pub fn slice_volume_check(body: &Polytope, w: &WeightVec, n: usize, vol_x: &Rat) -> Result<InvariantReport> {
    let spec = SliceSpec::new(n, w.rats())?;
    let (slice, scale) = intersect_subspace(body, &spec)?;
    let vol = slice.volume().mul(&scale);
    let mut checks = Vec::new();
    if w.is_uniform() {
        let expected = slice_factor(n, w.r()).scale(vol_x);
        checks.push(Check::new("slice volume equality", vol == expected, format!("slice {vol} vs expected {expected}")));
    } else if n == 2 {
        let bound = vol_x / rat(2);
        checks.push(Check::new(
            "slice volume bound",
            vol <= RadVal::from_rat(bound.clone()),
            format!("slice {vol} vs bound {}", fmt_rat(&bound)),
        ));
    }
    Ok(InvariantReport { slice_volume: Some(vol), assumption: Some(super::Assumption::Unconditional), checks, ..Default::default() })
}

/// `μ − √(μ² − L²/r) ≤ ε ≤ L²/(rμ)` with equal weights on all `r = s` points, plus
/// `ε = √(L²/r) ⇔ μ = √(L²/r)`.
pub fn bounds_sandwich(model: &SurfaceModel, l: &PicClass) -> Result<InvariantReport> {
    // L stands for the pullback of an ample class, which is nef and big but not ample upstairs.
    if !model.is_nef(l)? || !model.is_big(l)? {
        return Err(Error::NotNef(format!("{l} is not nef and big on the model")));
    }
    let r = model.s;
    let eps = seshadri_eps(model, l, &WeightVec::ones(r))?;
    let mu = nakayama_mu(model, l)?;
    let per_point = l.self_intersection() / rat(r as i64);
    let upper = mu.div_into(&per_point)?;
    let mu_q = mu.to_rat().ok_or_else(|| {
        Error::HigherDegree(format!("lower bound with irrational mu = {mu} leaves quadratic numbers"))
    })?;
    let disc = &mu_q * &mu_q - &per_point;
    if disc.is_negative() {
        return Err(Error::InvalidInput(format!("mu² < L²/r ({}) contradicts vol ≥ 0", fmt_rat(&disc))));
    }
    let lower = QuadSurd::from_rat(mu_q).sub_radval(&RadVal::sqrt(&disc)?)?;
    let e = eps.as_surd();
    let root = RadVal::sqrt(&per_point)?;
    let eps_tight = eps == root;
    let mu_tight = mu == root.as_surd();
    let checks = vec![
        Check::new("lower ≤ epsilon", lower <= e, format!("{lower} ≤ {eps}")),
        Check::new("epsilon ≤ upper", e <= upper, format!("{eps} ≤ {upper}")),
        Check::new(
            "epsilon = √(L²/r) iff mu = √(L²/r)",
            eps_tight == mu_tight,
            format!("√(L²/r) = {root}: epsilon {}, mu {}", tight_word(eps_tight), tight_word(mu_tight)),
        ),
    ];
    Ok(InvariantReport {
        epsilon: Some(eps),
        mu: Some(mu),
        bounds: Some([lower, upper]),
        assumption: Some(super::Assumption::Unconditional),
        note: MODEL_EXACT.into(),
        checks,
        ..Default::default()
    })
}

fn tight_word(b: bool) -> &'static str {
    if b { "attains it" } else { "does not attain it" }
}

/// `max ν_1^{(i)}` over the body: the Nakayama constant of the `i`-th point read off the body.
pub fn first_coordinate_max(body: &Polytope, n: usize, i: usize) -> Option<Rat> {
    body.vertices().iter().map(|v| v[i * n].clone()).max()
}

/// `body ⊆ r · conv(⋃_i ι_i Δ^{-1}_{μ})` where `ι_i` places a one-block simplex in block `i`.
pub fn containment_check(body: &Polytope, n: usize, mu_max: &Rat) -> Result<Check> {
    let r = body.ambient_dim() / n;
    let mut gens = Vec::new();
    for i in 0..r {
        let mut xi = vec![Rat::zero(); r];
        xi[i] = mu_max.clone();
        gens.extend(inverted_simplex_generators(&xi, n));
    }
    let hull = Polytope::hull(&gens, n * r)?.scale(&rat(r as i64));
    let ok = hull.contains(body)?;
    Ok(Check::new("body inside scaled simplex union", ok, format!("r = {r}, mu_max = {}", fmt_rat(mu_max))))
}

/// Origin criterion (`0 ∈ body ⇔ no point in B₋`) and positive-`ξ` criterion
/// (`ξ_m > 0 ⇔ no point in B₊`) for every weight vector.
pub fn base_locus_criteria(
    body: &Polytope,
    loci: &BaseLoci,
    points: &[usize],
    weights: &[WeightVec],
    n: usize,
) -> Result<Vec<Check>> {
    let origin = body.contains_point(&vec![Rat::zero(); body.ambient_dim()])?;
    let avoid_minus = points.iter().all(|&p| !loci.point_in_bminus(p));
    let avoid_plus = points.iter().all(|&p| !loci.point_in_bplus(p));
    let mut checks = vec![Check::new(
        "origin in body iff points avoid B-",
        origin == avoid_minus,
        format!("origin in body: {origin}; points avoid B-: {avoid_minus}"),
    )];
    for w in weights {
        let xi = xi_constant(body, w, n)?;
        checks.push(Check::new(
            "xi > 0 iff points avoid B+",
            xi.is_positive() == avoid_plus,
            format!("weights {:?}: xi = {}; points avoid B+: {avoid_plus}", w.as_slice(), fmt_rat(&xi)),
        ));
    }
    Ok(checks)
}

/// `Δ̃(D) ∩ {ν_1^{(i)} ≥ a m_i} = Δ(D − a Σ m_i D_{ρ_i}) + (a m_i e_{(i,1)})`, `ρ_i` the first
/// ray of the `i`-th flag. Both sides empty counts as equal.
pub fn slice_lemma_check(fan: &Fan, d: &ToricDivisor, flags: &ToricFlagSpec, a: &Rat, w: &WeightVec) -> Result<Check> {
    let n = fan.dim();
    let r = flags.r();
    if w.r() != r {
        return Err(Error::ShapeMismatch(format!("{} weights for {r} flags", w.r())));
    }
    let body = extended_body_toric(fan, d, flags)?;
    let cut: Vec<Halfspace> = (0..r)
        .map(|i| {
            let mut normal = vec![Rat::zero(); n * r];
            normal[i * n] = rat(-1);
            Halfspace::new(normal, -(a * rat(w.as_slice()[i] as i64)))
        })
        .collect();
    let lhs = body.intersect_halfspaces(&cut)?;
    let mut twisted = d.coeffs.clone();
    let mut shift = vec![Rat::zero(); n * r];
    for (i, flag) in flags.flags.iter().enumerate() {
        let am = a * rat(w.as_slice()[i] as i64);
        twisted[flag[0]] -= &am;
        shift[i * n] = am;
    }
    let rhs = monomial_body(fan, &ToricDivisor::new(twisted), flags)?;
    let rhs = if rhs.is_empty() { rhs } else { rhs.translate(&shift)? };
    Ok(Check::new(
        "slice lemma",
        lhs == rhs,
        format!("a = {}, weights {:?}: {} vs {} vertices", fmt_rat(a), w.as_slice(), lhs.vertices().len(), rhs.vertices().len()),
    ))
}

/// The block-`i` projection of the extended body equals the single-flag body of flag `i`.
pub fn projection_identity_check(fan: &Fan, d: &ToricDivisor, flags: &ToricFlagSpec) -> Result<Check> {
    let n = fan.dim();
    let body = extended_body_toric(fan, d, flags)?;
    let mut ok = true;
    for i in 0..flags.r() {
        let proj = body.project(&(i * n..(i + 1) * n).collect::<Vec<_>>())?;
        ok &= proj == extended_body_toric(fan, d, &flags.single(i))?;
    }
    Ok(Check::new("projection identity", ok, format!("{} flags", flags.r())))
}

/// Every vertex of `Δ^{-r}_{(m a)}` is `ν(s)/k` for a monomial section `s` of some `kD`, `k ≤ m_max`.
pub fn vertex_valuativity_check(
    fan: &Fan,
    d: &ToricDivisor,
    flags: &ToricFlagSpec,
    w: &WeightVec,
    a: &Rat,
    m_max: u64,
) -> Result<Check> {
    let n = fan.dim();
    let xi: Vec<Rat> = w.rats().iter().map(|m| m * a).collect();
    let simplex = inverted_slice_simplex(&xi, n)?;
    let sample = semigroup_sample(fan, d, flags, m_max)?;
    let mut missing = Vec::new();
    for v in simplex.vertices() {
        let found = sample.iter().any(|s| {
            let k = rat(s.level as i64);
            s.entries.iter().zip(v).all(|(e, x)| Rat::from_integer(e.clone()) == x * &k)
        });
        if !found {
            missing.push(v.iter().map(fmt_rat).collect::<Vec<_>>().join(","));
        }
    }
    Ok(Check::new(
        "vertex valuativity",
        missing.is_empty(),
        if missing.is_empty() {
            format!("a = {}, all vertices realized by level ≤ {m_max}", fmt_rat(a))
        } else {
            format!("a = {}, unrealized vertices up to level {m_max}: {}", fmt_rat(a), missing.join(" | "))
        },
    ))
}
