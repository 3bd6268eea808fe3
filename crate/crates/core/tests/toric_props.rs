use num_bigint::BigInt;
use okounkov_core::exactgeom::{rat, ratq, Rat};
use okounkov_core::invariants::{
    containment_check, first_coordinate_max, nakayama_mu_at, projection_identity_check, slice_lemma_check,
    vertex_valuativity_check, WeightVec,
};
use okounkov_core::surfacepic::{PicClass, SurfaceModel};
use okounkov_core::toricbody::fixtures::{self, ToricFixture};
use okounkov_core::toricbody::{
    divisor_polytope, extended_body_toric, lattice_points, monomial_valuation, semigroup_body_approx, ToricDivisor,
};
use proptest::prelude::*;

fn fixture() -> impl Strategy<Value = ToricFixture> {
    prop::sample::select(fixtures::all())
}

/// Nonnegative integer coefficients on rays outside every flag cone.
fn effective_off_flags(f: &ToricFixture, coeffs: &[u8]) -> ToricDivisor {
    let flag_rays: Vec<usize> = f.flags.flag_rays().collect();
    let c = (0..f.fan.rays().len())
        .map(|i| if flag_rays.contains(&i) { rat(0) } else { rat(coeffs[i % coeffs.len()] as i64) })
        .collect();
    ToricDivisor::new(c)
}

#[test]
fn homogeneity_on_all_fixtures() {
    for f in fixtures::all() {
        let body = extended_body_toric(&f.fan, &f.divisor, &f.flags).unwrap();
        for k in 1..=3 {
            let scaled = extended_body_toric(&f.fan, &f.divisor.scale(&rat(k)), &f.flags).unwrap();
            assert_eq!(scaled, body.scale(&rat(k)), "{} at k = {k}", f.name);
        }
    }
}

#[test]
fn sampler_is_monotone_and_inside() {
    for f in fixtures::all() {
        let body = extended_body_toric(&f.fan, &f.divisor, &f.flags).unwrap();
        let mut prev = None;
        for m in 1..=3 {
            let approx = semigroup_body_approx(&f.fan, &f.divisor, &f.flags, m).unwrap();
            assert!(body.contains(&approx).unwrap(), "{} level {m}", f.name);
            if let Some(p) = prev {
                assert!(approx.contains(&p).unwrap(), "{} not monotone at {m}", f.name);
            }
            prev = Some(approx);
        }
    }
}

#[test]
fn containment_in_scaled_simplex_union() {
    // The bound concerns infinitesimal bodies of pullbacks; H − E₂ on Bl₂ has valuation
    // vectors such as (0, 1) in the second block, outside every inverted simplex.
    for f in fixtures::all().into_iter().filter(|f| f.infinitesimal_pullback) {
        let body = extended_body_toric(&f.fan, &f.divisor, &f.flags).unwrap();
        let n = f.fan.dim();
        let mu_max = (0..f.flags.r()).map(|i| first_coordinate_max(&body, n, i).unwrap()).max().unwrap();
        let c = containment_check(&body, n, &mu_max).unwrap();
        assert!(c.pass, "{}: {}", f.name, c.detail);
    }
}

#[test]
fn nakayama_read_off_body_matches_chamber_walk() {
    // The first valuation on E is the vanishing order along E, so its maximum is μ(H; x).
    for (name, s) in [("bl1", 1), ("bl3", 3)] {
        let f = fixtures::by_name(name).unwrap();
        let body = extended_body_toric(&f.fan, &f.divisor, &f.flags).unwrap();
        let model = SurfaceModel::delpezzo_general(s).unwrap();
        let mu = nakayama_mu_at(&model, &PicClass::h(s), &[0]).unwrap();
        assert_eq!(mu.to_rat(), first_coordinate_max(&body, 2, 0), "{name}");
    }
}

#[test]
fn vertex_valuativity_below_epsilon() {
    // ε = 1 at the flagged point of both fixtures; a = p/q is realized at level q, since the
    // bodies are lattice polytopes saturated at level 1.
    for name in ["bl1", "bl3"] {
        let f = fixtures::by_name(name).unwrap();
        for (p, q) in [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)] {
            let c = vertex_valuativity_check(&f.fan, &f.divisor, &f.flags, &WeightVec::ones(1), &ratq(p, q), q as u64).unwrap();
            assert!(c.pass, "{name}: {}", c.detail);
        }
        let c = vertex_valuativity_check(&f.fan, &f.divisor, &f.flags, &WeightVec::new(vec![2]).unwrap(), &ratq(1, 4), 2).unwrap();
        assert!(c.pass, "{name}: {}", c.detail);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn superadditivity(f in fixture(), a in prop::collection::vec(0u8..=2, 6), b in prop::collection::vec(0u8..=2, 6)) {
        let d1 = effective_off_flags(&f, &a).add(&f.divisor);
        let d2 = effective_off_flags(&f, &b);
        let b1 = extended_body_toric(&f.fan, &d1, &f.flags).unwrap();
        let b2 = extended_body_toric(&f.fan, &d2, &f.flags).unwrap();
        let sum = extended_body_toric(&f.fan, &d1.add(&d2), &f.flags).unwrap();
        prop_assert!(sum.contains(&b1.minkowski_sum(&b2).unwrap()).unwrap());
    }

    #[test]
    fn projection_identity_for_random_divisors(f in fixture(), a in prop::collection::vec(0u8..=3, 6)) {
        let d = effective_off_flags(&f, &a).add(&f.divisor);
        let c = projection_identity_check(&f.fan, &d, &f.flags).unwrap();
        prop_assert!(c.pass, "{}", c.detail);
    }

    #[test]
    fn valuation_blocks_depend_only_on_their_flag(f in fixture(), a in prop::collection::vec(0u8..=2, 6)) {
        let d = effective_off_flags(&f, &a).add(&f.divisor);
        let n = f.fan.dim();
        for u in lattice_points(&divisor_polytope(&f.fan, &d).unwrap()) {
            let full = monomial_valuation(&f.fan, &d, &f.flags, &u).unwrap();
            for i in 0..f.flags.r() {
                let single = monomial_valuation(&f.fan, &d, &f.flags.single(i), &u).unwrap();
                prop_assert_eq!(&full.entries[i * n..(i + 1) * n], &single.entries[..]);
                prop_assert!(single.entries.iter().all(|e| *e >= BigInt::from(0)));
            }
        }
    }

    #[test]
    fn slice_lemma_for_random_heights(f in fixture(), p in 0i64..=8, q in 1i64..=4, w in prop::collection::vec(1u64..=3, 2)) {
        let w = WeightVec::new(w[..f.flags.r()].to_vec()).unwrap();
        let a: Rat = ratq(p, q);
        let c = slice_lemma_check(&f.fan, &f.divisor, &f.flags, &a, &w).unwrap();
        prop_assert!(c.pass, "{}", c.detail);
    }
}
