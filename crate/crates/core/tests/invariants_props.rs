use okounkov_core::exactgeom::{rat, ratq, Polytope, Rat, RatVec};
use okounkov_core::invariants::{bounds_sandwich, fixtures, nagata_check, slice_factor, xi_constant, WeightVec};
use okounkov_core::exactgeom::RadVal;
use okounkov_core::surfacepic::{PicClass, SurfaceModel};
use proptest::prelude::*;

#[test]
fn sandwich_on_pullbacks_of_ample_classes() {
    for s in 1..=8 {
        let model = SurfaceModel::delpezzo_general(s).unwrap();
        for d in 1..=3 {
            let rep = bounds_sandwich(&model, &PicClass::h(s).scale(&rat(d))).unwrap();
            assert!(rep.passed(), "s = {s}, d = {d}: {:?}", rep.checks);
        }
    }
}

#[test]
fn slice_factor_values() {
    assert_eq!(slice_factor(2, 5), RadVal::from_rat(ratq(1, 2)));
    assert_eq!(slice_factor(3, 2), RadVal::sqrt(&rat(2)).unwrap().scale(&ratq(1, 6)));
    assert_eq!(slice_factor(4, 3), RadVal::from_rat(ratq(3, 24)));
}

#[test]
fn xi_is_monotone_along_fixture_nesting() {
    // The Bl₁ body of H sits inside the body of 2H, and the infinitely-near body inside the
    // triangle conv{0, (2,0), (2,2)}.
    let all = fixtures::all().unwrap();
    let get = |n: &str| all.iter().find(|f| f.name == n).unwrap().body.clone();
    for (small, big) in [(get("bl1"), get("bl1").scale(&rat(2))), (get("infinitely-near"), get("bl1").scale(&rat(2)))] {
        check_nested(&small, &big);
    }
}

fn check_nested(small: &Polytope, big: &Polytope) {
    assert!(big.contains(&small).unwrap());
    for w in [1, 2, 3] {
        let w = WeightVec::new(vec![w]).unwrap();
        assert!(xi_constant(&small, &w, 2).unwrap() <= xi_constant(&big, &w, 2).unwrap());
    }
}

fn points(max: usize) -> impl Strategy<Value = Vec<RatVec>> {
    prop::collection::vec(prop::collection::vec(-3i64..=4, 2), 1..=max)
        .prop_map(|pts| pts.into_iter().map(|p| p.into_iter().map(rat).collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nagata_is_homogeneous(r in 1u64..=16, d in 0i64..=12, m in prop::collection::vec(0i64..=5, 1..=16), k in 1i64..=5) {
        let mr: Vec<Rat> = m.iter().map(|&x| rat(x)).collect();
        let km: Vec<Rat> = m.iter().map(|&x| rat(k * x)).collect();
        prop_assert_eq!(nagata_check(r, &rat(d), &mr), nagata_check(r, &rat(k * d), &km));
    }

    #[test]
    fn xi_is_monotone_under_enlargement(a in points(5), b in points(4), w in 1u64..=3) {
        let mut base = a.clone();
        base.push(vec![rat(0), rat(0)]);
        let small = Polytope::hull(&base, 2).unwrap();
        let mut all = base;
        all.extend(b);
        let big = Polytope::hull(&all, 2).unwrap();
        let w = WeightVec::new(vec![w]).unwrap();
        prop_assert!(xi_constant(&small, &w, 2).unwrap() <= xi_constant(&big, &w, 2).unwrap());
    }

    #[test]
    fn xi_scales_inversely_with_weights(a in points(6), w in 1u64..=4) {
        let mut pts = a;
        pts.push(vec![rat(0), rat(0)]);
        let body = Polytope::hull(&pts, 2).unwrap();
        let one = xi_constant(&body, &WeightVec::ones(1), 2).unwrap();
        let scaled = xi_constant(&body, &WeightVec::new(vec![w]).unwrap(), 2).unwrap();
        prop_assert_eq!(scaled * rat(w as i64), one);
    }
}
