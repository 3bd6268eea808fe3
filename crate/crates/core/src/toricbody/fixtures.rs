//! Shipped toric fixtures.
//!
//! Ray indices are fixed per fan and referenced by the flag and divisor fixtures below.
//!
//! | fan | rays |
//! |-----|------|
//! | P²  | 0:e₁ 1:e₂ 2:−e₁−e₂ |
//! | Bl₁ | 0:e₁ 1:e₂ 2:e₁+e₂ 3:−e₁−e₂ |
//! | Bl₂ | 0:e₁ 1:e₂ 2:e₁+e₂ 3:−e₁ 4:−e₁−e₂ |
//! | Bl₃ | 0:e₁ 1:e₁+e₂ 2:e₂ 3:−e₁ 4:−e₁−e₂ 5:−e₂ |
//! | P¹×P¹ | 0:e₁ 1:e₂ 2:−e₁ 3:−e₂ |
//! | infinitely near | 0:e₁ 1:e₁+e₂ 2:e₁+2e₂ 3:e₂ 4:−e₁−e₂ |
//!
//! Every fixture divisor is nef with a lattice polytope, so the semigroup sampler saturates at
//! level 1.

use serde::Serialize;

use super::fan::{Fan, ToricDivisor, ToricFlagSpec};

fn fan(rays: &[[i64; 2]], cones: &[[usize; 2]]) -> Fan {
    Fan::new(2, rays.iter().map(|r| r.to_vec()).collect(), cones.iter().map(|c| c.to_vec()).collect())
        .expect("fixture fans are smooth and complete")
}

pub fn p2_fan() -> Fan {
    fan(&[[1, 0], [0, 1], [-1, -1]], &[[0, 1], [1, 2], [2, 0]])
}

pub fn bl1_fan() -> Fan {
    fan(&[[1, 0], [0, 1], [1, 1], [-1, -1]], &[[0, 2], [2, 1], [1, 3], [3, 0]])
}

pub fn bl2_fan() -> Fan {
    fan(&[[1, 0], [0, 1], [1, 1], [-1, 0], [-1, -1]], &[[0, 2], [2, 1], [1, 3], [3, 4], [4, 0]])
}

pub fn bl3_fan() -> Fan {
    fan(
        &[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]],
        &[[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]],
    )
}

pub fn p1xp1_fan() -> Fan {
    fan(&[[1, 0], [0, 1], [-1, 0], [0, -1]], &[[0, 1], [1, 2], [2, 3], [3, 0]])
}

/// Blow up a point of the plane, then a point on the exceptional curve.
pub fn infinitely_near_fan() -> Fan {
    fan(&[[1, 0], [1, 1], [1, 2], [0, 1], [-1, -1]], &[[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]])
}

#[derive(Clone, Debug, Serialize)]
pub struct ToricFixture {
    pub name: &'static str,
    pub fan: Fan,
    pub divisor: ToricDivisor,
    pub flags: ToricFlagSpec,
    /// Level at which the semigroup sampler already equals the body.
    pub saturation: u64,
    /// Flags start on exceptional curves and the divisor is pulled back from the plane, so the
    /// body is an infinitesimal body of a pullback.
    pub infinitesimal_pullback: bool,
}

fn fixture(name: &'static str, fan: Fan, terms: &[(usize, i64)], flags: &[&[usize]], pullback: bool) -> ToricFixture {
    let divisor = ToricDivisor::from_terms(fan.rays().len(), terms);
    let flags = ToricFlagSpec::new(flags.iter().map(|f| f.to_vec()).collect());
    ToricFixture { name, fan, divisor, flags, saturation: 1, infinitesimal_pullback: pullback }
}

/// All shipped fixtures; names are stable identifiers used by the CLI.
pub fn all() -> Vec<ToricFixture> {
    vec![
        // O(1) with the standard flag at the fixed point of cone(e₁, e₂).
        fixture("p2", p2_fan(), &[(2, 1)], &[&[0, 1]], false),
        // π*O(1) with the infinitesimal flag on the exceptional curve D_{e₁+e₂}.
        fixture("bl1", bl1_fan(), &[(3, 1)], &[&[2, 0]], true),
        // The pencil H − E₂ with infinitesimal flags at both blown-up points.
        fixture("bl2", bl2_fan(), &[(4, 1)], &[&[2, 0], &[3, 1]], false),
        // π*O(1) with a single infinitesimal flag; D_{−e₁} + D_{−e₁−e₂} + D_{−e₂} is a
        // representative of the hyperplane class avoiding the flag cone.
        fixture("bl3", bl3_fan(), &[(3, 1), (4, 1), (5, 1)], &[&[1, 0]], true),
        // H − E₂ at two points of the hexagon surface.
        fixture("bl3-two-point", bl3_fan(), &[(4, 1), (5, 1)], &[&[1, 0], &[3, 2]], false),
        // O(1, 1) with the standard flag.
        fixture("p1xp1", p1xp1_fan(), &[(2, 1), (3, 1)], &[&[0, 1]], false),
        // π*O(1) with the flag on the second, infinitely near, exceptional curve.
        fixture("infinitely-near", infinitely_near_fan(), &[(4, 1)], &[&[2, 3]], true),
    ]
}

pub fn by_name(name: &str) -> Option<ToricFixture> {
    all().into_iter().find(|f| f.name == name)
}
