//! Extended infinitesimal Okounkov bodies and multi-point local positivity invariants,
//! computed exactly over the rationals.
//!
//! * [`exactgeom`] — rationals, `q·√k` numbers, LP, polytopes, volumes, slices.
//! * [`toricbody`] — bodies of torus-invariant divisors on smooth complete toric varieties.
//! * [`surfacepic`] — Picard lattice of blow-ups of the plane, Zariski decomposition,
//!   bigness thresholds and the parametric outer body.
//! * [`invariants`] — Seshadri, Nakayama and inverted-simplex constants, slice volumes and
//!   the Nagata-type arithmetic.

pub mod error;
pub mod exactgeom;

pub use error::{Error, Result};
pub mod toricbody;
pub mod surfacepic;
pub mod invariants;
