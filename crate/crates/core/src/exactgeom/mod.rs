//! Exact rational convex geometry: numbers, linear algebra, LP, polytopes and volumes.

pub mod dd;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod radval;
pub mod rat;
pub mod slice;
pub mod volume;

pub use polytope::{HRep, Halfspace, Polytope};
pub use radval::{QuadSurd, RadVal};
pub use rat::{fmt_rat, parse_rat, rat, ratq, Rat, RatMat, RatVec};
pub use slice::{intersect_subspace, inverted_slice_simplex, SliceSpec};
