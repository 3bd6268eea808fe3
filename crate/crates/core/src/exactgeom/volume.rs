//! Pulling triangulations and induced-metric volumes.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{det, gram};
use super::polytope::{full_dim_facets, AffineFrame, Polytope};
use super::radval::RadVal;
use super::rat::{dot, sub, Rat, RatVec};

/// Triangulate the hull of `vertices` (all extreme) by pulling the first vertex.
///
/// Each simplex is returned as its list of `d + 1` vertices, `d` the affine dimension.
pub fn triangulate(vertices: &[RatVec]) -> Vec<Vec<RatVec>> {
    if vertices.len() <= 1 {
        return vertices.iter().map(|v| vec![v.clone()]).collect();
    }
    let frame = AffineFrame::of(vertices);
    let k = frame.dim();
    let reduced: Vec<RatVec> = vertices.iter().map(|v| frame.reduce(v)).collect();
    let apex = &vertices[0];
    let mut out = Vec::new();
    for (y0, y) in full_dim_facets(&reduced, k) {
        let tight = |z: &RatVec| (&y0 + dot(&y, z)).is_zero();
        if tight(&reduced[0]) {
            continue;
        }
        let face: Vec<RatVec> = vertices.iter().zip(&reduced)
            .filter(|(_, z)| tight(z))
            .map(|(v, _)| v.clone())
            .collect();
        for mut s in triangulate(&face) {
            s.insert(0, apex.clone());
            out.push(s);
        }
    }
    out
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Volume of a full-dimensional simplex in `ℝ^k`.
fn simplex_volume(s: &[RatVec]) -> Rat {
    let k = s.len() - 1;
    let m: Vec<RatVec> = s[1..].iter().map(|v| sub(v, &s[0])).collect();
    det(&m).abs() / Rat::from_integer(factorial(k))
}

pub fn volume(p: &Polytope) -> RadVal {
    let verts = p.vertices();
    if verts.len() <= 1 {
        return RadVal::zero();
    }
    let frame = AffineFrame::of(verts);
    let reduced: Vec<RatVec> = verts.iter().map(|v| frame.reduce(v)).collect();
    let coord: Rat = triangulate(&reduced).iter().map(|s| simplex_volume(s)).sum();
    let g = det(&gram(&frame.rows));
    RadVal::sqrt(&g).expect("Gram determinants are nonnegative").scale(&coord)
}

/// Induced volume of a simplex given by ambient vertices, via the Gram determinant of its edges.
pub fn simplex_volume_gram(s: &[RatVec]) -> RadVal {
    let k = s.len() - 1;
    if k == 0 {
        return RadVal::zero();
    }
    let edges: Vec<RatVec> = s[1..].iter().map(|v| sub(v, &s[0])).collect();
    let g = det(&gram(&edges));
    let f = Rat::from_integer(factorial(k));
    RadVal::sqrt(&g).expect("nonnegative").scale(&(Rat::from_integer(1.into()) / f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{rat, ratq, rmat};

    fn poly(pts: &[&[i64]]) -> Polytope {
        Polytope::hull(&rmat(pts), pts[0].len()).unwrap()
    }

    #[test]
    fn basic_volumes() {
        assert_eq!(poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).volume(), RadVal::from_rat(rat(1)));
        assert_eq!(poly(&[&[0, 0], &[1, 0], &[1, 1]]).volume(), RadVal::from_rat(ratq(1, 2)));
        let seg = poly(&[&[0, 0], &[1, 1]]).volume();
        assert_eq!((seg.coeff().clone(), seg.radicand().clone()), (rat(1), BigInt::from(2)));
        assert_eq!(poly(&[&[3, 4]]).volume(), RadVal::zero());
    }

    #[test]
    fn cube_and_tilted_triangle() {
        let cube = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(cube.volume(), RadVal::from_rat(rat(1)));
        // triangle (1,0,0),(0,1,0),(0,0,1): area √3/2
        let t = poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(t.volume(), RadVal::new(ratq(1, 2), BigInt::from(3)).unwrap());
        assert_eq!(t.volume(), simplex_volume_gram(t.vertices()));
    }

    #[test]
    fn triangulation_covers_octahedron() {
        let o = poly(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]]);
        let simplices = triangulate(o.vertices());
        assert_eq!(simplices.len(), 4);
        assert_eq!(o.volume(), RadVal::from_rat(ratq(4, 3)));
    }
}
