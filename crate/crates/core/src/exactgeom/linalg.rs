//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use super::rat::{Rat, RatMat, RatVec};

/// Reduced row echelon form; returns the reduced matrix and its pivot columns.
pub fn rref(m: &[RatVec]) -> (RatMat, Vec<usize>) {
    let mut a: RatMat = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rat::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &[RatVec]) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m x = 0}`; `cols` is needed when `m` has no rows.
pub fn nullspace(m: &[RatVec], cols: usize) -> RatMat {
    let (a, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `m x = b`, or `None` when inconsistent.
pub fn solve(m: &[RatVec], b: &[Rat]) -> Option<RatVec> {
    let cols = m.first().map_or(0, |r| r.len());
    let aug: RatMat = m.iter().zip(b).map(|(row, bi)| {
        let mut r = row.clone();
        r.push(bi.clone());
        r
    }).collect();
    let (a, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = a[row][cols].clone();
    }
    Some(x)
}

pub fn det(m: &[RatVec]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Rat::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    d
}

pub fn transpose(m: &[RatVec]) -> RatMat {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec(m: &[RatVec], v: &[Rat]) -> RatVec {
    m.iter().map(|r| super::rat::dot(r, v)).collect()
}

pub fn mat_mul(a: &[RatVec], b: &[RatVec]) -> RatMat {
    let bt = transpose(b);
    a.iter().map(|r| bt.iter().map(|c| super::rat::dot(r, c)).collect()).collect()
}

/// Gram matrix `B Bᵀ` of the rows of `b`.
pub fn gram(b: &[RatVec]) -> RatMat {
    b.iter().map(|x| b.iter().map(|y| super::rat::dot(x, y)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{rat, ratq, rmat, rvec};

    #[test]
    fn rref_and_rank() {
        let m = rmat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let (_, piv) = rref(&m);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = rmat(&[&[1, 2, 3], &[0, 1, 1]]);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&m, &ns[0]).iter().all(|x| x.is_zero()));
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn solve_and_det() {
        let m = rmat(&[&[2, 1], &[1, 3]]);
        assert_eq!(det(&m), rat(5));
        let x = solve(&m, &rvec(&[1, 2])).unwrap();
        assert_eq!(x, vec![ratq(1, 5), ratq(3, 5)]);
        assert!(solve(&rmat(&[&[1, 1], &[1, 1]]), &rvec(&[0, 1])).is_none());
        assert_eq!(det(&rmat(&[&[0, 1], &[1, 0]])), rat(-1));
    }
}
