//! Double description: extreme rays of a pointed cone `{y : A y ≥ 0}`.

use num_traits::{Signed, Zero};

use super::linalg::{rank, solve};
use super::rat::{dot, primitive, Rat, RatVec};

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: RatVec,
    zeros: Bits,
}

/// Extreme rays, as primitive integer vectors, of `{y : ⟨row, y⟩ ≥ 0 for all rows}`.
///
/// The row matrix must have full column rank (so the cone is pointed). Returns `None`
/// otherwise.
pub fn extreme_rays(rows: &[RatVec], dim: usize) -> Option<Vec<RatVec>> {
    if dim == 0 {
        return Some(Vec::new());
    }
    if rank(rows) < dim {
        return None;
    }
    let n = rows.len();
    // Greedy choice of an independent starting set.
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut trial: Vec<RatVec> = basis.iter().map(|&j| rows[j].clone()).collect();
        trial.push(rows[i].clone());
        if rank(&trial) == trial.len() {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    let bm: Vec<RatVec> = basis.iter().map(|&j| rows[j].clone()).collect();
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for k in 0..dim {
        let e: RatVec = (0..dim).map(|i| if i == k { Rat::from_integer(1.into()) } else { Rat::zero() }).collect();
        let v = solve(&bm, &e).expect("independent rows");
        let mut zeros = Bits::new(n);
        for (idx, &j) in basis.iter().enumerate() {
            if idx != k {
                zeros.set(j);
            }
        }
        rays.push(Ray { v: primitive(&v), zeros });
    }
    let in_basis = |i: usize| basis.contains(&i);
    for i in (0..n).filter(|&i| !in_basis(i)) {
        let a = &rows[i];
        let vals: Vec<Rat> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if neg.is_empty() {
            for (k, r) in rays.iter_mut().enumerate() {
                if vals[k].is_zero() {
                    r.zeros.set(i);
                }
            }
            continue;
        }
        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if (common.count() as usize) + 2 < dim {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(k, r)| k != p && k != q && common.subset_of(&r.zeros));
                if blocked {
                    continue;
                }
                let v: RatVec = rays[q].v.iter().zip(&rays[p].v)
                    .map(|(x, y)| &vals[p] * x - &vals[q] * y)
                    .collect();
                let mut zeros = common;
                zeros.set(i);
                fresh.push(Ray { v: primitive(&v), zeros });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k].is_negative() {
                continue;
            }
            if vals[k].is_zero() {
                r.zeros.set(i);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }
    let mut out: Vec<RatVec> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Some(out)
}
