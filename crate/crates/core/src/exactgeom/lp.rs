//! Exact two-phase simplex on `{A x = b, x ≥ 0}` with Bland's anti-cycling rule.

use num_traits::{One, Signed, Zero};

use super::rat::{Rat, RatVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: RatVec, value: Rat },
}

struct Tableau {
    rows: Vec<RatVec>,
    z: RatVec,
    basis: Vec<usize>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.z.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Rat::one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        if !self.z[c].is_zero() {
            let f = self.z[c].clone();
            for (x, p) in self.z.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        self.basis[r] = c;
    }

    /// Runs to optimality over the first `allowed` columns; `false` means unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.z[j].is_negative()) else { return true };
            let rhs = self.width();
            let mut best: Option<(Rat, usize, usize)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((br, _, bv)) => ratio < *br || (ratio == *br && self.basis[i] < *bv),
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            let Some((_, r, _)) = best else { return false };
            self.pivot(r, c);
        }
    }
}

/// Maximise `c·x` subject to `A x = b`, `x ≥ 0`.
pub fn maximize(a: &[RatVec], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    // Phase 1: artificial basis, minimise their sum.
    let mut rows: Vec<RatVec> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let neg = bi.is_negative();
        let mut r: RatVec = row.iter().map(|x| if neg { -x } else { x.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
        r.push(if neg { -bi } else { bi.clone() });
        rows.push(r);
    }
    let mut z = vec![Rat::zero(); n + m + 1];
    for row in &rows {
        for j in 0..n {
            z[j] -= &row[j];
        }
        z[n + m] -= &row[n + m];
    }
    let mut t = Tableau { rows, z, basis: (n..n + m).collect() };
    t.run(n + m);
    if !t.z[n + m].is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive artificials out of the basis; rows that cannot be cleared are redundant.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            } else {
                t.rows.remove(i);
                t.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }
    // Phase 2.
    let rows: Vec<RatVec> = t.rows.iter().map(|r| {
        let mut v = r[..n].to_vec();
        v.push(r[n + m].clone());
        v
    }).collect();
    let mut z: RatVec = c.iter().map(|x| -x).collect();
    z.push(Rat::zero());
    for (row, &bv) in rows.iter().zip(&t.basis) {
        if !c[bv].is_zero() {
            for (x, p) in z.iter_mut().zip(row) {
                *x += &c[bv] * p;
            }
        }
    }
    let mut t = Tableau { rows, z, basis: t.basis };
    if !t.run(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rat::zero(); n];
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        x[bv] = row[n].clone();
    }
    LpOutcome::Optimal { value: t.z[n].clone(), x }
}

/// A point of `{A x = b, x ≥ 0}`, if any.
pub fn feasible_point(a: &[RatVec], b: &[Rat]) -> Option<RatVec> {
    let n = a.first().map_or(0, |r| r.len());
    match maximize(a, b, &vec![Rat::zero(); n]) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}

/// Whether `target` is a nonnegative combination of `generators`.
pub fn in_cone(generators: &[RatVec], target: &[Rat]) -> bool {
    if generators.is_empty() {
        return target.iter().all(|x| x.is_zero());
    }
    let a: Vec<RatVec> = (0..target.len())
        .map(|i| generators.iter().map(|g| g[i].clone()).collect())
        .collect();
    feasible_point(&a, target).is_some()
}
