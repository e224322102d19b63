//! Brute-force extreme rays of `{x : M x >= 0}` over the rationals.
//!
//! Every `(n-1)`-subset of constraint rows with rank `n-1` pins down a line;
//! each direction on that line that satisfies all constraints is an extreme
//! ray. Exponential in the number of constraints, so only for tiny systems.

use crate::linalg::{Matrix, Rational, Tolerance};

/// Scales `v` so its first nonzero entry is `±1`, keeping the direction.
pub fn normalize_ray(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let s = lead.abs();
            v.iter().map(|x| x / &s).collect()
        }
        None => v.to_vec(),
    }
}

/// Whether `a = t b` for some `t > 0`.
pub fn same_ray(a: &[Rational], b: &[Rational]) -> bool {
    a.len() == b.len() && normalize_ray(a) == normalize_ray(b)
}

/// One-dimensional null space of a `(n-1) x n` matrix of rank `n-1`.
fn null_vector(rows: &[&[Rational]], n: usize) -> Option<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = &*v / &pivot;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    if pivots.len() != n - 1 {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rational::zero(); n];
    v[free] = Rational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[row][free].clone();
    }
    Some(v)
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Extreme rays of the pointed cone `{x : M x >= 0}`, normalized and sorted.
pub fn extreme_rays(m: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    let n = m.cols();
    let mut constraints: Vec<Vec<Rational>> = Vec::new();
    for row in m.row_iter() {
        if row.iter().all(Rational::is_zero) {
            continue;
        }
        let r = normalize_ray(row);
        if !constraints.contains(&r) {
            constraints.push(r);
        }
    }
    let feasible = |v: &[Rational]| {
        constraints
            .iter()
            .all(|c| !c.iter().zip(v).map(|(a, b)| a * b).sum::<Rational>().is_negative())
    };
    let mut rays: Vec<Vec<Rational>> = Vec::new();
    if n == 1 {
        for v in [vec![Rational::one()], vec![-Rational::one()]] {
            if feasible(&v) {
                rays.push(v);
            }
        }
        return rays;
    }
    combinations(constraints.len(), n - 1, |subset| {
        let rows: Vec<&[Rational]> = subset.iter().map(|&i| constraints[i].as_slice()).collect();
        if let Some(v) = null_vector(&rows, n) {
            for cand in [v.clone(), v.iter().map(|x| -x.clone()).collect()] {
                let cand = normalize_ray(&cand);
                if feasible(&cand) && !rays.contains(&cand) {
                    rays.push(cand);
                }
            }
        }
    });
    rays.sort();
    rays
}

/// Rays of the spectracone of `s`, via its linearized inequalities.
pub fn spectracone_rays(s: &Matrix<Rational>) -> crate::error::Result<Vec<Vec<Rational>>> {
    let m = crate::perron::cone_inequalities(s, Tolerance::exact())?;
    Ok(extreme_rays(&m))
}

/// Each ray is a positive multiple of some row and vice versa.
pub fn rays_match_rows(rays: &[Vec<Rational>], s: &Matrix<Rational>) -> bool {
    rays.len() == s.rows()
        && rays.iter().all(|r| s.row_iter().any(|row| same_ray(r, row)))
        && s.row_iter().all(|row| rays.iter().any(|r| same_ray(r, row)))
}
