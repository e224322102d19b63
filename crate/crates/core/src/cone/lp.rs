//! Phase-one simplex for `A λ = b, λ >= 0` with Bland's anti-cycling rule.
//!
//! Runs over exact rationals (decisions are exact) or over `f64` with an
//! absolute tolerance.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::linalg::Rational;

/// Ordered real scalar the simplex can pivot on.
pub trait LpScalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    /// Strictly positive beyond `eps` (exact scalars ignore `eps`).
    fn is_pos(&self, eps: f64) -> bool;
    fn is_neg(&self, eps: f64) -> bool;
    fn is_zero_eps(&self, eps: f64) -> bool {
        !self.is_pos(eps) && !self.is_neg(eps)
    }
}

impl LpScalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_pos(&self, _eps: f64) -> bool {
        self.is_positive()
    }
    fn is_neg(&self, _eps: f64) -> bool {
        self.is_negative()
    }
}

impl LpScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_pos(&self, eps: f64) -> bool {
        *self > eps
    }
    fn is_neg(&self, eps: f64) -> bool {
        *self < -eps
    }
}

/// Finds `λ >= 0` with `Σ_j a[i][j] λ_j = b[i]` for every row `i`, or `None`
/// if the system is infeasible. Every row of `a` must have `vars` entries.
pub fn find_nonneg_solution<T: LpScalar>(
    a: &[Vec<T>],
    b: &[T],
    vars: usize,
    eps: f64,
) -> Option<Vec<T>> {
    assert_eq!(a.len(), b.len(), "one right-hand side per constraint row");
    assert!(a.iter().all(|row| row.len() == vars), "ragged constraint matrix");
    let rows = a.len();
    if rows == 0 {
        return Some(vec![T::zero(); vars]);
    }
    let width = vars + rows;

    // tableau rows: [A | I | b] with b >= 0; artificial i is basic in row i
    let mut tab: Vec<Vec<T>> = Vec::with_capacity(rows);
    let mut rhs: Vec<T> = Vec::with_capacity(rows);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_neg(0.0);
        let mut t: Vec<T> = row
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        t.extend((0..rows).map(|k| if k == i { T::one() } else { T::zero() }));
        tab.push(t);
        rhs.push(if flip { -bi.clone() } else { bi.clone() });
    }
    let mut basis: Vec<usize> = (vars..width).collect();

    // reduced costs of the phase-one objective Σ artificials
    let mut cost: Vec<T> = (0..width)
        .map(|j| {
            if j < vars {
                tab.iter().fold(T::zero(), |acc, r| acc - r[j].clone())
            } else {
                T::zero()
            }
        })
        .collect();
    let mut objective = rhs.iter().fold(T::zero(), |acc, v| acc - v.clone());

    // Bland: lowest-index entering column, lowest-index leaving variable on ties
    while let Some(enter) = (0..width).find(|&j| cost[j].is_neg(eps)) {
        let mut leave: Option<(usize, T)> = None;
        for i in 0..rows {
            if !tab[i][enter].is_pos(eps) {
                continue;
            }
            let ratio = rhs[i].clone() / tab[i][enter].clone();
            leave = match leave {
                None => Some((i, ratio)),
                Some((best, best_ratio)) => {
                    let diff = ratio.clone() - best_ratio.clone();
                    if diff.is_neg(eps) || (diff.is_zero_eps(eps) && basis[i] < basis[best]) {
                        Some((i, ratio))
                    } else {
                        Some((best, best_ratio))
                    }
                }
            };
        }
        // the phase-one objective is bounded below by zero
        let (pr, _) = leave.expect("phase-one simplex cannot be unbounded");

        let pivot = tab[pr][enter].clone();
        for v in tab[pr].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        rhs[pr] = rhs[pr].clone() / pivot;
        let pivot_row = tab[pr].clone();
        let pivot_rhs = rhs[pr].clone();
        for i in 0..rows {
            if i == pr {
                continue;
            }
            let factor = tab[i][enter].clone();
            if factor.is_zero_eps(0.0) {
                continue;
            }
            for (v, p) in tab[i].iter_mut().zip(&pivot_row) {
                *v = v.clone() - factor.clone() * p.clone();
            }
            rhs[i] = rhs[i].clone() - factor * pivot_rhs.clone();
        }
        let factor = cost[enter].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            *v = v.clone() - factor.clone() * p.clone();
        }
        objective = objective - factor * pivot_rhs;
        basis[pr] = enter;
    }

    if !objective.is_zero_eps(eps) {
        return None;
    }
    let mut lambda = vec![T::zero(); vars];
    for (i, &var) in basis.iter().enumerate() {
        if var < vars {
            lambda[var] = rhs[i].clone();
        }
    }
    Some(lambda)
}
