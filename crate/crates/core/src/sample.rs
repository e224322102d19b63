//! Seeded random inputs for the property checks. Everything here is driven
//! by `ChaCha8Rng`, so a seed fixes the whole sample stream.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Field, Matrix, Rational};

pub const DEFAULT_SEED: u64 = 42;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= 9`, `1 <= q <= 6`.
pub fn rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=6)).expect("nonzero denominator")
}

pub fn rational_vec(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rational(rng)).collect()
}

pub fn rational_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |_, _| rational(rng))
}

/// Random matrix redrawn until it is invertible.
pub fn invertible_rational(rng: &mut impl Rng, n: usize) -> Matrix<Rational> {
    loop {
        let m = rational_matrix(rng, n, n);
        if m.inverse().is_ok() {
            return m;
        }
    }
}

/// Components uniform in `[-1, 1]`.
pub fn complex_vec(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
        .collect()
}

/// Small nonnegative integer weights, not all zero.
pub fn nonneg_weights(rng: &mut impl Rng, count: usize) -> Vec<Rational> {
    loop {
        let w: Vec<Rational> = (0..count).map(|_| Rational::from(rng.gen_range(0..=4i64))).collect();
        if w.iter().any(|v| !v.is_zero()) {
            return w;
        }
    }
}

/// Weights summing to one.
pub fn convex_weights(rng: &mut impl Rng, count: usize) -> Vec<Rational> {
    let w = nonneg_weights(rng, count);
    let total: Rational = w.iter().cloned().sum();
    w.into_iter().map(|v| v / total.clone()).collect()
}

/// `Σ λ_i v_i`.
pub fn combine<F: Field>(weights: &[Rational], vectors: &[Vec<F>]) -> Vec<F> {
    let n = vectors[0].len();
    let mut out = vec![F::zero(); n];
    for (w, v) in weights.iter().zip(vectors) {
        let w = F::from_rational(w);
        for (o, a) in out.iter_mut().zip(v) {
            *o += w.clone() * a.clone();
        }
    }
    out
}

/// A random nonnegative combination of the rows of `s`.
pub fn row_cone_point<F: Field>(rng: &mut impl Rng, s: &Matrix<F>) -> Vec<F> {
    let rows: Vec<Vec<F>> = s.row_iter().map(<[F]>::to_vec).collect();
    combine(&nonneg_weights(rng, rows.len()), &rows)
}

/// `x / ‖x‖_∞`.
pub fn normalize_inf<F: Field>(x: &[F]) -> Vec<F> {
    let norm = F::inf_norm(x);
    x.iter().map(|v| v.clone() / norm.clone()).collect()
}
