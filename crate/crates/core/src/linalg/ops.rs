//! Vector-level Kronecker operations, diagonal embedding and norms.

use super::field::{Field, Tolerance};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// `x ⊗ y`: entry `i` (one-based) is `x_{⌈i/n⌉} y_{(i-1)%n+1}`.
pub fn kron_vec<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter()
        .flat_map(|a| y.iter().map(move |b| a.clone() * b.clone()))
        .collect()
}

/// The diagonal matrix `D_x`.
pub fn diag_embed<F: Field>(x: &[F]) -> Matrix<F> {
    assert!(!x.is_empty(), "cannot embed an empty vector");
    Matrix::from_fn(x.len(), x.len(), |i, j| {
        if i == j {
            x[i].clone()
        } else {
            F::zero()
        }
    })
}

/// Checks `D_x ⊗ D_y = D_{x ⊗ y}`.
pub fn diag_kron_identity<F: Field>(x: &[F], y: &[F], tol: Tolerance) -> bool {
    diag_embed(x)
        .kron(&diag_embed(y))
        .approx_eq(&diag_embed(&kron_vec(x, y)), tol)
}

pub fn is_entrywise_nonneg<F: Field>(a: &Matrix<F>, tol: Tolerance) -> bool {
    a.is_entrywise_nonneg(tol)
}

/// The all-ones vector.
pub fn ones<F: Field>(n: usize) -> Vec<F> {
    vec![F::one(); n]
}

/// The one-based standard basis vector `e_k` of length `n`.
pub fn basis<F: Field>(k: usize, n: usize) -> Result<Vec<F>> {
    if k == 0 || k > n {
        return Err(Error::InvalidIndex(format!("e_{k} does not exist in dimension {n}")));
    }
    let mut v = vec![F::zero(); n];
    v[k - 1] = F::one();
    Ok(v)
}

pub fn add_vec<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter().zip(y).map(|(a, b)| a.clone() + b.clone()).collect()
}

pub fn scale_vec<F: Field>(alpha: &F, x: &[F]) -> Vec<F> {
    x.iter().map(|a| alpha.clone() * a.clone()).collect()
}

/// No entry of `x` is zero.
pub fn is_totally_nonzero<F: Field>(x: &[F], tol: Tolerance) -> bool {
    x.iter().all(|v| !v.is_zero_tol(tol))
}

/// Which p-norm to take.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PNorm {
    P(f64),
    Infinity,
}

impl PNorm {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(PNorm::Infinity),
            other => other
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad norm order {other:?}")))
                .map(PNorm::P),
        }
    }
}

pub fn p_norm<F: Field>(x: &[F], p: PNorm) -> Result<f64> {
    match p {
        PNorm::Infinity => Ok(x.iter().map(Field::modulus).fold(0.0, f64::max)),
        PNorm::P(p) if p.is_finite() && p >= 1.0 => {
            if p == 1.0 {
                Ok(x.iter().map(Field::modulus).sum())
            } else if p == 2.0 {
                Ok(x.iter().map(|v| v.modulus().powi(2)).sum::<f64>().sqrt())
            } else {
                Ok(x.iter().map(|v| v.modulus().powf(p)).sum::<f64>().powf(1.0 / p))
            }
        }
        PNorm::P(p) if p == f64::INFINITY => p_norm(x, PNorm::Infinity),
        PNorm::P(p) => Err(Error::InvalidArgument(format!("norm order must be >= 1, got {p}"))),
    }
}

/// Row-major reshape of a length `m*n` vector into an `m x n` matrix.
pub fn reshape<F: Field>(z: &[F], m: usize, n: usize) -> Result<Matrix<F>> {
    if m == 0 || n == 0 || z.len() != m * n {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} cannot be reshaped to {m}x{n}",
            z.len()
        )));
    }
    Matrix::new(m, n, z.to_vec())
}

/// Writes `z` as `x ⊗ y` with `x ∈ F^m`, `y ∈ F^n`, if possible.
///
/// `z` factors exactly when its row-major `m x n` reshape has rank at most
/// one. The returned `y` is the first nonzero row of the reshape scaled so
/// its first nonzero entry is 1; `x` holds the row scale factors. The zero
/// vector factors as `0 ⊗ e_1`.
pub fn kron_factor<F: Field>(
    z: &[F],
    m: usize,
    n: usize,
    tol: Tolerance,
) -> Result<Option<(Vec<F>, Vec<F>)>> {
    let zm = reshape(z, m, n)?;
    if zm.rank(tol) > 1 {
        return Ok(None);
    }
    let threshold = if F::EXACT {
        0.0
    } else {
        tol.eps * z.iter().map(Field::modulus).fold(0.0, f64::max)
    };
    let nonzero = |v: &F| if F::EXACT { !v.is_zero() } else { v.modulus() > threshold };
    let Some((lead_row, lead_col)) = (0..m)
        .find_map(|i| (0..n).find(|&j| nonzero(&zm[(i, j)])).map(|j| (i, j)))
    else {
        return Ok(Some((vec![F::zero(); m], basis(1, n)?)));
    };
    let pivot = zm[(lead_row, lead_col)].clone();
    let y: Vec<F> = zm.row(lead_row).iter().map(|v| v.clone() / pivot.clone()).collect();
    let x: Vec<F> = (0..m).map(|i| zm[(i, lead_col)].clone()).collect();
    Ok(Some((x, y)))
}
