//! Named matrix families: the Sylvester matrices `H_n`, the DFT matrix `F_n`,
//! the cyclic companion matrix of `t^n - 1`, circulants, and the factors of
//! the Kronecker counterexample.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{DynMatrix, Field, Matrix, Rational, Tolerance};
use crate::perron::Similarity;

/// A named family member, as selected on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyId {
    /// `H_n`, of order `2^(n-1)`.
    HadamardLike(usize),
    Dft(usize),
    CycleCompanion(usize),
    Circulant(Vec<Rational>),
    /// The product `H_2 ⊗ T` of the counterexample.
    JpCounterexample,
    /// Its second factor `T = [[1, 2], [1, 1]]`.
    JpFactor,
}

impl FamilyId {
    pub fn build(&self) -> Result<DynMatrix> {
        Ok(match self {
            FamilyId::HadamardLike(n) => hadamard_like(*n)?.into(),
            FamilyId::Dft(n) => dft(*n).into(),
            FamilyId::CycleCompanion(n) => cycle_companion::<Rational>(*n).into(),
            FamilyId::Circulant(c) => circulant(c)?.into(),
            FamilyId::JpCounterexample => {
                let (h, t) = jp_counterexample_factors();
                h.kron(&t).into()
            }
            FamilyId::JpFactor => jp_counterexample_factors().1.into(),
        })
    }
}

/// `H_2 = [[1, 1], [1, -1]]` and `H_n = H_2 ⊗ H_{n-1}`; `H_n` has order `2^(n-1)`.
pub fn hadamard_like(n: usize) -> Result<Matrix<Rational>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("H_n needs n >= 2, got {n}")));
    }
    if n > 12 {
        return Err(Error::InvalidArgument(format!("H_{n} has order 2^{} (too large)", n - 1)));
    }
    let h2 = Matrix::from_i64_rows(&[[1, 1], [1, -1]]);
    let mut h = h2.clone();
    for _ in 2..n {
        h = h2.kron(&h);
    }
    Ok(h)
}

/// `F_n` with `(i, j)` entry `ω^((i-1)(j-1))`, `ω = exp(2πi/n)`. Exponents are
/// reduced mod `n` before the trigonometric evaluation. `F_0` is taken as `F_1`.
pub fn dft(n: usize) -> Matrix<Complex64> {
    let n = n.max(1);
    Matrix::from_fn(n, n, |i, j| {
        let e = (i * j) % n;
        Complex64::from_polar(1.0, 2.0 * PI * e as f64 / n as f64)
    })
}

/// Companion matrix of `t^n - 1`: ones at `(i, i+1)` and `(n, 1)`.
pub fn cycle_companion<F: Field>(n: usize) -> Matrix<F> {
    let n = n.max(1);
    Matrix::from_fn(n, n, |i, j| if (i + 1) % n == j { F::one() } else { F::zero() })
}

/// `Σ_k c_k C^(k-1)` with `C` the cyclic companion matrix.
pub fn circulant<F: Field>(c: &[F]) -> Result<Matrix<F>> {
    if c.is_empty() {
        return Err(Error::InvalidArgument("circulant needs a nonempty first row".into()));
    }
    let n = c.len();
    let shift = cycle_companion::<F>(n);
    let mut power = Matrix::identity(n);
    let mut acc = Matrix::zeros(n, n);
    for ck in c {
        acc = acc.add(&power.scale(ck))?;
        power = power.matmul(&shift)?;
    }
    Ok(acc)
}

/// `F_n D_{row k} F_n^{-1}`, checked against `C^(k-1)`.
pub fn extremal_row_image(n: usize, k: usize, tol: Tolerance) -> Result<Matrix<Complex64>> {
    if k == 0 || k > n {
        return Err(Error::InvalidIndex(format!("row {k} of F_{n}")));
    }
    let f = Similarity::new(dft(n), tol)?;
    let image = f.image(f.matrix().row(k - 1))?;
    let expected = cycle_companion::<Complex64>(n).pow((k - 1) as u32)?;
    if !image.approx_eq(&expected, tol) {
        return Err(Error::VerificationFailed(format!(
            "image of row {k} of F_{n} is not C^{}",
            k - 1
        )));
    }
    Ok(image)
}

/// `(H_2, T)` with `T = [[1, 2], [1, 1]]`.
pub fn jp_counterexample_factors() -> (Matrix<Rational>, Matrix<Rational>) {
    (
        Matrix::from_i64_rows(&[[1, 1], [1, -1]]),
        Matrix::from_i64_rows(&[[1, 2], [1, 1]]),
    )
}
