use std::fmt;
use std::ops::Index;

use num_complex::Complex64;

use super::field::{Field, Tolerance};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix. Element access is zero-based.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integer literals.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| F::from_i64(v)).collect())
            .collect();
        Self::from_rows(rows).expect("well-formed literal")
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| F::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&F> {
        (i < self.rows && j < self.cols).then(|| &self.data[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[F]> + '_ {
        self.data.chunks(self.cols)
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, alpha: &F) -> Self {
        self.map(|v| alpha.clone() * v.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&F, &F) -> F) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[F]) -> Result<Vec<F>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter().zip(x).fold(F::zero(), |mut acc, (a, b)| {
                    acc += a.clone() * b.clone();
                    acc
                })
            })
            .collect())
    }

    /// `x^T A` as a vector.
    pub fn vec_mul(&self, x: &[F]) -> Result<Vec<F>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{} matrix",
                x.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![F::zero(); self.cols];
        for (xi, row) in x.iter().zip(self.row_iter()) {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(row) {
                *o += xi.clone() * a.clone();
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<Self> {
        let n = self.ensure_square()?;
        let mut acc = Self::identity(n);
        for _ in 0..exp {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product `[a_ij B]`, computed entrywise:
    /// `(A ⊗ B)_{ij} = a_{⌈i/p⌉,⌈j/q⌉} b_{(i-1)%p+1,(j-1)%q+1}` (one-based).
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (other.rows, other.cols);
        Self::from_fn(self.rows * p, self.cols * q, |i, j| {
            self[(i / p, j / q)].clone() * other[(i % p, j % q)].clone()
        })
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Every entry real and nonnegative (exactly, or within `tol` for inexact fields).
    pub fn is_entrywise_nonneg(&self, tol: Tolerance) -> bool {
        self.data.iter().all(|v| v.is_nonneg_tol(tol))
    }

    fn max_modulus(&self) -> f64 {
        self.data.iter().map(Field::modulus).fold(0.0, f64::max)
    }

    /// Chooses a pivot row in `col` among rows `from..`. Exact fields take the
    /// first nonzero entry; inexact fields take the largest modulus and treat
    /// anything at or below `threshold` as zero.
    fn pivot_row(&self, col: usize, from: usize, threshold: f64) -> Option<usize> {
        if F::EXACT {
            (from..self.rows).find(|&r| !self[(r, col)].is_zero())
        } else {
            let (best, modulus) = (from..self.rows)
                .map(|r| (r, self[(r, col)].modulus()))
                .fold((None, 0.0), |acc, (r, m)| if m > acc.1 { (Some(r), m) } else { acc });
            best.filter(|_| modulus > threshold)
        }
    }

    fn zero_threshold(&self, tol: Tolerance) -> f64 {
        if F::EXACT {
            0.0
        } else {
            tol.eps * self.max_modulus()
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Rank by Gaussian elimination; inexact fields use a pivot threshold of
    /// `tol.eps` times the largest initial modulus.
    pub fn rank(&self, tol: Tolerance) -> usize {
        let threshold = self.zero_threshold(tol);
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = m.pivot_row(col, rank, threshold) else {
                continue;
            };
            m.swap_rows(p, rank);
            let pivot = m[(rank, col)].clone();
            for r in rank + 1..m.rows {
                let factor = m[(r, col)].clone() / pivot.clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let delta = factor.clone() * m[(rank, c)].clone();
                    m.data[r * m.cols + c] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Gauss–Jordan inverse with the default tolerance.
    pub fn inverse(&self) -> Result<Self> {
        self.inverse_tol(Tolerance::default())
    }

    pub fn inverse_tol(&self, tol: Tolerance) -> Result<Self> {
        let n = self.ensure_square()?;
        let threshold = self.zero_threshold(tol);
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = a.pivot_row(col, col, threshold).ok_or(Error::Singular)?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pivot = a[(col, col)].clone();
            for j in 0..n {
                let idx = col * n + j;
                a.data[idx] = a.data[idx].clone() / pivot.clone();
                inv.data[idx] = inv.data[idx].clone() / pivot.clone();
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[(r, col)].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let da = factor.clone() * a[(col, j)].clone();
                    a.data[r * n + j] -= da;
                    let di = factor.clone() * inv[(col, j)].clone();
                    inv.data[r * n + j] -= di;
                }
            }
        }
        Ok(inv)
    }

    /// Whether `self == alpha * I` for some scalar `alpha`.
    pub fn is_scalar(&self, tol: Tolerance) -> bool {
        if !self.is_square() {
            return false;
        }
        let alpha = self[(0, 0)].clone();
        Self::identity(self.rows).scale(&alpha).approx_eq(self, tol)
    }
}

impl Matrix<Rational> {
    /// Explicit promotion to complex mode.
    pub fn to_complex(&self) -> Matrix<Complex64> {
        self.map(|q| Complex64::new(q.to_f64(), 0.0))
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.data.chunks(self.cols) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|v| v.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for (r, row) in cells.chunks(self.cols).enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "{}", line.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn h2() -> Matrix<Rational> {
        Matrix::from_i64_rows(&[[1, 1], [1, -1]])
    }

    #[test]
    fn construction_errors() {
        assert!(Matrix::<Rational>::new(2, 2, vec![Rational::one(); 3]).is_err());
        assert!(Matrix::<Rational>::new(0, 2, vec![]).is_err());
        assert!(Matrix::<Rational>::from_rows(vec![vec![q(1, 1)], vec![]]).is_err());
    }

    #[test]
    fn identity_kron_identity() {
        let i2 = Matrix::<Rational>::identity(2);
        let i3 = Matrix::<Rational>::identity(3);
        assert_eq!(i2.kron(&i3), Matrix::identity(6));
    }

    #[test]
    fn h2_inverse_is_half_h2() {
        // closed form for [[a, b], [c, d]]: (1 / (ad - bc)) [[d, -b], [-c, a]]
        let h = h2();
        let det = &(&h[(0, 0)] * &h[(1, 1)]) - &(&h[(0, 1)] * &h[(1, 0)]);
        let closed = Matrix::from_rows(vec![
            vec![&h[(1, 1)] / &det, -(&h[(0, 1)] / &det)],
            vec![-(&h[(1, 0)] / &det), &h[(0, 0)] / &det],
        ])
        .unwrap();
        assert_eq!(h.inverse().unwrap(), closed);
        assert_eq!(h.inverse().unwrap(), h.scale(&q(1, 2)));
        assert_eq!(Matrix::<Rational>::identity(4).inverse().unwrap(), Matrix::identity(4));
    }

    #[test]
    fn singular_and_non_square() {
        let s = Matrix::<Rational>::from_i64_rows(&[[1, 2], [2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        let r = Matrix::<Rational>::from_i64_rows(&[[1, 2, 3]]);
        assert!(matches!(r.inverse(), Err(Error::NotSquare { .. })));
        let c = s.to_complex();
        assert_eq!(c.inverse(), Err(Error::Singular));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Rational>::from_i64_rows(&[[1, 2], [2, 4]]).rank(Tolerance::exact()), 1);
        assert_eq!(h2().rank(Tolerance::exact()), 2);
        assert_eq!(Matrix::<Rational>::zeros(3, 2).rank(Tolerance::exact()), 0);
        let scaled = Matrix::<Rational>::from_i64_rows(&[[1, 2], [2, 4]])
            .to_complex()
            .scale(&Complex64::new(1e-12, 0.0));
        assert_eq!(scaled.rank(Tolerance::default()), 1);
    }

    #[test]
    fn complex_inverse_roundtrip() {
        let m = Matrix::from_rows(vec![
            vec![Complex64::new(1.0, 2.0), Complex64::new(0.5, -1.0)],
            vec![Complex64::new(-3.0, 0.0), Complex64::new(2.0, 0.25)],
        ])
        .unwrap();
        let prod = m.matmul(&m.inverse().unwrap()).unwrap();
        assert!(prod.approx_eq(&Matrix::identity(2), Tolerance::default()));
    }

    #[test]
    fn scalar_check() {
        assert!(Matrix::<Rational>::identity(3).scale(&q(5, 2)).is_scalar(Tolerance::exact()));
        assert!(!h2().is_scalar(Tolerance::exact()));
    }

    #[test]
    fn display_is_aligned() {
        let m = Matrix::<Rational>::from_i64_rows(&[[1, -10], [100, 2]]);
        assert_eq!(m.to_string(), "  1  -10\n100    2");
    }
}
