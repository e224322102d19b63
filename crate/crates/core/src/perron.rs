//! Perron similarities, spectracones and spectratopes.
//!
//! For invertible `S`, the spectracone is `C(S) = {x : S D_x S^{-1} >= 0}` and
//! the spectratope `P(S)` is its slice with `‖x‖_∞ = 1`. `S` is a Perron
//! similarity when some column `S e_k` and the matching inverse row
//! `e_k^T S^{-1}` are both nonnegative or both nonpositive.

use std::fmt;

use serde::Serialize;

use crate::digraph;
use crate::error::{Error, Result};
use crate::kron_index::{fold_index, IndexPair};
use crate::linalg::{
    add_vec, basis, diag_embed, is_totally_nonzero, kron_factor, kron_vec, ones, Field, Matrix,
    Rational, Tolerance,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn apply<F: Field>(self, v: &F) -> F {
        match self {
            Sign::Plus => v.clone(),
            Sign::Minus => -v.clone(),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// Column/inverse-row pair certifying a Perron similarity. `index` is one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PerronWitness {
    pub index: usize,
    pub sign: Sign,
}

/// An invertible matrix together with its inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct Similarity<F> {
    s: Matrix<F>,
    s_inv: Matrix<F>,
}

impl<F: Field> Similarity<F> {
    pub fn new(s: Matrix<F>, tol: Tolerance) -> Result<Self> {
        let s_inv = s.inverse_tol(tol)?;
        Ok(Self { s, s_inv })
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.s
    }

    pub fn inverse(&self) -> &Matrix<F> {
        &self.s_inv
    }

    pub fn order(&self) -> usize {
        self.s.rows()
    }

    /// `S ⊗ T`, reusing `S^{-1} ⊗ T^{-1}` as the inverse.
    pub fn kron(&self, other: &Self) -> Self {
        Self {
            s: self.s.kron(&other.s),
            s_inv: self.s_inv.kron(&other.s_inv),
        }
    }

    fn check_dim(&self, x: &[F]) -> Result<()> {
        if x.len() != self.order() {
            return Err(Error::DimensionMismatch(format!(
                "spectrum of length {} for a matrix of order {}",
                x.len(),
                self.order()
            )));
        }
        Ok(())
    }

    /// `S D_x S^{-1}`.
    pub fn image(&self, x: &[F]) -> Result<Matrix<F>> {
        self.check_dim(x)?;
        let scaled = Matrix::from_fn(self.order(), self.order(), |i, k| {
            self.s[(i, k)].clone() * x[k].clone()
        });
        scaled.matmul(&self.s_inv)
    }

    /// `x ∈ C(S)`. Stops at the first negative entry of the image.
    pub fn in_cone(&self, x: &[F], tol: Tolerance) -> Result<bool> {
        self.check_dim(x)?;
        let n = self.order();
        let mut scaled_row = vec![F::zero(); n];
        for i in 0..n {
            for (k, slot) in scaled_row.iter_mut().enumerate() {
                *slot = self.s[(i, k)].clone() * x[k].clone();
            }
            for j in 0..n {
                let mut acc = F::zero();
                for (k, a) in scaled_row.iter().enumerate() {
                    if !a.is_zero() {
                        acc += a.clone() * self.s_inv[(k, j)].clone();
                    }
                }
                if !acc.is_nonneg_tol(tol) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `x ∈ P(S)`: in the cone with `‖x‖_∞ = 1` (exactly, for rationals).
    pub fn in_tope(&self, x: &[F], tol: Tolerance) -> Result<bool> {
        self.check_dim(x)?;
        Ok(F::inf_norm(x).approx_eq(&F::one(), tol) && self.in_cone(x, tol)?)
    }

    /// The `n² x n` matrix `M` with `M[(i,j), k] = s_ik [S^{-1}]_kj`, rows in
    /// lexicographic `(i, j)` order, so `x ∈ C(S)` iff `M x >= 0`.
    pub fn cone_inequalities(&self) -> Matrix<F> {
        let n = self.order();
        Matrix::from_fn(n * n, n, |r, k| {
            let (i, j) = (r / n, r % n);
            self.s[(i, k)].clone() * self.s_inv[(k, j)].clone()
        })
    }

    pub fn witness_holds(&self, w: PerronWitness, tol: Tolerance) -> bool {
        let n = self.order();
        if w.index == 0 || w.index > n {
            return false;
        }
        let k = w.index - 1;
        (0..n).all(|i| w.sign.apply(&self.s[(i, k)]).is_nonneg_tol(tol))
            && (0..n).all(|j| w.sign.apply(&self.s_inv[(k, j)]).is_nonneg_tol(tol))
    }

    /// First witness in ascending index order, `+` before `-`.
    pub fn find_witness(&self, tol: Tolerance) -> Option<PerronWitness> {
        (1..=self.order())
            .flat_map(|index| [Sign::Plus, Sign::Minus].map(|sign| PerronWitness { index, sign }))
            .find(|&w| self.witness_holds(w, tol))
    }

    /// Some row equals `e^T` and every row lies in `C(S)`.
    pub fn is_ideal(&self, tol: Tolerance) -> Result<bool> {
        let e = ones::<F>(self.order());
        let has_ones_row = self
            .s
            .row_iter()
            .any(|row| row.iter().zip(&e).all(|(a, b)| a.approx_eq(b, tol)));
        if !has_ones_row {
            return Ok(false);
        }
        for row in self.s.row_iter() {
            if !self.in_cone(row, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `S D_x S^{-1}` is nonnegative and irreducible.
    pub fn verify_strong(&self, x: &[F], tol: Tolerance) -> Result<bool> {
        let image = self.image(x)?;
        Ok(image.is_entrywise_nonneg(tol) && digraph::is_irreducible(&image, tol)?)
    }

    /// `e_k + 2e`: in `C(S)`, totally nonzero, and not a multiple of `e`.
    pub fn totally_nonzero_member(&self, w: PerronWitness, tol: Tolerance) -> Result<Vec<F>> {
        if !self.witness_holds(w, tol) {
            return Err(Error::InvalidWitness {
                index: w.index,
                sign: w.sign.value(),
            });
        }
        let n = self.order();
        if n < 2 {
            return Err(Error::Degenerate(
                "order 1: every vector is a multiple of e".into(),
            ));
        }
        let two = F::from_i64(2);
        Ok(add_vec(
            &basis(w.index, n)?,
            &ones::<F>(n).into_iter().map(|v| v * two.clone()).collect::<Vec<_>>(),
        ))
    }
}

pub fn similarity_image<F: Field>(s: &Matrix<F>, x: &[F], tol: Tolerance) -> Result<Matrix<F>> {
    Similarity::new(s.clone(), tol)?.image(x)
}

pub fn in_spectracone<F: Field>(s: &Matrix<F>, x: &[F], tol: Tolerance) -> Result<bool> {
    Similarity::new(s.clone(), tol)?.in_cone(x, tol)
}

pub fn in_spectratope<F: Field>(s: &Matrix<F>, x: &[F], tol: Tolerance) -> Result<bool> {
    Similarity::new(s.clone(), tol)?.in_tope(x, tol)
}

pub fn cone_inequalities<F: Field>(s: &Matrix<F>, tol: Tolerance) -> Result<Matrix<F>> {
    Ok(Similarity::new(s.clone(), tol)?.cone_inequalities())
}

pub fn find_perron_witness<F: Field>(s: &Matrix<F>, tol: Tolerance) -> Result<Option<PerronWitness>> {
    Ok(Similarity::new(s.clone(), tol)?.find_witness(tol))
}

/// Witness for `S ⊗ T` built from witnesses of `S` and `T`, where `n` is the
/// order of `T`: index `(k-1) n + l`, sign the product of the signs.
pub fn kron_witness_index(ws: PerronWitness, wt: PerronWitness, n: usize) -> Result<PerronWitness> {
    let index = fold_index(IndexPair::new(ws.index, wt.index)?, n)?;
    Ok(PerronWitness {
        index,
        sign: ws.sign.times(wt.sign),
    })
}

pub fn is_ideal<F: Field>(s: &Matrix<F>, tol: Tolerance) -> Result<bool> {
    Similarity::new(s.clone(), tol)?.is_ideal(tol)
}

pub fn verify_strong_certificate<F: Field>(s: &Matrix<F>, x: &[F], tol: Tolerance) -> Result<bool> {
    Similarity::new(s.clone(), tol)?.verify_strong(x, tol)
}

pub fn make_totally_nonzero<F: Field>(
    s: &Matrix<F>,
    w: PerronWitness,
    tol: Tolerance,
) -> Result<Vec<F>> {
    Similarity::new(s.clone(), tol)?.totally_nonzero_member(w, tol)
}

/// Evidence that `C(S) ⊗ C(T)` is a proper subset of `C(S ⊗ T)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeStrictnessCertificate<F> {
    pub x: Vec<F>,
    pub y: Vec<F>,
    pub z: Vec<F>,
    pub epsilon: Rational,
    /// `z + ε e`.
    pub z_prime: Vec<F>,
    pub in_kron_cone: bool,
    pub factorization_absent: bool,
}

impl<F> ConeStrictnessCertificate<F> {
    pub fn holds(&self) -> bool {
        self.in_kron_cone && self.factorization_absent
    }
}

/// Builds `z' = x ⊗ y + ε e` with `x`, `y` totally nonzero non-constant cone
/// members, and checks that `z' ∈ C(S ⊗ T)` but `z'` is not a Kronecker product.
pub fn strict_cone_containment_certificate<F: Field>(
    s: &Matrix<F>,
    t: &Matrix<F>,
    tol: Tolerance,
) -> Result<ConeStrictnessCertificate<F>> {
    let ss = Similarity::new(s.clone(), tol)?;
    let ts = Similarity::new(t.clone(), tol)?;
    let (m, n) = (ss.order(), ts.order());
    if m < 2 || n < 2 {
        return Err(Error::Degenerate(format!("orders must be at least 2, got {m} and {n}")));
    }
    let ws = ss.find_witness(tol).ok_or(Error::NotPerron)?;
    let wt = ts.find_witness(tol).ok_or(Error::NotPerron)?;
    let x = ss.totally_nonzero_member(ws, tol)?;
    let y = ts.totally_nonzero_member(wt, tol)?;
    for (name, v) in [("x", &x), ("y", &y)] {
        if v.iter().all(|a| a.approx_eq(&v[0], tol)) {
            return Err(Error::Degenerate(format!("{name} is constant")));
        }
    }
    let z = kron_vec(&x, &y);
    let mut epsilon = Rational::one();
    let z_prime = loop {
        let shift = F::from_rational(&epsilon);
        let candidate: Vec<F> = z.iter().map(|v| v.clone() + shift.clone()).collect();
        if is_totally_nonzero(&candidate, tol) {
            break candidate;
        }
        epsilon += Rational::one();
    };
    let kron = ss.kron(&ts);
    let in_kron_cone = kron.in_cone(&z_prime, tol)?;
    let factorization_absent = kron_factor(&z_prime, m, n, tol)?.is_none();
    Ok(ConeStrictnessCertificate {
        x,
        y,
        z,
        epsilon,
        z_prime,
        in_kron_cone,
        factorization_absent,
    })
}

/// The Kronecker-product counterexample: a matrix whose spectracone strictly
/// contains the ray through `e` without being a Perron similarity.
#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleReport {
    pub s: Matrix<Rational>,
    pub s_inv: Matrix<Rational>,
    pub d: Matrix<Rational>,
    pub a: Matrix<Rational>,
    pub witness_search: Option<PerronWitness>,
    pub nonscalar: bool,
    pub a_nonneg: bool,
    pub s_matches: bool,
    pub s_inv_matches: bool,
    pub a_matches: bool,
}

impl CounterexampleReport {
    pub fn holds(&self) -> bool {
        self.witness_search.is_none()
            && self.nonscalar
            && self.a_nonneg
            && self.s_matches
            && self.s_inv_matches
            && self.a_matches
    }
}

fn decimal_matrix(rows: &[&[&str]]) -> Matrix<Rational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|v| v.parse().expect("literal")).collect())
            .collect(),
    )
    .expect("literal")
}

/// Published values of the counterexample, as displayed in decimal form.
pub fn counterexample_expected() -> (Matrix<Rational>, Matrix<Rational>, Matrix<Rational>) {
    let s = decimal_matrix(&[
        &["1", "2", "1", "2"],
        &["1", "1", "1", "1"],
        &["1", "2", "-1", "-2"],
        &["1", "1", "-1", "-1"],
    ]);
    let s_inv = decimal_matrix(&[
        &["-0.5", "1", "-0.5", "1"],
        &["0.5", "-0.5", "0.5", "-0.5"],
        &["-0.5", "1", "0.5", "-1"],
        &["0.5", "-0.5", "-0.5", "0.5"],
    ]);
    let a = decimal_matrix(&[
        &["0.5", "0", "1.5", "0"],
        &["0", "0.5", "0", "1.5"],
        &["1.5", "0", "0.5", "0"],
        &["0", "1.5", "0", "0.5"],
    ]);
    (s, s_inv, a)
}

pub fn reproduce_counterexample() -> CounterexampleReport {
    let tol = Tolerance::exact();
    let (h2, t) = crate::generators::jp_counterexample_factors();
    let s = h2.kron(&t);
    let sim = Similarity::new(s.clone(), tol).expect("counterexample matrix is invertible");
    let x: Vec<Rational> = [2, 2, -1, -1].map(Rational::from).to_vec();
    let d = diag_embed(&x);
    let a = s
        .matmul(&d)
        .and_then(|sd| sd.matmul(sim.inverse()))
        .expect("square 4x4 products");
    let (exp_s, exp_inv, exp_a) = counterexample_expected();
    CounterexampleReport {
        s_matches: s == exp_s,
        s_inv_matches: *sim.inverse() == exp_inv,
        a_matches: a == exp_a,
        witness_search: sim.find_witness(tol),
        nonscalar: !a.is_scalar(tol),
        a_nonneg: a.is_entrywise_nonneg(tol),
        s_inv: sim.inverse().clone(),
        s,
        d,
        a,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{dft, hadamard_like};
    use crate::linalg::kron_vec;
    use num_complex::Complex64;

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn h2() -> Matrix<Rational> {
        hadamard_like(2).unwrap()
    }

    const EXACT: Tolerance = Tolerance { eps: 0.0 };

    #[test]
    fn image_examples() {
        let r = reproduce_counterexample();
        assert_eq!(similarity_image(&r.s, &qv(&[2, 2, -1, -1]), EXACT).unwrap(), r.a);
        assert_eq!(r.a[(0, 2)], Rational::new(3, 2).unwrap());
        assert_eq!(similarity_image(&r.s, &ones(4), EXACT).unwrap(), Matrix::identity(4));
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(
            similarity_image(&h2(), &qv(&[1, 0]), EXACT).unwrap(),
            Matrix::from_fn(2, 2, |_, _| half.clone())
        );
        assert!(similarity_image(&h2(), &qv(&[1, 0, 0]), EXACT).is_err());
        let singular = Matrix::<Rational>::from_i64_rows(&[[1, 1], [1, 1]]);
        assert_eq!(similarity_image(&singular, &qv(&[1, 0]), EXACT), Err(Error::Singular));
    }

    #[test]
    fn cone_examples() {
        let r = reproduce_counterexample();
        assert!(in_spectracone(&r.s, &qv(&[2, 2, -1, -1]), EXACT).unwrap());
        assert!(in_spectracone(&r.s, &ones(4), EXACT).unwrap());
        // image of (1,-2) under H_2 is [[-1/2, 3/2], [3/2, -1/2]]
        let img = similarity_image(&h2(), &qv(&[1, -2]), EXACT).unwrap();
        assert_eq!(img[(0, 0)], Rational::new(-1, 2).unwrap());
        assert!(!in_spectracone(&h2(), &qv(&[1, -2]), EXACT).unwrap());
    }

    #[test]
    fn tope_examples() {
        assert!(in_spectratope(&h2(), &qv(&[1, -1]), EXACT).unwrap());
        assert!(in_spectratope(&h2(), &ones(2), EXACT).unwrap());
        let r = reproduce_counterexample();
        assert!(!in_spectratope(&r.s, &qv(&[2, 2, -1, -1]), EXACT).unwrap());
    }

    #[test]
    fn cone_inequalities_of_identity() {
        let m = cone_inequalities(&Matrix::<Rational>::identity(3), EXACT).unwrap();
        for r in 0..9 {
            let (i, j) = (r / 3, r % 3);
            let expected: Vec<Rational> = if i == j { basis(i + 1, 3).unwrap() } else { qv(&[0, 0, 0]) };
            assert_eq!(m.row(r), &expected[..]);
        }
    }

    #[test]
    fn cone_inequalities_of_h2_is_row_cone() {
        // Mx >= 0 iff x1 >= |x2|
        let m = cone_inequalities(&h2(), EXACT).unwrap();
        for a in -4..=4 {
            for b in -4..=4 {
                let x = qv(&[a, b]);
                let feasible = m.mul_vec(&x).unwrap().iter().all(|v| !v.is_negative());
                assert_eq!(feasible, a >= b.abs(), "x = ({a}, {b})");
            }
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(
            find_perron_witness(&h2(), EXACT).unwrap(),
            Some(PerronWitness { index: 1, sign: Sign::Plus })
        );
        assert_eq!(find_perron_witness(&reproduce_counterexample().s, EXACT).unwrap(), None);
        for n in 1..=6 {
            assert_eq!(
                find_perron_witness(&dft(n), Tolerance::default()).unwrap(),
                Some(PerronWitness { index: 1, sign: Sign::Plus })
            );
        }
        let neg = h2().scale(&Rational::from(-1));
        assert_eq!(
            find_perron_witness(&neg, EXACT).unwrap(),
            Some(PerronWitness { index: 1, sign: Sign::Minus })
        );
    }

    #[test]
    fn kron_witness_examples() {
        let p = |index| PerronWitness { index, sign: Sign::Plus };
        let m = |index| PerronWitness { index, sign: Sign::Minus };
        assert_eq!(kron_witness_index(p(1), p(1), 2).unwrap(), p(1));
        let w = kron_witness_index(p(2), p(1), 2).unwrap();
        assert_eq!(w, p(3));
        let h4 = Similarity::new(h2().kron(&h2()), EXACT).unwrap();
        assert!(h4.witness_holds(kron_witness_index(p(1), p(1), 2).unwrap(), EXACT));
        let neg_h3 = hadamard_like(2).unwrap().scale(&Rational::from(-1));
        let neg_t = Matrix::<Rational>::from_i64_rows(&[[-1, -1, -1], [-1, 1, 0], [-1, 0, 1]]);
        let wt = find_perron_witness(&neg_t, EXACT).unwrap().unwrap();
        assert_eq!(wt, m(1));
        let w = kron_witness_index(m(1), wt, 3).unwrap();
        assert_eq!(w, p(1));
        let prod = Similarity::new(neg_h3.kron(&neg_t), EXACT).unwrap();
        assert!(prod.witness_holds(w, EXACT));
        assert!(!prod.witness_holds(m(1), EXACT));
    }

    #[test]
    fn ideal_examples() {
        assert!(is_ideal(&h2(), EXACT).unwrap());
        for n in 2..=8 {
            assert!(is_ideal(&dft(n), Tolerance::default()).unwrap(), "F_{n}");
        }
        let t = Matrix::<Rational>::from_i64_rows(&[[1, 2], [1, 1]]);
        assert!(!is_ideal(&t, EXACT).unwrap());
    }

    #[test]
    fn strong_examples() {
        let tol = Tolerance::default();
        for n in 2..=8 {
            let f = dft(n);
            assert!(verify_strong_certificate(&f, f.row(1), tol).unwrap());
            assert!(!verify_strong_certificate(&f, &ones(n), tol).unwrap());
        }
        // H_2 with (1,-1) gives [[0,1],[1,0]], a 2-cycle
        assert!(verify_strong_certificate(&h2(), &qv(&[1, -1]), EXACT).unwrap());
        // H_2 with (1,0) gives the positive all-halves matrix
        assert!(verify_strong_certificate(&h2(), &qv(&[1, 0]), EXACT).unwrap());
        assert!(!verify_strong_certificate(&h2(), &qv(&[1, 1]), EXACT).unwrap());
    }

    #[test]
    fn totally_nonzero_examples() {
        let p1 = PerronWitness { index: 1, sign: Sign::Plus };
        let x = make_totally_nonzero(&h2(), p1, EXACT).unwrap();
        assert_eq!(x, qv(&[3, 2]));
        let m = cone_inequalities(&h2(), EXACT).unwrap();
        assert!(m.mul_vec(&x).unwrap().iter().all(|v| !v.is_negative()));

        let h4 = h2().kron(&h2());
        let x = make_totally_nonzero(&h4, p1, EXACT).unwrap();
        assert_eq!(x, qv(&[3, 2, 2, 2]));
        assert!(in_spectracone(&h4, &x, EXACT).unwrap());

        let tol = Tolerance::default();
        let x = make_totally_nonzero(&dft(3), p1, tol).unwrap();
        let expected: Vec<Complex64> = [3.0, 2.0, 2.0].map(|v| Complex64::new(v, 0.0)).to_vec();
        assert_eq!(x, expected);
        assert!(similarity_image(&dft(3), &x, tol).unwrap().is_entrywise_nonneg(tol));

        let bad = PerronWitness { index: 2, sign: Sign::Plus };
        assert!(matches!(make_totally_nonzero(&h2(), bad, EXACT), Err(Error::InvalidWitness { .. })));
        let one = Matrix::<Rational>::identity(1);
        assert!(matches!(make_totally_nonzero(&one, p1, EXACT), Err(Error::Degenerate(_))));
    }

    #[test]
    fn strict_cone_certificate_h2() {
        let c = strict_cone_containment_certificate(&h2(), &h2(), EXACT).unwrap();
        assert_eq!(c.x, qv(&[3, 2]));
        assert_eq!(c.z, qv(&[9, 6, 6, 4]));
        assert_eq!(c.z_prime, qv(&[10, 7, 7, 5]));
        assert_eq!(c.epsilon, Rational::one());
        assert!(c.holds());
        // 10*5 - 7*7 = 1
        assert_eq!(c.z_prime[0].clone() * c.z_prime[3].clone() - c.z_prime[1].clone() * c.z_prime[2].clone(), Rational::one());
    }

    #[test]
    fn strict_cone_certificate_errors() {
        let t = Matrix::<Rational>::from_i64_rows(&[[1, 2], [1, 1]]);
        assert_eq!(strict_cone_containment_certificate(&h2(), &t, EXACT), Err(Error::NotPerron));
        let one = Matrix::<Rational>::identity(1);
        assert!(matches!(
            strict_cone_containment_certificate(&one, &h2(), EXACT),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn strict_cone_certificate_order_16() {
        let h4 = h2().kron(&h2());
        let c = strict_cone_containment_certificate(&h4, &h4, EXACT).unwrap();
        assert_eq!(c.z_prime.len(), 16);
        assert!(c.holds());
        let z: Vec<Rational> = kron_vec(&c.x, &c.y);
        assert_eq!(z, c.z);
        assert_eq!(crate::linalg::reshape(&c.z_prime, 4, 4).unwrap().rank(EXACT), 2);
    }

    #[test]
    fn counterexample() {
        let r = reproduce_counterexample();
        assert!(r.holds());
        assert_eq!(r.a[(0, 2)], Rational::new(3, 2).unwrap());
        assert!(r.witness_search.is_none());
        assert!(r.nonscalar);
    }
}
