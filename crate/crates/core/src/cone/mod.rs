//! Conical and convex hulls, generator-set Kronecker products, and the
//! strict spectratope containment certificate.

mod hull;
pub mod lp;
pub mod rays;

pub use hull::{
    coni_combination, coni_member, containment_check, conv_combination, conv_member,
    kron_generator_set, ConeGenerators, HullKind,
};

use num_integer::Integer;

use crate::digraph;
use crate::error::{Error, Result};
use crate::linalg::{is_totally_nonzero, kron_factor, kron_vec, Field, Matrix, Rational, Tolerance};
use crate::perron::Similarity;

/// A similarity together with a spectrum whose image is nonnegative and irreducible.
#[derive(Debug, Clone, PartialEq)]
pub struct StrongIdeal<F> {
    pub matrix: Matrix<F>,
    pub strong_spectrum: Vec<F>,
}

/// Evidence that `P(S) ⊗ P(T)` is a proper subset of `P(S ⊗ T)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TopeStrictnessCertificate<F> {
    pub index_s: usize,
    pub index_t: usize,
    pub indices_coprime: bool,
    pub kron_ideal: bool,
    pub kron_strong: bool,
    pub x: Vec<F>,
    pub y: Vec<F>,
    pub z: Vec<F>,
    pub phi: Rational,
    pub psi: Rational,
    /// `φ z + ψ e`.
    pub z_prime: Vec<F>,
    pub in_kron_cone: bool,
    pub in_kron_tope: bool,
    pub factorization_absent: bool,
}

impl<F> TopeStrictnessCertificate<F> {
    pub fn holds(&self) -> bool {
        self.indices_coprime
            && self.kron_ideal
            && self.kron_strong
            && self.in_kron_cone
            && self.in_kron_tope
            && self.factorization_absent
    }
}

/// Builds `z' = φ (x ⊗ y) + ψ e` from normalized, totally nonzero,
/// non-constant `x ∈ P(S)`, `y ∈ P(T)` and checks that `z'` lies in
/// `P(S ⊗ T)` without being a Kronecker product.
///
/// `phi` is the starting weight (`0 < φ < 1`, `ψ = 1 - φ`); it is halved
/// until `z'` is totally nonzero. Both inputs must be ideal and strong.
pub fn spectratope_strictness_certificate<F: Field>(
    s: &StrongIdeal<F>,
    t: &StrongIdeal<F>,
    phi: Rational,
    tol: Tolerance,
) -> Result<TopeStrictnessCertificate<F>> {
    if !phi.is_positive() || phi >= Rational::one() {
        return Err(Error::InvalidArgument(format!(
            "weights must satisfy 0 < φ < 1 so that ψ = 1 - φ > 0, got φ = {phi}"
        )));
    }
    let ss = Similarity::new(s.matrix.clone(), tol)?;
    let ts = Similarity::new(t.matrix.clone(), tol)?;
    let (m, n) = (ss.order(), ts.order());
    if m < 2 || n < 2 {
        return Err(Error::Degenerate(format!("orders must be at least 2, got {m} and {n}")));
    }
    for (name, sim, spec) in [("S", &ss, &s.strong_spectrum), ("T", &ts, &t.strong_spectrum)] {
        if !sim.is_ideal(tol)? {
            return Err(Error::VerificationFailed(format!("{name} is not ideal")));
        }
        if !sim.verify_strong(spec, tol)? {
            return Err(Error::VerificationFailed(format!(
                "{name}: the given spectrum does not certify strong"
            )));
        }
    }
    let index_s = digraph::imprimitivity_index(&ss.image(&s.strong_spectrum)?, tol)?;
    let index_t = digraph::imprimitivity_index(&ts.image(&t.strong_spectrum)?, tol)?;

    let kron = ss.kron(&ts);
    let kron_ideal = kron.is_ideal(tol)?;
    let kron_strong =
        kron.verify_strong(&kron_vec(&s.strong_spectrum, &t.strong_spectrum), tol)?;

    let normalized = |sim: &Similarity<F>, name: &str| -> Result<Vec<F>> {
        let w = sim.find_witness(tol).ok_or(Error::NotPerron)?;
        let v = sim.totally_nonzero_member(w, tol)?;
        if v.iter().all(|a| a.approx_eq(&v[0], tol)) {
            return Err(Error::Degenerate(format!("{name} vector is constant")));
        }
        let norm = F::inf_norm(&v);
        Ok(v.into_iter().map(|a| a / norm.clone()).collect())
    };
    let x = normalized(&ss, "x")?;
    let y = normalized(&ts, "y")?;
    let z = kron_vec(&x, &y);

    let mut phi = phi;
    let z_prime = loop {
        let psi = F::from_rational(&(Rational::one() - phi.clone()));
        let weight = F::from_rational(&phi);
        let candidate: Vec<F> = z
            .iter()
            .map(|v| weight.clone() * v.clone() + psi.clone())
            .collect();
        if is_totally_nonzero(&candidate, tol) {
            break candidate;
        }
        phi /= Rational::from(2);
    };
    let psi = Rational::one() - phi.clone();

    Ok(TopeStrictnessCertificate {
        index_s,
        index_t,
        indices_coprime: index_s.gcd(&index_t) == 1,
        kron_ideal,
        kron_strong,
        in_kron_cone: kron.in_cone(&z_prime, tol)?,
        in_kron_tope: kron.in_tope(&z_prime, tol)?,
        factorization_absent: kron_factor(&z_prime, m, n, tol)?.is_none(),
        x,
        y,
        z,
        phi,
        psi,
        z_prime,
    })
}
