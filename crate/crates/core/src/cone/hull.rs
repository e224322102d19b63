use crate::error::{Error, Result};
use crate::linalg::{kron_vec, Field, Matrix, Tolerance};

use super::lp::{find_nonneg_solution, LpScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HullKind {
    Conical,
    Convex,
}

/// A finite generating set for a conical or convex hull.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeGenerators<F> {
    vectors: Vec<Vec<F>>,
    kind: HullKind,
}

impl<F: Field> ConeGenerators<F> {
    pub fn new(vectors: Vec<Vec<F>>, kind: HullKind) -> Result<Self> {
        let dim = vectors
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidArgument("empty generator set".into()))?;
        if dim == 0 || vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch("generators must share a positive dimension".into()));
        }
        Ok(Self { vectors, kind })
    }

    /// The rows of `m`.
    pub fn rows_of(m: &Matrix<F>, kind: HullKind) -> Self {
        Self {
            vectors: m.row_iter().map(<[F]>::to_vec).collect(),
            kind,
        }
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.vectors
    }

    pub fn kind(&self) -> HullKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].len()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Membership in the hull of the generators' own kind.
    pub fn contains(&self, x: &[F], tol: Tolerance) -> Result<bool> {
        match self.kind {
            HullKind::Conical => coni_member(self, x, tol),
            HullKind::Convex => conv_member(self, x, tol),
        }
    }

    fn combination(&self, x: &[F], convex: bool, tol: Tolerance) -> Result<Option<Vec<F::Real>>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} against generators of length {}",
                x.len(),
                self.dim()
            )));
        }
        let p = self.len();
        let mut a: Vec<Vec<F::Real>> = Vec::new();
        let mut b: Vec<F::Real> = Vec::new();
        for (d, xd) in x.iter().enumerate() {
            let parts: Vec<Vec<F::Real>> = self.vectors.iter().map(|g| g[d].real_parts()).collect();
            for (r, rhs) in xd.real_parts().into_iter().enumerate() {
                a.push(parts.iter().map(|gp| gp[r].clone()).collect());
                b.push(rhs);
            }
        }
        if convex {
            a.push(vec![<F::Real as LpScalar>::one(); p]);
            b.push(<F::Real as LpScalar>::one());
        }
        Ok(find_nonneg_solution(&a, &b, p, tol.eps))
    }
}

/// Nonnegative weights `λ` with `Σ λ_i g_i = x`, if any.
pub fn coni_combination<F: Field>(
    g: &ConeGenerators<F>,
    x: &[F],
    tol: Tolerance,
) -> Result<Option<Vec<F::Real>>> {
    g.combination(x, false, tol)
}

/// Like [`coni_combination`] with the extra constraint `Σ λ_i = 1`.
pub fn conv_combination<F: Field>(
    g: &ConeGenerators<F>,
    x: &[F],
    tol: Tolerance,
) -> Result<Option<Vec<F::Real>>> {
    g.combination(x, true, tol)
}

pub fn coni_member<F: Field>(g: &ConeGenerators<F>, x: &[F], tol: Tolerance) -> Result<bool> {
    Ok(coni_combination(g, x, tol)?.is_some())
}

pub fn conv_member<F: Field>(g: &ConeGenerators<F>, x: &[F], tol: Tolerance) -> Result<bool> {
    Ok(conv_combination(g, x, tol)?.is_some())
}

/// `{u_i ⊗ v_j}` in lexicographic `(i, j)` order.
pub fn kron_generator_set<F: Field>(
    u: &ConeGenerators<F>,
    v: &ConeGenerators<F>,
) -> Result<ConeGenerators<F>> {
    if u.kind != v.kind {
        return Err(Error::InvalidArgument("cannot combine conical and convex generator sets".into()));
    }
    let vectors = u
        .vectors
        .iter()
        .flat_map(|a| v.vectors.iter().map(move |b| kron_vec(a, b)))
        .collect();
    Ok(ConeGenerators { vectors, kind: u.kind })
}

/// Whether every generator of `inner` satisfies `outer`; for a convex
/// `outer` set this is exactly containment of the generated hull.
pub fn containment_check<F: Field>(
    inner: &ConeGenerators<F>,
    mut outer: impl FnMut(&[F]) -> Result<bool>,
) -> Result<bool> {
    for v in &inner.vectors {
        if !outer(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}
