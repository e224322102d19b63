//! Zero-pattern digraphs, irreducibility and the index of imprimitivity.

use std::collections::VecDeque;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Tolerance};

/// Directed graph on vertices `0..n` with sorted out-neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) outside {n} vertices");
            out[u].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
            list.dedup();
        }
        Self { out }
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn successors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn reversed(&self) -> Self {
        Self::from_edges(self.order(), self.edges().map(|(u, v)| (v, u)))
    }

    fn reaches_all_from_first(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.out[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Every vertex reaches every other: vertex 0 reaches all vertices both
    /// in the graph and in its reverse.
    pub fn is_strongly_connected(&self) -> bool {
        self.reaches_all_from_first() && self.reversed().reaches_all_from_first()
    }

    /// BFS distances from vertex 0; `None` for unreachable vertices.
    pub fn bfs_distances(&self) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        if self.order() == 0 {
            return dist;
        }
        dist[0] = Some(0);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.out[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// gcd over edges `u -> v` of `|dist(u) + 1 - dist(v)|`, which is the gcd
    /// of closed-walk lengths for a strongly connected graph.
    pub fn period(&self) -> Result<usize> {
        if !self.is_strongly_connected() {
            return Err(Error::NotIrreducible);
        }
        let dist = self.bfs_distances();
        let g = self.edges().fold(0usize, |g, (u, v)| {
            let du = dist[u].unwrap() as i64;
            let dv = dist[v].unwrap() as i64;
            g.gcd(&((du + 1 - dv).unsigned_abs() as usize))
        });
        if g == 0 {
            return Err(Error::Degenerate("digraph has no closed walks".into()));
        }
        Ok(g)
    }
}

/// Edge `i -> j` iff entry `(i, j)` is nonzero (beyond `tol` for inexact fields).
pub fn digraph_of<F: Field>(a: &Matrix<F>, tol: Tolerance) -> Result<Digraph> {
    let n = a.ensure_square()?;
    let edges = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !a[(i, j)].is_zero_tol(tol));
    Ok(Digraph::from_edges(n, edges))
}

pub fn is_irreducible<F: Field>(a: &Matrix<F>, tol: Tolerance) -> Result<bool> {
    Ok(digraph_of(a, tol)?.is_strongly_connected())
}

pub fn imprimitivity_index<F: Field>(a: &Matrix<F>, tol: Tolerance) -> Result<usize> {
    digraph_of(a, tol)?.period()
}

/// For irreducible `A` and `B`: whether `gcd(index(A), index(B)) = 1`, which
/// decides irreducibility of `A ⊗ B`.
pub fn kron_irreducibility_predicate<F: Field>(
    a: &Matrix<F>,
    b: &Matrix<F>,
    tol: Tolerance,
) -> Result<bool> {
    let k = imprimitivity_index(a, tol)?;
    let l = imprimitivity_index(b, tol)?;
    Ok(k.gcd(&l) == 1)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::generators::cycle_companion;
    use crate::linalg::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const EXACT: Tolerance = Tolerance { eps: 0.0 };

    /// Gcd of lengths of all closed walks of length <= 2n, by boolean matrix powers.
    pub(crate) fn walk_gcd(g: &Digraph) -> usize {
        let n = g.order();
        let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        let mut power = adj.clone();
        let mut gcd = 0usize;
        for len in 1..=2 * n {
            if (0..n).any(|i| power[i][i]) {
                gcd = gcd.gcd(&len);
            }
            power = (0..n)
                .map(|i| (0..n).map(|j| (0..n).any(|k| power[i][k] && adj[k][j])).collect())
                .collect();
        }
        gcd
    }

    /// Strong connectivity by Floyd–Warshall transitive closure.
    pub(crate) fn closure_connected(g: &Digraph) -> bool {
        let n = g.order();
        let mut r: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| u == v || g.has_edge(u, v)).collect()).collect();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        r.iter().all(|row| row.iter().all(|&b| b))
    }

    fn cycle(n: usize) -> Matrix<Rational> {
        cycle_companion(n)
    }

    #[test]
    fn digraph_examples() {
        let g = digraph_of(&Matrix::<Rational>::identity(3), EXACT).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 0), (1, 1), (2, 2)]);
        let g = digraph_of(&cycle(3), EXACT).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
        let a = crate::perron::reproduce_counterexample().a;
        let g = digraph_of(&a, EXACT).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 0), (0, 2), (1, 1), (1, 3), (2, 0), (2, 2), (3, 1), (3, 3)]
        );
        assert!(digraph_of(&Matrix::<Rational>::zeros(2, 3), EXACT).is_err());
    }

    #[test]
    fn irreducibility_examples() {
        for n in 1..=10 {
            assert!(is_irreducible(&cycle(n), EXACT).unwrap());
        }
        assert!(!is_irreducible(&Matrix::<Rational>::identity(2), EXACT).unwrap());
        let a = crate::perron::reproduce_counterexample().a;
        assert!(!is_irreducible(&a, EXACT).unwrap());
        assert!(!closure_connected(&digraph_of(&a, EXACT).unwrap()));
        assert!(is_irreducible(&Matrix::<Rational>::zeros(3, 2), EXACT).is_err());
    }

    #[test]
    fn imprimitivity_examples() {
        for n in 2..=10 {
            assert_eq!(imprimitivity_index(&cycle(n), EXACT).unwrap(), n);
            assert_eq!(walk_gcd(&digraph_of(&cycle(n), EXACT).unwrap()), n);
        }
        let mut loopy = cycle(4);
        loopy = loopy.add(&Matrix::from_fn(4, 4, |i, j| Rational::from(i64::from(i == 2 && j == 2)))).unwrap();
        assert_eq!(imprimitivity_index(&loopy, EXACT).unwrap(), 1);
        let c6 = cycle(2).kron(&cycle(3));
        assert_eq!(imprimitivity_index(&c6, EXACT).unwrap(), 6);
        assert_eq!(walk_gcd(&digraph_of(&c6, EXACT).unwrap()), 6);
        assert_eq!(
            imprimitivity_index(&Matrix::<Rational>::identity(2), EXACT),
            Err(Error::NotIrreducible)
        );
        assert!(matches!(
            imprimitivity_index(&Matrix::<Rational>::zeros(1, 1), EXACT),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn kron_predicate_examples() {
        assert!(kron_irreducibility_predicate(&cycle(2), &cycle(3), EXACT).unwrap());
        assert!(is_irreducible(&cycle(2).kron(&cycle(3)), EXACT).unwrap());
        assert!(!kron_irreducibility_predicate(&cycle(2), &cycle(2), EXACT).unwrap());
        assert!(!closure_connected(&digraph_of(&cycle(2).kron(&cycle(2)), EXACT).unwrap()));
        for n in 1..=6 {
            assert!(kron_irreducibility_predicate(&cycle(1), &cycle(n), EXACT).unwrap());
        }
        assert_eq!(
            kron_irreducibility_predicate(&Matrix::<Rational>::identity(2), &cycle(2), EXACT),
            Err(Error::NotIrreducible)
        );
    }

    #[test]
    fn cycle_grid_matches_direct_connectivity() {
        for m in 1..=8 {
            for n in 1..=8 {
                let predicted = kron_irreducibility_predicate(&cycle(m), &cycle(n), EXACT).unwrap();
                let direct = closure_connected(&digraph_of(&cycle(m).kron(&cycle(n)), EXACT).unwrap());
                assert_eq!(predicted, direct, "C_{m} ⊗ C_{n}");
            }
        }
    }

    pub(crate) fn random_irreducible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut a = Matrix::<Rational>::zeros(n, n);
        let mut entries = a.clone().into_data();
        for i in 0..n {
            entries[perm[i] * n + perm[(i + 1) % n]] = Rational::one();
        }
        for _ in 0..rng.gen_range(0..=n) {
            entries[rng.gen_range(0..n) * n + rng.gen_range(0..n)] = Rational::one();
        }
        a = Matrix::new(n, n, entries).unwrap();
        a
    }

    #[test]
    fn random_irreducible_agreement() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let (m, n) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let a = random_irreducible(&mut rng, m);
            let b = random_irreducible(&mut rng, n);
            let ga = digraph_of(&a, EXACT).unwrap();
            assert!(closure_connected(&ga));
            assert_eq!(ga.period().unwrap(), walk_gcd(&ga));
            let predicted = kron_irreducibility_predicate(&a, &b, EXACT).unwrap();
            assert_eq!(predicted, closure_connected(&digraph_of(&a.kron(&b), EXACT).unwrap()));
        }
    }

    #[test]
    fn irreducibility_is_permutation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let n = rng.gen_range(2..=6);
            let a = Matrix::<Rational>::from_fn(n, n, |_, _| Rational::from(i64::from(rng.gen_bool(0.3))));
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let pa = Matrix::from_fn(n, n, |i, j| a[(perm[i], perm[j])].clone());
            assert_eq!(is_irreducible(&a, EXACT).unwrap(), is_irreducible(&pa, EXACT).unwrap());
        }
    }
}
