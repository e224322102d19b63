//! One-based index arithmetic behind the Kronecker-product identities.
//!
//! For `x ∈ F^m`, `y ∈ F^n` the entry `(x ⊗ y)_i` equals `x_{⌈i/n⌉} y_{(i-1)%n+1}`,
//! so every Kronecker identity reduces to moving between a flat index in
//! `1..=m*n` and an (outer, inner) pair. All indices in this module are
//! one-based and `%` is the nonnegative remainder.

use crate::error::{Error, Result};

/// An (outer, inner) index pair, both one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    pub outer: usize,
    pub inner: usize,
}

impl IndexPair {
    pub fn new(outer: usize, inner: usize) -> Result<Self> {
        if outer == 0 || inner == 0 {
            return Err(Error::InvalidIndex(format!(
                "indices are one-based, got ({outer}, {inner})"
            )));
        }
        Ok(Self { outer, inner })
    }
}

/// `(outer - 1) * n + inner`, the position of the single one in `e_outer ⊗ e_inner`.
pub fn fold_index(pair: IndexPair, n: usize) -> Result<usize> {
    if pair.outer == 0 || pair.inner == 0 || n == 0 {
        return Err(Error::InvalidIndex(format!(
            "non-positive input: pair ({}, {}), n = {n}",
            pair.outer, pair.inner
        )));
    }
    if pair.inner > n {
        return Err(Error::InvalidIndex(format!(
            "inner index {} exceeds block size {n}",
            pair.inner
        )));
    }
    Ok((pair.outer - 1) * n + pair.inner)
}

/// `(⌈i/n⌉, (i-1)%n + 1)`: the inverse of [`fold_index`].
pub fn unfold_index(i: usize, n: usize) -> Result<IndexPair> {
    if i == 0 || n == 0 {
        return Err(Error::InvalidIndex(format!(
            "non-positive input: i = {i}, n = {n}"
        )));
    }
    Ok(IndexPair {
        outer: i.div_ceil(n),
        inner: (i - 1) % n + 1,
    })
}

/// `⌈i/n⌉` for any integer `i` and positive `n`.
pub fn ceil_div(i: i64, n: i64) -> i64 {
    -(-i).div_euclid(n)
}

/// Checks `i = (⌈i/n⌉ - 1) n + (i - 1) % n + 1` with the floor remainder.
///
/// Always true for `n >= 1`; kept callable so the identity can be exercised
/// over ranges. Returns `false` for `n < 1`, where the identity is undefined.
pub fn division_identity_holds(i: i64, n: i64) -> bool {
    if n < 1 {
        return false;
    }
    i == (ceil_div(i, n) - 1) * n + (i - 1).rem_euclid(n) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Position of the nonzero entry of `e_k ⊗ e_l`, by expanding the
    /// Kronecker product blockwise.
    fn basis_kron_position(k: usize, l: usize, m: usize, n: usize) -> usize {
        let mut flat = Vec::with_capacity(m * n);
        for a in 1..=m {
            for b in 1..=n {
                flat.push(u8::from(a == k) * u8::from(b == l));
            }
        }
        flat.iter().position(|&v| v == 1).unwrap() + 1
    }

    #[test]
    fn fold_examples() {
        assert_eq!(fold_index(IndexPair::new(1, 1).unwrap(), 5).unwrap(), 1);
        assert_eq!(
            fold_index(IndexPair::new(2, 3).unwrap(), 4).unwrap(),
            basis_kron_position(2, 3, 3, 4)
        );
        assert_eq!(fold_index(IndexPair::new(2, 3).unwrap(), 4).unwrap(), 7);
        assert_eq!(fold_index(IndexPair::new(6, 9).unwrap(), 9).unwrap(), 54);
    }

    #[test]
    fn fold_rejects_bad_input() {
        assert!(fold_index(IndexPair { outer: 1, inner: 5 }, 4).is_err());
        assert!(fold_index(IndexPair { outer: 0, inner: 1 }, 4).is_err());
        assert!(fold_index(IndexPair { outer: 1, inner: 1 }, 0).is_err());
        assert!(IndexPair::new(0, 3).is_err());
    }

    #[test]
    fn unfold_examples() {
        assert_eq!(unfold_index(7, 4).unwrap(), IndexPair { outer: 2, inner: 3 });
        assert_eq!(unfold_index(1, 9).unwrap(), IndexPair { outer: 1, inner: 1 });
        assert_eq!(unfold_index(6, 6).unwrap(), IndexPair { outer: 1, inner: 6 });
        assert!(unfold_index(0, 3).is_err());
        assert!(unfold_index(3, 0).is_err());
        // brute force inverse
        let found: Vec<_> = (1..=3)
            .flat_map(|k| (1..=4).map(move |l| (k, l)))
            .filter(|&(k, l)| basis_kron_position(k, l, 3, 4) == 7)
            .collect();
        assert_eq!(found, vec![(2, 3)]);
    }

    #[test]
    fn division_identity_examples() {
        assert!(division_identity_holds(7, 4));
        assert!(division_identity_holds(1, 1));
        assert!(division_identity_holds(-3, 5));
        // floor-remainder oracle for -3 / 5: ceil = 0, rem(-4, 5) = 1
        assert_eq!(ceil_div(-3, 5), 0);
        assert_eq!((-4i64).rem_euclid(5), 1);
        assert!(!division_identity_holds(3, 0));
    }

    #[test]
    fn division_identity_range() {
        for n in 1..=64 {
            for i in -1000..=1000 {
                assert!(division_identity_holds(i, n), "i={i} n={n}");
            }
        }
    }

    #[test]
    fn ceil_div_matches_float() {
        for n in 1..=20i64 {
            for i in -100..=100i64 {
                assert_eq!(ceil_div(i, n), (i as f64 / n as f64).ceil() as i64);
            }
        }
    }

    #[test]
    fn fold_unfold_roundtrip() {
        for m in 1..=32 {
            for n in 1..=32 {
                for i in 1..=m * n {
                    let p = unfold_index(i, n).unwrap();
                    assert!(p.outer <= m);
                    assert_eq!(fold_index(p, n).unwrap(), i);
                }
                for k in 1..=m {
                    for l in 1..=n {
                        let p = IndexPair::new(k, l).unwrap();
                        assert_eq!(unfold_index(fold_index(p, n).unwrap(), n).unwrap(), p);
                    }
                }
            }
        }
    }
}
