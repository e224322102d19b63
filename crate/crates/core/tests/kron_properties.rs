use num_complex::Complex64;
use perronkron::kron_index::{fold_index, unfold_index};
use perronkron::linalg::{kron_factor, kron_vec, p_norm, reshape, PNorm};
use perronkron::{Field, IndexPair, Matrix, Rational, Tolerance};
use proptest::prelude::*;

const EXACT: Tolerance = Tolerance { eps: 0.0 };

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(rational(), rows * cols).prop_map(move |d| Matrix::new(rows, cols, d).unwrap())
}

fn square_pair() -> impl Strategy<Value = (Matrix<Rational>, Matrix<Rational>)> {
    (1usize..=4).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))
}

fn complex_vec() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im)), 1..=8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mixed_product((s, u) in square_pair(), (t, v) in square_pair()) {
        let lhs = s.kron(&t).matmul(&u.kron(&v)).unwrap();
        let rhs = s.matmul(&u).unwrap().kron(&t.matmul(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_of_kron((s, _) in square_pair(), (t, _) in square_pair()) {
        let (Ok(si), Ok(ti)) = (s.inverse(), t.inverse()) else {
            // a singular factor makes the product singular too
            prop_assert!(s.kron(&t).inverse().is_err());
            return Ok(());
        };
        prop_assert_eq!(s.kron(&t).inverse().unwrap(), si.kron(&ti));
    }

    #[test]
    fn row_extraction(
        s in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c)),
        t in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c)),
    ) {
        let st = s.kron(&t);
        let p = t.rows();
        for i in 1..=st.rows() {
            let outer = i.div_ceil(p);
            let inner = (i - 1) % p + 1;
            prop_assert_eq!(st.row(i - 1), &kron_vec(s.row(outer - 1), t.row(inner - 1))[..]);
        }
    }

    #[test]
    fn kron_factor_iff_rank_at_most_one(m in 1usize..=4, n in 1usize..=4, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |k: usize| -> Vec<Rational> {
            (0..k).map(|_| Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=3)).unwrap()).collect()
        };
        // half the time a genuine product, otherwise arbitrary
        let z = if seed % 2 == 0 { kron_vec(&draw(m), &draw(n)) } else { draw(m * n) };
        let rank = reshape(&z, m, n).unwrap().rank(EXACT);
        match kron_factor(&z, m, n, EXACT).unwrap() {
            Some((x, y)) => {
                prop_assert!(rank <= 1);
                prop_assert_eq!(kron_vec(&x, &y), z);
            }
            None => prop_assert!(rank > 1),
        }
    }

    #[test]
    fn norms_are_multiplicative(x in complex_vec(), y in complex_vec()) {
        let xy = kron_vec(&x, &y);
        for p in [PNorm::P(1.0), PNorm::P(2.0), PNorm::Infinity] {
            let lhs = p_norm(&xy, p).unwrap();
            let rhs = p_norm(&x, p).unwrap() * p_norm(&y, p).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-9, "p = {p:?}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn kron_is_associative(a in matrix(2, 1), b in matrix(1, 3), c in matrix(2, 2)) {
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }
}

#[test]
fn fold_and_unfold_are_inverse() {
    for m in 1..=32 {
        for n in 1..=32 {
            for i in 1..=m * n {
                let p = unfold_index(i, n).unwrap();
                assert!(p.outer <= m && p.inner <= n);
                assert_eq!(fold_index(p, n).unwrap(), i);
            }
            for k in 1..=m {
                for l in 1..=n {
                    let pair = IndexPair::new(k, l).unwrap();
                    assert_eq!(unfold_index(fold_index(pair, n).unwrap(), n).unwrap(), pair);
                }
            }
        }
    }
}

#[test]
fn complex_kron_matches_entry_formula() {
    let a = perronkron::generators::dft(3);
    let b = perronkron::generators::dft(2);
    let ab = a.kron(&b);
    for i in 0..6 {
        for j in 0..6 {
            let expected = a[(i / 2, j / 2)] * b[(i % 2, j % 2)];
            assert!(ab[(i, j)].approx_eq(&expected, Tolerance::default()));
        }
    }
}
