//! The end-to-end reproduction suite behind `verify-paper`, plus the report
//! types the CLI emits.
//!
//! Each check group returns named [`Finding`]s; the suite concatenates them
//! in a fixed order. All sampling is seeded, so a seed fixes the report.

use std::fmt::Write as _;

use num_complex::Complex64;
use num_integer::Integer;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cone::{
    coni_combination, conv_combination, kron_generator_set, rays, spectratope_strictness_certificate,
    ConeGenerators, HullKind, StrongIdeal,
};
use crate::digraph::{imprimitivity_index, is_irreducible, kron_irreducibility_predicate};
use crate::generators::{cycle_companion, dft, extremal_row_image, hadamard_like};
use crate::kron_index::{division_identity_holds, fold_index, unfold_index, IndexPair};
use crate::linalg::{
    basis, diag_kron_identity, is_totally_nonzero, kron_vec, p_norm, reshape, Field, Matrix,
    PNorm, Rational, Tolerance,
};
use crate::perron::{
    kron_witness_index, reproduce_counterexample, strict_cone_containment_certificate, Similarity,
};
use crate::sample;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One named result. `value` is what was observed; `pass` whether it holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub name: String,
    pub value: Value,
    pub pass: bool,
}

impl Finding {
    pub fn flag(name: impl Into<String>, holds: bool) -> Self {
        Self {
            name: name.into(),
            value: Value::Bool(holds),
            pass: holds,
        }
    }

    pub fn measure(name: impl Into<String>, value: Value, pass: bool) -> Self {
        Self {
            name: name.into(),
            value,
            pass,
        }
    }
}

/// Machine-readable outcome of one command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub status: Status,
    pub verb: String,
    pub inputs: Value,
    pub findings: Vec<Finding>,
    pub certificates: Value,
}

impl Report {
    pub fn new(verb: impl Into<String>, inputs: Value) -> Self {
        Self {
            status: Status::Pass,
            verb: verb.into(),
            inputs,
            findings: Vec::new(),
            certificates: json!({}),
        }
    }

    pub fn error(verb: impl Into<String>, inputs: Value, message: impl Into<String>) -> Self {
        let mut r = Self::new(verb, inputs);
        r.status = Status::Error;
        r.certificates = json!({ "error": message.into() });
        r
    }

    pub fn push(&mut self, finding: Finding) {
        self.findings.push(finding);
        self.refresh_status();
    }

    pub fn extend(&mut self, findings: impl IntoIterator<Item = Finding>) {
        self.findings.extend(findings);
        self.refresh_status();
    }

    pub fn certificate(&mut self, name: &str, value: Value) {
        if let Value::Object(map) = &mut self.certificates {
            map.insert(name.to_string(), value);
        }
    }

    fn refresh_status(&mut self) {
        if self.status != Status::Error {
            self.status = if self.findings.iter().all(|f| f.pass) {
                Status::Pass
            } else {
                Status::Fail
            };
        }
    }

    pub fn finding(&self, name: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are serializable")
    }

    /// Aligned plain-text table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let _ = writeln!(out, "{} {}", self.verb, status);
        let width = self.findings.iter().map(|f| f.name.len()).max().unwrap_or(0);
        for f in &self.findings {
            let mark = if f.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  {mark} {:<width$}  {}", f.name, f.value);
        }
        if let Value::Object(map) = &self.certificates {
            for (k, v) in map {
                let _ = writeln!(out, "  {k}: {v}");
            }
        }
        out
    }
}

fn vec_json<F: Field>(v: &[F]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Similarity matrices used by the closure checks: `H_2..H_4` and `F_2..F_6`.
#[derive(Debug, Clone)]
pub enum CatalogEntry {
    Rational(String, Matrix<Rational>),
    Complex(String, Matrix<Complex64>),
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        match self {
            CatalogEntry::Rational(n, _) | CatalogEntry::Complex(n, _) => n,
        }
    }

    pub fn to_complex(&self) -> Matrix<Complex64> {
        match self {
            CatalogEntry::Rational(_, m) => m.to_complex(),
            CatalogEntry::Complex(_, m) => m.clone(),
        }
    }
}

pub fn perron_catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (2..=4)
        .map(|n| CatalogEntry::Rational(format!("H_{n}"), hadamard_like(n).expect("n >= 2")))
        .collect();
    out.extend((2..=6).map(|n| CatalogEntry::Complex(format!("F_{n}"), dft(n))));
    out
}

fn rational_catalog() -> Vec<(String, Similarity<Rational>)> {
    perron_catalog()
        .into_iter()
        .filter_map(|e| match e {
            CatalogEntry::Rational(name, m) => {
                Some((name, Similarity::new(m, Tolerance::exact()).expect("invertible")))
            }
            CatalogEntry::Complex(..) => None,
        })
        .collect()
}

/// Runs `check` on every ordered catalog pair, in exact arithmetic when both
/// factors are rational and in complex arithmetic (explicit promotion) otherwise.
fn for_catalog_pairs(
    tol: Tolerance,
    mut exact: impl FnMut(&Similarity<Rational>, &Similarity<Rational>) -> bool,
    mut inexact: impl FnMut(&Similarity<Complex64>, &Similarity<Complex64>) -> bool,
) -> (usize, Vec<String>) {
    let catalog = perron_catalog();
    let mut count = 0;
    let mut failures = Vec::new();
    for a in &catalog {
        for b in &catalog {
            count += 1;
            let ok = match (a, b) {
                (CatalogEntry::Rational(_, s), CatalogEntry::Rational(_, t)) => {
                    let s = Similarity::new(s.clone(), Tolerance::exact()).expect("invertible");
                    let t = Similarity::new(t.clone(), Tolerance::exact()).expect("invertible");
                    exact(&s, &t)
                }
                _ => {
                    let s = Similarity::new(a.to_complex(), tol).expect("invertible");
                    let t = Similarity::new(b.to_complex(), tol).expect("invertible");
                    inexact(&s, &t)
                }
            };
            if !ok {
                failures.push(format!("{} ⊗ {}", a.name(), b.name()));
            }
        }
    }
    (count, failures)
}

/// A boolean finding, followed by the failing cases when there are any.
fn flag_with_failures<T: Serialize>(out: &mut Vec<Finding>, name: &str, failures: Vec<T>) {
    out.push(Finding::flag(name, failures.is_empty()));
    if !failures.is_empty() {
        out.push(Finding::measure(
            format!("{name}_failures"),
            serde_json::to_value(failures).expect("serializable"),
            false,
        ));
    }
}

fn pair_summary(name: &str, count: usize, failures: Vec<String>) -> Finding {
    let pass = failures.is_empty();
    Finding::measure(name, json!({ "pairs": count, "failures": failures }), pass)
}

/// The Kronecker counterexample, compared entry by entry with the published matrices.
pub fn counterexample_checks() -> Vec<Finding> {
    let r = reproduce_counterexample();
    let x: Vec<Rational> = [2, 2, -1, -1].map(Rational::from).to_vec();
    let sim = Similarity::new(r.s.clone(), Tolerance::exact()).expect("invertible");
    let beyond_e = sim.in_cone(&x, Tolerance::exact()).unwrap_or(false)
        && x.iter().any(|v| *v != x[0]);
    vec![
        Finding::flag("example_4_7_S_matches", r.s_matches),
        Finding::flag("example_4_7_inverse_matches", r.s_inv_matches),
        Finding::flag("example_4_7_A_matches", r.a_matches),
        Finding::flag("example_4_7_A_nonnegative", r.a_nonneg),
        Finding::flag("example_4_7_A_nonscalar", r.nonscalar),
        Finding::measure(
            "example_4_7_no_perron_witness",
            serde_json::to_value(r.witness_search).expect("serializable"),
            r.witness_search.is_none(),
        ),
        Finding::flag("example_4_7_cone_exceeds_ray_of_e", beyond_e),
    ]
}

/// Index identities and the Kronecker lemmas on bounded or sampled inputs.
pub fn kronecker_lemma_checks(seed: u64) -> Vec<Finding> {
    let mut rng = sample::rng(seed);
    let exact = Tolerance::exact();
    let mut out = Vec::new();

    let division = (1..=64).all(|n| (-1000..=1000).all(|i| division_identity_holds(i, n)));
    out.push(Finding::flag("lemma_3_1_division_identity", division));

    let basis_ok = (1..=16).all(|k| {
        (1..=16).all(|l| {
            let folded = fold_index(IndexPair { outer: k, inner: l }, 16).expect("in range");
            kron_vec(&basis::<Rational>(k, 16).unwrap(), &basis(l, 16).unwrap())
                == basis::<Rational>(folded, 256).unwrap()
        })
    });
    out.push(Finding::flag("lemma_3_2_basis_kron", basis_ok));

    let decomposition = (1..=12).all(|m| {
        (1..=12).all(|n| {
            (1..=m * n).all(|i| {
                let p = unfold_index(i, n).expect("positive");
                kron_vec(&basis::<Rational>(p.outer, m).unwrap(), &basis(p.inner, n).unwrap())
                    == basis::<Rational>(i, m * n).unwrap()
            })
        })
    });
    out.push(Finding::flag("lemma_3_3_basis_decomposition", decomposition));

    let mut rows_ok = true;
    for _ in 0..30 {
        let dims: [usize; 4] = std::array::from_fn(|_| rng.gen_range(1..=4));
        let s = sample::rational_matrix(&mut rng, dims[0], dims[1]);
        let t = sample::rational_matrix(&mut rng, dims[2], dims[3]);
        let st = s.kron(&t);
        for i in 1..=st.rows() {
            let p = unfold_index(i, t.rows()).expect("positive");
            rows_ok &= st.row(i - 1) == &kron_vec(s.row(p.outer - 1), t.row(p.inner - 1))[..];
        }
    }
    out.push(Finding::flag("lemma_3_4_row_extraction", rows_ok));

    let diag_ok = (0..100).all(|_| {
        let (m, n) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let x = sample::rational_vec(&mut rng, m);
        let y = sample::rational_vec(&mut rng, n);
        diag_kron_identity(&x, &y, exact)
    });
    out.push(Finding::flag("lemma_3_5_diag_kron", diag_ok));

    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let x = sample::complex_vec(&mut rng, m);
        let y = sample::complex_vec(&mut rng, n);
        let xy = kron_vec(&x, &y);
        for p in [PNorm::P(1.0), PNorm::P(2.0), PNorm::Infinity] {
            let lhs = p_norm(&xy, p).expect("valid order");
            let rhs = p_norm(&x, p).expect("valid order") * p_norm(&y, p).expect("valid order");
            worst = worst.max((lhs - rhs).abs());
        }
    }
    out.push(Finding::measure(
        "lemma_3_6_norm_multiplicativity",
        json!({ "max_abs_error": worst, "tolerance": 1e-9 }),
        worst <= 1e-9,
    ));

    let mut mixed_ok = true;
    let mut inverse_ok = true;
    for _ in 0..20 {
        let (a, b) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let s = sample::invertible_rational(&mut rng, a);
        let u = sample::rational_matrix(&mut rng, a, a);
        let t = sample::invertible_rational(&mut rng, b);
        let v = sample::rational_matrix(&mut rng, b, b);
        let lhs = s.kron(&t).matmul(&u.kron(&v)).expect("square");
        let rhs = s.matmul(&u).expect("square").kron(&t.matmul(&v).expect("square"));
        mixed_ok &= lhs == rhs;
        inverse_ok &= s.kron(&t).inverse().ok()
            == Some(s.inverse().expect("invertible").kron(&t.inverse().expect("invertible")));
    }
    out.push(Finding::flag("kron_mixed_product", mixed_ok));
    out.push(Finding::flag("kron_inverse_factorizes", inverse_ok));
    out
}

/// Witness closure, witness membership and totally nonzero members over the catalog.
pub fn witness_closure_checks(tol: Tolerance) -> Vec<Finding> {
    fn closure<F: Field>(s: &Similarity<F>, t: &Similarity<F>, tol: Tolerance) -> bool {
        let (Some(ws), Some(wt)) = (s.find_witness(tol), t.find_witness(tol)) else {
            return false;
        };
        let Ok(w) = kron_witness_index(ws, wt, t.order()) else {
            return false;
        };
        s.kron(t).witness_holds(w, tol)
    }
    let (count, failures) = for_catalog_pairs(
        tol,
        |s, t| closure(s, t, Tolerance::exact()),
        |s, t| closure(s, t, tol),
    );
    let mut out = vec![pair_summary("theorem_4_2_kron_witness", count, failures)];

    fn member_checks<F: Field>(s: &Similarity<F>, tol: Tolerance) -> (bool, bool) {
        let Some(w) = s.find_witness(tol) else {
            return (false, false);
        };
        let n = s.order();
        let ek = basis::<F>(w.index, n).expect("valid index");
        let witness_member = s.in_cone(&ek, tol).unwrap_or(false);
        let nz = match s.totally_nonzero_member(w, tol) {
            Ok(x) => {
                s.in_cone(&x, tol).unwrap_or(false)
                    && is_totally_nonzero(&x, tol)
                    && x.iter().any(|v| !v.approx_eq(&x[0], tol))
            }
            Err(_) => false,
        };
        (witness_member, nz)
    }
    let mut witness_fail = Vec::new();
    let mut nz_fail = Vec::new();
    for entry in perron_catalog() {
        let (a, b) = match &entry {
            CatalogEntry::Rational(_, m) => {
                let exact = Tolerance::exact();
                member_checks(&Similarity::new(m.clone(), exact).expect("invertible"), exact)
            }
            CatalogEntry::Complex(_, m) => {
                member_checks(&Similarity::new(m.clone(), tol).expect("invertible"), tol)
            }
        };
        if !a {
            witness_fail.push(entry.name().to_string());
        }
        if !b {
            nz_fail.push(entry.name().to_string());
        }
    }
    let total = perron_catalog().len();
    out.push(Finding::measure(
        "remark_4_4_witness_in_cone",
        json!({ "matrices": total, "failures": witness_fail }),
        witness_fail.is_empty(),
    ));
    out.push(Finding::measure(
        "lemma_4_5_totally_nonzero_member",
        json!({ "matrices": total, "failures": nz_fail }),
        nz_fail.is_empty(),
    ));
    out
}

pub const CONE_SAMPLES_PER_PAIR: usize = 200;

/// Sampled cone and tope products over the rational catalog, plus convexity.
pub fn cone_sampling_checks(seed: u64) -> Vec<Finding> {
    let exact = Tolerance::exact();
    let mut rng = sample::rng(seed.wrapping_add(1));
    let catalog = rational_catalog();
    let mut cone_fail = 0usize;
    let mut tope_fail = 0usize;
    let mut samples = 0usize;
    for (_, s) in &catalog {
        for (_, t) in &catalog {
            let st = s.kron(t);
            for _ in 0..CONE_SAMPLES_PER_PAIR {
                let x = sample::row_cone_point(&mut rng, s.matrix());
                let y = sample::row_cone_point(&mut rng, t.matrix());
                samples += 1;
                // the samples must be cone members before the product is tested
                let inputs_ok = s.in_cone(&x, exact).unwrap_or(false) && t.in_cone(&y, exact).unwrap_or(false);
                if !inputs_ok || !st.in_cone(&kron_vec(&x, &y), exact).unwrap_or(false) {
                    cone_fail += 1;
                }
                let (xn, yn) = (sample::normalize_inf(&x), sample::normalize_inf(&y));
                let inputs_ok = s.in_tope(&xn, exact).unwrap_or(false) && t.in_tope(&yn, exact).unwrap_or(false);
                if !inputs_ok || !st.in_tope(&kron_vec(&xn, &yn), exact).unwrap_or(false) {
                    tope_fail += 1;
                }
            }
        }
    }

    let h3 = &catalog[1].1;
    let mut convex_fail = 0usize;
    for _ in 0..100 {
        let x = sample::row_cone_point(&mut rng, h3.matrix());
        let y = sample::row_cone_point(&mut rng, h3.matrix());
        let w = sample::nonneg_weights(&mut rng, 2);
        let z = sample::combine(&w, &[x, y]);
        if !h3.in_cone(&z, exact).unwrap_or(false) {
            convex_fail += 1;
        }
    }
    vec![
        Finding::measure(
            "theorem_4_1_cone_product",
            json!({ "samples": samples, "failures": cone_fail }),
            cone_fail == 0,
        ),
        Finding::measure(
            "theorem_4_1_tope_product",
            json!({ "samples": samples, "failures": tope_fail }),
            tope_fail == 0,
        ),
        Finding::measure(
            "remark_4_3_cone_convex",
            json!({ "samples": 100, "failures": convex_fail }),
            convex_fail == 0,
        ),
    ]
}

/// Strict cone containment certificates for all rational catalog pairs.
pub fn strict_cone_checks() -> Vec<Finding> {
    let exact = Tolerance::exact();
    let catalog = rational_catalog();
    let mut failures = Vec::new();
    let mut count = 0;
    for (a, s) in &catalog {
        for (b, t) in &catalog {
            count += 1;
            let ok = strict_cone_containment_certificate(s.matrix(), t.matrix(), exact)
                .map(|c| c.holds())
                .unwrap_or(false);
            if !ok {
                failures.push(format!("{a} ⊗ {b}"));
            }
        }
    }
    let h2 = hadamard_like(2).expect("n >= 2");
    let (det, cert) = match strict_cone_containment_certificate(&h2, &h2, exact) {
        Ok(c) => {
            let r = reshape(&c.z_prime, 2, 2).expect("length 4");
            let det = r[(0, 0)].clone() * r[(1, 1)].clone() - r[(0, 1)].clone() * r[(1, 0)].clone();
            (Some(det), Some(c))
        }
        Err(_) => (None, None),
    };
    let mut out = vec![pair_summary("theorem_4_6_strict_cone_containment", count, failures)];
    out.push(Finding::measure(
        "theorem_4_6_h2_reshape_determinant",
        det.as_ref().map_or(Value::Null, |d| Value::String(d.to_string())),
        det.as_ref().is_some_and(|d| !d.is_zero()) && cert.as_ref().is_some_and(|c| c.holds()),
    ));
    if let Some(c) = cert {
        out.push(Finding::measure(
            "theorem_4_6_h2_certificate_vector",
            vec_json(&c.z_prime),
            c.z_prime == [10, 7, 7, 5].map(Rational::from),
        ));
    }
    out
}

/// Ideal, strong and irreducibility checks for the DFT and Sylvester families.
pub fn ideal_strong_checks(tol: Tolerance, seed: u64) -> Vec<Finding> {
    let exact = Tolerance::exact();
    let mut out = Vec::new();

    let h_fail: Vec<usize> = (2..=5)
        .filter(|&n| !crate::perron::is_ideal(&hadamard_like(n).expect("n >= 2"), exact).unwrap_or(false))
        .collect();
    flag_with_failures(&mut out, "h_n_ideal", h_fail);

    let f_fail: Vec<usize> = (2..=8)
        .filter(|&n| !crate::perron::is_ideal(&dft(n), tol).unwrap_or(false))
        .collect();
    out.push(Finding::measure("f_n_ideal", json!({ "n": [2, 8], "failures": f_fail }), f_fail.is_empty()));

    let strong_fail: Vec<usize> = (2..=8)
        .filter(|&n| {
            let f = dft(n);
            !crate::perron::verify_strong_certificate(&f, f.row(1), tol).unwrap_or(false)
        })
        .collect();
    out.push(Finding::measure(
        "f_n_strong",
        json!({ "n": [2, 8], "failures": strong_fail }),
        strong_fail.is_empty(),
    ));

    let (count, failures) = for_catalog_pairs(
        tol,
        |s, t| s.kron(t).is_ideal(exact).unwrap_or(false),
        |s, t| s.kron(t).is_ideal(tol).unwrap_or(false),
    );
    out.push(pair_summary("theorem_5_1_ideal_closure", count, failures));

    // coni/conv of generator products, with the LP weights checked by substitution
    let mut rng = sample::rng(seed.wrapping_add(2));
    let mut coni_fail = 0usize;
    let mut conv_fail = 0usize;
    for _ in 0..50 {
        let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (p, q) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let uv: Vec<Vec<Rational>> = (0..p).map(|_| sample::rational_vec(&mut rng, m)).collect();
        let vv: Vec<Vec<Rational>> = (0..q).map(|_| sample::rational_vec(&mut rng, n)).collect();
        for kind in [HullKind::Conical, HullKind::Convex] {
            let u = ConeGenerators::new(uv.clone(), kind).expect("well-formed");
            let v = ConeGenerators::new(vv.clone(), kind).expect("well-formed");
            let (lam, mu) = match kind {
                HullKind::Conical => (sample::nonneg_weights(&mut rng, p), sample::nonneg_weights(&mut rng, q)),
                HullKind::Convex => (sample::convex_weights(&mut rng, p), sample::convex_weights(&mut rng, q)),
            };
            let z = kron_vec(&sample::combine(&lam, &uv), &sample::combine(&mu, &vv));
            let uvk = kron_generator_set(&u, &v).expect("same kind");
            let weights = match kind {
                HullKind::Conical => coni_combination(&uvk, &z, exact),
                HullKind::Convex => conv_combination(&uvk, &z, exact),
            };
            let sound = match weights {
                Ok(Some(w)) => {
                    sample::combine(&w, uvk.vectors()) == z
                        && w.iter().all(|v| !v.is_negative())
                        && (kind == HullKind::Conical || w.iter().cloned().sum::<Rational>() == Rational::one())
                }
                _ => false,
            };
            if !sound {
                match kind {
                    HullKind::Conical => coni_fail += 1,
                    HullKind::Convex => conv_fail += 1,
                }
            }
        }
    }
    out.push(Finding::measure(
        "theorem_5_2_coni_containment",
        json!({ "samples": 50, "failures": coni_fail }),
        coni_fail == 0,
    ));
    out.push(Finding::measure(
        "theorem_5_2_conv_containment",
        json!({ "samples": 50, "failures": conv_fail }),
        conv_fail == 0,
    ));

    let index_fail: Vec<usize> = (2..=10)
        .filter(|&n| imprimitivity_index(&cycle_companion::<Rational>(n), exact).ok() != Some(n))
        .collect();
    out.push(Finding::measure(
        "cycle_imprimitivity_index",
        json!({ "n": [2, 10], "failures": index_fail }),
        index_fail.is_empty(),
    ));

    let mut disagreements = Vec::new();
    for m in 1..=8 {
        for n in 1..=8 {
            let (a, b) = (cycle_companion::<Rational>(m), cycle_companion::<Rational>(n));
            let predicted = kron_irreducibility_predicate(&a, &b, exact).ok();
            let direct = is_irreducible(&a.kron(&b), exact).ok();
            if predicted.is_none() || predicted != direct || direct != Some(m.gcd(&n) == 1) {
                disagreements.push(format!("C_{m} ⊗ C_{n}"));
            }
        }
    }
    flag_with_failures(&mut out, "theorem_5_3_grid_agreement", disagreements);

    let mut row_fail = Vec::new();
    for n in 1..=8 {
        for k in 1..=n {
            if extremal_row_image(n, k, tol).is_err() {
                row_fail.push(format!("F_{n} row {k}"));
            }
        }
    }
    out.push(Finding::measure(
        "dft_row_images_are_cycle_powers",
        json!({ "n": [1, 8], "failures": row_fail }),
        row_fail.is_empty(),
    ));

    let rows_normalized = (1..=8).all(|n| {
        let f = dft(n);
        let ok = f
            .row_iter()
            .all(|r| Complex64::inf_norm(r).approx_eq(&Complex64::new(1.0, 0.0), tol));
        ok
    });
    out.push(Finding::flag("dft_rows_normalized", rows_normalized));
    out
}

/// Strict spectratope containment for `H_2` and `F_3`.
pub fn tope_strictness_checks(tol: Tolerance) -> Vec<Finding> {
    let h2 = hadamard_like(2).expect("n >= 2").to_complex();
    let s = StrongIdeal {
        matrix: h2,
        strong_spectrum: vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
    };
    let f3 = dft(3);
    let t = StrongIdeal {
        strong_spectrum: f3.row(1).to_vec(),
        matrix: f3,
    };
    let half = Rational::new(1, 2).expect("nonzero denominator");
    match spectratope_strictness_certificate(&s, &t, half, tol) {
        Ok(c) => vec![
            Finding::measure(
                "corollary_5_4_imprimitivity_indices",
                json!([c.index_s, c.index_t]),
                c.indices_coprime,
            ),
            Finding::flag("corollary_5_4_kron_ideal", c.kron_ideal),
            Finding::flag("corollary_5_4_kron_strong", c.kron_strong),
            Finding::measure(
                "corollary_5_4_certificate",
                json!({
                    "phi": c.phi.to_string(),
                    "z_prime": vec_json(&c.z_prime),
                    "in_cone": c.in_kron_cone,
                    "in_tope": c.in_kron_tope,
                    "factorization_absent": c.factorization_absent,
                }),
                c.holds(),
            ),
        ],
        Err(e) => vec![Finding::measure("corollary_5_4_certificate", Value::String(e.to_string()), false)],
    }
}

/// Brute-force extreme rays of the linearized spectracones of `H_2` and `H_3`.
pub fn extreme_ray_checks() -> Vec<Finding> {
    [2, 3]
        .into_iter()
        .map(|n| {
            let h = hadamard_like(n).expect("n >= 2");
            let found = rays::spectracone_rays(&h).unwrap_or_default();
            Finding::measure(
                format!("h_{n}_extreme_rays_are_rows"),
                json!({ "rays": found.len() }),
                rays::rays_match_rows(&found, &h),
            )
        })
        .collect()
}

/// Every check above, in a fixed order.
pub fn verify_paper_suite(seed: u64, tol: Tolerance) -> Report {
    let mut report = Report::new("verify-paper", json!({ "seed": seed, "tol": tol.eps }));
    report.extend(kronecker_lemma_checks(seed));
    report.extend(witness_closure_checks(tol));
    report.extend(cone_sampling_checks(seed));
    report.extend(strict_cone_checks());
    report.extend(counterexample_checks());
    report.extend(ideal_strong_checks(tol, seed));
    report.extend(tope_strictness_checks(tol));
    report.extend(extreme_ray_checks());
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_status_tracks_findings() {
        let mut r = Report::new("x", json!({}));
        assert_eq!(r.status, Status::Pass);
        r.push(Finding::flag("a", true));
        assert_eq!(r.status, Status::Pass);
        r.push(Finding::flag("b", false));
        assert_eq!(r.status, Status::Fail);
        let e = Report::error("x", json!({}), "boom");
        assert_eq!(e.status, Status::Error);
        assert!(r.to_text().contains("FAIL"));
    }

    #[test]
    fn counterexample_group_passes() {
        assert!(counterexample_checks().iter().all(|f| f.pass));
    }

    #[test]
    fn extreme_ray_group_passes() {
        assert!(extreme_ray_checks().iter().all(|f| f.pass));
    }

    #[test]
    fn tope_group_passes() {
        let f = tope_strictness_checks(Tolerance::default());
        assert!(f.iter().all(|f| f.pass), "{f:?}");
    }
}
