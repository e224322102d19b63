//! `perronkron` command-line front end.
//!
//! Matrix-producing verbs (`gen`, `kron`, `invert`) print matrix JSON; every
//! other verb prints a [`Report`]. Exit status: 0 pass, 1 fail, 2 usage or IO error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use perronkron::cone::{
    coni_combination, conv_combination, spectratope_strictness_certificate, ConeGenerators,
    HullKind, StrongIdeal,
};
use perronkron::digraph::{imprimitivity_index, is_irreducible, kron_irreducibility_predicate};
use perronkron::generators::FamilyId;
use perronkron::linalg::parse_rational_list;
use perronkron::perron::{
    find_perron_witness, in_spectracone, in_spectratope, is_ideal, similarity_image,
    strict_cone_containment_certificate, verify_strong_certificate,
};
use perronkron::reproduce::verify_paper_suite;
use perronkron::{
    Complex64, DynMatrix, DynVector, Field, Finding, Matrix, Rational, Report, Status, Tolerance,
};

#[derive(Parser, Debug)]
#[command(name = "perronkron", version, about = "Kronecker products of Perron similarities")]
struct Cli {
    /// Comparison tolerance for complex matrices (rational input is exact).
    #[arg(long, global = true, default_value_t = Tolerance::DEFAULT_EPS)]
    tol: f64,
    /// Seed for sampling-based checks.
    #[arg(long, global = true, default_value_t = perronkron::sample::DEFAULT_SEED)]
    seed: u64,
    /// Write output to this file instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// `H_n`, order `2^(n-1)`.
    Hadamard,
    Dft,
    Cycle,
    /// Needs `--coeffs`; the order is the number of coefficients.
    Circulant,
    /// The 4x4 counterexample similarity (no order argument).
    JpCounterexample,
    /// Its 2x2 second factor (no order argument).
    JpFactor,
}

/// A vector given inline (`--x 1,2,-1/2`) or as a vector JSON file (`--x-file`).
#[derive(Args, Debug)]
struct VectorArg {
    #[arg(long = "x", allow_hyphen_values = true, conflicts_with = "x_file")]
    x: Option<String>,
    #[arg(long = "x-file")]
    x_file: Option<String>,
}

#[derive(Args, Debug)]
struct PairArgs {
    a: String,
    b: String,
    /// Promote a rational factor to complex when the other is complex.
    #[arg(long)]
    promote: bool,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Generate a named matrix.
    Gen {
        #[arg(value_enum)]
        family: Family,
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
    },
    /// Kronecker product of two matrices.
    Kron(PairArgs),
    /// Inverse of a matrix.
    Invert { matrix: String },
    /// Search for a Perron witness.
    CheckPerron { matrix: String },
    /// Apply the ideal criterion.
    CheckIdeal { matrix: String },
    /// Check that a spectrum gives a nonnegative irreducible image.
    CheckStrong {
        matrix: String,
        #[command(flatten)]
        x: VectorArg,
    },
    /// Spectracone membership.
    ConeMember {
        matrix: String,
        #[command(flatten)]
        x: VectorArg,
    },
    /// Spectratope membership.
    TopeMember {
        matrix: String,
        #[command(flatten)]
        x: VectorArg,
    },
    /// Membership in the conical hull of the matrix rows.
    ConiMember {
        generators: String,
        #[command(flatten)]
        x: VectorArg,
    },
    /// Membership in the convex hull of the matrix rows.
    ConvMember {
        generators: String,
        #[command(flatten)]
        x: VectorArg,
    },
    /// Irreducibility of a nonnegative matrix.
    Irreducible { matrix: String },
    /// Index of imprimitivity of an irreducible nonnegative matrix.
    Period { matrix: String },
    /// Irreducibility of a Kronecker product of irreducible matrices.
    KronIrreducible(PairArgs),
    /// Strict containment certificate for a Kronecker pair. Supplying both
    /// strong spectra selects the spectratope certificate.
    StrictContainment {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long = "spectrum-s", allow_hyphen_values = true)]
        spectrum_s: Option<String>,
        #[arg(long = "spectrum-t", allow_hyphen_values = true)]
        spectrum_t: Option<String>,
        #[arg(long, default_value = "1/2")]
        phi: String,
    },
    /// Run the full reproduction suite.
    VerifyPaper,
}

enum Output {
    Matrix(DynMatrix),
    Report(Report),
}

/// Both matrices in one scalar mode.
enum Pair {
    Rational(Matrix<Rational>, Matrix<Rational>),
    Complex(Matrix<Complex64>, Matrix<Complex64>),
}

/// A matrix and a vector in one scalar mode.
enum WithVector {
    Rational(Matrix<Rational>, Vec<Rational>),
    Complex(Matrix<Complex64>, Vec<Complex64>),
}

macro_rules! with_matrix {
    ($m:expr, |$s:ident| $body:expr) => {
        match $m {
            DynMatrix::Rational($s) => $body,
            DynMatrix::Complex($s) => $body,
        }
    };
}

macro_rules! with_pair {
    ($p:expr, |$a:ident, $b:ident| $body:expr) => {
        match $p {
            Pair::Rational($a, $b) => $body,
            Pair::Complex($a, $b) => $body,
        }
    };
}

macro_rules! with_vector {
    ($p:expr, |$s:ident, $x:ident| $body:expr) => {
        match $p {
            WithVector::Rational($s, $x) => $body,
            WithVector::Complex($s, $x) => $body,
        }
    };
}

fn read_source(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load_matrix(path: &str) -> anyhow::Result<DynMatrix> {
    DynMatrix::from_json(&read_source(path)?).with_context(|| format!("parsing matrix {path}"))
}

fn load_pair(args: &PairArgs) -> anyhow::Result<Pair> {
    let (a, b) = (load_matrix(&args.a)?, load_matrix(&args.b)?);
    Ok(match (a, b) {
        (DynMatrix::Rational(a), DynMatrix::Rational(b)) => Pair::Rational(a, b),
        (DynMatrix::Complex(a), DynMatrix::Complex(b)) => Pair::Complex(a, b),
        (a, b) if args.promote => Pair::Complex(a.to_complex(), b.to_complex()),
        (a, b) => bail!(
            "mode mismatch: {:?} and {:?} (pass --promote to compute in complex mode)",
            a.mode(),
            b.mode()
        ),
    })
}

fn load_vector(arg: &VectorArg) -> anyhow::Result<DynVector> {
    match (&arg.x, &arg.x_file) {
        (Some(list), None) => Ok(DynVector::Rational(parse_rational_list(list)?)),
        (None, Some(path)) => {
            DynVector::from_json(&read_source(path)?).with_context(|| format!("parsing vector {path}"))
        }
        _ => bail!("a vector is required: pass --x <list> or --x-file <path>"),
    }
}

/// Rational vectors are accepted for complex matrices, since the inline
/// list syntax is rational only.
fn with_vector(m: DynMatrix, v: DynVector) -> anyhow::Result<WithVector> {
    Ok(match (m, v) {
        (DynMatrix::Rational(m), DynVector::Rational(v)) => WithVector::Rational(m, v),
        (DynMatrix::Complex(m), v) => WithVector::Complex(m, v.to_complex()),
        (DynMatrix::Rational(_), DynVector::Complex(_)) => {
            bail!("mode mismatch: complex vector for a rational matrix")
        }
    })
}

fn parse_spectrum(text: &str, complex: bool) -> anyhow::Result<DynVector> {
    if text.ends_with(".json") || text == "-" {
        return Ok(DynVector::from_json(&read_source(text)?)?);
    }
    let q = parse_rational_list(text)?;
    Ok(if complex {
        DynVector::Complex(DynVector::Rational(q).to_complex())
    } else {
        DynVector::Rational(q)
    })
}

fn matrix_value(m: impl Into<DynMatrix>) -> Value {
    m.into()
        .to_json()
        .ok()
        .and_then(|s| serde_json::from_str(&s).ok())
        .unwrap_or(Value::Null)
}

fn vec_value<F: Field>(v: &[F]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn family_id(family: Family, n: Option<usize>, coeffs: Option<&str>) -> anyhow::Result<FamilyId> {
    let order = || n.ok_or_else(|| anyhow!("this family needs an order argument"));
    Ok(match family {
        Family::Hadamard => FamilyId::HadamardLike(order()?),
        Family::Dft => FamilyId::Dft(order()?),
        Family::Cycle => FamilyId::CycleCompanion(order()?),
        Family::Circulant => {
            let c = parse_rational_list(coeffs.ok_or_else(|| anyhow!("circulant needs --coeffs"))?)?;
            if n.is_some_and(|n| n != c.len()) {
                bail!("order {} does not match {} coefficients", n.unwrap_or(0), c.len());
            }
            FamilyId::Circulant(c)
        }
        Family::JpCounterexample => FamilyId::JpCounterexample,
        Family::JpFactor => FamilyId::JpFactor,
    })
}

fn execute(cli: &Cli) -> anyhow::Result<Output> {
    let tol = Tolerance::new(cli.tol);
    let single = |verb: &str, path: &str| Report::new(verb, json!({ "matrix": path }));
    Ok(match &cli.verb {
        Verb::Gen { family, n, coeffs } => {
            Output::Matrix(family_id(*family, *n, coeffs.as_deref())?.build()?)
        }
        Verb::Kron(args) => Output::Matrix(with_pair!(load_pair(args)?, |a, b| a.kron(&b).into())),
        Verb::Invert { matrix } => Output::Matrix(with_matrix!(load_matrix(matrix)?, |s| s
            .inverse_tol(tol)?
            .into())),
        Verb::CheckPerron { matrix } => {
            let mut r = single("check-perron", matrix);
            let w = with_matrix!(load_matrix(matrix)?, |s| find_perron_witness(&s, tol)?);
            r.push(Finding::measure("perron_witness", serde_json::to_value(w)?, w.is_some()));
            Output::Report(r)
        }
        Verb::CheckIdeal { matrix } => {
            let mut r = single("check-ideal", matrix);
            let (w, ideal) = with_matrix!(load_matrix(matrix)?, |s| (
                find_perron_witness(&s, tol)?,
                is_ideal(&s, tol)?
            ));
            r.push(Finding::measure("perron_witness", serde_json::to_value(w)?, w.is_some()));
            r.push(Finding::flag("is_ideal", ideal));
            Output::Report(r)
        }
        Verb::CheckStrong { matrix, x } => {
            let mut r = single("check-strong", matrix);
            let (strong, image) = with_vector!(with_vector(load_matrix(matrix)?, load_vector(x)?)?, |s, x| {
                (verify_strong_certificate(&s, &x, tol)?, matrix_value(similarity_image(&s, &x, tol)?))
            });
            r.push(Finding::flag("strong", strong));
            r.certificate("image", image);
            Output::Report(r)
        }
        Verb::ConeMember { matrix, x } | Verb::TopeMember { matrix, x } => {
            let tope = matches!(cli.verb, Verb::TopeMember { .. });
            let verb = if tope { "tope-member" } else { "cone-member" };
            let mut r = single(verb, matrix);
            let (member, image) = with_vector!(with_vector(load_matrix(matrix)?, load_vector(x)?)?, |s, x| {
                let member = if tope {
                    in_spectratope(&s, &x, tol)?
                } else {
                    in_spectracone(&s, &x, tol)?
                };
                (member, matrix_value(similarity_image(&s, &x, tol)?))
            });
            r.push(Finding::flag(if tope { "in_spectratope" } else { "in_spectracone" }, member));
            r.certificate("image", image);
            Output::Report(r)
        }
        Verb::ConiMember { generators, x } | Verb::ConvMember { generators, x } => {
            let convex = matches!(cli.verb, Verb::ConvMember { .. });
            let (verb, kind) = if convex {
                ("conv-member", HullKind::Convex)
            } else {
                ("coni-member", HullKind::Conical)
            };
            let mut r = Report::new(verb, json!({ "generators": generators }));
            let weights = with_vector!(with_vector(load_matrix(generators)?, load_vector(x)?)?, |g, x| {
                let g = ConeGenerators::rows_of(&g, kind);
                let w = if convex {
                    conv_combination(&g, &x, tol)?
                } else {
                    coni_combination(&g, &x, tol)?
                };
                w.map(|w| Value::Array(w.iter().map(|v| json!(v.to_string())).collect()))
            });
            r.push(Finding::flag(verb.replace('-', "_"), weights.is_some()));
            if let Some(w) = weights {
                r.certificate("weights", w);
            }
            Output::Report(r)
        }
        Verb::Irreducible { matrix } => {
            let mut r = single("irreducible", matrix);
            let irr = with_matrix!(load_matrix(matrix)?, |a| is_irreducible(&a, tol)?);
            r.push(Finding::flag("irreducible", irr));
            Output::Report(r)
        }
        Verb::Period { matrix } => {
            let mut r = single("period", matrix);
            let h = with_matrix!(load_matrix(matrix)?, |a| imprimitivity_index(&a, tol)?);
            r.push(Finding::measure("imprimitivity_index", json!(h), true));
            Output::Report(r)
        }
        Verb::KronIrreducible(args) => {
            let mut r = Report::new("kron-irreducible", json!({ "a": args.a, "b": args.b }));
            let (ha, hb, predicted, direct) = with_pair!(load_pair(args)?, |a, b| (
                imprimitivity_index(&a, tol)?,
                imprimitivity_index(&b, tol)?,
                kron_irreducibility_predicate(&a, &b, tol)?,
                is_irreducible(&a.kron(&b), tol)?
            ));
            r.push(Finding::measure("imprimitivity_indices", json!([ha, hb]), true));
            r.push(Finding::flag("predicate_matches_direct", predicted == direct));
            r.push(Finding::flag("kron_irreducible", predicted));
            Output::Report(r)
        }
        Verb::StrictContainment {
            pair,
            spectrum_s,
            spectrum_t,
            phi,
        } => Output::Report(strict_containment(pair, spectrum_s, spectrum_t, phi, tol)?),
        Verb::VerifyPaper => Output::Report(verify_paper_suite(cli.seed, tol)),
    })
}

fn strict_containment(
    pair: &PairArgs,
    spectrum_s: &Option<String>,
    spectrum_t: &Option<String>,
    phi: &str,
    tol: Tolerance,
) -> anyhow::Result<Report> {
    let loaded = load_pair(pair)?;
    let mut r = Report::new("strict-containment", json!({ "s": pair.a, "t": pair.b }));
    match (spectrum_s, spectrum_t) {
        (None, None) => {
            let c = with_pair!(loaded, |s, t| {
                let c = strict_cone_containment_certificate(&s, &t, tol)?;
                json!({
                    "x": vec_value(&c.x),
                    "y": vec_value(&c.y),
                    "epsilon": c.epsilon.to_string(),
                    "z_prime": vec_value(&c.z_prime),
                    "in_kron_cone": c.in_kron_cone,
                    "factorization_absent": c.factorization_absent,
                })
            });
            r.push(Finding::flag("in_kron_cone", c["in_kron_cone"] == true));
            r.push(Finding::flag("kron_factor_absent", c["factorization_absent"] == true));
            r.certificate("cone", c);
        }
        (Some(xs), Some(xt)) => {
            let phi: Rational = phi.parse().map_err(|e| anyhow!("--phi: {e}"))?;
            let complex = matches!(loaded, Pair::Complex(..));
            let (xs, xt) = (parse_spectrum(xs, complex)?, parse_spectrum(xt, complex)?);
            let c = match (loaded, xs, xt) {
                (Pair::Rational(s, t), DynVector::Rational(xs), DynVector::Rational(xt)) => tope_json(
                    spectratope_strictness_certificate(
                        &StrongIdeal { matrix: s, strong_spectrum: xs },
                        &StrongIdeal { matrix: t, strong_spectrum: xt },
                        phi,
                        tol,
                    )?,
                ),
                (Pair::Complex(s, t), xs, xt) => tope_json(spectratope_strictness_certificate(
                    &StrongIdeal { matrix: s, strong_spectrum: xs.to_complex() },
                    &StrongIdeal { matrix: t, strong_spectrum: xt.to_complex() },
                    phi,
                    tol,
                )?),
                _ => bail!("mode mismatch: complex spectrum for rational matrices"),
            };
            for key in ["indices_coprime", "kron_ideal", "kron_strong", "in_kron_cone", "in_kron_tope", "factorization_absent"] {
                r.push(Finding::flag(key, c[key] == true));
            }
            r.certificate("tope", c);
        }
        _ => bail!("--spectrum-s and --spectrum-t must be given together"),
    }
    Ok(r)
}

fn tope_json<F: Field>(c: perronkron::cone::TopeStrictnessCertificate<F>) -> Value {
    json!({
        "index_s": c.index_s,
        "index_t": c.index_t,
        "indices_coprime": c.indices_coprime,
        "kron_ideal": c.kron_ideal,
        "kron_strong": c.kron_strong,
        "x": vec_value(&c.x),
        "y": vec_value(&c.y),
        "phi": c.phi.to_string(),
        "psi": c.psi.to_string(),
        "z_prime": vec_value(&c.z_prime),
        "in_kron_cone": c.in_kron_cone,
        "in_kron_tope": c.in_kron_tope,
        "factorization_absent": c.factorization_absent,
    })
}

fn render(out: &Output, format: Format) -> anyhow::Result<String> {
    Ok(match (out, format) {
        (Output::Matrix(m), Format::Json) => m.to_json()? + "\n",
        (Output::Matrix(m), Format::Text) => with_matrix!(m, |s| format!("{s}\n")),
        (Output::Report(r), Format::Json) => r.to_json() + "\n",
        (Output::Report(r), Format::Text) => r.to_text(),
    })
}

fn emit(text: &str, path: Option<&PathBuf>) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        eprintln!("error: --tol must be a finite nonnegative number");
        return ExitCode::from(2);
    }
    let result = execute(&cli).and_then(|out| {
        let code = match &out {
            Output::Report(r) if r.status == Status::Pass => 0,
            Output::Report(_) => 1,
            Output::Matrix(_) => 0,
        };
        emit(&render(&out, cli.format)?, cli.output.as_ref())?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
