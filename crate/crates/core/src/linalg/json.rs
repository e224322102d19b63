//! The on-disk matrix and vector format.
//!
//! ```json
//! {"mode": "rational", "rows": 2, "cols": 2, "data": ["1/1", "1/1", "1/1", "-1/1"]}
//! {"mode": "complex", "rows": 1, "cols": 2, "data": [[1.0, 0.0], [0.0, -1.0]]}
//! ```
//!
//! Rationals are `"p/q"` strings in lowest terms; complex entries are
//! `[re, im]` pairs. Vectors use the same layout with a `dim` field.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::field::{Field, ScalarMode};
use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    mode: ScalarMode,
    rows: usize,
    cols: usize,
    data: Vec<Value>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorDoc {
    mode: ScalarMode,
    dim: usize,
    data: Vec<Value>,
}

/// A matrix whose scalar mode is only known at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum DynMatrix {
    Rational(Matrix<Rational>),
    Complex(Matrix<Complex64>),
}

/// A vector whose scalar mode is only known at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum DynVector {
    Rational(Vec<Rational>),
    Complex(Vec<Complex64>),
}

fn rational_to_value(q: &Rational) -> Value {
    Value::String(q.to_fraction_string())
}

fn complex_to_value(z: &Complex64) -> Result<Value> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite complex entry {z}")));
    }
    Ok(serde_json::json!([z.re, z.im]))
}

fn value_to_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap())),
        other => Err(Error::Parse(format!("expected a \"p/q\" string, got {other}"))),
    }
}

fn value_to_complex(v: &Value) -> Result<Complex64> {
    let parts = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Parse(format!("expected [re, im], got {v}")))?;
    let re = parts[0].as_f64();
    let im = parts[1].as_f64();
    match (re, im) {
        (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
        _ => Err(Error::Parse(format!("expected numeric [re, im], got {v}"))),
    }
}

fn parse_entries<T>(data: &[Value], f: impl Fn(&Value) -> Result<T>) -> Result<Vec<T>> {
    data.iter().map(f).collect()
}

impl DynMatrix {
    pub fn mode(&self) -> ScalarMode {
        match self {
            DynMatrix::Rational(_) => ScalarMode::Rational,
            DynMatrix::Complex(_) => ScalarMode::Complex,
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            DynMatrix::Rational(m) => m.rows(),
            DynMatrix::Complex(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            DynMatrix::Rational(m) => m.cols(),
            DynMatrix::Complex(m) => m.cols(),
        }
    }

    /// Explicit promotion; complex matrices are returned unchanged.
    pub fn to_complex(&self) -> Matrix<Complex64> {
        match self {
            DynMatrix::Rational(m) => m.to_complex(),
            DynMatrix::Complex(m) => m.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MatrixDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        if doc.rows * doc.cols != doc.data.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix with {} entries",
                doc.rows,
                doc.cols,
                doc.data.len()
            )));
        }
        Ok(match doc.mode {
            ScalarMode::Rational => DynMatrix::Rational(Matrix::new(
                doc.rows,
                doc.cols,
                parse_entries(&doc.data, value_to_rational)?,
            )?),
            ScalarMode::Complex => DynMatrix::Complex(Matrix::new(
                doc.rows,
                doc.cols,
                parse_entries(&doc.data, value_to_complex)?,
            )?),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = match self {
            DynMatrix::Rational(m) => MatrixDoc {
                mode: ScalarMode::Rational,
                rows: m.rows(),
                cols: m.cols(),
                data: m.data().iter().map(rational_to_value).collect(),
            },
            DynMatrix::Complex(m) => MatrixDoc {
                mode: ScalarMode::Complex,
                rows: m.rows(),
                cols: m.cols(),
                data: m.data().iter().map(complex_to_value).collect::<Result<_>>()?,
            },
        };
        serde_json::to_string(&doc).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<Matrix<Rational>> for DynMatrix {
    fn from(m: Matrix<Rational>) -> Self {
        DynMatrix::Rational(m)
    }
}

impl From<Matrix<Complex64>> for DynMatrix {
    fn from(m: Matrix<Complex64>) -> Self {
        DynMatrix::Complex(m)
    }
}

impl DynVector {
    pub fn mode(&self) -> ScalarMode {
        match self {
            DynVector::Rational(_) => ScalarMode::Rational,
            DynVector::Complex(_) => ScalarMode::Complex,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            DynVector::Rational(v) => v.len(),
            DynVector::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        match self {
            DynVector::Rational(v) => v.iter().map(Complex64::from_rational).collect(),
            DynVector::Complex(v) => v.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: VectorDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("vector JSON: {e}")))?;
        if doc.dim != doc.data.len() || doc.dim == 0 {
            return Err(Error::DimensionMismatch(format!(
                "vector of dim {} with {} entries",
                doc.dim,
                doc.data.len()
            )));
        }
        Ok(match doc.mode {
            ScalarMode::Rational => DynVector::Rational(parse_entries(&doc.data, value_to_rational)?),
            ScalarMode::Complex => DynVector::Complex(parse_entries(&doc.data, value_to_complex)?),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = match self {
            DynVector::Rational(v) => VectorDoc {
                mode: ScalarMode::Rational,
                dim: v.len(),
                data: v.iter().map(rational_to_value).collect(),
            },
            DynVector::Complex(v) => VectorDoc {
                mode: ScalarMode::Complex,
                dim: v.len(),
                data: v.iter().map(complex_to_value).collect::<Result<_>>()?,
            },
        };
        serde_json::to_string(&doc).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Parses a comma-separated list of rationals, e.g. `"2,2,-1,-1"` or `"1/2, 3"`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    let v: Vec<Rational> = text.split(',').map(str::parse).collect::<Result<_>>()?;
    if v.is_empty() {
        return Err(Error::Parse("empty vector".into()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_format_is_p_over_q() {
        let m = DynMatrix::Rational(Matrix::from_rows(vec![vec![
            Rational::new(-2, 4).unwrap(),
            Rational::from(3),
        ]]).unwrap());
        assert_eq!(
            m.to_json().unwrap(),
            r#"{"mode":"rational","rows":1,"cols":2,"data":["-1/2","3/1"]}"#
        );
    }

    #[test]
    fn parse_errors() {
        assert!(DynMatrix::from_json(r#"{"mode":"rational","rows":1,"cols":2,"data":["1/1"]}"#).is_err());
        assert!(DynMatrix::from_json(r#"{"mode":"rational","rows":1,"cols":1,"data":["1/0"]}"#).is_err());
        assert!(DynMatrix::from_json(r#"{"mode":"complex","rows":1,"cols":1,"data":[[1.0]]}"#).is_err());
        assert!(DynMatrix::from_json(r#"{"mode":"real","rows":1,"cols":1,"data":["1"]}"#).is_err());
        assert!(DynMatrix::from_json(r#"{"mode":"rational","rows":1,"cols":1,"data":["1"],"x":1}"#).is_err());
        assert!(DynVector::from_json(r#"{"mode":"rational","dim":0,"data":[]}"#).is_err());
    }

    #[test]
    fn complex_nan_rejected_on_write() {
        let m = DynMatrix::Complex(Matrix::new(1, 1, vec![Complex64::new(f64::NAN, 0.0)]).unwrap());
        assert!(m.to_json().is_err());
    }

    #[test]
    fn rational_list() {
        let v = parse_rational_list("2, 2,-1/2,0.25").unwrap();
        assert_eq!(v[2], Rational::new(-1, 2).unwrap());
        assert_eq!(v[3], Rational::new(1, 4).unwrap());
        assert!(parse_rational_list("1,,2").is_err());
    }

    proptest! {
        #[test]
        fn rational_roundtrip(entries in proptest::collection::vec((-10_000i64..10_000, 1i64..500), 6)) {
            let data: Vec<Rational> = entries.iter().map(|&(n, d)| Rational::new(n, d).unwrap()).collect();
            let m = DynMatrix::Rational(Matrix::new(2, 3, data).unwrap());
            let text = m.to_json().unwrap();
            let back = DynMatrix::from_json(&text).unwrap();
            prop_assert_eq!(&back, &m);
            prop_assert_eq!(back.to_json().unwrap(), text);
        }

        #[test]
        fn complex_roundtrip(entries in proptest::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 4)) {
            let data: Vec<Complex64> = entries.iter().map(|&(a, b)| Complex64::new(a, b)).collect();
            let v = DynVector::Complex(data);
            let back = DynVector::from_json(&v.to_json().unwrap()).unwrap();
            prop_assert_eq!(back, v);
        }
    }
}
