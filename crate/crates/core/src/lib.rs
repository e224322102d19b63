//! Exact Kronecker-product machinery for Perron similarities.
//!
//! The crate builds the classic families (`H_n`, DFT, cyclic companions),
//! forms Kronecker products, decides spectracone and spectratope membership,
//! checks ideal/strong certificates and digraph imprimitivity, and produces
//! certificates for strict containment of Kronecker products of cones.
//! Rational matrices are handled exactly; complex matrices within a tolerance.

pub mod cone;
pub mod digraph;
mod error;
pub mod generators;
pub mod kron_index;
pub mod linalg;
pub mod perron;
pub mod reproduce;
pub mod sample;

pub use cone::{ConeGenerators, HullKind, StrongIdeal};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use kron_index::IndexPair;
pub use linalg::{DynMatrix, DynVector, Field, Matrix, Rational, ScalarMode, Tolerance};
pub use num_complex::Complex64;
pub use perron::{PerronWitness, Sign, Similarity};
pub use reproduce::{Finding, Report, Status};
