//! Dense exact-rational and complex linear algebra.

mod field;
mod json;
mod matrix;
mod ops;
mod rational;

pub use field::{Field, ScalarMode, Tolerance};
pub use json::{parse_rational_list, DynMatrix, DynVector};
pub use matrix::Matrix;
pub use ops::{
    add_vec, basis, diag_embed, diag_kron_identity, is_entrywise_nonneg, is_totally_nonzero,
    kron_factor, kron_vec, ones, p_norm, reshape, scale_vec, PNorm,
};
pub use rational::Rational;
