//! The parabolic subalgebra `S^p ⊆ S(Λ)`, its standardly based structure,
//! the cellular quotient `S̄^p = S^p / Ŝ^p`, and the factorisation of
//! `S̄^p` into tensor products of smaller cyclotomic q-Schur algebras.

pub mod context;
pub mod factor;
pub mod product;
pub mod quotient;
pub mod standard;

use thiserror::Error;

use crate::combinatorics::CombinatoricsError;
use crate::schur::SchurError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParabolicError {
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error("parabolic shape {shape} does not match r = {r}")]
    ShapeMismatch { shape: String, r: usize },
    #[error("S^p is not closed: {0}")]
    ClosureViolation(String),
    #[error("Ŝ^p is not an ideal: {0}")]
    IdealViolation(String),
}

pub use context::ParabolicContext;
pub use factor::{factor_contexts, product_formula_check, structure_iso_check, FactorAlgebras};
pub use product::{product_decomposition_check, product_decomposition_rank};
pub use quotient::{
    block_vanishing_check, ideal_check, quotient_decomposition, quotient_modules, quotient_shapes,
    quotient_structure_check, transfer_check, weyl_intertwining_check,
};
pub use standard::{
    closure_check, standard_module, standard_module_checks, standardly_based_check, support_shape_check,
    StandardModule,
};
