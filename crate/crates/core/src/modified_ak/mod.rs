//! The modified Ariki-Koike algebra `H̄^p = φ̄_Ω S̄^p φ̄_Ω`: its basis and
//! regular representation, the elements `ξ_i`, `F_ω(ξ)`, the block
//! decomposition, the presentation by generators and relations, the
//! homomorphisms `ρ_0` and `ρ_{p'p}`, and the double centralizer property
//! on `M̄^Ω`.

pub mod blocks;
pub mod context;
pub mod dimension;
pub mod duality;
pub mod presentation;
pub mod rho;
pub mod xi;

use thiserror::Error;

use crate::combinatorics::CombinatoricsError;
use crate::exact_linear::LinearError;
use crate::parabolic::ParabolicError;
use crate::schur::SchurError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModifiedError {
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error("the parameters Q^p are not pairwise distinct")]
    RepeatedParameter,
    #[error("inconsistent construction: {0}")]
    Inconsistent(String),
}

pub use context::{BarModule, Elem, ModifiedContext};
pub use xi::{interpolation_checks, min_poly_value, xi_checks, xi_family, XiFamily};
pub use blocks::{blocks, delta_map, delta_tensor, f_alpha, generated_subalgebra, h0_basis, y_lambda, Block, T0Reading};
pub use presentation::{correction_probe, probe_summary, relation_report, CorrectionProbe, RelationReport};
pub use dimension::{block_structure_checks, dimension_table, DimensionRow};
pub use duality::{duality_report, DualityReport};
pub use rho::{rho0_ranks, separation_failures, transitivity_check, RhoMap};
