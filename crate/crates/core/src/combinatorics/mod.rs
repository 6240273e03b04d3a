//! Multipartition and tableau combinatorics.

pub mod blocks;
pub mod catalog;
pub mod multicomp;
pub mod omega;
pub mod perm;
pub mod tableaux;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("multicompositions have different sizes or numbers of components")]
    SizeMismatch,
    #[error("component bounds m_i must be at least n")]
    BoundsTooSmall,
    #[error("tableau does not split along the parabolic blocks")]
    BlockMismatch,
    #[error("invalid parabolic shape {0}")]
    InvalidShape(String),
}

pub use blocks::{in_std0, join_semi, join_std, split_semi, split_std};
pub use catalog::{Catalog, Epsilon, SemiRef, SigmaIndex};
pub use multicomp::{
    alpha_and_a, dominance, dominates, dominates_eq, generate_lambda, vec_ge, vec_gt, Dominance,
    MultiComp, ParabolicShape,
};
pub use omega::{omega_bijection_holds, omega_image, omega_set, OmegaElement, OmegaImage};
pub use perm::{Perm, SymGroup};
pub use tableaux::{
    mu_of_std, semistandard_tableaux, std_tableaux, superstandard, Diagram, SemiTableau, StdTableau,
};
