//! The Ariki-Koike algebra `H_{n,r}`: normal forms, the cellular basis and
//! the modules `M^μ`.

pub mod cellular;
pub mod hecke;
pub mod modules;
pub mod relations;
pub mod table;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AkError {
    #[error("cellular basis is singular: rank {rank} in dimension {dim}")]
    SingularBasis { rank: usize, dim: usize },
    #[error("elements belong to different algebras")]
    ContextMismatch,
}

pub use cellular::{CellLabel, CellularDatum, CellularElements};
pub use hecke::{HVec, HeckeAlgebra};
pub use modules::{hom_space_basis, HomBasis, HomLabel, ModLabel, StandardModule};
pub use table::MulTable;
