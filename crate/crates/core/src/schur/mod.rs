//! Cyclotomic q-Schur algebras: the `φ_{ST}` basis and composition, Weyl
//! modules, Gram forms, simple modules and decomposition numbers.

pub mod algebra;
pub mod cellularity;
pub mod decomposition;
pub mod module;
pub mod weyl;

use thiserror::Error;

use crate::ariki_koike::AkError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error(transparent)]
    Hecke(#[from] AkError),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("a composition factor of dimension at most {dim} matches no known simple module")]
    UnidentifiedFactor { dim: usize },
}

pub use algebra::{coeff, normalize, SchurContext, SchurLabel, SchurVec};
pub use cellularity::{
    cell_expansion_report, full_structure_check, random_combination, sampled_expansion_report, structure_report,
    CellStructure, ExpansionReport,
};
pub use decomposition::{
    character_decomposition, decomposition_matrix, decomposition_matrix_by_characters, split_decomposition,
    weyl_modules, DecompositionMatrix,
};
pub use module::{composition_factors, hom_space, FiniteModule, GeneratorShapes};
pub use weyl::{
    module_by_composition, pairing_by_composition, schur_shapes, weyl_module, weyl_module_by_composition, CellModule,
};
