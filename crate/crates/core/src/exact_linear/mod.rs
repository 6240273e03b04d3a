//! Exact coefficient arithmetic and linear algebra over fields.

pub mod matrix;
pub mod params;
pub mod scalar;
pub mod vandermonde;

pub use matrix::{
    eval_poly, solve_and_rank, EchelonBasis, LinearError, LinearSolver, Matrix, SolveReport,
};
pub use params::{
    parse_rational, ring_arithmetic, specialize, specialize_laurent, ArithOp, FieldSpec,
    ParameterAssignment, Scalar, ScalarError, SpecField,
};
pub use scalar::{is_prime, Field, Fp, Laurent, Monomial, Rational, Ring};
pub use vandermonde::{vandermonde_data, vandermonde_data_ring, VandermondeData};
