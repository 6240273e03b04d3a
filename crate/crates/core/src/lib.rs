//! Exact computations with Ariki-Koike algebras and cyclotomic q-Schur
//! algebras.

pub mod ariki_koike;
pub mod check;
pub mod cli;
pub mod combinatorics;
pub mod exact_linear;
pub mod modified_ak;
pub mod parabolic;
pub mod schur;
