//! Decomposition matrix of the cyclotomic q-Schur algebra at `n = 3`,
//! `r = 2` over `F_5` with `q = 2`, `Q = (1, 2)`, computed by splitting
//! Weyl modules and cross-checked against weight characters.

use std::time::Instant;

use cyclo_schur::ariki_koike::HeckeAlgebra;
use cyclo_schur::combinatorics::Catalog;
use cyclo_schur::exact_linear::Fp;
use cyclo_schur::schur::{decomposition_matrix, decomposition_matrix_by_characters, SchurContext};

fn main() {
    let start = Instant::now();
    let h = HeckeAlgebra::new(3, 2, Fp::new(2, 5), Fp::new(3, 5), vec![Fp::new(1, 5), Fp::new(2, 5)]);
    let s = SchurContext::new(h, Catalog::new(3, &[3, 3])).expect("cellular basis");
    println!("dim S = {} ({:?})", s.dim(), start.elapsed());
    let d = decomposition_matrix(&s).expect("splitting");
    println!("split in {:?}", start.elapsed());
    let oracle = decomposition_matrix_by_characters(&s).expect("characters");
    for (lam, row) in d.labels.iter().zip(&d.entries) {
        println!("{lam:>12}  {row:?}");
    }
    println!("unitriangular: {}", d.is_unitriangular(&s.cat));
    println!("agrees with characters: {}", d == oracle);
    println!("total {:?}", start.elapsed());
}
