//! Double centralizer between S̄^p and H̄^p on M̄ at n = 2, r = 2,
//! p = (1,1) over F_5.

use cyclo_schur::ariki_koike::HeckeAlgebra;
use cyclo_schur::combinatorics::{Catalog, ParabolicShape};
use cyclo_schur::exact_linear::Fp;
use cyclo_schur::modified_ak::{blocks, duality_report, xi_family, ModifiedContext};
use cyclo_schur::parabolic::ParabolicContext;
use cyclo_schur::schur::SchurContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = |x| Fp::new(x, 5);
    let h = HeckeAlgebra::new(2, 2, f(2), f(3), vec![f(1), f(2)]);
    let s = SchurContext::new(h, Catalog::new(2, &[2, 2]))?;
    let pc = ParabolicContext::new(&s, ParabolicShape::finest(2))?;
    let mc = ModifiedContext::new(&pc)?;
    let fam = xi_family(&mc)?;
    let rep = duality_report(&mc, &fam, &blocks(&mc, &fam)?)?;
    println!("dim S̄^p = {}  dim End_H̄(M̄) = {}", rep.dim_schur_bar, rep.dim_end_hbar);
    println!("dim H̄^p = {}  dim End_S̄(M̄) = {}", rep.dim_hbar, rep.dim_end_schur_bar);
    for c in rep.checks.iter().chain([&rep.unweighted_factorization]) {
        println!("{}  {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
    }
    Ok(())
}
