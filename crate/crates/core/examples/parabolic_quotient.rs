//! The parabolic subalgebra S^p and its quotient S̄^p at n = 3, r = 2,
//! p = (1,1) over F_5 with q = 2, Q = (1,2): standardly based and cellular
//! structure (sampled), S = S^p·S^p*, the factorisation of S̄^p_α into
//! tensor products, and decomposition numbers computed three ways.

use std::time::Instant;

use cyclo_schur::ariki_koike::HeckeAlgebra;
use cyclo_schur::check::{Check, Coverage};
use cyclo_schur::combinatorics::{Catalog, ParabolicShape};
use cyclo_schur::exact_linear::Fp;
use cyclo_schur::parabolic::*;
use cyclo_schur::schur::{decomposition_matrix, SchurContext};

fn show(t: Instant, checks: &[Check]) {
    for c in checks {
        println!("{:>7.2}s  {}  {}", t.elapsed().as_secs_f64(), if c.passed { "ok  " } else { "FAIL" }, c.name);
        for w in &c.witnesses {
            println!("           {w}");
        }
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = Instant::now();
    let f = |x| Fp::new(x, 5);
    let h = HeckeAlgebra::new(3, 2, f(2), f(3), vec![f(1), f(2)]);
    let s = SchurContext::new(h, Catalog::new(3, &[3, 3]))?;
    let pc = ParabolicContext::new(&s, ParabolicShape::finest(2))?;
    println!(
        "dim S = {}, |C^p| = {}, dim S̄^p = {}, blocks {:?}",
        s.dim(),
        pc.members().len(),
        pc.quotient_members().len(),
        pc.alphas().iter().map(|a| (a.clone(), pc.quotient_block(a).len())).collect::<Vec<_>>()
    );
    let sample = Coverage::Sampled { count: 40, seed: 7 };
    show(t, &[closure_check(&pc, Coverage::Sampled { count: 2000, seed: 1 })]);
    show(t, &[support_shape_check(&pc, Coverage::Sampled { count: 2000, seed: 2 })]);
    show(t, &[standardly_based_check(&pc, sample)]);
    show(t, &[ideal_check(&pc, Coverage::Sampled { count: 2000, seed: 3 })]);
    show(t, &[quotient_structure_check(&pc, sample)]);
    show(t, &[block_vanishing_check(&pc)]);
    show(t, &[product_decomposition_check(&pc)]);
    let fa = factor_contexts(&pc)?;
    show(t, &structure_iso_check(&pc, &fa)?);
    let full = decomposition_matrix(&s)?;
    let bar = quotient_decomposition(&pc)?;
    show(t, &transfer_check(&pc, &full, &bar));
    show(t, &[product_formula_check(&pc, &fa, &full)?]);
    show(t, &weyl_intertwining_check(&pc, &quotient_modules(&pc)));
    println!("{}", serde_json::to_string(&bar)?);
    Ok(())
}
