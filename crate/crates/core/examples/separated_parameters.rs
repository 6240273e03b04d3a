//! Over Q with q = 2, Q = (1, 100) the parameters are separated, so
//! ρ_0 : H → H̄^p is an isomorphism for every p, and the maps ρ_{p'p}
//! compose.

use cyclo_schur::ariki_koike::HeckeAlgebra;
use cyclo_schur::combinatorics::Catalog;
use cyclo_schur::exact_linear::Rational;
use cyclo_schur::modified_ak::dimension::shapes;
use cyclo_schur::modified_ak::{rho0_ranks, separation_failures, transitivity_check, ModifiedContext, RhoMap};
use cyclo_schur::parabolic::ParabolicContext;
use cyclo_schur::schur::SchurContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = Rational::from_int;
    let h = HeckeAlgebra::new(2, 2, z(2), Rational::from_frac(1, 2), vec![z(1), z(100)]);
    println!("separation failures: {:?}", separation_failures(&h));
    let s = SchurContext::new(h, Catalog::new(2, &[2, 2]))?;
    let pcs = shapes(2).into_iter().map(|p| ParabolicContext::new(&s, p)).collect::<Result<Vec<_>, _>>()?;
    let mcs = pcs.iter().map(ModifiedContext::new).collect::<Result<Vec<_>, _>>()?;
    for mc in &mcs {
        let (rank, _) = rho0_ranks(mc)?;
        println!("p = {}: rank ρ_0 = {rank}, dim H = {}, dim H̄^p = {}", mc.pc.p, s.h.dim(), mc.dim());
    }
    // shapes(2) lists (1,1) and (2); (1,1) refines (2)
    let (fine, coarse) = if mcs[0].pc.p.refines(&mcs[1].pc.p) { (&mcs[0], &mcs[1]) } else { (&mcs[1], &mcs[0]) };
    for c in RhoMap::new(fine, coarse)?.checks()? {
        println!("{}  {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
    }
    let c = transitivity_check(fine, fine, coarse)?;
    println!("{}  {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
    Ok(())
}
