//! The computations behind `dim`, `decomp` and `verify`, generic over the
//! coefficient field.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::config::{RunConfig, Suite};
use super::CliError;
use crate::ariki_koike::relations::{associativity, defining_relations, jm_annihilation, jm_commute, jm_minimality};
use crate::ariki_koike::HeckeAlgebra;
use crate::check::{Check, Coverage};
use crate::combinatorics::Catalog;
use crate::exact_linear::{Field, SpecField};
use crate::modified_ak::dimension::{block_sum, multipartition_dim, shapes};
use crate::modified_ak::{
    block_structure_checks, blocks, correction_probe, probe_summary, duality_report, interpolation_checks, relation_report, rho0_ranks,
    separation_failures, transitivity_check, xi_checks, xi_family, ModifiedContext, RhoMap, T0Reading,
};
use crate::parabolic::{
    block_vanishing_check, closure_check, factor_contexts, ideal_check, product_decomposition_check, product_formula_check,
    quotient_decomposition, quotient_modules, quotient_structure_check, standard_module_checks, standardly_based_check,
    structure_iso_check, support_shape_check, transfer_check, weyl_intertwining_check, ParabolicContext,
};
use crate::schur::{decomposition_matrix, decomposition_matrix_by_characters, full_structure_check, weyl_modules, SchurContext};

/// Algebras up to this dimension get exhaustive expansion checks; larger
/// ones are sampled.
pub const EXHAUSTIVE_LIMIT: usize = 500;
/// Random elements `φ` drawn for a sampled expansion check.
pub const SAMPLED_PRODUCTS: usize = 200;
/// Random basis pairs for sampled closure and ideal checks.
const SAMPLED_PAIRS: usize = 2000;

pub struct Outcome {
    pub checks: Vec<Check>,
    pub data: Value,
}

/// Stage timings, on stderr so that reports stay byte-identical.
pub struct Timer(Instant);

impl Timer {
    pub fn new() -> Self {
        Timer(Instant::now())
    }

    pub fn stage(&self, what: &str) {
        eprintln!("[{:>8.3}s] {what}", self.0.elapsed().as_secs_f64());
    }
}

impl Default for Timer {
    fn default() -> Self {
        Self::new()
    }
}

pub fn build<F: SpecField>(cfg: &RunConfig) -> Result<SchurContext<F>, CliError> {
    let q: F = cfg.params.q_in()?;
    let qinv = q.inv().ok_or_else(|| CliError::InvalidConfig("q is not invertible".into()))?;
    let h = HeckeAlgebra::new(cfg.n, cfg.r, q, qinv, cfg.params.big_q_in()?);
    Ok(SchurContext::new(h, Catalog::new(cfg.n, &cfg.m))?)
}

fn expansion_coverage(dim: usize, seed: u64) -> Coverage {
    if dim <= EXHAUSTIVE_LIMIT {
        Coverage::Exhaustive
    } else {
        Coverage::Sampled { count: SAMPLED_PRODUCTS, seed }
    }
}

fn pair_coverage(dim: usize, seed: u64) -> Coverage {
    if dim <= EXHAUSTIVE_LIMIT {
        Coverage::Exhaustive
    } else {
        Coverage::Sampled { count: SAMPLED_PAIRS, seed }
    }
}

fn rank_checks<F: Field>(cfg: &RunConfig, s: &SchurContext<F>) -> Vec<Check> {
    let expected = cfg.hecke_dim();
    let cat = &s.cat;
    let std_sq = cat.cellular_count() as u128;
    let hooks: u128 = cat.plus().iter().map(|l| multipartition_dim(l).pow(2)).sum();
    vec![
        Check::new("dim H = n!·rⁿ", s.h.dim() as u128 == expected).with_witness(format!("dim H = {}, n!·rⁿ = {expected}", s.h.dim())),
        Check::new("Σ_λ |Std(λ)|² = n!·rⁿ", std_sq == expected).with_witness(format!("Σ_λ |Std(λ)|² = {std_sq}")),
        Check::new("Σ_λ (dim S^λ)² = n!·rⁿ by hook lengths", hooks == expected).with_witness(format!("Σ = {hooks}")),
        // construction of the context fails on a singular change of basis
        Check::new("change of basis to the cellular basis is invertible", true),
        Check::new("dim S(Λ) = Σ_λ |T_0(λ)|²", s.dim() == cat.schur_count())
            .with_witness(format!("dim S(Λ) = {}, Σ = {}", s.dim(), cat.schur_count())),
    ]
}

pub fn dim<F: SpecField>(cfg: &RunConfig, t: &Timer) -> Result<Outcome, CliError> {
    let s = build::<F>(cfg)?;
    t.stage("S(Λ) built");
    let pc = ParabolicContext::new(&s, cfg.p.clone())?;
    let mc = ModifiedContext::new(&pc)?;
    t.stage("H̄^p built");
    let mut checks = rank_checks(cfg, &s);
    let bsum = block_sum(cfg.n, &cfg.p);
    checks.push(
        Check::new("dim H̄^p = Σ_α n_α² ∏_k n_k! r_k^{n_k} = n!·rⁿ", mc.dim() as u128 == bsum && bsum == cfg.hecke_dim())
            .with_witness(format!("dim H̄^p = {}, Σ_α = {bsum}", mc.dim())),
    );
    let blocks: Vec<Value> = pc
        .alphas()
        .iter()
        .map(|a| json!({ "alpha": a, "quotient_dim": pc.quotient_block(a).len() }))
        .collect();
    let data = json!({
        "hecke_dim": s.h.dim(),
        "cellular_count": s.cat.cellular_count(),
        "schur_dim": s.dim(),
        "parabolic_dim": pc.members().len(),
        "quotient_dim": pc.quotient_members().len(),
        "modified_dim": mc.dim(),
        "block_sum": bsum.to_string(),
        "blocks": blocks,
    });
    Ok(Outcome { checks, data })
}

pub fn decomp<F: SpecField>(cfg: &RunConfig, t: &Timer) -> Result<Outcome, CliError> {
    let s = build::<F>(cfg)?;
    t.stage("S(Λ) built");
    let d = decomposition_matrix(&s)?;
    t.stage("Weyl modules split");
    let oracle = decomposition_matrix_by_characters(&s)?;
    let weyl = weyl_modules(&s)?;
    let weyl_dims: Vec<usize> = weyl.iter().map(|w| w.dim()).collect();
    let simple_dims: Vec<usize> = weyl.iter().map(|w| w.simple_dim()).collect();
    let checks = vec![
        Check::new("decomposition matrix is unitriangular", d.is_unitriangular(&s.cat)),
        Check::new("Σ_μ [W^λ : L^μ] dim L^μ = dim W^λ", d.dimensions_consistent(&weyl_dims, &simple_dims)),
        Check::new("splitting agrees with weight characters", d == oracle),
        Check::new("Gram matrices are symmetric", weyl.iter().all(|w| w.gram_is_symmetric())),
    ];
    let data = json!({
        "matrix": d,
        "identity": d.is_identity(),
        "weyl_dims": weyl_dims,
        "simple_dims": simple_dims,
    });
    Ok(Outcome { checks, data })
}

pub fn verify<F: SpecField>(cfg: &RunConfig, suite: Suite, t: &Timer) -> Result<Outcome, CliError> {
    if matches!(suite, Suite::Presentation | Suite::Duality) {
        distinct_qp::<F>(cfg)?;
    }
    let s = build::<F>(cfg)?;
    t.stage("S(Λ) built");
    let pc = ParabolicContext::new(&s, cfg.p.clone())?;
    let seed = cfg.seed;
    let mut checks = Vec::new();
    let mut data = Value::Null;
    match suite {
        Suite::Cellular => {
            checks.extend(rank_checks(cfg, &s));
            checks.extend(defining_relations(&s.h));
            checks.extend(jm_annihilation(&s.h));
            checks.extend(jm_minimality(&s.h));
            checks.push(jm_commute(&s.h));
            checks.push(associativity(&s.h, &mut ChaCha8Rng::seed_from_u64(seed), 100));
            t.stage("relations of H");
            let rep = full_structure_check(&s, expansion_coverage(s.dim(), seed));
            checks.push(Check::from_witnesses("S(Λ) cellular", rep.violations).with_products(rep.products));
            t.stage("cellular expansions");
        }
        Suite::StandardlyBased => {
            let n = pc.members().len();
            checks.push(closure_check(&pc, pair_coverage(n, seed)));
            checks.push(support_shape_check(&pc, pair_coverage(n, seed.wrapping_add(1))));
            checks.push(standardly_based_check(&pc, expansion_coverage(n, seed.wrapping_add(2))));
            t.stage("S^p standardly based");
            let (mods, heads) = standard_module_checks(&pc);
            checks.extend(mods);
            checks.push(ideal_check(&pc, pair_coverage(n, seed.wrapping_add(3))));
            checks.push(quotient_structure_check(&pc, expansion_coverage(pc.quotient_members().len(), seed.wrapping_add(4))));
            checks.push(block_vanishing_check(&pc));
            t.stage("quotient");
            checks.push(product_decomposition_check(&pc));
            t.stage("S = S^p S^p*");
            let heads: Vec<Value> = heads
                .iter()
                .map(|(e, d)| json!({ "lambda": s.cat.plus()[e.lambda].to_arrays(), "eps": e.eps, "head_dim": d }))
                .collect();
            data = json!({ "parabolic_dim": n, "quotient_dim": pc.quotient_members().len(), "heads": heads });
        }
        Suite::Structure => {
            let fa = factor_contexts(&pc)?;
            t.stage("factor algebras");
            checks.extend(structure_iso_check(&pc, &fa)?);
        }
        Suite::ProductFormula | Suite::Transfer => {
            let full = decomposition_matrix(&s)?;
            t.stage("full algebra split");
            let bar = quotient_decomposition(&pc)?;
            t.stage("quotient split");
            checks.extend(transfer_check(&pc, &full, &bar));
            if suite == Suite::ProductFormula {
                let fa = factor_contexts(&pc)?;
                checks.push(product_formula_check(&pc, &fa, &full)?);
                t.stage("factor algebras split");
            } else {
                checks.extend(weyl_intertwining_check(&pc, &quotient_modules(&pc)));
            }
            data = json!({ "full": full, "quotient": bar });
        }
        Suite::Presentation => {
            let mc = ModifiedContext::new(&pc)?;
            let fam = xi_family(&mc)?;
            let bl = blocks(&mc, &fam)?;
            t.stage("H̄^p and its blocks");
            checks.extend(mc.invariant_checks());
            let weights: Vec<usize> = (0..s.cat.lambda().len()).collect();
            checks.extend(xi_checks(&mc, &fam, &weights));
            checks.extend(interpolation_checks(&mc, &fam)?);
            checks.extend(block_structure_checks(&mc, &bl)?);
            let mut reports = Vec::new();
            let mut probes = Vec::new();
            for b in &bl {
                let reps = T0Reading::ALL.iter().map(|&r| relation_report(&mc, &fam, b, r)).collect::<Result<Vec<_>, _>>()?;
                let alpha = &b.alpha;
                let relations_ok = reps.iter().any(|r| r.checks.iter().all(|c| c.passed));
                let witnesses = reps.iter().map(|r| format!("{} reading fails {:?}", r.reading, r.failed_names())).collect();
                checks.push(Check {
                    name: format!("(A1)–(A14) hold in H̄^p_α for α = {alpha:?} in some reading of T^[k]_α,0"),
                    passed: relations_ok,
                    witnesses: if relations_ok { Vec::new() } else { witnesses },
                    products: None,
                });
                let span = reps.iter().any(|r| r.span_rank == r.span_target && r.block_rank == r.span_target);
                checks.push(
                    Check::new(format!("spanning words reach dim H̄^p_α = n_α² ∏_k n_k! r_k^{{n_k}} for α = {alpha:?}"), span)
                        .with_witness(format!("ranks {:?}", reps.iter().map(|r| (r.span_rank, r.block_rank, r.span_target)).collect::<Vec<_>>())),
                );
                reports.extend(reps);
                probes.push(correction_probe(&mc, &fam, b)?);
            }
            checks.push(probe_summary(&probes));
            t.stage("relations (A1)–(A14)");
            data = json!({ "relations": reports, "probes": probes });
        }
        Suite::Duality => {
            let mc = ModifiedContext::new(&pc)?;
            let fam = xi_family(&mc)?;
            let bl = blocks(&mc, &fam)?;
            t.stage("H̄^p and its blocks");
            let rep = duality_report(&mc, &fam, &bl)?;
            t.stage("commutants");
            checks.extend(rep.checks.iter().cloned());
            checks.push(rep.unweighted_factorization.clone());
            data = json!({
                "dim_schur_bar": rep.dim_schur_bar,
                "dim_end_hbar": rep.dim_end_hbar,
                "dim_hbar": rep.dim_hbar,
                "dim_end_schur_bar": rep.dim_end_schur_bar,
            });
        }
        Suite::Separation => {
            let failures = separation_failures(&s.h);
            let separated = failures.is_empty();
            let refining: Vec<_> = shapes(cfg.r).into_iter().filter(|x| x.refines(&cfg.p)).collect();
            let pcs = refining.iter().map(|x| ParabolicContext::new(&s, x.clone())).collect::<Result<Vec<_>, _>>()?;
            let mcs = pcs.iter().map(ModifiedContext::new).collect::<Result<Vec<_>, _>>()?;
            t.stage("H̄^p' for every p' ⪯ p");
            let hd = s.h.dim();
            let mut ranks = Vec::new();
            for mc in &mcs {
                let (full, finite) = rho0_ranks(mc)?;
                if separated {
                    checks.push(
                        Check::new(format!("ρ_0 : H → H̄^{} is bijective", mc.pc.p), full == hd && mc.dim() == hd)
                            .with_witness(format!("rank {full}, dim H = {hd}, dim H̄ = {}", mc.dim())),
                    );
                }
                ranks.push(json!({ "p": mc.pc.p.parts(), "rank": full, "finite_rank": finite, "dim": mc.dim() }));
            }
            let top = mcs.iter().position(|mc| mc.pc.p == cfg.p).expect("p refines itself");
            for mc in &mcs {
                checks.extend(RhoMap::new(mc, &mcs[top])?.checks()?);
            }
            for mid in &mcs {
                for low in mcs.iter().filter(|l| l.pc.p.refines(&mid.pc.p)) {
                    checks.push(transitivity_check(low, mid, &mcs[top])?);
                }
            }
            t.stage("ρ maps");
            let failures: Vec<Value> = failures.iter().map(|(k, i, j)| json!({ "k": k, "i": i + 1, "j": j + 1 })).collect();
            data = json!({ "separated": separated, "collisions": failures, "rho0": ranks });
        }
    }
    Ok(Outcome { checks, data })
}

/// `Q^p_1, …, Q^p_g` pairwise distinct, needed to interpolate the block
/// idempotents.
fn distinct_qp<F: SpecField>(cfg: &RunConfig) -> Result<(), CliError> {
    let big_q: Vec<F> = cfg.params.big_q_in()?;
    let qp: Vec<&F> = (0..cfg.p.g()).map(|k| &big_q[cfg.p.last_component(k)]).collect();
    for (i, a) in qp.iter().enumerate() {
        for b in &qp[i + 1..] {
            if a == b {
                return Err(CliError::HypothesisNotMet(format!(
                    "Q^p = ({}) are not pairwise distinct",
                    qp.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
                )));
            }
        }
    }
    Ok(())
}
