//! The quotient `S̄^p = S^p / Ŝ^p`: the ideal property of `Ŝ^p`, the
//! cellular structure and block decomposition of `S̄^p`, its cell modules
//! `Z̄^λ`, and decomposition numbers over `S̄^p`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::context::ParabolicContext;
use super::standard::standard_module;
use super::ParabolicError;
use crate::check::{Check, Coverage};
use crate::combinatorics::{Epsilon, SemiRef};
use crate::exact_linear::Field;
use crate::schur::{
    module_by_composition, pairing_by_composition, split_decomposition, structure_report, CellModule,
    CellStructure, DecompositionMatrix, GeneratorShapes,
};

/// `Ŝ^p` is a two-sided ideal of `S^p`: `x·y` and `y·x` lie in the span of
/// `Ŝ^p` for `x ∈ C^p`, `y` in the ideal basis.
pub fn ideal_check<F: Field>(pc: &ParabolicContext<'_, F>, coverage: Coverage) -> Check {
    let s = pc.s;
    let ideal = pc.ideal_members();
    let mut bad = Vec::new();
    let mut test = |x: usize, y: usize| {
        for (a, b) in [(x, y), (y, x)] {
            for (i, _) in s.compose(a, b) {
                if !pc.is_member(i) || pc.in_quotient(i) {
                    bad.push(format!("{a}·{b} has term {i} outside Ŝ^p"));
                }
            }
        }
    };
    match coverage {
        Coverage::Exhaustive => {
            for &x in pc.members() {
                for &y in &ideal {
                    test(x, y);
                }
            }
        }
        Coverage::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = pc.members();
            for _ in 0..count {
                if ideal.is_empty() {
                    break;
                }
                test(m[rng.gen_range(0..m.len())], ideal[rng.gen_range(0..ideal.len())]);
            }
        }
    }
    Check::from_witnesses(format!("Ŝ^p is a two-sided ideal, p = {}", pc.p), bad)
}

/// Coefficient independence for `S̄^p` with cells `Λ⁺` (products
/// truncated to `C̄^p`).
pub fn quotient_structure_check<F: Field>(pc: &ParabolicContext<'_, F>, coverage: Coverage) -> Check {
    let cat = pc.cat();
    let cell_of = |i: usize| pc.in_quotient(i).then(|| pc.s.label(i).lambda);
    let greater = |a: usize, b: usize| cat.plus_dominates(a, b);
    let st = CellStructure { cell_of: &cell_of, greater: &greater, truncate: true };
    let rep = structure_report(pc.s, &st, pc.quotient_members(), coverage);
    let mut c = Check::from_witnesses(format!("S̄^p cellular, p = {}", pc.p), rep.violations).with_products(rep.products);
    if c.passed && rep.products == 0 {
        c.passed = false;
        c.witnesses.push("no products checked".into());
    }
    c
}

/// Products in `S̄^p` of basis elements from different blocks `S̄^p_α`
/// vanish.
pub fn block_vanishing_check<F: Field>(pc: &ParabolicContext<'_, F>) -> Check {
    let s = pc.s;
    let q = pc.quotient_members();
    let mut bad = Vec::new();
    for &x in q {
        for &y in q {
            if s.label(x).t.mu != s.label(y).s.mu || pc.alpha_of(x) == pc.alpha_of(y) {
                continue;
            }
            let prod = pc.quotient_mul(&[(x, s.one().clone())], &[(y, s.one().clone())]);
            if !prod.is_empty() {
                bad.push(format!("{x}·{y} crosses blocks"));
            }
        }
    }
    Check::from_witnesses("products across blocks of S̄^p vanish", bad)
}

/// Weight shapes of the generators `C̄^p`.
pub fn quotient_shapes<F: Field>(pc: &ParabolicContext<'_, F>) -> GeneratorShapes {
    let q = pc.quotient_members();
    GeneratorShapes {
        from: q.iter().map(|&i| pc.s.label(i).s.mu).collect(),
        to: q.iter().map(|&i| pc.s.label(i).t.mu).collect(),
    }
}

/// Positions in `T_0(λ)` of `T_0^p(λ)`.
fn t0p_positions<F: Field>(pc: &ParabolicContext<'_, F>, l: usize) -> Vec<usize> {
    let cat = pc.cat();
    pc.s
        .t0_list(l)
        .iter()
        .enumerate()
        .filter(|(_, r): &(usize, &SemiRef)| pc.sigma.in_t0p(cat, l, r.mu))
        .map(|(i, _)| i)
        .collect()
}

/// `Z̄^λ` for every `λ ∈ Λ⁺` with its Gram matrix `⟨ , ⟩_p`, by
/// composition in `S(Λ)` and truncation to `C̄^p`.
pub fn quotient_modules<F: Field>(pc: &ParabolicContext<'_, F>) -> Vec<CellModule<F>> {
    let s = pc.s;
    (0..pc.cat().plus().len())
        .map(|l| {
            let top = s.top_position(l);
            let basis = t0p_positions(pc, l);
            CellModule {
                lambda: l,
                module: module_by_composition(s, l, top, &basis, pc.quotient_members()),
                gram: pairing_by_composition(s, l, (top, top), &basis, &basis),
            }
        })
        .collect()
}

/// `[Z̄^λ : L̄^μ]` over `S̄^p`, by splitting.
pub fn quotient_decomposition<F: Field>(pc: &ParabolicContext<'_, F>) -> Result<DecompositionMatrix, ParabolicError> {
    let cells = quotient_modules(pc);
    Ok(split_decomposition(&quotient_shapes(pc), &cells, pc.cat().plus().to_vec())?)
}

/// `[Z̄^λ : L̄^μ] = [W^λ : L^μ]` whenever `α_p(λ) = α_p(μ)`, and
/// `[Z̄^λ : L̄^μ] = 0` otherwise.
pub fn transfer_check<F: Field>(
    pc: &ParabolicContext<'_, F>,
    full: &DecompositionMatrix,
    quotient: &DecompositionMatrix,
) -> Vec<Check> {
    let cat = pc.cat();
    let alpha = |l: usize| pc.sigma.alpha_p(cat.plus_in_lambda(l));
    let mut equal = Vec::new();
    let mut zero = Vec::new();
    for l in 0..full.size() {
        for m in 0..full.size() {
            let (d, e) = (full.get(l, m), quotient.get(l, m));
            if alpha(l) == alpha(m) {
                if d != e {
                    equal.push(format!("({}, {}): [W:L] = {d}, [Z̄:L̄] = {e}", full.labels[l], full.labels[m]));
                }
            } else if e != 0 {
                zero.push(format!("({}, {}): [Z̄:L̄] = {e} across blocks", full.labels[l], full.labels[m]));
            }
        }
    }
    vec![
        Check::from_witnesses(format!("[Z̄^λ : L̄^μ] = [W^λ : L^μ], p = {}", pc.p), equal),
        Check::from_witnesses("[Z̄^λ : L̄^μ] = 0 when α_p(λ) ≠ α_p(μ)", zero),
    ]
}

/// `Z^{(λ,0)} ≅ Z̄^λ` as `S^p`-modules through `φ^{(λ,0)}_T ↦ φ̄_T`:
/// generators in `C̄^p` act by the same matrices, those in `Ŝ^p` act by
/// zero, and `β_{(λ,0)}` is the Gram matrix of `Z̄^λ`. Also checks that
/// every `L̄^λ` is nonzero.
pub fn weyl_intertwining_check<F: Field>(pc: &ParabolicContext<'_, F>, quotient: &[CellModule<F>]) -> Vec<Check> {
    let mut bad = Vec::new();
    let mut zero_heads = Vec::new();
    let qpos: std::collections::HashMap<usize, usize> =
        pc.quotient_members().iter().enumerate().map(|(k, &i)| (i, k)).collect();
    for zbar in quotient {
        let l = zbar.lambda;
        let c = pc.sigma.position(Epsilon { lambda: l, eps: 0 }).expect("(λ,0) lies in Σ^p");
        let z = standard_module(pc, c);
        if z.module.weight_dims != zbar.module.weight_dims {
            bad.push(format!("λ = {l}: weight dimensions differ"));
            continue;
        }
        for (g, &i) in pc.members().iter().enumerate() {
            let expected = qpos.get(&i).and_then(|&k| zbar.module.actions[k].as_ref());
            if z.module.actions[g].as_ref() != expected {
                bad.push(format!("λ = {l}: generator {i} acts differently"));
            }
        }
        if z.pairing != zbar.gram {
            bad.push(format!("λ = {l}: β_(λ,0) differs from the Gram matrix"));
        }
        if zbar.simple_dim() == 0 {
            zero_heads.push(format!("L̄^λ = 0 for λ = {}", pc.cat().plus()[l]));
        }
    }
    vec![
        Check::from_witnesses("Z^(λ,0) ≅ Z̄^λ as S^p-modules", bad),
        Check::from_witnesses("every L̄^λ is nonzero", zero_heads),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::ParabolicShape;
    use crate::parabolic::context::tests::ctx;
    use crate::exact_linear::Ring;
    use crate::schur::decomposition_matrix;

    #[test]
    fn quotient_at_two_two() {
        let s = ctx(2, 2);
        let pc = ParabolicContext::new(&s, ParabolicShape::finest(2)).unwrap();
        assert!(ideal_check(&pc, Coverage::Exhaustive).passed);
        let c = quotient_structure_check(&pc, Coverage::Exhaustive);
        assert!(c.passed, "{:?}", c.witnesses);
        assert!(block_vanishing_check(&pc).passed);
        let zs = quotient_modules(&pc);
        for z in &zs {
            assert!(z.gram_is_symmetric());
            let w = s.cat.plus_in_lambda(z.lambda);
            assert!(z.gram[w].get(0, 0).is_one());
        }
        assert!(weyl_intertwining_check(&pc, &zs).iter().all(|c| c.passed));
        let full = decomposition_matrix(&s).unwrap();
        let bar = quotient_decomposition(&pc).unwrap();
        let checks = transfer_check(&pc, &full, &bar);
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }

    #[test]
    fn whole_shape_quotient_is_everything() {
        let s = ctx(2, 1);
        let pc = ParabolicContext::new(&s, ParabolicShape::whole(1)).unwrap();
        let full = decomposition_matrix(&s).unwrap();
        assert_eq!(quotient_decomposition(&pc).unwrap(), full);
    }
}
