//! `S^p` as a standardly based algebra: closure and support shapes of
//! products, coefficient independence, and the modules `Z^ε` with their
//! pairings `β_ε` and heads `L^ε`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::context::ParabolicContext;
use crate::check::{Check, Coverage};
use crate::combinatorics::Epsilon;
use crate::exact_linear::{Field, Matrix};
use crate::schur::{module_by_composition, pairing_by_composition, structure_report, CellStructure, FiniteModule};

/// Basis pairs `(x, y)` of `C^p` with `x·y` possibly nonzero.
fn composable_pairs<F: Field>(pc: &ParabolicContext<'_, F>, coverage: Coverage) -> Vec<(usize, usize)> {
    let s = pc.s;
    let mut by_source: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &i in pc.members() {
        by_source.entry(s.label(i).s.mu).or_default().push(i);
    }
    let empty = Vec::new();
    let partners = |x: usize| by_source.get(&s.label(x).t.mu).unwrap_or(&empty);
    match coverage {
        Coverage::Exhaustive => pc
            .members()
            .iter()
            .flat_map(|&x| partners(x).iter().map(move |&y| (x, y)))
            .collect(),
        Coverage::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = pc.members();
            let mut out = Vec::with_capacity(count);
            while out.len() < count && !m.is_empty() {
                let x = m[rng.gen_range(0..m.len())];
                let ys = partners(x);
                if !ys.is_empty() {
                    out.push((x, ys[rng.gen_range(0..ys.len())]));
                }
            }
            out
        }
    }
}

/// Products of basis elements of `C^p` stay in the span of `C^p`.
pub fn closure_check<F: Field>(pc: &ParabolicContext<'_, F>, coverage: Coverage) -> Check {
    let mut bad = Vec::new();
    for (x, y) in composable_pairs(pc, coverage) {
        for (i, _) in pc.s.compose(x, y) {
            if !pc.is_member(i) {
                bad.push(format!("{x}·{y} has term {i} outside C^p"));
            }
        }
    }
    Check::from_witnesses("closure of C^p", bad)
}

/// Where a product `x·y` of two basis elements may land:
///
/// * `x ∈ (λ₁, 0)`: cell `(λ₁, 0)` or cells of strictly more dominant `λ`;
/// * `x ∈ (λ₁, 1)` or `y ∈ (λ₂, 1)`: cells `(λ, 1)` with `λ ⊵ λᵢ`;
/// * `y ∈ (λ₂, 0)`: cells `(λ₂, 0)`, `(λ₂, 1)` or of strictly more
///   dominant `λ`. Left multiplication may push the left tableau below
///   `a_p(λ₂)`, so `(λ₂, 1)` cannot be excluded here.
pub fn support_shape_check<F: Field>(pc: &ParabolicContext<'_, F>, coverage: Coverage) -> Check {
    let cat = pc.cat();
    let above = |t: Epsilon, f: Epsilon| cat.plus_dominates(t.lambda, f.lambda);
    let left_ok = |f: Epsilon, t: Epsilon| {
        if f.eps == 0 {
            t == f || above(t, f)
        } else {
            t.eps == 1 && (t.lambda == f.lambda || above(t, f))
        }
    };
    let right_ok = |f: Epsilon, t: Epsilon| {
        if f.eps == 0 {
            t.lambda == f.lambda || above(t, f)
        } else {
            t.eps == 1 && (t.lambda == f.lambda || above(t, f))
        }
    };
    let mut bad = Vec::new();
    for (x, y) in composable_pairs(pc, coverage) {
        let ex = pc.epsilon(pc.cell_of(x).unwrap());
        let ey = pc.epsilon(pc.cell_of(y).unwrap());
        for (i, _) in pc.s.compose(x, y) {
            let Some(c) = pc.cell_of(i) else {
                bad.push(format!("{x}·{y} has term {i} outside C^p"));
                continue;
            };
            let et = pc.epsilon(c);
            if !left_ok(ex, et) || !right_ok(ey, et) {
                bad.push(format!("{x}·{y} has term {i} in cell {:?}", (et.lambda, et.eps)));
            }
        }
    }
    Check::from_witnesses("support shapes of products in S^p", bad)
}

/// Coefficient independence for `S^p` with cells `Σ^p`, modulo
/// `(S^p)^{∨ε}`.
pub fn standardly_based_check<F: Field>(pc: &ParabolicContext<'_, F>, coverage: Coverage) -> Check {
    let cat = pc.cat();
    let cell_of = |i: usize| pc.cell_of(i);
    let greater = |a: usize, b: usize| pc.sigma.greater(cat, a, b);
    let st = CellStructure { cell_of: &cell_of, greater: &greater, truncate: false };
    let rep = structure_report(pc.s, &st, pc.members(), coverage);
    let mut c = Check::from_witnesses(format!("S^p standardly based, p = {}", pc.p), rep.violations).with_products(rep.products);
    if c.passed && rep.products == 0 {
        c.passed = false;
        c.witnesses.push("no products checked".into());
    }
    c
}

/// `Z^ε` as a right `S^p`-module together with `β_ε`.
#[derive(Clone, Debug)]
pub struct StandardModule<F: Field> {
    pub epsilon: Epsilon,
    /// actions of the generators `C^p`, in the order of
    /// [`ParabolicContext::members`]
    pub module: FiniteModule<F>,
    /// `β_ε` per weight: rows `T ∈ J^p(ε)`, columns `S ∈ I^p(ε)`
    pub pairing: Vec<Matrix<F>>,
}

impl<F: Field> StandardModule<F> {
    /// `dim L^ε`, the rank of `β_ε`.
    pub fn head_dim(&self) -> usize {
        self.pairing.iter().map(Matrix::rank).sum()
    }
}

fn positions<F: Field>(pc: &ParabolicContext<'_, F>, l: usize, refs: &[crate::combinatorics::SemiRef]) -> Vec<usize> {
    let mut v: Vec<usize> = refs.iter().map(|&r| pc.s.position(l, r).expect("tableau of λ")).collect();
    v.sort_unstable();
    v
}

/// `Z^ε` for the `c`-th element of `Σ^p`, read off with the left tableau
/// fixed at the first element of `I^p(ε)`.
pub fn standard_module<F: Field>(pc: &ParabolicContext<'_, F>, c: usize) -> StandardModule<F> {
    standard_module_at(pc, c, false)
}

fn standard_module_at<F: Field>(pc: &ParabolicContext<'_, F>, c: usize, last: bool) -> StandardModule<F> {
    let e = pc.epsilon(c);
    let l = e.lambda;
    let iset = positions(pc, l, pc.sigma.i_set(c));
    let jset = positions(pc, l, pc.sigma.j_set(c));
    let pick = |v: &[usize]| if last { *v.last().unwrap() } else { v[0] };
    let (u, v) = (pick(&iset), pick(&jset));
    StandardModule {
        epsilon: e,
        module: module_by_composition(pc.s, l, u, &jset, pc.members()),
        pairing: pairing_by_composition(pc.s, l, (u, v), &jset, &iset),
    }
}

/// The structure of every `Z^ε` and `β_ε` is independent of the fixed
/// tableaux used to read it off, and `f_{T^λ T^λ} = 1` on the cells
/// `(λ, 0)`. Reports `dim L^ε` for every `ε` along the way.
pub fn standard_module_checks<F: Field>(pc: &ParabolicContext<'_, F>) -> (Vec<Check>, Vec<(Epsilon, usize)>) {
    let mut indep = Vec::new();
    let mut top = Vec::new();
    let mut heads = Vec::new();
    for c in 0..pc.sigma.elems().len() {
        let a = standard_module_at(pc, c, false);
        let b = standard_module_at(pc, c, true);
        let e = a.epsilon;
        if a.module.actions != b.module.actions || a.pairing != b.pairing {
            indep.push(format!("ε = ({}, {}) depends on the fixed tableaux", e.lambda, e.eps));
        }
        if e.eps == 0 {
            let w = pc.cat().plus_in_lambda(e.lambda);
            if !a.pairing[w].get(0, 0).is_one() {
                top.push(format!("f_(T^λ T^λ) ≠ 1 for λ = {}", e.lambda));
            }
        }
        heads.push((e, a.head_dim()));
    }
    (
        vec![
            Check::from_witnesses("Z^ε and β_ε independent of the fixed tableaux", indep),
            Check::from_witnesses("β_(λ,0)(T^λ, T^λ) = 1", top),
        ],
        heads,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::ParabolicShape;
    use crate::parabolic::context::tests::ctx;

    #[test]
    fn finest_shape_at_two_two() {
        let s = ctx(2, 2);
        let pc = ParabolicContext::new(&s, ParabolicShape::finest(2)).unwrap();
        assert!(closure_check(&pc, Coverage::Exhaustive).passed);
        let c = support_shape_check(&pc, Coverage::Exhaustive);
        assert!(c.passed, "{:?}", c.witnesses);
        let c = standardly_based_check(&pc, Coverage::Exhaustive);
        assert!(c.passed, "{:?}", c.witnesses);
        let (checks, heads) = standard_module_checks(&pc);
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        // every L^(λ,0) is nonzero
        assert!(heads.iter().filter(|(e, _)| e.eps == 0).all(|(_, d)| *d > 0));
    }

    #[test]
    fn whole_shape_reduces_to_cellularity() {
        let s = ctx(2, 2);
        let pc = ParabolicContext::new(&s, ParabolicShape::whole(2)).unwrap();
        assert!(standardly_based_check(&pc, Coverage::Sampled { count: 20, seed: 3 }).passed);
        assert!(pc.sigma.elems().iter().all(|e| e.eps == 0));
    }
}
