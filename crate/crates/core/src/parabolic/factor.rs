//! The factorisation `S̄^p_α ≅ S(Λ_{n_1}) ⊗ ⋯ ⊗ S(Λ_{n_g})` with
//! `n_k = α_k`, and the resulting product formula for decomposition
//! numbers.
//!
//! The `k`-th factor has `r_k = p_k` components, bounds `m^{[k]}` and
//! parameters `q`, `Q^{[k]}_j = Q_{p_1+⋯+p_{k-1}+j}`. A factor with
//! `n_k = 0` is the ground field, with the single basis element `0`.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use super::context::ParabolicContext;
use super::ParabolicError;
use crate::ariki_koike::HeckeAlgebra;
use crate::check::Check;
use crate::combinatorics::{split_semi, Catalog, MultiComp, ParabolicShape, SemiRef};
use crate::exact_linear::Field;
use crate::schur::{decomposition_matrix, DecompositionMatrix, SchurContext, SchurError};

/// One cyclotomic q-Schur algebra per block `k` and size `n_k ≥ 1`
/// occurring in some `α_p(λ)`.
pub struct FactorAlgebras<F: Field> {
    p: ParabolicShape,
    factors: BTreeMap<(usize, usize), Factor<F>>,
}

struct Factor<F: Field> {
    s: SchurContext<F>,
    d: OnceLock<DecompositionMatrix>,
}

/// Build the factor algebras needed for the blocks of `S̄^p`.
pub fn factor_contexts<F: Field>(pc: &ParabolicContext<'_, F>) -> Result<FactorAlgebras<F>, ParabolicError> {
    let s = pc.s;
    let p = &pc.p;
    let m = s.cat.m();
    let mut factors = BTreeMap::new();
    for alpha in pc.alphas() {
        for (k, &nk) in alpha.iter().enumerate() {
            if nk == 0 || factors.contains_key(&(k, nk)) {
                continue;
            }
            let (off, rk) = (p.offset(k), p.part(k));
            let h = HeckeAlgebra::new(
                nk,
                rk,
                s.h.q().clone(),
                s.h.qinv.clone(),
                s.h.big_q()[off..off + rk].to_vec(),
            );
            let fs = SchurContext::new(h, Catalog::new(nk, &m[off..off + rk]))?;
            factors.insert((k, nk), Factor { s: fs, d: OnceLock::new() });
        }
    }
    Ok(FactorAlgebras { p: p.clone(), factors })
}

impl<F: Field> FactorAlgebras<F> {
    pub fn factor(&self, k: usize, nk: usize) -> Option<&SchurContext<F>> {
        self.factors.get(&(k, nk)).map(|f| &f.s)
    }

    /// `dim S(Λ_{n_1}) ⋯ dim S(Λ_{n_g})`.
    pub fn tensor_dim(&self, alpha: &[usize]) -> usize {
        alpha
            .iter()
            .enumerate()
            .map(|(k, &nk)| self.factor(k, nk).map_or(1, SchurContext::dim))
            .product()
    }

    /// Image of `φ̄_{ST}` (a basis index in `C̄^p`) under
    /// `φ̄_{ST} ↦ φ_{S^{[1]}T^{[1]}} ⊗ ⋯ ⊗ φ_{S^{[g]}T^{[g]}}`, as one
    /// basis index per factor.
    pub fn basis_image(&self, pc: &ParabolicContext<'_, F>, i: usize) -> Result<Vec<usize>, ParabolicError> {
        let cat = pc.cat();
        let lb = pc.s.label(i);
        let lam = &cat.plus()[lb.lambda];
        let alpha = pc.alpha_of(i);
        let split = |r: SemiRef| split_semi(&cat.t0(lb.lambda, r.mu)[r.idx], lam, &self.p);
        let (ss, ts) = (split(lb.s)?, split(lb.t)?);
        let missing = || ParabolicError::Schur(SchurError::Inconsistent(format!("basis element {i} has no factor image")));
        let mut out = Vec::with_capacity(self.p.g());
        for (k, &nk) in alpha.iter().enumerate() {
            let Some(f) = self.factor(k, nk) else {
                out.push(0);
                continue;
            };
            let lk = f.cat.plus_index(&lam.block(&self.p, k)).ok_or_else(missing)?;
            let locate = |r: SemiRef, t: &crate::combinatorics::SemiTableau| -> Option<usize> {
                let w: &MultiComp = &cat.lambda()[r.mu];
                let wk = f.cat.lambda_index(&w.block(&self.p, k))?;
                let idx = f.cat.t0_index(lk, wk, t)?;
                f.position(lk, SemiRef { mu: wk, idx })
            };
            let ps = locate(lb.s, &ss[k]).ok_or_else(missing)?;
            let pt = locate(lb.t, &ts[k]).ok_or_else(missing)?;
            out.push(f.index(lk, ps, pt));
        }
        Ok(out)
    }

    /// Product in the tensor product of the factors, on pure tensors of
    /// basis elements.
    pub fn tensor_mul(&self, alpha: &[usize], x: &[usize], y: &[usize]) -> Vec<(Vec<usize>, F)> {
        let mut acc: Vec<(Vec<usize>, Option<F>)> = vec![(Vec::new(), None)];
        for (k, &nk) in alpha.iter().enumerate() {
            let Some(f) = self.factor(k, nk) else {
                for (t, _) in acc.iter_mut() {
                    t.push(0);
                }
                continue;
            };
            let prod = f.compose(x[k], y[k]);
            let mut next = Vec::with_capacity(acc.len() * prod.len());
            for (t, c) in &acc {
                for (i, v) in &prod {
                    let mut t2 = t.clone();
                    t2.push(*i);
                    next.push((t2, Some(c.as_ref().map_or_else(|| v.clone(), |c| c.mul(v)))));
                }
            }
            acc = next;
            if acc.is_empty() {
                break;
            }
        }
        acc.into_iter()
            .filter_map(|(t, c)| c.map(|c| (t, c)))
            .collect()
    }

    /// `[W^λ : L^μ]` over the `k`-th factor for sizes `n_k`.
    fn factor_decomposition(&self, k: usize, nk: usize) -> Result<&DecompositionMatrix, ParabolicError> {
        let f = &self.factors[&(k, nk)];
        if let Some(d) = f.d.get() {
            return Ok(d);
        }
        let d = decomposition_matrix(&f.s)?;
        Ok(f.d.get_or_init(|| d))
    }

    /// `∏_k [W^{λ^{[k]}} : L^{μ^{[k]}}]` for `α_p(λ) = α_p(μ) = α`.
    pub fn product_number(&self, alpha: &[usize], lam: &MultiComp, mu: &MultiComp) -> Result<usize, ParabolicError> {
        let mut acc = 1;
        for (k, &nk) in alpha.iter().enumerate() {
            let Some(f) = self.factor(k, nk) else { continue };
            let d = self.factor_decomposition(k, nk)?;
            let idx = |x: &MultiComp| {
                f.cat
                    .plus_index(&x.block(&self.p, k))
                    .ok_or_else(|| ParabolicError::Schur(SchurError::Inconsistent(format!("{x} has no block {k}"))))
            };
            acc *= d.get(idx(lam)?, idx(mu)?);
        }
        Ok(acc)
    }
}

/// `S̄^p_α` and `⊗_k S(Λ_{n_k})`: equal dimensions, a bijective basis
/// map, and identical structure constants on every pair of basis
/// elements.
pub fn structure_iso_check<F: Field>(
    pc: &ParabolicContext<'_, F>,
    fa: &FactorAlgebras<F>,
) -> Result<Vec<Check>, ParabolicError> {
    let s = pc.s;
    let mut dims = Vec::new();
    let mut bij = Vec::new();
    let mut mult = Vec::new();
    let mut image: HashMap<usize, Vec<usize>> = HashMap::new();
    for &i in pc.quotient_members() {
        image.insert(i, fa.basis_image(pc, i)?);
    }
    for alpha in pc.alphas() {
        let block = pc.quotient_block(&alpha);
        let td = fa.tensor_dim(&alpha);
        if block.len() != td {
            dims.push(format!("α = {alpha:?}: dim S̄^p_α = {}, tensor product {td}", block.len()));
        }
        let mut seen: HashMap<&Vec<usize>, usize> = HashMap::new();
        for &i in &block {
            if let Some(j) = seen.insert(&image[&i], i) {
                bij.push(format!("α = {alpha:?}: {i} and {j} have the same image"));
            }
        }
        for &x in &block {
            for &y in &block {
                let lhs = pc.quotient_mul(&[(x, s.one().clone())], &[(y, s.one().clone())]);
                let mut l: Vec<(Vec<usize>, F)> = lhs.into_iter().map(|(i, c)| (image[&i].clone(), c)).collect();
                l.sort_by(|a, b| a.0.cmp(&b.0));
                let mut r = fa.tensor_mul(&alpha, &image[&x], &image[&y]);
                r.sort_by(|a, b| a.0.cmp(&b.0));
                if l != r {
                    mult.push(format!("α = {alpha:?}: structure constants of {x}·{y} differ"));
                }
            }
        }
    }
    Ok(vec![
        Check::from_witnesses("dim S̄^p_α = ∏ dim S(Λ_{n_k})", dims),
        Check::from_witnesses("basis map S̄^p_α → ⊗ S(Λ_{n_k}) is bijective", bij),
        Check::from_witnesses(format!("S̄^p_α ≅ ⊗ S(Λ_{{n_k}}) as algebras, p = {}", pc.p), mult),
    ])
}

/// `[W^λ : L^μ] = ∏_k [W^{λ^{[k]}} : L^{μ^{[k]}}]` whenever
/// `α_p(λ) = α_p(μ)`.
pub fn product_formula_check<F: Field>(
    pc: &ParabolicContext<'_, F>,
    fa: &FactorAlgebras<F>,
    full: &DecompositionMatrix,
) -> Result<Check, ParabolicError> {
    let cat = pc.cat();
    let mut bad = Vec::new();
    for l in 0..full.size() {
        let alpha = pc.sigma.alpha_p(cat.plus_in_lambda(l));
        for m in 0..full.size() {
            if pc.sigma.alpha_p(cat.plus_in_lambda(m)) != alpha {
                continue;
            }
            let prod = fa.product_number(alpha, &cat.plus()[l], &cat.plus()[m])?;
            if prod != full.get(l, m) {
                bad.push(format!(
                    "({}, {}): [W:L] = {}, product = {prod}",
                    cat.plus()[l],
                    cat.plus()[m],
                    full.get(l, m)
                ));
            }
        }
    }
    Ok(Check::from_witnesses(format!("[W^λ : L^μ] = ∏_k [W^λ[k] : L^μ[k]], p = {}", pc.p), bad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::context::tests::ctx;

    #[test]
    fn factorisation_at_two_two() {
        let s = ctx(2, 2);
        let pc = ParabolicContext::new(&s, ParabolicShape::finest(2)).unwrap();
        let fa = factor_contexts(&pc).unwrap();
        let checks = structure_iso_check(&pc, &fa).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        let full = decomposition_matrix(&s).unwrap();
        assert!(product_formula_check(&pc, &fa, &full).unwrap().passed);
        // α = (1,1): a tensor square of S(Λ_1), Λ_1 = {(1), (0,1)}
        assert_eq!(fa.tensor_dim(&[1, 1]), 16);
        assert_eq!(fa.tensor_dim(&[2, 0]), fa.factor(0, 2).unwrap().dim());
    }

    #[test]
    fn whole_shape_is_identity() {
        let s = ctx(2, 2);
        let pc = ParabolicContext::new(&s, ParabolicShape::whole(2)).unwrap();
        let fa = factor_contexts(&pc).unwrap();
        assert_eq!(fa.tensor_dim(&[2]), s.dim());
        assert!(structure_iso_check(&pc, &fa).unwrap().iter().all(|c| c.passed));
    }
}
