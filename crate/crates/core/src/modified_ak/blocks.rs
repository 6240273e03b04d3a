//! The decomposition `H̄^p = ⊕_α H̄^p_α`: central idempotents `e_α`, the
//! projected generators `T_{α,j}`, `ξ_{α,i}`, the two readings of
//! `T^{[k]}_{α,0}`, the embedding of `H_{n_1,r_1} ⊗ ⋯ ⊗ H_{n_g,r_g}` as
//! block-diagonal matrices, `F_α` and `y_λ`.

use super::context::{Elem, ModifiedContext};
use super::xi::XiFamily;
use super::ModifiedError;
use crate::ariki_koike::{HVec, HeckeAlgebra};
use crate::combinatorics::MultiComp;
use crate::exact_linear::{EchelonBasis, Field};

/// Which element plays `T^{[k]}_{α,0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum T0Reading {
    /// `T_0^{[k]}` in every diagonal entry of `M_{n_α}(H_α)`:
    /// `m̄_Ω T^{[k]}_{α,0} = Σ_{ω ∈ Ω^α} m̄_ω L_{a_k+1} T_{d(ω)}`
    Diagonal,
    /// the displayed formula `m̄_Ω T^{[k]}_{α,0} = Σ_{ω ∈ Ω^α} m̄_ω T_{d(ω)} L_{a_k+1}`,
    /// that is `e_α ρ_0(L_{a_k+1})`
    Literal,
}

impl T0Reading {
    pub const ALL: [T0Reading; 2] = [T0Reading::Diagonal, T0Reading::Literal];

    pub fn name(self) -> &'static str {
        match self {
            T0Reading::Diagonal => "diagonal",
            T0Reading::Literal => "literal",
        }
    }
}

pub struct Block<F: Field> {
    pub alpha: Vec<usize>,
    /// `a_k = n_1 + ⋯ + n_{k-1}`
    pub a: Vec<usize>,
    /// positions in `Ω` of `Ω^α`
    pub omegas: Vec<usize>,
    /// the element of `Ω^α` with `d(ω) = 1`
    pub omega_alpha: usize,
    pub e: Elem<F>,
    /// `T_{α,j}` at index `j - 1`
    pub t: Vec<Elem<F>>,
    pub xi: Vec<Elem<F>>,
    /// `T^{[k]}_{α,0}` per reading; `None` for `n_k = 0`
    pub t0_diagonal: Vec<Option<Elem<F>>>,
    pub t0_literal: Vec<Option<Elem<F>>>,
    /// `H_{n_k, r_k}` for `n_k ≥ 1`
    pub factors: Vec<Option<HeckeAlgebra<F>>>,
}

impl<F: Field> Block<F> {
    pub fn t0(&self, reading: T0Reading) -> &[Option<Elem<F>>] {
        match reading {
            T0Reading::Diagonal => &self.t0_diagonal,
            T0Reading::Literal => &self.t0_literal,
        }
    }

    /// `n_α = n! / ∏ n_k!`.
    pub fn n_alpha(&self) -> usize {
        self.omegas.len()
    }

    /// `∏_k n_k! r_k^{n_k}`.
    pub fn factor_dim(&self) -> usize {
        self.factors.iter().flatten().map(HeckeAlgebra::dim).product()
    }

    pub fn scalar(&self, mc: &ModifiedContext<'_, F>, c: &F) -> Elem<F> {
        mc.scale(c, &self.e)
    }
}

/// Image in `H` of a word in the generators of `H_{n_k,r_k}`: `T_0 ↦ L_{a_k+1}`,
/// `T_i ↦ T_{a_k+i}`.
fn embed_word<F: Field>(a_k: usize, word: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &g in word {
        if g == 0 {
            out.extend(HeckeAlgebra::<F>::l_word(a_k + 1));
        } else {
            out.push(a_k + g);
        }
    }
    out
}

/// `ι_k(x) ∈ H` for `x ∈ H_{n_k,r_k}`, through basis words.
pub fn embed<F: Field>(h: &HeckeAlgebra<F>, factor: &HeckeAlgebra<F>, a_k: usize, x: &[F]) -> HVec<F> {
    let one = h.one();
    let mut out = h.zero();
    for (b, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = h.left_word(&embed_word::<F>(a_k, &factor.basis_word(b)), &one);
        for (o, y) in out.iter_mut().zip(&v) {
            o.add_mul(c, y);
        }
    }
    out
}

pub fn blocks<F: Field>(mc: &ModifiedContext<'_, F>, fam: &XiFamily<F>) -> Result<Vec<Block<F>>, ModifiedError> {
    let s = mc.s();
    let p = &mc.pc.p;
    let n = s.cat.n();
    let mut alphas: Vec<Vec<usize>> = Vec::new();
    for w in &mc.omegas {
        if !alphas.contains(&w.alpha) {
            alphas.push(w.alpha.clone());
        }
    }
    let identity = s.h.sym().identity_index();
    let mut out = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        let omegas: Vec<usize> = (0..mc.omegas.len()).filter(|&w| mc.omegas[w].alpha == alpha).collect();
        let omega_alpha = *omegas
            .iter()
            .find(|&&w| mc.d_index[w] == identity)
            .ok_or_else(|| ModifiedError::Inconsistent(format!("no ω with d(ω) = 1 for α = {alpha:?}")))?;
        let a = mc.omegas[omega_alpha].a.clone();
        let e = omegas.iter().fold(mc.zero(), |acc, &w| mc.add(&acc, &mc.phi_omega(w)));
        let t = fam.t.iter().map(|x| mc.mul(&e, x)).collect();
        let xi = fam.xi.iter().map(|x| mc.mul(&e, x)).collect();
        let factors: Vec<Option<HeckeAlgebra<F>>> = (0..p.g())
            .map(|k| {
                (alpha[k] > 0).then(|| {
                    let off = p.offset(k);
                    HeckeAlgebra::new(
                        alpha[k],
                        p.part(k),
                        s.h.q().clone(),
                        s.h.qinv.clone(),
                        s.h.big_q()[off..off + p.part(k)].to_vec(),
                    )
                })
            })
            .collect();
        let mut block = Block {
            alpha,
            a,
            omegas,
            omega_alpha,
            e,
            t,
            xi,
            t0_diagonal: Vec::new(),
            t0_literal: Vec::new(),
            factors,
        };
        for k in 0..p.g() {
            if block.alpha[k] == 0 {
                block.t0_diagonal.push(None);
                block.t0_literal.push(None);
                continue;
            }
            let f = block.factors[k].as_ref().expect("nonempty block");
            block.t0_diagonal.push(Some(delta_map(mc, &block, k, &f.t(0))?));
            let lit = mc.mul(&block.e, &mc.rho0(&s.h.l(block.a[k] + 1))?);
            block.t0_literal.push(Some(lit));
        }
        debug_assert_eq!(block.t.len(), n.saturating_sub(1));
        out.push(block);
    }
    Ok(out)
}

/// `δ_α(k, x)`: the block-diagonal element with `x ∈ H_{n_k,r_k}` in every
/// diagonal entry, i.e. `m̄_Ω δ_α(k, x) = Σ_{ω ∈ Ω^α} m̄_ω ι_k(x) T_{d(ω)}`.
pub fn delta_map<F: Field>(mc: &ModifiedContext<'_, F>, block: &Block<F>, k: usize, x: &[F]) -> Result<Elem<F>, ModifiedError> {
    let s = mc.s();
    let f = block.factors[k].as_ref().ok_or_else(|| ModifiedError::Inconsistent(format!("block {k} is empty")))?;
    let ix = embed(&s.h, f, block.a[k], x);
    mc.from_components(|w| {
        block.omegas.contains(&w).then(|| {
            let m = s.table.mul(s.m_weight(mc.omega_weight[w]), &ix);
            s.h.right_tw(&m, mc.d_index[w])
        })
    })
}

/// `δ_α` on a pure tensor `x_1 ⊗ ⋯ ⊗ x_g` (entries for empty blocks are ignored).
pub fn delta_tensor<F: Field>(mc: &ModifiedContext<'_, F>, block: &Block<F>, xs: &[HVec<F>]) -> Result<Elem<F>, ModifiedError> {
    let mut acc = block.e.clone();
    for (k, x) in xs.iter().enumerate() {
        if block.alpha[k] > 0 {
            acc = mc.mul(&acc, &delta_map(mc, block, k, x)?);
        }
    }
    Ok(acc)
}

/// `F_α = Δ^{-n} F_{ω_α}(ξ)`.
pub fn f_alpha<F: Field>(mc: &ModifiedContext<'_, F>, fam: &XiFamily<F>, block: &Block<F>) -> Result<Elem<F>, ModifiedError> {
    let n = fam.n() as u32;
    Ok(mc.scale(&fam.delta_inv()?.pow(n), &fam.f_omega(mc, block.omega_alpha)?))
}

/// `y_λ = δ_α(m_{λ^{[1]}} ⊗ ⋯ ⊗ m_{λ^{[g]}})` for `λ` with `α_p(λ) = α`.
pub fn y_lambda<F: Field>(mc: &ModifiedContext<'_, F>, block: &Block<F>, lambda: &MultiComp) -> Result<Elem<F>, ModifiedError> {
    let p = &mc.pc.p;
    let xs: Vec<HVec<F>> = (0..p.g())
        .map(|k| match &block.factors[k] {
            Some(f) => f.m_mu(&lambda.block(p, k)),
            None => Vec::new(),
        })
        .collect();
    delta_tensor(mc, block, &xs)
}

/// `H̄^0_α = δ_α(H_{n_1,r_1} ⊗ ⋯ ⊗ H_{n_g,r_g})`, spanned by images of
/// products of basis elements.
pub fn h0_basis<F: Field>(mc: &ModifiedContext<'_, F>, block: &Block<F>) -> Result<Vec<Elem<F>>, ModifiedError> {
    let mut images: Vec<Vec<Elem<F>>> = Vec::new();
    for (k, f) in block.factors.iter().enumerate() {
        if let Some(f) = f {
            images.push((0..f.dim()).map(|b| delta_map(mc, block, k, &f.basis(b))).collect::<Result<_, _>>()?);
        }
    }
    let mut acc = vec![block.e.clone()];
    for imgs in images {
        acc = acc.iter().flat_map(|x| imgs.iter().map(move |y| mc.mul(x, y))).collect();
    }
    Ok(acc)
}

/// The subalgebra of `H̄^p` generated by `gens` and containing `unit`, as
/// an echelon basis together with spanning elements.
pub fn generated_subalgebra<F: Field>(
    mc: &ModifiedContext<'_, F>,
    unit: &Elem<F>,
    gens: &[Elem<F>],
) -> (EchelonBasis<F>, Vec<Elem<F>>) {
    let mut ech = EchelonBasis::new(mc.dim());
    let mut elems = Vec::new();
    if ech.insert(unit) {
        elems.push(unit.clone());
    }
    let mut i = 0;
    while i < elems.len() {
        let v = elems[i].clone();
        for g in gens {
            let w = mc.mul(&v, g);
            if ech.insert(&w) {
                elems.push(w);
            }
        }
        i += 1;
    }
    (ech, elems)
}
