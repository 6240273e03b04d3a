//! `ρ_0 : H → H̄^p` and the comparison maps `ρ_{p'p} : H̄^p → H̄^{p'}` for
//! `p' ⪯ p`.
//!
//! `ρ_{p'p}(h)` is read off from the action of `h` on `M̄_p`, passed to the
//! quotient `M̄_{p'}`: for `ω' ∈ Ω_{p'}` the vector `m̄_{ω'} T_{d(ω')}` is
//! formed in `M̄_p^{ω'}`, acted on by `h`, and truncated to the basis of
//! `M̄_{p'}^{ω'}`; the results assemble to `m̄_{Ω'} ρ_{p'p}(h)`.

use std::collections::HashMap;

use super::context::{Elem, ModifiedContext};
use super::ModifiedError;
use crate::ariki_koike::HeckeAlgebra;
use crate::check::Check;
use crate::exact_linear::{EchelonBasis, Field, Matrix};

/// `ρ_{p'p}` for `fine = H̄^{p'}`, `coarse = H̄^p`, with `p' ⪯ p` and both
/// built on the same `S(Λ)`.
pub struct RhoMap<'c, 'a, F: Field> {
    pub fine: &'c ModifiedContext<'a, F>,
    pub coarse: &'c ModifiedContext<'a, F>,
    /// per `ω'`: the vector `m̄_{ω'} T_{d(ω')}` in `M̄_p^{ω'}` and, for each
    /// basis vector of `M̄_{p'}^{ω'}`, its position in `M̄_p^{ω'}`
    seeds: Vec<(Vec<F>, Vec<usize>)>,
}

impl<'c, 'a, F: Field> RhoMap<'c, 'a, F> {
    pub fn new(fine: &'c ModifiedContext<'a, F>, coarse: &'c ModifiedContext<'a, F>) -> Result<Self, ModifiedError> {
        if !std::ptr::eq(fine.s(), coarse.s()) {
            return Err(ModifiedError::Inconsistent("ρ_{p'p} needs both algebras over one S(Λ)".into()));
        }
        if !fine.pc.p.refines(&coarse.pc.p) {
            return Err(ModifiedError::Inconsistent(format!("{} does not refine {}", fine.pc.p, coarse.pc.p)));
        }
        let mut seeds = Vec::with_capacity(fine.omegas.len());
        for w in 0..fine.omegas.len() {
            let mu = fine.omega_weight[w];
            let (bp, bf) = (coarse.bar(mu), fine.bar(mu));
            let v = bp
                .coords(fine.m_omega_d(w))
                .ok_or_else(|| ModifiedError::Inconsistent("m_ω T_{d(ω)} outside M^ω".into()))?;
            let pos: HashMap<_, _> = bp.labels().into_iter().enumerate().map(|(j, l)| (l, j)).collect();
            let idx = bf
                .labels()
                .into_iter()
                .map(|l| pos.get(&l).copied())
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| ModifiedError::Inconsistent("M̄_{p'} has a basis vector killed in M̄_p".into()))?;
            seeds.push((v, idx));
        }
        Ok(RhoMap { fine, coarse, seeds })
    }

    pub fn apply(&self, h: &[F]) -> Result<Elem<F>, ModifiedError> {
        let hs = self.coarse.to_schur(h);
        self.fine.from_component_coords(|w| {
            let mu = self.fine.omega_weight[w];
            let (v, idx) = &self.seeds[w];
            let img = self.coarse.bar(mu).act(self.coarse.pc, v, &hs)?;
            Ok(idx.iter().map(|&j| img[j].clone()).collect())
        })
    }

    /// Homomorphism property on all basis pairs, `ρ(1) = 1`, and
    /// `ρ_{p'p} ∘ ρ_0^p = ρ_0^{p'}` on the generators of `H`.
    pub fn checks(&self) -> Result<Vec<Check>, ModifiedError> {
        let (fine, coarse) = (self.fine, self.coarse);
        let images: Vec<Elem<F>> = (0..coarse.dim()).map(|k| self.apply(&coarse.basis_elem(k))).collect::<Result<_, _>>()?;
        let mut bad = Vec::new();
        for a in 0..coarse.dim() {
            for b in 0..coarse.dim() {
                let ab = coarse.mul(&coarse.basis_elem(a), &coarse.basis_elem(b));
                let lhs = combine(fine, &images, &ab);
                if lhs != fine.mul(&images[a], &images[b]) {
                    bad.push(format!("basis pair ({a}, {b})"));
                }
            }
        }
        let name = format!("ρ_{{{}{}}} is multiplicative", fine.pc.p, coarse.pc.p);
        let mut out = vec![Check::from_witnesses(name, bad)];
        out.push(Check::new("ρ_{p'p}(φ̄_Ω) = φ̄_{Ω'}", combine(fine, &images, &coarse.one()) == fine.one()));
        let h = &fine.s().h;
        let mut bad = Vec::new();
        for i in 0..h.n() {
            let g = h.t(i);
            if combine(fine, &images, &coarse.rho0(&g)?) != fine.rho0(&g)? {
                bad.push(format!("T_{i}"));
            }
        }
        out.push(Check::from_witnesses("ρ_{p'p} ∘ ρ_0^p = ρ_0^{p'}", bad));
        Ok(out)
    }

    /// Matrix of `ρ_{p'p}` (row `k` is the image of the `k`-th basis element).
    pub fn matrix(&self) -> Result<Matrix<F>, ModifiedError> {
        let rows = (0..self.coarse.dim()).map(|k| self.apply(&self.coarse.basis_elem(k))).collect::<Result<_, _>>()?;
        Ok(Matrix::from_rows(rows, self.fine.zero_scalar()))
    }
}

fn combine<F: Field>(mc: &ModifiedContext<'_, F>, images: &[Elem<F>], x: &[F]) -> Elem<F> {
    let mut out = mc.zero();
    for (c, img) in x.iter().zip(images) {
        if !c.is_zero() {
            out = mc.add(&out, &mc.scale(c, img));
        }
    }
    out
}

/// `ρ_{p''p} = ρ_{p''p'} ∘ ρ_{p'p}` on the basis of `H̄^p`.
pub fn transitivity_check<F: Field>(
    low: &ModifiedContext<'_, F>,
    mid: &ModifiedContext<'_, F>,
    high: &ModifiedContext<'_, F>,
) -> Result<Check, ModifiedError> {
    let direct = RhoMap::new(low, high)?.matrix()?;
    let via = RhoMap::new(mid, high)?.matrix()?.mul(&RhoMap::new(low, mid)?.matrix()?);
    let name = format!("ρ_{{{}{}}} = ρ_{{{}{}}} ∘ ρ_{{{}{}}}", low.pc.p, high.pc.p, low.pc.p, mid.pc.p, mid.pc.p, high.pc.p);
    Ok(Check::new(name, direct == via))
}

/// Rank of `ρ_0` on all of `H`, and on `H_n = ⟨T_1, …, T_{n-1}⟩`.
pub fn rho0_ranks<F: Field>(mc: &ModifiedContext<'_, F>) -> Result<(usize, usize), ModifiedError> {
    let h = &mc.s().h;
    let mut full = EchelonBasis::new(mc.dim());
    for b in 0..h.dim() {
        full.insert(&mc.rho0(&h.basis(b))?);
    }
    let mut fin = EchelonBasis::new(mc.dim());
    for w in 0..h.sym().order() {
        fin.insert(&mc.rho0(&h.t_w(w))?);
    }
    Ok((full.rank(), fin.rank()))
}

/// Separation of the parameters: `q^{2k} Q_i - Q_j ≠ 0` for `|k| < n`,
/// `i ≠ j`. Returns the offending `(k, i, j)` triples (0-based `i`, `j`).
pub fn separation_failures<F: Field>(h: &HeckeAlgebra<F>) -> Vec<(i64, usize, usize)> {
    let n = h.n() as i64;
    let big_q = h.big_q();
    let q2 = h.q().mul(h.q());
    let q2inv = h.qinv.mul(&h.qinv);
    let mut out = Vec::new();
    for k in 1 - n..n {
        let base = if k >= 0 { &q2 } else { &q2inv };
        let scale = base.pow(k.unsigned_abs() as u32);
        for (i, qi) in big_q.iter().enumerate() {
            for (j, qj) in big_q.iter().enumerate() {
                if i != j && scale.mul(qi).sub(qj).is_zero() {
                    out.push((k, i, j));
                }
            }
        }
    }
    out
}
