//! The commuting elements `ξ_i = Σ_ω Q^p_{b_ω(i)} φ̄_ω`, the interpolation
//! polynomials `F_c` and the products `F_ω(ξ)`, and the commutation
//! formulas between `T_j` and `ξ_k`.

use super::context::{Elem, ModifiedContext};
use super::ModifiedError;
use crate::check::Check;
use crate::exact_linear::{vandermonde_data, Field, VandermondeData};

pub struct XiFamily<F: Field> {
    /// `ξ_1, ..., ξ_n` (0-based)
    pub xi: Vec<Elem<F>>,
    /// `Q^p_1, ..., Q^p_g`
    pub qp: Vec<F>,
    /// `T_1, ..., T_{n-1}` as `ρ_0(T_j)` (index `j - 1`)
    pub t: Vec<Elem<F>>,
    /// `Δ` and `F_1, ..., F_g`; `None` if the `Q^p_k` repeat
    pub vd: Option<VandermondeData<F>>,
}

pub fn xi_family<F: Field>(mc: &ModifiedContext<'_, F>) -> Result<XiFamily<F>, ModifiedError> {
    let s = mc.s();
    let p = &mc.pc.p;
    let big_q = s.h.big_q();
    let qp: Vec<F> = (0..p.g()).map(|k| big_q[p.last_component(k)].clone()).collect();
    let n = s.cat.n();
    let mut xi = vec![mc.zero(); n];
    for w in 0..mc.omegas.len() {
        let e = mc.phi_omega(w);
        for (i, x) in xi.iter_mut().enumerate() {
            *x = mc.add(x, &mc.scale(&qp[mc.omegas[w].blocks[i]], &e));
        }
    }
    let t = (1..n).map(|j| mc.rho0(&s.h.t(j))).collect::<Result<_, _>>()?;
    let vd = vandermonde_data(&qp, s.one()).ok();
    Ok(XiFamily { xi, qp, t, vd })
}

impl<F: Field> XiFamily<F> {
    pub fn n(&self) -> usize {
        self.xi.len()
    }

    pub fn g(&self) -> usize {
        self.qp.len()
    }

    pub fn vandermonde(&self) -> Result<&VandermondeData<F>, ModifiedError> {
        self.vd.as_ref().ok_or(ModifiedError::RepeatedParameter)
    }

    /// `Δ^{-1}`.
    pub fn delta_inv(&self) -> Result<F, ModifiedError> {
        self.vandermonde()?.delta.inv().ok_or(ModifiedError::RepeatedParameter)
    }

    /// `F_c(x)` for `c` 0-based.
    pub fn f_poly(&self, mc: &ModifiedContext<'_, F>, c: usize, x: &[F]) -> Result<Elem<F>, ModifiedError> {
        let coeffs = &self.vandermonde()?.coeffs[c];
        // Horner
        let mut acc = mc.zero();
        for a in coeffs.iter().rev() {
            acc = mc.add(&mc.mul(&acc, x), &mc.scalar(a));
        }
        Ok(acc)
    }

    /// `F_{c_1}(x_1) ⋯ F_{c_n}(x_n)` for `c = blocks` and elements `xs`.
    pub fn f_product(&self, mc: &ModifiedContext<'_, F>, blocks: &[usize], xs: &[Elem<F>]) -> Result<Elem<F>, ModifiedError> {
        let mut acc = mc.one();
        for (c, x) in blocks.iter().zip(xs) {
            acc = mc.mul(&acc, &self.f_poly(mc, *c, x)?);
        }
        Ok(acc)
    }

    /// `F_ω(ξ)`.
    pub fn f_omega(&self, mc: &ModifiedContext<'_, F>, w: usize) -> Result<Elem<F>, ModifiedError> {
        self.f_product(mc, &mc.omegas[w].blocks, &self.xi)
    }

    /// `Δ^{-2} Σ (Q^p_{c_2} - Q^p_{c_1})(q - q^{-1}) F_{c_1}(x_j) F_{c_2}(x_{j+1})`
    /// over `c_1 > c_2` (`descending`) or `c_1 < c_2`.
    pub fn correction(
        &self,
        mc: &ModifiedContext<'_, F>,
        xj: &[F],
        xj1: &[F],
        descending: bool,
    ) -> Result<Elem<F>, ModifiedError> {
        let d2 = self.delta_inv()?.pow(2);
        let delta = mc.s().h.delta().clone();
        let mut acc = mc.zero();
        for c1 in 0..self.g() {
            for c2 in 0..self.g() {
                if c1 == c2 || (c1 > c2) != descending {
                    continue;
                }
                let c = self.qp[c2].sub(&self.qp[c1]).mul(&delta).mul(&d2);
                let term = mc.mul(&self.f_poly(mc, c1, xj)?, &self.f_poly(mc, c2, xj1)?);
                acc = mc.add(&acc, &mc.scale(&c, &term));
            }
        }
        Ok(acc)
    }
}

/// `∏_k (x - Q^p_k)`.
pub fn min_poly_value<F: Field>(mc: &ModifiedContext<'_, F>, qp: &[F], x: &[F]) -> Elem<F> {
    qp.iter().fold(mc.one(), |acc, c| mc.mul(&acc, &mc.sub(x, &mc.scalar(c))))
}

/// Checks on the `ξ_i` that need no interpolation: commutativity, the
/// minimal polynomial, stability under `*`, and the eigenvalue formulas on
/// the modules `M̄^μ` for the weights `weights` (indices into `Λ`).
pub fn xi_checks<F: Field>(mc: &ModifiedContext<'_, F>, fam: &XiFamily<F>, weights: &[usize]) -> Vec<Check> {
    let n = fam.n();
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if mc.mul(&fam.xi[i], &fam.xi[j]) != mc.mul(&fam.xi[j], &fam.xi[i]) {
                bad.push(format!("ξ_{} ξ_{}", i + 1, j + 1));
            }
        }
    }
    out.push(Check::from_witnesses("ξ_i ξ_j = ξ_j ξ_i", bad));
    let bad: Vec<String> = (0..n)
        .filter(|&i| !ModifiedContext::is_zero(&min_poly_value(mc, &fam.qp, &fam.xi[i])))
        .map(|i| format!("ξ_{}", i + 1))
        .collect();
    out.push(Check::from_witnesses("∏_k (ξ_j - Q^p_k) = 0", bad));
    let bad: Vec<String> = (0..n).filter(|&i| mc.star(&fam.xi[i]) != fam.xi[i]).map(|i| format!("ξ_{}", i + 1)).collect();
    out.push(Check::from_witnesses("ξ_i^* = ξ_i", bad));
    let one = mc.one();
    let bad: Vec<String> = (0..n)
        .filter(|&i| mc.mul(&fam.xi[i], &one) != fam.xi[i] || mc.mul(&one, &fam.xi[i]) != fam.xi[i])
        .map(|i| format!("ξ_{}", i + 1))
        .collect();
    out.push(Check::from_witnesses("φ̄_Ω ξ_i φ̄_Ω = ξ_i", bad));

    let s = mc.s();
    let (mut bad3, mut bad4) = (Vec::new(), Vec::new());
    let xi_s: Vec<_> = fam.xi.iter().map(|x| mc.to_schur(x)).collect();
    for &mu in weights {
        let bar = mc.bar(mu);
        let zero = s.zero();
        let act = |v: &[F], i: usize| bar.act(mc.pc, v, &xi_s[i]).ok();
        for (j, (l, _, t)) in bar.labels().into_iter().enumerate() {
            let w = mc.std_image[l][t].0;
            let mut v = vec![zero.clone(); bar.dim()];
            v[j] = s.one().clone();
            for i in 0..n {
                let want: Vec<F> = v.iter().map(|x| x.mul(&fam.qp[mc.omegas[w].blocks[i]])).collect();
                if act(&v, i).as_deref() != Some(&want[..]) {
                    bad3.push(format!("weight {mu}, basis {j}, ξ_{}", i + 1));
                }
            }
        }
        // m̄_μ ξ_i = Q^p_{b(i)} m̄_μ, b(i) read off from a_p(μ) and α_p(μ)
        let Some(m) = bar.coords(s.m_weight(mu)) else {
            bad4.push(format!("weight {mu}: m_μ not in M^μ"));
            continue;
        };
        let a = mc.pc.sigma.a_p(mu);
        let alpha = mc.pc.sigma.alpha_p(mu);
        for i in 0..n {
            let k = (0..a.len()).find(|&k| a[k] <= i && i < a[k] + alpha[k]).expect("letters fill the blocks");
            let want: Vec<F> = m.iter().map(|x| x.mul(&fam.qp[k])).collect();
            if act(&m, i).as_deref() != Some(&want[..]) {
                bad4.push(format!("weight {mu}, ξ_{}", i + 1));
            }
        }
    }
    out.push(Check::from_witnesses("m̄_{St} ξ_i = Q^p_{b_ω(i)} m̄_{St} for t ∈ Std(λ)_ω", bad3));
    out.push(Check::from_witnesses("m̄_μ ξ_i = Q^p_{b(i)} m̄_μ", bad4));
    out
}

/// Checks relying on `Δ^{-1}`: the interpolation identities, the
/// projections `Δ^{-n} F_ω(ξ)` and the commutation formulas between `T_j`
/// and `ξ_k`.
pub fn interpolation_checks<F: Field>(mc: &ModifiedContext<'_, F>, fam: &XiFamily<F>) -> Result<Vec<Check>, ModifiedError> {
    let s = mc.s();
    let n = fam.n();
    let g = fam.g();
    let dinv = fam.delta_inv()?;
    let mut out = Vec::new();

    // Δ^{-n} F_ω(ξ) picks out m̄_ω T_{d(ω)}
    let mut bad = Vec::new();
    for w in 0..mc.omegas.len() {
        let f = mc.scale(&dinv.pow(n as u32), &fam.f_omega(mc, w)?);
        if mc.regular(&f) != mc.omega_vector(w)? {
            bad.push(format!("ω = {:?}", mc.omegas[w].comp.to_arrays()));
        }
    }
    out.push(Check::from_witnesses("m̄_Ω Δ^{-n} F_ω(ξ) = m̄_ω T_{d(ω)}", bad));

    // pairs of letters, with and without T_j
    let sym = s.h.sym();
    let (mut bad3, mut bad4) = (Vec::new(), Vec::new());
    for j in 0..n.saturating_sub(1) {
        for c1 in 0..g {
            for c2 in 0..g {
                let ff = mc.scale(
                    &dinv.pow(2),
                    &mc.mul(&fam.f_poly(mc, c1, &fam.xi[j])?, &fam.f_poly(mc, c2, &fam.xi[j + 1])?),
                );
                let members: Vec<usize> = (0..mc.omegas.len())
                    .filter(|&w| mc.omegas[w].blocks[j] == c1 && mc.omegas[w].blocks[j + 1] == c2)
                    .collect();
                let mut lhs = mc.zero();
                for &w in &members {
                    lhs = mc.add(&lhs, &mc.omega_vector(w)?);
                }
                if mc.regular(&ff) != lhs {
                    bad3.push(format!("j = {}, c = ({}, {})", j + 1, c1 + 1, c2 + 1));
                }
                if c1 == c2 {
                    continue;
                }
                // Σ m̄_ω T_{d(ω) s_j}
                let mut lhs = mc.zero();
                for &w in &members {
                    let ws = sym.right_mul(mc.d_index[w], j + 1);
                    let x = s.h.right_tw(s.m_weight(mc.omega_weight[w]), ws);
                    lhs = mc.add(&lhs, &mc.component_vector(w, &x)?);
                }
                let tj = if c1 < c2 {
                    fam.t[j].clone()
                } else {
                    mc.sub(&fam.t[j], &mc.scalar(s.h.delta()))
                };
                if mc.regular(&mc.mul(&ff, &tj)) != lhs {
                    bad4.push(format!("j = {}, c = ({}, {})", j + 1, c1 + 1, c2 + 1));
                }
            }
        }
    }
    out.push(Check::from_witnesses(
        "Σ_{ω ∈ Ω_j^{[c1]} ∩ Ω_{j+1}^{[c2]}} m̄_ω T_{d(ω)} = m̄_Ω Δ^{-2} F_{c1}(ξ_j) F_{c2}(ξ_{j+1})",
        bad3,
    ));
    out.push(Check::from_witnesses("m̄_ω T_{d(ω) s_j} sums match Δ^{-2} F F T_j (resp. T_j - (q - q^{-1}))", bad4));

    let (mut l1, mut l2, mut l3, mut diff) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for j in 0..n.saturating_sub(1) {
        let (xj, xj1, tj) = (&fam.xi[j], &fam.xi[j + 1], &fam.t[j]);
        let corr = fam.correction(mc, xj, xj1, true)?;
        if mc.mul(tj, xj1) != mc.add(&mc.mul(xj, tj), &corr) {
            l1.push(format!("j = {}", j + 1));
        }
        if mc.mul(tj, xj) != mc.sub(&mc.mul(xj1, tj), &corr) {
            l2.push(format!("j = {}", j + 1));
        }
        for k in (0..n).filter(|&k| k != j && k != j + 1) {
            if mc.mul(tj, &fam.xi[k]) != mc.mul(&fam.xi[k], tj) {
                l3.push(format!("j = {}, k = {}", j + 1, k + 1));
            }
        }
        let mut rhs = mc.zero();
        for c1 in 0..g {
            for c2 in c1 + 1..g {
                let a = mc.mul(&fam.f_poly(mc, c1, xj)?, &fam.f_poly(mc, c2, xj1)?);
                let b = mc.mul(&fam.f_poly(mc, c2, xj)?, &fam.f_poly(mc, c1, xj1)?);
                let c = fam.qp[c2].sub(&fam.qp[c1]).mul(&dinv.pow(2));
                rhs = mc.add(&rhs, &mc.scale(&c, &mc.sub(&a, &b)));
            }
        }
        if mc.sub(xj1, xj) != rhs {
            diff.push(format!("j = {}", j + 1));
        }
    }
    out.push(Check::from_witnesses("T_j ξ_{j+1} = ξ_j T_j + Δ^{-2} Σ_{c1>c2} (Q_{c2} - Q_{c1})(q - q^{-1}) F F", l1));
    out.push(Check::from_witnesses("T_j ξ_j = ξ_{j+1} T_j - Δ^{-2} Σ_{c1>c2} (Q_{c2} - Q_{c1})(q - q^{-1}) F F", l2));
    out.push(Check::from_witnesses("T_j ξ_k = ξ_k T_j for k ≠ j, j+1", l3));
    out.push(Check::from_witnesses("ξ_{j+1} - ξ_j = Δ^{-2} Σ_{c1<c2} (Q_{c2} - Q_{c1})(F_{c1}F_{c2} - F_{c2}F_{c1})", diff));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::ParabolicShape;
    use crate::parabolic::context::tests::ctx;
    use crate::parabolic::ParabolicContext;

    #[test]
    fn xi_and_interpolation_two_two() {
        let s = ctx(2, 2);
        for parts in [vec![1, 1], vec![2]] {
            let pc = ParabolicContext::new(&s, ParabolicShape::new(parts.clone()).unwrap()).unwrap();
            let mc = ModifiedContext::new(&pc).unwrap();
            let fam = xi_family(&mc).unwrap();
            let weights: Vec<usize> = (0..s.cat.lambda().len()).collect();
            for c in xi_checks(&mc, &fam, &weights) {
                assert!(c.passed, "{parts:?}: {c:?}");
            }
            for c in interpolation_checks(&mc, &fam).unwrap() {
                assert!(c.passed, "{parts:?}: {c:?}");
            }
        }
    }

    #[test]
    fn single_block_gives_scalars() {
        let s = ctx(2, 2);
        let pc = ParabolicContext::new(&s, ParabolicShape::whole(2)).unwrap();
        let mc = ModifiedContext::new(&pc).unwrap();
        let fam = xi_family(&mc).unwrap();
        for x in &fam.xi {
            assert_eq!(*x, mc.scalar(&fam.qp[0]));
        }
        assert_eq!(fam.f_omega(&mc, 0).unwrap(), mc.one());
    }
}
