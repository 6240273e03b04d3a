//! The cyclotomic q-Schur algebra `S(Λ) = End_H(⊕_μ M^μ)` with its basis
//! `φ_{ST}`, evaluated through the elements `m_{ST}` of `H`.

use std::sync::OnceLock;

use super::SchurError;
use crate::ariki_koike::{CellularDatum, HVec, HeckeAlgebra, MulTable};
use crate::combinatorics::{Catalog, SemiRef};
use crate::exact_linear::{Field, LinearSolver, Matrix};

/// Sparse element: sorted `(basis index, coefficient)` pairs.
pub type SchurVec<F> = Vec<(usize, F)>;

/// `φ_{ST}` with `S ∈ T_0(λ, s.mu)` and `T ∈ T_0(λ, t.mu)`; it maps
/// `M^{t.mu}` to `M^{s.mu}`. `ps`, `pt` are the positions of `S`, `T` in
/// the list `T_0(λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SchurLabel {
    pub lambda: usize,
    pub s: SemiRef,
    pub t: SemiRef,
    pub ps: usize,
    pub pt: usize,
}

pub struct SchurContext<F: Field> {
    pub h: HeckeAlgebra<F>,
    pub cat: Catalog,
    pub table: MulTable<F>,
    pub datum: CellularDatum<F>,
    t0: Vec<Vec<SemiRef>>,
    offsets: Vec<usize>,
    labels: Vec<SchurLabel>,
    values: Vec<HVec<F>>,
    /// `pair_members[μ * |Λ| + ν]`: indices of the basis of `Hom(M^ν, M^μ)`
    pair_members: Vec<Vec<usize>>,
    pair_solver: Vec<OnceLock<LinearSolver<F>>>,
    m_weight: Vec<HVec<F>>,
    left_solver: Vec<OnceLock<LinearSolver<F>>>,
    lifts: Vec<OnceLock<HVec<F>>>,
}

impl<F: Field> std::fmt::Debug for SchurContext<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SchurContext")
            .field("n", &self.cat.n())
            .field("r", &self.cat.r())
            .field("dim", &self.labels.len())
            .finish()
    }
}

impl<F: Field> SchurContext<F> {
    pub fn new(h: HeckeAlgebra<F>, cat: Catalog) -> Result<Self, SchurError> {
        let table = MulTable::new(&h);
        let datum = CellularDatum::new(&h, &cat)?;
        let nl = cat.lambda().len();
        let mut t0 = Vec::new();
        let mut offsets = Vec::new();
        let mut labels = Vec::new();
        let mut values = Vec::new();
        let mut pair_members = vec![Vec::new(); nl * nl];
        for l in 0..cat.plus().len() {
            let list: Vec<SemiRef> = (0..nl)
                .flat_map(|mu| (0..cat.t0(l, mu).len()).map(move |idx| SemiRef { mu, idx }))
                .collect();
            offsets.push(labels.len());
            for (ps, &s) in list.iter().enumerate() {
                for (pt, &t) in list.iter().enumerate() {
                    pair_members[s.mu * nl + t.mu].push(labels.len());
                    labels.push(SchurLabel { lambda: l, s, t, ps, pt });
                    values.push(datum.elems.m_semi(&h, &cat, l, s.mu, s.idx, t.mu, t.idx));
                }
            }
            t0.push(list);
        }
        let m_weight = cat.lambda().iter().map(|mu| h.m_mu(mu)).collect();
        let dim = labels.len();
        Ok(SchurContext {
            h,
            cat,
            table,
            datum,
            t0,
            offsets,
            labels,
            values,
            pair_members,
            pair_solver: (0..nl * nl).map(|_| OnceLock::new()).collect(),
            m_weight,
            left_solver: (0..nl).map(|_| OnceLock::new()).collect(),
            lifts: (0..dim).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(&self) -> &F {
        self.h.zero_scalar()
    }

    pub fn one(&self) -> &F {
        self.h.one_scalar()
    }

    pub fn label(&self, i: usize) -> &SchurLabel {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[SchurLabel] {
        &self.labels
    }

    /// `T_0(λ)` in basis order: by weight, then by index in `T_0(λ, μ)`.
    pub fn t0_list(&self, l: usize) -> &[SemiRef] {
        &self.t0[l]
    }

    pub fn index(&self, l: usize, ps: usize, pt: usize) -> usize {
        self.offsets[l] + ps * self.t0[l].len() + pt
    }

    /// Position of `T^λ` in `T_0(λ)`.
    pub fn top_position(&self, l: usize) -> usize {
        let w = self.cat.plus_in_lambda(l);
        self.t0[l].iter().position(|s| s.mu == w && s.idx == 0).expect("T^λ exists")
    }

    pub fn position(&self, l: usize, s: SemiRef) -> Option<usize> {
        self.t0[l].iter().position(|&x| x == s)
    }

    /// `m_{ST}`, the value of `φ_{ST}` at `m_ν`.
    pub fn value(&self, i: usize) -> &HVec<F> {
        &self.values[i]
    }

    /// Basis of `Hom(M^ν, M^μ)`.
    pub fn pair(&self, mu: usize, nu: usize) -> &[usize] {
        &self.pair_members[mu * self.cat.lambda().len() + nu]
    }

    fn pair_solver(&self, mu: usize, nu: usize) -> &LinearSolver<F> {
        self.pair_solver[mu * self.cat.lambda().len() + nu].get_or_init(|| {
            let cols: Vec<HVec<F>> = self.pair(mu, nu).iter().map(|&i| self.values[i].clone()).collect();
            LinearSolver::new(&Matrix::from_columns(&cols, self.h.dim(), self.zero()))
        })
    }

    /// `m_ν`.
    pub fn m_weight(&self, nu: usize) -> &HVec<F> {
        &self.m_weight[nu]
    }

    fn left_solver(&self, nu: usize) -> &LinearSolver<F> {
        self.left_solver[nu].get_or_init(|| {
            LinearSolver::new(&self.table.left_matrix(&self.m_weight[nu]).transpose())
        })
    }

    /// Some `h` with `m_μ h = m_{ST}`, `μ` the type of `S`.
    pub fn lift(&self, i: usize) -> &HVec<F> {
        self.lifts[i].get_or_init(|| {
            let nu = self.labels[i].s.mu;
            self.left_solver(nu)
                .solve(&self.values[i])
                .expect("m_ST lies in m_μ H")
        })
    }

    /// Expand `x ∈ M^{ν*} ∩ M^μ` in the basis of `Hom(M^ν, M^μ)`.
    pub fn expand_pair(&self, mu: usize, nu: usize, x: &[F]) -> Result<SchurVec<F>, SchurError> {
        let c = self
            .pair_solver(mu, nu)
            .solve(x)
            .ok_or_else(|| SchurError::Inconsistent(format!("element outside Hom(M^{nu}, M^{mu})")))?;
        Ok(self
            .pair(mu, nu)
            .iter()
            .zip(c)
            .filter(|(_, v)| !v.is_zero())
            .map(|(&i, v)| (i, v))
            .collect())
    }

    /// `φ_a ∘ φ_b` (apply `φ_b` first).
    pub fn compose(&self, a: usize, b: usize) -> SchurVec<F> {
        let (la, lb) = (&self.labels[a], &self.labels[b]);
        if la.t.mu != lb.s.mu {
            return Vec::new();
        }
        let x = self.table.mul(&self.values[a], self.lift(b));
        self.expand_pair(la.s.mu, lb.t.mu, &x).expect("composition of homomorphisms")
    }

    /// Bilinear extension of [`compose`](Self::compose).
    pub fn mul(&self, x: &[(usize, F)], y: &[(usize, F)]) -> SchurVec<F> {
        let mut acc = Vec::new();
        for (a, ca) in x {
            for (b, cb) in y {
                let c = ca.mul(cb);
                for (i, v) in self.compose(*a, *b) {
                    acc.push((i, c.mul(&v)));
                }
            }
        }
        normalize(acc)
    }

    /// `φ_{ST} ↦ φ_{TS}`.
    pub fn star_index(&self, i: usize) -> usize {
        let lb = &self.labels[i];
        self.index(lb.lambda, lb.pt, lb.ps)
    }

    pub fn star(&self, x: &[(usize, F)]) -> SchurVec<F> {
        normalize(x.iter().map(|(i, c)| (self.star_index(*i), c.clone())).collect())
    }

    /// `φ_μ`, the identity of `End(M^μ)`.
    pub fn weight_idempotent(&self, mu: usize) -> SchurVec<F> {
        self.expand_pair(mu, mu, &self.m_weight[mu].clone()).expect("m_μ ∈ Hom(M^μ, M^μ)")
    }

    pub fn unit(&self) -> SchurVec<F> {
        normalize((0..self.cat.lambda().len()).flat_map(|mu| self.weight_idempotent(mu)).collect())
    }
}

/// Sort by index, merge duplicates, drop zeros.
pub fn normalize<F: Field>(mut v: Vec<(usize, F)>) -> SchurVec<F> {
    v.sort_by_key(|x| x.0);
    let mut out: Vec<(usize, F)> = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => d.add_assign(&c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Coefficient of basis element `i`.
pub fn coeff<F: Field>(v: &[(usize, F)], i: usize, zero: &F) -> F {
    match v.binary_search_by_key(&i, |x| x.0) {
        Ok(p) => v[p].1.clone(),
        Err(_) => zero.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::Fp;

    pub(crate) fn ctx22() -> SchurContext<Fp> {
        let h = HeckeAlgebra::new(2, 2, Fp::new(2, 5), Fp::new(3, 5), vec![Fp::new(1, 5), Fp::new(2, 5)]);
        SchurContext::new(h, Catalog::new(2, &[2, 2])).unwrap()
    }

    #[test]
    fn dimension_and_identity() {
        let s = ctx22();
        assert_eq!(s.dim(), 210);
        let one = s.unit();
        for i in (0..s.dim()).step_by(7) {
            let e = vec![(i, *s.one())];
            assert_eq!(s.mul(&one, &e), e);
            assert_eq!(s.mul(&e, &one), e);
        }
    }

    #[test]
    fn m_lambda_is_weight_identity() {
        let s = ctx22();
        for l in 0..s.cat.plus().len() {
            let top = s.top_position(l);
            let i = s.index(l, top, top);
            let w = s.cat.plus_in_lambda(l);
            assert_eq!(s.value(i), s.m_weight(w));
            assert_eq!(s.weight_idempotent(w), vec![(i, *s.one())]);
        }
    }

    #[test]
    fn star_is_anti_multiplicative() {
        let s = ctx22();
        for a in (0..s.dim()).step_by(5) {
            for b in (0..s.dim()).step_by(3) {
                let x = vec![(a, *s.one())];
                let y = vec![(b, *s.one())];
                assert_eq!(s.star(&s.mul(&x, &y)), s.mul(&s.star(&y), &s.star(&x)));
            }
        }
    }

    #[test]
    fn associativity_on_basis_triples() {
        let s = ctx22();
        for a in (0..s.dim()).step_by(11) {
            for b in (0..s.dim()).step_by(13) {
                for c in (0..s.dim()).step_by(17) {
                    let (x, y, z) = ([(a, *s.one())], [(b, *s.one())], [(c, *s.one())]);
                    assert_eq!(s.mul(&s.mul(&x, &y), &z), s.mul(&x, &s.mul(&y, &z)));
                }
            }
        }
    }
}
