//! The permutation modules `M^μ = m_μ H` and the hom spaces
//! `M^{ν*} ∩ M^μ`.

use super::cellular::CellularDatum;
use super::hecke::{HVec, HeckeAlgebra};
use super::table::MulTable;
use crate::combinatorics::{Catalog, MultiComp};
use crate::exact_linear::{EchelonBasis, Field, LinearSolver, Matrix};

/// `(λ, S, T)`: `S ∈ T_0(λ, μ)`, `T ∈ T_0(λ, ν)`.
pub type HomLabel = (usize, usize, usize);

/// Basis `{m_{ST}}` of `M^{ν*} ∩ M^μ`.
#[derive(Clone, Debug)]
pub struct HomBasis<F: Field> {
    pub nu: usize,
    pub mu: usize,
    pub labels: Vec<HomLabel>,
    pub vecs: Vec<HVec<F>>,
}

pub fn hom_space_basis<F: Field>(
    h: &HeckeAlgebra<F>,
    cat: &Catalog,
    datum: &CellularDatum<F>,
    nu: usize,
    mu: usize,
) -> HomBasis<F> {
    let mut labels = Vec::new();
    let mut vecs = Vec::new();
    for l in 0..cat.plus().len() {
        let (ns, nt) = (cat.t0(l, mu).len(), cat.t0(l, nu).len());
        for s in 0..ns {
            for t in 0..nt {
                labels.push((l, s, t));
                vecs.push(datum.elems.m_semi(h, cat, l, mu, s, nu, t));
            }
        }
    }
    HomBasis { nu, mu, labels, vecs }
}

/// `(λ, S, t)`: `S ∈ T_0(λ, μ)`, `t ∈ Std(λ)`.
pub type ModLabel = (usize, usize, usize);

/// `M^μ` with its basis `{m_{St}}` and the right action of the generators.
#[derive(Clone, Debug)]
pub struct StandardModule<F: Field> {
    pub mu: usize,
    pub shape: MultiComp,
    pub labels: Vec<ModLabel>,
    pub vecs: Vec<HVec<F>>,
    solver: LinearSolver<F>,
    /// matrices of `T_0, ..., T_{n-1}` (row-vector convention)
    pub action: Vec<Matrix<F>>,
}

impl<F: Field> StandardModule<F> {
    pub fn new(h: &HeckeAlgebra<F>, table: &MulTable<F>, cat: &Catalog, datum: &CellularDatum<F>, mu: usize) -> Self {
        let mut labels = Vec::new();
        let mut vecs = Vec::new();
        for l in 0..cat.plus().len() {
            for s in 0..cat.t0(l, mu).len() {
                for t in 0..cat.std(l).len() {
                    labels.push((l, s, t));
                    vecs.push(datum.elems.m_semi_std(h, cat, l, mu, s, t));
                }
            }
        }
        let cols = Matrix::from_columns(&vecs, h.dim(), h.zero_scalar());
        let solver = LinearSolver::new(&cols);
        let mut action = Vec::with_capacity(h.n());
        for i in 0..h.n() {
            let g = h.t(i);
            let rows: Vec<Vec<F>> = vecs
                .iter()
                .map(|v| solver.solve(&table.mul(v, &g)).expect("M^μ is a right ideal"))
                .collect();
            action.push(Matrix::from_rows(rows, h.zero_scalar()));
        }
        StandardModule { mu, shape: cat.lambda()[mu].clone(), labels, vecs, solver, action }
    }

    pub fn dim(&self) -> usize {
        self.vecs.len()
    }

    pub fn rank(&self) -> usize {
        self.solver.rank()
    }

    /// Coordinates of `x ∈ M^μ` in the `m_{St}` basis.
    pub fn coords(&self, x: &[F]) -> Option<Vec<F>> {
        self.solver.solve(x)
    }

    /// Whether `m_μ H` is spanned by the basis: the cyclic submodule
    /// generated by `m_μ` under the generators reaches full dimension.
    pub fn spanned_by_m_mu(&self, h: &HeckeAlgebra<F>, table: &MulTable<F>) -> bool {
        let m = h.m_mu(&self.shape);
        let mut span = EchelonBasis::new(h.dim());
        let mut frontier = vec![m];
        while let Some(v) = frontier.pop() {
            if span.insert(&v) {
                for i in 0..h.n() {
                    frontier.push(table.mul(&v, &h.t(i)));
                }
            }
        }
        span.rank() == self.dim() && self.vecs.iter().all(|v| span.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::Fp;

    #[test]
    fn permutation_modules_have_semistandard_bases() {
        let cat = Catalog::new(2, &[2, 2]);
        let h = HeckeAlgebra::new(2, 2, Fp::new(2, 5), Fp::new(3, 5), vec![Fp::new(1, 5), Fp::new(2, 5)]);
        let table = MulTable::new(&h);
        let datum = CellularDatum::new(&h, &cat).unwrap();
        for mu in 0..cat.lambda().len() {
            let m = StandardModule::new(&h, &table, &cat, &datum, mu);
            assert_eq!(m.rank(), m.dim());
            assert!(m.spanned_by_m_mu(&h, &table));
        }
        let total: usize = (0..cat.lambda().len())
            .flat_map(|mu| (0..cat.lambda().len()).map(move |nu| (mu, nu)))
            .map(|(mu, nu)| hom_space_basis(&h, &cat, &datum, nu, mu).vecs.len())
            .sum();
        assert_eq!(total, 210);
    }
}
