//! The cellular basis `{m_st}` of `H` and the elements `m_{ST}` built from
//! it.

use std::collections::HashMap;

use super::hecke::{HVec, HeckeAlgebra};
use super::table::MulTable;
use super::AkError;
use crate::combinatorics::Catalog;
use crate::exact_linear::{Field, Matrix, Ring};

/// Label `(λ, s, t)` of a cellular basis element (indices into `Λ⁺` and
/// `Std(λ)`).
pub type CellLabel = (usize, usize, usize);

/// All `m_st`, in the order `λ ∈ Λ⁺`, then `s`, then `t`.
#[derive(Clone, Debug)]
pub struct CellularElements<R: Ring> {
    pub labels: Vec<CellLabel>,
    pub index: HashMap<CellLabel, usize>,
    pub vecs: Vec<HVec<R>>,
    /// `m_λ` for each `λ ∈ Λ⁺`
    pub m_lambda: Vec<HVec<R>>,
}

impl<R: Ring> CellularElements<R> {
    pub fn new(h: &HeckeAlgebra<R>, cat: &Catalog) -> Self {
        let sym = h.sym();
        let mut labels = Vec::new();
        let mut vecs = Vec::new();
        let mut m_lambda = Vec::new();
        for l in 0..cat.plus().len() {
            let ml = h.m_mu(&cat.plus()[l]);
            let ds: Vec<usize> = cat.std(l).iter().map(|t| sym.index_of(&t.d())).collect();
            for (s, &dsi) in ds.iter().enumerate() {
                let left = h.left_tw_star(dsi, &ml);
                for (t, &dti) in ds.iter().enumerate() {
                    labels.push((l, s, t));
                    vecs.push(h.right_tw(&left, dti));
                }
            }
            m_lambda.push(ml);
        }
        let index = labels.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        CellularElements { labels, index, vecs, m_lambda }
    }

    pub fn get(&self, l: usize, s: usize, t: usize) -> &HVec<R> {
        &self.vecs[self.index[&(l, s, t)]]
    }

    pub fn len(&self) -> usize {
        self.vecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vecs.is_empty()
    }

    /// `m_{ST} = Σ q^{l(d(s)) + l(d(t))} m_st` over `μ(s) = S`, `ν(t) = T`,
    /// with `S ∈ T_0(λ, μ)`, `T ∈ T_0(λ, ν)`.
    pub fn m_semi(
        &self,
        h: &HeckeAlgebra<R>,
        cat: &Catalog,
        l: usize,
        mu: usize,
        big_s: usize,
        nu: usize,
        big_t: usize,
    ) -> HVec<R> {
        let fs = cat.fibre(l, mu);
        let ft = cat.fibre(l, nu);
        let mut out = h.zero();
        for (s, fsv) in fs.iter().enumerate() {
            if *fsv != Some(big_s) {
                continue;
            }
            for (t, ftv) in ft.iter().enumerate() {
                if *ftv != Some(big_t) {
                    continue;
                }
                let c = h.q().pow((cat.std_length(l, s) + cat.std_length(l, t)) as u32);
                for (o, v) in out.iter_mut().zip(self.get(l, s, t)) {
                    if !v.is_zero() {
                        o.add_mul(&c, v);
                    }
                }
            }
        }
        out
    }

    /// `m_{St} = Σ_{μ(s) = S} q^{l(d(s)) + l(d(t))} m_st`.
    pub fn m_semi_std(
        &self,
        h: &HeckeAlgebra<R>,
        cat: &Catalog,
        l: usize,
        mu: usize,
        big_s: usize,
        t: usize,
    ) -> HVec<R> {
        let mut out = h.zero();
        for (s, fsv) in cat.fibre(l, mu).iter().enumerate() {
            if *fsv != Some(big_s) {
                continue;
            }
            let c = h.q().pow((cat.std_length(l, s) + cat.std_length(l, t)) as u32);
            for (o, v) in out.iter_mut().zip(self.get(l, s, t)) {
                if !v.is_zero() {
                    o.add_mul(&c, v);
                }
            }
        }
        out
    }
}

/// The cellular basis over a field together with the inverse change of
/// basis, so that any element can be expanded.
#[derive(Clone, Debug)]
pub struct CellularDatum<F: Field> {
    pub elems: CellularElements<F>,
    /// rows are the `m_st` in normal-form coordinates
    pub change: Matrix<F>,
    inverse: Matrix<F>,
}

impl<F: Field> CellularDatum<F> {
    pub fn new(h: &HeckeAlgebra<F>, cat: &Catalog) -> Result<Self, AkError> {
        let elems = CellularElements::new(h, cat);
        if elems.len() != h.dim() {
            return Err(AkError::SingularBasis { rank: elems.len(), dim: h.dim() });
        }
        let change = Matrix::from_rows(elems.vecs.clone(), h.zero_scalar());
        let inverse = change
            .inverse()
            .ok_or(AkError::SingularBasis { rank: change.rank(), dim: h.dim() })?;
        Ok(CellularDatum { elems, change, inverse })
    }

    /// Coordinates `c` with `x = Σ c_i m_i`.
    pub fn expand(&self, x: &[F]) -> Vec<F> {
        self.inverse.vec_mul(x)
    }

    pub fn reassemble(&self, c: &[F]) -> HVec<F> {
        self.change.vec_mul(c)
    }

    /// Right action of `h` on the cell module of `λ`, in the basis
    /// `{m_{t^λ t}}` modulo more dominant cells: the `t^λ` row of the
    /// expansion of `m_{t^λ t} · h`.
    pub fn cell_action(&self, table: &MulTable<F>, cat: &Catalog, l: usize, x: &[F]) -> Matrix<F> {
        let k = cat.std(l).len();
        let zero = x.first().map(|z| z.zero_like()).unwrap_or_else(|| self.change.zero_elem().clone());
        let mut m = Matrix::zeros(k, k, &zero);
        for t in 0..k {
            let y = table.mul(self.elems.get(l, 0, t), x);
            let c = self.expand(&y);
            for t2 in 0..k {
                m.set(t, t2, c[self.elems.index[&(l, 0, t2)]].clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::{Fp, Laurent, Rational};

    fn fp(n: usize, r: usize) -> HeckeAlgebra<Fp> {
        let qs = (1..=r as i64).map(|x| Fp::new(x, 5)).collect();
        HeckeAlgebra::new(n, r, Fp::new(2, 5), Fp::new(3, 5), qs)
    }

    #[test]
    fn cellular_basis_ranks() {
        for (n, r) in [(2, 2), (3, 2), (2, 3), (1, 3)] {
            let cat = Catalog::new(n, &vec![n; r]);
            let h = fp(n, r);
            let d = CellularDatum::new(&h, &cat).unwrap();
            assert_eq!(d.change.rank(), h.dim());
        }
    }

    #[test]
    fn initial_pair_is_m_lambda() {
        let cat = Catalog::new(2, &[2, 2]);
        let h = HeckeAlgebra::generic(2, 2);
        let e = CellularElements::new(&h, &cat);
        for l in 0..cat.plus().len() {
            assert_eq!(e.get(l, 0, 0), &e.m_lambda[l]);
        }
    }

    #[test]
    fn star_swaps_tableaux_generic() {
        let cat = Catalog::new(2, &[2, 2]);
        let h = HeckeAlgebra::generic(2, 2);
        let e: CellularElements<Laurent> = CellularElements::new(&h, &cat);
        for &(l, s, t) in &e.labels {
            assert_eq!(h.star(e.get(l, s, t)), *e.get(l, t, s));
        }
    }

    #[test]
    fn expand_round_trip() {
        let cat = Catalog::new(2, &[2, 2]);
        let qs = vec![Rational::from_int(1), Rational::from_int(7)];
        let h = HeckeAlgebra::new(2, 2, Rational::from_int(3), Rational::from_frac(1, 3), qs);
        let d = CellularDatum::new(&h, &cat).unwrap();
        for (i, v) in d.elems.vecs.iter().enumerate() {
            let c = d.expand(v);
            for (j, x) in c.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
                assert!(i == j || x.is_zero());
            }
        }
        let x: Vec<Rational> = (0..8).map(|i| Rational::from_int(i * i - 3)).collect();
        assert_eq!(d.reassemble(&d.expand(&x)), x);
    }
}
