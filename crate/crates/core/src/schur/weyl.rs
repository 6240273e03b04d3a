//! Weyl modules `W^λ`, their bilinear forms and the simple heads `L^λ`.
//!
//! Two constructions are provided. The direct one composes `φ_{T^λ T}`
//! with each generator in `S(Λ)`. The fast one works inside the cell
//! module of `H` attached to `λ`: modulo more dominant cells,
//! `φ_{T^λ T}` corresponds to `v_T = Σ_{ν(t) = T} q^{l(d(t))} m_{t^λ t}`,
//! and a generator with value `m_ν h` acts by `v_T ↦ v_T · h`.

use super::algebra::{coeff, SchurContext};
use super::module::{FiniteModule, GeneratorShapes};
use super::SchurError;
use crate::exact_linear::{Field, Matrix};

/// A cell module of a weight-graded cellular algebra together with its
/// Gram matrix (block diagonal by weight).
#[derive(Clone, Debug)]
pub struct CellModule<F: Field> {
    pub lambda: usize,
    pub module: FiniteModule<F>,
    /// one symmetric block per weight
    pub gram: Vec<Matrix<F>>,
}

impl<F: Field> CellModule<F> {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn weight_dims(&self) -> &[usize] {
        &self.module.weight_dims
    }

    /// `dim L^λ_w` for each weight `w`.
    pub fn simple_weight_dims(&self) -> Vec<usize> {
        self.gram.iter().map(Matrix::rank).collect()
    }

    pub fn simple_dim(&self) -> usize {
        self.simple_weight_dims().iter().sum()
    }

    pub fn gram_is_symmetric(&self) -> bool {
        self.gram.iter().all(|g| *g == g.transpose())
    }

    /// `L^λ = W^λ / rad`, using for each weight the images of the basis
    /// vectors at the pivot columns of the Gram block.
    pub fn simple_quotient(&self, shapes: &GeneratorShapes) -> FiniteModule<F> {
        let zero = self.module.zero().clone();
        let mut pivots = Vec::new();
        let mut coords = Vec::new();
        for g in &self.gram {
            let d = g.nrows();
            let p = if d == 0 { Vec::new() } else { g.rref().1 };
            let r = p.len();
            let mut gpp = Matrix::zeros(r, r, &zero);
            let mut gdp = Matrix::zeros(d, r, &zero);
            for (j, &pj) in p.iter().enumerate() {
                for (i, &pi) in p.iter().enumerate() {
                    gpp.set(i, j, g.get(pi, pj).clone());
                }
                for i in 0..d {
                    gdp.set(i, j, g.get(i, pj).clone());
                }
            }
            let q = if r == 0 {
                gdp
            } else {
                gdp.mul(&gpp.inverse().expect("principal pivot block of a symmetric matrix"))
            };
            pivots.push(p);
            coords.push(q);
        }
        let actions = (0..shapes.len())
            .map(|gi| {
                let (a, b) = (shapes.from[gi], shapes.to[gi]);
                let m = self.module.actions[gi].as_ref()?;
                if pivots[a].is_empty() || pivots[b].is_empty() {
                    return None;
                }
                let rows: Vec<Vec<F>> = pivots[a].iter().map(|&p| m.row(p).to_vec()).collect();
                Some(Matrix::from_rows(rows, &zero).mul(&coords[b]))
            })
            .collect();
        FiniteModule::new(pivots.iter().map(Vec::len).collect(), actions, zero)
    }
}

/// Generator shapes of `S(Λ)` with every basis element as a generator:
/// `φ_{ST}` sends weight `type(S)` to weight `type(T)` on the right.
pub fn schur_shapes<F: Field>(s: &SchurContext<F>) -> GeneratorShapes {
    GeneratorShapes {
        from: s.labels().iter().map(|l| l.s.mu).collect(),
        to: s.labels().iter().map(|l| l.t.mu).collect(),
    }
}

/// Right action of `H` on the cell module of `λ` for each basis element
/// of `H`, so that any `h` acts by a linear combination.
pub fn cell_representation<F: Field>(s: &SchurContext<F>, l: usize) -> Vec<Matrix<F>> {
    (0..s.h.dim())
        .map(|i| s.datum.cell_action(&s.table, &s.cat, l, &s.h.basis(i)))
        .collect()
}

fn combine<F: Field>(rho: &[Matrix<F>], h: &[F], zero: &F) -> Matrix<F> {
    let k = rho.first().map(Matrix::nrows).unwrap_or(0);
    let mut m = Matrix::zeros(k, k, zero);
    for (c, r) in h.iter().zip(rho) {
        if !c.is_zero() {
            m.add_scaled(c, r);
        }
    }
    m
}

struct CellCoords<'a, F: Field> {
    s: &'a SchurContext<F>,
    l: usize,
}

impl<F: Field> CellCoords<'_, F> {
    /// `v_T` for `T ∈ T_0(λ, w)`.
    fn vector(&self, w: usize, big_t: usize) -> Vec<F> {
        let cat = &self.s.cat;
        cat.fibre(self.l, w)
            .iter()
            .enumerate()
            .map(|(t, f)| {
                if *f == Some(big_t) {
                    self.s.h.q().pow(cat.std_length(self.l, t) as u32)
                } else {
                    self.s.zero().clone()
                }
            })
            .collect()
    }

    /// Coordinates of `x` in `{v_T : T ∈ T_0(λ, w)}`; the fibres are
    /// disjoint, so one entry per fibre determines the coefficient.
    fn coords(&self, w: usize, x: &[F]) -> Result<Vec<F>, SchurError> {
        let cat = &self.s.cat;
        let fib = cat.fibre(self.l, w);
        let n = cat.t0(self.l, w).len();
        let mut out = vec![self.s.zero().clone(); n];
        let mut seen = vec![false; n];
        for (t, f) in fib.iter().enumerate() {
            match f {
                Some(j) if !seen[*j] => {
                    seen[*j] = true;
                    let qi = self.s.h.q().pow(cat.std_length(self.l, t) as u32);
                    out[*j] = x[t].div(&qi).expect("q is invertible");
                }
                _ => {}
            }
        }
        let mut back = vec![self.s.zero().clone(); x.len()];
        for (j, c) in out.iter().enumerate() {
            for (b, v) in back.iter_mut().zip(self.vector(w, j)) {
                b.add_mul(c, &v);
            }
        }
        if back != x {
            return Err(SchurError::Inconsistent("image outside the span of the v_T".into()));
        }
        Ok(out)
    }
}

/// `W^λ` through the cell module of `H`.
pub fn weyl_module<F: Field>(s: &SchurContext<F>, l: usize) -> Result<CellModule<F>, SchurError> {
    let rho = cell_representation(s, l);
    weyl_module_with(s, l, &rho)
}

pub fn weyl_module_with<F: Field>(s: &SchurContext<F>, l: usize, rho: &[Matrix<F>]) -> Result<CellModule<F>, SchurError> {
    let cat = &s.cat;
    let zero = s.zero().clone();
    let nw = cat.lambda().len();
    let dims: Vec<usize> = (0..nw).map(|w| cat.t0(l, w).len()).collect();
    let cc = CellCoords { s, l };
    let vecs: Vec<Vec<Vec<F>>> = (0..nw)
        .map(|w| (0..dims[w]).map(|j| cc.vector(w, j)).collect())
        .collect();
    let mut actions = Vec::with_capacity(s.dim());
    for (i, lb) in s.labels().iter().enumerate() {
        let (a, b) = (lb.s.mu, lb.t.mu);
        if dims[a] == 0 || dims[b] == 0 {
            actions.push(None);
            continue;
        }
        let r = combine(rho, s.lift(i), &zero);
        let mut rows = Vec::with_capacity(dims[a]);
        for v in &vecs[a] {
            rows.push(cc.coords(b, &r.vec_mul(v))?);
        }
        actions.push(Some(Matrix::from_rows(rows, &zero)));
    }
    let top = s.top_position(l);
    let mut gram = Vec::with_capacity(nw);
    for w in 0..nw {
        let d = dims[w];
        let mut g = Matrix::zeros(d, d, &zero);
        for tt in 0..d {
            let pt = s.position(l, crate::combinatorics::SemiRef { mu: w, idx: tt }).unwrap();
            let r = combine(rho, s.lift(s.index(l, pt, top)), &zero);
            for (ss, v) in vecs[w].iter().enumerate() {
                let img = r.vec_mul(v);
                if img[1..].iter().any(|x| !x.is_zero()) {
                    return Err(SchurError::Inconsistent("Gram image outside the top weight".into()));
                }
                g.set(ss, tt, img[0].clone());
            }
        }
        gram.push(g);
    }
    Ok(CellModule { lambda: l, module: FiniteModule::new(dims, actions, zero), gram })
}

/// Right module spanned by the `φ_{UT}` with `U` at position `u` of
/// `T_0(λ)` fixed and `T` running over the positions `right`, under the
/// generators `gens` (basis indices of `S(Λ)`), read off by composing
/// inside `S(Λ)`. Terms with another left tableau or another cell are
/// dropped: they lie in the part being factored out.
pub fn module_by_composition<F: Field>(
    s: &SchurContext<F>,
    l: usize,
    u: usize,
    right: &[usize],
    gens: &[usize],
) -> FiniteModule<F> {
    let zero = s.zero().clone();
    let list = s.t0_list(l);
    let nw = s.cat.lambda().len();
    let mut by_weight: Vec<Vec<usize>> = vec![Vec::new(); nw];
    for &t in right {
        by_weight[list[t].mu].push(t);
    }
    let actions = gens
        .iter()
        .map(|&g| {
            let lb = s.label(g);
            let (a, b) = (lb.s.mu, lb.t.mu);
            if by_weight[a].is_empty() || by_weight[b].is_empty() {
                return None;
            }
            let rows = by_weight[a]
                .iter()
                .map(|&t| {
                    let prod = s.compose(s.index(l, u, t), g);
                    by_weight[b].iter().map(|&t2| coeff(&prod, s.index(l, u, t2), &zero)).collect()
                })
                .collect();
            Some(Matrix::from_rows(rows, &zero))
        })
        .collect();
    FiniteModule::new(by_weight.iter().map(Vec::len).collect(), actions, zero)
}

/// The pairing `φ_{UT} φ_{SV} ≡ f_{TS} φ_{UV}`, one `|rows_w| × |cols_w|`
/// block per weight `w`, rows and columns given as positions in `T_0(λ)`.
pub fn pairing_by_composition<F: Field>(
    s: &SchurContext<F>,
    l: usize,
    (u, v): (usize, usize),
    rows: &[usize],
    cols: &[usize],
) -> Vec<Matrix<F>> {
    let zero = s.zero().clone();
    let list = s.t0_list(l);
    let target = s.index(l, u, v);
    (0..s.cat.lambda().len())
        .map(|w| {
            let rw: Vec<usize> = rows.iter().copied().filter(|&t| list[t].mu == w).collect();
            let cw: Vec<usize> = cols.iter().copied().filter(|&t| list[t].mu == w).collect();
            let mut g = Matrix::zeros(rw.len(), cw.len(), &zero);
            for (i, &t) in rw.iter().enumerate() {
                for (j, &x) in cw.iter().enumerate() {
                    let prod = s.compose(s.index(l, u, t), s.index(l, x, v));
                    g.set(i, j, coeff(&prod, target, &zero));
                }
            }
            g
        })
        .collect()
}

/// `W^λ` by composing inside `S(Λ)`; slow, used to validate
/// [`weyl_module`].
pub fn weyl_module_by_composition<F: Field>(s: &SchurContext<F>, l: usize) -> CellModule<F> {
    let top = s.top_position(l);
    let all: Vec<usize> = (0..s.t0_list(l).len()).collect();
    let gens: Vec<usize> = (0..s.dim()).collect();
    CellModule {
        lambda: l,
        module: module_by_composition(s, l, top, &all, &gens),
        gram: pairing_by_composition(s, l, (top, top), &all, &all),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ariki_koike::HeckeAlgebra;
    use crate::combinatorics::Catalog;
    use crate::exact_linear::{Fp, Rational, Ring};

    fn ctx(n: usize, r: usize) -> SchurContext<Fp> {
        let qs = (1..=r as i64).map(|x| Fp::new(x, 5)).collect();
        let h = HeckeAlgebra::new(n, r, Fp::new(2, 5), Fp::new(3, 5), qs);
        SchurContext::new(h, Catalog::new(n, &vec![n; r])).unwrap()
    }

    #[test]
    fn both_routes_agree() {
        let s = ctx(2, 2);
        for l in 0..s.cat.plus().len() {
            let a = weyl_module(&s, l).unwrap();
            let b = weyl_module_by_composition(&s, l);
            assert_eq!(a.module.weight_dims, b.module.weight_dims);
            assert_eq!(a.gram, b.gram);
            for (x, y) in a.module.actions.iter().zip(&b.module.actions) {
                assert_eq!(x, y);
            }
            assert!(a.gram_is_symmetric());
            assert_eq!(a.dim(), s.cat.t0_total(l));
            let w = s.cat.plus_in_lambda(l);
            assert!(a.gram[w].get(0, 0).is_one());
        }
    }

    #[test]
    fn semisimple_grams_are_nonsingular() {
        let qs = vec![Rational::from_int(1), Rational::from_int(7)];
        let h = HeckeAlgebra::new(2, 2, Rational::from_int(3), Rational::from_frac(1, 3), qs);
        let s = SchurContext::new(h, Catalog::new(2, &[2, 2])).unwrap();
        for l in 0..s.cat.plus().len() {
            let w = weyl_module(&s, l).unwrap();
            assert_eq!(w.simple_dim(), w.dim());
        }
    }

    #[test]
    fn simple_quotient_has_gram_rank_dims() {
        let s = ctx(2, 1);
        let shapes = schur_shapes(&s);
        for l in 0..s.cat.plus().len() {
            let w = weyl_module(&s, l).unwrap();
            let q = w.simple_quotient(&shapes);
            assert_eq!(q.weight_dims, w.simple_weight_dims());
        }
    }
}
