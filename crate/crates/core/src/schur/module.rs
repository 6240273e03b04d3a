//! Finite-dimensional right modules graded by weight, and a composition
//! factor engine based on homomorphisms onto known simple modules.
//!
//! A module is a family of weight spaces `V_w`; generator `g` maps
//! `V_{from(g)}` to `V_{to(g)}` and is stored as a row-vector block.

use super::SchurError;
use crate::exact_linear::{Field, LinearSolver, Matrix};

/// The weight shape `from → to` of every generator of the acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorShapes {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
}

impl GeneratorShapes {
    pub fn len(&self) -> usize {
        self.from.len()
    }

    pub fn is_empty(&self) -> bool {
        self.from.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct FiniteModule<F: Field> {
    pub weight_dims: Vec<usize>,
    /// `actions[g]` is `None` when the block is zero
    pub actions: Vec<Option<Matrix<F>>>,
    zero: F,
}

impl<F: Field> FiniteModule<F> {
    pub fn new(weight_dims: Vec<usize>, actions: Vec<Option<Matrix<F>>>, zero: F) -> Self {
        let actions = actions
            .into_iter()
            .map(|a| a.filter(|m| !m.is_zero()))
            .collect();
        FiniteModule { weight_dims, actions, zero }
    }

    pub fn dim(&self) -> usize {
        self.weight_dims.iter().sum()
    }

    pub fn zero(&self) -> &F {
        &self.zero
    }

    fn block(&self, shapes: &GeneratorShapes, g: usize) -> Matrix<F> {
        match &self.actions[g] {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.weight_dims[shapes.from[g]], self.weight_dims[shapes.to[g]], &self.zero),
        }
    }

    /// Submodule (or any invariant subspace) given by row bases per weight.
    pub fn restrict(&self, shapes: &GeneratorShapes, bases: &[Vec<Vec<F>>]) -> Result<Self, SchurError> {
        let solvers: Vec<Option<LinearSolver<F>>> = bases
            .iter()
            .zip(&self.weight_dims)
            .map(|(b, &d)| (!b.is_empty()).then(|| LinearSolver::new(&Matrix::from_columns(b, d, &self.zero))))
            .collect();
        let mut actions = Vec::with_capacity(self.actions.len());
        for (g, act) in self.actions.iter().enumerate() {
            let (a, b) = (shapes.from[g], shapes.to[g]);
            let (Some(m), Some(sol)) = (act, &solvers[b]) else {
                actions.push(None);
                continue;
            };
            if bases[a].is_empty() {
                actions.push(None);
                continue;
            }
            let mut rows = Vec::with_capacity(bases[a].len());
            for v in &bases[a] {
                let img = m.vec_mul(v);
                rows.push(sol.solve(&img).ok_or_else(|| {
                    SchurError::Inconsistent("subspace is not invariant".into())
                })?);
            }
            actions.push(Some(Matrix::from_rows(rows, &self.zero)));
        }
        // images that land in a zero weight space must vanish
        for (g, act) in self.actions.iter().enumerate() {
            let (a, b) = (shapes.from[g], shapes.to[g]);
            if let Some(m) = act {
                if bases[b].is_empty() && bases[a].iter().any(|v| m.vec_mul(v).iter().any(|x| !x.is_zero())) {
                    return Err(SchurError::Inconsistent("subspace is not invariant".into()));
                }
            }
        }
        Ok(FiniteModule::new(bases.iter().map(Vec::len).collect(), actions, self.zero.clone()))
    }
}

/// A homomorphism `V → W`: one `dim V_w × dim W_w` matrix per weight.
pub type WeightMap<F> = Vec<Matrix<F>>;

/// Basis of `Hom(V, W)`, by incremental restriction of the solution space
/// one generator at a time.
pub fn hom_space<F: Field>(shapes: &GeneratorShapes, v: &FiniteModule<F>, w: &FiniteModule<F>) -> Vec<WeightMap<F>> {
    let zero = v.zero().clone();
    let nw = v.weight_dims.len();
    let mut offset = vec![0usize; nw + 1];
    for x in 0..nw {
        offset[x + 1] = offset[x] + v.weight_dims[x] * w.weight_dims[x];
    }
    let n = offset[nw];
    if n == 0 {
        return Vec::new();
    }
    // columns of the current solution space, as flat vectors
    let mut sols: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut e = vec![zero.clone(); n];
            e[i] = zero.one_like();
            e
        })
        .collect();
    let extract = |s: &[F], x: usize| -> Matrix<F> {
        let (r, c) = (v.weight_dims[x], w.weight_dims[x]);
        let mut m = Matrix::zeros(r, c, &zero);
        for i in 0..r {
            for j in 0..c {
                m.set(i, j, s[offset[x] + i * c + j].clone());
            }
        }
        m
    };
    for g in 0..shapes.len() {
        if sols.is_empty() {
            break;
        }
        if v.actions[g].is_none() && w.actions[g].is_none() {
            continue;
        }
        let (a, b) = (shapes.from[g], shapes.to[g]);
        if v.weight_dims[a] == 0 || w.weight_dims[b] == 0 {
            continue;
        }
        let vg = v.block(shapes, g);
        let wg = w.block(shapes, g);
        // residual V_g f_b - f_a W_g for each solution
        let residuals: Vec<Vec<F>> = sols
            .iter()
            .map(|s| {
                let lhs = vg.mul(&extract(s, b));
                let rhs = extract(s, a).mul(&wg);
                lhs.sub(&rhs).rows_vec().concat()
            })
            .collect();
        if residuals.iter().all(|r| r.iter().all(|x| x.is_zero())) {
            continue;
        }
        let m = Matrix::from_columns(&residuals, residuals[0].len(), &zero);
        let ker = m.kernel();
        sols = ker
            .iter()
            .map(|k| {
                let mut acc = vec![zero.clone(); n];
                for (c, s) in k.iter().zip(&sols) {
                    if !c.is_zero() {
                        for (d, x) in acc.iter_mut().zip(s) {
                            d.add_mul(c, x);
                        }
                    }
                }
                acc
            })
            .collect();
    }
    sols.iter().map(|s| (0..nw).map(|x| extract(s, x)).collect()).collect()
}

/// Composition factors of `v` as indices into `simples`, found by
/// repeatedly mapping onto a simple module and passing to the kernel.
/// Candidates are tried in order of increasing dimension, and only when
/// their weight spaces fit inside those of the current module.
pub fn composition_factors<F: Field>(
    shapes: &GeneratorShapes,
    v: &FiniteModule<F>,
    simples: &[FiniteModule<F>],
) -> Result<Vec<usize>, SchurError> {
    let mut order: Vec<usize> = (0..simples.len()).collect();
    order.sort_by_key(|&i| (simples[i].dim(), i));
    let mut factors = Vec::new();
    let mut cur = v.clone();
    while cur.dim() > 0 {
        let mut found = None;
        for &i in &order {
            let s = &simples[i];
            if s.weight_dims.iter().zip(&cur.weight_dims).any(|(a, b)| a > b) {
                continue;
            }
            if let Some(f) = hom_space(shapes, &cur, s).into_iter().next() {
                found = Some((i, f));
                break;
            }
        }
        let (i, f) = found.ok_or(SchurError::UnidentifiedFactor { dim: cur.dim() })?;
        factors.push(i);
        // kernel of f, weight by weight: left null space of f_w
        let bases: Vec<Vec<Vec<F>>> = f
            .iter()
            .zip(&cur.weight_dims)
            .map(|(fw, &d)| {
                if d == 0 {
                    Vec::new()
                } else if fw.ncols() == 0 {
                    (0..d)
                        .map(|j| {
                            let mut e = vec![cur.zero().clone(); d];
                            e[j] = cur.zero().one_like();
                            e
                        })
                        .collect()
                } else {
                    fw.transpose().kernel()
                }
            })
            .collect();
        cur = cur.restrict(shapes, &bases)?;
    }
    factors.sort_unstable();
    Ok(factors)
}
