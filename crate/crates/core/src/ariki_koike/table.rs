//! Precomputed multiplication table for `H` over a field.

use super::hecke::{HVec, HeckeAlgebra};
use crate::exact_linear::{Field, Matrix};

/// `prods[a * dim + b]` is the sparse expansion of `basis_a · basis_b`.
#[derive(Clone, Debug)]
pub struct MulTable<F: Field> {
    dim: usize,
    prods: Vec<Vec<(u32, F)>>,
    zero: F,
}

impl<F: Field> MulTable<F> {
    pub fn new(h: &HeckeAlgebra<F>) -> Self {
        let dim = h.dim();
        let mut prods = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            let word = h.basis_word(a);
            for b in 0..dim {
                let v = h.left_word(&word, &h.basis(b));
                prods.push(
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (i as u32, c))
                        .collect(),
                );
            }
        }
        MulTable { dim, prods, zero: h.zero_scalar().clone() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_product(&self, a: usize, b: usize) -> &[(u32, F)] {
        &self.prods[a * self.dim + b]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> HVec<F> {
        let mut out = vec![self.zero.clone(); self.dim];
        let ys: Vec<(usize, &F)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for &(b, yb) in &ys {
                let c = xa.mul(yb);
                for (i, v) in &self.prods[a * self.dim + b] {
                    out[*i as usize].add_mul(&c, v);
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ x · y` in the row-vector convention.
    pub fn right_matrix(&self, y: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim, &self.zero);
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            for a in 0..self.dim {
                for (i, v) in &self.prods[a * self.dim + b] {
                    m.get_mut(a, *i as usize).add_mul(yb, v);
                }
            }
        }
        m
    }

    /// Matrix of `x ↦ y · x` in the row-vector convention.
    pub fn left_matrix(&self, y: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim, &self.zero);
        for (a, ya) in y.iter().enumerate() {
            if ya.is_zero() {
                continue;
            }
            for b in 0..self.dim {
                for (i, v) in &self.prods[a * self.dim + b] {
                    m.get_mut(b, *i as usize).add_mul(ya, v);
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::Fp;

    #[test]
    fn table_agrees_with_word_multiplication() {
        let q = Fp::new(2, 5);
        let h = HeckeAlgebra::new(2, 2, q, Fp::new(3, 5), vec![Fp::new(1, 5), Fp::new(2, 5)]);
        let t = MulTable::new(&h);
        for a in 0..h.dim() {
            for b in 0..h.dim() {
                let x: Vec<Fp> = (0..h.dim()).map(|i| Fp::new((i * a + b) as i64, 5)).collect();
                let y: Vec<Fp> = (0..h.dim()).map(|i| Fp::new((i + 2 * b + a) as i64, 5)).collect();
                assert_eq!(t.mul(&x, &y), h.mul(&x, &y));
                assert_eq!(t.right_matrix(&y).vec_mul(&x), h.mul(&x, &y));
                assert_eq!(t.left_matrix(&x).vec_mul(&y), h.mul(&x, &y));
            }
        }
    }
}
