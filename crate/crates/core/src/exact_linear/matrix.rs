//! Dense exact matrices and Gaussian elimination.
//!
//! Elimination always picks the first nonzero entry of the current column
//! as pivot, scanning rows top to bottom, so kernels and particular solutions
//! are reproducible run to run.

use std::fmt;

use thiserror::Error;

use super::scalar::{Field, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearError {
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("interpolation parameters are not pairwise distinct")]
    RepeatedParameter,
}

/// Row-major dense matrix over a ring. The stored `zero` acts as a template
/// for fresh entries (it carries the modulus for prime fields).
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
    zero: F,
}

impl<F: Ring> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Ring> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, template: &F) -> Self {
        let zero = template.zero_like();
        Matrix {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn identity(n: usize, template: &F) -> Self {
        let mut m = Self::zeros(n, n, template);
        let one = template.one_like();
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, template: &F) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
            zero: template.zero_like(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<F>], nrows: usize, template: &F) -> Self {
        let mut m = Self::zeros(nrows, cols.len(), template);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows);
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        m
    }

    /// Build from `(row, col, value)` triples; later triples overwrite.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, F)>,
        template: &F,
    ) -> Self {
        let mut m = Self::zeros(rows, cols, template);
        for (i, j, v) in entries {
            m.set(i, j, v);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn zero_elem(&self) -> &F {
        &self.zero
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(k, x)| (k / self.cols, k % self.cols, x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&o.data) {
            a.add_assign(b);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&o.data) {
            a.sub_assign(b);
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    /// `self += c * o`
    pub fn add_scaled(&mut self, c: &F, o: &Self) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                a.add_mul(c, b);
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols, &self.zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = o.row(k);
                let dst = &mut out.data[i * o.cols..(i + 1) * o.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    if !b.is_zero() {
                        d.add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.zero.clone();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_mul(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `v * self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![self.zero.clone(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (d, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    d.add_mul(c, a);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows, &self.zero);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<F: Field> Matrix<F> {
    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for x in self.row_mut(r) {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                self.eliminate(i, r, &f);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row_i -= f * row_r
    fn eliminate(&mut self, i: usize, r: usize, f: &F) {
        let cols = self.cols;
        let negf = f.neg();
        let (src, dst) = if i < r {
            let (lo, hi) = self.data.split_at_mut(r * cols);
            (&hi[..cols], &mut lo[i * cols..(i + 1) * cols])
        } else {
            let (lo, hi) = self.data.split_at_mut(i * cols);
            (&lo[r * cols..(r + 1) * cols], &mut hi[..cols])
        };
        for (d, s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                d.add_mul(&negf, s);
            }
        }
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.zero.clone(); self.cols];
            v[free] = self.zero.one_like();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// A particular solution of `self * x = rhs`.
    pub fn solve(&self, rhs: &[F]) -> Result<Vec<F>, LinearError> {
        if rhs.len() != self.rows {
            return Err(LinearError::DimensionMismatch {
                expected: self.rows,
                got: rhs.len(),
            });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1, &self.zero);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Err(LinearError::Inconsistent);
        }
        let mut x = vec![self.zero.clone(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, self.cols).clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n, &self.zero);
        let one = self.zero.one_like();
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, one.clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Result of [`solve_and_rank`].
#[derive(Clone, Debug)]
pub struct SolveReport<F> {
    pub rank: usize,
    pub kernel: Vec<Vec<F>>,
    pub solution: Option<Result<Vec<F>, LinearError>>,
}

/// Rank, kernel basis and (optionally) a particular solution in one call.
pub fn solve_and_rank<F: Field>(m: &Matrix<F>, rhs: Option<&[F]>) -> SolveReport<F> {
    SolveReport {
        rank: m.rank(),
        kernel: m.kernel(),
        solution: rhs.map(|b| m.solve(b)),
    }
}

/// Precomputed elimination for repeated solves `A x = b` with a fixed `A`.
///
/// Stores the transform `E` with `E A = rref(A)`; a solve costs one
/// matrix-vector product.
#[derive(Clone, Debug)]
pub struct LinearSolver<F: Ring> {
    transform: Matrix<F>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl<F: Field> LinearSolver<F> {
    pub fn new(a: &Matrix<F>) -> Self {
        let (m, n) = (a.nrows(), a.ncols());
        let mut aug = Matrix::zeros(m, n + m, a.zero_elem());
        let one = a.zero_elem().one_like();
        for i in 0..m {
            for j in 0..n {
                aug.set(i, j, a.get(i, j).clone());
            }
            aug.set(i, n + i, one.clone());
        }
        // pivots restricted to the first n columns: eliminate column by column
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !aug.get(i, c).is_zero()) else {
                continue;
            };
            aug.swap_rows(r, p);
            let inv = aug.get(r, c).inv().unwrap();
            for x in aug.row_mut(r) {
                if !x.is_zero() {
                    *x = x.mul(&inv);
                }
            }
            for i in 0..m {
                if i != r {
                    let f = aug.get(i, c).clone();
                    if !f.is_zero() {
                        aug.eliminate(i, r, &f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut transform = Matrix::zeros(m, m, a.zero_elem());
        for i in 0..m {
            for j in 0..m {
                transform.set(i, j, aug.get(i, n + j).clone());
            }
        }
        LinearSolver {
            transform,
            pivots,
            ncols: n,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// A solution of `A x = b`, or `None` if `b` is outside the column space.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let c = self.transform.mul_vec(b);
        if c[self.pivots.len()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut x = vec![self.transform.zero_elem().clone(); self.ncols];
        for (row, &pc) in self.pivots.iter().enumerate() {
            x[pc] = c[row].clone();
        }
        Some(x)
    }

    /// Is `b` in the column space of `A`?
    pub fn contains(&self, b: &[F]) -> bool {
        let c = self.transform.mul_vec(b);
        c[self.pivots.len()..].iter().all(|x| x.is_zero())
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `F^n`.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Ring> {
    dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Residue of `v` after reduction against the current basis.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            let negf = f.neg();
            for (d, s) in v.iter_mut().zip(row) {
                if !s.is_zero() {
                    d.add_mul(&negf, s);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Insert `v`; returns `true` if the rank grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        // keep earlier rows reduced at the new pivot
        for row in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            let negf = f.neg();
            for (d, s) in row.iter_mut().zip(&v) {
                if !s.is_zero() {
                    d.add_mul(&negf, s);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }
}

/// Evaluate `sum_j coeffs[j] x^j`.
pub fn eval_poly<F: Ring>(coeffs: &[F], x: &F) -> F {
    let mut acc = x.zero_like();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::scalar::{Fp, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(),
            &q(0),
        )
    }

    #[test]
    fn identity_has_full_rank() {
        let id = Matrix::identity(3, &q(0));
        let rep = solve_and_rank(&id, None);
        assert_eq!(rep.rank, 3);
        assert!(rep.kernel.is_empty());
    }

    #[test]
    fn zero_matrix_kernel() {
        let z = Matrix::zeros(2, 2, &q(0));
        let rep = solve_and_rank(&z, None);
        assert_eq!(rep.rank, 0);
        assert_eq!(rep.kernel.len(), 2);
    }

    #[test]
    fn rank_one() {
        assert_eq!(qm(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn solve_and_kernel_are_exact() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 7], &[1, 2, 4]]);
        let b = vec![q(1), q(3), q(2)];
        let rep = solve_and_rank(&m, Some(&b));
        let x = rep.solution.unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), b);
        for k in &rep.kernel {
            assert!(m.mul_vec(k).iter().all(|v| v.is_zero()));
        }
        assert_eq!(rep.rank + rep.kernel.len(), 3);
    }

    #[test]
    fn inconsistent_system() {
        let m = qm(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&[q(1), q(2)]), Err(LinearError::Inconsistent));
    }

    #[test]
    fn solver_matches_direct_solve() {
        let p = 7;
        let f = |x: i64| Fp::new(x, p);
        let m = Matrix::from_rows(
            vec![
                vec![f(1), f(2), f(0), f(3)],
                vec![f(0), f(0), f(1), f(1)],
                vec![f(1), f(2), f(1), f(4)],
            ],
            &f(0),
        );
        let s = LinearSolver::new(&m);
        assert_eq!(s.rank(), 2);
        let b = m.mul_vec(&[f(1), f(5), f(2), f(6)]);
        let x = s.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(s.solve(&[f(1), f(0), f(0)]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, &q(0)));
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn echelon_basis_tracks_rank() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&[q(1), q(1), q(0)]));
        assert!(!e.insert(&[q(2), q(2), q(0)]));
        assert!(e.insert(&[q(0), q(1), q(1)]));
        assert!(e.contains(&[q(1), q(2), q(1)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn pivoting_is_first_nonzero() {
        let m = qm(&[&[0, 1], &[3, 0], &[1, 0]]);
        let (_, piv) = m.rref();
        assert_eq!(piv, vec![0, 1]);
        // kernel of a wide matrix follows the free column order
        let w = qm(&[&[1, 1, 1]]);
        let k = w.kernel();
        assert_eq!(k, vec![vec![q(-1), q(1), q(0)], vec![q(-1), q(0), q(1)]]);
    }
}
