//! Vandermonde interpolation data.
//!
//! For pairwise distinct `Q_1..Q_g` let `A_ij = Q_j^(i-1)` and
//! `Delta = det A = prod_{i>j} (Q_i - Q_j)`. Writing `A^-1 = Delta^-1 (h_ij)`,
//! the polynomials `F_i(X) = sum_j h_ij X^(j-1)` satisfy
//! `F_i(Q_j) = Delta * [i == j]`, so `Delta^-1 F_i` is the Lagrange basis
//! polynomial at `Q_i`.
//!
//! `(h_ij)` is the adjugate of `A`, which is computed by cofactors and so
//! makes sense over any commutative ring (the generic ring included).

use super::matrix::LinearError;
use super::scalar::{Field, Ring};

/// `Delta` together with the coefficient lists of `F_1..F_g`
/// (`coeffs[i][j]` multiplies `X^j`).
#[derive(Clone, Debug, PartialEq)]
pub struct VandermondeData<R> {
    pub delta: R,
    pub coeffs: Vec<Vec<R>>,
}

impl<R: Ring> VandermondeData<R> {
    pub fn g(&self) -> usize {
        self.coeffs.len()
    }

    /// `F_i(x)` with `i` 0-based.
    pub fn eval(&self, i: usize, x: &R) -> R {
        super::matrix::eval_poly(&self.coeffs[i], x)
    }
}

fn det<R: Ring>(m: &[Vec<R>], one: &R) -> R {
    let n = m.len();
    match n {
        0 => one.clone(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = one.zero_like();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let t = m[0][j].mul(&det(&minor, one));
                if j % 2 == 0 {
                    acc.add_assign(&t);
                } else {
                    acc.sub_assign(&t);
                }
            }
            acc
        }
    }
}

/// Interpolation data over an arbitrary commutative ring; `Delta` may be zero.
pub fn vandermonde_data_ring<R: Ring>(qp: &[R], one: &R) -> VandermondeData<R> {
    let g = qp.len();
    // A_ij = qp[j]^i (0-based)
    let a: Vec<Vec<R>> = (0..g)
        .map(|i| (0..g).map(|j| qp[j].pow(i as u32)).collect())
        .collect();
    let mut delta = one.clone();
    for i in 0..g {
        for j in 0..i {
            delta = delta.mul(&qp[i].sub(&qp[j]));
        }
    }
    // adj(A)_ij = (-1)^(i+j) det(A with row j and column i removed)
    let mut coeffs = vec![vec![one.zero_like(); g]; g];
    for i in 0..g {
        for j in 0..g {
            let minor: Vec<Vec<R>> = a
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != i)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = det(&minor, one);
            coeffs[i][j] = if (i + j) % 2 == 0 { d } else { d.neg() };
        }
    }
    VandermondeData { delta, coeffs }
}

/// Interpolation data over a field, refusing repeated parameters.
pub fn vandermonde_data<F: Field>(qp: &[F], one: &F) -> Result<VandermondeData<F>, LinearError> {
    let data = vandermonde_data_ring(qp, one);
    if data.delta.is_zero() {
        return Err(LinearError::RepeatedParameter);
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::scalar::{Fp, Laurent, Rational};
    use proptest::prelude::*;

    #[test]
    fn g1_is_trivial() {
        let one = Rational::from_int(1);
        let d = vandermonde_data(&[Rational::from_int(5)], &one).unwrap();
        assert!(d.delta.is_one());
        assert_eq!(d.coeffs, vec![vec![one]]);
    }

    #[test]
    fn g2_generic_adjugate() {
        let one = Laurent::constant(1);
        let (q1, q2) = (Laurent::big_q(1), Laurent::big_q(2));
        let d = vandermonde_data_ring(&[q1.clone(), q2.clone()], &one);
        assert_eq!(d.delta, q2.sub(&q1));
        // F_1 = Q2 - X, F_2 = X - Q1
        assert_eq!(d.coeffs[0], vec![q2.clone(), one.neg()]);
        assert_eq!(d.coeffs[1], vec![q1.neg(), one.clone()]);
    }

    #[test]
    fn g3_rational_example() {
        let one = Rational::from_int(1);
        let qp: Vec<Rational> = [1, 2, 3].iter().map(|&x| Rational::from_int(x)).collect();
        let d = vandermonde_data(&qp, &one).unwrap();
        assert_eq!(d.delta, Rational::from_int(2));
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { d.delta.clone() } else { one.zero_like() };
                assert_eq!(d.eval(i, &qp[j]), expect);
            }
        }
    }

    #[test]
    fn repeated_parameter_rejected() {
        let one = Fp::new(1, 5);
        let qp = [Fp::new(1, 5), Fp::new(6, 5)];
        assert_eq!(
            vandermonde_data(&qp, &one),
            Err(LinearError::RepeatedParameter)
        );
    }

    proptest! {
        #[test]
        fn interpolation_identity(vals in proptest::collection::btree_set(-50i64..50, 1..=4)) {
            let one = Rational::from_int(1);
            let qp: Vec<Rational> = vals.iter().map(|&x| Rational::from_int(x)).collect();
            let d = vandermonde_data(&qp, &one).unwrap();
            for i in 0..qp.len() {
                for j in 0..qp.len() {
                    let expect = if i == j { d.delta.clone() } else { one.zero_like() };
                    prop_assert_eq!(d.eval(i, &qp[j]), expect);
                }
            }
        }
    }
}
