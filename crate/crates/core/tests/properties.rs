//! Randomized properties of the exact linear algebra and the multipartition
//! combinatorics.

use cyclo_schur::combinatorics::{dominates_eq, MultiComp, ParabolicShape};
use cyclo_schur::exact_linear::{Field, Fp, Matrix, Ring};
use proptest::prelude::*;

const P: u32 = 7;

fn fp_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Fp>> {
    proptest::collection::vec(0i64..P as i64, rows * cols).prop_map(move |v| {
        let one = Fp::new(1, P);
        let rows = v.chunks(cols).map(|r| r.iter().map(|&x| Fp::new(x, P)).collect()).collect();
        Matrix::from_rows(rows, &one)
    })
}

fn multicomp(r: usize, n: usize) -> impl Strategy<Value = MultiComp> {
    proptest::collection::vec(proptest::collection::vec(0usize..=n, 0..3), r).prop_map(MultiComp::new)
}

fn shape(r: usize) -> impl Strategy<Value = ParabolicShape> {
    // compositions of r from a bitmask of cut points
    (0u32..(1 << (r - 1))).prop_map(move |mask| {
        let mut parts = vec![1];
        for i in 0..r - 1 {
            if mask & (1 << i) != 0 {
                parts.push(1);
            } else {
                *parts.last_mut().unwrap() += 1;
            }
        }
        ParabolicShape::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn rank_nullity(a in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| fp_matrix(r, c))) {
        let ker = a.kernel();
        prop_assert_eq!(a.rank() + ker.len(), a.ncols());
        for v in &ker {
            prop_assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn inverse_is_two_sided(a in (1usize..5).prop_flat_map(|n| fp_matrix(n, n))) {
        let id = Matrix::identity(a.nrows(), &Fp::new(1, P));
        match a.inverse() {
            Some(b) => {
                prop_assert_eq!(a.mul(&b), id.clone());
                prop_assert_eq!(b.mul(&a), id);
            }
            None => prop_assert!(a.rank() < a.nrows()),
        }
    }

    #[test]
    fn solve_recovers_consistent_rhs(
        (a, x) in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            (fp_matrix(r, c), proptest::collection::vec(0i64..P as i64, c))
        })
    ) {
        let x: Vec<Fp> = x.into_iter().map(|v| Fp::new(v, P)).collect();
        let b = a.mul_vec(&x);
        let y = a.solve(&b).expect("b lies in the column space");
        prop_assert_eq!(a.mul_vec(&y), b);
    }

    #[test]
    fn fp_field_axioms(x in 1i64..P as i64, y in 0i64..P as i64) {
        let (x, y) = (Fp::new(x, P), Fp::new(y, P));
        prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        prop_assert_eq!(x.add(&y).sub(&y), x);
        prop_assert_eq!(x.pow(P - 1), x.one_like());
    }

    #[test]
    fn blocks_rejoin((mu, p) in (1usize..5).prop_flat_map(|r| (multicomp(r, 3), shape(r)))) {
        let blocks = mu.blocks(&p);
        prop_assert_eq!(blocks.len(), p.g());
        prop_assert_eq!(MultiComp::join(&blocks), mu.clone());
        let alpha = mu.alpha_p(&p);
        prop_assert_eq!(alpha.iter().sum::<usize>(), mu.size());
        // a_p are the partial sums of α_p
        let a = mu.a_p(&p);
        let mut acc = 0;
        for k in 0..p.g() {
            prop_assert_eq!(a[k], acc);
            acc += alpha[k];
        }
    }

    #[test]
    fn dominance_is_a_partial_order(
        (a, b) in (1usize..4).prop_flat_map(|r| (multicomp(r, 2), multicomp(r, 2)))
    ) {
        prop_assert!(dominates_eq(&a, &a));
        if a.size() == b.size() && dominates_eq(&a, &b) && dominates_eq(&b, &a) {
            prop_assert_eq!(a, b);
        }
    }
}
