//! Defining relations of `H` and the annihilating polynomials of the
//! Jucys-Murphy elements, checked in normal form.

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use super::hecke::{HVec, HeckeAlgebra};
use crate::check::Check;
use crate::exact_linear::Ring;

fn check(name: impl Into<String>, passed: bool) -> Check {
    Check::new(name, passed)
}

fn prod<R: Ring>(h: &HeckeAlgebra<R>, xs: &[HVec<R>]) -> HVec<R> {
    xs.iter().fold(h.one(), |acc, x| h.mul(&acc, x))
}

/// Every defining relation, each reduced to normal form and compared.
pub fn defining_relations<R: Ring>(h: &HeckeAlgebra<R>) -> Vec<Check> {
    let n = h.n();
    let t: Vec<HVec<R>> = (0..n.max(1)).map(|i| h.t(i)).collect();
    let mut out = Vec::new();
    let mut poly = h.one();
    for qj in h.big_q() {
        poly = h.mul(&poly, &h.sub(&t[0], &h.scalar(qj)));
    }
    out.push(check("cyclotomic relation of T0", h.is_zero(&poly)));
    for i in 1..n {
        let a = h.sub(&t[i], &h.scalar(h.q()));
        let b = h.add(&t[i], &h.scalar(&h.qinv));
        out.push(check(format!("quadratic relation of T{i}"), h.is_zero(&h.mul(&a, &b))));
    }
    if n >= 2 {
        let lhs = prod(h, &[t[0].clone(), t[1].clone(), t[0].clone(), t[1].clone()]);
        let rhs = prod(h, &[t[1].clone(), t[0].clone(), t[1].clone(), t[0].clone()]);
        out.push(check("T0T1T0T1 = T1T0T1T0", lhs == rhs));
    }
    for i in 2..n {
        out.push(check(
            format!("T0T{i} = T{i}T0"),
            h.mul(&t[0], &t[i]) == h.mul(&t[i], &t[0]),
        ));
    }
    for i in 1..n.saturating_sub(1) {
        let lhs = prod(h, &[t[i].clone(), t[i + 1].clone(), t[i].clone()]);
        let rhs = prod(h, &[t[i + 1].clone(), t[i].clone(), t[i + 1].clone()]);
        out.push(check(format!("braid relation T{i}T{}", i + 1), lhs == rhs));
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push(check(
                format!("T{i}T{j} = T{j}T{i}"),
                h.mul(&t[i], &t[j]) == h.mul(&t[j], &t[i]),
            ));
        }
    }
    out
}

/// `q^{2c}` for a possibly negative `c`.
fn q_even_power<R: Ring>(h: &HeckeAlgebra<R>, c: i64) -> R {
    if c >= 0 {
        h.q.pow(2 * c as u32)
    } else {
        h.qinv.pow(2 * (-c) as u32)
    }
}

/// The factors `L_k - q^{2c} Q_j`, `|c| < k`, of the annihilating
/// polynomial of `L_k` (eigenvalues are `Q_j q^{2·content}`).
pub fn jm_factors<R: Ring>(h: &HeckeAlgebra<R>, k: usize) -> Vec<(usize, i64, R)> {
    let mut out = Vec::new();
    for (j, qj) in h.big_q().iter().enumerate() {
        for c in -(k as i64 - 1)..=(k as i64 - 1) {
            out.push((j, c, q_even_power(h, c).mul(qj)));
        }
    }
    out
}

pub fn jm_polynomial_value<R: Ring>(h: &HeckeAlgebra<R>, k: usize, skip: Option<usize>) -> HVec<R> {
    let lk = h.l(k);
    let mut acc = h.one();
    for (idx, (_, _, root)) in jm_factors(h, k).into_iter().enumerate() {
        if Some(idx) != skip {
            acc = h.mul(&acc, &h.sub(&lk, &h.scalar(&root)));
        }
    }
    acc
}

/// `∏_j ∏_{|c|<k} (L_k - q^{2c} Q_j) = 0` for every `k`.
pub fn jm_annihilation<R: Ring>(h: &HeckeAlgebra<R>) -> Vec<Check> {
    (1..=h.n())
        .map(|k| check(format!("annihilating polynomial of L{k}"), h.is_zero(&jm_polynomial_value(h, k, None))))
        .collect()
}

/// Dropping any single factor leaves a nonzero element. Only meaningful
/// when the roots `q^{2c} Q_j` are pairwise distinct, so `k` with repeated
/// roots are left out.
pub fn jm_minimality<R: Ring>(h: &HeckeAlgebra<R>) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=h.n() {
        let roots = jm_factors(h, k);
        if roots.iter().enumerate().any(|(i, a)| roots[i + 1..].iter().any(|b| a.2 == b.2)) {
            continue;
        }
        let ok = (0..roots.len()).all(|skip| !h.is_zero(&jm_polynomial_value(h, k, Some(skip))));
        out.push(check(format!("minimality of the L{k} polynomial"), ok));
    }
    out
}

/// `∏_j (L_k - Q_j)` for each `k`; zero only for `k = 1` in general.
pub fn naive_jm_relation<R: Ring>(h: &HeckeAlgebra<R>) -> Vec<(usize, bool)> {
    (1..=h.n())
        .map(|k| {
            let lk = h.l(k);
            let mut acc = h.one();
            for qj in h.big_q() {
                acc = h.mul(&acc, &h.sub(&lk, &h.scalar(qj)));
            }
            (k, h.is_zero(&acc))
        })
        .collect()
}

/// Pairwise commutation of `L_1, ..., L_n`.
pub fn jm_commute<R: Ring>(h: &HeckeAlgebra<R>) -> Check {
    let ls: Vec<HVec<R>> = (1..=h.n()).map(|k| h.l(k)).collect();
    let ok = ls
        .iter()
        .enumerate()
        .all(|(a, x)| ls[a + 1..].iter().all(|y| h.mul(x, y) == h.mul(y, x)));
    check("L_k commute", ok)
}

/// A random element with a few nonzero small-integer coefficients.
pub fn random_element<R: Ring>(h: &HeckeAlgebra<R>, rng: &mut ChaCha8Rng, terms: usize) -> HVec<R> {
    let mut v = h.zero();
    for _ in 0..terms {
        let b = rng.gen_range(0..h.dim());
        let c = rng.gen_range(-3i64..=3);
        v[b].add_assign(&h.one_scalar().from_i64_like(c));
    }
    v
}

/// `(xy)z = x(yz)` on `count` random triples.
pub fn associativity<R: Ring>(h: &HeckeAlgebra<R>, rng: &mut ChaCha8Rng, count: usize) -> Check {
    let ok = (0..count).all(|_| {
        let x = random_element(h, rng, 3);
        let y = random_element(h, rng, 3);
        let z = random_element(h, rng, 3);
        h.mul(&h.mul(&x, &y), &z) == h.mul(&x, &h.mul(&y, &z))
    });
    check(format!("associativity on {count} random triples"), ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::{Fp, Rational};
    use rand::SeedableRng;

    #[test]
    fn generic_relations_hold() {
        let h = HeckeAlgebra::generic(3, 2);
        assert!(defining_relations(&h).iter().all(|c| c.passed));
        assert!(jm_commute(&h).passed);
    }

    #[test]
    fn jm_polynomials() {
        let h = HeckeAlgebra::generic(2, 2);
        assert!(jm_annihilation(&h).iter().all(|c| c.passed));
        assert_eq!(naive_jm_relation(&h), vec![(1, true), (2, false)]);
        let hq = HeckeAlgebra::new(
            3,
            2,
            Rational::from_int(2),
            Rational::from_frac(1, 2),
            vec![Rational::from_int(1), Rational::from_int(100)],
        );
        assert!(jm_annihilation(&hq).iter().all(|c| c.passed));
        assert_eq!(jm_minimality(&hq).len(), 3);
        assert!(jm_minimality(&hq).iter().all(|c| c.passed));
        // over F_5 with q² = -1 the roots for L_3 repeat; L_1, L_2 stay testable
        let hf = HeckeAlgebra::new(3, 2, Fp::new(2, 5), Fp::new(3, 5), vec![Fp::new(1, 5), Fp::new(2, 5)]);
        let names: Vec<String> = jm_minimality(&hf).into_iter().map(|c| c.name).collect();
        assert!(!names.iter().any(|n| n.contains("L3")));
        assert!(jm_annihilation(&hf).iter().all(|c| c.passed));
    }

    #[test]
    fn random_associativity_fp() {
        let h = HeckeAlgebra::new(3, 2, Fp::new(2, 5), Fp::new(3, 5), vec![Fp::new(1, 5), Fp::new(2, 5)]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert!(associativity(&h, &mut rng, 20).passed);
    }
}
