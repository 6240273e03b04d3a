//! Dimension counts for `H̄^p`: the block formula
//! `Σ_α n_α² ∏_k n_k! r_k^{n_k} = n! rⁿ`, cross-checked against
//! `Σ_λ (dim S^λ)²` with `dim S^λ` from the hook length formula, and the
//! structural facts behind it (central orthogonal `e_α`, matrix units
//! `φ̄_ω`, the size of each block).

use serde::Serialize;

use super::blocks::{h0_basis, Block};
use super::context::{Elem, ModifiedContext};
use super::ModifiedError;
use crate::check::Check;
use crate::combinatorics::{generate_lambda, MultiComp, ParabolicShape};
use crate::exact_linear::{EchelonBasis, Field};

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Compositions of `n` into exactly `g` nonnegative parts.
pub fn weak_compositions(n: usize, g: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, g: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if g == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=n).rev() {
            cur.push(x);
            go(n - x, g - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if g > 0 {
        go(n, g, &mut Vec::new(), &mut out);
    }
    out
}

/// All parabolic shapes with `r` components.
pub fn shapes(r: usize) -> Vec<ParabolicShape> {
    (1..=r)
        .flat_map(|g| weak_compositions(r - g, g))
        .map(|c| ParabolicShape::new(c.into_iter().map(|x| x + 1).collect()).expect("positive parts"))
        .collect()
}

/// `Σ_α n_α² ∏_k n_k! r_k^{n_k}` over `α ⊨ n` with `g` parts.
pub fn block_sum(n: usize, p: &ParabolicShape) -> u128 {
    weak_compositions(n, p.g())
        .iter()
        .map(|alpha| {
            let prod_fact: u128 = alpha.iter().map(|&x| factorial(x)).product();
            let n_alpha = factorial(n) / prod_fact;
            let factor: u128 = alpha
                .iter()
                .enumerate()
                .map(|(k, &nk)| factorial(nk) * (p.part(k) as u128).pow(nk as u32))
                .product();
            n_alpha * n_alpha * factor
        })
        .sum()
}

/// Number of standard tableaux of a partition, by hook lengths.
pub fn hook_count(shape: &[usize]) -> u128 {
    let size: usize = shape.iter().sum();
    let mut hooks: u128 = 1;
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let leg = shape[i + 1..].iter().filter(|&&l| l > j).count();
            hooks *= (row - j + leg) as u128;
        }
    }
    factorial(size) / hooks
}

/// `dim S^λ = n!/∏|λ^{(k)}|! · ∏ f_{λ^{(k)}}` for a multipartition.
pub fn multipartition_dim(lambda: &MultiComp) -> u128 {
    let mut num = factorial(lambda.size());
    for c in lambda.components() {
        let sz: usize = c.iter().sum();
        num = num / factorial(sz) * hook_count(c);
    }
    num
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionRow {
    pub n: usize,
    pub p: Vec<usize>,
    pub block_sum: String,
    pub expected: String,
    pub hook_sum: String,
}

/// The three counts for every `n ≤ max_n`, `r ≤ max_r`, and shape with at
/// most `max_g` parts.
pub fn dimension_table(max_n: usize, max_r: usize, max_g: usize) -> (Vec<DimensionRow>, Check) {
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for n in 1..=max_n {
        for r in 1..=max_r {
            let (_, plus) = generate_lambda(n, &vec![n; r]);
            let hook_sum: u128 = plus.iter().map(|l| multipartition_dim(l).pow(2)).sum();
            let expected = factorial(n) * (r as u128).pow(n as u32);
            for p in shapes(r).into_iter().filter(|p| p.g() <= max_g) {
                let bs = block_sum(n, &p);
                if bs != expected || hook_sum != expected {
                    bad.push(format!("n={n} p={p}: Σ_α = {bs}, Σ_λ f² = {hook_sum}, n!rⁿ = {expected}"));
                }
                rows.push(DimensionRow {
                    n,
                    p: p.parts().to_vec(),
                    block_sum: bs.to_string(),
                    expected: expected.to_string(),
                    hook_sum: hook_sum.to_string(),
                });
            }
        }
    }
    (rows, Check::from_witnesses("Σ_α n_α² ∏ n_k! r_k^{n_k} = n! rⁿ = Σ_λ (dim S^λ)²", bad))
}

fn span_rank<F: Field>(dim: usize, xs: impl IntoIterator<Item = Elem<F>>) -> usize {
    let mut ech = EchelonBasis::new(dim);
    for x in xs {
        ech.insert(&x);
    }
    ech.rank()
}

/// Structure of the block decomposition of an explicit `H̄^p`.
pub fn block_structure_checks<F: Field>(mc: &ModifiedContext<'_, F>, blocks: &[Block<F>]) -> Result<Vec<Check>, ModifiedError> {
    let dim = mc.dim();
    let basis: Vec<Elem<F>> = (0..dim).map(|k| mc.basis_elem(k)).collect();
    let mut out = Vec::new();

    let total = blocks.iter().fold(mc.zero(), |acc, b| mc.add(&acc, &b.e));
    out.push(Check::new("Σ_α e_α = 1", total == mc.one()));

    let mut bad = Vec::new();
    for (i, a) in blocks.iter().enumerate() {
        if mc.mul(&a.e, &a.e) != a.e {
            bad.push(format!("e_{:?} not idempotent", a.alpha));
        }
        for b in &blocks[i + 1..] {
            if !ModifiedContext::is_zero(&mc.mul(&a.e, &b.e)) || !ModifiedContext::is_zero(&mc.mul(&b.e, &a.e)) {
                bad.push(format!("e_{:?} e_{:?} ≠ 0", a.alpha, b.alpha));
            }
        }
    }
    out.push(Check::from_witnesses("e_α are orthogonal idempotents", bad));

    let mut bad = Vec::new();
    for b in blocks {
        for (k, x) in basis.iter().enumerate() {
            if mc.mul(&b.e, x) != mc.mul(x, &b.e) {
                bad.push(format!("e_{:?} and basis element {k}", b.alpha));
            }
        }
    }
    out.push(Check::from_witnesses("e_α are central", bad));

    let mut bad = Vec::new();
    for a in blocks {
        for b in blocks.iter().filter(|b| b.alpha != a.alpha) {
            if basis.iter().any(|x| !ModifiedContext::is_zero(&mc.mul_all(&[&a.e, x, &b.e]))) {
                bad.push(format!("e_{:?} H̄ e_{:?}", a.alpha, b.alpha));
            }
        }
    }
    out.push(Check::from_witnesses("e_α H̄ e_β = 0 for α ≠ β", bad));

    let mut bad = Vec::new();
    let mut sum = 0;
    for b in blocks {
        let rank = mc.left_matrix(&b.e).rank();
        let target = b.n_alpha() * b.n_alpha() * b.factor_dim();
        sum += rank;
        if rank != target {
            bad.push(format!("dim H̄_{:?} = {rank}, n_α² ∏ n_k! r_k^{{n_k}} = {target}", b.alpha));
        }
        let h0 = span_rank(dim, h0_basis(mc, b)?);
        if h0 != b.factor_dim() {
            bad.push(format!("dim H̄^0_{:?} = {h0}, expected {}", b.alpha, b.factor_dim()));
        }
    }
    if sum != dim {
        bad.push(format!("Σ_α dim H̄_α = {sum} ≠ {dim}"));
    }
    out.push(Check::from_witnesses("dim H̄_α = n_α² ∏ n_k! r_k^{n_k} and dim H̄^0_α = ∏ n_k! r_k^{n_k}", bad));

    let mut bad = Vec::new();
    for b in blocks {
        let phis: Vec<Elem<F>> = b.omegas.iter().map(|&w| mc.phi_omega(w)).collect();
        for (i, x) in phis.iter().enumerate() {
            for (j, y) in phis.iter().enumerate() {
                let xy = mc.mul(x, y);
                let ok = if i == j { xy == *x } else { ModifiedContext::is_zero(&xy) };
                if !ok {
                    bad.push(format!("φ̄_ω φ̄_ω' for α={:?}, ({i}, {j})", b.alpha));
                }
                let r = span_rank(dim, basis.iter().map(|h| mc.mul_all(&[x, h, y])));
                if r != b.factor_dim() {
                    bad.push(format!("dim φ̄_ω H̄ φ̄_ω' = {r} for α={:?}, ({i}, {j})", b.alpha));
                }
            }
        }
    }
    out.push(Check::from_witnesses("φ̄_ω (ω ∈ Ω^α) orthogonal idempotents with dim φ̄_ω H̄ φ̄_ω' = ∏ n_k! r_k^{n_k}", bad));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modified_ak::{blocks, xi_family};
    use crate::parabolic::context::tests::ctx;
    use crate::parabolic::ParabolicContext;

    #[test]
    fn hook_lengths_known_values() {
        assert_eq!(hook_count(&[2, 1]), 2);
        assert_eq!(hook_count(&[3, 2]), 5);
        assert_eq!(hook_count(&[2, 2, 1]), 5);
        assert_eq!(hook_count(&[]), 1);
    }

    #[test]
    fn block_formula_small_sizes() {
        let (rows, check) = dimension_table(4, 4, 3);
        assert!(check.passed, "{check:?}");
        assert!(rows.iter().any(|r| r.n == 4 && r.p == vec![1, 1, 2]));
        assert_eq!(shapes(3).len(), 4);
    }

    #[test]
    fn block_structure_two_two() {
        let s = ctx(2, 2);
        for p in [ParabolicShape::finest(2), ParabolicShape::whole(2)] {
            let pc = ParabolicContext::new(&s, p).unwrap();
            let mc = ModifiedContext::new(&pc).unwrap();
            let fam = xi_family(&mc).unwrap();
            let bl = blocks(&mc, &fam).unwrap();
            for c in block_structure_checks(&mc, &bl).unwrap() {
                assert!(c.passed, "{c:?}");
            }
        }
    }
}
