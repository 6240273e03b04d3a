//! `S(Λ) = S^p · S^{p*}`, checked as a rank statement one weight block
//! `Hom(M^κ, M^μ)` at a time.

use std::collections::BTreeMap;

use super::context::ParabolicContext;
use crate::check::Check;
use crate::exact_linear::{EchelonBasis, Field};

/// Rank of the span of `{a·b : a ∈ C^p, b ∈ C^{p*}}` per weight block,
/// stopping early in each block once it is full. Returns the total rank
/// next to `dim S(Λ)`.
pub fn product_decomposition_rank<F: Field>(pc: &ParabolicContext<'_, F>) -> (usize, usize) {
    let s = pc.s;
    let nw = pc.cat().lambda().len();
    let mut left: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for &a in pc.members() {
        let lb = s.label(a);
        left.entry((lb.s.mu, lb.t.mu)).or_default().push(a);
    }
    let mut right: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for b in pc.star_members() {
        let lb = s.label(b);
        right.entry((lb.s.mu, lb.t.mu)).or_default().push(b);
    }
    let empty = Vec::new();
    let mut total = 0;
    for mu in 0..nw {
        for kappa in 0..nw {
            let block = s.pair(mu, kappa);
            if block.is_empty() {
                continue;
            }
            let mut ech = EchelonBasis::new(block.len());
            'fill: for nu in 0..nw {
                let av = left.get(&(mu, nu)).unwrap_or(&empty);
                let bv = right.get(&(nu, kappa)).unwrap_or(&empty);
                for &a in av {
                    for &b in bv {
                        let mut v = vec![s.zero().clone(); block.len()];
                        for (i, c) in s.compose(a, b) {
                            let k = block.binary_search(&i).expect("product stays in its weight block");
                            v[k] = c;
                        }
                        ech.insert(&v);
                        if ech.is_full() {
                            break 'fill;
                        }
                    }
                }
            }
            total += ech.rank();
        }
    }
    (total, s.dim())
}

pub fn product_decomposition_check<F: Field>(pc: &ParabolicContext<'_, F>) -> Check {
    let (rank, dim) = product_decomposition_rank(pc);
    Check::new(format!("S(Λ) = S^p·S^p*, p = {}", pc.p), rank == dim)
        .with_witness(format!("rank {rank} < dim {dim}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::ParabolicShape;
    use crate::parabolic::context::tests::ctx;

    #[test]
    fn spans_at_two_two() {
        let s = ctx(2, 2);
        for p in [ParabolicShape::finest(2), ParabolicShape::whole(2)] {
            let pc = ParabolicContext::new(&s, p).unwrap();
            assert_eq!(product_decomposition_rank(&pc), (210, 210));
        }
    }
}
