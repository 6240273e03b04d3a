//! Splitting shapes and tableaux into the `g` blocks of a parabolic shape.

use super::multicomp::{alpha_and_a, MultiComp, ParabolicShape};
use super::tableaux::{Diagram, SemiTableau, StdTableau};
use super::CombinatoricsError;

/// Node ranges of each block in the reading order of `λ`.
fn block_ranges(lambda: &MultiComp, p: &ParabolicShape) -> Vec<std::ops::Range<usize>> {
    let (alpha, a) = alpha_and_a(lambda, p);
    (0..p.g()).map(|k| a[k]..a[k] + alpha[k]).collect()
}

/// `t ∈ Std(λ)_0`: the letters of `t^[k]` are exactly `a_k+1 .. a_k+n_k`.
pub fn in_std0(t: &StdTableau, lambda: &MultiComp, p: &ParabolicShape) -> bool {
    block_ranges(lambda, p).iter().all(|rg| {
        t.letters[rg.clone()]
            .iter()
            .all(|&l| rg.contains(&(l as usize - 1)))
    })
}

/// `t ↦ (t^[1], ..., t^[g])` for `t ∈ Std(λ)_0`, letters renumbered from 1.
pub fn split_std(
    t: &StdTableau,
    lambda: &MultiComp,
    p: &ParabolicShape,
) -> Result<Vec<StdTableau>, CombinatoricsError> {
    if !in_std0(t, lambda, p) {
        return Err(CombinatoricsError::BlockMismatch);
    }
    Ok(block_ranges(lambda, p)
        .into_iter()
        .map(|rg| StdTableau {
            letters: t.letters[rg.clone()].iter().map(|&l| l - rg.start as u8).collect(),
        })
        .collect())
}

pub fn join_std(parts: &[StdTableau]) -> StdTableau {
    let mut letters = Vec::new();
    let mut shift = 0u8;
    for t in parts {
        letters.extend(t.letters.iter().map(|&l| l + shift));
        shift += t.letters.len() as u8;
    }
    StdTableau { letters }
}

/// `T ↦ (T^[1], ..., T^[g])` for `T` of shape `λ` and type `μ` with
/// `α_p(λ) = α_p(μ)`; component labels are renumbered within each block.
pub fn split_semi(
    t: &SemiTableau,
    lambda: &MultiComp,
    p: &ParabolicShape,
) -> Result<Vec<SemiTableau>, CombinatoricsError> {
    let diag = Diagram::new(lambda);
    let mut out = vec![SemiTableau { entries: Vec::new() }; p.g()];
    for (x, &(i, k)) in t.entries.iter().enumerate() {
        let kb = p.block_of(diag.node(x).0);
        if p.block_of(k as usize - 1) != kb {
            return Err(CombinatoricsError::BlockMismatch);
        }
        out[kb].entries.push((i, k - p.offset(kb) as u8));
    }
    Ok(out)
}

pub fn join_semi(parts: &[SemiTableau], p: &ParabolicShape) -> SemiTableau {
    SemiTableau {
        entries: parts
            .iter()
            .enumerate()
            .flat_map(|(kb, t)| t.entries.iter().map(move |&(i, k)| (i, k + p.offset(kb) as u8)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::catalog::Catalog;
    use crate::combinatorics::tableaux::std_tableaux;

    #[test]
    fn std0_counts_factorize() {
        for n in 1..=3 {
            for parts in [vec![1, 1], vec![2], vec![1, 1, 1], vec![2, 1]] {
                let p = ParabolicShape::new(parts).unwrap();
                let cat = Catalog::new(n, &vec![n; p.r()]);
                for (l, lam) in cat.plus().iter().enumerate() {
                    let std0: Vec<_> = cat.std(l).iter().filter(|t| in_std0(t, lam, &p)).collect();
                    let expect: usize = lam
                        .blocks(&p)
                        .iter()
                        .map(|b| std_tableaux(&Diagram::new(b)).len())
                        .product();
                    assert_eq!(std0.len(), expect);
                    for t in std0 {
                        let parts = split_std(t, lam, &p).unwrap();
                        for (b, tb) in lam.blocks(&p).iter().zip(&parts) {
                            assert!(tb.is_standard(&Diagram::new(b)));
                        }
                        assert_eq!(&join_std(&parts), t);
                    }
                }
            }
        }
    }

    #[test]
    fn semistandard_split_is_bijective() {
        let p = ParabolicShape::finest(2);
        let cat = Catalog::new(3, &[3, 3]);
        for (l, lam) in cat.plus().iter().enumerate() {
            for (mu_i, mu) in cat.lambda().iter().enumerate() {
                if lam.alpha_p(&p) != mu.alpha_p(&p) {
                    continue;
                }
                let lb = lam.blocks(&p);
                let mb = mu.blocks(&p);
                let expect: usize = lb
                    .iter()
                    .zip(&mb)
                    .map(|(x, y)| {
                        crate::combinatorics::tableaux::semistandard_tableaux(&Diagram::new(x), y).len()
                    })
                    .product();
                assert_eq!(cat.t0(l, mu_i).len(), expect);
                let mut seen = std::collections::HashSet::new();
                for t in cat.t0(l, mu_i) {
                    let parts = split_semi(t, lam, &p).unwrap();
                    assert_eq!(&join_semi(&parts, &p), t);
                    assert!(seen.insert(parts));
                }
            }
        }
    }
}
