//! The set `Ω` of 0/1 multicompositions supported on the last component of
//! each block, the permutations `d(ω)`, and the correspondence between
//! `Std(λ)` and `⋃_ω T_0^p(λ, ω)`.

use super::catalog::Catalog;
use super::multicomp::{alpha_and_a, MultiComp, ParabolicShape};
use super::perm::Perm;
use super::tableaux::{mu_of_std, SemiTableau, StdTableau};
use super::CombinatoricsError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OmegaElement {
    pub comp: MultiComp,
    /// `b_ω(i)` (0-based block) for each letter `i = 1..n`
    pub blocks: Vec<usize>,
    /// `d(ω)`: `a_k + j ↦ i_{kj}`
    pub d: Perm,
    pub alpha: Vec<usize>,
    pub a: Vec<usize>,
}

impl OmegaElement {
    /// Build from the block assignment `b: {1..n} → {0..g-1}`.
    pub fn from_blocks(blocks: Vec<usize>, p: &ParabolicShape) -> Self {
        let n = blocks.len();
        let mut comps = vec![Vec::new(); p.r()];
        for k in 0..p.g() {
            comps[p.last_component(k)] = blocks.iter().map(|&b| usize::from(b == k)).collect();
        }
        let comp = MultiComp::new(comps);
        let (alpha, a) = alpha_and_a(&comp, p);
        let mut img = vec![0u8; n];
        for k in 0..p.g() {
            let members = (0..n).filter(|&i| blocks[i] == k);
            for (j, i) in members.enumerate() {
                img[a[k] + j] = i as u8;
            }
        }
        OmegaElement { comp, blocks, d: Perm(img), alpha, a }
    }
}

/// `Ω^p`, one element per assignment of letters to blocks (`g^n` in all),
/// ordered like `Λ`.
pub fn omega_set(n: usize, p: &ParabolicShape, m: &[usize]) -> Result<Vec<OmegaElement>, CombinatoricsError> {
    if m.len() != p.r() || m.iter().any(|&mi| mi < n) {
        return Err(CombinatoricsError::BoundsTooSmall);
    }
    let g = p.g();
    let total = g.pow(n as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut c = code;
        let mut blocks = vec![0; n];
        for b in blocks.iter_mut().rev() {
            *b = c % g;
            c /= g;
        }
        out.push(OmegaElement::from_blocks(blocks, p));
    }
    out.sort_by(|x, y| super::multicomp::enumeration_cmp(&x.comp, &y.comp, m));
    Ok(out)
}

/// The image of one standard tableau under `t ↦ (ω_t, T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaImage {
    /// index into the `Ω` list
    pub omega: usize,
    /// the semistandard tableau `T ∈ T_0^p(λ, ω)`
    pub tableau: SemiTableau,
    /// `t_1` with `t = t_1 d(ω)`
    pub t1: StdTableau,
}

/// Map `t ∈ Std(λ)` to its block assignment `ω_t` and tableau `T`.
pub fn omega_image(
    t: &StdTableau,
    lambda: &MultiComp,
    p: &ParabolicShape,
    omegas: &[OmegaElement],
) -> OmegaImage {
    let n = t.letters.len();
    let diag = super::tableaux::Diagram::new(lambda);
    let mut blocks = vec![0; n];
    let mut entries = Vec::with_capacity(n);
    for (x, &l) in t.letters.iter().enumerate() {
        let k = p.block_of(diag.node(x).0);
        blocks[l as usize - 1] = k;
        entries.push((l, p.last_component(k) as u8 + 1));
    }
    let omega = omegas
        .iter()
        .position(|w| w.blocks == blocks)
        .expect("every block assignment is in Ω");
    let dinv = omegas[omega].d.inverse();
    let t1 = StdTableau {
        letters: t.letters.iter().map(|&l| dinv.0[l as usize - 1] + 1).collect(),
    };
    OmegaImage { omega, tableau: SemiTableau { entries }, t1 }
}

/// Check the correspondence `t ↦ (ω_t, T)` for one `λ`: the images are pairwise distinct, lie in
/// `T_0(λ, ω)` with matching `a_p`, exhaust every `T_0^p(λ, ω)`, and
/// `ω(t_1) = T`.
pub fn omega_bijection_holds(cat: &Catalog, l: usize, p: &ParabolicShape, omegas: &[OmegaElement]) -> bool {
    let lam = &cat.plus()[l];
    let (_, a_lam) = alpha_and_a(lam, p);
    let mut seen = std::collections::HashSet::new();
    let mut count = 0usize;
    for t in cat.std(l) {
        let img = omega_image(t, lam, p, omegas);
        let w = &omegas[img.omega];
        let Some(mu) = cat.lambda_index(&w.comp) else { return false };
        if cat.t0_index(l, mu, &img.tableau).is_none() || w.a != a_lam {
            return false;
        }
        if mu_of_std(&w.comp, &img.t1) != img.tableau {
            return false;
        }
        if !seen.insert((img.omega, img.tableau)) {
            return false;
        }
        count += 1;
    }
    let target: usize = omegas
        .iter()
        .filter(|w| w.a == a_lam)
        .map(|w| cat.t0(l, cat.lambda_index(&w.comp).unwrap()).len())
        .sum();
    count == target
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_block_omega() {
        let p = ParabolicShape::whole(2);
        let om = omega_set(3, &p, &[3, 3]).unwrap();
        assert_eq!(om.len(), 1);
        assert_eq!(om[0].comp, MultiComp::new(vec![vec![], vec![1, 1, 1]]));
        assert!(om[0].d.is_identity());
    }

    #[test]
    fn two_blocks_n2() {
        let p = ParabolicShape::finest(2);
        let om = omega_set(2, &p, &[2, 2]).unwrap();
        assert_eq!(om.len(), 4);
        let w = om.iter().find(|w| w.blocks == vec![1, 0]).unwrap();
        assert_eq!(w.d, Perm::simple(2, 1));
        assert_eq!(w.alpha, vec![1, 1]);
    }

    #[test]
    fn bounds_checked() {
        let p = ParabolicShape::finest(2);
        assert_eq!(omega_set(3, &p, &[2, 3]), Err(CombinatoricsError::BoundsTooSmall));
    }

    #[test]
    fn d_omega_lengths_are_shuffles() {
        let p = ParabolicShape::finest(3);
        let om = omega_set(3, &p, &[3, 3, 3]).unwrap();
        assert_eq!(om.len(), 27);
        for w in &om {
            // d(ω) is increasing on each block of consecutive positions
            for k in 0..3 {
                let seg = &w.d.0[w.a[k]..w.a[k] + w.alpha[k]];
                assert!(seg.windows(2).all(|x| x[0] < x[1]));
            }
        }
    }

    #[test]
    fn bijection_for_small_cases() {
        for n in 1..=3 {
            for parts in [vec![1, 1], vec![2], vec![1, 1, 1], vec![2, 1], vec![1, 2], vec![3]] {
                let p = ParabolicShape::new(parts).unwrap();
                let m = vec![n; p.r()];
                let cat = Catalog::new(n, &m);
                let om = omega_set(n, &p, &m).unwrap();
                for l in 0..cat.plus().len() {
                    assert!(omega_bijection_holds(&cat, l, &p, &om), "n={n} p={p} l={l}");
                }
            }
        }
    }

    #[test]
    fn initial_tableau_maps_to_identity_omega() {
        let p = ParabolicShape::finest(2);
        let cat = Catalog::new(3, &[3, 3]);
        let om = omega_set(3, &p, &[3, 3]).unwrap();
        for (l, lam) in cat.plus().iter().enumerate() {
            let img = omega_image(&cat.std(l)[0], lam, &p, &om);
            assert!(om[img.omega].d.is_identity());
            assert_eq!(img.t1, cat.std(l)[0]);
        }
    }
}
