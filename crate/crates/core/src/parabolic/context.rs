//! Basis bookkeeping for `S^p`: which `φ_{ST}` lie in `C^p`, their labels
//! in `Σ^p`, and the quotient basis `C̄^p`.

use super::ParabolicError;
use crate::combinatorics::{Catalog, Epsilon, ParabolicShape, SigmaIndex};
use crate::exact_linear::Field;
use crate::schur::{SchurContext, SchurVec};

pub struct ParabolicContext<'a, F: Field> {
    pub s: &'a SchurContext<F>,
    pub p: ParabolicShape,
    pub sigma: SigmaIndex,
    /// position in `Σ^p` of each basis index of `S(Λ)`, `None` off `C^p`
    cell: Vec<Option<usize>>,
    members: Vec<usize>,
    quotient: Vec<usize>,
}

impl<'a, F: Field> ParabolicContext<'a, F> {
    pub fn new(s: &'a SchurContext<F>, p: ParabolicShape) -> Result<Self, ParabolicError> {
        let cat = &s.cat;
        if p.r() != cat.r() {
            return Err(ParabolicError::ShapeMismatch { shape: p.to_string(), r: cat.r() });
        }
        let sigma = SigmaIndex::new(cat, &p);
        let cell: Vec<Option<usize>> = s
            .labels()
            .iter()
            .map(|lb| {
                sigma
                    .classify(cat, lb.lambda, lb.s.mu, lb.t.mu)
                    .map(|e| sigma.position(e).expect("classified labels lie in Σ^p"))
            })
            .collect();
        let members: Vec<usize> = (0..s.dim()).filter(|&i| cell[i].is_some()).collect();
        let quotient = members.iter().copied().filter(|&i| sigma.elems()[cell[i].unwrap()].eps == 0).collect();
        let pc = ParabolicContext { s, p, sigma, cell, members, quotient };
        if let Some((i, _)) = s.unit().iter().find(|(i, _)| pc.cell[*i].is_none()) {
            return Err(ParabolicError::ClosureViolation(format!("the identity involves basis element {i} outside C^p")));
        }
        Ok(pc)
    }

    pub fn cat(&self) -> &Catalog {
        &self.s.cat
    }

    /// Position in `Σ^p` of basis element `i`, if it lies in `C^p`.
    pub fn cell_of(&self, i: usize) -> Option<usize> {
        self.cell[i]
    }

    pub fn epsilon(&self, c: usize) -> Epsilon {
        self.sigma.elems()[c]
    }

    pub fn is_member(&self, i: usize) -> bool {
        self.cell[i].is_some()
    }

    /// `C^p`, sorted.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// `C^{p*}`, sorted.
    pub fn star_members(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.members.iter().map(|&i| self.s.star_index(i)).collect();
        v.sort_unstable();
        v
    }

    /// `C̄^p`: elements of `C^p` in cells `(λ, 0)`, sorted.
    pub fn quotient_members(&self) -> &[usize] {
        &self.quotient
    }

    pub fn in_quotient(&self, i: usize) -> bool {
        self.cell[i].is_some_and(|c| self.sigma.elems()[c].eps == 0)
    }

    /// Basis of the ideal `Ŝ^p`.
    pub fn ideal_members(&self) -> Vec<usize> {
        self.members.iter().copied().filter(|&i| !self.in_quotient(i)).collect()
    }

    /// `α_p(λ)` of the cell containing basis element `i`.
    pub fn alpha_of(&self, i: usize) -> &[usize] {
        let cat = self.cat();
        self.sigma.alpha_p(cat.plus_in_lambda(self.s.label(i).lambda))
    }

    /// The distinct `α_p(λ)` for `λ ∈ Λ⁺`, in order of first appearance.
    pub fn alphas(&self) -> Vec<Vec<usize>> {
        let cat = self.cat();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for l in 0..cat.plus().len() {
            let a = self.sigma.alpha_p(cat.plus_in_lambda(l)).to_vec();
            if !out.contains(&a) {
                out.push(a);
            }
        }
        out
    }

    /// `C̄^p` elements of the block `S̄^p_α`.
    pub fn quotient_block(&self, alpha: &[usize]) -> Vec<usize> {
        self.quotient.iter().copied().filter(|&i| self.alpha_of(i) == alpha).collect()
    }

    /// Product in `S̄^p` of cosets represented by `x` and `y`: the product in
    /// `S(Λ)` with the `Ŝ^p` part dropped.
    pub fn quotient_mul(&self, x: &[(usize, F)], y: &[(usize, F)]) -> SchurVec<F> {
        self.s.mul(x, y).into_iter().filter(|(i, _)| self.in_quotient(*i)).collect()
    }

    /// Whether `C^p ⊆ C^{p_big}` as sets of basis indices.
    pub fn contained_in(&self, other: &ParabolicContext<'_, F>) -> bool {
        self.members.iter().all(|&i| other.is_member(i))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::ariki_koike::HeckeAlgebra;
    use crate::exact_linear::Fp;

    pub(crate) fn ctx(n: usize, r: usize) -> SchurContext<Fp> {
        let qs = (1..=r as i64).map(|x| Fp::new(x, 5)).collect();
        let h = HeckeAlgebra::new(n, r, Fp::new(2, 5), Fp::new(3, 5), qs);
        SchurContext::new(h, Catalog::new(n, &vec![n; r])).unwrap()
    }

    #[test]
    fn whole_shape_gives_everything() {
        let s = ctx(2, 2);
        let pc = ParabolicContext::new(&s, ParabolicShape::whole(2)).unwrap();
        assert_eq!(pc.members().len(), s.dim());
        assert_eq!(pc.quotient_members().len(), s.dim());
        assert!(pc.ideal_members().is_empty());
    }

    #[test]
    fn finest_shape_counts() {
        let s = ctx(2, 2);
        let pc = ParabolicContext::new(&s, ParabolicShape::finest(2)).unwrap();
        // the defining condition read literally:
        // a_p(λ) > a_p(μ) whenever α_p(μ) ≠ α_p(ν)
        let cat = &s.cat;
        let p = ParabolicShape::finest(2);
        let direct = s
            .labels()
            .iter()
            .filter(|lb| {
                let (lam, mu, nu) = (&cat.plus()[lb.lambda], &cat.lambda()[lb.s.mu], &cat.lambda()[lb.t.mu]);
                mu.alpha_p(&p) == nu.alpha_p(&p) || crate::combinatorics::vec_gt(&lam.a_p(&p), &mu.a_p(&p))
            })
            .count();
        assert_eq!(pc.members().len(), direct);
        let tp: usize = (0..cat.plus().len())
            .map(|l| {
                let n: usize = (0..cat.lambda().len())
                    .filter(|&mu| pc.sigma.in_t0p(cat, l, mu))
                    .map(|mu| cat.t0(l, mu).len())
                    .sum();
                n * n
            })
            .sum();
        assert_eq!(pc.quotient_members().len(), tp);
        let again = ParabolicContext::new(&s, ParabolicShape::finest(2)).unwrap();
        assert_eq!(again.members(), pc.members());
    }

    #[test]
    fn refinement_gives_containment_for_two_components() {
        let s = ctx(2, 2);
        let fine = ParabolicContext::new(&s, ParabolicShape::finest(2)).unwrap();
        let whole = ParabolicContext::new(&s, ParabolicShape::whole(2)).unwrap();
        assert!(fine.contained_in(&whole));
        assert!(!whole.contained_in(&fine));
    }

    #[test]
    fn refinement_loses_strictness_with_three_components() {
        // a_{p'}(λ) > a_{p'}(μ) only gives a_p(λ) ≥ a_p(μ) after coarsening
        let s = ctx(2, 3);
        let fine = ParabolicContext::new(&s, ParabolicShape::finest(3)).unwrap();
        let mid = ParabolicContext::new(&s, ParabolicShape::new(vec![1, 2]).unwrap()).unwrap();
        let whole = ParabolicContext::new(&s, ParabolicShape::whole(3)).unwrap();
        assert!(fine.contained_in(&whole));
        assert!(mid.contained_in(&whole));
        assert!(!fine.contained_in(&mid));
        let cat = &s.cat;
        let mc = |v: &[&[usize]]| crate::combinatorics::MultiComp::new(v.iter().map(|c| c.to_vec()).collect());
        let (l, mu, nu) = (mc(&[&[1], &[1], &[]]), mc(&[&[1], &[], &[1]]), mc(&[&[], &[2], &[]]));
        let witness = s.labels().iter().position(|lb| {
            cat.plus()[lb.lambda] == l && cat.lambda()[lb.s.mu] == mu && cat.lambda()[lb.t.mu] == nu
        });
        let w = witness.expect("φ_ST with these shapes exists");
        assert!(fine.is_member(w) && !mid.is_member(w));
    }
}
