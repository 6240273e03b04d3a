//! Precomputed tableau tables for a fixed `(n, r, m)`, plus the parabolic
//! index sets `Σ^p`, `I^p`, `J^p`.

use std::collections::HashMap;

use super::multicomp::{alpha_and_a, dominates, generate_lambda, vec_gt, MultiComp, ParabolicShape};
use super::tableaux::{mu_of_std, semistandard_tableaux, std_tableaux, Diagram, SemiTableau, StdTableau};

/// Everything combinatorial about `Λ = P̃_{n,r}(m)` in one place.
#[derive(Clone, Debug)]
pub struct Catalog {
    n: usize,
    m: Vec<usize>,
    lambda: Vec<MultiComp>,
    lambda_index: HashMap<MultiComp, usize>,
    plus: Vec<MultiComp>,
    plus_to_lambda: Vec<usize>,
    diagrams: Vec<Diagram>,
    stds: Vec<Vec<StdTableau>>,
    std_index: Vec<HashMap<StdTableau, usize>>,
    std_len: Vec<Vec<usize>>,
    /// `t0[l][mu]` = `T_0(λ, μ)`
    t0: Vec<Vec<Vec<SemiTableau>>>,
    t0_index: Vec<Vec<HashMap<SemiTableau, usize>>>,
    /// `fibre[l][mu][t]` = index of `μ(t)` in `T_0(λ, μ)` when semistandard
    fibre: Vec<Vec<Vec<Option<usize>>>>,
    dom: Vec<Vec<bool>>,
}

impl Catalog {
    pub fn new(n: usize, m: &[usize]) -> Self {
        let (lambda, plus) = generate_lambda(n, m);
        let lambda_index: HashMap<MultiComp, usize> =
            lambda.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let plus_to_lambda = plus.iter().map(|x| lambda_index[x]).collect();
        let diagrams: Vec<Diagram> = plus.iter().map(Diagram::new).collect();
        let stds: Vec<Vec<StdTableau>> = diagrams.iter().map(std_tableaux).collect();
        let std_index = stds
            .iter()
            .map(|ts| ts.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect())
            .collect();
        let std_len = stds
            .iter()
            .map(|ts| ts.iter().map(|t| t.d().length()).collect())
            .collect();
        let mut t0 = Vec::with_capacity(plus.len());
        let mut t0_index = Vec::with_capacity(plus.len());
        let mut fibre = Vec::with_capacity(plus.len());
        for (l, diag) in diagrams.iter().enumerate() {
            let mut row = Vec::with_capacity(lambda.len());
            let mut row_index = Vec::with_capacity(lambda.len());
            let mut row_fibre = Vec::with_capacity(lambda.len());
            for mu in &lambda {
                let ts = semistandard_tableaux(diag, mu);
                let idx: HashMap<SemiTableau, usize> =
                    ts.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
                let fib = if ts.is_empty() {
                    vec![None; stds[l].len()]
                } else {
                    stds[l].iter().map(|s| idx.get(&mu_of_std(mu, s)).copied()).collect()
                };
                row.push(ts);
                row_index.push(idx);
                row_fibre.push(fib);
            }
            t0.push(row);
            t0_index.push(row_index);
            fibre.push(row_fibre);
        }
        let dom = plus
            .iter()
            .map(|a| plus.iter().map(|b| dominates(a, b)).collect())
            .collect();
        Catalog {
            n,
            m: m.to_vec(),
            lambda,
            lambda_index,
            plus,
            plus_to_lambda,
            diagrams,
            stds,
            std_index,
            std_len,
            t0,
            t0_index,
            fibre,
            dom,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    /// `Λ`
    pub fn lambda(&self) -> &[MultiComp] {
        &self.lambda
    }

    /// `Λ⁺`
    pub fn plus(&self) -> &[MultiComp] {
        &self.plus
    }

    pub fn lambda_index(&self, mu: &MultiComp) -> Option<usize> {
        self.lambda_index.get(mu).copied()
    }

    pub fn plus_index(&self, lam: &MultiComp) -> Option<usize> {
        self.plus.iter().position(|x| x == lam)
    }

    /// Index in `Λ` of the `l`-th element of `Λ⁺`.
    pub fn plus_in_lambda(&self, l: usize) -> usize {
        self.plus_to_lambda[l]
    }

    pub fn diagram(&self, l: usize) -> &Diagram {
        &self.diagrams[l]
    }

    pub fn std(&self, l: usize) -> &[StdTableau] {
        &self.stds[l]
    }

    pub fn std_index(&self, l: usize, t: &StdTableau) -> Option<usize> {
        self.std_index[l].get(t).copied()
    }

    /// `l(d(t))`
    pub fn std_length(&self, l: usize, t: usize) -> usize {
        self.std_len[l][t]
    }

    pub fn t0(&self, l: usize, mu: usize) -> &[SemiTableau] {
        &self.t0[l][mu]
    }

    pub fn t0_index(&self, l: usize, mu: usize, t: &SemiTableau) -> Option<usize> {
        self.t0_index[l][mu].get(t).copied()
    }

    /// For each `t ∈ Std(λ)`, the index of `μ(t)` in `T_0(λ, μ)` if it is
    /// semistandard.
    pub fn fibre(&self, l: usize, mu: usize) -> &[Option<usize>] {
        &self.fibre[l][mu]
    }

    /// `|T_0(λ)|`
    pub fn t0_total(&self, l: usize) -> usize {
        self.t0[l].iter().map(Vec::len).sum()
    }

    /// Strict dominance `λ_a ⊳ λ_b` on `Λ⁺` indices.
    pub fn plus_dominates(&self, a: usize, b: usize) -> bool {
        self.dom[a][b]
    }

    /// `Σ_λ |Std(λ)|²`
    pub fn cellular_count(&self) -> usize {
        self.stds.iter().map(|s| s.len() * s.len()).sum()
    }

    /// `Σ_λ |T_0(λ)|²`
    pub fn schur_count(&self) -> usize {
        (0..self.plus.len()).map(|l| self.t0_total(l).pow(2)).sum()
    }
}

/// One label `ε = (λ, 0|1)` of `Σ^p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Epsilon {
    pub lambda: usize,
    pub eps: u8,
}

/// A semistandard tableau addressed by `(λ, μ, index in T_0(λ, μ))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SemiRef {
    pub mu: usize,
    pub idx: usize,
}

/// `Σ^p` with its index sets, for a fixed catalog and parabolic shape.
#[derive(Clone, Debug)]
pub struct SigmaIndex {
    p: ParabolicShape,
    a_lambda: Vec<Vec<usize>>,
    alpha_lambda: Vec<Vec<usize>>,
    elems: Vec<Epsilon>,
    i_sets: Vec<Vec<SemiRef>>,
    j_sets: Vec<Vec<SemiRef>>,
}

impl SigmaIndex {
    pub fn new(cat: &Catalog, p: &ParabolicShape) -> Self {
        let (alpha_lambda, a_lambda): (Vec<_>, Vec<_>) =
            cat.lambda().iter().map(|mu| alpha_and_a(mu, p)).unzip();
        let mut elems = Vec::new();
        let mut i_sets = Vec::new();
        let mut j_sets = Vec::new();
        for l in 0..cat.plus().len() {
            let al = &a_lambda[cat.plus_in_lambda(l)];
            let collect = |pred: &dyn Fn(usize) -> bool| -> Vec<SemiRef> {
                let mut v = Vec::new();
                for mu in 0..cat.lambda().len() {
                    if pred(mu) {
                        for idx in 0..cat.t0(l, mu).len() {
                            v.push(SemiRef { mu, idx });
                        }
                    }
                }
                v
            };
            let t0p = collect(&|mu| &a_lambda[mu] == al);
            elems.push(Epsilon { lambda: l, eps: 0 });
            i_sets.push(t0p.clone());
            j_sets.push(t0p);
            let lower = collect(&|mu| vec_gt(al, &a_lambda[mu]));
            if !lower.is_empty() {
                elems.push(Epsilon { lambda: l, eps: 1 });
                i_sets.push(lower);
                j_sets.push(collect(&|_| true));
            }
        }
        SigmaIndex { p: p.clone(), a_lambda, alpha_lambda, elems, i_sets, j_sets }
    }

    pub fn shape(&self) -> &ParabolicShape {
        &self.p
    }

    /// `a_p(μ)` for `μ` indexed in `Λ`.
    pub fn a_p(&self, mu: usize) -> &[usize] {
        &self.a_lambda[mu]
    }

    pub fn alpha_p(&self, mu: usize) -> &[usize] {
        &self.alpha_lambda[mu]
    }

    pub fn elems(&self) -> &[Epsilon] {
        &self.elems
    }

    pub fn position(&self, e: Epsilon) -> Option<usize> {
        self.elems.iter().position(|&x| x == e)
    }

    pub fn i_set(&self, e: usize) -> &[SemiRef] {
        &self.i_sets[e]
    }

    pub fn j_set(&self, e: usize) -> &[SemiRef] {
        &self.j_sets[e]
    }

    /// Strict order `ε_a > ε_b` on `Σ^p`.
    pub fn greater(&self, cat: &Catalog, a: usize, b: usize) -> bool {
        let (x, y) = (self.elems[a], self.elems[b]);
        cat.plus_dominates(x.lambda, y.lambda) || (x.lambda == y.lambda && x.eps > y.eps)
    }

    /// The label `ε` of `φ_{ST}` (`S ∈ T_0(λ, μ)`, `T ∈ T_0(λ, ν)`), or
    /// `None` when the basis element is not in `C^p`.
    pub fn classify(&self, cat: &Catalog, l: usize, mu: usize, nu: usize) -> Option<Epsilon> {
        let al = &self.a_lambda[cat.plus_in_lambda(l)];
        if vec_gt(al, &self.a_lambda[mu]) {
            Some(Epsilon { lambda: l, eps: 1 })
        } else if &self.a_lambda[mu] == al && &self.a_lambda[nu] == al {
            Some(Epsilon { lambda: l, eps: 0 })
        } else {
            None
        }
    }

    /// Whether `T_0^p(λ, μ) = T_0(λ, μ)` (as opposed to empty).
    pub fn in_t0p(&self, cat: &Catalog, l: usize, mu: usize) -> bool {
        self.a_lambda[cat.plus_in_lambda(l)] == self.a_lambda[mu]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mc(v: &[&[usize]]) -> MultiComp {
        MultiComp::new(v.iter().map(|c| c.to_vec()).collect())
    }

    #[test]
    fn catalog_counts() {
        let cat = Catalog::new(2, &[2, 2]);
        assert_eq!(cat.lambda().len(), 10);
        assert_eq!(cat.plus().len(), 5);
        assert_eq!(cat.cellular_count(), 8);
        assert_eq!(cat.schur_count(), 210);
        let cat3 = Catalog::new(3, &[3, 3]);
        assert_eq!(cat3.lambda().len(), 56);
        assert_eq!(cat3.schur_count(), 16215);
    }

    #[test]
    fn fibres_cover_semistandard_sets() {
        let cat = Catalog::new(3, &[3, 3]);
        for l in 0..cat.plus().len() {
            for mu in 0..cat.lambda().len() {
                let mut hit = vec![false; cat.t0(l, mu).len()];
                for f in cat.fibre(l, mu).iter().flatten() {
                    hit[*f] = true;
                }
                assert!(hit.into_iter().all(|h| h));
            }
        }
    }

    #[test]
    fn sigma_whole_shape_has_no_eps_one() {
        let cat = Catalog::new(2, &[2, 2]);
        let sig = SigmaIndex::new(&cat, &ParabolicShape::whole(2));
        assert!(sig.elems().iter().all(|e| e.eps == 0));
        assert_eq!(sig.elems().len(), cat.plus().len());
        for (e, eps) in sig.elems().iter().enumerate() {
            assert_eq!(sig.i_set(e).len(), cat.t0_total(eps.lambda));
        }
    }

    #[test]
    fn sigma_finest_shape_example() {
        let cat = Catalog::new(2, &[2, 2]);
        let p = ParabolicShape::finest(2);
        let sig = SigmaIndex::new(&cat, &p);
        let l = cat.plus_index(&mc(&[&[2], &[]])).unwrap();
        let e = sig.position(Epsilon { lambda: l, eps: 1 }).expect("(λ,1) retained");
        let mu = cat.lambda_index(&mc(&[&[1], &[1]])).unwrap();
        assert!(sig.i_set(e).iter().any(|s| s.mu == mu));
        assert_eq!(sig.j_set(e).len(), cat.t0_total(l));
        for (k, eps) in sig.elems().iter().enumerate() {
            assert!(!sig.i_set(k).is_empty() && !sig.j_set(k).is_empty());
            if eps.eps == 0 {
                assert_eq!(sig.i_set(k), sig.j_set(k));
            }
        }
        // T_0^p(((2),∅), ((1),(1))) is empty although T_0 is not
        assert!(!cat.t0(l, mu).is_empty());
        assert!(!sig.in_t0p(&cat, l, mu));
    }

    #[test]
    fn sigma_partitions_the_parabolic_basis() {
        let cat = Catalog::new(3, &[3, 3]);
        let p = ParabolicShape::finest(2);
        let sig = SigmaIndex::new(&cat, &p);
        let mut by_classify = 0usize;
        for l in 0..cat.plus().len() {
            for mu in 0..cat.lambda().len() {
                for nu in 0..cat.lambda().len() {
                    if sig.classify(&cat, l, mu, nu).is_some() {
                        by_classify += cat.t0(l, mu).len() * cat.t0(l, nu).len();
                    }
                }
            }
        }
        let by_sets: usize = (0..sig.elems().len())
            .map(|e| sig.i_set(e).len() * sig.j_set(e).len())
            .sum();
        assert_eq!(by_classify, by_sets);
    }
}
