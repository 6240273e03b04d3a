//! Multicompositions, multipartitions, dominance and parabolic shapes.

use std::cmp::Ordering;
use std::fmt;

use super::CombinatoricsError;

/// An `r`-tuple of compositions. Trailing zero parts are trimmed so that
/// equality is equality of the padded sequences.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiComp {
    comps: Vec<Vec<usize>>,
}

impl MultiComp {
    pub fn new(comps: Vec<Vec<usize>>) -> Self {
        let comps = comps
            .into_iter()
            .map(|mut c| {
                while c.last() == Some(&0) {
                    c.pop();
                }
                c
            })
            .collect();
        MultiComp { comps }
    }

    /// The empty `r`-composition of 0.
    pub fn empty(r: usize) -> Self {
        MultiComp { comps: vec![Vec::new(); r] }
    }

    pub fn r(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().flatten().sum()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    /// Component `k` (0-based).
    pub fn component(&self, k: usize) -> &[usize] {
        &self.comps[k]
    }

    pub fn component_size(&self, k: usize) -> usize {
        self.comps[k].iter().sum()
    }

    /// Part `i` of component `k` (both 0-based), zero beyond the stored length.
    pub fn part(&self, k: usize, i: usize) -> usize {
        self.comps[k].get(i).copied().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.comps.iter().all(|c| c.windows(2).all(|w| w[0] >= w[1]))
    }

    pub fn fits(&self, m: &[usize]) -> bool {
        m.len() == self.r() && self.comps.iter().zip(m).all(|(c, &mi)| c.len() <= mi)
    }

    /// Flattened parts padded to the bound vector `m`.
    pub fn padded(&self, m: &[usize]) -> Vec<usize> {
        let mut v = Vec::with_capacity(m.iter().sum());
        for (k, &mk) in m.iter().enumerate() {
            for i in 0..mk {
                v.push(self.part(k, i));
            }
        }
        v
    }

    /// `alpha(mu) = (|mu^(1)|, ..., |mu^(r)|)`.
    pub fn alpha(&self) -> Vec<usize> {
        (0..self.r()).map(|k| self.component_size(k)).collect()
    }

    pub fn alpha_p(&self, p: &ParabolicShape) -> Vec<usize> {
        alpha_and_a(self, p).0
    }

    pub fn a_p(&self, p: &ParabolicShape) -> Vec<usize> {
        alpha_and_a(self, p).1
    }

    /// Components `p_k+1 .. p_k+r_k` as an `r_k`-composition.
    pub fn block(&self, p: &ParabolicShape, k: usize) -> MultiComp {
        let (start, len) = (p.offset(k), p.part(k));
        MultiComp { comps: self.comps[start..start + len].to_vec() }
    }

    pub fn blocks(&self, p: &ParabolicShape) -> Vec<MultiComp> {
        (0..p.g()).map(|k| self.block(p, k)).collect()
    }

    /// Inverse of [`MultiComp::blocks`].
    pub fn join(blocks: &[MultiComp]) -> MultiComp {
        MultiComp {
            comps: blocks.iter().flat_map(|b| b.comps.iter().cloned()).collect(),
        }
    }

    pub fn to_arrays(&self) -> Vec<Vec<usize>> {
        self.comps.clone()
    }
}

impl fmt::Display for MultiComp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.comps.iter().enumerate() {
            if k > 0 {
                write!(f, ";")?;
            }
            if c.is_empty() {
                write!(f, "-")?;
            }
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, ")")
    }
}

/// `p = (r_1, ..., r_g)` with offsets `p_k = r_1 + ... + r_{k-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParabolicShape {
    parts: Vec<usize>,
    offsets: Vec<usize>,
}

impl ParabolicShape {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(CombinatoricsError::InvalidShape(format!("{parts:?}")));
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for &x in &parts {
            offsets.push(acc);
            acc += x;
        }
        Ok(ParabolicShape { parts, offsets })
    }

    /// `p = (r)`.
    pub fn whole(r: usize) -> Self {
        Self::new(vec![r]).expect("r >= 1")
    }

    /// `p = (1^r)`.
    pub fn finest(r: usize) -> Self {
        Self::new(vec![1; r]).expect("r >= 1")
    }

    pub fn g(&self) -> usize {
        self.parts.len()
    }

    pub fn r(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `r_k` (0-based `k`).
    pub fn part(&self, k: usize) -> usize {
        self.parts[k]
    }

    /// `p_k` (0-based `k`), the number of components before block `k`.
    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k]
    }

    /// Block containing component `c` (0-based).
    pub fn block_of(&self, c: usize) -> usize {
        (0..self.g()).rev().find(|&k| self.offsets[k] <= c).unwrap()
    }

    /// 0-based index of the last component of block `k`, i.e. `p_k + r_k - 1`.
    pub fn last_component(&self, k: usize) -> usize {
        self.offsets[k] + self.parts[k] - 1
    }

    /// `p' ⪯ p`: `p'` refines `p` (every block of `p` is a union of
    /// consecutive blocks of `p'`).
    pub fn refines(&self, coarser: &ParabolicShape) -> bool {
        self.r() == coarser.r() && coarser.offsets.iter().all(|o| self.offsets.contains(o))
    }
}

impl fmt::Display for ParabolicShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `(alpha_p(mu), a_p(mu))`: block sizes `n_k` and their partial sums `a_k`.
pub fn alpha_and_a(mu: &MultiComp, p: &ParabolicShape) -> (Vec<usize>, Vec<usize>) {
    assert_eq!(mu.r(), p.r(), "shape and composition disagree on r");
    let alpha: Vec<usize> = (0..p.g())
        .map(|k| (0..p.part(k)).map(|i| mu.component_size(p.offset(k) + i)).sum())
        .collect();
    let mut a = Vec::with_capacity(alpha.len());
    let mut acc = 0;
    for &nk in &alpha {
        a.push(acc);
        acc += nk;
    }
    (alpha, a)
}

/// Component-wise comparison `a >= b`.
pub fn vec_ge(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// Component-wise `a > b` (i.e. `a >= b` and `a != b`).
pub fn vec_gt(a: &[usize], b: &[usize]) -> bool {
    vec_ge(a, b) && a != b
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dominance {
    Equal,
    /// strictly dominates
    Dominates,
    /// strictly dominated by
    Dominated,
    Incomparable,
}

fn partial_sums(x: &MultiComp, m: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    x.padded(m)
        .into_iter()
        .map(|v| {
            acc += v;
            acc
        })
        .collect()
}

fn bounds_for(a: &MultiComp, b: &MultiComp) -> Vec<usize> {
    (0..a.r())
        .map(|k| a.component(k).len().max(b.component(k).len()).max(1))
        .collect()
}

/// Compare two multicompositions in the dominance order.
pub fn dominance(lambda: &MultiComp, mu: &MultiComp) -> Result<Dominance, CombinatoricsError> {
    if lambda.size() != mu.size() || lambda.r() != mu.r() {
        return Err(CombinatoricsError::SizeMismatch);
    }
    if lambda == mu {
        return Ok(Dominance::Equal);
    }
    let m = bounds_for(lambda, mu);
    let (sl, sm) = (partial_sums(lambda, &m), partial_sums(mu, &m));
    let ge = sl.iter().zip(&sm).all(|(a, b)| a >= b);
    let le = sl.iter().zip(&sm).all(|(a, b)| a <= b);
    Ok(match (ge, le) {
        (true, false) => Dominance::Dominates,
        (false, true) => Dominance::Dominated,
        (true, true) => Dominance::Equal,
        (false, false) => Dominance::Incomparable,
    })
}

/// `lambda ⊵ mu`; false on size mismatch.
pub fn dominates_eq(lambda: &MultiComp, mu: &MultiComp) -> bool {
    matches!(
        dominance(lambda, mu),
        Ok(Dominance::Equal) | Ok(Dominance::Dominates)
    )
}

/// `lambda ⊳ mu`.
pub fn dominates(lambda: &MultiComp, mu: &MultiComp) -> bool {
    matches!(dominance(lambda, mu), Ok(Dominance::Dominates))
}

/// Total order used for every enumeration: descending lexicographic on the
/// padded part sequence. It is a linear extension of dominance (more
/// dominant first).
pub fn enumeration_cmp(a: &MultiComp, b: &MultiComp, m: &[usize]) -> Ordering {
    b.padded(m).cmp(&a.padded(m))
}

fn compositions_of(n: usize, len: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if cur.len() == len {
        if n == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for x in (0..=n).rev() {
        cur.push(x);
        compositions_of(n - x, len, out, cur);
        cur.pop();
    }
}

/// `(Λ, Λ⁺)`: all `r`-compositions of `n` with component lengths bounded by
/// `m`, and the multipartitions among them, both in enumeration order.
pub fn generate_lambda(n: usize, m: &[usize]) -> (Vec<MultiComp>, Vec<MultiComp>) {
    let r = m.len();
    let total: usize = m.iter().sum();
    let mut flat = Vec::new();
    compositions_of(n, total, &mut flat, &mut Vec::with_capacity(total));
    // `compositions_of` emits descending lexicographic order already.
    let all: Vec<MultiComp> = flat
        .into_iter()
        .map(|v| {
            let mut comps = Vec::with_capacity(r);
            let mut pos = 0;
            for &mk in m {
                comps.push(v[pos..pos + mk].to_vec());
                pos += mk;
            }
            MultiComp::new(comps)
        })
        .collect();
    let plus = all.iter().filter(|x| x.is_partition()).cloned().collect();
    (all, plus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mc(v: &[&[usize]]) -> MultiComp {
        MultiComp::new(v.iter().map(|c| c.to_vec()).collect())
    }

    #[test]
    fn lambda_plus_n2_r2() {
        let (all, plus) = generate_lambda(2, &[2, 2]);
        assert_eq!(all.len(), 10);
        let expect = vec![
            mc(&[&[2], &[]]),
            mc(&[&[1, 1], &[]]),
            mc(&[&[1], &[1]]),
            mc(&[&[], &[2]]),
            mc(&[&[], &[1, 1]]),
        ];
        assert_eq!(plus, expect);
    }

    #[test]
    fn small_lambda_sets() {
        assert_eq!(generate_lambda(1, &[1]).1, vec![mc(&[&[1]])]);
        assert_eq!(generate_lambda(2, &[1]).1, vec![mc(&[&[2]])]);
        let (all, plus) = generate_lambda(0, &[2, 2]);
        assert_eq!(all, vec![MultiComp::empty(2)]);
        assert_eq!(plus.len(), 1);
    }

    #[test]
    fn dominance_examples() {
        let a = mc(&[&[2], &[]]);
        let b = mc(&[&[], &[2]]);
        assert_eq!(dominance(&a, &b).unwrap(), Dominance::Dominates);
        assert_eq!(dominance(&a, &a).unwrap(), Dominance::Equal);
        let c = mc(&[&[1, 1], &[]]);
        assert_eq!(dominance(&c, &a).unwrap(), Dominance::Dominated);
        assert_eq!(
            dominance(&a, &mc(&[&[1], &[]])),
            Err(CombinatoricsError::SizeMismatch)
        );
        let x = mc(&[&[3, 0, 1]]);
        let y = mc(&[&[2, 2]]);
        assert_eq!(dominance(&x, &y).unwrap(), Dominance::Incomparable);
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=3 {
            let (all, _) = generate_lambda(n, &[n, n]);
            for a in &all {
                for b in &all {
                    if dominates_eq(a, b) && dominates_eq(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if dominates_eq(a, b) && dominates_eq(b, c) {
                            assert!(dominates_eq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_order_extends_dominance() {
        let m = [3, 3];
        let (all, _) = generate_lambda(3, &m);
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(!dominates(b, a), "{b} listed after {a} but dominates it");
                assert_eq!(enumeration_cmp(a, b, &m), Ordering::Less);
            }
        }
    }

    #[test]
    fn example_alpha_and_a() {
        let mu = mc(&[&[2, 1], &[1, 2, 1], &[3, 2], &[1, 1, 1], &[4, 1]]);
        assert_eq!(mu.size(), 20);
        let p = ParabolicShape::new(vec![2, 2, 1]).unwrap();
        let (alpha, a) = alpha_and_a(&mu, &p);
        assert_eq!(alpha, vec![7, 8, 5]);
        assert_eq!(a, vec![0, 7, 15]);
        assert_eq!(
            mu.blocks(&p),
            vec![
                mc(&[&[2, 1], &[1, 2, 1]]),
                mc(&[&[3, 2], &[1, 1, 1]]),
                mc(&[&[4, 1]])
            ]
        );
        assert_eq!(MultiComp::join(&mu.blocks(&p)), mu);
    }

    #[test]
    fn alpha_for_extreme_shapes() {
        let mu = mc(&[&[1], &[2], &[]]);
        assert_eq!(alpha_and_a(&mu, &ParabolicShape::whole(3)), (vec![3], vec![0]));
        assert_eq!(
            alpha_and_a(&mu, &ParabolicShape::finest(3)),
            (mu.alpha(), vec![0, 1, 3])
        );
    }

    #[test]
    fn dominance_implies_a_p_order() {
        let shapes = [vec![1, 1, 1], vec![2, 1], vec![1, 2], vec![3]];
        for n in 1..=3 {
            let (all, _) = generate_lambda(n, &[n, n, n]);
            for parts in &shapes {
                let p = ParabolicShape::new(parts.clone()).unwrap();
                for a in &all {
                    for b in &all {
                        if dominates_eq(a, b) {
                            assert!(vec_ge(&a.a_p(&p), &b.a_p(&p)));
                        }
                        assert_eq!(a.a_p(&p) == b.a_p(&p), a.alpha_p(&p) == b.alpha_p(&p));
                    }
                }
            }
        }
    }

    #[test]
    fn refinement() {
        let fine = ParabolicShape::new(vec![1, 1]).unwrap();
        let coarse = ParabolicShape::whole(2);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(fine.refines(&fine));
        assert_eq!(fine.block_of(1), 1);
        assert_eq!(coarse.last_component(0), 1);
    }

    #[test]
    fn display() {
        assert_eq!(mc(&[&[2, 1], &[]]).to_string(), "(2,1;-)");
    }
}
