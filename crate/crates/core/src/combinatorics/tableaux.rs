//! Young diagrams of multicompositions, standard and semistandard tableaux.
//!
//! Nodes of a diagram are listed in reading order: component by component,
//! row by row, left to right. A tableau is a vector of entries indexed by
//! node, so `t^λ` is `[1, 2, ..., n]` and `d(t)` has image array
//! `letters - 1` (the letter of `t` at the node where `t^λ` has `k` is
//! `k·d(t)`).

use std::collections::HashMap;

use super::multicomp::MultiComp;
use super::perm::Perm;

/// Node coordinates `(component, row, column)`, all 0-based.
pub type Node = (usize, usize, usize);

#[derive(Clone, Debug)]
pub struct Diagram {
    shape: MultiComp,
    nodes: Vec<Node>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Diagram {
    pub fn new(shape: &MultiComp) -> Self {
        let mut nodes = Vec::new();
        for (c, comp) in shape.components().iter().enumerate() {
            for (i, &len) in comp.iter().enumerate() {
                for j in 0..len {
                    nodes.push((c, i, j));
                }
            }
        }
        let index: HashMap<Node, usize> =
            nodes.iter().enumerate().map(|(x, &nd)| (nd, x)).collect();
        let left = nodes
            .iter()
            .map(|&(c, i, j)| if j > 0 { index.get(&(c, i, j - 1)).copied() } else { None })
            .collect();
        let above = nodes
            .iter()
            .map(|&(c, i, j)| if i > 0 { index.get(&(c, i - 1, j)).copied() } else { None })
            .collect();
        Diagram { shape: shape.clone(), nodes, left, above }
    }

    pub fn shape(&self) -> &MultiComp {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, x: usize) -> Node {
        self.nodes[x]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn left_of(&self, x: usize) -> Option<usize> {
        self.left[x]
    }

    pub fn above(&self, x: usize) -> Option<usize> {
        self.above[x]
    }

    /// For `t^μ`: letter `j` (1-based) sits in row `i`, component `k`;
    /// returned as the 1-based pair `(i, k)` for each letter.
    pub fn row_labels(&self) -> Vec<(u8, u8)> {
        self.nodes
            .iter()
            .map(|&(c, i, _)| (i as u8 + 1, c as u8 + 1))
            .collect()
    }
}

/// A standard tableau: the letter at each node in reading order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct StdTableau {
    pub letters: Vec<u8>,
}

impl StdTableau {
    /// `d(t)` with `t = t^λ d(t)`.
    pub fn d(&self) -> Perm {
        Perm(self.letters.iter().map(|&l| l - 1).collect())
    }

    /// The tableau `t^λ w`.
    pub fn from_d(w: &Perm) -> Self {
        StdTableau { letters: w.0.iter().map(|&x| x + 1).collect() }
    }

    pub fn is_standard(&self, diag: &Diagram) -> bool {
        let n = self.letters.len();
        let mut seen = vec![false; n + 1];
        for &l in &self.letters {
            if l == 0 || l as usize > n || seen[l as usize] {
                return false;
            }
            seen[l as usize] = true;
        }
        (0..diag.len()).all(|x| {
            diag.left_of(x).is_none_or(|y| self.letters[y] < self.letters[x])
                && diag.above(x).is_none_or(|y| self.letters[y] < self.letters[x])
        })
    }
}

/// A tableau with entries `(i, k)` (1-based row and component labels).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SemiTableau {
    pub entries: Vec<(u8, u8)>,
}

/// Sort key for the total order on entries: component first, then row.
#[inline]
pub fn entry_key(e: (u8, u8)) -> (u8, u8) {
    (e.1, e.0)
}

impl SemiTableau {
    pub fn is_semistandard(&self, diag: &Diagram) -> bool {
        (0..diag.len()).all(|x| {
            let e = entry_key(self.entries[x]);
            let comp = diag.node(x).0 as u8 + 1;
            self.entries[x].1 >= comp
                && diag.left_of(x).is_none_or(|y| entry_key(self.entries[y]) <= e)
                && diag.above(x).is_none_or(|y| entry_key(self.entries[y]) < e)
        })
    }

    /// The type: `μ^(k)_i` = number of entries equal to `(i, k)`.
    pub fn type_of(&self, r: usize) -> MultiComp {
        let mut comps: Vec<Vec<usize>> = vec![Vec::new(); r];
        for &(i, k) in &self.entries {
            let c = &mut comps[k as usize - 1];
            if c.len() < i as usize {
                c.resize(i as usize, 0);
            }
            c[i as usize - 1] += 1;
        }
        MultiComp::new(comps)
    }
}

/// All standard tableaux of shape `λ`, `t^λ` first. Letters are placed in
/// increasing order, each into the addable nodes scanned in reading order.
pub fn std_tableaux(diag: &Diagram) -> Vec<StdTableau> {
    let n = diag.len();
    let mut out = Vec::new();
    let mut letters = vec![0u8; n];
    fn rec(diag: &Diagram, next: u8, letters: &mut Vec<u8>, out: &mut Vec<StdTableau>) {
        let n = letters.len();
        if next as usize > n {
            out.push(StdTableau { letters: letters.clone() });
            return;
        }
        for x in 0..n {
            if letters[x] != 0 {
                continue;
            }
            let ok = diag.left_of(x).is_none_or(|y| letters[y] != 0)
                && diag.above(x).is_none_or(|y| letters[y] != 0);
            if ok {
                letters[x] = next;
                rec(diag, next + 1, letters, out);
                letters[x] = 0;
            }
        }
    }
    rec(diag, 1, &mut letters, &mut out);
    out
}

/// `T_0(λ, μ)`: semistandard `λ`-tableaux of type `μ`, enumerated node by
/// node in reading order with entries tried in increasing order.
pub fn semistandard_tableaux(diag: &Diagram, mu: &MultiComp) -> Vec<SemiTableau> {
    let mut out = Vec::new();
    if diag.shape().size() != mu.size() || diag.shape().r() != mu.r() {
        return out;
    }
    // available entries in increasing order with multiplicities
    let mut avail: Vec<((u8, u8), usize)> = Vec::new();
    for k in 0..mu.r() {
        for (i, &cnt) in mu.component(k).iter().enumerate() {
            if cnt > 0 {
                avail.push(((i as u8 + 1, k as u8 + 1), cnt));
            }
        }
    }
    let mut entries = vec![(0u8, 0u8); diag.len()];
    fn rec(
        diag: &Diagram,
        x: usize,
        avail: &mut Vec<((u8, u8), usize)>,
        entries: &mut Vec<(u8, u8)>,
        out: &mut Vec<SemiTableau>,
    ) {
        if x == diag.len() {
            out.push(SemiTableau { entries: entries.clone() });
            return;
        }
        let comp = diag.node(x).0 as u8 + 1;
        for a in 0..avail.len() {
            let (e, cnt) = avail[a];
            if cnt == 0 || e.1 < comp {
                continue;
            }
            let key = entry_key(e);
            if let Some(y) = diag.left_of(x) {
                if entry_key(entries[y]) > key {
                    continue;
                }
            }
            if let Some(y) = diag.above(x) {
                if entry_key(entries[y]) >= key {
                    continue;
                }
            }
            avail[a].1 -= 1;
            entries[x] = e;
            rec(diag, x + 1, avail, entries, out);
            avail[a].1 += 1;
        }
    }
    rec(diag, 0, &mut avail, &mut entries, &mut out);
    out
}

/// `μ(t)`: replace each letter `j` of `t` by the `(row, component)` of `j`
/// in `t^μ`.
pub fn mu_of_std(mu: &MultiComp, t: &StdTableau) -> SemiTableau {
    let labels = Diagram::new(mu).row_labels();
    SemiTableau {
        entries: t.letters.iter().map(|&l| labels[l as usize - 1]).collect(),
    }
}

/// `T^λ = λ(t^λ)`.
pub fn superstandard(lambda: &MultiComp) -> SemiTableau {
    SemiTableau { entries: Diagram::new(lambda).row_labels() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::multicomp::generate_lambda;

    fn mc(v: &[&[usize]]) -> MultiComp {
        MultiComp::new(v.iter().map(|c| c.to_vec()).collect())
    }

    #[test]
    fn std_tableaux_of_two_singletons() {
        let diag = Diagram::new(&mc(&[&[1], &[1]]));
        let ts = std_tableaux(&diag);
        assert_eq!(ts.len(), 2);
        assert!(ts[0].d().is_identity());
        assert_eq!(ts[1].d(), Perm::simple(2, 1));
        assert_eq!(ts[1].d().length(), 1);
    }

    #[test]
    fn single_row_has_one_tableau() {
        let diag = Diagram::new(&mc(&[&[4]]));
        assert_eq!(std_tableaux(&diag).len(), 1);
    }

    #[test]
    fn std_tableaux_are_standard_and_distinct() {
        let diag = Diagram::new(&mc(&[&[2, 1], &[1]]));
        let ts = std_tableaux(&diag);
        assert_eq!(ts.len(), 8); // C(4,3) * 2
        let mut sorted = ts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ts.len());
        assert!(ts.iter().all(|t| t.is_standard(&diag)));
        assert_eq!(ts[0].letters, vec![1, 2, 3, 4]);
    }

    #[test]
    fn rank_identity_counts() {
        for (n, r, expect) in [(2usize, 2usize, 8usize), (3, 2, 48), (2, 3, 18), (4, 1, 24)] {
            let (_, plus) = generate_lambda(n, &vec![n; r]);
            let total: usize = plus
                .iter()
                .map(|l| std_tableaux(&Diagram::new(l)).len().pow(2))
                .sum();
            assert_eq!(total, expect);
        }
    }

    #[test]
    fn superstandard_is_only_tableau_of_own_type() {
        for n in 1..=3 {
            let (_, plus) = generate_lambda(n, &[n, n]);
            for l in &plus {
                let diag = Diagram::new(l);
                let ts = semistandard_tableaux(&diag, l);
                assert_eq!(ts, vec![superstandard(l)]);
                assert_eq!(mu_of_std(l, &std_tableaux(&diag)[0]), superstandard(l));
            }
        }
    }

    #[test]
    fn semistandard_example() {
        let l = mc(&[&[2], &[]]);
        let mu = mc(&[&[1], &[1]]);
        let ts = semistandard_tableaux(&Diagram::new(&l), &mu);
        assert_eq!(ts, vec![SemiTableau { entries: vec![(1, 1), (1, 2)] }]);
        assert!(semistandard_tableaux(&Diagram::new(&mu), &l).is_empty());
    }

    #[test]
    fn semistandard_nonempty_only_when_dominating() {
        use crate::combinatorics::multicomp::dominates_eq;
        for n in 1..=3 {
            let (all, plus) = generate_lambda(n, &[n, n]);
            for l in &plus {
                let diag = Diagram::new(l);
                for mu in &all {
                    let ts = semistandard_tableaux(&diag, mu);
                    if !ts.is_empty() {
                        assert!(dominates_eq(l, mu));
                    }
                    for t in &ts {
                        assert!(t.is_semistandard(&diag));
                        assert_eq!(&t.type_of(2), mu);
                    }
                }
            }
        }
    }

    #[test]
    fn mu_of_std_semistandard_iff_initial() {
        let l = mc(&[&[1], &[1]]);
        let diag = Diagram::new(&l);
        let ts = std_tableaux(&diag);
        assert!(mu_of_std(&l, &ts[0]).is_semistandard(&diag));
        assert!(!mu_of_std(&l, &ts[1]).is_semistandard(&diag));
    }

    #[test]
    fn semistandard_count_matches_std_fibres() {
        // Each s in Std(λ) has μ(s) either semistandard or not; the fibres of
        // the semistandard ones partition a subset of Std(λ).
        let l = mc(&[&[2, 1], &[]]);
        let mu = mc(&[&[1, 1, 1], &[]]);
        let diag = Diagram::new(&l);
        let sst = semistandard_tableaux(&diag, &mu);
        let stds = std_tableaux(&diag);
        for s in &stds {
            let img = mu_of_std(&mu, s);
            assert_eq!(img.is_semistandard(&diag), sst.contains(&img));
        }
        assert_eq!(sst.len(), 2);
    }
}
