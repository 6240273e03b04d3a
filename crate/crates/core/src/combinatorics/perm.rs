//! Permutations of `{0..n-1}` acting on the right.
//!
//! A permutation is stored as its image array, `img[j] = j·w`. With the
//! right action `j·(vw) = (j·v)·w` this gives `(vw)[j] = w[v[j]]`, so
//! `(s_i w)[j] = w[s_i(j)]` and `(w s_i)[j] = s_i(w[j])`.

use std::collections::HashMap;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// The simple transposition `s_i = (i, i+1)`, 1-based `i` as in `T_i`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut l = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `self · other` (apply `self` first).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&j| other.0[j as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (j, &w) in self.0.iter().enumerate() {
            inv[w as usize] = j as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &w)| j == w as usize)
    }

    /// Image of the 1-based letter `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.0[j - 1] as usize + 1
    }
}

/// The symmetric group `S_n` with the tables needed by the Hecke algebra.
#[derive(Clone, Debug)]
pub struct SymGroup {
    n: usize,
    elems: Vec<Perm>,
    index: HashMap<Perm, usize>,
    lengths: Vec<usize>,
    /// `left[i-1][w]` = index of `s_i w`
    left: Vec<Vec<usize>>,
    /// `right[i-1][w]` = index of `w s_i`
    right: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    words: Vec<Vec<usize>>,
}

impl SymGroup {
    pub fn new(n: usize) -> Self {
        assert!(n <= 8, "S_n tables are built for n <= 8");
        let mut elems = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            elems.push(Perm(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let index: HashMap<Perm, usize> =
            elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let lengths = elems.iter().map(Perm::length).collect();
        let mut left = vec![vec![0; elems.len()]; n.saturating_sub(1)];
        let mut right = vec![vec![0; elems.len()]; n.saturating_sub(1)];
        for i in 1..n {
            let s = Perm::simple(n, i);
            for (w_idx, w) in elems.iter().enumerate() {
                left[i - 1][w_idx] = index[&s.then(w)];
                right[i - 1][w_idx] = index[&w.then(&s)];
            }
        }
        let inverse = elems.iter().map(|w| index[&w.inverse()]).collect();
        let mut g = SymGroup {
            n,
            elems,
            index,
            lengths,
            left,
            right,
            inverse,
            words: Vec::new(),
        };
        g.words = g.compute_words();
        g
    }

    /// Reduced words by breadth-first search: `word(w s_i) = word(w) + [i]`.
    fn compute_words(&self) -> Vec<Vec<usize>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.elems.len()];
        let id = self.index[&Perm::identity(self.n)];
        words[id] = Some(vec![]);
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &w in &frontier {
                for i in 1..self.n {
                    let ws = self.right[i - 1][w];
                    if self.lengths[ws] == self.lengths[w] + 1 && words[ws].is_none() {
                        let mut word = words[w].clone().unwrap();
                        word.push(i);
                        words[ws] = Some(word);
                        next.push(ws);
                    }
                }
            }
            frontier = next;
        }
        words.into_iter().map(Option::unwrap).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elem(&self, w: usize) -> &Perm {
        &self.elems[w]
    }

    pub fn index_of(&self, p: &Perm) -> usize {
        self.index[p]
    }

    pub fn identity_index(&self) -> usize {
        self.index[&Perm::identity(self.n)]
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn left_mul(&self, i: usize, w: usize) -> usize {
        self.left[i - 1][w]
    }

    pub fn right_mul(&self, w: usize, i: usize) -> usize {
        self.right[i - 1][w]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    /// A reduced word `[i_1..i_k]` with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
