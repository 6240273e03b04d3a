//! Normal-form arithmetic in `H_{n,r}`.
//!
//! Elements are dense coefficient vectors over the words
//! `L_1^{c_1} ... L_n^{c_n} T_w` (`0 <= c_i < r`), indexed by
//! `(Σ c_i r^(i-1)) * n! + index(w)`. Left multiplication by a generator
//! keeps the normal form without ever needing a polynomial identity for
//! `L_k`, `k >= 2`:
//!
//! * `T_0 = L_1`, and `L_1^r` is rewritten through `∏_j (L_1 - Q_j) = 0`;
//! * `T_i` commutes with symmetric functions of `L_i, L_{i+1}`, and
//!   `T_i L_i^k = L_{i+1}^k T_i - δ Σ_{j=1}^k L_i^{k-j} L_{i+1}^j`,
//!   `T_i L_{i+1}^k = L_i^k T_i + δ Σ_{j=1}^k L_i^{k-j} L_{i+1}^j`
//!   with `δ = q - q^{-1}`; all exponents stay below `r`.

use crate::combinatorics::{Diagram, MultiComp, Perm, SymGroup};
use crate::exact_linear::{Laurent, Ring};

#[derive(Clone, Debug)]
pub struct HeckeAlgebra<R: Ring> {
    n: usize,
    r: usize,
    sym: SymGroup,
    nfact: usize,
    dim: usize,
    pub(crate) q: R,
    pub(crate) qinv: R,
    pub(crate) delta: R,
    big_q: Vec<R>,
    /// `L_1^r = Σ_k red[k] L_1^k`
    red: Vec<R>,
    zero: R,
    one: R,
}

pub type HVec<R> = Vec<R>;

impl HeckeAlgebra<Laurent> {
    /// The algebra over `Z[q, q^-1, Q_1, ..., Q_r]`.
    pub fn generic(n: usize, r: usize) -> Self {
        let big_q = (1..=r).map(Laurent::big_q).collect();
        Self::new(n, r, Laurent::q_pow(1), Laurent::q_pow(-1), big_q)
    }
}

impl<R: Ring> HeckeAlgebra<R> {
    pub fn new(n: usize, r: usize, q: R, qinv: R, big_q: Vec<R>) -> Self {
        assert!(r >= 1 && big_q.len() == r);
        assert!(q.mul(&qinv).is_one(), "q^-1 must invert q");
        let sym = SymGroup::new(n);
        let nfact = sym.order();
        let dim = nfact * r.pow(n as u32);
        let zero = q.zero_like();
        let one = q.one_like();
        // ∏ (X - Q_j) = Σ e_k X^k
        let mut e = vec![one.clone()];
        for qj in &big_q {
            let mut next = vec![zero.clone(); e.len() + 1];
            for (k, c) in e.iter().enumerate() {
                next[k + 1].add_assign(c);
                next[k].sub_assign(&c.mul(qj));
            }
            e = next;
        }
        let red = e[..r].iter().map(|c| c.neg()).collect();
        let delta = q.sub(&qinv);
        HeckeAlgebra { n, r, sym, nfact, dim, q, qinv, delta, big_q, red, zero, one }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sym(&self) -> &SymGroup {
        &self.sym
    }

    pub fn q(&self) -> &R {
        &self.q
    }

    pub fn delta(&self) -> &R {
        &self.delta
    }

    pub fn big_q(&self) -> &[R] {
        &self.big_q
    }

    pub fn zero_scalar(&self) -> &R {
        &self.zero
    }

    pub fn one_scalar(&self) -> &R {
        &self.one
    }

    pub fn index(&self, c: &[usize], w: usize) -> usize {
        let mut ci = 0;
        for &x in c.iter().rev() {
            ci = ci * self.r + x;
        }
        ci * self.nfact + w
    }

    pub fn decode(&self, b: usize) -> (Vec<usize>, usize) {
        let (mut ci, w) = (b / self.nfact, b % self.nfact);
        let mut c = vec![0; self.n];
        for x in c.iter_mut() {
            *x = ci % self.r;
            ci /= self.r;
        }
        (c, w)
    }

    /// Human-readable name of a basis word.
    pub fn word_name(&self, b: usize) -> String {
        let (c, w) = self.decode(b);
        let mut s = String::new();
        for (k, &e) in c.iter().enumerate() {
            if e > 0 {
                s.push_str(&format!("L{}^{} ", k + 1, e));
            }
        }
        let word = self.sym.reduced_word(w);
        if word.is_empty() {
            s.push('1');
        } else {
            s.push('T');
            for i in word {
                s.push_str(&i.to_string());
            }
        }
        s.trim().to_string()
    }

    pub fn zero(&self) -> HVec<R> {
        vec![self.zero.clone(); self.dim]
    }

    pub fn basis(&self, b: usize) -> HVec<R> {
        let mut v = self.zero();
        v[b] = self.one.clone();
        v
    }

    pub fn one(&self) -> HVec<R> {
        self.basis(self.index(&vec![0; self.n], self.sym.identity_index()))
    }

    pub fn scalar(&self, c: &R) -> HVec<R> {
        let mut v = self.one();
        let b = self.index(&vec![0; self.n], self.sym.identity_index());
        v[b] = c.clone();
        v
    }

    pub fn add(&self, x: &[R], y: &[R]) -> HVec<R> {
        x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
    }

    pub fn sub(&self, x: &[R], y: &[R]) -> HVec<R> {
        x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
    }

    pub fn scale(&self, c: &R, x: &[R]) -> HVec<R> {
        x.iter().map(|a| if a.is_zero() { a.clone() } else { c.mul(a) }).collect()
    }

    pub fn is_zero(&self, x: &[R]) -> bool {
        x.iter().all(Ring::is_zero)
    }

    /// `T_w` for a group element index `w`.
    pub fn t_w(&self, w: usize) -> HVec<R> {
        self.basis(self.index(&vec![0; self.n], w))
    }

    /// The generator `T_i` (`T_0` for `i = 0`).
    pub fn t(&self, i: usize) -> HVec<R> {
        self.left_gen(i, &self.one())
    }

    /// `L_k = T_{k-1} ... T_1 T_0 T_1 ... T_{k-1}` computed from its word.
    pub fn l(&self, k: usize) -> HVec<R> {
        self.left_word(&Self::l_word(k), &self.one())
    }

    /// Generator word of `L_k`.
    pub fn l_word(k: usize) -> Vec<usize> {
        let mut w: Vec<usize> = (1..k).rev().collect();
        w.push(0);
        w.extend(1..k);
        w
    }

    /// `T_i · x`.
    pub fn left_gen(&self, i: usize, x: &[R]) -> HVec<R> {
        let mut out = self.zero();
        for (b, coef) in x.iter().enumerate() {
            if !coef.is_zero() {
                self.left_gen_basis(i, b, coef, &mut out);
            }
        }
        out
    }

    /// `out += coef · T_i · (basis b)`.
    fn left_gen_basis(&self, i: usize, b: usize, coef: &R, out: &mut [R]) {
        let (mut c, w) = self.decode(b);
        if i == 0 {
            if c[0] + 1 < self.r {
                c[0] += 1;
                out[self.index(&c, w)].add_assign(coef);
            } else {
                for (k, rk) in self.red.iter().enumerate() {
                    if !rk.is_zero() {
                        c[0] = k;
                        out[self.index(&c, w)].add_mul(coef, rk);
                    }
                }
            }
            return;
        }
        let (a, bb) = (c[i - 1], c[i]);
        let e = a.min(bb);
        let sw = self.sym.left_mul(i, w);
        let up = self.sym.length(sw) > self.sym.length(w);
        // the T_i T_w part with exponents (ei, ej)
        let mut push_ti = |ei: usize, ej: usize, cf: &R, out: &mut [R]| {
            c[i - 1] = ei;
            c[i] = ej;
            out[self.index(&c, sw)].add_assign(cf);
            if !up {
                out[self.index(&c, w)].add_mul(cf, &self.delta);
            }
        };
        if a >= bb {
            push_ti(e, a, coef, out);
        } else {
            push_ti(bb, e, coef, out);
        }
        let k = a.max(bb) - e;
        if k > 0 {
            let corr = if a >= bb { coef.mul(&self.delta).neg() } else { coef.mul(&self.delta) };
            for j in 1..=k {
                c[i - 1] = e + k - j;
                c[i] = e + j;
                out[self.index(&c, w)].add_assign(&corr);
            }
        }
    }

    /// `x · T_i` for `i >= 1`.
    pub fn right_gen(&self, x: &[R], i: usize) -> HVec<R> {
        assert!(i >= 1, "right multiplication by T_0 goes through mul");
        let mut out = self.zero();
        for (b, coef) in x.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let (c, w) = self.decode(b);
            let ws = self.sym.right_mul(w, i);
            out[self.index(&c, ws)].add_assign(coef);
            if self.sym.length(ws) < self.sym.length(w) {
                out[b].add_mul(coef, &self.delta);
            }
        }
        out
    }

    /// `T_{g_1} ... T_{g_m} · x` for `word = [g_1, ..., g_m]`.
    pub fn left_word(&self, word: &[usize], x: &[R]) -> HVec<R> {
        let mut v = x.to_vec();
        for &g in word.iter().rev() {
            v = self.left_gen(g, &v);
        }
        v
    }

    /// `T_w · x`.
    pub fn left_tw(&self, w: usize, x: &[R]) -> HVec<R> {
        self.left_word(self.sym.reduced_word(w), x)
    }

    /// `T_w^* · x = T_{w^-1} · x`.
    pub fn left_tw_star(&self, w: usize, x: &[R]) -> HVec<R> {
        self.left_tw(self.sym.inverse(w), x)
    }

    /// `x · T_w`.
    pub fn right_tw(&self, x: &[R], w: usize) -> HVec<R> {
        let mut v = x.to_vec();
        for &i in self.sym.reduced_word(w) {
            v = self.right_gen(&v, i);
        }
        v
    }

    /// Generator word of the basis element `b`.
    pub fn basis_word(&self, b: usize) -> Vec<usize> {
        let (c, w) = self.decode(b);
        let mut word = Vec::new();
        for (k, &e) in c.iter().enumerate() {
            for _ in 0..e {
                word.extend(Self::l_word(k + 1));
            }
        }
        word.extend_from_slice(self.sym.reduced_word(w));
        word
    }

    /// `x · y` by expanding `x` into generator words acting on `y`.
    pub fn mul(&self, x: &[R], y: &[R]) -> HVec<R> {
        let mut out = self.zero();
        for (b, coef) in x.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let prod = self.left_word(&self.basis_word(b), y);
            for (o, p) in out.iter_mut().zip(&prod) {
                if !p.is_zero() {
                    o.add_mul(coef, p);
                }
            }
        }
        out
    }

    /// `x^*`, the anti-automorphism fixing every `T_i`.
    pub fn star(&self, x: &[R]) -> HVec<R> {
        let mut out = self.zero();
        for (b, coef) in x.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let (c, w) = self.decode(b);
            let lc = self.basis(self.index(&c, self.sym.identity_index()));
            let img = self.left_tw(self.sym.inverse(w), &lc);
            for (o, p) in out.iter_mut().zip(&img) {
                if !p.is_zero() {
                    o.add_mul(coef, p);
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[R], e: usize) -> HVec<R> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `x_μ = Σ_{w ∈ S_μ} q^{l(w)} T_w` over the row stabiliser of `t^μ`.
    pub fn x_mu(&self, mu: &MultiComp) -> HVec<R> {
        let rows = Diagram::new(mu).row_labels();
        let mut v = self.zero();
        for w in 0..self.sym.order() {
            let p: &Perm = self.sym.elem(w);
            if (0..self.n).all(|j| rows[j] == rows[p.0[j] as usize]) {
                v[self.index(&vec![0; self.n], w)] = self.q.pow(self.sym.length(w) as u32);
            }
        }
        v
    }

    /// `u_a^+ = ∏_k ∏_{i=1}^{a_k} (L_i - Q_k)`.
    pub fn u_plus(&self, a: &[usize]) -> HVec<R> {
        let mut acc = self.one();
        for (k, &ak) in a.iter().enumerate() {
            for i in 1..=ak {
                let f = self.sub(&self.l(i), &self.scalar(&self.big_q[k]));
                acc = self.mul(&acc, &f);
            }
        }
        acc
    }

    /// `a(μ)`: `a_k = |μ^(1)| + ... + |μ^(k-1)|`.
    pub fn a_of(mu: &MultiComp) -> Vec<usize> {
        let mut a = Vec::with_capacity(mu.r());
        let mut acc = 0;
        for k in 0..mu.r() {
            a.push(acc);
            acc += mu.component_size(k);
        }
        a
    }

    /// `m_μ = u_a^+ x_μ`.
    pub fn m_mu(&self, mu: &MultiComp) -> HVec<R> {
        self.mul(&self.u_plus(&Self::a_of(mu)), &self.x_mu(mu))
    }

    /// `m_{st} = T_{d(s)}^* m_λ T_{d(t)}` given `m_λ` and the group indices
    /// of `d(s)`, `d(t)`.
    pub fn m_st(&self, m_lambda: &[R], ds: usize, dt: usize) -> HVec<R> {
        self.right_tw(&self.left_tw_star(ds, m_lambda), dt)
    }

    /// Map coefficients through a ring homomorphism.
    pub fn map_vec<S: Ring>(x: &[R], f: impl Fn(&R) -> S) -> HVec<S> {
        x.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::{Fp, Rational};

    fn fp_alg(n: usize, r: usize) -> HeckeAlgebra<Fp> {
        let q = Fp::new(2, 5);
        let qs = (1..=r as i64).map(|x| Fp::new(x, 5)).collect();
        HeckeAlgebra::new(n, r, q, Fp::new(3, 5), qs)
    }

    #[test]
    fn quadratic_relation_generic() {
        let h = HeckeAlgebra::generic(2, 2);
        let t1 = h.t(1);
        let lhs = h.mul(&t1, &t1);
        let rhs = h.add(&h.scale(h.delta(), &t1), &h.one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn jucys_murphy_commute() {
        let h = HeckeAlgebra::generic(2, 2);
        let (l1, l2) = (h.l(1), h.l(2));
        assert_eq!(h.mul(&l1, &l2), h.mul(&l2, &l1));
    }

    #[test]
    fn x_mu_eigenvector() {
        let h = HeckeAlgebra::generic(2, 1);
        let mu = MultiComp::new(vec![vec![2]]);
        let x = h.x_mu(&mu);
        let lhs = h.mul(&x, &h.t(1));
        assert_eq!(lhs, h.scale(h.q(), &x));
    }

    #[test]
    fn t0_minimal_polynomial() {
        let h = fp_alg(2, 3);
        let mut acc = h.one();
        for qj in h.big_q().to_vec() {
            acc = h.mul(&acc, &h.sub(&h.t(0), &h.scalar(&qj)));
        }
        assert!(h.is_zero(&acc));
    }

    #[test]
    fn r1_is_iwahori_hecke() {
        let q = Rational::from_int(3);
        let h = HeckeAlgebra::new(3, 1, q.clone(), Rational::from_frac(1, 3), vec![Rational::from_int(7)]);
        assert_eq!(h.dim(), 6);
        assert_eq!(h.t(0), h.scalar(&Rational::from_int(7)));
    }

    #[test]
    fn associativity_on_basis() {
        let h = fp_alg(3, 2);
        let words = [5usize, 17, 30, 47, 2];
        for &a in &words {
            for &b in &words {
                for &c in &words {
                    let (x, y, z) = (h.basis(a), h.basis(b), h.basis(c));
                    assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
                }
            }
        }
    }

    #[test]
    fn star_is_an_anti_involution() {
        let h = HeckeAlgebra::generic(2, 2);
        for a in 0..h.dim() {
            let x = h.basis(a);
            assert_eq!(h.star(&h.star(&x)), x);
            for b in 0..h.dim() {
                let y = h.basis(b);
                assert_eq!(h.star(&h.mul(&x, &y)), h.mul(&h.star(&y), &h.star(&x)));
            }
        }
    }

    #[test]
    fn right_gen_matches_mul() {
        let h = fp_alg(3, 2);
        for b in 0..h.dim() {
            let x = h.basis(b);
            for i in 1..3 {
                assert_eq!(h.right_gen(&x, i), h.mul(&x, &h.t(i)));
            }
        }
    }

    #[test]
    fn m_mu_both_orders() {
        let h = HeckeAlgebra::generic(2, 2);
        let mu = MultiComp::new(vec![vec![1], vec![1]]);
        let u = h.u_plus(&HeckeAlgebra::<Laurent>::a_of(&mu));
        let x = h.x_mu(&mu);
        assert_eq!(h.mul(&u, &x), h.mul(&x, &u));
    }
}
