//! Coefficient rings.
//!
//! Three concrete coefficient types are used throughout the crate:
//!
//! * [`Fp`], residues modulo a prime carried inside every element,
//! * [`Rational`], arbitrary precision fractions,
//! * [`Laurent`], the generic ring `Z[q, q^-1][Q_1..Q_r]` with integer
//!   coefficients.
//!
//! Elements carry whatever context they need (the modulus for `Fp`), so the
//! constructors `zero_like`/`one_like` take an existing element as a template.
//! Every algebra built later on keeps a "one" element around for this.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Commutative ring operations used by the algebra layers.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn sub_assign(&mut self, other: &Self) {
        *self = self.sub(other);
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self = self.add(&a.mul(b));
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

// ---------------------------------------------------------------------------
// Prime fields

/// Residue modulo a prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    v: u32,
    p: u32,
}

impl Fp {
    pub fn new(value: i64, p: u32) -> Self {
        let m = p as i64;
        Fp {
            v: value.rem_euclid(m) as u32,
            p,
        }
    }

    pub fn value(&self) -> u32 {
        self.v
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Ring for Fp {
    #[inline]
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    #[inline]
    fn one_like(&self) -> Self {
        Fp { v: 1 % self.p, p: self.p }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Fp::new(n, self.p)
    }
    #[inline]
    fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u64 + o.v as u64;
        let p = self.p as u64;
        Fp {
            v: (if s >= p { s - p } else { s }) as u32,
            p: self.p,
        }
    }
    #[inline]
    fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let v = if self.v >= o.v {
            self.v - o.v
        } else {
            self.v + (self.p - o.v)
        };
        Fp { v, p: self.p }
    }
    #[inline]
    fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Fp {
            v: ((self.v as u64 * o.v as u64) % self.p as u64) as u32,
            p: self.p,
        }
    }
    #[inline]
    fn neg(&self) -> Self {
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    #[inline]
    fn add_assign(&mut self, o: &Self) {
        *self = Ring::add(self, o);
    }
    #[inline]
    fn sub_assign(&mut self, o: &Self) {
        *self = Ring::sub(self, o);
    }
    #[inline]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let p = self.p as u64;
        self.v = ((self.v as u64 + a.v as u64 * b.v as u64) % p) as u32;
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // extended Euclid on (v, p)
        let (mut a, mut b) = (self.v as i64, self.p as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let t = a / b;
            (a, b) = (b, a - t * b);
            (x0, x1) = (x1, x0 - t * x1);
        }
        Some(Fp::new(x0, self.p))
    }
}

/// Deterministic primality test for the moduli accepted on the command line.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Rationals

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational(BigRational::zero())
    }
    fn one_like(&self) -> Self {
        Rational(BigRational::one())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from_int(n)
    }
    fn add(&self, o: &Self) -> Self {
        Rational(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Rational(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Rational(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add_assign(&mut self, o: &Self) {
        self.0 += &o.0;
    }
    fn sub_assign(&mut self, o: &Self) {
        self.0 -= &o.0;
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if !a.0.is_zero() && !b.0.is_zero() {
            self.0 += &a.0 * &b.0;
        }
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
}

// ---------------------------------------------------------------------------
// Generic Laurent polynomials

/// A monomial `q^e * Q_1^{k_1} ... Q_r^{k_r}`; trailing zero exponents are
/// trimmed so that equal monomials compare equal regardless of `r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    pub q: i32,
    pub big_q: Vec<u16>,
}

impl Monomial {
    fn normalized(mut self) -> Self {
        while self.big_q.last() == Some(&0) {
            self.big_q.pop();
        }
        self
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        let len = self.big_q.len().max(o.big_q.len());
        let mut big_q = vec![0u16; len];
        for (i, e) in self.big_q.iter().enumerate() {
            big_q[i] += e;
        }
        for (i, e) in o.big_q.iter().enumerate() {
            big_q[i] = big_q[i].checked_add(*e).expect("Q exponent overflow");
        }
        Monomial {
            q: self.q.checked_add(o.q).expect("q exponent overflow"),
            big_q,
        }
        .normalized()
    }
}

/// Element of `Z[q, q^-1][Q_1..Q_r]`, stored without zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Laurent {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, Monomial::default())
    }

    pub fn monomial(c: i64, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m.normalized(), BigInt::from(c));
        }
        Laurent { terms }
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(
            1,
            Monomial {
                q: e,
                big_q: vec![],
            },
        )
    }

    /// The parameter `Q_i` (1-based).
    pub fn big_q(i: usize) -> Self {
        assert!(i >= 1);
        let mut big_q = vec![0u16; i];
        big_q[i - 1] = 1;
        Self::monomial(1, Monomial { q: 0, big_q })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Units of the generic ring are exactly `±q^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if !m.big_q.is_empty() || !(c.is_one() || (-c).is_one()) {
            return None;
        }
        let mut out = Laurent::zero();
        out.terms.insert(
            Monomial {
                q: -m.q,
                big_q: vec![],
            },
            c.clone(),
        );
        Some(out)
    }

    /// Evaluate at `q`, `Q_1..Q_r` in a field.
    pub fn evaluate<F: Field>(&self, q: &F, big_q: &[F]) -> F {
        let one = q.one_like();
        let qinv = q.inv().expect("q must be invertible");
        let mut acc = one.zero_like();
        for (m, c) in &self.terms {
            let mut t = big_int_into(c, &one);
            t = if m.q >= 0 {
                t.mul(&q.pow(m.q as u32))
            } else {
                t.mul(&qinv.pow((-m.q) as u32))
            };
            for (i, e) in m.big_q.iter().enumerate() {
                if *e > 0 {
                    t = t.mul(&big_q[i].pow(*e as u32));
                }
            }
            acc.add_assign(&t);
        }
        acc
    }
}

fn big_int_into<F: Ring>(c: &BigInt, one: &F) -> F {
    match c.to_i64() {
        Some(v) => one.from_i64_like(v),
        None => {
            // split into base 2^31 digits
            let base = one.from_i64_like(1 << 31);
            let mut acc = one.zero_like();
            let neg = c.is_negative();
            let (_, digits) = c.abs().to_u32_digits();
            for d in digits.iter().rev() {
                acc = acc.mul(&base).mul(&base.from_i64_like(2));
                acc.add_assign(&one.from_i64_like(*d as i64));
            }
            if neg {
                acc.neg()
            } else {
                acc
            }
        }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mut factors = Vec::new();
            if m.q != 0 {
                factors.push(if m.q == 1 {
                    "q".to_string()
                } else {
                    format!("q^{}", m.q)
                });
            }
            for (i, e) in m.big_q.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("Q{}", i + 1)),
                    _ => factors.push(format!("Q{}^{}", i + 1, e)),
                }
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Ring for Laurent {
    fn zero_like(&self) -> Self {
        Laurent::zero()
    }
    fn one_like(&self) -> Self {
        Laurent::constant(1)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Laurent::constant(n)
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }
    fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.insert_add(m.clone(), -c);
        }
        out
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = Laurent::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic_mod_5() {
        let two = Fp::new(2, 5);
        let three = Fp::new(3, 5);
        assert!(two.mul(&three).is_one());
        assert_eq!(two.inv(), Some(three));
        assert_eq!(Fp::new(-1, 5).value(), 4);
        assert_eq!(Fp::new(0, 5).inv(), None);
    }

    #[test]
    fn fp_inverse_exhaustive_small_primes() {
        for p in [2u32, 3, 5, 7, 11, 13, 101] {
            for v in 1..p {
                let x = Fp::new(v as i64, p);
                assert!(x.mul(&x.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn laurent_unit_identity() {
        let q = Laurent::q_pow(1);
        let qi = q.unit_inverse().unwrap();
        assert_eq!(q.mul(&qi), Laurent::constant(1));
    }

    #[test]
    fn laurent_cancellation() {
        let a = Laurent::big_q(1).sub(&Laurent::big_q(2));
        let b = Laurent::big_q(2).sub(&Laurent::big_q(1));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn laurent_non_units() {
        assert!(Laurent::big_q(1).unit_inverse().is_none());
        assert!(Laurent::constant(2).unit_inverse().is_none());
        assert!(Laurent::q_pow(1)
            .add(&Laurent::constant(1))
            .unit_inverse()
            .is_none());
        assert_eq!(
            Laurent::constant(-1).unit_inverse(),
            Some(Laurent::constant(-1))
        );
    }

    #[test]
    fn laurent_display() {
        let x = Laurent::q_pow(1).sub(&Laurent::q_pow(-1));
        assert_eq!(x.to_string(), "-q^-1 + q");
        assert_eq!(Laurent::big_q(2).to_string(), "Q2");
    }

    #[test]
    fn evaluate_delta_in_f5() {
        let delta = Laurent::q_pow(1).sub(&Laurent::q_pow(-1));
        let v = delta.evaluate(&Fp::new(2, 5), &[]);
        assert_eq!(v, Fp::new(4, 5));
    }

    #[test]
    fn big_coefficients_evaluate() {
        let mut x = Laurent::constant(1 << 40);
        x = x.mul(&x); // 2^80
        let v = x.evaluate(&Fp::new(1, 1_000_003), &[]);
        let expected = (0..80).fold(Fp::new(1, 1_000_003), |a, _| a.mul(&Fp::new(2, 1_000_003)));
        assert_eq!(v, expected);
    }
}
