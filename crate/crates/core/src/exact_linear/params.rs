//! Tagged scalars and parameter specialization.
//!
//! [`Scalar`] is the dynamically tagged value used at the crate boundary
//! (reports, the CLI). Inside the algebra layers computations are generic
//! over a [`Field`] type; [`SpecField`] connects the two.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::scalar::{is_prime, Field, Fp, Laurent, Rational, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("operands belong to different coefficient rings ({0} vs {1})")]
    VariantMismatch(String, String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("the assigned value of q is zero in the target field")]
    ZeroQ,
    #[error("specialization expects a generic scalar")]
    NotGeneric,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

/// Target field of a specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    PrimeField(u32),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self, ScalarError> {
        let t = s.trim().to_ascii_lowercase();
        if t == "rational" || t == "q" || t == "qq" {
            return Ok(FieldSpec::Rational);
        }
        let p = t
            .strip_prefix("fp:")
            .or_else(|| t.strip_prefix("f"))
            .ok_or_else(|| ScalarError::Parse(s.to_string()))?;
        let p: u64 = p.parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
        if !is_prime(p) || p >= (1 << 31) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Parse `"3"`, `"-2"` or `"1/7"`.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| err())?;
            let b: BigInt = b.trim().parse().map_err(|_| err())?;
            if b.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| err())?)),
    }
}

/// Values for `q, Q_1..Q_r` in a target field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterAssignment {
    pub field: FieldSpec,
    pub q: BigRational,
    pub big_q: Vec<BigRational>,
}

impl ParameterAssignment {
    pub fn new(field: FieldSpec, q: i64, big_q: &[i64]) -> Self {
        ParameterAssignment {
            field,
            q: BigRational::from_integer(q.into()),
            big_q: big_q
                .iter()
                .map(|v| BigRational::from_integer((*v).into()))
                .collect(),
        }
    }

    pub fn r(&self) -> usize {
        self.big_q.len()
    }

    /// Realize `q` in the field `F`, failing if it vanishes.
    pub fn q_in<F: SpecField>(&self) -> Result<F, ScalarError> {
        let q = F::from_rational(&self.q, &self.field)?;
        if q.is_zero() {
            return Err(ScalarError::ZeroQ);
        }
        Ok(q)
    }

    pub fn big_q_in<F: SpecField>(&self) -> Result<Vec<F>, ScalarError> {
        self.big_q
            .iter()
            .map(|v| F::from_rational(v, &self.field))
            .collect()
    }

    /// Parameters with `Q` replaced by a sub-list (factor algebras).
    pub fn with_big_q(&self, big_q: Vec<BigRational>) -> Self {
        ParameterAssignment {
            field: self.field,
            q: self.q.clone(),
            big_q,
        }
    }

    /// Human readable echo used in reports.
    pub fn describe(&self) -> (String, String, Vec<String>) {
        (
            self.field.to_string(),
            rational_string(&self.q),
            self.big_q.iter().map(rational_string).collect(),
        )
    }
}

fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A field type that can be produced from a [`ParameterAssignment`].
pub trait SpecField: Field {
    fn from_rational(r: &BigRational, spec: &FieldSpec) -> Result<Self, ScalarError>;
    fn to_scalar(&self) -> Scalar;
}

impl SpecField for Fp {
    fn from_rational(r: &BigRational, spec: &FieldSpec) -> Result<Self, ScalarError> {
        let FieldSpec::PrimeField(p) = *spec else {
            return Err(ScalarError::VariantMismatch(
                "prime field".into(),
                spec.to_string(),
            ));
        };
        let m = BigInt::from(p);
        let num = ((r.numer() % &m) + &m) % &m;
        let den = ((r.denom() % &m) + &m) % &m;
        let num = Fp::new(i64::try_from(num).unwrap(), p);
        let den = Fp::new(i64::try_from(den).unwrap(), p);
        let inv = den
            .inv()
            .ok_or_else(|| ScalarError::NotAUnit(rational_string(r)))?;
        Ok(num.mul(&inv))
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::PrimeField(*self)
    }
}

impl SpecField for Rational {
    fn from_rational(r: &BigRational, spec: &FieldSpec) -> Result<Self, ScalarError> {
        if *spec != FieldSpec::Rational {
            return Err(ScalarError::VariantMismatch(
                "rational".into(),
                spec.to_string(),
            ));
        }
        Ok(Rational(r.clone()))
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }
}

/// Dynamically tagged coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Generic(Laurent),
    Rational(Rational),
    PrimeField(Fp),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Generic(x) => write!(f, "{x}"),
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::PrimeField(x) => write!(f, "{x}"),
        }
    }
}

/// Binary and unary operations of the tagged arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Inv,
}

impl Scalar {
    fn tag(&self) -> String {
        match self {
            Scalar::Generic(_) => "generic".into(),
            Scalar::Rational(_) => "rational".into(),
            Scalar::PrimeField(x) => format!("fp:{}", x.modulus()),
        }
    }

    fn mismatch(&self, o: &Scalar) -> ScalarError {
        ScalarError::VariantMismatch(self.tag(), o.tag())
    }

    pub fn add(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(match (self, o) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.add(b)),
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (Scalar::PrimeField(a), Scalar::PrimeField(b)) if a.modulus() == b.modulus() => {
                Scalar::PrimeField(a.add(b))
            }
            _ => return Err(self.mismatch(o)),
        })
    }

    pub fn mul(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(match (self, o) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.mul(b)),
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (Scalar::PrimeField(a), Scalar::PrimeField(b)) if a.modulus() == b.modulus() => {
                Scalar::PrimeField(a.mul(b))
            }
            _ => return Err(self.mismatch(o)),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Generic(a) => Scalar::Generic(a.neg()),
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::PrimeField(a) => Scalar::PrimeField(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        let fail = || ScalarError::NotAUnit(self.to_string());
        Ok(match self {
            Scalar::Generic(a) => Scalar::Generic(a.unit_inverse().ok_or_else(fail)?),
            Scalar::Rational(a) => Scalar::Rational(a.inv().ok_or_else(fail)?),
            Scalar::PrimeField(a) => Scalar::PrimeField(a.inv().ok_or_else(fail)?),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Generic(a) => a.is_zero(),
            Scalar::Rational(a) => a.is_zero(),
            Scalar::PrimeField(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Generic(a) => *a == Laurent::constant(1),
            Scalar::Rational(a) => a.0.is_one(),
            Scalar::PrimeField(a) => a.value() == 1,
        }
    }
}

/// The tagged arithmetic entry point: `inv` and `neg` ignore `b`.
pub fn ring_arithmetic(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Neg => Ok(a.neg()),
        ArithOp::Inv => a.inv(),
    }
}

/// Evaluate a generic scalar at the assigned parameters.
pub fn specialize(x: &Scalar, params: &ParameterAssignment) -> Result<Scalar, ScalarError> {
    let Scalar::Generic(x) = x else {
        return Err(ScalarError::NotGeneric);
    };
    match params.field {
        FieldSpec::Rational => Ok(Scalar::Rational(specialize_laurent::<Rational>(x, params)?)),
        FieldSpec::PrimeField(_) => Ok(Scalar::PrimeField(specialize_laurent::<Fp>(x, params)?)),
    }
}

/// Typed variant of [`specialize`].
pub fn specialize_laurent<F: SpecField>(
    x: &Laurent,
    params: &ParameterAssignment,
) -> Result<F, ScalarError> {
    let q = params.q_in::<F>()?;
    let big_q = params.big_q_in::<F>()?;
    let needed = x
        .terms()
        .map(|(m, _)| m.big_q.len())
        .max()
        .unwrap_or(0);
    if needed > big_q.len() {
        return Err(ScalarError::VariantMismatch(
            format!("generic ring in {needed} parameters"),
            format!("{} assigned values", big_q.len()),
        ));
    }
    Ok(x.evaluate(&q, &big_q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta() -> Laurent {
        Laurent::q_pow(1).sub(&Laurent::q_pow(-1))
    }

    #[test]
    fn delta_at_f5() {
        let p = ParameterAssignment::new(FieldSpec::PrimeField(5), 2, &[]);
        let v = specialize(&Scalar::Generic(delta()), &p).unwrap();
        assert_eq!(v, Scalar::PrimeField(Fp::new(4, 5)));
    }

    #[test]
    fn equal_q_values_cancel() {
        let p = ParameterAssignment::new(FieldSpec::Rational, 3, &[1, 1]);
        let x = Laurent::big_q(1).sub(&Laurent::big_q(2));
        assert!(specialize(&Scalar::Generic(x), &p).unwrap().is_zero());
    }

    #[test]
    fn constant_one_specializes_to_one() {
        for field in [FieldSpec::Rational, FieldSpec::PrimeField(7)] {
            let p = ParameterAssignment::new(field, 3, &[2]);
            assert!(specialize(&Scalar::Generic(Laurent::constant(1)), &p)
                .unwrap()
                .is_one());
        }
    }

    #[test]
    fn zero_q_is_rejected() {
        let p = ParameterAssignment::new(FieldSpec::PrimeField(5), 5, &[1]);
        assert_eq!(
            specialize(&Scalar::Generic(Laurent::constant(1)), &p),
            Err(ScalarError::ZeroQ)
        );
    }

    #[test]
    fn tagged_arithmetic() {
        let two = Scalar::PrimeField(Fp::new(2, 5));
        let three = Scalar::PrimeField(Fp::new(3, 5));
        assert!(ring_arithmetic(&two, &three, ArithOp::Mul).unwrap().is_one());
        assert_eq!(ring_arithmetic(&two, &two, ArithOp::Inv).unwrap(), three);
        let q = Scalar::Generic(Laurent::q_pow(1));
        assert!(matches!(
            ring_arithmetic(&q, &two, ArithOp::Add),
            Err(ScalarError::VariantMismatch(..))
        ));
        let big_q = Scalar::Generic(Laurent::big_q(1));
        assert!(matches!(big_q.inv(), Err(ScalarError::NotAUnit(_))));
        let seven = Scalar::PrimeField(Fp::new(2, 7));
        assert!(two.add(&seven).is_err());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("fp:5").unwrap(), FieldSpec::PrimeField(5));
        assert_eq!(FieldSpec::parse("rational").unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::parse("fp:6"), Err(ScalarError::NotPrime(6)));
        assert!(FieldSpec::parse("banana").is_err());
    }

    #[test]
    fn rational_parameters_in_prime_field() {
        let r = parse_rational("1/3").unwrap();
        let v = Fp::from_rational(&r, &FieldSpec::PrimeField(5)).unwrap();
        assert_eq!(v, Fp::new(2, 5));
        let bad = parse_rational("1/5").unwrap();
        assert!(Fp::from_rational(&bad, &FieldSpec::PrimeField(5)).is_err());
    }
}
