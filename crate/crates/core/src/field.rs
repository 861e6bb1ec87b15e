//! Coefficient rings: ℚ, prime fields `𝔽_p`, and ℤ.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} is too large (must be below 2^31)")]
    PrimeTooLarge(u64),
    #[error("unrecognised coefficient spec `{0}` (expected q, p:<prime> or z)")]
    BadSpec(String),
    #[error("integer coefficients are not a field here")]
    NotAField,
}

/// A coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `𝔽_p`, checking primality. Primes are kept below `2^31` so products fit in `u64`.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p >= 1 << 31 {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Reduces an integer into the field's canonical representative, if it
    /// is nonzero there.
    pub fn reduce(self, v: i64) -> Option<i64> {
        match self {
            Field::Rational => (v != 0).then_some(v),
            Field::Prime(p) => {
                let r = v.rem_euclid(p as i64);
                (r != 0).then_some(r)
            }
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(2)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<Coefficients>()? {
            Coefficients::Rational => Ok(Field::Rational),
            Coefficients::Prime(p) => Ok(Field::Prime(p)),
            Coefficients::Integer => Err(FieldError::NotAField),
        }
    }
}

/// The ring an [`ExactMatrix`](crate::linalg::ExactMatrix) is declared over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coefficients {
    Rational,
    Prime(u64),
    Integer,
}

impl Coefficients {
    pub fn field(self) -> Option<Field> {
        match self {
            Coefficients::Rational => Some(Field::Rational),
            Coefficients::Prime(p) => Some(Field::Prime(p)),
            Coefficients::Integer => None,
        }
    }
}

impl From<Field> for Coefficients {
    fn from(f: Field) -> Self {
        match f {
            Field::Rational => Coefficients::Rational,
            Field::Prime(p) => Coefficients::Prime(p),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integer => write!(f, "Z"),
            Coefficients::Rational => write!(f, "Q"),
            Coefficients::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "q" | "rational" => Ok(Coefficients::Rational),
            "z" | "integer" => Ok(Coefficients::Integer),
            _ => {
                let digits = t
                    .strip_prefix("p:")
                    .or_else(|| t.strip_prefix("f"))
                    .ok_or_else(|| FieldError::BadSpec(s.to_string()))?;
                let p: u64 = digits.parse().map_err(|_| FieldError::BadSpec(s.to_string()))?;
                Field::prime(p).map(Coefficients::from)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic in a concrete field, used by the elimination routines.
pub trait FieldOps: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, v: i64) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// `𝔽_p` with `p < 2^31`; elements are canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        Field::prime(p).map(|_| PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl FieldOps for PrimeField {
    type Elem = u64;

    fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        self.pow(*a, self.p - 2)
    }
}

/// ℚ with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl FieldOps for Rationals {
    type Elem = BigRational;

    fn from_int(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        debug_assert!(!a.is_zero());
        a.recip()
    }
}
