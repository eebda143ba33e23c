//! Exact scalars over ℚ or a prime field 𝔽_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest accepted modulus. Residues are multiplied in `u128`, so anything
/// below 2^63 would do; the cap keeps serialized residues readable.
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported maximum {MAX_PRIME}")]
    ModulusTooLarge(u64),
    #[error("cannot parse scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// The base field of a computation: ℚ or 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn rationals() -> Field {
        Field::Rationals
    }

    /// 𝔽_p; rejects composite moduli and 0/1 so that every nonzero residue is invertible.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p > MAX_PRIME {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue { value: n.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    fn embed_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Residue { value: r.to_u64().expect("residue fits in u64"), modulus: p }
            }
        }
    }

    /// Parses `"n"`, `"a/b"` or `"r mod p"`. A fraction over 𝔽_p means `a·b⁻¹`;
    /// an explicit modulus must match the field's.
    pub fn parse(&self, text: &str) -> Result<Scalar, FieldError> {
        let err = |reason: &str| FieldError::Parse { text: text.to_string(), reason: reason.to_string() };
        let t = text.trim();
        if let Some((lhs, rhs)) = t.split_once("mod") {
            let p: u64 = rhs.trim().parse().map_err(|_| err("bad modulus"))?;
            match *self {
                Field::Prime(q) if q == p => {}
                Field::Prime(_) => return Err(err("modulus differs from the field characteristic")),
                Field::Rationals => return Err(err("residue given for a rational field")),
            }
            let n: BigInt = lhs.trim().parse().map_err(|_| err("bad residue"))?;
            return Ok(self.embed_bigint(&n));
        }
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        let d = self.embed_bigint(&den);
        let d_inv = d.inv().ok_or_else(|| err("denominator vanishes in this field"))?;
        Ok(&self.embed_bigint(&num) * &d_inv)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
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

/// An exact field element. All scalars taking part in one operation must
/// come from the same [`Field`]; arithmetic between fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Residue { value: ((*a as u128 + *b as u128) % p as u128) as u64, modulus: p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Residue { value: ((*a as u128 * *b as u128) % p as u128) as u64, modulus: p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

/// Exact textual form: `"3"`, `"-3/7"`, or `"5 mod 11"`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

/// Parses with the field inferred from the text: `"r mod p"` gives 𝔽_p,
/// anything else ℚ.
impl FromStr for Scalar {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((_, rhs)) = s.split_once("mod") {
            let p: u64 = rhs
                .trim()
                .parse()
                .map_err(|_| FieldError::Parse { text: s.to_string(), reason: "bad modulus".into() })?;
            Field::prime(p)?.parse(s)
        } else {
            Field::Rationals.parse(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        assert!(Field::prime(5).is_ok());
        assert_eq!(Field::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(Field::prime(0), Err(FieldError::NotPrime(0)));
        assert_eq!(Field::prime(9), Err(FieldError::NotPrime(9)));
        assert!(matches!(Field::prime(1 << 40), Err(FieldError::ModulusTooLarge(_))));
    }

    #[test]
    fn parse_and_print() {
        let q = Field::Rationals;
        assert_eq!(q.parse("6/4").unwrap().to_string(), "3/2");
        assert_eq!(q.parse("-2").unwrap().to_string(), "-2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("3 mod 5").is_err());

        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.parse("7").unwrap().to_string(), "2 mod 5");
        assert_eq!(f5.parse("1/2").unwrap().to_string(), "3 mod 5");
        assert_eq!(f5.parse("-1 mod 5").unwrap().to_string(), "4 mod 5");
        assert!(f5.parse("1/5").is_err());
        assert!(f5.parse("1 mod 7").is_err());

        let s: Scalar = "5 mod 11".parse().unwrap();
        assert_eq!(s.field(), Field::Prime(11));
    }

    #[test]
    fn residue_arithmetic() {
        let f7 = Field::prime(7).unwrap();
        let a = f7.from_i64(3);
        let b = f7.from_i64(5);
        assert_eq!(&a * &b, f7.from_i64(1));
        assert_eq!(&a - &b, f7.from_i64(5));
        assert_eq!(a.inv().unwrap(), b);
        assert_eq!(f7.zero().inv(), None);
    }
}
