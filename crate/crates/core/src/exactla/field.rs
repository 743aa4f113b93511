use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact scalar. Over a prime field the value is kept as a reduced integer in `0..p`.
pub type Scalar = BigRational;

/// The ground field every computation is carried out over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
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

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Field::Rationals)
    }

    fn reduce(&self, x: Scalar) -> Scalar {
        match self {
            Field::Rationals => x,
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                let num = x.numer().mod_floor(&p);
                let den = x.denom().mod_floor(&p);
                if den.is_one() {
                    return BigRational::from_integer(num);
                }
                let inv = den.modpow(&(&p - 2), &p);
                BigRational::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.reduce(Scalar::from_integer(BigInt::from(v)))
    }

    /// Coerces an arbitrary rational into the field (denominators are inverted mod p).
    pub fn from_rational(&self, v: Scalar) -> Result<Scalar> {
        if let Field::Prime(p) = self {
            if (v.denom() % BigInt::from(*p)).is_zero() {
                return Err(Error::Parse(format!("denominator of {v} vanishes mod {p}")));
            }
        }
        Ok(self.reduce(v))
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rationals => a.recip(),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                BigRational::from_integer(a.numer().modpow(&(&p - 2), &p))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Parses "3", "-3/2" and coerces into the field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let v = if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
            let d: BigInt = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            BigRational::new(n, d)
        } else {
            let n: BigInt = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
            BigRational::from_integer(n)
        };
        self.from_rational(v)
    }

    /// Renders a scalar the way `parse` reads it back.
    pub fn format(&self, a: &Scalar) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    /// Small-magnitude check used when choosing pivots; keeps coefficient growth down over Q.
    pub(crate) fn weight(&self, a: &Scalar) -> u64 {
        match self {
            Field::Prime(_) => 0,
            Field::Rationals => {
                let n = a.numer().abs().to_u64().unwrap_or(u64::MAX / 2);
                let d = a.denom().to_u64().unwrap_or(u64::MAX / 2);
                n.saturating_add(d)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}
