//! Exact scalar arithmetic over prime fields GF(p) and over the rationals.
//!
//! Every scalar is kept in canonical form at all times: residues in `0..p`
//! for prime fields, fractions fully reduced with positive denominator for
//! rationals. Equality of canonical forms is therefore equality in the field,
//! which everything downstream (rank computations, periodicity detection,
//! deterministic JSON output) relies on.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// Largest admissible prime modulus; keeps products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    /// GF(p) for a prime p with 2 <= p < 2^31.
    Prime(u64),
    /// The field of rational numbers.
    Rationals,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p > MAX_PRIME {
            return Err(Error::InvalidField(format!("modulus {p} exceeds 2^31 - 1")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Prime(p) => format!("gf:{p}"),
            FieldSpec::Rationals => "qq".into(),
        }
    }

    /// Parses "gf:p" or "qq".
    pub fn parse(s: &str) -> Result<FieldSpec> {
        if s == "qq" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus in {s:?}")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidField(format!(
            "unknown field {s:?} (expected gf:<p> or qq)"
        )))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Fp(0),
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Fp(1),
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => {
                let p = *p as i128;
                let r = ((v as i128 % p) + p) % p;
                Scalar::Fp(r as u64)
            }
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    fn expect_pair<'a>(&self, a: &'a Scalar, b: &'a Scalar) -> (&'a Scalar, &'a Scalar) {
        debug_assert!(self.owns(a) && self.owns(b), "mixed-field scalars");
        (a, b)
    }

    /// Whether the scalar belongs to this field's representation.
    pub fn owns(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (FieldSpec::Prime(_), Scalar::Fp(_)) | (FieldSpec::Rationals, Scalar::Rat(_))
        )
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let (a, b) = self.expect_pair(a, b);
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let (a, b) = self.expect_pair(a, b);
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((p + x - y) % p),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let (a, b) = self.expect_pair(a, b);
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(x * y % p),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("mixed-field scalar"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    None
                } else {
                    Some(Scalar::Fp(mod_inv(*x, *p)))
                }
            }
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(x.recip()))
                }
            }
            _ => panic!("mixed-field scalar"),
        }
    }

    /// Parses a canonical scalar string: decimal integer, optionally signed,
    /// or "num/den" for rationals.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Prime(_) => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad GF(p) scalar {s:?}")))?;
                Ok(self.from_i64(v))
            }
            FieldSpec::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Rat(BigRational::new(num, den)))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit words
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

/// An exact field element in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Fp(u64),
    Rat(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }

    /// Canonical string form; survives a JSON round-trip exactly.
    pub fn encode(&self) -> String {
        match self {
            Scalar::Fp(x) => x.to_string(),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

#[allow(unused)]
fn rational_is_canonical(x: &BigRational) -> bool {
    x.denom().is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(5).is_ok());
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(1 << 32).is_err());
    }

    #[test]
    fn gf5_arithmetic() {
        let f = FieldSpec::Prime(5);
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(f.add(&a, &b), f.from_i64(2));
        assert_eq!(f.mul(&a, &b), f.from_i64(2));
        assert_eq!(f.sub(&a, &b), f.from_i64(4));
        assert_eq!(f.neg(&a), f.from_i64(2));
        assert_eq!(f.inv(&a).unwrap(), f.from_i64(2));
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn rational_arithmetic_is_reduced() {
        let f = FieldSpec::Rationals;
        let half = f.parse_scalar("2/4").unwrap();
        assert_eq!(half.encode(), "1/2");
        let neg = f.parse_scalar("1/-2").unwrap();
        assert_eq!(neg.encode(), "-1/2");
        let s = f.add(&half, &neg);
        assert!(s.is_zero());
    }

    #[test]
    fn field_parsing() {
        assert_eq!(FieldSpec::parse("gf:7").unwrap(), FieldSpec::Prime(7));
        assert_eq!(FieldSpec::parse("qq").unwrap(), FieldSpec::Rationals);
        assert!(FieldSpec::parse("gf:6").is_err());
        assert!(FieldSpec::parse("re").is_err());
    }

    #[test]
    fn mod_inverse_small() {
        for p in [2u64, 3, 5, 31, 2147483647] {
            for a in 1..p.min(50) {
                assert_eq!(mod_inv(a, p) * a % p, 1);
            }
        }
    }
}
