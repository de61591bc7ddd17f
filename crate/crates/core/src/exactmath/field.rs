//! Prime fields and the rationals, with canonical scalar representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted; keeps residue products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The ground field: the rationals or a prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
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

impl FieldSpec {
    /// GF(p), after checking primality by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// `num/den` as a field element; `None` if `den` vanishes in the field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den);
        d.inv().map(|inv| &self.from_i64(num) * &inv)
    }

    /// Residue with the given representative in `[0, p)`.
    pub fn residue(&self, value: u64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(value))),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: value % p,
                modulus: *p,
            },
        }
    }

    /// All elements of a prime field in residue order.
    pub fn elements(&self) -> Result<impl Iterator<Item = Scalar>> {
        match *self {
            FieldSpec::Rationals => Err(self.unsupported("element enumeration needs a finite field")),
            FieldSpec::Prime(p) => Ok((0..p).map(move |value| Scalar::Mod { value, modulus: p })),
        }
    }

    /// Parse a scalar in the text format: `a`, `-a/b` for Q; `k` with `0 <= k < p` for GF(p).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = |msg: &str| Error::parse(format!("scalar {text:?}"), msg.to_string());
        match self {
            FieldSpec::Rationals => {
                let (sign, body) = match text.as_bytes().first() {
                    Some(b'-') => (-1, &text[1..]),
                    Some(b'+') => (1, &text[1..]),
                    _ => (1, text),
                };
                let (num, den) = match body.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (body, None),
                };
                let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
                if !digits(num) {
                    return Err(bad("expected decimal digits"));
                }
                let n = BigInt::from_str(num).map_err(|_| bad("bad numerator"))? * sign;
                let d = match den {
                    None => BigInt::one(),
                    Some(d) => {
                        if !digits(d) {
                            return Err(bad("expected decimal digits in denominator"));
                        }
                        BigInt::from_str(d).map_err(|_| bad("bad denominator"))?
                    }
                };
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            FieldSpec::Prime(p) => {
                if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad("expected a residue 0 <= k < p"));
                }
                let v: u64 = text.parse().map_err(|_| bad("residue out of range"))?;
                if v >= *p {
                    return Err(bad("residue out of range"));
                }
                Ok(Scalar::Mod {
                    value: v,
                    modulus: *p,
                })
            }
        }
    }

    pub(crate) fn unsupported(&self, reason: impl Into<String>) -> Error {
        Error::UnsupportedField {
            field: *self,
            reason: reason.into(),
        }
    }

    pub(crate) fn ensure_same(&self, other: FieldSpec) -> Result<()> {
        if *self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                expected: *self,
                found: other,
            })
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Accepts `Q`, `gfP`, `GF(P)`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let lower = t.to_ascii_lowercase();
        let digits = lower
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| lower.strip_prefix("gf"))
            .ok_or_else(|| Error::parse("field", format!("unknown field {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::parse("field", format!("unknown field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

/// A field element in canonical form, so equality is representation equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|inv| self * &inv)
    }

    /// Residue representative; `None` over Q.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod {
                    value: (a + p - b) % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                Scalar::Mod {
                    value: a * b % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_checked() {
        assert!(FieldSpec::prime(7).is_ok());
        assert_eq!(FieldSpec::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn rational_text_round_trip() {
        let q = FieldSpec::Rationals;
        for s in ["0", "3", "-7", "1/2", "-22/7"] {
            assert_eq!(q.parse_scalar(s).unwrap().to_string(), s);
        }
        assert_eq!(q.parse_scalar("2/4").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_scalar("+5").unwrap().to_string(), "5");
        assert_eq!(q.parse_scalar("-0").unwrap().to_string(), "0");
        assert!(q.parse_scalar("3/-4").is_err());
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("").is_err());
        assert!(q.parse_scalar("1.5").is_err());
    }

    #[test]
    fn residue_text_format() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.parse_scalar("4").unwrap().to_string(), "4");
        assert!(f.parse_scalar("5").is_err());
        assert!(f.parse_scalar("-1").is_err());
    }

    #[test]
    fn modular_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(-2);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a * &a.inv().unwrap(), f.one());
        assert_eq!(-&a, f.from_i64(4));
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn field_names() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert_eq!("GF(3)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(3));
        assert!("gf4".parse::<FieldSpec>().is_err());
    }
}
