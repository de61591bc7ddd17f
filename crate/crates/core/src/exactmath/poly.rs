//! Dense univariate polynomials over a [`FieldSpec`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{FieldSpec, Scalar};

/// Coefficients stored low degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::from_coeffs(c.field(), vec![c])
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::constant(field.one())
    }

    /// The indeterminate `x`.
    pub fn x(field: FieldSpec) -> Self {
        Poly::from_coeffs(field, vec![field.zero(), field.one()])
    }

    /// `x - r`.
    pub fn linear(r: &Scalar) -> Self {
        let field = r.field();
        Poly::from_coeffs(field, vec![-r, field.one()])
    }

    pub fn from_coeffs(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        Poly::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Low-to-high coefficients.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Poly::from_coeffs(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(self.field, (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(self.field, (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(self.field, out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().and_then(Scalar::inv).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    let idx = top - dd + k;
                    rem[idx] = &rem[idx] - &(&c * d);
                }
            }
            quot[top - dd] = c;
            rem.pop();
        }
        (Poly::from_coeffs(self.field, quot), Poly::from_coeffs(self.field, rem))
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Rational roots via the rational root theorem.
    ///
    /// `None` over GF(p), or when the cleared coefficients are too large to factor by trial division.
    pub fn rational_roots(&self) -> Option<Vec<Scalar>> {
        if self.field != FieldSpec::Rationals || self.is_zero() {
            return None;
        }
        let denoms = self.coeffs.iter().map(|c| c.as_rational().expect("rational").denom().clone());
        let lcm = denoms.fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c.as_rational().expect("rational") * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut roots = Vec::new();
        let shift = ints.iter().position(|c| !c.is_zero())?;
        if shift > 0 {
            roots.push(self.field.zero());
        }
        let trimmed = &ints[shift..];
        if trimmed.len() == 1 {
            return Some(roots);
        }
        let limit = BigInt::from(1_000_000_000_000i64);
        let a0 = trimmed[0].abs();
        let an = trimmed[trimmed.len() - 1].abs();
        if a0 > limit || an > limit {
            return None;
        }
        let divisors = |n: u64| -> Vec<u64> {
            let mut ds = Vec::new();
            let mut d = 1u64;
            while d * d <= n {
                if n.is_multiple_of(d) {
                    ds.push(d);
                    if d * d != n {
                        ds.push(n / d);
                    }
                }
                d += 1;
            }
            ds
        };
        let to_u64 = |b: &BigInt| b.to_string().parse::<u64>().expect("bounded");
        let mut seen = Vec::new();
        for num in divisors(to_u64(&a0)) {
            for den in divisors(to_u64(&an)) {
                for sign in [1i64, -1] {
                    let r = BigRational::new(BigInt::from(num) * sign, BigInt::from(den));
                    let cand = Scalar::Rational(r);
                    if seen.contains(&cand) {
                        continue;
                    }
                    if self.eval(&cand).is_zero() {
                        roots.push(cand.clone());
                    }
                    seen.push(cand);
                }
            }
        }
        Some(roots)
    }

    /// Roots lying in a finite field, by exhaustive evaluation.
    pub fn roots_in_prime_field(&self) -> Option<Vec<Scalar>> {
        let elems = self.field.elements().ok()?;
        Some(elems.filter(|x| self.eval(x).is_zero()).collect())
    }
}

impl fmt::Display for Poly {
    /// Descending powers of `x`, e.g. `x^2 - 3x + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
