//! Integer Laurent polynomials in one variable `c`.

use std::collections::BTreeMap;
use std::fmt;

/// `Σ a_k c^k` with finitely many nonzero `a_k`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn constant(a: i64) -> Self {
        LaurentPoly::monomial(a, 0)
    }

    /// `a c^k`.
    pub fn monomial(a: i64, k: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(a, k);
        p
    }

    /// `a (c^k + c^-k)`.
    pub fn symmetric(a: i64, k: i64) -> Self {
        let mut p = LaurentPoly::monomial(a, k);
        p.add_term(a, -k);
        p
    }

    pub fn add_term(&mut self, a: i64, k: i64) {
        let e = self.coeffs.entry(k).or_insert(0);
        *e += a;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    /// Coefficient of `c^k`.
    pub fn coeff(&self, k: i64) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs, exponents ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &a)| (k, a))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, a) in other.terms() {
            out.add_term(a, k);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, s: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, a) in self.terms() {
            out.add_term(a * s, k);
        }
        out
    }

    /// Value at `c = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Invariance under `c -> c^-1`.
    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(k, a)| self.coeff(-k) == a)
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `c^-1 + 4 + c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, a)) in self.terms().enumerate() {
            let mag = a.unsigned_abs();
            match (n, a < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "c")?;
                    } else {
                        write!(f, "c^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
