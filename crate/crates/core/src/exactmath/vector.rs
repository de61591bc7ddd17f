//! Helpers for coordinate vectors (`Vec<Scalar>`).

use super::field::{FieldSpec, Scalar};

pub fn zero(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

/// The standard basis vector `e_i` of `F^n`.
pub fn unit(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero(field, n);
    v[i] = field.one();
    v
}

pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Vec<Scalar> {
    coords.iter().map(|&c| field.from_i64(c)).collect()
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

pub fn neg(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| -x).collect()
}

/// `a += c * b`.
pub fn axpy(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x + &(c * y);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar], field: FieldSpec) -> Scalar {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Scales so that the first nonzero coordinate is 1; zero stays zero.
pub fn normalize(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()).and_then(Scalar::inv) {
        Some(inv) => scale(v, &inv),
        None => v.to_vec(),
    }
}

pub fn format(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
