//! Subspaces of `F^n` in canonical reduced row-echelon form.

use std::fmt;

use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;
use super::vector;
use crate::error::{Error, Result};

/// A subspace, stored as its unique RREF basis (no zero rows).
///
/// Two subspaces are equal exactly when their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |s: &Subspace| (s.ambient, s.dim(), s.pivots.clone(), s.basis.to_string());
        key(self).cmp(&key(other))
    }
}

impl Subspace {
    /// Span of the given vectors of `F^ambient`.
    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        let m = if vectors.is_empty() {
            Matrix::zeros(field, 0, ambient)
        } else {
            Matrix::from_rows(field, vectors.to_vec())?
        };
        Ok(Subspace::row_space(&m))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        Subspace {
            ambient: m.cols(),
            basis: r.take_rows(pivots.len()),
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// The canonical RREF basis matrix (one row per basis vector).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Zero nor everything.
    pub fn is_proper_nontrivial(&self) -> bool {
        !self.is_zero() && !self.is_full()
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        for x in v {
            self.field().ensure_same(x.field())?;
        }
        Ok(())
    }

    fn check_peer(&self, other: &Subspace) -> Result<()> {
        self.field().ensure_same(other.field())?;
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Residual of `v` after clearing the pivot coordinates against the basis.
    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if w[pc].is_zero() {
                continue;
            }
            let c = -&w[pc];
            vector::axpy(&mut w, &c, &self.basis.row(row));
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(vector::is_zero(&self.reduce(v)))
    }

    /// Coordinates of `v` in the RREF basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_peer(other)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient, &vs)
    }

    /// `{w : <w, v> = 0 for all v in self}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.kernel()
    }

    /// Intersection as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_peer(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_peer(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under a square map.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        let imgs = self
            .basis_vectors()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.field(), m.rows(), &imgs)
    }

    /// True when `m(self) ⊆ self`.
    pub fn is_invariant_under(&self, m: &Matrix) -> Result<bool> {
        self.image_under(m)?.is_subspace_of(self)
    }

    /// Matrix of a map that leaves `self` invariant, in the RREF basis.
    pub fn restrict(&self, m: &Matrix) -> Result<Option<Matrix>> {
        let mut cols = Vec::with_capacity(self.dim());
        for v in self.basis_vectors() {
            let img = m.mul_vec(&v)?;
            match self.coordinates(&img)? {
                Some(c) => cols.push(c),
                None => return Ok(None),
            }
        }
        Matrix::from_columns(self.field(), self.dim(), &cols).map(Some)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis_vectors().iter().map(|v| vector::format(v)).collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

/// Free-function form of [`Subspace::sum`].
pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

/// Free-function form of [`Subspace::intersect`].
pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn contains(a: &Subspace, v: &[Scalar]) -> Result<bool> {
    a.contains(v)
}
