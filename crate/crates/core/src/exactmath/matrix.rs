//! Dense matrices over a [`FieldSpec`] with exact elimination.

use std::fmt;

use super::field::{FieldSpec, Scalar};
use super::poly::Poly;
use super::subspace::Subspace;
use super::vector;
use crate::error::{Error, Result};

/// Row-major matrix; every entry lives in `field`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        for s in &data {
            field.ensure_same(s.field())?;
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: FieldSpec, n: usize, c: &Scalar) -> Self {
        Matrix::identity(field, n).scale(c)
    }

    /// Builds from row vectors; all rows must share a length.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Matrix::new(field, r, cols, data)
    }

    /// Builds from column vectors of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (r, s) in col.iter().enumerate() {
                field.ensure_same(s.field())?;
                m.data[r * m.cols + c] = s.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged integer matrix");
            data.extend(row.iter().map(|&v| field.from_i64(v)));
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn diagonal(field: FieldSpec, diag: &[Scalar]) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    /// Block-diagonal matrix; all blocks over `field`.
    pub fn block_diagonal(field: FieldSpec, blocks: &[Matrix]) -> Self {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry field mismatch");
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    fn ensure_compatible(&self, other: &Matrix) -> Result<()> {
        self.field.ensure_same(other.field)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_compatible(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&-&self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_compatible(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * other.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            self.field.ensure_same(x.field())?;
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        self.ensure_square()?;
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.ensure_square()?;
        Ok((0..self.rows).fold(self.field.zero(), |acc, i| &acc + self.get(i, i)))
    }

    pub(crate) fn ensure_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Reduced row-echelon form, its rank and pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(found) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, prow);
            let inv = m.get(prow, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let idx = prow * m.cols + c;
                m.data[idx] = &m.data[idx] * &inv;
            }
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * m.get(prow, c);
                    let idx = r * m.cols + c;
                    m.data[idx] = &m.data[idx] - &sub;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, pivots) = self.rref_with_pivots();
        (m, pivots.len())
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Drops zero rows of an echelon matrix.
    pub(crate) fn take_rows(&self, n: usize) -> Matrix {
        Matrix {
            field: self.field,
            rows: n,
            cols: self.cols,
            data: self.data[..n * self.cols].to_vec(),
        }
    }

    /// `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let n = self.cols;
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        for &fc in &free {
            let mut v = vector::zero(self.field, n);
            v[fc] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, fc);
            }
            basis.push(v);
        }
        Subspace::span(self.field, n, &basis).expect("kernel vectors share the field")
    }

    /// Column space as a subspace of `F^rows`.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, &self.columns()).expect("columns share the field")
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            self.field.ensure_same(b[r].field())?;
            for c in 0..self.cols {
                aug.data[r * (self.cols + 1) + c] = self.get(r, c).clone();
            }
            aug.data[r * (self.cols + 1) + self.cols] = b[r].clone();
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vector::zero(self.field, self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        self.ensure_square()?;
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.data[r * 2 * n + c] = self.get(r, c).clone();
            }
            aug.data[r * 2 * n + n + r] = self.field.one();
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.data[r * n + c] = red.get(r, n + c).clone();
            }
        }
        Ok(Some(inv))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Result<Scalar> {
        self.ensure_square()?;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let f = m.get(r, col) * &inv;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = &f * m.get(col, c);
                    let idx = r * n + c;
                    m.data[idx] = &m.data[idx] - &sub;
                }
            }
        }
        Ok(det)
    }

    /// Monic characteristic polynomial `det(xI - M)`, via reduction to Hessenberg form.
    pub fn charpoly(&self) -> Result<Poly> {
        self.ensure_square()?;
        let n = self.rows;
        let f = self.field;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let t_inv = h.get(m, m - 1).inv().expect("nonzero pivot");
            for j in m + 1..n {
                let u = h.get(j, m - 1) * &t_inv;
                if u.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let sub = &u * h.get(m, c);
                    let idx = j * n + c;
                    h.data[idx] = &h.data[idx] - &sub;
                }
                for r in 0..n {
                    let add = &u * h.get(r, j);
                    let idx = r * n + m;
                    h.data[idx] = &h.data[idx] + &add;
                }
            }
        }
        // p[k] is the characteristic polynomial of the leading k x k block
        let mut p: Vec<Poly> = vec![Poly::one(f)];
        let x = Poly::x(f);
        for m in 1..=n {
            let mut pm = x.sub(&Poly::constant(h.get(m - 1, m - 1).clone())).mul(&p[m - 1]);
            let mut t = f.one();
            for i in 1..m {
                t = &t * h.get(m - i, m - i - 1);
                let coef = &t * h.get(m - i - 1, m - 1);
                pm = pm.sub(&p[m - i - 1].scale(&coef));
            }
            p.push(pm);
        }
        Ok(p.pop().expect("at least the constant polynomial"))
    }

    /// Invariant factors of `xI - M`, non-unit ones only, each dividing the next.
    pub fn invariant_factors(&self) -> Result<Vec<Poly>> {
        self.ensure_square()?;
        let n = self.rows;
        let f = self.field;
        let mut pm: Vec<Vec<Poly>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let entry = Poly::constant(-self.get(r, c));
                        if r == c {
                            entry.add(&Poly::x(f))
                        } else {
                            entry
                        }
                    })
                    .collect()
            })
            .collect();
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            loop {
                let mut best: Option<(usize, usize, usize)> = None;
                for (i, row) in pm.iter().enumerate().skip(k) {
                    for (j, e) in row.iter().enumerate().skip(k) {
                        if let Some(d) = e.degree() {
                            if best.is_none_or(|(_, _, bd)| d < bd) {
                                best = Some((i, j, d));
                            }
                        }
                    }
                }
                let Some((bi, bj, _)) = best else {
                    break;
                };
                pm.swap(k, bi);
                for row in pm.iter_mut() {
                    row.swap(k, bj);
                }
                let pivot = pm[k][k].clone();
                let mut clean = true;
                for i in k + 1..n {
                    let (q, r) = pm[i][k].div_rem(&pivot);
                    if !q.is_zero() {
                        for j in k..n {
                            let sub = q.mul(&pm[k][j]);
                            pm[i][j] = pm[i][j].sub(&sub);
                        }
                    }
                    if !r.is_zero() {
                        clean = false;
                    }
                }
                for j in k + 1..n {
                    let (q, r) = pm[k][j].div_rem(&pivot);
                    if !q.is_zero() {
                        for row in pm.iter_mut().skip(k) {
                            let sub = q.mul(&row[k]);
                            row[j] = row[j].sub(&sub);
                        }
                    }
                    if !r.is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                let offender = (k + 1..n).find(|&i| (k + 1..n).any(|j| !pm[i][j].div_rem(&pivot).1.is_zero()));
                match offender {
                    Some(i) => {
                        for j in k..n {
                            let moved = pm[i][j].clone();
                            pm[k][j] = pm[k][j].add(&moved);
                        }
                    }
                    None => break,
                }
            }
            diag.push(pm[k][k].monic());
        }
        Ok(diag.into_iter().filter(|d| d.degree().is_some_and(|deg| deg > 0)).collect())
    }

    /// Similarity test by comparing invariant factors.
    pub fn is_similar(&self, other: &Matrix) -> Result<bool> {
        self.ensure_compatible(other)?;
        self.ensure_square()?;
        other.ensure_square()?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        Ok(self.invariant_factors()? == other.invariant_factors()?)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Free-function form of [`Matrix::rref`].
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    m.rref()
}

/// Free-function form of [`Matrix::kernel`].
pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

/// Free-function form of [`Matrix::solve`].
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    m.solve(b)
}

/// Free-function form of [`Matrix::charpoly`].
pub fn charpoly(m: &Matrix) -> Result<Poly> {
    m.charpoly()
}

/// Invariant-factor sequence of the rational canonical form.
pub fn rational_canonical_form(m: &Matrix) -> Result<Vec<Poly>> {
    m.invariant_factors()
}

pub fn is_similar(a: &Matrix, b: &Matrix) -> Result<bool> {
    a.is_similar(b)
}
