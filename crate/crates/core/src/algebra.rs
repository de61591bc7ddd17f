//! Anticommutative algebras given by structure constants.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use crate::config;
use crate::error::{Error, Result};
use crate::exactmath::enumerate::{count_vectors, enumerate_nontrivial_subspaces};
use crate::exactmath::modp::{self, EchelonBasis};
use crate::exactmath::{vector, FieldSpec, Matrix, Scalar, Subspace};
use crate::spin::{MatrixModule, Verdict};

/// An algebra with `[e_i, e_i] = 0`, stored by the brackets `[e_i, e_j]`, `i < j`.
///
/// Only nonzero brackets are kept, so equality of values is equality of structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnticommAlgebra {
    field: FieldSpec,
    dim: usize,
    constants: BTreeMap<(usize, usize), Vec<Scalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplicityVerdict {
    Simple,
    NotSimple,
    Inconclusive,
}

impl fmt::Display for SimplicityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SimplicityVerdict::Simple => "simple",
            SimplicityVerdict::NotSimple => "not-simple",
            SimplicityVerdict::Inconclusive => "inconclusive",
        })
    }
}

/// Result of a (Hom-)simplicity test.
///
/// `witness` is present exactly when the verdict is `NotSimple`. For an abelian
/// algebra without proper nontrivial (Hom-)ideals the witness is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub verdict: SimplicityVerdict,
    pub witness: Option<Subspace>,
    pub proper_nontrivial_ideals_seen: BTreeSet<Subspace>,
    /// `"lines"` for an exhaustive scan, `"norton"` for the irreducibility test.
    pub method: &'static str,
    pub notes: Vec<String>,
}

impl IdealReport {
    pub fn is_simple(&self) -> bool {
        self.verdict == SimplicityVerdict::Simple
    }

    pub fn is_inconclusive(&self) -> bool {
        self.verdict == SimplicityVerdict::Inconclusive
    }
}

/// Simplicity of `module` (the algebra acted on by its multiplications and maybe a twisting map).
pub(crate) fn module_simplicity(module: &MatrixModule, abelian: bool) -> IdealReport {
    let field = module.field();
    let n = module.dim();
    let mut report = IdealReport {
        verdict: SimplicityVerdict::NotSimple,
        witness: None,
        proper_nontrivial_ideals_seen: BTreeSet::new(),
        method: "lines",
        notes: Vec::new(),
    };
    if abelian {
        report.notes.push("abelian".into());
        let line = (n > 0).then(|| module.spin(&[vector::unit(field, n, 0)]));
        let witness = match line {
            Some(s) if s.is_proper_nontrivial() => {
                report.proper_nontrivial_ideals_seen.insert(s.clone());
                s
            }
            _ => Subspace::zero(field, n),
        };
        report.witness = Some(witness);
        return report;
    }
    if module.scan_fits_budget() {
        let scan = module.scan_lines(false).expect("budget checked");
        report.proper_nontrivial_ideals_seen = scan.proper;
        report.witness = scan.first;
        if report.witness.is_none() {
            report.verdict = SimplicityVerdict::Simple;
        }
        return report;
    }
    report.method = "norton";
    match module.norton(config::DEFAULT_SEED) {
        Verdict::Irreducible => report.verdict = SimplicityVerdict::Simple,
        Verdict::Reducible(s) => {
            report.proper_nontrivial_ideals_seen.insert(s.clone());
            report.witness = Some(s);
        }
        Verdict::Inconclusive => {
            report.verdict = SimplicityVerdict::Inconclusive;
            report.notes.push("envelope search budget exhausted".into());
        }
    }
    report
}

impl AnticommAlgebra {
    /// The abelian algebra of dimension `dim`.
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        AnticommAlgebra {
            field,
            dim,
            constants: BTreeMap::new(),
        }
    }

    /// Sets `[e_i, e_j] = v` (and so `[e_j, e_i] = -v`); `i > j` is accepted.
    pub fn with_bracket(mut self, i: usize, j: usize, v: Vec<Scalar>) -> Result<Self> {
        self.set_bracket(i, j, v)?;
        Ok(self)
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec<Scalar>) -> Result<()> {
        let n = self.dim;
        if i >= n || j >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: i.max(j) + 1,
            });
        }
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        for x in &v {
            self.field.ensure_same(x.field())?;
        }
        if i == j {
            return if vector::is_zero(&v) {
                Ok(())
            } else {
                Err(Error::precondition(format!("[e{i}, e{i}] must vanish")))
            };
        }
        let (key, v) = if i < j { ((i, j), v) } else { ((j, i), vector::neg(&v)) };
        if vector::is_zero(&v) {
            self.constants.remove(&key);
        } else {
            self.constants.insert(key, v);
        }
        Ok(())
    }

    /// Builds an algebra from `(i, j, [e_i, e_j])` triples with integer coordinates.
    pub fn from_i64(field: FieldSpec, dim: usize, brackets: &[(usize, usize, &[i64])]) -> Result<Self> {
        let mut a = AnticommAlgebra::new(field, dim);
        for &(i, j, v) in brackets {
            a.set_bracket(i, j, vector::from_i64(field, v))?;
        }
        Ok(a)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`, in lexicographic order.
    pub fn constants(&self) -> &BTreeMap<(usize, usize), Vec<Scalar>> {
        &self.constants
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => vector::zero(self.field, self.dim),
            Ordering::Less => self
                .constants
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vector::zero(self.field, self.dim)),
            Ordering::Greater => self
                .constants
                .get(&(j, i))
                .map(|v| vector::neg(v))
                .unwrap_or_else(|| vector::zero(self.field, self.dim)),
        }
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        for x in v {
            self.field.ensure_same(x.field())?;
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        self.field.ensure_same(s.field())?;
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_square(&self, m: &Matrix) -> Result<()> {
        self.field.ensure_same(m.field())?;
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: if m.rows() != self.dim { m.rows() } else { m.cols() },
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zero(self.field, self.dim);
        for (&(i, j), v) in &self.constants {
            // x_i y_j - x_j y_i
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            vector::axpy(&mut out, &c, v);
        }
        out
    }

    /// Matrix of `y -> [x, y]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_vector(x)?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.bracket_unchecked(x, &vector::unit(self.field, self.dim, j)))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn rank_ad(&self, x: &[Scalar]) -> Result<usize> {
        Ok(self.ad(x)?.rank())
    }

    /// `ad e_0, ..., ad e_{n-1}`.
    pub fn ad_basis(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| {
                let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.basis_bracket(i, j)).collect();
                Matrix::from_columns(self.field, self.dim, &cols).expect("square")
            })
            .collect()
    }

    /// The module whose submodules are the ideals.
    pub fn multiplication_module(&self) -> MatrixModule {
        MatrixModule::new(self.field, self.dim, self.ad_basis()).expect("consistent shapes")
    }

    /// Jacobi identity on all basis triples.
    pub fn is_lie(&self) -> bool {
        let n = self.dim;
        let e = |i| vector::unit(self.field, n, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket_unchecked(&e(i), &self.basis_bracket(j, k));
                    let b = self.bracket_unchecked(&e(j), &self.basis_bracket(k, i));
                    let c = self.bracket_unchecked(&e(k), &self.basis_bracket(i, j));
                    if !vector::is_zero(&vector::add(&vector::add(&a, &b), &c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    /// `[S, T]`, the span of all brackets of basis vectors.
    pub fn product_space(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        self.check_subspace(t)?;
        let mut vs = Vec::new();
        for a in s.basis_vectors() {
            for b in t.basis_vectors() {
                vs.push(self.bracket_unchecked(&a, &b));
            }
        }
        Subspace::span(self.field, self.dim, &vs)
    }

    fn everything(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// `[A, A]`.
    pub fn derived_algebra(&self) -> Subspace {
        let all = self.everything();
        self.product_space(&all, &all).expect("same ambient")
    }

    fn series(&self, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut out = vec![self.everything()];
        loop {
            let next = step(out.last().expect("nonempty"));
            if &next == out.last().expect("nonempty") {
                return out;
            }
            out.push(next);
        }
    }

    /// `A ⊇ [A,A] ⊇ ...`, up to the first repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.series(|s| self.product_space(s, s).expect("same ambient"))
    }

    /// `A ⊇ [A,A] ⊇ [[A,A],A] ⊇ ...`, up to the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let all = self.everything();
        self.series(|s| self.product_space(s, &all).expect("same ambient"))
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    /// Smallest `k` with `A^{k+1} = 0` in the lower central series, if nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let lcs = self.lower_central_series();
        lcs.last().filter(|s| s.is_zero())?;
        Some(lcs.len() - 1)
    }

    /// `{x : [x, A] = 0}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            let cols: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis_bracket(i, j)).collect();
            for k in 0..n {
                rows.push(cols.iter().map(|c| c[k].clone()).collect());
            }
        }
        if rows.is_empty() {
            return self.everything();
        }
        Matrix::from_rows(self.field, rows).expect("rectangular").kernel()
    }

    /// Least ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        Ok(self.multiplication_module().closure(s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        Ok(&self.ideal_closure(s)? == s)
    }

    /// Exhaustive line scan over GF(p); the irreducibility test over Q or beyond the line budget.
    pub fn is_simple(&self) -> IdealReport {
        let mut report = module_simplicity(&self.multiplication_module(), self.is_abelian());
        if !self.field.is_finite() {
            let perfect = self.derived_algebra().is_full();
            let centerless = self.center().is_zero();
            report.notes.push(format!("perfect={perfect} centerless={centerless}"));
        }
        report
    }

    /// Certifies `candidate` as the unique proper nontrivial ideal (GF(p) only).
    pub fn unique_proper_ideal_check(&self, candidate: &Subspace) -> Result<bool> {
        self.check_subspace(candidate)?;
        if !self.field.is_finite() {
            return Err(self.field.unsupported("unique-ideal certificate enumerates lines"));
        }
        if !candidate.is_proper_nontrivial() {
            return Err(Error::precondition("candidate must be a proper nontrivial subspace"));
        }
        if !self.is_ideal(candidate)? {
            return Ok(false);
        }
        let scan = self.multiplication_module().scan_lines(false)?;
        Ok(scan.proper.len() == 1 && scan.proper.contains(candidate))
    }

    /// `[S,A] = A` or `[S,A] ⊊ [[S,A],A]`.
    pub fn simplicity_criterion_condition(&self, s: &Subspace) -> Result<bool> {
        self.check_subspace(s)?;
        if !s.is_proper_nontrivial() {
            return Err(Error::precondition("S must be neither zero nor the whole algebra"));
        }
        if !self.is_lie() {
            return Err(Error::precondition("the criterion applies to Lie algebras"));
        }
        Ok(self.criterion_holds(s))
    }

    fn criterion_holds(&self, s: &Subspace) -> bool {
        let all = self.everything();
        let t = self.product_space(s, &all).expect("same ambient");
        if t.is_full() {
            return true;
        }
        let tt = self.product_space(&t, &all).expect("same ambient");
        t != tt && t.is_subspace_of(&tt).expect("same ambient")
    }

    /// The criterion quantified over every nontrivial subspace, together with `[A,A] = A`.
    pub fn is_simple_via_criterion(&self) -> Result<bool> {
        if !self.is_lie() {
            return Err(Error::precondition("the criterion applies to Lie algebras"));
        }
        let subspaces = enumerate_nontrivial_subspaces(self.field, self.dim)?;
        if !self.derived_algebra().is_full() {
            return Ok(false);
        }
        Ok(subspaces.iter().all(|s| self.criterion_holds(s)))
    }

    /// `A ⊕ B` with the basis of `A` first and zero cross brackets.
    pub fn direct_sum(&self, other: &AnticommAlgebra) -> Result<AnticommAlgebra> {
        self.field.ensure_same(other.field)?;
        let n = self.dim + other.dim;
        let mut out = AnticommAlgebra::new(self.field, n);
        for (&(i, j), v) in &self.constants {
            let mut w = v.clone();
            w.extend(vector::zero(self.field, other.dim));
            out.set_bracket(i, j, w)?;
        }
        for (&(i, j), v) in &other.constants {
            let mut w = vector::zero(self.field, self.dim);
            w.extend(v.iter().cloned());
            out.set_bracket(self.dim + i, self.dim + j, w)?;
        }
        Ok(out)
    }

    /// Appends a basis vector `d` (last index) with `[d, a] = D a`.
    pub fn extend_by_element(&self, d: &Matrix) -> Result<AnticommAlgebra> {
        self.check_square(d)?;
        let n = self.dim + 1;
        let mut out = AnticommAlgebra::new(self.field, n);
        for (&(i, j), v) in &self.constants {
            let mut w = v.clone();
            w.push(self.field.zero());
            out.set_bracket(i, j, w)?;
        }
        for (i, mut col) in d.columns().into_iter().enumerate() {
            col.push(self.field.zero());
            out.set_bracket(self.dim, i, col)?;
        }
        Ok(out)
    }

    /// Applies `f` to every bracket `[e_i, e_j]`.
    pub(crate) fn map_brackets(&self, f: impl Fn(&[Scalar]) -> Vec<Scalar>) -> AnticommAlgebra {
        let mut out = AnticommAlgebra::new(self.field, self.dim);
        for (&(i, j), v) in &self.constants {
            out.set_bracket(i, j, f(v)).expect("same shape");
        }
        out
    }

    /// `phi [x,y]_self = [phi x, phi y]_other` on basis pairs.
    pub fn is_homomorphism(&self, phi: &Matrix, other: &AnticommAlgebra) -> Result<bool> {
        self.field.ensure_same(other.field)?;
        self.field.ensure_same(phi.field())?;
        if phi.cols() != self.dim || phi.rows() != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: phi.cols(),
            });
        }
        let images = phi.columns();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = phi.mul_vec(&self.basis_bracket(i, j))?;
                let rhs = other.bracket_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Exhaustive search for an isomorphism `phi: self -> other` over GF(p).
    pub fn isomorphic_bruteforce(&self, other: &AnticommAlgebra) -> Result<Option<Matrix>> {
        self.field.ensure_same(other.field)?;
        let p = self
            .field
            .order()
            .ok_or_else(|| self.field.unsupported("brute-force isomorphism enumerates GL(n, p)"))?;
        if self.dim != other.dim {
            return Ok(None);
        }
        let n = self.dim;
        let needed = count_vectors(p, n * n);
        let budget = config::budget(config::ISOMORPHISM_BUDGET);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let search = IsoSearch::new(self, other, p);
        Ok(search.run().map(|cols| {
            let cols: Vec<Vec<Scalar>> = cols.iter().map(|c| modp::to_scalars(self.field, c)).collect();
            Matrix::from_columns(self.field, n, &cols).expect("square")
        }))
    }
}

/// Backtracking over the images of basis vectors, checking each bracket as soon as
/// every column it involves has been chosen.
struct IsoSearch {
    p: u64,
    n: usize,
    /// `a[i][j]` = coordinates of `[e_i, e_j]` in the source.
    a: Vec<Vec<Vec<u64>>>,
    b: Vec<Vec<Vec<u64>>>,
    /// Pairs `(i, j)` to check once column `step` is fixed.
    checks: Vec<Vec<(usize, usize)>>,
}

impl IsoSearch {
    fn table(alg: &AnticommAlgebra) -> Vec<Vec<Vec<u64>>> {
        (0..alg.dim)
            .map(|i| (0..alg.dim).map(|j| modp::to_residues(&alg.basis_bracket(i, j))).collect())
            .collect()
    }

    fn new(src: &AnticommAlgebra, dst: &AnticommAlgebra, p: u64) -> Self {
        let n = src.dim;
        let a = Self::table(src);
        let b = Self::table(dst);
        let mut checks = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                let support = a[i][j].iter().rposition(|&x| x != 0).unwrap_or(0);
                checks[j.max(support)].push((i, j));
            }
        }
        IsoSearch { p, n, a, b, checks }
    }

    fn bracket_b(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.n];
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                if y[j] == 0 || i == j {
                    continue;
                }
                let c = x[i] * y[j] % p;
                for (o, &v) in out.iter_mut().zip(&self.b[i][j]) {
                    *o = (*o + c * v) % p;
                }
            }
        }
        out
    }

    fn image(&self, cols: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for (c, &x) in cols.iter().zip(v) {
            if x == 0 {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(c) {
                *o = (*o + x * y) % self.p;
            }
        }
        out
    }

    fn run(&self) -> Option<Vec<Vec<u64>>> {
        let mut cols = Vec::with_capacity(self.n);
        if self.n == 0 {
            return Some(cols);
        }
        self.extend(&mut cols, &EchelonBasis::new(self.p)).then_some(cols)
    }

    fn extend(&self, cols: &mut Vec<Vec<u64>>, span: &EchelonBasis) -> bool {
        let step = cols.len();
        if step == self.n {
            return true;
        }
        let total = count_vectors(self.p, self.n);
        for mut code in 1..total {
            let mut v = vec![0u64; self.n];
            for x in v.iter_mut() {
                *x = (code % self.p as u128) as u64;
                code /= self.p as u128;
            }
            let mut next_span = span.clone();
            if next_span.insert(v.clone()).is_none() {
                continue;
            }
            cols.push(v);
            let ok = self.checks[step].iter().all(|&(i, j)| {
                let lhs = self.image(cols, &self.a[i][j]);
                let rhs = self.bracket_b(&cols[i], &cols[j]);
                lhs == rhs
            });
            if ok && self.extend(cols, &next_span) {
                return true;
            }
            cols.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so3(f: FieldSpec) -> AnticommAlgebra {
        AnticommAlgebra::from_i64(f, 3, &[(0, 1, &[0, 0, 1]), (1, 2, &[1, 0, 0]), (2, 0, &[0, 1, 0])]).unwrap()
    }

    fn aff(f: FieldSpec) -> AnticommAlgebra {
        AnticommAlgebra::from_i64(f, 2, &[(0, 1, &[0, 1])]).unwrap()
    }

    #[test]
    fn brackets_are_antisymmetric() {
        let q = FieldSpec::Rationals;
        let a = so3(q);
        let x = vector::from_i64(q, &[1, 2, 3]);
        let y = vector::from_i64(q, &[-1, 0, 5]);
        assert_eq!(a.bracket(&x, &y).unwrap(), vector::neg(&a.bracket(&y, &x).unwrap()));
        assert!(vector::is_zero(&a.bracket(&x, &x).unwrap()));
        assert_eq!(a.basis_bracket(2, 0), vector::from_i64(q, &[0, 1, 0]));
        assert!(a.bracket(&x, &[q.one()]).is_err());
    }

    #[test]
    fn diagonal_bracket_rejected() {
        let q = FieldSpec::Rationals;
        assert!(AnticommAlgebra::from_i64(q, 2, &[(1, 1, &[1, 0])]).is_err());
        assert!(AnticommAlgebra::from_i64(q, 2, &[(0, 2, &[1, 0])]).is_err());
    }

    #[test]
    fn ad_ranks() {
        let q = FieldSpec::Rationals;
        assert_eq!(so3(q).rank_ad(&vector::unit(q, 3, 0)).unwrap(), 2);
        assert_eq!(aff(q).rank_ad(&vector::unit(q, 2, 0)).unwrap(), 1);
        assert_eq!(AnticommAlgebra::new(q, 3).rank_ad(&vector::from_i64(q, &[1, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn series_of_aff() {
        let q = FieldSpec::Rationals;
        let a = aff(q);
        assert!(a.is_solvable());
        assert!(!a.is_nilpotent());
        let y = Subspace::span(q, 2, &[vector::unit(q, 2, 1)]).unwrap();
        assert_eq!(a.derived_series(), vec![Subspace::full(q, 2), y.clone(), Subspace::zero(q, 2)]);
        assert_eq!(a.lower_central_series().last(), Some(&y));
        assert!(!so3(q).is_solvable());
        assert!(so3(q).center().is_zero());
    }

    #[test]
    fn closures() {
        let q = FieldSpec::Rationals;
        let a = so3(q);
        let e1 = Subspace::span(q, 3, &[vector::unit(q, 3, 0)]).unwrap();
        assert!(a.ideal_closure(&e1).unwrap().is_full());
        assert!(!a.is_ideal(&e1).unwrap());
        assert!(a.is_ideal(&Subspace::full(q, 3)).unwrap());
        let z = Subspace::zero(q, 3);
        assert_eq!(a.ideal_closure(&z).unwrap(), z);
    }

    #[test]
    fn simplicity_verdicts() {
        let gf5 = FieldSpec::Prime(5);
        let r = so3(gf5).is_simple();
        assert!(r.is_simple());
        assert!(r.witness.is_none());
        let r = aff(FieldSpec::Rationals).is_simple();
        assert_eq!(r.verdict, SimplicityVerdict::NotSimple);
        let q = FieldSpec::Rationals;
        assert_eq!(r.witness, Some(Subspace::span(q, 2, &[vector::unit(q, 2, 1)]).unwrap()));
        assert!(so3(q).is_simple().is_simple());
        let ab = AnticommAlgebra::new(q, 1).is_simple();
        assert!(!ab.is_simple());
        assert_eq!(ab.witness, Some(Subspace::zero(q, 1)));
    }

    #[test]
    fn criterion_examples() {
        let gf2 = FieldSpec::Prime(2);
        let a = so3(gf2);
        let e1 = Subspace::span(gf2, 3, &[vector::unit(gf2, 3, 0)]).unwrap();
        assert!(a.simplicity_criterion_condition(&e1).unwrap());
        assert!(a.is_simple_via_criterion().unwrap());
        let f = aff(gf2);
        let y = Subspace::span(gf2, 2, &[vector::unit(gf2, 2, 1)]).unwrap();
        assert!(!f.simplicity_criterion_condition(&y).unwrap());
        assert!(!f.is_simple_via_criterion().unwrap());
        let gf3 = FieldSpec::Prime(3);
        assert!(so3(gf3).simplicity_criterion_condition(&Subspace::full(gf3, 3)).is_err());
    }

    #[test]
    fn sums_and_extensions() {
        let f = FieldSpec::Prime(5);
        let s = so3(f);
        let ss = s.direct_sum(&s).unwrap();
        assert_eq!(ss.dim(), 6);
        assert!(ss.is_lie());
        let first = Subspace::span(f, 6, &(0..3).map(|i| vector::unit(f, 6, i)).collect::<Vec<_>>()).unwrap();
        assert!(ss.is_ideal(&first).unwrap());
        assert!(!ss.unique_proper_ideal_check(&first).unwrap());

        let mut e11 = Matrix::zeros(f, 3, 3);
        e11.set(0, 0, f.one());
        let ext = s.extend_by_element(&e11).unwrap();
        assert_eq!(ext.basis_bracket(3, 0), vector::unit(f, 4, 0));
        assert!(vector::is_zero(&ext.basis_bracket(3, 1)));
        let a1 = AnticommAlgebra::new(f, 1);
        assert_eq!(a1.extend_by_element(&Matrix::zeros(f, 1, 1)).unwrap(), AnticommAlgebra::new(f, 2));
    }

    #[test]
    fn bruteforce_isomorphisms() {
        let gf2 = FieldSpec::Prime(2);
        let a = aff(gf2);
        let phi = a.isomorphic_bruteforce(&a).unwrap().unwrap();
        assert!(a.is_homomorphism(&phi, &a).unwrap());
        assert!(a.isomorphic_bruteforce(&AnticommAlgebra::new(gf2, 2)).unwrap().is_none());
        let gf3 = FieldSpec::Prime(3);
        let b = AnticommAlgebra::from_i64(gf3, 2, &[(0, 1, &[2, 1])]).unwrap();
        let phi = b.isomorphic_bruteforce(&aff(gf3)).unwrap().unwrap();
        assert!(phi.is_invertible());
        assert!(b.is_homomorphism(&phi, &aff(gf3)).unwrap());
    }
}
