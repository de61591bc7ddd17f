//! Spinning subspaces under a set of matrices, and irreducibility testing.
//!
//! A [`MatrixModule`] is `F^n` acted on by the associative algebra generated by
//! its generator matrices. Ideals and Hom-ideals are exactly the submodules for
//! suitable generator sets, so every closure and simplicity question reduces to
//! the routines here.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::config;
use crate::error::{Error, Result};
use crate::exactmath::enumerate::{count_lines, enumerate_line_vectors};
use crate::exactmath::modp::{self, ModSpinner, Spin};
use crate::exactmath::{vector, FieldSpec, Matrix, Scalar, Subspace};

/// Three-valued outcome of an irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible,
    /// A proper nonzero submodule.
    Reducible(Subspace),
    /// The search budget ran out before a certificate was found.
    Inconclusive,
}

/// Every proper nonzero line closure found by an exhaustive scan.
#[derive(Clone, Debug, Default)]
pub struct LineScan {
    pub proper: BTreeSet<Subspace>,
    /// Closure of the first line (in enumeration order) that is not full.
    pub first: Option<Subspace>,
}

#[derive(Clone, Debug)]
pub struct MatrixModule {
    field: FieldSpec,
    dim: usize,
    gens: Vec<Matrix>,
}

/// Semi-echelon basis over an arbitrary field, used while spinning.
struct Echelon {
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn insert(&mut self, mut v: Vec<Scalar>) -> Option<Vec<Scalar>> {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if !v[pc].is_zero() {
                let c = -&v[pc];
                vector::axpy(&mut v, &c, row);
            }
        }
        let pc = v.iter().position(|x| !x.is_zero())?;
        let v = vector::scale(&v, &v[pc].inv().expect("nonzero pivot"));
        self.rows.push(v.clone());
        self.pivots.push(pc);
        Some(v)
    }
}

impl MatrixModule {
    pub fn new(field: FieldSpec, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        for g in &gens {
            field.ensure_same(g.field())?;
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.rows().max(g.cols()),
                });
            }
        }
        Ok(MatrixModule { field, dim, gens })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    /// The contragredient module (transposed generators).
    pub fn dual(&self) -> MatrixModule {
        MatrixModule {
            field: self.field,
            dim: self.dim,
            gens: self.gens.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Smallest submodule containing every vector in `seeds`.
    pub fn spin(&self, seeds: &[Vec<Scalar>]) -> Subspace {
        if let Some(p) = self.field.order() {
            let spinner = ModSpinner::new(p, self.dim, &self.gens);
            let seeds: Vec<Vec<u64>> = seeds.iter().map(|s| modp::to_residues(s)).collect();
            return match spinner.spin(&seeds, None) {
                Spin::Full => Subspace::full(self.field, self.dim),
                Spin::Proper(b) => modp::basis_to_subspace(self.field, self.dim, &b),
            };
        }
        let mut basis = Echelon::new();
        let mut queue = Vec::new();
        for s in seeds {
            if let Some(row) = basis.insert(s.clone()) {
                queue.push(row);
            }
        }
        while let Some(v) = queue.pop() {
            if basis.rows.len() == self.dim {
                break;
            }
            for g in &self.gens {
                let img = g.mul_vec(&v).expect("generator dimensions checked");
                if let Some(row) = basis.insert(img) {
                    queue.push(row);
                }
            }
        }
        Subspace::span(self.field, self.dim, &basis.rows).expect("vectors have ambient length")
    }

    /// Submodule generated by a subspace.
    pub fn closure(&self, seed: &Subspace) -> Subspace {
        self.spin(&seed.basis_vectors())
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        self.gens
            .iter()
            .all(|g| s.is_invariant_under(g).expect("generator dimensions checked"))
    }

    /// Exhaustive scan of every line of `GF(p)^n`.
    ///
    /// With `stop_at_first`, returns as soon as a proper closure is seen.
    pub fn scan_lines(&self, stop_at_first: bool) -> Result<LineScan> {
        let p = self
            .field
            .order()
            .ok_or_else(|| self.field.unsupported("line enumeration needs a finite field"))?;
        let needed = count_lines(p, self.dim);
        let budget = config::budget(config::LINE_BUDGET);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let spinner = ModSpinner::new(p, self.dim, &self.gens);
        let mut scan = LineScan::default();
        spinner.scan_lines(|_, result| {
            if let Spin::Proper(b) = result {
                let s = modp::basis_to_subspace(self.field, self.dim, b);
                if scan.first.is_none() {
                    scan.first = Some(s.clone());
                }
                scan.proper.insert(s);
                if stop_at_first {
                    return false;
                }
            }
            true
        });
        Ok(scan)
    }

    /// Whether a finite-field line scan fits the configured budget.
    pub fn scan_fits_budget(&self) -> bool {
        self.field
            .order()
            .is_some_and(|p| count_lines(p, self.dim) <= config::budget(config::LINE_BUDGET))
    }

    fn random_element(&self, rng: &mut StdRng) -> Matrix {
        let mut acc = Matrix::zeros(self.field, self.dim, self.dim);
        for g in &self.gens {
            let c = self.field.from_i64(rng.gen_range(-2..=2));
            acc = acc.add(&g.scale(&c)).expect("same shape");
        }
        if !self.gens.is_empty() {
            for _ in 0..2 {
                let a = &self.gens[rng.gen_range(0..self.gens.len())];
                let b = &self.gens[rng.gen_range(0..self.gens.len())];
                let c = self.field.from_i64(rng.gen_range(1..=3));
                acc = acc.add(&a.mul(b).expect("same shape").scale(&c)).expect("same shape");
            }
        }
        acc
    }

    fn eigenvalues(&self, m: &Matrix) -> Vec<Scalar> {
        let cp = m.charpoly().expect("square");
        let roots = if self.field.is_finite() {
            cp.roots_in_prime_field()
        } else {
            cp.rational_roots()
        };
        roots.unwrap_or_default()
    }

    /// Norton's irreducibility test with a bounded number of envelope elements.
    ///
    /// For an envelope element `t` with nonzero kernel `N`: if every nonzero
    /// vector of `N` spins to the whole space and some nonzero vector of
    /// `ker t^T` spins to the whole dual space, the module is irreducible.
    pub fn norton(&self, seed: u64) -> Verdict {
        if self.dim <= 1 {
            return Verdict::Irreducible;
        }
        let mut rng = StdRng::seed_from_u64(seed);
        let dual = self.dual();
        let full = |s: &Subspace| s.is_full();

        for i in 0..self.dim {
            let s = self.spin(&[vector::unit(self.field, self.dim, i)]);
            if !full(&s) {
                return Verdict::Reducible(s);
            }
        }
        if !self.field.is_finite() {
            for _ in 0..config::RANDOM_LINES {
                let v: Vec<Scalar> = (0..self.dim).map(|_| self.field.from_i64(rng.gen_range(-3..=3))).collect();
                if vector::is_zero(&v) {
                    continue;
                }
                let s = self.spin(&[v]);
                if !full(&s) {
                    return Verdict::Reducible(s);
                }
            }
        }

        let mut tried = 0;
        let mut round = 0;
        while tried < config::ENVELOPE_ATTEMPTS {
            let base = if round < self.gens.len() {
                self.gens[round].clone()
            } else {
                self.random_element(&mut rng)
            };
            round += 1;
            if round > config::ENVELOPE_ATTEMPTS * 4 {
                break;
            }
            for r in self.eigenvalues(&base) {
                if tried >= config::ENVELOPE_ATTEMPTS {
                    break;
                }
                tried += 1;
                let theta = base
                    .sub(&Matrix::scalar(self.field, self.dim, &r))
                    .expect("same shape");
                match self.norton_step(&dual, &theta) {
                    Some(v) => return v,
                    None => continue,
                }
            }
        }
        Verdict::Inconclusive
    }

    /// `None` when this element cannot certify either way.
    fn norton_step(&self, dual: &MatrixModule, theta: &Matrix) -> Option<Verdict> {
        let kernel = theta.kernel();
        if kernel.is_zero() {
            return None;
        }
        let (kernel_vectors, complete): (Vec<Vec<Scalar>>, bool) = match self.field.order() {
            Some(p) if count_lines(p, kernel.dim()) <= 10_000 => {
                let basis = kernel.basis_vectors();
                let vs = enumerate_line_vectors(self.field, kernel.dim())
                    .expect("finite field")
                    .map(|coords| {
                        let mut v = vector::zero(self.field, self.dim);
                        for (c, b) in coords.iter().zip(&basis) {
                            vector::axpy(&mut v, c, b);
                        }
                        v
                    })
                    .collect();
                (vs, true)
            }
            _ => (kernel.basis_vectors(), kernel.dim() == 1),
        };
        for v in &kernel_vectors {
            let s = self.spin(std::slice::from_ref(v));
            if !s.is_full() {
                return Some(Verdict::Reducible(s));
            }
        }
        if !complete {
            return None;
        }
        let dual_kernel = theta.transpose().kernel();
        let w = dual_kernel.basis_vectors().into_iter().next()?;
        let ws = dual.spin(&[w]);
        if ws.is_full() {
            Some(Verdict::Irreducible)
        } else {
            Some(Verdict::Reducible(ws.annihilator()))
        }
    }
}
