//! Word-sized GF(p) kernels for the hot enumeration loops.
//!
//! Everything here mirrors operations available on [`Matrix`]/[`Subspace`];
//! results are converted back to canonical subspaces before leaving the crate.

use super::field::{mod_pow, FieldSpec, Scalar};
use super::matrix::Matrix;
use super::subspace::Subspace;

/// Largest `p^n` for which a full-line lookup table is kept.
const CACHE_LIMIT: u128 = 1 << 26;

pub(crate) fn to_residues(v: &[Scalar]) -> Vec<u64> {
    v.iter().map(|s| s.residue().expect("prime-field scalar")).collect()
}

pub(crate) fn to_scalars(field: FieldSpec, v: &[u64]) -> Vec<Scalar> {
    v.iter().map(|&x| field.residue(x)).collect()
}

/// Semi-echelon basis: row `r` has a 1 in column `pivots[r]` and zeros at earlier pivots.
#[derive(Clone, Debug)]
pub(crate) struct EchelonBasis {
    p: u64,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(p: u64) -> Self {
        EchelonBasis {
            p,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u64]) {
        let p = self.p;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let f = p - c;
            for (x, &r) in v.iter_mut().zip(row) {
                if r != 0 {
                    *x = (*x + f * r) % p;
                }
            }
        }
    }

    /// Adds `v` if independent; returns the stored row.
    pub fn insert(&mut self, mut v: Vec<u64>) -> Option<&[u64]> {
        self.reduce(&mut v);
        let pc = v.iter().position(|&x| x != 0)?;
        let inv = mod_pow(v[pc], self.p - 2, self.p);
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        self.rows.push(v);
        self.pivots.push(pc);
        self.rows.last().map(Vec::as_slice)
    }

    pub fn vectors(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

/// Outcome of spinning a seed set.
pub(crate) enum Spin {
    Full,
    Proper(EchelonBasis),
}

/// Lookup table of lines already known to generate the whole module.
pub(crate) struct FullLineCache {
    p: u64,
    known: Vec<bool>,
}

impl FullLineCache {
    pub fn new(p: u64, n: usize) -> Option<Self> {
        let size = (p as u128).checked_pow(n as u32)?;
        (size <= CACHE_LIMIT).then(|| FullLineCache {
            p,
            known: vec![false; size as usize],
        })
    }

    fn code(&self, v: &[u64]) -> Option<usize> {
        let lead = v.iter().find(|&&x| x != 0)?;
        let inv = mod_pow(*lead, self.p - 2, self.p);
        let mut code = 0usize;
        for &x in v.iter().rev() {
            code = code * self.p as usize + (x * inv % self.p) as usize;
        }
        Some(code)
    }

    fn is_full(&self, v: &[u64]) -> bool {
        self.code(v).is_some_and(|c| self.known[c])
    }

    fn mark(&mut self, v: &[u64]) {
        if let Some(c) = self.code(v) {
            self.known[c] = true;
        }
    }
}

/// Spins subspaces under a fixed set of `n x n` generators over GF(p).
pub(crate) struct ModSpinner {
    p: u64,
    n: usize,
    gens: Vec<Vec<u64>>,
}

impl ModSpinner {
    pub fn new(p: u64, n: usize, gens: &[Matrix]) -> Self {
        let gens = gens.iter().map(|g| to_residues(g.entries())).collect();
        ModSpinner { p, n, gens }
    }

    fn apply(&self, g: &[u64], v: &[u64], out: &mut Vec<u64>) {
        let n = self.n;
        out.clear();
        for r in 0..n {
            let row = &g[r * n..(r + 1) * n];
            let mut acc: u64 = 0;
            for (a, b) in row.iter().zip(v) {
                acc += a * b;
                if acc >= 1 << 62 {
                    acc %= self.p;
                }
            }
            out.push(acc % self.p);
        }
    }

    /// Smallest invariant subspace containing `seeds`.
    pub fn spin(&self, seeds: &[Vec<u64>], cache: Option<&FullLineCache>) -> Spin {
        let mut basis = EchelonBasis::new(self.p);
        let mut queue: Vec<Vec<u64>> = Vec::new();
        for s in seeds {
            if cache.is_some_and(|c| c.is_full(s)) {
                return Spin::Full;
            }
            if let Some(row) = basis.insert(s.clone()) {
                queue.push(row.to_vec());
            }
        }
        let mut img = Vec::with_capacity(self.n);
        while let Some(v) = queue.pop() {
            for g in &self.gens {
                self.apply(g, &v, &mut img);
                if cache.is_some_and(|c| c.is_full(&img)) {
                    return Spin::Full;
                }
                if let Some(row) = basis.insert(img.clone()) {
                    queue.push(row.to_vec());
                    if basis.dim() == self.n {
                        return Spin::Full;
                    }
                }
            }
        }
        if basis.dim() == self.n {
            Spin::Full
        } else {
            Spin::Proper(basis)
        }
    }

    /// Visits every line of `GF(p)^n` with the closure it generates.
    ///
    /// `visit` returns `false` to stop early.
    pub fn scan_lines(&self, mut visit: impl FnMut(&[u64], &Spin) -> bool) {
        let mut cache = FullLineCache::new(self.p, self.n);
        let n = self.n;
        let p = self.p;
        let mut v = vec![0u64; n];
        for lead in 0..n {
            let tail = n - lead - 1;
            let count = (p as u128).pow(tail as u32);
            for mut code in 0..count {
                v.iter_mut().for_each(|x| *x = 0);
                v[lead] = 1;
                for x in v.iter_mut().skip(lead + 1) {
                    *x = (code % p as u128) as u64;
                    code /= p as u128;
                }
                let result = self.spin(std::slice::from_ref(&v), cache.as_ref());
                if let (Spin::Full, Some(c)) = (&result, cache.as_mut()) {
                    c.mark(&v);
                }
                if !visit(&v, &result) {
                    return;
                }
            }
        }
    }
}

pub(crate) fn basis_to_subspace(field: FieldSpec, n: usize, basis: &EchelonBasis) -> Subspace {
    let vs: Vec<Vec<Scalar>> = basis.vectors().iter().map(|v| to_scalars(field, v)).collect();
    Subspace::span(field, n, &vs).expect("consistent dimensions")
}
