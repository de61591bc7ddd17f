//! Exhaustive enumeration of vectors, lines and subspaces over GF(p).

use super::field::{FieldSpec, Scalar};
use super::subspace::Subspace;
use crate::config;
use crate::error::{Error, Result};

fn prime_of(field: FieldSpec) -> Result<u64> {
    field
        .order()
        .ok_or_else(|| field.unsupported("exhaustive enumeration needs a finite field"))
}

/// `p^n`, saturating.
pub fn count_vectors(p: u64, dim: usize) -> u128 {
    (p as u128).saturating_pow(dim as u32)
}

/// `(p^n - 1) / (p - 1)`.
pub fn count_lines(p: u64, dim: usize) -> u128 {
    if dim == 0 {
        0
    } else {
        (count_vectors(p, dim) - 1) / (p as u128 - 1)
    }
}

/// All vectors of `GF(p)^dim`; coordinate 0 varies fastest.
pub fn enumerate_vectors(field: FieldSpec, dim: usize) -> Result<impl Iterator<Item = Vec<Scalar>>> {
    let p = prime_of(field)?;
    let total = count_vectors(p, dim);
    Ok((0..total).map(move |mut code| {
        (0..dim)
            .map(|_| {
                let digit = (code % p as u128) as u64;
                code /= p as u128;
                field.residue(digit)
            })
            .collect()
    }))
}

/// Canonical representatives of the lines of `GF(p)^dim`: first nonzero coordinate equal to 1.
pub fn enumerate_line_vectors(field: FieldSpec, dim: usize) -> Result<impl Iterator<Item = Vec<Scalar>>> {
    let p = prime_of(field)?;
    Ok((0..dim).flat_map(move |lead| {
        let tail = dim - lead - 1;
        (0..count_vectors(p, tail)).map(move |mut code| {
            let mut v = vec![field.zero(); dim];
            v[lead] = field.one();
            for x in v.iter_mut().skip(lead + 1) {
                *x = field.residue((code % p as u128) as u64);
                code /= p as u128;
            }
            v
        })
    }))
}

/// Every line of `GF(p)^dim` exactly once, as a 1-dimensional subspace.
pub fn enumerate_lines(field: FieldSpec, dim: usize) -> Result<impl Iterator<Item = Subspace>> {
    Ok(enumerate_line_vectors(field, dim)?
        .map(move |v| Subspace::span(field, dim, &[v]).expect("line representative has the right length")))
}

/// Number of `k`-dimensional subspaces of `GF(p)^n` (Gaussian binomial).
pub fn count_subspaces(p: u64, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(p.saturating_pow((n - i) as u32) - 1);
        den = den.saturating_mul(p.saturating_pow((i + 1) as u32) - 1);
    }
    num / den
}

/// All `k`-dimensional subspaces of `GF(p)^n`, one RREF matrix per subspace.
pub fn enumerate_subspaces(field: FieldSpec, n: usize, k: usize) -> Result<Vec<Subspace>> {
    let p = prime_of(field)?;
    let mut out = Vec::new();
    if k > n {
        return Ok(out);
    }
    for pivots in combinations(n, k) {
        // free slots: (row, col) with col > pivot[row] and col not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pv = pivots.clone();
                (pivots[r] + 1..n).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        for mut code in 0..count_vectors(p, free.len()) {
            let mut rows = vec![vec![field.zero(); n]; k];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = field.one();
            }
            for &(r, c) in &free {
                rows[r][c] = field.residue((code % p as u128) as u64);
                code /= p as u128;
            }
            out.push(Subspace::span(field, n, &rows)?);
        }
    }
    Ok(out)
}

/// Every subspace other than `0` and the whole space, after a budget check.
pub fn enumerate_nontrivial_subspaces(field: FieldSpec, n: usize) -> Result<Vec<Subspace>> {
    let p = prime_of(field)?;
    let needed: u128 = (1..n).map(|k| count_subspaces(p, n, k)).sum();
    let budget = config::budget(config::SUBSPACE_BUDGET);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = Vec::new();
    for k in 1..n {
        out.extend(enumerate_subspaces(field, n, k)?);
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn line_counts() {
        let gf = |p| FieldSpec::Prime(p);
        assert_eq!(enumerate_lines(gf(2), 3).unwrap().count(), 7);
        assert_eq!(enumerate_lines(gf(3), 2).unwrap().count(), 4);
        assert_eq!(enumerate_lines(gf(5), 1).unwrap().count(), 1);
    }

    #[test]
    fn rationals_rejected() {
        assert!(matches!(
            enumerate_lines(FieldSpec::Rationals, 2).err(),
            Some(Error::UnsupportedField { .. })
        ));
        assert!(enumerate_vectors(FieldSpec::Rationals, 2).is_err());
    }

    #[test]
    fn vectors_are_distinct() {
        let all: HashSet<_> = enumerate_vectors(FieldSpec::Prime(3), 3).unwrap().collect();
        assert_eq!(all.len(), 27);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        let f = FieldSpec::Prime(2);
        for k in 0..=4 {
            let subs = enumerate_subspaces(f, 4, k).unwrap();
            let distinct: HashSet<_> = subs.iter().cloned().collect();
            assert_eq!(subs.len() as u128, count_subspaces(2, 4, k));
            assert_eq!(distinct.len(), subs.len());
            assert!(subs.iter().all(|s| s.dim() == k));
        }
        assert_eq!(enumerate_nontrivial_subspaces(f, 3).unwrap().len(), 14);
    }
}
