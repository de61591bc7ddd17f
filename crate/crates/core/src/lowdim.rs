//! Dimensions 2 and 3: twisting maps on `a_2` and `aff`, and 3-dimensional simple algebras.
//!
//! `aff` has basis `x = e_0`, `y = e_1` with `[x, y] = y`. Matrices act on columns, so
//! `σ_12 = σ[0][1]` is the `x`-coordinate of `σ(y)`.

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::AnticommAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::enumerate::{enumerate_lines, enumerate_vectors};
use crate::exactmath::{FieldSpec, Matrix, Poly, Scalar};
use crate::homlie::{hom_ideal_closure, is_multiplicative, is_twisting_map, outside_twist};
use crate::zoo;

fn prime_field(q: u64) -> Result<FieldSpec> {
    FieldSpec::prime(q)
}

fn finite(field: FieldSpec) -> Result<u64> {
    field
        .order()
        .ok_or_else(|| field.unsupported("exhaustive scan needs a finite field"))
}

/// Monic `λ² - a1 λ - a0` with no root in GF(q), listed by `(a1, a0)`.
pub fn list_irreducible_quadratics(q: u64) -> Result<Vec<Poly>> {
    let f = prime_field(q)?;
    let mut out = Vec::new();
    for a1 in 0..q {
        for a0 in 0..q {
            let p = Poly::from_coeffs(f, vec![-&f.residue(a0), -&f.residue(a1), f.one()]);
            if p.roots_in_prime_field().expect("finite").is_empty() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

pub fn count_irreducible_quadratics(q: u64) -> Result<usize> {
    Ok(list_irreducible_quadratics(q)?.len())
}

fn check_2x2(sigma: &Matrix) -> Result<()> {
    if sigma.rows() != 2 || sigma.cols() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: sigma.rows().max(sigma.cols()),
        });
    }
    Ok(())
}

/// No line `L` with `σ(L) ⊆ L`, by enumerating the `q + 1` lines.
pub fn has_no_invariant_line(sigma: &Matrix) -> Result<bool> {
    check_2x2(sigma)?;
    let f = sigma.field();
    finite(f)?;
    for line in enumerate_lines(f, 2)? {
        if line.is_invariant_under(sigma)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every subspace of `a_2` is an ideal, so the only Hom-ideals are trivial iff σ has no invariant line.
pub fn a2_only_trivial_hom_ideals(sigma: &Matrix) -> Result<bool> {
    has_no_invariant_line(sigma)
}

/// The same verdict computed as Hom-ideal closures of every line of `a_2`.
pub fn a2_only_trivial_hom_ideals_by_closure(sigma: &Matrix) -> Result<bool> {
    check_2x2(sigma)?;
    let f = sigma.field();
    finite(f)?;
    let a2 = AnticommAlgebra::new(f, 2);
    for line in enumerate_lines(f, 2)? {
        if !hom_ideal_closure(&a2, sigma, &line)?.is_full() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A twisting map on `aff`; every 2×2 matrix is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffHomStructure {
    pub sigma: Matrix,
}

impl AffHomStructure {
    pub fn new(sigma: Matrix) -> Result<Self> {
        check_2x2(&sigma)?;
        Ok(AffHomStructure { sigma })
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        self.sigma.get(r, c)
    }

    /// `σ(y) ∉ F y`.
    pub fn is_simple(&self) -> bool {
        !self.entry(0, 1).is_zero()
    }

    pub fn trace(&self) -> Scalar {
        self.sigma.trace().expect("square")
    }

    pub fn det(&self) -> Scalar {
        self.sigma.det().expect("square")
    }
}

pub fn aff_algebra(field: FieldSpec) -> AnticommAlgebra {
    zoo::aff(field).expect("aff is well formed").algebra
}

fn all_2x2(field: FieldSpec) -> Result<impl Iterator<Item = Matrix>> {
    Ok(enumerate_vectors(field, 4)?.map(move |v| Matrix::new(field, 2, 2, v).expect("4 entries")))
}

/// Every σ over GF(q) with `σ_12 ≠ 0`.
pub fn aff_simple_structures(q: u64) -> Result<Vec<AffHomStructure>> {
    let f = prime_field(q)?;
    Ok(all_2x2(f)?
        .map(|m| AffHomStructure { sigma: m })
        .filter(AffHomStructure::is_simple)
        .collect())
}

/// The two printed conditions: equal traces, and
/// `σ12 σ21 - η12 η21 = (σ11 - η11)(σ22 - η11)`.
pub fn aff_iso_by_invariants(s1: &AffHomStructure, s2: &AffHomStructure) -> Result<bool> {
    s1.sigma.field().ensure_same(s2.sigma.field())?;
    if !s1.is_simple() || !s2.is_simple() {
        return Err(Error::precondition("both structures need σ_12 ≠ 0"));
    }
    let (s, e) = (|r, c| s1.entry(r, c).clone(), |r, c| s2.entry(r, c).clone());
    let same_trace = s1.trace() == s2.trace();
    let lhs = &(&s(0, 1) * &s(1, 0)) - &(&e(0, 1) * &e(1, 0));
    let rhs = &(&s(0, 0) - &e(0, 0)) * &(&s(1, 1) - &e(0, 0));
    Ok(same_trace && lhs == rhs)
}

/// Automorphisms of `aff` over GF(q), found by testing every invertible 2×2 matrix.
pub fn aff_automorphisms(q: u64) -> Result<Vec<Matrix>> {
    let f = prime_field(q)?;
    let a = aff_algebra(f);
    let mut out = Vec::new();
    for m in all_2x2(f)? {
        if m.is_invertible() && a.is_homomorphism(&m, &a)? {
            out.push(m);
        }
    }
    Ok(out)
}

/// An automorphism φ of `aff` with `φσ_1 = σ_2φ`, if any.
pub fn aff_iso_bruteforce(s1: &AffHomStructure, s2: &AffHomStructure, q: u64) -> Result<Option<Matrix>> {
    let f = prime_field(q)?;
    f.ensure_same(s1.sigma.field())?;
    f.ensure_same(s2.sigma.field())?;
    for phi in aff_automorphisms(q)? {
        if phi.mul(&s1.sigma)? == s2.sigma.mul(&phi)? {
            return Ok(Some(phi));
        }
    }
    Ok(None)
}

/// An isomorphism class of simple structures on `aff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffClass {
    pub representative: AffHomStructure,
    pub size: usize,
    pub trace: Scalar,
    pub det: Scalar,
}

/// Orbits of the simple structures under conjugation by `Aut(aff)`.
pub fn aff_classes(q: u64) -> Result<Vec<AffClass>> {
    if q > 7 {
        return Err(Error::BudgetExceeded {
            needed: q as u128,
            budget: 7,
        });
    }
    let autos = aff_automorphisms(q)?;
    let inverses: Vec<Matrix> = autos
        .iter()
        .map(|a| a.inverse().map(|m| m.expect("automorphisms are invertible")))
        .collect::<Result<_>>()?;
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut classes = Vec::new();
    for s in aff_simple_structures(q)? {
        if seen.contains(&s.sigma) {
            continue;
        }
        let mut orbit = HashSet::new();
        for (phi, inv) in autos.iter().zip(&inverses) {
            orbit.insert(phi.mul(&s.sigma)?.mul(inv)?);
        }
        classes.push(AffClass {
            trace: s.trace(),
            det: s.det(),
            size: orbit.len(),
            representative: s,
        });
        seen.extend(orbit);
    }
    Ok(classes)
}

pub fn aff_class_count(q: u64) -> Result<usize> {
    Ok(aff_classes(q)?.len())
}

/// Every multiplicative σ on `aff` over GF(q).
pub fn aff_multiplicative_maps(q: u64) -> Result<Vec<Matrix>> {
    let f = prime_field(q)?;
    let a = aff_algebra(f);
    let mut out = Vec::new();
    for m in all_2x2(f)? {
        if is_multiplicative(&a, &m)? {
            out.push(m);
        }
    }
    Ok(out)
}

/// True when every multiplicative σ on `aff` keeps `F y` stable (so no multiplicative simple
/// structure exists; `a_2` is excluded as abelian).
pub fn no_multiplicative_simple_dim2(q: u64) -> Result<bool> {
    if q > 5 {
        return Err(Error::BudgetExceeded {
            needed: q as u128,
            budget: 5,
        });
    }
    let f = prime_field(q)?;
    let a = aff_algebra(f);
    let y = crate::exactmath::Subspace::span(f, 2, &[crate::exactmath::vector::unit(f, 2, 1)])?;
    for m in aff_multiplicative_maps(q)? {
        if !y.is_invariant_under(&m)? || !a.is_ideal(&y)? {
            return Ok(false);
        }
        if crate::homlie::is_hom_simple(&a, &m)?.is_simple() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `σ(e_1) = [e_2, e_3]`, `σ(e_2) = [e_3, e_1]`, `σ(e_3) = [e_1, e_2]`.
pub fn sigma_from_brackets(a: &AnticommAlgebra) -> Result<Matrix> {
    if a.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: a.dim(),
        });
    }
    let cols = [a.basis_bracket(1, 2), a.basis_bracket(2, 0), a.basis_bracket(0, 1)];
    Matrix::from_columns(a.field(), 3, &cols)
}

/// Uniform over GF(p), small integers over Q; redrawn until invertible.
pub fn random_invertible(field: FieldSpec, n: usize, rng: &mut StdRng) -> Matrix {
    loop {
        let entries: Vec<Scalar> = (0..n * n)
            .map(|_| match field.order() {
                Some(p) => field.residue(rng.gen_range(0..p)),
                None => field.from_i64(rng.gen_range(-5..=5)),
            })
            .collect();
        let m = Matrix::new(field, n, n, entries).expect("n^2 entries");
        if m.is_invertible() {
            return m;
        }
    }
}

/// Outcome of checking one outside twist of so3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim3Sample {
    pub theta: Matrix,
    pub sigma: Matrix,
    pub bijective: bool,
    pub twisting: bool,
    pub induced_is_so3: bool,
}

impl Dim3Sample {
    pub fn ok(&self) -> bool {
        self.bijective && self.twisting && self.induced_is_so3
    }
}

/// For seeded random invertible θ: σ from the brackets of `θ∘[·,·]_so3` is bijective, a
/// twisting map, and its induced Lie algebra has exactly the cross-product constants.
pub fn dim3_check(field: FieldSpec, samples: usize, seed: u64) -> Result<Vec<Dim3Sample>> {
    let so3 = zoo::so3(field)?.algebra;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let theta = random_invertible(field, 3, &mut rng);
        let a = outside_twist(&so3, &theta)?;
        let sigma = sigma_from_brackets(&a)?;
        let bijective = sigma.is_invertible();
        let twisting = is_twisting_map(&a, &sigma)?;
        // σ need not be multiplicative here, so the twist by σ⁻¹ is formed directly
        let induced_is_so3 = match sigma.inverse()? {
            Some(inv) => outside_twist(&a, &inv)? == so3,
            None => false,
        };
        out.push(Dim3Sample {
            theta,
            sigma,
            bijective,
            twisting,
            induced_is_so3,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_quadratic_counts() {
        assert_eq!(count_irreducible_quadratics(2).unwrap(), 1);
        assert_eq!(list_irreducible_quadratics(2).unwrap()[0].to_string(), "x^2 + x + 1");
        assert_eq!(count_irreducible_quadratics(3).unwrap(), 3);
        assert_eq!(count_irreducible_quadratics(5).unwrap(), 10);
    }

    #[test]
    fn invariant_lines() {
        let f = FieldSpec::Prime(2);
        let comp = Matrix::from_i64(f, &[&[0, 1], &[1, 1]]);
        assert!(has_no_invariant_line(&comp).unwrap());
        assert!(!has_no_invariant_line(&Matrix::identity(f, 2)).unwrap());
        assert!(!has_no_invariant_line(&Matrix::from_i64(f, &[&[0, 1], &[0, 0]])).unwrap());
        assert!(!a2_only_trivial_hom_ideals(&Matrix::zeros(f, 2, 2)).unwrap());
        assert!(a2_only_trivial_hom_ideals_by_closure(&comp).unwrap());
    }

    #[test]
    fn aff_structures_and_automorphisms() {
        assert_eq!(aff_simple_structures(2).unwrap().len(), 8);
        assert_eq!(aff_simple_structures(3).unwrap().len(), 54);
        for q in [2, 3, 5] {
            let autos = aff_automorphisms(q).unwrap();
            assert_eq!(autos.len() as u64, q * (q - 1));
            for a in autos {
                assert!(a.get(0, 0).is_one() && a.get(0, 1).is_zero());
            }
        }
    }

    #[test]
    fn so3_gives_identity_sigma() {
        let f = FieldSpec::Rationals;
        let so3 = zoo::so3(f).unwrap().algebra;
        assert!(sigma_from_brackets(&so3).unwrap().is_identity());
        assert!(sigma_from_brackets(&AnticommAlgebra::new(f, 3)).unwrap().is_zero());
        assert!(sigma_from_brackets(&AnticommAlgebra::new(f, 2)).is_err());
    }

    #[test]
    fn multiplicative_maps_fix_the_ideal() {
        assert!(no_multiplicative_simple_dim2(2).unwrap());
        assert!(no_multiplicative_simple_dim2(3).unwrap());
    }
}
