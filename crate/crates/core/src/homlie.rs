//! Twisting maps, Hom-Lie algebras, Hom-ideals and Yau twists.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{module_simplicity, AnticommAlgebra, IdealReport, SimplicityVerdict};
use crate::config;
use crate::error::{Error, Result};
use crate::exactmath::enumerate::{count_vectors, enumerate_vectors};
use crate::exactmath::{vector, FieldSpec, Matrix, Poly, Scalar, Subspace};
use crate::spin::MatrixModule;

/// An anticommutative algebra with a twisting map satisfying the Hom-Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLie {
    algebra: AnticommAlgebra,
    sigma: Matrix,
}

impl HomLie {
    /// Fails unless `sigma` is a twisting map of `algebra`.
    pub fn new(algebra: AnticommAlgebra, sigma: Matrix) -> Result<Self> {
        if !is_twisting_map(&algebra, &sigma)? {
            return Err(Error::precondition("sigma violates the Hom-Jacobi identity"));
        }
        Ok(HomLie { algebra, sigma })
    }

    pub fn algebra(&self) -> &AnticommAlgebra {
        &self.algebra
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The module whose submodules are the Hom-ideals.
    pub fn hom_module(&self) -> MatrixModule {
        hom_module(&self.algebra, &self.sigma)
    }
}

fn hom_module(a: &AnticommAlgebra, sigma: &Matrix) -> MatrixModule {
    let mut gens = a.ad_basis();
    gens.push(sigma.clone());
    MatrixModule::new(a.field(), a.dim(), gens).expect("consistent shapes")
}

/// `[σx,[y,z]] + [σy,[z,x]] + [σz,[x,y]]`.
pub fn hom_jacobian(a: &AnticommAlgebra, sigma: &Matrix, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
    a.check_square(sigma)?;
    let yz = a.bracket(y, z)?;
    let zx = a.bracket(z, x)?;
    let xy = a.bracket(x, y)?;
    let t1 = a.bracket(&sigma.mul_vec(x)?, &yz)?;
    let t2 = a.bracket(&sigma.mul_vec(y)?, &zx)?;
    let t3 = a.bracket(&sigma.mul_vec(z)?, &xy)?;
    Ok(vector::add(&vector::add(&t1, &t2), &t3))
}

fn basis_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

/// Hom-Jacobi identity on basis triples `i < j < k`.
pub fn is_twisting_map(a: &AnticommAlgebra, sigma: &Matrix) -> Result<bool> {
    a.check_square(sigma)?;
    let (f, n) = (a.field(), a.dim());
    for (i, j, k) in basis_triples(n) {
        let e = |t| vector::unit(f, n, t);
        if !vector::is_zero(&hom_jacobian(a, sigma, &e(i), &e(j), &e(k))?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// HS(A): all twisting maps, as a subspace of `End(A) = F^{n^2}` (row-major flattening).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSSpace {
    algebra: AnticommAlgebra,
    space: Subspace,
}

impl HSSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn algebra(&self) -> &AnticommAlgebra {
        &self.algebra
    }

    /// Canonical subspace of flattened matrices.
    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<Matrix> {
        let (f, n) = (self.algebra.field(), self.algebra.dim());
        self.space
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::new(f, n, n, v).expect("n^2 entries"))
            .collect()
    }

    /// `Σ c_k B_k` over the canonical basis.
    pub fn element(&self, coeffs: &[Scalar]) -> Result<Matrix> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: coeffs.len(),
            });
        }
        let (f, n) = (self.algebra.field(), self.algebra.dim());
        let mut flat = vector::zero(f, n * n);
        for (c, b) in coeffs.iter().zip(self.space.basis_vectors()) {
            vector::axpy(&mut flat, c, &b);
        }
        Matrix::new(f, n, n, flat)
    }

    pub fn contains(&self, sigma: &Matrix) -> Result<bool> {
        self.algebra.check_square(sigma)?;
        self.space.contains(sigma.entries())
    }
}

/// Solves the linear Hom-Jacobi equations in the `n^2` entries of σ.
pub fn hs_space(a: &AnticommAlgebra) -> HSSpace {
    let (f, n) = (a.field(), a.dim());
    let e = |t| vector::unit(f, n, t);
    // inner[i][j][a] = [e_a, [e_i, e_j]]
    let outer = |x: usize, inner: &[Scalar]| a.bracket_unchecked(&e(x), inner);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (i, j, k) in basis_triples(n) {
        let terms = [(i, a.basis_bracket(j, k)), (j, a.basis_bracket(k, i)), (k, a.basis_bracket(i, j))];
        let mut block = vec![vector::zero(f, n * n); n];
        for (b, inner) in &terms {
            for x in 0..n {
                let v = outer(x, inner);
                for (out, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        let slot = &mut block[out][x * n + b];
                        *slot = &*slot + &c;
                    }
                }
            }
        }
        rows.extend(block.into_iter().filter(|r| !vector::is_zero(r)));
    }
    let space = if rows.is_empty() {
        Subspace::full(f, n * n)
    } else {
        Matrix::from_rows(f, rows).expect("rectangular").kernel()
    };
    HSSpace {
        algebra: a.clone(),
        space,
    }
}

/// Least subspace containing `s` and stable under every `ad e_i` and σ.
pub fn hom_ideal_closure(a: &AnticommAlgebra, sigma: &Matrix, s: &Subspace) -> Result<Subspace> {
    a.check_square(sigma)?;
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: s.ambient_dim(),
        });
    }
    a.field().ensure_same(s.field())?;
    Ok(hom_module(a, sigma).closure(s))
}

pub fn is_hom_ideal(a: &AnticommAlgebra, sigma: &Matrix, s: &Subspace) -> Result<bool> {
    Ok(&hom_ideal_closure(a, sigma, s)? == s)
}

/// Hom-simplicity: nonabelian with no proper nontrivial Hom-ideal.
pub fn is_hom_simple(a: &AnticommAlgebra, sigma: &Matrix) -> Result<IdealReport> {
    a.check_square(sigma)?;
    Ok(module_simplicity(&hom_module(a, sigma), a.is_abelian()))
}

/// `σ[e_i,e_j] = [σe_i, σe_j]` for all `i < j`.
pub fn is_multiplicative(a: &AnticommAlgebra, sigma: &Matrix) -> Result<bool> {
    a.check_square(sigma)?;
    a.is_homomorphism(sigma, a)
}

/// Multiplicative and invertible.
pub fn is_regular(a: &AnticommAlgebra, sigma: &Matrix) -> Result<bool> {
    Ok(is_multiplicative(a, sigma)? && sigma.is_invertible())
}

/// `[x,y]' = θ[x,y]`.
pub fn outside_twist(a: &AnticommAlgebra, theta: &Matrix) -> Result<AnticommAlgebra> {
    a.check_square(theta)?;
    Ok(a.map_brackets(|v| theta.mul_vec(v).expect("square")))
}

/// `[x,y]' = [θx, θy]`.
pub fn inside_twist(a: &AnticommAlgebra, theta: &Matrix) -> Result<AnticommAlgebra> {
    a.check_square(theta)?;
    let images = theta.columns();
    let mut out = AnticommAlgebra::new(a.field(), a.dim());
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            out.set_bracket(i, j, a.bracket_unchecked(&images[i], &images[j]))?;
        }
    }
    Ok(out)
}

/// `(A, θ∘[·,·], θ∘σ)` for θ multiplicative on `(A, [·,·])`.
pub fn yau_twist(h: &HomLie, theta: &Matrix) -> Result<HomLie> {
    if !is_multiplicative(&h.algebra, theta)? {
        return Err(Error::precondition("theta is not multiplicative"));
    }
    let algebra = outside_twist(&h.algebra, theta)?;
    let sigma = theta.mul(&h.sigma)?;
    HomLie::new(algebra, sigma)
}

/// `(A, σ⁻¹∘[·,·])` for regular `(A, σ)`.
pub fn induced_lie(h: &HomLie) -> Result<AnticommAlgebra> {
    if !is_regular(&h.algebra, &h.sigma)? {
        return Err(Error::precondition("induced Lie algebra needs a regular structure"));
    }
    let inv = h.sigma.inverse()?.expect("regular implies invertible");
    outside_twist(&h.algebra, &inv)
}

/// Algebra morphism commuting with the twisting maps.
pub fn is_hom_morphism(phi: &Matrix, h1: &HomLie, h2: &HomLie) -> Result<bool> {
    if !h1.algebra.is_homomorphism(phi, &h2.algebra)? {
        return Ok(false);
    }
    Ok(phi.mul(&h1.sigma)? == h2.sigma.mul(phi)?)
}

/// The structure carried across an invertible `phi`: `[x,y]' = φ[φ⁻¹x, φ⁻¹y]`, `σ' = φσφ⁻¹`.
pub fn transport(h: &HomLie, phi: &Matrix) -> Result<HomLie> {
    h.algebra.check_square(phi)?;
    let inv = phi
        .inverse()?
        .ok_or_else(|| Error::precondition("transport needs an invertible map"))?;
    let twisted = inside_twist(&h.algebra, &inv)?;
    let algebra = outside_twist(&twisted, phi)?;
    let sigma = phi.mul(&h.sigma)?.mul(&inv)?;
    HomLie::new(algebra, sigma)
}

/// Invariant factors of `σ^n` restricted to a σ^n-stable component.
///
/// Equal outputs are necessary, not sufficient, for conjugacy in the automorphism group.
pub fn regular_invariant(h: &HomLie, component: &Subspace, n: u32) -> Result<Vec<Poly>> {
    if !is_regular(&h.algebra, &h.sigma)? {
        return Err(Error::precondition("regular structure required"));
    }
    let power = h.sigma.pow(n)?;
    let restricted = component
        .restrict(&power)?
        .ok_or_else(|| Error::precondition("component is not stable under sigma^n"))?;
    restricted.invariant_factors()
}

/// Whether HS(A) meets GL(A).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsVerdict {
    Yes,
    No,
    /// No invertible element among the random samples.
    ProbablyNo,
}

impl fmt::Display for PsVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PsVerdict::Yes => "yes",
            PsVerdict::No => "no",
            PsVerdict::ProbablyNo => "probably-no",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMembership {
    pub simple: bool,
    pub ss: bool,
    pub ss_star: bool,
    pub ps: PsVerdict,
    pub hs_dim: usize,
    pub notes: String,
}

/// Whether some element of HS(A) is invertible.
pub fn hs_meets_gl(hs: &HSSpace, seed: u64) -> PsVerdict {
    let d = hs.dim();
    if d == 0 {
        return PsVerdict::No;
    }
    let f = hs.algebra.field();
    if hs.basis().iter().any(Matrix::is_invertible) {
        return PsVerdict::Yes;
    }
    if let Some(p) = f.order() {
        if count_vectors(p, d) <= config::budget(config::HS_ENUMERATION_BUDGET) {
            let found = enumerate_vectors(f, d)
                .expect("finite field")
                .any(|c| hs.element(&c).expect("dimension d").is_invertible());
            return if found { PsVerdict::Yes } else { PsVerdict::No };
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..config::PS_SAMPLES {
        let coeffs: Vec<Scalar> = (0..d)
            .map(|_| match f.order() {
                Some(p) => f.residue(rng.gen_range(0..p)),
                None => f.from_i64(rng.gen_range(-50..=50)),
            })
            .collect();
        if hs.element(&coeffs).expect("dimension d").is_invertible() {
            return PsVerdict::Yes;
        }
    }
    PsVerdict::ProbablyNo
}

/// Places `A` in the classes SS, SS*, PS.
///
/// SS coincides with simplicity; SS* adds HS(A) ≠ 0; PS adds an invertible twisting map.
pub fn classify_membership(a: &AnticommAlgebra, seed: u64) -> ClassMembership {
    let report = a.is_simple();
    let mut notes = Vec::new();
    if report.verdict == SimplicityVerdict::Inconclusive {
        notes.push("simplicity inconclusive; treated as not simple".to_string());
    }
    let simple = report.is_simple();
    let hs = hs_space(a);
    let ss_star = simple && hs.dim() > 0;
    let ps = if ss_star { hs_meets_gl(&hs, seed) } else { PsVerdict::No };
    if ps == PsVerdict::ProbablyNo {
        notes.push(format!("no invertible element in {} samples", config::PS_SAMPLES));
    }
    ClassMembership {
        simple,
        ss: simple,
        ss_star,
        ps,
        hs_dim: hs.dim(),
        notes: notes.join("; "),
    }
}
