//! Named algebras and twisting maps.
//!
//! Basis vectors are 0-based: `e_1, ..., e_n` of the usual notation are indices `0..n`.

use rand::Rng;

use crate::algebra::AnticommAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::{vector, FieldSpec, Matrix, Poly, Scalar, Subspace};
use crate::homlie::{is_regular, is_twisting_map};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZooEntry {
    pub name: String,
    pub params: Vec<i64>,
    pub algebra: AnticommAlgebra,
    pub sigma: Option<Matrix>,
    /// Claims the entry is expected to satisfy, e.g. `"simple"`, `"hom-simple"`, `"nilpotent"`.
    pub expected: Vec<&'static str>,
    /// A distinguished ideal, when the entry has one (e.g. the unique ideal of `aff`).
    pub ideal: Option<Subspace>,
}

impl ZooEntry {
    fn new(name: &str, params: Vec<i64>, algebra: AnticommAlgebra, sigma: Option<Matrix>, expected: &[&'static str]) -> Result<Self> {
        if let Some(s) = &sigma {
            if !is_twisting_map(&algebra, s)? {
                return Err(Error::precondition(format!("{name}: sigma is not a twisting map")));
            }
        }
        let mut expected = expected.to_vec();
        expected.sort_unstable();
        Ok(ZooEntry {
            name: name.to_string(),
            params,
            algebra,
            sigma,
            expected,
            ideal: None,
        })
    }

    pub fn expects(&self, tag: &str) -> bool {
        self.expected.contains(&tag)
    }
}

/// Matrix with `m[row][col] = 1` for each `(row, col)` pair, i.e. `e_col -> e_row`.
fn basis_map(field: FieldSpec, n: usize, images: &[(usize, usize)]) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for &(col, row) in images {
        m.set(row, col, field.one());
    }
    m
}

fn brackets(field: FieldSpec, n: usize, table: &[(usize, usize, usize)]) -> Result<AnticommAlgebra> {
    let mut a = AnticommAlgebra::new(field, n);
    for &(i, j, k) in table {
        a.set_bracket(i, j, vector::unit(field, n, k))?;
    }
    Ok(a)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::precondition(msg))
    }
}

pub fn abelian(n: usize, field: FieldSpec) -> Result<ZooEntry> {
    ZooEntry::new("abelian", vec![n as i64], AnticommAlgebra::new(field, n), None, &["abelian", "lie", "nilpotent", "not-simple"])
}

/// Basis `x, y` with `[x, y] = y`.
pub fn aff(field: FieldSpec) -> Result<ZooEntry> {
    let a = brackets(field, 2, &[(0, 1, 1)])?;
    let mut e = ZooEntry::new("aff", vec![], a, None, &["lie", "not-simple", "solvable"])?;
    e.ideal = Some(Subspace::span(field, 2, &[vector::unit(field, 2, 1)])?);
    Ok(e)
}

/// Cross-product constants `[e1,e2]=e3`, `[e2,e3]=e1`, `[e3,e1]=e2`.
pub fn so3(field: FieldSpec) -> Result<ZooEntry> {
    let a = brackets(field, 3, &[(0, 1, 2), (1, 2, 0), (2, 0, 1)])?;
    let id = Matrix::identity(field, 3);
    ZooEntry::new("so3", vec![], a, Some(id), &["hom-simple", "lie", "simple"])
}

/// Basis `e, h, f` with `[e,h] = -2e`, `[e,f] = h`, `[h,f] = -2f`.
pub fn sl2(field: FieldSpec) -> Result<ZooEntry> {
    if field.characteristic() == 2 {
        return Err(field.unsupported("sl2 needs characteristic other than 2"));
    }
    let a = AnticommAlgebra::from_i64(field, 3, &[(0, 1, &[-2, 0, 0]), (0, 2, &[0, 1, 0]), (1, 2, &[0, 0, -2])])?;
    ZooEntry::new("sl2", vec![], a, Some(Matrix::identity(field, 3)), &["hom-simple", "lie", "simple"])
}

/// Heisenberg algebra of dimension `2n+1` with the down-shift `σ(e_j) = e_{j-1}`, `σ(e_1) = 0`.
pub fn heisenberg(n: usize, field: FieldSpec) -> Result<ZooEntry> {
    require(n >= 1, "heisenberg needs n >= 1")?;
    let dim = 2 * n + 1;
    let table: Vec<_> = (0..n).map(|i| (2 * i, 2 * i + 1, 2 * n)).collect();
    let a = brackets(field, dim, &table)?;
    let shift: Vec<_> = (1..dim).map(|j| (j, j - 1)).collect();
    let sigma = basis_map(field, dim, &shift);
    let mut e = ZooEntry::new("heisenberg", vec![n as i64], a, Some(sigma), &["hom-simple", "lie", "nilpotent", "not-simple", "solvable"])?;
    e.ideal = Some(Subspace::span(field, dim, &[vector::unit(field, dim, 2 * n)])?);
    Ok(e)
}

/// `S_n`: `[e_i, e_{i+1}] = e_{i+2}` for `i <= n-2`, `[e_{n-1}, e_n] = e_1`, `[e_n, e_1] = e_2`.
pub fn s_family(n: usize, field: FieldSpec) -> Result<ZooEntry> {
    require(n >= 3, "S_n needs n >= 3")?;
    ZooEntry::new("s", vec![n as i64], s_algebra(n, field)?, None, &["simple"])
}

fn s_algebra(n: usize, field: FieldSpec) -> Result<AnticommAlgebra> {
    let mut table: Vec<_> = (0..n - 2).map(|i| (i, i + 1, i + 2)).collect();
    table.push((n - 2, n - 1, 0));
    table.push((n - 1, 0, 1));
    brackets(field, n, &table)
}

/// `A_{n+1} = F d ⋉ S_n` with `[d, e_1] = e_2` (d is the last basis vector) and `σ(e_n) = d`.
pub fn a_ext(n: usize, field: FieldSpec) -> Result<ZooEntry> {
    require(n >= 3, "A_{n+1} needs n >= 3")?;
    let s = s_algebra(n, field)?;
    let d = basis_map(field, n, &[(0, 1)]);
    let a = s.extend_by_element(&d)?;
    let sigma = basis_map(field, n + 1, &[(n - 1, n)]);
    let mut e = ZooEntry::new("a-ext", vec![n as i64], a, Some(sigma), &["hom-simple"])?;
    let span: Vec<_> = (0..n).map(|i| vector::unit(field, n + 1, i)).collect();
    e.ideal = Some(Subspace::span(field, n + 1, &span)?);
    Ok(e)
}

/// `R_n` of dimension `2n` with `σ(e_{2i-1}) = e_{2i+2}`, `σ(e_{2n-1}) = e_2`, `σ(e_{2i}) = 0`.
pub fn r_family(n: usize, field: FieldSpec) -> Result<ZooEntry> {
    require(n >= 2, "R_n needs n >= 2")?;
    let dim = 2 * n;
    let mut table: Vec<_> = (0..n - 1).map(|i| (2 * i, 2 * i + 1, 2 * i + 2)).collect();
    table.push((dim - 2, dim - 1, 0));
    let a = brackets(field, dim, &table)?;
    let mut images: Vec<_> = (0..n - 1).map(|i| (2 * i, 2 * i + 3)).collect();
    images.push((dim - 2, 1));
    let sigma = basis_map(field, dim, &images);
    ZooEntry::new("r", vec![n as i64], a, Some(sigma), &["hom-simple", "solvable"])
}

/// `aff ⊕ a_n` on `x, y, e_1..e_n` with `σ: y -> x -> e_1 -> ... -> e_n -> y`.
pub fn aff_plus_abelian(n: usize, field: FieldSpec) -> Result<ZooEntry> {
    require(n >= 1, "aff + a_n needs n >= 1")?;
    let dim = n + 2;
    let a = brackets(field, dim, &[(0, 1, 1)])?;
    let mut images = vec![(1, 0), (0, 2)];
    images.extend((2..dim - 1).map(|c| (c, c + 1)));
    images.push((dim - 1, 1));
    let sigma = basis_map(field, dim, &images);
    ZooEntry::new("aff-plus-abelian", vec![n as i64], a, Some(sigma), &["hom-simple", "lie", "not-simple", "solvable"])
}

/// `n` copies of `s` with bracket `σ∘(⊕[·,·]_i)`, where σ maps copy `i` to copy `i+1 mod n` by `autos[i]`.
pub fn regular_construction(s: &AnticommAlgebra, n: usize, autos: &[Matrix]) -> Result<ZooEntry> {
    require(n >= 1, "regular construction needs n >= 1")?;
    require(autos.len() == n, "one automorphism per component")?;
    require(s.is_lie(), "component algebra must be Lie")?;
    require(s.is_simple().is_simple(), "component algebra must be simple")?;
    for g in autos {
        require(g.is_invertible() && s.is_homomorphism(g, s)?, "component maps must be automorphisms")?;
    }
    let (field, m) = (s.field(), s.dim());
    let dim = n * m;
    let mut a = AnticommAlgebra::new(field, dim);
    let mut sigma = Matrix::zeros(field, dim, dim);
    for (i, g) in autos.iter().enumerate() {
        let next = (i + 1) % n;
        for (&(p, q), v) in s.constants() {
            let img = g.mul_vec(v)?;
            let mut w = vector::zero(field, dim);
            w[next * m..(next + 1) * m].clone_from_slice(&img);
            a.set_bracket(i * m + p, i * m + q, w)?;
        }
        for r in 0..m {
            for c in 0..m {
                sigma.set(next * m + r, i * m + c, g.get(r, c).clone());
            }
        }
    }
    if !is_regular(&a, &sigma)? {
        return Err(Error::precondition("construction is not regular"));
    }
    ZooEntry::new("regular", vec![n as i64], a, Some(sigma), &["hom-simple", "multiplicative", "regular"])
}

/// The `i`-th copy inside a regular construction with components of dimension `m`.
pub fn component(field: FieldSpec, n: usize, m: usize, i: usize) -> Result<Subspace> {
    let span: Vec<_> = (0..m).map(|k| vector::unit(field, n * m, i * m + k)).collect();
    Subspace::span(field, n * m, &span)
}

/// A product of two reflections `I - 2vv^T/(v^T v)`: an automorphism of [`so3`].
pub fn random_so3_automorphism<R: Rng>(field: FieldSpec, rng: &mut R) -> Matrix {
    let mut reflection = || loop {
        let v: Vec<Scalar> = (0..3)
            .map(|_| match field.order() {
                Some(p) => field.residue(rng.gen_range(0..p)),
                None => field.from_i64(rng.gen_range(-3..=3)),
            })
            .collect();
        let norm = vector::dot(&v, &v, field);
        let Some(inv) = norm.inv() else { continue };
        let c = &field.from_i64(-2) * &inv;
        let mut m = Matrix::identity(field, 3);
        for r in 0..3 {
            for k in 0..3 {
                let x = m.get(r, k) + &(&c * &(&v[r] * &v[k]));
                m.set(r, k, x);
            }
        }
        return m;
    };
    let a = reflection();
    let b = reflection();
    a.mul(&b).expect("3x3")
}

/// `a_2` with the companion matrix `[[0, a0], [1, a1]]` of a rootless `λ² - a1 λ - a0`.
pub fn abelian2_with_irreducible_sigma(q: u64) -> Result<ZooEntry> {
    let field = FieldSpec::prime(q)?;
    for a1 in 0..q {
        for a0 in 0..q {
            let (a0s, a1s) = (field.residue(a0), field.residue(a1));
            let poly = Poly::from_coeffs(field, vec![-&a0s, -&a1s, field.one()]);
            if poly.roots_in_prime_field().expect("finite").is_empty() {
                let sigma = Matrix::from_rows(field, vec![vec![field.zero(), a0s], vec![field.one(), a1s]])?;
                return ZooEntry::new(
                    "abelian2-irreducible",
                    vec![q as i64],
                    AnticommAlgebra::new(field, 2),
                    Some(sigma),
                    &["abelian", "no-invariant-line"],
                );
            }
        }
    }
    unreachable!("every prime field has an irreducible quadratic")
}

/// `[e1,e2]=e3, [e1,e3]=e4, [e1,e4]=e1, [e2,e4]=e2`: simple, with only singular twisting maps.
pub fn a1(field: FieldSpec) -> Result<ZooEntry> {
    let a = brackets(field, 4, &[(0, 1, 2), (0, 2, 3), (0, 3, 0), (1, 3, 1)])?;
    ZooEntry::new("a1", vec![], a, None, &["simple"])
}

/// [`a1`] plus `[e2,e3]=e1`: simple with no nonzero twisting map.
pub fn a2(field: FieldSpec) -> Result<ZooEntry> {
    let a = brackets(field, 4, &[(0, 1, 2), (0, 2, 3), (0, 3, 0), (1, 3, 1), (1, 2, 0)])?;
    ZooEntry::new("a2", vec![], a, None, &["simple"])
}

/// `F d ⋉ so3` with `ad d = E_11`, i.e. `[d, e_1] = e_1` and `[d, e_2] = [d, e_3] = 0`.
pub fn so3_extension(field: FieldSpec) -> Result<ZooEntry> {
    let d = basis_map(field, 3, &[(0, 0)]);
    so3_extension_by(field, &d, "so3-extension")
}

/// `F d ⋉ so3` with `[d, x] = x` for every `x` in so3.
pub fn so3_extension_identity(field: FieldSpec) -> Result<ZooEntry> {
    so3_extension_by(field, &Matrix::identity(field, 3), "so3-extension-identity")
}

fn so3_extension_by(field: FieldSpec, d: &Matrix, name: &str) -> Result<ZooEntry> {
    let a = so3(field)?.algebra.extend_by_element(d)?;
    let mut e = ZooEntry::new(name, vec![], a, None, &["not-simple"])?;
    let span: Vec<_> = (0..3).map(|i| vector::unit(field, 4, i)).collect();
    e.ideal = Some(Subspace::span(field, 4, &span)?);
    Ok(e)
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "a1",
    "a2",
    "a-ext",
    "abelian",
    "abelian2-irreducible",
    "aff",
    "aff-plus-abelian",
    "heisenberg",
    "r",
    "regular-so3",
    "s",
    "sl2",
    "so3",
    "so3-extension",
    "so3-extension-identity",
];

/// Looks up a constructor by name. `regular-so3` takes `n` and an optional seed for its automorphisms.
pub fn by_name(name: &str, params: &[i64], field: FieldSpec) -> Result<ZooEntry> {
    let arg = |k: usize| -> Result<usize> {
        let v = *params
            .get(k)
            .ok_or_else(|| Error::precondition(format!("{name} needs parameter {}", k + 1)))?;
        usize::try_from(v).map_err(|_| Error::precondition(format!("{name}: parameter {} must be nonnegative", k + 1)))
    };
    match name {
        "a1" => a1(field),
        "a2" => a2(field),
        "a-ext" => a_ext(arg(0)?, field),
        "abelian" => abelian(arg(0)?, field),
        "abelian2-irreducible" => abelian2_with_irreducible_sigma(field.order().ok_or_else(|| field.unsupported("needs GF(q)"))?),
        "aff" => aff(field),
        "aff-plus-abelian" => aff_plus_abelian(arg(0)?, field),
        "heisenberg" => heisenberg(arg(0)?, field),
        "r" => r_family(arg(0)?, field),
        "regular-so3" => {
            use rand::SeedableRng;
            let n = arg(0)?;
            let seed = params.get(1).copied().unwrap_or(0) as u64;
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let autos: Vec<Matrix> = (0..n).map(|_| random_so3_automorphism(field, &mut rng)).collect();
            let mut e = regular_construction(&so3(field)?.algebra, n, &autos)?;
            e.name = "regular-so3".into();
            e.params = params.to_vec();
            Ok(e)
        }
        "s" => s_family(arg(0)?, field),
        "sl2" => sl2(field),
        "so3" => so3(field),
        "so3-extension" => so3_extension(field),
        "so3-extension-identity" => so3_extension_identity(field),
        _ => Err(Error::precondition(format!("unknown zoo entry {name:?}; known: {}", NAMES.join(", ")))),
    }
}
