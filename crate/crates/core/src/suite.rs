//! The reference checks: ten criteria, each computed from scratch and compared to known values.

use std::collections::BTreeMap;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::algebra::AnticommAlgebra;
use crate::error::Result;
use crate::exactmath::enumerate::enumerate_vectors;
use crate::exactmath::{vector, FieldSpec, Matrix, Scalar};
use crate::homlie::{
    classify_membership, hom_jacobian, hs_space, induced_lie, is_hom_ideal, is_hom_morphism, is_hom_simple,
    is_multiplicative, is_regular, is_twisting_map, outside_twist, regular_invariant, transport, yau_twist, HomLie,
    PsVerdict,
};
use crate::lowdim::{self, random_invertible};
use crate::rootsys::{self, LaurentPoly, RootType};
use crate::zoo::{self, ZooEntry};

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub details: BTreeMap<String, Value>,
    pub discrepancies: Vec<String>,
}

impl CriterionOutcome {
    fn new(id: u8, name: &'static str) -> Self {
        CriterionOutcome {
            id,
            name,
            passed: true,
            details: BTreeMap::new(),
            discrepancies: Vec::new(),
        }
    }

    fn detail(&mut self, key: impl Into<String>, value: Value) {
        self.details.insert(key.into(), value);
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.passed = false;
            self.discrepancies.push(what());
        }
    }

    /// Turns an error into a recorded failure instead of aborting the whole run.
    fn guard(mut self, body: impl FnOnce(&mut Self) -> Result<()>) -> Self {
        if let Err(e) = body(&mut self) {
            self.passed = false;
            self.discrepancies.push(format!("error: {e}"));
        }
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "details": self.details,
            "discrepancies": self.discrepancies,
        })
    }
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2} {}", self.id, self.name)?;
        if !self.discrepancies.is_empty() {
            write!(f, " ({})", self.discrepancies.join("; "))?;
        }
        Ok(())
    }
}

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("prime")
}

const Q: FieldSpec = FieldSpec::Rationals;

pub fn hs_dimensions() -> CriterionOutcome {
    CriterionOutcome::new(1, "HS dimensions").guard(|c| {
        for field in [Q, gf(5)] {
            let cases = [
                ("A1", zoo::a1(field)?.algebra, 4),
                ("A2", zoo::a2(field)?.algebra, 0),
                ("aff", zoo::aff(field)?.algebra, 4),
                ("a2", zoo::abelian(2, field)?.algebra, 4),
                ("h3", zoo::heisenberg(1, field)?.algebra, 9),
                ("h5", zoo::heisenberg(2, field)?.algebra, 25),
            ];
            for (name, a, expected) in cases {
                let d = hs_space(&a).dim();
                c.detail(format!("{name}/{field}"), json!(d));
                c.expect(d == expected, || format!("dim HS({name}) over {field} = {d}, expected {expected}"));
            }
        }
        let f = gf(3);
        let mut count = 0;
        for v in enumerate_vectors(f, 2)? {
            let a = AnticommAlgebra::new(f, 2).with_bracket(0, 1, v.clone())?;
            let d = hs_space(&a).dim();
            c.expect(d == 4, || format!("dim HS of [e0,e1]={} over GF(3) is {d}", vector::format(&v)));
            count += 1;
        }
        c.detail("two_dimensional_checked", json!(count));
        Ok(())
    })
}

pub fn singular_hs_separation(seed: u64) -> CriterionOutcome {
    CriterionOutcome::new(2, "singular HS class separation").guard(|c| {
        let f = gf(5);
        let a1 = zoo::a1(f)?.algebra;
        let hs = hs_space(&a1);
        c.expect(hs.dim() == 4, || format!("dim HS(A1) = {}", hs.dim()));
        let mut elements = 0usize;
        let mut invertible = 0usize;
        for coeffs in enumerate_vectors(f, hs.dim())? {
            elements += 1;
            if !hs.element(&coeffs)?.det()?.is_zero() {
                invertible += 1;
            }
        }
        c.detail("elements", json!(elements));
        c.detail("nonzero_determinants", json!(invertible));
        c.expect(elements == 625 && invertible == 0, || format!("{invertible} of {elements} elements invertible"));
        let m1 = classify_membership(&a1, seed);
        c.detail("A1", json!({"ss": m1.ss, "ss_star": m1.ss_star, "ps": m1.ps.to_string()}));
        c.expect(m1.ss_star && m1.ps == PsVerdict::No, || "A1 should be in SS* but not PS".into());
        let m2 = classify_membership(&zoo::a2(f)?.algebra, seed);
        c.detail("A2", json!({"ss": m2.ss, "ss_star": m2.ss_star, "ps": m2.ps.to_string()}));
        c.expect(m2.ss && !m2.ss_star, || "A2 should be in SS but not SS*".into());
        Ok(())
    })
}

/// The one disagreement between enumeration and the closed forms that is known in advance.
pub const EXPECTED_TRACE_DISCREPANCY: (RootType, usize, usize) = (RootType::E8, 8, 5);

/// Enumerated minus printed trace at the known E8 discrepancy.
pub fn expected_discrepancy() -> LaurentPoly {
    LaurentPoly::monomial(20, 3).sub(&LaurentPoly::monomial(20, 4))
}

pub fn trace_formulas() -> CriterionOutcome {
    CriterionOutcome::new(3, "root-system trace formulas").guard(|c| {
        let mut checked = 0usize;
        let mut mismatches = Vec::new();
        for (t, l) in rootsys::all_types(8) {
            for check in rootsys::verify_traces(t, l)? {
                checked += 1;
                if !check.matches() {
                    mismatches.push((t, l, check.i, check.difference()));
                }
            }
        }
        c.detail("traces_checked", json!(checked));
        let (et, el, ei) = EXPECTED_TRACE_DISCREPANCY;
        let reported: Vec<Value> = mismatches
            .iter()
            .map(|(t, l, i, d)| json!({"type": t.to_string(), "rank": l, "i": i, "enumerated_minus_closed": d.to_string()}))
            .collect();
        c.detail("mismatches", Value::Array(reported));
        for (t, l, i, d) in &mismatches {
            let known = (*t, *l, *i) == (et, el, ei) && *d == expected_discrepancy();
            // reported either way; only an unexpected mismatch fails
            c.discrepancies.push(format!("{t} rank {l} i={i}: enumerated - closed form = {d}"));
            if !known {
                c.passed = false;
            }
        }
        Ok(())
    })
}

pub fn zoo_hom_simplicity() -> CriterionOutcome {
    CriterionOutcome::new(4, "hom-simplicity of the zoo").guard(|c| {
        type Ctor = fn(FieldSpec) -> Result<ZooEntry>;
        let hom_simple: [(&str, Ctor); 8] = [
            ("h3", |f| zoo::heisenberg(1, f)),
            ("h5", |f| zoo::heisenberg(2, f)),
            ("R2", |f| zoo::r_family(2, f)),
            ("R3", |f| zoo::r_family(3, f)),
            ("A4", |f| zoo::a_ext(3, f)),
            ("A5", |f| zoo::a_ext(4, f)),
            ("aff+a1", |f| zoo::aff_plus_abelian(1, f)),
            ("aff+a2", |f| zoo::aff_plus_abelian(2, f)),
        ];
        let simple: [(&str, Ctor, bool); 6] = [
            ("S3", |f| zoo::s_family(3, f), true),
            ("S4", |f| zoo::s_family(4, f), true),
            ("S5", |f| zoo::s_family(5, f), true),
            ("so3", zoo::so3, true),
            ("aff", zoo::aff, false),
            ("h3", |f| zoo::heisenberg(1, f), false),
        ];
        for p in [3, 2, 5] {
            let f = gf(p);
            for (name, ctor) in hom_simple {
                let e = ctor(f)?;
                let sigma = e.sigma.as_ref().expect("zoo entry carries sigma");
                let r = is_hom_simple(&e.algebra, sigma)?;
                c.detail(format!("{name}/{f}"), json!(format!("{} via {}", r.verdict, r.method)));
                c.expect(r.is_simple(), || format!("({name}, σ) over {f}: {}", r.verdict));
            }
            for (name, ctor, expected) in simple {
                let e = ctor(f)?;
                let r = e.algebra.is_simple();
                c.detail(format!("{name}/{f}/simple"), json!(r.verdict.to_string()));
                c.expect(r.is_simple() == expected && !r.is_inconclusive(), || {
                    format!("{name} over {f}: {}, expected simple={expected}", r.verdict)
                });
            }
        }
        Ok(())
    })
}

pub fn unique_ideal_certificate() -> CriterionOutcome {
    CriterionOutcome::new(5, "unique proper ideal of F d ⋉ so3").guard(|c| {
        let e = zoo::so3_extension(gf(5))?;
        let ideal = e.ideal.as_ref().expect("so3 inside the extension");
        let ok = e.algebra.unique_proper_ideal_check(ideal)?;
        c.detail("unique", json!(ok));
        c.expect(ok, || "so3 is not the unique proper ideal".into());
        Ok(())
    })
}

fn all_2x2(f: FieldSpec) -> Result<Vec<Matrix>> {
    enumerate_vectors(f, 4)?
        .map(|v| Matrix::new(f, 2, 2, v))
        .collect()
}

pub fn dimension_two() -> CriterionOutcome {
    CriterionOutcome::new(6, "dimension 2 structures").guard(|c| {
        for q in [2u64, 3] {
            let f = gf(q);
            let aff = lowdim::aff_algebra(f);
            let mut bad = 0;
            for sigma in all_2x2(f)? {
                let expected = !sigma.get(0, 1).is_zero();
                let twisting = is_twisting_map(&aff, &sigma)?;
                let simple = is_hom_simple(&aff, &sigma)?.is_simple();
                if !twisting || simple != expected {
                    bad += 1;
                }
            }
            c.expect(bad == 0, || format!("GF({q}): {bad} maps violate σ12≠0 ⇔ hom-simple"));
            let no_mult = lowdim::no_multiplicative_simple_dim2(q)?;
            c.expect(no_mult, || format!("GF({q}): a multiplicative simple structure exists"));
            let classes = lowdim::aff_classes(q)?;
            c.detail(
                format!("classes/GF({q})"),
                Value::Array(
                    classes
                        .iter()
                        .map(|k| json!({"trace": k.trace.to_string(), "det": k.det.to_string(), "size": k.size}))
                        .collect(),
                ),
            );
            c.expect(classes.len() as u64 >= q, || format!("GF({q}): only {} classes", classes.len()));
            let structures = lowdim::aff_simple_structures(q)?;
            let mut disagreements = 0;
            for s1 in &structures {
                for s2 in &structures {
                    let by_invariants = lowdim::aff_iso_by_invariants(s1, s2)?;
                    let by_search = lowdim::aff_iso_bruteforce(s1, s2, q)?.is_some();
                    if by_invariants != by_search {
                        disagreements += 1;
                    }
                }
            }
            c.detail(format!("pairs/GF({q})"), json!(structures.len() * structures.len()));
            c.expect(disagreements == 0, || format!("GF({q}): {disagreements} isomorphism verdicts disagree"));
            let companion = zoo::abelian2_with_irreducible_sigma(q)?;
            let sigma = companion.sigma.as_ref().expect("companion map");
            let trivial = lowdim::a2_only_trivial_hom_ideals(sigma)? && lowdim::a2_only_trivial_hom_ideals_by_closure(sigma)?;
            c.expect(trivial, || format!("GF({q}): companion σ on a2 has a proper Hom-ideal"));
        }
        for q in [2u64, 3, 5, 7, 11] {
            let n = lowdim::count_irreducible_quadratics(q)?;
            c.detail(format!("irreducible_quadratics/GF({q})"), json!(n));
            c.expect(n as u64 == q * (q - 1) / 2, || format!("GF({q}): {n} irreducible quadratics"));
        }
        Ok(())
    })
}

pub fn dimension_three(seed: u64) -> CriterionOutcome {
    CriterionOutcome::new(7, "dimension 3 twists of so3").guard(|c| {
        for (field, samples) in [(gf(5), 50), (Q, 10)] {
            let results = lowdim::dim3_check(field, samples, seed)?;
            let failed = results.iter().filter(|s| !s.ok()).count();
            c.detail(format!("samples/{field}"), json!(results.len()));
            c.expect(failed == 0, || format!("{field}: {failed} of {samples} samples failed"));
        }
        Ok(())
    })
}

fn random_matrix(f: FieldSpec, n: usize, rng: &mut StdRng) -> Matrix {
    let entries: Vec<Scalar> = (0..n * n)
        .map(|_| match f.order() {
            Some(p) => f.residue(rng.gen_range(0..p)),
            None => f.from_i64(rng.gen_range(-3..=3)),
        })
        .collect();
    Matrix::new(f, n, n, entries).expect("n^2 entries")
}

fn zoo_hom_lie(field: FieldSpec) -> Vec<ZooEntry> {
    let mut out = Vec::new();
    let attempts: Vec<Result<ZooEntry>> = vec![
        zoo::so3(field),
        zoo::sl2(field),
        zoo::heisenberg(1, field),
        zoo::heisenberg(2, field),
        zoo::r_family(2, field),
        zoo::r_family(3, field),
        zoo::a_ext(3, field),
        zoo::a_ext(4, field),
        zoo::aff_plus_abelian(1, field),
        zoo::aff_plus_abelian(2, field),
        zoo::by_name("regular-so3", &[1, 1], field),
        zoo::by_name("regular-so3", &[2, 2], field),
    ];
    for e in attempts.into_iter().flatten() {
        out.push(e);
    }
    if let Some(q) = field.order() {
        out.extend(zoo::abelian2_with_irreducible_sigma(q));
    }
    out
}

/// Multiplicative maps available for twisting `h`: scalars, powers of σ, so3 automorphisms, and
/// random maps, filtered by multiplicativity.
fn theta_pool(h: &HomLie, rng: &mut StdRng) -> Result<Vec<Matrix>> {
    let (f, n, a) = (h.field(), h.dim(), h.algebra());
    let mut candidates = vec![Matrix::zeros(f, n, n), Matrix::identity(f, n)];
    for k in [-1, 2, 3] {
        candidates.push(Matrix::scalar(f, n, &f.from_i64(k)));
    }
    for k in 1..=3 {
        candidates.push(h.sigma().pow(k)?);
    }
    if n % 3 == 0 {
        for _ in 0..4 {
            let g = zoo::random_so3_automorphism(f, rng);
            candidates.push(Matrix::block_diagonal(f, &vec![g; n / 3]));
        }
    }
    for _ in 0..4 {
        candidates.push(random_matrix(f, n, rng));
    }
    let mut pool = Vec::new();
    for m in candidates {
        if is_multiplicative(a, &m)? && !pool.contains(&m) {
            pool.push(m);
        }
    }
    Ok(pool)
}

fn basis_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

/// `J_{θ[·,·], θσ} = θ² J_{[·,·], σ}` on every basis triple.
fn yau_identity_holds(a: &AnticommAlgebra, sigma: &Matrix, theta: &Matrix) -> Result<bool> {
    let f = a.field();
    let n = a.dim();
    let twisted = outside_twist(a, theta)?;
    let tsigma = theta.mul(sigma)?;
    let theta2 = theta.mul(theta)?;
    for (i, j, k) in basis_triples(n) {
        let (x, y, z) = (vector::unit(f, n, i), vector::unit(f, n, j), vector::unit(f, n, k));
        let lhs = hom_jacobian(&twisted, &tsigma, &x, &y, &z)?;
        let rhs = theta2.mul_vec(&hom_jacobian(a, sigma, &x, &y, &z)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn yau_twisting(seed: u64) -> CriterionOutcome {
    CriterionOutcome::new(8, "twisting principle").guard(|c| {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut draws = 0usize;
        for field in [gf(3), gf(5), Q] {
            for e in zoo_hom_lie(field) {
                let h = HomLie::new(e.algebra.clone(), e.sigma.clone().expect("zoo HomLie"))?;
                let pool = theta_pool(&h, &mut rng)?;
                let label = format!("{}{:?}/{field}", e.name, e.params);
                c.detail(format!("pool/{label}"), json!(pool.len()));
                let mult = is_multiplicative(h.algebra(), h.sigma())?;
                let regular = is_regular(h.algebra(), h.sigma())?;
                for _ in 0..100 {
                    let theta = &pool[rng.gen_range(0..pool.len())];
                    draws += 1;
                    let twisted = yau_twist(&h, theta);
                    let Ok(twisted) = twisted else {
                        c.expect(false, || format!("{label}: twist is not a Hom-Lie algebra"));
                        continue;
                    };
                    c.expect(is_twisting_map(twisted.algebra(), twisted.sigma())?, || format!("{label}: twisted σ fails"));
                    c.expect(yau_identity_holds(h.algebra(), h.sigma(), theta)?, || format!("{label}: J identity fails"));
                    let other = random_matrix(field, h.dim(), &mut rng);
                    c.expect(yau_identity_holds(h.algebra(), &other, theta)?, || {
                        format!("{label}: J identity fails for a non-twisting σ")
                    });
                    let commutes = theta.mul(h.sigma())? == h.sigma().mul(theta)?;
                    if theta.is_invertible() && commutes {
                        let (a2, s2) = (twisted.algebra(), twisted.sigma());
                        if mult {
                            c.expect(is_multiplicative(a2, s2)?, || format!("{label}: multiplicativity lost"));
                        }
                        if regular {
                            c.expect(is_regular(a2, s2)?, || format!("{label}: regularity lost"));
                        }
                    }
                }
            }
        }
        c.detail("draws", json!(draws));
        c.discrepancies.dedup();
        Ok(())
    })
}

pub fn regular_structures(seed: u64) -> CriterionOutcome {
    CriterionOutcome::new(9, "regular structure theory").guard(|c| {
        let f = gf(5);
        let so3 = zoo::so3(f)?.algebra;
        let mut rng = StdRng::seed_from_u64(seed);
        for n in 1..=3usize {
            let autos: Vec<Matrix> = (0..n).map(|_| zoo::random_so3_automorphism(f, &mut rng)).collect();
            let e = zoo::regular_construction(&so3, n, &autos)?;
            let h = HomLie::new(e.algebra.clone(), e.sigma.clone().expect("regular sigma"))?;
            let (a, s) = (h.algebra(), h.sigma());
            c.expect(is_regular(a, s)? && is_multiplicative(a, s)?, || format!("n={n}: not regular"));
            let r = is_hom_simple(a, s)?;
            c.detail(format!("n={n}/hom_simple"), json!(format!("{} via {}", r.verdict, r.method)));
            c.expect(r.is_simple(), || format!("n={n}: {}", r.verdict));
            let induced = induced_lie(&h)?;
            let mut sum = so3.clone();
            for _ in 1..n {
                sum = sum.direct_sum(&so3)?;
            }
            c.expect(induced.is_lie() && induced == sum, || format!("n={n}: induced algebra is not so3^{n}"));
            let invariants: Vec<String> = (0..n)
                .map(|i| {
                    let comp = zoo::component(f, n, 3, i)?;
                    let inv = regular_invariant(&h, &comp, n as u32)?;
                    Ok(inv.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
                })
                .collect::<Result<_>>()?;
            c.detail(format!("n={n}/invariant"), json!(invariants[0]));
            c.expect(invariants.iter().all(|x| *x == invariants[0]), || format!("n={n}: invariant depends on component"));
            let phi = random_invertible(f, 3 * n, &mut rng);
            let moved = transport(&h, &phi)?;
            c.expect(is_hom_morphism(&phi, &h, &moved)?, || format!("n={n}: transport map is not a morphism"));
            let comp = zoo::component(f, n, 3, 0)?.image_under(&phi)?;
            let moved_inv: Vec<String> = regular_invariant(&moved, &comp, n as u32)?.iter().map(|p| p.to_string()).collect();
            c.expect(moved_inv.join(", ") == invariants[0], || format!("n={n}: invariant changes under conjugation"));
            // relabel copy i as copy i+1; the automorphisms rotate with it
            let mut rotated = autos.clone();
            rotated.rotate_right(1);
            let shifted = zoo::regular_construction(&so3, n, &rotated)?;
            let h2 = HomLie::new(shifted.algebra, shifted.sigma.expect("regular sigma"))?;
            let blocks: Vec<Vec<Scalar>> = (0..3 * n)
                .map(|col| vector::unit(f, 3 * n, (col + 3) % (3 * n)))
                .collect();
            let shift = Matrix::from_columns(f, 3 * n, &blocks)?;
            c.expect(is_hom_morphism(&shift, &h, &h2)?, || format!("n={n}: relabelling is not a morphism"));
        }
        let mut kernels = 0;
        let mut lemma = 0;
        let g3 = gf(3);
        let cases: Vec<(AnticommAlgebra, usize)> = vec![(lowdim::aff_algebra(g3), 2), (zoo::so3(g3)?.algebra, 3)];
        for (a, n) in cases {
            for v in enumerate_vectors(g3, n * n)? {
                let s = Matrix::new(g3, n, n, v)?;
                if !is_multiplicative(&a, &s)? || !is_twisting_map(&a, &s)? {
                    continue;
                }
                kernels += 1;
                c.expect(is_hom_ideal(&a, &s, &s.kernel())?, || format!("ker σ is not a Hom-ideal for σ = {s}"));
                if is_hom_simple(&a, &s)?.is_simple() {
                    lemma += 1;
                    c.expect(s.is_invertible() || s.is_zero(), || format!("hom-simple multiplicative σ = {s} is singular"));
                }
            }
        }
        let pair = so3.direct_sum(&so3)?;
        let projection = Matrix::block_diagonal(f, &[Matrix::identity(f, 3), Matrix::zeros(f, 3, 3)]);
        c.expect(is_hom_ideal(&pair, &projection, &projection.kernel())?, || "ker of a projection is not a Hom-ideal".into());
        c.detail("multiplicative_maps_checked", json!(kernels + 1));
        c.detail("hom_simple_multiplicative", json!(lemma));
        Ok(())
    })
}

pub fn simplicity_criterion() -> CriterionOutcome {
    CriterionOutcome::new(10, "simplicity criterion and ad ranks").guard(|c| {
        for p in [2, 3] {
            let f = gf(p);
            let cases = [
                ("so3", zoo::so3(f)?.algebra),
                ("aff", zoo::aff(f)?.algebra),
                ("h3", zoo::heisenberg(1, f)?.algebra),
                ("a3", zoo::abelian(3, f)?.algebra),
            ];
            for (name, a) in cases {
                let criterion = a.is_simple_via_criterion()?;
                let lines = a.is_simple();
                c.detail(format!("{name}/{f}"), json!(criterion));
                c.expect(!lines.is_inconclusive() && criterion == lines.is_simple(), || {
                    format!("{name} over {f}: criterion {criterion}, lines {}", lines.verdict)
                });
            }
        }
        for p in [3, 5] {
            let f = gf(p);
            for (name, a) in [("so3", zoo::so3(f)?.algebra), ("sl2", zoo::sl2(f)?.algebra)] {
                let mut min = usize::MAX;
                for x in enumerate_vectors(f, 3)?.filter(|x| !vector::is_zero(x)) {
                    min = min.min(a.rank_ad(&x)?);
                }
                c.detail(format!("min_rank_ad/{name}/{f}"), json!(min));
                c.expect(min >= 2, || format!("{name} over {f}: rank ad x = {min}"));
            }
        }
        Ok(())
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    vec![
        hs_dimensions(),
        singular_hs_separation(seed),
        trace_formulas(),
        zoo_hom_simplicity(),
        unique_ideal_certificate(),
        dimension_two(),
        dimension_three(seed),
        yau_twisting(seed),
        regular_structures(seed),
        simplicity_criterion(),
    ]
}
