use homlie::exactmath::{vector, FieldSpec, Matrix};
use homlie::homlie::{hs_space, is_hom_simple, is_multiplicative, is_regular, is_twisting_map};
use homlie::lowdim::has_no_invariant_line;
use homlie::zoo::{self, ZooEntry};
use homlie::Error;

const Q: FieldSpec = FieldSpec::Rationals;

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

const CATALOGUE: &[(&str, &[i64])] = &[
    ("a1", &[]),
    ("a2", &[]),
    ("abelian", &[3]),
    ("aff", &[]),
    ("so3", &[]),
    ("sl2", &[]),
    ("heisenberg", &[1]),
    ("heisenberg", &[2]),
    ("s", &[3]),
    ("s", &[4]),
    ("s", &[5]),
    ("a-ext", &[3]),
    ("a-ext", &[4]),
    ("r", &[2]),
    ("r", &[3]),
    ("aff-plus-abelian", &[1]),
    ("aff-plus-abelian", &[2]),
    ("regular-so3", &[1]),
    ("regular-so3", &[2, 9]),
    ("abelian2-irreducible", &[]),
    ("so3-extension", &[]),
    ("so3-extension-identity", &[]),
];

/// Checks one tag; `None` when the check is inconclusive over this field.
fn tag_holds(e: &ZooEntry, tag: &str) -> Option<bool> {
    let a = &e.algebra;
    let sigma = e.sigma.as_ref();
    Some(match tag {
        "simple" | "not-simple" => {
            let r = a.is_simple();
            if r.is_inconclusive() {
                return None;
            }
            r.is_simple() == (tag == "simple")
        }
        "hom-simple" => {
            let r = is_hom_simple(a, sigma?).unwrap();
            if r.is_inconclusive() {
                return None;
            }
            r.is_simple()
        }
        "lie" => a.is_lie(),
        "abelian" => a.is_abelian(),
        "nilpotent" => a.is_nilpotent(),
        "solvable" => a.is_solvable(),
        "multiplicative" => is_multiplicative(a, sigma?).unwrap(),
        "regular" => is_regular(a, sigma?).unwrap(),
        "no-invariant-line" => has_no_invariant_line(sigma?).unwrap(),
        other => panic!("unknown tag {other}"),
    })
}

#[test]
fn tags_hold_over_small_prime_fields() {
    for p in [2, 3, 5] {
        let f = gf(p);
        for &(name, params) in CATALOGUE {
            let e = match zoo::by_name(name, params, f) {
                Ok(e) => e,
                Err(Error::UnsupportedField { .. }) => continue,
                Err(err) => panic!("{name} over {f}: {err}"),
            };
            if let Some(s) = &e.sigma {
                assert!(is_twisting_map(&e.algebra, s).unwrap(), "{name} over {f}");
            }
            for tag in &e.expected {
                assert_eq!(tag_holds(&e, tag), Some(true), "{name}{params:?} over {f}: {tag}");
            }
        }
    }
}

#[test]
fn tags_hold_over_the_rationals_where_decidable() {
    let mut decided = 0;
    for &(name, params) in CATALOGUE {
        let Ok(e) = zoo::by_name(name, params, Q) else { continue };
        for tag in &e.expected {
            if let Some(ok) = tag_holds(&e, tag) {
                assert!(ok, "{name}{params:?} over Q: {tag}");
                decided += 1;
            }
        }
    }
    assert!(decided > 30);
}

#[test]
fn constructor_examples() {
    let so3 = zoo::so3(Q).unwrap();
    assert_eq!(so3.algebra.basis_bracket(0, 1), vector::unit(Q, 3, 2));
    let aff = zoo::aff(gf(3)).unwrap();
    assert!(aff.algebra.is_solvable());
    assert!(aff.algebra.unique_proper_ideal_check(aff.ideal.as_ref().unwrap()).unwrap());
    assert!(zoo::abelian(2, gf(5)).unwrap().algebra.is_abelian());
    let s3 = zoo::s_family(3, Q).unwrap().algebra;
    assert_eq!(s3, so3.algebra);
}

#[test]
fn heisenberg_shift() {
    for n in 1..=3usize {
        let f = gf(3);
        let h = zoo::heisenberg(n, f).unwrap();
        let dim = 2 * n + 1;
        assert_eq!(h.algebra.center(), *h.ideal.as_ref().unwrap());
        let s = h.sigma.as_ref().unwrap();
        let top = vector::unit(f, dim, dim - 1);
        for i in 0..dim {
            assert_eq!(s.pow(i as u32).unwrap().mul_vec(&top).unwrap(), vector::unit(f, dim, dim - 1 - i));
        }
        if n <= 2 {
            assert_eq!(hs_space(&h.algebra).dim(), dim * dim);
        }
    }
}

#[test]
fn extension_and_r_family_maps() {
    let f = gf(5);
    let a5 = zoo::a_ext(4, f).unwrap();
    let s = a5.sigma.as_ref().unwrap();
    let d = vector::unit(f, 5, 4);
    assert_eq!(s.mul_vec(&vector::unit(f, 5, 3)).unwrap(), d);
    for i in [0, 1, 2, 4] {
        assert!(vector::is_zero(&s.mul_vec(&vector::unit(f, 5, i)).unwrap()));
    }
    for n in 2..=4 {
        let r = zoo::r_family(n, f).unwrap();
        assert!(r.sigma.as_ref().unwrap().pow(2).unwrap().is_zero());
        assert!(r.algebra.is_solvable());
    }
    for n in 1..=3 {
        let e = zoo::aff_plus_abelian(n, f).unwrap();
        assert!(e.sigma.as_ref().unwrap().is_invertible());
        assert!(!e.algebra.is_simple().is_simple());
    }
}

#[test]
fn regular_construction_examples() {
    let f = gf(5);
    let so3 = zoo::so3(f).unwrap();
    let single = zoo::regular_construction(&so3.algebra, 1, &[Matrix::identity(f, 3)]).unwrap();
    assert_eq!(single.algebra, so3.algebra);
    assert_eq!(single.sigma, Some(Matrix::identity(f, 3)));
    let pair = zoo::regular_construction(&so3.algebra, 2, &[Matrix::identity(f, 3), Matrix::identity(f, 3)]).unwrap();
    let s = pair.sigma.as_ref().unwrap();
    assert!(is_regular(&pair.algebra, s).unwrap());
    assert!(is_hom_simple(&pair.algebra, s).unwrap().is_simple());
    // a non-automorphism is rejected
    let bad = Matrix::from_i64(f, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert!(zoo::regular_construction(&so3.algebra, 1, &[bad]).is_err());
    assert!(zoo::regular_construction(&zoo::aff(f).unwrap().algebra, 1, &[Matrix::identity(f, 2)]).is_err());
}

#[test]
fn random_so3_automorphisms_are_automorphisms() {
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    for f in [gf(3), gf(5), gf(7), Q] {
        let so3 = zoo::so3(f).unwrap().algebra;
        for _ in 0..10 {
            let g = zoo::random_so3_automorphism(f, &mut rng);
            assert!(g.is_invertible() && so3.is_homomorphism(&g, &so3).unwrap());
        }
    }
}

#[test]
fn unknown_names_and_bad_parameters() {
    assert!(zoo::by_name("nonesuch", &[], Q).is_err());
    assert!(zoo::by_name("heisenberg", &[], Q).is_err());
    assert!(zoo::by_name("heisenberg", &[-1], Q).is_err());
    assert!(zoo::by_name("s", &[2], Q).is_err());
    assert!(matches!(zoo::sl2(gf(2)), Err(Error::UnsupportedField { .. })));
    assert!(zoo::by_name("abelian2-irreducible", &[], Q).is_err());
    for name in zoo::NAMES {
        let params: &[i64] = match *name {
            "abelian" | "heisenberg" | "aff-plus-abelian" | "regular-so3" => &[1],
            "s" | "a-ext" => &[3],
            "r" => &[2],
            _ => &[],
        };
        assert!(zoo::by_name(name, params, gf(3)).is_ok(), "{name}");
    }
}
