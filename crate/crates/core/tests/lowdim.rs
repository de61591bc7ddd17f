use std::collections::{BTreeSet, HashSet};

use homlie::exactmath::enumerate::enumerate_vectors;
use homlie::exactmath::{FieldSpec, Matrix, Poly};
use homlie::homlie::{is_hom_simple, is_multiplicative, is_twisting_map};
use homlie::lowdim::{
    a2_only_trivial_hom_ideals, a2_only_trivial_hom_ideals_by_closure, aff_algebra, aff_class_count, aff_classes,
    aff_iso_bruteforce, aff_iso_by_invariants, aff_multiplicative_maps, aff_simple_structures,
    count_irreducible_quadratics, dim3_check, has_no_invariant_line, list_irreducible_quadratics,
    no_multiplicative_simple_dim2, sigma_from_brackets, AffHomStructure,
};
use homlie::zoo;

const Q: FieldSpec = FieldSpec::Rationals;

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn all_2x2(f: FieldSpec) -> Vec<Matrix> {
    enumerate_vectors(f, 4).unwrap().map(|v| Matrix::new(f, 2, 2, v).unwrap()).collect()
}

#[test]
fn irreducible_quadratics() {
    assert_eq!(list_irreducible_quadratics(2).unwrap(), vec![Poly::from_i64(gf(2), &[1, 1, 1])]);
    for q in [2u64, 3, 5, 7, 11] {
        assert_eq!(count_irreducible_quadratics(q).unwrap() as u64, q * (q - 1) / 2);
    }
}

#[test]
fn invariant_lines() {
    let f = gf(2);
    let companion = Matrix::from_i64(f, &[&[0, 1], &[1, 1]]);
    assert!(has_no_invariant_line(&companion).unwrap());
    assert!(a2_only_trivial_hom_ideals(&companion).unwrap());
    assert!(!has_no_invariant_line(&Matrix::identity(f, 2)).unwrap());
    assert!(!has_no_invariant_line(&Matrix::from_i64(f, &[&[1, 0], &[0, 0]])).unwrap());
    assert!(!a2_only_trivial_hom_ideals(&Matrix::zeros(f, 2, 2)).unwrap());
}

#[test]
fn hom_ideal_checks_agree() {
    for q in [2, 3, 5] {
        for s in all_2x2(gf(q)) {
            assert_eq!(a2_only_trivial_hom_ideals(&s).unwrap(), a2_only_trivial_hom_ideals_by_closure(&s).unwrap(), "{s}");
        }
        let e = zoo::abelian2_with_irreducible_sigma(q).unwrap();
        assert!(a2_only_trivial_hom_ideals(e.sigma.as_ref().unwrap()).unwrap());
    }
}

#[test]
fn simple_structures_on_aff() {
    assert_eq!(aff_simple_structures(2).unwrap().len(), 8);
    assert_eq!(aff_simple_structures(3).unwrap().len(), 54);
    for q in [2, 3] {
        let f = gf(q);
        let aff = aff_algebra(f);
        let simple: HashSet<Matrix> = aff_simple_structures(q).unwrap().into_iter().map(|s| s.sigma).collect();
        for s in all_2x2(f) {
            assert!(is_twisting_map(&aff, &s).unwrap());
            let hom_simple = is_hom_simple(&aff, &s).unwrap().is_simple();
            assert_eq!(hom_simple, simple.contains(&s), "{s}");
            assert_eq!(hom_simple, !s.get(0, 1).is_zero());
        }
    }
}

#[test]
fn isomorphism_by_invariants_matches_search() {
    for q in [2, 3] {
        let structures = aff_simple_structures(q).unwrap();
        for s1 in &structures {
            assert!(aff_iso_by_invariants(s1, s1).unwrap());
            for s2 in &structures {
                let found = aff_iso_bruteforce(s1, s2, q).unwrap();
                assert_eq!(aff_iso_by_invariants(s1, s2).unwrap(), found.is_some());
                if s1.trace() != s2.trace() {
                    assert!(found.is_none());
                }
            }
        }
    }
    let f = gf(3);
    let not_simple = AffHomStructure::new(Matrix::identity(f, 2)).unwrap();
    let simple = aff_simple_structures(3).unwrap().remove(0);
    assert!(aff_iso_by_invariants(&not_simple, &simple).is_err());
}

#[test]
fn conjugate_structures_are_found() {
    let q = 5;
    let f = gf(q);
    let s = AffHomStructure::new(Matrix::from_i64(f, &[&[1, 2], &[3, 4]])).unwrap();
    // an automorphism of aff: x -> x + c y, y -> d y
    let phi = Matrix::from_i64(f, &[&[1, 0], &[2, 3]]);
    assert!(aff_algebra(f).is_homomorphism(&phi, &aff_algebra(f)).unwrap());
    let conj = phi.mul(&s.sigma).unwrap().mul(&phi.inverse().unwrap().unwrap()).unwrap();
    let t = AffHomStructure::new(conj).unwrap();
    assert!(t.is_simple());
    let found = aff_iso_bruteforce(&s, &t, q).unwrap().unwrap();
    assert_eq!(found.mul(&s.sigma).unwrap(), t.sigma.mul(&found).unwrap());
    assert!(aff_iso_by_invariants(&s, &t).unwrap());
}

#[test]
fn class_counts() {
    // one class per (trace, det) pair
    for q in [2u64, 3, 5, 7] {
        let classes = aff_classes(q).unwrap();
        assert_eq!(classes.len() as u64, q * q);
        let traces: BTreeSet<String> = classes.iter().map(|c| c.trace.to_string()).collect();
        assert_eq!(traces.len() as u64, q);
        let total: usize = classes.iter().map(|c| c.size).sum();
        assert_eq!(total, aff_simple_structures(q).unwrap().len());
    }
    assert_eq!(aff_class_count(2).unwrap(), 4);
    assert_eq!(aff_class_count(3).unwrap(), 9);
    assert!(aff_classes(11).is_err());
}

#[test]
fn multiplicative_maps_fix_the_ideal() {
    for q in [2, 3] {
        assert!(no_multiplicative_simple_dim2(q).unwrap());
        let f = gf(q);
        let aff = aff_algebra(f);
        let maps = aff_multiplicative_maps(q).unwrap();
        assert!(!maps.is_empty());
        for m in &maps {
            assert!(is_multiplicative(&aff, m).unwrap());
            assert!(m.get(0, 1).is_zero());
        }
    }
}

#[test]
fn sigma_from_brackets_examples() {
    let so3 = zoo::so3(Q).unwrap().algebra;
    assert!(sigma_from_brackets(&so3).unwrap().is_identity());
    assert!(sigma_from_brackets(&zoo::abelian(3, Q).unwrap().algebra).unwrap().is_zero());
    assert!(sigma_from_brackets(&aff_algebra(Q)).is_err());
}

#[test]
fn outside_twists_of_so3() {
    for (f, n) in [(gf(5), 50), (gf(7), 20), (Q, 10)] {
        let samples = dim3_check(f, n, 42).unwrap();
        assert_eq!(samples.len(), n);
        assert!(samples.iter().all(|s| s.ok()), "{f}");
    }
    assert_eq!(dim3_check(gf(5), 5, 1).unwrap(), dim3_check(gf(5), 5, 1).unwrap());
}
