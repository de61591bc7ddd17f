use homlie::algebra::AnticommAlgebra;
use homlie::exactmath::enumerate::enumerate_vectors;
use homlie::exactmath::{vector, FieldSpec, Matrix, Scalar, Subspace};
use homlie::homlie::{
    classify_membership, hom_ideal_closure, hom_jacobian, hs_space, induced_lie, inside_twist, is_hom_ideal,
    is_hom_morphism, is_hom_simple, is_multiplicative, is_regular, is_twisting_map, outside_twist,
    regular_invariant, transport, yau_twist, HomLie, PsVerdict,
};
use homlie::lowdim::random_invertible;
use homlie::zoo;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

const Q: FieldSpec = FieldSpec::Rationals;

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn e(f: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    vector::unit(f, n, i)
}

fn line(f: FieldSpec, n: usize, i: usize) -> Subspace {
    Subspace::span(f, n, &[e(f, n, i)]).unwrap()
}

#[test]
fn jacobian_examples() {
    let so3 = zoo::so3(Q).unwrap().algebra;
    let id = Matrix::identity(Q, 3);
    for (i, j, k) in [(0, 1, 2), (0, 0, 1), (2, 1, 0)] {
        let jac = hom_jacobian(&so3, &id, &e(Q, 3, i), &e(Q, 3, j), &e(Q, 3, k)).unwrap();
        assert!(vector::is_zero(&jac));
    }
    let a1 = zoo::a1(Q).unwrap().algebra;
    let id4 = Matrix::identity(Q, 4);
    // only [e2,[e3,e1]] = -[e2,e4] = -e2 survives
    let jac = hom_jacobian(&a1, &id4, &e(Q, 4, 0), &e(Q, 4, 1), &e(Q, 4, 2)).unwrap();
    assert_eq!(jac, vector::neg(&e(Q, 4, 1)));
}

#[test]
fn twisting_map_examples() {
    let f = gf(3);
    let aff = zoo::aff(f).unwrap().algebra;
    for v in enumerate_vectors(f, 4).unwrap() {
        assert!(is_twisting_map(&aff, &Matrix::new(f, 2, 2, v).unwrap()).unwrap());
    }
    let h5 = zoo::heisenberg(2, Q).unwrap().algebra;
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..5 {
        assert!(is_twisting_map(&h5, &random_invertible(Q, 5, &mut rng)).unwrap());
    }
    let a2 = zoo::a2(Q).unwrap().algebra;
    assert!(!is_twisting_map(&a2, &Matrix::identity(Q, 4)).unwrap());
}

#[test]
fn hs_space_examples() {
    for f in [Q, gf(2), gf(5)] {
        let hs = hs_space(&zoo::a1(f).unwrap().algebra);
        assert_eq!(hs.dim(), 4);
        for m in hs.basis() {
            // sigma(e2) = sigma(e3) = 0 and sigma(e1) has no e1-component
            assert!(vector::is_zero(&m.column(1)) && vector::is_zero(&m.column(2)));
            assert!(m.get(0, 0).is_zero());
            assert!(hs.contains(&m).unwrap());
            assert!(is_twisting_map(hs.algebra(), &m).unwrap());
        }
        assert_eq!(hs_space(&zoo::a2(f).unwrap().algebra).dim(), 0);
        assert_eq!(hs_space(&zoo::aff(f).unwrap().algebra).dim(), 4);
        assert_eq!(hs_space(&zoo::abelian(2, f).unwrap().algebra).dim(), 4);
    }
}

#[test]
fn metabelian_algebras_twist_by_everything() {
    for n in 1..=3 {
        let dim = 2 * n + 1;
        let h = zoo::heisenberg(n, gf(3)).unwrap().algebra;
        assert_eq!(hs_space(&h).dim(), dim * dim);
    }
}

#[test]
fn hom_ideal_examples() {
    let f = gf(3);
    let h3 = zoo::heisenberg(1, f).unwrap();
    let sigma = h3.sigma.as_ref().unwrap();
    assert!(hom_ideal_closure(&h3.algebra, sigma, &line(f, 3, 2)).unwrap().is_full());
    assert!(hom_ideal_closure(&h3.algebra, sigma, &Subspace::zero(f, 3)).unwrap().is_zero());
    let aff = zoo::aff(f).unwrap().algebra;
    let id = Matrix::identity(f, 2);
    assert_eq!(hom_ideal_closure(&aff, &id, &line(f, 2, 1)).unwrap(), line(f, 2, 1));
    assert!(is_hom_ideal(&aff, &id, &line(f, 2, 1)).unwrap());
}

#[test]
fn hom_simplicity_examples() {
    let f = gf(3);
    for entry in [zoo::heisenberg(2, f).unwrap(), zoo::r_family(2, f).unwrap()] {
        let r = is_hom_simple(&entry.algebra, entry.sigma.as_ref().unwrap()).unwrap();
        assert!(r.is_simple(), "{}", entry.name);
    }
    let aff = zoo::aff(f).unwrap().algebra;
    let r = is_hom_simple(&aff, &Matrix::identity(f, 2)).unwrap();
    assert!(!r.is_simple());
    assert_eq!(r.witness, Some(line(f, 2, 1)));
}

#[test]
fn multiplicativity_examples() {
    let so3 = zoo::so3(Q).unwrap().algebra;
    assert!(is_regular(&so3, &Matrix::identity(Q, 3)).unwrap());
    let zero = Matrix::zeros(Q, 3, 3);
    assert!(is_multiplicative(&so3, &zero).unwrap() && !is_regular(&so3, &zero).unwrap());
    // an outside twist whose twisting map fixes e1 and e2 but not e3
    let theta = Matrix::from_i64(Q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
    let a = outside_twist(&so3, &theta).unwrap();
    let sigma = homlie::lowdim::sigma_from_brackets(&a).unwrap();
    assert_eq!(sigma.column(0), e(Q, 3, 0));
    assert_eq!(sigma.column(1), e(Q, 3, 1));
    assert_ne!(sigma.column(2), e(Q, 3, 2));
    assert!(is_twisting_map(&a, &sigma).unwrap());
    assert!(!is_multiplicative(&a, &sigma).unwrap());
}

#[test]
fn twist_examples() {
    let f = gf(5);
    let so3 = zoo::so3(f).unwrap().algebra;
    assert_eq!(outside_twist(&so3, &Matrix::identity(f, 3)).unwrap(), so3);
    assert!(inside_twist(&so3, &Matrix::zeros(f, 3, 3)).unwrap().is_abelian());

    let h = HomLie::new(so3.clone(), Matrix::identity(f, 3)).unwrap();
    assert_eq!(yau_twist(&h, &Matrix::identity(f, 3)).unwrap(), h);
    let flat = yau_twist(&h, &Matrix::zeros(f, 3, 3)).unwrap();
    assert!(flat.algebra().is_abelian() && flat.sigma().is_zero());

    let pair = so3.direct_sum(&so3).unwrap();
    let h = HomLie::new(pair, Matrix::identity(f, 6)).unwrap();
    let swap = Matrix::from_columns(f, 6, &(0..6).map(|c| e(f, 6, (c + 3) % 6)).collect::<Vec<_>>()).unwrap();
    let twisted = yau_twist(&h, &swap).unwrap();
    assert!(is_regular(twisted.algebra(), twisted.sigma()).unwrap());
    assert!(yau_twist(&h, &Matrix::from_i64(f, &[&[2, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]])).is_err());
}

#[test]
fn induced_lie_examples() {
    let so3 = zoo::so3(Q).unwrap().algebra;
    let h = HomLie::new(so3.clone(), Matrix::identity(Q, 3)).unwrap();
    assert_eq!(induced_lie(&h).unwrap(), so3);
    let f = gf(5);
    let reg = zoo::regular_construction(&zoo::so3(f).unwrap().algebra, 2, &[Matrix::identity(f, 3), Matrix::identity(f, 3)]).unwrap();
    let h = HomLie::new(reg.algebra, reg.sigma.unwrap()).unwrap();
    let so3f = zoo::so3(f).unwrap().algebra;
    assert_eq!(induced_lie(&h).unwrap(), so3f.direct_sum(&so3f).unwrap());
    let heis = zoo::heisenberg(1, f).unwrap();
    assert!(induced_lie(&HomLie::new(heis.algebra, heis.sigma.unwrap()).unwrap()).is_err());
}

#[test]
fn regular_structure_lemmas() {
    let f = gf(5);
    let mut rng = StdRng::seed_from_u64(11);
    for n in 1..=3 {
        let autos: Vec<Matrix> = (0..n).map(|_| zoo::random_so3_automorphism(f, &mut rng)).collect();
        let reg = zoo::regular_construction(&zoo::so3(f).unwrap().algebra, n, &autos).unwrap();
        let h = HomLie::new(reg.algebra, reg.sigma.unwrap()).unwrap();
        let induced = induced_lie(&h).unwrap();
        assert!(induced.is_lie());
        // sigma is an automorphism of the induced algebra
        assert!(induced.is_homomorphism(h.sigma(), &induced).unwrap());
        // sigma moves component i onto component i+1
        for i in 0..n {
            let comp = zoo::component(f, n, 3, i).unwrap();
            assert_eq!(comp.image_under(h.sigma()).unwrap(), zoo::component(f, n, 3, (i + 1) % n).unwrap());
        }
    }
}

#[test]
fn hom_morphism_examples() {
    let f = gf(5);
    let heis = zoo::heisenberg(1, f).unwrap();
    let h = HomLie::new(heis.algebra.clone(), heis.sigma.clone().unwrap()).unwrap();
    assert!(is_hom_morphism(&Matrix::identity(f, 3), &h, &h).unwrap());
    let scale = Matrix::from_i64(f, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
    assert!(heis.algebra.is_homomorphism(&scale, &heis.algebra).unwrap());
    assert!(!is_hom_morphism(&scale, &h, &h).unwrap());
}

#[test]
fn regular_invariant_examples() {
    let f = gf(5);
    let id = Matrix::identity(f, 3);
    let so3 = zoo::so3(f).unwrap().algebra;
    let reg = zoo::regular_construction(&so3, 2, &[id.clone(), id.clone()]).unwrap();
    let h = HomLie::new(reg.algebra, reg.sigma.unwrap()).unwrap();
    let comp = zoo::component(f, 2, 3, 0).unwrap();
    let x_minus_1 = homlie::exactmath::Poly::from_i64(f, &[-1, 1]);
    assert_eq!(regular_invariant(&h, &comp, 2).unwrap(), vec![x_minus_1.clone(); 3]);

    let mut rng = StdRng::seed_from_u64(5);
    let autos: Vec<Matrix> = (0..2).map(|_| zoo::random_so3_automorphism(f, &mut rng)).collect();
    let reg = zoo::regular_construction(&so3, 2, &autos).unwrap();
    let h = HomLie::new(reg.algebra, reg.sigma.unwrap()).unwrap();
    let c0 = regular_invariant(&h, &zoo::component(f, 2, 3, 0).unwrap(), 2).unwrap();
    let c1 = regular_invariant(&h, &zoo::component(f, 2, 3, 1).unwrap(), 2).unwrap();
    assert_eq!(c0, c1);
    let phi = random_invertible(f, 6, &mut rng);
    let moved = transport(&h, &phi).unwrap();
    let comp = zoo::component(f, 2, 3, 0).unwrap().image_under(&phi).unwrap();
    assert_eq!(regular_invariant(&moved, &comp, 2).unwrap(), c0);
}

#[test]
fn class_membership_examples() {
    let f = gf(5);
    let m = classify_membership(&zoo::a1(f).unwrap().algebra, 0);
    assert!(m.ss && m.ss_star);
    assert_eq!(m.ps, PsVerdict::No);
    assert_eq!(m.hs_dim, 4);
    let m = classify_membership(&zoo::a2(f).unwrap().algebra, 0);
    assert!(m.ss && !m.ss_star);
    for a in [zoo::so3(f).unwrap().algebra, zoo::sl2(f).unwrap().algebra] {
        let m = classify_membership(&a, 0);
        assert_eq!(m.ps, PsVerdict::Yes);
    }
    let m = classify_membership(&zoo::aff(f).unwrap().algebra, 0);
    assert!(!m.ss && !m.ss_star && m.ps == PsVerdict::No);
}

#[test]
fn class_membership_is_monotone() {
    let f = gf(3);
    let algebras = [
        zoo::a1(f).unwrap().algebra,
        zoo::a2(f).unwrap().algebra,
        zoo::so3(f).unwrap().algebra,
        zoo::s_family(4, f).unwrap().algebra,
        zoo::aff(f).unwrap().algebra,
        zoo::heisenberg(1, f).unwrap().algebra,
    ];
    for a in algebras {
        let m = classify_membership(&a, 7);
        assert!(!m.ss_star || m.ss);
        assert!(m.ps != PsVerdict::Yes || m.ss_star);
    }
}

/// Every multiplicative σ over GF(3) for small zoo algebras.
fn multiplicative_maps(a: &AnticommAlgebra) -> Vec<Matrix> {
    let (f, n) = (a.field(), a.dim());
    enumerate_vectors(f, n * n)
        .unwrap()
        .map(|v| Matrix::new(f, n, n, v).unwrap())
        .filter(|m| is_multiplicative(a, m).unwrap())
        .collect()
}

#[test]
fn kernels_of_multiplicative_maps_are_hom_ideals() {
    let f = gf(3);
    let algebras = [
        zoo::aff(f).unwrap().algebra,
        zoo::so3(f).unwrap().algebra,
        zoo::heisenberg(1, f).unwrap().algebra,
        zoo::abelian(2, f).unwrap().algebra,
    ];
    for a in algebras {
        let maps = multiplicative_maps(&a);
        assert!(maps.len() >= 2);
        for s in maps {
            if !is_twisting_map(&a, &s).unwrap() {
                continue;
            }
            assert!(is_hom_ideal(&a, &s, &s.kernel()).unwrap(), "{s}");
            if is_hom_simple(&a, &s).unwrap().is_simple() {
                assert!(s.is_invertible() || s.is_zero(), "{s}");
            }
        }
    }
}

fn so3_multiplicative_maps() -> Vec<Matrix> {
    static MAPS: std::sync::OnceLock<Vec<Matrix>> = std::sync::OnceLock::new();
    MAPS.get_or_init(|| multiplicative_maps(&zoo::so3(gf(3)).unwrap().algebra)).clone()
}

fn matrix_strategy(p: u64, n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0..p, n * n).prop_map(move |v| {
        let f = gf(p);
        Matrix::new(f, n, n, v.into_iter().map(|x| f.residue(x)).collect()).unwrap()
    })
}

fn vector_strategy(p: u64, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(0..p, n).prop_map(move |v| v.into_iter().map(|x| gf(p).residue(x)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobian_is_alternating(s in matrix_strategy(5, 4), x in vector_strategy(5, 4), y in vector_strategy(5, 4), z in vector_strategy(5, 4)) {
        let a = zoo::a1(gf(5)).unwrap().algebra;
        let xyz = hom_jacobian(&a, &s, &x, &y, &z).unwrap();
        let yxz = hom_jacobian(&a, &s, &y, &x, &z).unwrap();
        let xzy = hom_jacobian(&a, &s, &x, &z, &y).unwrap();
        prop_assert_eq!(&xyz, &vector::neg(&yxz));
        prop_assert_eq!(&xyz, &vector::neg(&xzy));
        prop_assert!(vector::is_zero(&hom_jacobian(&a, &s, &x, &x, &z).unwrap()));
    }

    #[test]
    fn twisting_is_linear_in_sigma(c in vector_strategy(5, 4)) {
        let a = zoo::a1(gf(5)).unwrap().algebra;
        let hs = hs_space(&a);
        prop_assert!(is_twisting_map(&a, &hs.element(&c).unwrap()).unwrap());
    }

    #[test]
    fn yau_identity_on_triples(s in matrix_strategy(3, 3), t in prop::sample::select(so3_multiplicative_maps()), x in vector_strategy(3, 3), y in vector_strategy(3, 3), z in vector_strategy(3, 3)) {
        // J_{θ[,], θσ} = θ² J_{[,], σ} whenever θ is multiplicative
        let a = zoo::so3(gf(3)).unwrap().algebra;
        let twisted = outside_twist(&a, &t).unwrap();
        let lhs = hom_jacobian(&twisted, &t.mul(&s).unwrap(), &x, &y, &z).unwrap();
        let rhs = t.mul(&t).unwrap().mul_vec(&hom_jacobian(&a, &s, &x, &y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transport_is_a_hom_isomorphism(seed in 0u64..1000) {
        let f = gf(5);
        let heis = zoo::heisenberg(2, f).unwrap();
        let h = HomLie::new(heis.algebra, heis.sigma.unwrap()).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let phi = random_invertible(f, 5, &mut rng);
        let moved = transport(&h, &phi).unwrap();
        prop_assert!(is_hom_morphism(&phi, &h, &moved).unwrap());
        prop_assert_eq!(is_hom_simple(moved.algebra(), moved.sigma()).unwrap().verdict,
                        is_hom_simple(h.algebra(), h.sigma()).unwrap().verdict);
    }
}

#[test]
fn identity_twists_exactly_the_lie_algebras() {
    let f = gf(2);
    let id = Matrix::identity(f, 3);
    for v in enumerate_vectors(f, 9).unwrap() {
        let mut a = AnticommAlgebra::new(f, 3);
        a.set_bracket(0, 1, v[0..3].to_vec()).unwrap();
        a.set_bracket(0, 2, v[3..6].to_vec()).unwrap();
        a.set_bracket(1, 2, v[6..9].to_vec()).unwrap();
        assert_eq!(is_twisting_map(&a, &id).unwrap(), a.is_lie());
    }
}
