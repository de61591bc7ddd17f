use homlie::rootsys::{
    all_types, cartan_matrix, enumerate_roots, trace_closed_form, trace_enumerated, validate, verify_traces,
    LaurentPoly, RootType,
};

fn sym(a: i64, k: i64) -> LaurentPoly {
    LaurentPoly::symmetric(a, k)
}

fn c(a: i64) -> LaurentPoly {
    LaurentPoly::constant(a)
}

#[test]
fn cartan_examples() {
    assert_eq!(cartan_matrix(RootType::A, 2).unwrap(), vec![vec![2, -1], vec![-1, 2]]);
    assert_eq!(cartan_matrix(RootType::G2, 2).unwrap(), vec![vec![2, -1], vec![-3, 2]]);
    assert!(cartan_matrix(RootType::D, 3).is_err());
    assert!(validate(RootType::E8, 7).is_err());
    assert!(validate(RootType::B, 1).is_err());
}

#[test]
fn root_counts() {
    let expected = [
        (RootType::A, 1, 2),
        (RootType::A, 4, 20),
        (RootType::B, 3, 18),
        (RootType::C, 4, 32),
        (RootType::D, 5, 40),
        (RootType::E6, 6, 72),
        (RootType::E7, 7, 126),
        (RootType::E8, 8, 240),
        (RootType::F4, 4, 48),
        (RootType::G2, 2, 12),
    ];
    for (t, l, n) in expected {
        assert_eq!(enumerate_roots(t, l).unwrap().roots.len(), n, "{t}{l}");
    }
}

#[test]
fn g2_positive_roots() {
    let g2 = enumerate_roots(RootType::G2, 2).unwrap();
    let mut firsts: Vec<i64> = g2.positive_roots().map(|r| r[0]).collect();
    firsts.sort_unstable();
    assert_eq!(firsts, vec![0, 1, 1, 2, 3, 3]);
}

#[test]
fn trace_examples() {
    assert_eq!(trace_enumerated(RootType::A, 1, 1).unwrap(), c(1).add(&sym(1, 1)));
    let g2 = c(4).add(&sym(2, 1)).add(&sym(1, 2)).add(&sym(2, 3));
    assert_eq!(trace_enumerated(RootType::G2, 2, 1).unwrap(), g2);
    assert_eq!(trace_enumerated(RootType::B, 2, 1).unwrap(), c(4).add(&sym(3, 1)));
    assert_eq!(trace_enumerated(RootType::B, 2, 2).unwrap(), c(4).add(&sym(2, 1)).add(&sym(1, 2)));
    let f4 = c(22).add(&sym(14, 1)).add(&sym(1, 2));
    assert_eq!(trace_closed_form(RootType::F4, 4, 1).unwrap(), f4);
    assert_eq!(trace_enumerated(RootType::F4, 4, 1).unwrap(), f4);
}

#[test]
fn type_a_and_c_closed_forms() {
    let shifted = |dim: i64, k: i64| c(dim - 2 * k).add(&sym(k, 1));
    for l in 1..=8usize {
        let dim = (l * (l + 2)) as i64;
        for i in 1..=l {
            let k = (i * (l + 1 - i)) as i64;
            assert_eq!(trace_closed_form(RootType::A, l, i).unwrap(), shifted(dim, k));
            assert_eq!(trace_enumerated(RootType::A, l, i).unwrap(), shifted(dim, k));
        }
    }
    for l in 3..=8usize {
        let dim = (l * (2 * l + 1)) as i64;
        let k = (l * (l + 1) / 2) as i64;
        assert_eq!(trace_closed_form(RootType::C, l, l).unwrap(), shifted(dim, k));
    }
}

#[test]
fn every_closed_form_matches_except_e8_i5() {
    let mut mismatches = Vec::new();
    for (t, l) in all_types(8) {
        for check in verify_traces(t, l).unwrap() {
            if !check.matches() {
                mismatches.push((t, check.i, check.difference().to_string()));
            }
        }
    }
    assert_eq!(mismatches, vec![(RootType::E8, 5, "20c^3 - 20c^4".to_string())]);
}

#[test]
fn structural_properties() {
    for (t, l) in all_types(8) {
        let rs = enumerate_roots(t, l).unwrap();
        assert!(rs.roots.iter().all(|r| rs.roots.contains(&r.iter().map(|x| -x).collect::<Vec<_>>())));
        assert_eq!(rs.positive_roots().count() * 2, rs.roots.len());
        let dim = rs.lie_dim() as i64;
        assert_eq!(dim, (l + rs.roots.len()) as i64);
        for i in 0..l {
            let simple: Vec<i64> = (0..l).map(|k| i64::from(k == i)).collect();
            assert!(rs.roots.contains(&simple));
        }
        for i in 1..=l {
            let tr = trace_enumerated(t, l, i).unwrap();
            assert_eq!(tr.eval_at_one(), dim, "{t}{l} i={i}");
            assert!(tr.is_symmetric());
            let moved = rs.roots.iter().filter(|r| r[i - 1] != 0).count() as i64;
            assert_eq!(tr.coeff(0), dim - moved);
        }
    }
}

#[test]
fn parse_types() {
    assert_eq!("g2".parse::<RootType>().unwrap(), RootType::G2);
    assert_eq!("E8".parse::<RootType>().unwrap(), RootType::E8);
    assert!("H3".parse::<RootType>().is_err());
}
