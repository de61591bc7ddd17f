//! Root systems of the simple Lie algebras and traces of the diagonal automorphisms `φ_i`.
//!
//! `φ_i` fixes a Cartan subalgebra and scales the root vector `x_β` by `c^{m_i(β)}`,
//! so its trace is `l + Σ_{β ∈ Δ} c^{m_i(β)}`. Simple roots use Bourbaki numbering,
//! 1-based as in the Dynkin diagrams.

mod laurent;

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

pub use laurent::LaurentPoly;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::E6 => "E6",
            RootType::E7 => "E7",
            RootType::E8 => "E8",
            RootType::F4 => "F4",
            RootType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = Error;

    /// `A`..`D` as bare letters; exceptional types with their rank (`E8`, `G2`).
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => RootType::A,
            "B" => RootType::B,
            "C" => RootType::C,
            "D" => RootType::D,
            "E6" => RootType::E6,
            "E7" => RootType::E7,
            "E8" => RootType::E8,
            "F4" => RootType::F4,
            "G2" => RootType::G2,
            other => return Err(Error::InvalidRootSystem(format!("unknown type {other:?}"))),
        })
    }
}

/// Fails unless `(t, l)` names a simple Lie algebra without duplicates (`D` needs `l >= 4`).
pub fn validate(t: RootType, l: usize) -> Result<()> {
    let ok = match t {
        RootType::A => l >= 1,
        RootType::B => l >= 2,
        RootType::C => l >= 3,
        RootType::D => l >= 4,
        RootType::E6 => l == 6,
        RootType::E7 => l == 7,
        RootType::E8 => l == 8,
        RootType::F4 => l == 4,
        RootType::G2 => l == 2,
    };
    if ok {
        Ok(())
    } else {
        let hint = if t == RootType::D && l == 3 { " (use A3)" } else { "" };
        Err(Error::InvalidRootSystem(format!("{t} with rank {l}{hint}")))
    }
}

/// Cartan matrix `C[i][j] = <α_i, α_j^∨>` (0-based indices, Bourbaki order).
pub fn cartan_matrix(t: RootType, l: usize) -> Result<Vec<Vec<i64>>> {
    validate(t, l)?;
    let mut c = vec![vec![0i64; l]; l];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match t {
        RootType::A | RootType::B | RootType::C | RootType::F4 | RootType::G2 => {
            for i in 0..l - 1 {
                link(i, i + 1);
            }
        }
        RootType::D => {
            for i in 0..l - 2 {
                link(i, i + 1);
            }
            link(l - 3, l - 1);
        }
        RootType::E6 | RootType::E7 | RootType::E8 => {
            // chain 1-3-4-5-...-l, with 2 attached to 4
            link(0, 2);
            for i in 2..l - 1 {
                link(i, i + 1);
            }
            link(1, 3);
        }
    }
    match t {
        RootType::B => c[l - 2][l - 1] = -2,
        RootType::C => c[l - 1][l - 2] = -2,
        RootType::F4 => c[1][2] = -2,
        RootType::G2 => c[1][0] = -3,
        _ => {}
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub root_type: RootType,
    pub rank: usize,
    /// Every root as its coordinates over the simple roots.
    pub roots: BTreeSet<Vec<i64>>,
}

impl RootSystem {
    pub fn positive_roots(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.roots.iter().filter(|r| r.iter().all(|&m| m >= 0))
    }

    /// `dim g = l + |Δ|`.
    pub fn lie_dim(&self) -> usize {
        self.rank + self.roots.len()
    }
}

/// All roots, by adding simple roots along root strings starting from the simple roots.
pub fn enumerate_roots(t: RootType, l: usize) -> Result<RootSystem> {
    let c = cartan_matrix(t, l)?;
    let unit = |i: usize| {
        let mut v = vec![0i64; l];
        v[i] = 1;
        v
    };
    let mut positive: Vec<Vec<i64>> = (0..l).map(unit).collect();
    let mut seen: HashSet<Vec<i64>> = positive.iter().cloned().collect();
    let mut idx = 0;
    while idx < positive.len() {
        let beta = positive[idx].clone();
        idx += 1;
        for i in 0..l {
            // p: how far β - kα_i stays a root
            let mut p = 0i64;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if seen.contains(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            let pairing: i64 = (0..l).map(|j| beta[j] * c[j][i]).sum();
            let q = p - pairing;
            if q > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if seen.insert(up.clone()) {
                    positive.push(up);
                }
            }
        }
    }
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    for r in positive {
        roots.insert(r.iter().map(|m| -m).collect());
        roots.insert(r);
    }
    Ok(RootSystem {
        root_type: t,
        rank: l,
        roots,
    })
}

fn check_index(l: usize, i: usize) -> Result<()> {
    if (1..=l).contains(&i) {
        Ok(())
    } else {
        Err(Error::InvalidRootSystem(format!("index {i} outside 1..={l}")))
    }
}

/// `l + Σ_{β ∈ Δ} c^{m_i(β)}`, with `i` 1-based.
pub fn trace_enumerated(t: RootType, l: usize, i: usize) -> Result<LaurentPoly> {
    let rs = enumerate_roots(t, l)?;
    check_index(l, i)?;
    let mut p = LaurentPoly::constant(l as i64);
    for r in &rs.roots {
        p.add_term(1, r[i - 1]);
    }
    Ok(p)
}

fn sym(a: i64, k: i64) -> LaurentPoly {
    LaurentPoly::symmetric(a, k)
}

/// `constant + Σ_k coeffs[k-1] (c^k + c^-k)`.
fn sym_series(constant: i64, coeffs: &[i64]) -> LaurentPoly {
    let mut p = LaurentPoly::constant(constant);
    for (k, &a) in coeffs.iter().enumerate() {
        p = p.add(&sym(a, k as i64 + 1));
    }
    p
}

/// The printed closed forms, transcribed term by term (`i` 1-based).
pub fn trace_closed_form(t: RootType, l: usize, i: usize) -> Result<LaurentPoly> {
    let dim_g = enumerate_roots(t, l)?.lie_dim() as i64;
    check_index(l, i)?;
    let (li, ii) = (l as i64, i as i64);
    let dim = LaurentPoly::constant(dim_g);
    // a (c + c^-1 - 2)
    let shifted = |a: i64| sym(a, 1).add(&LaurentPoly::constant(-2 * a));
    let p = match t {
        RootType::A => dim.add(&shifted(ii * (li + 1 - ii))),
        RootType::B => dim
            .add(&LaurentPoly::constant(-ii * (4 * li + 1 - 3 * ii)))
            .add(&sym(ii * (2 * (li - ii) + 1), 1))
            .add(&sym((ii - 1) * ii / 2, 2)),
        RootType::C if i < l => dim
            .add(&LaurentPoly::constant(-ii * (4 * li + 1 - 3 * ii)))
            .add(&sym(2 * ii * (li - ii), 1))
            .add(&sym(ii * (ii + 1) / 2, 2)),
        RootType::C => dim.add(&shifted(li * (li + 1) / 2)),
        RootType::D if i + 2 <= l => dim
            .add(&LaurentPoly::constant(-ii * (4 * li - 1 - 3 * ii)))
            .add(&sym(2 * ii * (li - ii), 1))
            .add(&sym((ii - 1) * ii / 2, 2)),
        RootType::D => dim.add(&shifted((li - 1) * li / 2)),
        RootType::E6 => match i {
            1 | 6 => sym_series(46, &[16]),
            3 | 5 => sym_series(28, &[20, 5]),
            2 => sym_series(36, &[20, 1]),
            _ => sym_series(20, &[18, 9, 2]),
        },
        RootType::E7 => match i {
            1 => sym_series(67, &[32, 1]),
            2 => sym_series(49, &[35, 7]),
            3 => sym_series(39, &[30, 15, 2]),
            4 => sym_series(27, &[24, 18, 8, 3]),
            5 => sym_series(33, &[30, 15, 5]),
            6 => sym_series(49, &[32, 10]),
            _ => sym_series(79, &[27]),
        },
        RootType::E8 => match i {
            1 => sym_series(92, &[64, 14]),
            2 => sym_series(64, &[56, 28, 8]),
            3 => sym_series(52, &[42, 35, 14, 7]),
            4 => sym_series(36, &[30, 30, 20, 15, 6, 5]),
            5 => {
                // printed as 20(c^4 + c^-3) + 10(c^4 + c^-4)
                let mut p = sym_series(40, &[40, 30]);
                p.add_term(20, 4);
                p.add_term(20, -3);
                p.add(&sym(10, 4)).add(&sym(4, 5))
            }
            6 => sym_series(54, &[48, 30, 16, 3]),
            7 => sym_series(82, &[54, 27, 2]),
            _ => sym_series(134, &[56, 1]),
        },
        RootType::F4 => match i {
            1 => sym_series(22, &[14, 1]),
            2 => sym_series(12, &[12, 6, 2]),
            3 => sym_series(12, &[6, 9, 2, 3]),
            _ => sym_series(22, &[8, 7]),
        },
        RootType::G2 => match i {
            1 => sym_series(4, &[2, 1, 2]),
            _ => sym_series(4, &[4, 1]),
        },
    };
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceCheck {
    pub i: usize,
    pub closed_form: LaurentPoly,
    pub enumerated: LaurentPoly,
}

impl TraceCheck {
    pub fn matches(&self) -> bool {
        self.closed_form == self.enumerated
    }

    /// `enumerated - closed_form`.
    pub fn difference(&self) -> LaurentPoly {
        self.enumerated.sub(&self.closed_form)
    }
}

/// Enumerated against closed-form trace for every `i`; the enumeration is authoritative.
pub fn verify_traces(t: RootType, l: usize) -> Result<Vec<TraceCheck>> {
    validate(t, l)?;
    (1..=l)
        .map(|i| {
            Ok(TraceCheck {
                i,
                closed_form: trace_closed_form(t, l, i)?,
                enumerated: trace_enumerated(t, l, i)?,
            })
        })
        .collect()
}

/// Every type and rank covered by the closed forms, with classical ranks up to `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<(RootType, usize)> {
    let mut out = Vec::new();
    for (t, lo) in [(RootType::A, 1), (RootType::B, 2), (RootType::C, 3), (RootType::D, 4)] {
        out.extend((lo..=max_rank).map(|l| (t, l)));
    }
    out.extend([(RootType::E6, 6), (RootType::E7, 7), (RootType::E8, 8), (RootType::F4, 4), (RootType::G2, 2)]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_matrices() {
        assert_eq!(cartan_matrix(RootType::A, 2).unwrap(), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(cartan_matrix(RootType::G2, 2).unwrap(), vec![vec![2, -1], vec![-3, 2]]);
        assert!(cartan_matrix(RootType::D, 3).is_err());
        assert!(cartan_matrix(RootType::E7, 6).is_err());
    }

    #[test]
    fn root_counts() {
        let count = |t, l| enumerate_roots(t, l).unwrap().roots.len();
        assert_eq!(count(RootType::A, 1), 2);
        assert_eq!(count(RootType::A, 4), 20);
        assert_eq!(count(RootType::B, 3), 18);
        assert_eq!(count(RootType::C, 4), 32);
        assert_eq!(count(RootType::D, 5), 40);
        assert_eq!(count(RootType::E6, 6), 72);
        assert_eq!(count(RootType::E7, 7), 126);
        assert_eq!(count(RootType::E8, 8), 240);
        assert_eq!(count(RootType::F4, 4), 48);
        assert_eq!(count(RootType::G2, 2), 12);
    }

    #[test]
    fn g2_positive_roots() {
        let rs = enumerate_roots(RootType::G2, 2).unwrap();
        let mut m1: Vec<i64> = rs.positive_roots().map(|r| r[0]).collect();
        m1.sort_unstable();
        assert_eq!(m1, vec![0, 1, 1, 2, 3, 3]);
    }

    #[test]
    fn small_traces() {
        let a1 = trace_enumerated(RootType::A, 1, 1).unwrap();
        assert_eq!(a1, sym_series(1, &[1]));
        assert_eq!(a1, trace_closed_form(RootType::A, 1, 1).unwrap());
        assert_eq!(trace_enumerated(RootType::B, 2, 1).unwrap(), sym_series(4, &[3]));
        assert_eq!(trace_enumerated(RootType::B, 2, 2).unwrap(), sym_series(4, &[2, 1]));
        assert!(trace_enumerated(RootType::B, 2, 3).is_err());
    }

    #[test]
    fn parse_types() {
        assert_eq!("e8".parse::<RootType>().unwrap(), RootType::E8);
        assert!("H3".parse::<RootType>().is_err());
    }
}
