use std::fmt;

use super::GroupSpec;
use crate::orbit::{orbit_table, BalaCarter, ExceptionalType};
use crate::rational::{q, Rational};

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactRoot {
    pub name: String,
    pub vector: Vec<Rational>,
}

impl CompactRoot {
    /// `(x, α∨) = 2(x, α)/(α, α)`.
    pub fn coroot_pairing(&self, x: &[Rational]) -> Rational {
        dot(x, &self.vector) * 2 / dot(&self.vector, &self.vector)
    }
}

impl fmt::Display for CompactRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn e(len: usize, coeffs: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; len];
    for &(i, c) in coeffs {
        v[i] = Rational::int(c);
    }
    v
}

fn half(signs: [i64; 8]) -> Vec<Rational> {
    signs.iter().map(|&s| q(s, 2)).collect()
}

fn diff(len: usize, i: usize) -> CompactRoot {
    CompactRoot { name: format!("e{}-e{}", i + 1, i + 2), vector: e(len, &[(i, 1), (i + 1, -1)]) }
}

/// Simple roots of `k` in the coordinates used for weights.
pub(crate) fn compact_simple_roots(g: GroupSpec) -> Vec<CompactRoot> {
    let len = g.weight_len();
    match g {
        GroupSpec::Su { p, .. } => (0..len - 1).filter(|&i| i + 1 != p).map(|i| diff(len, i)).collect(),
        GroupSpec::Sp { n } | GroupSpec::SoStar { n } => (0..n - 1).map(|i| diff(len, i)).collect(),
        GroupSpec::SoOdd { n } => {
            let mut v: Vec<_> = (1..n - 1).map(|i| diff(len, i)).collect();
            v.push(CompactRoot { name: format!("e{n}"), vector: e(len, &[(n - 1, 1)]) });
            v
        }
        GroupSpec::SoEven { n } => {
            let mut v: Vec<_> = (1..n - 1).map(|i| diff(len, i)).collect();
            v.push(CompactRoot { name: format!("e{}+e{}", n - 1, n), vector: e(len, &[(n - 2, 1), (n - 1, 1)]) });
            v
        }
        GroupSpec::E6 | GroupSpec::E7 => {
            let mut v = Vec::new();
            if g == GroupSpec::E7 {
                v.push(CompactRoot { name: "alpha1".into(), vector: half([1, -1, -1, -1, -1, -1, -1, 1]) });
            }
            v.push(CompactRoot { name: "alpha2".into(), vector: e(8, &[(0, 1), (1, 1)]) });
            for i in 0..4 {
                v.push(CompactRoot {
                    name: format!("alpha{}", i + 3),
                    vector: e(8, &[(i + 1, 1), (i, -1)]),
                });
            }
            v
        }
    }
}

/// `β∨` for the highest root `β`.
pub fn highest_coroot(g: GroupSpec) -> Vec<Rational> {
    let len = g.weight_len();
    match g {
        GroupSpec::Su { .. } => e(len, &[(0, 1), (len - 1, -1)]),
        GroupSpec::Sp { .. } => e(len, &[(0, 1)]),
        GroupSpec::SoStar { .. } | GroupSpec::SoOdd { .. } | GroupSpec::SoEven { .. } => e(len, &[(0, 1), (1, 1)]),
        GroupSpec::E6 => half([1, 1, 1, 1, 1, -1, -1, 1]),
        GroupSpec::E7 => e(8, &[(6, -1), (7, 1)]),
    }
}

/// The root sets that decide `k(λ)` for `E6` and `E7` (unused sets are empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalRootData {
    pub s1: Vec<Vec<Rational>>,
    pub s2: Vec<Vec<Rational>>,
    pub s3: Vec<Vec<Rational>>,
    pub orbit_table: &'static [(BalaCarter, u64, bool)],
}

pub fn exceptional_root_data(g: ExceptionalType) -> ExceptionalRootData {
    match g {
        ExceptionalType::E6 => ExceptionalRootData {
            s1: vec![half([1, 1, 1, -1, -1, -1, -1, 1]), half([-1, -1, -1, 1, -1, -1, -1, 1])],
            s2: vec![half([1, -1, -1, -1, -1, -1, -1, 1])],
            s3: vec![],
            orbit_table: orbit_table(g),
        },
        ExceptionalType::E7 => ExceptionalRootData {
            s1: vec![
                half([1, -1, -1, 1, -1, 1, -1, 1]),
                half([-1, 1, 1, -1, -1, 1, -1, 1]),
                e(8, &[(4, 1), (5, 1)]),
            ],
            s2: vec![e(8, &[(0, 1), (5, 1)]), e(8, &[(0, -1), (5, 1)])],
            s3: vec![e(8, &[(4, -1), (5, 1)])],
            orbit_table: orbit_table(g),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::constants;

    #[test]
    fn s_roots_have_norm_two() {
        for g in [ExceptionalType::E6, ExceptionalType::E7] {
            let d = exceptional_root_data(g);
            for v in d.s1.iter().chain(&d.s2).chain(&d.s3) {
                assert_eq!(dot(v, v), Rational::int(2));
            }
        }
    }

    #[test]
    fn rho_pairings_with_s_roots() {
        let rho6 = constants(GroupSpec::E6).rho;
        let d = exceptional_root_data(ExceptionalType::E6);
        assert!(d.s1.iter().all(|b| dot(rho6.entries(), b) == Rational::int(4)));
        assert_eq!(dot(rho6.entries(), &d.s2[0]), Rational::ONE);
        let rho7 = constants(GroupSpec::E7).rho;
        let d = exceptional_root_data(ExceptionalType::E7);
        assert!(d.s1.iter().all(|b| dot(rho7.entries(), b) == Rational::int(9)));
        assert!(d.s2.iter().all(|b| dot(rho7.entries(), b) == Rational::int(5)));
        assert_eq!(dot(rho7.entries(), &d.s3[0]), Rational::ONE);
    }

    #[test]
    fn xi_pairs_to_one_with_noncompact_roots() {
        let xi = constants(GroupSpec::E6).xi.unwrap();
        let d = exceptional_root_data(ExceptionalType::E6);
        for v in d.s1.iter().chain(&d.s2) {
            assert_eq!(dot(xi.entries(), v), Rational::ONE);
        }
    }
}
