//! The seven Hermitian families: constants, the `λ = λ₀ + zξ + ρ`
//! parametrization, compact dominance and unitarity patterns.

mod roots;
mod unitarity;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::orbit::ExceptionalType;
use crate::partition::ClassicalAlgebra;
use crate::rational::{q, Rational};
use crate::tableau::WeightSeq;

pub use roots::{dot, exceptional_root_data, highest_coroot, CompactRoot, ExceptionalRootData};
pub use unitarity::{unitarity, PatternType, UnitarityProfile, UnitaryRange};

/// A real group `G` with `G/K` Hermitian symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Su { p: usize, q: usize },
    Sp { n: usize },
    /// `SO*(2n)`.
    SoStar { n: usize },
    /// `SO(2, 2n-1)`.
    SoOdd { n: usize },
    /// `SO(2, 2n-2)`.
    SoEven { n: usize },
    E6,
    E7,
}

/// The complexified Lie algebra of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Classical(ClassicalAlgebra),
    Exceptional(ExceptionalType),
}

impl GroupSpec {
    pub fn su(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::ParameterRange(format!("SU(p,q) needs p, q >= 1, got ({p},{q})")));
        }
        Ok(GroupSpec::Su { p, q })
    }

    pub fn sp(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::ParameterRange(format!("Sp(n,R) needs n >= 2, got {n}")));
        }
        Ok(GroupSpec::Sp { n })
    }

    pub fn so_star(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::ParameterRange(format!("SO*(2n) needs n >= 4, got {n}")));
        }
        Ok(GroupSpec::SoStar { n })
    }

    pub fn so_odd(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::ParameterRange(format!("SO(2,2n-1) needs n >= 3, got {n}")));
        }
        Ok(GroupSpec::SoOdd { n })
    }

    pub fn so_even(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::ParameterRange(format!("SO(2,2n-2) needs n >= 4, got {n}")));
        }
        Ok(GroupSpec::SoEven { n })
    }

    /// Number of coordinates of a weight.
    pub fn weight_len(&self) -> usize {
        match *self {
            GroupSpec::Su { p, q } => p + q,
            GroupSpec::Sp { n } | GroupSpec::SoStar { n } | GroupSpec::SoOdd { n } | GroupSpec::SoEven { n } => n,
            GroupSpec::E6 | GroupSpec::E7 => 8,
        }
    }

    /// Rank of the complexified Lie algebra.
    pub fn lie_rank(&self) -> usize {
        match *self {
            GroupSpec::Su { p, q } => p + q - 1,
            GroupSpec::Sp { n } | GroupSpec::SoStar { n } | GroupSpec::SoOdd { n } | GroupSpec::SoEven { n } => n,
            GroupSpec::E6 => 6,
            GroupSpec::E7 => 7,
        }
    }

    pub fn ambient(&self) -> Ambient {
        match *self {
            GroupSpec::Su { p, q } => Ambient::Classical(ClassicalAlgebra::a(p + q)),
            GroupSpec::Sp { n } => Ambient::Classical(ClassicalAlgebra::c(n)),
            GroupSpec::SoStar { n } | GroupSpec::SoEven { n } => Ambient::Classical(ClassicalAlgebra::d(n)),
            GroupSpec::SoOdd { n } => Ambient::Classical(ClassicalAlgebra::b(n)),
            GroupSpec::E6 => Ambient::Exceptional(ExceptionalType::E6),
            GroupSpec::E7 => Ambient::Exceptional(ExceptionalType::E7),
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self, GroupSpec::E6 | GroupSpec::E7)
    }

    /// The real rank `r`.
    pub fn real_rank(&self) -> usize {
        match *self {
            GroupSpec::Su { p, q } => p.min(q),
            GroupSpec::Sp { n } => n,
            GroupSpec::SoStar { n } => n / 2,
            GroupSpec::SoOdd { .. } | GroupSpec::SoEven { .. } | GroupSpec::E6 => 2,
            GroupSpec::E7 => 3,
        }
    }

    /// The command-line form, e.g. `su 2 1`.
    pub fn spec_string(&self) -> String {
        match *self {
            GroupSpec::Su { p, q } => format!("su {p} {q}"),
            GroupSpec::Sp { n } => format!("sp {n}"),
            GroupSpec::SoStar { n } => format!("so_star {n}"),
            GroupSpec::SoOdd { n } => format!("so_odd {n}"),
            GroupSpec::SoEven { n } => format!("so_even {n}"),
            GroupSpec::E6 => "e6".into(),
            GroupSpec::E7 => "e7".into(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Su { p, q } => write!(f, "SU({p},{q})"),
            GroupSpec::Sp { n } => write!(f, "Sp({n},R)"),
            GroupSpec::SoStar { n } => write!(f, "SO*({})", 2 * n),
            GroupSpec::SoOdd { n } => write!(f, "SO(2,{})", 2 * n - 1),
            GroupSpec::SoEven { n } => write!(f, "SO(2,{})", 2 * n - 2),
            GroupSpec::E6 => f.write_str("E6(-14)"),
            GroupSpec::E7 => f.write_str("E7(-25)"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let num = |w: &str| -> Result<usize> {
            w.parse().map_err(|_| Error::Parse(format!("expected a nonnegative integer, got `{w}`")))
        };
        let bad = || Error::Parse(format!("unknown group `{s}` (expected su P Q, sp N, so_star N, so_odd N, so_even N, e6, e7)"));
        match words.as_slice() {
            [f, p, q] if f.eq_ignore_ascii_case("su") => GroupSpec::su(num(p)?, num(q)?),
            [f, n] => {
                let n = num(n)?;
                match f.to_ascii_lowercase().as_str() {
                    "sp" => GroupSpec::sp(n),
                    "so_star" => GroupSpec::so_star(n),
                    "so_odd" => GroupSpec::so_odd(n),
                    "so_even" => GroupSpec::so_even(n),
                    _ => Err(bad()),
                }
            }
            [f] if f.eq_ignore_ascii_case("e6") => Ok(GroupSpec::E6),
            [f] if f.eq_ignore_ascii_case("e7") => Ok(GroupSpec::E7),
            _ => Err(bad()),
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.spec_string())
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyConstants {
    pub r: usize,
    pub c: Rational,
    /// `(ρ, β∨) = h∨ - 1`.
    pub h_check_minus_1: i64,
    pub rho: WeightSeq,
    /// Absent for `E7`.
    pub xi: Option<WeightSeq>,
}

impl FamilyConstants {
    /// `z_k = (ρ, β∨) - kc`.
    pub fn z_k(&self, k: usize) -> Rational {
        Rational::int(self.h_check_minus_1) - self.c * k as i64
    }

    /// `dim O_k = k(h∨-1) - k(k-1)c`.
    pub fn dim_o_k(&self, k: usize) -> Rational {
        let k = k as i64;
        Rational::int(k * self.h_check_minus_1) - self.c * (k * (k - 1))
    }
}

pub fn constants(g: GroupSpec) -> FamilyConstants {
    let r = g.real_rank();
    let ints = |xs: Vec<i64>| WeightSeq::from_ints(&xs);
    match g {
        GroupSpec::Su { p, q: qq } => {
            let n = (p + qq) as i64;
            let rho = (0..n).map(|i| q(n - 1 - 2 * i, 2)).collect();
            let xi = (0..n).map(|i| if i < p as i64 { q(qq as i64, n) } else { q(-(p as i64), n) }).collect();
            FamilyConstants { r, c: Rational::ONE, h_check_minus_1: n - 1, rho, xi: Some(xi) }
        }
        GroupSpec::Sp { n } => {
            let n = n as i64;
            FamilyConstants {
                r,
                c: Rational::HALF,
                h_check_minus_1: n,
                rho: ints((1..=n).rev().collect()),
                xi: Some(ints(vec![1; n as usize])),
            }
        }
        GroupSpec::SoStar { n } => {
            let n = n as i64;
            FamilyConstants {
                r,
                c: Rational::int(2),
                h_check_minus_1: 2 * n - 3,
                rho: ints((0..n).rev().collect()),
                xi: Some(WeightSeq(vec![Rational::HALF; n as usize])),
            }
        }
        GroupSpec::SoOdd { n } => {
            let n = n as i64;
            FamilyConstants {
                r,
                c: q(2 * n - 3, 2),
                h_check_minus_1: 2 * n - 2,
                rho: (0..n).rev().map(|i| q(2 * i + 1, 2)).collect(),
                xi: Some(unit(n as usize, 0)),
            }
        }
        GroupSpec::SoEven { n } => {
            let n = n as i64;
            FamilyConstants {
                r,
                c: Rational::int(n - 2),
                h_check_minus_1: 2 * n - 3,
                rho: ints((0..n).rev().collect()),
                xi: Some(unit(n as usize, 0)),
            }
        }
        GroupSpec::E6 => FamilyConstants {
            r,
            c: Rational::int(3),
            h_check_minus_1: 11,
            rho: ints(vec![0, 1, 2, 3, 4, -4, -4, 4]),
            xi: Some(WeightSeq(vec![
                Rational::ZERO,
                Rational::ZERO,
                Rational::ZERO,
                Rational::ZERO,
                Rational::ZERO,
                q(-2, 3),
                q(-2, 3),
                q(2, 3),
            ])),
        },
        GroupSpec::E7 => FamilyConstants {
            r,
            c: Rational::int(4),
            h_check_minus_1: 17,
            rho: WeightSeq(
                [0, 1, 2, 3, 4, 5]
                    .iter()
                    .map(|&x| Rational::int(x))
                    .chain([q(-17, 2), q(17, 2)])
                    .collect(),
            ),
            xi: None,
        },
    }
}

fn unit(n: usize, i: usize) -> WeightSeq {
    let mut v = vec![Rational::ZERO; n];
    v[i] = Rational::ONE;
    WeightSeq(v)
}

/// `z_0 > z_1 > ... > z_r`.
pub fn zk_points(g: GroupSpec) -> Vec<Rational> {
    let c = constants(g);
    (0..=c.r).map(|k| c.z_k(k)).collect()
}

/// A highest weight in EHW form. `lambda` is `None` only for `E7`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HighestWeightDatum {
    pub lambda0: WeightSeq,
    pub z: Rational,
    pub lambda: Option<WeightSeq>,
}

fn check_len(g: GroupSpec, x: &WeightSeq) -> Result<()> {
    if x.len() != g.weight_len() {
        return Err(Error::LengthMismatch { group: g.to_string(), got: x.len(), expected: g.weight_len() });
    }
    Ok(())
}

/// `(λ, β∨)`.
pub fn z_of(g: GroupSpec, lambda: &WeightSeq) -> Result<Rational> {
    check_len(g, lambda)?;
    Ok(dot(lambda.entries(), &highest_coroot(g)))
}

fn normalization_detail(g: GroupSpec, lambda0: &WeightSeq) -> String {
    let h = constants(g).h_check_minus_1;
    let l = lambda0.entries();
    match g {
        GroupSpec::Su { .. } => format!("lambda_1 - lambda_n = -{h} required, got {}", l[0] - l[l.len() - 1]),
        GroupSpec::Sp { .. } => format!("lambda_1 = -{h} required, got {}", l[0]),
        GroupSpec::SoStar { .. } | GroupSpec::SoOdd { .. } | GroupSpec::SoEven { .. } => {
            format!("lambda_1 + lambda_2 = -{h} required, got {}", l[0] + l[1])
        }
        GroupSpec::E6 => format!("(lambda0, beta) = -11 required, got {}", dot(l, &highest_coroot(g))),
        GroupSpec::E7 => format!("lambda_8 = -17/2 required, got {}", l[7]),
    }
}

/// Checks that `x` lies in the span of the root system (E-types only).
fn check_subspace(g: GroupSpec, x: &WeightSeq) -> Result<()> {
    let l = x.entries();
    let ok = match g {
        GroupSpec::E6 => l[5] == l[6] && l[6] == -l[7],
        GroupSpec::E7 => l[6] == -l[7],
        _ => true,
    };
    if !ok {
        let detail = match g {
            GroupSpec::E6 => "coordinates must satisfy lambda_6 = lambda_7 = -lambda_8",
            _ => "coordinates must satisfy lambda_7 = -lambda_8",
        };
        return Err(Error::Normalization { group: g.to_string(), detail: detail.into() });
    }
    Ok(())
}

/// Validates `λ₀` and forms `λ = λ₀ + zξ + ρ`.
pub fn build_lambda(g: GroupSpec, lambda0: &WeightSeq, z: Rational) -> Result<HighestWeightDatum> {
    check_len(g, lambda0)?;
    check_subspace(g, lambda0)?;
    let c = constants(g);
    if dot(lambda0.entries(), &highest_coroot(g)) != Rational::int(-c.h_check_minus_1) {
        return Err(Error::Normalization { group: g.to_string(), detail: normalization_detail(g, lambda0) });
    }
    for root in roots::compact_simple_roots(g) {
        let v = root.coroot_pairing(lambda0.entries());
        if !(v.is_integer() && !v.is_negative()) {
            return Err(Error::NotDominant {
                group: g.to_string(),
                detail: format!("(lambda0, {root}) = {v} must be a nonnegative integer"),
            });
        }
    }
    let lambda = c.xi.as_ref().map(|xi| {
        lambda0
            .iter()
            .zip(xi.iter())
            .zip(c.rho.iter())
            .map(|((&l, &x), &r)| l + z * x + r)
            .collect()
    });
    Ok(HighestWeightDatum { lambda0: lambda0.clone(), z, lambda })
}

/// Inverts [`build_lambda`]: `z = (λ, β∨)` and `λ₀ = λ - zξ - ρ`.
pub fn datum_from_lambda(g: GroupSpec, lambda: &WeightSeq) -> Result<HighestWeightDatum> {
    check_len(g, lambda)?;
    let c = constants(g);
    let Some(xi) = c.xi.as_ref() else {
        return Err(Error::Unsupported(format!("{g} takes (lambda0, z) input, not a raw weight")));
    };
    check_subspace(g, lambda)?;
    let z = z_of(g, lambda)?;
    let lambda0: WeightSeq = lambda
        .iter()
        .zip(xi.iter())
        .zip(c.rho.iter())
        .map(|((&l, &x), &r)| l - z * x - r)
        .collect();
    let d = build_lambda(g, &lambda0, z)?;
    debug_assert_eq!(d.lambda.as_ref(), Some(lambda));
    Ok(d)
}

/// `(λ, α∨) ∈ ℤ_{>0}` for every compact simple root `α`.
pub fn validate_dominance(g: GroupSpec, lambda: &WeightSeq) -> bool {
    if lambda.len() != g.weight_len() {
        return false;
    }
    roots::compact_simple_roots(g).iter().all(|root| {
        let v = root.coroot_pairing(lambda.entries());
        v.is_integer() && v.is_positive()
    })
}
