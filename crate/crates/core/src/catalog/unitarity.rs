use std::fmt;

use serde::{Serialize, Serializer};

use super::{build_lambda, GroupSpec, HighestWeightDatum};
use crate::error::{Error, Result};
use crate::rational::{q, Rational};

/// Root-system type of `Q(λ₀)` or `R(λ₀)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternType {
    /// `su(p, q)`.
    Su(usize, usize),
    /// `sp(n, R)`.
    Sp(usize),
    /// `so*(2p)`.
    SoStar(usize),
    /// `so(2, 2n-1)`.
    SoOdd(usize),
    /// `so(2, 2n-2)`.
    SoEven(usize),
    E6,
    E7,
}

impl fmt::Display for PatternType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatternType::Su(p, q) => write!(f, "su({p},{q})"),
            PatternType::Sp(n) => write!(f, "sp({n},R)"),
            PatternType::SoStar(p) => write!(f, "so*({})", 2 * p),
            PatternType::SoOdd(n) => write!(f, "so(2,{})", 2 * n - 1),
            PatternType::SoEven(n) => write!(f, "so(2,{})", 2 * n - 2),
            PatternType::E6 => f.write_str("e6(-14)"),
            PatternType::E7 => f.write_str("e7(-25)"),
        }
    }
}

impl Serialize for PatternType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `z ≤ below`, or `z ∈ step·ℤ` with `z ≤ max`, or `z` one of `points`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitaryRange {
    pub below: Rational,
    pub lattice: Option<(Rational, Rational)>,
    pub points: Vec<Rational>,
}

impl UnitaryRange {
    fn below(b: impl Into<Rational>) -> Self {
        UnitaryRange { below: b.into(), lattice: None, points: Vec::new() }
    }

    fn with_points(mut self, pts: impl IntoIterator<Item = i64>) -> Self {
        self.points = pts.into_iter().map(Rational::int).collect();
        self
    }

    pub fn contains(&self, z: Rational) -> bool {
        z <= self.below
            || self.lattice.is_some_and(|(step, max)| (z / step).is_integer() && z <= max)
            || self.points.contains(&z)
    }
}

impl fmt::Display for UnitaryRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z <= {}", self.below)?;
        if let Some((step, max)) = self.lattice {
            if step == Rational::ONE {
                write!(f, " or (z in Z and z <= {max})")?;
            } else {
                write!(f, " or (z in {step}Z and z <= {max})")?;
            }
        }
        if !self.points.is_empty() {
            let pts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
            write!(f, " or z in {{{}}}", pts.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitarityProfile {
    pub q_type: PatternType,
    pub r_type: PatternType,
    pub unitary_range: UnitaryRange,
}

impl UnitarityProfile {
    fn same(t: PatternType, range: UnitaryRange) -> Self {
        UnitarityProfile { q_type: t, r_type: t, unitary_range: range }
    }
}

fn run_from(xs: &[Rational], start: usize) -> usize {
    xs[start..].iter().take_while(|&&x| x == xs[start]).count()
}

fn unclassified(l: &[Rational]) -> Error {
    let s: Vec<String> = l.iter().map(|x| x.to_string()).collect();
    Error::UnclassifiedPattern(s.join(","))
}

/// Reads `Q(λ₀)`, `R(λ₀)` and the unitary `z`-range off the entries of a
/// normalized, compact-dominant `λ₀`.
pub fn unitarity_profile(g: GroupSpec, lambda0: &[Rational]) -> Result<UnitarityProfile> {
    let l = lambda0;
    Ok(match g {
        GroupSpec::Su { p, q: qq } => {
            let n = p + qq;
            let pp = run_from(&l[..p], 0);
            let tail: Vec<Rational> = l[p..].iter().rev().copied().collect();
            let qp = run_from(&tail, 0);
            let mut range = UnitaryRange::below(pp.max(qp));
            range.lattice = Some((Rational::ONE, Rational::from(pp + qp) - 1));
            debug_assert!(pp <= p && qp <= qq && n == l.len());
            UnitarityProfile::same(PatternType::Su(pp, qp), range)
        }
        GroupSpec::Sp { n } => {
            let top = Rational::int(-(n as i64));
            if l[0] != top {
                return Err(unclassified(l));
            }
            let qq = run_from(l, 0);
            let r = if qq < n && l[qq] == top - 1 { qq + run_from(l, qq) } else { qq };
            let range = UnitaryRange {
                below: Rational::from(r + 1) / 2,
                lattice: Some((Rational::HALF, Rational::from(qq + r) / 2)),
                points: Vec::new(),
            };
            UnitarityProfile { q_type: PatternType::Sp(qq), r_type: PatternType::Sp(r), unitary_range: range }
        }
        GroupSpec::SoStar { .. } => {
            if l[0] > l[1] {
                let qq = run_from(l, 1);
                UnitarityProfile::same(PatternType::Su(1, qq), UnitaryRange::below(qq))
            } else {
                let p = run_from(l, 0);
                if p < 3 {
                    return Err(unclassified(l));
                }
                let p = p as i64;
                let below = if p % 2 == 1 { p } else { p - 1 };
                let range = UnitaryRange::below(below).with_points((0..=p / 2 - 2).map(|j| 2 * p - 3 - 2 * j));
                UnitarityProfile::same(PatternType::SoStar(p as usize), range)
            }
        }
        GroupSpec::SoOdd { n } => {
            let tail = &l[1..];
            let p = run_from(tail, 0);
            let ni = n as i64;
            if p == n - 1 && tail[0].is_zero() {
                let range = UnitaryRange::below(q(2 * ni - 1, 2)).with_points([2 * ni - 2]);
                UnitarityProfile::same(PatternType::SoOdd(n), range)
            } else if p == n - 1 && tail[0] == Rational::HALF {
                UnitarityProfile {
                    q_type: PatternType::Su(1, n - 1),
                    r_type: PatternType::SoOdd(n),
                    unitary_range: UnitaryRange::below(q(2 * ni - 1, 2)),
                }
            } else {
                UnitarityProfile::same(PatternType::Su(1, p), UnitaryRange::below(p))
            }
        }
        GroupSpec::SoEven { n } => {
            let mut tail: Vec<Rational> = l[1..].to_vec();
            let last = tail.len() - 1;
            tail[last] = tail[last].abs();
            let p = run_from(&tail, 0);
            if tail[0].is_zero() {
                let ni = n as i64;
                let range = UnitaryRange::below(ni - 1).with_points([2 * ni - 3]);
                UnitarityProfile::same(PatternType::SoEven(n), range)
            } else {
                UnitarityProfile::same(PatternType::Su(1, p), UnitaryRange::below(p))
            }
        }
        GroupSpec::E6 => {
            let o2 = (l[0] + l[1]).is_zero();
            let o3 = l[0] == l[1];
            let o4 = l[1] == l[2];
            let o5 = l[2] == l[3];
            let o6 = l[3] == l[4];
            let su = |p: usize| UnitarityProfile::same(PatternType::Su(1, p), UnitaryRange::below(p));
            if !o2 {
                su(1)
            } else if !o4 {
                su(2)
            } else {
                match (o3, o5, o5 && o6) {
                    (false, false, _) => su(3),
                    (true, false, _) => su(4),
                    (false, true, false) => su(4),
                    (false, true, true) => su(5),
                    (true, true, false) => {
                        UnitarityProfile::same(PatternType::SoEven(5), UnitaryRange::below(4).with_points([7]))
                    }
                    (true, true, true) => {
                        UnitarityProfile::same(PatternType::E6, UnitaryRange::below(8).with_points([11]))
                    }
                }
            }
        }
        GroupSpec::E7 => {
            let a1: Rational = l[0] - l[1..7].iter().copied().sum::<Rational>() + l[7];
            let o1 = a1.is_zero();
            let o2 = (l[0] + l[1]).is_zero();
            let o3 = l[0] == l[1];
            let o4 = l[1] == l[2];
            let o5 = l[2] == l[3];
            let o6 = l[3] == l[4];
            let su = |p: usize| UnitarityProfile::same(PatternType::Su(1, p), UnitaryRange::below(p));
            if !o1 {
                su(1)
            } else if !o3 {
                su(2)
            } else if !o4 {
                su(3)
            } else {
                match (o2, o5, o5 && o6) {
                    (false, false, _) => su(4),
                    (true, false, _) => su(5),
                    (false, true, false) => su(5),
                    (false, true, true) => su(6),
                    (true, true, false) => {
                        UnitarityProfile::same(PatternType::SoEven(6), UnitaryRange::below(5).with_points([9]))
                    }
                    (true, true, true) => {
                        UnitarityProfile::same(PatternType::E7, UnitaryRange::below(9).with_points([13, 17]))
                    }
                }
            }
        }
    })
}

/// The detected patterns and whether `L(λ)` is unitarizable.
pub fn unitarity(g: GroupSpec, datum: &HighestWeightDatum) -> Result<(UnitarityProfile, bool)> {
    build_lambda(g, &datum.lambda0, datum.z)?;
    let profile = unitarity_profile(g, datum.lambda0.entries())?;
    let ok = profile.unitary_range.contains(datum.z);
    Ok((profile, ok))
}
