//! Annihilator varieties, associated-variety ranks and GK dimensions.
//!
//! Two independent paths: the closed forms per family ([`closed_form`]) and
//! the general congruence-class pipeline ([`bmw_pipeline`]). Neither calls
//! the other.

use serde::{Deserialize, Serialize};

use crate::catalog::{
    constants, datum_from_lambda, dot, exceptional_root_data, unitarity, Ambient, GroupSpec, HighestWeightDatum,
};
use crate::error::{Error, Result};
use crate::orbit::{BalaCarter, ExceptionalType, OrbitDescriptor};
use crate::partition::{
    collapse, column_union, double, special_closure, AlgebraKind, ClassicalAlgebra, ClosureMode,
    Numeral, Partition,
};
use crate::rational::Rational;
use crate::tableau::{decompose_classes, mirror_extend, rs_tableau, tilde_normalize, ClassMode, WeightSeq};

/// `q₂` of `P(x)` with its split `(q₂ᵉᵛ, q₂ᵒᵈ)`: box `(i, 2)` is even iff `i` is.
fn second_column(x: &WeightSeq) -> (usize, usize, usize) {
    let q2 = rs_tableau(x).q2();
    (q2, q2 / 2, q2.div_ceil(2))
}

fn raw_lambda(g: GroupSpec, datum: &HighestWeightDatum) -> Result<&WeightSeq> {
    datum
        .lambda
        .as_ref()
        .ok_or_else(|| Error::Unsupported(format!("{g} has no coordinate form of lambda")))
}

fn classical_algebra(g: GroupSpec) -> Result<ClassicalAlgebra> {
    match g.ambient() {
        Ambient::Classical(a) => Ok(a),
        Ambient::Exceptional(_) => Err(Error::Unsupported(format!("{g} is exceptional"))),
    }
}

fn all_differences_integral(x: &WeightSeq) -> bool {
    x.iter().all(|&t| (t - x[0]).is_integer())
}

/// `[2^a, 1^b]` on `size` boxes.
fn two_one(a: usize, size: usize) -> Partition {
    Partition::from_exponents(&[(2, a), (1, size - 2 * a)])
}

/// Where the closed form leaves the range of valid partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    /// The exponent of `2` the formula asks for.
    pub exponent: usize,
    /// The formula's `k(λ)`.
    pub k_formula: usize,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub orbit: OrbitDescriptor,
    pub boundary: Option<Boundary>,
}

fn e_pairings(g: ExceptionalType, lambda0: &WeightSeq) -> [Vec<Rational>; 3] {
    let d = exceptional_root_data(g);
    let neg = |set: &[Vec<Rational>]| set.iter().map(|b| -dot(lambda0.entries(), b)).collect::<Vec<_>>();
    [neg(&d.s1), neg(&d.s2), neg(&d.s3)]
}

fn min(xs: &[Rational]) -> Rational {
    *xs.iter().min().expect("nonempty root set")
}

fn exceptional_label(g: ExceptionalType, datum: &HighestWeightDatum) -> BalaCarter {
    let z = datum.z;
    let [s1, s2, s3] = e_pairings(g, &datum.lambda0);
    match g {
        ExceptionalType::E6 => {
            let top = s2[0] - 1;
            let mid = min(&s1) - 4;
            if !z.is_integer() {
                BalaCarter::TwoA1
            } else if z > top {
                BalaCarter::Zero
            } else if z > mid {
                BalaCarter::A1
            } else {
                BalaCarter::TwoA1
            }
        }
        ExceptionalType::E7 => {
            let top = s3[0] - 1;
            let mid = min(&s2) - 5;
            let low = min(&s1) - 9;
            if !z.is_integer() {
                BalaCarter::ThreeA1Second
            } else if z > top {
                BalaCarter::Zero
            } else if z > mid {
                BalaCarter::A1
            } else if z > low {
                BalaCarter::TwoA1
            } else {
                BalaCarter::ThreeA1Second
            }
        }
    }
}

/// The closed-form annihilator variety, with boundary information.
pub fn closed_form(g: GroupSpec, datum: &HighestWeightDatum) -> Result<ClosedForm> {
    let plain = |orbit| Ok(ClosedForm { orbit, boundary: None });
    match g {
        GroupSpec::E6 | GroupSpec::E7 => {
            let Ambient::Exceptional(e) = g.ambient() else { unreachable!() };
            plain(OrbitDescriptor::exceptional(e, exceptional_label(e, datum))?)
        }
        GroupSpec::Su { p, q } => {
            let lambda = raw_lambda(g, datum)?;
            let n = p + q;
            let a = if all_differences_integral(lambda) { rs_tableau(lambda).q2() } else { p.min(q) };
            plain(OrbitDescriptor::classical(ClassicalAlgebra::a(n), two_one(a, n))?)
        }
        GroupSpec::Sp { n } => {
            let lambda = raw_lambda(g, datum)?;
            let t1 = lambda[0];
            let (q2, ev, od) = second_column(&mirror_extend(lambda));
            let a = if t1.is_integer() {
                2 * od
            } else if t1.is_half_odd() {
                2 * ev + 1
            } else {
                n
            };
            let alg = ClassicalAlgebra::c(n);
            if a > n {
                let note = format!(
                    "boundary weight: the closed form asks for [2^{a}] with q2 = {q2}, beyond the {n} pairs available; reported as [2^{n}]"
                );
                let orbit = OrbitDescriptor::classical(alg, two_one(n, 2 * n))?;
                return Ok(ClosedForm { orbit, boundary: Some(Boundary { exponent: a, k_formula: a, note }) });
            }
            plain(OrbitDescriptor::classical(alg, two_one(a, 2 * n))?)
        }
        GroupSpec::SoStar { n } => {
            let lambda = raw_lambda(g, datum)?;
            let alg = ClassicalAlgebra::d(n);
            if datum.z.is_integer() {
                let (_, ev, _) = second_column(&mirror_extend(lambda));
                plain(OrbitDescriptor::classical(alg, two_one(2 * ev, 2 * n))?)
            } else if n % 2 == 0 {
                plain(OrbitDescriptor::classical(alg, two_one(n, 2 * n))?)
            } else {
                plain(OrbitDescriptor::classical(alg, two_one(n - 1, 2 * n))?)
            }
        }
        GroupSpec::SoOdd { n } => {
            let l = datum.lambda0.entries();
            let z = datum.z;
            let gap = l[1] - l[0];
            let alg = ClassicalAlgebra::b(n);
            let size = 2 * n + 1;
            let part = if (z - gap).is_integer() && z >= gap {
                Partition::column(size)
            } else if z.is_half_odd() && z > -l[0] - Rational::from(n) + Rational::HALF {
                two_one(2, size)
            } else {
                Partition::from_exponents(&[(3, 1), (1, size - 3)])
            };
            plain(OrbitDescriptor::classical(alg, part)?)
        }
        GroupSpec::SoEven { n } => {
            let l = datum.lambda0.entries();
            let z = datum.z;
            let gap = l[1] - l[0];
            let alg = ClassicalAlgebra::d(n);
            let size = 2 * n;
            let lower = -l[n - 1].abs() - l[0] - Rational::from(n) + 1;
            let part = if (z - gap).is_integer() && z >= gap {
                Partition::column(size)
            } else if (z - gap).is_integer() && lower < z && z < gap {
                two_one(2, size)
            } else {
                Partition::from_exponents(&[(3, 1), (1, size - 3)])
            };
            plain(OrbitDescriptor::classical(alg, part)?)
        }
    }
}

/// `V(Ann L(λ))` by the closed form for the family.
pub fn annihilator_variety(g: GroupSpec, datum: &HighestWeightDatum) -> Result<OrbitDescriptor> {
    closed_form(g, datum).map(|c| c.orbit)
}

/// `k(λ)` with `V(L(λ)) = closure of O_k`, by the per-family rank formulas.
///
/// For `Sp(n,R)` at boundary weights this can exceed the real rank.
pub fn associated_k(g: GroupSpec, datum: &HighestWeightDatum) -> Result<usize> {
    let r = g.real_rank();
    match g {
        GroupSpec::E6 | GroupSpec::E7 => {
            if !datum.z.is_integer() {
                return Ok(r);
            }
            let e = if g == GroupSpec::E6 { ExceptionalType::E6 } else { ExceptionalType::E7 };
            let c = constants(g);
            let d = exceptional_root_data(e);
            // noncompact positive roots pair with ξ to 1 and all have norm 2
            let positive = |b: &Vec<Rational>| {
                (dot(datum.lambda0.entries(), b) + dot(c.rho.entries(), b) + datum.z).is_positive()
            };
            let hit = |set: &[Vec<Rational>]| set.iter().any(positive);
            Ok(match e {
                ExceptionalType::E6 => {
                    if hit(&d.s2) {
                        0
                    } else if hit(&d.s1) {
                        1
                    } else {
                        2
                    }
                }
                ExceptionalType::E7 => {
                    if hit(&d.s3) {
                        0
                    } else if hit(&d.s2) {
                        1
                    } else if hit(&d.s1) {
                        2
                    } else {
                        3
                    }
                }
            })
        }
        _ => {
            let t = raw_lambda(g, datum)?;
            Ok(match g {
                GroupSpec::Su { .. } => {
                    if all_differences_integral(t) {
                        rs_tableau(t).q2()
                    } else {
                        r
                    }
                }
                GroupSpec::Sp { n } => {
                    let (_, ev, od) = second_column(&mirror_extend(t));
                    if t[0].is_integer() {
                        2 * od
                    } else if t[0].is_half_odd() {
                        2 * ev + 1
                    } else {
                        n
                    }
                }
                GroupSpec::SoStar { n } => {
                    if t[0].is_half_integer() {
                        second_column(&mirror_extend(t)).1
                    } else {
                        n / 2
                    }
                }
                GroupSpec::SoOdd { .. } => {
                    let d = t[0] - t[1];
                    if d.is_integer() && t[0] > t[1] {
                        0
                    } else if d.is_half_odd() && t[0].is_positive() {
                        1
                    } else {
                        2
                    }
                }
                GroupSpec::SoEven { n } => {
                    let d = t[0] - t[1];
                    if d.is_integer() && t[0] > t[1] {
                        0
                    } else if d.is_integer() && -t[n - 1].abs() < t[0] && t[0] <= t[1] {
                        1
                    } else {
                        2
                    }
                }
                GroupSpec::E6 | GroupSpec::E7 => unreachable!(),
            })
        }
    }
}

/// `dim O_k = k(h∨-1) - k(k-1)c`.
pub fn k_orbit_dimension(g: GroupSpec, k: usize) -> Rational {
    constants(g).dim_o_k(k)
}

/// The piecewise GK dimension on the unitary range, keyed on `z` and the `z_k`.
pub fn unitary_gk_dimension(g: GroupSpec, z: Rational) -> Result<Rational> {
    let c = constants(g);
    let r = c.r;
    if z == c.z_k(0) {
        return Ok(Rational::ZERO);
    }
    if z < c.z_k(r - 1) {
        return Ok(c.z_k(r - 1) * r as i64);
    }
    for k in 1..r {
        if z == c.z_k(k) {
            return Ok(c.z_k(k - 1) * k as i64);
        }
    }
    Err(Error::Unsupported(format!(
        "z = {z} is neither a reduction point nor below z_{} = {} for {g}",
        r - 1,
        c.z_k(r - 1)
    )))
}

/// GK dimension of `L(λ)`: the piecewise unitary value when `L(λ)` is
/// unitarizable, `dim O_k(λ)` otherwise.
pub fn gk_dimension(g: GroupSpec, datum: &HighestWeightDatum) -> Result<Rational> {
    if let Ok((_, true)) = unitarity(g, datum) {
        return unitary_gk_dimension(g, datum.z);
    }
    Ok(k_orbit_dimension(g, associated_k(g, datum)?))
}

/// The congruence-class construction: RS shapes of the integral,
/// half-integral and generic parts, closed up, column-joined and collapsed.
pub fn bmw_pipeline(g: GroupSpec, lambda: &WeightSeq) -> Result<OrbitDescriptor> {
    let alg = classical_algebra(g)?;
    if lambda.len() != g.weight_len() {
        return Err(Error::LengthMismatch { group: g.to_string(), got: lambda.len(), expected: g.weight_len() });
    }
    let shape_of = |x: &WeightSeq| rs_tableau(x).shape();
    if alg.kind == AlgebraKind::A {
        let classes = decompose_classes(lambda, ClassMode::A);
        let shapes: Vec<Partition> = classes.generic.iter().map(shape_of).collect();
        return OrbitDescriptor::classical(alg, column_union(&shapes));
    }
    let classes = decompose_classes(lambda, ClassMode::BCD);
    let mirrored = |x: &Option<WeightSeq>| x.as_ref().map(|w| shape_of(&mirror_extend(w))).unwrap_or_default();
    let mode0 = match alg.kind {
        AlgebraKind::B => ClosureMode::B,
        AlgebraKind::C => ClosureMode::C,
        _ => ClosureMode::D,
    };
    let mode_half = if alg.kind == AlgebraKind::B { ClosureMode::C } else { ClosureMode::Cmet };
    let mut pieces = vec![
        special_closure(&mirrored(&classes.integral), mode0)?,
        special_closure(&mirrored(&classes.half_integral), mode_half)?,
    ];
    for class in &classes.generic {
        pieces.push(double(&shape_of(&tilde_normalize(class)?)));
    }
    OrbitDescriptor::classical(alg, collapse(&column_union(&pieces), alg)?)
}

/// Everything known about one highest weight module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "json::ReportJson", into = "json::ReportJson")]
pub struct ClassificationReport {
    pub group: GroupSpec,
    pub lambda: Option<WeightSeq>,
    pub lambda0: WeightSeq,
    pub z: Rational,
    pub k: usize,
    pub gk_dim: Rational,
    pub orbit: OrbitDescriptor,
    pub pipeline_orbit: Option<OrbitDescriptor>,
    pub unitary: bool,
    pub consistent: bool,
    pub notes: Vec<String>,
}

pub fn classify(g: GroupSpec, datum: &HighestWeightDatum) -> Result<ClassificationReport> {
    crate::catalog::build_lambda(g, &datum.lambda0, datum.z)?;
    let mut notes = Vec::new();
    let closed = closed_form(g, datum)?;
    if let Some(b) = &closed.boundary {
        notes.push(b.note.clone());
    }
    let k = associated_k(g, datum)?;
    let r = g.real_rank();
    if k > r {
        notes.push(format!("rank formula gives k = {k}, above the real rank {r}"));
    }
    let pipeline_orbit = match (&datum.lambda, g.is_exceptional()) {
        (Some(l), false) => Some(bmw_pipeline(g, l)?),
        _ => None,
    };
    let unitary = match unitarity(g, datum) {
        Ok((profile, u)) => {
            notes.push(format!(
                "Q = {}, R = {}, unitary for {}",
                profile.q_type, profile.r_type, profile.unitary_range
            ));
            u
        }
        Err(Error::UnclassifiedPattern(_)) => {
            notes.push("lambda0 matches no unitarity pattern; treated as not unitary".into());
            false
        }
        Err(e) => return Err(e),
    };
    let k_dim = k_orbit_dimension(g, k);
    let gk_dim = if unitary {
        let u = unitary_gk_dimension(g, datum.z)?;
        if u != k_dim {
            notes.push(format!("unitary GK dimension {u} differs from dim O_k = {k_dim}"));
        }
        u
    } else {
        k_dim
    };
    let doubled = Rational::from(closed.orbit.dimension() as usize) == k_dim * 2;
    if !doubled {
        notes.push(format!("orbit dimension {} is not 2 dim O_{k} = {}", closed.orbit.dimension(), k_dim * 2));
    }
    let agree = pipeline_orbit.as_ref().is_none_or(|p| *p == closed.orbit);
    if !agree {
        notes.push("closed form and pipeline disagree".into());
    }
    Ok(ClassificationReport {
        group: g,
        lambda: datum.lambda.clone(),
        lambda0: datum.lambda0.clone(),
        z: datum.z,
        k,
        gk_dim,
        orbit: closed.orbit,
        pipeline_orbit,
        unitary,
        consistent: doubled && agree,
        notes,
    })
}

/// [`classify`] for a raw weight `λ`.
pub fn classify_lambda(g: GroupSpec, lambda: &WeightSeq) -> Result<ClassificationReport> {
    classify(g, &datum_from_lambda(g, lambda)?)
}

mod json {
    use super::*;

    #[derive(Serialize, Deserialize)]
    pub struct OrbitJson {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        partition: Option<Partition>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<BalaCarter>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        numeral: Option<Numeral>,
        dim: u64,
    }

    impl From<&OrbitDescriptor> for OrbitJson {
        fn from(o: &OrbitDescriptor) -> Self {
            OrbitJson {
                partition: o.partition().cloned(),
                label: o.label(),
                numeral: o.numeral(),
                dim: o.dimension(),
            }
        }
    }

    impl OrbitJson {
        fn into_descriptor(self, g: GroupSpec) -> std::result::Result<OrbitDescriptor, String> {
            let d = match (g.ambient(), self.partition, self.label) {
                (Ambient::Classical(a), Some(p), None) => OrbitDescriptor::classical(a, p),
                (Ambient::Exceptional(e), None, Some(l)) => OrbitDescriptor::exceptional(e, l),
                _ => return Err(format!("orbit must carry a partition or a label matching {g}")),
            }
            .map_err(|e| e.to_string())?;
            if d.dimension() != self.dim || d.numeral() != self.numeral {
                return Err(format!("orbit fields are inconsistent with {d}"));
            }
            Ok(d)
        }
    }

    #[derive(Serialize, Deserialize)]
    pub struct ReportJson {
        group: GroupSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<WeightSeq>,
        lambda0: WeightSeq,
        z: Rational,
        k: usize,
        gk_dim: Rational,
        orbit: OrbitJson,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pipeline_orbit: Option<OrbitJson>,
        unitary: bool,
        consistent: bool,
        notes: Vec<String>,
    }

    impl From<ClassificationReport> for ReportJson {
        fn from(r: ClassificationReport) -> Self {
            ReportJson {
                group: r.group,
                lambda: r.lambda,
                lambda0: r.lambda0,
                z: r.z,
                k: r.k,
                gk_dim: r.gk_dim,
                orbit: (&r.orbit).into(),
                pipeline_orbit: r.pipeline_orbit.as_ref().map(Into::into),
                unitary: r.unitary,
                consistent: r.consistent,
                notes: r.notes,
            }
        }
    }

    impl TryFrom<ReportJson> for ClassificationReport {
        type Error = String;

        fn try_from(j: ReportJson) -> std::result::Result<Self, String> {
            let g = j.group;
            Ok(ClassificationReport {
                group: g,
                lambda: j.lambda,
                lambda0: j.lambda0,
                z: j.z,
                k: j.k,
                gk_dim: j.gk_dim,
                orbit: j.orbit.into_descriptor(g)?,
                pipeline_orbit: j.pipeline_orbit.map(|o| o.into_descriptor(g)).transpose()?,
                unitary: j.unitary,
                consistent: j.consistent,
                notes: j.notes,
            })
        }
    }
}
