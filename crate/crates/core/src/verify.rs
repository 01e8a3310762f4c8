//! Exhaustive and randomized cross-checks at small rank.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::{build_lambda, constants, unitarity, zk_points, GroupSpec, HighestWeightDatum};
use crate::classify::{associated_k, bmw_pipeline, closed_form, k_orbit_dimension, unitary_gk_dimension};
use crate::error::{Error, Result};
use crate::partition::{collapse, dominates, is_x_partition, partitions_of, AlgebraKind, ClassicalAlgebra, Partition};
use crate::rational::{q, Rational};
use crate::tableau::{rs_tableau, WeightSeq};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_MAX_RANK: usize = 6;
pub const MAX_RANK_ENV: &str = "ORBITLAB_MAX_RANK";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    DimDoubling,
    ClosedVsPipeline,
    #[serde(rename = "theorem_7_1")]
    UnitaryRank,
    Antichain,
    CollapseOracle,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::DimDoubling,
        CheckKind::ClosedVsPipeline,
        CheckKind::UnitaryRank,
        CheckKind::Antichain,
        CheckKind::CollapseOracle,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckKind::DimDoubling => "dim_doubling",
            CheckKind::ClosedVsPipeline => "closed_vs_pipeline",
            CheckKind::UnitaryRank => "theorem_7_1",
            CheckKind::Antichain => "antichain",
            CheckKind::CollapseOracle => "collapse_oracle",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    KnownBoundary,
    HardFailure,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub input: Value,
    pub check: CheckKind,
    pub expected: String,
    pub actual: String,
    pub severity: Severity,
}

impl Discrepancy {
    pub fn is_hard(&self) -> bool {
        self.severity == Severity::HardFailure
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub group: GroupSpec,
    /// Bound on the free entries of `λ₀`.
    pub max_abs_entry: i64,
    /// `None` means [`default_z_grid`].
    pub z_grid: Option<Vec<Rational>>,
    pub checks: Vec<CheckKind>,
    pub seed: u64,
}

impl ScanConfig {
    pub fn new(group: GroupSpec) -> Self {
        ScanConfig {
            group,
            max_abs_entry: 8,
            z_grid: None,
            checks: vec![CheckKind::DimDoubling, CheckKind::ClosedVsPipeline, CheckKind::UnitaryRank],
            seed: DEFAULT_SEED,
        }
    }

    pub fn z_values(&self) -> Vec<Rational> {
        self.z_grid.clone().unwrap_or_else(|| default_z_grid(self.group, self.max_abs_entry))
    }
}

/// The rank cap from `ORBITLAB_MAX_RANK`, defaulting to 6.
pub fn max_rank_from_env() -> Result<usize> {
    match std::env::var(MAX_RANK_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_RANK_ENV} must be a nonnegative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_RANK),
    }
}

/// Weakly decreasing sequences of length `len` from `values` (sorted decreasing).
fn chains(values: &[Rational], len: usize) -> Vec<Vec<Rational>> {
    fn rec(values: &[Rational], len: usize, start: usize, cur: &mut Vec<Rational>, out: &mut Vec<Vec<Rational>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            rec(values, len, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(values, len, 0, &mut Vec::new(), &mut out);
    out
}

/// `offset + k` for integers `k` with `lo <= offset + k <= hi`, decreasing.
fn coset_range(offset: Rational, lo: Rational, hi: Rational) -> Vec<Rational> {
    let mut v = Vec::new();
    let mut x = Rational::int((hi - offset).floor()) + offset;
    while x >= lo {
        v.push(x);
        x = x - 1;
    }
    v
}

/// Every normalized compact-dominant `λ₀` whose free entries are bounded by
/// `bound`, enumerated through the pattern parameters of each family. For
/// `E7` the `α₁` pairing only takes the values 0, 1, 2.
pub fn lambda0_grid(g: GroupSpec, bound: i64) -> Vec<WeightSeq> {
    let b = Rational::int(bound);
    let cosets = [Rational::ZERO, Rational::HALF];
    let mut out: Vec<WeightSeq> = Vec::new();
    match g {
        GroupSpec::Su { p, q: qq } => {
            // λ₀ up to a shift of all entries; fix λ₁ = 0, then λₙ = n - 1
            let n = (p + qq) as i64;
            let first = chains(&coset_range(Rational::ZERO, -b, Rational::ZERO), p - 1);
            let hi = Rational::int(bound.max(n - 1));
            let second = chains(&coset_range(Rational::ZERO, Rational::int(n - 1), hi), qq - 1);
            for f in &first {
                for s in &second {
                    let mut v = vec![Rational::ZERO];
                    v.extend(f);
                    v.extend(s);
                    v.push(Rational::int(n - 1));
                    out.push(WeightSeq(v));
                }
            }
        }
        GroupSpec::Sp { n } => {
            let top = Rational::int(-(n as i64));
            for rest in chains(&coset_range(Rational::ZERO, -b, top), n - 1) {
                let mut v = vec![top];
                v.extend(rest);
                out.push(WeightSeq(v));
            }
        }
        GroupSpec::SoStar { n } => {
            let s = Rational::int(3 - 2 * n as i64);
            for c in cosets {
                for l2 in coset_range(c, -b, s / 2) {
                    let l1 = s - l2;
                    if l1.abs() > b {
                        continue;
                    }
                    for rest in chains(&coset_range(c, -b, l2), n - 2) {
                        let mut v = vec![l1, l2];
                        v.extend(rest);
                        out.push(WeightSeq(v));
                    }
                }
            }
        }
        GroupSpec::SoOdd { n } => {
            let s = Rational::int(2 - 2 * n as i64);
            for c in cosets {
                for tail in chains(&coset_range(c, Rational::ZERO, b), n - 1) {
                    let mut v = vec![s - tail[0]];
                    v.extend(tail);
                    out.push(WeightSeq(v));
                }
            }
        }
        GroupSpec::SoEven { n } => {
            let s = Rational::int(3 - 2 * n as i64);
            for c in cosets {
                for tail in chains(&coset_range(c, Rational::ZERO, b), n - 1) {
                    let last = tail[n - 2];
                    let signs: &[i64] = if last.is_zero() { &[1] } else { &[1, -1] };
                    for &sg in signs {
                        let mut t = tail.clone();
                        t[n - 2] = last * sg;
                        let mut v = vec![s - t[0]];
                        v.extend(t);
                        out.push(WeightSeq(v));
                    }
                }
            }
        }
        GroupSpec::E6 | GroupSpec::E7 => {
            for c in cosets {
                // λ₅ ≥ λ₄ ≥ λ₃ ≥ λ₂ ≥ |λ₁|
                for desc in chains(&coset_range(c, Rational::ZERO, b), 4) {
                    let l2 = desc[3];
                    for l1 in coset_range(c, -l2, l2) {
                        let head = [l1, desc[3], desc[2], desc[1], desc[0]];
                        let sum: Rational = head.iter().copied().sum();
                        if g == GroupSpec::E6 {
                            let bb = (sum + 22) / 3;
                            let mut v = head.to_vec();
                            v.extend([bb, bb, -bb]);
                            out.push(WeightSeq(v));
                        } else {
                            for m in 0..=bound.min(2) {
                                let l6 = l1 - (sum - l1) - 17 - 2 * m;
                                let mut v = head.to_vec();
                                v.extend([l6, q(17, 2), q(-17, 2)]);
                                out.push(WeightSeq(v));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Reduction points, their `1/3` shifts, and every half-integer from
/// `z_r - 2` up past the finite-dimensional threshold of the grid.
pub fn default_z_grid(g: GroupSpec, bound: i64) -> Vec<Rational> {
    let zk = zk_points(g);
    let c = constants(g);
    let mut v: Vec<Rational> = zk.clone();
    v.extend(zk.iter().map(|&z| z + q(1, 3)));
    v.extend(zk.iter().map(|&z| z - q(1, 3)));
    let lo = *zk.last().expect("r >= 1") - 2;
    let hi = Rational::int(c.h_check_minus_1 + 2 * bound + 2);
    let mut x = Rational::int(lo.floor());
    while x <= hi {
        v.push(x);
        x += Rational::HALF;
    }
    v.sort();
    v.dedup();
    v
}

fn echo(g: GroupSpec, d: &HighestWeightDatum) -> Value {
    let mut v = json!({"group": g.spec_string(), "lambda0": d.lambda0, "z": d.z});
    if let Some(l) = &d.lambda {
        v["lambda"] = json!(l);
    }
    v
}

fn hard(input: Value, check: CheckKind, expected: impl ToString, actual: impl ToString) -> Discrepancy {
    Discrepancy {
        input,
        check,
        expected: expected.to_string(),
        actual: actual.to_string(),
        severity: Severity::HardFailure,
    }
}

/// Valid data on the scan grid, in grid order.
fn grid_data(cfg: &ScanConfig) -> Vec<HighestWeightDatum> {
    let zs = cfg.z_values();
    lambda0_grid(cfg.group, cfg.max_abs_entry)
        .into_iter()
        .flat_map(|l0| {
            let g = cfg.group;
            zs.iter().filter_map(move |&z| build_lambda(g, &l0, z).ok()).collect::<Vec<_>>()
        })
        .collect()
}

fn sorted(mut v: Vec<Discrepancy>) -> Vec<Discrepancy> {
    v.sort_by_cached_key(|d| (d.check, d.severity, d.input.to_string()));
    v
}

fn closed_vs_pipeline_one(g: GroupSpec, d: &HighestWeightDatum) -> Vec<Discrepancy> {
    let input = echo(g, d);
    let check = CheckKind::ClosedVsPipeline;
    let (Ok(closed), Some(lambda)) = (closed_form(g, d), d.lambda.as_ref()) else {
        return match closed_form(g, d) {
            Err(e) => vec![hard(input, check, "a closed form", e)],
            Ok(_) => Vec::new(),
        };
    };
    let pipe = match bmw_pipeline(g, lambda) {
        Ok(p) => p,
        Err(e) => return vec![hard(input, check, "a pipeline orbit", e)],
    };
    let mut out = Vec::new();
    if closed.orbit != pipe {
        out.push(hard(input.clone(), check, &pipe, &closed.orbit));
    }
    if let Some(b) = closed.boundary {
        out.push(Discrepancy {
            input,
            check,
            expected: format!("pipeline {pipe}"),
            actual: format!("closed form [2^{}] (k = {}), reported as {}", b.exponent, b.k_formula, closed.orbit),
            severity: Severity::KnownBoundary,
        });
    }
    out
}

fn dim_doubling_one(g: GroupSpec, d: &HighestWeightDatum) -> Vec<Discrepancy> {
    let input = echo(g, d);
    let check = CheckKind::DimDoubling;
    let (orbit, k) = match (closed_form(g, d), associated_k(g, d)) {
        (Ok(c), Ok(k)) => (c.orbit, k),
        (Err(e), _) | (_, Err(e)) => return vec![hard(input, check, "a classification", e)],
    };
    let want = k_orbit_dimension(g, k) * 2;
    if Rational::from(orbit.dimension() as usize) != want {
        return vec![hard(input, check, format!("dim = 2 dim O_{k} = {want}"), format!("{orbit}"))];
    }
    Vec::new()
}

fn run_grid<F>(cfg: &ScanConfig, f: F) -> (usize, Vec<Discrepancy>)
where
    F: Fn(GroupSpec, &HighestWeightDatum) -> Vec<Discrepancy> + Sync,
{
    let data = grid_data(cfg);
    let out: Vec<Discrepancy> = data.par_iter().flat_map_iter(|d| f(cfg.group, d)).collect();
    (data.len(), sorted(out))
}

pub fn check_closed_vs_pipeline(cfg: &ScanConfig) -> Vec<Discrepancy> {
    if cfg.group.is_exceptional() {
        return Vec::new();
    }
    run_grid(cfg, closed_vs_pipeline_one).1
}

pub fn check_dim_doubling(cfg: &ScanConfig) -> Vec<Discrepancy> {
    run_grid(cfg, dim_doubling_one).1
}

/// One `(λ₀, z_k)` pair that the unitarity scan evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitaryPoint {
    pub lambda0: WeightSeq,
    pub z: Rational,
    pub k: usize,
    pub expected: usize,
    pub actual: usize,
}

/// Every unitary reduction point `z = z_k` on the grid, with the rank found.
pub fn unitary_rank_points(cfg: &ScanConfig) -> (Vec<UnitaryPoint>, Vec<Discrepancy>) {
    let g = cfg.group;
    let c = constants(g);
    let r = c.r;
    let results: Vec<(Vec<UnitaryPoint>, Vec<Discrepancy>)> = lambda0_grid(g, cfg.max_abs_entry)
        .par_iter()
        .map(|l0| {
            let mut pts = Vec::new();
            let mut bad = Vec::new();
            for k in 0..=r + 3 {
                let z = c.z_k(k);
                let Ok(d) = build_lambda(g, l0, z) else { continue };
                match unitarity(g, &d) {
                    Ok((_, true)) => {}
                    _ => continue,
                }
                let expected = k.min(r);
                let input = echo(g, &d);
                let actual = match associated_k(g, &d) {
                    Ok(a) => a,
                    Err(e) => {
                        bad.push(hard(input, CheckKind::UnitaryRank, expected, e));
                        continue;
                    }
                };
                pts.push(UnitaryPoint { lambda0: l0.clone(), z, k, expected, actual });
                if actual != expected {
                    let boundary = closed_form(g, &d).ok().and_then(|c| c.boundary).is_some();
                    bad.push(Discrepancy {
                        input: input.clone(),
                        check: CheckKind::UnitaryRank,
                        expected: format!("k = {expected}"),
                        actual: format!("k = {actual}"),
                        severity: if boundary { Severity::KnownBoundary } else { Severity::HardFailure },
                    });
                }
                match unitary_gk_dimension(g, z) {
                    Ok(gk) if gk == k_orbit_dimension(g, expected) => {}
                    Ok(gk) => bad.push(hard(
                        input,
                        CheckKind::UnitaryRank,
                        format!("GK dimension dim O_{expected} = {}", k_orbit_dimension(g, expected)),
                        gk,
                    )),
                    Err(e) => bad.push(hard(input, CheckKind::UnitaryRank, "a GK dimension", e)),
                }
            }
            (pts, bad)
        })
        .collect();
    let mut pts = Vec::new();
    let mut bad = Vec::new();
    for (p, b) in results {
        pts.extend(p);
        bad.extend(b);
    }
    (pts, sorted(bad))
}

pub fn check_theorem_7_1(cfg: &ScanConfig) -> Vec<Discrepancy> {
    unitary_rank_points(cfg).1
}

/// The largest `k` with `t_{n-k+i} <= s_i` for `i = 1..k`.
pub fn antichain_bound(t: &[Rational], s: &[Rational]) -> usize {
    let n = t.len();
    (0..=n.min(s.len()))
        .filter(|&k| (0..k).all(|i| t[n - k + i] <= s[i]))
        .max()
        .unwrap_or(0)
}

/// A random strictly decreasing block of length `len` starting at `top`.
fn random_block(rng: &mut ChaCha8Rng, top: Rational, len: usize) -> Vec<Rational> {
    let mut v = vec![top];
    while v.len() < len {
        let gap = rng.gen_range(1..=3);
        let next = *v.last().unwrap() - gap;
        v.push(next);
    }
    v
}

pub fn check_antichain(trials: usize, max_block: usize, seed: u64) -> Vec<Discrepancy> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shifts = [Rational::ZERO, Rational::HALF, q(1, 3), q(2, 3)];
    let mut out = Vec::new();
    for _ in 0..trials {
        let n = rng.gen_range(1..=max_block);
        let m = rng.gen_range(1..=max_block);
        let t_top = Rational::int(rng.gen_range(-6..=6)) + shifts[rng.gen_range(0..shifts.len())];
        let t = random_block(&mut rng, t_top, n);
        let t_n = t[n - 1];
        let s_top = {
            let off = Rational::int(rng.gen_range(0..=3 * n as i64)) + shifts[rng.gen_range(0..shifts.len())];
            t_n + off
        };
        let s = random_block(&mut rng, s_top, m);
        let mu: WeightSeq = t.iter().chain(&s).copied().collect();
        let q2 = rs_tableau(&mu).q2();
        let bound = antichain_bound(&t, &s);
        if q2 != bound {
            out.push(hard(json!({"t": t, "s": s}), CheckKind::Antichain, bound, q2));
        }
    }
    out
}

/// The largest `kind` partition dominated by `p`, by exhaustive search.
pub fn brute_force_collapse(p: &Partition, kind: AlgebraKind) -> Option<Partition> {
    let candidates: Vec<Partition> = partitions_of(p.total())
        .into_iter()
        .filter(|x| crate::partition::satisfies_type(x, kind) && dominates(p, x).unwrap_or(false))
        .collect();
    candidates
        .iter()
        .find(|x| candidates.iter().all(|y| dominates(x, y).unwrap_or(false)))
        .cloned()
}

pub fn check_collapse_oracle(max_total: usize) -> Vec<Discrepancy> {
    let jobs: Vec<(Partition, ClassicalAlgebra)> = (0..=max_total)
        .flat_map(|n| {
            let algs: Vec<ClassicalAlgebra> = [AlgebraKind::B, AlgebraKind::C, AlgebraKind::D]
                .into_iter()
                .filter_map(|k| ClassicalAlgebra::of_size(k, n).ok())
                .collect();
            partitions_of(n).into_iter().flat_map(move |p| algs.clone().into_iter().map(move |a| (p.clone(), a)))
        })
        .collect();
    let out: Vec<Discrepancy> = jobs
        .par_iter()
        .filter_map(|(p, alg)| {
            let input = json!({"partition": p, "type": alg.kind.to_string()});
            let got = collapse(p, *alg).expect("sizes match");
            let want = brute_force_collapse(p, alg.kind);
            let ok_type = is_x_partition(&got, *alg).unwrap_or(false);
            match want {
                Some(w) if w == got && ok_type => None,
                Some(w) => Some(hard(input, CheckKind::CollapseOracle, w, got)),
                None => Some(hard(input, CheckKind::CollapseOracle, "a unique maximum", got)),
            }
        })
        .collect();
    sorted(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub group: Option<GroupSpec>,
    pub seed: u64,
    pub inputs: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl ScanReport {
    pub fn hard_failures(&self) -> usize {
        self.discrepancies.iter().filter(|d| d.is_hard()).count()
    }

    pub fn known_boundary(&self) -> usize {
        self.discrepancies.len() - self.hard_failures()
    }
}

/// Runs the grid checks requested in `cfg`.
pub fn run_scan(cfg: &ScanConfig) -> ScanReport {
    let mut discrepancies = Vec::new();
    let mut inputs = 0;
    for check in &cfg.checks {
        match check {
            CheckKind::ClosedVsPipeline if !cfg.group.is_exceptional() => {
                let (n, d) = run_grid(cfg, closed_vs_pipeline_one);
                inputs = inputs.max(n);
                discrepancies.extend(d);
            }
            CheckKind::DimDoubling => {
                let (n, d) = run_grid(cfg, dim_doubling_one);
                inputs = inputs.max(n);
                discrepancies.extend(d);
            }
            CheckKind::UnitaryRank => discrepancies.extend(check_theorem_7_1(cfg)),
            CheckKind::Antichain => discrepancies.extend(check_antichain(1000, 8, cfg.seed)),
            CheckKind::CollapseOracle => discrepancies.extend(check_collapse_oracle(12)),
            CheckKind::ClosedVsPipeline => {}
        }
    }
    ScanReport { group: Some(cfg.group), seed: cfg.seed, inputs, discrepancies: sorted(discrepancies) }
}

/// Every family with Lie rank at most `max_rank`, plus `E6` and `E7`.
pub fn default_groups(max_rank: usize) -> Vec<GroupSpec> {
    let mut gs = Vec::new();
    for total in 2..=max_rank + 1 {
        for p in 1..total {
            gs.push(GroupSpec::Su { p, q: total - p });
        }
    }
    gs.extend((2..=max_rank).map(|n| GroupSpec::Sp { n }));
    gs.extend((4..=max_rank).map(|n| GroupSpec::SoStar { n }));
    gs.extend((3..=max_rank).map(|n| GroupSpec::SoOdd { n }));
    gs.extend((4..=max_rank).map(|n| GroupSpec::SoEven { n }));
    gs.extend([GroupSpec::E6, GroupSpec::E7]);
    gs
}

/// The full default verification: grid checks on [`default_groups`], the
/// antichain property and the collapse oracle.
pub fn verify_all(max_rank: usize, seed: u64) -> ScanReport {
    let mut discrepancies = Vec::new();
    let mut inputs = 0;
    for g in default_groups(max_rank) {
        let mut cfg = ScanConfig::new(g);
        cfg.seed = seed;
        let rep = run_scan(&cfg);
        inputs += rep.inputs;
        discrepancies.extend(rep.discrepancies);
    }
    discrepancies.extend(check_antichain(1000, 8, seed));
    discrepancies.extend(check_collapse_oracle(12));
    ScanReport { group: None, seed, inputs, discrepancies: sorted(discrepancies) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_examples() {
        assert_eq!(antichain_bound(&[q(2, 1), q(1, 1)], &[q(3, 2)]), 1);
        assert_eq!(antichain_bound(&[q(1, 1)], &[q(1, 1)]), 1);
        assert!(check_antichain(200, 8, 7).is_empty());
    }

    #[test]
    fn grids_are_valid() {
        for g in [
            GroupSpec::su(2, 3).unwrap(),
            GroupSpec::sp(3).unwrap(),
            GroupSpec::so_star(4).unwrap(),
            GroupSpec::so_odd(3).unwrap(),
            GroupSpec::so_even(4).unwrap(),
            GroupSpec::E6,
            GroupSpec::E7,
        ] {
            let grid = lambda0_grid(g, 3);
            assert!(!grid.is_empty(), "{g}");
            for l0 in grid {
                build_lambda(g, &l0, Rational::ONE).unwrap_or_else(|e| panic!("{g} {l0}: {e}"));
            }
        }
    }

    #[test]
    fn z_grid_contains_reduction_points() {
        let g = GroupSpec::so_odd(3).unwrap();
        let zs = default_z_grid(g, 2);
        for z in zk_points(g) {
            assert!(zs.contains(&z) && zs.contains(&(z + q(1, 3))));
        }
        assert!(zs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn small_scan_is_clean() {
        let mut cfg = ScanConfig::new(GroupSpec::so_odd(3).unwrap());
        cfg.max_abs_entry = 3;
        let rep = run_scan(&cfg);
        assert!(rep.inputs > 0);
        assert_eq!(rep.hard_failures(), 0, "{:?}", rep.discrepancies.first());
    }

    #[test]
    fn check_names_round_trip() {
        for c in CheckKind::ALL {
            assert_eq!(c.as_str().parse::<CheckKind>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{c}\""));
        }
    }
}
