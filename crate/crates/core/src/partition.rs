//! Partitions and the nilpotent-orbit combinatorics built on them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    total: usize,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let total = parts.iter().sum();
        Partition { parts, total }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds `[a^m, b^k, ...]` from `(part, multiplicity)` pairs.
    pub fn from_exponents(blocks: &[(usize, usize)]) -> Self {
        Partition::new(
            blocks
                .iter()
                .flat_map(|&(part, mult)| std::iter::repeat_n(part, mult))
                .collect(),
        )
    }

    /// `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition::from_exponents(&[(1, n)])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn dual(&self) -> Partition {
        dual(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{}", j - i)?;
            }
            i = j;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `[3,2,2,1]`, `[3,2^2,1]` or the bracketless `3,2,2,1`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('[').unwrap_or(body);
        let body = body.strip_suffix(']').unwrap_or(body).trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || Error::Parse(format!("invalid partition `{s}`"));
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let (p, m) = match tok.split_once('^') {
                Some((p, m)) => (p.trim(), m.trim().parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let p: usize = p.parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(p, m));
        }
        let sorted = Partition::new(parts.clone());
        if sorted.parts != parts {
            return Err(Error::Parse(format!("parts of `{s}` are not weakly decreasing")));
        }
        Ok(sorted)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        let p = Partition::new(parts.clone());
        if p.parts != parts {
            return Err(serde::de::Error::custom("partition parts must be positive and weakly decreasing"));
        }
        Ok(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraKind {
    A,
    B,
    C,
    D,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgebraKind::A => "A",
            AlgebraKind::B => "B",
            AlgebraKind::C => "C",
            AlgebraKind::D => "D",
        };
        f.write_str(s)
    }
}

/// A classical Lie algebra, identified by the partition total it needs:
/// `sl_n` (A, n), `so_{2n+1}` (B), `sp_{2n}` (C), `so_{2n}` (D).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassicalAlgebra {
    pub kind: AlgebraKind,
    pub size: usize,
}

impl ClassicalAlgebra {
    pub fn a(n: usize) -> Self {
        ClassicalAlgebra { kind: AlgebraKind::A, size: n }
    }

    /// `so_{2n+1}`.
    pub fn b(n: usize) -> Self {
        ClassicalAlgebra { kind: AlgebraKind::B, size: 2 * n + 1 }
    }

    /// `sp_{2n}`.
    pub fn c(n: usize) -> Self {
        ClassicalAlgebra { kind: AlgebraKind::C, size: 2 * n }
    }

    /// `so_{2n}`.
    pub fn d(n: usize) -> Self {
        ClassicalAlgebra { kind: AlgebraKind::D, size: 2 * n }
    }

    /// The algebra of `kind` on `size` boxes, if the parity is right.
    pub fn of_size(kind: AlgebraKind, size: usize) -> Result<Self> {
        let ok = match kind {
            AlgebraKind::A => true,
            AlgebraKind::B => size % 2 == 1,
            AlgebraKind::C | AlgebraKind::D => size.is_multiple_of(2),
        };
        if !ok {
            return Err(Error::ParameterRange(format!("no algebra of type {kind} on {size} boxes")));
        }
        Ok(ClassicalAlgebra { kind, size })
    }

    fn check(&self, p: &Partition) -> Result<()> {
        if p.total() != self.size {
            return Err(Error::SizeMismatch {
                partition: p.to_string(),
                total: p.total(),
                algebra: self.to_string(),
                expected: self.size,
            });
        }
        Ok(())
    }
}

impl fmt::Display for ClassicalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlgebraKind::A => write!(f, "sl({})", self.size),
            AlgebraKind::B | AlgebraKind::D => write!(f, "so({})", self.size),
            AlgebraKind::C => write!(f, "sp({})", self.size),
        }
    }
}

/// Even/odd box counts per row; box `(i, j)` (1-based) is even when `i + j` is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityProfile {
    pub ev: Vec<usize>,
    pub od: Vec<usize>,
}

pub fn dual(p: &Partition) -> Partition {
    let width = p.part(0);
    let parts = (1..=width)
        .map(|i| p.parts.iter().take_while(|&&x| x >= i).count())
        .collect();
    Partition::new(parts)
}

pub fn parity_counts(p: &Partition) -> ParityProfile {
    let mut ev = Vec::with_capacity(p.len());
    let mut od = Vec::with_capacity(p.len());
    for (i, &x) in p.parts().iter().enumerate() {
        let e = if i % 2 == 0 { x.div_ceil(2) } else { x / 2 };
        ev.push(e);
        od.push(x - e);
    }
    ParityProfile { ev, od }
}

pub fn dominates(p: &Partition, q: &Partition) -> Result<bool> {
    if p.total() != q.total() {
        return Err(Error::IncomparableSizes(p.total(), q.total()));
    }
    let (mut sp, mut sq) = (0, 0);
    for i in 0..p.len().max(q.len()) {
        sp += p.part(i);
        sq += q.part(i);
        if sp < sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The type rule without the size check: B/D forbid even parts of odd
/// multiplicity, C forbids odd parts of odd multiplicity.
pub fn satisfies_type(p: &Partition, kind: AlgebraKind) -> bool {
    violating_part(p, kind).is_none()
}

fn violating_part(p: &Partition, kind: AlgebraKind) -> Option<usize> {
    let bad_parity = match kind {
        AlgebraKind::A => return None,
        AlgebraKind::B | AlgebraKind::D => 0,
        AlgebraKind::C => 1,
    };
    p.multiplicities()
        .into_iter()
        .rev()
        .find(|&(part, mult)| part % 2 == bad_parity && mult % 2 == 1)
        .map(|(part, _)| part)
}

pub fn is_x_partition(p: &Partition, alg: ClassicalAlgebra) -> Result<bool> {
    alg.check(p)?;
    Ok(satisfies_type(p, alg.kind))
}

/// Moves boxes down until the type rule holds; no size check.
pub(crate) fn collapse_kind(p: &Partition, kind: AlgebraKind) -> Partition {
    let mut parts = p.parts.clone();
    loop {
        let current = Partition::new(parts.clone());
        let Some(q) = violating_part(&current, kind) else {
            return current;
        };
        let last = parts.iter().rposition(|&x| x == q).expect("violating part is present");
        parts[last] -= 1;
        match parts[last + 1..].iter().position(|&x| x + 1 < q) {
            Some(off) => parts[last + 1 + off] += 1,
            None => parts.push(1),
        }
        parts.retain(|&x| x > 0);
    }
}

/// The largest `alg`-type partition dominated by `p`.
pub fn collapse(p: &Partition, alg: ClassicalAlgebra) -> Result<Partition> {
    alg.check(p)?;
    Ok(collapse_kind(p, alg.kind))
}

pub fn is_special(p: &Partition, alg: ClassicalAlgebra) -> Result<bool> {
    if !is_x_partition(p, alg)? {
        return Err(Error::WrongType {
            partition: p.to_string(),
            kind: alg.kind.to_string(),
        });
    }
    let d = dual(p);
    Ok(match alg.kind {
        AlgebraKind::A => true,
        AlgebraKind::B => satisfies_type(&d, AlgebraKind::B),
        AlgebraKind::C | AlgebraKind::D => satisfies_type(&d, AlgebraKind::C),
    })
}

/// Closure maps turning an RS shape into the orbit partition it contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosureMode {
    B,
    C,
    D,
    /// Metaplectic: `((p^t)_D)^t`.
    Cmet,
}

/// Mode B adds one box (input total `2n`, output `2n + 1`).
pub fn special_closure(p: &Partition, mode: ClosureMode) -> Result<Partition> {
    use AlgebraKind::*;
    Ok(match mode {
        ClosureMode::B => {
            if p.total() % 2 == 1 {
                return Err(Error::OddTotal { mode: "B", total: p.total() });
            }
            let mut q = dual(p).parts;
            match q.first_mut() {
                Some(first) => *first += 1,
                None => q.push(1),
            }
            let once = dual(&collapse_kind(&Partition::new(q), B));
            collapse_kind(&once, B)
        }
        ClosureMode::C => {
            if p.total() % 2 == 1 {
                return Err(Error::OddTotal { mode: "C", total: p.total() });
            }
            let once = dual(&collapse_kind(&dual(p), C));
            collapse_kind(&once, C)
        }
        ClosureMode::Cmet => {
            if p.total() % 2 == 1 {
                return Err(Error::OddTotal { mode: "Cmet", total: p.total() });
            }
            dual(&collapse_kind(&dual(p), D))
        }
        ClosureMode::D => {
            if p.total() % 2 == 1 {
                return Err(Error::OddTotal { mode: "D", total: p.total() });
            }
            collapse_kind(p, D)
        }
    })
}

/// The partition whose columns are all the columns of the inputs.
pub fn column_union<'a, I>(ps: I) -> Partition
where
    I: IntoIterator<Item = &'a Partition>,
{
    let cols: Vec<usize> = ps.into_iter().flat_map(|p| dual(p).parts).collect();
    dual(&Partition::new(cols))
}

pub fn double(p: &Partition) -> Partition {
    Partition::new(p.parts.iter().map(|x| 2 * x).collect())
}

fn sum_sq(p: &Partition) -> u64 {
    p.parts.iter().map(|&x| (x * x) as u64).sum()
}

/// Complex dimension of the nilpotent orbit labelled by `p`.
pub fn classical_orbit_dimension(p: &Partition, alg: ClassicalAlgebra) -> Result<u64> {
    alg.check(p)?;
    let m = alg.size as u64;
    let cols = sum_sq(&dual(p));
    let odd = p.parts.iter().filter(|&&x| x % 2 == 1).count() as u64;
    Ok(match alg.kind {
        AlgebraKind::A => m * m - cols,
        AlgebraKind::B | AlgebraKind::D => (m * m - m) / 2 - (cols - odd) / 2,
        AlgebraKind::C => {
            let n = m / 2;
            2 * n * n + n - (cols + odd) / 2
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Numeral {
    I,
    II,
}

impl fmt::Display for Numeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Numeral::I => "I",
            Numeral::II => "II",
        })
    }
}

/// Very even partitions of `so_{2n}` (all parts even) get numeral I; the
/// modules handled here never land on the II orbit.
pub fn very_even_numeral(p: &Partition, n: usize) -> Option<Numeral> {
    let very_even = p.total() == 2 * n && !p.is_empty() && p.parts.iter().all(|x| x % 2 == 0);
    very_even.then_some(Numeral::I)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&p("[3,1]")), p("[2,1,1]"));
        assert_eq!(dual(&p("[2,2,1]")), p("[3,2]"));
        assert_eq!(dual(&p("[5,1,1]")), p("[3,1^4]"));
        assert_eq!(dual(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn parity_examples() {
        let pr = parity_counts(&p("[6,5,4,3,2,1]"));
        assert_eq!(pr.ev, vec![3, 2, 2, 1, 1, 0]);
        assert_eq!(pr.od, vec![3, 3, 2, 2, 1, 1]);
        assert_eq!(parity_counts(&p("[1]")), ParityProfile { ev: vec![1], od: vec![0] });
        assert_eq!(parity_counts(&p("[2,2]")), ParityProfile { ev: vec![1, 1], od: vec![1, 1] });
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p("[4,1,1]"), &p("[3,2,1]")).unwrap());
        assert!(!dominates(&p("[4,1,1]"), &p("[3,3]")).unwrap());
        assert!(dominates(&p("[2,2]"), &p("[2,2]")).unwrap());
        assert_eq!(dominates(&p("[2]"), &p("[1]")), Err(Error::IncomparableSizes(2, 1)));
    }

    #[test]
    fn type_examples() {
        assert!(is_x_partition(&p("[2,2,1]"), ClassicalAlgebra::b(2)).unwrap());
        assert!(!is_x_partition(&p("[3,2]"), ClassicalAlgebra::b(2)).unwrap());
        assert!(is_x_partition(&p("[2,1,1]"), ClassicalAlgebra::c(2)).unwrap());
        assert!(is_x_partition(&p("[2,1]"), ClassicalAlgebra::c(2)).is_err());
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(&p("[3,1]"), ClassicalAlgebra::c(2)).unwrap(), p("[2,2]"));
        assert_eq!(collapse(&p("[4,1,1]"), ClassicalAlgebra::d(3)).unwrap(), p("[3,1,1,1]"));
        assert_eq!(collapse(&p("[2,2,2,1]"), ClassicalAlgebra::b(3)).unwrap(), p("[2,2,1,1,1]"));
    }

    #[test]
    fn special_examples() {
        assert!(!is_special(&p("[2,2,1]"), ClassicalAlgebra::b(2)).unwrap());
        assert!(is_special(&p("[3,1^4]"), ClassicalAlgebra::b(3)).unwrap());
        assert!(is_special(&p("[2,1,1]"), ClassicalAlgebra::d(2)).is_err());
        assert!(is_special(&p("[3,1]"), ClassicalAlgebra::d(2)).unwrap());
    }

    #[test]
    fn closure_examples() {
        assert_eq!(special_closure(&p("[2,2,1,1]"), ClosureMode::B).unwrap(), p("[3,1^4]"));
        assert_eq!(special_closure(&Partition::empty(), ClosureMode::B).unwrap(), p("[1]"));
        assert_eq!(special_closure(&p("[1^4]"), ClosureMode::Cmet).unwrap(), p("[2,1,1]"));
        assert_eq!(special_closure(&p("[2,2]"), ClosureMode::Cmet).unwrap(), p("[2,2]"));
        assert_eq!(special_closure(&p("[2,2,2]"), ClosureMode::D).unwrap(), p("[2,2,1,1]"));
        assert!(special_closure(&p("[2,1]"), ClosureMode::B).is_err());
    }

    #[test]
    fn column_union_examples() {
        assert_eq!(column_union([&Partition::column(3), &Partition::column(4)]), p("[2^3,1]"));
        assert_eq!(column_union([&Partition::column(2), &Partition::column(5)]), p("[2^2,1^3]"));
        assert_eq!(column_union([&p("[3,1]"), &Partition::empty()]), p("[3,1]"));
    }

    #[test]
    fn double_examples() {
        assert_eq!(double(&p("[1,1]")), p("[2,2]"));
        assert_eq!(double(&p("[2,1]")), p("[4,2]"));
        assert_eq!(double(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(classical_orbit_dimension(&p("[2,1]"), ClassicalAlgebra::a(3)).unwrap(), 4);
        assert_eq!(classical_orbit_dimension(&p("[3,1^4]"), ClassicalAlgebra::b(3)).unwrap(), 10);
        for alg in [ClassicalAlgebra::a(5), ClassicalAlgebra::b(3), ClassicalAlgebra::c(3), ClassicalAlgebra::d(4)] {
            assert_eq!(classical_orbit_dimension(&Partition::column(alg.size), alg).unwrap(), 0);
        }
        // regular orbits
        assert_eq!(classical_orbit_dimension(&p("[7]"), ClassicalAlgebra::b(3)).unwrap(), 21 - 3);
        assert_eq!(classical_orbit_dimension(&p("[6]"), ClassicalAlgebra::c(3)).unwrap(), 21 - 3);
        assert_eq!(classical_orbit_dimension(&p("[7,1]"), ClassicalAlgebra::d(4)).unwrap(), 28 - 4);
    }

    #[test]
    fn numerals() {
        assert_eq!(very_even_numeral(&p("[2^4]"), 4), Some(Numeral::I));
        assert_eq!(very_even_numeral(&p("[3,3,1,1]"), 4), None);
        assert_eq!(very_even_numeral(&p("[2,2]"), 2), Some(Numeral::I));
    }

    #[test]
    fn text_round_trip() {
        let x = p("[2^3,1^4]");
        assert_eq!(x.parts(), &[2, 2, 2, 1, 1, 1, 1]);
        assert_eq!(x.to_string(), "[2^3,1^4]");
        assert_eq!(p("[3,2,2,1]").to_string(), "[3,2^2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&x).unwrap(), "[2,2,2,1,1,1,1]");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
