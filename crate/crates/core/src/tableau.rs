//! Robinson-Schensted insertion and the weight bookkeeping that feeds it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::Rational;

/// A finite sequence of exact rationals, e.g. a weight in `ε`-coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightSeq(pub Vec<Rational>);

impl WeightSeq {
    pub fn new(entries: Vec<Rational>) -> Self {
        WeightSeq(entries)
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        WeightSeq(xs.iter().map(|&x| Rational::int(x)).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }
}

impl std::ops::Index<usize> for WeightSeq {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for WeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Comma-separated rational literals, optionally wrapped in `()` or `[]`.
impl FromStr for WeightSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix(['(', '[']).unwrap_or(t);
        let t = t.strip_suffix([')', ']']).unwrap_or(t).trim();
        if t.is_empty() {
            return Ok(WeightSeq::default());
        }
        t.split(',').map(str::parse).collect::<Result<Vec<_>>>().map(WeightSeq)
    }
}

impl FromIterator<Rational> for WeightSeq {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        WeightSeq(iter.into_iter().collect())
    }
}

/// Rows weakly increase, columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<Rational>>,
}

impl Tableau {
    /// Row-inserts `x`, bumping the leftmost entry strictly greater than it.
    pub fn insert(&mut self, mut x: Rational) {
        for row in self.rows.iter_mut() {
            let pos = row.partition_point(|e| *e <= x);
            if pos == row.len() {
                row.push(x);
                return;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        self.rows.push(vec![x]);
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    /// Length of the second column.
    pub fn q2(&self) -> usize {
        self.rows.iter().filter(|r| r.len() >= 2).count()
    }
}

pub fn rs_tableau(x: &WeightSeq) -> Tableau {
    let mut t = Tableau::default();
    for &e in x.iter() {
        t.insert(e);
    }
    t
}

pub fn shape(t: &Tableau) -> Partition {
    t.shape()
}

pub fn q2(t: &Tableau) -> usize {
    t.q2()
}

/// `(x_1, ..., x_n, -x_n, ..., -x_1)`.
pub fn mirror_extend(x: &WeightSeq) -> WeightSeq {
    x.iter().copied().chain(x.iter().rev().map(|&e| -e)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassMode {
    /// Classes are `ℤ`-cosets.
    A,
    /// Integral, half-integral, and classes closed under `x ~ ±y mod ℤ`.
    BCD,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CongruenceClasses {
    pub integral: Option<WeightSeq>,
    pub half_integral: Option<WeightSeq>,
    pub generic: Vec<WeightSeq>,
    /// Mode A only: which entry of `generic` is the integral coset.
    pub integral_coset: Option<usize>,
}

/// Class key for `BCD`: the smaller of `{x}` and `{-x}`.
fn pm_key(x: Rational) -> Rational {
    let f = x.fract();
    let g = (-x).fract();
    f.min(g)
}

pub fn decompose_classes(x: &WeightSeq, mode: ClassMode) -> CongruenceClasses {
    let mut out = CongruenceClasses::default();
    let mut keys: Vec<Rational> = Vec::new();
    let mut push = |key: Rational, e: Rational, out: &mut CongruenceClasses| match keys.iter().position(|k| *k == key) {
        Some(i) => out.generic[i].0.push(e),
        None => {
            keys.push(key);
            out.generic.push(WeightSeq(vec![e]));
        }
    };
    for &e in x.iter() {
        match mode {
            ClassMode::A => {
                push(e.fract(), e, &mut out);
                if e.is_integer() && out.integral_coset.is_none() {
                    out.integral_coset = Some(out.generic.len() - 1);
                }
            }
            ClassMode::BCD => {
                if e.is_integer() {
                    out.integral.get_or_insert_with(WeightSeq::default).0.push(e);
                } else if e.is_half_odd() {
                    out.half_integral.get_or_insert_with(WeightSeq::default).0.push(e);
                } else {
                    push(pm_key(e), e, &mut out);
                }
            }
        }
    }
    out
}

/// Negates the entries not `ℤ`-congruent to the first one.
pub fn tilde_normalize(x: &WeightSeq) -> Result<WeightSeq> {
    let Some(&first) = x.entries().first() else {
        return Ok(WeightSeq::default());
    };
    let mut out = Vec::with_capacity(x.len());
    for &e in x.iter() {
        if e.is_half_integer() {
            return Err(Error::NotGenericClass(format!("entry {e} lies in 1/2 Z")));
        }
        if (e - first).is_integer() {
            out.push(e);
        } else if (e + first).is_integer() {
            out.push(-e);
        } else {
            return Err(Error::NotGenericClass(format!("neither {e} - {first} nor {e} + {first} is an integer")));
        }
    }
    Ok(WeightSeq(out))
}
