//! Orbit descriptors for the classical and exceptional ambient algebras.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{
    classical_orbit_dimension, is_x_partition, very_even_numeral, AlgebraKind, ClassicalAlgebra, Numeral,
    Partition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExceptionalType {
    E6,
    E7,
}

impl fmt::Display for ExceptionalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionalType::E6 => "E6",
            ExceptionalType::E7 => "E7",
        })
    }
}

/// Bala-Carter labels of the small nilpotent orbits of `e6` and `e7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BalaCarter {
    Zero,
    A1,
    TwoA1,
    /// `3A1` in `e6`.
    ThreeA1,
    /// `(3A1)''` in `e7`.
    ThreeA1Second,
    /// `(3A1)'` in `e7`.
    ThreeA1Prime,
    A2,
}

impl BalaCarter {
    pub fn as_str(&self) -> &'static str {
        match self {
            BalaCarter::Zero => "0",
            BalaCarter::A1 => "A1",
            BalaCarter::TwoA1 => "2A1",
            BalaCarter::ThreeA1 => "3A1",
            BalaCarter::ThreeA1Second => "(3A1)''",
            BalaCarter::ThreeA1Prime => "(3A1)'",
            BalaCarter::A2 => "A2",
        }
    }
}

impl fmt::Display for BalaCarter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BalaCarter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .trim()
            .chars()
            .map(|c| match c {
                '₁' => '1',
                '₂' => '2',
                '′' => '\'',
                _ => c,
            })
            .collect::<String>()
            .replace('″', "''");
        Ok(match norm.as_str() {
            "0" => BalaCarter::Zero,
            "A1" => BalaCarter::A1,
            "2A1" => BalaCarter::TwoA1,
            "3A1" => BalaCarter::ThreeA1,
            "(3A1)''" => BalaCarter::ThreeA1Second,
            "(3A1)'" => BalaCarter::ThreeA1Prime,
            "A2" => BalaCarter::A2,
            _ => return Err(Error::UnknownLabel(s.to_string())),
        })
    }
}

impl Serialize for BalaCarter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for BalaCarter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `(label, dimension, special)` rows for the orbits below `A2`.
pub fn orbit_table(g: ExceptionalType) -> &'static [(BalaCarter, u64, bool)] {
    use BalaCarter::*;
    match g {
        ExceptionalType::E6 => &[(Zero, 0, true), (A1, 22, true), (TwoA1, 32, true), (ThreeA1, 40, false), (A2, 42, true)],
        ExceptionalType::E7 => &[
            (Zero, 0, true),
            (A1, 34, true),
            (TwoA1, 52, true),
            (ThreeA1Second, 54, true),
            (ThreeA1Prime, 64, false),
            (A2, 66, true),
        ],
    }
}

pub fn exceptional_orbit_dimension(g: ExceptionalType, label: BalaCarter) -> Result<u64> {
    orbit_table(g)
        .iter()
        .find(|row| row.0 == label)
        .map(|row| row.1)
        .ok_or_else(|| Error::UnknownLabel(format!("{label} in {g}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrbitDescriptor {
    Classical {
        algebra: ClassicalAlgebra,
        partition: Partition,
        numeral: Option<Numeral>,
        dimension: u64,
    },
    Exceptional {
        algebra: ExceptionalType,
        label: BalaCarter,
        dimension: u64,
    },
}

impl OrbitDescriptor {
    /// Checks the type rule, attaches the numeral (D, very even) and the dimension.
    pub fn classical(algebra: ClassicalAlgebra, partition: Partition) -> Result<Self> {
        if !is_x_partition(&partition, algebra)? {
            return Err(Error::WrongType {
                partition: partition.to_string(),
                kind: algebra.kind.to_string(),
            });
        }
        let numeral = match algebra.kind {
            AlgebraKind::D => very_even_numeral(&partition, algebra.size / 2),
            _ => None,
        };
        let dimension = classical_orbit_dimension(&partition, algebra)?;
        Ok(OrbitDescriptor::Classical { algebra, partition, numeral, dimension })
    }

    pub fn exceptional(algebra: ExceptionalType, label: BalaCarter) -> Result<Self> {
        let dimension = exceptional_orbit_dimension(algebra, label)?;
        Ok(OrbitDescriptor::Exceptional { algebra, label, dimension })
    }

    pub fn dimension(&self) -> u64 {
        match self {
            OrbitDescriptor::Classical { dimension, .. } | OrbitDescriptor::Exceptional { dimension, .. } => *dimension,
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            OrbitDescriptor::Classical { partition, .. } => Some(partition),
            OrbitDescriptor::Exceptional { .. } => None,
        }
    }

    pub fn label(&self) -> Option<BalaCarter> {
        match self {
            OrbitDescriptor::Exceptional { label, .. } => Some(*label),
            OrbitDescriptor::Classical { .. } => None,
        }
    }

    pub fn numeral(&self) -> Option<Numeral> {
        match self {
            OrbitDescriptor::Classical { numeral, .. } => *numeral,
            OrbitDescriptor::Exceptional { .. } => None,
        }
    }
}

impl fmt::Display for OrbitDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitDescriptor::Classical { partition, numeral, dimension, .. } => {
                write!(f, "{partition}")?;
                if let Some(n) = numeral {
                    write!(f, " {n}")?;
                }
                write!(f, " (dim {dimension})")
            }
            OrbitDescriptor::Exceptional { label, dimension, .. } => write!(f, "{label} (dim {dimension})"),
        }
    }
}

/// Recomputes the dimension from the partition or the table.
pub fn orbit_dimension(desc: &OrbitDescriptor) -> Result<u64> {
    match desc {
        OrbitDescriptor::Classical { algebra, partition, .. } => classical_orbit_dimension(partition, *algebra),
        OrbitDescriptor::Exceptional { algebra, label, .. } => exceptional_orbit_dimension(*algebra, *label),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables() {
        assert_eq!(exceptional_orbit_dimension(ExceptionalType::E6, BalaCarter::A1).unwrap(), 22);
        assert_eq!(exceptional_orbit_dimension(ExceptionalType::E7, BalaCarter::ThreeA1Second).unwrap(), 54);
        assert!(exceptional_orbit_dimension(ExceptionalType::E6, BalaCarter::ThreeA1Second).is_err());
    }

    #[test]
    fn labels_parse() {
        assert_eq!("(3A₁)″".parse::<BalaCarter>().unwrap(), BalaCarter::ThreeA1Second);
        assert_eq!("A₁".parse::<BalaCarter>().unwrap(), BalaCarter::A1);
        assert!("E8".parse::<BalaCarter>().is_err());
        for (l, _, _) in orbit_table(ExceptionalType::E7) {
            assert_eq!(l.as_str().parse::<BalaCarter>().unwrap(), *l);
        }
    }

    #[test]
    fn numeral_attached_for_very_even() {
        let d = OrbitDescriptor::classical(ClassicalAlgebra::d(4), "[2^4]".parse().unwrap()).unwrap();
        assert_eq!(d.numeral(), Some(Numeral::I));
        assert_eq!(orbit_dimension(&d).unwrap(), d.dimension());
        let c = OrbitDescriptor::classical(ClassicalAlgebra::c(2), "[2^2]".parse().unwrap()).unwrap();
        assert_eq!(c.numeral(), None);
        assert!(OrbitDescriptor::classical(ClassicalAlgebra::b(2), "[3,2]".parse().unwrap()).is_err());
    }
}
