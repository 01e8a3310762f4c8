//! Associated and annihilator varieties of highest weight Harish-Chandra
//! modules for the Hermitian symmetric families `SU(p,q)`, `Sp(n,R)`,
//! `SO*(2n)`, `SO(2,2n-1)`, `SO(2,2n-2)`, `E6(-14)` and `E7(-25)`.
//!
//! All arithmetic is exact. Weights whose `z` would be irrational are modelled
//! by any rational with denominator at least 3: every branch depends only on
//! the class of `z` modulo `ℤ` or `½ℤ`, on order, and on rational thresholds.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod orbit;
pub mod partition;
pub mod rational;
pub mod tableau;
pub mod verify;

pub use catalog::{
    build_lambda, constants, datum_from_lambda, unitarity, validate_dominance, z_of, zk_points, FamilyConstants,
    GroupSpec, HighestWeightDatum, UnitarityProfile,
};
pub use classify::{
    annihilator_variety, associated_k, bmw_pipeline, classify, classify_lambda, closed_form, gk_dimension, ClassificationReport,
    ClosedForm,
};
pub use error::{Error, Result};
pub use orbit::{BalaCarter, ExceptionalType, OrbitDescriptor};
pub use partition::{AlgebraKind, ClassicalAlgebra, Numeral, Partition};
pub use rational::Rational;
pub use tableau::{Tableau, WeightSeq};
