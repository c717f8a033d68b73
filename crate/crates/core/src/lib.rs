//! Maximum agreement of the code formed by (affine) homomorphisms between
//! finite groups.
//!
//! Groups are explicit Cayley tables over dense element indices. The crate
//! computes `Λ(G, H)`, the largest fraction of `G` on which two distinct
//! affine homomorphisms `G → H` can agree, in two independent ways:
//!
//! * [`homspace::lambda_bruteforce`] enumerates `Hom(G, H)` and scans pairs.
//! * [`formula::lambda_formula`] evaluates the closed form in terms of the
//!   normal-subgroup indices of `G` and the common prime divisors of the two
//!   orders, which is exact whenever `G` is solvable or `H` is nilpotent.
//!
//! [`verify`] runs the structural property sweeps over the [`catalog`].

#![forbid(unsafe_code)]

pub mod catalog;
pub mod error;
pub mod formula;
pub mod group;
pub mod homspace;
pub mod mask;
pub mod number;
pub mod perm;
pub mod rational;
pub mod report;
pub mod spec_file;
pub mod structure;
pub mod verify;

pub use catalog::{make_named, GroupSpec};
pub use error::{Error, Result};
pub use formula::{lambda_bounds, lambda_formula, BoundsReport, FormulaVerdict};
pub use group::{ElementId, FiniteGroup};
pub use homspace::{lambda_bruteforce, AffineHomomorphism, GroupMap, Homomorphism, LambdaWitness};
pub use mask::SubsetMask;
pub use perm::Permutation;
pub use rational::Rational;
pub use report::AnalysisReport;
pub use structure::{QuotientResult, SolvabilityClass, SubgroupRecord};
