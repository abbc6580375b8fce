//! Finite groups as explicit multiplication tables, with exact decision
//! procedures for subgroup-embedding properties (normal, permutable,
//! S-permutable, semipermutable, SS-permutable, NSS-permutable, ...) and for
//! the group classes in which those properties are transitive.
//!
//! Everything is exhaustive over the subgroup lattice, so the intended scale
//! is groups of a few hundred elements.

pub mod analysis;
pub mod arith;
pub mod bitset;
pub mod classes;
pub mod error;
pub mod group;
pub mod lattice;
pub mod permutability;
pub mod series;
pub mod subgroups;

pub use analysis::{GroupAnalysis, QuotientAnalysis};
pub use bitset::BitSet;
pub use classes::{ClassCounterexample, ClassId, ClassVerdict, Verdict, Via};
pub use error::{GroupError, Result};
pub use group::{BuildConfig, Elem, ElementWord, GroupSpec, GroupTable};
pub use lattice::{SubgroupId, SubgroupLattice};
pub use permutability::{PredicateCache, PredicateId, PredicateVerdict, Refutation};
pub use subgroups::ElementSet;
