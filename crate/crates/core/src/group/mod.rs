//! Concrete finite groups as Cayley tables, and the constructions that
//! produce them.

mod build;
mod spec;
mod table;
mod word;

pub use build::{
    build_from_spec, direct_product, induced_table, quotient, BuildConfig, DEFAULT_ORDER_CAP,
};
pub use spec::{alternating_generators, symmetric_generators, ActorImages, GroupSpec, SpecNode};
pub use table::{element_order, AssociativityCheck, Elem, GroupTable, FULL_ASSOCIATIVITY_LIMIT};
pub use word::{verify_relations, ElementWord};
