//! Partitions with distinct even parts and their relatives.
//!
//! This crate holds the pure algorithmic layer: value types for every
//! partition family involved (distinct-even partitions, overlined-one
//! partitions, two kinds of signed partitions, x-labeled partitions,
//! bicolored partitions and partition pairs), exhaustive enumerators for
//! each of them, the explicit bijections between them, and a truncated
//! q-series engine with exact bignum coefficients used to check the
//! generating functions behind every counting identity.
//!
//! The crate is `no_std` and only needs `alloc`. IO, JSON and the command
//! line front end live in the `parteq` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bijections;
pub mod counts;
pub mod enumerate;
mod error;
pub mod families;
pub mod membership;
mod notation;
pub mod partition;
pub mod qseries;
pub mod stats;

pub use bijections::{
    apply_f1, apply_f1_inv, apply_f2, apply_f2_inv, apply_g1, apply_g1_inv, apply_g2, apply_g2_inv,
    apply_h, apply_h_inv, roundtrip_report, Bijection, RoundtripReport,
};
pub use enumerate::{Enumerator, DEFAULT_LIMIT};
pub use error::{
    BijectionError, EnumerateError, ParseError, SeriesError, StructureError, UnknownTag,
};
pub use families::{
    BicoloredPartition, Color, FPartition, PartitionPair, SignedPartition, XLabeledPartition,
};
pub use membership::{validate_membership, Family, FamilyValue, Rejection};
pub use partition::{Part, Partition};
pub use stats::{Statistic, Statistics};
