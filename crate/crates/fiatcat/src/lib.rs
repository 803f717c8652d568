//! Exact computational workbench for two finite strict 2-categories that
//! extend the symmetric group: one built on binary relations, whose
//! decategorification is the integral semigroup algebra of the partial
//! bijections of `{1..n}`, and one built on the partition monoid, whose
//! decategorification is the integral semigroup algebra of the factorizable
//! block bijections. All arithmetic is exact; every structural claim the
//! library exposes is machine-checked at desk scale.

pub mod bicat;
pub mod decat;
mod error;
pub mod linear;
pub mod partitions;
pub mod relations;

pub use error::{Error, Result};
