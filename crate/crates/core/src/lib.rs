//! Exact enumerative combinatorics for Beck-type partition identities.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: partitions, profile words, constraint classes and
//!   exhaustive enumeration by size or by perimeter.
//! - [`bijections`]: Glaisher's map, the refined Franklin map for one
//!   special part value, and the profile rewrite sending distinct-part
//!   partitions to odd-part partitions of the same perimeter.
//! - [`counting`]: brute-force counters built on enumeration only.
//! - [`series`]: integer polynomials, rational power series, q-binomials,
//!   closed forms and recurrences.
//! - [`verify`]: cross-checks between the independent routes above, and the
//!   scan of `g_r(M) <= h_r(M)`.
//!
//! All arithmetic is exact.

pub mod bijections;
pub mod counting;
mod error;
pub mod partitions;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{
    fibonacci, m2_index, perimeter, BigCount, Constraint, ConstraintSpec, Partition, ProfileWord,
};
