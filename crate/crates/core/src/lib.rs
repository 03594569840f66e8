//! Exact enumeration and counting for the eight families of partitions of
//! `[n]`: sets or lists of blocks, each block a set or a list, with or
//! without the noncrossing restriction.
//!
//! The crate is organised bottom-up:
//!
//! - [`count`], [`partitions`], [`series`]: big-integer closed forms,
//!   integer partitions / weak compositions, truncated power series.
//! - [`structures`]: block partitions, Dyck paths and the standard
//!   Dyck path / noncrossing partition correspondence.
//! - [`enumerate`]: brute-force generators for every family.
//! - [`recurrences`]: fast partition-indexed recurrences for the two
//!   "noncrossing lists" families and closed counts for the rest.
//! - [`transform`]: the noncrossing partition transform on sequences.
//! - [`bijection`]: peak-labeled Dyck paths to sets of lists and back.
//! - [`verify`]: the cross-validation checks used by `ncpart verify`.

pub mod bijection;
pub mod count;
pub mod enumerate;
pub mod partitions;
pub mod recurrences;
pub mod series;
pub mod structures;
pub mod transform;
pub mod verify;

pub use count::BigCount;
pub use enumerate::Family;
pub use series::PowerSeries;
pub use structures::{BlockPartition, DyckPath, PeakLabeledDyckPath};
