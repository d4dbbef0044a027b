//! Exact-arithmetic invariants of rational plane curves and the canonical
//! class of spaces of stable maps.
//!
//! The library side exposes, in dependency order:
//!
//! - [`arith`]: arbitrary-precision integers/rationals, binomials, canonical
//!   decimal formatting and strict parsing;
//! - [`counts`]: the table of counts `N_d` of rational plane curves through
//!   `3d - 1` general points, built by the quadratic recursion;
//! - [`genus`]: genus invariants and singularity counts of the one-parameter
//!   families cut out by `3d - 2` general points;
//! - [`canonical`]: canonical-divisor expansions for spaces of stable maps to
//!   projective space, in the basis of boundary divisors;
//! - [`document`]: the output document shared by every CLI command, with
//!   text/JSON/CSV renderings;
//! - [`commands`]: the command implementations behind the `severi` binary.

pub mod arith;
pub mod canonical;
pub mod commands;
pub mod counts;
pub mod document;
pub mod genus;

pub use arith::{Int, Rat};
pub use counts::GwTable;
pub use genus::{genus_report, GenusReport};
