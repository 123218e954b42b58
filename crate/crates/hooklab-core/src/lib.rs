//! Exact-arithmetic partition statistics and identity verification.
//!
//! Everything here is exact: arbitrary-precision rationals, dense
//! polynomials over them, and truncated q-series with polynomial
//! coefficients. The crate provides partition enumeration and per-cell
//! statistics (hooks, contents, symplectic/orthogonal contents), builds
//! partition-sum and product sides of named identities, and verifies them
//! coefficient by coefficient. A small textual DSL describes eta-quotient
//! identities; the `hooklab` binary fronts the whole thing.

pub mod beck;
pub mod cells;
pub mod diagram;
pub mod dsl;
pub mod families;
pub mod identity;
pub mod kernel;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod series;

pub use cells::{Cell, CellError, CellView};
pub use families::FamilySpec;
pub use partition::{Partition, PartitionError};
pub use poly::Poly;
pub use rational::Rational;
pub use series::{QSeries, SeriesError};
