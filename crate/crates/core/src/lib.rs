//! Exact computation of chromatic quasisymmetric functions of incomparability
//! graphs of natural unit interval orders.
//!
//! The crate works entirely over the integers: polynomials in `t` carry
//! arbitrary-precision coefficients, and power sum expansions keep the
//! `1/z_lambda` factor implicit. Modules, bottom up:
//!
//! - [`combinat`]: partitions, compositions, index sets, standard Young tableaux;
//! - [`tpoly`]: polynomials in `t` and in `x_1..x_m`;
//! - [`order`]: natural unit interval orders and word statistics;
//! - [`qsym`]: fundamental and power sum bases, evaluation;
//! - [`characters`]: symmetric group characters by two independent methods;
//! - [`orient`]: acyclic orientations and the word/orientation bijection;
//! - [`chromatic`]: the expansions of `X_G` and their cross-checks;
//! - [`verify`]: exhaustive suites over all posets up to a size.

pub mod characters;
pub mod chromatic;
pub mod combinat;
pub mod error;
pub mod limits;
pub mod order;
pub mod orient;
pub mod qsym;
pub mod tpoly;
pub mod verify;

pub use combinat::{IndexSet, Partition};
pub use error::{Error, Result};
pub use order::{IncompGraph, NaturalUnitIntervalOrder};
pub use qsym::{FVector, PVector};
pub use tpoly::{TPoly, XPoly};
