//! Crystal combinatorics for affine type A: one-row crystals and the
//! combinatorial R-matrix, rigged configurations, the Kerov-Kirillov-
//! Reshetikhin (KKR) bijection realized both as a vertex-operator
//! composition and as the classical box-adding/removal algorithm, and the
//! box-ball soliton cellular automaton driven by a carrier.
//!
//! Modules:
//! - [`crystal`]: elements of `B_l`, Kashiwara operators, tensor words,
//!   energy function and combinatorial R (classical and affine).
//! - [`rigged`]: rigged configurations, vacancy numbers, validation,
//!   enumeration and rendering.
//! - [`vertex`]: normal ordering of affine words and the vertex-operator
//!   realization of the bijection (mode assignment, level maps, full run).
//! - [`classical`]: the classical KKR algorithm in both directions, used as
//!   an independent oracle against the vertex construction.
//! - [`boxball`]: time evolution by carrier, soliton content, scattering
//!   data, inverse scattering and action-angle reporting.
//! - [`selftest`]: named check suites shared by the CLI self-test and the
//!   acceptance test target.

pub mod boxball;
pub mod classical;
pub mod crystal;
pub mod error;
pub mod rigged;
pub mod selftest;
pub mod vertex;

pub use error::{Error, Result};
