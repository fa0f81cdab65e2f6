//! Exact arithmetic for the polytopes of triply stochastic tensors.
//!
//! An `n×n×n` nonnegative tensor is *line-stochastic* when every line (one
//! free index, two fixed) sums to 1, and *plane-stochastic* when every plane
//! (two free indices) sums to 1. Each family forms a polytope in `R^{n^3}`,
//! written here as the solution set of a (0,1) equality system `Mx = 1`
//! together with `x >= 0`.
//!
//! This crate provides the pieces needed to study those polytopes exactly,
//! with no floating point anywhere:
//!
//! * [`tensor`] — tensor values over arbitrary-precision rationals,
//!   stochasticity predicates, and the permutation actions that preserve
//!   extremality;
//! * [`linalg`] — dense rational rank / solve / nullspace routines;
//! * [`polytope`] — the line and plane constraint systems, polytope
//!   dimensions, and coordinate-face dimensions;
//! * [`vertex`] — vertex certification by two independent characterizations
//!   (basic-solution column test and halfspace row test), exhaustive vertex
//!   enumeration over column bases, convex decomposition into vertices, and
//!   the scaled-extreme search relating the two polytopes;
//! * [`latin`] — Latin squares and their bijection with (0,1)
//!   line-permutation tensors, plus (0,1) plane-permutation tensors;
//! * [`bounds`] — exact big-integer / rational evaluation of the known
//!   vertex-count bounds.
//!
//! The crate is `no_std` (with `alloc`); all I/O, serialization, and
//! parallel orchestration live in the companion `tristoch-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod latin;
pub mod linalg;
pub mod polytope;
pub mod rational;
pub mod tensor;
pub mod vertex;

pub use num_bigint::{BigInt, BigUint};
pub use rational::Rational;
