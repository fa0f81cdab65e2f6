//! Library half of the command-line tool: JSON data-transfer types,
//! canonical fixture persistence, and the worker-parallel enumeration
//! driver. The binary in `main.rs` is a thin dispatcher over these.

pub mod fixtures;
pub mod json;
pub mod parallel;
