//! Exact μ-bases, implicitization and scroll lifts of rational plane curves.

pub mod arith;
pub mod battery;
pub mod curve;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod report;
pub mod scroll;
pub mod syzygy;

pub use error::{Error, Result};
