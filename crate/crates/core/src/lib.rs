//! Constructive distinguishing witnesses for quaternion algebras and
//! Pfister forms over `Q`, with exact local arithmetic and brute-force
//! cross-checks.

pub mod arith;
pub mod brauer;
pub mod cli;
pub mod oracle;
pub mod places;
pub mod quadform;
pub mod theorems;

mod error;

pub use error::{Error, Result};
