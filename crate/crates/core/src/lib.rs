#![no_std]
#![allow(clippy::wrong_self_convention, clippy::type_complexity)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod error;
pub mod ideal;
pub mod independence;
pub mod krull;
pub mod report;
pub mod ring;
pub mod spectrum;
pub mod witness;

pub use error::{Error, Result};
