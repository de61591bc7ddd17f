//! Exact computations with Hom-Lie algebras over ℚ and prime fields.

#![allow(clippy::needless_range_loop)]

pub mod config;
pub mod error;
pub mod exactmath;
pub mod spin;
pub mod algebra;
pub mod homlie;
pub mod zoo;
pub mod rootsys;
pub mod lowdim;
pub mod io;
pub mod suite;

pub use error::{Error, Result};
