//! Exact field arithmetic and linear algebra over Q and GF(p).
//!
//! All values are immutable once built; operations are pure.

pub mod enumerate;
pub mod field;
pub mod matrix;
pub(crate) mod modp;
pub mod poly;
pub mod subspace;
pub mod vector;

pub use enumerate::{enumerate_lines, enumerate_vectors};
pub use field::{FieldSpec, Scalar};
pub use matrix::{charpoly, is_similar, kernel, rational_canonical_form, rref, solve, Matrix};
pub use poly::Poly;
pub use subspace::{contains, subspace_intersect, subspace_sum, Subspace};
