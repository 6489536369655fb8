//! Exact computations in the Deligne category `Rep(S_t)`.
//!
//! Every interpolated answer is obtained from honest symmetric-group
//! computations at several consecutive ranks `n` and returned only once they
//! agree. Scalars are exact rationals and dimensions are polynomials in `t`.

pub mod acceptance;
pub mod arith;
pub mod chars;
pub mod diagrams;
pub mod error;
pub mod frob;
pub mod lie;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod repst;

pub use arith::{PolyQ, Rational};
pub use chars::{ClassFunction, FiniteSubgroup, Perm};
pub use error::{Error, Result};
pub use partitions::Partition;
