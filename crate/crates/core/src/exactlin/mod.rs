//! Exact rational linear algebra.

mod echelon;
mod matrix;
mod poly;
mod rational;

pub use echelon::{dense_from_sparse, sparse_from_dense, EchelonBasis, Reduction, SparseVec};
pub use matrix::{rank, solve_membership, Matrix};
pub use poly::{char_poly, min_poly, UniPoly};
pub use rational::{denominator_lcm, Rational};
