//! Exact computations around one-sided cycle shuffles of a deck of `n` cards.

pub mod combinat;
pub mod error;
pub mod exactlin;
pub mod filtration;
pub mod groupalg;
pub mod reps;
pub mod specht;
pub mod spectrum;
pub mod symfunc;

pub use combinat::{GapDecomposition, LacunarSet, Partition};
pub use error::{Error, Result};
pub use exactlin::{Matrix, Rational, UniPoly};
pub use filtration::{FSpace, FibonacciFiltration};
pub use groupalg::{GroupAlgebraElement, Permutation, SymmetricGroup};
pub use reps::Representation;
pub use specht::SpechtModule;
pub use spectrum::{SpechtAnnihilatorFiltration, SpectrumPrediction};
pub use symfunc::SchurExpansion;
