//! Exact computer algebra for Lie representation theory: Young-diagram dimension
//! formulas, composite sl(N) representations, Casimir eigenvalues, Vogel-universal
//! dimension and trace formulas, and independent oracles for all of them.

pub mod casimir;
pub mod cli;
pub mod closed;
pub mod composite;
pub mod decomp;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod label;
pub mod linalg;
pub mod matrixoracle;
pub mod qdim;
pub mod rootsys;
pub mod vogel;
pub mod young;

pub use casimir::{AlgebraId, CasimirValue, Family};
pub use composite::CompositePair;
pub use error::{Error, Result};
pub use exact::{QPoint, Rational};
pub use label::IrrepLabel;
pub use young::Partition;
