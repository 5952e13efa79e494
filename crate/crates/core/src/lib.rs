//! Rational normal curves meeting generic configurations of linear spaces:
//! exact geometry, witness construction, Hilbert functions of subspace
//! arrangements, and a certificate-producing feasibility classifier.

pub mod arrangements;
pub mod cli;
pub mod defectivity;
pub mod error;
pub mod exactgeom;
pub mod feasibility;
pub mod poly;
pub mod rnc;
pub mod segre;

pub use error::{Error, Result};
