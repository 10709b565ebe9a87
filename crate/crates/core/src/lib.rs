//! Torus localisation for the moduli space of semistable sheaves on the
//! projective plane with Hilbert polynomial `5m + 3`.
//!
//! The pipeline runs [`catalog`] (fixed components) into [`tangent`] (weights
//! of the tangent space) into [`homology`] (Betti numbers via cell
//! decomposition). [`tables`] regenerates the fixed-point tables and
//! [`golden`] holds the reference values they are checked against.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod golden;
pub mod homology;
pub mod tables;
pub mod tangent;
pub mod weights;

pub use catalog::{enumerate_all, Family, FixedComponent, Kind, Stratum};
pub use error::{Error, Result};
pub use homology::{assemble, poincare, verify, PoincareSummary};
pub use tangent::{tangent_weights, TangentModel};
pub use weights::{Character, OneParamSubgroup, Permutation, WeightMultiset};
