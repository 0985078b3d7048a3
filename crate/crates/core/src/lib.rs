//! Exact computations in the generic C¹₂-cofactor matroid: cofactor
//! matrices and motions of planar frameworks, a seeded generic-rank oracle,
//! graph operations, and the projective form of cofactor motions.
//!
//! All arithmetic is exact over the rationals.

pub mod cofactor;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod motion;
pub mod projective;
pub mod suites;

pub use cofactor::{Framework, Motion, PinTriple, Point};
pub use error::{Error, Result};
pub use graph::{edge, Edge, EdgeSet, Graph};
pub use linalg::{RatMatrix, RatVector, Rational, RowSpace};
pub use matroid::{Certificate, FiveSetCase, FiveSetClassification, GenericMatroid};
pub use projective::{LiftedFramework, Mat3, ProjectiveMotion, Sym3};
