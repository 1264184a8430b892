//! Spectral graph bisection primitives.
//!
//! Builds graph Laplacians, computes their full spectrum with a dense
//! Jacobi eigensolver, derives median-cut spectral bisections from Fiedler
//! vectors, and constructs a structured graph family whose spectrum is
//! known in closed form. A brute-force oracle provides exact optimal
//! bisections at small orders so the spectral cut can be compared against
//! ground truth.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats, and the
//! command-line driver live in the companion `fiedler-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bisect;
pub mod eigen;
pub mod family;
pub mod graph;
pub mod oracle;

pub use bisect::{Bisection, SignPartition};
pub use eigen::{Eigenspace, Spectrum};
pub use family::{AnalyticSpectrum, FamilySpec, SubspaceDecomposition};
pub use graph::{CutVector, Graph, Laplacian, Ratio, VertexSet};
pub use oracle::OracleResult;
