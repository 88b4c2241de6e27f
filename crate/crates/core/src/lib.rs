//! Decide whether a (maximal) planar graph is the center of some planar
//! graph, construct a certifying host graph when it is, and reproduce the
//! small-order census by exhaustive enumeration of maximal planar graphs.
//!
//! The pipeline, bottom to top:
//!
//! - [`graph`]: the immutable simple-graph substrate with eager all-pairs
//!   distances, eccentricity profiles, separators, domination, products and
//!   isometry checks.
//! - [`plane`]: rotation systems, face tracing, recognition of maximal
//!   planar graphs, and Jordan-side classification of cycles.
//! - [`qcc`]: quasi-eccentric sets, distance vectors relative to a face, and
//!   the level/near-set classification driving the host construction.
//! - [`criteria`]: the quasi-eccentric face criterion, the separating-cycle
//!   condition, and the dominating-face test.
//! - [`gadget`]: the decorated tower family glued into faces to pull
//!   eccentricities up to a target.
//! - [`synthesis`]: per-face case dispatch, host assembly, radius
//!   certification, the exact-center planar host, and the classical
//!   four-vertex augmentation.
//! - [`enumerate`]: isomorph-free generation of small maximal planar graphs
//!   by diagonal flips, with canonical codes and the criterion census.
//! - [`oracle`]: independent brute-force reference implementations used by
//!   the test suites.
//! - [`fixtures`]: built-in example graphs with machine-checked facts.
//! - [`io`] / [`cli`]: JSON and DOT formats and the command-line driver.

pub mod cli;
pub mod criteria;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod gadget;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod plane;
pub mod qcc;
pub mod synthesis;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, EccentricityProfile, Graph};
pub use plane::{FaceRef, PlaneGraph};
pub use qcc::{CaseKind, FaceConfiguration, QccResult};
pub use synthesis::SynthesisReport;
