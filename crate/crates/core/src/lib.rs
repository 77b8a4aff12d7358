//! Exact-arithmetic toolkit for Fock-space quantization and its reduction by
//! the compact members of the three basic reductive dual pairs.
//!
//! Everything is computed over the field of Gaussian rationals; no floating
//! point is used anywhere. The crate is organized as:
//!
//! - [`scalar`], [`poly`], [`linalg`]: exact coefficients, sparse polynomial
//!   calculus with the canonical Poisson bracket, and exact linear algebra;
//! - [`fock`]: polarized states, the prequantization operator, momentum
//!   observables, and the Dirac-condition test surface;
//! - [`dual_pairs`]: the three matrix models, invariant graded pieces, and the
//!   Hilbert-map pullback;
//! - [`orbit_rings`]: determinantal and Pfaffian models of orbit-closure
//!   coordinate rings, graded dimensions, and reduced operators;
//! - [`hw_reps`]: highest-weight bookkeeping and representation counts.

pub mod dual_pairs;
mod error;
pub mod fock;
pub mod hw_reps;
pub mod linalg;
pub mod poly;
pub mod rng;
pub mod scalar;

pub mod orbit_rings;

pub use error::{Error, Result};
pub use dual_pairs::{CoordMap, KGenerator, PairCase, PairSpec, WModel};
pub use fock::{FockState, Observable};
pub use hw_reps::{DeltaMonomial, HWeight};
pub use orbit_rings::{DimMethod, GradedTable, OrbitStratum};
pub use poly::{ExpVec, Poly, VarKind};
pub use scalar::Scalar;
