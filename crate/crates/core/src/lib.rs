//! Spectral minimax over the spectraplex and the simplex.
//!
//! For symmetric `A₁…A_m` the game `min_X max_y Σ yᵢ Aᵢ • X` has a value, and
//! this crate computes it with primal and dual certificates:
//!
//! - [`symmat`]: dense symmetric matrices and a cyclic Jacobi eigensolver.
//! - [`domains`]: spectraplex and simplex points, linear oracles, payoffs.
//! - [`saddle`]: optimistic multiplicative-weights solver with certified bounds.
//! - [`embed`]: the single-SDP reformulation, lifts, dual extraction.
//! - [`sdpa`]: SDPA sparse text export.
//! - [`classic`]: diagonal reduction to matrix games and an exact oracle.
//!
//! Everything is generic over [`Scalar`] (`f32`, `f64`); the aliases at the
//! crate root fix `f64`, and the `F32` aliases fix `f32`.

// `!(x > 0)` rejects NaN as well as non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classic;
pub mod domains;
pub mod embed;
pub mod error;
pub mod saddle;
pub mod sample;
pub mod scalar;
pub mod sdpa;
pub mod symmat;
pub mod tolerance;

pub use embed::ShiftPolicy;
pub use error::{DualBlock, Error, Result};
pub use saddle::Sense;
pub use scalar::Scalar;
pub use tolerance::Tolerances;

pub type SymMatrix = symmat::SymMatrix<f64>;
pub type EigDecomposition = symmat::EigDecomposition<f64>;
pub type SpectraplexPoint = domains::SpectraplexPoint<f64>;
pub type SimplexPoint = domains::SimplexPoint<f64>;
pub type InstanceSet = domains::InstanceSet<f64>;
pub type SaddleConfig = saddle::SaddleConfig<f64>;
pub type SaddleCertificate = saddle::SaddleCertificate<f64>;
pub type SdpEmbedding = embed::SdpEmbedding<f64>;
pub type PrimalLift = embed::PrimalLift<f64>;
pub type DualLift = embed::DualLift<f64>;
pub type VectorGame = classic::VectorGame<f64>;

pub type SymMatrixF32 = symmat::SymMatrix<f32>;
pub type InstanceSetF32 = domains::InstanceSet<f32>;
pub type SaddleConfigF32 = saddle::SaddleConfig<f32>;
pub type SaddleCertificateF32 = saddle::SaddleCertificate<f32>;
