//! Modal-regression structured low-rank matrix recovery (MR-SLMR).
//!
//! This crate implements a multi-view subspace learner for cross-view
//! classification. A common projection is recovered by an ADMM loop that
//! alternates singular value thresholding, a half-quadratic update of a
//! kernel-density error model, a label-structured representation solve and
//! a projection solve. Around the solver sit the pieces needed to exercise
//! it end to end: PCA preprocessing, 1-NN pairwise evaluation, a synthetic
//! cross-view data generator and seeded corruption models.
//!
//! The crate is `no_std`-compatible (`--no-default-features --features libm`);
//! only wall-clock timestamps in the solver history require `std`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod dataset;
pub mod error;
pub mod eval;
pub mod kernels;
pub mod modal;
pub mod noise;
pub mod solver;

mod fmath;

pub use dataset::{LabelIndicator, MultiViewDataset};
pub use error::{Error, Result};
pub use eval::{EvalReport, PcaModel};
pub use kernels::{inf_norm, soft_threshold, solve_spd, svt, SpdSolution};
pub use modal::{estimate_sigma, gaussian_kernel, hq_weight, modal_loss, KernelKind, KernelSpec};
pub use noise::{NoiseKind, NoiseSpec};
pub use solver::{
    fit, IterationRecord, ProjectionModel, SolverConfig, SolverState, Variant,
};

/// Dense `f64` matrix carrier used throughout the crate.
pub type DenseMatrix = nalgebra::DMatrix<f64>;

/// Dense `f64` column vector.
pub type DenseVector = nalgebra::DVector<f64>;
