//! Knowledge-graph embedding engine: data loading, negative sampling,
//! eleven score functions with analytic gradients, sparse-SGD training with
//! lock-free multi-worker updates, and filtered ranked-retrieval evaluation.
//!
//! Four tasks are wired end to end in [`pipelines`]: link prediction over a
//! single graph, entity alignment between two graphs, entity typing against
//! an ontology vocabulary, and multi-source link prediction over a joint
//! graph merged by entity alignment.
//!
//! All numerics are generic over [`Scalar`] (`f32` or `f64`); concrete
//! aliases for the common instantiations live at the crate root.

pub mod error;
pub mod evaluation;
pub mod kgdata;
pub mod models;
pub mod pipelines;
pub mod sampling;
pub mod scalar;
pub mod synth;
pub mod training;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Single-precision model parameters (training default).
pub type ModelParams32 = models::ModelParams<f32>;
/// Double-precision model parameters (gradient-oracle precision).
pub type ModelParams64 = models::ModelParams<f64>;
/// Single-precision optimizer state.
pub type OptimizerState32 = training::OptimizerState<f32>;
/// Double-precision optimizer state.
pub type OptimizerState64 = training::OptimizerState<f64>;
/// Single-precision trainer.
pub type Trainer32 = training::Trainer<f32>;
/// Double-precision trainer.
pub type Trainer64 = training::Trainer<f64>;
