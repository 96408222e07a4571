//! Tensor-network sequence models over categorical data.
//!
//! The crate implements four finite-horizon model classes — matrix product
//! states (MPS), their ring-closed variant (c-MPS), locally purified states
//! (LPS) and ring-closed LPS (c-LPS) — together with:
//!
//! - exact probability evaluation and partition functions via environment
//!   sweeps with log-domain scaling,
//! - constructive equivalences with classical hidden Markov models
//!   (chain and circular) and with Kraus-operator models (finite-horizon
//!   HQMM and circular HQMM), including transfer-operator canonicalization,
//! - maximum-likelihood training by projected mini-batch gradient descent
//!   with analytic Wirtinger gradients,
//! - brute-force reference evaluators used by the test suite and the
//!   `verify` CLI command.

pub mod classical;
pub mod data;
pub mod error;
pub mod models;
pub mod oracle;
pub mod quantum;
pub mod tensor;
pub mod training;

pub use error::{Error, Result};
