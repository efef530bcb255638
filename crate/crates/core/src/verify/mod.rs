//! One checker per structural result about Cayley graphs of quandles, plus a
//! suite runner that sweeps them over families of groups.
//!
//! A checker either returns a [`VerificationReport`] (passed, or failed with
//! a small [`Witness`]) or a [`VerifyError`] when its input is out of scope,
//! e.g. an Alexander check on a nonabelian group.

mod checks;
pub mod registry;
mod report;
mod suite;

pub use checks::*;
pub use report::{TheoremId, VerificationReport, Witness};
pub use suite::{run_suite, RawTable, SuiteConfig};

use thiserror::Error;

use crate::dsl::DslError;
use crate::graph::GraphError;
use crate::group::GroupError;
use crate::quandle::QuandleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error("unknown check {0:?}")]
    UnknownTheorem(String),
    #[error("invalid suite config: {0}")]
    Config(String),
}
