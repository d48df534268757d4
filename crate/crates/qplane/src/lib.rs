//! q-deformed quantum mechanics on the quantum plane.

// `!(x > 0.0)` style tests are there to reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circlerep;
pub mod dynamics;
pub mod error;
pub mod hopf;
pub mod planefun;
pub mod qcalc;
pub mod uncertainty;

pub use error::{QError, Result};

/// Library version, recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
