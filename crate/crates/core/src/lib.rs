//! Exact identity verification and critical-exponent computation for the
//! fractional Lane-Emden equation `(-Δ)^s u = |u|^{p-1} u`, `2 < s < 3`.

pub mod coefficients;
pub mod criterion;
pub mod error;
pub mod exact_algebra;
pub mod exponents;
pub mod report;
pub mod scaling_identities;
pub mod scan;
pub mod suite;

pub use error::{Error, Result};
pub use report::{Check, VerificationReport};
pub use scan::ExecMode;
