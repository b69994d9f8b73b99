//! The coefficient systems of the monotonicity formula in the variables
//! `k = 2s/(p-1)` and `m = n - 2s`, and exact checks of their identities.

mod ibp;
mod jordan;
mod systems;
mod thresholds;

pub use ibp::{as_printed_variants, ibp_catalog, verify_ibp_catalog, IbpIdentity};
pub use jordan::{d1_of, jordan_decompose, JordanDecomposition};
pub use systems::{
    build_coeff_set, build_delta_set, build_greek_set, closed_form, sign_analysis, sign_analysis_km,
    verify_km_forms, CoeffSet, DeltaSet, GreekSet, SignAnalysis,
};
pub use thresholds::{comparison_quartic, quartic_largest_root, verify_thresholds};
