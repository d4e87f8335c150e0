//! Closed-form asymptotics for typical monotone Boolean functions.

mod density;
mod estimators;
mod params;
mod special;

pub use density::{density_ratio, offset_window, DensityShape};
pub use estimators::{
    even_terms, expected_avg_sensitivity, expected_avg_sensitivity_even,
    expected_avg_sensitivity_even_exact, expected_avg_sensitivity_exact,
    expected_avg_sensitivity_odd_components, expected_avg_sensitivity_odd_components_exact,
    odd_lower_terms, odd_upper_terms, BandTerms, EvenTerms,
};
pub use params::{special_params, ParityCase, SpecialParams};
pub(crate) use special::{binomial_u64, classify_layers, classify_unchecked};
pub use special::{classify_special, SpecialClassSet, MIN_CLASSIFY_VARS};
