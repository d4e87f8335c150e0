//! Truth tables and exact sensitivity measures of Boolean functions.

mod analysis;
mod fraction;
mod truth_table;

pub(crate) use analysis::minimal_ones_table;
pub use analysis::{
    activity, activity_vector, average_sensitivity, average_sensitivity_pointwise, extremal_points,
    flip_allowed_unchecked, flip_preserves_monotone, is_monotone, layer_profile,
    partial_derivative, pointwise_sensitivity, ActivityVector, LayerProfile, PointSet,
};
pub use fraction::ExactFraction;
pub(crate) use truth_table::{word_neighbor_view, word_variable};
pub use truth_table::{TruthTable, MAX_VARS};
