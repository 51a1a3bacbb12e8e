//! Affine gl_n at and near the critical level.

mod algebra;
mod checks;
mod mode;
mod vacuum;

pub use algebra::{Affine, AffineElement, Order};
pub use checks::*;
pub use mode::{abs_height, elementary, identity_matrix, negative_height, pairing, pbw_length, render_affine_word, LevelForm, Mode, Word};
pub use vacuum::{power_vector, quadratic_vector, ss_vector, trace_power_coefficients, OpSpec};
