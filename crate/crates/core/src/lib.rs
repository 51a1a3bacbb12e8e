//! Exact algebra kernels: rational Cherednik algebras of type A, truncated
//! enveloping algebras of affine gl_n near the critical level, Segal–Sugawara
//! operators, and the Suzuki coinvariant functor with its centre map.

pub mod affine;
pub mod cherednik;
pub mod error;
pub mod lincomb;
pub mod linalg;
pub mod param;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod suzuki;
pub mod symgroup;

pub use error::{AlgebraError, Result};
pub use lincomb::LinComb;
pub use param::{Param, ParamPoint, ParamScalar};
pub use poly::{complete_homogeneous, power_sum, CommPoly, Mono};
pub use scalar::{Coeff, Scalar};
