//! The Suzuki functor at the critical level as a terminating reduction.

mod hmodule;
mod poisson;
mod reduce;
mod verify;
mod weyl;

pub use hmodule::{is_peelable, letter_class, HElement, HModule, LetterClass, Strategy};
pub use reduce::{coinvariant_reduce, op_on_vacuum, theta, theta_of, TensorClass, TensorKey};
pub use verify::{
    classify, confluence_check, estimate_check, estimate_monomials, main_theorem_cell, symbol_cell, tk_hat_check, two_route_t2,
    verify_main_theorem, Cell,
};
pub use weyl::{class_representatives, suzuki_on_verma, suzuki_on_weyl, SuzukiModuleReport};
pub use poisson::{heisenberg_virasoro_pairs, poisson_theta_check, PoissonOutcome};
