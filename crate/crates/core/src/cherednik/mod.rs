//! The rational Cherednik algebra of `S_m` and its modules.

mod closed;
mod dunkl;
mod element;
mod hayashi;
mod pbw;
mod quotient;
mod verma;

pub use closed::{theta_closed_form, ThetaTag};
pub use dunkl::dunkl_apply;
pub use element::{permute_exps, render_perm, render_word, Cherednik, CherednikElement, Letter, PbwWord};
pub use hayashi::hayashi_bracket_h;
pub use pbw::{pbw_dimension_check, PbwCount};
pub use quotient::{default_central_elements, simple_quotient, QuotientModule};
pub use verma::{monomials_up_to, polynomial_representation, GenVerma, VermaKey, VermaVector, DEFAULT_CAP};
