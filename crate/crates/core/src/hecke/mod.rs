//! The Iwahori–Hecke algebra of the extended affine Weyl group with
//! parameters `q_0 = 1`, `q_i = q`.

mod character;
mod element;
mod presentation;
mod theta;

pub use character::{d_steinberg_values, Character, Domain, ParabolicLabel};
pub use element::{basis_inverse_ops, basis_ops, Element, GenOp};
pub use presentation::{coxeter_order, verify_presentation, PresentationReport, RelationCheck};
pub use theta::{
    dominant_decomposition, is_dominant, theta, theta_from, theta_length_bound, theta_ops,
    theta_ops_from,
};

pub(crate) use element::{accumulate, times_q_minus_one, times_qinv_minus_one};
