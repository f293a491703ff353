//! Ground truths for `χ_e`: a direct sum over proper colorings, and the
//! `d_+`/`d_-` operator construction of `F_e` on `Λ ⊗ Q[y_1, ..., y_k]`.
//!
//! Neither route touches tableaux or Macdonald polynomials.

mod colorings;
mod operators;

pub use colorings::{chromatic_brute, chromatic_symmetric};
pub use operators::{
    chi_from_f, d_minus, d_plus, f_via_operators, f_via_operators_checked, hecke_t, OperatorReport,
    VkElement,
};

#[cfg(test)]
mod tests;
