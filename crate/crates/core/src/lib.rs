//! Exact computation of the binomial-basis coefficients of `n ↦ f^(n−k,λ)`,
//! restricted standard Young tableaux `SYT_{h,α}(λ)`, and explicit
//! bijections between consecutive values of `α`.

pub mod bijection;
pub mod error;
mod json;
pub mod partition;
pub mod polynomial;
pub mod tableau;
pub mod verify;

pub use bijection::{
    alpha_chain, chain_to_alpha, compute_p, compute_q, down_map, up_map, Direction, Pivot, PivotP,
    PivotQ, Transcript,
};
pub use error::{Error, Result};
pub use partition::{partitions_of, partitions_up_to, Cell, Partition};
pub use polynomial::{
    a_coefficients, binomial, dimension_via_mu_identity, eval_f_large, fit_binomial_coefficients,
    fit_by_newton, BinomialPolynomial, CoefficientVector,
};
pub use tableau::{
    count_restricted, dimension_hook, enumerate_restricted, enumerate_syt, hook_length,
    satisfies_condition, RestrictionWindow, StandardTableau,
};
