//! Exact invariants: Laurent polynomials, the bracket state sum, and
//! R-matrix trace invariants.

pub mod matrix;
pub mod model;
pub mod poly;
pub mod state_sum;
pub mod trace;

pub use matrix::Matrix;
pub use model::{check_model, ModelCheck, ModelReport, RMatrixModel};
pub use poly::LaurentPoly;
pub use state_sum::{bracket_state_sum, closure_bracket, loop_value, normalized_bracket};
pub use trace::{
    markov_axiom_report, normalized_invariant, rho, rho_with_budget, trace, trace_invariant,
    AxiomConfig, Quotient, RuleResult, RuleStatus, TraceReport, DEFAULT_DIMENSION_BUDGET,
};
