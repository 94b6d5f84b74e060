//! Closed braid diagrams as Gauss codes, and Morse (slice) presentations of
//! oriented virtual link diagrams.

mod gauss;
mod morse;

pub use gauss::{
    closure, parity_equivalent, parity_matrix, virtual_parity_between_components, CrossingSign,
    GaussCode, Incidence, Role, Visit, FORMAT,
};
pub use morse::{
    gauss_from_morse, render_closure, render_closure_closed, Event, MorsePresentation, Orient,
};
pub(crate) use morse::{left_top_over, Scan, Via};
