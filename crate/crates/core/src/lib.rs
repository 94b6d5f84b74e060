//! Virtual braid groups and their flat, welded and unrestricted quotients:
//! word algebra, closures and Gauss codes, the braiding algorithm for
//! Morse-presented diagrams, Markov-type moves, R-matrix trace invariants with
//! a bracket state-sum oracle, and bounded move-graph search.

pub mod braid;
pub mod braiding;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod moves;
pub mod search;

pub use braid::{
    apply_relation, parse_word, BraidCategory, BraidWord, Direction, GenKind, Generator,
    Permutation, Relation, RelationKind,
};
pub use error::{Error, Result};
