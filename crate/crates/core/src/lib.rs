//! Two-level Boolean minimization with the Tail-Eliminate heuristic.
//!
//! The pipeline is: expand a function to all of its prime implicants
//! ([`expand`]), build the overlap map ([`temap`]), and repeatedly drop one
//! selective implicant that overlaps a tail implicant ([`engine`]). The
//! [`oracle`] module provides the exact minimum and equivalence checks used
//! to score the heuristic, and [`bench`] runs it over many functions.

pub mod bench;
pub mod cli;
pub mod cover;
pub mod cube;
pub mod engine;
pub mod error;
pub mod expand;
pub mod oracle;
pub mod temap;
pub mod textio;

pub use cover::Cover;
pub use cube::{Cube, Literal, MintermSet, MAX_WIDTH, TRUTH_TABLE_CAP};
pub use engine::{
    end_condition, select_removal, te_minimize, te_minimize_with, AnchorPolicy, EndReason,
    IterationRecord, MinimizationTrace, Mode, Options,
};
pub use error::{Error, Result};
pub use expand::{expand_cover, prime_implicants, FunctionSpec};
pub use oracle::{exact_minimum_cover, score, ScoreReport};
pub use temap::{build_te_map, classify, overlap, ImplicantClass, TeMap};
