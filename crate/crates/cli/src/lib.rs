//! Library half of the `lns` command line tool: the document format and the
//! experiment harnesses, kept linkable so tests can drive them directly.

pub mod document;
pub mod experiments;

pub use document::{load, Document, LoadError, NamedBba, ParseError};
pub use experiments::{
    default_eta_grid, default_s2_grid, default_t_list, run_exp2, run_exp3, run_table1,
    table1_inputs, RuleChoice, DEFAULT_SEED,
};
