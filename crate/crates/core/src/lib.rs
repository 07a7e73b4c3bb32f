//! Dempster-Shafer mass functions and combination rules built to scale to
//! large numbers of sources.
//!
//! The crate provides:
//!
//! - dense mass functions over bitmask-encoded subsets of a frame, with the
//!   fast Möbius transforms between masses, commonalities and
//!   implicabilities ([`frame`], [`mass`], [`transform`]);
//! - canonical decomposition into simple support components and its inverse
//!   ([`ssf`], [`weights`]);
//! - the classical n-ary combination rules: conjunctive, Dempster,
//!   disjunctive, Dubois-Prade, PCR6, cautious and average, plus
//!   reliability discounting ([`rules`]);
//! - the LNS rule, which groups simple supports by focal element and
//!   discounts each group by its share of the sources, staying O(S n 2^n)
//!   and free of auto-conflict no matter how many sources pile up
//!   ([`lns`]);
//! - seeded, splittable generators for synthetic corpora ([`synth`]).
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

pub mod error;
pub mod frame;
pub mod lns;
pub mod mass;
pub mod rules;
pub mod ssf;
pub mod synth;
pub mod transform;
pub mod weights;

pub use error::Error;
pub use frame::{Frame, SubsetIndex, DEFAULT_MAX_OUTCOMES};
pub use lns::{
    combine_lns, combine_lns_ssfs, decompose_to_ssfs, discount_factors, group_ssfs, GlobalRule,
    GroupSummary, IssfPolicy, LnsConfig,
};
pub use mass::MassFunction;
pub use rules::{
    combine, combine_average, combine_cautious, combine_conjunctive, combine_dempster,
    combine_disjunctive, combine_dp, combine_pcr6, discount, DiscountFactor, RuleId,
};
pub use ssf::SimpleSupport;
pub use synth::{exp2_corpus, exp3_corpus, random_dominant_ssf, random_ssf, Seed, Stream};
pub use weights::{canonical_decomposition, WeightMap};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
