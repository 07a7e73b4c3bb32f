//! Error type shared by all operations in this crate.

use thiserror::Error;

/// Errors raised by construction, transforms and combination rules.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// A frame needs at least one outcome.
    #[error("frame must contain at least one outcome")]
    EmptyFrame,

    /// Outcome labels must be non-empty.
    #[error("outcome label may not be empty")]
    EmptyLabel,

    /// Outcome labels must be unique within a frame.
    #[error("duplicate outcome label `{0}`")]
    DuplicateLabel(String),

    /// Dense storage needs 2^n entries; refuse frames beyond the cap.
    #[error("frame has {outcomes} outcomes but the cap is {max}; dense storage would need 2^{outcomes} entries")]
    FrameTooLarge { outcomes: usize, max: usize },

    /// A label was not found in the frame.
    #[error("unknown outcome label `{0}`")]
    UnknownLabel(String),

    /// A subset index does not fit the frame's power set.
    #[error("subset 0x{bits:x} is out of range for a frame of {outcomes} outcomes")]
    SubsetOutOfRange { bits: u32, outcomes: usize },

    /// Mass assignments must be non-negative.
    #[error("negative mass {value} on {subset}")]
    NegativeMass { subset: String, value: f64 },

    /// Masses must sum to one.
    #[error("masses sum to {sum}, expected 1")]
    SumNotOne { sum: f64 },

    /// The same subset was assigned twice.
    #[error("subset {subset} assigned more than once")]
    DuplicateSubset { subset: String },

    /// An inverse transform did not produce a valid mass function.
    #[error("not a valid transform: {0}")]
    NotAValidTransform(String),

    /// Recombining weights did not produce a valid mass function.
    #[error("weight recombination is not a mass function: {0}")]
    NotAMass(String),

    /// The operation requires mass on the whole frame.
    #[error("mass function is dogmatic (no mass on the whole frame)")]
    DogmaticMass,

    /// Normalization is impossible: the conflict reached machine precision.
    #[error("total conflict: remaining mass is within machine precision of zero")]
    TotalConflict,

    /// Inputs must share one frame.
    #[error("mass functions are defined on different frames")]
    FrameMismatch,

    /// The focal-set tuple enumeration would exceed the guard.
    #[error("tuple enumeration needs more than {limit} terms")]
    TermExplosion { limit: u64 },

    /// The mass function is not u-separable.
    #[error("not separable: decomposition weight {weight} on {subset} exceeds 1")]
    NotSeparable { subset: String, weight: f64 },

    /// Combination rules need at least one input.
    #[error("no mass functions to combine")]
    EmptyInput,

    /// Discount factors need at least one non-empty group.
    #[error("no groups with a positive source count")]
    EmptyGroups,

    /// The precision factor is undefined for a group focused on the empty set.
    #[error("precision weighting is undefined for a group focused on the empty set")]
    EmptyFocalInGroup,

    /// Simple support generators refuse the empty set as focal element.
    #[error("focal element may not be the empty set")]
    EmptyFocal,

    /// The operation requires a singleton focal element.
    #[error("focal element {0} is not a singleton")]
    NotSingleton(String),

    /// Discount factors live in [0, 1].
    #[error("discount factor {0} is outside [0, 1]")]
    InvalidDiscount(f64),

    /// Simple support weights live in [0, 1]; decomposition weights in (0, inf).
    #[error("invalid weight {0}")]
    InvalidWeight(f64),

    /// The precision exponent must be a finite non-negative number.
    #[error("invalid eta {0}: must be finite and non-negative")]
    InvalidEta(f64),
}
