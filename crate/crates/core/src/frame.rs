//! Frames of discernment and bitmask-encoded subsets.
//!
//! A frame is an ordered list of outcome labels. Subsets of the frame are
//! encoded as integer bitmasks: bit `i` set means outcome `i` is a member,
//! so `0` is the empty set and `2^n - 1` is the whole frame. All dense
//! vectors in this crate (masses, commonalities, implicabilities, weights)
//! are indexed by that encoding.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::Result;

/// Default cap on the number of outcomes; dense 2^n storage must fit memory.
pub const DEFAULT_MAX_OUTCOMES: usize = 20;

/// A subset of a frame, encoded as a bitmask over outcome positions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetIndex(u32);

impl SubsetIndex {
    /// The empty set.
    pub const EMPTY: SubsetIndex = SubsetIndex(0);

    /// Wraps a raw bitmask. Validity against a frame is checked where the
    /// subset is used, via [`Frame::check_subset`].
    pub const fn from_bits(bits: u32) -> Self {
        SubsetIndex(bits)
    }

    /// The subset containing exactly outcome `i`.
    pub const fn singleton(outcome: usize) -> Self {
        SubsetIndex(1 << outcome)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Position of this subset in a dense length-2^n vector.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Number of outcomes in the subset.
    pub const fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, outcome: usize) -> bool {
        self.0 & (1 << outcome) != 0
    }

    pub const fn union(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 | other.0)
    }

    pub const fn intersection(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 & other.0)
    }

    pub const fn is_subset_of(self, other: SubsetIndex) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Debug for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetIndex(0b{:b})", self.0)
    }
}

#[derive(Debug)]
struct FrameData {
    labels: Vec<String>,
}

/// An ordered frame of discernment with unique, non-empty outcome labels.
///
/// Cloning is cheap; the label table is shared.
#[derive(Clone, Debug)]
pub struct Frame {
    data: Arc<FrameData>,
}

impl Frame {
    /// Builds a frame from outcome labels, capped at
    /// [`DEFAULT_MAX_OUTCOMES`] outcomes.
    pub fn new<I, S>(labels: I) -> Result<Frame>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_max_outcomes(labels, DEFAULT_MAX_OUTCOMES)
    }

    /// Builds a frame with an explicit outcome cap. Raising the cap past the
    /// default trades memory for frame size: every dense vector holds 2^n
    /// entries.
    pub fn with_max_outcomes<I, S>(labels: I, max_outcomes: usize) -> Result<Frame>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > max_outcomes || labels.len() >= u32::BITS as usize {
            return Err(Error::FrameTooLarge {
                outcomes: labels.len(),
                max: max_outcomes.min(u32::BITS as usize - 1),
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Frame {
            data: Arc::new(FrameData { labels }),
        })
    }

    /// Number of outcomes.
    pub fn len(&self) -> usize {
        self.data.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.labels.is_empty() // construction rejects empty frames
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(&self) -> usize {
        1 << self.len()
    }

    /// The whole frame as a subset.
    pub fn full_set(&self) -> SubsetIndex {
        SubsetIndex((self.subset_count() - 1) as u32)
    }

    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }

    pub fn label(&self, outcome: usize) -> &str {
        &self.data.labels[outcome]
    }

    /// Looks up the position of a label.
    pub fn outcome(&self, label: &str) -> Result<usize> {
        self.data
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Builds a subset from outcome labels.
    pub fn subset<'a, I>(&self, labels: I) -> Result<SubsetIndex>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut bits = 0u32;
        for label in labels {
            bits |= 1 << self.outcome(label)?;
        }
        Ok(SubsetIndex(bits))
    }

    /// Checks that a subset fits this frame's power set.
    pub fn check_subset(&self, subset: SubsetIndex) -> Result<()> {
        if subset.index() < self.subset_count() {
            Ok(())
        } else {
            Err(Error::SubsetOutOfRange {
                bits: subset.bits(),
                outcomes: self.len(),
            })
        }
    }

    /// Renders a subset as `{}`, `{a,b}`, or `ALL` for the whole frame.
    pub fn describe(&self, subset: SubsetIndex) -> String {
        if subset == self.full_set() {
            return "ALL".to_string();
        }
        let members: Vec<&str> = (0..self.len())
            .filter(|&i| subset.contains(i))
            .map(|i| self.label(i))
            .collect();
        format!("{{{}}}", members.join(","))
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.labels == other.data.labels
    }
}

impl Eq for Frame {}
