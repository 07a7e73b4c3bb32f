//! Basic belief assignments over a frame.

use crate::error::Error;
use crate::frame::{Frame, SubsetIndex};
use crate::transform;
use crate::Result;

/// Tolerance for the unit-sum constraint at construction time.
pub const MASS_SUM_TOLERANCE: f64 = 1e-9;

/// A basic belief assignment: a dense vector of non-negative masses over all
/// 2^n subsets of a frame, summing to one.
///
/// Values are immutable after construction; combination rules return new
/// mass functions. Mass on the empty set is allowed and is interpreted as
/// conflict, so no constructor or rule renormalizes implicitly.
#[derive(Clone, Debug, PartialEq)]
pub struct MassFunction {
    frame: Frame,
    masses: Vec<f64>,
}

impl MassFunction {
    /// Builds a mass function from explicit `(subset, mass)` assignments;
    /// unlisted subsets get zero.
    pub fn new(frame: Frame, assignments: &[(SubsetIndex, f64)]) -> Result<MassFunction> {
        let mut masses = vec![0.0; frame.subset_count()];
        let mut seen = vec![false; frame.subset_count()];
        for &(subset, value) in assignments {
            frame.check_subset(subset)?;
            if !value.is_finite() || value < 0.0 {
                return Err(Error::NegativeMass {
                    subset: frame.describe(subset),
                    value,
                });
            }
            if seen[subset.index()] {
                return Err(Error::DuplicateSubset {
                    subset: frame.describe(subset),
                });
            }
            seen[subset.index()] = true;
            masses[subset.index()] = value;
        }
        Self::from_masses(frame, masses)
    }

    /// Builds a mass function from a dense vector indexed by subset.
    pub fn from_masses(frame: Frame, masses: Vec<f64>) -> Result<MassFunction> {
        if masses.len() != frame.subset_count() {
            return Err(Error::SubsetOutOfRange {
                bits: masses.len().saturating_sub(1) as u32,
                outcomes: frame.len(),
            });
        }
        for (i, &value) in masses.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::NegativeMass {
                    subset: frame.describe(SubsetIndex::from_bits(i as u32)),
                    value,
                });
            }
        }
        let sum: f64 = masses.iter().sum();
        if (sum - 1.0).abs() > MASS_SUM_TOLERANCE {
            return Err(Error::SumNotOne { sum });
        }
        Ok(MassFunction { frame, masses })
    }

    /// Internal constructor for values already validated by the caller.
    pub(crate) fn from_masses_unchecked(frame: Frame, masses: Vec<f64>) -> MassFunction {
        debug_assert_eq!(masses.len(), frame.subset_count());
        MassFunction { frame, masses }
    }

    /// The vacuous mass function: all mass on the whole frame.
    pub fn vacuous(frame: Frame) -> MassFunction {
        let mut masses = vec![0.0; frame.subset_count()];
        *masses.last_mut().expect("frame has at least one outcome") = 1.0;
        MassFunction { frame, masses }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Dense mass vector indexed by subset bits.
    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn mass(&self, subset: SubsetIndex) -> f64 {
        self.masses[subset.index()]
    }

    /// Mass on the empty set (conflict after conjunctive-style combination).
    pub fn conflict(&self) -> f64 {
        self.masses[0]
    }

    /// Mass on the whole frame (the degree of ignorance).
    pub fn ignorance(&self) -> f64 {
        self.masses[self.frame.full_set().index()]
    }

    /// Subsets carrying strictly positive mass.
    pub fn focal_elements(&self) -> impl Iterator<Item = (SubsetIndex, f64)> + '_ {
        self.masses
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0.0)
            .map(|(i, &m)| (SubsetIndex::from_bits(i as u32), m))
    }

    /// True when all mass sits on the whole frame.
    pub fn is_vacuous(&self) -> bool {
        self.ignorance() == 1.0
    }

    /// True when the whole frame carries no mass.
    pub fn is_dogmatic(&self) -> bool {
        self.ignorance() == 0.0
    }

    /// True when a single proper subset carries all the mass.
    pub fn is_categorical(&self) -> bool {
        !self.is_vacuous() && self.masses.contains(&1.0)
    }

    /// Returns the simple-support view of this mass function, if it has one:
    /// at most one focal element besides the whole frame.
    pub fn as_simple_support(&self) -> Option<crate::ssf::SimpleSupport> {
        let full = self.frame.full_set();
        let mut focal = None;
        for (subset, _) in self.focal_elements() {
            if subset == full {
                continue;
            }
            if focal.replace(subset).is_some() {
                return None;
            }
        }
        let weight = self.ignorance();
        match focal {
            Some(subset) => crate::ssf::SimpleSupport::new(self.frame.clone(), subset, weight).ok(),
            // Only the whole frame is focal: the vacuous simple support.
            None => crate::ssf::SimpleSupport::new(self.frame.clone(), full, 1.0).ok(),
        }
    }

    /// Commonality vector `q(A) = sum over B ⊇ A of m(B)`, in O(n 2^n).
    pub fn commonality(&self) -> Vec<f64> {
        let mut q = self.masses.clone();
        transform::superset_sums_in_place(&mut q);
        q
    }

    /// Implicability vector `b(A) = sum over B ⊆ A of m(B)`, in O(n 2^n).
    pub fn implicability(&self) -> Vec<f64> {
        let mut b = self.masses.clone();
        transform::subset_sums_in_place(&mut b);
        b
    }

    /// Pignistic probability over outcomes: each focal mass is split evenly
    /// among its members, then the distribution is renormalized by
    /// `1 - m(∅)` so that mass retained on the empty set does not leak into
    /// the decision.
    pub fn pignistic(&self) -> Result<Vec<f64>> {
        let conflict = self.conflict();
        if conflict >= 1.0 - 1e-12 {
            return Err(Error::TotalConflict);
        }
        let mut betp = vec![0.0; self.frame.len()];
        for (subset, mass) in self.focal_elements() {
            if subset.is_empty() {
                continue;
            }
            let share = mass / subset.cardinality() as f64;
            for (i, slot) in betp.iter_mut().enumerate() {
                if subset.contains(i) {
                    *slot += share;
                }
            }
        }
        for p in &mut betp {
            *p /= 1.0 - conflict;
        }
        Ok(betp)
    }
}
