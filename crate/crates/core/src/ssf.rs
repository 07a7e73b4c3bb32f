//! Simple support functions.

use crate::error::Error;
use crate::frame::{Frame, SubsetIndex};
use crate::mass::MassFunction;
use crate::Result;

/// A simple support function `A^w`: mass `1 - w` on one focal subset `A` and
/// mass `w` on the whole frame.
///
/// The weight is stored as `ln w` so that combining thousands of sources in
/// one group stays a sum of logarithms instead of an underflowing product.
/// A weight of one (or a focal element equal to the whole frame) makes the
/// function vacuous.
#[derive(Clone, Debug, PartialEq)]
pub struct SimpleSupport {
    frame: Frame,
    focal: SubsetIndex,
    log_weight: f64,
}

impl SimpleSupport {
    /// Builds `focal^weight` with `weight` in `[0, 1]`; zero weight is the
    /// categorical assignment on `focal`.
    pub fn new(frame: Frame, focal: SubsetIndex, weight: f64) -> Result<SimpleSupport> {
        frame.check_subset(focal)?;
        if !(0.0..=1.0).contains(&weight) || weight.is_nan() {
            return Err(Error::InvalidWeight(weight));
        }
        Ok(SimpleSupport {
            frame,
            focal,
            log_weight: weight.ln(),
        })
    }

    /// Builds a simple support function directly from `ln w ≤ 0`.
    pub fn from_log_weight(frame: Frame, focal: SubsetIndex, log_weight: f64) -> Result<SimpleSupport> {
        frame.check_subset(focal)?;
        if log_weight > 0.0 || log_weight.is_nan() {
            return Err(Error::InvalidWeight(log_weight.exp()));
        }
        Ok(SimpleSupport {
            frame,
            focal,
            log_weight,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn focal(&self) -> SubsetIndex {
        self.focal
    }

    /// The weight `w = m(Θ)`, recovered from its logarithm. Underflows to
    /// zero rather than failing.
    pub fn weight(&self) -> f64 {
        self.log_weight.exp()
    }

    pub fn log_weight(&self) -> f64 {
        self.log_weight
    }

    /// Vacuous simple support functions carry no information: either the
    /// focal element is the whole frame or the weight is one.
    pub fn is_vacuous(&self) -> bool {
        self.focal == self.frame.full_set() || self.log_weight == 0.0
    }

    /// Expands to the dense mass-function form.
    pub fn to_mass(&self) -> MassFunction {
        let mut masses = vec![0.0; self.frame.subset_count()];
        let full = self.frame.full_set().index();
        if self.is_vacuous() {
            masses[full] = 1.0;
        } else {
            let w = self.weight();
            masses[self.focal.index()] = 1.0 - w;
            masses[full] = w;
        }
        MassFunction::from_masses_unchecked(self.frame.clone(), masses)
    }
}
