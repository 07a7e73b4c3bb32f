//! Fast Möbius transforms over the power-set lattice.
//!
//! The in-place routines below run in O(n 2^n) over a dense length-2^n
//! vector. They convert between masses, commonalities (superset sums,
//! `q(A) = sum over B ⊇ A of m(B)`) and implicabilities (subset sums,
//! `b(A) = sum over B ⊆ A of m(B)`). The conjunctive rule is an elementwise
//! product of commonalities and the disjunctive rule an elementwise product
//! of implicabilities, so these four loops carry most of the crate.

use crate::error::Error;
use crate::frame::Frame;
use crate::mass::MassFunction;
use crate::Result;

/// Replaces `values[A]` with the sum over all subsets of `A`.
pub fn subset_sums_in_place(values: &mut [f64]) {
    debug_assert!(values.len().is_power_of_two());
    let mut bit = 1;
    while bit < values.len() {
        for a in 0..values.len() {
            if a & bit != 0 {
                values[a] += values[a ^ bit];
            }
        }
        bit <<= 1;
    }
}

/// Inverse of [`subset_sums_in_place`].
pub fn inverse_subset_sums_in_place(values: &mut [f64]) {
    debug_assert!(values.len().is_power_of_two());
    let mut bit = 1;
    while bit < values.len() {
        for a in 0..values.len() {
            if a & bit != 0 {
                values[a] -= values[a ^ bit];
            }
        }
        bit <<= 1;
    }
}

/// Replaces `values[A]` with the sum over all supersets of `A`.
pub fn superset_sums_in_place(values: &mut [f64]) {
    debug_assert!(values.len().is_power_of_two());
    let mut bit = 1;
    while bit < values.len() {
        for a in 0..values.len() {
            if a & bit == 0 {
                values[a] += values[a | bit];
            }
        }
        bit <<= 1;
    }
}

/// Inverse of [`superset_sums_in_place`].
pub fn inverse_superset_sums_in_place(values: &mut [f64]) {
    debug_assert!(values.len().is_power_of_two());
    let mut bit = 1;
    while bit < values.len() {
        for a in 0..values.len() {
            if a & bit == 0 {
                values[a] -= values[a | bit];
            }
        }
        bit <<= 1;
    }
}

/// Rebuilds a mass function from a dense commonality vector.
///
/// Requires `q(∅) = 1`. Fails with [`Error::NotAValidTransform`] if the
/// inverse violates the unit-sum or non-negativity constraints beyond 1e-9;
/// smaller negative round-off is clamped to zero.
pub fn commonality_to_mass(frame: &Frame, commonalities: &[f64]) -> Result<MassFunction> {
    if commonalities.len() != frame.subset_count() {
        return Err(Error::NotAValidTransform(format!(
            "expected {} entries, got {}",
            frame.subset_count(),
            commonalities.len()
        )));
    }
    if (commonalities[0] - 1.0).abs() > 1e-9 {
        return Err(Error::NotAValidTransform(format!(
            "q(empty set) = {}, expected 1",
            commonalities[0]
        )));
    }
    let mut masses = commonalities.to_vec();
    inverse_superset_sums_in_place(&mut masses);
    finish_inverse(frame, masses)
}

/// Rebuilds a mass function from a dense implicability vector.
///
/// Requires `b(Θ) = 1`; error behavior mirrors [`commonality_to_mass`].
pub fn implicability_to_mass(frame: &Frame, implicabilities: &[f64]) -> Result<MassFunction> {
    if implicabilities.len() != frame.subset_count() {
        return Err(Error::NotAValidTransform(format!(
            "expected {} entries, got {}",
            frame.subset_count(),
            implicabilities.len()
        )));
    }
    let full = frame.full_set().index();
    if (implicabilities[full] - 1.0).abs() > 1e-9 {
        return Err(Error::NotAValidTransform(format!(
            "b(whole frame) = {}, expected 1",
            implicabilities[full]
        )));
    }
    let mut masses = implicabilities.to_vec();
    inverse_subset_sums_in_place(&mut masses);
    finish_inverse(frame, masses)
}

fn finish_inverse(frame: &Frame, mut masses: Vec<f64>) -> Result<MassFunction> {
    for value in &mut masses {
        if !value.is_finite() {
            return Err(Error::NotAValidTransform(format!("non-finite mass {value}")));
        }
        if *value < 0.0 {
            if *value < -1e-9 {
                return Err(Error::NotAValidTransform(format!("negative mass {value}")));
            }
            *value = 0.0;
        }
    }
    let sum: f64 = masses.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::NotAValidTransform(format!("masses sum to {sum}")));
    }
    Ok(MassFunction::from_masses_unchecked(frame.clone(), masses))
}
