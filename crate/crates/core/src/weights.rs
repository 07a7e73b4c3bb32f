//! Canonical decomposition of non-dogmatic mass functions into simple
//! support components, and its inverse.
//!
//! Every non-dogmatic mass function factors as a conjunctive combination of
//! generalized simple support components `A^{w(A)}`, one per proper subset
//! `A`. The weight is the alternating product of commonalities over the
//! supersets of `A`, computed here in log space with one inverse superset
//! transform: `ln w(A) = -Σ_{B ⊇ A} (-1)^{|B|-|A|} ln q(B)`. Weights above
//! one mark inverse components; masses whose weights all stay within `[0, 1]`
//! are the u-separable ones.

use crate::error::Error;
use crate::frame::{Frame, SubsetIndex};
use crate::mass::MassFunction;
use crate::transform;
use crate::Result;

/// Commonalities are clamped here before taking logarithms; the alternating
/// sums are ill-conditioned near dogmatic masses.
const LOG_CLAMP: f64 = 1e-300;

/// Weights within this distance of one are snapped to exactly one so that
/// round-off never fabricates a component.
const WEIGHT_SNAP: f64 = 1e-12;

/// Canonical-decomposition weights, one per subset, with the whole-frame
/// entry fixed at one (it never forms a component).
#[derive(Clone, Debug, PartialEq)]
pub struct WeightMap {
    frame: Frame,
    weights: Vec<f64>,
}

impl WeightMap {
    /// Builds a weight map from a dense vector of positive weights.
    pub fn new(frame: Frame, mut weights: Vec<f64>) -> Result<WeightMap> {
        if weights.len() != frame.subset_count() {
            return Err(Error::SubsetOutOfRange {
                bits: weights.len().saturating_sub(1) as u32,
                outcomes: frame.len(),
            });
        }
        for &w in &weights {
            if !w.is_finite() || w <= 0.0 {
                return Err(Error::InvalidWeight(w));
            }
        }
        weights[frame.full_set().index()] = 1.0;
        Ok(WeightMap { frame, weights })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Dense weight vector indexed by subset bits.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, subset: SubsetIndex) -> f64 {
        self.weights[subset.index()]
    }

    /// True when some component is an inverse simple support function,
    /// i.e. the source mass function is not u-separable.
    pub fn has_inverse_component(&self, tolerance: f64) -> bool {
        self.weights.iter().any(|&w| w > 1.0 + tolerance)
    }

    /// Conjunctively recombines all components back into a mass function.
    ///
    /// Inverse components (weights above one) are handled as generalized
    /// masses; the product must still land on a valid mass function, else
    /// [`Error::NotAMass`] is returned.
    pub fn to_mass(&self) -> Result<MassFunction> {
        // q(B) = Π_{A ⊉ B} w(A) = exp(Σ_all ln w - Σ_{A ⊇ B} ln w(A)).
        let mut log_weights: Vec<f64> = self.weights.iter().map(|&w| w.ln()).collect();
        transform::superset_sums_in_place(&mut log_weights);
        let total = log_weights[0];
        let mut q: Vec<f64> = log_weights.iter().map(|&t| (total - t).exp()).collect();
        q[0] = 1.0;
        let mut masses = q;
        transform::inverse_superset_sums_in_place(&mut masses);
        for value in &mut masses {
            if !value.is_finite() {
                return Err(Error::NotAMass(format!("non-finite mass {value}")));
            }
            if *value < 0.0 {
                if *value < -1e-9 {
                    return Err(Error::NotAMass(format!("negative mass {value}")));
                }
                *value = 0.0;
            }
        }
        let sum: f64 = masses.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::NotAMass(format!("masses sum to {sum}")));
        }
        Ok(MassFunction::from_masses_unchecked(self.frame.clone(), masses))
    }
}

/// Computes the canonical-decomposition weight of every proper subset.
///
/// Fails with [`Error::DogmaticMass`] when the whole frame carries no mass
/// (the commonalities would vanish and the logarithms diverge).
pub fn canonical_decomposition(m: &MassFunction) -> Result<WeightMap> {
    if m.ignorance() <= 0.0 {
        return Err(Error::DogmaticMass);
    }
    let mut log_q: Vec<f64> = m
        .commonality()
        .iter()
        .map(|&q| q.max(LOG_CLAMP).ln())
        .collect();
    transform::inverse_superset_sums_in_place(&mut log_q);
    let mut weights: Vec<f64> = log_q.iter().map(|&r| (-r).exp()).collect();
    for w in &mut weights {
        if (*w - 1.0).abs() <= WEIGHT_SNAP {
            *w = 1.0;
        }
    }
    weights[m.frame().full_set().index()] = 1.0;
    WeightMap::new(m.frame().clone(), weights)
}
