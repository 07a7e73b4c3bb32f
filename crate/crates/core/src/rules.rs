//! Reference combination rules, each n-ary over a list of mass functions on
//! one frame.
//!
//! Conjunctive and disjunctive combination run through commonality and
//! implicability products in O(n 2^n) regardless of the number of sources,
//! which is what lets the scaling experiments push into the thousands. The
//! Dubois-Prade and PCR6 rules do not factor through either transform, so
//! they enumerate focal-set tuples explicitly behind a term-count guard;
//! both use simultaneous n-ary semantics since neither is associative.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::frame::{Frame, SubsetIndex};
use crate::mass::MassFunction;
use crate::transform;
use crate::weights::{canonical_decomposition, WeightMap};
use crate::Result;

/// Guard on the number of focal-set tuples DP and PCR6 will enumerate.
pub const MAX_ENUMERATION_TERMS: u64 = 10_000_000;

/// Dempster normalization (and pignistic decisions) fail once the remaining
/// mass is this close to zero.
pub const CONFLICT_EPSILON: f64 = 1e-12;

/// Identifier for the reference rules, used for dispatch from the CLI and
/// for the global step of the grouping rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleId {
    Conjunctive,
    Dempster,
    Disjunctive,
    Dp,
    Pcr6,
    Cautious,
    Average,
}

impl RuleId {
    /// All reference rules, in presentation order.
    pub const ALL: [RuleId; 7] = [
        RuleId::Conjunctive,
        RuleId::Dempster,
        RuleId::Disjunctive,
        RuleId::Dp,
        RuleId::Pcr6,
        RuleId::Cautious,
        RuleId::Average,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Conjunctive => "conjunctive",
            RuleId::Dempster => "dempster",
            RuleId::Disjunctive => "disjunctive",
            RuleId::Dp => "dp",
            RuleId::Pcr6 => "pcr6",
            RuleId::Cautious => "cautious",
            RuleId::Average => "average",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "conjunctive" => Ok(RuleId::Conjunctive),
            "dempster" => Ok(RuleId::Dempster),
            "disjunctive" => Ok(RuleId::Disjunctive),
            "dp" => Ok(RuleId::Dp),
            "pcr6" => Ok(RuleId::Pcr6),
            "cautious" => Ok(RuleId::Cautious),
            "average" => Ok(RuleId::Average),
            other => Err(format!("unknown rule `{other}`")),
        }
    }
}

/// A source-reliability factor in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscountFactor(f64);

impl DiscountFactor {
    pub fn new(alpha: f64) -> Result<DiscountFactor> {
        if !(0.0..=1.0).contains(&alpha) || alpha.is_nan() {
            return Err(Error::InvalidDiscount(alpha));
        }
        Ok(DiscountFactor(alpha))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Applies a rule by identifier.
pub fn combine(rule: RuleId, ms: &[MassFunction]) -> Result<MassFunction> {
    match rule {
        RuleId::Conjunctive => combine_conjunctive(ms),
        RuleId::Dempster => combine_dempster(ms),
        RuleId::Disjunctive => combine_disjunctive(ms),
        RuleId::Dp => combine_dp(ms),
        RuleId::Pcr6 => combine_pcr6(ms),
        RuleId::Cautious => combine_cautious(ms),
        RuleId::Average => combine_average(ms),
    }
}

fn check_same_frame(ms: &[MassFunction]) -> Result<&Frame> {
    let first = ms.first().ok_or(Error::EmptyInput)?;
    for m in &ms[1..] {
        if m.frame() != first.frame() {
            return Err(Error::FrameMismatch);
        }
    }
    Ok(first.frame())
}

/// Conjunctive combination: the elementwise product of commonalities.
/// Conflict stays on the empty set; nothing is renormalized.
pub fn combine_conjunctive(ms: &[MassFunction]) -> Result<MassFunction> {
    let frame = check_same_frame(ms)?.clone();
    let mut q = ms[0].commonality();
    for m in &ms[1..] {
        for (acc, factor) in q.iter_mut().zip(m.commonality()) {
            *acc *= factor;
        }
    }
    q[0] = 1.0;
    transform::commonality_to_mass(&frame, &q)
}

/// Dempster's rule: conjunctive combination followed by normalization.
/// Fails with [`Error::TotalConflict`] once `1 - κ` reaches machine
/// precision, which is exactly the failure mode the scaling experiments
/// probe for.
pub fn combine_dempster(ms: &[MassFunction]) -> Result<MassFunction> {
    let conj = combine_conjunctive(ms)?;
    let kappa = conj.conflict();
    let remaining = 1.0 - kappa;
    if remaining <= CONFLICT_EPSILON {
        return Err(Error::TotalConflict);
    }
    let mut masses = conj.masses().to_vec();
    masses[0] = 0.0;
    for value in &mut masses {
        *value /= remaining;
    }
    MassFunction::from_masses(conj.frame().clone(), masses)
}

/// Disjunctive combination: the elementwise product of implicabilities.
pub fn combine_disjunctive(ms: &[MassFunction]) -> Result<MassFunction> {
    let frame = check_same_frame(ms)?.clone();
    let mut b = ms[0].implicability();
    for m in &ms[1..] {
        for (acc, factor) in b.iter_mut().zip(m.implicability()) {
            *acc *= factor;
        }
    }
    b[frame.full_set().index()] = 1.0;
    transform::implicability_to_mass(&frame, &b)
}

/// Cautious combination: the per-subset minimum of canonical weights,
/// recombined conjunctively. Requires every input to be non-dogmatic.
pub fn combine_cautious(ms: &[MassFunction]) -> Result<MassFunction> {
    let frame = check_same_frame(ms)?.clone();
    let mut min_weights: Option<Vec<f64>> = None;
    for m in ms {
        let wm = canonical_decomposition(m)?;
        match &mut min_weights {
            None => min_weights = Some(wm.weights().to_vec()),
            Some(acc) => {
                for (slot, &w) in acc.iter_mut().zip(wm.weights()) {
                    if w < *slot {
                        *slot = w;
                    }
                }
            }
        }
    }
    let weights = min_weights.expect("checked non-empty");
    WeightMap::new(frame, weights)?.to_mass()
}

/// Averaging combination: the elementwise arithmetic mean.
pub fn combine_average(ms: &[MassFunction]) -> Result<MassFunction> {
    let frame = check_same_frame(ms)?.clone();
    let scale = 1.0 / ms.len() as f64;
    let mut masses = vec![0.0; frame.subset_count()];
    for m in ms {
        for (acc, &value) in masses.iter_mut().zip(m.masses()) {
            *acc += value;
        }
    }
    for value in &mut masses {
        *value *= scale;
    }
    MassFunction::from_masses(frame, masses)
}

/// Dubois-Prade combination: each focal-set tuple sends its product to the
/// intersection when non-empty, otherwise to the union.
pub fn combine_dp(ms: &[MassFunction]) -> Result<MassFunction> {
    enumerate_tuples(ms, TupleRule::DuboisPrade)
}

/// PCR6 combination: non-conflicting tuples behave conjunctively; the
/// product of a conflicting tuple is split among the tuple's members, each
/// receiving the share proportional to its own mass.
pub fn combine_pcr6(ms: &[MassFunction]) -> Result<MassFunction> {
    enumerate_tuples(ms, TupleRule::Pcr6)
}

#[derive(Clone, Copy)]
enum TupleRule {
    DuboisPrade,
    Pcr6,
}

fn enumerate_tuples(ms: &[MassFunction], rule: TupleRule) -> Result<MassFunction> {
    let frame = check_same_frame(ms)?.clone();
    let focals: Vec<Vec<(SubsetIndex, f64)>> =
        ms.iter().map(|m| m.focal_elements().collect()).collect();
    let mut terms: u128 = 1;
    for f in &focals {
        terms = terms.saturating_mul(f.len().max(1) as u128);
    }
    if terms > MAX_ENUMERATION_TERMS as u128 {
        return Err(Error::TermExplosion {
            limit: MAX_ENUMERATION_TERMS,
        });
    }

    let mut out = vec![0.0; frame.subset_count()];
    let mut choice = Vec::with_capacity(focals.len());
    visit_tuples(
        &focals,
        0,
        frame.full_set(),
        SubsetIndex::EMPTY,
        1.0,
        &mut choice,
        rule,
        &mut out,
    );
    MassFunction::from_masses(frame, out)
}

#[allow(clippy::too_many_arguments)]
fn visit_tuples(
    focals: &[Vec<(SubsetIndex, f64)>],
    depth: usize,
    intersection: SubsetIndex,
    union: SubsetIndex,
    product: f64,
    choice: &mut Vec<(SubsetIndex, f64)>,
    rule: TupleRule,
    out: &mut [f64],
) {
    if depth == focals.len() {
        if !intersection.is_empty() {
            out[intersection.index()] += product;
            return;
        }
        match rule {
            TupleRule::DuboisPrade => out[union.index()] += product,
            TupleRule::Pcr6 => {
                let denom: f64 = choice.iter().map(|&(_, mass)| mass).sum();
                for &(subset, mass) in choice.iter() {
                    out[subset.index()] += product * mass / denom;
                }
            }
        }
        return;
    }
    for &(subset, mass) in &focals[depth] {
        choice.push((subset, mass));
        visit_tuples(
            focals,
            depth + 1,
            intersection.intersection(subset),
            union.union(subset),
            product * mass,
            choice,
            rule,
            out,
        );
        choice.pop();
    }
}

/// Discounts a mass function by reliability `alpha`: proper subsets keep
/// `alpha` of their mass and the rest moves to the whole frame.
pub fn discount(m: &MassFunction, alpha: DiscountFactor) -> MassFunction {
    let a = alpha.value();
    let full = m.frame().full_set().index();
    let mut masses: Vec<f64> = m.masses().iter().map(|&v| a * v).collect();
    masses[full] = 1.0 - a + a * m.masses()[full];
    MassFunction::from_masses_unchecked(m.frame().clone(), masses)
}
