//! The LNS ("large number of sources") combination rule.
//!
//! The rule assumes the majority of sources are reliable and estimates each
//! source's reliability from how many others say the same thing:
//!
//! 1. decompose every input into simple support functions (inputs that
//!    already are simple support bypass the decomposition),
//! 2. group the simple supports by focal element; within a group the
//!    conjunctive combination is just the product of weights, accumulated
//!    here as a sum of logarithms so thousands of sources cannot underflow,
//! 3. discount each group by its share of the sources, optionally weighted
//!    by the precision of its focal element,
//! 4. combine the (at most 2^n) discounted group representatives with a
//!    conjunctive-style global rule.
//!
//! Grouping makes the inner step conflict-free, so mass surviving on the
//! empty set after the global step measures disagreement between groups
//! rather than auto-conflict. The rule is commutative but neither
//! associative nor idempotent, and the vacuous mass function is neutral.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::frame::{Frame, SubsetIndex};
use crate::mass::MassFunction;
use crate::rules::{self, DiscountFactor};
use crate::ssf::SimpleSupport;
use crate::weights::canonical_decomposition;
use crate::Result;

/// Weights this far above one still count as one; beyond it the component
/// is a genuine inverse simple support function.
const ISSF_TOLERANCE: f64 = 1e-9;

/// How decomposition treats inverse simple support components.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IssfPolicy {
    /// Reject inputs that are not u-separable.
    #[default]
    Strict,
    /// Clamp inverse components to weight one. Lossy: recombining the
    /// result no longer reproduces the input.
    Drop,
}

impl fmt::Display for IssfPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IssfPolicy::Strict => "strict",
            IssfPolicy::Drop => "drop",
        })
    }
}

impl FromStr for IssfPolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "strict" => Ok(IssfPolicy::Strict),
            "drop" => Ok(IssfPolicy::Drop),
            other => Err(format!("unknown issf policy `{other}`")),
        }
    }
}

/// Rule used for the final combination of group representatives.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GlobalRule {
    #[default]
    Conjunctive,
    Dp,
    Pcr6,
}

impl GlobalRule {
    fn apply(self, ms: &[MassFunction]) -> Result<MassFunction> {
        match self {
            GlobalRule::Conjunctive => rules::combine_conjunctive(ms),
            GlobalRule::Dp => rules::combine_dp(ms),
            GlobalRule::Pcr6 => rules::combine_pcr6(ms),
        }
    }
}

impl fmt::Display for GlobalRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GlobalRule::Conjunctive => "conjunctive",
            GlobalRule::Dp => "dp",
            GlobalRule::Pcr6 => "pcr6",
        })
    }
}

impl FromStr for GlobalRule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "conjunctive" => Ok(GlobalRule::Conjunctive),
            "dp" => Ok(GlobalRule::Dp),
            "pcr6" => Ok(GlobalRule::Pcr6),
            other => Err(format!("unknown global rule `{other}`")),
        }
    }
}

/// Configuration for [`combine_lns`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LnsConfig {
    /// Exponent on the precision factor; ignored when `use_precision` is
    /// off. Larger values discount imprecise (large) focal elements harder.
    pub eta: f64,
    /// Weight group proportions by the precision factor `n / |A|`.
    pub use_precision: bool,
    /// Rule for the final combination across groups.
    pub global_rule: GlobalRule,
    /// Treatment of non-u-separable inputs.
    pub issf_policy: IssfPolicy,
}

impl Default for LnsConfig {
    fn default() -> Self {
        LnsConfig {
            eta: 1.0,
            use_precision: true,
            global_rule: GlobalRule::Conjunctive,
            issf_policy: IssfPolicy::Strict,
        }
    }
}

/// One group of simple support functions sharing a focal element: how many
/// sources landed in it and their combined weight, kept in log space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupSummary {
    pub focal: SubsetIndex,
    /// Number of non-vacuous simple supports in the group.
    pub count: usize,
    /// Sum of the members' log weights: the log of the conjunctively
    /// combined group weight.
    pub inner_log_weight: f64,
}

impl GroupSummary {
    /// The combined group weight; underflows to zero rather than failing.
    pub fn inner_weight(&self) -> f64 {
        self.inner_log_weight.exp()
    }
}

/// Splits a mass function into its simple support components.
///
/// Inputs that already have simple support form are passed through, even
/// when dogmatic; anything else goes through the canonical decomposition
/// and must be non-dogmatic. One component is returned per subset with
/// weight below one. Inverse components trip [`Error::NotSeparable`] under
/// the strict policy and are clamped to weight one (i.e. omitted) under
/// the drop policy.
pub fn decompose_to_ssfs(m: &MassFunction, policy: IssfPolicy) -> Result<Vec<SimpleSupport>> {
    if let Some(ssf) = m.as_simple_support() {
        return Ok(if ssf.is_vacuous() { Vec::new() } else { vec![ssf] });
    }
    let wm = canonical_decomposition(m)?;
    let mut components = Vec::new();
    for (i, &w) in wm.weights().iter().enumerate() {
        if w >= 1.0 {
            if w > 1.0 + ISSF_TOLERANCE && policy == IssfPolicy::Strict {
                return Err(Error::NotSeparable {
                    subset: m.frame().describe(SubsetIndex::from_bits(i as u32)),
                    weight: w,
                });
            }
            continue;
        }
        components.push(SimpleSupport::from_log_weight(
            m.frame().clone(),
            SubsetIndex::from_bits(i as u32),
            w.ln(),
        )?);
    }
    Ok(components)
}

/// Clusters simple support functions by focal element.
///
/// Vacuous members are skipped entirely, which is what makes the vacuous
/// mass function a neutral element of the rule. Each group's log weights
/// are summed in sorted order, so the summaries do not depend on input
/// order down to the last bit.
pub fn group_ssfs(ssfs: &[SimpleSupport]) -> Result<Vec<GroupSummary>> {
    let mut frame: Option<&Frame> = None;
    let mut groups: BTreeMap<SubsetIndex, Vec<f64>> = BTreeMap::new();
    for ssf in ssfs {
        match frame {
            None => frame = Some(ssf.frame()),
            Some(f) if f != ssf.frame() => return Err(Error::FrameMismatch),
            Some(_) => {}
        }
        if ssf.is_vacuous() {
            continue;
        }
        groups.entry(ssf.focal()).or_default().push(ssf.log_weight());
    }
    Ok(groups
        .into_iter()
        .map(|(focal, mut logs)| {
            logs.sort_by(f64::total_cmp);
            GroupSummary {
                focal,
                count: logs.len(),
                inner_log_weight: logs.iter().sum(),
            }
        })
        .collect())
}

/// Computes the per-group reliability factors.
///
/// Without precision weighting the factor is simply the group's share of
/// the sources. With it, each count is first scaled by
/// `(frame size / focal cardinality)^eta`, boosting groups with more
/// specific focal elements. The factors always sum to one.
pub fn discount_factors(
    frame: &Frame,
    groups: &[GroupSummary],
    cfg: &LnsConfig,
) -> Result<Vec<DiscountFactor>> {
    if groups.iter().all(|g| g.count == 0) {
        return Err(Error::EmptyGroups);
    }
    if !cfg.eta.is_finite() || cfg.eta < 0.0 {
        return Err(Error::InvalidEta(cfg.eta));
    }
    let mut scaled = Vec::with_capacity(groups.len());
    for group in groups {
        let factor = if cfg.use_precision {
            if group.focal.is_empty() {
                return Err(Error::EmptyFocalInGroup);
            }
            let beta = frame.len() as f64 / f64::from(group.focal.cardinality());
            beta.powf(cfg.eta) * group.count as f64
        } else {
            group.count as f64
        };
        scaled.push(factor);
    }
    let total: f64 = scaled.iter().sum();
    scaled
        .into_iter()
        .map(|s| DiscountFactor::new(s / total))
        .collect()
}

/// Combines simple support functions with the LNS rule.
///
/// An empty (or all-vacuous) list yields the vacuous mass function.
pub fn combine_lns_ssfs(
    frame: &Frame,
    ssfs: &[SimpleSupport],
    cfg: &LnsConfig,
) -> Result<MassFunction> {
    let groups = group_ssfs(ssfs)?;
    combine_groups(frame, &groups, cfg)
}

/// Combines mass functions with the LNS rule.
///
/// Every input must decompose into simple support functions under the
/// configured policy; simple support inputs bypass the decomposition.
pub fn combine_lns(ms: &[MassFunction], cfg: &LnsConfig) -> Result<MassFunction> {
    let first = ms.first().ok_or(Error::EmptyInput)?;
    let frame = first.frame().clone();
    let mut ssfs = Vec::with_capacity(ms.len());
    for m in ms {
        if m.frame() != &frame {
            return Err(Error::FrameMismatch);
        }
        ssfs.extend(decompose_to_ssfs(m, cfg.issf_policy)?);
    }
    combine_lns_ssfs(&frame, &ssfs, cfg)
}

fn combine_groups(
    frame: &Frame,
    groups: &[GroupSummary],
    cfg: &LnsConfig,
) -> Result<MassFunction> {
    if groups.is_empty() {
        return Ok(MassFunction::vacuous(frame.clone()));
    }
    let alphas = discount_factors(frame, groups, cfg)?;
    let mut discounted = Vec::with_capacity(groups.len());
    for (group, alpha) in groups.iter().zip(alphas) {
        let a = alpha.value();
        let weight = 1.0 - a + a * group.inner_weight();
        discounted.push(SimpleSupport::new(frame.clone(), group.focal, weight)?.to_mass());
    }
    cfg.global_rule.apply(&discounted)
}
