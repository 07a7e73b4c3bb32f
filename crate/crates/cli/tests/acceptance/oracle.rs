//! Brute-force reference implementations used only for cross-checking.
//!
//! Everything here works by direct summation or explicit tuple iteration
//! over dense mass vectors: no Möbius transforms, no log-space
//! accumulation, no recursion shared with the library. Costs are
//! exponential and irrelevant; these run on tiny frames.

use lns_core::{GlobalRule, IssfPolicy, LnsConfig, MassFunction};

/// Walks every tuple of focal elements (one per source) with an explicit
/// odometer, handing `(subsets, product)` to the visitor.
fn for_each_tuple(focals: &[Vec<(usize, f64)>], mut visit: impl FnMut(&[usize], f64)) {
    if focals.is_empty() || focals.iter().any(|f| f.is_empty()) {
        return;
    }
    let mut cursor = vec![0usize; focals.len()];
    loop {
        let mut subsets = Vec::with_capacity(focals.len());
        let mut product = 1.0;
        for (slot, options) in cursor.iter().zip(focals) {
            let (subset, mass) = options[*slot];
            subsets.push(subset);
            product *= mass;
        }
        visit(&subsets, product);

        let mut digit = focals.len();
        loop {
            if digit == 0 {
                return;
            }
            digit -= 1;
            cursor[digit] += 1;
            if cursor[digit] < focals[digit].len() {
                break;
            }
            cursor[digit] = 0;
        }
    }
}

fn focal_lists(ms: &[MassFunction]) -> Vec<Vec<(usize, f64)>> {
    ms.iter()
        .map(|m| {
            m.masses()
                .iter()
                .enumerate()
                .filter(|(_, &v)| v > 0.0)
                .map(|(i, &v)| (i, v))
                .collect()
        })
        .collect()
}

fn subset_count(ms: &[MassFunction]) -> usize {
    ms[0].frame().subset_count()
}

pub fn conjunctive(ms: &[MassFunction]) -> Vec<f64> {
    let mut out = vec![0.0; subset_count(ms)];
    let full = out.len() - 1;
    for_each_tuple(&focal_lists(ms), |subsets, product| {
        let meet = subsets.iter().fold(full, |acc, &s| acc & s);
        out[meet] += product;
    });
    out
}

pub fn disjunctive(ms: &[MassFunction]) -> Vec<f64> {
    let mut out = vec![0.0; subset_count(ms)];
    for_each_tuple(&focal_lists(ms), |subsets, product| {
        let join = subsets.iter().fold(0, |acc, &s| acc | s);
        out[join] += product;
    });
    out
}

/// `None` when the conjunctive conflict leaves nothing to normalize.
pub fn dempster(ms: &[MassFunction]) -> Option<Vec<f64>> {
    let mut out = conjunctive(ms);
    let remaining = 1.0 - out[0];
    if remaining <= 1e-12 {
        return None;
    }
    out[0] = 0.0;
    for value in &mut out {
        *value /= remaining;
    }
    Some(out)
}

pub fn dubois_prade(ms: &[MassFunction]) -> Vec<f64> {
    let mut out = vec![0.0; subset_count(ms)];
    let full = out.len() - 1;
    for_each_tuple(&focal_lists(ms), |subsets, product| {
        let meet = subsets.iter().fold(full, |acc, &s| acc & s);
        if meet != 0 {
            out[meet] += product;
        } else {
            let join = subsets.iter().fold(0, |acc, &s| acc | s);
            out[join] += product;
        }
    });
    out
}

pub fn pcr6(ms: &[MassFunction]) -> Vec<f64> {
    let mut out = vec![0.0; subset_count(ms)];
    let full = out.len() - 1;
    let focals = focal_lists(ms);
    for_each_tuple(&focals, |subsets, product| {
        let meet = subsets.iter().fold(full, |acc, &s| acc & s);
        if meet != 0 {
            out[meet] += product;
            return;
        }
        let members: Vec<(usize, f64)> = subsets
            .iter()
            .enumerate()
            .map(|(j, &s)| (s, ms[j].masses()[s]))
            .collect();
        let denominator: f64 = members.iter().map(|&(_, mass)| mass).sum();
        for (subset, mass) in members {
            out[subset] += product * mass / denominator;
        }
    });
    out
}

pub fn average(ms: &[MassFunction]) -> Vec<f64> {
    let mut out = vec![0.0; subset_count(ms)];
    for m in ms {
        for (slot, &value) in out.iter_mut().zip(m.masses()) {
            *slot += value;
        }
    }
    for value in &mut out {
        *value /= ms.len() as f64;
    }
    out
}

/// Commonalities by direct superset summation.
pub fn commonality(masses: &[f64]) -> Vec<f64> {
    let count = masses.len();
    (0..count)
        .map(|a| (0..count).filter(|&b| b & a == a).map(|b| masses[b]).sum())
        .collect()
}

/// Canonical weights by the direct alternating product over supersets.
pub fn weights(masses: &[f64]) -> Vec<f64> {
    let q = commonality(masses);
    let count = masses.len();
    let full = count - 1;
    let mut out = vec![1.0; count];
    for (a, slot) in out.iter_mut().enumerate() {
        if a == full {
            continue;
        }
        let mut w = 1.0;
        for (b, &qb) in q.iter().enumerate() {
            if b & a == a {
                let extra = (b ^ a).count_ones();
                if extra % 2 == 1 {
                    w *= qb;
                } else {
                    w /= qb;
                }
            }
        }
        // Mirror the library's snapping so round-off never fabricates a
        // component.
        if (w - 1.0).abs() <= 1e-12 {
            w = 1.0;
        }
        *slot = w;
    }
    out
}

/// Pairwise conjunctive product of dense (possibly generalized) mass
/// vectors by direct double loop.
pub fn conjunctive_product(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len()];
    for (i, &va) in a.iter().enumerate() {
        if va == 0.0 {
            continue;
        }
        for (j, &vb) in b.iter().enumerate() {
            if vb != 0.0 {
                out[i & j] += va * vb;
            }
        }
    }
    out
}

/// Dense vector of the generalized simple support `focal^weight`.
pub fn gssf_vector(count: usize, focal: usize, weight: f64) -> Vec<f64> {
    let mut out = vec![0.0; count];
    out[focal] += 1.0 - weight;
    out[count - 1] += weight;
    out
}

pub fn cautious(ms: &[MassFunction]) -> Vec<f64> {
    let count = subset_count(ms);
    let mut min_weights = vec![f64::INFINITY; count];
    for m in ms {
        for (slot, w) in min_weights.iter_mut().zip(weights(m.masses())) {
            if w < *slot {
                *slot = w;
            }
        }
    }
    let mut out = vec![0.0; count];
    out[count - 1] = 1.0;
    for (a, &w) in min_weights.iter().enumerate() {
        if a == count - 1 || w == 1.0 {
            continue;
        }
        out = conjunctive_product(&out, &gssf_vector(count, a, w));
    }
    out
}

/// The grouping rule end to end: direct decomposition, plain products
/// within groups, textbook discount factors, and a brute-force global
/// step.
pub fn lns(ms: &[MassFunction], cfg: &LnsConfig) -> Vec<f64> {
    let count = subset_count(ms);
    let full = count - 1;
    let n = ms[0].frame().len() as f64;

    // Decompose; weights above one are clamped to one, which is all the
    // drop policy keeps and exactly what strict inputs never trigger.
    assert!(
        cfg.issf_policy == IssfPolicy::Drop
            || ms.iter().all(|m| {
                m.masses().iter().enumerate().filter(|&(i, &v)| i != full && v > 0.0).count() <= 1
                    || weights(m.masses()).iter().all(|&w| w <= 1.0 + 1e-9)
            }),
        "strict oracle got a non-separable input"
    );
    let mut groups: Vec<(usize, usize, f64)> = Vec::new(); // focal, count, weight product
    let mut add = |focal: usize, w: f64| {
        if focal == full || w >= 1.0 {
            return;
        }
        match groups.iter_mut().find(|g| g.0 == focal) {
            Some(group) => {
                group.1 += 1;
                group.2 *= w;
            }
            None => groups.push((focal, 1, w)),
        }
    };
    for m in ms {
        let proper_focals: Vec<usize> = m
            .masses()
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i != full && v > 0.0)
            .map(|(i, _)| i)
            .collect();
        if proper_focals.len() <= 1 {
            // Already simple support (or vacuous): bypass decomposition.
            if let Some(&focal) = proper_focals.first() {
                add(focal, m.masses()[full]);
            }
            continue;
        }
        for (a, &w) in weights(m.masses()).iter().enumerate() {
            if a != full && w < 1.0 {
                add(a, w);
            }
        }
    }
    if groups.is_empty() {
        let mut out = vec![0.0; count];
        out[full] = 1.0;
        return out;
    }
    groups.sort_by_key(|g| g.0);

    let total: f64 = groups
        .iter()
        .map(|&(focal, members, _)| {
            if cfg.use_precision {
                (n / (focal as u32).count_ones() as f64).powf(cfg.eta) * members as f64
            } else {
                members as f64
            }
        })
        .sum();
    let discounted: Vec<MassFunction> = groups
        .iter()
        .map(|&(focal, members, weight)| {
            let scaled = if cfg.use_precision {
                (n / (focal as u32).count_ones() as f64).powf(cfg.eta) * members as f64
            } else {
                members as f64
            };
            let alpha = scaled / total;
            let w = 1.0 - alpha + alpha * weight;
            let mut masses = vec![0.0; count];
            masses[focal] = 1.0 - w;
            masses[full] = w;
            MassFunction::from_masses(ms[0].frame().clone(), masses).expect("valid ssf")
        })
        .collect();

    match cfg.global_rule {
        GlobalRule::Conjunctive => conjunctive(&discounted),
        GlobalRule::Dp => dubois_prade(&discounted),
        GlobalRule::Pcr6 => pcr6(&discounted),
    }
}
