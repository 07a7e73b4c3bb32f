//! Built-in experiment harnesses: the six-source rule comparison and the
//! two seeded synthetic studies, each emitting plot-ready CSV.
//!
//! All outputs are deterministic: a fixed seed and fixed flags reproduce
//! every byte. Values in CSV are printed in shortest round-trip form;
//! the comparison table rounds to five decimals.

use std::fmt;
use std::str::FromStr;

use lns_core::{
    combine, combine_lns_ssfs, exp2_corpus, exp3_corpus, Error, Frame, LnsConfig, MassFunction,
    RuleId, Seed, SimpleSupport, SubsetIndex,
};

/// Seed used when none is given; the shipped CSV snapshots regenerate
/// exactly under it.
pub const DEFAULT_SEED: u64 = 42;

/// A rule selectable on the command line: one of the reference rules or
/// the grouping rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleChoice {
    Reference(RuleId),
    Lns,
}

impl RuleChoice {
    /// All selectable rules: the seven reference rules followed by lns.
    pub fn all() -> Vec<RuleChoice> {
        let mut rules: Vec<RuleChoice> = RuleId::ALL.into_iter().map(RuleChoice::Reference).collect();
        rules.push(RuleChoice::Lns);
        rules
    }

    pub fn combine(self, ms: &[MassFunction], cfg: &LnsConfig) -> Result<MassFunction, Error> {
        match self {
            RuleChoice::Reference(rule) => combine(rule, ms),
            RuleChoice::Lns => lns_core::combine_lns(ms, cfg),
        }
    }
}

impl fmt::Display for RuleChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleChoice::Reference(rule) => rule.fmt(f),
            RuleChoice::Lns => f.write_str("lns"),
        }
    }
}

impl FromStr for RuleChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "lns" {
            return Ok(RuleChoice::Lns);
        }
        s.parse::<RuleId>()
            .map(RuleChoice::Reference)
            .map_err(|_| format!("unknown rule `{s}` (expected one of conjunctive, dempster, disjunctive, dp, pcr6, cautious, average, lns)"))
    }
}

/// The three-outcome frame used by the built-in comparison and the
/// precision sweep.
pub fn frame3() -> Frame {
    Frame::new(["theta1", "theta2", "theta3"]).expect("static frame")
}

/// The two-outcome frame used by the conflict-scaling experiment.
pub fn frame2() -> Frame {
    Frame::new(["theta1", "theta2"]).expect("static frame")
}

/// The six built-in sources of the comparison table: one simple support on
/// the second outcome with weight 0.1 against five on the first outcome
/// with weights 0.9, 0.8, 0.7, 0.9, 0.8.
pub fn table1_inputs(frame: &Frame) -> Vec<MassFunction> {
    let mut ms = vec![
        SimpleSupport::new(frame.clone(), SubsetIndex::singleton(1), 0.1)
            .expect("static input")
            .to_mass(),
    ];
    for w in [0.9, 0.8, 0.7, 0.9, 0.8] {
        ms.push(
            SimpleSupport::new(frame.clone(), SubsetIndex::singleton(0), w)
                .expect("static input")
                .to_mass(),
        );
    }
    ms
}

/// The rule-comparison table: one fused column per rule over the built-in
/// six sources, rows in subset bit order.
#[derive(Clone, Debug)]
pub struct Table1 {
    pub frame: Frame,
    pub columns: Vec<(RuleChoice, MassFunction)>,
}

pub fn run_table1() -> Result<Table1, Error> {
    let frame = frame3();
    let inputs = table1_inputs(&frame);
    let cfg = LnsConfig::default();
    let mut columns = Vec::new();
    for rule in RuleChoice::all() {
        columns.push((rule, rule.combine(&inputs, &cfg)?));
    }
    Ok(Table1 { frame, columns })
}

const DP_NOTE: &str =
    "dp follows the simultaneous n-ary definition; published pairwise or iterated variants disagree on this input";

impl Table1 {
    fn subset_label(&self, bits: usize) -> String {
        let full = self.frame.subset_count() - 1;
        crate::document::format_subset(bits as u32, bits == full, self.frame.labels())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("subset");
        for (rule, _) in &self.columns {
            out.push_str(&format!(",{rule}"));
        }
        out.push('\n');
        for bits in 0..self.frame.subset_count() {
            out.push_str(&format!("\"{}\"", self.subset_label(bits)));
            for (_, mass) in &self.columns {
                out.push_str(&format!(",{:.5}", mass.masses()[bits]));
            }
            out.push('\n');
        }
        out.push_str(&format!("# note: {DP_NOTE}\n"));
        out
    }

    pub fn to_text(&self) -> String {
        let width = 13;
        let label_width = (0..self.frame.subset_count())
            .map(|b| self.subset_label(b).len())
            .max()
            .unwrap_or(6)
            .max("subset".len());
        let mut out = format!("{:<label_width$}", "subset");
        for (rule, _) in &self.columns {
            out.push_str(&format!("{:>width$}", rule.to_string()));
        }
        out.push('\n');
        for bits in 0..self.frame.subset_count() {
            out.push_str(&format!("{:<label_width$}", self.subset_label(bits)));
            for (_, mass) in &self.columns {
                out.push_str(&format!("{:>width$.5}", mass.masses()[bits]));
            }
            out.push('\n');
        }
        out.push_str(&format!("note: {DP_NOTE}\n"));
        out
    }
}

/// One row of the precision sweep: the fused masses and pignistic
/// probabilities at a given exponent.
#[derive(Clone, Debug)]
pub struct Exp2Row {
    pub eta: f64,
    pub masses: Vec<f64>,
    pub betp: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct Exp2Report {
    pub seed: u64,
    pub frame: Frame,
    pub rows: Vec<Exp2Row>,
    /// First grid point where the pignistic probability of the first
    /// outcome overtakes the second.
    pub crossover_eta: Option<f64>,
}

/// The default exponent grid, 0 to 6 in steps of 0.25.
pub fn default_eta_grid() -> Vec<f64> {
    (0..=24).map(|i| i as f64 * 0.25).collect()
}

/// Default corpus shape for the precision sweep: 60 sources on the first
/// singleton, 50 on the second, 50 on the pair of the second and third.
pub const EXP2_COUNTS: (usize, usize, usize) = (60, 50, 50);

/// Sweeps the precision exponent over one seeded corpus and records the
/// fused masses and pignistic probabilities per grid point.
pub fn run_exp2(grid: &[f64], seed: u64) -> Result<Exp2Report, Error> {
    let frame = frame3();
    let (s1, s2, s3) = EXP2_COUNTS;
    let corpus = exp2_corpus(&frame, s1, s2, s3, Seed(seed))?;
    let mut rows = Vec::with_capacity(grid.len());
    for &eta in grid {
        let cfg = LnsConfig {
            eta,
            ..LnsConfig::default()
        };
        let fused = combine_lns_ssfs(&frame, &corpus, &cfg)?;
        let betp = fused.pignistic()?;
        rows.push(Exp2Row {
            eta,
            masses: fused.masses().to_vec(),
            betp,
        });
    }
    let crossover_eta = rows.iter().find(|r| r.betp[0] > r.betp[1]).map(|r| r.eta);
    Ok(Exp2Report {
        seed,
        frame,
        rows,
        crossover_eta,
    })
}

impl Exp2Report {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("seed,eta");
        for bits in 0..self.frame.subset_count() {
            out.push_str(&format!(",m_{}", subset_column(&self.frame, bits)));
        }
        for label in self.frame.labels() {
            out.push_str(&format!(",betp_{label}"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("{},{}", self.seed, row.eta));
            for value in &row.masses {
                out.push_str(&format!(",{value}"));
            }
            for value in &row.betp {
                out.push_str(&format!(",{value}"));
            }
            out.push('\n');
        }
        match self.crossover_eta {
            Some(eta) => out.push_str(&format!("# crossover_eta = {eta}\n")),
            None => out.push_str("# crossover_eta = none\n"),
        }
        out
    }
}

/// Column-safe subset name: labels joined by `_`, `empty` and `all` for the
/// extremes.
fn subset_column(frame: &Frame, bits: usize) -> String {
    if bits == 0 {
        return "empty".to_string();
    }
    if bits == frame.subset_count() - 1 {
        return "all".to_string();
    }
    let members: Vec<&str> = (0..frame.len())
        .filter(|&i| bits & (1 << i) != 0)
        .map(|i| frame.label(i))
        .collect();
    members.join("_")
}

/// One cell of the conflict-scaling experiment.
#[derive(Clone, Debug)]
pub struct Exp3Row {
    pub t: usize,
    pub s2: usize,
    pub rule: RuleChoice,
    /// Fused mass on the empty set and on the first singleton, absent when
    /// the rule failed on this cell.
    pub result: Result<(f64, f64), Error>,
}

#[derive(Clone, Debug)]
pub struct Exp3Report {
    pub seed: u64,
    pub cfg: LnsConfig,
    pub rows: Vec<Exp3Row>,
}

pub fn default_t_list() -> Vec<usize> {
    vec![1, 2, 3, 4]
}

pub fn default_s2_grid() -> Vec<usize> {
    (1..=20).map(|i| i * 5).collect()
}

/// Runs every requested rule over paired corpora of `t * s2` dominant
/// sources for the first outcome against `s2` for the second. Rule
/// failures (total conflict, term explosion) are recorded per cell, not
/// propagated: probing where each rule stops working is the point.
pub fn run_exp3(
    t_list: &[usize],
    s2_grid: &[usize],
    seed: u64,
    rules: &[RuleChoice],
    cfg: &LnsConfig,
) -> Result<Exp3Report, Error> {
    let frame = frame2();
    let mut rows = Vec::new();
    for &t in t_list {
        for &s2 in s2_grid {
            let corpus = exp3_corpus(&frame, s2, t, Seed(seed))?;
            let masses: Vec<MassFunction> = corpus.iter().map(SimpleSupport::to_mass).collect();
            for &rule in rules {
                let result = match rule {
                    RuleChoice::Lns => combine_lns_ssfs(&frame, &corpus, cfg),
                    RuleChoice::Reference(r) => combine(r, &masses),
                };
                rows.push(Exp3Row {
                    t,
                    s2,
                    rule,
                    result: result
                        .map(|m| (m.conflict(), m.mass(SubsetIndex::singleton(0)))),
                });
            }
        }
    }
    Ok(Exp3Report {
        seed,
        cfg: *cfg,
        rows,
    })
}

impl Exp3Report {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("seed,t,s2,rule,m_empty,m_theta1,status\n");
        for row in &self.rows {
            match &row.result {
                Ok((empty, theta1)) => out.push_str(&format!(
                    "{},{},{},{},{empty},{theta1},ok\n",
                    self.seed, row.t, row.s2, row.rule
                )),
                Err(_) => out.push_str(&format!(
                    "{},{},{},{},,,rule-failed\n",
                    self.seed, row.t, row.s2, row.rule
                )),
            }
        }
        out.push_str(&format!(
            "# lns cells: eta = {}, precision = {}, global_rule = {}, issf_policy = {}\n",
            self.cfg.eta, self.cfg.use_precision, self.cfg.global_rule, self.cfg.issf_policy
        ));
        out
    }
}
