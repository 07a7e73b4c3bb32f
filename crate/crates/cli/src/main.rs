//! The `lns` command line tool.
//!
//! Exit codes: 0 on success, 1 for I/O, argument or document errors, 2 when
//! a combination rule fails (total conflict, non-separable input, term
//! explosion); the typed reason goes to standard error.

use std::fs;
use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use lns_cli::document::{format_subset, Document, NamedBba};
use lns_cli::experiments::{
    self, default_eta_grid, default_s2_grid, default_t_list, RuleChoice, DEFAULT_SEED,
    EXP2_COUNTS,
};
use lns_core::{
    exp2_corpus, exp3_corpus, Frame, GlobalRule, IssfPolicy, LnsConfig, MassFunction, Seed,
    SimpleSupport, DEFAULT_MAX_OUTCOMES,
};

#[derive(Parser)]
#[command(
    name = "lns",
    version,
    about = "Combine Dempster-Shafer mass functions from many sources",
    after_help = "Exit codes: 0 success, 1 input error, 2 rule failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    shared: SharedArgs,
}

#[derive(Args)]
struct SharedArgs {
    /// Seed for corpus generation
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Precision exponent for the grouping rule's discount factors
    #[arg(long, global = true, default_value_t = 1.0, value_parser = parse_eta)]
    eta: f64,

    /// Use plain group proportions instead of precision weighting
    #[arg(long, global = true)]
    no_precision: bool,

    /// Rule for the grouping rule's global step
    #[arg(long, global = true, default_value = "conjunctive", value_parser = GlobalRule::from_str)]
    global_rule: GlobalRule,

    /// Treatment of non-separable inputs
    #[arg(long, global = true, default_value = "strict", value_parser = IssfPolicy::from_str)]
    issf_policy: IssfPolicy,

    /// Write output to a file instead of standard output
    #[arg(long, global = true)]
    output: Option<String>,

    /// Output format where a choice exists
    #[arg(long, global = true, value_parser = Format::from_str)]
    format: Option<Format>,

    /// Cap on frame size (dense storage needs 2^n entries per mass function)
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_OUTCOMES)]
    max_outcomes: usize,
}

impl SharedArgs {
    fn lns_config(&self) -> LnsConfig {
        LnsConfig {
            eta: self.eta,
            use_precision: !self.no_precision,
            global_rule: self.global_rule,
            issf_policy: self.issf_policy,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected text or csv)")),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Combine the mass functions of a document with one rule
    Combine {
        /// Combination rule: conjunctive, dempster, disjunctive, dp, pcr6,
        /// cautious, average or lns
        #[arg(long, value_parser = RuleChoice::from_str)]
        rule: RuleChoice,
        /// Input document path, or `-` for standard input
        input: String,
    },
    /// Print the built-in six-source comparison across all rules
    Table1,
    /// Sweep the precision exponent over a seeded corpus (CSV)
    Exp2 {
        /// Exponent grid: `start:end:step` or a comma-separated list
        #[arg(long, value_parser = F64Grid::from_str)]
        eta_grid: Option<F64Grid>,
    },
    /// Conflict scaling of each rule over opposed dominant sources (CSV)
    Exp3 {
        /// Ratios of supporting to opposing sources, comma-separated
        #[arg(long, value_parser = UsizeGrid::from_str)]
        t_list: Option<UsizeGrid>,
        /// Opposing-source counts: `start:end:step` or a comma-separated list
        #[arg(long, value_parser = UsizeGrid::from_str)]
        s2_grid: Option<UsizeGrid>,
        /// Rules to run, comma-separated, or `all`
        #[arg(long, value_parser = RuleList::from_str)]
        rules: Option<RuleList>,
    },
    /// Generate a synthetic corpus document
    Generate {
        /// Corpus family: exp2 or exp3
        #[arg(long, value_parser = CorpusKind::from_str)]
        corpus: CorpusKind,
        /// Sources on the first singleton (exp2)
        #[arg(long, default_value_t = EXP2_COUNTS.0)]
        s1: usize,
        /// Sources on the second singleton
        #[arg(long, default_value_t = EXP2_COUNTS.1)]
        s2: usize,
        /// Sources on the pair of the second and third outcomes (exp2)
        #[arg(long, default_value_t = EXP2_COUNTS.2)]
        s3: usize,
        /// Ratio of supporting to opposing sources (exp3)
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
}

#[derive(Clone, Copy)]
enum CorpusKind {
    Exp2,
    Exp3,
}

impl FromStr for CorpusKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exp2" => Ok(CorpusKind::Exp2),
            "exp3" => Ok(CorpusKind::Exp3),
            other => Err(format!("unknown corpus `{other}` (expected exp2 or exp3)")),
        }
    }
}

fn parse_eta(s: &str) -> Result<f64, String> {
    let eta: f64 = s.parse().map_err(|_| format!("bad number `{s}`"))?;
    if eta.is_finite() && eta >= 0.0 {
        Ok(eta)
    } else {
        Err(format!("eta must be finite and non-negative, got `{s}`"))
    }
}

#[derive(Clone)]
struct F64Grid(Vec<f64>);

impl FromStr for F64Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_f64_grid(s).map(F64Grid)
    }
}

#[derive(Clone)]
struct UsizeGrid(Vec<usize>);

impl FromStr for UsizeGrid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_usize_grid(s).map(UsizeGrid)
    }
}

#[derive(Clone)]
struct RuleList(Vec<RuleChoice>);

impl FromStr for RuleList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rules(s).map(RuleList)
    }
}

fn parse_f64_grid(s: &str) -> Result<Vec<f64>, String> {
    if let Some((start, rest)) = s.split_once(':') {
        let (end, step) = rest
            .split_once(':')
            .ok_or_else(|| format!("range `{s}` must be start:end:step"))?;
        let (start, end, step): (f64, f64, f64) = (
            start.trim().parse().map_err(|_| format!("bad number `{start}`"))?,
            end.trim().parse().map_err(|_| format!("bad number `{end}`"))?,
            step.trim().parse().map_err(|_| format!("bad number `{step}`"))?,
        );
        if step <= 0.0 || step.is_nan() || !start.is_finite() || !end.is_finite() || end < start {
            return Err(format!("bad range `{s}`"));
        }
        let count = ((end - start) / step).round() as usize;
        return Ok((0..=count)
            .map(|i| start + i as f64 * step)
            .filter(|&v| v <= end + 1e-9)
            .collect());
    }
    s.split(',')
        .map(|part| {
            let v: f64 = part.trim().parse().map_err(|_| format!("bad number `{part}`"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("bad number `{part}`"))
            }
        })
        .collect()
}

fn parse_usize_grid(s: &str) -> Result<Vec<usize>, String> {
    if let Some((start, rest)) = s.split_once(':') {
        let (end, step) = rest
            .split_once(':')
            .ok_or_else(|| format!("range `{s}` must be start:end:step"))?;
        let (start, end, step): (usize, usize, usize) = (
            start.trim().parse().map_err(|_| format!("bad number `{start}`"))?,
            end.trim().parse().map_err(|_| format!("bad number `{end}`"))?,
            step.trim().parse().map_err(|_| format!("bad number `{step}`"))?,
        );
        if step == 0 || end < start {
            return Err(format!("bad range `{s}`"));
        }
        return Ok((start..=end).step_by(step).collect());
    }
    s.split(',')
        .map(|part| part.trim().parse().map_err(|_| format!("bad number `{part}`")))
        .collect()
}

fn parse_rules(s: &str) -> Result<Vec<RuleChoice>, String> {
    if s == "all" {
        return Ok(RuleChoice::all());
    }
    s.split(',').map(|part| part.trim().parse()).collect()
}

enum AppError {
    /// I/O, argument or document problems: exit code 1.
    Input(String),
    /// A combination rule refused the (valid) input: exit code 2.
    Rule(lns_core::Error),
}

impl From<lns_cli::LoadError> for AppError {
    fn from(e: lns_cli::LoadError) -> Self {
        AppError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(AppError::Rule(e)) => {
            eprintln!("rule failure: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let shared = &cli.shared;
    let output = match &cli.command {
        Command::Combine { rule, input } => cmd_combine(shared, *rule, input)?,
        Command::Table1 => {
            let table = experiments::run_table1().map_err(AppError::Rule)?;
            match shared.format.unwrap_or(Format::Text) {
                Format::Text => table.to_text(),
                Format::Csv => table.to_csv(),
            }
        }
        Command::Exp2 { eta_grid } => {
            let grid = eta_grid
                .as_ref()
                .map(|g| g.0.clone())
                .unwrap_or_else(default_eta_grid);
            let report = experiments::run_exp2(&grid, shared.seed).map_err(AppError::Rule)?;
            report.to_csv()
        }
        Command::Exp3 {
            t_list,
            s2_grid,
            rules,
        } => {
            let ts = t_list.as_ref().map(|g| g.0.clone()).unwrap_or_else(default_t_list);
            let s2s = s2_grid
                .as_ref()
                .map(|g| g.0.clone())
                .unwrap_or_else(default_s2_grid);
            let rules = rules
                .as_ref()
                .map(|r| r.0.clone())
                .unwrap_or_else(RuleChoice::all);
            let report =
                experiments::run_exp3(&ts, &s2s, shared.seed, &rules, &shared.lns_config())
                    .map_err(AppError::Rule)?;
            report.to_csv()
        }
        Command::Generate {
            corpus,
            s1,
            s2,
            s3,
            t,
        } => cmd_generate(shared, *corpus, *s1, *s2, *s3, *t)?,
    };

    match &shared.output {
        Some(path) => fs::write(path, output)
            .map_err(|e| AppError::Input(format!("cannot write `{path}`: {e}")))?,
        None => print!("{output}"),
    }
    Ok(())
}

fn read_input(path: &str) -> Result<String, AppError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| AppError::Input(format!("cannot read standard input: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| AppError::Input(format!("cannot read `{path}`: {e}")))
}

fn cmd_combine(shared: &SharedArgs, rule: RuleChoice, input: &str) -> Result<String, AppError> {
    let text = read_input(input)?;
    let (frame, named) = lns_cli::load(&text, shared.max_outcomes)?;
    if named.is_empty() {
        return Err(AppError::Input("document contains no bba blocks".into()));
    }
    let masses: Vec<MassFunction> = named.into_iter().map(|(_, m)| m).collect();
    let fused = rule
        .combine(&masses, &shared.lns_config())
        .map_err(AppError::Rule)?;
    Ok(match shared.format.unwrap_or(Format::Text) {
        Format::Text => render_fused_document(&frame, &fused, &rule.to_string()),
        Format::Csv => {
            // Full-precision escape hatch; the document form rounds to five
            // decimals.
            let mut out = String::from("subset,mass\n");
            for (bits, value) in fused.masses().iter().enumerate() {
                let label = format_subset(
                    bits as u32,
                    bits == frame.subset_count() - 1,
                    frame.labels(),
                );
                out.push_str(&format!("\"{label}\",{value}\n"));
            }
            out
        }
    })
}

/// Prints the fused result as a document, masses rounded to five decimals.
fn render_fused_document(frame: &Frame, fused: &MassFunction, name: &str) -> String {
    let mut out = String::new();
    out.push_str("frame:");
    for label in frame.labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push_str(&format!("\n\nbba: {name}\n"));
    for (bits, &value) in fused.masses().iter().enumerate() {
        if value > 0.0 {
            let label = format_subset(bits as u32, bits == frame.subset_count() - 1, frame.labels());
            out.push_str(&format!("{label} {value:.5}\n"));
        }
    }
    out.push_str("end\n");
    out
}

fn cmd_generate(
    shared: &SharedArgs,
    corpus: CorpusKind,
    s1: usize,
    s2: usize,
    s3: usize,
    t: usize,
) -> Result<String, AppError> {
    let (frame, ssfs) = match corpus {
        CorpusKind::Exp2 => {
            let frame = experiments::frame3();
            let ssfs = exp2_corpus(&frame, s1, s2, s3, Seed(shared.seed))
                .map_err(|e| AppError::Input(e.to_string()))?;
            (frame, ssfs)
        }
        CorpusKind::Exp3 => {
            if t == 0 {
                return Err(AppError::Input("t must be positive".into()));
            }
            let frame = experiments::frame2();
            let ssfs = exp3_corpus(&frame, s2, t, Seed(shared.seed))
                .map_err(|e| AppError::Input(e.to_string()))?;
            (frame, ssfs)
        }
    };
    let width = ssfs.len().to_string().len().max(4);
    let doc = Document {
        frame: frame.labels().to_vec(),
        bbas: ssfs
            .iter()
            .enumerate()
            .map(|(i, ssf)| ssf_to_bba(&frame, ssf, &format!("src{:0width$}", i + 1)))
            .collect(),
    };
    Ok(doc.to_text())
}

fn ssf_to_bba(frame: &Frame, ssf: &SimpleSupport, name: &str) -> NamedBba {
    let full = frame.full_set().bits();
    let w = ssf.weight();
    let entries = if ssf.is_vacuous() {
        vec![(full, 1.0)]
    } else {
        vec![(ssf.focal().bits(), 1.0 - w), (full, w)]
    };
    NamedBba {
        name: name.to_string(),
        entries,
    }
}
