//! Acceptance suite: one test per shipped guarantee, each printing a
//! PASS line (run with `--nocapture` to see them).
//!
//! Expected values come from three independent routes: five-decimal
//! reference columns for the built-in six-source comparison, closed forms
//! propagated by hand through the grouping pipeline, and the brute-force
//! reference implementations in [`oracle`].

mod oracle;

use std::time::{Duration, Instant};

use lns_cli::document::Document;
use lns_cli::experiments::{
    self, frame2, frame3, run_exp2, run_table1, table1_inputs, DEFAULT_SEED,
};
use lns_core::{
    canonical_decomposition, combine, combine_average, combine_conjunctive, combine_dempster,
    combine_lns, combine_lns_ssfs, discount_factors, exp3_corpus, group_ssfs, Error, Frame,
    GlobalRule, GroupSummary, IssfPolicy, LnsConfig, MassFunction, RuleId, Seed, SimpleSupport,
    Stream, SubsetIndex,
};

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn rand_in(stream: &mut Stream, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * stream.next_unit()
}

fn rand_below(stream: &mut Stream, n: usize) -> usize {
    (stream.next_u64() % n as u64) as usize
}

fn frame_of_size(n: usize) -> Frame {
    Frame::new((0..n).map(|i| format!("o{i}"))).unwrap()
}

/// Random u-separable mass: a product of simple supports on proper
/// non-empty subsets, folded with the oracle's direct pairwise product.
fn random_separable(frame: &Frame, stream: &mut Stream, min_weight: f64) -> MassFunction {
    let count = frame.subset_count();
    let mut masses = vec![0.0; count];
    masses[count - 1] = 1.0;
    for _ in 0..=rand_below(stream, 3) {
        let focal = 1 + rand_below(stream, count - 2);
        let weight = rand_in(stream, min_weight, 0.95);
        masses = oracle::conjunctive_product(&masses, &oracle::gssf_vector(count, focal, weight));
    }
    MassFunction::from_masses(frame.clone(), masses).unwrap()
}

/// Random non-dogmatic mass with nothing on the empty set.
fn random_general(frame: &Frame, stream: &mut Stream) -> MassFunction {
    let count = frame.subset_count();
    let mut masses = vec![0.0; count];
    for _ in 0..=rand_below(stream, 4) {
        let subset = 1 + rand_below(stream, count - 1);
        masses[subset] += rand_in(stream, 0.05, 1.0);
    }
    masses[count - 1] += rand_in(stream, 0.3, 1.0);
    let total: f64 = masses.iter().sum();
    for value in &mut masses {
        *value /= total;
    }
    MassFunction::from_masses(frame.clone(), masses).unwrap()
}

#[test]
fn criterion_1_reference_table_golden() {
    let started = Instant::now();
    let table = run_table1().unwrap();
    let column = |name: &str| -> &MassFunction {
        &table
            .columns
            .iter()
            .find(|(rule, _)| rule.to_string() == name)
            .unwrap()
            .1
    };

    // Five-decimal reference columns, rows in subset bit order
    // ({}, {t1}, {t2}, {t1,t2}, {t3}, {t1,t3}, {t2,t3}, ALL).
    let golden: [(&str, [f64; 8]); 7] = [
        ("conjunctive", [0.57341, 0.06371, 0.32659, 0.0, 0.0, 0.0, 0.0, 0.03629]),
        ("dempster", [0.0, 0.14935, 0.76558, 0.0, 0.0, 0.0, 0.0, 0.08506]),
        ("disjunctive", [0.0, 0.0, 0.0, 0.00011, 0.0, 0.0, 0.0, 0.99989]),
        ("pcr6", [0.0, 0.10644, 0.45139, 0.0, 0.0, 0.0, 0.0, 0.44217]),
        ("cautious", [0.27, 0.03, 0.63, 0.0, 0.0, 0.0, 0.0, 0.07]),
        ("average", [0.0, 0.15, 0.15, 0.0, 0.0, 0.0, 0.0, 0.70]),
        ("lns", [0.07964, 0.45129, 0.07036, 0.0, 0.0, 0.0, 0.0, 0.39871]),
    ];
    for (name, expected) in golden {
        let masses = column(name).masses();
        for (bits, want) in expected.iter().enumerate() {
            assert!(
                (masses[bits] - want).abs() < 1e-5,
                "{name}, subset {bits:#05b}: got {}, want {want}",
                masses[bits]
            );
        }
    }

    // The dp column is checked structurally instead of against published
    // digits: it must be a unit-sum mass function and must match the
    // tuple-enumeration reference exactly.
    let dp = column("dp");
    let sum: f64 = dp.masses().iter().sum();
    assert!((sum - 1.0).abs() < 1e-9);
    let reference = oracle::dubois_prade(&table1_inputs(&frame3()));
    assert!(max_abs_diff(dp.masses(), &reference) < 1e-12);

    assert!(started.elapsed() < Duration::from_secs(1));
    println!("acceptance 1 (reference-table golden values): PASS");
}

#[test]
fn criterion_2_hand_derived_closed_forms() {
    let frame = frame3();
    let inputs = table1_inputs(&frame);

    // Conjunctive: the five agreeing sources multiply to weight
    // 0.9*0.8*0.7*0.9*0.8 and meet one opposing simple support of weight 0.1.
    let agree = 0.9 * 0.8 * 0.7 * 0.9 * 0.8;
    let conj = combine_conjunctive(&inputs).unwrap();
    assert!((conj.conflict() - 0.9 * (1.0 - agree)).abs() < 1e-12);
    assert!((conj.mass(SubsetIndex::singleton(0)) - 0.1 * (1.0 - agree)).abs() < 1e-12);
    assert!((conj.mass(SubsetIndex::singleton(1)) - 0.9 * agree).abs() < 1e-12);
    assert!((conj.ignorance() - 0.1 * agree).abs() < 1e-12);

    // Grouping pipeline: counts 5 and 1 discount the group weights to
    // 1/6 + (5/6) * 0.36288 = 0.469067 and 5/6 + 0.1/6 = 0.85.
    let w1: f64 = 1.0 / 6.0 + (5.0 / 6.0) * agree;
    let w2: f64 = 5.0 / 6.0 + 0.1 / 6.0;
    assert!((w1 - 0.469067).abs() < 1e-6);
    assert!((w2 - 0.85).abs() < 1e-12);
    let lns = combine_lns(&inputs, &LnsConfig::default()).unwrap();
    assert!((lns.conflict() - (1.0 - w1) * (1.0 - w2)).abs() < 1e-12);
    assert!((lns.mass(SubsetIndex::singleton(0)) - (1.0 - w1) * w2).abs() < 1e-12);
    assert!((lns.mass(SubsetIndex::singleton(1)) - w1 * (1.0 - w2)).abs() < 1e-12);
    assert!((lns.ignorance() - w1 * w2).abs() < 1e-12);
    println!("acceptance 2 (hand-derived closed forms): PASS");
}

#[test]
fn criterion_3_oracle_equivalence() {
    let mut checked = 0usize;

    // 500 u-separable instances: all reference rules plus the strict
    // grouping rule under each global step.
    for instance in 0..500u64 {
        let mut stream = Stream::new(Seed(0xACCE97), instance);
        let frame = frame_of_size(2 + rand_below(&mut stream, 2));
        let sources = 1 + rand_below(&mut stream, 4);
        let ms: Vec<MassFunction> = (0..sources)
            .map(|_| random_separable(&frame, &mut stream, 0.2))
            .collect();

        compare_reference_rules(&ms, instance);
        for global_rule in [GlobalRule::Conjunctive, GlobalRule::Dp, GlobalRule::Pcr6] {
            let cfg = LnsConfig {
                global_rule,
                ..LnsConfig::default()
            };
            let fused = combine_lns(&ms, &cfg).unwrap();
            let expected = oracle::lns(&ms, &cfg);
            assert!(
                max_abs_diff(fused.masses(), &expected) < 1e-12,
                "lns/{global_rule} diverged on instance {instance}"
            );
        }
        checked += 1;
    }

    // 200 general non-dogmatic instances: reference rules plus the drop
    // policy (plain proportions, so empty-set components stay legal).
    for instance in 0..200u64 {
        let mut stream = Stream::new(Seed(0xD20B), instance);
        let frame = frame_of_size(2 + rand_below(&mut stream, 2));
        let sources = 1 + rand_below(&mut stream, 4);
        let ms: Vec<MassFunction> = (0..sources)
            .map(|_| random_general(&frame, &mut stream))
            .collect();

        compare_reference_rules(&ms, instance);
        for global_rule in [GlobalRule::Conjunctive, GlobalRule::Dp, GlobalRule::Pcr6] {
            let cfg = LnsConfig {
                global_rule,
                issf_policy: IssfPolicy::Drop,
                use_precision: false,
                ..LnsConfig::default()
            };
            let fused = combine_lns(&ms, &cfg).unwrap();
            let expected = oracle::lns(&ms, &cfg);
            assert!(
                max_abs_diff(fused.masses(), &expected) < 1e-12,
                "lns-drop/{global_rule} diverged on instance {instance}"
            );
        }
        checked += 1;
    }

    assert_eq!(checked, 700);
    println!("acceptance 3 (brute-force oracle equivalence, {checked} instances): PASS");
}

fn compare_reference_rules(ms: &[MassFunction], instance: u64) {
    let cases: [(RuleId, Option<Vec<f64>>); 7] = [
        (RuleId::Conjunctive, Some(oracle::conjunctive(ms))),
        (RuleId::Dempster, oracle::dempster(ms)),
        (RuleId::Disjunctive, Some(oracle::disjunctive(ms))),
        (RuleId::Dp, Some(oracle::dubois_prade(ms))),
        (RuleId::Pcr6, Some(oracle::pcr6(ms))),
        (RuleId::Cautious, Some(oracle::cautious(ms))),
        (RuleId::Average, Some(oracle::average(ms))),
    ];
    for (rule, expected) in cases {
        let expected = expected.unwrap_or_else(|| panic!("oracle refused {rule} on {instance}"));
        let fused = combine(rule, ms).unwrap();
        assert!(
            max_abs_diff(fused.masses(), &expected) < 1e-12,
            "{rule} diverged on instance {instance}"
        );
    }
}

#[test]
fn criterion_4_decomposition_roundtrip() {
    // Round trip through the canonical decomposition.
    for instance in 0..500u64 {
        let mut stream = Stream::new(Seed(0x0DEC), instance);
        let frame = frame_of_size(1 + rand_below(&mut stream, 5));
        let m = random_general(&frame, &mut stream);
        let back = canonical_decomposition(&m).unwrap().to_mass().unwrap();
        assert!(
            max_abs_diff(m.masses(), back.masses()) < 1e-9,
            "roundtrip diverged on instance {instance}"
        );
    }

    // Every u-separable input decomposes with unit-capped weights.
    for instance in 0..500u64 {
        let mut stream = Stream::new(Seed(0x5E9A), instance);
        let frame = frame_of_size(2 + rand_below(&mut stream, 3));
        let m = random_separable(&frame, &mut stream, 0.05);
        let wm = canonical_decomposition(&m).unwrap();
        for (bits, &w) in wm.weights().iter().enumerate() {
            assert!(
                w <= 1.0 + 1e-9,
                "separable instance {instance} got weight {w} on {bits:#b}"
            );
        }
    }
    println!("acceptance 4 (decomposition roundtrip and separability): PASS");
}

#[test]
fn criterion_5_lns_algebraic_properties() {
    let frame = frame3();
    let inputs = table1_inputs(&frame);
    let cfg = LnsConfig::default();

    // Permutation invariance, bit for bit.
    let base = combine_lns(&inputs, &cfg).unwrap();
    let mut stream = Stream::new(Seed(0x9E57), 0);
    for _ in 0..20 {
        let mut shuffled = inputs.clone();
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rand_below(&mut stream, i + 1));
        }
        assert_eq!(base, combine_lns(&shuffled, &cfg).unwrap());
    }

    // Vacuous inputs never change anything, exactly.
    let mut padded = inputs.clone();
    padded.insert(3, MassFunction::vacuous(frame.clone()));
    padded.push(MassFunction::vacuous(frame.clone()));
    assert_eq!(base, combine_lns(&padded, &cfg).unwrap());

    // Conjunctive combination inside a group is free of conflict, exactly.
    for group_index in 0..50u64 {
        let mut stream = Stream::new(Seed(0x06F0), group_index);
        let focal = SubsetIndex::from_bits(1 + rand_below(&mut stream, 6) as u32);
        let members: Vec<MassFunction> = (0..2 + rand_below(&mut stream, 6))
            .map(|_| {
                SimpleSupport::new(frame.clone(), focal, rand_in(&mut stream, 0.01, 0.99))
                    .unwrap()
                    .to_mass()
            })
            .collect();
        let inner = combine_conjunctive(&members).unwrap();
        assert_eq!(inner.conflict(), 0.0);
    }

    // Precision weighting at exponent zero is plain proportion weighting.
    let groups: Vec<GroupSummary> = group_ssfs(
        &inputs
            .iter()
            .flat_map(|m| lns_core::decompose_to_ssfs(m, IssfPolicy::Strict).unwrap())
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let eta_zero = discount_factors(
        &frame,
        &groups,
        &LnsConfig {
            eta: 0.0,
            ..LnsConfig::default()
        },
    )
    .unwrap();
    let plain = discount_factors(
        &frame,
        &groups,
        &LnsConfig {
            use_precision: false,
            ..LnsConfig::default()
        },
    )
    .unwrap();
    for (a, b) in eta_zero.iter().zip(&plain) {
        assert!((a.value() - b.value()).abs() < 1e-12);
    }

    // Non-idempotence witness.
    let half = SimpleSupport::new(frame.clone(), SubsetIndex::singleton(0), 0.5)
        .unwrap()
        .to_mass();
    let doubled = combine_lns(&[half.clone(), half.clone()], &cfg).unwrap();
    assert!(max_abs_diff(doubled.masses(), half.masses()) > 1e-6);

    // Non-associativity witness.
    let nested = combine_lns(
        &[combine_lns(&inputs[0..2], &cfg).unwrap(), inputs[2].clone()],
        &cfg,
    )
    .unwrap();
    let flat = combine_lns(&inputs[0..3], &cfg).unwrap();
    assert!(max_abs_diff(nested.masses(), flat.masses()) > 1e-6);

    println!("acceptance 5 (grouping-rule algebraic properties): PASS");
}

#[test]
fn criterion_6_conflict_scaling_behavior() {
    let started = Instant::now();
    let frame = frame2();
    let cfg = LnsConfig::default();

    // Monotone trends across t at s2 = 50, per seed.
    let mut monotone_seeds = 0;
    for seed in 0..100u64 {
        let mut conflicts = Vec::new();
        let mut supports = Vec::new();
        for t in 1..=4 {
            let corpus = exp3_corpus(&frame, 50, t, Seed(seed)).unwrap();
            let fused = combine_lns_ssfs(&frame, &corpus, &cfg).unwrap();
            conflicts.push(fused.conflict());
            supports.push(fused.mass(SubsetIndex::singleton(0)));
        }
        let decreasing = conflicts.windows(2).all(|w| w[1] < w[0]);
        let increasing = supports.windows(2).all(|w| w[1] > w[0]);
        if decreasing && increasing {
            monotone_seeds += 1;
        }
    }
    assert!(monotone_seeds >= 95, "only {monotone_seeds} of 100 seeds monotone");

    // Conjunctive saturates and Dempster fails once the opposing block is
    // large enough.
    for t in 1..=4 {
        for s2 in (25..=100).step_by(5) {
            let corpus = exp3_corpus(&frame, s2, t, Seed(DEFAULT_SEED)).unwrap();
            let masses: Vec<MassFunction> = corpus.iter().map(SimpleSupport::to_mass).collect();
            let conj = combine_conjunctive(&masses).unwrap();
            assert!(
                conj.conflict() >= 0.999,
                "conjunctive conflict {} at t={t}, s2={s2}",
                conj.conflict()
            );
            assert!(
                matches!(combine_dempster(&masses), Err(Error::TotalConflict)),
                "dempster survived t={t}, s2={s2}"
            );
        }
    }

    // The grouping and averaging rules keep working at ten thousand
    // sources.
    let corpus = exp3_corpus(&frame, 5_000, 1, Seed(DEFAULT_SEED)).unwrap();
    assert_eq!(corpus.len(), 10_000);
    let fused = combine_lns_ssfs(&frame, &corpus, &cfg).unwrap();
    assert!((fused.masses().iter().sum::<f64>() - 1.0).abs() < 1e-9);
    let masses: Vec<MassFunction> = corpus.iter().map(SimpleSupport::to_mass).collect();
    let averaged = combine_average(&masses).unwrap();
    assert!((averaged.masses().iter().sum::<f64>() - 1.0).abs() < 1e-9);

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "acceptance 6 (conflict scaling: {monotone_seeds}/100 monotone seeds, saturation, failures, 10^4 sources in {elapsed:?}): PASS"
    );
}

#[test]
fn criterion_7_precision_sweep_behavior() {
    let grid = experiments::default_eta_grid();
    let mut conforming_seeds = 0;
    for seed in 0..100u64 {
        let report = run_exp2(&grid, seed).unwrap();
        let singleton_total =
            |row: &experiments::Exp2Row| row.masses[0b001] + row.masses[0b010] + row.masses[0b100];
        let monotone = report.rows.windows(2).all(|pair| {
            singleton_total(&pair[1]) >= singleton_total(&pair[0]) - 1e-12
                && pair[1].masses[0b110] <= pair[0].masses[0b110] + 1e-12
        });
        let crossover = report
            .crossover_eta
            .map(|eta| (0.5..=3.0).contains(&eta))
            .unwrap_or(false);
        if monotone && crossover {
            conforming_seeds += 1;
        }
    }
    assert!(
        conforming_seeds >= 90,
        "only {conforming_seeds} of 100 seeds conforming"
    );
    println!(
        "acceptance 7 (precision sweep trends, {conforming_seeds}/100 seeds): PASS"
    );
}

#[test]
fn criterion_8_scaling_and_underflow() {
    let frame = frame_of_size(10);
    let cfg = LnsConfig::default();

    // Ten thousand simple supports spread over the singletons.
    let corpus: Vec<MassFunction> = (0..10_000u64)
        .map(|i| {
            let mut stream = Stream::new(Seed(0x5CA1E), i);
            SimpleSupport::new(
                frame.clone(),
                SubsetIndex::singleton((i % 10) as usize),
                stream.next_unit(),
            )
            .unwrap()
            .to_mass()
        })
        .collect();

    let time_combine = |count: usize, repetitions: usize| -> Duration {
        let mut best = Duration::MAX;
        for _ in 0..repetitions {
            let started = Instant::now();
            let fused = combine_lns(&corpus[..count], &cfg).unwrap();
            let elapsed = started.elapsed();
            assert!((fused.masses().iter().sum::<f64>() - 1.0).abs() < 1e-9);
            best = best.min(elapsed);
        }
        best
    };

    time_combine(1_000, 1); // warm up
    let small = time_combine(1_000, 7);
    let large = time_combine(10_000, 3);
    assert!(
        large < Duration::from_secs(1),
        "10^4 sources took {large:?}"
    );
    let ratio = large.as_secs_f64() / small.as_secs_f64();
    assert!(
        (5.0..=20.0).contains(&ratio),
        "time ratio {ratio:.2} outside [5, 20] (small {small:?}, large {large:?})"
    );

    // No underflow: ten thousand weights of 0.999 accumulate in log space.
    let stubborn: Vec<MassFunction> = (0..10_000)
        .map(|_| {
            SimpleSupport::new(frame.clone(), SubsetIndex::singleton(3), 0.999)
                .unwrap()
                .to_mass()
        })
        .collect();
    let fused = combine_lns(&stubborn, &cfg).unwrap();
    let expected = (10_000.0 * 0.999f64.ln()).exp();
    assert!(expected > 0.0);
    assert!(
        ((fused.ignorance() - expected) / expected).abs() < 1e-9,
        "ignorance {} vs {expected}",
        fused.ignorance()
    );
    assert!((fused.mass(SubsetIndex::singleton(3)) - (1.0 - expected)).abs() < 1e-9);

    println!(
        "acceptance 8 (scaling: 10^4 sources in {large:?}, ratio {ratio:.1}, log-space underflow guard): PASS"
    );
}

#[test]
fn criterion_9_parser_robustness() {
    let corpus_doc = {
        use lns_cli::document::NamedBba;
        let frame = frame3();
        let mut bbas = Vec::new();
        for i in 0..12u64 {
            let mut stream = Stream::new(Seed(0xF022), i);
            let focal = 1 + rand_below(&mut stream, 6) as u32;
            let w = stream.next_unit();
            bbas.push(NamedBba {
                name: format!("src{i:02}"),
                entries: vec![(focal, 1.0 - w), (0b111, w)],
            });
        }
        Document {
            frame: frame.labels().to_vec(),
            bbas,
        }
        .to_text()
    };
    let handwritten = "\
# six sources
frame: theta1 theta2 theta3

bba: m1
{theta2} 0.9
ALL 0.1
end

bba: m2
{theta1} 0.1
ALL 0.9
end

bba: m3
{} 0.0
{theta1,theta3} 0.25
ALL 0.75
end
";
    let bases = [corpus_doc.as_str(), handwritten];

    let mut parsed_ok = 0usize;
    for iteration in 0..10_000u64 {
        let mut stream = Stream::new(Seed(0xF12E), iteration);
        let mut bytes = bases[rand_below(&mut stream, bases.len())].as_bytes().to_vec();
        for _ in 0..=rand_below(&mut stream, 4) {
            mutate(&mut bytes, &mut stream);
        }
        let text = String::from_utf8_lossy(&bytes).into_owned();
        // Must never panic; wherever it still parses, loading and the
        // value-level round trip must hold too.
        if let Ok(doc) = Document::parse(&text) {
            parsed_ok += 1;
            let _ = doc.to_masses(20);
            assert_eq!(Document::parse(&doc.to_text()).unwrap(), doc);
        }
    }

    // A sample of mutants through the real binary: always a typed exit.
    let binary = env!("CARGO_BIN_EXE_lns");
    for iteration in 0..40u64 {
        let mut stream = Stream::new(Seed(0xB1A2), iteration);
        let mut bytes = bases[rand_below(&mut stream, bases.len())].as_bytes().to_vec();
        for _ in 0..=rand_below(&mut stream, 4) {
            mutate(&mut bytes, &mut stream);
        }
        let status = run_binary_with_stdin(binary, &bytes);
        assert!(
            matches!(status, Some(0) | Some(1) | Some(2)),
            "unexpected exit {status:?} on iteration {iteration}"
        );
    }

    println!(
        "acceptance 9 (parser fuzzing: 10^4 mutants, {parsed_ok} still parse, typed exits only): PASS"
    );
}

fn mutate(bytes: &mut Vec<u8>, stream: &mut Stream) {
    if bytes.is_empty() {
        bytes.push((stream.next_u64() & 0xFF) as u8);
        return;
    }
    match rand_below(stream, 6) {
        0 => {
            let at = rand_below(stream, bytes.len());
            bytes[at] = (stream.next_u64() & 0xFF) as u8;
        }
        1 => {
            let at = rand_below(stream, bytes.len() + 1);
            bytes.insert(at, (stream.next_u64() & 0xFF) as u8);
        }
        2 => {
            let at = rand_below(stream, bytes.len());
            let len = (1 + rand_below(stream, 8)).min(bytes.len() - at);
            bytes.drain(at..at + len);
        }
        3 => {
            let at = rand_below(stream, bytes.len());
            let len = (1 + rand_below(stream, 8)).min(bytes.len() - at);
            let chunk: Vec<u8> = bytes[at..at + len].to_vec();
            let dest = rand_below(stream, bytes.len() + 1);
            for (offset, byte) in chunk.into_iter().enumerate() {
                bytes.insert(dest + offset, byte);
            }
        }
        4 => {
            bytes.truncate(rand_below(stream, bytes.len() + 1));
        }
        _ => {
            let a = rand_below(stream, bytes.len());
            let b = rand_below(stream, bytes.len());
            bytes.swap(a, b);
        }
    }
}

fn run_binary_with_stdin(binary: &str, input: &[u8]) -> Option<i32> {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let mut child = Command::new(binary)
        .args(["combine", "--rule", "lns", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn lns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input)
        .ok();
    child.wait().expect("wait for lns").code()
}
