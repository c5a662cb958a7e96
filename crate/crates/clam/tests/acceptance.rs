//! Acceptance suite: ten end-to-end criteria, one test each. Every test
//! prints a single `criterion NN PASS` line on success; assertion messages
//! start with `criterion NN FAIL` so failures are equally greppable.

// Matrix generators fill symmetric index pairs (entries[i][j] with
// entries[j][i]); explicit indices read better than iterator adapters.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::process::Command;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clam::builtins::{self, Reading};
use clam::quiver::{covering_pairs, quiver_from_seed, quiver_to_seed};
use clam::seed::{verify_laurent, ExchangeMatrix, Seed};
use clam::semifield::{GroundRingSpec, TropMonomial};
use clam::{
    banff_reduced, search_mgs, verify_mgs, BanffStatus, LaurentPoly, NodeResolution, SearchLimits,
};

fn cli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clam"))
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = cli().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

/// Random skew-symmetrizable seed: usually a skew-symmetric matrix, with
/// an occasional genuinely skew-symmetrizable (non-symmetric) block.
fn random_seed(rng: &mut ChaCha8Rng) -> Seed {
    let n = rng.gen_range(1..=5);
    let m = rng.gen_range(0..=3);
    let mut entries = vec![vec![0i64; n]; n];
    if n >= 2 && rng.gen_range(0..4) == 0 {
        // A non-symmetric skew-symmetrizable corner (symmetrizer (c, 1)).
        let c = rng.gen_range(2..=3);
        entries[0][1] = -1;
        entries[1][0] = c;
    } else {
        for i in 0..n {
            for j in (i + 1)..n {
                let w = rng.gen_range(-3..=3);
                entries[i][j] = w;
                entries[j][i] = -w;
            }
        }
    }
    let b = ExchangeMatrix::new(entries).expect("constructed symmetrizable");
    let y = (0..n)
        .map(|_| {
            let exps: Vec<i64> = (0..m).map(|_| rng.gen_range(-2..=2)).collect();
            TropMonomial::from_exps_i64(&exps)
        })
        .collect();
    Seed::new(b, y, m, None).expect("valid seed")
}

#[test]
fn criterion_01_involutivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..1000 {
        let s = random_seed(&mut rng);
        for k in 0..s.n() {
            let back = s.mutated(k).unwrap().mutated(k).unwrap();
            assert_eq!(
                back, s,
                "criterion 01 FAIL: mutation at {k} is not involutive on trial {trial}"
            );
        }
    }
    println!("criterion 01 PASS: mutation is involutive on 1000 random seeds");
}

#[test]
fn criterion_02_fig1_round_trip() {
    let s = builtins::fig1();
    assert_eq!(
        (s.b.entry(0, 0), s.b.entry(0, 1), s.b.entry(1, 0), s.b.entry(1, 1)),
        (0, -2, 2, 0),
        "criterion 02 FAIL: fig1 exchange matrix"
    );
    let y: Vec<String> = s.y.iter().map(|y| y.to_string()).collect();
    assert_eq!(
        y,
        vec!["z1*z2^-1", "z2^-1"],
        "criterion 02 FAIL: fig1 coefficients"
    );

    let q = quiver_from_seed(&s).expect("fig1 encodes as a quiver");
    let arrows: Vec<(usize, usize, i64)> = q.arrows().collect();
    assert_eq!(
        arrows,
        vec![(0, 1, 2), (0, 2, 1), (3, 0, 1), (3, 1, 1)],
        "criterion 02 FAIL: fig1 arrow groups"
    );

    let back = quiver_to_seed(&q);
    assert_eq!(back.b, s.b, "criterion 02 FAIL: matrix after round-trip");
    assert_eq!(back.y, s.y, "criterion 02 FAIL: coefficients after round-trip");
    println!("criterion 02 PASS: fig1 seed <-> quiver round-trip is exact");
}

#[test]
fn criterion_03_laurent_phenomenon_desk_scale() {
    // Exhaustive words of length 1..=5 for the small examples.
    fn all_words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for k in 0..n {
                    let mut v = w.clone();
                    v.push(k);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    let ring = GroundRingSpec::Polynomial;
    for (name, seed) in [
        ("a2", builtins::a2()),
        ("a3", builtins::a3()),
        ("fig1", builtins::fig1()),
    ] {
        let words = all_words(seed.n(), 5);
        let expected = words.len();
        let report = verify_laurent(&seed, &words, &ring);
        assert!(
            report.clean(),
            "criterion 03 FAIL: {name} has violations: {:?}",
            report.violations
        );
        assert_eq!(
            report.sequences_checked, expected,
            "criterion 03 FAIL: {name} sequence count"
        );
    }

    // 500 random length-5 words for the 6-vertex example.
    let cg3 = quiver_to_seed(&builtins::cg3_mutable(Reading::Single));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let words: Vec<Vec<usize>> = (0..500)
        .map(|_| (0..5).map(|_| rng.gen_range(0..6)).collect())
        .collect();
    let report = verify_laurent(&cg3, &words, &ring);
    assert!(
        report.clean(),
        "criterion 03 FAIL: cg3 has violations: {:?}",
        report.violations
    );
    println!(
        "criterion 03 PASS: Laurent phenomenon verified exhaustively (a2, a3, fig1) and on 500 random cg3 words"
    );
}

#[test]
fn criterion_04_exchange_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checks = 0usize;
    for trial in 0..100 {
        // Acyclic: arrows only i -> j for i < j. Source-freezing over the
        // polynomial ring: nonnegative coefficient exponents.
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(0..=2);
        let mut entries = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let w = rng.gen_range(0..=2);
                entries[j][i] = w;
                entries[i][j] = -w;
            }
        }
        let b = ExchangeMatrix::new(entries).unwrap();
        let y = (0..n)
            .map(|_| {
                let exps: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=2)).collect();
                TropMonomial::from_exps_i64(&exps)
            })
            .collect();
        let s = Seed::new(b, y, m, None).unwrap();
        assert!(s.is_acyclic(), "criterion 04 FAIL: generator not acyclic");
        assert!(
            s.is_source_freezing(&GroundRingSpec::Polynomial),
            "criterion 04 FAIL: generator not source-freezing"
        );
        for i in 0..n {
            if !s.is_source(i) {
                continue;
            }
            for j in 0..n {
                if s.b.entry(j, i) > 0 {
                    let ok = s.check_exchange_identity(i, j).unwrap();
                    assert!(
                        ok,
                        "criterion 04 FAIL: identity broken at (i={i}, j={j}) on trial {trial}"
                    );
                    checks += 1;
                }
            }
        }
    }
    assert!(
        checks >= 100,
        "criterion 04 FAIL: only {checks} (source, arrow) pairs exercised"
    );
    println!("criterion 04 PASS: exchange identity holds at {checks} (source, arrow) pairs");
}

#[test]
fn criterion_05_freezing_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checks = 0usize;
    for trial in 0..200 {
        let s = random_seed(&mut rng);
        let n = s.n();
        if n < 2 {
            continue;
        }
        for i in 0..n {
            let frozen = s.freeze(i).unwrap();
            let new_gen = s.m; // freezing appends one generator
            for j in 0..n {
                if j == i {
                    continue;
                }
                let jj = if j > i { j - 1 } else { j };
                let lhs = frozen.y[jj].trop_add_one();
                // (1 (+) y_j) * x_i^{min(0, B_ij)}, lifted to m+1 generators.
                let mut exps = s.y[j].trop_add_one().exps.clone();
                exps.push(BigInt::from(s.b.entry(i, j).min(0)));
                let rhs = TropMonomial { exps };
                assert_eq!(
                    lhs, rhs,
                    "criterion 05 FAIL: freezing lemma broken at (i={i}, j={j}) on trial {trial} (new generator z{})",
                    new_gen + 1
                );
                checks += 1;
            }
        }
    }
    assert!(checks > 0, "criterion 05 FAIL: no pairs exercised");
    println!("criterion 05 PASS: freezing lemma verified at {checks} (i, j) pairs over 200 random seeds");
}

#[test]
fn criterion_06_banff_on_cg3() {
    let q = builtins::cg3_mutable(Reading::Single);
    let trace = banff_reduced(&q, SearchLimits::default()).unwrap();
    assert_eq!(
        trace.status,
        BanffStatus::Success,
        "criterion 06 FAIL: status"
    );
    assert_eq!(
        trace.acyclic_leaf_count(),
        3,
        "criterion 06 FAIL: leaf count"
    );
    // Tree shape: root splits; one child is an acyclic leaf; the other
    // splits into two acyclic leaves.
    let root_children = match &trace.nodes[0].resolution {
        NodeResolution::Split { children, .. } => *children,
        other => panic!("criterion 06 FAIL: root resolution {other:?}"),
    };
    let child_kinds: Vec<bool> = root_children
        .iter()
        .map(|&c| matches!(trace.nodes[c].resolution, NodeResolution::Acyclic { .. }))
        .collect();
    assert_eq!(
        child_kinds.iter().filter(|&&a| a).count(),
        1,
        "criterion 06 FAIL: exactly one root child should be an acyclic leaf"
    );
    let split_child = root_children[child_kinds.iter().position(|&a| !a).unwrap()];
    match &trace.nodes[split_child].resolution {
        NodeResolution::Split { children, .. } => {
            for &c in children {
                assert!(
                    matches!(trace.nodes[c].resolution, NodeResolution::Acyclic { .. }),
                    "criterion 06 FAIL: grandchild {c} should be an acyclic leaf"
                );
            }
        }
        other => panic!("criterion 06 FAIL: second root child resolution {other:?}"),
    }
    trace
        .replay()
        .unwrap_or_else(|e| panic!("criterion 06 FAIL: replay rejected the certificate: {e}"));

    // Same result through the command line.
    let (code, stdout, _) = run_cli(&["banff", "cg3_mutable"]);
    assert_eq!(code, 0, "criterion 06 FAIL: CLI exit code");
    assert!(
        stdout.contains("SUCCESS") && stdout.contains("3 acyclic leaves"),
        "criterion 06 FAIL: CLI output: {stdout}"
    );
    println!("criterion 06 PASS: banff certifies cg3_mutable with 3 acyclic leaves and a replayable trace");
}

#[test]
fn criterion_07_mgs_verification() {
    let seq_1based = "2,3,4,1,5,1,2,6,3";
    let seq: Vec<usize> = vec![1, 2, 3, 0, 4, 0, 1, 5, 2];

    let mut passing = Vec::new();
    for (name, reading) in [("single", Reading::Single), ("double", Reading::Double)] {
        let q = builtins::cg3_mutable(reading);
        let verdict = verify_mgs(&q, &seq).unwrap(); // Err would break sign-coherence
        // Sign-coherence: every performed step classified, final colors too.
        for i in 0..q.n() {
            verdict.final_state.color(i).unwrap_or_else(|e| {
                panic!("criterion 07 FAIL: sign-coherence broken under {name}: {e}")
            });
        }
        if verdict.accepted {
            assert_eq!(
                verdict.steps.len(),
                seq.len(),
                "criterion 07 FAIL: accepted run must perform all steps"
            );
            passing.push(name);
        }
    }
    assert!(
        !passing.is_empty(),
        "criterion 07 FAIL: the sequence verifies under neither reading"
    );
    let golden = include_str!("golden/mgs_reading.txt").trim();
    assert_eq!(
        passing.join(","),
        golden,
        "criterion 07 FAIL: passing readings diverge from the golden record"
    );

    let (code, stdout, _) = run_cli(&[
        "mgs",
        "cg3_mutable",
        "--reading",
        golden,
        "--verify",
        seq_1based,
    ]);
    assert_eq!(code, 0, "criterion 07 FAIL: CLI exit code");
    assert!(
        stdout.contains("ACCEPT"),
        "criterion 07 FAIL: CLI output: {stdout}"
    );
    println!("criterion 07 PASS: the length-9 sequence is a maximal green sequence under the '{golden}' reading");
}

#[test]
fn criterion_08_au_reports() {
    let cases: &[(&str, &str, i32, &str)] = &[
        ("cg3_mutable", "zp", 0, "status: CONCLUDED_EQUAL"),
        ("cg3_mutable", "zp+", 2, "status: INCONCLUSIVE"),
        ("fig2", "zp+", 0, "via: acyclic source-freezing criterion"),
        ("fig1", "zp+:z2", 0, "status: CONCLUDED_EQUAL"),
    ];
    for &(input, ring, want_code, want_text) in cases {
        let (code, stdout, stderr) = run_cli(&["report", input, "--ring", ring]);
        assert_eq!(
            code, want_code,
            "criterion 08 FAIL: `report {input} --ring {ring}` exit code (stderr: {stderr})"
        );
        assert!(
            stdout.contains(want_text),
            "criterion 08 FAIL: `report {input} --ring {ring}` output missing '{want_text}': {stdout}"
        );
    }
    // The polynomial-ring run must never claim equality, and must name the
    // obstruction monomial.
    let (_, stdout, _) = run_cli(&["report", "cg3_mutable", "--ring", "zp+"]);
    assert!(
        !stdout.contains("CONCLUDED_EQUAL"),
        "criterion 08 FAIL: overclaim over zp+: {stdout}"
    );
    let (code, stdout, _) = run_cli(&["report", "fig1", "--ring", "zp+"]);
    assert_eq!(code, 2, "criterion 08 FAIL: fig1 zp+ exit code");
    assert!(
        stdout.contains("z2^-1"),
        "criterion 08 FAIL: fig1 zp+ must list the obstruction z2^-1: {stdout}"
    );
    println!("criterion 08 PASS: A = U reports conclude over zp and zp+:z2, stay inconclusive over zp+, and list obstructions");
}

#[test]
fn criterion_09_markov_negative_controls() {
    let markov = builtins::markov();
    assert!(
        covering_pairs(&markov).is_empty(),
        "criterion 09 FAIL: Markov should have no covering pairs"
    );
    let (code, stdout, _) = run_cli(&["banff", "markov"]);
    assert_eq!(code, 1, "criterion 09 FAIL: banff markov exit code");
    assert!(
        stdout.contains("FAIL"),
        "criterion 09 FAIL: banff markov output: {stdout}"
    );
    let (code, stdout, _) = run_cli(&["mgs", "markov", "--search", "10"]);
    assert_eq!(code, 2, "criterion 09 FAIL: mgs search exit code");
    assert!(
        stdout.contains("NONE_WITHIN_BOUNDS"),
        "criterion 09 FAIL: mgs search output: {stdout}"
    );
    println!("criterion 09 PASS: Markov has no covering pairs, fails banff, and admits no short maximal green sequence");
}

#[test]
fn criterion_10_a2_oracles() {
    // Brute-force closure of the A2 seed: exactly 5 distinct variables.
    let s = builtins::a2();
    let mut variables: BTreeSet<String> = s.x.iter().map(LaurentPoly::to_string).collect();
    let mut seen_seeds: Vec<Seed> = vec![s.clone()];
    let mut frontier = vec![s.clone()];
    while let Some(cur) = frontier.pop() {
        for k in 0..2 {
            let next = cur.mutated(k).unwrap();
            for x in &next.x {
                variables.insert(x.to_string());
            }
            if !seen_seeds.contains(&next) {
                seen_seeds.push(next.clone());
                frontier.push(next);
            }
        }
    }
    assert_eq!(
        variables.len(),
        5,
        "criterion 10 FAIL: A2 closure variables: {variables:?}"
    );

    // The pentagon relation: (1,2,1,2,1) returns the initial seed with the
    // two indices swapped.
    let p = s.apply(&[0, 1, 0, 1, 0]).unwrap();
    assert_eq!(
        (p.x[0].to_string().as_str(), p.x[1].to_string().as_str()),
        ("x2", "x1"),
        "criterion 10 FAIL: pentagon cluster"
    );
    assert_eq!(
        (p.b.entry(0, 1), p.b.entry(1, 0)),
        (1, -1),
        "criterion 10 FAIL: pentagon matrix"
    );

    // Shortest maximal green sequence has length 2.
    let q = quiver_from_seed(&s).unwrap();
    let out = search_mgs(&q, 5, 100_000).unwrap();
    assert_eq!(
        out.sequence.as_ref().map(Vec::len),
        Some(2),
        "criterion 10 FAIL: A2 shortest MGS: {:?}",
        out.sequence
    );

    // And the same through the command line.
    let (code, stdout, _) = run_cli(&["mgs", "a2", "--search", "5"]);
    assert_eq!(code, 0, "criterion 10 FAIL: CLI exit code");
    assert!(
        stdout.contains("length 2"),
        "criterion 10 FAIL: CLI output: {stdout}"
    );
    println!("criterion 10 PASS: A2 closure has 5 variables, the pentagon closes, and the shortest MGS has length 2");
}
