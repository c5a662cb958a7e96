//! Command-line interface.
//!
//! Four subcommands cover the library's main flows:
//!
//! * `mutate` — apply a mutation sequence to a seed or quiver and print
//!   the result in its file format (cluster variables as `#` comments);
//! * `banff` — run the reduced Banff certification and print/replay the
//!   certificate;
//! * `mgs` — verify or search for maximal green sequences;
//! * `report` — build an `A = U` report over a chosen ground ring.
//!
//! Inputs name either a built-in (`fig1`, `fig2`, `cg3_single`,
//! `cg3_double`, `cg3_mutable`, `a2`, `a3`, `markov`) or a file in the
//! seed/quiver format. All indices on the command line are 1-based.
//!
//! Exit codes: 0 success/accept/concluded, 1 negative result, 2
//! inconclusive, 3 usage or input errors.

use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use clam::builtins::{self, Builtin, Reading};
use clam::io::{parse_quiver, parse_seed, render_quiver, render_seed};
use clam::quiver::quiver_from_seed;
use clam::{
    au_report, banff_reduced, search_mgs, verify_mgs, verify_reddening, BanffStatus,
    GroundRingSpec, MgsVerdict, Quiver, SearchLimits, Seed,
};

#[derive(Parser)]
#[command(
    name = "clam",
    version,
    about = "Exact arithmetic for cluster algebras of geometric type",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct LimitArgs {
    /// Depth limit for mutation-class searches.
    #[arg(long, env = "CLAM_DEPTH_LIMIT", default_value_t = 8)]
    depth: usize,
    /// Node limit for mutation-class searches (distinct quivers, up to
    /// isomorphism).
    #[arg(long, env = "CLAM_NODE_LIMIT", default_value_t = 100_000)]
    nodes: usize,
}

impl LimitArgs {
    fn limits(self) -> SearchLimits {
        SearchLimits {
            depth: self.depth,
            nodes: self.nodes,
        }
    }
}

fn parse_reading(s: &str) -> Result<Reading, String> {
    s.parse()
}

fn parse_ring(s: &str) -> Result<GroundRingSpec, String> {
    GroundRingSpec::parse(s).map_err(|e| e.to_string())
}

#[derive(Args, Clone, Copy)]
struct ReadingArg {
    /// Arrow-multiplicity reading of the `cg3_mutable` built-in.
    #[arg(long, default_value = "single", value_parser = parse_reading)]
    reading: Reading,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a mutation sequence to a seed or quiver.
    Mutate {
        /// Built-in name or path to a seed/quiver file.
        input: String,
        /// Mutation indices, 1-based.
        sequence: Vec<usize>,
        /// Print every intermediate cluster (seeds) or quiver as `#`
        /// comments along the way.
        #[arg(long)]
        trace: bool,
        /// Print the result as a DOT graph instead of the file format.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        reading: ReadingArg,
    },
    /// Certify local acyclicity with the reduced Banff algorithm.
    Banff {
        /// Built-in name or path to a seed/quiver file (mutable part used).
        input: String,
        #[command(flatten)]
        limits: LimitArgs,
        /// Print the full node-by-node certificate.
        #[arg(long)]
        trace: bool,
        /// Print the certification tree as a DOT graph (and nothing else).
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        reading: ReadingArg,
    },
    /// Verify or search for maximal green sequences.
    Mgs {
        /// Built-in name or path to a seed/quiver file (mutable part used).
        input: String,
        /// Verify this comma-separated 1-based sequence (use "" for the
        /// empty sequence).
        #[arg(long, conflicts_with = "search")]
        verify: Option<String>,
        /// Search for a shortest maximal green sequence up to this length.
        #[arg(long)]
        search: Option<usize>,
        /// Node limit for the search (distinct framed states).
        #[arg(long, env = "CLAM_NODE_LIMIT", default_value_t = 1_000_000)]
        nodes: usize,
        /// With --verify: check the reddening condition instead (mutations
        /// at either color, all-red ending).
        #[arg(long)]
        reddening: bool,
        #[command(flatten)]
        reading: ReadingArg,
    },
    /// Report whether the cluster algebra equals its upper bound.
    Report {
        /// Built-in name or path to a seed/quiver file.
        input: String,
        /// Ground ring: `zp` (Laurent), `zp+` (polynomial), or
        /// `zp+:z2,z5` (localized at the listed generators).
        #[arg(long, default_value = "zp", value_parser = parse_ring)]
        ring: GroundRingSpec,
        #[command(flatten)]
        limits: LimitArgs,
        #[command(flatten)]
        reading: ReadingArg,
    },
}

enum Input {
    Seed(Seed),
    Quiver(Quiver),
}

fn resolve_input(name: &str, reading: Reading) -> Result<Input, String> {
    if let Some(b) = builtins::lookup(name, reading) {
        return Ok(match b {
            Builtin::Seed(s) => Input::Seed(s),
            Builtin::Quiver(q) => Input::Quiver(q),
        });
    }
    let text = fs::read_to_string(name).map_err(|e| {
        format!(
            "'{name}' is not a built-in ({}) and could not be read as a file: {e}",
            builtins::NAMES.join(", ")
        )
    })?;
    match parse_seed(&text) {
        Ok(s) => Ok(Input::Seed(s)),
        Err(seed_err) => match parse_quiver(&text) {
            Ok(q) => Ok(Input::Quiver(q)),
            Err(quiver_err) => Err(format!(
                "'{name}' matches neither format\n  as a seed: {seed_err}\n  as a quiver: {quiver_err}"
            )),
        },
    }
}

fn input_to_quiver(input: Input) -> Result<Quiver, String> {
    match input {
        Input::Quiver(q) => Ok(q),
        Input::Seed(s) => quiver_from_seed(&s)
            .map_err(|e| format!("this command needs a quiver, and the seed does not encode one: {e}")),
    }
}

/// Converts 1-based CLI indices to 0-based library indices.
fn to_zero_based(seq: &[usize], n: usize) -> Result<Vec<usize>, String> {
    seq.iter()
        .map(|&k| {
            if k == 0 {
                Err("mutation indices are 1-based; 0 is not a vertex".to_string())
            } else if k > n {
                Err(format!("vertex {k} out of range 1..={n}"))
            } else {
                Ok(k - 1)
            }
        })
        .collect()
}

fn parse_verify_sequence(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid index '{}' in --verify", tok.trim()))
        })
        .collect()
}

fn print_seed_comments(s: &Seed, indent: &str) {
    for (label, x) in s.labels.iter().zip(&s.x) {
        println!("#{indent} {label} = {x}");
    }
}

fn cmd_mutate(
    input: Input,
    sequence: &[usize],
    trace: bool,
    dot: bool,
) -> Result<u8, String> {
    match input {
        Input::Seed(s) => {
            let word = to_zero_based(sequence, s.n())?;
            let mut cur = s;
            for (step, &k) in word.iter().enumerate() {
                cur = cur.mutated(k).map_err(|e| e.to_string())?;
                if trace && !dot {
                    println!("# step {}: mutate at {}", step + 1, k + 1);
                    print_seed_comments(&cur, "  ");
                }
            }
            if dot {
                let q = quiver_from_seed(&cur)
                    .map_err(|e| format!("cannot draw a non-skew-symmetric seed: {e}"))?;
                print!("{}", q.to_dot());
            } else {
                print_seed_comments(&cur, "");
                print!("{}", render_seed(&cur));
            }
        }
        Input::Quiver(q) => {
            let word = to_zero_based(sequence, q.n())?;
            let mut cur = q;
            for (step, &k) in word.iter().enumerate() {
                cur = cur.mutated(k).map_err(|e| e.to_string())?;
                if trace && !dot {
                    println!("# step {}: mutate at {}", step + 1, k + 1);
                    for (s, d, w) in cur.arrows() {
                        println!("#   {s} {d} {w}");
                    }
                }
            }
            if dot {
                print!("{}", cur.to_dot());
            } else {
                print!("{}", render_quiver(&cur));
            }
        }
    }
    Ok(0)
}

fn cmd_banff(q: &Quiver, limits: SearchLimits, trace: bool, dot: bool) -> Result<u8, String> {
    let cert = banff_reduced(q, limits).map_err(|e| e.to_string())?;
    if dot {
        print!("{}", cert.to_dot());
    } else {
        println!(
            "banff: {} ({} nodes, {} acyclic leaves; limits: depth {}, nodes {})",
            cert.status,
            cert.nodes.len(),
            cert.acyclic_leaf_count(),
            limits.depth,
            limits.nodes
        );
        cert.replay()
            .map_err(|e| format!("internal error: certificate failed to replay: {e}"))?;
        println!("certificate replay: ok");
        if trace {
            print!("{}", cert.render());
        }
    }
    Ok(match cert.status {
        BanffStatus::Success => 0,
        BanffStatus::Fail => 1,
        BanffStatus::Inconclusive => 2,
    })
}

fn print_mgs_verdict(seq: &[usize], verdict: &MgsVerdict) {
    let rendered = if seq.is_empty() {
        "(empty)".to_string()
    } else {
        seq.iter()
            .map(|k| (k + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    println!("sequence: {rendered}");
    for (i, step) in verdict.steps.iter().enumerate() {
        println!("step {}: vertex {} {}", i + 1, step.vertex + 1, step.color);
    }
    println!("final c-matrix:");
    for row in verdict.final_state.c_matrix() {
        println!(
            "  {}",
            row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
        );
    }
    match &verdict.failure {
        None => println!("ACCEPT"),
        Some(f) => println!("REJECT: {f}"),
    }
}

fn cmd_mgs(
    q: &Quiver,
    verify: Option<&str>,
    search: Option<usize>,
    nodes: usize,
    reddening: bool,
) -> Result<u8, String> {
    match (verify, search) {
        (Some(spec), None) => {
            let seq1: Vec<usize> = parse_verify_sequence(spec)?;
            let seq = to_zero_based(&seq1, q.n())?;
            let verdict = if reddening {
                verify_reddening(q, &seq)
            } else {
                verify_mgs(q, &seq)
            }
            .map_err(|e| e.to_string())?;
            print_mgs_verdict(&seq, &verdict);
            Ok(if verdict.accepted { 0 } else { 1 })
        }
        (None, Some(max_len)) => {
            let out = search_mgs(q, max_len, nodes).map_err(|e| e.to_string())?;
            match out.sequence {
                Some(seq) => {
                    println!(
                        "shortest maximal green sequence: length {} ({} states visited)",
                        seq.len(),
                        out.nodes_visited
                    );
                    let verdict = verify_mgs(q, &seq).map_err(|e| e.to_string())?;
                    print_mgs_verdict(&seq, &verdict);
                    Ok(0)
                }
                None => {
                    println!(
                        "NONE_WITHIN_BOUNDS: no maximal green sequence of length <= {max_len} \
                         ({} states visited, node limit {nodes})",
                        out.nodes_visited
                    );
                    Ok(2)
                }
            }
        }
        _ => Err("choose exactly one of --verify <seq> or --search <max-len>".to_string()),
    }
}

fn cmd_report(q: &Quiver, ring: &GroundRingSpec, limits: SearchLimits) -> Result<u8, String> {
    if let GroundRingSpec::Localized(inverted) = ring {
        for &j in inverted {
            if j >= q.m() {
                return Err(format!(
                    "ring inverts z{} but the input has only {} frozen generator(s)",
                    j + 1,
                    q.m()
                ));
            }
        }
    }
    let report = au_report(q, ring, limits).map_err(|e| e.to_string())?;
    print!("{}", report.render());
    Ok(if report.concluded { 0 } else { 2 })
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Mutate {
            input,
            sequence,
            trace,
            dot,
            reading,
        } => {
            let input = resolve_input(&input, reading.reading)?;
            cmd_mutate(input, &sequence, trace, dot)
        }
        Command::Banff {
            input,
            limits,
            trace,
            dot,
            reading,
        } => {
            let q = input_to_quiver(resolve_input(&input, reading.reading)?)?;
            cmd_banff(&q, limits.limits(), trace, dot)
        }
        Command::Mgs {
            input,
            verify,
            search,
            nodes,
            reddening,
            reading,
        } => {
            let q = input_to_quiver(resolve_input(&input, reading.reading)?)?;
            cmd_mgs(&q, verify.as_deref(), search, nodes, reddening)
        }
        Command::Report {
            input,
            ring,
            limits,
            reading,
        } => {
            let q = input_to_quiver(resolve_input(&input, reading.reading)?)?;
            cmd_report(&q, &ring, limits.limits())
        }
    }
}

fn main() -> ExitCode {
    // Rust ignores SIGPIPE by default, which turns `clam ... | head` into a
    // panic on the first failed print. Restore the conventional behavior:
    // die quietly when the reader goes away.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(3);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}
