//! Reading and writing seeds and quivers as plain text.
//!
//! Both formats are line-oriented, comment-friendly (`#`), and round-trip
//! exactly — everything the CLI prints can be piped back in. This example
//! renders a seed, parses it back, mutates along the way, and exports a
//! quiver to Graphviz DOT.
//!
//! Run with: `cargo run --example seed_files`

use clam::builtins::{self, Reading};
use clam::io::{parse_seed, render_quiver, render_seed};
use clam::quiver_from_seed;

fn main() {
    // A seed file: header `n m`, the n rows of B, the n coefficient
    // monomials, and (only when customized) a `labels` line.
    let s = builtins::fig1();
    let text = render_seed(&s);
    println!("fig1 as a seed file:\n---\n{text}---");

    let back = parse_seed(&text).unwrap();
    assert_eq!(back, s);
    println!("parsed back: identical seed\n");

    // Files tolerate comments and blank lines; this is what the CLI's
    // `mutate --trace` output looks like as input.
    let annotated = "\
# the rank-2 seed with doubled arrows
2 2

0 -2
2 0
z1*z2^-1
z2^-1
";
    let parsed = parse_seed(annotated).unwrap();
    assert_eq!(parsed, s);
    println!("comments and blank lines are skipped on input");

    // Quiver files list one arrow group per line: `src dst multiplicity`,
    // 0-based, frozen vertices numbered after the mutable ones.
    let q = builtins::cg3_mutable(Reading::Single);
    println!("\ncg3_mutable as a quiver file:\n---\n{}---", render_quiver(&q));

    // DOT export for visualization (circles mutable, boxes frozen).
    let fig1_quiver = quiver_from_seed(&s).unwrap();
    println!("\nfig1 as Graphviz DOT:\n{}", fig1_quiver.to_dot());
}
