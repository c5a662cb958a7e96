//! Maximal green sequences: verification and search.
//!
//! Frame a quiver (attach one frozen vertex per mutable vertex), and track
//! the signs of the c-vectors as you mutate: a vertex is *green* while its
//! c-vector is nonnegative, *red* once it is nonpositive. A maximal green
//! sequence mutates only at green vertices and ends with everything red.
//!
//! Run with: `cargo run --example maximal_green_sequences`

use clam::builtins::{self, Reading};
use clam::{frame, quiver_from_seed, search_mgs, verify_mgs, Color};

fn main() {
    // Verify a specific length-9 sequence on the 6-vertex quiver
    // `cg3_mutable` (0-based vertices here; the CLI speaks 1-based).
    let q = builtins::cg3_mutable(Reading::Single);
    let seq = [1, 2, 3, 0, 4, 0, 1, 5, 2];
    let verdict = verify_mgs(&q, &seq).unwrap();
    println!("candidate sequence (1-based): {:?}", seq.map(|v| v + 1));
    for (i, step) in verdict.steps.iter().enumerate() {
        println!("  step {}: vertex {} was {}", i + 1, step.vertex + 1, step.color);
    }
    println!(
        "verdict: {}",
        if verdict.accepted { "maximal green sequence" } else { "rejected" }
    );
    assert!(verdict.accepted);

    // The same moves under the doubled reading of the ambiguous arrow stop
    // being green part-way through — the verifier pinpoints where.
    let q2 = builtins::cg3_mutable(Reading::Double);
    let verdict2 = verify_mgs(&q2, &seq).unwrap();
    assert!(!verdict2.accepted);
    println!(
        "\nsame sequence, doubled reading: rejected ({})",
        verdict2.failure.as_ref().unwrap()
    );

    // Colors are readable directly off the framed state.
    let state = frame(&q);
    let colors: Vec<Color> = (0..state.n()).map(|i| state.color(i).unwrap()).collect();
    println!("\ninitial colors (all green, by construction): {colors:?}");

    // Breadth-first search finds a shortest maximal green sequence.
    let a2 = quiver_from_seed(&builtins::a2()).unwrap();
    let found = search_mgs(&a2, 5, 100_000).unwrap();
    let best = found.sequence.unwrap();
    println!(
        "\nshortest maximal green sequence for a2: {:?} ({} states visited)",
        best.iter().map(|v| v + 1).collect::<Vec<_>>(),
        found.nodes_visited
    );
    assert_eq!(best.len(), 2);

    // The Markov quiver has none (within any small budget): every state
    // keeps at least one green vertex alive.
    let markov = builtins::markov();
    let none = search_mgs(&markov, 10, 100_000).unwrap();
    assert!(none.sequence.is_none());
    println!(
        "markov: no maximal green sequence of length <= 10 ({} states visited)",
        none.nodes_visited
    );
}
