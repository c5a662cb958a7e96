//! Seed mutation from first principles.
//!
//! Starts with the rank-2 seed `a2`, mutates it step by step, and watches the
//! cluster variables stay Laurent in the initial variables. Ends with the
//! pentagon: five alternating mutations return the initial seed with its two
//! indices swapped.
//!
//! Run with: `cargo run --example mutate_a_seed`

use clam::builtins;

fn main() {
    let s = builtins::a2();
    println!("initial seed (B is the exchange matrix, x the cluster):");
    println!("  B = [[{}, {}], [{}, {}]]",
        s.b.entry(0, 0), s.b.entry(0, 1), s.b.entry(1, 0), s.b.entry(1, 1));
    for (i, x) in s.x.iter().enumerate() {
        println!("  x{} = {x}", i + 1);
    }

    // One mutation at vertex 0. The exchange relation replaces x1 by
    // (x2 + 1) / x1 — and the division is exact, so the result is again a
    // Laurent polynomial.
    let t = s.mutated(0).unwrap();
    println!("\nafter mutating at vertex 1:");
    for (i, x) in t.x.iter().enumerate() {
        println!("  x{} = {x}", i + 1);
    }

    // Mutation is an involution: mutating again at the same vertex undoes it.
    assert_eq!(t.mutated(0).unwrap(), s);
    println!("\nmutating at vertex 1 again returns the initial seed (involution).");

    // Walk the pentagon: 0, 1, 0, 1, 0. Every intermediate variable is a
    // Laurent polynomial in x1, x2 even when the numerators grow.
    println!("\nthe pentagon walk (mutations at 1, 2, 1, 2, 1):");
    let mut cur = s.clone();
    for (step, &k) in [0usize, 1, 0, 1, 0].iter().enumerate() {
        cur = cur.mutated(k).unwrap();
        let cluster: Vec<String> = cur.x.iter().map(|x| x.to_string()).collect();
        println!("  step {}: mutate at {} -> [{}]", step + 1, k + 1, cluster.join(", "));
    }

    // The end of the walk is the initial seed with indices 1 and 2 swapped.
    assert_eq!(cur.x[0].to_string(), "x2");
    assert_eq!(cur.x[1].to_string(), "x1");
    println!("\nafter five steps the cluster is [x2, x1]: the initial cluster, relabeled.");
}
