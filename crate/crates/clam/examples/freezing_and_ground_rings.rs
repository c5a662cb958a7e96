//! Freezing a cluster variable, and what it does to the ground ring.
//!
//! Freezing turns a mutable vertex into a new coefficient generator. The
//! coefficients of the remaining vertices pick up powers of the new
//! generator, and whether `A = U`-style arguments go through afterwards
//! depends on which ground ring you work over: the full Laurent ring, the
//! polynomial ring, or a partial localization.
//!
//! Run with: `cargo run --example freezing_and_ground_rings`

use std::collections::BTreeSet;

use clam::builtins;
use clam::GroundRingSpec;

fn main() {
    // fig1: a rank-2 seed with two frozen generators and coefficients
    // y1 = z1/z2, y2 = 1/z2.
    let s = builtins::fig1();
    println!("seed with coefficients:");
    for (i, y) in s.y.iter().enumerate() {
        println!("  y{} = {y}", i + 1);
    }

    // Where does each coefficient live? `y (+) 1` (the tropical sum with 1)
    // is the quantity that must lie in the ground ring for the sufficient
    // criterion to apply.
    let rings: Vec<(&str, GroundRingSpec)> = vec![
        ("full Laurent ring ZP", GroundRingSpec::FullLaurent),
        ("polynomial ring ZP+", GroundRingSpec::Polynomial),
        (
            "localization ZP+ with z2 inverted",
            GroundRingSpec::Localized(BTreeSet::from([1])),
        ),
    ];
    println!("\nmembership of y_i (+) 1 in each ground ring:");
    for (label, ring) in &rings {
        let verdicts: Vec<String> = s
            .y
            .iter()
            .map(|y| {
                let t = y.trop_add_one();
                format!("{t} {}", if t.in_ground_ring(ring) { "in" } else { "OUT" })
            })
            .collect();
        println!("  {label}: {}", verdicts.join(", "));
    }

    // Now freeze the middle vertex of the a3 seed. The frozen variable
    // becomes a new coefficient generator z1, and each remaining vertex j
    // picks it up in its coefficient with exponent B.entry(i, j).
    let a3 = builtins::a3();
    println!("\nfreezing vertex 2 of a3 (which starts with no coefficients):");
    let frozen = a3.freeze(1).unwrap();
    println!(
        "  rank drops {} -> {}, coefficient generators {} -> {}",
        a3.n(),
        frozen.n(),
        a3.m,
        frozen.m
    );
    for (i, y) in frozen.y.iter().enumerate() {
        println!("  y{} = {y}", i + 1);
    }

    // One neighbour sees the new generator with a negative exponent, the
    // other with a positive one — so over the polynomial ring the frozen
    // seed has an obstruction, while over the full Laurent ring it has none.
    for (i, y) in frozen.y.iter().enumerate() {
        let t = y.trop_add_one();
        println!(
            "  y{} (+) 1 = {t}  ({} ZP+)",
            i + 1,
            if t.in_ground_ring(&GroundRingSpec::Polynomial) { "in" } else { "outside" }
        );
    }
    println!("\nthe new generator records the frozen variable exactly; nothing is discarded.");
}
