//! When does the cluster algebra equal its upper bound?
//!
//! The answer depends on the ground ring. This example runs the `A = U`
//! report over the three standard choices and shows each of the three
//! possible shapes of answer:
//!
//! * concluded via the acyclic source-freezing criterion,
//! * concluded via a Banff covering-pair certificate (full Laurent ring only),
//! * inconclusive, with the obstructions and the minimal inversions that
//!   would repair them.
//!
//! Run with: `cargo run --example au_reports`

use std::collections::BTreeSet;

use clam::builtins::{self, Reading};
use clam::quiver_from_seed;
use clam::{au_report, GroundRingSpec, SearchLimits};

fn main() {
    let limits = SearchLimits::default();

    // fig2 is acyclic and source-freezing over the polynomial ring: the
    // direct criterion concludes without any search.
    let fig2 = builtins::fig2();
    let report = au_report(&fig2, &GroundRingSpec::Polynomial, limits).unwrap();
    println!("=== fig2 over ZP+ ===\n{}", report.render());
    assert!(report.concluded);

    // cg3_mutable is not acyclic, so the criterion cannot apply — but over
    // the full Laurent ring the Banff certificate takes over and concludes.
    let cg3 = builtins::cg3_mutable(Reading::Single);
    let report = au_report(&cg3, &GroundRingSpec::FullLaurent, limits).unwrap();
    println!("\n=== cg3_mutable over ZP ===\n{}", report.render());
    assert!(report.concluded);

    // The same quiver over the polynomial ring: the Banff route is not
    // available there (the equality can genuinely fail over smaller rings),
    // so the report honestly stays inconclusive.
    let report = au_report(&cg3, &GroundRingSpec::Polynomial, limits).unwrap();
    println!("\n=== cg3_mutable over ZP+ ===\n{}", report.render());
    assert!(!report.concluded);

    // fig1 over the polynomial ring is obstructed: y (+) 1 lands outside the
    // ring for both vertices. The report names the culprits and the minimal
    // set of generators to invert.
    let fig1 = quiver_from_seed(&builtins::fig1()).unwrap();
    let report = au_report(&fig1, &GroundRingSpec::Polynomial, limits).unwrap();
    println!("\n=== fig1 over ZP+ ===\n{}", report.render());
    for (i, gens) in &report.inversion_suggestions {
        let names: Vec<String> = gens.iter().map(|g| format!("z{}", g + 1)).collect();
        println!("  to clear y{}: invert {{{}}}", i + 1, names.join(", "));
    }

    // Follow the suggestion: invert z2 and the criterion goes through.
    let ring = GroundRingSpec::Localized(BTreeSet::from([1]));
    let report = au_report(&fig1, &ring, limits).unwrap();
    println!("\n=== fig1 over ZP+ with z2 inverted ===\n{}", report.render());
    assert!(report.concluded);
}
