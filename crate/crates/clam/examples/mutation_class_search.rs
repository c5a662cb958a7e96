//! Searching a mutation class up to isomorphism.
//!
//! Quiver mutation generates a (possibly infinite) class of quivers. The
//! crate deduplicates members by a canonical form — a vertex relabeling
//! chosen so that isomorphic quivers serialize identically — which keeps
//! breadth-first exploration honest. The search reports one of three
//! outcomes: a witness was FOUND, the class was EXHAUSTED without one, or a
//! limit cut the search off (LIMIT_HIT).
//!
//! Run with: `cargo run --example mutation_class_search`

use clam::builtins;
use clam::{search_mutation_class, Quiver, SearchLimits, SearchStatus};

fn main() {
    // Is some member of the class acyclic? For the oriented triangle with
    // unit arrows, yes — one mutation straightens it into a path.
    let triangle = Quiver::new(3, 0, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
    let out = search_mutation_class(
        &triangle,
        |q: &Quiver| q.is_acyclic(),
        SearchLimits::default(),
    )
    .unwrap();
    println!("unit triangle, goal = acyclic: {}", out.status);
    assert_eq!(out.status, SearchStatus::Found);
    if let Some((witness, path)) = &out.witness {
        let path_1based: Vec<String> = path.iter().map(|v| (v + 1).to_string()).collect();
        println!("  path: mutate at [{}]", path_1based.join(", "));
        println!("  witness arrows: {:?}", witness.arrows().collect::<Vec<_>>());
        assert!(witness.is_acyclic());
    }
    println!(
        "  explored {} quivers, max depth {}",
        out.stats.nodes_visited, out.stats.max_depth
    );

    // The Markov quiver: nothing in its class is acyclic, and the class is
    // small enough to exhaust outright — a rare definitive "no".
    let markov = builtins::markov();
    let out = search_mutation_class(
        &markov,
        |q: &Quiver| q.is_acyclic(),
        SearchLimits::default(),
    )
    .unwrap();
    println!("\nmarkov, goal = acyclic: {}", out.status);
    assert_eq!(out.status, SearchStatus::Exhausted);
    println!(
        "  the whole class has {} member(s) up to isomorphism",
        out.stats.nodes_visited
    );

    // Tight limits are reported as LIMIT_HIT, never silently treated as
    // exhaustion. A path quiver mutates into a genuinely new shape at
    // depth 1, so a depth-0 search must admit it was cut short.
    let path3 = Quiver::new(3, 0, [(0, 1, 1), (1, 2, 1)]).unwrap();
    let out = search_mutation_class(
        &path3,
        |_: &Quiver| false,
        SearchLimits { depth: 0, nodes: 10 },
    )
    .unwrap();
    println!("\npath quiver, impossible goal, depth limit 0: {}", out.status);
    assert_eq!(out.status, SearchStatus::LimitHit);
}
