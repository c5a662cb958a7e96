//! # clam — a cluster-algebra machine
//!
//! Exact arithmetic for cluster algebras of geometric type.
//!
//! A *seed* consists of an extended cluster of variables `x1..xn` (mutable)
//! together with coefficients drawn from a tropical semifield on generators
//! `z1..zm`, tied together by a skew-symmetrizable exchange matrix `B`.
//! Mutation transforms seeds; iterating mutation generates a cluster algebra.
//! This crate provides:
//!
//! * [`semifield`] — tropical monomials (the coefficient group) and ground-ring
//!   membership tests for the three standard choices of ground ring: the full
//!   Laurent ring, the polynomial ring, and partial localizations.
//! * [`laurent`] — exact multivariate Laurent polynomials with arbitrary-precision
//!   integer coefficients, including exact division.
//! * [`seed`] — seeds, matrix/coefficient/seed mutation, freezing a cluster
//!   variable into a new coefficient, acyclicity and source-freezing predicates,
//!   an exchange-identity checker, a sufficient criterion for `A = U` (the
//!   cluster algebra equals its upper bound), and Laurent-membership verifiers.
//! * [`quiver`] — quivers with frozen vertices, quiver mutation, covering pairs,
//!   canonical forms for isomorphism testing, and bounded mutation-class search.
//! * [`banff`] — a reduced Banff-style certification algorithm producing a
//!   replayable trace that witnesses local acyclicity, plus `A = U` reports.
//! * [`green`] — framed quivers, c-vectors and their colors, and verification
//!   and search for maximal green sequences.
//! * [`builtins`] — the worked examples used throughout the crate
//!   (`fig1`, `fig2`, `cg3_single`, `cg3_double`, `cg3_mutable`, `a2`, `a3`,
//!   `markov`).
//! * [`io`] — plain-text file formats for seeds and quivers (round-trip safe)
//!   and DOT export.
//!
//! Indices are 0-based throughout the library. The command-line interface
//! (see `src/main.rs`) speaks 1-based indices, matching written conventions.
//!
//! ## Quick start
//!
//! ```
//! use clam::builtins;
//!
//! // Mutate the rank-2 seed `a2` at vertex 0: the new variable is
//! // (x2 + 1) / x1, a genuine Laurent polynomial.
//! let s = builtins::a2();
//! let t = s.mutated(0).unwrap();
//! assert_eq!(t.x[0].to_string(), "x2*x1^-1 + x1^-1");
//!
//! // Mutating again returns the original seed.
//! assert_eq!(t.mutated(0).unwrap(), s);
//! ```

// Matrix code throughout fills and reads entries by symmetric index pairs
// (entries[i][j] together with entries[j][i]); explicit indices read better
// than iterator adapters there.
#![allow(clippy::needless_range_loop)]

pub mod banff;
pub mod builtins;
pub mod green;
pub mod io;
pub mod laurent;
pub mod quiver;
pub mod seed;
pub mod semifield;

pub use banff::{
    au_report, banff_reduced, AuReport, AuVia, BanffNode, BanffStatus, BanffTrace, NodeResolution,
};
pub use green::{
    frame, search_mgs, verify_mgs, verify_reddening, Color, FramedState, GreenError, MgsFailure,
    MgsSearchOutcome, MgsStep, MgsVerdict,
};
pub use laurent::{LaurentError, LaurentPoly};
pub use quiver::{
    covering_pairs, quiver_from_seed, quiver_to_seed, search_mutation_class, Quiver, QuiverError,
    SearchLimits, SearchOutcome, SearchStats, SearchStatus,
};
pub use seed::{
    is_laurent_over_seeds, verify_laurent, AuStatus, AuVerdict, ExchangeMatrix, LaurentReport,
    Seed, SeedError,
};
pub use semifield::{GroundRingSpec, SemifieldError, TropMonomial};
