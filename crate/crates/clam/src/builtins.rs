//! Built-in example seeds and quivers.
//!
//! These small objects exercise every feature of the crate and are
//! addressable by name on the command line (`clam mutate fig1 1`, …).
//! Indices here are 0-based like the rest of the library; the names are
//! stable identifiers.

use crate::quiver::Quiver;
use crate::seed::{ExchangeMatrix, Seed};
use crate::semifield::TropMonomial;

/// Which multiplicity to use for the one ambiguous arrow of
/// [`cg3_mutable`] (the arrow `5 → 2`, 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reading {
    /// Multiplicity 1. This is the default, and the reading under which
    /// the long maximal green sequence for [`cg3_mutable`] verifies.
    #[default]
    Single,
    /// Multiplicity 2.
    Double,
}

impl Reading {
    fn mult(self) -> i64 {
        match self {
            Reading::Single => 1,
            Reading::Double => 2,
        }
    }
}

impl std::str::FromStr for Reading {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "single" => Ok(Reading::Single),
            "double" => Ok(Reading::Double),
            other => Err(format!("unknown reading '{other}' (expected single or double)")),
        }
    }
}

/// A named built-in object: either a seed or a quiver.
#[derive(Debug, Clone)]
pub enum Builtin {
    Seed(Seed),
    Quiver(Quiver),
}

/// The names accepted by [`lookup`].
pub const NAMES: &[&str] = &[
    "a2",
    "a3",
    "cg3_double",
    "cg3_mutable",
    "cg3_single",
    "fig1",
    "fig2",
    "markov",
];

/// Resolves a built-in by name. `reading` only affects `cg3_mutable`.
pub fn lookup(name: &str, reading: Reading) -> Option<Builtin> {
    match name {
        "a2" => Some(Builtin::Seed(a2())),
        "a3" => Some(Builtin::Seed(a3())),
        "fig1" => Some(Builtin::Seed(fig1())),
        "fig2" => Some(Builtin::Quiver(fig2())),
        "cg3_single" => Some(Builtin::Quiver(cg3_single())),
        "cg3_double" => Some(Builtin::Quiver(cg3_double())),
        "cg3_mutable" => Some(Builtin::Quiver(cg3_mutable(reading))),
        "markov" => Some(Builtin::Quiver(markov())),
        _ => None,
    }
}

/// Rank-2 seed with a single arrow and no coefficients
/// (`B = [[0,-1],[1,0]]`). Its exchange graph is a pentagon: five cluster
/// variables in total.
pub fn a2() -> Seed {
    Seed::new(
        ExchangeMatrix::new(vec![vec![0, -1], vec![1, 0]]).unwrap(),
        vec![TropMonomial::one(0), TropMonomial::one(0)],
        0,
        None,
    )
    .unwrap()
}

/// Rank-3 path seed with no coefficients
/// (`B = [[0,1,0],[-1,0,1],[0,-1,0]]`).
pub fn a3() -> Seed {
    Seed::new(
        ExchangeMatrix::new(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap(),
        vec![
            TropMonomial::one(0),
            TropMonomial::one(0),
            TropMonomial::one(0),
        ],
        0,
        None,
    )
    .unwrap()
}

/// Rank-2 seed with a double arrow and two coefficient generators:
/// `B = [[0,-2],[2,0]]`, `y1 = z1*z2^-1`, `y2 = z2^-1`. As a quiver:
/// `1 → 2` with multiplicity 2, `1 → z1`, `z2 → 1`, `z2 → 2`.
pub fn fig1() -> Seed {
    Seed::new(
        ExchangeMatrix::new(vec![vec![0, -2], vec![2, 0]]).unwrap(),
        vec![
            TropMonomial::from_exps_i64(&[1, -1]),
            TropMonomial::from_exps_i64(&[0, -1]),
        ],
        2,
        None,
    )
    .unwrap()
}

/// An acyclic, source-freezing quiver on 4 mutable and 3 frozen vertices.
/// Its coefficients are `y = (z1*z3, z1, z2, z2*z3)`: every frozen vertex
/// is a pure sink, so the `A = U` criterion applies over polynomial
/// coefficients.
pub fn fig2() -> Quiver {
    Quiver::new(
        4,
        3,
        [
            // mutable part (acyclic)
            (0, 1, 1),
            (0, 2, 1),
            (0, 3, 1),
            (2, 1, 1),
            (2, 3, 1),
            // frozen sinks
            (0, 4, 1),
            (1, 4, 1),
            (2, 5, 1),
            (3, 5, 1),
            (3, 6, 1),
            (0, 6, 1),
        ],
    )
    .unwrap()
}

fn cg3_full(reading: Reading) -> Quiver {
    Quiver::new(
        6,
        3,
        [
            (0, 8, 1),
            (8, 1, 1),
            (1, 0, 1),
            (1, 2, 1),
            (2, 8, 1),
            (5, 2, reading.mult()),
            (2, 4, 1),
            (4, 5, 1),
            (4, 1, 1),
            (2, 3, 1),
            (3, 5, 1),
            (3, 6, 1),
            (6, 2, 1),
            (5, 7, 1),
            (0, 5, 1),
            (1, 3, 1),
            (3, 4, 1),
            (7, 0, 1),
        ],
    )
    .unwrap()
}

/// A 6-vertex quiver with 3 frozen vertices whose mutable part is not
/// acyclic. Over full Laurent coefficients its cluster algebra equals its
/// upper bound (certified by the covering-pair algorithm); over polynomial
/// coefficients the acyclic/source-freezing criterion does not apply, so
/// no equality conclusion is drawn. The arrow `6 → 3` (1-based) has
/// multiplicity 1 here; see [`cg3_double`] for the multiplicity-2 variant.
pub fn cg3_single() -> Quiver {
    cg3_full(Reading::Single)
}

/// [`cg3_single`] with the arrow `6 → 3` (1-based) at multiplicity 2.
pub fn cg3_double() -> Quiver {
    cg3_full(Reading::Double)
}

/// The mutable part of [`cg3_single`] / [`cg3_double`]: 6 vertices, no
/// frozen part, with the `6 → 3` (1-based) multiplicity chosen by
/// `reading`.
pub fn cg3_mutable(reading: Reading) -> Quiver {
    cg3_full(reading).mutable_part()
}

/// The Markov quiver: a 3-cycle of double arrows. Mutation-invariant up to
/// isomorphism, not acyclic anywhere in its class, with no covering pairs;
/// it admits no maximal green sequence.
pub fn markov() -> Quiver {
    Quiver::new(3, 0, [(0, 1, 2), (1, 2, 2), (2, 0, 2)]).unwrap()
}
