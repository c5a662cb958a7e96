//! Framed quivers, c-vector colors, and maximal green sequences.
//!
//! Framing a quiver attaches one new frozen vertex per mutable vertex with
//! a single arrow from the mutable vertex to its frame. In matrix form the
//! framed state is a `2n × n` matrix `B̂`: the current exchange matrix on
//! top and the current *c-matrix* below, initialized to the identity.
//!
//! Sign-coherence guarantees every c-matrix column is entirely ≥ 0
//! (**green**) or entirely ≤ 0 (**red**); a mixed column is reported as an
//! internal error. A *maximal green sequence* mutates only at green
//! vertices and ends with every vertex red — the framed quiver has become
//! the coframed one. A *reddening sequence* relaxes the per-step color
//! restriction but keeps the all-red ending.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::quiver::Quiver;
use crate::seed::mutate_rect;

/// Errors raised by framed-state operations.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GreenError {
    /// A vertex index was not a mutable vertex of the framed state.
    #[error("vertex {v} out of range for a framed state on {n} vertices")]
    Index { v: usize, n: usize },
    /// A c-matrix column had strictly mixed signs. Sign-coherence is
    /// expected to hold throughout, so this indicates an internal error.
    #[error("internal error: c-matrix column {column} has mixed signs (sign-coherence violated)")]
    SignCoherence { column: usize },
}

/// The color of a c-matrix column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    /// All entries ≥ 0 (and not all zero).
    Green,
    /// All entries ≤ 0 (and not all zero).
    Red,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Green => write!(f, "GREEN"),
            Color::Red => write!(f, "RED"),
        }
    }
}

/// A framed mutation state: `B̂` (`2n × n`) plus the mutation history that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedState {
    n: usize,
    b_hat: Vec<Vec<i64>>,
    /// Mutation indices applied since framing.
    pub history: Vec<usize>,
}

impl FramedState {
    /// Number of mutable vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The full `2n × n` matrix (exchange block on top, c-matrix below).
    pub fn b_hat(&self) -> &[Vec<i64>] {
        &self.b_hat
    }

    /// The current c-matrix (`n × n`, bottom block).
    pub fn c_matrix(&self) -> Vec<Vec<i64>> {
        self.b_hat[self.n..].to_vec()
    }

    /// The color of vertex `i`, read off the signs of c-matrix column `i`.
    pub fn color(&self, i: usize) -> Result<Color, GreenError> {
        if i >= self.n {
            return Err(GreenError::Index { v: i, n: self.n });
        }
        let mut pos = false;
        let mut neg = false;
        for r in 0..self.n {
            let v = self.b_hat[self.n + r][i];
            pos |= v > 0;
            neg |= v < 0;
        }
        match (pos, neg) {
            (true, false) => Ok(Color::Green),
            (false, true) => Ok(Color::Red),
            // All-zero columns cannot occur (the c-matrix stays
            // invertible); report them like a coherence failure.
            _ => Err(GreenError::SignCoherence { column: i }),
        }
    }

    /// True iff every vertex is red (vacuously true for `n = 0`).
    pub fn is_all_red(&self) -> Result<bool, GreenError> {
        for i in 0..self.n {
            if self.color(i)? != Color::Red {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mutates the framed state at mutable vertex `k`.
    pub fn mutated(&self, k: usize) -> Result<FramedState, GreenError> {
        if k >= self.n {
            return Err(GreenError::Index { v: k, n: self.n });
        }
        let mut history = self.history.clone();
        history.push(k);
        Ok(FramedState {
            n: self.n,
            b_hat: mutate_rect(&self.b_hat, k),
            history,
        })
    }
}

/// Frames the mutable part of `q` (original frozen vertices are
/// discarded): exchange block from the quiver, c-matrix the identity, all
/// vertices green.
pub fn frame(q: &Quiver) -> FramedState {
    let part = q.mutable_part();
    let n = part.n();
    let mut b_hat = part.ext_matrix();
    for i in 0..n {
        let mut row = vec![0i64; n];
        row[i] = 1;
        b_hat.push(row);
    }
    FramedState {
        n,
        b_hat,
        history: Vec::new(),
    }
}

/// One verified step of a candidate green sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MgsStep {
    /// Vertex mutated (0-based).
    pub vertex: usize,
    /// Its color at the moment of mutation.
    pub color: Color,
}

/// The first violation found by [`verify_mgs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MgsFailure {
    /// Step `step` (0-based) mutated vertex `vertex` while it was red.
    NonGreenMutation { step: usize, vertex: usize },
    /// After the whole sequence, `vertex` was still green.
    NonRedFinalVertex { vertex: usize },
}

impl fmt::Display for MgsFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MgsFailure::NonGreenMutation { step, vertex } => write!(
                f,
                "step {} mutates vertex {} while it is red",
                step + 1,
                vertex + 1
            ),
            MgsFailure::NonRedFinalVertex { vertex } => {
                write!(f, "vertex {} is still green at the end", vertex + 1)
            }
        }
    }
}

/// Verdict of [`verify_mgs`] / [`verify_reddening`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MgsVerdict {
    /// True iff the sequence satisfies the definition being checked.
    pub accepted: bool,
    /// Steps actually performed (verification stops at the first
    /// violation, so this may be shorter than the input).
    pub steps: Vec<MgsStep>,
    /// The first violation, when rejected.
    pub failure: Option<MgsFailure>,
    /// The state after the last performed step.
    pub final_state: FramedState,
}

fn verify_sequence(q: &Quiver, seq: &[usize], reddening: bool) -> Result<MgsVerdict, GreenError> {
    let mut st = frame(q);
    let mut steps = Vec::with_capacity(seq.len());
    for (si, &v) in seq.iter().enumerate() {
        let color = st.color(v)?;
        steps.push(MgsStep { vertex: v, color });
        if color == Color::Red && !reddening {
            return Ok(MgsVerdict {
                accepted: false,
                steps,
                failure: Some(MgsFailure::NonGreenMutation {
                    step: si,
                    vertex: v,
                }),
                final_state: st,
            });
        }
        st = st.mutated(v)?;
    }
    for i in 0..st.n() {
        if st.color(i)? != Color::Red {
            return Ok(MgsVerdict {
                accepted: false,
                steps,
                failure: Some(MgsFailure::NonRedFinalVertex { vertex: i }),
                final_state: st,
            });
        }
    }
    Ok(MgsVerdict {
        accepted: true,
        steps,
        failure: None,
        final_state: st,
    })
}

/// Checks whether `seq` is a maximal green sequence for the mutable part
/// of `q`: every mutation happens at a then-green vertex and the final
/// state is all red. The verdict names the first violation otherwise.
pub fn verify_mgs(q: &Quiver, seq: &[usize]) -> Result<MgsVerdict, GreenError> {
    verify_sequence(q, seq, false)
}

/// Checks whether `seq` is a reddening sequence: mutations may happen at
/// either color, but the final state must be all red.
pub fn verify_reddening(q: &Quiver, seq: &[usize]) -> Result<MgsVerdict, GreenError> {
    verify_sequence(q, seq, true)
}

/// Result of [`search_mgs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MgsSearchOutcome {
    /// A shortest maximal green sequence within the bounds
    /// (lexicographically least among the shortest), or `None` if no
    /// maximal green sequence exists within them.
    pub sequence: Option<Vec<usize>>,
    /// Framed states dequeued during the search.
    pub nodes_visited: usize,
}

/// Bounded breadth-first search for a shortest maximal green sequence of
/// the mutable part of `q`: only green mutations are explored, states are
/// deduplicated by exact `B̂` equality, and children are expanded in
/// ascending vertex order (so ties break lexicographically). `max_len`
/// bounds the sequence length and `node_limit` the number of distinct
/// states enqueued.
pub fn search_mgs(
    q: &Quiver,
    max_len: usize,
    node_limit: usize,
) -> Result<MgsSearchOutcome, GreenError> {
    let start = frame(q);
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    seen.insert(start.b_hat.clone());
    let mut queue: VecDeque<FramedState> = VecDeque::new();
    queue.push_back(start);
    let mut visited = 0usize;

    while let Some(st) = queue.pop_front() {
        visited += 1;
        if st.is_all_red()? {
            return Ok(MgsSearchOutcome {
                sequence: Some(st.history),
                nodes_visited: visited,
            });
        }
        if st.history.len() >= max_len {
            continue;
        }
        for k in 0..st.n() {
            if st.color(k)? != Color::Green {
                continue;
            }
            let child = st.mutated(k)?;
            if seen.contains(&child.b_hat) || seen.len() >= node_limit {
                continue;
            }
            seen.insert(child.b_hat.clone());
            queue.push_back(child);
        }
    }

    Ok(MgsSearchOutcome {
        sequence: None,
        nodes_visited: visited,
    })
}
