//! Reduced Banff certification and `A = U` reports.
//!
//! The Banff algorithm certifies that a cluster algebra is *locally
//! acyclic* — a condition under which it equals its upper bound over full
//! Laurent coefficients. Starting from the mutable part of a quiver, each
//! tree node searches the node's mutation class (deterministic bounded
//! breadth-first, one pass) for the first member that is either acyclic or
//! carries a covering pair:
//!
//! * an **acyclic** member closes the branch;
//! * a member with a **covering pair** `(i1, i2)` splits the branch into
//!   the two vertex deletions `delete i1` and `delete i2` (among several
//!   covering pairs the algorithm takes the lexicographically greatest,
//!   compared in the canonical vertex order, so runs are deterministic and
//!   relabeling-invariant);
//! * an **exhausted** class with neither kind of member fails the whole
//!   certificate;
//! * a search stopped by limits leaves the certificate **inconclusive**.
//!
//! The produced [`BanffTrace`] is a replayable certificate:
//! [`BanffTrace::replay`] re-verifies every claim it makes.
//!
//! [`au_report`] combines the Banff route (over the full Laurent ring) with
//! the acyclic/source-freezing criterion (over any ring) into one report on
//! the question "does this cluster algebra equal its upper bound?".

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use itertools::Itertools;
use num_traits::Signed;

use crate::quiver::{
    quiver_to_seed, search_mutation_class, Quiver, QuiverError, SearchLimits, SearchStats,
    SearchStatus,
};
use crate::seed::{AuStatus, AuVerdict};
use crate::semifield::{GroundRingSpec, TropMonomial};

/// Overall status of a Banff run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BanffStatus {
    /// Every branch closed on an acyclic quiver: local acyclicity is
    /// certified, so `A = U` over full Laurent coefficients.
    Success,
    /// Some node's mutation class was fully enumerated and contains neither
    /// an acyclic member nor a covering pair: the certificate cannot be
    /// completed (this does not prove `A ≠ U`).
    Fail,
    /// Search limits stopped at least one node before its class was known
    /// exhausted; nothing was decided.
    Inconclusive,
}

impl fmt::Display for BanffStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BanffStatus::Success => write!(f, "SUCCESS"),
            BanffStatus::Fail => write!(f, "FAIL"),
            BanffStatus::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

/// How a single Banff tree node was resolved.
#[derive(Debug, Clone, PartialEq)]
pub enum NodeResolution {
    /// The class member reached by `path` is acyclic; the branch closes.
    Acyclic { path: Vec<usize> },
    /// The class member reached by `path` carries covering pairs; the
    /// branch splits at `chosen` into two vertex deletions.
    Split {
        path: Vec<usize>,
        /// The class member the split happens at.
        witness: Quiver,
        /// All covering pairs of the witness, in arrow order.
        pairs: Vec<(usize, usize)>,
        /// The pair split on: lexicographically greatest under the
        /// witness's canonical vertex order.
        chosen: (usize, usize),
        /// Node indices of `delete chosen.0` and `delete chosen.1`.
        children: [usize; 2],
    },
    /// The class was fully enumerated with no acyclic or covering-pair
    /// member.
    Exhausted,
    /// Limits stopped the per-node search.
    LimitHit,
}

/// One node of a Banff certification tree.
#[derive(Debug, Clone, PartialEq)]
pub struct BanffNode {
    /// The quiver this node certifies (mutable vertices only).
    pub quiver: Quiver,
    /// Depth in the Banff tree (root = 0).
    pub depth: usize,
    /// Counters from this node's mutation-class search.
    pub stats: SearchStats,
    pub resolution: NodeResolution,
}

/// A replayable Banff certificate: nodes in breadth-first order (the root
/// is node 0), each resolved as acyclic leaf, split, exhausted, or
/// limit-hit.
#[derive(Debug, Clone, PartialEq)]
pub struct BanffTrace {
    pub nodes: Vec<BanffNode>,
    pub status: BanffStatus,
    /// The per-node search limits the run used.
    pub limits: SearchLimits,
}

/// The per-node search goal: acyclic, or carrying a covering pair. The
/// first class member satisfying either decides the node (acyclicity is
/// checked first on each member).
fn certificate_goal(q: &Quiver) -> bool {
    q.is_acyclic() || !q.covering_pairs().is_empty()
}

fn apply_path(q: &Quiver, path: &[usize]) -> Result<Quiver, QuiverError> {
    let mut cur = q.clone();
    for &k in path {
        cur = cur.mutated(k)?;
    }
    Ok(cur)
}

fn compute_status(nodes: &[BanffNode]) -> BanffStatus {
    if nodes
        .iter()
        .any(|n| matches!(n.resolution, NodeResolution::Exhausted))
    {
        BanffStatus::Fail
    } else if nodes
        .iter()
        .any(|n| matches!(n.resolution, NodeResolution::LimitHit))
    {
        BanffStatus::Inconclusive
    } else {
        BanffStatus::Success
    }
}

impl BanffTrace {
    /// The root node.
    pub fn root(&self) -> &BanffNode {
        &self.nodes[0]
    }

    /// Number of branches that closed on an acyclic quiver.
    pub fn acyclic_leaf_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n.resolution, NodeResolution::Acyclic { .. }))
            .count()
    }

    /// Re-verifies every claim in the trace: each stated mutation path is
    /// replayed and its endpoint re-tested, split data (witness, covering
    /// pairs, chosen pair, children) is recomputed, exhausted nodes are
    /// re-searched, the tree structure is checked, and the overall status
    /// is recomputed. Returns the first discrepancy found.
    pub fn replay(&self) -> Result<(), String> {
        if self.nodes.is_empty() {
            return Err("trace has no nodes".into());
        }
        let mut claimed: BTreeSet<usize> = BTreeSet::new();
        for (idx, node) in self.nodes.iter().enumerate() {
            match &node.resolution {
                NodeResolution::Acyclic { path } => {
                    let reached = apply_path(&node.quiver, path)
                        .map_err(|e| format!("node {idx}: bad path: {e}"))?;
                    if !reached.is_acyclic() {
                        return Err(format!(
                            "node {idx}: endpoint of path {path:?} is not acyclic"
                        ));
                    }
                }
                NodeResolution::Split {
                    path,
                    witness,
                    pairs,
                    chosen,
                    children,
                } => {
                    let reached = apply_path(&node.quiver, path)
                        .map_err(|e| format!("node {idx}: bad path: {e}"))?;
                    if &reached != witness {
                        return Err(format!(
                            "node {idx}: path {path:?} does not reach the stated witness"
                        ));
                    }
                    let actual_pairs = witness.covering_pairs();
                    if &actual_pairs != pairs {
                        return Err(format!(
                            "node {idx}: witness covering pairs are {actual_pairs:?}, trace says {pairs:?}"
                        ));
                    }
                    if !pairs.contains(chosen) {
                        return Err(format!(
                            "node {idx}: chosen pair {chosen:?} is not a covering pair"
                        ));
                    }
                    for (slot, &v) in [chosen.0, chosen.1].iter().enumerate() {
                        let ci = children[slot];
                        if ci >= self.nodes.len() {
                            return Err(format!("node {idx}: child index {ci} out of range"));
                        }
                        if !claimed.insert(ci) {
                            return Err(format!("node {ci} is claimed as a child twice"));
                        }
                        let expected = witness
                            .delete_vertex(v)
                            .map_err(|e| format!("node {idx}: bad deletion: {e}"))?;
                        if self.nodes[ci].quiver != expected {
                            return Err(format!(
                                "node {idx}: child {ci} does not match deletion of vertex {v}"
                            ));
                        }
                        if self.nodes[ci].depth != node.depth + 1 {
                            return Err(format!("node {ci}: depth bookkeeping is wrong"));
                        }
                    }
                }
                NodeResolution::Exhausted => {
                    let out = search_mutation_class(&node.quiver, certificate_goal, self.limits)
                        .map_err(|e| format!("node {idx}: search failed in replay: {e}"))?;
                    if out.status != SearchStatus::Exhausted {
                        return Err(format!(
                            "node {idx}: claimed exhausted, but replayed search says {}",
                            out.status
                        ));
                    }
                }
                NodeResolution::LimitHit => {}
            }
        }
        if claimed.contains(&0) {
            return Err("root node is claimed as a child".into());
        }
        for idx in 1..self.nodes.len() {
            if !claimed.contains(&idx) {
                return Err(format!("node {idx} is not reachable from the root"));
            }
        }
        let recomputed = compute_status(&self.nodes);
        if recomputed != self.status {
            return Err(format!(
                "trace status is {}, recomputed {}",
                self.status, recomputed
            ));
        }
        Ok(())
    }

    /// DOT rendering of the certification tree: acyclic leaves as
    /// double circles, splits as ellipses labeled with their chosen pair,
    /// failures as boxes; edges labeled by the deleted vertex (1-based).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph banff {\n  rankdir=TB;\n");
        for (idx, node) in self.nodes.iter().enumerate() {
            let (shape, label) = match &node.resolution {
                NodeResolution::Acyclic { path } => (
                    "doublecircle",
                    format!("node {}\\nACYCLIC via {}", idx + 1, path_1based(path)),
                ),
                NodeResolution::Split { path, chosen, .. } => (
                    "ellipse",
                    format!(
                        "node {}\\nSPLIT at ({},{}) via {}",
                        idx + 1,
                        chosen.0 + 1,
                        chosen.1 + 1,
                        path_1based(path)
                    ),
                ),
                NodeResolution::Exhausted => ("box", format!("node {}\\nEXHAUSTED", idx + 1)),
                NodeResolution::LimitHit => ("box", format!("node {}\\nLIMIT_HIT", idx + 1)),
            };
            let _ = writeln!(out, "  n{idx} [shape={shape}, label=\"{label}\"];");
        }
        for (idx, node) in self.nodes.iter().enumerate() {
            if let NodeResolution::Split {
                chosen, children, ..
            } = &node.resolution
            {
                let _ = writeln!(
                    out,
                    "  n{idx} -> n{} [label=\"delete {}\"];",
                    children[0],
                    chosen.0 + 1
                );
                let _ = writeln!(
                    out,
                    "  n{idx} -> n{} [label=\"delete {}\"];",
                    children[1],
                    chosen.1 + 1
                );
            }
        }
        out.push_str("}\n");
        out
    }

    /// Human-readable listing of the whole trace (vertex and node numbers
    /// shown 1-based).
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "banff trace: {} ({} nodes, {} acyclic leaves; limits: depth {}, nodes {})",
            self.status,
            self.nodes.len(),
            self.acyclic_leaf_count(),
            self.limits.depth,
            self.limits.nodes
        );
        for (idx, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "node {}: {} vertices, tree depth {}, search visited {} quivers",
                idx + 1,
                node.quiver.n(),
                node.depth,
                node.stats.nodes_visited
            );
            match &node.resolution {
                NodeResolution::Acyclic { path } => {
                    let _ = writeln!(out, "  acyclic after mutation path {}", path_1based(path));
                }
                NodeResolution::Split {
                    path,
                    pairs,
                    chosen,
                    children,
                    ..
                } => {
                    let pair_list = pairs
                        .iter()
                        .map(|&(a, b)| format!("({},{})", a + 1, b + 1))
                        .join(" ");
                    let _ = writeln!(
                        out,
                        "  split after mutation path {}; covering pairs: {}; chosen ({},{})",
                        path_1based(path),
                        pair_list,
                        chosen.0 + 1,
                        chosen.1 + 1
                    );
                    let _ = writeln!(
                        out,
                        "  children: node {} (delete {}), node {} (delete {})",
                        children[0] + 1,
                        chosen.0 + 1,
                        children[1] + 1,
                        chosen.1 + 1
                    );
                }
                NodeResolution::Exhausted => {
                    let _ = writeln!(
                        out,
                        "  class exhausted: no acyclic member, no covering pair"
                    );
                }
                NodeResolution::LimitHit => {
                    let _ = writeln!(out, "  search limits hit before the class was decided");
                }
            }
        }
        out
    }
}

fn path_1based(path: &[usize]) -> String {
    format!("[{}]", path.iter().map(|k| (k + 1).to_string()).join(","))
}

/// Runs the reduced Banff algorithm on the mutable part of `q` (frozen
/// vertices are ignored). See the module documentation for the semantics;
/// the result is a replayable certificate.
pub fn banff_reduced(q: &Quiver, limits: SearchLimits) -> Result<BanffTrace, QuiverError> {
    let root = q.mutable_part();
    let mut nodes: Vec<BanffNode> = Vec::new();
    let mut queue: VecDeque<(Quiver, usize)> = VecDeque::new();
    queue.push_back((root, 0));
    let mut next_index = 1usize;

    while let Some((quiver, depth)) = queue.pop_front() {
        let outcome = search_mutation_class(&quiver, certificate_goal, limits)?;
        let resolution = match outcome.status {
            SearchStatus::Found => {
                let (witness, path) = outcome.witness.expect("witness accompanies Found");
                if witness.is_acyclic() {
                    NodeResolution::Acyclic { path }
                } else {
                    let pairs = witness.covering_pairs();
                    let (_, perm) = witness.canonical_form_with_perm()?;
                    let chosen = *pairs
                        .iter()
                        .max_by_key(|&&(a, b)| (perm[a], perm[b]))
                        .expect("goal guarantees a covering pair");
                    let first = witness.delete_vertex(chosen.0)?;
                    let second = witness.delete_vertex(chosen.1)?;
                    let children = [next_index, next_index + 1];
                    next_index += 2;
                    queue.push_back((first, depth + 1));
                    queue.push_back((second, depth + 1));
                    NodeResolution::Split {
                        path,
                        witness,
                        pairs,
                        chosen,
                        children,
                    }
                }
            }
            SearchStatus::Exhausted => NodeResolution::Exhausted,
            SearchStatus::LimitHit => NodeResolution::LimitHit,
        };
        nodes.push(BanffNode {
            quiver,
            depth,
            stats: outcome.stats,
            resolution,
        });
    }

    let status = compute_status(&nodes);
    Ok(BanffTrace {
        nodes,
        status,
        limits,
    })
}

/// Which argument concluded `A = U` in an [`AuReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuVia {
    /// The seed is acyclic and source-freezing over the requested ring.
    AcyclicSourceFreezing,
    /// The Banff certificate succeeded (full Laurent ring only).
    BanffLocalAcyclicity,
}

impl fmt::Display for AuVia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuVia::AcyclicSourceFreezing => write!(f, "acyclic source-freezing criterion"),
            AuVia::BanffLocalAcyclicity => write!(f, "banff covering-pair certificate"),
        }
    }
}

/// Report on whether a cluster algebra equals its upper bound over a
/// chosen ground ring. The report never asserts inequality: a run that
/// cannot certify equality is inconclusive.
#[derive(Debug, Clone)]
pub struct AuReport {
    /// The ring the question was asked over.
    pub ring: GroundRingSpec,
    /// The acyclic/source-freezing criterion evaluated at the input seed.
    pub verdict: AuVerdict,
    /// Whether equality was certified.
    pub concluded: bool,
    /// The argument that certified it (present iff `concluded`).
    pub via: Option<AuVia>,
    /// The Banff certificate, when that route was attempted (full Laurent
    /// ring with a non-acyclic seed).
    pub banff: Option<BanffTrace>,
    /// For each criterion obstruction, the minimal set of coefficient
    /// generators (0-based) whose inversion would repair it.
    pub inversion_suggestions: Vec<(usize, BTreeSet<usize>)>,
}

fn inversion_suggestion(mono: &TropMonomial, ring: &GroundRingSpec) -> BTreeSet<usize> {
    let already = match ring {
        GroundRingSpec::Localized(s) => Some(s),
        _ => None,
    };
    mono.exps
        .iter()
        .enumerate()
        .filter(|(j, a)| a.is_negative() && already.is_none_or(|s| !s.contains(j)))
        .map(|(j, _)| j)
        .collect()
}

/// Builds an [`AuReport`] for the cluster algebra of `q` over `ring`.
///
/// Over the full Laurent ring, an acyclic seed concludes immediately by
/// the criterion, and otherwise the Banff certificate is attempted with
/// `limits`. Over polynomial or localized rings only the criterion is
/// available; its obstructions are listed with minimal repair sets.
pub fn au_report(
    q: &Quiver,
    ring: &GroundRingSpec,
    limits: SearchLimits,
) -> Result<AuReport, QuiverError> {
    let seed = quiver_to_seed(q);
    let verdict = seed.theorem_au_applies(ring);
    let inversion_suggestions = verdict
        .obstructions
        .iter()
        .map(|(i, mono)| (*i, inversion_suggestion(mono, ring)))
        .collect();

    let criterion_ok = verdict.status == AuStatus::ConcludedEqual;
    let (concluded, via, banff) = if criterion_ok {
        (true, Some(AuVia::AcyclicSourceFreezing), None)
    } else if matches!(ring, GroundRingSpec::FullLaurent) {
        let trace = banff_reduced(q, limits)?;
        if trace.status == BanffStatus::Success {
            (true, Some(AuVia::BanffLocalAcyclicity), Some(trace))
        } else {
            (false, None, Some(trace))
        }
    } else {
        (false, None, None)
    };

    Ok(AuReport {
        ring: ring.clone(),
        verdict,
        concluded,
        via,
        banff,
        inversion_suggestions,
    })
}

impl AuReport {
    /// Human-readable report (indices shown 1-based).
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "A = U report");
        let _ = writeln!(out, "ring: {}", self.ring);
        let _ = writeln!(
            out,
            "acyclic: {}",
            if self.verdict.acyclic { "yes" } else { "no" }
        );
        for ((i, mono), (_, fix)) in self
            .verdict
            .obstructions
            .iter()
            .zip(&self.inversion_suggestions)
        {
            let repair = if fix.is_empty() {
                String::new()
            } else {
                format!(
                    "; minimal inversion set: {{{}}}",
                    fix.iter().map(|j| format!("z{}", j + 1)).join(", ")
                )
            };
            let _ = writeln!(
                out,
                "obstruction y{}: y{} (+) 1 = {} lies outside the ground ring{}",
                i + 1,
                i + 1,
                mono,
                repair
            );
        }
        let _ = writeln!(
            out,
            "status: {}",
            if self.concluded {
                "CONCLUDED_EQUAL"
            } else {
                "INCONCLUSIVE"
            }
        );
        if let Some(via) = &self.via {
            let _ = writeln!(out, "via: {via}");
        }
        if let Some(trace) = &self.banff {
            let _ = writeln!(
                out,
                "banff: {} ({} nodes, {} acyclic leaves)",
                trace.status,
                trace.nodes.len(),
                trace.acyclic_leaf_count()
            );
        }
        if !self.concluded {
            let _ = writeln!(
                out,
                "note: the methods used are sufficient only; no inequality is asserted"
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{self, Reading};
    use crate::quiver::quiver_from_seed;

    #[test]
    fn acyclic_quiver_certifies_at_the_root() {
        let q = builtins::fig2();
        let trace = banff_reduced(&q, SearchLimits::default()).unwrap();
        assert_eq!(trace.status, BanffStatus::Success);
        assert_eq!(trace.nodes.len(), 1);
        assert!(matches!(
            &trace.root().resolution,
            NodeResolution::Acyclic { path } if path.is_empty()
        ));
        assert!(trace.replay().is_ok());
    }

    #[test]
    fn markov_fails_by_exhaustion() {
        let trace = banff_reduced(&builtins::markov(), SearchLimits::default()).unwrap();
        assert_eq!(trace.status, BanffStatus::Fail);
        assert_eq!(trace.nodes.len(), 1);
        assert!(matches!(
            trace.root().resolution,
            NodeResolution::Exhausted
        ));
        assert!(trace.replay().is_ok());
    }

    #[test]
    fn tight_limits_leave_the_run_inconclusive() {
        // The certificate for this quiver needs one mutation before the
        // first acyclic-or-covering-pair witness appears, so a depth-0
        // search cannot decide the root's class.
        let trace = banff_reduced(
            &builtins::cg3_mutable(Reading::Single),
            SearchLimits { depth: 0, nodes: 1 },
        )
        .unwrap();
        assert_eq!(trace.status, BanffStatus::Inconclusive);
        assert!(matches!(
            trace.root().resolution,
            NodeResolution::LimitHit
        ));
        assert!(trace.replay().is_ok());

        // Markov's class is one quiver up to isomorphism: even tight
        // limits exhaust it, and exhaustion means FAIL, not INCONCLUSIVE.
        let trace = banff_reduced(
            &builtins::markov(),
            SearchLimits { depth: 0, nodes: 1 },
        )
        .unwrap();
        assert_eq!(trace.status, BanffStatus::Fail);
    }

    #[test]
    fn cg3_certifies_with_the_expected_tree() {
        let q = builtins::cg3_mutable(Reading::Single);
        let trace = banff_reduced(&q, SearchLimits::default()).unwrap();
        assert_eq!(trace.status, BanffStatus::Success);
        assert_eq!(trace.nodes.len(), 5);
        assert_eq!(trace.acyclic_leaf_count(), 3);

        match &trace.nodes[0].resolution {
            NodeResolution::Split {
                path,
                pairs,
                chosen,
                children,
                ..
            } => {
                assert_eq!(path, &vec![2]);
                assert_eq!(pairs, &vec![(0, 5), (1, 0), (2, 5)]);
                assert_eq!(*chosen, (2, 5));
                assert_eq!(*children, [1, 2]);
            }
            other => panic!("root should split, got {other:?}"),
        }
        assert!(matches!(
            &trace.nodes[1].resolution,
            NodeResolution::Acyclic { path } if path.is_empty()
        ));
        match &trace.nodes[2].resolution {
            NodeResolution::Split {
                path,
                pairs,
                chosen,
                children,
                ..
            } => {
                assert!(path.is_empty());
                assert_eq!(pairs, &vec![(1, 0)]);
                assert_eq!(*chosen, (1, 0));
                assert_eq!(*children, [3, 4]);
            }
            other => panic!("node 2 should split, got {other:?}"),
        }
        assert!(matches!(
            &trace.nodes[3].resolution,
            NodeResolution::Acyclic { path } if path.is_empty()
        ));
        assert!(matches!(
            &trace.nodes[4].resolution,
            NodeResolution::Acyclic { path } if path == &vec![0, 1]
        ));

        assert!(trace.replay().is_ok());
        let text = trace.render();
        assert!(text.contains("banff trace: SUCCESS"));
        assert!(text.contains("chosen (3,6)"));
    }

    #[test]
    fn replay_catches_tampering() {
        let q = builtins::cg3_mutable(Reading::Single);
        let trace = banff_reduced(&q, SearchLimits::default()).unwrap();

        // Node 4 needed a nonempty path to reach acyclicity, so claiming
        // its own quiver is already acyclic must fail the replay.
        let mut tampered = trace.clone();
        match &mut tampered.nodes[4].resolution {
            NodeResolution::Acyclic { path } => {
                assert!(!path.is_empty());
                path.clear();
            }
            other => panic!("expected an acyclic leaf, got {other:?}"),
        }
        assert!(tampered.replay().is_err());

        // A forged overall status is caught too.
        let mut tampered = trace.clone();
        tampered.status = BanffStatus::Fail;
        assert!(tampered.replay().is_err());

        // So is a corrupted child quiver.
        let mut tampered = trace;
        tampered.nodes[1].quiver = builtins::markov();
        assert!(tampered.replay().is_err());
    }

    #[test]
    fn report_full_laurent_routes() {
        // Acyclic seed: criterion concludes without the Banff route.
        let fig2 = builtins::fig2();
        let r = au_report(&fig2, &GroundRingSpec::FullLaurent, SearchLimits::default()).unwrap();
        assert!(r.concluded);
        assert_eq!(r.via, Some(AuVia::AcyclicSourceFreezing));
        assert!(r.banff.is_none());

        // Non-acyclic, certifiable: Banff route.
        let cg3 = builtins::cg3_single();
        let r = au_report(&cg3, &GroundRingSpec::FullLaurent, SearchLimits::default()).unwrap();
        assert!(r.concluded);
        assert_eq!(r.via, Some(AuVia::BanffLocalAcyclicity));
        assert_eq!(r.banff.as_ref().unwrap().status, BanffStatus::Success);
        assert!(r.render().contains("CONCLUDED_EQUAL"));

        // Non-acyclic, not certifiable: inconclusive with a FAIL trace.
        let markov = builtins::markov();
        let r = au_report(&markov, &GroundRingSpec::FullLaurent, SearchLimits::default()).unwrap();
        assert!(!r.concluded);
        assert!(r.via.is_none());
        assert_eq!(r.banff.as_ref().unwrap().status, BanffStatus::Fail);
        assert!(r.render().contains("INCONCLUSIVE"));
    }

    #[test]
    fn report_lists_obstructions_and_repairs() {
        let q = quiver_from_seed(&builtins::fig1()).unwrap();
        let r = au_report(&q, &GroundRingSpec::Polynomial, SearchLimits::default()).unwrap();
        assert!(!r.concluded);
        assert!(r.verdict.acyclic);
        let obstructed: Vec<usize> = r.verdict.obstructions.iter().map(|(i, _)| *i).collect();
        assert_eq!(obstructed, vec![0, 1]);
        for (_, mono) in &r.verdict.obstructions {
            assert_eq!(mono.to_string(), "z2^-1");
        }
        for (_, fix) in &r.inversion_suggestions {
            assert_eq!(fix.iter().copied().collect::<Vec<_>>(), vec![1]);
        }
        let text = r.render();
        assert!(text.contains("obstruction y1"));
        assert!(text.contains("z2^-1"));
        assert!(text.contains("minimal inversion set: {z2}"));
        assert!(text.contains("status: INCONCLUSIVE"));
        // The banff route is never attempted over a polynomial ring: the
        // certificate only speaks for full Laurent coefficients.
        assert!(r.banff.is_none());

        // Inverting z2 repairs both obstructions.
        let localized = GroundRingSpec::Localized(BTreeSet::from([1]));
        let r = au_report(&q, &localized, SearchLimits::default()).unwrap();
        assert!(r.concluded);
        assert_eq!(r.via, Some(AuVia::AcyclicSourceFreezing));
    }

    #[test]
    fn cg3_over_polynomial_ring_stays_inconclusive() {
        let q = builtins::cg3_single();
        let r = au_report(&q, &GroundRingSpec::Polynomial, SearchLimits::default()).unwrap();
        assert!(!r.concluded, "must not claim equality over zp+");
        assert!(r.banff.is_none());
        assert!(!r.verdict.acyclic);
    }
}
