//! Quivers with frozen vertices.
//!
//! A [`Quiver`] is a directed graph with no loops and no directed 2-cycles:
//! vertices `0..n` are mutable, `n..n+m` frozen, and no arrow joins two
//! frozen vertices. Arrows carry a positive multiplicity; opposite arrows
//! between the same endpoints cancel to a net count, matching the exchange
//! matrix encoding exactly: a seed's matrix `B` has `B_ji` arrows `i → j`,
//! and a coefficient `y_i = ∏ z_j^{a_ij}` contributes `a_ij` arrows
//! `i → z_j` when positive and `-a_ij` arrows `z_j → i` when negative.
//!
//! The module provides mutation (transported through that encoding),
//! acyclicity and source-freezing predicates, covering pairs, canonical
//! forms for isomorphism testing, and deterministic bounded breadth-first
//! search over a mutation class.

use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

use crate::seed::{mutate_rect, Seed, SeedError};
use crate::semifield::TropMonomial;

/// Vertex-count bound accepted by [`Quiver::canonical_form`].
pub const CANONICAL_SIZE_BOUND: usize = 10;

/// Errors raised by quiver operations.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum QuiverError {
    /// An arrow starts and ends at the same vertex.
    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),
    /// An arrow joins two frozen vertices.
    #[error("arrow between frozen vertices {src} and {dst} is not allowed")]
    FrozenFrozen { src: usize, dst: usize },
    /// A vertex index exceeds `n + m`.
    #[error("vertex {v} out of range ({total} vertices)")]
    OutOfRange { v: usize, total: usize },
    /// An input arrow had multiplicity < 1.
    #[error("arrow multiplicity must be at least 1, found {0}")]
    BadMultiplicity(i64),
    /// A mutation index named a frozen or out-of-range vertex.
    #[error("index {k} is not a mutable vertex (n = {n})")]
    NotMutable { k: usize, n: usize },
    /// The quiver exceeds the canonical-form size bound.
    #[error("quiver has {total} vertices, over the canonical-form bound {bound}")]
    SizeBound { total: usize, bound: usize },
    /// Seed interoperability needs a skew-symmetric matrix.
    #[error("exchange matrix is not skew-symmetric")]
    NotSkewSymmetric,
    /// A permutation did not respect the mutable/frozen partition.
    #[error("relabeling must permute mutable and frozen vertices separately")]
    BadRelabeling,
    /// An underlying seed operation failed.
    #[error(transparent)]
    Seed(#[from] SeedError),
}

/// A quiver with `n` mutable and `m` frozen vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    m: usize,
    /// Net arrows: `(src, dst) → multiplicity ≥ 1`, at most one of
    /// `(u, v)` / `(v, u)` present.
    arrows: BTreeMap<(usize, usize), i64>,
}

impl Quiver {
    /// Builds a quiver from arrow records `(src, dst, mult)`. Records with
    /// the same endpoints merge; opposite records cancel to their net.
    pub fn new(
        n: usize,
        m: usize,
        arrows: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self, QuiverError> {
        let total = n + m;
        let mut net: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (src, dst, mult) in arrows {
            if src >= total {
                return Err(QuiverError::OutOfRange { v: src, total });
            }
            if dst >= total {
                return Err(QuiverError::OutOfRange { v: dst, total });
            }
            if src == dst {
                return Err(QuiverError::Loop(src));
            }
            if src >= n && dst >= n {
                return Err(QuiverError::FrozenFrozen { src, dst });
            }
            if mult < 1 {
                return Err(QuiverError::BadMultiplicity(mult));
            }
            // Accumulate a signed net count on the ordered pair (min, max).
            let (key, signed) = if src < dst {
                ((src, dst), mult)
            } else {
                ((dst, src), -mult)
            };
            *net.entry(key).or_insert(0) += signed;
        }
        let mut collapsed = BTreeMap::new();
        for ((u, v), signed) in net {
            if signed > 0 {
                collapsed.insert((u, v), signed);
            } else if signed < 0 {
                collapsed.insert((v, u), -signed);
            }
        }
        Ok(Quiver {
            n,
            m,
            arrows: collapsed,
        })
    }

    /// Number of mutable vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of frozen vertices.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Whether vertex `v` is frozen.
    pub fn is_frozen(&self, v: usize) -> bool {
        v >= self.n
    }

    /// Iterates arrows as `(src, dst, mult)` in lexicographic order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.arrows.iter().map(|(&(s, d), &w)| (s, d, w))
    }

    /// Multiplicity of the arrow `src → dst` (0 if absent).
    pub fn multiplicity(&self, src: usize, dst: usize) -> i64 {
        self.arrows.get(&(src, dst)).copied().unwrap_or(0)
    }

    /// The extended exchange matrix: `n + m` rows over `n` columns, with
    /// `mat[r][c]` the net number of arrows `c → r`.
    pub fn ext_matrix(&self) -> Vec<Vec<i64>> {
        let mut mat = vec![vec![0i64; self.n]; self.n + self.m];
        for (&(src, dst), &w) in &self.arrows {
            if src < self.n {
                mat[dst][src] += w;
            }
            if dst < self.n {
                mat[src][dst] -= w;
            }
        }
        mat
    }

    /// Rebuilds a quiver from an extended exchange matrix.
    pub fn from_ext_matrix(n: usize, m: usize, mat: &[Vec<i64>]) -> Result<Self, QuiverError> {
        let mut arrows = Vec::new();
        for (r, row) in mat.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if r < n {
                    // Mutable block: positive entries only; the transposed
                    // entry records the same arrow with opposite sign.
                    if v > 0 {
                        arrows.push((c, r, v));
                    }
                } else if v > 0 {
                    arrows.push((c, r, v));
                } else if v < 0 {
                    arrows.push((r, c, -v));
                }
            }
        }
        Quiver::new(n, m, arrows)
    }

    /// Quiver mutation at a mutable vertex `k`, implemented on the extended
    /// exchange matrix (composition through `k`, 2-cycle cancellation, and
    /// arrow reversal at `k` in one step; frozen–frozen compositions cannot
    /// arise in this form).
    pub fn mutated(&self, k: usize) -> Result<Quiver, QuiverError> {
        if k >= self.n {
            return Err(QuiverError::NotMutable { k, n: self.n });
        }
        Quiver::from_ext_matrix(self.n, self.m, &mutate_rect(&self.ext_matrix(), k))
    }

    /// The quiver restricted to its mutable vertices.
    pub fn mutable_part(&self) -> Quiver {
        let arrows: Vec<_> = self
            .arrows()
            .filter(|&(s, d, _)| s < self.n && d < self.n)
            .collect();
        Quiver::new(self.n, 0, arrows).expect("restriction preserves invariants")
    }

    /// Deletes a mutable vertex, shifting every later index down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Quiver, QuiverError> {
        if v >= self.n {
            return Err(QuiverError::NotMutable { k: v, n: self.n });
        }
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let arrows: Vec<_> = self
            .arrows()
            .filter(|&(s, d, _)| s != v && d != v)
            .map(|(s, d, w)| (shift(s), shift(d), w))
            .collect();
        Quiver::new(self.n - 1, self.m, arrows)
    }

    /// True iff the mutable subquiver has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.n];
        for (s, d, _) in self.arrows() {
            if s < self.n && d < self.n {
                indeg[d] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for (s, d, _) in self.arrows() {
                if s == v && d < self.n {
                    indeg[d] -= 1;
                    if indeg[d] == 0 {
                        queue.push(d);
                    }
                }
            }
        }
        removed == self.n
    }

    /// True iff no arrow has a frozen source (every frozen vertex is a
    /// pure sink).
    pub fn is_source_freezing(&self) -> bool {
        self.arrows().all(|(s, _, _)| s < self.n)
    }

    /// The covering pairs of the mutable subquiver: arrows `(i1, i2)` not
    /// contained in any bi-infinite mutable path, i.e. NOT (some nontrivial
    /// strongly connected component reaches `i1` AND `i2` reaches some
    /// nontrivial strongly connected component). A nontrivial component is
    /// one containing an internal arrow.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut adj = vec![Vec::new(); n];
        let mut radj = vec![Vec::new(); n];
        let mut mutable_arrows = Vec::new();
        for (s, d, _) in self.arrows() {
            if s < n && d < n {
                adj[s].push(d);
                radj[d].push(s);
                mutable_arrows.push((s, d));
            }
        }

        let comp = tarjan_scc(n, &adj);
        // Nontrivial components: those with an internal arrow. Mark every
        // vertex of such a component.
        let mut comp_nontrivial = BTreeSet::new();
        for &(s, d) in &mutable_arrows {
            if comp[s] == comp[d] {
                comp_nontrivial.insert(comp[s]);
            }
        }
        let in_nontrivial: Vec<bool> = (0..n)
            .map(|v| comp_nontrivial.contains(&comp[v]))
            .collect();

        let reach_from_cycle = reachable(n, &adj, &in_nontrivial);
        let reach_to_cycle = reachable(n, &radj, &in_nontrivial);

        mutable_arrows
            .into_iter()
            .filter(|&(i1, i2)| !(reach_from_cycle[i1] && reach_to_cycle[i2]))
            .collect()
    }

    /// Canonical byte string: minimal arrow-list serialization over all
    /// partition-respecting vertex permutations, after color refinement.
    /// Equal strings iff the quivers are isomorphic respecting the
    /// frozen/mutable partition.
    pub fn canonical_form(&self) -> Result<Vec<u8>, QuiverError> {
        Ok(self.canonical_form_with_perm()?.0)
    }

    /// [`Quiver::canonical_form`] together with a relabeling that achieves
    /// it: `perm[old] = new`.
    pub fn canonical_form_with_perm(&self) -> Result<(Vec<u8>, Vec<usize>), QuiverError> {
        let total = self.n + self.m;
        if total > CANONICAL_SIZE_BOUND {
            return Err(QuiverError::SizeBound {
                total,
                bound: CANONICAL_SIZE_BOUND,
            });
        }

        // Color refinement: start from the mutable/frozen split and refine
        // by (color, sorted in-neighborhood, sorted out-neighborhood),
        // where neighborhoods list (multiplicity, neighbor color).
        type Signature = (usize, Vec<(i64, usize)>, Vec<(i64, usize)>);
        let mut colors: Vec<usize> = (0..total).map(|v| usize::from(v >= self.n)).collect();
        loop {
            let mut sigs: Vec<Signature> =
                (0..total).map(|v| (colors[v], Vec::new(), Vec::new())).collect();
            for (s, d, w) in self.arrows() {
                sigs[d].1.push((w, colors[s]));
                sigs[s].2.push((w, colors[d]));
            }
            for sig in &mut sigs {
                sig.1.sort_unstable();
                sig.2.sort_unstable();
            }
            let mut distinct: Vec<_> = sigs.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let new_colors: Vec<usize> = sigs
                .iter()
                .map(|s| distinct.binary_search(s).expect("own signature"))
                .collect();
            if new_colors == colors {
                break;
            }
            colors = new_colors;
        }

        // Group vertices by color (mutable colors always precede frozen
        // ones, because the initial split is the leading signature field).
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &color) in colors.iter().enumerate() {
            classes.entry(color).or_default().push(v);
        }
        let classes: Vec<Vec<usize>> = classes.into_values().collect();

        let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
        let mut orderings: Vec<Vec<usize>> = vec![Vec::new()];
        for class in &classes {
            let mut next = Vec::new();
            for prefix in &orderings {
                for perm in permutations(class) {
                    let mut extended = prefix.clone();
                    extended.extend(perm);
                    next.push(extended);
                }
            }
            orderings = next;
        }
        for ordering in orderings {
            // ordering[new] = old; invert to perm[old] = new.
            let mut perm = vec![0usize; total];
            for (new, &old) in ordering.iter().enumerate() {
                perm[old] = new;
            }
            let mut relabeled: Vec<(usize, usize, i64)> = self
                .arrows()
                .map(|(s, d, w)| (perm[s], perm[d], w))
                .collect();
            relabeled.sort_unstable();
            let mut bytes = Vec::with_capacity(2 + relabeled.len() * 10);
            bytes.push(self.n as u8);
            bytes.push(self.m as u8);
            for (s, d, w) in relabeled {
                bytes.push(s as u8);
                bytes.push(d as u8);
                bytes.extend_from_slice(&w.to_be_bytes());
            }
            if best.as_ref().is_none_or(|(b, _)| bytes < *b) {
                best = Some((bytes, perm));
            }
        }
        Ok(best.expect("at least one ordering"))
    }

    /// Applies a vertex relabeling `perm[old] = new`, which must permute
    /// mutable vertices among themselves and frozen among themselves.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Quiver, QuiverError> {
        let total = self.n + self.m;
        if perm.len() != total {
            return Err(QuiverError::BadRelabeling);
        }
        let mut seen = vec![false; total];
        for (old, &new) in perm.iter().enumerate() {
            if new >= total || seen[new] || (old < self.n) != (new < self.n) {
                return Err(QuiverError::BadRelabeling);
            }
            seen[new] = true;
        }
        let arrows: Vec<_> = self
            .arrows()
            .map(|(s, d, w)| (perm[s], perm[d], w))
            .collect();
        Quiver::new(self.n, self.m, arrows)
    }

    /// DOT rendering: mutable vertices as circles labeled `1..n`, frozen as
    /// boxes labeled `z1..zm`, multiplicities as edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n  rankdir=LR;\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  v{v} [shape=circle, label=\"{}\"];", v + 1);
        }
        for v in self.n..self.n + self.m {
            let _ = writeln!(out, "  v{v} [shape=box, label=\"z{}\"];", v - self.n + 1);
        }
        for (s, d, w) in self.arrows() {
            let _ = writeln!(out, "  v{s} -> v{d} [label=\"{w}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Marks every vertex reachable from the seed set along `adj`.
fn reachable(n: usize, adj: &[Vec<usize>], seeds: &[bool]) -> Vec<bool> {
    let mut mark = seeds.to_vec();
    let mut stack: Vec<usize> = (0..n).filter(|&v| mark[v]).collect();
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !mark[w] {
                mark[w] = true;
                stack.push(w);
            }
        }
    }
    mark
}

/// Tarjan's strongly-connected-components algorithm; returns a component
/// id per vertex.
fn tarjan_scc(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next_index: usize,
        comp: Vec<usize>,
        next_comp: usize,
    }
    fn visit(st: &mut State, v: usize) {
        st.index[v] = Some(st.next_index);
        st.low[v] = st.next_index;
        st.next_index += 1;
        st.stack.push(v);
        st.on_stack[v] = true;
        for i in 0..st.adj[v].len() {
            let w = st.adj[v][i];
            match st.index[w] {
                None => {
                    visit(st, w);
                    st.low[v] = st.low[v].min(st.low[w]);
                }
                Some(wi) => {
                    if st.on_stack[w] {
                        st.low[v] = st.low[v].min(wi);
                    }
                }
            }
        }
        if st.low[v] == st.index[v].expect("assigned") {
            loop {
                let w = st.stack.pop().expect("nonempty while unwinding");
                st.on_stack[w] = false;
                st.comp[w] = st.next_comp;
                if w == v {
                    break;
                }
            }
            st.next_comp += 1;
        }
    }
    let mut st = State {
        adj,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next_index: 0,
        comp: vec![0; n],
        next_comp: 0,
    };
    for v in 0..n {
        if st.index[v].is_none() {
            visit(&mut st, v);
        }
    }
    st.comp
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            let mut perm = vec![head];
            perm.append(&mut tail);
            out.push(perm);
        }
    }
    out
}

/// Encodes a seed as a quiver (requires skew-symmetric `B`): `B_ji` arrows
/// `i → j`, and `a_ij` arrows `i → z_j` (negative exponents reverse).
pub fn quiver_from_seed(s: &Seed) -> Result<Quiver, QuiverError> {
    if !s.b.is_skew_symmetric() {
        return Err(QuiverError::NotSkewSymmetric);
    }
    let n = s.n();
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = s.b.entry(j, i);
            if w > 0 {
                arrows.push((i, j, w));
            } else if w < 0 {
                arrows.push((j, i, -w));
            }
        }
    }
    for (i, yi) in s.y.iter().enumerate() {
        for (j, a) in yi.exps.iter().enumerate() {
            let a = i64::try_from(a).expect("coefficient exponent exceeded the machine range");
            if a > 0 {
                arrows.push((i, n + j, a));
            } else if a < 0 {
                arrows.push((n + j, i, -a));
            }
        }
    }
    Quiver::new(n, s.m, arrows)
}

/// Decodes a quiver into a seed with a fresh initial cluster.
pub fn quiver_to_seed(q: &Quiver) -> Seed {
    let n = q.n();
    let m = q.m();
    let mut entries = vec![vec![0i64; n]; n];
    let mut yexps = vec![vec![BigInt::from(0); m]; n];
    for (s, d, w) in q.arrows() {
        if s < n && d < n {
            entries[d][s] += w;
            entries[s][d] -= w;
        } else if s < n {
            yexps[s][d - n] += w;
        } else {
            yexps[d][s - n] -= w;
        }
    }
    let b = crate::seed::ExchangeMatrix::new(entries).expect("skew-symmetric by construction");
    let y = yexps
        .into_iter()
        .map(|exps| TropMonomial { exps })
        .collect();
    Seed::new(b, y, m, None).expect("dimensions consistent by construction")
}

/// Quiver mutation (free-function form of [`Quiver::mutated`]).
pub fn mutate_quiver(q: &Quiver, k: usize) -> Result<Quiver, QuiverError> {
    q.mutated(k)
}

/// Acyclicity of the mutable subquiver (free-function form of
/// [`Quiver::is_acyclic`]).
pub fn is_acyclic_quiver(q: &Quiver) -> bool {
    q.is_acyclic()
}

/// Source-freezing test (free-function form of
/// [`Quiver::is_source_freezing`]).
pub fn is_source_freezing_quiver(q: &Quiver) -> bool {
    q.is_source_freezing()
}

/// Covering pairs (free-function form of [`Quiver::covering_pairs`]).
pub fn covering_pairs(q: &Quiver) -> Vec<(usize, usize)> {
    q.covering_pairs()
}

/// Limits for [`search_mutation_class`]: `depth` bounds the mutation-path
/// length, `nodes` the number of distinct quivers enqueued.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub depth: usize,
    pub nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            depth: 8,
            nodes: 100_000,
        }
    }
}

/// Status of a bounded mutation-class search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// A goal quiver was found.
    Found,
    /// The entire (finite) class was enumerated without success.
    Exhausted,
    /// Limits stopped the search before the class was known exhausted.
    LimitHit,
}

impl std::fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SearchStatus::Found => write!(f, "FOUND"),
            SearchStatus::Exhausted => write!(f, "EXHAUSTED"),
            SearchStatus::LimitHit => write!(f, "LIMIT_HIT"),
        }
    }
}

/// Search counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    /// Quivers dequeued and tested against the goal.
    pub nodes_visited: usize,
    /// Longest mutation path examined.
    pub max_depth: usize,
}

/// Result of [`search_mutation_class`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// The first goal quiver (in deterministic breadth-first order) and the
    /// mutation path reaching it; present iff `status` is `Found`.
    pub witness: Option<(Quiver, Vec<usize>)>,
    pub stats: SearchStats,
}

/// Deterministic bounded breadth-first search over the mutation class of
/// `q`, deduplicating by canonical form. Children are expanded in ascending
/// vertex order and the queue is first-in-first-out, so the witness is the
/// lexicographically least path at minimal depth (among class
/// representatives).
///
/// `Exhausted` is only reported when no expansion was ever skipped by a
/// limit, so it certifies that the whole class was enumerated.
pub fn search_mutation_class(
    q: &Quiver,
    goal: impl Fn(&Quiver) -> bool,
    limits: SearchLimits,
) -> Result<SearchOutcome, QuiverError> {
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    seen.insert(q.canonical_form()?);
    let mut queue: VecDeque<(Quiver, Vec<usize>)> = VecDeque::new();
    queue.push_back((q.clone(), Vec::new()));
    let mut stats = SearchStats::default();
    let mut truncated = false;

    while let Some((cur, path)) = queue.pop_front() {
        stats.nodes_visited += 1;
        stats.max_depth = stats.max_depth.max(path.len());
        if goal(&cur) {
            return Ok(SearchOutcome {
                status: SearchStatus::Found,
                witness: Some((cur, path)),
                stats,
            });
        }
        for k in 0..cur.n() {
            let child = cur.mutated(k).expect("k is mutable");
            let form = child.canonical_form()?;
            if seen.contains(&form) {
                continue;
            }
            if path.len() + 1 > limits.depth || seen.len() >= limits.nodes {
                truncated = true;
                continue;
            }
            seen.insert(form);
            let mut child_path = path.clone();
            child_path.push(k);
            queue.push_back((child, child_path));
        }
    }

    Ok(SearchOutcome {
        status: if truncated {
            SearchStatus::LimitHit
        } else {
            SearchStatus::Exhausted
        },
        witness: None,
        stats,
    })
}
