//! Seeds and the three mutation rules.
//!
//! A [`Seed`] packages an exchange matrix `B` (skew-symmetrizable, checked
//! at construction), a tuple of tropical coefficients `y`, and the cluster
//! variables `x` stored as explicit Laurent polynomials in the *initial*
//! cluster. Mutation at a mutable index `k` transforms all three:
//!
//! * `B` by the matrix mutation rule,
//! * `y` by the coefficient rule `y_i ↦ y_i · y_k^{[B_ki]+} · (y_k ⊕ 1)^{-B_ki}`
//!   (and `y_k ↦ y_k^{-1}`),
//! * `x_k` by the exchange relation
//!   `x_k' = (y_k ∏ x_j^{[B_jk]+} + ∏ x_j^{[-B_jk]+}) / ((y_k ⊕ 1) x_k)`,
//!   evaluated by exact Laurent division.
//!
//! The module also provides freezing (turning a cluster variable into a new
//! coefficient generator), the source / acyclicity / source-freezing
//! predicates, an exact checker for the exchange-product identity at a
//! source, a sufficient criterion for `A = U`, and Laurent-membership
//! verifiers.
//!
//! All indices are 0-based.

use num_bigint::BigInt;
use std::fmt;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly};
use crate::semifield::{GroundRingSpec, SemifieldError, TropMonomial};

/// Errors raised by seed operations.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SeedError {
    /// A mutable index was out of range.
    #[error("index {index} out of range for rank {n}")]
    IndexOutOfRange { index: usize, n: usize },
    /// The matrix has no positive integer diagonal symmetrizer.
    #[error("matrix is not skew-symmetrizable")]
    NotSkewSymmetrizable,
    /// Seed components disagree on dimensions.
    #[error("inconsistent seed dimensions: {0}")]
    Dimensions(String),
    /// An operation required a precondition that does not hold.
    #[error("precondition violation: {0}")]
    Precondition(String),
    /// A Laurent-arithmetic error surfaced (a NOT_DIVISIBLE here signals an
    /// internal bug: the Laurent phenomenon guarantees divisibility).
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    /// A semifield error surfaced.
    #[error(transparent)]
    Semifield(#[from] SemifieldError),
}

/// Mutation of a rectangular extended matrix (rows ≥ cols, top block
/// square) at column `k`: entries in row/column `k` are negated, all others
/// receive `(|b_ik| b_kj + b_ik |b_kj|) / 2`. Shared by seed, quiver, and
/// framed-quiver mutation.
pub(crate) fn mutate_rect(mat: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    debug_assert!(k < cols, "mutation column out of range");
    let mut out = vec![vec![0i64; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            let v: i128 = if i == k || j == k {
                -(mat[i][j] as i128)
            } else {
                let bik = mat[i][k] as i128;
                let bkj = mat[k][j] as i128;
                mat[i][j] as i128 + (bik.abs() * bkj + bik * bkj.abs()) / 2
            };
            out[i][j] = i64::try_from(v).expect("exchange-matrix entry overflowed i64");
        }
    }
    out
}

/// Finds a positive integer diagonal `D` with `D·B` skew-symmetric, if one
/// exists. Returns `None` otherwise.
///
/// The search first checks the sign pattern (zero diagonal, `B_ij` and
/// `B_ji` of opposite strict signs or both zero), then propagates the forced
/// rational ratios `d_j / d_i = |B_ij| / |B_ji|` across each connected
/// component of the nonzero pattern, reducing as it goes, and finally scales
/// each component to integers.
pub fn skew_symmetrizer(entries: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = entries.len();
    for i in 0..n {
        if entries[i][i] != 0 {
            return None;
        }
        for j in 0..n {
            let (a, b) = (entries[i][j], entries[j][i]);
            if (a == 0) != (b == 0) || (a > 0 && b > 0) || (a < 0 && b < 0) {
                return None;
            }
        }
    }

    let gcd = |a: i128, b: i128| num_integer::Integer::gcd(&a, &b);
    let mut ratio: Vec<Option<(i128, i128)>> = vec![None; n];
    for start in 0..n {
        if ratio[start].is_some() {
            continue;
        }
        ratio[start] = Some((1, 1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (pi, qi) = ratio[i].expect("assigned before push");
            for j in 0..n {
                if i == j || entries[i][j] == 0 {
                    continue;
                }
                // d_i B_ij = -d_j B_ji with all-positive d is equivalent to
                // d_j / d_i = |B_ij| / |B_ji|.
                let num = pi * entries[i][j].unsigned_abs() as i128;
                let den = qi * entries[j][i].unsigned_abs() as i128;
                let g = gcd(num, den);
                let forced = (num / g, den / g);
                match ratio[j] {
                    None => {
                        ratio[j] = Some(forced);
                        stack.push(j);
                    }
                    Some(existing) => {
                        if existing != forced {
                            return None;
                        }
                    }
                }
            }
        }
    }

    let mut lcm_q: i128 = 1;
    for r in &ratio {
        let (_, q) = r.expect("all assigned");
        lcm_q = num_integer::Integer::lcm(&lcm_q, &q);
    }
    let d: Vec<i64> = ratio
        .iter()
        .map(|r| {
            let (p, q) = r.expect("all assigned");
            i64::try_from(p * (lcm_q / q)).expect("symmetrizer entry overflowed i64")
        })
        .collect();

    // Confirm the candidate really symmetrizes (guards subtle sign cases).
    for i in 0..n {
        for j in 0..n {
            if (d[i] as i128) * (entries[i][j] as i128)
                != -((d[j] as i128) * (entries[j][i] as i128))
            {
                return None;
            }
        }
    }
    Some(d)
}

/// A skew-symmetrizable `n × n` integer exchange matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    /// Validates skew-symmetrizability and wraps the entries.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, SeedError> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(SeedError::Dimensions(format!(
                    "exchange matrix must be square, found a row of length {} in a {}-row matrix",
                    row.len(),
                    n
                )));
            }
        }
        if skew_symmetrizer(&entries).is_none() {
            return Err(SeedError::NotSkewSymmetrizable);
        }
        Ok(ExchangeMatrix { entries })
    }

    /// Matrix rank (the number of mutable directions).
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Entry `B_ij` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i]
    }

    /// All entries, row-major.
    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Whether the matrix is skew-symmetric (`B_ji = -B_ij` on the nose),
    /// the condition for quiver interoperability.
    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == -self.entries[j][i]))
    }

    /// A positive integer diagonal symmetrizer (exists by the construction
    /// invariant).
    pub fn symmetrizer(&self) -> Vec<i64> {
        skew_symmetrizer(&self.entries).expect("checked at construction")
    }

    /// Matrix mutation at column/row `k`.
    pub fn mutated(&self, k: usize) -> Result<ExchangeMatrix, SeedError> {
        if k >= self.n() {
            return Err(SeedError::IndexOutOfRange {
                index: k,
                n: self.n(),
            });
        }
        // Mutation preserves skew-symmetrizability with the same D, so the
        // entries can be wrapped without re-validation; we revalidate anyway
        // in debug builds.
        let entries = mutate_rect(&self.entries, k);
        debug_assert!(skew_symmetrizer(&entries).is_some());
        Ok(ExchangeMatrix { entries })
    }
}

/// Verdict of the `A = U` sufficient criterion at a single seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuVerdict {
    /// Whether the criterion concluded `A = U`.
    pub status: AuStatus,
    /// Indices `i` (0-based) whose monomial `y_i ⊕ 1` fails ground-ring
    /// membership, together with that monomial.
    pub obstructions: Vec<(usize, TropMonomial)>,
    /// Whether the seed is acyclic.
    pub acyclic: bool,
}

/// Status carried by an [`AuVerdict`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuStatus {
    /// The hypotheses hold: the cluster algebra equals its upper bound.
    ConcludedEqual,
    /// The criterion does not apply at this seed (says nothing negative).
    Inconclusive,
}

impl fmt::Display for AuStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuStatus::ConcludedEqual => write!(f, "CONCLUDED_EQUAL"),
            AuStatus::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

/// A seed: exchange matrix, tropical coefficients, and cluster variables
/// expressed in the initial cluster.
///
/// Equality compares `(B, y, x, m)`; display labels and the mutation
/// history are bookkeeping and do not affect it.
#[derive(Debug, Clone)]
pub struct Seed {
    /// The exchange matrix.
    pub b: ExchangeMatrix,
    /// Tropical coefficients, one per mutable index, over `m` generators.
    pub y: Vec<TropMonomial>,
    /// Cluster variables as Laurent polynomials in the initial cluster.
    pub x: Vec<LaurentPoly>,
    /// Number of coefficient generators (kept explicitly so `n = 0` seeds
    /// know their semifield).
    pub m: usize,
    /// Display names for the cluster variables.
    pub labels: Vec<String>,
    /// Mutation word applied since the initial seed (most recent last).
    pub history: Vec<usize>,
}

impl PartialEq for Seed {
    fn eq(&self, other: &Self) -> bool {
        self.b == other.b && self.y == other.y && self.x == other.x && self.m == other.m
    }
}

impl Eq for Seed {}

impl Seed {
    /// Builds an initial seed: `x_i` is the single monomial `x_i`.
    pub fn new(
        b: ExchangeMatrix,
        y: Vec<TropMonomial>,
        m: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self, SeedError> {
        let n = b.n();
        if y.len() != n {
            return Err(SeedError::Dimensions(format!(
                "rank {n} matrix with {} coefficients",
                y.len()
            )));
        }
        for (i, yi) in y.iter().enumerate() {
            if yi.num_gens() != m {
                return Err(SeedError::Dimensions(format!(
                    "coefficient y{} ranges over {} generators, expected {m}",
                    i + 1,
                    yi.num_gens()
                )));
            }
        }
        let labels = match labels {
            Some(ls) => {
                if ls.len() != n {
                    return Err(SeedError::Dimensions(format!(
                        "{} labels for rank {n}",
                        ls.len()
                    )));
                }
                ls
            }
            None => (1..=n).map(|i| format!("x{i}")).collect(),
        };
        let x = (0..n).map(|i| LaurentPoly::var(n, m, i)).collect();
        Ok(Seed {
            b,
            y,
            x,
            m,
            labels,
            history: Vec::new(),
        })
    }

    /// Rank: the number of mutable directions.
    pub fn n(&self) -> usize {
        self.b.n()
    }

    fn check_index(&self, k: usize) -> Result<(), SeedError> {
        if k >= self.n() {
            return Err(SeedError::IndexOutOfRange {
                index: k,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Seed mutation at mutable index `k` (0-based). Returns a fresh seed;
    /// `self` is unchanged.
    pub fn mutated(&self, k: usize) -> Result<Seed, SeedError> {
        self.check_index(k)?;
        let n = self.n();
        let yk = &self.y[k];

        // Exchange relation numerator: y_k ∏ x_j^{[B_jk]+} + ∏ x_j^{[-B_jk]+}.
        let mut term1 = LaurentPoly::from_trop(n, yk);
        let mut term2 = LaurentPoly::one(n, self.m);
        for j in 0..n {
            let e = self.b.entry(j, k);
            if e > 0 {
                term1 = term1.try_mul(&self.x[j].pow(e as u64))?;
            } else if e < 0 {
                term2 = term2.try_mul(&self.x[j].pow(e.unsigned_abs()))?;
            }
        }
        let numer = term1.try_add(&term2)?;
        let divisor =
            LaurentPoly::from_trop(n, &yk.trop_add_one()).try_mul(&self.x[k])?;
        let xk_new = numer.exact_div(&divisor)?;

        let mut x = self.x.clone();
        x[k] = xk_new;
        let y = mutate_coeffs(&self.y, &self.b, k)?;
        let b = self.b.mutated(k)?;
        let mut history = self.history.clone();
        history.push(k);
        Ok(Seed {
            b,
            y,
            x,
            m: self.m,
            labels: self.labels.clone(),
            history,
        })
    }

    /// Applies a mutation word left to right.
    pub fn apply(&self, word: &[usize]) -> Result<Seed, SeedError> {
        let mut cur = self.clone();
        for &k in word {
            cur = cur.mutated(k)?;
        }
        Ok(cur)
    }

    /// Freezes the cluster variable at mutable index `i`: the variable
    /// becomes a new coefficient generator `z_{m+1}`, every remaining
    /// coefficient picks up the factor `x_i^{B_ij}`, and row/column `i` of
    /// `B` are deleted. The caller extends the ground ring with
    /// [`GroundRingSpec::extended_for_freeze`] (the new generator is always
    /// inverted there).
    ///
    /// The returned seed starts a fresh mutation history.
    pub fn freeze(&self, i: usize) -> Result<Seed, SeedError> {
        self.check_index(i)?;
        let n = self.n();
        let new_m = self.m + 1;

        let mut y = Vec::with_capacity(n - 1);
        let mut x = Vec::with_capacity(n - 1);
        let mut labels = Vec::with_capacity(n - 1);
        let mut entries = Vec::with_capacity(n - 1);
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut exps = self.y[j].exps.clone();
            exps.push(BigInt::from(self.b.entry(i, j)));
            y.push(TropMonomial { exps });
            x.push(substitute_var_with_generator(&self.x[j], i, self.m));
            labels.push(self.labels[j].clone());
            let row: Vec<i64> = self
                .b
                .row(j)
                .iter()
                .enumerate()
                .filter(|&(c, _)| c != i)
                .map(|(_, &v)| v)
                .collect();
            entries.push(row);
        }
        let b = ExchangeMatrix::new(entries)?;
        Ok(Seed {
            b,
            y,
            x,
            m: new_m,
            labels,
            history: Vec::new(),
        })
    }

    /// True iff column `i` of `B` is componentwise nonnegative — every
    /// exchange at `i` only consumes, never produces, the other variables.
    ///
    /// # Panics
    /// Panics if `i` is out of range.
    pub fn is_source(&self, i: usize) -> bool {
        assert!(i < self.n(), "index {i} out of range for rank {}", self.n());
        (0..self.n()).all(|k| self.b.entry(k, i) >= 0)
    }

    /// True iff the directed graph with an edge `i → j` whenever `B_ji > 0`
    /// has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        digraph_is_acyclic(self.n(), |i, j| self.b.entry(j, i) > 0)
    }

    /// True iff `y_i ⊕ 1` lies in the ground ring for every mutable `i`.
    pub fn is_source_freezing(&self, ring: &GroundRingSpec) -> bool {
        self.y
            .iter()
            .all(|yi| yi.trop_add_one().in_ground_ring(ring))
    }

    /// Exactly verifies the exchange-product identity at a source:
    /// `((y_i ⊕ 1) x_i') x_i − (y_i ∏_{B_ki > 0, k≠j} x_k^{B_ki}) x_j^{B_ji} = 1`.
    ///
    /// Preconditions: `i` is a source and `B_ji > 0`.
    pub fn check_exchange_identity(&self, i: usize, j: usize) -> Result<bool, SeedError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if !self.is_source(i) {
            return Err(SeedError::Precondition(format!(
                "index {i} is not a source"
            )));
        }
        let bji = self.b.entry(j, i);
        if bji <= 0 {
            return Err(SeedError::Precondition(format!(
                "B[{j}][{i}] = {bji} is not positive"
            )));
        }
        let n = self.n();
        let yi = &self.y[i];
        let xi_new = self.mutated(i)?.x[i].clone();

        let lhs = LaurentPoly::from_trop(n, &yi.trop_add_one())
            .try_mul(&xi_new)?
            .try_mul(&self.x[i])?;

        let mut prod = LaurentPoly::from_trop(n, yi);
        for k in 0..n {
            let bki = self.b.entry(k, i);
            if bki > 0 && k != j {
                prod = prod.try_mul(&self.x[k].pow(bki as u64))?;
            }
        }
        prod = prod.try_mul(&self.x[j].pow(bji as u64))?;

        let delta = lhs.try_sub(&prod)?;
        Ok(delta == LaurentPoly::one(n, self.m))
    }

    /// The sufficient criterion for `A = U` at this seed: concluded iff the
    /// seed is acyclic and source-freezing over `ring`; otherwise
    /// inconclusive, with the failing monomials listed.
    pub fn theorem_au_applies(&self, ring: &GroundRingSpec) -> AuVerdict {
        let acyclic = self.is_acyclic();
        let obstructions: Vec<(usize, TropMonomial)> = self
            .y
            .iter()
            .enumerate()
            .filter_map(|(i, yi)| {
                let mono = yi.trop_add_one();
                if mono.in_ground_ring(ring) {
                    None
                } else {
                    Some((i, mono))
                }
            })
            .collect();
        let status = if acyclic && obstructions.is_empty() {
            AuStatus::ConcludedEqual
        } else {
            AuStatus::Inconclusive
        };
        AuVerdict {
            status,
            obstructions,
            acyclic,
        }
    }
}

/// Substitutes the generator `z_{m+1}` for the variable `x_i` in `p`
/// (which has `m` generators), dropping dimension `i` from the x-block.
fn substitute_var_with_generator(p: &LaurentPoly, i: usize, m: usize) -> LaurentPoly {
    let n = p.num_x();
    debug_assert_eq!(m, p.num_z());
    let mut out = LaurentPoly::zero(n - 1, m + 1);
    for (key, coeff) in p.terms() {
        let mut x: Vec<i64> = Vec::with_capacity(n - 1);
        for (idx, &e) in key.x.iter().enumerate() {
            if idx != i {
                x.push(e);
            }
        }
        let mut z = key.z.clone();
        z.push(key.x[i]);
        out = out
            .try_add(&LaurentPoly::monomial(n - 1, m + 1, x, z, coeff.clone()))
            .expect("same ring");
    }
    out
}

/// Kahn's algorithm on an implicit digraph over `0..n`.
fn digraph_is_acyclic(n: usize, edge: impl Fn(usize, usize) -> bool) -> bool {
    let mut indeg = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && edge(i, j) {
                indeg[j] += 1;
            }
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = queue.pop() {
        removed += 1;
        for j in 0..n {
            if j != v && edge(v, j) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push(j);
                }
            }
        }
    }
    removed == n
}

/// Matrix mutation at `k` (free-function form of [`ExchangeMatrix::mutated`]).
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix, SeedError> {
    b.mutated(k)
}

/// Coefficient mutation at `k`: `y_k ↦ y_k^{-1}` and, for `i ≠ k`,
/// `y_i ↦ y_i · y_k^{[B_ki]+} · (y_k ⊕ 1)^{-B_ki}`.
pub fn mutate_coeffs(
    y: &[TropMonomial],
    b: &ExchangeMatrix,
    k: usize,
) -> Result<Vec<TropMonomial>, SeedError> {
    if k >= b.n() {
        return Err(SeedError::IndexOutOfRange { index: k, n: b.n() });
    }
    let yk = &y[k];
    let add1 = yk.trop_add_one();
    let mut out = Vec::with_capacity(y.len());
    for (i, yi) in y.iter().enumerate() {
        if i == k {
            out.push(yk.inv());
        } else {
            let e = b.entry(k, i);
            let mut v = yi.clone();
            if e > 0 {
                v = v.mul(&yk.pow_i64(e))?;
            }
            v = v.mul(&add1.pow_i64(-e))?;
            out.push(v);
        }
    }
    Ok(out)
}

/// Seed mutation at `k` (free-function form of [`Seed::mutated`]).
pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed, SeedError> {
    s.mutated(k)
}

/// Freezing at `i` (free-function form of [`Seed::freeze`]).
pub fn freeze(s: &Seed, i: usize) -> Result<Seed, SeedError> {
    s.freeze(i)
}

/// A single Laurent-phenomenon violation found by [`verify_laurent`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentViolation {
    /// The offending mutation sequence.
    pub sequence: Vec<usize>,
    /// 0-based step within the sequence at which the violation occurred.
    pub step: usize,
    /// The mutated index at that step.
    pub index: usize,
    /// Human-readable description (ring escape or arithmetic failure).
    pub detail: String,
}

/// Result of [`verify_laurent`]: every violation found, plus counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentReport {
    pub violations: Vec<LaurentViolation>,
    /// Number of sequences examined.
    pub sequences_checked: usize,
    /// Number of freshly produced cluster variables examined.
    pub variables_checked: usize,
}

impl LaurentReport {
    /// True iff no violation was recorded.
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Applies each mutation sequence from `s` and checks that every produced
/// cluster variable is a Laurent polynomial whose coefficients lie in
/// `ring`. Violations (including any arithmetic failure) are reported, not
/// thrown.
pub fn verify_laurent(s: &Seed, sequences: &[Vec<usize>], ring: &GroundRingSpec) -> LaurentReport {
    let mut report = LaurentReport {
        violations: Vec::new(),
        sequences_checked: 0,
        variables_checked: 0,
    };
    for seq in sequences {
        report.sequences_checked += 1;
        let mut cur = s.clone();
        for (step, &k) in seq.iter().enumerate() {
            match cur.mutated(k) {
                Err(e) => {
                    report.violations.push(LaurentViolation {
                        sequence: seq.clone(),
                        step,
                        index: k,
                        detail: e.to_string(),
                    });
                    break;
                }
                Ok(next) => {
                    report.variables_checked += 1;
                    if !next.x[k].coeffs_in_ring(ring) {
                        report.violations.push(LaurentViolation {
                            sequence: seq.clone(),
                            step,
                            index: k,
                            detail: format!(
                                "coefficients of {} leave the ground ring {ring}",
                                next.x[k]
                            ),
                        });
                    }
                    cur = next;
                }
            }
        }
    }
    report
}

/// Detailed result of the finite Laurent-membership check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMembership {
    /// Whether `p` was Laurent with in-ring coefficients over every seed.
    pub holds: bool,
    /// Notes on each failure (which seed, and why).
    pub notes: Vec<String>,
}

/// Checks whether `p` (expressed in the initial cluster) is a Laurent
/// polynomial with coefficients in `ring` when rewritten in the cluster of
/// each listed seed. Each seed must be reachable from the same initial seed
/// and carry its mutation history.
///
/// A true result over a finite list is necessary, not sufficient, for
/// membership in the upper bound algebra.
pub fn check_laurent_over_seeds(
    p: &LaurentPoly,
    seeds: &[Seed],
    ring: &GroundRingSpec,
) -> LaurentMembership {
    let mut notes = Vec::new();
    for (which, t) in seeds.iter().enumerate() {
        let describe = || {
            if t.history.is_empty() {
                format!("seed #{which} (initial)")
            } else {
                format!(
                    "seed #{which} (history {})",
                    t.history
                        .iter()
                        .map(|k| (k + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            }
        };
        // Mutations are involutions, so replaying the reversed history from
        // t's data expresses the initial cluster variables in t's cluster.
        let fresh = match Seed::new(t.b.clone(), t.y.clone(), t.m, None) {
            Ok(s) => s,
            Err(e) => {
                notes.push(format!("{}: cannot rebuild seed ({e})", describe()));
                continue;
            }
        };
        let mut back = fresh;
        let mut failed = false;
        for &k in t.history.iter().rev() {
            match back.mutated(k) {
                Ok(next) => back = next,
                Err(e) => {
                    notes.push(format!("{}: replay failed ({e})", describe()));
                    failed = true;
                    break;
                }
            }
        }
        if failed {
            continue;
        }
        let one = LaurentPoly::one(back.x.len(), t.m);
        let subs: Vec<(LaurentPoly, LaurentPoly)> =
            back.x.iter().map(|xi| (xi.clone(), one.clone())).collect();
        let (num, den) = match p.eval_fraction(&subs) {
            Ok(pair) => pair,
            Err(e) => {
                notes.push(format!("{}: substitution failed ({e})", describe()));
                continue;
            }
        };
        match num.exact_div(&den) {
            Err(e) => notes.push(format!(
                "{}: not a Laurent polynomial in this cluster ({e})",
                describe()
            )),
            Ok(q) => {
                if !q.coeffs_in_ring(ring) {
                    notes.push(format!(
                        "{}: coefficients of {q} leave the ground ring {ring}",
                        describe()
                    ));
                }
            }
        }
    }
    LaurentMembership {
        holds: notes.is_empty(),
        notes,
    }
}

/// Boolean form of [`check_laurent_over_seeds`].
pub fn is_laurent_over_seeds(p: &LaurentPoly, seeds: &[Seed], ring: &GroundRingSpec) -> bool {
    check_laurent_over_seeds(p, seeds, ring).holds
}

/// Criterion check at a seed (free-function form of
/// [`Seed::theorem_au_applies`]).
pub fn theorem_au_applies(s: &Seed, ring: &GroundRingSpec) -> AuVerdict {
    s.theorem_au_applies(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn em(rows: &[&[i64]]) -> ExchangeMatrix {
        ExchangeMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn trop(exps: &[i64]) -> TropMonomial {
        TropMonomial::from_exps_i64(exps)
    }

    /// Rank-2 seed with a double arrow and two coefficient generators:
    /// B = [[0,-2],[2,0]], y = (z1*z2^-1, z2^-1).
    fn double_arrow_seed() -> Seed {
        Seed::new(
            em(&[&[0, -2], &[2, 0]]),
            vec![trop(&[1, -1]), trop(&[0, -1])],
            2,
            None,
        )
        .unwrap()
    }

    fn a2_seed() -> Seed {
        Seed::new(
            em(&[&[0, -1], &[1, 0]]),
            vec![TropMonomial::one(0), TropMonomial::one(0)],
            0,
            None,
        )
        .unwrap()
    }

    #[test]
    fn matrix_mutation_examples() {
        let b = em(&[&[0, -2], &[2, 0]]);
        assert_eq!(b.mutated(0).unwrap(), em(&[&[0, 2], &[-2, 0]]));

        let path = em(&[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]]);
        assert_eq!(
            path.mutated(1).unwrap(),
            em(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]])
        );
    }

    #[test]
    fn skew_symmetrizable_acceptance() {
        // Type-B rank 2: symmetrizer (1, 2).
        let b = ExchangeMatrix::new(vec![vec![0, -1], vec![2, 0]]).unwrap();
        let d = b.symmetrizer();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0] * b.entry(0, 1), -(d[1] * b.entry(1, 0)));
        assert!(!b.is_skew_symmetric());

        assert!(ExchangeMatrix::new(vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(ExchangeMatrix::new(vec![vec![1]]).is_err());
        assert!(ExchangeMatrix::new(vec![vec![0, 1], vec![0, 0]]).is_err());
        assert!(ExchangeMatrix::new(vec![]).is_ok());
    }

    #[test]
    fn mutation_preserves_symmetrizer() {
        let b = ExchangeMatrix::new(vec![vec![0, -1], vec![2, 0]]).unwrap();
        let d_before = b.symmetrizer();
        let d_after = b.mutated(0).unwrap().symmetrizer();
        assert_eq!(d_before, d_after);
    }

    #[test]
    fn coefficient_mutation_example() {
        let s = double_arrow_seed();
        let y1 = mutate_coeffs(&s.y, &s.b, 0).unwrap();
        assert_eq!(y1[0], trop(&[-1, 1])); // z1^-1*z2
        assert_eq!(y1[1], trop(&[0, -3])); // z2^-3

        // Trivial coefficients stay trivial.
        let a2 = a2_seed();
        let y = mutate_coeffs(&a2.y, &a2.b, 0).unwrap();
        assert!(y.iter().all(TropMonomial::is_one));

        // Involution.
        let y2 = mutate_coeffs(&y1, &s.b.mutated(0).unwrap(), 0).unwrap();
        assert_eq!(y2, s.y);
    }

    #[test]
    fn seed_mutation_example_a2() {
        let s = a2_seed();
        let t = s.mutated(0).unwrap();
        assert_eq!(t.x[0].to_string(), "x2*x1^-1 + x1^-1");
        assert_eq!(t.x[1].to_string(), "x2");
        assert_eq!(t.b, em(&[&[0, 1], &[-1, 0]]));
        assert_eq!(t.history, vec![0]);
        // Involution restores everything.
        assert_eq!(t.mutated(0).unwrap(), s);
    }

    #[test]
    fn a2_closure_has_five_variables() {
        let s = a2_seed();
        let mut seen: Vec<LaurentPoly> = s.x.clone();
        let mut frontier = vec![s.clone()];
        let mut seeds_seen = vec![s.clone()];
        while let Some(cur) = frontier.pop() {
            for k in 0..2 {
                let next = cur.mutated(k).unwrap();
                for xi in &next.x {
                    if !seen.contains(xi) {
                        seen.push(xi.clone());
                    }
                }
                if !seeds_seen.contains(&next) {
                    seeds_seen.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        assert_eq!(seen.len(), 5);
        let expected = [
            "x1",
            "x2",
            "x2*x1^-1 + x1^-1",
            "x2^-1 + x1^-1 + x1^-1*x2^-1",
            "x1*x2^-1 + x2^-1",
        ];
        for e in expected {
            assert!(
                seen.iter().any(|p| p.to_string() == e),
                "missing variable {e}"
            );
        }

        // The pentagon: (1,2,1,2,1) returns the initial seed with the two
        // indices swapped.
        let w = s.apply(&[0, 1, 0, 1, 0]).unwrap();
        assert_eq!(w.b, em(&[&[0, 1], &[-1, 0]]));
        assert_eq!(w.x[0].to_string(), "x2");
        assert_eq!(w.x[1].to_string(), "x1");
        assert!(w.y.iter().all(TropMonomial::is_one));
    }

    #[test]
    fn freeze_example() {
        let s = double_arrow_seed();
        let f = s.freeze(1).unwrap();
        assert_eq!(f.n(), 1);
        assert_eq!(f.m, 3);
        // y1_dagger = z1*z2^-1 * g^2 with g the new generator (B[1][0] = 2).
        assert_eq!(f.y[0], trop(&[1, -1, 2]));
        assert_eq!(f.b.entries(), &[vec![0]]);
        assert_eq!(f.x[0], LaurentPoly::var(1, 3, 0));
        assert_eq!(f.labels, vec!["x1".to_string()]);
    }

    #[test]
    fn freeze_with_zero_row_keeps_coefficients() {
        // B row of the frozen index all zeros: y unchanged except the new slot.
        let s = Seed::new(
            em(&[&[0, 0], &[0, 0]]),
            vec![trop(&[2]), trop(&[-1])],
            1,
            None,
        )
        .unwrap();
        let f = s.freeze(0).unwrap();
        assert_eq!(f.y[0], trop(&[-1, 0]));
    }

    #[test]
    fn freezing_lemma_example() {
        let s = double_arrow_seed();
        let i = 1;
        let f = s.freeze(i).unwrap();
        // 1 ⊕ y_j_dagger = (1 ⊕ y_j) · x_i^{min(0, B_ij)} for the surviving j = 0.
        let lhs = f.y[0].trop_add_one();
        let mut rhs_exps = s.y[0].trop_add_one().exps.clone();
        rhs_exps.push(BigInt::from(s.b.entry(i, 0).min(0)));
        assert_eq!(lhs, TropMonomial { exps: rhs_exps });
    }

    #[test]
    fn source_predicate() {
        let s = a2_seed();
        assert!(s.is_source(0)); // column 0 = (0, 1)
        assert!(!s.is_source(1)); // column 1 contains -1
        let zero = Seed::new(em(&[&[0, 0], &[0, 0]]), vec![TropMonomial::one(0); 2], 0, None)
            .unwrap();
        assert!(zero.is_source(0) && zero.is_source(1));
    }

    #[test]
    fn acyclicity_predicate() {
        assert!(a2_seed().is_acyclic());
        let zero =
            Seed::new(em(&[&[0, 0], &[0, 0]]), vec![TropMonomial::one(0); 2], 0, None).unwrap();
        assert!(zero.is_acyclic());
        // 3-cycle: edges 0→1, 1→2, 2→0.
        let cyc = Seed::new(
            em(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]]),
            vec![TropMonomial::one(0); 3],
            0,
            None,
        )
        .unwrap();
        assert!(!cyc.is_acyclic());
    }

    #[test]
    fn source_freezing_predicate() {
        let s = double_arrow_seed();
        assert!(s.is_source_freezing(&GroundRingSpec::FullLaurent));
        assert!(!s.is_source_freezing(&GroundRingSpec::Polynomial));
        let all_pos = Seed::new(
            em(&[&[0, -1], &[1, 0]]),
            vec![trop(&[1, 0]), trop(&[1, 1])],
            2,
            None,
        )
        .unwrap();
        assert!(all_pos.is_source_freezing(&GroundRingSpec::Polynomial));
    }

    #[test]
    fn exchange_identity_rank2() {
        let s = a2_seed();
        // i = 0 is a source with B[1][0] = 1: (x2 + 1) - x2 = 1.
        assert!(s.check_exchange_identity(0, 1).unwrap());
        // Violated preconditions are reported as errors.
        assert!(matches!(
            s.check_exchange_identity(1, 0),
            Err(SeedError::Precondition(_))
        ));
    }

    #[test]
    fn au_criterion_examples() {
        let s = double_arrow_seed();
        let v = s.theorem_au_applies(&GroundRingSpec::Polynomial);
        assert_eq!(v.status, AuStatus::Inconclusive);
        assert!(v.acyclic);
        assert_eq!(
            v.obstructions,
            vec![(0, trop(&[0, -1])), (1, trop(&[0, -1]))]
        );

        let loc = GroundRingSpec::Localized(std::collections::BTreeSet::from([1]));
        let v2 = s.theorem_au_applies(&loc);
        assert_eq!(v2.status, AuStatus::ConcludedEqual);
        assert!(v2.obstructions.is_empty());

        // Over the full Laurent ring only acyclicity matters.
        let v3 = s.theorem_au_applies(&GroundRingSpec::FullLaurent);
        assert_eq!(v3.status, AuStatus::ConcludedEqual);

        // Rank 0 is trivially concluded.
        let isolated = Seed::new(em(&[]), vec![], 2, None).unwrap();
        assert_eq!(
            isolated.theorem_au_applies(&GroundRingSpec::Polynomial).status,
            AuStatus::ConcludedEqual
        );
    }

    #[test]
    fn verify_laurent_small() {
        let s = a2_seed();
        let mut seqs = Vec::new();
        for len in 0..=4usize {
            let mut stack = vec![Vec::new()];
            for _ in 0..len {
                let mut next = Vec::new();
                for w in &stack {
                    for k in 0..2 {
                        let mut w2: Vec<usize> = w.clone();
                        w2.push(k);
                        next.push(w2);
                    }
                }
                stack = next;
            }
            seqs.extend(stack);
        }
        let report = verify_laurent(&s, &seqs, &GroundRingSpec::Polynomial);
        assert!(report.clean(), "violations: {:?}", report.violations);
        assert!(report.variables_checked > 0);

        // Empty sequence list: empty report.
        let empty = verify_laurent(&s, &[], &GroundRingSpec::Polynomial);
        assert!(empty.clean());
        assert_eq!(empty.sequences_checked, 0);
    }

    #[test]
    fn verify_laurent_reports_bad_index() {
        let s = a2_seed();
        let report = verify_laurent(&s, &[vec![7]], &GroundRingSpec::Polynomial);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].step, 0);
    }

    #[test]
    fn laurent_over_seeds_examples() {
        let s = a2_seed();
        let p_x1 = LaurentPoly::var(2, 0, 0);
        assert!(is_laurent_over_seeds(
            &p_x1,
            std::slice::from_ref(&s),
            &GroundRingSpec::Polynomial
        ));
        let one = LaurentPoly::one(2, 0);
        assert!(is_laurent_over_seeds(
            &one,
            std::slice::from_ref(&s),
            &GroundRingSpec::Polynomial
        ));

        // p = x1^-1 * x2 is Laurent over the initial seed but not over
        // mu_1(initial): x2/x1 = x1'*x2/(x2+1) there.
        let p = LaurentPoly::monomial(2, 0, vec![-1, 1], vec![], BigInt::from(1));
        assert!(is_laurent_over_seeds(
            &p,
            std::slice::from_ref(&s),
            &GroundRingSpec::Polynomial
        ));
        let t = s.mutated(0).unwrap();
        let membership =
            check_laurent_over_seeds(&p, &[s.clone(), t], &GroundRingSpec::Polynomial);
        assert!(!membership.holds);
        assert_eq!(membership.notes.len(), 1);

        // x1 itself is Laurent over both.
        let t = s.mutated(0).unwrap();
        assert!(is_laurent_over_seeds(
            &p_x1,
            &[s.clone(), t],
            &GroundRingSpec::Polynomial
        ));
    }

    #[test]
    fn freezing_is_order_independent() {
        let s = Seed::new(
            em(&[&[0, -2, 1], &[2, 0, -1], &[-1, 1, 0]]),
            vec![trop(&[1, -1]), trop(&[0, 2]), trop(&[-2, 0])],
            2,
            None,
        )
        .unwrap();
        // Freeze indices {0, 2} in both orders. Freezing 0 first shifts 2
        // down to 1; freezing 2 first leaves 0 in place.
        let a = s.freeze(0).unwrap().freeze(1).unwrap();
        let b = s.freeze(2).unwrap().freeze(0).unwrap();
        assert_eq!(a.b, b.b);
        assert_eq!(a.x.len(), b.x.len());
        // Same up to swapping the two appended generators (slots m, m+1).
        let swap_last_two = |t: &TropMonomial| {
            let mut e = t.exps.clone();
            let len = e.len();
            e.swap(len - 2, len - 1);
            TropMonomial { exps: e }
        };
        let b_swapped: Vec<TropMonomial> = b.y.iter().map(swap_last_two).collect();
        assert_eq!(a.y, b_swapped);
    }

    fn arb_skew_symmetric(n: usize) -> impl Strategy<Value = ExchangeMatrix> {
        proptest::collection::vec(-3i64..=3, n * (n - 1) / 2).prop_map(move |upper| {
            let mut entries = vec![vec![0i64; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = it.next().unwrap();
                    entries[i][j] = v;
                    entries[j][i] = -v;
                }
            }
            ExchangeMatrix::new(entries).unwrap()
        })
    }

    fn arb_seed(n: usize, m: usize) -> impl Strategy<Value = Seed> {
        (
            arb_skew_symmetric(n),
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, m), n),
        )
            .prop_map(move |(b, yexps)| {
                let y = yexps
                    .iter()
                    .map(|e| TropMonomial::from_exps_i64(e))
                    .collect();
                Seed::new(b, y, m, None).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn prop_mutation_is_involutive(s in arb_seed(3, 2), k in 0usize..3) {
            let back = s.mutated(k).unwrap().mutated(k).unwrap();
            prop_assert_eq!(back, s);
        }

        #[test]
        fn prop_matrix_mutation_preserves_symmetrizability(
            s in arb_seed(4, 0), k in 0usize..4
        ) {
            let b2 = s.b.mutated(k).unwrap();
            prop_assert!(skew_symmetrizer(b2.entries()).is_some());
        }

        #[test]
        fn prop_freezing_lemma(s in arb_seed(3, 2), i in 0usize..3) {
            let f = s.freeze(i).unwrap();
            let mut survivors = (0..3usize).filter(|&j| j != i);
            for (new_j, old_j) in (0..2).zip(&mut survivors) {
                let lhs = f.y[new_j].trop_add_one();
                let mut rhs = s.y[old_j].trop_add_one().exps;
                rhs.push(BigInt::from(s.b.entry(i, old_j).min(0)));
                prop_assert_eq!(lhs, TropMonomial { exps: rhs });
            }
        }

        #[test]
        fn prop_freezing_preserves_source_freezing(s in arb_seed(3, 2), i in 0usize..3) {
            // Extend the ring by inverting the new generator; if the seed
            // was source-freezing before, it stays so after freezing.
            for ring in [
                GroundRingSpec::FullLaurent,
                GroundRingSpec::Polynomial,
                GroundRingSpec::Localized(std::collections::BTreeSet::from([0])),
            ] {
                if s.is_source_freezing(&ring) {
                    let f = s.freeze(i).unwrap();
                    let extended = ring.extended_for_freeze(s.m);
                    prop_assert!(f.is_source_freezing(&extended));
                }
            }
        }

        #[test]
        fn prop_full_laurent_verdict_depends_only_on_acyclicity(s in arb_seed(3, 2)) {
            let v = s.theorem_au_applies(&GroundRingSpec::FullLaurent);
            prop_assert!(v.obstructions.is_empty());
            prop_assert_eq!(
                v.status == AuStatus::ConcludedEqual,
                s.is_acyclic()
            );
        }
    }
}
