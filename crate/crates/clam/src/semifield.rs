//! Tropical semifields and ground rings.
//!
//! Coefficients of a seed live in the tropical semifield on generators
//! `z1..zm`: its elements are Laurent monomials in the generators,
//! multiplication is ordinary monomial multiplication, and the auxiliary
//! (tropical) addition is `⊕ = exponentwise min`.
//!
//! The ground ring of the ambient algebra is a subring of
//! `ZP = Z[z1^±1, .., zm^±1]` chosen by a [`GroundRingSpec`]: the full
//! Laurent ring, the polynomial ring `Z[z1..zm]`, or a partial
//! localization of the polynomial ring at a set of generators.
//!
//! Exponents are arbitrary-precision integers: mutation can grow them
//! without bound.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors raised by tropical-semifield operations.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SemifieldError {
    /// Two monomials over different generator counts were combined.
    #[error("dimension mismatch: monomial over {left} generators combined with one over {right}")]
    DimensionMismatch { left: usize, right: usize },
    /// A string could not be parsed as a tropical monomial.
    #[error("cannot parse tropical monomial: {0}")]
    Parse(String),
}

/// A Laurent monomial `z1^a1 * z2^a2 * ... * zm^am` in the tropical
/// semifield on `m` generators. The identity is the empty product `1`
/// (all exponents zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropMonomial {
    /// Exponent of each generator, indexed `0..m` for `z1..zm`.
    pub exps: Vec<BigInt>,
}

impl TropMonomial {
    /// The multiplicative identity over `m` generators.
    pub fn one(m: usize) -> Self {
        TropMonomial {
            exps: vec![BigInt::zero(); m],
        }
    }

    /// The generator `z(j+1)` (0-based `j`) over `m` generators.
    ///
    /// # Panics
    /// Panics if `j >= m`.
    pub fn generator(m: usize, j: usize) -> Self {
        assert!(j < m, "generator index {j} out of range for {m} generators");
        let mut exps = vec![BigInt::zero(); m];
        exps[j] = BigInt::one();
        TropMonomial { exps }
    }

    /// Builds a monomial from machine-integer exponents.
    pub fn from_exps_i64(exps: &[i64]) -> Self {
        TropMonomial {
            exps: exps.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    /// Number of semifield generators this monomial ranges over.
    pub fn num_gens(&self) -> usize {
        self.exps.len()
    }

    /// Whether this is the identity monomial `1`.
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    fn check_dims(&self, other: &Self) -> Result<(), SemifieldError> {
        if self.exps.len() != other.exps.len() {
            return Err(SemifieldError::DimensionMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    /// Semifield multiplication: exponentwise sum.
    pub fn mul(&self, other: &Self) -> Result<Self, SemifieldError> {
        self.check_dims(other)?;
        Ok(TropMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Tropical addition `⊕`: exponentwise minimum.
    pub fn trop_add(&self, other: &Self) -> Result<Self, SemifieldError> {
        self.check_dims(other)?;
        Ok(TropMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        })
    }

    /// Multiplicative inverse: exponentwise negation.
    pub fn inv(&self) -> Self {
        TropMonomial {
            exps: self.exps.iter().map(|a| -a).collect(),
        }
    }

    /// Raises the monomial to an integer power (possibly negative).
    pub fn pow_i64(&self, e: i64) -> Self {
        TropMonomial {
            exps: self.exps.iter().map(|a| a * e).collect(),
        }
    }

    /// `self ⊕ 1`, the tropical sum with the identity: exponentwise `min(a, 0)`.
    pub fn trop_add_one(&self) -> Self {
        TropMonomial {
            exps: self
                .exps
                .iter()
                .map(|a| a.min(&BigInt::zero()).clone())
                .collect(),
        }
    }

    /// Membership of this monomial in the ground ring selected by `ring`.
    pub fn in_ground_ring(&self, ring: &GroundRingSpec) -> bool {
        match ring {
            GroundRingSpec::FullLaurent => true,
            GroundRingSpec::Polynomial => self.exps.iter().all(|a| !a.is_negative()),
            GroundRingSpec::Localized(inverted) => self
                .exps
                .iter()
                .enumerate()
                .all(|(j, a)| !a.is_negative() || inverted.contains(&j)),
        }
    }

    /// Parses a monomial over `m` generators from the textual form produced
    /// by [`fmt::Display`], e.g. `z1*z2^-1` or `1`.
    pub fn parse(s: &str, m: usize) -> Result<Self, SemifieldError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(SemifieldError::Parse("empty monomial".into()));
        }
        let mut exps = vec![BigInt::zero(); m];
        for factor in s.split('*') {
            let factor = factor.trim();
            if factor == "1" {
                continue;
            }
            let rest = factor.strip_prefix('z').ok_or_else(|| {
                SemifieldError::Parse(format!(
                    "expected generator factor like `z2` or `z2^-1`, found `{factor}`"
                ))
            })?;
            let (idx_str, exp) = match rest.split_once('^') {
                Some((idx, e)) => {
                    let e = BigInt::from_str(e.trim()).map_err(|_| {
                        SemifieldError::Parse(format!("bad exponent in `{factor}`"))
                    })?;
                    (idx.trim(), e)
                }
                None => (rest, BigInt::one()),
            };
            let idx: usize = idx_str
                .parse()
                .map_err(|_| SemifieldError::Parse(format!("bad generator index in `{factor}`")))?;
            if idx == 0 || idx > m {
                return Err(SemifieldError::Parse(format!(
                    "generator z{idx} out of range (semifield has {m} generators)"
                )));
            }
            exps[idx - 1] += exp;
        }
        Ok(TropMonomial { exps })
    }
}

impl fmt::Display for TropMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, a) in self.exps.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            if a.is_one() {
                write!(f, "z{}", j + 1)?;
            } else {
                write!(f, "z{}^{}", j + 1, a)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Selects the ground ring of the ambient algebra as a subring of the
/// Laurent ring `ZP = Z[z1^±1, .., zm^±1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundRingSpec {
    /// The full Laurent ring: every generator is invertible.
    FullLaurent,
    /// The polynomial ring `Z[z1..zm]`: nothing is invertible.
    Polynomial,
    /// The polynomial ring localized at the given (0-based) set of
    /// generators: exactly those may appear with negative exponents.
    Localized(BTreeSet<usize>),
}

impl GroundRingSpec {
    /// The ground ring after freezing appends a new semifield generator
    /// with 0-based index `new_gen`; the frozen variable is always
    /// inverted in the extended ground ring.
    pub fn extended_for_freeze(&self, new_gen: usize) -> GroundRingSpec {
        match self {
            GroundRingSpec::FullLaurent => GroundRingSpec::FullLaurent,
            GroundRingSpec::Polynomial => {
                GroundRingSpec::Localized(BTreeSet::from([new_gen]))
            }
            GroundRingSpec::Localized(s) => {
                let mut s = s.clone();
                s.insert(new_gen);
                GroundRingSpec::Localized(s)
            }
        }
    }

    /// Parses the command-line grammar: `zp` (full Laurent ring),
    /// `zp+` (polynomial ring), or `zp+:z2,z5` (localized at the listed
    /// generators).
    pub fn parse(s: &str) -> Result<Self, SemifieldError> {
        let s = s.trim();
        if s == "zp" {
            return Ok(GroundRingSpec::FullLaurent);
        }
        if s == "zp+" {
            return Ok(GroundRingSpec::Polynomial);
        }
        if let Some(list) = s.strip_prefix("zp+:") {
            let mut set = BTreeSet::new();
            for item in list.split(',') {
                let item = item.trim();
                let idx_str = item.strip_prefix('z').ok_or_else(|| {
                    SemifieldError::Parse(format!(
                        "expected generator like `z2` in ring spec, found `{item}`"
                    ))
                })?;
                let idx: usize = idx_str.parse().map_err(|_| {
                    SemifieldError::Parse(format!("bad generator index in ring spec `{item}`"))
                })?;
                if idx == 0 {
                    return Err(SemifieldError::Parse(
                        "generator indices in ring specs are 1-based".into(),
                    ));
                }
                set.insert(idx - 1);
            }
            return Ok(GroundRingSpec::Localized(set));
        }
        Err(SemifieldError::Parse(format!(
            "unknown ring spec `{s}` (expected `zp`, `zp+`, or `zp+:z2,z5`)"
        )))
    }
}

impl fmt::Display for GroundRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundRingSpec::FullLaurent => write!(f, "zp"),
            GroundRingSpec::Polynomial => write!(f, "zp+"),
            GroundRingSpec::Localized(s) => {
                write!(f, "zp+:")?;
                for (i, j) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "z{}", j + 1)?;
                }
                Ok(())
            }
        }
    }
}

/// Checks the two Laurent-phenomenon conditions for every coefficient:
/// `y_i / (y_i ⊕ 1)` and `1 / (y_i ⊕ 1)` must lie in the ground ring.
///
/// Both quantities have nonnegative exponents (`max(a,0)` and `-min(a,0)`
/// respectively), so this holds for every [`GroundRingSpec`]; the check is
/// kept explicit so the property is verified rather than assumed.
pub fn lp_conditions_hold(y: &[TropMonomial], ring: &GroundRingSpec) -> bool {
    y.iter().all(|yi| {
        let denom = yi.trop_add_one();
        let first = yi.mul(&denom.inv()).expect("same semifield");
        let second = denom.inv();
        first.in_ground_ring(ring) && second.in_ground_ring(ring)
    })
}
