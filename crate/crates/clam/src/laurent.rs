//! Exact multivariate Laurent polynomials.
//!
//! A [`LaurentPoly`] lives in `Z[z1^±1..zm^±1][x1^±1..xn^±1]`: cluster
//! variables `x1..xn` and coefficient generators `z1..zm`, with
//! arbitrary-precision integer coefficients. Exponents may be negative.
//!
//! Terms are kept in a canonical order — graded-lexicographic on the
//! x-exponents, ties broken lexicographically by the z-exponents — so
//! rendering is deterministic and the leading term is well defined.
//!
//! Exponents are machine integers with checked arithmetic: overflow is a
//! panic with a clear message rather than silent wraparound (coefficients,
//! where growth is routine, are big integers).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

use crate::semifield::{GroundRingSpec, TropMonomial};

/// Errors raised by Laurent-polynomial operations.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LaurentError {
    /// Operands live in different ambient rings.
    #[error("dimension mismatch: ({ln},{lm}) variables/generators vs ({rn},{rm})")]
    DimensionMismatch {
        ln: usize,
        lm: usize,
        rn: usize,
        rm: usize,
    },
    /// Exact division failed; the payload describes the offending terms.
    #[error("NOT_DIVISIBLE: {0}")]
    NotDivisible(String),
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,
    /// A string could not be parsed as a Laurent polynomial.
    #[error("cannot parse Laurent polynomial: {0}")]
    Parse(String),
}

/// Exponent vector of a single term: x-exponents then z-exponents.
///
/// Ordered graded-lexicographically on the x-part (total degree first,
/// then lexicographic), with ties broken lexicographically on the z-part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermKey {
    pub x: Vec<i64>,
    pub z: Vec<i64>,
}

impl TermKey {
    fn x_degree(&self) -> i128 {
        self.x.iter().map(|&e| e as i128).sum()
    }
}

impl Ord for TermKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.z.cmp(&other.z))
    }
}

impl PartialOrd for TermKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn checked_exp_add(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("Laurent exponent overflowed the machine range")
}

/// A Laurent polynomial in `n` cluster variables and `m` coefficient
/// generators, with `BigInt` coefficients. The zero polynomial has an
/// empty term map; nonzero polynomials never store zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n: usize,
    m: usize,
    terms: BTreeMap<TermKey, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero(n: usize, m: usize) -> Self {
        LaurentPoly {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one(n: usize, m: usize) -> Self {
        Self::constant(n, m, BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(n: usize, m: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(
                TermKey {
                    x: vec![0; n],
                    z: vec![0; m],
                },
                c,
            );
        }
        LaurentPoly { n, m, terms }
    }

    /// A single term `c * x^xexps * z^zexps`.
    pub fn monomial(n: usize, m: usize, xexps: Vec<i64>, zexps: Vec<i64>, c: BigInt) -> Self {
        assert_eq!(xexps.len(), n, "x-exponent vector has wrong length");
        assert_eq!(zexps.len(), m, "z-exponent vector has wrong length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(TermKey { x: xexps, z: zexps }, c);
        }
        LaurentPoly { n, m, terms }
    }

    /// The cluster variable `x(i+1)` (0-based `i`) as a polynomial.
    pub fn var(n: usize, m: usize, i: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut x = vec![0i64; n];
        x[i] = 1;
        Self::monomial(n, m, x, vec![0; m], BigInt::one())
    }

    /// Lifts a tropical coefficient monomial into the Laurent ring.
    ///
    /// # Panics
    /// Panics if an exponent exceeds the machine range.
    pub fn from_trop(n: usize, t: &TropMonomial) -> Self {
        let z: Vec<i64> = t
            .exps
            .iter()
            .map(|e| {
                i64::try_from(e).expect("tropical exponent exceeded the machine range")
            })
            .collect();
        let m = z.len();
        Self::monomial(n, m, vec![0; n], z, BigInt::one())
    }

    /// Number of cluster variables in the ambient ring.
    pub fn num_x(&self) -> usize {
        self.n
    }

    /// Number of coefficient generators in the ambient ring.
    pub fn num_z(&self) -> usize {
        self.m
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &BigInt)> {
        self.terms.iter()
    }

    /// The leading (maximal) term, if the polynomial is nonzero.
    pub fn leading_term(&self) -> Option<(&TermKey, &BigInt)> {
        self.terms.last_key_value()
    }

    fn check_dims(&self, other: &Self) -> Result<(), LaurentError> {
        if self.n != other.n || self.m != other.m {
            return Err(LaurentError::DimensionMismatch {
                ln: self.n,
                lm: self.m,
                rn: other.n,
                rm: other.m,
            });
        }
        Ok(())
    }

    fn insert_term(terms: &mut BTreeMap<TermKey, BigInt>, key: TermKey, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Sum, checked for matching dimensions.
    pub fn try_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_dims(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            Self::insert_term(&mut terms, k.clone(), c.clone());
        }
        Ok(LaurentPoly {
            n: self.n,
            m: self.m,
            terms,
        })
    }

    /// Difference, checked for matching dimensions.
    pub fn try_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_dims(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            Self::insert_term(&mut terms, k.clone(), -c.clone());
        }
        Ok(LaurentPoly {
            n: self.n,
            m: self.m,
            terms,
        })
    }

    /// Product, checked for matching dimensions.
    pub fn try_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_dims(other)?;
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let key = TermKey {
                    x: k1.x.iter().zip(&k2.x).map(|(&a, &b)| checked_exp_add(a, b)).collect(),
                    z: k1.z.iter().zip(&k2.z).map(|(&a, &b)| checked_exp_add(a, b)).collect(),
                };
                Self::insert_term(&mut terms, key, c1 * c2);
            }
        }
        Ok(LaurentPoly {
            n: self.n,
            m: self.m,
            terms,
        })
    }

    /// Multiplies by a single term `c * x^dx * z^dz` in place-free style.
    pub fn mul_monomial(&self, dx: &[i64], dz: &[i64], c: &BigInt) -> Self {
        assert_eq!(dx.len(), self.n);
        assert_eq!(dz.len(), self.m);
        if c.is_zero() {
            return Self::zero(self.n, self.m);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, coeff)| {
                (
                    TermKey {
                        x: k.x.iter().zip(dx).map(|(&a, &b)| checked_exp_add(a, b)).collect(),
                        z: k.z.iter().zip(dz).map(|(&a, &b)| checked_exp_add(a, b)).collect(),
                    },
                    coeff * c,
                )
            })
            .collect();
        LaurentPoly {
            n: self.n,
            m: self.m,
            terms,
        }
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, e: u64) -> Self {
        let mut result = Self::one(self.n, self.m);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same ring");
            }
        }
        result
    }

    fn min_exps(&self) -> (Vec<i64>, Vec<i64>) {
        let mut mx = vec![i64::MAX; self.n];
        let mut mz = vec![i64::MAX; self.m];
        for k in self.terms.keys() {
            for (slot, &e) in mx.iter_mut().zip(&k.x) {
                *slot = (*slot).min(e);
            }
            for (slot, &e) in mz.iter_mut().zip(&k.z) {
                *slot = (*slot).min(e);
            }
        }
        (mx, mz)
    }

    fn shifted(&self, dx: &[i64], dz: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                (
                    TermKey {
                        x: k.x.iter().zip(dx).map(|(&a, &b)| checked_exp_add(a, b)).collect(),
                        z: k.z.iter().zip(dz).map(|(&a, &b)| checked_exp_add(a, b)).collect(),
                    },
                    c.clone(),
                )
            })
            .collect();
        LaurentPoly {
            n: self.n,
            m: self.m,
            terms,
        }
    }

    /// Exact division: returns `h` with `self = q * h`, or
    /// [`LaurentError::NotDivisible`] if no Laurent polynomial quotient
    /// exists.
    ///
    /// Both operands are first shifted by their minimal exponents onto
    /// ordinary polynomial support (monomials are units here, so this loses
    /// nothing), then leading terms are eliminated under the canonical term
    /// order. A reduction step that would need a non-integer coefficient, or
    /// a remainder whose leading term the divisor's cannot divide, raises
    /// `NOT_DIVISIBLE`.
    pub fn exact_div(&self, q: &Self) -> Result<Self, LaurentError> {
        self.check_dims(q)?;
        if q.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.n, self.m));
        }

        let (pmx, pmz) = self.min_exps();
        let (qmx, qmz) = q.min_exps();
        let neg = |v: &[i64]| v.iter().map(|&e| -e).collect::<Vec<_>>();
        let p0 = self.shifted(&neg(&pmx), &neg(&pmz));
        let q0 = q.shifted(&neg(&qmx), &neg(&qmz));

        let (qkey, qcoeff) = q0.leading_term().expect("q0 nonzero");
        let mut remainder = p0.terms.clone();
        let mut quotient: BTreeMap<TermKey, BigInt> = BTreeMap::new();

        while let Some((rkey, rcoeff)) = remainder.last_key_value() {
            let mut diff = TermKey {
                x: Vec::with_capacity(self.n),
                z: Vec::with_capacity(self.m),
            };
            let mut divides = true;
            for (&a, &b) in rkey.x.iter().zip(&qkey.x) {
                let d = a - b;
                if d < 0 {
                    divides = false;
                }
                diff.x.push(d);
            }
            for (&a, &b) in rkey.z.iter().zip(&qkey.z) {
                let d = a - b;
                if d < 0 {
                    divides = false;
                }
                diff.z.push(d);
            }
            if !divides {
                return Err(LaurentError::NotDivisible(format!(
                    "leading term {} of the remainder is not divisible by leading term {} of the divisor",
                    term_to_string(rkey, rcoeff, self.n, self.m),
                    term_to_string(qkey, qcoeff, self.n, self.m),
                )));
            }
            let (quo, rem) = num_integer::Integer::div_rem(rcoeff, qcoeff);
            if !rem.is_zero() {
                return Err(LaurentError::NotDivisible(format!(
                    "coefficient {rcoeff} of the remainder's leading term is not divisible by {qcoeff}"
                )));
            }
            // Subtract (quo * diff) * q0 from the remainder; the leading
            // terms cancel exactly, so the loop strictly descends in the
            // term order on nonnegative exponents and must terminate.
            for (k, c) in &q0.terms {
                let key = TermKey {
                    x: k.x.iter().zip(&diff.x).map(|(&a, &b)| checked_exp_add(a, b)).collect(),
                    z: k.z.iter().zip(&diff.z).map(|(&a, &b)| checked_exp_add(a, b)).collect(),
                };
                Self::insert_term(&mut remainder, key, -(c * &quo));
            }
            Self::insert_term(&mut quotient, diff, quo);
        }

        // Undo the support shifts: the quotient's minimal exponents are the
        // differences of the operands' minimal exponents.
        let backx: Vec<i64> = pmx.iter().zip(&qmx).map(|(&a, &b)| a - b).collect();
        let backz: Vec<i64> = pmz.iter().zip(&qmz).map(|(&a, &b)| a - b).collect();
        Ok(LaurentPoly {
            n: self.n,
            m: self.m,
            terms: quotient,
        }
        .shifted(&backx, &backz))
    }

    /// True iff every coefficient monomial (the `z`-part of every term)
    /// lies in the ground ring selected by `ring`. The x-exponents are
    /// unrestricted: cluster variables are Laurent in the cluster.
    pub fn coeffs_in_ring(&self, ring: &GroundRingSpec) -> bool {
        self.terms.keys().all(|k| match ring {
            GroundRingSpec::FullLaurent => true,
            GroundRingSpec::Polynomial => k.z.iter().all(|&e| e >= 0),
            GroundRingSpec::Localized(inv) => k
                .z
                .iter()
                .enumerate()
                .all(|(j, &e)| e >= 0 || inv.contains(&j)),
        })
    }

    /// Substitutes a fraction `num_i / den_i` for each cluster variable
    /// `x_i`, returning the result as a (numerator, denominator) pair of
    /// polynomials over the substituted ring. All `num_i`/`den_i` must share
    /// dimensions, with the same number of coefficient generators as `self`.
    pub fn eval_fraction(
        &self,
        subs: &[(LaurentPoly, LaurentPoly)],
    ) -> Result<(LaurentPoly, LaurentPoly), LaurentError> {
        assert_eq!(subs.len(), self.n, "one substitution per cluster variable");
        let (tn, tm) = match subs.first() {
            Some((num, _)) => (num.num_x(), num.num_z()),
            None => (0, self.m),
        };
        for (num, den) in subs {
            if num.num_x() != tn || num.num_z() != tm || den.num_x() != tn || den.num_z() != tm {
                return Err(LaurentError::DimensionMismatch {
                    ln: tn,
                    lm: tm,
                    rn: den.num_x(),
                    rm: den.num_z(),
                });
            }
        }
        if tm != self.m {
            return Err(LaurentError::DimensionMismatch {
                ln: self.n,
                lm: self.m,
                rn: tn,
                rm: tm,
            });
        }
        if self.is_zero() {
            return Ok((LaurentPoly::zero(tn, tm), LaurentPoly::one(tn, tm)));
        }

        // Clearing exponents: lo_i = min(0, smallest power of x_i),
        // hi_i = max(0, largest power of x_i).
        let mut lo = vec![0i64; self.n];
        let mut hi = vec![0i64; self.n];
        for k in self.terms.keys() {
            for i in 0..self.n {
                lo[i] = lo[i].min(k.x[i]);
                hi[i] = hi[i].max(k.x[i]);
            }
        }

        let mut numer = LaurentPoly::zero(tn, tm);
        for (k, c) in &self.terms {
            let mut term = LaurentPoly::monomial(
                tn,
                tm,
                vec![0; tn],
                k.z.clone(),
                c.clone(),
            );
            for i in 0..self.n {
                let up = u64::try_from(k.x[i] - lo[i]).expect("nonnegative");
                let down = u64::try_from(hi[i] - k.x[i]).expect("nonnegative");
                if up > 0 {
                    term = term.try_mul(&subs[i].0.pow(up))?;
                }
                if down > 0 {
                    term = term.try_mul(&subs[i].1.pow(down))?;
                }
            }
            numer = numer.try_add(&term)?;
        }

        let mut denom = LaurentPoly::one(tn, tm);
        for i in 0..self.n {
            let up = u64::try_from(-lo[i]).expect("nonnegative");
            let down = u64::try_from(hi[i]).expect("nonnegative");
            if up > 0 {
                denom = denom.try_mul(&subs[i].0.pow(up))?;
            }
            if down > 0 {
                denom = denom.try_mul(&subs[i].1.pow(down))?;
            }
        }
        Ok((numer, denom))
    }

    /// Parses the textual form produced by [`fmt::Display`], e.g.
    /// `x2*x1^-1 + x1^-1` or `2*z1*x1^2 - 1`, over the given dimensions.
    pub fn parse(s: &str, n: usize, m: usize) -> Result<Self, LaurentError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(LaurentError::Parse("empty input".into()));
        }
        let bytes = compact.as_bytes();
        let mut terms = BTreeMap::new();
        let mut idx = 0usize;

        while idx < bytes.len() {
            // Sign / separator.
            let mut sign = BigInt::one();
            match bytes[idx] {
                b'+' => idx += 1,
                b'-' => {
                    sign = -BigInt::one();
                    idx += 1;
                }
                _ if idx == 0 => {}
                other => {
                    return Err(LaurentError::Parse(format!(
                        "expected `+` or `-` before a term, found `{}`",
                        other as char
                    )))
                }
            }
            if idx >= bytes.len() {
                return Err(LaurentError::Parse("dangling sign".into()));
            }

            let mut coeff = sign;
            let mut key = TermKey {
                x: vec![0; n],
                z: vec![0; m],
            };
            loop {
                // One factor: an integer, or x<k>[^e] / z<k>[^e].
                match bytes[idx] {
                    b'0'..=b'9' => {
                        let start = idx;
                        while idx < bytes.len() && bytes[idx].is_ascii_digit() {
                            idx += 1;
                        }
                        let digits = &compact[start..idx];
                        let value: BigInt = digits
                            .parse()
                            .map_err(|_| LaurentError::Parse(format!("bad integer `{digits}`")))?;
                        coeff *= value;
                    }
                    b'x' | b'z' => {
                        let is_x = bytes[idx] == b'x';
                        idx += 1;
                        let start = idx;
                        while idx < bytes.len() && bytes[idx].is_ascii_digit() {
                            idx += 1;
                        }
                        if start == idx {
                            return Err(LaurentError::Parse(
                                "variable letter without an index".into(),
                            ));
                        }
                        let var_idx: usize = compact[start..idx]
                            .parse()
                            .map_err(|_| LaurentError::Parse("bad variable index".into()))?;
                        let limit = if is_x { n } else { m };
                        if var_idx == 0 || var_idx > limit {
                            return Err(LaurentError::Parse(format!(
                                "variable {}{} out of range (ring has {} of them)",
                                if is_x { 'x' } else { 'z' },
                                var_idx,
                                limit
                            )));
                        }
                        let mut exp = 1i64;
                        if idx < bytes.len() && bytes[idx] == b'^' {
                            idx += 1;
                            let estart = idx;
                            if idx < bytes.len() && bytes[idx] == b'-' {
                                idx += 1;
                            }
                            while idx < bytes.len() && bytes[idx].is_ascii_digit() {
                                idx += 1;
                            }
                            exp = compact[estart..idx].parse().map_err(|_| {
                                LaurentError::Parse("bad exponent after `^`".into())
                            })?;
                        }
                        let slot = if is_x {
                            &mut key.x[var_idx - 1]
                        } else {
                            &mut key.z[var_idx - 1]
                        };
                        *slot = checked_exp_add(*slot, exp);
                    }
                    other => {
                        return Err(LaurentError::Parse(format!(
                            "unexpected character `{}` in term",
                            other as char
                        )))
                    }
                }
                if idx < bytes.len() && bytes[idx] == b'*' {
                    idx += 1;
                    if idx >= bytes.len() {
                        return Err(LaurentError::Parse("dangling `*`".into()));
                    }
                    continue;
                }
                break;
            }
            Self::insert_term(&mut terms, key, coeff);
        }
        Ok(LaurentPoly { n, m, terms })
    }
}

fn term_to_string(key: &TermKey, coeff: &BigInt, _n: usize, _m: usize) -> String {
    let mut out = String::new();
    write_term(&mut out, key, coeff, true).expect("string write");
    out
}

/// Writes one term. `leading` selects `-x` versus ` - x` style spacing.
fn write_term(out: &mut impl fmt::Write, key: &TermKey, coeff: &BigInt, leading: bool) -> fmt::Result {
    if coeff.is_negative() {
        if leading {
            write!(out, "-")?;
        } else {
            write!(out, " - ")?;
        }
    } else if !leading {
        write!(out, " + ")?;
    }
    let mag = coeff.abs();
    let has_vars = key.x.iter().any(|&e| e != 0) || key.z.iter().any(|&e| e != 0);
    let mut wrote_factor = false;
    if !mag.is_one() || !has_vars {
        write!(out, "{mag}")?;
        wrote_factor = true;
    }
    let mut emit = |name: char, idx1: usize, exp: i64, out: &mut dyn fmt::Write| -> fmt::Result {
        if exp == 0 {
            return Ok(());
        }
        if wrote_factor {
            write!(out, "*")?;
        }
        if exp == 1 {
            write!(out, "{name}{idx1}")?;
        } else {
            write!(out, "{name}{idx1}^{exp}")?;
        }
        wrote_factor = true;
        Ok(())
    };
    // Factors with positive exponents come first (numerator-style), then
    // the negative ones, x's before z's within each group.
    for (i, &e) in key.x.iter().enumerate() {
        if e > 0 {
            emit('x', i + 1, e, out)?;
        }
    }
    for (j, &e) in key.z.iter().enumerate() {
        if e > 0 {
            emit('z', j + 1, e, out)?;
        }
    }
    for (i, &e) in key.x.iter().enumerate() {
        if e < 0 {
            emit('x', i + 1, e, out)?;
        }
    }
    for (j, &e) in key.z.iter().enumerate() {
        if e < 0 {
            emit('z', j + 1, e, out)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, coeff)) in self.terms.iter().rev().enumerate() {
            write_term(f, key, coeff, i == 0)?;
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("dimension mismatch in +")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("dimension mismatch in -")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("dimension mismatch in *")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::zero(self.n, self.m).try_sub(self).expect("same ring")
    }
}
