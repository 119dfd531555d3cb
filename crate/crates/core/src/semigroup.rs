//! Finite semigroups and rings as validated multiplication/addition tables.
//!
//! Elements are identified by index into a canonical ordered name list; all
//! derived sets in this crate are sorted index lists, so set equality is
//! syntactic. Validators are total: every input yields either a validated
//! value or a concrete witness, and re-validating a validated value succeeds.

use crate::exec;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("table shape does not match the element list ({0})")]
    BadShape(String),
    #[error("associativity fails at ({a}, {b}, {c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("declared zero {declared} is not the absorbing element (found {found:?})")]
    BadZero { declared: usize, found: Option<usize> },
}

/// A finite semigroup: ordered element names, a total associative
/// multiplication table, and the absorbing element if one exists.
///
/// The zero is located by the validator, never trusted from the input; a
/// declared index that disagrees with the located absorbing element is a
/// [`SemigroupError::BadZero`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    mult: Vec<Vec<usize>>,
    zero: Option<usize>,
}

impl FiniteSemigroup {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mult_table(&self) -> &Vec<Vec<usize>> {
        &self.mult
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// Idempotents of the semigroup, sorted.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.is_idempotent(a)).collect()
    }
}

fn check_table_shape(n: usize, table: &[Vec<usize>], what: &str) -> Result<(), SemigroupError> {
    if table.len() != n {
        return Err(SemigroupError::BadShape(format!(
            "{what} has {} rows, expected {n}",
            table.len()
        )));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(SemigroupError::BadShape(format!(
                "{what} row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&e) = row.iter().find(|&&e| e >= n) {
            return Err(SemigroupError::BadShape(format!(
                "{what} row {i} contains out-of-range index {e}"
            )));
        }
    }
    Ok(())
}

fn first_nonassociative(n: usize, mult: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
    exec::find_min(n * n * n, |i| {
        let (a, b, c) = exec::untriple(i, n);
        if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
            Some((a, b, c))
        } else {
            None
        }
    })
}

fn locate_absorbing(n: usize, mult: &[Vec<usize>]) -> Option<usize> {
    (0..n).find(|&z| (0..n).all(|x| mult[z][x] == z && mult[x][z] == z))
}

/// Validates a multiplication table, locating the absorbing element.
///
/// `declared_zero` is optional advisory input: when present it must agree
/// with the located absorbing element.
pub fn validate_semigroup(
    names: Vec<String>,
    mult: Vec<Vec<usize>>,
    declared_zero: Option<usize>,
) -> Result<FiniteSemigroup, SemigroupError> {
    let n = names.len();
    if n == 0 {
        return Err(SemigroupError::EmptyCarrier);
    }
    check_table_shape(n, &mult, "mult")?;
    if let Some((a, b, c)) = first_nonassociative(n, &mult) {
        return Err(SemigroupError::NonAssociative { a, b, c });
    }
    let found = locate_absorbing(n, &mult);
    if let Some(declared) = declared_zero {
        if found != Some(declared) {
            return Err(SemigroupError::BadZero { declared, found });
        }
    }
    Ok(FiniteSemigroup { names, mult, zero: found })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("table shape does not match the element list ({0})")]
    BadShape(String),
    #[error("addition is not associative at ({a}, {b}, {c})")]
    AddNonAssociative { a: usize, b: usize, c: usize },
    #[error("addition is not commutative at ({a}, {b})")]
    AddNonCommutative { a: usize, b: usize },
    #[error("{zero} is not an additive identity for {a}")]
    BadAdditiveIdentity { zero: usize, a: usize },
    #[error("{a} plus its declared negation is not zero")]
    BadNegation { a: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("distributivity fails at ({a}, {b}, {c}) on the {side}")]
    NotDistributive { a: usize, b: usize, c: usize, side: &'static str },
}

/// A finite ring: an abelian group table with a compatible associative
/// product distributing over sums on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    names: Vec<String>,
    add: Vec<Vec<usize>>,
    neg: Vec<usize>,
    zero: usize,
    mult: Vec<Vec<usize>>,
}

impl FiniteRing {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn add_table(&self) -> &Vec<Vec<usize>> {
        &self.add
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    pub fn mult_table(&self) -> &Vec<Vec<usize>> {
        &self.mult
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.is_idempotent(a)).collect()
    }

    /// Multiplicative unit, if the ring has one.
    pub fn one(&self) -> Option<usize> {
        let n = self.size();
        (0..n).find(|&u| (0..n).all(|x| self.mul(u, x) == x && self.mul(x, u) == x))
    }

    /// Multiplicatively invertible elements (requires a unit).
    pub fn units(&self) -> Vec<usize> {
        let n = self.size();
        match self.one() {
            None => Vec::new(),
            Some(one) => (0..n)
                .filter(|&a| (0..n).any(|b| self.mul(a, b) == one && self.mul(b, a) == one))
                .collect(),
        }
    }
}

pub fn validate_ring(
    names: Vec<String>,
    add: Vec<Vec<usize>>,
    neg: Vec<usize>,
    zero: usize,
    mult: Vec<Vec<usize>>,
) -> Result<FiniteRing, RingError> {
    let n = names.len();
    if n == 0 {
        return Err(RingError::EmptyCarrier);
    }
    let shape = |e: SemigroupError| match e {
        SemigroupError::BadShape(s) => RingError::BadShape(s),
        _ => unreachable!(),
    };
    check_table_shape(n, &add, "add").map_err(shape)?;
    check_table_shape(n, &mult, "mult").map_err(shape)?;
    if neg.len() != n || neg.iter().any(|&e| e >= n) || zero >= n {
        return Err(RingError::BadShape("neg or zero out of range".into()));
    }
    if let Some((a, b, c)) = exec::find_min(n * n * n, |i| {
        let (a, b, c) = exec::untriple(i, n);
        (add[add[a][b]][c] != add[a][add[b][c]]).then_some((a, b, c))
    }) {
        return Err(RingError::AddNonAssociative { a, b, c });
    }
    for (a, row) in add.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            if v != add[b][a] {
                return Err(RingError::AddNonCommutative { a, b });
            }
        }
        if add[zero][a] != a {
            return Err(RingError::BadAdditiveIdentity { zero, a });
        }
        if row[neg[a]] != zero {
            return Err(RingError::BadNegation { a });
        }
    }
    if let Some((a, b, c)) = first_nonassociative(n, &mult) {
        return Err(RingError::NonAssociative { a, b, c });
    }
    if let Some(e) = exec::find_min(n * n * n, |i| {
        let (a, b, c) = exec::untriple(i, n);
        if mult[a][add[b][c]] != add[mult[a][b]][mult[a][c]] {
            Some(RingError::NotDistributive { a, b, c, side: "left" })
        } else if mult[add[a][b]][c] != add[mult[a][c]][mult[b][c]] {
            Some(RingError::NotDistributive { a, b, c, side: "right" })
        } else {
            None
        }
    }) {
        return Err(e);
    }
    Ok(FiniteRing { names, add, neg, zero, mult })
}
