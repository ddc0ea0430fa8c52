//! Finite inverse semigroups given by multiplication tables.
//!
//! Elements are dense indices `0..n`. A [`MultiplicationTable`] is only a
//! well-formed table; [`validate`] certifies the inverse-semigroup axioms and
//! produces a [`ValidatedSemigroup`] carrying the inverse map, the idempotents,
//! the zero (if any) and Green's relations.

mod format;
mod green;
mod iso;
mod partial;

use serde::Serialize;

use crate::exec::{self, Exec};

pub use format::{parse_generators, parse_names, parse_table, write_names, write_table, GeneratorFile};
pub use green::GreenData;
pub use iso::{semigroup_isomorphic, semigroup_isomorphic_with_limit};
pub use partial::{generate_from_partial_bijections, GenerateError, GenerationOptions, Generated, PartialBijection};

/// A raw finite semigroup table: `mul[a][b]` is the index of `ab`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicationTable {
    n: usize,
    mul: Vec<usize>,
    zero: Option<usize>,
    names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("declared zero {0} is out of range")]
    ZeroOutOfRange(usize),
    #[error("declared zero {zero} does not absorb element {element}")]
    ZeroNotAbsorbing { zero: usize, element: usize },
    #[error("expected {expected} names, found {found}")]
    NameCount { expected: usize, found: usize },
}

impl MultiplicationTable {
    pub fn new(rows: Vec<Vec<usize>>, zero: Option<usize>) -> Result<Self, TableError> {
        let n = rows.len();
        let mut mul = Vec::with_capacity(n * n);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != n {
                return Err(TableError::Ragged { row, expected: n, found: entries.len() });
            }
            mul.extend(entries);
        }
        Self::from_flat(n, mul, zero)
    }

    pub fn from_fn(n: usize, zero: Option<usize>, f: impl Fn(usize, usize) -> usize) -> Result<Self, TableError> {
        let mul = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_flat(n, mul, zero)
    }

    fn from_flat(n: usize, mul: Vec<usize>, zero: Option<usize>) -> Result<Self, TableError> {
        if let Some(k) = mul.iter().position(|&v| v >= n) {
            return Err(TableError::OutOfRange { row: k / n, col: k % n, value: mul[k] });
        }
        if let Some(z) = zero {
            if z >= n {
                return Err(TableError::ZeroOutOfRange(z));
            }
            if let Some(s) = (0..n).find(|&s| mul[z * n + s] != z || mul[s * n + z] != z) {
                return Err(TableError::ZeroNotAbsorbing { zero: z, element: s });
            }
        }
        Ok(MultiplicationTable { n, mul, zero, names: None })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, TableError> {
        if names.len() != self.n {
            return Err(TableError::NameCount { expected: self.n, found: names.len() });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn declared_zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, s: usize) -> String {
        match &self.names {
            Some(names) => names[s].clone(),
            None => s.to_string(),
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.mul.chunks(self.n.max(1)).take(self.n)
    }
}

/// A reason a table fails to be an inverse semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
pub enum Violation {
    #[error("({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),
    #[error("element {0} has no x with s x s = s")]
    NotRegular(usize),
    #[error("idempotents {0} and {1} do not commute")]
    IdempotentsDontCommute(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum SemigroupError {
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("element {0} is out of range")]
    OutOfRange(usize),
}

/// A table certified to be an inverse semigroup, with derived structure.
#[derive(Debug, Clone)]
pub struct ValidatedSemigroup {
    table: MultiplicationTable,
    inv: Vec<usize>,
    idempotents: Vec<usize>,
    is_idempotent: Vec<bool>,
    zero: Option<usize>,
    green: GreenData,
}

pub fn validate(table: MultiplicationTable) -> Result<ValidatedSemigroup, Vec<Violation>> {
    validate_with(table, Exec::default())
}

/// Checks associativity, regularity and commuting idempotents. Together these
/// certify an inverse semigroup, in which inverses are unique.
///
/// Violations are reported with lowest-index witnesses: the first
/// non-associative triple, every non-regular element and every non-commuting
/// pair of idempotents.
pub fn validate_with(table: MultiplicationTable, exec: Exec) -> Result<ValidatedSemigroup, Vec<Violation>> {
    let n = table.len();
    let t = &table;
    let mut violations = Vec::new();

    let non_assoc = exec::find_map_first(exec, n, |a| {
        for b in 0..n {
            let ab = t.product(a, b);
            for c in 0..n {
                if t.product(ab, c) != t.product(a, t.product(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
        None
    });
    if let Some((a, b, c)) = non_assoc {
        violations.push(Violation::NonAssociative(a, b, c));
    }

    let regular: Vec<bool> = exec::map_collect(exec, n, |s| (0..n).any(|x| t.product(t.product(s, x), s) == s));
    violations.extend((0..n).filter(|&s| !regular[s]).map(Violation::NotRegular));

    let idempotents: Vec<usize> = (0..n).filter(|&e| t.product(e, e) == e).collect();
    for (i, &e) in idempotents.iter().enumerate() {
        for &f in &idempotents[i + 1..] {
            if t.product(e, f) != t.product(f, e) {
                violations.push(Violation::IdempotentsDontCommute(e, f));
            }
        }
    }

    if !violations.is_empty() {
        return Err(violations);
    }

    let inv: Vec<usize> = exec::map_collect(exec, n, |s| {
        (0..n)
            .find(|&x| t.product(t.product(s, x), s) == s && t.product(t.product(x, s), x) == x)
            .expect("regular element in a semigroup with commuting idempotents has an inverse")
    });
    let mut is_idempotent = vec![false; n];
    for &e in &idempotents {
        is_idempotent[e] = true;
    }
    let zero = (0..n).find(|&z| (0..n).all(|s| t.product(z, s) == z && t.product(s, z) == z));
    let green = GreenData::compute(t, &inv, &idempotents);
    Ok(ValidatedSemigroup { table, inv, idempotents, is_idempotent, zero, green })
}

impl ValidatedSemigroup {
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn table(&self) -> &MultiplicationTable {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.product(a, b)
    }

    /// `s*`, the unique inverse of `s`.
    #[inline]
    pub fn inv(&self, s: usize) -> usize {
        self.inv[s]
    }

    /// `s* s`, the domain idempotent of `s`.
    #[inline]
    pub fn dom(&self, s: usize) -> usize {
        self.mul(self.inv[s], s)
    }

    /// `s s*`, the range idempotent of `s`.
    #[inline]
    pub fn ran(&self, s: usize) -> usize {
        self.mul(s, self.inv[s])
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    #[inline]
    pub fn is_idempotent(&self, s: usize) -> bool {
        self.is_idempotent[s]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn is_zero(&self, s: usize) -> bool {
        self.zero == Some(s)
    }

    pub fn green_data(&self) -> &GreenData {
        &self.green
    }

    pub fn is_combinatorial(&self) -> bool {
        self.green.combinatorial
    }

    pub fn name(&self, s: usize) -> String {
        self.table.name(s)
    }

    fn check_idempotent(&self, e: usize) -> Result<(), SemigroupError> {
        if e >= self.len() {
            Err(SemigroupError::OutOfRange(e))
        } else if !self.is_idempotent(e) {
            Err(SemigroupError::NotIdempotent(e))
        } else {
            Ok(())
        }
    }

    /// Natural partial order: `s <= t` iff `s = t (s* s)`.
    pub fn natural_leq(&self, s: usize, t: usize) -> bool {
        s == self.mul(t, self.dom(s))
    }

    /// Lowest-index `x` with `x* x = e` and `x x* = f`; `e` itself when `e == f`.
    pub fn d_witness(&self, e: usize, f: usize) -> Result<Option<usize>, SemigroupError> {
        self.check_idempotent(e)?;
        self.check_idempotent(f)?;
        if e == f {
            return Ok(Some(e));
        }
        if self.green.d[e] != self.green.d[f] {
            return Ok(None);
        }
        Ok(self.elements().find(|&x| self.dom(x) == e && self.ran(x) == f))
    }

    /// The local submonoid `eSe` with identity `e`, plus its embedding into `S`.
    pub fn local_submonoid(&self, e: usize) -> Result<LocalSubmonoid, SemigroupError> {
        self.check_idempotent(e)?;
        let mut members: Vec<usize> = self.elements().map(|s| self.mul(self.mul(e, s), e)).collect();
        members.sort_unstable();
        members.dedup();
        let mut position = vec![usize::MAX; self.len()];
        for (i, &s) in members.iter().enumerate() {
            position[s] = i;
        }
        let zero = self.zero.map(|z| position[z]);
        let table = MultiplicationTable::from_fn(members.len(), zero, |a, b| position[self.mul(members[a], members[b])])
            .and_then(|t| t.with_names(members.iter().map(|&s| self.name(s)).collect()))
            .expect("eSe is closed under multiplication");
        let monoid = validate_with(table, Exec::Sequential).expect("local submonoids of inverse semigroups are inverse");
        Ok(LocalSubmonoid { monoid, embedding: members })
    }
}

/// `eSe` as a semigroup in its own right; `embedding[i]` is the index in `S`.
#[derive(Debug, Clone)]
pub struct LocalSubmonoid {
    pub monoid: ValidatedSemigroup,
    pub embedding: Vec<usize>,
}
