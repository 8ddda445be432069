//! Finite IP loops with identity 0: validation, classification, text format.

mod automorphism;
mod catalog;
mod enumerate;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::linalg::{Field, Vector};
use crate::report::{CheckReport, Outcome, Witness};

pub use automorphism::{automorphisms, generators};
pub use catalog::{catalog, CATALOG_NAMES};
pub use enumerate::{canonical_form, enumerate_ip_loops, PropertyFilter, MAX_ENUMERATION_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QuasigroupError {
    #[error("Cayley table is empty or not square")]
    NotSquare,
    #[error("not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("element 0 is not a two-sided identity")]
    NoIdentity,
    #[error("inverse property fails at p = {p}, q = {q}")]
    InversePropertyFails { p: usize, q: usize },
    #[error("cannot parse Cayley table: {0}")]
    Parse(String),
    #[error("enumeration is capped at order {max}, got {order}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
}

/// A finite loop with identity 0 and the two-sided inverse property.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quasigroup {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PropertyFlags {
    pub flexible: bool,
    pub alternative: bool,
    pub moufang: bool,
    pub commutative: bool,
    pub associative: bool,
}

impl Quasigroup {
    /// Validates a Cayley table: Latin, identity at 0, inverse property.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Self, QuasigroupError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(QuasigroupError::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some(msg) = not_permutation(row.iter().copied(), n) {
                return Err(QuasigroupError::NotLatinSquare(format!("row {i} {msg}")));
            }
        }
        for j in 0..n {
            if let Some(msg) = not_permutation(rows.iter().map(|r| r[j]), n) {
                return Err(QuasigroupError::NotLatinSquare(format!("column {j} {msg}")));
            }
        }
        if (0..n).any(|j| rows[0][j] != j || rows[j][0] != j) {
            return Err(QuasigroupError::NoIdentity);
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        let inv = (0..n).map(|p| (0..n).find(|&x| table[p * n + x] == 0).expect("Latin row contains 0")).collect();
        let q = Quasigroup { order: n, table, inv };
        if let Some((p, x)) = q.inverse_property_failure() {
            return Err(QuasigroupError::InversePropertyFails { p, q: x });
        }
        Ok(q)
    }

    pub(crate) fn from_validated(order: usize, table: Vec<usize>) -> Self {
        let inv = (0..order).map(|p| (0..order).find(|&x| table[p * order + x] == 0).expect("Latin row contains 0")).collect();
        Quasigroup { order, table, inv }
    }

    fn inverse_property_failure(&self) -> Option<(usize, usize)> {
        for p in 0..self.order {
            for q in 0..self.order {
                let left = self.mul(self.inv[p], self.mul(p, q));
                let right = self.mul(self.mul(q, p), self.inv[p]);
                if left != q || right != q {
                    return Some((p, q));
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, p: usize, q: usize) -> usize {
        self.table[p * self.order + q]
    }

    pub fn inv(&self, p: usize) -> usize {
        self.inv[p]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub(crate) fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    fn all2(&self, f: impl Fn(usize, usize) -> bool) -> bool {
        self.elements().all(|p| self.elements().all(|q| f(p, q)))
    }

    fn all3(&self, f: impl Fn(usize, usize, usize) -> bool) -> bool {
        self.elements().all(|p| self.all2(|q, r| f(p, q, r)))
    }

    pub fn is_flexible(&self) -> bool {
        self.all2(|p, q| self.mul(p, self.mul(q, p)) == self.mul(self.mul(p, q), p))
    }

    pub fn is_alternative(&self) -> bool {
        self.is_flexible()
            && self.all2(|p, q| {
                self.mul(p, self.mul(p, q)) == self.mul(self.mul(p, p), q) && self.mul(p, self.mul(q, q)) == self.mul(self.mul(p, q), q)
            })
    }

    /// `p(q(pr)) = ((pq)p)r` for all triples.
    pub fn is_moufang(&self) -> bool {
        self.all3(|p, q, r| {
            let (lhs, rhs) = self.moufang_sides(0, p, q, r);
            lhs == rhs
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.all2(|p, q| self.mul(p, q) == self.mul(q, p))
    }

    pub fn is_associative(&self) -> bool {
        self.all3(|p, q, r| self.mul(p, self.mul(q, r)) == self.mul(self.mul(p, q), r))
    }

    pub fn classify(&self) -> PropertyFlags {
        let flags = PropertyFlags {
            flexible: self.is_flexible(),
            alternative: self.is_alternative(),
            moufang: self.is_moufang(),
            commutative: self.is_commutative(),
            associative: self.is_associative(),
        };
        debug_assert!(!flags.associative || flags.moufang);
        debug_assert!(!flags.moufang || flags.flexible);
        flags
    }

    /// Both sides of the three Moufang identities:
    /// 0: `p(q(pr)) = ((pq)p)r`, 1: `((pq)r)q = p(q(rq))`, 2: `(pq)(rp) = (p(qr))p`.
    fn moufang_sides(&self, which: usize, p: usize, q: usize, r: usize) -> (usize, usize) {
        let m = |a, b| self.mul(a, b);
        match which {
            0 => (m(p, m(q, m(p, r))), m(m(m(p, q), p), r)),
            1 => (m(m(m(p, q), r), q), m(p, m(q, m(r, q)))),
            _ => (m(m(p, q), m(r, p)), m(m(p, m(q, r)), p)),
        }
    }

    /// Evaluates the three Moufang identities on all triples and checks that
    /// they hold or fail together.
    pub fn moufang_equivalence_check(&self) -> CheckReport {
        const ANCHORS: [&str; 3] = ["p(q(pr)) = ((pq)p)r", "((pq)r)q = p(q(rq))", "(pq)(rp) = (p(qr))p"];
        let mut report = CheckReport::new("moufang-equivalence");
        let n = self.order;
        let basis = |x| Vector::basis(Field::Rational, n, x);
        let mut truth = [true; 3];
        for (k, anchor) in ANCHORS.iter().enumerate() {
            let mut outcome = Outcome::Holds;
            'search: for p in 0..n {
                for q in 0..n {
                    for r in 0..n {
                        let (lhs, rhs) = self.moufang_sides(k, p, q, r);
                        if lhs != rhs {
                            outcome =
                                Outcome::Witness(Witness { grades: vec![p, q, r], basis: vec![0, 0, 0], lhs: basis(lhs), rhs: basis(rhs) });
                            break 'search;
                        }
                    }
                }
            }
            truth[k] = outcome.holds();
            report.observe(&format!("identity-{}", k + 1), anchor, outcome);
        }
        report.assert(
            "equivalent",
            "identities 1, 2, 3 hold or fail together",
            truth[0] == truth[1] && truth[1] == truth[2],
            format!("truth values {truth:?}"),
        );
        report
    }

    /// Parses the Cayley text format: first line `n`, then `n` rows of indices.
    pub fn parse_cayley(text: &str) -> Result<Self, QuasigroupError> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| QuasigroupError::Parse("missing order line".into()))?
            .parse()
            .map_err(|e| QuasigroupError::Parse(format!("order: {e}")))?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|e| QuasigroupError::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.len() != n {
            return Err(QuasigroupError::Parse(format!("expected {n} rows, found {}", rows.len())));
        }
        Self::from_cayley_table(&rows)
    }

    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.table.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

fn not_permutation(items: impl Iterator<Item = usize>, n: usize) -> Option<String> {
    let mut seen = vec![false; n];
    for x in items {
        if x >= n {
            return Some(format!("has entry {x} out of range"));
        }
        if std::mem::replace(&mut seen[x], true) {
            return Some(format!("repeats {x}"));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z3_inverses() {
        let z3 = Quasigroup::from_cayley_table(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(z3.inverses(), &[0, 2, 1]);
    }

    #[test]
    fn rejects_repeated_entry() {
        let bad = [vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        assert!(matches!(Quasigroup::from_cayley_table(&bad), Err(QuasigroupError::NotLatinSquare(_))));
    }

    #[test]
    fn rejects_missing_identity() {
        let bad = [vec![1, 0], vec![0, 1]];
        assert_eq!(Quasigroup::from_cayley_table(&bad), Err(QuasigroupError::NoIdentity));
    }

    #[test]
    fn cayley_text_round_trip() {
        let text = "# Z2\n2\n0 1\n1 0 # last row\n";
        let q = Quasigroup::parse_cayley(text).unwrap();
        assert_eq!(q.to_cayley_text(), "2\n0 1\n1 0\n");
        assert_eq!(Quasigroup::parse_cayley(&q.to_cayley_text()).unwrap(), q);
    }
}
