//! Exhaustive enumeration of IP loops up to isomorphism.
//!
//! Every IP loop is isomorphic to one whose inverse map pairs `1↔2, 3↔4, …`
//! and fixes the remaining elements, so the search runs once per number of
//! inverse pairs with that inverse map pinned. Filling a cell `p·q = r`
//! forces `p⁻¹·r = q` and `r·q⁻¹ = p`; these consequences are propagated
//! eagerly. Survivors are deduplicated by [`canonical_form`].

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{PropertyFlags, Quasigroup, QuasigroupError};

pub const MAX_ENUMERATION_ORDER: usize = 8;

const EMPTY: u8 = u8::MAX;

/// Optional constraints on the flags of enumerated loops.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyFilter {
    pub flexible: Option<bool>,
    pub alternative: Option<bool>,
    pub moufang: Option<bool>,
    pub commutative: Option<bool>,
    pub associative: Option<bool>,
}

impl PropertyFilter {
    pub fn accepts(&self, f: &PropertyFlags) -> bool {
        let ok = |want: Option<bool>, have: bool| want.is_none_or(|w| w == have);
        ok(self.flexible, f.flexible)
            && ok(self.alternative, f.alternative)
            && ok(self.moufang, f.moufang)
            && ok(self.commutative, f.commutative)
            && ok(self.associative, f.associative)
    }
}

#[derive(Clone)]
struct State {
    n: usize,
    inv: Vec<usize>,
    cells: Vec<u8>,
    row_used: Vec<u16>,
    col_used: Vec<u16>,
}

impl State {
    fn new(n: usize, pairs: usize) -> Option<Self> {
        let mut inv: Vec<usize> = (0..n).collect();
        for k in 0..pairs {
            inv.swap(2 * k + 1, 2 * k + 2);
        }
        let mut s = State { n, inv, cells: vec![EMPTY; n * n], row_used: vec![0; n], col_used: vec![0; n] };
        for x in 0..n {
            if !s.assign(0, x, x) || !s.assign(x, 0, x) {
                return None;
            }
        }
        Some(s)
    }

    /// Sets `p·q = r` and everything the inverse property forces from it.
    fn assign(&mut self, p: usize, q: usize, r: usize) -> bool {
        let mut queue = vec![(p, q, r)];
        while let Some((p, q, r)) = queue.pop() {
            let cell = &mut self.cells[p * self.n + q];
            if *cell != EMPTY {
                if *cell as usize != r {
                    return false;
                }
                continue;
            }
            let bit = 1u16 << r;
            if self.row_used[p] & bit != 0 || self.col_used[q] & bit != 0 {
                return false;
            }
            *cell = r as u8;
            self.row_used[p] |= bit;
            self.col_used[q] |= bit;
            queue.push((self.inv[p], r, q));
            queue.push((r, self.inv[q], p));
        }
        true
    }

    fn first_empty(&self) -> Option<usize> {
        self.cells.iter().position(|&c| c == EMPTY)
    }

    fn search(&self, out: &mut Vec<Vec<usize>>) {
        let Some(idx) = self.first_empty() else {
            out.push(self.cells.iter().map(|&c| c as usize).collect());
            return;
        };
        let (p, q) = (idx / self.n, idx % self.n);
        let free = !(self.row_used[p] | self.col_used[q]);
        for r in 0..self.n {
            if free & (1 << r) != 0 {
                let mut next = self.clone();
                if next.assign(p, q, r) {
                    next.search(out);
                }
            }
        }
    }

    /// Partial states with row 1 complete, used as independent work items.
    fn row_one_completions(&self, out: &mut Vec<State>) {
        match self.first_empty() {
            Some(idx) if idx / self.n == 1 => {
                let q = idx % self.n;
                let free = !(self.row_used[1] | self.col_used[q]);
                for r in 0..self.n {
                    if free & (1 << r) != 0 {
                        let mut next = self.clone();
                        if next.assign(1, q, r) {
                            next.row_one_completions(out);
                        }
                    }
                }
            }
            _ => out.push(self.clone()),
        }
    }
}

/// Lexicographically smallest relabeled table over all relabelings fixing 0.
pub fn canonical_form(q: &Quasigroup) -> Vec<usize> {
    let n = q.order();
    let table = q.flat_table();
    let mut best: Option<Vec<usize>> = None;
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut relabeled = vec![0; n * n];
    permute_tail(&mut sigma, 1, &mut |sigma| {
        for i in 0..n {
            for j in 0..n {
                relabeled[sigma[i] * n + sigma[j]] = sigma[table[i * n + j]];
            }
        }
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled.clone());
        }
    });
    best.expect("at least the identity relabeling")
}

fn permute_tail(xs: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k + 1 >= xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute_tail(xs, k + 1, f);
        xs.swap(k, i);
    }
}

/// All IP loops of order `n` up to isomorphism that pass `filter`, sorted by
/// canonical form. Each is returned in its canonical labeling.
pub fn enumerate_ip_loops(n: usize, filter: &PropertyFilter) -> Result<Vec<Quasigroup>, QuasigroupError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(QuasigroupError::OrderTooLarge { order: n, max: MAX_ENUMERATION_ORDER });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut starts = Vec::new();
    for pairs in 0..=(n - 1) / 2 {
        if let Some(s) = State::new(n, pairs) {
            if n > 1 {
                s.row_one_completions(&mut starts);
            } else {
                starts.push(s);
            }
        }
    }
    let forms: BTreeSet<Vec<usize>> = starts
        .par_iter()
        .flat_map_iter(|s| {
            let mut tables = Vec::new();
            s.search(&mut tables);
            tables.into_iter().map(|t| canonical_form(&Quasigroup::from_validated(n, t)))
        })
        .collect();
    let loops = forms.into_iter().map(|t| Quasigroup::from_validated(n, t)).filter(|q| filter.accepts(&q.classify())).collect::<Vec<_>>();
    debug_assert!(loops.iter().all(|q| Quasigroup::from_cayley_table(&q.rows()).is_ok()));
    Ok(loops)
}
