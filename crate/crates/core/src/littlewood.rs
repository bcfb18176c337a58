//! Littlewood–Richardson coefficients by direct enumeration of LR skew tableaux.
//!
//! A tableau of shape `ν/λ` and content `μ` is built one letter at a time.
//! Letter `i` occupies a horizontal strip added to the current shape, and
//! the reverse reading word must stay a ballot sequence: for every row `r`,
//! the number of `i`s in rows `≤ r` is at most the number of `i−1`s in rows
//! `< r`. Since entries are determined by how many copies of each letter
//! sit in each row, a tableau is stored as that count matrix.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::{BigCount, Partition};

/// A Littlewood–Richardson skew tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrTableau {
    pub outer: Partition,
    pub inner: Partition,
    /// `counts[i][j]`: copies of letter `i+1` placed in row `j+1`.
    pub counts: Vec<Vec<u32>>,
}

impl LrTableau {
    /// Copies of letter `letter` in row `row`, both 1-based; zero out of range.
    pub fn count(&self, letter: usize, row: usize) -> u32 {
        if letter == 0 || row == 0 {
            return 0;
        }
        self.counts
            .get(letter - 1)
            .and_then(|r| r.get(row - 1))
            .copied()
            .unwrap_or(0)
    }
}

struct Search<'a, F> {
    content: &'a [u32],
    max_rows: usize,
    bound: Option<&'a [u32]>,
    shape: Vec<u32>,
    counts: Vec<Vec<u32>>,
    inner: Partition,
    emit: F,
}

impl<F: FnMut(&LrTableau)> Search<'_, F> {
    fn run(&mut self, letter: usize) {
        if letter == self.content.len() {
            let t = LrTableau {
                outer: Partition::from_sorted(self.shape.clone()),
                inner: self.inner.clone(),
                counts: self.counts.clone(),
            };
            (self.emit)(&t);
            return;
        }
        let old = self.shape.clone();
        let rows = (old.iter().take_while(|&&r| r > 0).count() + 1).min(self.max_rows);
        self.counts.push(vec![0; self.max_rows]);
        self.place(letter, 0, rows, self.content[letter], &old, 0, 0);
        self.counts.pop();
        self.shape = old;
    }

    /// Chooses how many copies of `letter` go into `row`, then recurses on the next row.
    /// `placed` counts copies of `letter` in rows above `row`; `prev_above` counts copies
    /// of `letter-1` in rows strictly above `row`.
    #[allow(clippy::too_many_arguments)]
    fn place(
        &mut self,
        letter: usize,
        row: usize,
        rows: usize,
        remaining: u32,
        old: &[u32],
        placed: u32,
        prev_above: u32,
    ) {
        if remaining == 0 {
            self.run(letter + 1);
            return;
        }
        if row >= rows {
            return;
        }
        let cur = old[row];
        let mut cap = remaining;
        if row > 0 {
            cap = cap.min(old[row - 1] - cur);
        }
        if let Some(b) = self.bound {
            let limit = b.get(row).copied().unwrap_or(0);
            if limit < cur {
                return;
            }
            cap = cap.min(limit - cur);
        }
        if letter > 0 {
            // ballot condition for rows ≤ row
            let allowed = prev_above.saturating_sub(placed);
            if prev_above < placed {
                return;
            }
            cap = cap.min(allowed);
        }
        let prev_here = if letter > 0 {
            self.counts[letter - 1][row]
        } else {
            0
        };
        for a in (0..=cap).rev() {
            self.shape[row] = cur + a;
            self.counts[letter][row] = a;
            self.place(
                letter,
                row + 1,
                rows,
                remaining - a,
                old,
                placed + a,
                prev_above + prev_here,
            );
        }
        self.shape[row] = cur;
        self.counts[letter][row] = 0;
    }
}

/// Calls `emit` on every LR tableau with inner shape `inner` and content `content`
/// whose outer shape has at most `max_rows` rows and, when `bound` is given, fits
/// inside `bound`.
pub fn for_each_lr_tableau<F: FnMut(&LrTableau)>(
    inner: &Partition,
    content: &Partition,
    max_rows: usize,
    bound: Option<&Partition>,
    emit: F,
) {
    if inner.len() > max_rows {
        return;
    }
    let mut shape = inner.padded(max_rows);
    shape.push(0);
    let mut s = Search {
        content: content.parts(),
        max_rows,
        bound: bound.map(|b| b.parts()),
        shape,
        counts: Vec::new(),
        inner: inner.clone(),
        emit,
    };
    s.run(0);
}

/// All LR tableaux of shape `·/inner` and content `content` with at most `max_rows` rows.
pub fn lr_tableaux(inner: &Partition, content: &Partition, max_rows: usize) -> Vec<LrTableau> {
    let mut out = Vec::new();
    for_each_lr_tableau(inner, content, max_rows, None, |t| out.push(t.clone()));
    out
}

/// `c^ν_{λμ}`: number of LR tableaux of shape `ν/λ` with content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigCount {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return BigCount::zero();
    }
    let mut n = BigUint::zero();
    for_each_lr_tableau(lambda, mu, nu.len(), Some(nu), |t| {
        if &t.outer == nu {
            n += 1u32;
        }
    });
    n
}

/// `s_λ · s_μ` as a map from `ν` to `c^ν_{λμ}`, dropping `ν` with more than `max_rows` rows.
pub fn lr_product(
    lambda: &Partition,
    mu: &Partition,
    max_rows: usize,
) -> BTreeMap<Partition, BigCount> {
    // the larger factor as inner shape keeps the search shallow
    let (inner, content) = if lambda.size() >= mu.size() {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let mut out: BTreeMap<Partition, BigCount> = BTreeMap::new();
    for_each_lr_tableau(inner, content, max_rows, None, |t| {
        *out.entry(t.outer.clone()).or_insert_with(BigCount::zero) += BigCount::one();
    });
    out
}
