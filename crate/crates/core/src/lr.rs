//! Littlewood–Richardson coefficients by enumeration of LR skew tableaux,
//! and the Rouquier-block decomposition numbers they determine.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::blocks::{core_and_weight, two_quotient};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `c^outer_{left, right}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LrQuery {
    pub outer: Partition,
    pub left: Partition,
    pub right: Partition,
}

impl LrQuery {
    pub fn new(outer: Partition, left: Partition, right: Partition) -> Self {
        LrQuery { outer, left, right }
    }
}

type Memo = Mutex<HashMap<LrQuery, u64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Number of semistandard fillings of `outer / left` with content `right`
/// whose reverse reading word is a lattice word.
pub fn lr_coefficient(q: &LrQuery) -> u64 {
    if q.outer.size() != q.left.size() + q.right.size()
        || !q.outer.contains(&q.left)
        || !q.outer.contains(&q.right)
    {
        return 0;
    }
    if let Some(&c) = memo().lock().unwrap().get(q) {
        return c;
    }
    let c = count_lr_fillings(&q.outer, &q.left, &q.right);
    memo().lock().unwrap().insert(q.clone(), c);
    c
}

fn count_lr_fillings(outer: &Partition, left: &Partition, right: &Partition) -> u64 {
    // cells in reverse reading order: rows top to bottom, each right to left
    let cells: Vec<(usize, usize)> = (1..=outer.len())
        .flat_map(|i| {
            (left.part(i) + 1..=outer.part(i))
                .rev()
                .map(move |j| (i, j))
        })
        .collect();
    let mut state = Filling {
        outer,
        left,
        content: right.parts(),
        grid: vec![vec![0usize; outer.first() + 2]; outer.len() + 2],
        used: vec![0usize; right.len() + 1],
    };
    state.count(&cells, 0)
}

struct Filling<'a> {
    outer: &'a Partition,
    left: &'a Partition,
    content: &'a [usize],
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl Filling<'_> {
    fn count(&mut self, cells: &[(usize, usize)], k: usize) -> u64 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        // value to the right (already placed) bounds from above
        let hi = if j < self.outer.part(i) {
            self.grid[i][j + 1]
        } else {
            self.content.len()
        };
        // strictly larger than the value above when that cell is part of the skew shape
        let lo = if i > 1 && j > self.left.part(i - 1) {
            self.grid[i - 1][j] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi.min(self.content.len()) {
            if self.used[v] >= self.content[v - 1] {
                continue;
            }
            if v > 1 && self.used[v] + 1 > self.used[v - 1] {
                continue;
            }
            self.used[v] += 1;
            self.grid[i][j] = v;
            total += self.count(cells, k + 1);
            self.grid[i][j] = 0;
            self.used[v] -= 1;
        }
        total
    }
}

/// Every `α` with `c^α_{left, right} > 0`, with its coefficient.
pub fn lr_support(left: &Partition, right: &Partition) -> Vec<(Partition, u64)> {
    let n = left.size() + right.size();
    Partition::all(n)
        .into_iter()
        .filter(|a| a.contains(left) && a.contains(right))
        .filter_map(|a| {
            let c = lr_coefficient(&LrQuery::new(a.clone(), left.clone(), right.clone()));
            (c > 0).then_some((a, c))
        })
        .collect()
}

/// `[S^λ : D^μ] = c^{μ^h}_{λ^h λ^v}` inside a Rouquier block.
pub fn rouquier_decomposition_number(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    if !mu.is_regular(2) {
        return Err(Error::NotRegular(mu.clone()));
    }
    let (bl, bm) = (core_and_weight(lambda), core_and_weight(mu));
    if bl.core != bm.core {
        return Err(Error::DifferentBlocks(lambda.clone(), mu.clone()));
    }
    if !bl.is_rouquier() {
        return Err(Error::NotRouquier(lambda.clone()));
    }
    let ql = two_quotient(lambda)?;
    let qm = two_quotient(mu)?;
    debug_assert!(qm.vertical.is_empty());
    Ok(lr_coefficient(&LrQuery::new(
        qm.horizontal,
        ql.horizontal,
        ql.vertical,
    )))
}
