//! Domino combinatorics: 2-cores and weights via a two-runner abacus, block
//! membership, Rouquier blocks and the pair `(λ^h, λ^v)` of horizontal and
//! vertical domino counts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Core and weight of a partition. The core is always a staircase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockData {
    pub core: Partition,
    pub weight: usize,
    /// `l` for the core `(l, l-1, …, 1)`.
    pub core_length: usize,
}

impl BlockData {
    pub fn is_rouquier(&self) -> bool {
        self.weight <= self.core_length + 1
    }
}

/// `λ^h` counts horizontal dominoes per row, `λ^v` vertical dominoes per
/// column, in the unique domino tiling of `[λ] \ [core]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoQuotient {
    pub horizontal: Partition,
    pub vertical: Partition,
}

/// Core and weight, read off the beta-numbers of `λ` on a two-runner abacus.
pub fn core_and_weight(lambda: &Partition) -> BlockData {
    let n = lambda.len();
    // beta_k = λ_k + n - k, k = 1..n
    let betas = (1..=n).map(|k| lambda.part(k) + n - k);
    let mut beads = [0usize; 2];
    let mut position_sum = [0usize; 2];
    for b in betas {
        beads[b % 2] += 1;
        position_sum[b % 2] += b / 2;
    }
    let weight = (0..2)
        .map(|r| position_sum[r] - beads[r] * beads[r].saturating_sub(1) / 2)
        .sum();

    let mut core_betas: Vec<usize> = (0..2)
        .flat_map(|r| (0..beads[r]).map(move |p| 2 * p + r))
        .collect();
    core_betas.sort_unstable_by(|a, b| b.cmp(a));
    let core_parts = core_betas
        .iter()
        .enumerate()
        .map(|(k, &b)| b - (n - 1 - k))
        .collect();
    let core = Partition::from_parts_unchecked(core_parts);
    let core_length = core.first();
    debug_assert_eq!(core, Partition::staircase(core_length));
    BlockData {
        core,
        weight,
        core_length,
    }
}

/// Which removable domino to strip first in [`strip_dominoes`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripOrder {
    TopFirst,
    BottomFirst,
}

/// Core and weight by literally removing removable dominoes one at a time.
/// Slow; used to cross-check [`core_and_weight`].
pub fn strip_dominoes(lambda: &Partition, order: StripOrder) -> BlockData {
    let mut parts = lambda.parts().to_vec();
    let mut weight = 0;
    loop {
        let part = |p: &[usize], i: usize| p.get(i).copied().unwrap_or(0);
        let mut candidates = Vec::new();
        for i in 0..parts.len() {
            if parts[i] >= part(&parts, i + 1) + 2 {
                candidates.push((i, false));
            }
            if i + 1 < parts.len() && parts[i] == parts[i + 1] && parts[i + 1] > part(&parts, i + 2)
            {
                candidates.push((i, true));
            }
        }
        let pick = match order {
            StripOrder::TopFirst => candidates.first(),
            StripOrder::BottomFirst => candidates.last(),
        };
        let Some(&(i, vertical)) = pick else { break };
        if vertical {
            parts[i] -= 1;
            parts[i + 1] -= 1;
        } else {
            parts[i] -= 2;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        weight += 1;
    }
    let core = Partition::from_parts_unchecked(parts);
    let core_length = core.first();
    BlockData {
        core,
        weight,
        core_length,
    }
}

pub fn weight_of(lambda: &Partition) -> usize {
    core_and_weight(lambda).weight
}

pub fn same_block(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(core_and_weight(lambda).core == core_and_weight(mu).core)
}

/// Weight at most one more than the length of the core.
pub fn is_rouquier(lambda: &Partition) -> bool {
    core_and_weight(lambda).is_rouquier()
}

/// `(λ^h, λ^v)` for a partition in a Rouquier block.
pub fn two_quotient(lambda: &Partition) -> Result<TwoQuotient> {
    let block = core_and_weight(lambda);
    if !block.is_rouquier() {
        return Err(Error::NotRouquier(lambda.clone()));
    }
    let tiling = unique_domino_tiling(lambda, &block.core)?;
    let rows = lambda.len();
    let cols = lambda.first();
    let mut horizontal = vec![0usize; rows];
    let mut vertical = vec![0usize; cols];
    for d in tiling {
        if d.vertical {
            vertical[d.col - 1] += 1;
        } else {
            horizontal[d.row - 1] += 1;
        }
    }
    let horizontal = Partition::new(horizontal).map_err(|_| {
        Error::Internal(format!(
            "horizontal domino counts of {lambda} do not form a partition"
        ))
    })?;
    let vertical = Partition::new(vertical).map_err(|_| {
        Error::Internal(format!(
            "vertical domino counts of {lambda} do not form a partition"
        ))
    })?;
    debug_assert_eq!(horizontal.size() + vertical.size(), block.weight);
    Ok(TwoQuotient {
        horizontal,
        vertical,
    })
}

/// The partition in the Rouquier block with core `(l, …, 1)` whose domino
/// counts are `(horizontal, vertical)`.
pub fn from_quotient(
    core_length: usize,
    horizontal: &Partition,
    vertical: &Partition,
) -> Result<Partition> {
    let weight = horizontal.size() + vertical.size();
    if weight > core_length + 1 {
        return Err(Error::Precondition(format!(
            "weight {weight} exceeds core length {core_length} + 1"
        )));
    }
    let core = Partition::staircase(core_length);
    let core_conj = core.conjugate();
    let height = core.len().max(horizontal.len()) + 2 * vertical.first() + core_length + 1;
    let mut rows = Vec::new();
    for i in 1..=height {
        let across = core.part(i) + 2 * horizontal.part(i);
        // vertical cells of column j occupy rows core'_j + 1 ..= core'_j + 2 τ_j
        let below = (1..=vertical.len())
            .filter(|&j| i > core_conj.part(j) && i <= core_conj.part(j) + 2 * vertical.part(j))
            .count();
        let len = if below > 0 {
            debug_assert_eq!(across, core.part(i));
            core.part(i) + below
        } else {
            across
        };
        rows.push(len);
    }
    Partition::new(rows).map_err(|e| Error::Internal(format!("quotient does not assemble: {e}")))
}

#[derive(Clone, Copy, Debug)]
struct Domino {
    row: usize,
    col: usize,
    vertical: bool,
}

#[allow(clippy::needless_range_loop)] // rows and columns are 1-indexed
fn unique_domino_tiling(lambda: &Partition, core: &Partition) -> Result<Vec<Domino>> {
    let rows = lambda.len();
    let cols = lambda.first();
    let mut free = vec![vec![false; cols + 2]; rows + 2];
    for i in 1..=rows {
        for j in core.part(i) + 1..=lambda.part(i) {
            free[i][j] = true;
        }
    }
    let mut current = Vec::new();
    let mut found: Vec<Vec<Domino>> = Vec::new();
    tile(&mut free, &mut current, &mut found);
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::Internal(format!(
            "[{lambda}] \\ [{core}] has no domino tiling"
        ))),
        _ => Err(Error::Internal(format!(
            "[{lambda}] \\ [{core}] has several domino tilings"
        ))),
    }
}

fn tile(free: &mut Vec<Vec<bool>>, current: &mut Vec<Domino>, found: &mut Vec<Vec<Domino>>) {
    if found.len() > 1 {
        return;
    }
    let first = free
        .iter()
        .enumerate()
        .find_map(|(i, row)| row.iter().position(|&f| f).map(|j| (i, j)));
    let Some((i, j)) = first else {
        found.push(current.clone());
        return;
    };
    for vertical in [false, true] {
        let (i2, j2) = if vertical { (i + 1, j) } else { (i, j + 1) };
        if i2 < free.len() && j2 < free[i2].len() && free[i2][j2] {
            free[i][j] = false;
            free[i2][j2] = false;
            current.push(Domino {
                row: i,
                col: j,
                vertical,
            });
            tile(free, current, found);
            current.pop();
            free[i][j] = true;
            free[i2][j2] = true;
        }
    }
}
