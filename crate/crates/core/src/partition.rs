//! Partitions, Young diagrams and the node combinatorics used throughout the
//! crate: conjugation, dominance, residues, ladders, regularisation and the
//! residue-`i` node operations `λ^{+i}` / `λ^{-i}`.
//!
//! Rows and columns are 1-based, matching the usual `(i, j)` node notation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A residue modulo 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Residue(u8);

impl Residue {
    pub const ZERO: Residue = Residue(0);
    pub const ONE: Residue = Residue(1);

    /// Reduces an arbitrary integer mod 2.
    pub fn of(value: i64) -> Self {
        Residue(value.rem_euclid(2) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// The other residue, `1 - i`.
    pub fn flip(self) -> Self {
        Residue(1 - self.0)
    }

    pub fn both() -> [Residue; 2] {
        [Residue::ZERO, Residue::ONE]
    }
}

impl TryFrom<u8> for Residue {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, Self::Error> {
        if v < 2 {
            Ok(Residue(v))
        } else {
            Err(format!("residue must be 0 or 1, got {v}"))
        }
    }
}

impl From<Residue> for u8 {
    fn from(r: Residue) -> u8 {
        r.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A node `(row, col)` of `N × N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "nodes are 1-based");
        Node { row, col }
    }

    /// `(col - row) mod 2`.
    pub fn residue(self) -> Residue {
        Residue::of(self.col as i64 - self.row as i64)
    }

    /// Index of the ladder containing this node: `row + col - 1`.
    pub fn ladder(self) -> usize {
        self.row + self.col - 1
    }

    pub fn transpose(self) -> Node {
        Node {
            row: self.col,
            col: self.row,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The residue shared by every node of ladder `L_l`.
pub fn ladder_residue(l: usize) -> Residue {
    Residue::of(l as i64 + 1)
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeroes are never stored, so structural equality is partition
/// equality. The derived `Ord` is the lexicographic order, which refines
/// dominance.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeroes. Fails if the parts
    /// increase anywhere.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary (non-negative) row lengths into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_parts_unchecked(parts)
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase `(l, l-1, …, 1)`.
    pub fn staircase(l: usize) -> Self {
        Partition {
            parts: (1..=l).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of non-zero parts, `λ'_1`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` (1-based); zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ_1`, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn contains_node(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    /// Whether `[other] ⊆ [self]`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Node::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance `self ⊵ other`; both must have the same size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Partition) -> bool {
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=rows {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Addable nodes ordered by row, optionally restricted to one residue.
    pub fn addable_nodes(&self, residue: Option<Residue>) -> Vec<Node> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Node::new(i, self.part(i) + 1))
            .filter(|n| residue.is_none_or(|r| n.residue() == r))
            .collect()
    }

    /// Removable nodes ordered by row, optionally restricted to one residue.
    pub fn removable_nodes(&self, residue: Option<Residue>) -> Vec<Node> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Node::new(i, self.part(i)))
            .filter(|n| residue.is_none_or(|r| n.residue() == r))
            .collect()
    }

    pub(crate) fn with_node_added(&self, node: Node) -> Partition {
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.resize(node.row, 0);
        }
        parts[node.row - 1] += 1;
        debug_assert_eq!(parts[node.row - 1], node.col);
        Partition::from_parts_unchecked(parts)
    }

    pub(crate) fn with_node_removed(&self, node: Node) -> Partition {
        let mut parts = self.parts.clone();
        debug_assert_eq!(parts[node.row - 1], node.col);
        parts[node.row - 1] -= 1;
        Partition::from_parts_unchecked(parts)
    }

    /// Adds every node of `nodes` (each must be addable, pairwise non-adjacent).
    pub(crate) fn with_nodes_added(&self, nodes: &[Node]) -> Partition {
        let mut parts = self.parts.clone();
        for n in nodes {
            if n.row > parts.len() {
                parts.resize(n.row, 0);
            }
            parts[n.row - 1] += 1;
        }
        Partition::from_parts_unchecked(parts)
    }

    /// `λ^{+i}`: add every addable node of residue `i`.
    pub fn add_residue(&self, i: Residue) -> Partition {
        self.with_nodes_added(&self.addable_nodes(Some(i)))
    }

    /// `λ^{-i}`: remove every removable node of residue `i`.
    pub fn remove_residue(&self, i: Residue) -> Partition {
        let mut parts = self.parts.clone();
        for n in self.removable_nodes(Some(i)) {
            parts[n.row - 1] -= 1;
        }
        Partition::from_parts_unchecked(parts)
    }

    /// Nodes of `L_l ∩ [λ]`, ordered by row.
    pub fn ladder_nodes(&self, l: usize) -> Vec<Node> {
        (1..=l.min(self.len()))
            .map(|i| Node::new(i, l + 1 - i))
            .filter(|&n| self.contains_node(n))
            .collect()
    }

    pub fn ladder(&self, l: usize) -> LadderSegmentation {
        let mut segments: Vec<Vec<Node>> = Vec::new();
        for node in self.ladder_nodes(l) {
            match segments.last_mut() {
                Some(seg) if seg.last().map(|n| n.row + 1) == Some(node.row) => seg.push(node),
                _ => segments.push(vec![node]),
            }
        }
        LadderSegmentation { index: l, segments }
    }

    /// Largest ladder index meeting `[λ]`.
    pub fn max_ladder(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i + p)
            .max()
            .unwrap_or(0)
    }

    /// The smallest `l` whose ladder is disconnected, found by scanning
    /// ladders. Agrees with [`Partition::gap_pair`].
    pub fn has_disconnected_ladder(&self) -> Option<usize> {
        let found = (1..=self.max_ladder()).find(|&l| self.ladder(l).is_disconnected());
        debug_assert_eq!(found.is_some(), self.gap_pair().is_some(), "{self}");
        found
    }

    /// Some `a < b` with `λ_a − λ_{a+1} ≥ 2` and `λ_b = λ_{b+1} > 0`
    /// (smallest `a`, then smallest `b`), if any exist.
    pub fn gap_pair(&self) -> Option<(usize, usize)> {
        let a = (1..=self.len()).find(|&a| self.part(a) >= self.part(a + 1) + 2)?;
        let b = (a + 1..self.len()).find(|&b| self.part(b) == self.part(b + 1))?;
        Some((a, b))
    }

    /// `λ^reg`: every ladder's nodes moved to the topmost positions.
    pub fn regularise(&self) -> Partition {
        let top = self.max_ladder();
        let counts: Vec<usize> = (1..=top).map(|l| self.ladder_nodes(l).len()).collect();
        // row i of the result holds one node from every ladder with at least i nodes
        let rows = counts.iter().copied().max().unwrap_or(0);
        let parts = (1..=rows)
            .map(|i| counts.iter().filter(|&&c| c >= i).count())
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    /// No `e` equal non-zero consecutive parts.
    pub fn is_regular(&self, e: usize) -> bool {
        assert!(e >= 2);
        !self.parts.windows(e).any(|w| w[0] == w[e - 1])
    }

    /// No gap of `e` or more between consecutive parts (with `λ_{k+1} = 0`).
    pub fn is_restricted(&self, e: usize) -> bool {
        assert!(e >= 2);
        (1..=self.len()).all(|i| self.part(i) - self.part(i + 1) < e)
    }

    /// For every `i`, `λ_i + λ_{i+1}` is odd or `λ_{i+1} = 0`.
    pub fn is_alternating(&self) -> bool {
        self.parts.windows(2).all(|w| (w[0] + w[1]) % 2 == 1)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// All 2-regular partitions of `n`, in decreasing lexicographic order.
    pub fn all_regular(n: usize) -> Vec<Partition> {
        Self::all(n)
            .into_iter()
            .filter(|p| p.is_regular(2))
            .collect()
    }
}

fn fill_partitions(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=n.min(max)).rev() {
        current.push(p);
        fill_partitions(n - p, p, current, out);
        current.pop();
    }
}

/// Compares by size first, then lexicographically.
pub fn graded_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| a.cmp(b))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| match tok.trim().parse::<usize>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(Error::ParsePartition {
                    token: tok.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The nodes of `L_l(λ)`, split into maximal runs of consecutive ladder nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderSegmentation {
    pub index: usize,
    pub segments: Vec<Vec<Node>>,
}

impl LadderSegmentation {
    pub fn is_disconnected(&self) -> bool {
        self.segments.len() >= 2
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Node> {
        self.segments.iter().flatten()
    }

    pub fn node_count(&self) -> usize {
        self.segments.iter().map(Vec::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("4,2,2,2").conjugate(), p("4,4,1,1"));
        let big = p("13,8,7,4,3,2,1,1,1,1,1");
        assert_eq!(big.conjugate(), p("11,6,5,4,3,3,3,2,1,1,1,1,1"));
        assert_eq!(big.conjugate().conjugate(), big);
    }

    #[test]
    fn dominance_examples() {
        assert!(p("3,1").dominates(&p("2,2")).unwrap());
        assert!(!p("2,2").dominates(&p("3,1")).unwrap());
        assert!(p("2,2").dominates(&p("2,2")).unwrap());
        assert!(matches!(
            p("2").dominates(&p("2,1")),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn residues() {
        assert_eq!(Node::new(1, 1).residue(), Residue::ZERO);
        assert_eq!(Node::new(1, 2).residue(), Residue::ONE);
        assert_eq!(Node::new(2, 1).residue(), Residue::ONE);
    }

    #[test]
    fn addable_and_removable() {
        assert_eq!(
            Partition::empty().addable_nodes(None),
            vec![Node::new(1, 1)]
        );
        assert_eq!(p("2,2").removable_nodes(None), vec![Node::new(2, 2)]);
        assert_eq!(
            p("2,2").addable_nodes(None),
            vec![Node::new(1, 3), Node::new(3, 1)]
        );
        assert_eq!(p("2,2").addable_nodes(Some(Residue::ONE)), vec![]);
    }

    #[test]
    fn ladders_of_4_2_2_2() {
        let lam = p("4,2,2,2");
        let l4 = lam.ladder(4);
        assert_eq!(
            l4.nodes().copied().collect::<Vec<_>>(),
            vec![Node::new(1, 4), Node::new(3, 2), Node::new(4, 1)]
        );
        assert_eq!(l4.segments.len(), 2);
        assert!(l4.is_disconnected());
        let l5 = lam.ladder(5);
        assert_eq!(l5.segments, vec![vec![Node::new(4, 2)]]);
        assert!(!lam.ladder(9).is_disconnected());
        assert_eq!(lam.ladder(9).node_count(), 0);
    }

    #[test]
    fn disconnected_ladders() {
        assert_eq!(p("4,2,2,2").has_disconnected_ladder(), Some(4));
        assert_eq!(p("5,5,3,3").has_disconnected_ladder(), Some(6));
        assert_eq!(p("5,3,2").has_disconnected_ladder(), None);
        assert_eq!(p("2,2").has_disconnected_ladder(), None);
    }

    #[test]
    fn regularisation_examples() {
        assert_eq!(p("4,2,2,2").regularise(), p("5,3,2"));
        assert_eq!(p("4,4,2,2").regularise(), p("5,4,2,1"));
        assert_eq!(p("5,3,2").regularise(), p("5,3,2"));
        assert_eq!(Partition::empty().regularise(), Partition::empty());
    }

    #[test]
    fn regular_and_restricted() {
        assert!(p("5,3,2").is_regular(2));
        assert!(!p("2,2").is_regular(2));
        // the final gap λ_2 − λ_3 = 2 counts: (2,2)′ = (2,2) is not regular
        assert!(!p("2,2").is_restricted(2));
        assert!(p("2,1,1").is_restricted(2));
        assert!(Partition::empty().is_regular(2));
        assert!(Partition::empty().is_restricted(2));
        assert!(!p("3").is_restricted(2));
    }

    #[test]
    fn residue_operations() {
        assert_eq!(p("5,3,3,2").add_residue(Residue::ONE), p("6,3,3,3"));
        assert_eq!(p("6,3,3,3").add_residue(Residue::ZERO), p("7,4,3,3,1"));
        assert_eq!(Partition::empty().add_residue(Residue::ZERO), p("1"));
        assert_eq!(
            Partition::empty().add_residue(Residue::ONE),
            Partition::empty()
        );
        assert_eq!(p("2,1").remove_residue(Residue::ONE), p("1"));
    }

    #[test]
    fn alternating() {
        assert!(p("2,1").is_alternating());
        assert!(!p("2,2").is_alternating());
        assert!(Partition::empty().is_alternating());
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(
            p("13,8,7,4,3,2,1,1,1,1,1").to_string(),
            "13,8,7,4,3,2,1,1,1,1,1"
        );
        assert_eq!(Partition::empty().to_string(), "-");
        match "3,x,1".parse::<Partition>() {
            Err(Error::ParsePartition { token }) => assert_eq!(token, "x"),
            other => panic!("{other:?}"),
        }
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::all(20).len(), 627);
        // distinct parts: 1,1,1,2,2,3,4,5,6,8,10
        let reg: Vec<usize> = (0..=10).map(|n| Partition::all_regular(n).len()).collect();
        assert_eq!(reg, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
        let all6 = Partition::all(6);
        assert!(all6.windows(2).all(|w| w[0] > w[1]));
    }
}
