//! Words in the divided powers `f_i^{(a)}`, the staircase operator built
//! from a pair `[μ] ⊆ [λ]`, and its combinatorial degree.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::vector::FockVector;
use crate::error::{Error, Result};
use crate::partition::{ladder_residue, Node, Partition, Residue};

/// `f_{i_k}^{(a_k)} ⋯ f_{i_1}^{(a_1)}`, stored in application order: the
/// first step is applied first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LadderWord {
    pub steps: Vec<(Residue, usize)>,
}

impl LadderWord {
    pub fn new(steps: Vec<(Residue, usize)>) -> Result<Self> {
        if let Some(&(_, a)) = steps.iter().find(|(_, a)| *a == 0) {
            return Err(Error::Precondition(format!(
                "divided power multiplicity {a} must be at least 1"
            )));
        }
        Ok(LadderWord { steps })
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.steps.iter().map(|&(_, a)| a).collect()
    }

    pub fn apply(&self, x: &FockVector) -> FockVector {
        self.steps
            .iter()
            .fold(x.clone(), |acc, &(i, a)| acc.apply_divided_power(i, a))
    }
}

/// `i:a` pairs separated by commas, in application order; e.g. `1:4,0:3,1:2`.
impl FromStr for LadderWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(LadderWord::default());
        }
        let steps = s
            .split(',')
            .map(|tok| {
                let bad = || Error::ParsePartition {
                    token: tok.to_string(),
                };
                let (i, a) = tok.trim().split_once(':').ok_or_else(bad)?;
                let i: u8 = i.parse().map_err(|_| bad())?;
                let a: usize = a.parse().map_err(|_| bad())?;
                let i = Residue::try_from(i).map_err(|_| bad())?;
                Ok((i, a))
            })
            .collect::<Result<Vec<_>>>()?;
        LadderWord::new(steps)
    }
}

impl fmt::Display for LadderWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("-");
        }
        for (k, (i, a)) in self.steps.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}:{a}")?;
        }
        Ok(())
    }
}

/// The LLT monomial for a 2-regular `μ`: for each ladder `l` in increasing
/// order, `f^{(k_l)}` of the ladder's residue where `k_l = |L_l(μ)|`.
pub fn ladder_monomial(mu: &Partition) -> LadderWord {
    let steps = (1..=mu.max_ladder())
        .filter_map(|l| {
            let k = mu.ladder_nodes(l).len();
            (k > 0).then(|| (ladder_residue(l), k))
        })
        .collect();
    LadderWord { steps }
}

/// Checks `[μ] ⊆ [λ]` and that `(i, μ_i + 1)` has residue `x` for every row
/// with `λ_i > 0`.
pub fn check_staircase_condition(mu: &Partition, lambda: &Partition, x: Residue) -> Result<()> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.clone(),
            outer: lambda.clone(),
        });
    }
    for row in 1..=lambda.len() {
        let node = Node::new(row, mu.part(row) + 1);
        if node.residue() != x {
            return Err(Error::LadderCondition {
                row,
                col: node.col,
                residue: x.value(),
            });
        }
    }
    Ok(())
}

/// The chain `μ = μ^0 ⊂ μ^1 ⊂ … ⊂ λ`, each step adding every addable node of
/// the previous partition that lies in `[λ]`.
fn staircase_chain(mu: &Partition, lambda: &Partition, x: Residue) -> Result<Vec<Partition>> {
    check_staircase_condition(mu, lambda, x)?;
    let mut chain = vec![mu.clone()];
    let mut residue = x;
    while chain.last().unwrap() != lambda {
        let cur = chain.last().unwrap();
        let nodes: Vec<Node> = cur
            .addable_nodes(None)
            .into_iter()
            .filter(|&n| lambda.contains_node(n))
            .collect();
        if nodes.is_empty() || nodes.iter().any(|n| n.residue() != residue) {
            return Err(Error::Internal(format!(
                "staircase chain from {mu} to {lambda} stalled at {cur}"
            )));
        }
        chain.push(cur.with_nodes_added(&nodes));
        residue = residue.flip();
    }
    Ok(chain)
}

/// `f_x^{(a_1)}`, then `f_{1-x}^{(a_2)}`, … with `a_j = |μ^j| − |μ^{j−1}|`.
pub fn ladder_word(mu: &Partition, lambda: &Partition, x: Residue) -> Result<LadderWord> {
    let chain = staircase_chain(mu, lambda, x)?;
    let mut residue = x;
    let steps = chain
        .windows(2)
        .map(|w| {
            let step = (residue, w[1].size() - w[0].size());
            residue = residue.flip();
            step
        })
        .collect();
    Ok(LadderWord { steps })
}

/// The filling of `[λ]`: 0 on `[μ]`, and `j` on `[μ^j] \ [μ^{j−1}]`.
#[allow(clippy::needless_range_loop)]
pub fn flem_filling(mu: &Partition, lambda: &Partition, x: Residue) -> Result<Vec<Vec<usize>>> {
    let chain = staircase_chain(mu, lambda, x)?;
    let mut rows: Vec<Vec<usize>> = (1..=lambda.len())
        .map(|i| vec![0; lambda.part(i)])
        .collect();
    for (j, w) in chain.windows(2).enumerate() {
        for r in 1..=lambda.len() {
            for c in w[0].part(r)..w[1].part(r) {
                rows[r - 1][c] = j + 1;
            }
        }
    }
    Ok(rows)
}

/// Per-node contributions `N(k, h)`, laid out like [`flem_filling`].
pub fn flem_contributions(mu: &Partition, lambda: &Partition, x: Residue) -> Result<Vec<Vec<i64>>> {
    let filling = flem_filling(mu, lambda, x)?;
    let row_ends: Vec<usize> = filling.iter().map(|r| *r.last().unwrap()).collect();
    Ok(filling
        .iter()
        .enumerate()
        .map(|(k, row)| {
            row.iter()
                .map(|&j| {
                    row_ends[..k]
                        .iter()
                        .filter(|&&end| end < j)
                        .map(|&end| if (j - end) % 2 == 1 { 1 } else { -1 })
                        .sum()
                })
                .collect()
        })
        .collect())
}

/// The exponent `N` with `⟨f s(μ), s(λ)⟩ = v^N`, computed from the filling
/// alone.
pub fn flem_degree(mu: &Partition, lambda: &Partition, x: Residue) -> Result<i64> {
    Ok(flem_contributions(mu, lambda, x)?.iter().flatten().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_word_and_degree() {
        let (mu, lam) = (p("7,6,3,2,1"), p("7,7,5,5,4"));
        let word = ladder_word(&mu, &lam, Residue::ONE).unwrap();
        assert_eq!(word.multiplicities(), vec![4, 3, 2]);
        assert_eq!(word.to_string(), "1:4,0:3,1:2");
        assert_eq!(
            flem_filling(&mu, &lam, Residue::ONE).unwrap(),
            vec![
                vec![0, 0, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1, 2],
                vec![0, 0, 1, 2, 3],
                vec![0, 1, 2, 3],
            ]
        );
        assert_eq!(
            flem_contributions(&mu, &lam, Residue::ONE).unwrap(),
            vec![
                vec![0, 0, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1, 0],
                vec![0, 0, 1, 0, 1],
                vec![0, 1, 0, 1],
            ]
        );
        assert_eq!(flem_degree(&mu, &lam, Residue::ONE).unwrap(), 6);
        let v = word.apply(&FockVector::basis(mu));
        assert_eq!(v.coeff(&lam), LaurentPoly::v_pow(6));
    }

    #[test]
    fn trivial_words() {
        let w = ladder_word(&Partition::empty(), &p("1"), Residue::ZERO).unwrap();
        assert_eq!(w.steps, vec![(Residue::ZERO, 1)]);
        assert_eq!(
            flem_degree(&Partition::empty(), &p("1"), Residue::ZERO).unwrap(),
            0
        );
    }

    #[test]
    fn equal_shapes_give_empty_word() {
        // (1,3) and (2,2) share a residue, so μ = λ = (2,1) satisfies the row condition
        let lam = p("2,1");
        let x = Node::new(1, 3).residue();
        let w = ladder_word(&lam, &lam, x).unwrap();
        assert!(w.is_empty());
        assert_eq!(flem_degree(&lam, &lam, x).unwrap(), 0);
    }

    #[test]
    fn condition_violations_name_the_row() {
        let err = ladder_word(&Partition::empty(), &p("1,1"), Residue::ZERO).unwrap_err();
        assert!(
            matches!(err, Error::LadderCondition { row: 2, .. }),
            "{err:?}"
        );
        let err = ladder_word(&p("2"), &p("1,1"), Residue::ZERO).unwrap_err();
        assert!(matches!(err, Error::NotContained { .. }));
    }

    #[test]
    fn word_parsing() {
        let w: LadderWord = "1:4,0:3,1:2".parse().unwrap();
        assert_eq!(w.multiplicities(), vec![4, 3, 2]);
        assert!("2:1".parse::<LadderWord>().is_err());
        assert!("1:0".parse::<LadderWord>().is_err());
        assert!("1".parse::<LadderWord>().is_err());
    }

    #[test]
    fn ladder_monomials() {
        let w = ladder_monomial(&p("2"));
        assert_eq!(w.steps, vec![(Residue::ZERO, 1), (Residue::ONE, 1)]);
        // (5,3,2) meets ladders 1..=5, with 1,2,3,3,1 nodes
        let w = ladder_monomial(&p("5,3,2"));
        assert_eq!(w.multiplicities(), vec![1, 2, 3, 3, 1]);
    }
}
