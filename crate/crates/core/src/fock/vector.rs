use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::partition::{Node, Partition, Residue};

/// An element `Σ c_λ(v) s(λ)` of the Fock space. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockVector {
    entries: BTreeMap<Partition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `s(λ)`.
    pub fn basis(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, &LaurentPoly::one());
        v
    }

    /// `s(∅)`.
    pub fn vacuum() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.entries.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_monomial(&mut self, lambda: Partition, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.entries.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(LaurentPoly::monomial(exp, coeff));
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_term(exp, coeff);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `⟨self, s(λ)⟩`.
    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, lambda: &Partition) -> Option<&LaurentPoly> {
        self.entries.get(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in increasing lexicographic order of partitions.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentPoly)> {
        self.entries.iter()
    }

    /// `self -= factor · other`.
    pub fn sub_scaled(&mut self, factor: &LaurentPoly, other: &FockVector) {
        for (lambda, c) in &other.entries {
            for (e1, c1) in factor.terms() {
                for (e2, c2) in c.terms() {
                    self.add_monomial(lambda.clone(), e1 + e2, -c1 * c2);
                }
            }
        }
    }

    /// `f_i^{(a)}` applied to this vector.
    pub fn apply_divided_power(&self, i: Residue, a: usize) -> FockVector {
        let mut out = FockVector::zero();
        for (lambda, coeff) in &self.entries {
            let addable = lambda.addable_nodes(Some(i));
            for_each_subset(addable.len(), a, |chosen| {
                let nodes: Vec<Node> = chosen.iter().map(|&k| addable[k]).collect();
                let mu = lambda.with_nodes_added(&nodes);
                let n = action_exponent(lambda, &mu, i);
                for (e, c) in coeff.terms() {
                    out.add_monomial(mu.clone(), e + n, c);
                }
            });
        }
        out
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (lambda, c)) in self.entries.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.as_monomial() == Some(0) {
                write!(f, "s({lambda})")?;
            } else {
                write!(f, "({c}) s({lambda})")?;
            }
        }
        Ok(())
    }
}

/// `N(λ, μ) = Σ_{j : λ_j = μ_j} ε_j · #{nodes of [μ] \ [λ] below row j}`,
/// where `ε_j = +1` if `(j, λ_j + 1)` has residue `i` and `−1` otherwise.
pub fn action_exponent(lambda: &Partition, mu: &Partition, i: Residue) -> i32 {
    let last = mu.len();
    let mut below = vec![0i32; last + 2];
    for r in (1..=last).rev() {
        below[r] = below[r + 1] + (mu.part(r) - lambda.part(r)) as i32;
    }
    (1..=last)
        .filter(|&j| lambda.part(j) == mu.part(j))
        .map(|j| {
            let eps = if Node::new(j, lambda.part(j) + 1).residue() == i {
                1
            } else {
                -1
            };
            eps * below[j + 1]
        })
        .sum()
}

/// Calls `f` with every `k`-subset of `0..n`, in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}
