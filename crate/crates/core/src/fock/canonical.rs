//! The LLT algorithm for the canonical basis `G(μ)` of the level-one
//! Fock space at `e = 2`, and the resulting v-decomposition matrices.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ladder::ladder_monomial;
use super::vector::FockVector;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;

/// `d_{λμ}(v)` for all `λ ⊢ n` and 2-regular `μ ⊢ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    n: usize,
    rows: Vec<Partition>,
    columns: Vec<Partition>,
    basis: BTreeMap<Partition, FockVector>,
}

impl DecompositionMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// All partitions of `n`, decreasing lexicographically.
    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    /// The 2-regular partitions of `n`, decreasing lexicographically.
    pub fn columns(&self) -> &[Partition] {
        &self.columns
    }

    /// `G(μ)`.
    pub fn canonical_vector(&self, mu: &Partition) -> Option<&FockVector> {
        self.basis.get(mu)
    }

    /// `d_{λμ}(v)`; zero when `μ` is not a column.
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> LaurentPoly {
        self.basis
            .get(mu)
            .map(|g| g.coeff(lambda))
            .unwrap_or_default()
    }

    /// Non-zero entries `(λ, μ, d_{λμ})` of row `λ`.
    pub fn row_entries<'a>(
        &'a self,
        lambda: &'a Partition,
    ) -> impl Iterator<Item = (&'a Partition, &'a LaurentPoly)> + 'a {
        self.basis
            .iter()
            .filter_map(move |(mu, g)| g.coeff_ref(lambda).map(|d| (mu, d)))
    }

    /// `Σ_μ d_{λμ}(1)`.
    pub fn composition_length(&self, lambda: &Partition) -> u64 {
        self.row_entries(lambda)
            .map(|(_, d)| d.eval_one() as u64)
            .sum()
    }

    pub(crate) fn from_parts(n: usize, basis: BTreeMap<Partition, FockVector>) -> Self {
        DecompositionMatrix {
            n,
            rows: Partition::all(n),
            columns: Partition::all_regular(n),
            basis,
        }
    }

    pub fn to_file_format(&self) -> DecompositionFile {
        let mut entries: Vec<FileEntry> = self
            .basis
            .iter()
            .flat_map(|(mu, g)| {
                g.iter().map(move |(lambda, d)| FileEntry {
                    row: lambda.to_string(),
                    col: mu.to_string(),
                    poly: d.clone(),
                })
            })
            .collect();
        entries.sort_by(|a, b| (&a.row, &a.col).cmp(&(&b.row, &b.col)));
        let mut columns: Vec<String> = self.columns.iter().map(Partition::to_string).collect();
        columns.sort();
        let mut rows: Vec<String> = self.rows.iter().map(Partition::to_string).collect();
        rows.sort();
        DecompositionFile {
            format: 1,
            n: self.n,
            columns,
            rows,
            entries,
        }
    }

    pub fn from_file_format(file: DecompositionFile) -> Result<Self> {
        let bad = |reason: String| Error::Cache {
            path: Default::default(),
            reason,
        };
        if file.format != 1 {
            return Err(bad(format!("unsupported format {}", file.format)));
        }
        let mut basis: BTreeMap<Partition, FockVector> = BTreeMap::new();
        for e in file.entries {
            let row: Partition = e.row.parse()?;
            let col: Partition = e.col.parse()?;
            if row.size() != file.n || col.size() != file.n {
                return Err(bad(format!("entry ({row}, {col}) has the wrong size")));
            }
            basis.entry(col).or_default().add_term(row, &e.poly);
        }
        let matrix = Self::from_parts(file.n, basis);
        if matrix.basis.len() != matrix.columns.len() {
            return Err(bad(
                "column count does not match the 2-regular partitions".into()
            ));
        }
        Ok(matrix)
    }
}

/// On-disk layout of `decomp_e2_n{N}.json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub format: u32,
    pub n: usize,
    pub columns: Vec<String>,
    pub rows: Vec<String>,
    pub entries: Vec<FileEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileEntry {
    pub row: String,
    pub col: String,
    pub poly: LaurentPoly,
}

/// `A(μ)`: the LLT ladder monomial applied to `s(∅)`. Bar-invariant with
/// leading term `s(μ)`.
pub fn ladder_vector(mu: &Partition) -> FockVector {
    ladder_monomial(mu).apply(&FockVector::vacuum())
}

/// Runs LLT for every 2-regular partition of `n`.
pub fn canonical_basis(n: usize) -> Result<DecompositionMatrix> {
    let mut columns = Partition::all_regular(n);
    // smaller partitions first: G(ν) is needed for ν ◁ μ when reducing A(μ)
    columns.reverse();
    let seeds: Vec<FockVector> = columns.par_iter().map(ladder_vector).collect();

    let mut basis: BTreeMap<Partition, FockVector> = BTreeMap::new();
    for (mu, mut vector) in columns.into_iter().zip(seeds) {
        if vector.coeff(&mu) != LaurentPoly::one() {
            return Err(Error::Internal(format!(
                "A({mu}) does not have leading coefficient 1"
            )));
        }
        // G(λ) is supported on partitions ≤ λ, so each subtraction strictly
        // lowers the largest offending row
        loop {
            let offending = vector
                .iter()
                .rev()
                .find(|(l, c)| **l < mu && !c.is_divisible_by_v())
                .map(|(l, c)| (l.clone(), c.clone()));
            let Some((lambda, coeff)) = offending else {
                break;
            };
            if !lambda.is_regular(2) {
                return Err(Error::Internal(format!(
                    "coefficient {coeff} of s({lambda}) in A({mu}) cannot be reduced"
                )));
            }
            let alpha = coeff.symmetric_correction();
            if !alpha.is_bar_invariant() {
                return Err(Error::Internal(format!(
                    "non-symmetric correction for s({lambda}) in A({mu})"
                )));
            }
            let g = basis.get(&lambda).ok_or_else(|| {
                Error::Internal(format!("G({lambda}) requested before it was built"))
            })?;
            vector.sub_scaled(&alpha, g);
        }
        basis.insert(mu, vector);
    }
    Ok(DecompositionMatrix::from_parts(n, basis))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn size_two() {
        let m = canonical_basis(2).unwrap();
        let g = m.canonical_vector(&p("2")).unwrap();
        let mut expected = FockVector::basis(p("2"));
        expected.add_term(p("1,1"), &LaurentPoly::v_pow(1));
        assert_eq!(g, &expected);
        assert_eq!(m.entry(&p("1,1"), &p("2")), LaurentPoly::v_pow(1));
        assert_eq!(m.composition_length(&p("1,1")), 1);
    }

    #[test]
    fn size_zero() {
        let m = canonical_basis(0).unwrap();
        assert_eq!(
            m.entry(&Partition::empty(), &Partition::empty()),
            LaurentPoly::one()
        );
        assert_eq!(m.columns().len(), 1);
    }

    #[test]
    fn diagonal_is_one() {
        for n in 0..=8 {
            let m = canonical_basis(n).unwrap();
            for mu in m.columns() {
                assert_eq!(m.entry(mu, mu), LaurentPoly::one(), "n={n} μ={mu}");
            }
        }
    }

    #[test]
    fn file_format_round_trip() {
        let m = canonical_basis(5).unwrap();
        let file = m.to_file_format();
        let json = serde_json::to_string(&file).unwrap();
        let back: DecompositionFile = serde_json::from_str(&json).unwrap();
        assert_eq!(DecompositionMatrix::from_file_format(back).unwrap(), m);
    }
}
