//! The level-one Fock space at `e = 2`: the divided-power action, the LLT
//! canonical basis, v-decomposition numbers and degree comparisons between
//! bar-invariant vectors.

mod cache;
mod canonical;
mod ladder;
mod vector;

use serde::{Deserialize, Serialize};

pub use cache::{file_name as cache_file_name, DecompCache, CACHE_DIR_ENV};
pub use canonical::{
    canonical_basis, ladder_vector, DecompositionFile, DecompositionMatrix, FileEntry,
};
pub use ladder::{
    check_staircase_condition, flem_contributions, flem_degree, flem_filling, ladder_monomial,
    ladder_word, LadderWord,
};
pub use vector::{action_exponent, FockVector};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;

/// `d_{λμ}(v)`, served from the process-wide cache.
pub fn v_decomposition_number(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    if !mu.is_regular(2) {
        return Err(Error::NotRegular(mu.clone()));
    }
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(DecompCache::global().matrix(mu.size())?.entry(lambda, mu))
}

/// Number of composition factors of `S^λ` in characteristic zero:
/// `Σ_μ d_{λμ}(1)`.
pub fn composition_length(lambda: &Partition) -> Result<u64> {
    composition_length_in(DecompCache::global(), lambda)
}

pub fn composition_length_in(cache: &DecompCache, lambda: &Partition) -> Result<u64> {
    Ok(cache.matrix(lambda.size())?.composition_length(lambda))
}

/// A bar-invariant vector `word · G(base)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarInvariantSpec {
    pub base: Partition,
    pub word: LadderWord,
}

impl BarInvariantSpec {
    pub fn new(base: Partition, word: LadderWord) -> Self {
        BarInvariantSpec { base, word }
    }

    pub fn evaluate(&self, cache: &DecompCache) -> Result<FockVector> {
        if !self.base.is_regular(2) {
            return Err(Error::NotRegular(self.base.clone()));
        }
        let matrix = cache.matrix(self.base.size())?;
        let g = matrix.canonical_vector(&self.base).ok_or_else(|| {
            Error::Internal(format!("no canonical basis vector for {}", self.base))
        })?;
        Ok(self.word.apply(g))
    }

    /// `⟨X, s(λ)⟩`.
    pub fn pairing(&self, lambda: &Partition, cache: &DecompCache) -> Result<LaurentPoly> {
        Ok(self.evaluate(cache)?.coeff(lambda))
    }
}

/// The two inner products of a degree-mismatch certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MctslWitness {
    pub x_pairing: LaurentPoly,
    pub y_pairing: LaurentPoly,
    pub x: i32,
    pub y: i32,
}

/// `Some` iff `⟨X, s(λ)⟩ = v^x` and `⟨Y, s(λ)⟩ = v^y` with `x ≠ y`, which
/// forces `S^λ` to be reducible.
pub fn mctsl_witness(
    lambda: &Partition,
    x: &BarInvariantSpec,
    y: &BarInvariantSpec,
) -> Result<Option<MctslWitness>> {
    mctsl_witness_in(DecompCache::global(), lambda, x, y)
}

pub fn mctsl_witness_in(
    cache: &DecompCache,
    lambda: &Partition,
    x: &BarInvariantSpec,
    y: &BarInvariantSpec,
) -> Result<Option<MctslWitness>> {
    let x_pairing = x.pairing(lambda, cache)?;
    let y_pairing = y.pairing(lambda, cache)?;
    Ok(match (x_pairing.as_monomial(), y_pairing.as_monomial()) {
        (Some(a), Some(b)) if a != b => Some(MctslWitness {
            x_pairing,
            y_pairing,
            x: a,
            y: b,
        }),
        _ => None,
    })
}
