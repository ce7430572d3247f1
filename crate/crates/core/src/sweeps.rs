//! Exhaustive verification sweeps over all partitions up to a size bound.
//!
//! Each [`Suite`] checks one family of claims for every input of size at
//! most `max_n`, in parallel, and reports every counterexample found. The
//! report is independent of scheduling: counterexamples are sorted.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocks::{core_and_weight, weight_of};
use crate::classify::{
    carter_classifier, certify_with, classify_theorem_main, conjecture_classifier,
    oracle_classifier_in, Reducibility, TheoremMainVerdict, VerifyOptions,
};
use crate::error::{Error, Result};
use crate::fock::{flem_degree, ladder_word, DecompCache, DecompositionMatrix, FockVector};
use crate::homs::{
    enumerate_tableaux, hat_tableau, psi_terms, CountTableau, QParam, RowMoveTarget,
};
use crate::laurent::LaurentPoly;
use crate::lr::rouquier_decomposition_number;
use crate::partition::{Partition, Residue};

/// Report schema version.
pub const REPORT_FORMAT: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Every partition with a disconnected ladder is reducible.
    TheoremMain,
    /// Irreducible iff `λ` or `λ′` is FM, for `λ` neither 2-regular nor
    /// 2-restricted; no FM partition has a disconnected ladder.
    Conjecture,
    /// A 2-regular `λ` is irreducible iff alternating.
    Carter,
    /// Rouquier-block decomposition numbers are LR coefficients.
    Rouquier,
    /// Witnesses build and verify for every disconnected-ladder partition.
    Witness,
    /// `λ` and `λ′` are reducible together.
    Conjugation,
    /// `d_{μμ} = 1`; off-diagonal entries lie in `vN[v]`.
    Canonical,
    /// `d_{λμ} ≠ 0` forces the same core and `μ ⊵ λ^reg`; `d_{λ,λ^reg}` is a
    /// power of `v`.
    Support,
    /// `w(λ^{+i}) ≤ w(λ)`.
    Wtdown,
    /// Staircase degrees agree with Fock-space evaluation.
    Flem,
    /// Parity vanishing and hat pairing for the `ψ` expansions of hatted
    /// tableaux (`n = |ν| + |ξ|`).
    Mattshom,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::TheoremMain,
        Suite::Conjecture,
        Suite::Carter,
        Suite::Rouquier,
        Suite::Witness,
        Suite::Conjugation,
        Suite::Canonical,
        Suite::Support,
        Suite::Wtdown,
        Suite::Flem,
        Suite::Mattshom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremMain => "theorem-main",
            Suite::Conjecture => "conjecture",
            Suite::Carter => "carter",
            Suite::Rouquier => "rouquier",
            Suite::Witness => "witness",
            Suite::Conjugation => "conjugation",
            Suite::Canonical => "canonical",
            Suite::Support => "support",
            Suite::Wtdown => "wtdown",
            Suite::Flem => "flem",
            Suite::Mattshom => "mattshom",
        }
    }

    /// The size bound used by the acceptance run.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::TheoremMain | Suite::Conjecture | Suite::Carter => 20,
            Suite::Rouquier | Suite::Canonical => 18,
            Suite::Witness | Suite::Conjugation | Suite::Support => 16,
            Suite::Flem => 14,
            Suite::Wtdown | Suite::Mattshom => 12,
        }
    }

    fn needs_matrices(self) -> bool {
        !matches!(self, Suite::Wtdown | Suite::Flem | Suite::Mattshom)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub partition: Partition,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub format: u32,
    pub suite: Suite,
    pub max_n: usize,
    /// Number of individual claims checked.
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn check(&mut self, ok: bool, partition: &Partition, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.counterexamples.push(Counterexample {
                partition: partition.clone(),
                detail: detail(),
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Runs `suite` for every size up to `max_n`.
pub fn run_suite(suite: Suite, max_n: usize, cache: &DecompCache) -> Result<SweepReport> {
    run_suite_with_progress(suite, max_n, cache, &|_, _| {})
}

/// As [`run_suite`], calling `progress(n, checked so far)` after each size.
pub fn run_suite_with_progress(
    suite: Suite,
    max_n: usize,
    cache: &DecompCache,
    progress: &(dyn Fn(usize, u64) + Sync),
) -> Result<SweepReport> {
    if suite.needs_matrices() {
        (0..=max_n)
            .into_par_iter()
            .try_for_each(|n| cache.matrix(n).map(drop))?;
    }
    let mut total = Tally::default();
    for n in 0..=max_n {
        let tally = match suite {
            Suite::Rouquier => rouquier_size(n, &*cache.matrix(n)?)?,
            Suite::Canonical => canonical_size(&*cache.matrix(n)?),
            Suite::Mattshom => mattshom_size(n)?,
            _ => {
                let matrix = if suite.needs_matrices() {
                    Some(cache.matrix(n)?)
                } else {
                    None
                };
                Partition::all(n)
                    .par_iter()
                    .map(|lambda| check_partition(suite, lambda, matrix.as_deref(), cache))
                    .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?
            }
        };
        total = total.merge(tally);
        progress(n, total.checked);
    }
    total.counterexamples.sort_by(|a, b| {
        (a.partition.size(), &a.partition, &a.detail).cmp(&(
            b.partition.size(),
            &b.partition,
            &b.detail,
        ))
    });
    Ok(SweepReport {
        format: REPORT_FORMAT,
        suite,
        max_n,
        checked: total.checked,
        counterexamples: total.counterexamples,
    })
}

fn classify_row(matrix: &DecompositionMatrix, lambda: &Partition) -> Reducibility {
    if matrix.composition_length(lambda) == 1 {
        Reducibility::Irreducible
    } else {
        Reducibility::Reducible
    }
}

fn check_partition(
    suite: Suite,
    lambda: &Partition,
    matrix: Option<&DecompositionMatrix>,
    cache: &DecompCache,
) -> Result<Tally> {
    let mut tally = Tally::default();
    let oracle = || classify_row(matrix.expect("suite loads matrices"), lambda);
    match suite {
        Suite::TheoremMain => {
            if classify_theorem_main(lambda) == TheoremMainVerdict::ReducibleByThm {
                tally.check(oracle() == Reducibility::Reducible, lambda, || {
                    "disconnected ladder but composition length 1".into()
                });
            }
        }
        Suite::Conjecture => {
            if !lambda.is_regular(2) && !lambda.is_restricted(2) {
                let predicted = conjecture_classifier(lambda)?;
                let actual = oracle();
                tally.check(predicted == actual, lambda, || {
                    format!("conjecture predicts {predicted}, oracle says {actual}")
                });
                if predicted == Reducibility::Irreducible {
                    tally.check(lambda.has_disconnected_ladder().is_none(), lambda, || {
                        "FM (or conjugate FM) partition with a disconnected ladder".into()
                    });
                }
            }
        }
        Suite::Carter => {
            if lambda.is_regular(2) {
                let predicted = carter_classifier(lambda)?;
                let actual = oracle();
                tally.check(predicted == actual, lambda, || {
                    format!("Carter criterion predicts {predicted}, oracle says {actual}")
                });
            }
        }
        Suite::Conjugation => {
            let conj = lambda.conjugate();
            let (a, b) = (oracle(), oracle_classifier_in(cache, &conj)?);
            tally.check(a == b, lambda, || {
                format!("{a}, but the conjugate ({conj}) is {b}")
            });
        }
        Suite::Witness => {
            if lambda.has_disconnected_ladder().is_some() {
                let options = VerifyOptions::for_size(lambda.size());
                match certify_with(lambda, &options, cache) {
                    Ok(w) => tally.check(oracle() == Reducibility::Reducible, lambda, || {
                        format!(
                            "witness ({}) verified but the oracle says irreducible",
                            w.terminal.name()
                        )
                    }),
                    Err(e) if e.is_internal() => tally.check(false, lambda, || e.to_string()),
                    Err(e) => return Err(e),
                }
            }
        }
        Suite::Support => {
            let matrix = matrix.expect("suite loads matrices");
            let core = core_and_weight(lambda).core;
            let reg = lambda.regularise();
            for (mu, _) in matrix.row_entries(lambda) {
                tally.check(core_and_weight(mu).core == core, lambda, || {
                    format!("d_(λ,{mu}) ≠ 0 across blocks")
                });
                tally.check(mu.dominates_unchecked(&reg), lambda, || {
                    format!("d_(λ,{mu}) ≠ 0 but ({mu}) does not dominate λ^reg = ({reg})")
                });
            }
            let d = matrix.entry(lambda, &reg);
            tally.check(d.as_monomial().is_some(), lambda, || {
                format!("d_(λ,λ^reg) = {d} is not a power of v")
            });
        }
        Suite::Wtdown => {
            let w = weight_of(lambda);
            for i in Residue::both() {
                let plus = lambda.add_residue(i);
                let wp = weight_of(&plus);
                tally.check(wp <= w, lambda, || {
                    format!("w(λ^(+{i})) = {wp} > w(λ) = {w}")
                });
            }
        }
        Suite::Flem => {
            for x in Residue::both() {
                for mu in staircase_bases(lambda, x) {
                    let word = ladder_word(&mu, lambda, x)?;
                    let pairing = word.apply(&FockVector::basis(mu.clone())).coeff(lambda);
                    let n = flem_degree(&mu, lambda, x)?;
                    tally.check(pairing == LaurentPoly::v_pow(n as i32), lambda, || {
                        format!("μ = ({mu}), x = {x}: Fock gives {pairing}, filling gives v^{n}")
                    });
                }
            }
        }
        Suite::Rouquier | Suite::Canonical | Suite::Mattshom => unreachable!("handled per size"),
    }
    Ok(tally)
}

/// Every `μ ⊆ λ` such that `(i, μ_i + 1)` has residue `x` for each row of `λ`.
fn staircase_bases(lambda: &Partition, x: Residue) -> Vec<Partition> {
    fn go(
        lambda: &Partition,
        x: Residue,
        row: usize,
        cap: usize,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > lambda.len() {
            out.push(Partition::from_unsorted(parts.clone()));
            return;
        }
        for m in 0..=cap.min(lambda.part(row)) {
            if Residue::of(m as i64 + 1 - row as i64) == x {
                parts.push(m);
                go(lambda, x, row + 1, m, parts, out);
                parts.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(lambda, x, 1, lambda.first(), &mut Vec::new(), &mut out);
    out
}

/// The Rouquier-block cross-check for a single size, as a report with
/// `max_n = n`.
pub fn rouquier_report(matrix: &DecompositionMatrix) -> Result<SweepReport> {
    let mut tally = rouquier_size(matrix.n(), matrix)?;
    tally.counterexamples.sort();
    Ok(SweepReport {
        format: REPORT_FORMAT,
        suite: Suite::Rouquier,
        max_n: matrix.n(),
        checked: tally.checked,
        counterexamples: tally.counterexamples,
    })
}

fn rouquier_size(n: usize, matrix: &DecompositionMatrix) -> Result<Tally> {
    matrix
        .rows()
        .par_iter()
        .filter(|lambda| core_and_weight(lambda).is_rouquier())
        .map(|lambda| {
            let mut tally = Tally::default();
            let core = core_and_weight(lambda).core;
            for mu in matrix
                .columns()
                .iter()
                .filter(|mu| core_and_weight(mu).core == core)
            {
                let llt = matrix.entry(lambda, mu).eval_one();
                let lr = rouquier_decomposition_number(lambda, mu)? as i64;
                tally.check(llt == lr, lambda, || {
                    format!("n = {n}, μ = ({mu}): LLT {llt}, LR {lr}")
                });
            }
            Ok(tally)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

fn canonical_size(matrix: &DecompositionMatrix) -> Tally {
    matrix
        .columns()
        .par_iter()
        .map(|mu| {
            let mut tally = Tally::default();
            let g = matrix
                .canonical_vector(mu)
                .expect("every column has a vector");
            for (lambda, d) in g.iter() {
                if lambda == mu {
                    tally.check(d == &LaurentPoly::one(), mu, || format!("d_(μ,μ) = {d}"));
                } else {
                    tally.check(
                        d.is_divisible_by_v() && d.has_nonnegative_coeffs(),
                        mu,
                        || format!("d_(({lambda}),μ) = {d} is not in vN[v]"),
                    );
                }
            }
            tally.check(g.coeff_ref(mu).is_some(), mu, || {
                "G(μ) does not contain s(μ)".into()
            });
            tally
        })
        .reduce(Tally::default, Tally::merge)
}

/// All `(ν, ξ)` with `|ν| + |ξ| = n` meeting the homomorphism precondition
/// `ξ_{l−1} ≥ l`, `l = ν′_1 ≥ 1`.
pub fn mattshom_inputs(n: usize) -> Vec<(Partition, Partition)> {
    (1..=n)
        .flat_map(|a| {
            Partition::all(a).into_iter().flat_map(move |nu| {
                Partition::all(n - a).into_iter().filter_map(move |xi| {
                    let l = nu.len();
                    (l < 2 || xi.part(l - 1) >= l).then(|| (nu.clone(), xi))
                })
            })
        })
        .collect()
}

fn mattshom_size(n: usize) -> Result<Tally> {
    mattshom_inputs(n)
        .par_iter()
        .map(|(nu, xi)| mattshom_pair(nu, xi))
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

/// For each `T ∈ 𝒯(ν, ν)` and each move `(d, t)` on `λ = ξ + 2ν`: terms of
/// `ψ^{d,t} ∘ Θ_{T̂}` with an odd `β_i` vanish at `q = −1`, and the
/// surviving terms are exactly the hats of `ψ^{d,t/2} ∘ Θ_T` at `q = 1`,
/// with equal coefficients.
fn mattshom_pair(nu: &Partition, xi: &Partition) -> Result<Tally> {
    let mut tally = Tally::default();
    let lambda_len = xi.len().max(nu.len());
    let lambda = Partition::new(
        (1..=lambda_len)
            .map(|i| xi.part(i) + 2 * nu.part(i))
            .collect(),
    )?;
    let mu_rows = xi.conjugate().len().max(nu.len());
    let hat = |t: &CountTableau| hat_tableau(t, xi, mu_rows, lambda.len());
    let label = |t: &CountTableau, mv: RowMoveTarget| {
        format!(
            "ν = ({nu}), ξ = ({xi}), T = {t}, (d,t) = ({},{})",
            mv.d, mv.t
        )
    };

    for t in enumerate_tableaux(nu, nu.parts()) {
        let t_hat = hat(&t);
        for mv in RowMoveTarget::all_for(lambda.parts()) {
            let terms = psi_terms(&t_hat, mv, QParam::MinusOne)?;
            let odd_survivor = terms
                .iter()
                .find(|term| term.coeff != 0 && term.beta.iter().any(|b| b % 2 == 1));
            tally.check(odd_survivor.is_none(), &lambda, || {
                format!("{}: odd β survives", label(&t, mv))
            });

            let surviving: BTreeMap<CountTableau, i64> = terms
                .into_iter()
                .filter(|x| x.coeff != 0)
                .map(|x| (x.v, x.coeff))
                .collect();
            let half = RowMoveTarget::new(mv.d, mv.t / 2);
            let expected: BTreeMap<CountTableau, i64> =
                if mv.t % 2 == 0 && half.target(nu.parts()).is_ok() {
                    psi_terms(&t, half, QParam::One)?
                        .into_iter()
                        .filter(|x| x.coeff != 0)
                        .map(|x| (hat(&x.v), x.coeff))
                        .collect()
                } else {
                    BTreeMap::new()
                };
            tally.check(surviving == expected, &lambda, || {
                format!(
                    "{}: surviving terms are not the hatted q = 1 expansion",
                    label(&t, mv)
                )
            });
        }
    }
    Ok(tally)
}
