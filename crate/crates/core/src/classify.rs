//! Irreducibility classifiers for `S^λ` at `e = 2` and the witness engine.
//!
//! A [`Witness`] records a reducibility proof for a partition with a
//! disconnected ladder: a chain of reduction steps (conjugation, `λ^{+i}`,
//! `λ^{-i}`), each of which can only lose composition factors, ending in a
//! terminal certificate that some partition in the chain is reducible.
//! [`verify_witness`] re-checks every step and the terminal from scratch.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blocks::{core_and_weight, two_quotient};
use crate::error::{Error, Result};
use crate::fock::{
    composition_length_in, flem_degree, ladder_word, mctsl_witness_in, BarInvariantSpec,
    DecompCache,
};
use crate::homs::{kernel_check, mattshom_build, QParam};
use crate::lr::lr_support;
use crate::partition::{ladder_residue, Node, Partition, Residue};

/// Witness schema version.
pub const WITNESS_FORMAT: u32 = 1;

/// Largest `|λ|` for which [`VerifyOptions::default`] kernel-checks
/// permutation-module homomorphisms.
pub const KERNEL_CHECK_MAX_N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reducibility {
    Irreducible,
    Reducible,
}

impl fmt::Display for Reducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reducibility::Irreducible => "irreducible",
            Reducibility::Reducible => "reducible",
        })
    }
}

/// Whether the disconnected-ladder theorem applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremMainVerdict {
    ReducibleByThm,
    NotCovered,
}

impl fmt::Display for TheoremMainVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremMainVerdict::ReducibleByThm => "reducible_by_thm",
            TheoremMainVerdict::NotCovered => "not_covered",
        })
    }
}

/// `ReducibleByThm` iff some ladder of `λ` is disconnected.
pub fn classify_theorem_main(lambda: &Partition) -> TheoremMainVerdict {
    match lambda.has_disconnected_ladder() {
        Some(_) => TheoremMainVerdict::ReducibleByThm,
        None => TheoremMainVerdict::NotCovered,
    }
}

/// Carter's criterion: a 2-regular `λ` labels an irreducible Specht module
/// iff it is alternating; 2-restricted `λ` are handled through `λ′`.
pub fn carter_classifier(lambda: &Partition) -> Result<Reducibility> {
    let target = if lambda.is_regular(2) {
        lambda.clone()
    } else if lambda.is_restricted(2) {
        lambda.conjugate()
    } else {
        return Err(Error::Precondition(format!(
            "{lambda} is neither 2-regular nor 2-restricted"
        )));
    };
    Ok(if target.is_alternating() {
        Reducibility::Irreducible
    } else {
        Reducibility::Reducible
    })
}

/// Irreducible iff the composition length is one.
pub fn oracle_classifier(lambda: &Partition) -> Result<Reducibility> {
    oracle_classifier_in(DecompCache::global(), lambda)
}

pub fn oracle_classifier_in(cache: &DecompCache, lambda: &Partition) -> Result<Reducibility> {
    Ok(if composition_length_in(cache, lambda)? == 1 {
        Reducibility::Irreducible
    } else {
        Reducibility::Reducible
    })
}

/// The FM conditions, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FmCondition {
    /// `λ_i − λ_{i+1} ≤ 1` for every `i ≠ a`.
    SmallGaps,
    /// `λ_b ≥ a − 1 ≥ b`.
    RowBounds,
    /// `λ_1 > … > λ_c`.
    StrictTop,
    /// `c = 0`: addable nodes outside the first row and column share a residue.
    InnerAddableResidues,
    /// `c > 0`: all addable nodes share a residue.
    AddableResidues,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FmReport {
    pub is_fm: bool,
    /// Maximal with `λ_a − λ_{a+1} ≥ 2`.
    pub a: usize,
    /// Maximal with `λ_b = λ_{b+1} > 0`.
    pub b: usize,
    /// Maximal with `λ_{a+c} > 0`.
    pub c: usize,
    pub failed_condition: Option<FmCondition>,
}

/// Evaluates the FM conditions, naming the first that fails.
pub fn fm_report(lambda: &Partition) -> Result<FmReport> {
    if lambda.is_regular(2) || lambda.is_restricted(2) {
        return Err(Error::Precondition(format!(
            "{lambda} must be neither 2-regular nor 2-restricted"
        )));
    }
    let len = lambda.len();
    let gap = |i: usize| lambda.part(i) - lambda.part(i + 1);
    let a = (1..=len)
        .rev()
        .find(|&i| gap(i) >= 2)
        .expect("not 2-restricted");
    let b = (1..len)
        .rev()
        .find(|&i| gap(i) == 0)
        .expect("not 2-regular");
    let c = len - a;

    let same_residue =
        |nodes: Vec<Node>| nodes.windows(2).all(|w| w[0].residue() == w[1].residue());
    let failed_condition = if (1..=len).any(|i| i != a && gap(i) > 1) {
        Some(FmCondition::SmallGaps)
    } else if !(lambda.part(b) + 1 >= a && a > b) {
        Some(FmCondition::RowBounds)
    } else if !(1..c).all(|i| lambda.part(i) > lambda.part(i + 1)) {
        Some(FmCondition::StrictTop)
    } else if c == 0 {
        let inner = lambda
            .addable_nodes(None)
            .into_iter()
            .filter(|n| n.row != 1 && n.col != 1)
            .collect();
        (!same_residue(inner)).then_some(FmCondition::InnerAddableResidues)
    } else {
        (!same_residue(lambda.addable_nodes(None))).then_some(FmCondition::AddableResidues)
    };
    Ok(FmReport {
        is_fm: failed_condition.is_none(),
        a,
        b,
        c,
        failed_condition,
    })
}

/// The conjectured classification: irreducible iff `λ` or `λ′` is FM.
pub fn conjecture_classifier(lambda: &Partition) -> Result<Reducibility> {
    let fm = fm_report(lambda)?.is_fm || fm_report(&lambda.conjugate())?.is_fm;
    Ok(if fm {
        Reducibility::Irreducible
    } else {
        Reducibility::Reducible
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Conjugate,
    AddResidue,
    RemoveResidue,
}

/// Why a reduction step preserves reducibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Justification {
    /// `S^λ` is irreducible iff `S^{λ′}` is.
    #[serde(rename = "conjirr")]
    Conjugation,
    /// `S^λ` has at least as many composition factors as `S^{λ^{+i}}`.
    #[serde(rename = "213dual")]
    AddNodes,
    /// `S^λ` has at least as many composition factors as `S^{λ^{-i}}`.
    #[serde(rename = "213")]
    RemoveNodes,
}

impl StepKind {
    pub fn justification(self) -> Justification {
        match self {
            StepKind::Conjugate => Justification::Conjugation,
            StepKind::AddResidue => Justification::AddNodes,
            StepKind::RemoveResidue => Justification::RemoveNodes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub kind: StepKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<Residue>,
    pub justification: Justification,
    /// The partition after this step.
    pub result: Partition,
}

impl ReductionStep {
    /// Applies the step to `lambda`, or explains why it is not legal.
    fn apply(&self, lambda: &Partition) -> std::result::Result<Partition, String> {
        if self.justification != self.kind.justification() {
            return Err(format!(
                "{:?} cannot justify {:?}",
                self.justification, self.kind
            ));
        }
        let next = match (self.kind, self.residue) {
            (StepKind::Conjugate, None) => return Ok(lambda.conjugate()),
            (StepKind::AddResidue, Some(i)) => lambda.add_residue(i),
            (StepKind::RemoveResidue, Some(i)) => lambda.remove_residue(i),
            (kind, residue) => return Err(format!("{kind:?} with residue {residue:?}")),
        };
        if next == *lambda {
            return Err(format!("{:?} does not change {lambda}", self.kind));
        }
        Ok(next)
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.residue) {
            (StepKind::Conjugate, _) => write!(f, "conjugate → ({})", self.result),
            (StepKind::AddResidue, Some(i)) => {
                write!(f, "add all addable {i}-nodes → ({})", self.result)
            }
            (StepKind::RemoveResidue, Some(i)) => {
                write!(f, "remove all removable {i}-nodes → ({})", self.result)
            }
            (kind, None) => write!(f, "{kind:?} → ({})", self.result),
        }
    }
}

/// The final certificate of a witness, about the last partition of the chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Terminal {
    /// A Rouquier block element that is neither 2-regular nor 2-restricted:
    /// its decomposition numbers are LR coefficients `c^α_{λ^h λ^v}`, and
    /// `support_size ≥ 2` values of `α` occur.
    Rouquier {
        h: Partition,
        v: Partition,
        support_size: usize,
    },
    /// An addable node in ladder `m` and a removable node in ladder `l`
    /// (`m > l`, same parity) give a non-zero map `S^μ → S^λ` with
    /// `λ^reg ⋭ μ^reg`.
    CarterPayne {
        mu: Partition,
        l: usize,
        m: usize,
        added: Node,
        removed: Node,
    },
    /// `λ_i = ξ_i + 2ν_i`: a non-zero map `M^μ → S^λ` with
    /// `μ_i = ξ′_i + 2ν_i` and `λ^reg ⋭ μ`.
    PermHom {
        nu: Partition,
        xi: Partition,
        mu: Partition,
    },
    /// `⟨f G(μ), s(λ)⟩ = v^n` and `⟨f̂ G(μ̂), s(λ)⟩ = v^{n_hat}` with
    /// `n ≠ n_hat`, both bar-invariant.
    FockDegree {
        mu: Partition,
        mu_hat: Partition,
        x: Residue,
        n: i64,
        n_hat: i64,
    },
}

impl Terminal {
    pub fn name(&self) -> &'static str {
        match self {
            Terminal::Rouquier { .. } => "rouquier",
            Terminal::CarterPayne { .. } => "carter_payne",
            Terminal::PermHom { .. } => "perm_hom",
            Terminal::FockDegree { .. } => "fock_degree",
        }
    }
}

impl fmt::Display for Terminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Terminal::Rouquier { h, v, support_size } => write!(
                f,
                "Rouquier block with λ^h = ({h}), λ^v = ({v}); {support_size} LR constituents"
            ),
            Terminal::CarterPayne {
                mu,
                l,
                m,
                added,
                removed,
            } => write!(
                f,
                "ladder homomorphism: add {added} ∈ L_{m}, remove {removed} ∈ L_{l}, μ = ({mu})"
            ),
            Terminal::PermHom { nu, xi, mu } => {
                write!(
                    f,
                    "permutation-module homomorphism: ν = ({nu}), ξ = ({xi}), μ = ({mu})"
                )
            }
            Terminal::FockDegree {
                mu,
                mu_hat,
                x,
                n,
                n_hat,
            } => write!(
                f,
                "Fock degrees: μ = ({mu}) gives v^{n}, μ̂ = ({mu_hat}) gives v^{n_hat} (x = {x})"
            ),
        }
    }
}

/// A checkable proof that `S^λ` is reducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub format: u32,
    pub lambda: Partition,
    pub steps: Vec<ReductionStep>,
    pub terminal: Terminal,
    /// Set by [`certify`] after a successful [`verify_witness`].
    #[serde(default)]
    pub verified: bool,
}

impl Witness {
    /// The partition the terminal certificate is about.
    pub fn final_partition(&self) -> &Partition {
        self.steps.last().map_or(&self.lambda, |s| &s.result)
    }
}

/// Builds a witness by replaying the case analysis of the disconnected-ladder
/// theorem.
pub fn build_witness(lambda: &Partition) -> Result<Witness> {
    if lambda.has_disconnected_ladder().is_none() {
        return Err(Error::Precondition(format!(
            "{lambda} has no disconnected ladder"
        )));
    }
    let mut engine = Engine {
        current: lambda.clone(),
        steps: Vec::new(),
        budget: 4 * lambda.size().max(1),
    };
    let terminal = engine.run()?;
    Ok(Witness {
        format: WITNESS_FORMAT,
        lambda: lambda.clone(),
        steps: engine.steps,
        terminal,
        verified: false,
    })
}

/// [`build_witness`] followed by [`verify_witness`]; the result is marked
/// verified. A witness that fails verification is an internal error.
pub fn certify(lambda: &Partition) -> Result<Witness> {
    certify_with(
        lambda,
        &VerifyOptions::for_size(lambda.size()),
        DecompCache::global(),
    )
}

pub fn certify_with(
    lambda: &Partition,
    options: &VerifyOptions,
    cache: &DecompCache,
) -> Result<Witness> {
    let mut w = build_witness(lambda)?;
    let check = verify_witness_with(lambda, &w, options, cache);
    match check.reason {
        None => {
            w.verified = true;
            Ok(w)
        }
        Some(reason) => Err(Error::Internal(format!(
            "witness for {lambda} does not verify: {reason}"
        ))),
    }
}

struct Engine {
    current: Partition,
    steps: Vec<ReductionStep>,
    budget: usize,
}

fn internal(msg: String) -> Error {
    Error::Internal(msg)
}

/// Rows `(i, k)` bounding the first gap of the disconnected ladder `L_m`:
/// `(i, m+1−i)` ends the first segment and `(k, m+1−k)` starts the second.
fn first_gap(lambda: &Partition, m: usize) -> Result<(usize, usize)> {
    let ladder = lambda.ladder(m);
    match ladder.segments.as_slice() {
        [first, second, ..] => Ok((first.last().unwrap().row, second[0].row)),
        _ => Err(internal(format!("ladder {m} of {lambda} is connected"))),
    }
}

impl Engine {
    fn push(&mut self, kind: StepKind, residue: Option<Residue>) -> Result<()> {
        if self.steps.len() >= self.budget {
            return Err(internal(format!(
                "more than {} reduction steps without reaching a terminal",
                self.budget
            )));
        }
        let step = ReductionStep {
            kind,
            residue,
            justification: kind.justification(),
            result: Partition::empty(),
        };
        let result = step
            .apply(&self.current)
            .map_err(|reason| internal(format!("illegal step from {}: {reason}", self.current)))?;
        self.current = result.clone();
        self.steps.push(ReductionStep { result, ..step });
        Ok(())
    }

    /// `λ^{+i}` as a step, skipped when it adds nothing.
    fn add_if_changes(&mut self, i: Residue) -> Result<()> {
        if self.current.addable_nodes(Some(i)).is_empty() {
            Ok(())
        } else {
            self.push(StepKind::AddResidue, Some(i))
        }
    }

    fn run(&mut self) -> Result<Terminal> {
        loop {
            if self.current.first() < self.current.conjugate().first() {
                self.push(StepKind::Conjugate, None)?;
            }
            let lambda = self.current.clone();
            let m = lambda
                .has_disconnected_ladder()
                .ok_or_else(|| internal(format!("{lambda} lost its disconnected ladder")))?;
            if m <= lambda.first() {
                return if lambda.contains_node(Node::new(m, 1)) {
                    self.two_ends(m)
                } else {
                    self.one_end(m)
                };
            }
            if lambda.first() == lambda.len() {
                return self.square(m);
            }
            let l = lambda.len();
            if lambda.part(l) >= 2 {
                return self.fock_degree(m);
            }
            // λ_l = 1: (l, 1) is removable of residue j
            let j = Residue::of(l as i64 + 1);
            if ladder_residue(m) == j {
                let (i, _) = first_gap(&lambda, m)?;
                return self.carter_payne(Node::new(i + 1, m - i), Node::new(l, 1));
            }
            self.push(StepKind::RemoveResidue, Some(j))?;
        }
    }

    /// `(1, l)` and `(l, 1)` lie in the disconnected `L_l`: add nodes of the
    /// residue not on `L_l` until the block is Rouquier.
    fn two_ends(&mut self, mut l: usize) -> Result<Terminal> {
        let mut idle = 0;
        loop {
            if core_and_weight(&self.current).is_rouquier() {
                return self.rouquier();
            }
            let j = Residue::of(l as i64);
            if self.current.addable_nodes(Some(j)).is_empty() {
                // (1, l+1) and (l+1, 1) are then nodes and L_{l+1} is disconnected
                idle += 1;
                if idle > 1 {
                    return Err(internal(format!("{} has no addable nodes", self.current)));
                }
                l += 1;
            } else {
                idle = 0;
                self.push(StepKind::AddResidue, Some(j))?;
            }
        }
    }

    fn rouquier(&self) -> Result<Terminal> {
        let q = two_quotient(&self.current)?;
        let support_size = lr_support(&q.horizontal, &q.vertical).len();
        Ok(Terminal::Rouquier {
            h: q.horizontal,
            v: q.vertical,
            support_size,
        })
    }

    /// `(1, l)` lies in the disconnected `L_l` but `(l, 1)` does not: induct
    /// on the shortest segment below the top one.
    fn one_end(&mut self, mut l: usize) -> Result<Terminal> {
        loop {
            let lambda = self.current.clone();
            let ladder = lambda.ladder(l);
            if !ladder.is_disconnected()
                || !lambda.contains_node(Node::new(1, l))
                || lambda.contains_node(Node::new(l, 1))
            {
                return Err(internal(format!(
                    "ladder {l} of {lambda} does not have one end"
                )));
            }
            let shortest = ladder.segments[1..]
                .iter()
                .min_by_key(|s| s.len())
                .expect("at least two segments");
            let j = ladder_residue(l);
            self.add_if_changes(j.flip())?;
            if shortest.len() == 1 {
                let removed = shortest[0];
                let added = Node::new(1, self.current.first() + 1);
                return self.carter_payne(added, removed);
            }
            l += 1;
        }
    }

    fn carter_payne(&mut self, mut added: Node, mut removed: Node) -> Result<Terminal> {
        if added.row > removed.row {
            self.push(StepKind::Conjugate, None)?;
            added = added.transpose();
            removed = removed.transpose();
        }
        let lambda = &self.current;
        if !lambda.addable_nodes(None).contains(&added)
            || !lambda.removable_nodes(None).contains(&removed)
        {
            return Err(internal(format!(
                "{added} is not addable or {removed} is not removable in {lambda}"
            )));
        }
        Ok(Terminal::CarterPayne {
            mu: lambda.with_node_added(added).with_node_removed(removed),
            l: removed.ladder(),
            m: added.ladder(),
            added,
            removed,
        })
    }

    /// `λ_1 = λ′_1`: strip a vertical domino column from the top `i` rows.
    fn square(&mut self, m: usize) -> Result<Terminal> {
        let (mut i, k) = first_gap(&self.current, m)?;
        if i + 1 > m - i {
            self.push(StepKind::Conjugate, None)?;
            i = m + 1 - k;
            if i + 1 > m - i {
                return Err(internal(format!(
                    "conjugating {} does not lift the gap",
                    self.current
                )));
            }
        }
        let lambda = &self.current;
        let nu = Partition::new(vec![1; i])?;
        let xi_parts = (1..=lambda.len())
            .map(|r| {
                if r <= i {
                    lambda.part(r).checked_sub(2)
                } else {
                    Some(lambda.part(r))
                }
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| internal(format!("rows 1..={i} of {lambda} are too short")))?;
        let xi = Partition::new(xi_parts)
            .map_err(|_| internal(format!("ξ is not a partition for {lambda}")))?;
        let mu = permhom_mu(&nu, &xi);
        Ok(Terminal::PermHom { nu, xi, mu })
    }

    fn fock_degree(&mut self, m: usize) -> Result<Terminal> {
        let lambda = &self.current;
        let l = lambda.len();
        if (1..=l).any(|r| lambda.part(r) < l + 2 - r) {
            return Err(internal(format!(
                "{lambda} is not above the staircase ({})",
                l + 1
            )));
        }
        let (above, _) = first_gap(lambda, m)?;
        let i = above + 1;
        let mu = Partition::new((2..=l + 1).rev().collect())?;
        let mu_hat = Partition::new((l - i + 3..=l + 1).rev().chain((1..=l - i).rev()).collect())?;
        let x = Residue::of(l as i64 + 1);
        let n = flem_degree(&mu, lambda, x)?;
        let n_hat = flem_degree(&mu_hat, lambda, x)?;
        if n_hat <= n {
            return Err(internal(format!(
                "Fock degrees for {lambda} do not increase: {n} vs {n_hat}"
            )));
        }
        Ok(Terminal::FockDegree {
            mu,
            mu_hat,
            x,
            n,
            n_hat,
        })
    }
}

/// `μ_i = ξ′_i + 2ν_i`.
fn permhom_mu(nu: &Partition, xi: &Partition) -> Partition {
    let xi_conj = xi.conjugate();
    let len = xi_conj.len().max(nu.len());
    Partition::from_unsorted(
        (1..=len)
            .map(|r| xi_conj.part(r) + 2 * nu.part(r))
            .collect(),
    )
}

/// Outcome of [`verify_witness`]: `reason` names the first failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub valid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Verification {
    fn ok() -> Self {
        Verification {
            valid: true,
            reason: None,
        }
    }

    fn fail(reason: String) -> Self {
        Verification {
            valid: false,
            reason: Some(reason),
        }
    }
}

/// Which independent checks [`verify_witness_with`] runs beyond the
/// combinatorial hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Evaluate `f G(μ)` in the Fock space for degree certificates.
    pub fock_check: bool,
    /// Check that permutation-module homomorphisms vanish on the kernel.
    pub kernel_check: bool,
}

impl VerifyOptions {
    /// Every check, with the kernel check limited to `n ≤ KERNEL_CHECK_MAX_N`.
    pub fn for_size(n: usize) -> Self {
        VerifyOptions {
            fock_check: true,
            kernel_check: n <= KERNEL_CHECK_MAX_N,
        }
    }

    /// Combinatorial hypotheses only.
    pub fn combinatorial() -> Self {
        VerifyOptions {
            fock_check: false,
            kernel_check: false,
        }
    }
}

/// Re-checks every step and the terminal certificate of `w` as a proof that
/// `S^λ` is reducible.
pub fn verify_witness(lambda: &Partition, w: &Witness) -> Verification {
    verify_witness_with(
        lambda,
        w,
        &VerifyOptions::for_size(lambda.size()),
        DecompCache::global(),
    )
}

pub fn verify_witness_with(
    lambda: &Partition,
    w: &Witness,
    options: &VerifyOptions,
    cache: &DecompCache,
) -> Verification {
    match check_witness(lambda, w, options, cache) {
        Ok(()) => Verification::ok(),
        Err(reason) => Verification::fail(reason),
    }
}

fn check_witness(
    lambda: &Partition,
    w: &Witness,
    options: &VerifyOptions,
    cache: &DecompCache,
) -> std::result::Result<(), String> {
    if w.format != WITNESS_FORMAT {
        return Err(format!("format: unsupported version {}", w.format));
    }
    if w.lambda != *lambda {
        return Err(format!(
            "lambda: witness is for ({}), not ({lambda})",
            w.lambda
        ));
    }
    let mut current = lambda.clone();
    for (k, step) in w.steps.iter().enumerate() {
        let next = step
            .apply(&current)
            .map_err(|e| format!("step {}: {e}", k + 1))?;
        if next != step.result {
            return Err(format!(
                "step {}: result is ({next}), recorded ({})",
                k + 1,
                step.result
            ));
        }
        current = next;
    }
    check_terminal(&current, &w.terminal, options, cache)
        .map_err(|e| format!("terminal.{}: {e}", w.terminal.name()))
}

fn check_terminal(
    lambda: &Partition,
    terminal: &Terminal,
    options: &VerifyOptions,
    cache: &DecompCache,
) -> std::result::Result<(), String> {
    match terminal {
        Terminal::Rouquier { h, v, support_size } => {
            if !core_and_weight(lambda).is_rouquier() {
                return Err(format!("({lambda}) is not in a Rouquier block"));
            }
            if lambda.is_regular(2) || lambda.is_restricted(2) {
                return Err(format!("({lambda}) is 2-regular or 2-restricted"));
            }
            let q = two_quotient(lambda).map_err(|e| e.to_string())?;
            if (&q.horizontal, &q.vertical) != (h, v) {
                return Err(format!(
                    "domino counts are (({}), ({})), recorded (({h}), ({v}))",
                    q.horizontal, q.vertical
                ));
            }
            let support = lr_support(h, v).len();
            if support != *support_size || support < 2 {
                return Err(format!(
                    "LR support has size {support}, recorded {support_size}"
                ));
            }
            Ok(())
        }
        Terminal::CarterPayne {
            mu,
            l,
            m,
            added,
            removed,
        } => {
            if !lambda.addable_nodes(None).contains(added) {
                return Err(format!("{added} is not addable in ({lambda})"));
            }
            if !lambda.removable_nodes(None).contains(removed) {
                return Err(format!("{removed} is not removable in ({lambda})"));
            }
            if added.ladder() != *m || removed.ladder() != *l {
                return Err(format!(
                    "nodes lie in ladders ({}, {}), recorded ({l}, {m})",
                    removed.ladder(),
                    added.ladder()
                ));
            }
            if m <= l || (m - l) % 2 != 0 {
                return Err(format!(
                    "ladders l = {l}, m = {m} need m > l and m ≡ l (mod 2)"
                ));
            }
            if added.row >= removed.row {
                return Err(format!("{added} is not above {removed}"));
            }
            let expected = lambda.with_node_added(*added).with_node_removed(*removed);
            if expected != *mu {
                return Err(format!("μ should be ({expected}), recorded ({mu})"));
            }
            if lambda.regularise().dominates_unchecked(&mu.regularise()) {
                return Err(format!("({lambda})^reg dominates ({mu})^reg"));
            }
            Ok(())
        }
        Terminal::PermHom { nu, xi, mu } => {
            let l = nu.len();
            if l == 0 {
                return Err("ν is empty".into());
            }
            if l >= 2 && xi.part(l - 1) < l {
                return Err(format!("ξ_{} = {} < {l}", l - 1, xi.part(l - 1)));
            }
            let rows = lambda.len().max(xi.len()).max(l);
            if (1..=rows).any(|r| lambda.part(r) != xi.part(r) + 2 * nu.part(r)) {
                return Err(format!("({lambda}) ≠ ξ + 2ν"));
            }
            let expected = permhom_mu(nu, xi);
            if expected != *mu {
                return Err(format!("μ should be ({expected}), recorded ({mu})"));
            }
            if lambda.regularise().dominates_unchecked(mu) {
                return Err(format!("({lambda})^reg dominates ({mu})"));
            }
            if options.kernel_check {
                let hom = mattshom_build(nu, xi).map_err(|e| e.to_string())?;
                if !kernel_check(&hom.theta, lambda, QParam::MinusOne) {
                    return Err("θ does not vanish on the kernel".into());
                }
            }
            Ok(())
        }
        Terminal::FockDegree {
            mu,
            mu_hat,
            x,
            n,
            n_hat,
        } => {
            for (base, recorded) in [(mu, n), (mu_hat, n_hat)] {
                let degree = flem_degree(base, lambda, *x).map_err(|e| format!("({base}): {e}"))?;
                if degree != *recorded {
                    return Err(format!(
                        "degree for ({base}) is {degree}, recorded {recorded}"
                    ));
                }
                altcory_guard(base, lambda)?;
            }
            if n == n_hat {
                return Err(format!("degrees coincide at {n}"));
            }
            if options.fock_check {
                let spec = |base: &Partition| -> std::result::Result<BarInvariantSpec, String> {
                    let word = ladder_word(base, lambda, *x).map_err(|e| e.to_string())?;
                    Ok(BarInvariantSpec::new(base.clone(), word))
                };
                let found = mctsl_witness_in(cache, lambda, &spec(mu)?, &spec(mu_hat)?)
                    .map_err(|e| e.to_string())?;
                match found {
                    Some(m) if (m.x as i64, m.y as i64) == (*n, *n_hat) => {}
                    Some(m) => {
                        return Err(format!(
                            "Fock degrees are ({}, {}), recorded ({n}, {n_hat})",
                            m.x, m.y
                        ))
                    }
                    None => return Err("Fock pairings are not distinct monomials".into()),
                }
            }
            Ok(())
        }
    }
}

/// `base` is 2-regular with core `(r−1, …, 1)` and at most `r` rows, and
/// `λ` has at most `r` rows, so no other constituent of `G(base)` fits in
/// `[λ]`.
fn altcory_guard(base: &Partition, lambda: &Partition) -> std::result::Result<(), String> {
    if !base.is_regular(2) {
        return Err(format!("({base}) is not 2-regular"));
    }
    let r = core_and_weight(base).core_length + 1;
    if base.len() > r || lambda.len() > r {
        return Err(format!("({base}) or ({lambda}) has more than {r} rows"));
    }
    Ok(())
}
