//! One function per subcommand. Each builds a serializable report; the
//! caller renders it as JSON or as a table.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::Serialize;
use specht_core::blocks::{core_and_weight, two_quotient};
use specht_core::classify::{
    carter_classifier, certify_with, classify_theorem_main, conjecture_classifier, fm_report,
    FmReport, Reducibility, TheoremMainVerdict, VerifyOptions, Witness,
};
use specht_core::fock::{DecompCache, FockVector};
use specht_core::lr::{lr_coefficient, lr_support, LrQuery};
use specht_core::sweeps::{rouquier_report, run_suite_with_progress, SweepReport};
use specht_core::{Error, LaurentPoly, Partition, Result, TwoQuotient};

use crate::args::{
    BlockArgs, ClassifyArgs, DecomposeArgs, FockApplyArgs, LrArgs, RunConfig, VerifyArgs,
};

const FORMAT: u32 = 1;

/// A command result: machine-readable via serde, human-readable via
/// [`Report::table`].
pub trait Report: Serialize {
    fn table(&self) -> String;

    /// `false` when the command found a counterexample.
    fn passed(&self) -> bool {
        true
    }
}

fn check_size(config: &RunConfig, n: usize) -> Result<()> {
    let ceiling = config.size_ceiling();
    if n > ceiling {
        return Err(Error::Precondition(format!(
            "n = {n} exceeds the size bound {ceiling} (raise it with --max-n)"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------- classify

#[derive(Serialize)]
pub struct ClassifyReport {
    format: u32,
    partition: Partition,
    size: usize,
    regular: bool,
    restricted: bool,
    disconnected_ladder: Option<usize>,
    theorem_main: TheoremMainVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    carter: Option<Reducibility>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjecture: Option<ConjectureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
    /// The verdict of the strongest engine that applies, if any.
    classification: Option<Reducibility>,
    decided_by: Option<&'static str>,
}

#[derive(Serialize)]
struct ConjectureReport {
    classification: Reducibility,
    fm: FmReport,
    fm_conjugate: FmReport,
}

#[derive(Serialize)]
struct OracleReport {
    classification: Reducibility,
    composition_length: u64,
}

pub fn classify(
    args: &ClassifyArgs,
    config: &RunConfig,
    cache: &DecompCache,
) -> Result<ClassifyReport> {
    let lambda = &args.partition;
    let regular = lambda.is_regular(2);
    let restricted = lambda.is_restricted(2);
    let carter = (regular || restricted)
        .then(|| carter_classifier(lambda))
        .transpose()?;
    let theorem_main = classify_theorem_main(lambda);

    let conjecture = if args.conjecture && !regular && !restricted {
        Some(ConjectureReport {
            classification: conjecture_classifier(lambda)?,
            fm: fm_report(lambda)?,
            fm_conjugate: fm_report(&lambda.conjugate())?,
        })
    } else {
        None
    };
    let oracle = if args.oracle {
        check_size(config, lambda.size())?;
        config.progress(|| {
            format!(
                "computing the decomposition matrix for n = {}",
                lambda.size()
            )
        });
        let composition_length = cache.matrix(lambda.size())?.composition_length(lambda);
        Some(OracleReport {
            classification: if composition_length == 1 {
                Reducibility::Irreducible
            } else {
                Reducibility::Reducible
            },
            composition_length,
        })
    } else {
        None
    };
    let witness = if args.witness && theorem_main == TheoremMainVerdict::ReducibleByThm {
        Some(certify_with(
            lambda,
            &VerifyOptions::for_size(lambda.size()),
            cache,
        )?)
    } else {
        None
    };

    let by_theorem =
        (theorem_main == TheoremMainVerdict::ReducibleByThm).then_some(Reducibility::Reducible);
    let (classification, decided_by) = [
        (oracle.as_ref().map(|o| o.classification), "oracle"),
        (carter, "carter"),
        (by_theorem, "theorem-main"),
        (conjecture.as_ref().map(|c| c.classification), "conjecture"),
    ]
    .into_iter()
    .find_map(|(c, by)| c.map(|c| (Some(c), Some(by))))
    .unwrap_or((None, None));

    Ok(ClassifyReport {
        format: FORMAT,
        partition: lambda.clone(),
        size: lambda.size(),
        regular,
        restricted,
        disconnected_ladder: lambda.has_disconnected_ladder(),
        theorem_main,
        carter,
        conjecture,
        oracle,
        witness,
        classification,
        decided_by,
    })
}

impl Report for ClassifyReport {
    fn table(&self) -> String {
        let mut out = String::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            out,
            "partition       ({}), n = {}",
            self.partition, self.size
        );
        let _ = writeln!(out, "2-regular       {}", yes_no(self.regular));
        let _ = writeln!(out, "2-restricted    {}", yes_no(self.restricted));
        match self.disconnected_ladder {
            Some(m) => {
                let _ = writeln!(
                    out,
                    "theorem main    {} (ladder L_{m} is disconnected)",
                    self.theorem_main
                );
            }
            None => {
                let _ = writeln!(out, "theorem main    {}", self.theorem_main);
            }
        }
        if let Some(c) = self.carter {
            let _ = writeln!(out, "carter          {c}");
        }
        if let Some(c) = &self.conjecture {
            let _ = writeln!(
                out,
                "conjecture      {} (FM: {}, conjugate FM: {})",
                c.classification,
                yes_no(c.fm.is_fm),
                yes_no(c.fm_conjugate.is_fm)
            );
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(
                out,
                "oracle          {} (composition length {})",
                o.classification, o.composition_length
            );
        }
        match (self.classification, self.decided_by) {
            (Some(c), Some(by)) => {
                let _ = writeln!(out, "classification  {c} (by {by})");
            }
            _ => {
                let _ = writeln!(
                    out,
                    "classification  undetermined (try --oracle or --conjecture)"
                );
            }
        }
        if let Some(w) = &self.witness {
            let status = if w.verified {
                "verified"
            } else {
                "NOT verified"
            };
            let _ = writeln!(out, "witness         {status}, {} step(s)", w.steps.len());
            for (k, step) in w.steps.iter().enumerate() {
                let _ = writeln!(out, "  {}. {step}", k + 1);
            }
            let _ = writeln!(out, "  on ({}): {}", w.final_partition(), w.terminal);
        }
        out
    }
}

// --------------------------------------------------------------- decompose

#[derive(Serialize)]
pub struct DecomposeReport {
    format: u32,
    n: usize,
    cache_file: Option<PathBuf>,
    rows: usize,
    columns: usize,
    blocks: Vec<BlockSummary>,
    entries: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rouquier_check: Option<SweepReport>,
    #[serde(skip)]
    show_entries: bool,
}

#[derive(Serialize)]
struct BlockSummary {
    core: Partition,
    weight: usize,
    rows: usize,
    columns: usize,
    rouquier: bool,
}

#[derive(Serialize)]
struct Entry {
    row: Partition,
    col: Partition,
    poly: LaurentPoly,
}

pub fn decompose(
    args: &DecomposeArgs,
    config: &RunConfig,
    cache: &DecompCache,
) -> Result<DecomposeReport> {
    let n = args.n;
    check_size(config, n)?;
    if let Some(core) = &args.block {
        if *core != Partition::staircase(core.first()) {
            return Err(Error::Precondition(format!("({core}) is not a 2-core")));
        }
    }
    config.progress(|| format!("computing the decomposition matrix for n = {n}"));
    let matrix = cache.matrix(n)?;
    let in_block = |p: &Partition| {
        args.block
            .as_ref()
            .is_none_or(|core| core_and_weight(p).core == *core)
    };

    let mut blocks: Vec<BlockSummary> = Vec::new();
    for lambda in matrix.rows() {
        let data = core_and_weight(lambda);
        if !in_block(lambda) {
            continue;
        }
        let idx = match blocks.iter().position(|b| b.core == data.core) {
            Some(i) => i,
            None => {
                blocks.push(BlockSummary {
                    core: data.core.clone(),
                    weight: data.weight,
                    rows: 0,
                    columns: 0,
                    rouquier: data.is_rouquier(),
                });
                blocks.len() - 1
            }
        };
        blocks[idx].rows += 1;
        blocks[idx].columns += usize::from(lambda.is_regular(2));
    }
    blocks.sort_by_key(|b| b.core.len());

    let entries = matrix
        .columns()
        .iter()
        .filter(|mu| in_block(mu))
        .flat_map(|mu| {
            let g = matrix.canonical_vector(mu).expect("column vector");
            g.iter().rev().map(move |(lambda, d)| Entry {
                row: lambda.clone(),
                col: mu.clone(),
                poly: d.clone(),
            })
        })
        .collect();

    let rouquier_check = args
        .rouquier_check
        .then(|| rouquier_report(&matrix))
        .transpose()?;
    Ok(DecomposeReport {
        format: FORMAT,
        n,
        cache_file: cache.file_path(n),
        rows: matrix.rows().len(),
        columns: matrix.columns().len(),
        blocks,
        entries,
        rouquier_check,
        show_entries: args.block.is_some() || n <= 6,
    })
}

impl Report for DecomposeReport {
    fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "n = {}: {} partitions, {} 2-regular",
            self.n, self.rows, self.columns
        );
        if let Some(path) = &self.cache_file {
            let _ = writeln!(out, "cache file: {}", path.display());
        }
        let _ = writeln!(
            out,
            "{:<16} {:>6} {:>6} {:>8}  rouquier",
            "core", "weight", "rows", "columns"
        );
        for b in &self.blocks {
            let _ = writeln!(
                out,
                "{:<16} {:>6} {:>6} {:>8}  {}",
                format!("({})", b.core),
                b.weight,
                b.rows,
                b.columns,
                if b.rouquier { "yes" } else { "no" }
            );
        }
        if self.show_entries {
            let _ = writeln!(out, "non-zero entries d_(λ,μ)(v):");
            for e in &self.entries {
                let _ = writeln!(out, "  λ = ({}), μ = ({}): {}", e.row, e.col, e.poly);
            }
        }
        if let Some(r) = &self.rouquier_check {
            out.push_str(&sweep_table(r));
        }
        out
    }

    fn passed(&self) -> bool {
        self.rouquier_check.as_ref().is_none_or(SweepReport::passed)
    }
}

// ------------------------------------------------------------------ verify

pub struct VerifyReport(SweepReport);

impl Serialize for VerifyReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

pub fn verify(args: &VerifyArgs, config: &RunConfig, cache: &DecompCache) -> Result<VerifyReport> {
    let suite = args.suite;
    let max_n = config.max_n.unwrap_or_else(|| suite.default_max_n());
    let report = run_suite_with_progress(suite, max_n, cache, &|n, checked| {
        config.progress(|| format!("[{suite}] n = {n} done, {checked} checks so far"));
    })?;
    Ok(VerifyReport(report))
}

fn sweep_table(r: &SweepReport) -> String {
    let mut out = String::new();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "{} (n ≤ {}): {} checks, {} counterexample(s): {verdict}",
        r.suite,
        r.max_n,
        r.checked,
        r.counterexamples.len()
    );
    for c in &r.counterexamples {
        let _ = writeln!(out, "  ({}): {}", c.partition, c.detail);
    }
    out
}

impl Report for VerifyReport {
    fn table(&self) -> String {
        sweep_table(&self.0)
    }

    fn passed(&self) -> bool {
        self.0.passed()
    }
}

// ---------------------------------------------------------------------- lr

#[derive(Serialize)]
pub struct LrReport {
    format: u32,
    left: Partition,
    right: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    outer: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficient: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    support: Option<Vec<LrTerm>>,
}

#[derive(Serialize)]
struct LrTerm {
    partition: Partition,
    coefficient: u64,
}

pub fn lr(args: &LrArgs) -> Result<LrReport> {
    let (coefficient, support) = match &args.outer {
        Some(outer) => {
            let q = LrQuery::new(outer.clone(), args.left.clone(), args.right.clone());
            (Some(lr_coefficient(&q)), None)
        }
        None => {
            let terms = lr_support(&args.left, &args.right)
                .into_iter()
                .map(|(partition, coefficient)| LrTerm {
                    partition,
                    coefficient,
                })
                .collect();
            (None, Some(terms))
        }
    };
    Ok(LrReport {
        format: FORMAT,
        left: args.left.clone(),
        right: args.right.clone(),
        outer: args.outer.clone(),
        coefficient,
        support,
    })
}

impl Report for LrReport {
    fn table(&self) -> String {
        let mut out = String::new();
        if let (Some(outer), Some(c)) = (&self.outer, self.coefficient) {
            let _ = writeln!(out, "c^({outer})_(({}),({})) = {c}", self.left, self.right);
        }
        if let Some(terms) = &self.support {
            let _ = writeln!(out, "s({}) · s({}) =", self.left, self.right);
            for t in terms {
                let _ = writeln!(out, "  {:>4} × s({})", t.coefficient, t.partition);
            }
        }
        out
    }
}

// -------------------------------------------------------------------- fock

#[derive(Serialize)]
pub struct FockReport {
    format: u32,
    base: Partition,
    canonical: bool,
    word: String,
    terms: Vec<FockTerm>,
}

#[derive(Serialize)]
struct FockTerm {
    partition: Partition,
    poly: LaurentPoly,
}

pub fn fock_apply(
    args: &FockApplyArgs,
    config: &RunConfig,
    cache: &DecompCache,
) -> Result<FockReport> {
    let start = if args.canonical {
        if !args.base.is_regular(2) {
            return Err(Error::NotRegular(args.base.clone()));
        }
        check_size(config, args.base.size())?;
        cache
            .matrix(args.base.size())?
            .canonical_vector(&args.base)
            .cloned()
            .ok_or_else(|| Error::Internal(format!("no canonical vector for {}", args.base)))?
    } else {
        FockVector::basis(args.base.clone())
    };
    let result = args.word.apply(&start);
    Ok(FockReport {
        format: FORMAT,
        base: args.base.clone(),
        canonical: args.canonical,
        word: args.word.to_string(),
        terms: result
            .iter()
            .rev()
            .map(|(p, c)| FockTerm {
                partition: p.clone(),
                poly: c.clone(),
            })
            .collect(),
    })
}

impl Report for FockReport {
    fn table(&self) -> String {
        let mut out = String::new();
        let base = if self.canonical { "G" } else { "s" };
        let _ = writeln!(out, "[{}] applied to {base}({}):", self.word, self.base);
        if self.terms.is_empty() {
            let _ = writeln!(out, "  0");
        }
        for t in &self.terms {
            let _ = writeln!(out, "  ({}) s({})", t.poly, t.partition);
        }
        out
    }
}

// ------------------------------------------------------------------- block

#[derive(Serialize)]
pub struct BlockReport {
    format: u32,
    partition: Partition,
    size: usize,
    core: Partition,
    core_length: usize,
    weight: usize,
    rouquier: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient: Option<TwoQuotient>,
    regular: bool,
    restricted: bool,
    regularisation: Partition,
    disconnected_ladder: Option<usize>,
}

pub fn block(args: &BlockArgs) -> Result<BlockReport> {
    let lambda = &args.partition;
    let data = core_and_weight(lambda);
    let quotient = data
        .is_rouquier()
        .then(|| two_quotient(lambda))
        .transpose()?;
    Ok(BlockReport {
        format: FORMAT,
        partition: lambda.clone(),
        size: lambda.size(),
        core: data.core.clone(),
        core_length: data.core_length,
        weight: data.weight,
        rouquier: data.is_rouquier(),
        quotient,
        regular: lambda.is_regular(2),
        restricted: lambda.is_restricted(2),
        regularisation: lambda.regularise(),
        disconnected_ladder: lambda.has_disconnected_ladder(),
    })
}

impl Report for BlockReport {
    fn table(&self) -> String {
        let mut out = String::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            out,
            "partition       ({}), n = {}",
            self.partition, self.size
        );
        let _ = writeln!(out, "2-core          ({})", self.core);
        let _ = writeln!(out, "weight          {}", self.weight);
        let _ = writeln!(out, "rouquier        {}", yes_no(self.rouquier));
        if let Some(q) = &self.quotient {
            let _ = writeln!(
                out,
                "quotient        λ^h = ({}), λ^v = ({})",
                q.horizontal, q.vertical
            );
        }
        let _ = writeln!(out, "2-regular       {}", yes_no(self.regular));
        let _ = writeln!(out, "2-restricted    {}", yes_no(self.restricted));
        let _ = writeln!(out, "regularisation  ({})", self.regularisation);
        match self.disconnected_ladder {
            Some(m) => {
                let _ = writeln!(
                    out,
                    "ladders         L_{m} is the first disconnected ladder"
                );
            }
            None => {
                let _ = writeln!(out, "ladders         all connected");
            }
        }
        out
    }
}
