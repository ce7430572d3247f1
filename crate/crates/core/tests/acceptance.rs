//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
//! Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use specht_core::blocks::{core_and_weight, two_quotient};
use specht_core::classify::{build_witness, verify_witness, VerifyOptions};
use specht_core::homs::{kernel_check, mattshom_build, QParam};
use specht_core::sweeps::run_suite;
use specht_core::{DecompCache, FockVector, LadderWord, LaurentPoly, Partition, Suite, Terminal};

fn p(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

/// Runs each suite at its acceptance bound; returns a failure description if
/// any reports a counterexample.
fn sweeps(cache: &DecompCache, suites: &[Suite]) -> Result<String, String> {
    let mut summary = Vec::new();
    for &suite in suites {
        let n = suite.default_max_n();
        let report = run_suite(suite, n, cache).map_err(|e| format!("{suite}: {e}"))?;
        if let Some(c) = report.counterexamples.first() {
            return Err(format!(
                "{suite} (n ≤ {n}): {} counterexample(s), first ({}): {}",
                report.counterexamples.len(),
                c.partition,
                c.detail
            ));
        }
        summary.push(format!("{suite} n ≤ {n}: {} checks", report.checked));
    }
    Ok(summary.join("; "))
}

fn worked_examples() -> Result<String, String> {
    let mut failures = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    let b = core_and_weight(&p("6,6,5,2,1"));
    expect(
        b.core == p("3,2,1") && b.weight == 7,
        "core/weight of (6,6,5,2,1)",
    );

    let q = two_quotient(&p("13,8,7,4,3,2,1,1,1,1,1")).map_err(|e| e.to_string())?;
    expect(
        q.horizontal == p("3,1,1") && q.vertical == p("2"),
        "2-quotient of (13,8,7,4,3,2,1^5)",
    );

    expect(
        p("4,2,2,2").regularise() == p("5,3,2"),
        "(4,2^3)^reg = (5,3,2)",
    );

    let word: LadderWord = "1:4,0:3,1:2"
        .parse()
        .map_err(|e: specht_core::Error| e.to_string())?;
    let v = word.apply(&FockVector::basis(p("7,6,3,2,1")));
    expect(
        v.coeff(&p("7,7,5,5,4")) == LaurentPoly::v_pow(6),
        "Fock coefficient v^6",
    );

    let hom = mattshom_build(&p("1,1"), &p("2,2,2,2")).map_err(|e| e.to_string())?;
    let mut coeffs: Vec<i64> = hom
        .theta
        .iter()
        .map(|(_, c)| *c.numer() / *c.denom())
        .collect();
    coeffs.sort();
    expect(
        hom.lambda == p("4,4,2,2") && hom.mu == p("6,6"),
        "θ has λ = (4^2,2^2), μ = (6^2)",
    );
    expect(coeffs == [-1, 1], "θ = Θ_T̂1 − Θ_T̂2");
    expect(
        kernel_check(&hom.theta, &hom.lambda, QParam::MinusOne),
        "θ passes kernel_check at q = −1",
    );
    let reg = hom.lambda.regularise();
    expect(
        reg == p("5,4,2,1") && !reg.dominates(&hom.mu).unwrap_or(true),
        "(5,4,2,1) ⋭ (6^2)",
    );

    let lambda = p("5,3,3,2");
    let w = build_witness(&lambda).map_err(|e| e.to_string())?;
    let chain: Vec<&Partition> = w.steps.iter().map(|s| &s.result).collect();
    expect(
        chain == [&p("6,3,3,3"), &p("7,4,3,3,1")],
        "(5,3^2,2) → (6,3^3) → (7,4,3^2,1)",
    );
    expect(
        matches!(w.terminal, Terminal::CarterPayne { .. }),
        "chain ends in a Carter–Payne map",
    );
    expect(
        verify_witness(&lambda, &w).valid,
        "(5,3,3,2) witness verifies",
    );

    if failures.is_empty() {
        Ok("6 worked examples reproduced".into())
    } else {
        Err(failures.join("; "))
    }
}

fn witnesses(cache: &DecompCache) -> Result<String, String> {
    let swept = sweeps(cache, &[Suite::Witness])?;
    let lambda = p("5,3,3,2");
    let mut w = build_witness(&lambda).map_err(|e| e.to_string())?;
    if let Terminal::CarterPayne { mu, .. } = &mut w.terminal {
        *mu = p("8,4,3,3");
    }
    let v = specht_core::classify::verify_witness_with(
        &lambda,
        &w,
        &VerifyOptions::for_size(lambda.size()),
        cache,
    );
    if v.valid {
        return Err("tampered witness was accepted".into());
    }
    Ok(format!(
        "{swept}; tampered control rejected ({})",
        v.reason.unwrap_or_default()
    ))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<String, String> + 'a>);

fn main() -> ExitCode {
    let cache = DecompCache::from_env();
    let criteria: Vec<Criterion> = vec![
        (
            "1 theorem main sweep",
            Box::new(|| sweeps(&cache, &[Suite::TheoremMain])),
        ),
        (
            "2 FM conjecture sweep",
            Box::new(|| sweeps(&cache, &[Suite::Conjecture])),
        ),
        (
            "3 Carter criterion",
            Box::new(|| sweeps(&cache, &[Suite::Carter])),
        ),
        (
            "4 Rouquier cross-validation",
            Box::new(|| sweeps(&cache, &[Suite::Rouquier])),
        ),
        ("5 worked examples", Box::new(worked_examples)),
        (
            "6 structural properties",
            Box::new(|| {
                sweeps(
                    &cache,
                    &[
                        Suite::Canonical,
                        Suite::Support,
                        Suite::Wtdown,
                        Suite::Flem,
                        Suite::Mattshom,
                    ],
                )
            }),
        ),
        ("7 witness engine", Box::new(|| witnesses(&cache))),
    ];

    let mut all_passed = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} [{secs:.2}s]: {detail}"),
            Err(detail) => {
                all_passed = false;
                println!("FAIL criterion {name} [{secs:.2}s]: {detail}");
            }
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
