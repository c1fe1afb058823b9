//! Acceptance suite: every criterion is an exact check with zero tolerance.
//! Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use lamring::application::{chu_vandermonde_demo, verify_content_expansion, verify_vanishing};
use lamring::cli::default_content_grid;
use lamring::formulary::{
    verify_generalized_binomials, verify_lambda_formulary, verify_pjk, verify_symfun_formulary,
};
use lamring::identities::{
    verify_diagonal_case, verify_lambda_qb, verify_main_identity, QbCaps, VerificationReport,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn all_pass(reports: &[VerificationReport], expected: usize) -> Outcome {
    if reports.len() != expected {
        return Err(format!(
            "expected {expected} reports, got {}",
            reports.len()
        ));
    }
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(format!("{expected} cases")),
        Some(r) => Err(format!(
            "{} {:?} failed: {:?}",
            r.identity, r.params, r.witness
        )),
    }
}

fn within(outcome: Outcome, started: Instant, limit: Duration) -> Outcome {
    let elapsed = started.elapsed();
    if elapsed > limit {
        return Err(format!("took {elapsed:?}, limit {limit:?}"));
    }
    outcome
}

fn main_identity() -> Outcome {
    let started = Instant::now();
    let reports = verify_main_identity(5, 5).map_err(|e| e.to_string())?;
    within(all_pass(&reports, 15), started, Duration::from_secs(180))
}

fn diagonal_case() -> Outcome {
    // Per n: the identity, agreement with r = n, and X = 0.
    let reports = verify_diagonal_case(6, 4).map_err(|e| e.to_string())?;
    all_pass(&reports, 18)
}

fn generalized_binomials() -> Outcome {
    let report = verify_generalized_binomials(8).map_err(|e| e.to_string())?;
    all_pass(&[report], 1)
}

fn pjk_constructions() -> Outcome {
    let reports = verify_pjk(6, 6, 8).map_err(|e| e.to_string())?;
    all_pass(&reports, 2)
}

fn lambda_formulary() -> Outcome {
    let reports = verify_lambda_formulary(20_251_016, 20, 4, 6).map_err(|e| e.to_string())?;
    all_pass(&reports, 5)
}

fn lambda_of_qb() -> Outcome {
    let started = Instant::now();
    let reports: Result<Vec<_>, _> = (0..=3)
        .map(|p| verify_lambda_qb(p, QbCaps::new(3, 3, 3)))
        .collect();
    let reports = reports.map_err(|e| e.to_string())?;
    within(all_pass(&reports, 4), started, Duration::from_secs(120))
}

fn content_specialization() -> Outcome {
    let mut reports = Vec::new();
    let grid = default_content_grid();
    for (lambda, alpha) in &grid {
        let n = lambda.weight();
        reports.push(verify_content_expansion(lambda, alpha, 6, n + 2).map_err(|e| e.to_string())?);
        reports.push(
            verify_vanishing(lambda, alpha, n + 1..=n + 3, 0..=4).map_err(|e| e.to_string())?,
        );
    }
    for n in 1..=4 {
        reports.push(chu_vandermonde_demo(n, 6).map_err(|e| e.to_string())?);
    }
    all_pass(&reports, 2 * grid.len() + 4)
}

fn symmetric_functions() -> Outcome {
    let reports = verify_symfun_formulary(6, 4, 5, 4).map_err(|e| e.to_string())?;
    all_pass(&reports, 4)
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_lamring");
    let sweep = Command::new(bin)
        .args(["verify", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    if sweep.status.code() != Some(0) {
        return Err(format!(
            "default sweep exited with {:?}",
            sweep.status.code()
        ));
    }
    let faulty = Command::new(bin)
        .args([
            "verify",
            "theorem1",
            "--n-max",
            "2",
            "--u-cap",
            "2",
            "--json",
            "--inject-fault",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    if faulty.status.code() != Some(1) {
        return Err(format!(
            "corrupted run exited with {:?}",
            faulty.status.code()
        ));
    }
    let reports: Vec<VerificationReport> =
        serde_json::from_slice(&faulty.stdout).map_err(|e| format!("invalid JSON: {e}"))?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    match failed.as_slice() {
        [bad] if bad.witness.is_some() => Ok(format!(
            "default sweep exit 0; corrupted case exit 1, witness at {}",
            bad.witness.as_ref().unwrap().monomial
        )),
        _ => Err(format!(
            "expected exactly one failing report with a witness, got {}",
            failed.len()
        )),
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("main identity, n <= 5, u^5", main_identity),
        (
            "r = n case and X = 0 degeneration, n <= 6, u^4",
            diagonal_case,
        ),
        (
            "generalized binomials vs subset counts, weight <= 8",
            generalized_binomials,
        ),
        (
            "P_jk two constructions, j <= 6; closed forms j <= 8",
            pjk_constructions,
        ),
        ("lambda-ring formulary", lambda_formulary),
        (
            "lambda_t[qB]: engine, closed product, sum over nu",
            lambda_of_qb,
        ),
        (
            "content specialization, vanishing, row case",
            content_specialization,
        ),
        ("symmetric-function formulary", symmetric_functions),
        ("CLI exit codes and JSON witness", cli_contract),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let ms = started.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {}. {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
