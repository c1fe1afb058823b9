//! Command-line front end. Exit codes: 0 when every requested check
//! passes, 1 when an identity fails, 2 on usage errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::application::{
    chu_vandermonde_demo, f_jk, verify_content_expansion, verify_vanishing, AlphaParam,
};
use crate::combinat::{gen_binom, gen_binom_row};
use crate::error::{Error, Result};
use crate::exactring::{Monomial, SparsePoly, TruncatedSeries};
use crate::formulary::{
    verify_generalized_binomials, verify_lambda_formulary, verify_pjk, verify_symfun_formulary,
};
use crate::identities::{
    partition_side, pjk_side, u_var, verify_diagonal_case, verify_generating_function,
    verify_lambda_qb, verify_main_identity, Case, QbCaps, VerificationReport, XMode,
};
use crate::partitions::{enumerate_partitions, Partition};
use crate::pjk::{p_jk, XVariables};

#[derive(Parser, Debug)]
#[command(
    name = "lamring",
    version,
    about = "Exact verification of partition generating-function identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run identity checks and report pass/fail per case.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a single computed object.
    Compute {
        #[command(subcommand)]
        target: ComputeTarget,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OutputArgs {
    /// Emit the reports as a JSON list.
    #[arg(long, global = true)]
    pub json: bool,
    /// Append a deliberately corrupted case (exercises the failure path).
    #[arg(long, global = true, hide = true)]
    pub inject_fault: bool,
}

#[derive(Subcommand, Debug)]
pub enum VerifyTarget {
    /// The main identity for every 1 ≤ r ≤ n ≤ n-max.
    #[command(name = "theorem1", visible_alias = "main-identity")]
    MainIdentity {
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        #[arg(long, default_value_t = 5)]
        u_cap: u32,
    },
    /// The r = n case, its agreement with the main identity, and X = 0.
    #[command(name = "theorem2", visible_alias = "diagonal-case")]
    DiagonalCase {
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        #[arg(long, default_value_t = 4)]
        u_cap: u32,
    },
    /// λ_t[qB] three ways on a formal alphabet.
    #[command(name = "theorem3", visible_alias = "lambda-qb")]
    LambdaQb {
        #[arg(long, default_value_t = 3)]
        letters: usize,
        /// Caps for t, q and the letters.
        #[arg(long, default_value = "3,3,3", value_parser = parse_caps3)]
        caps: QbCaps,
    },
    /// The content specialization (y - x)_λ / (y)_λ.
    #[command(name = "theorem4", visible_alias = "content-expansion")]
    ContentExpansion {
        #[arg(long)]
        partition: Partition,
        #[arg(long, default_value = "1")]
        alpha: AlphaParam,
        #[arg(long, default_value_t = 6)]
        w_cap: u32,
        /// Defaults to |λ| + 2.
        #[arg(long)]
        x_cap: Option<u32>,
    },
    /// Coefficient sums that vanish above |λ|.
    Vanishing {
        #[arg(long)]
        partition: Partition,
        #[arg(long, default_value = "1")]
        alpha: AlphaParam,
        /// Checks |λ| < i ≤ |λ| + above.
        #[arg(long, default_value_t = 3)]
        above: u32,
        #[arg(long, default_value_t = 4)]
        j_max: u32,
    },
    /// Row partitions against the classical rising-factorial quotient.
    ChuVandermonde {
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 6)]
        w_cap: u32,
    },
    /// Partial sums of the (t, q) generating-function form.
    GeneratingFunction {
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        /// Caps for t and q.
        #[arg(long, default_value = "3,3", value_parser = parse_caps2)]
        caps: (u32, u32),
        #[arg(long, default_value_t = 3)]
        u_cap: u32,
        /// Set every X_k to zero.
        #[arg(long)]
        x_zero: bool,
    },
    /// Generalized binomials, P_jk, λ-ring rules and symmetric-function formulas.
    Formulary {
        /// Seed for the random λ-ring elements.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Every check at its default size.
    All {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum ComputeTarget {
    /// ⟨λ, r⟩, or the whole row when --r is omitted.
    Genbinom {
        #[arg(long)]
        partition: Partition,
        #[arg(long)]
        r: Option<u32>,
    },
    /// P_jk in X1, X2, ...
    Pjk {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
    },
    /// All partitions of n, one per line.
    Partitions {
        #[arg(long)]
        n: u32,
    },
    /// F_jk(λ), P_jk at the content power sums of λ.
    Fjk {
        #[arg(long)]
        partition: Partition,
        #[arg(long, default_value = "1")]
        alpha: AlphaParam,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
    },
}

fn parse_caps(s: &str, n: usize) -> std::result::Result<Vec<u32>, String> {
    let caps: Vec<u32> = s
        .split(',')
        .map(|c| c.trim().parse::<u32>().map_err(|e| format!("`{c}`: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    if caps.len() != n {
        return Err(format!(
            "expected {n} comma-separated caps, got {}",
            caps.len()
        ));
    }
    Ok(caps)
}

fn parse_caps3(s: &str) -> std::result::Result<QbCaps, String> {
    let c = parse_caps(s, 3)?;
    Ok(QbCaps::new(c[0], c[1], c[2]))
}

fn parse_caps2(s: &str) -> std::result::Result<(u32, u32), String> {
    let c = parse_caps(s, 2)?;
    Ok((c[0], c[1]))
}

/// The partitions and α values of the default content sweep.
pub fn default_content_grid() -> Vec<(Partition, AlphaParam)> {
    let alphas = ["1", "2", "1/2"];
    ["1", "2", "1,1", "2,1", "3,1", "2,2"]
        .iter()
        .flat_map(|p| {
            alphas.iter().map(move |a| {
                (
                    p.parse().expect("valid partition"),
                    a.parse().expect("valid alpha"),
                )
            })
        })
        .collect()
}

/// The full default sweep behind `verify all`.
pub fn default_sweep(seed: u64) -> Result<Vec<VerificationReport>> {
    let mut reports = verify_main_identity(5, 5)?;
    reports.extend(verify_diagonal_case(6, 4)?);
    for mode in [XMode::Symbolic, XMode::Zero] {
        reports.push(verify_generating_function(3, (3, 3), 3, mode)?);
    }
    for p in 0..=3 {
        reports.push(verify_lambda_qb(p, QbCaps::new(3, 3, 3))?);
    }
    for (lambda, alpha) in default_content_grid() {
        let n = lambda.weight();
        reports.push(verify_content_expansion(&lambda, &alpha, 6, n + 2)?);
        reports.push(verify_vanishing(&lambda, &alpha, n + 1..=n + 3, 0..=4)?);
    }
    for n in 1..=4 {
        reports.push(chu_vandermonde_demo(n, 6)?);
    }
    reports.extend(formulary_sweep(seed, 20)?);
    Ok(reports)
}

fn formulary_sweep(seed: u64, count: usize) -> Result<Vec<VerificationReport>> {
    let mut reports = vec![verify_generalized_binomials(8)?];
    reports.extend(verify_pjk(6, 6, 8)?);
    reports.extend(verify_lambda_formulary(seed, count, 4, 6)?);
    reports.extend(verify_symfun_formulary(6, 4, 5, 4)?);
    Ok(reports)
}

/// A main-identity case whose right side has one coefficient bumped by 1.
pub fn corrupted_case() -> Result<VerificationReport> {
    let (n, r, cap) = (2, 1, 3);
    let x = XVariables::new(cap as usize);
    let u = u_var();
    let lhs = partition_side(n, r, &x, u, cap)?;
    let rhs = pjk_side(n, r, &x, u, cap)?;
    let bump = SparsePoly::var(x.get(1)?).mul_monomial(&Monomial::var(u));
    let rhs = rhs.add(&TruncatedSeries::new(bump, rhs.profile().clone()))?;
    Case::new("main_identity")
        .param("n", n)
        .param("r", r)
        .param("u_cap", cap)
        .param("injected_fault", true)
        .compare(&lhs, &rhs)
}

fn run_verify(target: &VerifyTarget) -> Result<Vec<VerificationReport>> {
    Ok(match target {
        VerifyTarget::MainIdentity { n_max, u_cap } => verify_main_identity(*n_max, *u_cap)?,
        VerifyTarget::DiagonalCase { n_max, u_cap } => verify_diagonal_case(*n_max, *u_cap)?,
        VerifyTarget::LambdaQb { letters, caps } => vec![verify_lambda_qb(*letters, *caps)?],
        VerifyTarget::ContentExpansion {
            partition,
            alpha,
            w_cap,
            x_cap,
        } => {
            let x_cap = x_cap.unwrap_or(partition.weight() + 2);
            vec![verify_content_expansion(partition, alpha, *w_cap, x_cap)?]
        }
        VerifyTarget::Vanishing {
            partition,
            alpha,
            above,
            j_max,
        } => {
            let n = partition.weight();
            vec![verify_vanishing(
                partition,
                alpha,
                n + 1..=n + above,
                0..=*j_max,
            )?]
        }
        VerifyTarget::ChuVandermonde { n, w_cap } => vec![chu_vandermonde_demo(*n, *w_cap)?],
        VerifyTarget::GeneratingFunction {
            n_max,
            caps,
            u_cap,
            x_zero,
        } => {
            let mode = if *x_zero {
                XMode::Zero
            } else {
                XMode::Symbolic
            };
            vec![verify_generating_function(*n_max, *caps, *u_cap, mode)?]
        }
        VerifyTarget::Formulary { seed, count } => formulary_sweep(*seed, *count)?,
        VerifyTarget::All { seed } => default_sweep(*seed)?,
    })
}

fn run_compute(target: &ComputeTarget, out: &mut dyn Write) -> Result<()> {
    let text = match target {
        ComputeTarget::Genbinom {
            partition,
            r: Some(r),
        } => gen_binom(partition, *r).to_string(),
        ComputeTarget::Genbinom { partition, r: None } => gen_binom_row(partition)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        ComputeTarget::Pjk { j, k } => p_jk(*j, *k, &XVariables::new(*j as usize))?.to_string(),
        ComputeTarget::Partitions { n } => enumerate_partitions(*n)
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        ComputeTarget::Fjk {
            partition,
            alpha,
            j,
            k,
        } => f_jk(partition, alpha, *j, *k).to_string(),
    };
    writeln!(out, "{text}").map_err(|e| Error::Precondition(e.to_string()))
}

/// One line per report.
pub fn render_text(report: &VerificationReport) -> String {
    let params: Vec<String> = report
        .params
        .iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k}={s}"),
            v => format!("{k}={v}"),
        })
        .collect();
    let status = if report.passed() { "pass" } else { "FAIL" };
    let mut line = format!(
        "{status} {} {} ({} ms)",
        report.identity,
        params.join(" "),
        report.millis
    );
    if let Some(w) = &report.witness {
        line.push_str(&format!(
            "\n    at {}: lhs {} vs rhs {}",
            w.monomial, w.lhs, w.rhs
        ));
    }
    line
}

fn emit(
    reports: &[VerificationReport],
    output: OutputArgs,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    if output.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(reports).expect("reports serialize")
        )
    } else {
        for r in reports {
            writeln!(out, "{}", render_text(r))?;
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        writeln!(out, "{} passed, {} failed", reports.len() - failed, failed)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute { target } => run_compute(target, out).map(|_| 0),
        Command::Verify { target, output } => run_verify(target).and_then(|mut reports| {
            if output.inject_fault {
                reports.push(corrupted_case()?);
            }
            let _ = emit(&reports, *output, out);
            Ok(if reports.iter().all(|r| r.passed()) {
                0
            } else {
                1
            })
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::int;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("lamring").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_commands() {
        assert_eq!(
            run_str(&["compute", "genbinom", "--partition", "2,1", "--r", "2"]).1,
            "2\n"
        );
        assert_eq!(
            run_str(&["compute", "genbinom", "--partition", "2,1"]).1,
            "0 0 2 1\n"
        );
        assert_eq!(
            run_str(&["compute", "pjk", "--j", "2", "--k", "2"]).1,
            "1/2*X1^2 + 1/2*X2\n"
        );
        assert_eq!(
            run_str(&["compute", "partitions", "--n", "3"]).1,
            "3\n2,1\n1,1,1\n"
        );
    }

    #[test]
    fn small_main_identity_sweep() {
        let (code, out, _) = run_str(&["verify", "theorem1", "--n-max", "3", "--u-cap", "3"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.lines()
                .filter(|l| l.starts_with("pass main_identity"))
                .count(),
            6
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["compute", "genbinom", "--partition", "1,2"]).0, 2);
        assert_eq!(run_str(&["verify", "theorem3", "--caps", "3,3"]).0, 2);
        assert_eq!(
            run_str(&["verify", "theorem4", "--partition", "2", "--alpha", "-1"]).0,
            2
        );
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
        // A precondition failure inside the library is a usage error too.
        assert_eq!(
            run_str(&["verify", "theorem4", "--partition", "2,1", "--x-cap", "1"]).0,
            2
        );
    }

    #[test]
    fn injected_fault_fails_with_witness() {
        let (code, out, _) = run_str(&[
            "verify",
            "theorem1",
            "--n-max",
            "1",
            "--u-cap",
            "1",
            "--json",
            "--inject-fault",
        ]);
        assert_eq!(code, 1);
        let reports: Vec<VerificationReport> = serde_json::from_str(&out).unwrap();
        let bad = reports.last().unwrap();
        assert!(!bad.passed());
        let w = bad.witness.as_ref().unwrap();
        assert_eq!(w.monomial, "X1*u");
        let lhs: crate::exactring::Rational = w.lhs.parse().unwrap();
        assert_eq!(w.rhs, (lhs + int(1)).to_string());
    }
}
