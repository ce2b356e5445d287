mod report;

use clap::{Args, Parser, Subcommand};
use regseq::macaulay::{self, MacaulayError};
use regseq::perturb::{self, PerturbError};
use regseq::powersum::{self, APSpec, ExponentSet};
use regseq::{parse, Polynomial, RegularityReport, Verdict};
use report::{Report, Status};
use std::process::ExitCode;
use std::time::Instant;

/// Exact regularity checks for sequences of homogeneous polynomials.
#[derive(Parser)]
#[command(name = "regseq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Emit the report as a single JSON document.
    #[arg(long)]
    json: bool,
    /// Cap on the Macaulay matrix row count p.
    #[arg(long, value_name = "CAP", default_value_t = macaulay::DEFAULT_MAX_ROWS)]
    max_p: usize,
    /// Enclosure width for irrational absolute values, in bits.
    #[arg(long, value_name = "BITS", default_value_t = perturb::DEFAULT_PRECISION_BITS)]
    precision: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Decide regularity of the polynomials in FILE by the exact rank test.
    Check {
        /// Input file: one polynomial per line, '#' comments.
        file: String,
        /// Number of variables (default: the largest index used).
        #[arg(long, value_name = "K")]
        nvars: Option<usize>,
        /// Try the fast certificates before building the matrix.
        #[arg(long)]
        certify_first: bool,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Analyze a power-sum sequence given by its exponents.
    Powersum {
        /// Exponent set, comma separated: --set 1,8,15
        #[arg(long, value_name = "A1,A2,...", conflicts_with = "ap")]
        set: Option<String>,
        /// Arithmetic progression a,d,n: --ap 1,7,3
        #[arg(long, value_name = "A,D,N")]
        ap: Option<String>,
        /// Cross-validate with the full Macaulay rank check.
        #[arg(long)]
        macaulay: bool,
        /// Search for a root-of-unity witness of the given order
        /// (accepts "48" or "m=48").
        #[arg(long, value_name = "M")]
        witness_search: Option<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Exhaustive search for a vanishing sum of N M-th roots of unity.
    Roots {
        /// Number of summands.
        n: usize,
        /// Order of the roots of unity.
        m: u64,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Distance table against pure powers and the near-powers certificate.
    Perturb {
        /// Input file: one polynomial per line, '#' comments.
        file: String,
        /// Number of variables (default: the largest index used).
        #[arg(long, value_name = "K")]
        nvars: Option<usize>,
        /// Fall back to the Macaulay check when the certificate does not
        /// settle the question.
        #[arg(long)]
        fallback: bool,
        #[command(flatten)]
        common: CommonFlags,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, json) = match cli.command {
        Command::Check {
            file,
            nvars,
            certify_first,
            common,
        } => (cmd_check(&file, nvars, certify_first, &common), common.json),
        Command::Powersum {
            set,
            ap,
            macaulay,
            witness_search,
            common,
        } => (
            cmd_powersum(set.as_deref(), ap.as_deref(), macaulay, witness_search.as_deref(), &common),
            common.json,
        ),
        Command::Roots { n, m, common } => (cmd_roots(n, m, &common), common.json),
        Command::Perturb {
            file,
            nvars,
            fallback,
            common,
        } => (cmd_perturb(&file, nvars, fallback, &common), common.json),
    };
    report.emit(json);
    report.exit_code()
}

/// Read an input file: one polynomial per line, '#' starts a comment,
/// blank lines skipped. Variable count is given or inferred.
fn read_polynomials(
    path: &str,
    nvars: Option<usize>,
) -> Result<(Vec<Polynomial>, Vec<String>, usize), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let mut lines = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(at) => &raw[..at],
            None => raw,
        }
        .trim();
        if !line.is_empty() {
            lines.push((lineno + 1, line.to_string()));
        }
    }
    if lines.is_empty() {
        return Err(format!("{path}: no polynomials found"));
    }
    let n = match nvars {
        Some(n) => n,
        None => {
            let mut max = 0;
            for (lineno, line) in &lines {
                let idx = parse::max_var_index(line)
                    .map_err(|e| format!("line {lineno}: {e}"))?;
                max = max.max(idx.unwrap_or(0));
            }
            if max == 0 {
                return Err("no variables used; pass --nvars".to_string());
            }
            max
        }
    };
    let mut polys = Vec::new();
    let mut canonical = Vec::new();
    for (lineno, line) in &lines {
        let f =
            parse::parse_polynomial(line, n).map_err(|e| format!("line {lineno}: {e}"))?;
        canonical.push(parse::format_polynomial(&f));
        polys.push(f);
    }
    Ok((polys, canonical, n))
}

fn apply_regularity(report: &mut Report, reg: &RegularityReport) {
    report.verdict = reg.verdict.to_string();
    report.method = reg.method.to_string();
    if let Some(n) = reg.critical_degree {
        report.evidence_num("N", n as u64);
    }
    if let Some(p) = reg.space_dim {
        report.evidence_num("p", p as u64);
    }
    if let Some(rank) = reg.rank {
        report.evidence_num("rank", rank as u64);
    }
    if !reg.notes.is_empty() {
        report.evidence_str("notes", &reg.notes);
    }
}

fn apply_macaulay_error(report: &mut Report, err: &MacaulayError) {
    match err {
        MacaulayError::TooLarge { p, cap } => {
            report.status = Status::SizeCap;
            report.evidence_str("p", &p.to_string());
            report.evidence_num("cap", *cap as u64);
            report.error(&err.to_string());
        }
        _ => report.error(&err.to_string()),
    }
}

fn cmd_check(
    path: &str,
    nvars: Option<usize>,
    certify_first: bool,
    common: &CommonFlags,
) -> Report {
    let start = Instant::now();
    let mut report = Report::new("check");
    let (fs, canonical, _n) = match read_polynomials(path, nvars) {
        Ok(v) => v,
        Err(message) => {
            report.error(&message);
            return report;
        }
    };
    report.inputs = canonical;

    if certify_first {
        if try_certificates(&mut report, &fs, common) {
            report.finish(start);
            return report;
        }
    }

    match macaulay::is_regular_sequence_with_cap(&fs, common.max_p) {
        Ok(reg) => apply_regularity(&mut report, &reg),
        Err(err) => apply_macaulay_error(&mut report, &err),
    }
    report.finish(start);
    report
}

/// Try the near-powers certificate, then (for power-sum shaped input) the
/// progression certificate. Returns true when a certificate decided.
fn try_certificates(report: &mut Report, fs: &[Polynomial], common: &CommonFlags) -> bool {
    match perturb::near_powers_certificate_with_precision(fs, common.precision) {
        Ok(cert) if cert.certified => {
            report.verdict = Verdict::Regular.to_string();
            report.method = "NearPowersCertificate".to_string();
            report.distances(&cert);
            return true;
        }
        Ok(_) | Err(PerturbError::Inconclusive { .. }) => {}
        Err(_) => {} // shape problems surface in the rank check's own errors
    }
    if let Some(spec) = power_sum_shape(fs) {
        let reg = powersum::ap_certificate(&spec);
        if reg.verdict != Verdict::NotCertified {
            apply_regularity(report, &reg);
            return true;
        }
    }
    false
}

/// Detect `p_{a_1}(n), ..., p_{a_n}(n)` with exponents in arithmetic
/// progression.
fn power_sum_shape(fs: &[Polynomial]) -> Option<APSpec> {
    let n = fs.first()?.num_vars();
    if fs.len() != n {
        return None;
    }
    let mut exponents = Vec::with_capacity(n);
    for f in fs {
        let a = f.homogeneous_degree()?;
        if *f != powersum::power_sum(n, a as u64) {
            return None;
        }
        exponents.push(a as u64);
    }
    ExponentSet::new(exponents)
        .ok()?
        .as_arithmetic_progression()
}

fn parse_u64_list(text: &str, expect: Option<usize>) -> Result<Vec<u64>, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if let Some(k) = expect {
        if parts.len() != k {
            return Err(format!("expected {k} comma-separated integers, got {}", parts.len()));
        }
    }
    parts
        .iter()
        .map(|p| p.parse::<u64>().map_err(|_| format!("bad integer {p:?}")))
        .collect()
}

fn cmd_powersum(
    set: Option<&str>,
    ap: Option<&str>,
    run_macaulay: bool,
    witness_search: Option<&str>,
    common: &CommonFlags,
) -> Report {
    let start = Instant::now();
    let mut report = Report::new("powersum");

    let set = match (set, ap) {
        (Some(text), None) => match parse_u64_list(text, None)
            .and_then(|v| ExponentSet::new(v).map_err(|e| e.to_string()))
        {
            Ok(s) => s,
            Err(message) => {
                report.error(&message);
                return report;
            }
        },
        (None, Some(text)) => {
            let spec = parse_u64_list(text, Some(3)).and_then(|v| {
                APSpec::new(v[0], v[1], v[2] as usize).map_err(|e| e.to_string())
            });
            match spec {
                Ok(s) => s.exponent_set(),
                Err(message) => {
                    report.error(&message);
                    return report;
                }
            }
        }
        _ => {
            report.error("pass exactly one of --set or --ap");
            return report;
        }
    };

    let n = set.len();
    report.inputs = set
        .polynomials()
        .iter()
        .map(parse::format_polynomial)
        .collect();
    report.evidence_str(
        "exponents",
        &format!("{:?}", set.exponents()),
    );

    // Normalization first: regularity only depends on the reduced set.
    let normalized = powersum::normalize_exponents(&set);
    if normalized != set {
        report.evidence_str("normalized", &format!("{:?}", normalized.exponents()));
    }

    if !powersum::necessary_condition(&normalized) {
        report.verdict = Verdict::NotRegular.to_string();
        report.method = "NecessaryConditionFailed".to_string();
        report.evidence_str(
            "notes",
            &format!("{n}! does not divide the product of the exponents"),
        );
        report.finish(start);
        return report;
    }

    let mut decided = false;
    if let Some(spec) = normalized.as_arithmetic_progression() {
        let reg = powersum::ap_certificate(&spec);
        if reg.verdict != Verdict::NotCertified {
            apply_regularity(&mut report, &reg);
            decided = true;
        }
    }

    if !decided {
        if let Some(m_text) = witness_search {
            let m_text = m_text.strip_prefix("m=").unwrap_or(m_text);
            match m_text.parse::<u64>() {
                Ok(m) if m >= 2 => match powersum::set_witness_search(&set, m) {
                    Ok(Some(w)) => {
                        report.verdict = Verdict::NotRegular.to_string();
                        report.method = "RootOfUnityWitness".to_string();
                        report.witness(&w);
                        report.evidence_str(
                            "notes",
                            "a nonzero root-of-unity point kills every power sum in the set",
                        );
                        decided = true;
                    }
                    Ok(None) => {
                        report.evidence_str(
                            "witness",
                            &format!("no witness of order {m} exists"),
                        );
                    }
                    Err(err) => {
                        report.error(&err.to_string());
                        return report;
                    }
                },
                _ => {
                    report.error("--witness-search takes an integer order M >= 2 (or m=M)");
                    return report;
                }
            }
        }
    }

    if !decided && !run_macaulay {
        report.verdict = Verdict::NotCertified.to_string();
        report.method = "APCertificate".to_string();
        report.evidence_str(
            "notes",
            "no certificate applies; rerun with --macaulay for the general check",
        );
    }

    if run_macaulay {
        let fs = set.polynomials();
        match macaulay::is_regular_sequence_with_cap(&fs, common.max_p) {
            Ok(reg) => {
                if decided {
                    // Certificates must agree with the exact check.
                    report.evidence_str("macaulay_verdict", &reg.verdict.to_string());
                    if let Some(rank) = reg.rank {
                        report.evidence_num("rank", rank as u64);
                    }
                    if let Some(p) = reg.space_dim {
                        report.evidence_num("p", p as u64);
                    }
                    if let Some(nn) = reg.critical_degree {
                        report.evidence_num("N", nn as u64);
                    }
                } else {
                    apply_regularity(&mut report, &reg);
                }
            }
            Err(err) => {
                apply_macaulay_error(&mut report, &err);
                return report;
            }
        }
    }

    report.finish(start);
    report
}

fn cmd_roots(n: usize, m: u64, _common: &CommonFlags) -> Report {
    let start = Instant::now();
    let mut report = Report::new("roots");
    if n < 2 || m < 2 {
        report.error("roots requires n >= 2 and m >= 2");
        return report;
    }
    report.evidence_num("n", n as u64);
    report.evidence_num("m", m);
    let g = gcd_with_factorial_u64(m, n as u64);
    report.evidence_num("gcd_m_nfact", g);
    match powersum::vanishing_sum_search(n, m) {
        Ok(Some(w)) => {
            report.verdict = "WitnessFound".to_string();
            report.method = "VanishingSumSearch".to_string();
            report.witness(&w);
        }
        Ok(None) => {
            report.verdict = "NoVanishingSum".to_string();
            report.method = "VanishingSumSearch".to_string();
            report.evidence_str(
                "notes",
                &if g == 1 {
                    format!("gcd({m}, {n}!) = 1: no vanishing sum can exist")
                } else {
                    format!("exhaustive search found none, even though gcd({m}, {n}!) = {g} > 1")
                },
            );
        }
        Err(err) => {
            report.error(&err.to_string());
            return report;
        }
    }
    report.finish(start);
    report
}

fn gcd_with_factorial_u64(m: u64, n: u64) -> u64 {
    regseq::numtheory::gcd_with_factorial(m, n)
}

fn cmd_perturb(
    path: &str,
    nvars: Option<usize>,
    fallback: bool,
    common: &CommonFlags,
) -> Report {
    let start = Instant::now();
    let mut report = Report::new("perturb");
    let (fs, canonical, _n) = match read_polynomials(path, nvars) {
        Ok(v) => v,
        Err(message) => {
            report.error(&message);
            return report;
        }
    };
    report.inputs = canonical;

    match perturb::near_powers_certificate_with_precision(&fs, common.precision) {
        Ok(cert) => {
            report.distances(&cert);
            if cert.certified {
                report.verdict = Verdict::Regular.to_string();
                report.method = "NearPowersCertificate".to_string();
            } else if fallback {
                match macaulay::is_regular_sequence_with_cap(&fs, common.max_p) {
                    Ok(reg) => apply_regularity(&mut report, &reg),
                    Err(err) => {
                        apply_macaulay_error(&mut report, &err);
                        return report;
                    }
                }
            } else {
                report.verdict = Verdict::NotCertified.to_string();
                report.method = "NearPowersCertificate".to_string();
                report.evidence_str(
                    "notes",
                    "some distance is not strictly below 1; rerun with --fallback for the rank check",
                );
            }
        }
        Err(PerturbError::Inconclusive { bits }) => {
            if fallback {
                match macaulay::is_regular_sequence_with_cap(&fs, common.max_p) {
                    Ok(reg) => apply_regularity(&mut report, &reg),
                    Err(err) => {
                        apply_macaulay_error(&mut report, &err);
                        return report;
                    }
                }
            } else {
                report.status = Status::Inconclusive;
                report.verdict = "Inconclusive".to_string();
                report.method = "NearPowersCertificate".to_string();
                report.evidence_str(
                    "notes",
                    &format!("enclosure straddles 1 at width 2^-{bits}; raise --precision or pass --fallback"),
                );
            }
        }
        Err(err) => {
            report.error(&err.to_string());
            return report;
        }
    }
    report.finish(start);
    report
}
