//! Subcommand execution. Each command renders its full report to a string so
//! the caller decides where it goes.

use std::fmt::Write as _;

use bisector_core::constructibility::{analyze, family_range, Decision, QSpec, Verdict};
use bisector_core::derivation::{derivation_chain, final_cubic};
use bisector_core::geometry::reconstruct;
use bisector_core::roots::{geometric_root, refine};
use bisector_core::{bisector_cubic, Error, Rat};
use serde::Serialize;

use crate::args::{Cli, Command, Format};
use crate::input::QInput;
use crate::report::{AnalyzeReport, DeriveStepReport, JsonRat, ScanRow, SolveReport};
use crate::selftest::{run_all, SuiteOutcome};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NOT_CONSTRUCTIBLE: u8 = 3;

#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn report(stdout: String, code: u8) -> Outcome {
        Outcome { stdout, stderr: String::new(), code }
    }

    fn error(message: String, code: u8) -> Outcome {
        Outcome { stdout: String::new(), stderr: message, code }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn internal(e: Error) -> Outcome {
    Outcome::error(format!("error: {e}\n"), EXIT_CHECK_FAILED)
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Analyze { q, digits } => cmd_analyze(q, *digits, cli.format),
        Command::Solve { q, eps, digits } => cmd_solve(q, eps, *digits, cli.format),
        Command::Derive => cmd_derive(cli.format),
        Command::Scan { from, to, step } => cmd_scan(from, to, step, cli.format),
        Command::Selftest { seed } => cmd_selftest(*seed, cli.format),
    }
}

pub fn cmd_analyze(q: &QInput, digits: usize, format: Format) -> Outcome {
    let spec = match q {
        QInput::Rational(q) => QSpec::Rational(q.clone()),
        QInput::Symbolic => QSpec::SymbolicTranscendental,
    };
    let verdict = match analyze(&spec) {
        Ok(v) => v,
        Err(Error::InvalidLength) => return Outcome::error("error: q must be positive\n".into(), EXIT_USAGE),
        Err(e) => return internal(e),
    };
    let code = match verdict.decision {
        Decision::Constructible => EXIT_OK,
        Decision::NotConstructible => EXIT_NOT_CONSTRUCTIBLE,
    };
    let report = AnalyzeReport::new(&verdict, digits);
    let text = match format {
        Format::Json => to_json(&report),
        Format::Text => analyze_text(&verdict, &report),
    };
    Outcome::report(text, code)
}

fn analyze_text(v: &Verdict, r: &AnalyzeReport) -> String {
    let mut out = String::new();
    let decision = match v.decision {
        Decision::Constructible => "constructible",
        Decision::NotConstructible => "not constructible",
    };
    match &v.q_spec {
        QSpec::Rational(q) => {
            let _ = writeln!(out, "q:        {q}");
        }
        QSpec::SymbolicTranscendental => {
            let _ = writeln!(out, "q:        symbolic");
        }
    }
    let _ = writeln!(out, "degree:   {}", v.degree);
    let _ = writeln!(out, "decision: {decision}");
    let witness = match &r.verdict.witness {
        crate::report::WitnessReport::RationalRoot(t) => format!("rational root t = {}", t.0),
        crate::report::WitnessReport::Quadratic { rendered, .. } => format!("t is a root of {rendered}"),
        crate::report::WitnessReport::Irreducible { .. } => "the cubic has no root in the base field".to_string(),
    };
    let _ = writeln!(out, "witness:  {witness}");
    if let Some(root) = &r.verdict.root {
        let _ = writeln!(out, "t:        {} in [{}, {}]", root.decimal, root.lo.0, root.hi.0);
    }
    let _ = writeln!(out, "note:     {}", r.note);
    if let Some(cert) = &r.certificate {
        let _ = writeln!(out, "certificate ({}):", cert.mode);
        for (i, step) in cert.steps.iter().enumerate() {
            let _ = writeln!(out, "  {}. [{}] {}", i + 1, step.tag, step.statement);
        }
    }
    out
}

pub fn cmd_solve(q: &Rat, eps: &Rat, digits: usize, format: Format) -> Outcome {
    let fq = bisector_cubic().eval_q(q);
    let result = geometric_root(&fq)
        .and_then(|t| refine(&t, eps))
        .and_then(|t| reconstruct(q, &t, eps));
    let rec = match result {
        Ok(r) => r,
        Err(e) => return internal(e),
    };
    let report = SolveReport::new(&rec, digits);
    let code = if report.verified { EXIT_OK } else { EXIT_CHECK_FAILED };
    let text = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "q:     {}", rec.q);
            match &report.t_exact {
                Some(t) => {
                    let _ = writeln!(out, "t:     {} (exact)", t.0);
                }
                None => {
                    let _ = writeln!(out, "t:     {} in [{}, {}]", report.t.decimal, report.t.lo.0, report.t.hi.0);
                }
            }
            let _ = writeln!(out, "b:     {}", report.b.decimal);
            let _ = writeln!(out, "l:     {}", report.l.decimal);
            let _ = writeln!(out, "p:     {}", report.p.decimal);
            let _ = writeln!(out, "|p-1|: <= {:.3e}", rec.p_deviation.to_f64());
            if let Some(p) = &report.p_sq_exact {
                let _ = writeln!(out, "p^2:   {} (exact, from q and t)", p.0);
            }
            let _ = writeln!(out, "check: {}", if report.verified { "PASS" } else { "FAIL" });
            out
        }
    };
    Outcome::report(text, code)
}

pub fn cmd_derive(format: Format) -> Outcome {
    let chain = derivation_chain();
    let all = chain.iter().all(|s| s.verified);
    let text = match format {
        Format::Json => to_json(&chain.iter().map(DeriveStepReport::from).collect::<Vec<_>>()),
        Format::Text => {
            let mut out = String::new();
            for s in &chain {
                let status = if s.verified { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{}. {} [{status}]", s.step, s.name);
                let _ = writeln!(out, "   {} = {}", s.lhs, s.rhs);
                for g in &s.given {
                    let _ = writeln!(out, "   with {g}");
                }
            }
            let _ = writeln!(out, "cubic: {} = 0", final_cubic());
            out
        }
    };
    Outcome::report(text, if all { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn cmd_scan(from: &Rat, to: &Rat, step: &Rat, format: Format) -> Outcome {
    let members = match family_range(from, to, step) {
        Ok(m) => m,
        Err(_) => {
            return Outcome::error(
                "error: need 0 <= from <= to, to^2 < 2 and step > 0\n".into(),
                EXIT_USAGE,
            )
        }
    };
    let mut rows = Vec::with_capacity(members.len());
    let mut bad = None;
    for (s, q, t) in members {
        let degree = match analyze(&QSpec::Rational(q.clone())) {
            Ok(v) => v.degree,
            Err(e) => return internal(e),
        };
        if degree != 1 && bad.is_none() {
            bad = Some(s.clone());
        }
        rows.push(ScanRow { s: JsonRat(s), q: JsonRat(q), t: JsonRat(t), degree });
    }
    let text = match format {
        Format::Json => to_json(&rows),
        Format::Text => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let _ = w.write_record(["s", "q", "t", "degree"]);
            for r in &rows {
                let _ = w.write_record([r.s.0.to_string(), r.q.0.to_string(), r.t.0.to_string(), r.degree.to_string()]);
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
        }
    };
    match bad {
        None => Outcome::report(text, EXIT_OK),
        Some(s) => Outcome {
            stdout: text,
            stderr: format!("error: family member s = {s} did not have degree 1\n"),
            code: EXIT_CHECK_FAILED,
        },
    }
}

#[derive(Serialize)]
struct SelftestReport<'a> {
    seed: u64,
    suites: &'a [SuiteOutcome],
    passed: bool,
}

pub fn cmd_selftest(seed: u64, format: Format) -> Outcome {
    let suites = run_all(seed);
    let passed = suites.iter().all(SuiteOutcome::ok);
    let text = match format {
        Format::Json => to_json(&SelftestReport { seed, suites: &suites, passed }),
        Format::Text => {
            let mut out = format!("seed: {seed}\n");
            for s in &suites {
                let status = if s.ok() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{status} {} ({}/{})", s.name, s.passed, s.total);
                if let Some(f) = &s.failure {
                    let _ = writeln!(out, "  first failure: {f}");
                }
            }
            out
        }
    };
    Outcome::report(text, if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}
