//! `mocktheta <eval|coeffs|verify|expand>`: evaluation, exact coefficient
//! tables, verification suites and expansions, one record per line.
//!
//! Exit codes: 0 success, 1 usage, 2 domain error, 3 non-convergence,
//! 4 failed verification.

mod record;

pub use record::{decimal, OutputFormat, OutputRecord, RecordWriter, Status};

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

use crate::asymptotics::{
    coeff_a, coeff_a_of, coeff_b, coeff_c, exact_to_f64, phi_root_exact, psi_root_exact, RootExpansion,
};
use crate::error::{Error, Result};
use crate::euler::euler_numbers;
use crate::jets::radial_expansion;
use crate::mordell::QuadratureConfig;
use crate::numeric::{loglog_slope, Complex, Real};
use crate::qseries::{eval_at_root, eval_interior, AlphaPoint, Form, RootOfUnity, SeriesId};
use crate::verify::{run_suite, Suite, SuiteParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

/// Largest `n` accepted by `coeffs`.
pub const MAX_COEFF_INDEX: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "mocktheta", version, about = "Mock theta functions phi and psi: values, expansions and identity checks")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a series inside the disc or at a root of unity.
    Eval(EvalArgs),
    /// Exact expansion coefficients.
    Coeffs(CoeffsArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Radial expansion at a root, or root-of-unity asymptotics.
    Expand(ExpandArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub series: SeriesId,
    /// Root of unity as `l/N`.
    #[arg(long, conflicts_with = "alpha", required_unless_present = "alpha")]
    pub root: Option<String>,
    /// `q = e^{-alpha}`, written `re+imi`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, default_value = "sumform")]
    pub form: Form,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CoeffKind {
    A,
    B,
    C,
    #[value(name = "aA")]
    AOfA,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long, value_enum)]
    pub kind: CoeffKind,
    #[arg(long)]
    pub n_max: usize,
    /// Rational parameter for `--kind aA`, e.g. `-5/1`.
    #[arg(long = "A", allow_hyphen_values = true, required_if_eq("kind", "aA"))]
    pub big_a: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 10)]
    pub k_max: u64,
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Quadrature tolerance.
    #[arg(long)]
    pub tol: Option<Real>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long)]
    pub series: SeriesId,
    /// Root `l/N` for the radial expansion.
    #[arg(long, required_unless_present = "asymptotic")]
    pub root: Option<String>,
    #[arg(long)]
    pub order: usize,
    /// Asymptotics at `ζ_{2k+1}` (phi) or `ζ_{4k}` (psi) instead of a radial expansion.
    #[arg(long)]
    pub asymptotic: bool,
    /// `a:b`, inclusive range of `k`.
    #[arg(long, default_value = "1:10")]
    pub k_range: String,
    /// Add the exact value and the error, then fit the error decay.
    #[arg(long)]
    pub compare: bool,
}

pub fn parse_root(s: &str) -> Result<RootOfUnity> {
    let (l, n) = s
        .split_once('/')
        .ok_or_else(|| Error::Domain(format!("root {s:?} is not of the form l/N")))?;
    let l: i64 = l.trim().parse().map_err(|_| Error::Domain(format!("bad numerator in {s:?}")))?;
    let n: u64 = n.trim().parse().map_err(|_| Error::Domain(format!("bad order in {s:?}")))?;
    RootOfUnity::new(l, n)
}

pub fn parse_alpha(s: &str) -> Result<Complex> {
    s.trim()
        .parse::<Complex>()
        .map_err(|_| Error::Domain(format!("alpha {s:?} is not of the form re+imi")))
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| Error::Domain(format!("{s:?} is not a rational p/q")))
}

fn parse_k_range(s: &str) -> Result<(u64, u64)> {
    let bad = || Error::Domain(format!("k-range {s:?} is not of the form a:b with 1 <= a < b"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a >= b {
        return Err(bad());
    }
    Ok((a, b))
}

fn exit_code(err: &Error) -> i32 {
    match record::status_of(err) {
        Status::Nonconvergent => EXIT_CONVERGENCE,
        _ => EXIT_DOMAIN,
    }
}

/// Parses `args` (program name first), runs the command and writes records
/// to `out`. Returns the process exit code.
pub fn run<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut w = RecordWriter::new(out, cli.format);
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a, &mut w),
        Command::Coeffs(a) => cmd_coeffs(a, &mut w),
        Command::Verify(a) => cmd_verify(a, &mut w),
        Command::Expand(a) => cmd_expand(a, &mut w),
    };
    result.unwrap_or_else(|e| {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return EXIT_OK;
        }
        eprintln!("mocktheta: {e}");
        EXIT_USAGE
    })
}

type Outcome = io::Result<i32>;

fn emit_error<W: Write>(w: &mut RecordWriter<'_, W>, rec: OutputRecord, err: &Error) -> Outcome {
    w.write(&rec.failed(err))?;
    Ok(exit_code(err))
}

pub fn cmd_eval<W: Write>(a: &EvalArgs, w: &mut RecordWriter<'_, W>) -> Outcome {
    let mut rec = OutputRecord::new("eval").input("series", a.series);
    let value = if let Some(root) = &a.root {
        rec = rec.input("root", root);
        parse_root(root).and_then(|r| eval_at_root(a.series, r)).map(|v| (v, 0.0))
    } else {
        let alpha = a.alpha.as_deref().unwrap_or_default();
        rec = rec.input("alpha", alpha).input("form", a.form).input("tol", a.tol);
        parse_alpha(alpha)
            .and_then(AlphaPoint::new)
            .and_then(|p| eval_interior(a.series, p, a.form, a.tol))
            .map(|v| (v, a.tol * v.norm().max(1.0)))
    };
    match value {
        Ok((v, err)) => {
            w.write(&rec.value(v).error_estimate(err))?;
            Ok(EXIT_OK)
        }
        Err(e) => emit_error(w, rec, &e),
    }
}

pub fn cmd_coeffs<W: Write>(a: &CoeffsArgs, w: &mut RecordWriter<'_, W>) -> Outcome {
    if a.n_max > MAX_COEFF_INDEX {
        eprintln!("mocktheta: --n-max {} exceeds {MAX_COEFF_INDEX}", a.n_max);
        return Ok(EXIT_USAGE);
    }
    let big_a = match (a.kind, &a.big_a) {
        (CoeffKind::AOfA, Some(s)) => match parse_rational(s) {
            Ok(r) => Some(r),
            Err(e) => {
                eprintln!("mocktheta: {e}");
                return Ok(EXIT_USAGE);
            }
        },
        _ => None,
    };
    let table = euler_numbers(a.n_max);
    let kind = match a.kind {
        CoeffKind::A => "a",
        CoeffKind::B => "b",
        CoeffKind::C => "c",
        CoeffKind::AOfA => "aA",
    };
    for n in 0..=a.n_max {
        let mut rec = OutputRecord::new("coeffs").input("kind", kind).input("n", n);
        if let Some(r) = &big_a {
            rec = rec.input("A", r);
        }
        let row = match a.kind {
            CoeffKind::A => coeff_a(n, &table).map(|c| (Complex::new(exact_to_f64(&c), 0.0), c.to_string())),
            _ => {
                let c = match a.kind {
                    CoeffKind::B => coeff_b(n, &table),
                    CoeffKind::C => coeff_c(n, &table),
                    _ => coeff_a_of(n, big_a.as_ref().expect("checked above"), &table),
                };
                c.map(|c| (c.to_complex(), c.to_string()))
            }
        };
        match row {
            Ok((v, exact)) => w.write(&rec.value(v).error_estimate(0.0).exact(exact))?,
            Err(e) => return emit_error(w, rec, &e),
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify<W: Write>(a: &VerifyArgs, w: &mut RecordWriter<'_, W>) -> Outcome {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        match a.suite.parse() {
            Ok(s) => vec![s],
            Err(e) => {
                eprintln!("mocktheta: {e}");
                return Ok(EXIT_USAGE);
            }
        }
    };
    let mut params = SuiteParams {
        samples: a.samples,
        k_max: a.k_max,
        n_max: a.n_max,
        ..SuiteParams::default()
    };
    if let Some(seed) = a.seed {
        params.seed = seed;
    }
    if let Some(tol) = a.tol {
        match QuadratureConfig::with_tolerance(tol) {
            Ok(cfg) => params.quad = cfg,
            Err(e) => {
                eprintln!("mocktheta: {e}");
                return Ok(EXIT_USAGE);
            }
        }
    }
    let (mut passed, mut total) = (0usize, 0usize);
    for suite in suites {
        let checks = match run_suite(suite, &params) {
            Ok(c) => c,
            Err(e) => return emit_error(w, OutputRecord::new("verify").input("suite", suite), &e),
        };
        for c in checks {
            total += 1;
            let ok = c.passed();
            passed += ok as usize;
            let mut rec = OutputRecord::new("verify")
                .input("suite", suite)
                .input("check", &c.name)
                .input("threshold", decimal(c.threshold))
                .input(
                    "bound",
                    match c.bound {
                        crate::verify::Bound::AtMost => "<=",
                        crate::verify::Bound::AtLeast => ">=",
                    },
                );
            for (k, v) in &c.inputs {
                rec = rec.input(k, v);
            }
            if c.value.is_nan() {
                rec.status = Status::Nonconvergent;
            } else {
                rec = rec.value(Complex::new(c.value, 0.0));
            }
            let verdict = if ok { "PASS" } else { "FAIL" };
            rec = rec.note(match &c.note {
                Some(n) => format!("{verdict}; {n}"),
                None => verdict.to_string(),
            });
            w.write(&rec)?;
        }
    }
    let all = passed == total;
    w.line(&format!("{} {passed}/{total}", if all { "PASS" } else { "FAIL" }))?;
    Ok(if all { EXIT_OK } else { EXIT_VERIFY })
}

pub fn cmd_expand<W: Write>(a: &ExpandArgs, w: &mut RecordWriter<'_, W>) -> Outcome {
    if !a.asymptotic {
        let root = a.root.as_deref().unwrap_or_default();
        let base = OutputRecord::new("expand").input("series", a.series).input("root", root).input("order", a.order);
        let series = match parse_root(root).and_then(|r| radial_expansion(a.series, r, a.order)) {
            Ok(s) => s,
            Err(e) => return emit_error(w, base, &e),
        };
        for (n, c) in series.coeffs.iter().enumerate() {
            w.write(&base.clone().input("n", n).value(*c))?;
        }
        return Ok(EXIT_OK);
    }
    let base = OutputRecord::new("expand")
        .input("series", a.series)
        .input("order", a.order)
        .input("asymptotic", true);
    let (k_lo, k_hi) = match parse_k_range(&a.k_range) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("mocktheta: {e}");
            return Ok(EXIT_USAGE);
        }
    };
    if !matches!(a.series, SeriesId::Phi | SeriesId::Psi) {
        let e = Error::Domain(format!("no root asymptotics for {}", a.series));
        return emit_error(w, base, &e);
    }
    let exp = RootExpansion::new(a.order);
    let mut ms = Vec::new();
    let mut errors = Vec::new();
    for k in k_lo..=k_hi {
        let (m, approx, exact) = match a.series {
            SeriesId::Phi => (2 * k + 1, exp.phi(k), phi_root_exact(k)),
            _ => (4 * k, exp.psi(k), psi_root_exact(k)),
        };
        let mut rec = base.clone().input("k", k).input("m", m).value(approx);
        if a.compare {
            match exact {
                Ok(x) => {
                    let err = (x - approx).norm();
                    ms.push(m as Real);
                    errors.push(err);
                    rec = rec.error_estimate(err).exact(format!("{}{:+.16e}i", decimal(x.re), x.im));
                }
                Err(e) => return emit_error(w, rec, &e),
            }
        }
        w.write(&rec)?;
    }
    if a.compare && ms.len() >= 2 {
        let slope = -loglog_slope(&ms, &errors);
        let rec = base
            .clone()
            .input("fit", "error decay exponent in m")
            .input("k_range", &a.k_range)
            .value(Complex::new(slope, 0.0));
        w.write(&rec)?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let mut full = vec!["mocktheta"];
        full.extend_from_slice(args);
        let code = run(full, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn parsers() {
        let r = parse_root("2/6").unwrap();
        assert_eq!((r.numerator(), r.order()), (1, 3));
        assert!(parse_root("1/0").is_err());
        assert!(parse_root("x").is_err());
        assert_eq!(parse_alpha("0.8+0.5i").unwrap(), Complex::new(0.8, 0.5));
        assert_eq!(parse_alpha("1.0").unwrap(), Complex::new(1.0, 0.0));
        assert_eq!(parse_alpha("1e-3-2i").unwrap(), Complex::new(1e-3, -2.0));
        assert_eq!(parse_rational("-5/1").unwrap(), BigRational::from_integer((-5).into()));
        assert_eq!(parse_k_range("5:50").unwrap(), (5, 50));
        assert!(parse_k_range("5:5").is_err());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["eval"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["eval", "--series", "chi", "--root", "0/1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["coeffs", "--kind", "a", "--n-max", "17"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["coeffs", "--kind", "aA", "--n-max", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    }

    #[test]
    fn domain_and_convergence_codes() {
        let (code, out) = run_str(&["eval", "--series", "phi", "--root", "1/4"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(out.contains("DOMAIN_ERROR"));
        let (code, _) = run_str(&["eval", "--series", "psi", "--alpha", "1e-5", "--tol", "1e-16"]);
        assert_eq!(code, EXIT_CONVERGENCE);
        let (code, _) = run_str(&["expand", "--series", "phi", "--root", "1/4", "--order", "2"]);
        assert_eq!(code, EXIT_DOMAIN);
    }
}
