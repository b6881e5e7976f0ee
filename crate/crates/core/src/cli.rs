//! Command-line front end: `count`, `convert`, `isolate` and `paper`.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 root on a strict endpoint,
//! 3 a certificate that was expected to pass did not.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cert::{certificates_to_json, run_suite, CertError, Selector};
use crate::exact::{fraction_string, parse_rational, ExactError, Rational};
use crate::expr::{parse_expr, ExprError, Mode};
use crate::sturm::{count_roots, isolate_roots, EndpointPolicy, Interval, SturmError};
use crate::trig::{cos_to_alg, sin_to_alg, TrigError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_ENDPOINT_ROOT: i32 = 2;
pub const EXIT_CERT_FAILURE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sturmcert", version, about = "Exact Sturm root counting and positivity certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Strict,
    Shrink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClaimArg {
    Lemma1,
    Lemma7,
    Lemma8,
    Lemma11,
    All,
}

impl From<ClaimArg> for Selector {
    fn from(c: ClaimArg) -> Self {
        match c {
            ClaimArg::Lemma1 => Selector::Lemma1,
            ClaimArg::Lemma7 => Selector::Lemma7,
            ClaimArg::Lemma8 => Selector::Lemma8,
            ClaimArg::Lemma11 => Selector::Lemma11,
            ClaimArg::All => Selector::All,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count distinct real roots in (lo, hi].
    Count {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        var: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lo: String,
        #[arg(long, allow_hyphen_values = true)]
        hi: String,
        #[arg(long, value_enum, default_value = "strict")]
        endpoint_policy: PolicyArg,
        /// Initial nudge for the shrink policy.
        #[arg(long, default_value = "1/1000")]
        margin: String,
        /// Write a JSON report to this path (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Rewrite a cosine or sine polynomial in the algebraic variable Y = cos(x).
    Convert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Multiply every frequency by this positive integer first.
        #[arg(long, default_value_t = 1)]
        scale: usize,
        /// Name of the algebraic variable.
        #[arg(long, default_value = "Y")]
        var: String,
    },
    /// Isolate the distinct real roots in (lo, hi] into intervals of at most the given width.
    Isolate {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        var: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lo: String,
        #[arg(long, allow_hyphen_values = true)]
        hi: String,
        #[arg(long, default_value = "1/1000")]
        width: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Re-run the built-in certificate suite.
    Paper {
        #[arg(value_enum, default_value = "all")]
        claim: ClaimArg,
        /// Write the certificates here; the numeric minimizer goes to `<path>.info.json`.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Number(#[from] ExactError),
    #[error(transparent)]
    Sturm(#[from] SturmError),
    #[error(transparent)]
    Trig(#[from] TrigError),
    #[error(transparent)]
    Cert(#[from] CertError),
    #[error("{0}")]
    Usage(String),
    #[error("{0} certificate(s) failed unexpectedly")]
    CertificationFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Sturm(SturmError::EndpointRoot(..)) => EXIT_ENDPOINT_ROOT,
            CliError::CertificationFailed(_) => EXIT_CERT_FAILURE,
            CliError::Cert(CertError::Sturm(SturmError::EndpointRoot(..))) => EXIT_ENDPOINT_ROOT,
            _ => EXIT_USAGE,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn interval(lo: &str, hi: &str) -> Result<Interval, CliError> {
    let iv = Interval::new(parse_rational(lo)?, parse_rational(hi)?)?;
    Ok(iv)
}

fn write_json(path: &Path, value: &serde_json::Value, out: &mut dyn Write) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(CertError::from)?;
    text.push('\n');
    if path == Path::new("-") {
        out.write_all(text.as_bytes()).map_err(CertError::from)?;
    } else {
        std::fs::write(path, text).map_err(CertError::from)?;
    }
    Ok(())
}

fn io(e: std::io::Error) -> CliError {
    CliError::Cert(CertError::Io(e))
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Count { expr, var, lo, hi, endpoint_policy, margin, json } => {
            let p = parse_expr(&expr, Mode::Algebraic)?.to_poly(var.as_deref())?;
            let iv = interval(&lo, &hi)?;
            let policy = match endpoint_policy {
                PolicyArg::Strict => EndpointPolicy::Strict,
                PolicyArg::Shrink => EndpointPolicy::Shrink { margin: parse_rational(&margin)? },
            };
            let rc = count_roots(&p, &iv, &policy)?;
            match json {
                Some(path) => {
                    let report = json!({
                        "polynomial": p.render(),
                        "interval": [fraction_string(iv.lo()), fraction_string(iv.hi())],
                        "variations_at_lo": rc.variations_at_lo(),
                        "variations_at_hi": rc.variations_at_hi(),
                        "root_count": rc.count(),
                        "endpoint_adjustments": rc.adjustments(),
                    });
                    write_json(&path, &report, out)?;
                    if path != Path::new("-") {
                        writeln!(out, "{}", rc.count()).map_err(io)?;
                    }
                }
                None => writeln!(out, "{}", rc.count()).map_err(io)?,
            }
            for adj in rc.adjustments() {
                writeln!(out, "# {} endpoint moved from {} to {}", adj.endpoint, adj.original, adj.adjusted)
                    .map_err(io)?;
            }
        }
        Command::Convert { expr, scale, var } => {
            let parsed = parse_expr(&expr, Mode::Trig)?;
            let t = parsed.to_trig()?.scale_argument(scale)?;
            let line = match (t.has_sine_terms(), t.has_cosine_terms()) {
                (true, true) => {
                    return Err(CliError::Usage("cannot convert a mix of sine and cosine terms".into()));
                }
                (true, false) => {
                    let q = sin_to_alg(&t, &var)?;
                    format!("sin({})*({})", t.var(), q.render())
                }
                _ => cos_to_alg(&t, &var)?.render(),
            };
            writeln!(out, "{line}").map_err(io)?;
        }
        Command::Isolate { expr, var, lo, hi, width, json } => {
            let p = parse_expr(&expr, Mode::Algebraic)?.to_poly(var.as_deref())?;
            let iv = interval(&lo, &hi)?;
            let width: Rational = parse_rational(&width)?;
            let iso = isolate_roots(&p, &iv, &width)?;
            for piece in &iso.intervals {
                writeln!(out, "{piece}").map_err(io)?;
            }
            if let Some(path) = json {
                let report = json!({
                    "polynomial": p.render(),
                    "interval": [fraction_string(iv.lo()), fraction_string(iv.hi())],
                    "intervals": iso
                        .intervals
                        .iter()
                        .map(|i| [fraction_string(i.lo()), fraction_string(i.hi())])
                        .collect::<Vec<_>>(),
                    "midpoint_offsets": iso.midpoint_offsets.iter().map(fraction_string).collect::<Vec<_>>(),
                });
                write_json(&path, &report, out)?;
            }
        }
        Command::Paper { claim, json } => {
            let suite = run_suite(claim.into())?;
            for c in &suite.certificates {
                writeln!(out, "{}", c.summary_line()).map_err(io)?;
            }
            for r in &suite.informational {
                writeln!(
                    out,
                    "{}: minimizer {:.10} minimum {:.10} in [{}, {}] ({})",
                    r.label, r.minimizer, r.minimum, r.bracket[0], r.bracket[1], r.note
                )
                .map_err(io)?;
            }
            if let Some(path) = json {
                std::fs::write(&path, certificates_to_json(&suite.certificates)?).map_err(io)?;
                let mut info = serde_json::to_string_pretty(&suite.informational).map_err(CertError::from)?;
                info.push('\n');
                std::fs::write(info_path(&path), info).map_err(io)?;
            }
            let failed = suite.unexpected_failures().len();
            if failed > 0 {
                return Err(CliError::CertificationFailed(failed));
            }
        }
    }
    Ok(())
}

/// `<path>.info.json` next to the certificate file.
pub fn info_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".info.json");
    PathBuf::from(s)
}
