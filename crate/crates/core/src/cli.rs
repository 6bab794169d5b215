//! Command-line front end: single classification, `f` sampling and batch mode.
//!
//! Exit statuses: 0 success, 1 input error, 2 degenerate classification,
//! 3 disagreement with the oracle in `--verify` mode.

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::Parser;
use rayon::prelude::*;
use serde::de::Deserializer;
use serde::ser::{self, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::classify::{classify, CaseLabel, Classification, Flag};
use crate::error::Error;
use crate::oracle::{oracle_report, OracleReport};
use crate::poly::{depress, DepressedQuartic, GeneralQuartic};
use crate::segments::Tolerances;
use crate::trig::{boundary_values, reduce};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "quartic-trig",
    version,
    about = "Count and locate the real roots of a real quartic"
)]
struct Args {
    /// General quartic a4 z^4 + a3 z^3 + a2 z^2 + a1 z + a0 (a4 != 0)
    #[arg(long, value_name = "A4,A3,A2,A1,A0", allow_hyphen_values = true,
          conflicts_with = "depressed")]
    coeffs: Option<String>,

    /// Depressed quartic t^4 + m t^2 + p t + q
    #[arg(long, value_name = "M,P,Q", allow_hyphen_values = true)]
    depressed: Option<String>,

    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,

    /// Cross-check against the Sturm and all-roots oracles
    #[arg(long)]
    verify: bool,

    /// Print N evenly spaced samples of f on [0, pi] as CSV
    #[arg(long, value_name = "N")]
    sample_f: Option<usize>,

    /// One quartic per line (m,p,q or a4,a3,a2,a1,a0); JSON lines out
    #[arg(long, value_name = "FILE", conflicts_with_all = ["coeffs", "depressed", "sample_f"])]
    batch: Option<PathBuf>,

    /// Multiplies every zero-detection tolerance
    #[arg(long, value_name = "X", default_value_t = 1.0)]
    tol_scale: f64,
}

/// Bad user input; the message names the offending token.
#[derive(Debug, Clone, PartialEq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuarticInput {
    /// `[a4, a3, a2, a1, a0]`
    General([f64; 5]),
    /// `[m, p, q]`
    Depressed([f64; 3]),
}

fn parse_list(text: &str, what: &str) -> Result<Vec<f64>, InputError> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| InputError(format!("invalid coefficient '{tok}' in {what}")))
        })
        .collect()
}

impl QuarticInput {
    pub fn parse_general(text: &str) -> Result<Self, InputError> {
        let v = parse_list(text, "--coeffs")?;
        let arr: [f64; 5] = v.try_into().map_err(|v: Vec<f64>| {
            InputError(format!("--coeffs expects 5 values a4,a3,a2,a1,a0, got {}", v.len()))
        })?;
        if arr[0] == 0.0 {
            return Err(InputError("leading coefficient a4 must be nonzero".into()));
        }
        Ok(Self::General(arr))
    }

    pub fn parse_depressed(text: &str) -> Result<Self, InputError> {
        let v = parse_list(text, "--depressed")?;
        let arr: [f64; 3] = v.try_into().map_err(|v: Vec<f64>| {
            InputError(format!("--depressed expects 3 values m,p,q, got {}", v.len()))
        })?;
        Ok(Self::Depressed(arr))
    }

    /// A batch line: three values are `m,p,q`, five are `a4,...,a0`.
    pub fn parse_line(line: &str) -> Result<Self, InputError> {
        let line = line.trim();
        if line.is_empty() {
            return Err(InputError("empty line".into()));
        }
        let v = parse_list(line, "line")?;
        match v.len() {
            3 => Self::parse_depressed(line),
            5 => Self::parse_general(line),
            n => Err(InputError(format!("expected 3 or 5 values, got {n}"))),
        }
    }

    /// Normalizes to monic and removes the cubic term.
    pub fn to_depressed(&self) -> Result<DepressedQuartic, InputError> {
        match *self {
            Self::General([a4, a3, a2, a1, a0]) => {
                Ok(depress(&GeneralQuartic::from_leading(a4, a3, a2, a1, a0)?)?)
            }
            Self::Depressed([m, p, q]) => Ok(DepressedQuartic::new(m, p, q)?),
        }
    }

    fn form(&self) -> &'static str {
        match self {
            Self::General(_) => "general",
            Self::Depressed(_) => "depressed",
        }
    }

    fn coeffs(&self) -> Vec<f64> {
        match self {
            Self::General(c) => c.to_vec(),
            Self::Depressed(c) => c.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: QuarticInput,
    pub verify: bool,
    pub format: OutputFormat,
    pub sample_f: Option<usize>,
    pub tol: Tolerances,
}

impl RunConfig {
    pub fn new(input: QuarticInput) -> Self {
        Self {
            input,
            verify: false,
            format: OutputFormat::Text,
            sample_f: None,
            tol: Tolerances::default(),
        }
    }
}

/// `%.17g`: 17 significant digits, trailing zeros dropped, exponent form
/// outside `1e-5 <= |x| < 1e17`.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let sign = if negative { "-" } else { "" };

    fn strip(frac: &str) -> &str {
        frac.trim_end_matches('0')
    }

    if (-5..17).contains(&exp) {
        let (int, frac) = if exp >= 0 {
            let split = exp as usize + 1;
            (digits[..split].to_string(), digits[split..].to_string())
        } else {
            ("0".to_string(), "0".repeat((-exp - 1) as usize) + &digits)
        };
        let frac = strip(&frac);
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        let frac = strip(&digits[1..]);
        let exp_sign = if exp < 0 { "-" } else { "+" };
        let dot = if frac.is_empty() { String::new() } else { format!(".{frac}") };
        format!("{sign}{}{dot}e{exp_sign}{:02}", &digits[..1], exp.abs())
    }
}

/// A float written to JSON with [`format_float`]; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let text = if self.0.is_finite() { format_float(self.0) } else { "null".into() };
        let raw = RawValue::from_string(text).map_err(ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Option<f64> = Option::deserialize(d)?;
        Ok(Num(v.unwrap_or(f64::NAN)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputSection {
    pub form: String,
    pub coeffs: Vec<Num>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepressedSection {
    pub m: Num,
    pub p: Num,
    pub q: Num,
    pub shift: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrigSection {
    pub u: Num,
    pub a: Num,
    pub b: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticEntry {
    pub quantity: String,
    pub value: Num,
    pub threshold: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationSection {
    pub n_int: Option<usize>,
    pub n_ext: Option<usize>,
    pub n_real_distinct: usize,
    pub n_real_multiplicity: usize,
    pub case: String,
    pub flags: Vec<String>,
    pub diagnostics: Vec<DiagnosticEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootEntry {
    /// Depressed coordinate `t`.
    pub value: Num,
    /// Original coordinate `z = t - shift`.
    pub z: Num,
    pub multiplicity: u8,
    pub origin: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexEntry {
    pub re: Num,
    pub im: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSection {
    pub sturm_count: usize,
    pub multiple_roots: bool,
    pub roots: Vec<ComplexEntry>,
    pub discriminant: Num,
    pub discriminant_imag: Num,
    pub discriminant_consistent: bool,
    pub degeneracy_margin: Num,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: InputSection,
    pub depressed: DepressedSection,
    pub trig: Option<TrigSection>,
    pub classification: ClassificationSection,
    pub roots: Vec<RootEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn is_degenerate(&self) -> bool {
        self.classification.case == CaseLabel::Degenerate.as_str()
    }

    pub fn oracle_disagrees(&self) -> bool {
        self.oracle.as_ref().is_some_and(|o| !o.agrees)
    }

    pub fn exit_status(&self) -> i32 {
        if self.oracle_disagrees() {
            EXIT_DISAGREE
        } else if self.is_degenerate() {
            EXIT_DEGENERATE
        } else {
            EXIT_OK
        }
    }
}

fn oracle_section(c: &Classification, o: &OracleReport) -> OracleSection {
    OracleSection {
        sturm_count: o.n_real_distinct,
        multiple_roots: o.multiple_roots,
        roots: o
            .all_roots
            .iter()
            .map(|z| ComplexEntry { re: Num(z.re), im: Num(z.im) })
            .collect(),
        discriminant: Num(o.discriminant.value),
        discriminant_imag: Num(o.discriminant.imag),
        discriminant_consistent: o.discriminant.is_consistent(),
        degeneracy_margin: Num(o.degeneracy_margin),
        agrees: c.n_real_distinct == o.n_real_distinct,
    }
}

/// Everything the CLI prints about one quartic.
pub fn build_report(
    input: &QuarticInput,
    tol: &Tolerances,
    verify: bool,
) -> Result<(Report, Classification), InputError> {
    let poly = input.to_depressed()?;
    let c = classify(&poly, tol)?;
    let oracle = if verify {
        Some(oracle_section(&c, &oracle_report(&poly)?))
    } else {
        None
    };
    let report = Report {
        input: InputSection {
            form: input.form().into(),
            coeffs: input.coeffs().into_iter().map(Num).collect(),
        },
        depressed: DepressedSection {
            m: Num(poly.m()),
            p: Num(poly.p()),
            q: Num(poly.q()),
            shift: Num(poly.shift()),
        },
        trig: c.trig.map(|tp| TrigSection { u: Num(tp.u()), a: Num(tp.a()), b: Num(tp.b()) }),
        classification: ClassificationSection {
            n_int: c.n_int,
            n_ext: c.n_ext,
            n_real_distinct: c.n_real_distinct,
            n_real_multiplicity: c.n_real_multiplicity,
            case: c.case.as_str().into(),
            flags: c.flags.iter().map(|f| f.as_str().to_string()).collect(),
            diagnostics: c
                .diagnostics
                .iter()
                .map(|d| DiagnosticEntry {
                    quantity: d.quantity.clone(),
                    value: Num(d.value),
                    threshold: Num(d.threshold),
                })
                .collect(),
        },
        roots: c
            .roots
            .iter()
            .map(|r| RootEntry {
                value: Num(r.value),
                z: Num(poly.to_original(r.value)),
                multiplicity: r.multiplicity,
                origin: r.origin.as_str().into(),
            })
            .collect(),
        oracle,
    };
    Ok((report, c))
}

fn join(values: impl IntoIterator<Item = f64>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn summary(c: &Classification) -> String {
    match c.case {
        CaseLabel::AllComplex if c.has_flag(Flag::SufficientAllComplex) => {
            "all four roots complex (Theorem: b > |a|+1)".into()
        }
        CaseLabel::AllComplex => "all four roots complex".into(),
        CaseLabel::TwoRealA if c.has_flag(Flag::SufficientTwoExterior) => {
            "two real roots, one on each side of [-u, u] (b < -(|a|+1))".into()
        }
        CaseLabel::TwoRealA => "two real roots, one on each side of [-u, u]".into(),
        CaseLabel::TwoRealB => "two real roots, both in [-u, u]".into(),
        CaseLabel::TwoRealC => "two real roots, one in [-u, u] and one outside".into(),
        CaseLabel::FourReal => "all four roots real".into(),
        CaseLabel::MNonNegConvex => format!(
            "{} real root(s) (m >= 0, globally convex)",
            c.n_real_distinct
        ),
        CaseLabel::Degenerate => "degenerate: a decisive quantity is within tolerance of zero".into(),
    }
}

fn write_text(out: &mut dyn Write, report: &Report, c: &Classification) -> io::Result<()> {
    let d = &report.depressed;
    writeln!(
        out,
        "depressed quartic: t^4 + ({}) t^2 + ({}) t + ({})   [z = t - {}]",
        d.m.0, d.p.0, d.q.0, d.shift.0
    )?;
    match &c.trig {
        Some(tp) => {
            let (f0, fpi) = boundary_values(tp);
            writeln!(out, "trig parameters: u = {}, a = {}, b = {}", tp.u(), tp.a(), tp.b())?;
            writeln!(out, "boundary values: f(0) = {f0}, f(pi) = {fpi}")?;
            writeln!(
                out,
                "counts: n_int = {}, n_ext = {}, n_real = {} (with multiplicity {})",
                c.n_int.unwrap_or(0),
                c.n_ext.unwrap_or(0),
                c.n_real_distinct,
                c.n_real_multiplicity
            )?;
        }
        None => writeln!(out, "m >= 0: no trigonometric reduction, convex path used")?,
    }
    writeln!(out, "case: {}", c.case)?;
    writeln!(out, "{}", summary(c))?;
    if !c.roots.is_empty() {
        writeln!(out, "real roots (t): {}", join(c.roots.iter().map(|r| r.value)))?;
        writeln!(out, "real roots (z): {}", join(c.shifted_roots()))?;
    }
    for diag in &c.diagnostics {
        writeln!(out, "near zero: {} = {:e} (threshold {:e})", diag.quantity, diag.value, diag.threshold)?;
    }
    if let Some(o) = &report.oracle {
        writeln!(
            out,
            "oracle: sturm count {}, {}",
            o.sturm_count,
            if o.agrees { "agrees" } else { "DISAGREES" }
        )?;
        let roots: Vec<String> = o
            .roots
            .iter()
            .map(|z| format!("{}{:+}i", z.re.0, z.im.0))
            .collect();
        writeln!(out, "oracle roots: {}", roots.join(", "))?;
        writeln!(out, "discriminant (from roots): {:e}", o.discriminant.0)?;
    }
    Ok(())
}

/// Classifies one quartic and writes the report; returns the exit status.
pub fn run_classify(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (report, c) = match build_report(&cfg.input, &cfg.tol, cfg.verify) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let written = match cfg.format {
        OutputFormat::Json => writeln!(out, "{}", report.to_json()),
        OutputFormat::Text => write_text(out, &report, &c),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_INPUT;
    }
    if report.is_degenerate() && !cfg.verify {
        let _ = writeln!(
            err,
            "note: near-degenerate input; rerun with --verify to compare against the Sturm and all-roots oracles"
        );
    }
    if report.oracle_disagrees() {
        let _ = writeln!(err, "error: classifier and oracle disagree on the number of real roots");
    }
    report.exit_status()
}

/// `theta,f` CSV with `n` evenly spaced rows covering `[0, pi]`.
pub fn sample_f(cfg: &RunConfig, n: usize, out: &mut dyn Write) -> Result<(), InputError> {
    if n < 2 {
        return Err(InputError(format!("--sample-f needs N >= 2, got {n}")));
    }
    let poly = cfg.input.to_depressed()?;
    let tp = reduce(&poly).map_err(|_| InputError("trigonometric reduction requires m < 0".into()))?;
    let io_err = |e: io::Error| InputError(e.to_string());
    writeln!(out, "theta,f").map_err(io_err)?;
    for k in 0..n {
        let theta = if k == n - 1 {
            std::f64::consts::PI
        } else {
            std::f64::consts::PI * k as f64 / (n - 1) as f64
        };
        writeln!(out, "{},{}", format_float(theta), format_float(tp.f(theta))).map_err(io_err)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    line: usize,
    error: &'a str,
}

/// One JSON record per input line, in input order.
pub fn run_batch(
    path: &Path,
    tol: &Tolerances,
    verify: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return EXIT_INPUT;
        }
    };
    let lines: Vec<&str> = text.lines().collect();
    let records: Vec<(String, bool)> = lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| {
            match QuarticInput::parse_line(line).and_then(|input| build_report(&input, tol, verify)) {
                Ok((report, _)) => (report.to_json(), report.oracle_disagrees()),
                Err(e) => {
                    let rec = ErrorRecord { line: i + 1, error: &e.0 };
                    (serde_json::to_string(&rec).expect("record serializes"), false)
                }
            }
        })
        .collect();
    let mut disagreement = false;
    for (json, disagrees) in &records {
        disagreement |= disagrees;
        if let Err(e) = writeln!(out, "{json}") {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    }
    if disagreement {
        EXIT_DISAGREE
    } else {
        EXIT_OK
    }
}

/// Parses `args` (program name first) and runs; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    if !(args.tol_scale.is_finite() && args.tol_scale > 0.0) {
        let _ = writeln!(err, "error: invalid --tol-scale '{}'", args.tol_scale);
        return EXIT_INPUT;
    }
    let tol = Tolerances::scaled(args.tol_scale);

    if let Some(path) = &args.batch {
        return run_batch(path, &tol, args.verify, out, err);
    }

    let input = match (&args.coeffs, &args.depressed) {
        (Some(c), _) => QuarticInput::parse_general(c),
        (None, Some(d)) => QuarticInput::parse_depressed(d),
        (None, None) => Err(InputError("one of --coeffs, --depressed or --batch is required".into())),
    };
    let input = match input {
        Ok(i) => i,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let cfg = RunConfig {
        input,
        verify: args.verify,
        format: if args.json { OutputFormat::Json } else { OutputFormat::Text },
        sample_f: args.sample_f,
        tol,
    };
    if let Some(n) = cfg.sample_f {
        return match sample_f(&cfg, n, out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            }
        };
    }
    run_classify(&cfg, out, err)
}

pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    code
}
