//! Command-line front end.
//!
//! Subcommands: `poly`, `series`, `invert`, `bounds`, `sweep`, `verify`.
//! Output is a UTF-8 table (default), RFC-4180 CSV, or one JSON document.
//!
//! Exit codes: 0 success, 1 bound violation found by `verify`, 2 usage error,
//! 3 mathematical degeneracy (a vanishing denominator).
//!
//! The `sweep` CSV header is fixed:
//!
//! ```text
//! x,eta,theta,threshold,branch,published,derived
//! ```
//!
//! with numbers written to 12 significant digits and `nan` in every computed
//! column of a degenerate cell.
//!
//! The `verify` CSV header is fixed:
//!
//! ```text
//! family,x,objective,max,p1,p2,q2,published,derived,margin,status
//! ```

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_a2, bound_a3, fekete_szego_bound, theta, BoundReport, Branch, ClassPoint, Variant};
use crate::error::Error;
use crate::poly::{family_params, horadam_sequence, Family, HoradamParams};
use crate::rational::{fmt_rational, parse_rational, to_f64, Rational};
use crate::series::{generating_series, TruncatedSeries};
use crate::verify::{margin_sweep, GridSpec, Objective, SearchResult, SweepRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

pub const SWEEP_HEADER: [&str; 7] = ["x", "eta", "theta", "threshold", "branch", "published", "derived"];

pub const VERIFY_HEADER: [&str; 11] = [
    "family",
    "x",
    "objective",
    "max",
    "p1",
    "p2",
    "q2",
    "published",
    "derived",
    "margin",
    "status",
];

const EXPLAIN: &str = "\
Known discrepancies in the published statements, and how this tool handles them:
  1. Inverse series: f^{-1}(w) is printed with w^2 and w^3 coefficients a2 and 2a2^2 - 3a3.
     Compositional inversion gives -a2 and 2a2^2 - a3; `invert` computes the true inverse.
  2. Fekete-Szego first branch: the published |2bx|/3 is twice |h2|/3, the value the
     coefficient identities support. `published` keeps |2bx|/3, `derived` uses
     2|h2| max(|theta|, 1/6).
  3. Fekete-Szego second branch: the denominator 3b^2x^2 - 4(pbx^2 + qa) can be negative;
     its absolute value is used. eta = 1 is always routed to the first branch.
  4. Chebyshev-U specialisation: the printed second branch 2|eta - 1|/(1 - t^2) lacks the
     factor t^3 obtained by substituting (a, b, p, q) = (1, 2, 2, -1) into the generic form.
  5. The identity for a2^2 prints the factor [6 + 8h3/h2^2]; only [6 - 8h3/h2^2] reproduces
     the |a2| bound, so the minus sign is used.
  6. Chebyshev-T row: T_0 = 1, T_1 = x force b = 1, not the b = 2 listed with the U row.
  7. The shift alpha in f'(z) < Omega(x, z) + 1 - alpha is fixed to a so that f'(0) = 1.
  8. The Chebyshev-U corollary labels its first bound |a1|; it is the |a2| bound.
";

#[derive(Debug, Parser)]
#[command(
    name = "horadam",
    version,
    about = "Horadam polynomials and bi-univalent coefficient bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Print the list of known formula discrepancies to stderr.
    #[arg(long, global = true)]
    pub explain: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantChoice {
    Published,
    Derived,
    Both,
}

impl VariantChoice {
    fn includes(self, v: Variant) -> bool {
        matches!(
            (self, v),
            (VariantChoice::Both, _)
                | (VariantChoice::Published, Variant::Published)
                | (VariantChoice::Derived, Variant::Derived)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveKind {
    A2,
    A3,
    Fs,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// Named family (fibonacci, lucas, pell, pell-lucas, chebyshev-u, chebyshev-t,
    /// horadam-numbers); `verify` accepts a comma-separated list.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print h_1 .. h_n as exact polynomials.
    Poly {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Expand the generating function at x through z^order.
    Series {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Invert f(z) = z + a2 z^2 + a3 z^3 + ... given a2, a3, ...
    Invert {
        /// Coefficients a2, a3, ... as decimals or fractions.
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
        /// Defaults to the order of f.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Coefficient bounds at one point.
    Bounds {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        eta: String,
        #[arg(long, value_enum, default_value_t = VariantChoice::Both)]
        variant: VariantChoice,
    },
    /// Fekete-Szego bounds over a grid of x and eta (`start:end:step`, a list, or a value).
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
    },
    /// Maximise |a2|, |a3| or |a3 - eta a2^2| over the feasible Schwarz coefficients.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// One or more x values.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "a2")]
        objective: Vec<ObjectiveKind>,
        /// eta values used by the `fs` objective.
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        eta: String,
        #[arg(long, default_value_t = 201)]
        grid: usize,
        /// Require |p2| <= 1 - |p1|^2.
        #[arg(long)]
        schwarz_pick: bool,
        /// Sweep complex p1, p2 with this many phases each.
        #[arg(long)]
        complex_phases: Option<usize>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Degenerate(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Degenerate(_) => EXIT_DEGENERATE,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Degenerate(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::DegenerateDenominator { quantity } => CliError::Degenerate(quantity),
            e if e.is_degeneracy() => CliError::Degenerate(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// A rendered report plus the exit code it implies.
struct Report {
    body: String,
    code: i32,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if cli.explain {
        eprint!("{EXPLAIN}");
    }
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e.message());
            return e.code();
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &report.body),
        None => std::io::stdout().write_all(report.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    report.code
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Poly { family, n } => cmd_poly(&resolve_one(family)?, *n, fmt),
        Command::Series { family, x, order } => cmd_series(&resolve_one(family)?, &number(x)?, *order, fmt),
        Command::Invert { coeffs, order } => cmd_invert(coeffs, *order, fmt),
        Command::Bounds {
            family,
            x,
            eta,
            variant,
        } => cmd_bounds(&resolve_one(family)?, &number(x)?, &number(eta)?, *variant, fmt),
        Command::Sweep { family, x, eta } => {
            cmd_sweep(&resolve_one(family)?, &number_list(x)?, &number_list(eta)?, fmt)
        }
        Command::Verify {
            family,
            x,
            objective,
            eta,
            grid,
            schwarz_pick,
            complex_phases,
        } => {
            let grid = GridSpec::new(*grid)
                .map_err(|e| usage(e.to_string()))?
                .with_schwarz_pick(*schwarz_pick)
                .with_phases(*complex_phases);
            let etas = number_list(eta)?;
            let mut objectives = Vec::new();
            for kind in objective {
                match kind {
                    ObjectiveKind::A2 => objectives.push(Objective::A2),
                    ObjectiveKind::A3 => objectives.push(Objective::A3),
                    ObjectiveKind::Fs => objectives.extend(etas.iter().map(|e| Objective::FeketeSzego(to_f64(e)))),
                }
            }
            let xs = number_list(x)?;
            let points: Vec<ClassPoint> = resolve_many(family)?
                .iter()
                .flat_map(|params| xs.iter().map(|x| ClassPoint::new(params.clone(), to_f64(x))))
                .collect();
            cmd_verify(&points, &objectives, &grid, fmt)
        }
    }
}

fn number(text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| usage(e.to_string()))
}

/// `start:end:step` (inclusive, exact), `v1,v2,...`, or a single value.
fn number_list(text: &str) -> Result<Vec<Rational>, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [start, end, step] => {
            let (start, end, step) = (number(start)?, number(end)?, number(step)?);
            if step <= Rational::zero() {
                return Err(usage("range step must be > 0"));
            }
            if end < start {
                return Err(usage("range end must not precede its start"));
            }
            let mut out = Vec::new();
            let mut v = start;
            while v <= end {
                out.push(v.clone());
                v += &step;
            }
            Ok(out)
        }
        [single] => single.split(',').map(number).collect(),
        _ => Err(usage(format!("bad range {text:?}; expected start:end:step"))),
    }
}

impl FamilyArgs {
    fn constants(&self) -> Result<Option<HoradamParams>, CliError> {
        let given = [&self.a, &self.b, &self.p, &self.q];
        let count = given.iter().filter(|v| v.is_some()).count();
        if count == 0 {
            return Ok(None);
        }
        if let Some(name) = &self.family {
            if name.parse::<Family>().ok() != Some(Family::Custom) {
                return Err(usage("a named family forbids --a/--b/--p/--q"));
            }
        }
        if count < 4 {
            return Err(usage("custom family requires all of --a, --b, --p, --q"));
        }
        let [a, b, p, q] = given.map(|v| v.as_deref().unwrap_or_default());
        Ok(Some(HoradamParams::custom(
            number(a)?,
            number(b)?,
            number(p)?,
            number(q)?,
        )))
    }

    fn named(&self) -> Result<Vec<HoradamParams>, CliError> {
        let names = self
            .family
            .as_deref()
            .ok_or_else(|| usage("either --family or all of --a, --b, --p, --q is required"))?;
        names
            .split(',')
            .map(|name| {
                let tag: Family = name.parse().map_err(|_| usage(format!("unknown family {name:?}")))?;
                if tag == Family::Custom {
                    return Err(usage("custom family requires all of --a, --b, --p, --q"));
                }
                Ok(family_params(tag))
            })
            .collect()
    }
}

fn resolve_many(args: &FamilyArgs) -> Result<Vec<HoradamParams>, CliError> {
    match args.constants()? {
        Some(params) => Ok(vec![params]),
        None => args.named(),
    }
}

fn resolve_one(args: &FamilyArgs) -> Result<HoradamParams, CliError> {
    let mut all = resolve_many(args)?;
    if all.len() != 1 {
        return Err(usage("this subcommand takes a single family"));
    }
    Ok(all.remove(0))
}

/// `%.12g`-style formatting; `nan` for NaN.
pub fn sig12(v: f64) -> String {
    sig(v, 12)
}

fn sig(v: f64, digits: usize) -> String {
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).map_err(|e| usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| usage(e.to_string()))
}

fn json_string<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub family: Family,
    pub a: String,
    pub b: String,
    pub p: String,
    pub q: String,
}

impl From<&HoradamParams> for ParamsDoc {
    fn from(p: &HoradamParams) -> Self {
        ParamsDoc {
            family: p.family,
            a: fmt_rational(&p.a),
            b: fmt_rational(&p.b),
            p: fmt_rational(&p.p),
            q: fmt_rational(&p.q),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyEntry {
    pub n: usize,
    pub poly: String,
    /// Ascending-degree exact coefficients.
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyDocument {
    pub params: ParamsDoc,
    pub polynomials: Vec<PolyEntry>,
}

fn cmd_poly(params: &HoradamParams, n: usize, fmt: Format) -> Result<Report, CliError> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let entries: Vec<PolyEntry> = horadam_sequence(params, n)
        .into_iter()
        .enumerate()
        .map(|(i, poly)| PolyEntry {
            n: i + 1,
            poly: poly.to_string(),
            coeffs: poly.coeffs().iter().map(fmt_rational).collect(),
        })
        .collect();
    let body = match fmt {
        Format::Table => entries.iter().fold(String::new(), |mut s, e| {
            let _ = writeln!(s, "h_{} = {}", e.n, e.poly);
            s
        }),
        Format::Csv => csv_string(
            std::iter::once(vec!["n".to_string(), "polynomial".to_string()])
                .chain(entries.iter().map(|e| vec![e.n.to_string(), e.poly.clone()])),
        )?,
        Format::Json => json_string(&PolyDocument {
            params: params.into(),
            polynomials: entries,
        })?,
    };
    Ok(Report::ok(body))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub x: String,
    /// Exact coefficients `c_0 .. c_N`.
    pub coeffs: Vec<String>,
    pub values: Vec<f64>,
}

fn series_to_string(s: &TruncatedSeries<Rational>, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = fmt_rational(&mag);
        let coef = if k > 0 && mag.is_one() {
            String::new()
        } else if k > 0 && !mag.is_integer() {
            format!("({body})")
        } else {
            body
        };
        match k {
            0 => out.push_str(&coef),
            1 => out.push_str(&format!("{coef}{var}")),
            _ => out.push_str(&format!("{coef}{var}^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    format!("{out} + O({var}^{})", s.order() + 1)
}

fn cmd_series(params: &HoradamParams, x: &Rational, order: usize, fmt: Format) -> Result<Report, CliError> {
    let s = generating_series(params, x, order);
    let body = match fmt {
        Format::Table => {
            let mut out = format!("Omega({}, z) = {}\n", fmt_rational(x), series_to_string(&s, "z"));
            for (k, c) in s.coeffs().iter().enumerate() {
                let _ = writeln!(out, "  h_{:<3} = {}", k + 1, fmt_rational(c));
            }
            out
        }
        Format::Csv => csv_string(
            std::iter::once(vec!["k".into(), "n".into(), "coefficient".into(), "value".into()]).chain(
                s.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| vec![k.to_string(), (k + 1).to_string(), fmt_rational(c), sig12(to_f64(c))]),
            ),
        )?,
        Format::Json => json_string(&SeriesDocument {
            x: fmt_rational(x),
            coeffs: s.coeffs().iter().map(fmt_rational).collect(),
            values: s.coeffs().iter().map(to_f64).collect(),
        })?,
    };
    Ok(Report::ok(body))
}

fn cmd_invert(coeffs: &[String], order: Option<usize>, fmt: Format) -> Result<Report, CliError> {
    let mut c = vec![Rational::zero(), Rational::one()];
    for text in coeffs {
        c.push(number(text)?);
    }
    let f_order = c.len() - 1;
    let order = order.unwrap_or(f_order);
    let f = TruncatedSeries::new(c, order.max(1));
    let g = f.invert(order)?;
    let body = match fmt {
        Format::Table => format!(
            "f(z)      = {}\nf^-1(w)   = {}\n",
            series_to_string(&f, "z"),
            series_to_string(&g, "w")
        ),
        Format::Csv => csv_string(std::iter::once(vec!["k".into(), "f".into(), "inverse".into()]).chain(
            (0..=g.order()).map(|k| vec![k.to_string(), fmt_rational(&f.coeff(k)), fmt_rational(&g.coeff(k))]),
        ))?,
        Format::Json => json_string(&serde_json::json!({
            "f": f.coeffs().iter().map(fmt_rational).collect::<Vec<_>>(),
            "inverse": g.coeffs().iter().map(fmt_rational).collect::<Vec<_>>(),
        }))?,
    };
    Ok(Report::ok(body))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FsEntry {
    pub value: f64,
    pub branch: Branch,
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FsPair {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub published: Option<FsEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived: Option<FsEntry>,
}

/// JSON layout of the `bounds` subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsDocument {
    pub params: ParamsDoc,
    pub x: f64,
    pub eta: f64,
    pub bound_a2: f64,
    pub bound_a3: f64,
    pub fs: FsPair,
    pub theta: f64,
    /// Published `|eta - 1|` cutoff.
    pub threshold: f64,
}

fn fs_entry(r: &BoundReport) -> FsEntry {
    FsEntry {
        value: r.value,
        branch: r.branch.expect("Fekete-Szego reports carry a branch"),
        threshold: r.threshold.expect("Fekete-Szego reports carry a threshold"),
    }
}

fn bounds_document(
    params: &HoradamParams,
    x: &Rational,
    eta: &Rational,
    variant: VariantChoice,
) -> Result<BoundsDocument, CliError> {
    let pt = ClassPoint::new(params.clone(), to_f64(x)).with_eta(to_f64(eta));
    let a2 = bound_a2(&pt, Variant::Derived)?;
    let a3 = bound_a3(&pt)?;
    let published = fekete_szego_bound(&pt, Variant::Published)?;
    let derived = fekete_szego_bound(&pt, Variant::Derived)?;
    Ok(BoundsDocument {
        params: params.into(),
        x: pt.x,
        eta: to_f64(eta),
        bound_a2: a2.value,
        bound_a3: a3.value,
        fs: FsPair {
            published: variant.includes(Variant::Published).then(|| fs_entry(&published)),
            derived: variant.includes(Variant::Derived).then(|| fs_entry(&derived)),
        },
        theta: theta(&pt)?,
        threshold: published.threshold.expect("published threshold"),
    })
}

fn cmd_bounds(
    params: &HoradamParams,
    x: &Rational,
    eta: &Rational,
    variant: VariantChoice,
    fmt: Format,
) -> Result<Report, CliError> {
    let doc = bounds_document(params, x, eta, variant)?;
    let body = match fmt {
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "params        {params}");
            let _ = writeln!(s, "x             {}", fmt_rational(x));
            let _ = writeln!(s, "eta           {}", fmt_rational(eta));
            let _ = writeln!(s, "|a2| <=       {}", sig12(doc.bound_a2));
            let _ = writeln!(s, "|a3| <=       {}", sig12(doc.bound_a3));
            let _ = writeln!(s, "theta         {}", sig12(doc.theta));
            let _ = writeln!(s, "threshold     {}", sig12(doc.threshold));
            for (name, entry) in [("published", &doc.fs.published), ("derived", &doc.fs.derived)] {
                if let Some(e) = entry {
                    let _ = writeln!(
                        s,
                        "fs {:<10} {} ({} branch, cutoff {})",
                        name,
                        sig12(e.value),
                        e.branch.name(),
                        sig12(e.threshold)
                    );
                }
            }
            s
        }
        Format::Csv => {
            let mut header = vec!["x", "eta", "bound_a2", "bound_a3", "theta", "threshold"];
            let mut row = vec![
                sig12(doc.x),
                sig12(doc.eta),
                sig12(doc.bound_a2),
                sig12(doc.bound_a3),
                sig12(doc.theta),
                sig12(doc.threshold),
            ];
            if let Some(e) = &doc.fs.published {
                header.extend(["fs_published", "fs_published_branch"]);
                row.extend([sig12(e.value), e.branch.name().to_string()]);
            }
            if let Some(e) = &doc.fs.derived {
                header.extend(["fs_derived", "fs_derived_branch"]);
                row.extend([sig12(e.value), e.branch.name().to_string()]);
            }
            csv_string([header.into_iter().map(String::from).collect(), row])?
        }
        Format::Json => json_string(&doc)?,
    };
    Ok(Report::ok(body))
}

/// One row of the `sweep` output; `None` fields are degenerate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepCell {
    pub x: f64,
    pub eta: f64,
    pub theta: Option<f64>,
    pub threshold: Option<f64>,
    pub branch: Option<Branch>,
    pub published: Option<f64>,
    pub derived: Option<f64>,
}

fn sweep_cell(params: &HoradamParams, x: &Rational, eta: &Rational) -> SweepCell {
    let pt = ClassPoint::new(params.clone(), to_f64(x)).with_eta(to_f64(eta));
    let published = fekete_szego_bound(&pt, Variant::Published);
    let derived = fekete_szego_bound(&pt, Variant::Derived);
    match (published, derived) {
        (Ok(p), Ok(d)) => SweepCell {
            x: pt.x,
            eta: to_f64(eta),
            theta: p.theta,
            threshold: p.threshold,
            branch: p.branch,
            published: Some(p.value),
            derived: Some(d.value),
        },
        _ => SweepCell {
            x: pt.x,
            eta: to_f64(eta),
            theta: None,
            threshold: None,
            branch: None,
            published: None,
            derived: None,
        },
    }
}

fn cmd_sweep(params: &HoradamParams, xs: &[Rational], etas: &[Rational], fmt: Format) -> Result<Report, CliError> {
    let cells: Vec<SweepCell> = xs
        .iter()
        .flat_map(|x| etas.iter().map(move |eta| sweep_cell(params, x, eta)))
        .collect();
    let degenerate = cells.iter().filter(|c| c.published.is_none()).count();
    eprintln!("sweep: {} rows, {} degenerate", cells.len(), degenerate);
    let opt = |v: Option<f64>| v.map_or_else(|| "nan".to_string(), sig12);
    let body = match fmt {
        Format::Csv => csv_string(
            std::iter::once(SWEEP_HEADER.iter().map(|s| s.to_string()).collect()).chain(cells.iter().map(|c| {
                vec![
                    sig12(c.x),
                    sig12(c.eta),
                    opt(c.theta),
                    opt(c.threshold),
                    c.branch.map_or("nan", Branch::name).to_string(),
                    opt(c.published),
                    opt(c.derived),
                ]
            })),
        )?,
        Format::Table => {
            let mut s = format!(
                "{:>10} {:>10} {:>14} {:>14} {:>7} {:>14} {:>14}\n",
                "x", "eta", "theta", "threshold", "branch", "published", "derived"
            );
            for c in &cells {
                let _ = writeln!(
                    s,
                    "{:>10} {:>10} {:>14} {:>14} {:>7} {:>14} {:>14}",
                    sig(c.x, 6),
                    sig(c.eta, 6),
                    c.theta.map_or("nan".into(), |v| sig(v, 8)),
                    c.threshold.map_or("nan".into(), |v| sig(v, 8)),
                    c.branch.map_or("nan", Branch::name),
                    c.published.map_or("nan".into(), |v| sig(v, 8)),
                    c.derived.map_or("nan".into(), |v| sig(v, 8)),
                );
            }
            s
        }
        Format::Json => json_string(&cells)?,
    };
    Ok(Report::ok(body))
}

/// JSON layout of one `verify` row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub family: Family,
    pub x: f64,
    pub objective: Objective,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<SearchResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub violation: bool,
}

impl From<&SweepRow> for VerifyRow {
    fn from(row: &SweepRow) -> Self {
        VerifyRow {
            family: row.family,
            x: row.x,
            objective: row.objective,
            result: row.outcome.as_ref().ok().cloned(),
            error: row.outcome.as_ref().err().map(ToString::to_string),
            violation: row.is_violation(),
        }
    }
}

impl VerifyRow {
    fn status(&self) -> String {
        match (&self.error, self.violation) {
            (Some(e), _) => format!("error: {e}"),
            (None, true) => "VIOLATION".to_string(),
            (None, false) => "ok".to_string(),
        }
    }

    fn fields(&self) -> Vec<String> {
        let mut out = vec![self.family.name().to_string(), sig12(self.x), self.objective.label()];
        match &self.result {
            Some(r) => out.extend([
                sig12(r.max_value),
                sig12(r.argmax.p1),
                sig12(r.argmax.p2),
                sig12(r.argmax.q2),
                sig12(r.bound_published),
                sig12(r.bound_derived),
                sig12(r.margin_derived),
            ]),
            None => out.extend(std::iter::repeat_n("nan".to_string(), 7)),
        }
        out.push(self.status());
        out
    }
}

fn cmd_verify(
    points: &[ClassPoint],
    objectives: &[Objective],
    grid: &GridSpec,
    fmt: Format,
) -> Result<Report, CliError> {
    let rows: Vec<VerifyRow> = margin_sweep(points, objectives, grid)
        .iter()
        .map(VerifyRow::from)
        .collect();
    let code = if rows.iter().any(|r| r.violation) {
        EXIT_VIOLATION
    } else if rows.iter().any(|r| r.error.is_some()) {
        EXIT_DEGENERATE
    } else {
        EXIT_OK
    };
    let body = match fmt {
        Format::Csv => csv_string(
            std::iter::once(VERIFY_HEADER.iter().map(|s| s.to_string()).collect())
                .chain(rows.iter().map(VerifyRow::fields)),
        )?,
        Format::Table => {
            let table: Vec<Vec<String>> = std::iter::once(VERIFY_HEADER.iter().map(|s| s.to_string()).collect())
                .chain(rows.iter().map(|r| {
                    let mut f = r.fields();
                    for v in &mut f[3..10] {
                        if let Ok(num) = v.parse::<f64>() {
                            *v = sig(num, 8);
                        }
                    }
                    f
                }))
                .collect();
            let widths: Vec<usize> = (0..VERIFY_HEADER.len())
                .map(|i| table.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
                .collect();
            let mut s = String::new();
            for row in &table {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .enumerate()
                    .map(|(i, (cell, w))| {
                        if i == row.len() - 1 {
                            cell.clone()
                        } else {
                            format!("{cell:<w$}")
                        }
                    })
                    .collect();
                let _ = writeln!(s, "{}", line.join("  "));
            }
            s
        }
        Format::Json => json_string(&rows)?,
    };
    Ok(Report { body, code })
}
