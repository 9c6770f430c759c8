//! The `simsun` command line.
//!
//! Exit codes: 0 success, 1 a check or match failed, 2 usage error,
//! 3 infeasible request (enumeration cap or order limit), 4 numeric domain
//! or branch failure.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::{Integer, Rational};

use crate::enumerate::{insertion_stream_rb, BruteForce, Caps, EnumerateError, Family};
use crate::series::{self, SeriesError, DEFAULT_DIGITS};
use crate::triangles::identities::{self, IdentityError, IdentityReport};
use crate::triangles::{self, DtSeeds, RSeeds, Route, Triangle};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;
pub const EXIT_DOMAIN: u8 = 4;

/// Largest `--n-max` served by the exact recurrences.
pub const RECURRENCE_LIMIT: usize = 1000;

#[derive(Debug, Parser)]
#[command(name = "simsun", version, about = "Signed simsun permutations: tables, enumeration, identities, series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows 0..=N of a triangle.
    Table(TableArgs),
    /// Print the number of words of a class of length n.
    Count(CountArgs),
    /// List the words of a class of length n.
    Enumerate(EnumerateArgs),
    /// Check an identity on a range of n.
    Verify(VerifyArgs),
    /// Expand a closed-form generating function and match it against exact values.
    Series(SeriesArgs),
}

/// A triangle selector: any family name, or `U` for Chebyshev polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassArg {
    Family(Family),
    ChebyshevU,
}

impl FromStr for ClassArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "U" {
            return Ok(ClassArg::ChebyshevU);
        }
        s.parse::<Family>().map(ClassArg::Family).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Coefficient,
    Operator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeedArg {
    Stated,
    Brute,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Enumeration worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Write output to a file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub class: ClassArg,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Compute every row by enumeration.
    #[arg(long)]
    pub brute: bool,
    #[arg(long, value_enum, default_value_t = RouteArg::Coefficient)]
    pub route: RouteArg,
    /// Where rows 0 and 1 of the recurrences come from.
    #[arg(long, value_enum, default_value_t = SeedArg::Stated)]
    pub seeds: SeedArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub class: Family,
    #[arg(long)]
    pub n: usize,
    /// Sum a recurrence row instead of enumerating.
    #[arg(long)]
    pub recurrence: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub class: Family,
    #[arg(long)]
    pub n: usize,
    /// Generate signed simsun words by insertion rather than by filtering.
    #[arg(long)]
    pub insertion: bool,
    /// `text` prints one word per line; `json` prints the words and the count.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Dnk,
    Thm02,
    Split,
    Fib,
    Enk,
    Foata,
    Convolution,
    Degrees,
    #[value(name = "oracle-R")]
    OracleR,
    #[value(name = "oracle-DT")]
    OracleDt,
    #[value(name = "oracle-S")]
    OracleS,
    /// All nine signed classes from one pass per n.
    #[value(name = "oracle-signed")]
    OracleSigned,
    Chebyshev,
    Routes,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub identity: IdentityArg,
    #[arg(long)]
    pub n_max: usize,
    /// Sample points (comma separated rationals); defaults to 1, 2, …, max(8, N+1).
    #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
    pub points: Option<Vec<Rational>>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "R")]
    R,
    #[value(name = "Rplus")]
    Rplus,
    #[value(name = "Rminus")]
    Rminus,
    #[value(name = "Rprime1")]
    Rprime1,
    #[value(name = "RS")]
    Rs,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    /// Rational parameter, as `p/q`, an integer, or a terminating decimal.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub x: Option<Rational>,
    #[arg(long, default_value_t = 7)]
    pub order: usize,
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    pub digits: u32,
    #[arg(long, default_value_t = 1e-6)]
    pub rel_tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `p/q`, an integer, or a terminating decimal such as `2.5`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        let digits: String = [int, frac].concat();
        let num = Integer::from_str(&digits).map_err(|e| format!("{s:?}: {e}"))?;
        let den = Integer::from(Integer::u_pow_u(10, frac.len() as u32));
        return Ok(Rational::from((num, den)));
    }
    Rational::from_str(s).map_err(|e| format!("{s:?}: {e}"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Infeasible(String),
    Domain(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Infeasible(_) => EXIT_INFEASIBLE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Infeasible(m) => write!(f, "infeasible: {m}"),
            CliError::Domain(m) => write!(f, "numeric domain error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::CapExceeded { .. } => CliError::Infeasible(e.to_string()),
            EnumerateError::NotAWordClass(_) => CliError::Usage(e.to_string()),
            EnumerateError::Pool(_) => CliError::Io(e.to_string()),
        }
    }
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> Self {
        match e {
            IdentityError::Enumerate(inner) => inner.into(),
            IdentityError::PoleAtMinusOne => CliError::Domain(e.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::Precision { .. } | SeriesError::Mismatch { .. } | SeriesError::TooManyValues { .. } => {
                CliError::Usage(e.to_string())
            }
            SeriesError::OrderTooLarge { .. } => CliError::Infeasible(e.to_string()),
            SeriesError::DivisionByZero | SeriesError::Domain(_) | SeriesError::Branch(_) => {
                CliError::Domain(e.to_string())
            }
        }
    }
}

/// Result of one invocation: text for standard output and standard error,
/// plus the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn error(e: &CliError) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("{e}\n"),
            code: e.code(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let caps = Caps::from_env();
    let result = match cli.command {
        Command::Table(a) => cmd_table(&a, caps).and_then(|s| emit(s, &a.common.out)),
        Command::Count(a) => cmd_count(&a, caps).and_then(|s| emit(s, &a.common.out)),
        Command::Enumerate(a) => cmd_enumerate(&a, caps).and_then(|(words, count)| {
            let mut o = emit(words, &a.common.out)?;
            o.stderr = format!("count: {count}\n");
            Ok(o)
        }),
        Command::Verify(a) => cmd_verify(&a, caps).and_then(|(s, pass)| {
            let mut o = emit(s, &a.common.out)?;
            if !pass {
                o.code = EXIT_FAIL;
            }
            Ok(o)
        }),
        Command::Series(a) => cmd_series(&a).and_then(|(s, pass)| {
            let mut o = emit(s, &a.out)?;
            if !pass {
                o.code = EXIT_FAIL;
            }
            Ok(o)
        }),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn emit(text: String, out: &Option<PathBuf>) -> Result<Outcome, CliError> {
    match out {
        None => Ok(Outcome::ok(text)),
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
    }
}

/// Entry point used by the binary.
pub fn run() -> ExitCode {
    use std::io::Write;
    let outcome = execute(std::env::args_os());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}

fn check_recurrence_limit(n_max: usize) -> Result<(), CliError> {
    if n_max > RECURRENCE_LIMIT {
        Err(CliError::Infeasible(format!(
            "n-max {n_max} exceeds the recurrence limit {RECURRENCE_LIMIT}"
        )))
    } else {
        Ok(())
    }
}

/// Whether a family has an enumeration-free recurrence.
fn has_recurrence(f: Family) -> bool {
    !matches!(f, Family::EulerianD | Family::EulerianT | Family::LeftPeakW)
}

fn recurrence_triangle(f: Family, n_max: usize, route: Route, seeds: SeedArg, brute: &BruteForce) -> Result<Triangle, CliError> {
    let (r_seeds, dt_seeds) = match seeds {
        SeedArg::Stated => (RSeeds::stated(), DtSeeds::stated()),
        SeedArg::Brute => (RSeeds::brute(brute)?, DtSeeds::brute(brute)?),
    };
    let t = match f {
        Family::Rs => triangles::table_s(n_max),
        Family::EulerianA => triangles::eulerian_a(n_max),
        Family::Rb | Family::RbPlus | Family::RbMinus => {
            triangles::table_r_with(n_max, route, &r_seeds).get(f).cloned().expect("R family")
        }
        _ => triangles::table_dt_with(n_max, route, &r_seeds, &dt_seeds)
            .get(f)
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("{f} has no recurrence")))?,
    };
    Ok(t)
}

pub fn cmd_table(a: &TableArgs, caps: Caps) -> Result<String, CliError> {
    let brute = BruteForce::new(caps, a.common.jobs);
    let route = match a.route {
        RouteArg::Coefficient => Route::Coefficient,
        RouteArg::Operator => Route::Operator,
    };
    let triangle = match a.class {
        ClassArg::ChebyshevU => {
            if a.brute {
                return Err(CliError::Usage("U has no enumeration".into()));
            }
            check_recurrence_limit(a.n_max)?;
            triangles::chebyshev_triangle(a.n_max)
        }
        ClassArg::Family(f) if a.brute || !has_recurrence(f) => triangles::brute_triangle(f, a.n_max, &brute)?,
        ClassArg::Family(f) => {
            check_recurrence_limit(a.n_max)?;
            recurrence_triangle(f, a.n_max, route, a.seeds, &brute)?
        }
    };
    Ok(match a.format {
        Format::Csv => triangle.to_csv(),
        Format::Json => format!("{}\n", triangle.to_json()),
        Format::Text => triangle.to_text(),
    })
}

pub fn cmd_count(a: &CountArgs, caps: Caps) -> Result<String, CliError> {
    let brute = BruteForce::new(caps, a.common.jobs);
    let count = if a.recurrence {
        if !has_recurrence(a.class) {
            return Err(CliError::Usage(format!("{} has no recurrence", a.class)));
        }
        check_recurrence_limit(a.n)?;
        recurrence_triangle(a.class, a.n, Route::Coefficient, SeedArg::Stated, &brute)?
            .row(a.n)
            .total()
    } else {
        brute.brute_count(a.class, a.n)?
    };
    Ok(match a.format {
        Format::Json => format!(
            "{}\n",
            serde_json::json!({ "class": a.class.name(), "n": a.n, "count": count.to_string() })
        ),
        Format::Csv | Format::Text => format!("{count}\n"),
    })
}

/// Words one per line, plus the count.
pub fn cmd_enumerate(a: &EnumerateArgs, caps: Caps) -> Result<(String, usize), CliError> {
    let brute = BruteForce::new(caps, a.common.jobs);
    let words = if a.insertion {
        let signed_simsun = Family::SIGNED_SIMSUN.contains(&a.class);
        if !signed_simsun {
            return Err(CliError::Usage(format!(
                "--insertion generates signed simsun words; {} is not such a class",
                a.class
            )));
        }
        caps.check(a.n, true)?;
        insertion_stream_rb(a.n)
            .filter(|w| a.class.contains_signed(w.entries()))
            .map(|w| w.to_string())
            .collect()
    } else {
        brute.list_words(a.class, a.n)?
    };
    if a.format == Format::Json {
        let v = serde_json::json!({ "class": a.class.name(), "n": a.n, "words": words, "count": words.len() });
        return Ok((format!("{v}\n"), words.len()));
    }
    let mut out = String::new();
    for w in &words {
        out.push_str(w);
        out.push('\n');
    }
    Ok((out, words.len()))
}

pub fn cmd_verify(a: &VerifyArgs, caps: Caps) -> Result<(String, bool), CliError> {
    use IdentityArg::*;
    let brute = BruteForce::new(caps, a.common.jobs);
    let n = a.n_max;
    let points = a
        .points
        .clone()
        .unwrap_or_else(|| identities::default_points(8.max(n + 1)));
    let enumeration_free = !matches!(a.identity, Enk | Convolution | OracleR | OracleDt | OracleS | OracleSigned);
    if enumeration_free {
        check_recurrence_limit(n)?;
    }
    let report: IdentityReport = match a.identity {
        Dnk => identities::check_dnk(n),
        Thm02 => identities::check_thm02_chain(n),
        Split => identities::check_corollary_split(n),
        Fib => identities::check_fibonacci_corollary(n),
        Degrees => {
            if n == 0 {
                return Err(CliError::Usage("degrees needs --n-max >= 1".into()));
            }
            identities::check_degrees(n)
        }
        Chebyshev => identities::check_chebyshev_paths(n),
        Routes => identities::check_routes(n),
        Foata => identities::check_foata(n, &points)?,
        Enk => identities::check_enk(n, &brute)?,
        Convolution => identities::check_convolution_w(n, &points, &brute)?,
        OracleR => identities::check_oracle_r(n, &brute)?,
        OracleDt => identities::check_oracle_dt(n, &brute)?,
        OracleS => identities::check_oracle_s(n, &brute)?,
        OracleSigned => identities::check_oracle_signed(n, &brute)?,
    };
    let text = match a.format {
        Format::Text => report.to_text(),
        Format::Json | Format::Csv => format!("{}\n", report.to_json()),
    };
    Ok((text, report.holds()))
}

pub fn cmd_series(a: &SeriesArgs) -> Result<(String, bool), CliError> {
    let one = Rational::from(1);
    let x = a.x.clone().unwrap_or_else(|| one.clone());
    if a.target == Target::Rprime1 && x != one {
        return Err(CliError::Usage("Rprime1 is expanded at x = 1 only".into()));
    }
    if a.order > series::MAX_ORDER {
        return Err(SeriesError::OrderTooLarge {
            order: a.order,
            max: series::MAX_ORDER,
        }
        .into());
    }
    let k = a.order;
    let (s, exact): (_, Vec<Rational>) = match a.target {
        Target::R | Target::Rplus | Target::Rminus => {
            let e = series::expand_r(&x, k, a.digits)?;
            let tables = triangles::table_r(k);
            let (s, tri) = match a.target {
                Target::R => (e.total, tables.total),
                Target::Rplus => (e.plus, tables.plus),
                _ => (e.minus, tables.minus),
            };
            (s, tri.rows.iter().map(|p| p.eval(&x)).collect())
        }
        Target::Rprime1 => {
            let s = series::expand_rprime_at_1(k, a.digits)?;
            let tables = triangles::table_r(k);
            (s, tables.total.rows.iter().map(|p| p.derivative().eval(&one)).collect())
        }
        Target::Rs => {
            let s = series::expand_rs(&x, k, a.digits)?;
            (s, triangles::table_s(k).rows.iter().map(|p| p.eval(&x)).collect())
        }
    };
    let report = series::series_match(&s, &exact, a.rel_tol)?.with_x(&x);
    Ok((format!("{}\n", report.to_json()), report.pass))
}
