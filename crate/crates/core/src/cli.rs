//! Command-line front end.
//!
//! Exit codes: 0 success, 1 unparsable input or arguments, 2 violated
//! precondition, 3 non-polynomial sum, 4 unsupported configuration,
//! 5 a verification check failed.

use std::ffi::OsString;
use std::io::{Read as _, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::arith::Polynomial;
use crate::error::Error;
use crate::expr::{self, Alphabet};
use crate::pushforward::{
    borel_hirzebruch, gysin_pushforward, localization_fraction, BundleSpec, FixedPointDatum,
};
use crate::roots::Convention;
use crate::schubert::{schur_bialternant, segre_check, Partition};
use crate::verify::{run_suite, SuiteConfig};
use crate::weyl::{Composition, Family, GroupSpec, DEFAULT_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_NOT_POLYNOMIAL: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;
pub const EXIT_CHECK_FAILED: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "gysin",
    version,
    about = "Exact Gysin pushforwards of flag bundles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Push a class forward along the flag bundle with fiber G/H.
    Push(PushArgs),
    /// The alternant pushforward from the full flag of a classical group.
    BorelHirzebruch(GroupArgs),
    /// The Schur polynomial of a partition, by the bialternant formula.
    Schur(SchurArgs),
    /// Run the verification suite.
    Check(CheckArgs),
    /// Sum fixed-point fractions given as JSON `[{restriction, euler}, ...]`.
    Localize(LocalizeArgs),
    /// Tabulate the projective-bundle pushforwards of x1^(n-1+j).
    Segre(SegreArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Polynomial in x1.., u1.. or a1..
    #[arg(long, conflicts_with = "input", allow_hyphen_values = true)]
    pub expr: Option<String>,
    /// Read the input from a file, `-` for stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(long, default_value = "A")]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "prop")]
    pub convention: Convention,
    #[command(flatten)]
    pub source: InputArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Largest group or coset space to enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct PushArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Block sizes of H, comma separated. Defaults to the full flag.
    #[arg(long, value_delimiter = ',', conflicts_with = "k")]
    pub comp: Option<Vec<usize>>,
    /// Shorthand for `--comp k,n-k`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Evaluate even when the input is not W_H-invariant. The output then
    /// carries no invariance guarantee.
    #[arg(long)]
    pub allow_non_invariant: bool,
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    #[arg(long)]
    pub n: usize,
    /// Parts of the partition, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "")]
    pub lambda: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 6)]
    pub max_degree: usize,
    #[arg(long, default_value = "prop")]
    pub convention: Convention,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LocalizeArgs {
    /// Number of variables; inferred from the largest index when absent.
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub source: InputArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SegreArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub jmax: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Serialize)]
struct PushOutput {
    operator: String,
    family: String,
    n: usize,
    composition: Vec<usize>,
    convention: String,
    input: String,
    result: String,
    degree_drop: usize,
    invariant: bool,
}

#[derive(Debug, Deserialize)]
struct DatumInput {
    restriction: String,
    euler: String,
}

/// A failure with its exit code and message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => EXIT_PARSE,
            Error::NotInvariant
            | Error::IncompatibleComposition { .. }
            | Error::ArityMismatch { .. }
            | Error::MalformedPartition(_)
            | Error::IndexOutOfRange { .. }
            | Error::ZeroEuler
            | Error::RootContainment
            | Error::DivisionByZero => EXIT_PRECONDITION,
            Error::NotDivisible | Error::Internal(_) => EXIT_NOT_POLYNOMIAL,
            Error::Unsupported(_) | Error::CapExceeded { .. } => EXIT_UNSUPPORTED,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<expr::ParseError> for Failure {
    fn from(e: expr::ParseError) -> Self {
        Failure::new(EXIT_PARSE, format!("parse error: {e}"))
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn read_source(source: &InputArgs) -> std::result::Result<String, Failure> {
    match (&source.expr, &source.input) {
        (Some(e), _) => Ok(e.clone()),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("stdin: {e}")))?;
            Ok(s)
        }
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display()))),
        (None, None) => Err(Failure::new(EXIT_PARSE, "no input: pass --expr or --input")),
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(value).expect("serializable")
    )
}

fn operator_name(group: &GroupSpec, comp: &Composition) -> &'static str {
    match group.family {
        Family::A if comp.is_trivial() => "jacobi",
        Family::A if comp.parts().len() == 2 => "lagrange-sylvester",
        _ => "box",
    }
}

fn cmd_push(args: &PushArgs, out: &mut dyn Write) -> Outcome {
    let g = &args.group;
    let group = GroupSpec::new(g.family, g.n)?;
    let comp = match (&args.comp, args.k) {
        (Some(parts), _) => Composition::new(parts.clone())?,
        (None, Some(k)) => Composition::grassmann(g.n, k)?,
        (None, None) => Composition::trivial(g.n),
    };
    let mut bundle = BundleSpec::new(group, comp, g.convention)?.with_cap(g.cap);
    if args.allow_non_invariant {
        bundle = bundle.allow_non_invariant();
    }
    let (b, alphabet) = expr::parse_with_alphabet(&read_source(&g.source)?, g.n)?;
    let alphabet = alphabet.unwrap_or(Alphabet::X);
    let result = gysin_pushforward(&b, &bundle)?;
    let printed = expr::print(&result, alphabet);
    let report = PushOutput {
        operator: operator_name(&group, &bundle.comp).into(),
        family: group.family.to_string(),
        n: g.n,
        composition: bundle.comp.parts().to_vec(),
        convention: g.convention.to_string(),
        input: expr::print(&b, alphabet),
        result: printed.clone(),
        degree_drop: bundle.relative_dimension()?,
        invariant: !args.allow_non_invariant,
    };
    let io = match g.format {
        Format::Text => writeln!(out, "{printed}"),
        Format::Json => write_json(out, &report),
    };
    io.map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_borel_hirzebruch(g: &GroupArgs, out: &mut dyn Write) -> Outcome {
    let group = GroupSpec::new(g.family, g.n)?;
    let (x, alphabet) = expr::parse_with_alphabet(&read_source(&g.source)?, g.n)?;
    let alphabet = alphabet.unwrap_or(Alphabet::X);
    let result = borel_hirzebruch(&x, group, g.convention)?;
    let printed = expr::print(&result, alphabet);
    let io = match g.format {
        Format::Text => writeln!(out, "{printed}"),
        Format::Json => {
            let bundle = BundleSpec::full_flag(group, g.convention);
            let report = PushOutput {
                operator: "borel-hirzebruch".into(),
                family: group.family.to_string(),
                n: g.n,
                composition: bundle.comp.parts().to_vec(),
                convention: g.convention.to_string(),
                input: expr::print(&x, alphabet),
                result: printed,
                degree_drop: bundle.relative_dimension()?,
                invariant: true,
            };
            write_json(out, &report)
        }
    };
    io.map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_schur(args: &SchurArgs, out: &mut dyn Write) -> Outcome {
    let parts = args
        .lambda
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failure::from(Error::MalformedPartition(format!("part `{s}`"))))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let lambda = Partition::new(parts)?;
    let result = expr::print(&schur_bialternant(&lambda, args.n)?, Alphabet::X);
    let io = match args.format {
        Format::Text => writeln!(out, "{result}"),
        Format::Json => write_json(
            out,
            &serde_json::json!({ "lambda": lambda.parts(), "n": args.n, "result": result }),
        ),
    };
    io.map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> Outcome {
    let config = SuiteConfig {
        max_n: args.n,
        max_degree: args.max_degree,
        convention: args.convention,
        samples: args.samples,
        seed: args.seed,
    };
    if config.max_n < 2 {
        return Err(Failure::new(EXIT_UNSUPPORTED, "check needs --n >= 2"));
    }
    let report = run_suite(&config)?;
    let io = match args.format {
        Format::Text => (|| {
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {}: {}", c.name, c.detail)?;
            }
            let passed = report.checks.iter().filter(|c| c.passed).count();
            writeln!(out, "{passed}/{} checks passed", report.checks.len())
        })(),
        Format::Json => write_json(out, &report),
    };
    io.map_err(io_failure)?;
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_localize(args: &LocalizeArgs, out: &mut dyn Write) -> Outcome {
    let text = read_source(&args.source)?;
    let items: Vec<DatumInput> = serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("fixed-point data: {e}")))?;
    if items.is_empty() {
        return Err(Failure::new(EXIT_PRECONDITION, "no fixed points given"));
    }
    let n = match args.n {
        Some(n) => n,
        None => {
            let mut n = 1;
            for d in &items {
                n = n.max(expr::max_variable_index(&d.restriction)?);
                n = n.max(expr::max_variable_index(&d.euler)?);
            }
            n
        }
    };
    let mut alphabet = None;
    let mut data = Vec::with_capacity(items.len());
    for d in &items {
        let (restriction, a) = expr::parse_with_alphabet(&d.restriction, n)?;
        let (euler, e) = expr::parse_with_alphabet(&d.euler, n)?;
        alphabet = alphabet.or(a).or(e);
        data.push(FixedPointDatum::new(restriction, euler)?);
    }
    let alphabet = alphabet.unwrap_or(Alphabet::X);
    let fraction = localization_fraction(&data)?;
    let result = match fraction.to_polynomial() {
        Ok(p) => p,
        Err(Error::NotDivisible) => {
            let show = |p: &Polynomial| expr::print(p, alphabet);
            return Err(Failure::new(
                EXIT_NOT_POLYNOMIAL,
                format!(
                    "sum is not polynomial: ({}) / ({})",
                    show(fraction.numerator()),
                    show(fraction.denominator())
                ),
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let printed = expr::print(&result, alphabet);
    let io = match args.format {
        Format::Text => writeln!(out, "{printed}"),
        Format::Json => write_json(
            out,
            &serde_json::json!({ "n": n, "fixed_points": data.len(), "result": printed }),
        ),
    };
    io.map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_segre(args: &SegreArgs, out: &mut dyn Write) -> Outcome {
    let report = segre_check(args.n, args.jmax)?;
    let io = match args.format {
        Format::Text => (|| {
            writeln!(out, "j\tinput\texpected\tcomputed\tstatus")?;
            for r in &report.rows {
                let status = if r.passed { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{status}",
                    r.j, r.input, r.expected, r.computed
                )?;
            }
            Ok(())
        })(),
        Format::Json => write_json(out, &report),
    };
    io.map_err(io_failure)?;
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(EXIT_PARSE, format!("write failed: {e}"))
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Push(a) => cmd_push(a, out),
        Command::BorelHirzebruch(a) => cmd_borel_hirzebruch(a, out),
        Command::Schur(a) => cmd_schur(a, out),
        Command::Check(a) => cmd_check(a, out),
        Command::Localize(a) => cmd_localize(a, out),
        Command::Segre(a) => cmd_segre(a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
