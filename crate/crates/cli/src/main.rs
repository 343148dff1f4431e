//! `palinform` command-line front end. Every subcommand reads JSON, calls
//! into the library and prints a JSON object tagged with the schema.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use palinform::codes::TypeTag;
use palinform::curves::Group;
use palinform::json::error_to_json;
use palinform::Error;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "palinform", version, about = "Self-inversive polynomials, binary forms, curves and codes")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Use double precision instead of exact rationals.
    #[arg(long, global = true)]
    pub float: bool,
    /// Comparison tolerance; each command has its own default.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for the root solver's starting configuration.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for batch items and the scanner.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Treat the input as a JSON array of items and process each one.
    #[arg(long, global = true)]
    pub batch: bool,
    /// Add raw point sets (roots, zeros of quadratics) to the output.
    #[arg(long, global = true)]
    pub emit_points: bool,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub pretty: bool,
}

/// A polynomial: inline JSON, a file path, or `-` for stdin.
#[derive(Args, Debug, Clone)]
pub struct PolyIn {
    #[arg(long = "in", value_name = "JSON|PATH")]
    pub input: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Palindromic, antipalindromic, quasi-palindromic and self-inversive tests.
    Classify(PolyIn),
    /// Conjugate, reciprocal, inversive, or product with a second polynomial.
    Transform {
        #[command(flatten)]
        poly: PolyIn,
        #[arg(long, value_enum)]
        op: TransformOp,
        /// Second factor for `--op product`.
        #[arg(long)]
        with: Option<String>,
    },
    /// Write `p(z) = z^m g(z + 1/z)` and divide out forced roots.
    Decompose {
        #[command(subcommand)]
        verb: DecomposeVerb,
    },
    /// All complex roots with multiplicities and their position relative to the unit circle.
    Roots(PolyIn),
    /// Root-location criteria and coefficient conditions.
    Criteria {
        #[command(subcommand)]
        verb: CriteriaVerb,
    },
    /// Reduce a totally real form into the fundamental domain.
    Reduce {
        /// Binary form, coefficient `i` multiplying `x^i y^(n-i)`.
        #[arg(long = "form", visible_alias = "in", value_name = "JSON|PATH")]
        form: String,
        /// The input is a self-inversive polynomial with unimodular roots;
        /// carry it to a totally real form first.
        #[arg(long)]
        circle: bool,
    },
    /// The G covariant, Julia quadratic, zero map, Cayley maps and matrix action.
    Covariant {
        #[command(subcommand)]
        verb: CovariantVerb,
    },
    /// Normal form of a superelliptic curve with a given reduced automorphism group.
    Curve {
        /// `D<m>` such as `D3`, or `A4`, `S4`, `A5`.
        #[arg(long)]
        group: Group,
        /// 1-based case index.
        #[arg(long = "case")]
        case_index: usize,
        /// Exponent `n` in `y^n = f(x)`.
        #[arg(long, default_value_t = 2)]
        level: usize,
        /// JSON array of parameters, one per parametric factor.
        #[arg(long, default_value = "[]")]
        lambdas: String,
    },
    /// Weight enumerators, zeta polynomials and extremal codes.
    Code {
        #[command(subcommand)]
        verb: CodeVerb,
    },
    /// Recompute the worked products and diff them against the golden file.
    VerifyGoldens {
        #[arg(long)]
        path: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum TransformOp {
    Conjugate,
    Reciprocal,
    Inversive,
    Product,
}

#[derive(Subcommand, Debug)]
pub enum DecomposeVerb {
    /// `m` and `g` for an even-degree palindromic polynomial.
    Half(PolyIn),
    /// Expand `z^m g(z + 1/z)` for the input `g`.
    Compose {
        #[command(flatten)]
        poly: PolyIn,
        #[arg(long)]
        m: usize,
    },
    /// Divide out `x+1`, `x-1` or `x²-1` forced by symmetry.
    Forced(PolyIn),
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum LlRangeArg {
    Literal,
    ExcludeLeading,
}

#[derive(Subcommand, Debug)]
pub enum CriteriaVerb {
    /// Cohn's test: all roots unimodular.
    Cohn(PolyIn),
    /// Counts of roots on, inside and outside the unit circle.
    Circle(PolyIn),
    /// Lakatos–Losonczi sufficient condition.
    Ll {
        #[command(flatten)]
        poly: PolyIn,
        #[arg(long, value_enum, default_value = "exclude-leading")]
        range: LlRangeArg,
    },
    /// Predicted number of unimodular roots from coefficient dominance.
    Vieira {
        #[command(flatten)]
        poly: PolyIn,
        #[arg(long)]
        lambda: usize,
    },
    /// Coefficient bounds in terms of the sup norm on the circle.
    Ohara(PolyIn),
    /// Sup norm of `p` on the unit circle.
    MaxModulus {
        #[command(flatten)]
        poly: PolyIn,
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Symmetric and increasing coefficients.
    Symmetric(PolyIn),
    /// Whether multiplying by `1 - αz + z²` keeps the coefficients symmetric increasing.
    Step {
        #[command(flatten)]
        poly: PolyIn,
        #[arg(long)]
        alpha: String,
    },
    /// Window conditions on consecutive coefficient triples.
    Epsilon(PolyIn),
    /// Expand `c · Π (1 - α_k z + z²)` for a JSON list of `α_k`.
    Chain {
        #[arg(long)]
        alphas: String,
        #[arg(long, default_value = "1")]
        scale: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CovariantVerb {
    /// `G_f`, of degree `(n-1)(n-2)`.
    G(PolyIn),
    /// Julia quadratic of a totally real form.
    Julia(PolyIn),
    /// Zero of the quadratic, or of the Julia quadratic, in the upper half plane.
    Zero(PolyIn),
    /// Coefficient symmetry of `G_f` for palindromic `f`.
    Sigma(PolyIn),
    /// Real roots to the unit circle.
    ToCircle(PolyIn),
    /// Unit circle back to the real line, up to `(2i)^n`.
    ToReal(PolyIn),
    /// Substitute a matrix `[a, b, c, d]` into the form.
    Act {
        #[command(flatten)]
        poly: PolyIn,
        #[arg(long)]
        matrix: String,
    },
}

/// A weight enumerator as `--A` with `--q`, or a JSON object via `--in`.
#[derive(Args, Debug, Clone)]
pub struct EnumIn {
    #[arg(long = "A", value_name = "JSON")]
    pub a: Option<String>,
    #[arg(long)]
    pub q: Option<u64>,
    /// Checked against the length of `A`.
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long = "in", value_name = "JSON|PATH", conflicts_with = "a")]
    pub input: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum CodeVerb {
    /// Zeta polynomial `P(T)` and, for self-dual input, its normalized form.
    Zeta(EnumIn),
    /// Whether all zeros of `P` lie on `|T| = 1/√q`.
    Rh(EnumIn),
    /// Minimum distance recovered from the zeros of `P`.
    DIdentity(EnumIn),
    /// Type, genus and extremality.
    Classify(EnumIn),
    /// The MacWilliams transform, normalized by `q^(-n/2)`.
    Macwilliams(EnumIn),
    /// Coordinates in the basis of MDS enumerators.
    Expand(EnumIn),
    /// The enumerator of an `[n, n-d+1, d]` MDS code.
    Mds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
    },
    /// The extremal enumerator of a type and length.
    Extremal {
        #[arg(long = "type")]
        tag: TypeTag,
        #[arg(long)]
        n: usize,
    },
    /// Extremal enumerators of every admissible length up to `n-max`.
    Scan {
        /// Comma separated, e.g. `I,II`.
        #[arg(long, value_delimiter = ',', default_value = "I,II,III,IV")]
        types: Vec<TypeTag>,
        #[arg(long)]
        n_max: usize,
    },
}

fn emit(global: &Global, v: &Value) -> std::io::Result<()> {
    let text = if global.pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .expect("json values serialize");
    match &global.out {
        Some(path) => std::fs::write(path, text + "\n"),
        None => writeln!(std::io::stdout().lock(), "{text}"),
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("{}", error_to_json(e));
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            return fail(&Error::BadParameters(e.to_string()));
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            let failed = out.failed;
            match emit(&cli.global, &out.value) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return fail(&Error::Io(e.to_string())),
                _ => {}
            }
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => fail(&e),
    }
}
