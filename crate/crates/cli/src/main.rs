//! `riordan-inv`: build, verify and decompose Riordan involutions from the
//! command line.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 violated
//! mathematical precondition, 3 internal defect.

mod render;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use riordan_core::presets::{array_preset, parse_series_arg};
use riordan_core::rational::parse_rational;
use riordan_core::{
    a_sequence, build_involution, decompose_involution, laguerre, prop1_equivalence, Error,
    InvolutionParams, JsonForm, PolySequence, Rational, RiordanArray, Series, Sign, Weight,
    DEFAULT_ORDER,
};

use render::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "riordan-inv", version, about = "Exact Riordan involutions and Sheffer sequences")]
struct Cli {
    /// Truncation order N (matrices are (N+1)x(N+1)).
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: usize,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Pretty)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct or decompose involutions.
    #[command(subcommand)]
    Involve(InvolveCmd),
    /// Riordan group operations.
    #[command(subcommand)]
    Riordan(RiordanCmd),
    /// Weighted polynomial sequences and umbral composition.
    #[command(subcommand)]
    Sheffer(ShefferCmd),
}

#[derive(Subcommand, Debug)]
enum InvolveCmd {
    /// Build T(f|g) from (phi, u, sign) and verify T^2 = I.
    Build {
        /// Series literal such as [1,-1/2] or preset:alpha-log.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Parameter for preset:alpha-log.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Odd series literal.
        #[arg(long, allow_hyphen_values = true, default_value = "[0]")]
        u: String,
        /// +1 or -1.
        #[arg(long, allow_hyphen_values = true, default_value = "+1")]
        sign: String,
    },
    /// Recover canonical (phi, u, sign) for an involution T(f|g).
    Decompose {
        #[command(flatten)]
        array: ArrayArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct ArrayArgs {
    /// Series literal for f.
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Series literal for g.
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// Named array: identity, minus-identity, pascal, alternating.
    #[arg(long, conflicts_with_all = ["f", "g"])]
    array: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct SecondArrayArgs {
    #[arg(long, allow_hyphen_values = true)]
    f2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g2: Option<String>,
    #[arg(long, conflicts_with_all = ["f2", "g2"])]
    array2: Option<String>,
}

#[derive(Subcommand, Debug)]
enum RiordanCmd {
    /// Print f, g and the matrix.
    Show {
        #[command(flatten)]
        array: ArrayArgs,
    },
    /// Group product of two arrays.
    Mul {
        #[command(flatten)]
        left: ArrayArgs,
        #[command(flatten)]
        right: SecondArrayArgs,
    },
    /// Group inverse.
    Inv {
        #[command(flatten)]
        array: ArrayArgs,
    },
    /// A-sequence of T(1|phi).
    Aseq {
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Smallest k <= max with T^k = I.
    Order {
        #[command(flatten)]
        array: ArrayArgs,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Whether T * diag((-1)^n) is an involution.
    Pseudo {
        #[command(flatten)]
        array: ArrayArgs,
    },
}

#[derive(Subcommand, Debug)]
enum ShefferCmd {
    /// Classical Laguerre polynomials L_0..L_n.
    Laguerre {
        #[arg(long)]
        n: usize,
    },
    /// p #_h q.
    Compose {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long, default_value = "exp")]
        weight: String,
    },
    /// times-fold p #_h p #_h ... #_h p.
    Nfold {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        times: usize,
        #[arg(long, default_value = "exp")]
        weight: String,
    },
    /// Both sides of the weighted-sequence / group-order correspondence.
    CheckProp1 {
        /// Named array, or use --f/--g.
        #[arg(long, conflicts_with_all = ["f", "g"])]
        d: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        #[arg(long)]
        times: usize,
        #[arg(long, default_value = "exp")]
        weight: String,
    },
}

fn parse_alpha(alpha: Option<&str>) -> Result<Option<Rational>, Error> {
    alpha.map(parse_rational).transpose()
}

fn parse_sign(text: &str) -> Result<Sign, Error> {
    match text.trim() {
        "+1" | "1" | "+" => Ok(Sign::Plus),
        "-1" | "-" => Ok(Sign::Minus),
        other => Err(Error::Invalid(format!("sign must be +1 or -1, got {other:?}"))),
    }
}

fn resolve_array(
    f: Option<&str>,
    g: Option<&str>,
    preset: Option<&str>,
    order: usize,
) -> Result<RiordanArray, Error> {
    match (preset, f, g) {
        (Some(name), _, _) => array_preset(name, order),
        (None, Some(f), Some(g)) => RiordanArray::new(
            Series::parse_literal(f, order)?,
            Series::parse_literal(g, order)?,
        ),
        _ => Err(Error::Invalid(
            "an array needs either a preset name or both f and g".into(),
        )),
    }
}

fn array_from(args: &ArrayArgs, order: usize) -> Result<RiordanArray, Error> {
    resolve_array(args.f.as_deref(), args.g.as_deref(), args.array.as_deref(), order)
}

/// `laguerre`, `neutral`, an array preset (weighted by `h`) or `json:PATH`.
fn resolve_sequence(arg: &str, h: &Weight, order: usize) -> Result<PolySequence, Error> {
    if let Some(path) = arg.strip_prefix("json:") {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
        let seq = PolySequence::from_json(&text)?;
        if seq.order() != order {
            return Err(Error::OrderMismatch {
                left: seq.order(),
                right: order,
            });
        }
        return Ok(seq);
    }
    match arg {
        "laguerre" => Ok(laguerre(order)),
        "neutral" => Ok(PolySequence::neutral(h)),
        name => PolySequence::from_riordan(&array_preset(name, order)?).weight(h),
    }
}

fn run(cli: Cli) -> Result<Report, Error> {
    let order = cli.order;
    if order < 1 {
        return Err(Error::Invalid("truncation order must be at least 1".into()));
    }
    match cli.command {
        Command::Involve(InvolveCmd::Build {
            phi,
            alpha,
            u,
            sign,
        }) => {
            let alpha = parse_alpha(alpha.as_deref())?;
            let phi = parse_series_arg(&phi, alpha.as_ref(), order)?;
            let u = Series::parse_literal(&u, order)?;
            let sign = parse_sign(&sign)?;
            let params = InvolutionParams::new(phi, u, sign)?;
            let t = build_involution(&params)?;
            let verified = t.multiply(&t)?.is_identity();
            if !verified {
                return Err(Error::Defect("built array failed verification".into()));
            }
            Ok(Report::Built { array: t })
        }
        Command::Involve(InvolveCmd::Decompose { array }) => {
            let t = array_from(&array, order)?;
            let params = decompose_involution(&t)?;
            let round_trip = build_involution(&params)? == t;
            if !round_trip {
                return Err(Error::Defect("decomposition does not rebuild the array".into()));
            }
            Ok(Report::Decomposed { params })
        }
        Command::Riordan(cmd) => match cmd {
            RiordanCmd::Show { array } => Ok(Report::Array {
                array: array_from(&array, order)?,
            }),
            RiordanCmd::Mul { left, right } => {
                let a = array_from(&left, order)?;
                let b = resolve_array(
                    right.f2.as_deref(),
                    right.g2.as_deref(),
                    right.array2.as_deref(),
                    order,
                )?;
                Ok(Report::Array {
                    array: a.multiply(&b)?,
                })
            }
            RiordanCmd::Inv { array } => Ok(Report::Array {
                array: array_from(&array, order)?.inverse(),
            }),
            RiordanCmd::Aseq { phi, alpha } => {
                let alpha = parse_alpha(alpha.as_deref())?;
                let phi = parse_series_arg(&phi, alpha.as_ref(), order)?;
                Ok(Report::ASequence {
                    a: a_sequence(&phi)?,
                })
            }
            RiordanCmd::Order { array, max } => {
                if max < 1 {
                    return Err(Error::Invalid("--max must be at least 1".into()));
                }
                let t = array_from(&array, order)?;
                Ok(Report::Order {
                    found: t.probe_order(max),
                    max,
                })
            }
            RiordanCmd::Pseudo { array } => Ok(Report::Pseudo {
                value: array_from(&array, order)?.is_pseudo_involution(),
            }),
        },
        Command::Sheffer(cmd) => match cmd {
            ShefferCmd::Laguerre { n } => Ok(Report::Sequence {
                seq: laguerre(n),
                neutral: None,
            }),
            ShefferCmd::Compose { p, q, weight } => {
                let h = Weight::preset(&weight, order)?;
                let p = resolve_sequence(&p, &h, order)?;
                let q = resolve_sequence(&q, &h, order)?;
                let seq = p.umbral_compose(&q, &h)?;
                let neutral = Some(seq.is_neutral(&h));
                Ok(Report::Sequence { seq, neutral })
            }
            ShefferCmd::Nfold { seq, times, weight } => {
                let h = Weight::preset(&weight, order)?;
                let seq = resolve_sequence(&seq, &h, order)?.n_fold(times, &h)?;
                let neutral = Some(seq.is_neutral(&h));
                Ok(Report::Sequence { seq, neutral })
            }
            ShefferCmd::CheckProp1 {
                d,
                f,
                g,
                times,
                weight,
            } => {
                if times < 1 {
                    return Err(Error::Invalid("--times must be at least 1".into()));
                }
                let h = Weight::preset(&weight, order)?;
                let d = resolve_array(f.as_deref(), g.as_deref(), d.as_deref(), order)?;
                let (sheffer_side, group_side) = prop1_equivalence(&d, times, &h)?;
                if sheffer_side != group_side {
                    return Err(Error::Defect(format!(
                        "weighted side {sheffer_side} disagrees with group side {group_side}"
                    )));
                }
                Ok(Report::Prop1 {
                    sheffer_side,
                    group_side,
                })
            }
        },
    }
}

fn exit_code(err: &Error) -> u8 {
    if err.is_precondition() {
        2
    } else if err.is_input() {
        1
    } else {
        3
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = match cli.format {
        FormatArg::Pretty => Format::Pretty,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    match run(cli) {
        Ok(report) => {
            print!("{}", report.render(format));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
