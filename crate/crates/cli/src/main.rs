use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use farey_core::maps::{apply_map, find, registry, verify_map_capped, Params};
use farey_core::sweep::{run_all, SweepBounds};
use farey_core::{generate_capped, Counter, Error, Mat2, SeqSpec};
use serde::Serialize;
use serde_json::json;

const GENERATION_CAP: i64 = 10_000;
const COUNTING_CAP: i64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "farey",
    version,
    about = "Farey sequences, their Boolean-lattice subsequences, and the maps between them"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Largest order that may be materialized.
    #[arg(long, global = true, env = "FAREY_CAP", default_value_t = GENERATION_CAP)]
    cap: i64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a sequence.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        /// Keep only the terms ≤ 1/2 (low) or ≥ 1/2 (high).
        #[arg(long, value_enum)]
        half: Option<Half>,
        /// Apply a unimodular matrix "a,b,c,d" to every term.
        #[arg(long, value_name = "MATRIX")]
        image: Option<Mat2>,
    },
    /// Print the closed-form length of a sequence.
    Count {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also generate the sequence and compare.
        #[arg(long)]
        check: bool,
    },
    /// Apply a catalog map to its domain.
    Map {
        id: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        s: Option<i64>,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long)]
        verify: bool,
    },
    /// Print the map catalog as JSON.
    Registry,
    /// Run every verification suite.
    VerifyAll {
        #[arg(long, default_value_t = SweepBounds::default().max_n)]
        max_n: i64,
        #[arg(long, default_value_t = SweepBounds::default().max_m)]
        max_m: i64,
        #[arg(long, default_value_t = SweepBounds::default().max_s)]
        max_s: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Full,
    Upper,
    Lower,
    Bool,
    #[value(name = "bool_f", alias = "bool-f")]
    BoolF,
    #[value(name = "bool_g", alias = "bool-g")]
    BoolG,
}

#[derive(Clone, Copy, ValueEnum)]
enum Half {
    Low,
    High,
}

#[derive(Args)]
struct SpecArgs {
    family: Family,
    /// n, then m and l as the family requires.
    #[arg(required = true, allow_negative_numbers = true)]
    params: Vec<i64>,
}

impl SpecArgs {
    fn spec(&self) -> Result<SeqSpec, Error> {
        let (name, arity) = match self.family {
            Family::Full => ("full", 1),
            Family::Upper => ("upper", 2),
            Family::Lower => ("lower", 2),
            Family::Bool => ("bool", 2),
            Family::BoolF => ("bool_f", 3),
            Family::BoolG => ("bool_g", 3),
        };
        if self.params.len() != arity {
            return Err(Error::Spec(format!(
                "{name} takes {arity} parameter(s), got {}",
                self.params.len()
            )));
        }
        let p = &self.params;
        let spec = match self.family {
            Family::Full => SeqSpec::full(p[0]),
            Family::Upper => SeqSpec::upper(p[0], p[1]),
            Family::Lower => SeqSpec::lower(p[0], p[1]),
            Family::Bool => SeqSpec::boolean(p[0], p[1]),
            Family::BoolF => SeqSpec::bool_f(p[0], p[1], p[2]),
            Family::BoolG => SeqSpec::bool_g(p[0], p[1], p[2]),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::VerificationFailure { .. }
        | Error::NeighborViolation { .. }
        | Error::IdentityViolation { .. } => 3,
        _ => 2,
    }
}

struct Output {
    format: Format,
    out: io::StdoutLock<'static>,
}

impl Output {
    fn emit(&mut self, plain: impl FnOnce() -> String, json: impl Serialize) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "{}", plain()),
            Format::Json => writeln!(
                self.out,
                "{}",
                serde_json::to_string(&json).expect("output serializes")
            ),
        }
    }
}

fn run(cli: Cli, out: &mut Output) -> Result<(), CliError> {
    let cap = cli.cap;
    if !(1..=COUNTING_CAP).contains(&cap) {
        return Err(Error::Spec(format!("--cap must lie in 1..={COUNTING_CAP}, got {cap}")).into());
    }
    match cli.command {
        Command::Gen { spec, half, image } => {
            let mut spec = spec.spec()?;
            spec = match half {
                Some(Half::Low) => spec.half_low(),
                Some(Half::High) => spec.half_high(),
                None => spec,
            };
            if let Some(m) = image {
                spec = spec.image(m);
            }
            let seq = generate_capped(&spec, cap)?;
            out.emit(|| seq.to_plain(), &seq)?;
        }
        Command::Count { spec, check } => {
            let spec = spec.spec()?;
            let order = spec.order();
            if order > COUNTING_CAP {
                return Err(Error::Cap {
                    order,
                    cap: COUNTING_CAP,
                }
                .into());
            }
            let count = Counter::new(order)?.cardinality(&spec)?;
            let generated = if check {
                Some(generate_capped(&spec, cap)?.len() as i64)
            } else {
                None
            };
            out.emit(
                || count.to_string(),
                json!({ "spec": spec, "count": count, "generated": generated }),
            )?;
            if let Some(g) = generated {
                if g != count {
                    return Err(Error::VerificationFailure {
                        map: spec.to_string(),
                        detail: format!("formula gives {count}, generated sequence has {g} terms"),
                    }
                    .into());
                }
                eprintln!("check ok: generated {g} terms");
            }
        }
        Command::Map {
            id,
            n,
            m,
            s,
            l,
            verify,
        } => {
            let handle = find(&id)?.instantiate(&Params { n, m, s, l })?;
            let domain = generate_capped(&handle.domain, cap)?;
            let mapping = apply_map(&handle, &domain)?;
            let report = if verify {
                Some(verify_map_capped(&handle, cap)?)
            } else {
                None
            };
            out.emit(
                || {
                    let mut lines = vec![
                        format!("map: {} {} {} {}", handle.label, handle.matrix, handle.direction, handle.injectivity),
                        format!("domain: {}", domain.to_plain()),
                        format!("image: {}", mapping.image.to_plain()),
                    ];
                    lines.extend(mapping.pairs.iter().map(|(x, y)| format!("{x} -> {y}")));
                    if let Some(r) = &report {
                        lines.push(format!("verify: {}", if r.passed { "pass" } else { "FAIL" }));
                        if !r.fixed_points.is_empty() {
                            let fixed: Vec<String> = r.fixed_points.iter().map(|x| x.to_string()).collect();
                            lines.push(format!("fixed points: {}", fixed.join(" ")));
                        }
                        if let Some(f) = &r.failure {
                            lines.push(format!("failure: {f}"));
                        }
                    }
                    lines.join("\n")
                },
                json!({ "map": handle, "domain": domain, "image": mapping.image, "pairs": mapping.pairs, "verification": report }),
            )?;
            if let Some(r) = report {
                r.into_result()?;
            }
        }
        Command::Registry => {
            // Always JSON: the catalog has no sensible plain rendering.
            writeln!(
                out.out,
                "{}",
                serde_json::to_string(registry()).expect("registry serializes")
            )?;
        }
        Command::VerifyAll {
            max_n,
            max_m,
            max_s,
        } => {
            if max_n < 1 || max_m < 1 || max_s < 0 {
                return Err(
                    Error::Spec("need --max-n ≥ 1, --max-m ≥ 1, --max-s ≥ 0".into()).into(),
                );
            }
            // Dyadic maps reach order m·2^(s+2).
            let top = u32::try_from(max_s + 2)
                .ok()
                .and_then(|e| 2i64.checked_pow(e))
                .and_then(|p| max_m.checked_mul(p))
                .unwrap_or(i64::MAX)
                .max(max_n);
            if top > cap {
                return Err(Error::Cap { order: top, cap }.into());
            }
            let summaries = run_all(SweepBounds {
                max_n,
                max_m,
                max_s,
            })?;
            out.emit(
                || {
                    let mut lines = vec![format!("{:<18} {:>10}  status", "suite", "cases")];
                    lines.extend(
                        summaries
                            .iter()
                            .map(|s| format!("{:<18} {:>10}  pass", s.suite, s.cases)),
                    );
                    lines.join("\n")
                },
                &summaries,
            )?;
        }
    }
    Ok(())
}

enum CliError {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output {
        format: cli.format,
        out: io::stdout().lock(),
    };
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
