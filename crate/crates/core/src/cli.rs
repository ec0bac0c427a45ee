//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven in-process by tests.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, BenchSpec};
use crate::cover::Cover;
use crate::engine::{te_minimize_with, AnchorPolicy, Mode, Options};
use crate::error::Error;
use crate::expand::{prime_implicants, stable_order, FunctionSpec};
use crate::oracle::exact_minimum_cover;
use crate::temap::build_te_map;
use crate::textio::{
    infer_names, parse_expression, read_pla, render_expression, render_kmap, render_te_map,
    write_pla_cover, VariableNames,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_EQUIVALENT: u8 = 1;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_INTERNAL: u8 = 70;

#[derive(Parser, Debug)]
#[command(
    name = "temin",
    version,
    about = "Two-level Boolean minimization with the Tail-Eliminate heuristic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every prime implicant of the input function.
    Primes {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Expr)]
        output: OutputFormat,
    },
    /// Print the Tail-Eliminate map of the (expanded) input.
    Temap {
        #[command(flatten)]
        input: InputArgs,
        /// Use the input cubes as given instead of all primes.
        #[arg(long)]
        no_expand: bool,
    },
    /// Minimize with the Tail-Eliminate procedure.
    Minimize {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Safe)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = AnchorArg::Tail)]
        anchor: AnchorArg,
        #[arg(long)]
        no_expand: bool,
        /// Write the iteration trace as JSON.
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
        /// Exit with status 1 if the result is not equivalent to the input.
        #[arg(long)]
        require_equivalent: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Expr)]
        output: OutputFormat,
    },
    /// Exact minimum-cardinality prime cover.
    Exact {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Expr)]
        output: OutputFormat,
    },
    /// Check two inputs for equivalence.
    Verify {
        /// Input files ("-" for stdin).
        files: Vec<String>,
        /// Inline expressions; combined with FILES there must be two inputs.
        #[arg(short = 'e', long = "expr")]
        exprs: Vec<String>,
        #[arg(long)]
        vars: Option<String>,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
    },
    /// Draw a Karnaugh map (2 to 4 variables).
    Kmap {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Score the heuristic against the exact minimum on many functions.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file ("-" or omitted for stdin).
    file: Option<String>,
    /// Inline expression instead of a file.
    #[arg(short = 'e', long = "expr", conflicts_with = "file")]
    expr: Option<String>,
    /// Comma-separated variable names, most significant first.
    #[arg(long)]
    vars: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Probability that a minterm is ON.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// Probability that a minterm is a don't-care.
    #[arg(long, default_value_t = 0.0)]
    dc_density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ModeChoice::Safe)]
    mode: ModeChoice,
    #[arg(long, value_enum, default_value_t = AnchorChoice::Tail)]
    anchor: AnchorChoice,
    /// Enumerate all functions of n variables (n <= 4).
    #[arg(long)]
    exhaustive: bool,
    /// Record wall-clock runtimes in the report.
    #[arg(long)]
    timings: bool,
    /// Per-function CSV (default: stdout).
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// JSON summary (default: stderr).
    #[arg(long, value_name = "FILE")]
    summary: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum InputFormat {
    Auto,
    Expr,
    Pla,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OutputFormat {
    Expr,
    Pla,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Faithful,
    Safe,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Faithful => Mode::Faithful,
            ModeArg::Safe => Mode::Safe,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AnchorArg {
    Tail,
    Essential,
}

impl From<AnchorArg> for AnchorPolicy {
    fn from(a: AnchorArg) -> AnchorPolicy {
        match a {
            AnchorArg::Tail => AnchorPolicy::TailOnly,
            AnchorArg::Essential => AnchorPolicy::AnyEssential,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeChoice {
    Faithful,
    Safe,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AnchorChoice {
    Tail,
    Essential,
    Both,
}

/// Failure with its exit status.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(EXIT_DATA, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_DATA, e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run(
    args: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> CliResult<u8> {
    match command {
        Command::Primes { input, output } => {
            let inp = load(&input, io)?;
            let primes = prime_implicants(&inp.function()?);
            emit_cover(io, &primes, &inp.names, output)?;
            Ok(EXIT_OK)
        }
        Command::Temap { input, no_expand } => {
            let inp = load(&input, io)?;
            let cover = inp.working_cover(no_expand)?;
            let map = build_te_map(&cover)?;
            io.stdout
                .write_all(render_te_map(&map, Some(&inp.names))?.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Minimize {
            input,
            mode,
            anchor,
            no_expand,
            trace,
            require_equivalent,
            output,
        } => {
            let inp = load(&input, io)?;
            minimize(
                io,
                &inp,
                mode.into(),
                anchor.into(),
                no_expand,
                trace.as_deref(),
                require_equivalent,
                output,
            )
        }
        Command::Exact { input, output } => {
            let inp = load(&input, io)?;
            let cover = exact_minimum_cover(&inp.function()?)?;
            emit_cover(io, &cover, &inp.names, output)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            files,
            exprs,
            vars,
            format,
        } => verify(io, &files, &exprs, vars.as_deref(), format),
        Command::Kmap { input } => {
            let inp = load(&input, io)?;
            io.stdout
                .write_all(render_kmap(&inp.on, Some(&inp.names))?.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Bench(args) => bench(io, args),
    }
}

struct Input {
    names: VariableNames,
    on: Cover,
    dc: Cover,
}

impl Input {
    fn function(&self) -> CliResult<FunctionSpec> {
        Ok(FunctionSpec::new(self.on.minterms()?, self.dc.minterms()?)?)
    }

    /// The cover the heuristic starts from: the input cubes themselves, or
    /// all primes with the input's own primes first.
    fn working_cover(&self, no_expand: bool) -> CliResult<Cover> {
        if no_expand {
            return Ok(self.on.clone());
        }
        let primes = prime_implicants(&self.function()?);
        Ok(stable_order(&self.on, &primes)?)
    }
}

fn read_source(file: Option<&str>, io: &mut Io) -> CliResult<String> {
    match file {
        None | Some("-") => {
            let mut text = String::new();
            io.stdin.read_to_string(&mut text)?;
            Ok(text)
        }
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Failure::new(EXIT_DATA, format!("{path}: {e}")))
        }
    }
}

fn looks_like_pla(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with('.'))
}

fn explicit_names(vars: Option<&str>) -> CliResult<Option<VariableNames>> {
    Ok(vars.map(VariableNames::parse_list).transpose()?)
}

fn parse_text(
    text: &str,
    format: InputFormat,
    names: Option<&VariableNames>,
    io: &mut Io,
) -> CliResult<Input> {
    let is_pla = match format {
        InputFormat::Auto => looks_like_pla(text),
        InputFormat::Pla => true,
        InputFormat::Expr => false,
    };
    if is_pla {
        let pla = read_pla(text)?;
        let names = match (names, pla.names.clone()) {
            (Some(n), _) => {
                n.check_width(pla.width())?;
                n.clone()
            }
            (None, Some(n)) => n,
            (None, None) => VariableNames::default_for(pla.width()),
        };
        return Ok(Input {
            names,
            on: pla.on,
            dc: pla.dc,
        });
    }
    let names = match names {
        Some(n) => n.clone(),
        None => infer_names(&[text])?,
    };
    let parsed = parse_expression(text, Some(&names))?;
    if parsed.contradictions > 0 {
        writeln!(
            io.stderr,
            "warning: dropped {} contradictory term(s)",
            parsed.contradictions
        )?;
    }
    let dc = Cover::empty(parsed.cover.width())?;
    Ok(Input {
        names: parsed.names,
        on: parsed.cover,
        dc,
    })
}

fn load(args: &InputArgs, io: &mut Io) -> CliResult<Input> {
    let names = explicit_names(args.vars.as_deref())?;
    let text = match &args.expr {
        Some(e) => e.clone(),
        None => read_source(args.file.as_deref(), io)?,
    };
    parse_text(&text, args.format, names.as_ref(), io)
}

fn emit_cover(
    io: &mut Io,
    cover: &Cover,
    names: &VariableNames,
    format: OutputFormat,
) -> CliResult<()> {
    let text = match format {
        OutputFormat::Expr => render_expression(cover, Some(names))? + "\n",
        OutputFormat::Pla => write_pla_cover(cover, Some(names))?,
    };
    io.stdout.write_all(text.as_bytes())?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn minimize(
    io: &mut Io,
    inp: &Input,
    mode: Mode,
    anchor: AnchorPolicy,
    no_expand: bool,
    trace_path: Option<&Path>,
    require_equivalent: bool,
    output: OutputFormat,
) -> CliResult<u8> {
    let initial = inp.working_cover(no_expand)?;
    let (final_cover, equivalent, trace_json) = if initial.is_empty() {
        let json = serde_json::json!({
            "mode": mode.as_str(),
            "initial": [],
            "final": [],
            "equivalent": true,
            "iterations": [],
        });
        (initial.clone(), true, json)
    } else {
        let opts = Options {
            mode,
            anchor,
            expand_first: false,
        };
        let trace = te_minimize_with(&initial, &opts)?;
        let equivalent = if inp.dc.is_empty() {
            trace.equivalent_to_input
        } else {
            inp.function()?.is_implemented_by(&trace.final_cover)?
        };
        let json = trace.to_json();
        (trace.final_cover, equivalent, json)
    };

    if let Some(path) = trace_path {
        let mut text = serde_json::to_string_pretty(&trace_json).expect("trace serializes");
        text.push('\n');
        fs::write(path, text)
            .map_err(|e| Failure::new(EXIT_DATA, format!("{}: {e}", path.display())))?;
    }
    emit_cover(io, &final_cover, &inp.names, output)?;

    if !equivalent {
        if mode == Mode::Safe {
            return Err(Failure::new(
                EXIT_INTERNAL,
                "safe mode produced a non-equivalent result",
            ));
        }
        writeln!(io.stderr, "warning: result is not equivalent to the input")?;
        if require_equivalent {
            return Ok(EXIT_NOT_EQUIVALENT);
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    io: &mut Io,
    files: &[String],
    exprs: &[String],
    vars: Option<&str>,
    format: InputFormat,
) -> CliResult<u8> {
    let mut texts: Vec<String> = exprs.to_vec();
    for f in files {
        texts.push(read_source(Some(f), io)?);
    }
    if texts.len() != 2 {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("verify needs exactly two inputs, got {}", texts.len()),
        ));
    }
    let mut names = explicit_names(vars)?;
    let any_pla = texts.iter().any(|t| match format {
        InputFormat::Auto => looks_like_pla(t),
        InputFormat::Pla => true,
        InputFormat::Expr => false,
    });
    if names.is_none() && !any_pla {
        names = Some(infer_names(&texts)?);
    }
    let a = parse_text(&texts[0], format, names.as_ref(), io)?;
    let b = parse_text(&texts[1], format, names.as_ref(), io)?;
    if a.on.width() != b.on.width() {
        return Err(Error::WidthMismatch {
            left: a.on.width(),
            right: b.on.width(),
        }
        .into());
    }
    let left = a.on.minterms()?;
    let right = b.on.minterms()?;
    if left == right {
        writeln!(io.stdout, "EQUIVALENT")?;
        return Ok(EXIT_OK);
    }
    let witness = (0..left.universe_len())
        .find(|&m| left.contains(m) != right.contains(m))
        .expect("sets differ");
    let bits = crate::cube::Cube::from_minterm(left.width(), witness)?.encoding();
    writeln!(
        io.stdout,
        "NOT EQUIVALENT (minterm {bits}: first={}, second={})",
        u8::from(left.contains(witness)),
        u8::from(right.contains(witness))
    )?;
    Ok(EXIT_NOT_EQUIVALENT)
}

fn bench(io: &mut Io, args: BenchArgs) -> CliResult<u8> {
    let modes = match args.mode {
        ModeChoice::Faithful => vec![Mode::Faithful],
        ModeChoice::Safe => vec![Mode::Safe],
        ModeChoice::Both => vec![Mode::Faithful, Mode::Safe],
    };
    let anchors = match args.anchor {
        AnchorChoice::Tail => vec![AnchorPolicy::TailOnly],
        AnchorChoice::Essential => vec![AnchorPolicy::AnyEssential],
        AnchorChoice::Both => vec![AnchorPolicy::TailOnly, AnchorPolicy::AnyEssential],
    };
    let spec = BenchSpec {
        n: args.n,
        count: args.count,
        density: args.density,
        dc_density: args.dc_density,
        seed: args.seed,
        modes,
        anchors,
        exhaustive: args.exhaustive,
        timings: args.timings,
    };
    spec.validate()
        .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let report = run_bench(&spec)?;

    let csv = report.to_csv();
    match &args.csv {
        Some(path) => fs::write(path, csv)?,
        None => io.stdout.write_all(csv.as_bytes())?,
    }
    let summary = report.summary_json();
    match &args.summary {
        Some(path) => fs::write(path, summary)?,
        None => io.stderr.write_all(summary.as_bytes())?,
    }
    Ok(EXIT_OK)
}
