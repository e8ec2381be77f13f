//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a sequence fails a property (the
//! counterexample is printed as JSON) or a lookup finds nothing, 2 on
//! usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::aperiodic::{build_aos, burns_bound};
use crate::error::Error;
use crate::format::{format_sequence, parse_sequence};
use crate::join::debruijn_lempel;
use crate::locator::LocatorIndex;
use crate::periodic::{
    build_orientable_with, dai_bound, default_starter, BuildOptions, ConstructionTrace,
    DEFAULT_STARTER_ORDER,
};
use crate::search::{self, Checkpoint, SearchConfig};
use crate::seq::{Mode, Sequence, Tuple};
use crate::tables;
use crate::verify::{verify_nwindow, verify_orientable};

#[derive(Debug, Parser)]
#[command(
    name = "orientable",
    version,
    about = "Build, check and search orientable binary sequences"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a sequence.
    #[command(subcommand)]
    Construct(Construct),
    /// Check a sequence file for a window property.
    Verify(VerifyArgs),
    /// Print upper bounds on period and length.
    Bound(BoundArgs),
    /// Exhaustively search for an optimal sequence.
    Search(SearchArgs),
    /// Write a position/orientation lookup table for a sequence.
    Index(IndexArgs),
    /// Look up one window.
    Locate(LocateArgs),
    /// Regenerate the reference tables.
    Tables,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Orientable cycle from a good odd-weight starter.
    Periodic(PeriodicArgs),
    /// Ideal aperiodic orientable word grown from 01.
    Aperiodic(AperiodicArgs),
    /// de Bruijn cycle by the Lempel recursion.
    Debruijn(DebruijnArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the sequence here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the construction trace as JSON.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PeriodicArgs {
    #[arg(long)]
    pub target_order: usize,
    /// Starter sequence file (defaults to [001010111] at order 6).
    #[arg(long, requires = "starter_order")]
    pub starter: Option<PathBuf>,
    #[arg(long)]
    pub starter_order: Option<usize>,
    /// Check orientability of intermediate cycles up to this order.
    #[arg(long, default_value_t = crate::periodic::DEFAULT_VERIFY_ORDER)]
    pub verify_through: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AperiodicArgs {
    #[arg(long)]
    pub target_order: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DebruijnArgs {
    #[arg(long)]
    pub order: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Periodic,
    Aperiodic,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Periodic => Mode::Periodic,
            ModeArg::Aperiodic => Mode::Aperiodic,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Property {
    Orientable,
    Nwindow,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Window order; defaults to the file header's order.
    #[arg(long)]
    pub order: Option<usize>,
    /// Reading mode; defaults to the file header's mode.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long, value_enum, default_value = "orientable")]
    pub property: Property,
    /// Sequence file, or `-` for stdin.
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long)]
    pub order: usize,
    /// Only the bound on aperiodic word length.
    #[arg(long)]
    pub aperiodic: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, required_unless_present = "resume")]
    pub order: Option<usize>,
    #[arg(long, value_enum, required_unless_present = "resume")]
    pub mode: Option<ModeArg>,
    /// Node budget; without it the search runs to completion.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Continue from a checkpoint file.
    #[arg(long, conflicts_with_all = ["order", "mode"])]
    pub resume: Option<PathBuf>,
    /// Where to write the checkpoint when the budget runs out.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long)]
    pub no_prune: bool,
    #[arg(long)]
    pub no_symmetry: bool,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[arg(long)]
    pub seq: PathBuf,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LocateArgs {
    #[arg(long)]
    pub seq: PathBuf,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// The bits read, e.g. 00110.
    #[arg(long)]
    pub window: String,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Violation { .. } | Error::StarterRejected { .. } => 1,
            _ => 2,
        };
        let message = match &e {
            Error::Violation {
                property,
                order,
                counterexample,
            } => json!({
                "ok": false,
                "property": property,
                "order": order,
                "counterexample": counterexample,
            })
            .to_string(),
            other => format!("error: {other}"),
        };
        Failure { code, message }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: format!("error: {e}"),
        }
    }
}

type CliResult = Result<(), Failure>;

/// Parses `args` and runs the command, returning the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = out.flush();
            if f.code == 1 {
                let _ = writeln!(out, "{}", f.message);
            } else {
                eprintln!("{}", f.message);
            }
            f.code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Construct(c) => construct(c, cli.json, out),
        Command::Verify(a) => verify(a, cli.json, out),
        Command::Bound(a) => bound(a, cli.json, out),
        Command::Search(a) => run_search(a, cli.json, out),
        Command::Index(a) => index(a, out),
        Command::Locate(a) => locate(a, cli.json, out),
        Command::Tables => {
            if cli.json {
                writeln!(out, "{}", to_json(&tables::all()?))?;
            } else {
                write!(out, "{}", tables::render_markdown()?)?;
            }
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            message: format!("error: cannot read {}: {e}", path.display()),
        })
    }
}

fn load(
    path: &Path,
    mode: Option<ModeArg>,
    order: Option<usize>,
) -> Result<(Sequence, usize), Failure> {
    let text = read_input(path)?;
    let file = parse_sequence(&text, mode.map(Mode::from))?;
    let order = order.or(file.order).ok_or_else(|| Failure {
        code: 2,
        message: "error: no --order given and none in the file header".into(),
    })?;
    Ok((file.sequence, order))
}

fn emit_sequence(
    seq: &Sequence,
    order: usize,
    trace: Option<&ConstructionTrace>,
    output: Option<&OutputArgs>,
    debruijn_out: Option<&PathBuf>,
    json_out: bool,
    out: &mut dyn Write,
) -> CliResult {
    if let (Some(trace), Some(path)) = (trace, output.and_then(|o| o.trace.as_ref())) {
        fs::write(path, to_json(trace))?;
    }
    let text = format_sequence(seq, Some(order));
    let target = output.and_then(|o| o.out.as_ref()).or(debruijn_out);
    if let Some(path) = target {
        fs::write(path, &text)?;
    }
    if json_out {
        let value = json!({
            "mode": seq.mode(),
            "order": order,
            "length": seq.len(),
            "sequence": seq.to_string(),
            "trace": trace,
        });
        writeln!(out, "{}", to_json(&value))?;
    } else if target.is_none() {
        write!(out, "{text}")?;
    } else {
        writeln!(
            out,
            "wrote {} sequence of length {} (order {order})",
            seq.mode(),
            seq.len()
        )?;
    }
    Ok(())
}

fn construct(c: &Construct, json_out: bool, out: &mut dyn Write) -> CliResult {
    match c {
        Construct::Periodic(a) => {
            let (starter, n0) = match &a.starter {
                Some(path) => {
                    let (seq, n0) = load(path, Some(ModeArg::Periodic), a.starter_order)?;
                    let Sequence::Periodic(c) = seq else {
                        unreachable!("loaded in periodic mode")
                    };
                    (c, n0)
                }
                None => (default_starter(), DEFAULT_STARTER_ORDER),
            };
            let options = BuildOptions {
                verify_through_order: a.verify_through,
            };
            let (cycle, trace) = build_orientable_with(&starter, n0, a.target_order, &options)?;
            emit_sequence(
                &cycle.into(),
                a.target_order,
                Some(&trace),
                Some(&a.output),
                None,
                json_out,
                out,
            )
        }
        Construct::Aperiodic(a) => {
            let (word, trace) = build_aos(a.target_order)?;
            emit_sequence(
                &word.into(),
                a.target_order,
                Some(&trace),
                Some(&a.output),
                None,
                json_out,
                out,
            )
        }
        Construct::Debruijn(a) => {
            let cycle = debruijn_lempel(a.order)?;
            emit_sequence(
                &cycle.into(),
                a.order,
                None,
                None,
                a.out.as_ref(),
                json_out,
                out,
            )
        }
    }
}

fn verify(a: &VerifyArgs, json_out: bool, out: &mut dyn Write) -> CliResult {
    let (seq, n) = load(&a.file, a.mode, a.order)?;
    let (name, verdict) = match a.property {
        Property::Orientable => ("orientable", verify_orientable(&seq, n)?),
        Property::Nwindow => ("n-window", verify_nwindow(&seq, n)?),
    };
    match verdict {
        Ok(()) => {
            if json_out {
                let value = json!({
                    "ok": true,
                    "property": name,
                    "order": n,
                    "mode": seq.mode(),
                    "length": seq.len(),
                });
                writeln!(out, "{}", to_json(&value))?;
            } else {
                writeln!(
                    out,
                    "ok: {} sequence of length {} is {name} at order {n}",
                    seq.mode(),
                    seq.len()
                )?;
            }
            Ok(())
        }
        Err(counterexample) => Err(Error::Violation {
            property: name,
            order: n,
            counterexample,
        }
        .into()),
    }
}

fn bound(a: &BoundArgs, json_out: bool, out: &mut dyn Write) -> CliResult {
    let burns = burns_bound(a.order)?;
    let dai = if a.aperiodic {
        None
    } else {
        Some(dai_bound(a.order)?)
    };
    if json_out {
        let value = json!({ "order": a.order, "dai": dai, "burns": burns });
        writeln!(out, "{}", to_json(&value))?;
    } else {
        if let Some(d) = dai {
            writeln!(out, "dai {d}")?;
        }
        writeln!(out, "burns {burns}")?;
    }
    Ok(())
}

fn run_search(a: &SearchArgs, json_out: bool, out: &mut dyn Write) -> CliResult {
    let result = match &a.resume {
        Some(path) => {
            let checkpoint: Checkpoint =
                serde_json::from_str(&read_input(path)?).map_err(|e| Failure {
                    code: 2,
                    message: format!("error: bad checkpoint {}: {e}", path.display()),
                })?;
            let budget = a.budget.map(|b| checkpoint.nodes.saturating_add(b));
            search::resume(&checkpoint, budget)?
        }
        None => {
            let config = SearchConfig {
                budget: a.budget,
                prune: !a.no_prune,
                reduce_symmetry: !a.no_symmetry,
            };
            let n = a.order.expect("clap requires order");
            match Mode::from(a.mode.expect("clap requires mode")) {
                Mode::Periodic => search::max_orientable_period(n, &config)?,
                Mode::Aperiodic => search::max_aos_length(n, &config)?,
            }
        }
    };
    if let (Some(cp), Some(path)) = (&result.checkpoint, &a.checkpoint) {
        fs::write(path, to_json(cp))?;
    }
    if json_out {
        writeln!(out, "{}", to_json(&result))?;
    } else {
        let what = match result.mode {
            Mode::Periodic => "period",
            Mode::Aperiodic => "length",
        };
        let status = if result.exhaustive {
            "optimal (exhaustive)"
        } else {
            "best found (budget exhausted)"
        };
        writeln!(
            out,
            "order {} {}: {what} {} {status}, {} nodes",
            result.order, result.mode, result.best, result.nodes
        )?;
        if let Some(w) = &result.witness {
            writeln!(out, "witness {w}")?;
        }
    }
    Ok(())
}

fn index(a: &IndexArgs, out: &mut dyn Write) -> CliResult {
    let (seq, n) = load(&a.seq, a.mode, a.order)?;
    let idx = LocatorIndex::build(&seq, n)?;
    match &a.out {
        Some(path) => {
            fs::write(path, idx.to_text())?;
            writeln!(out, "wrote {} entries", idx.len())?;
        }
        None => write!(out, "{}", idx.to_text())?,
    }
    Ok(())
}

fn locate(a: &LocateArgs, json_out: bool, out: &mut dyn Write) -> CliResult {
    let (seq, n) = load(&a.seq, a.mode, a.order)?;
    let window: Tuple = a.window.parse()?;
    let idx = LocatorIndex::build(&seq, n)?;
    let hit = idx.locate(&window)?;
    if json_out {
        writeln!(
            out,
            "{}",
            to_json(&json!({ "window": a.window, "location": hit }))
        )?;
    } else if let Some(loc) = hit {
        writeln!(out, "position {} {}", loc.position, loc.orientation)?;
    }
    match hit {
        Some(_) => Ok(()),
        None => Err(Failure {
            code: 1,
            message: if json_out {
                String::new()
            } else {
                format!("not found: {}", a.window)
            },
        }),
    }
}
