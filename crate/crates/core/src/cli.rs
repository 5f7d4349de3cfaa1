//! The `schreier` command line front end.
//!
//! Exit codes: 0 success, 1 domain failure (word not in the subgroup, an
//! invariant failed), 2 usage or parse error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::actions::FiniteAction;
use crate::check::{run_checks, CheckConfig};
use crate::cosets::{build_table_with_order, CosetTable, SchreierTransversal, TransversalOrder};
use crate::induce::{induce, HAction};
use crate::rewrite::{contains, expand, rewrite};
use crate::schreier::{compute_basis, schreier_rank, SchreierBasis};
use crate::words::Alphabet;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OrderArg {
    #[default]
    Positive,
    Shortlex,
}

impl From<OrderArg> for TransversalOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Positive => TransversalOrder::PositiveFirst,
            OrderArg::Shortlex => TransversalOrder::Shortlex,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "schreier",
    version,
    about = "Schreier transversals, free bases and rewriting for finite-index subgroups of free groups"
)]
pub struct Cli {
    /// Generator names, comma separated. Action files carry their own.
    #[arg(short = 'g', long = "generators", global = true, value_name = "NAMES")]
    pub generators: Option<String>,

    /// Basepoint whose stabilizer is the subgroup H.
    #[arg(long, global = true, default_value_t = 0)]
    pub base: usize,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,

    /// Which Schreier transversal to use.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Positive)]
    pub order: OrderArg,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the reduced canonical form of a word.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the permutation induced by a word, or the image of one point.
    Act {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        point: Option<usize>,
    },
    /// Print the Schreier transversal of the basepoint stabilizer.
    Transversal { file: PathBuf },
    /// Print the Schreier free basis of the basepoint stabilizer.
    Basis { file: PathBuf },
    /// Test whether a word fixes the basepoint.
    Member {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Rewrite a subgroup element over the Schreier basis.
    Rewrite {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Induce an action of F from an action of H given on the basis `b0, b1, ...`.
    Induce { file: PathBuf, h_action: PathBuf },
    /// Run every invariant against one action.
    Check {
        file: PathBuf,
        #[arg(long = "len", default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

/// Output sinks and styling for one invocation.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
    pub color: bool,
}

/// Failure of a command, mapped onto an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    ClosedPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInSubgroup { .. } => Failure::Domain(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::ClosedPipe;
        }
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink = if e.use_stderr() {
                &mut *io.err
            } else {
                &mut *io.out
            };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    run_cli(&cli, io)
}

pub fn run_cli(cli: &Cli, io: &mut Io<'_>) -> i32 {
    match dispatch(cli, io) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::ClosedPipe) => EXIT_OK,
    }
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> CmdResult {
    match &cli.command {
        Command::Reduce { word } => cmd_reduce(cli, io, word),
        Command::Act { file, word, point } => cmd_act(cli, io, file, word, *point),
        Command::Transversal { file } => cmd_transversal(cli, io, file),
        Command::Basis { file } => cmd_basis(cli, io, file),
        Command::Member { file, word } => cmd_member(cli, io, file, word),
        Command::Rewrite { file, word } => cmd_rewrite(cli, io, file, word),
        Command::Induce { file, h_action } => cmd_induce(cli, io, file, h_action),
        Command::Check {
            file,
            max_len,
            seed,
            trials,
        } => cmd_check(cli, io, file, *max_len, *seed, *trials),
    }
}

fn read_action(path: &Path) -> Result<FiniteAction, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    FiniteAction::from_text(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Loads an action file; a conflicting `-g` is overridden with a warning.
fn load_action(cli: &Cli, io: &mut Io<'_>, path: &Path) -> Result<FiniteAction, Failure> {
    let action = read_action(path)?;
    if let Some(names) = &cli.generators {
        let declared = Alphabet::from_csv(names)?;
        if &declared != action.alphabet() {
            writeln!(
                io.err,
                "warning: -g {names} conflicts with generators in {}; using the file",
                path.display()
            )?;
        }
    }
    Ok(action)
}

struct Pipeline {
    action: FiniteAction,
    table: CosetTable,
    transversal: SchreierTransversal,
    basis: SchreierBasis,
}

fn pipeline(cli: &Cli, io: &mut Io<'_>, path: &Path) -> Result<Pipeline, Failure> {
    let action = load_action(cli, io, path)?;
    let (table, transversal) = build_table_with_order(&action, cli.base, cli.order.into())?;
    let basis = compute_basis(&table, &transversal);
    Ok(Pipeline {
        action,
        table,
        transversal,
        basis,
    })
}

fn emit_json(io: &mut Io<'_>, value: Value) -> Result<(), Failure> {
    writeln!(io.out, "{value}")?;
    Ok(())
}

fn cmd_reduce(cli: &Cli, io: &mut Io<'_>, text: &str) -> CmdResult {
    let alphabet = match &cli.generators {
        Some(names) => Alphabet::from_csv(names)?,
        None => Alphabet::default(),
    };
    let word = alphabet.parse(text)?;
    let canonical = alphabet.format(&word);
    match cli.format {
        OutputFormat::Plain => writeln!(io.out, "{canonical}")?,
        OutputFormat::Structured => {
            emit_json(io, json!({ "word": canonical, "length": word.len() }))?
        }
    }
    Ok(EXIT_OK)
}

fn cmd_act(cli: &Cli, io: &mut Io<'_>, path: &Path, text: &str, point: Option<usize>) -> CmdResult {
    let action = load_action(cli, io, path)?;
    let word = action.alphabet().parse(text)?;
    match point {
        Some(p) => {
            let image = action.evaluate(p, &word)?;
            match cli.format {
                OutputFormat::Plain => writeln!(io.out, "{image}")?,
                OutputFormat::Structured => emit_json(io, json!({ "point": p, "image": image }))?,
            }
        }
        None => {
            let perm = action.perm_of_word(&word)?;
            match cli.format {
                OutputFormat::Plain => writeln!(io.out, "{perm}")?,
                OutputFormat::Structured => emit_json(io, json!({ "images": perm.images() }))?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_transversal(cli: &Cli, io: &mut Io<'_>, path: &Path) -> CmdResult {
    let p = pipeline(cli, io, path)?;
    let alphabet = p.action.alphabet();
    match cli.format {
        OutputFormat::Plain => {
            for (c, t) in p.transversal.reps().iter().enumerate() {
                writeln!(io.out, "{c} {}", alphabet.format(t))?;
            }
        }
        OutputFormat::Structured => {
            let reps: Vec<Value> = p
                .transversal
                .reps()
                .iter()
                .enumerate()
                .map(|(c, t)| {
                    json!({ "coset": c, "point": p.table.cosets()[c], "word": alphabet.format(t) })
                })
                .collect();
            emit_json(io, json!({ "index": p.table.index(), "reps": reps }))?
        }
    }
    Ok(EXIT_OK)
}

fn cmd_basis(cli: &Cli, io: &mut Io<'_>, path: &Path) -> CmdResult {
    let p = pipeline(cli, io, path)?;
    let alphabet = p.action.alphabet();
    let m = p.table.index();
    let expected = schreier_rank(m, alphabet.len());
    let degenerate = p.basis.degenerate_count();
    match cli.format {
        OutputFormat::Plain => {
            for (k, e) in p.basis.elements().iter().enumerate() {
                writeln!(
                    io.out,
                    "{k} {} {} {}",
                    alphabet.format(&e.t),
                    alphabet.name(e.gen),
                    alphabet.format(&e.word)
                )?;
            }
            writeln!(
                io.out,
                "count {} expected {expected} degenerate {degenerate}",
                p.basis.len()
            )?;
        }
        OutputFormat::Structured => {
            let elements: Vec<Value> = p
                .basis
                .elements()
                .iter()
                .enumerate()
                .map(|(k, e)| {
                    json!({
                        "k": k,
                        "t": alphabet.format(&e.t),
                        "gen": alphabet.name(e.gen),
                        "word": alphabet.format(&e.word),
                    })
                })
                .collect();
            emit_json(
                io,
                json!({
                    "elements": elements,
                    "count": p.basis.len(),
                    "expected": expected,
                    "degenerate": degenerate,
                }),
            )?
        }
    }
    Ok(EXIT_OK)
}

fn cmd_member(cli: &Cli, io: &mut Io<'_>, path: &Path, text: &str) -> CmdResult {
    let p = pipeline(cli, io, path)?;
    let word = p.action.alphabet().parse(text)?;
    let member = contains(&p.table, &word)?;
    let coset = p.table.coset_of(&word)?;
    match cli.format {
        OutputFormat::Plain if member => writeln!(io.out, "yes")?,
        OutputFormat::Plain => writeln!(io.out, "no {coset}")?,
        OutputFormat::Structured => emit_json(io, json!({ "member": member, "coset": coset }))?,
    }
    Ok(if member { EXIT_OK } else { EXIT_DOMAIN })
}

fn cmd_rewrite(cli: &Cli, io: &mut Io<'_>, path: &Path, text: &str) -> CmdResult {
    let p = pipeline(cli, io, path)?;
    let alphabet = p.action.alphabet();
    let word = alphabet.parse(text)?;
    let bword = rewrite(&p.table, &p.basis, &word)?;
    let expanded = alphabet.format(&expand(&p.basis, &bword)?);
    match cli.format {
        OutputFormat::Plain => {
            writeln!(io.out, "{bword}")?;
            writeln!(io.out, "expanded: {expanded}")?;
        }
        OutputFormat::Structured => {
            let factors: Vec<Value> = bword.factors().map(|(k, s)| json!([k, s])).collect();
            emit_json(
                io,
                json!({ "bword": bword.to_string(), "factors": factors, "expanded": expanded }),
            )?
        }
    }
    Ok(EXIT_OK)
}

fn cmd_induce(cli: &Cli, io: &mut Io<'_>, path: &Path, h_path: &Path) -> CmdResult {
    let p = pipeline(cli, io, path)?;
    let h_action = read_action(h_path)?;
    let sigma = HAction::from_action(&h_action)
        .map_err(|e| Failure::Usage(format!("{}: {e}", h_path.display())))?;
    let induced = induce(&sigma, &p.table, &p.basis)?;
    let action = induced.action();
    match cli.format {
        OutputFormat::Plain => write!(io.out, "{action}")?,
        OutputFormat::Structured => {
            let perms: Vec<Value> = action
                .generator_perms()
                .iter()
                .map(|perm| json!(perm.images()))
                .collect();
            emit_json(
                io,
                json!({
                    "degree": action.degree(),
                    "generators": action.alphabet().names(),
                    "perms": perms,
                    "fiber": induced.fiber(),
                    "index": induced.index(),
                }),
            )?
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check(
    cli: &Cli,
    io: &mut Io<'_>,
    path: &Path,
    max_len: usize,
    seed: u64,
    trials: usize,
) -> CmdResult {
    let action = load_action(cli, io, path)?;
    let config = CheckConfig {
        max_len,
        seed,
        trials,
        order: cli.order.into(),
    };
    let report = run_checks(&action, cli.base, &config)?;
    let passed = report.all_passed();
    match cli.format {
        OutputFormat::Plain => {
            writeln!(io.out, "index {}", report.index)?;
            writeln!(io.out, "rank {}", report.rank)?;
            writeln!(io.out, "basis {}", report.basis_len)?;
            for outcome in &report.outcomes {
                let status = match (&outcome.failure, io.color) {
                    (None, false) => "pass".to_string(),
                    (None, true) => "\x1b[32mpass\x1b[0m".to_string(),
                    (Some(why), false) => format!("FAIL {why}"),
                    (Some(why), true) => format!("\x1b[31mFAIL\x1b[0m {why}"),
                };
                writeln!(io.out, "{:<26} {status}", outcome.name)?;
            }
            let failed = report.outcomes.iter().filter(|o| !o.passed()).count();
            writeln!(
                io.out,
                "result {} ({} of {} checks passed)",
                if passed { "pass" } else { "FAIL" },
                report.outcomes.len() - failed,
                report.outcomes.len()
            )?;
        }
        OutputFormat::Structured => {
            let checks: Vec<Value> = report
                .outcomes
                .iter()
                .map(|o| json!({ "name": o.name, "pass": o.passed(), "detail": o.failure }))
                .collect();
            emit_json(
                io,
                json!({
                    "index": report.index,
                    "rank": report.rank,
                    "basis": report.basis_len,
                    "checks": checks,
                    "pass": passed,
                }),
            )?
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_DOMAIN })
}
