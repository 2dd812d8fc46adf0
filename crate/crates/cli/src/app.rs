//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 on success (or a magic square for `verify`), 1 when
//! `verify` finds a failed condition, 2 for usage, parse and range errors.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use oddmagic_core::{
    compose, enumerate_magic_3, exhaustive_monoid_check, f_table,
    find_left_cancellation_counterexample, g_table, mod_reduce, new_ms, siamese, table_a, Base,
    ComposeParams, GroupSpec, SearchSpace, TABLE_A_ORDERS,
};

use crate::document::{self, Format};
use crate::error::CliError;
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "oddmagic",
    version,
    about = "Odd-order magic squares, residue tables and block composition"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Siamese,
    Newms,
    Ftable,
    Gtable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleTask {
    Enum3,
    Monoid,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a square of odd order N.
    Gen {
        n: i64,
        #[arg(value_enum, default_value = "siamese")]
        variant: Variant,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every magic condition of a square (JSON or CSV; stdin if no file).
    Verify {
        file: Option<PathBuf>,
        /// Entry convention for CSV input, e.g. `one-based` or `residue:5`.
        #[arg(long)]
        base: Option<Base>,
    },
    /// Block composition A * B.
    Compose {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        u: i64,
        #[arg(long, default_value = "int")]
        group: GroupSpec,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply the New MS column order to a square.
    Newms {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce every entry of a square modulo M (default: its order).
    Modtable {
        file: Option<PathBuf>,
        #[arg(long)]
        modulus: Option<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Row, column and diagonal sums of the four constructions per order.
    TableA {
        #[arg(long, value_delimiter = ',', conflicts_with = "up_to")]
        n_list: Option<Vec<i64>>,
        /// Every odd order from 3 through this value.
        #[arg(long)]
        up_to: Option<i64>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force oracles.
    Oracle {
        #[arg(value_enum)]
        task: OracleTask,
        #[arg(long, default_value = "mod:4")]
        group: GroupSpec,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        u: i64,
        #[arg(long, default_value_t = 2)]
        max_order: usize,
        /// Integer entries range over 0..=BOUND.
        #[arg(long, default_value_t = 1)]
        entry_bound: i64,
        /// Also run the exhaustive law check over all orders up to 2.
        #[arg(long)]
        exhaustive: bool,
    },
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, S>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_ERROR
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn order(n: i64) -> Result<usize, CliError> {
    usize::try_from(n).map_err(|_| CliError::Usage(format!("invalid order {n}")))
}

fn read_input(file: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match file {
        Some(path) => Ok(fs::read_to_string(path)?),
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<i32, CliError> {
    match command {
        Command::Gen {
            n,
            variant,
            format,
            out,
        } => {
            let n = order(n)?;
            let s = match variant {
                Variant::Siamese => siamese(n)?,
                Variant::Newms => new_ms(&siamese(n)?)?,
                Variant::Ftable => f_table(n)?,
                Variant::Gtable => g_table(n)?,
            };
            emit(&document::render(&s, format), out.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { file, base } => {
            let s = document::parse(&read_input(file.as_ref(), stdin)?, base)?;
            let r = s.verify_magic();
            stdout.write_all(report::magic_report(&s, &r).as_bytes())?;
            Ok(if r.is_magic() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Compose {
            a,
            b,
            u,
            group,
            format,
            out,
        } => {
            let group_base = group.residue_base();
            let a = document::parse(&fs::read_to_string(&a)?, group_base)?;
            let b = document::parse(&fs::read_to_string(&b)?, group_base)?;
            let e = compose(&a, &b, &ComposeParams::new(u, group))?;
            let text = match format {
                Format::Ascii => document::render_ascii(&e, Some(a.order())),
                other => document::render(&e, other),
            };
            emit(&text, out.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Newms { file, format, out } => {
            let s = document::parse(&read_input(file.as_ref(), stdin)?, None)?;
            emit(
                &document::render(&new_ms(&s)?, format),
                out.as_ref(),
                stdout,
            )?;
            Ok(EXIT_OK)
        }
        Command::Modtable {
            file,
            modulus,
            format,
            out,
        } => {
            let s = document::parse(&read_input(file.as_ref(), stdin)?, None)?;
            let m = modulus.unwrap_or(s.order() as i64);
            emit(
                &document::render(&mod_reduce(&s, m)?, format),
                out.as_ref(),
                stdout,
            )?;
            Ok(EXIT_OK)
        }
        Command::TableA {
            n_list,
            up_to,
            format,
            out,
        } => {
            let ns: Vec<usize> = match (n_list, up_to) {
                (Some(list), _) => list.into_iter().map(order).collect::<Result<_, _>>()?,
                (None, Some(max)) => {
                    if max < 3 {
                        return Err(CliError::Usage(format!(
                            "--up-to must be at least 3, got {max}"
                        )));
                    }
                    (3..=order(max)?).step_by(2).collect()
                }
                (None, None) => TABLE_A_ORDERS.to_vec(),
            };
            let rows = table_a(&ns)?;
            emit(&report::table_a(&rows, format), out.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Oracle {
            task,
            group,
            u,
            max_order,
            entry_bound,
            exhaustive,
        } => {
            let text = match task {
                OracleTask::Enum3 => report::enumeration(&enumerate_magic_3()),
                OracleTask::Monoid => {
                    let params = ComposeParams::new(u, group);
                    let space =
                        SearchSpace::new(max_order, max_order).with_entry_bound(entry_bound);
                    let w = find_left_cancellation_counterexample(&params, space)?;
                    let header = match group {
                        GroupSpec::Integers => format!(
                            "group={group} u={} orders<={max_order} entries 0..={entry_bound}",
                            params.u()
                        ),
                        GroupSpec::Mod(_) => {
                            format!("group={group} u={} orders<={max_order}", params.u())
                        }
                    };
                    let mut text = report::left_search(&w, &header);
                    if exhaustive {
                        let r = exhaustive_monoid_check(&params, max_order.min(2), entry_bound)?;
                        text.push_str(&report::monoid_check(&r));
                    }
                    text
                }
            };
            stdout.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

/// Convenience for tests: run with in-memory streams.
pub fn run_captured(args: &[&str], input: &str) -> (i32, String, String) {
    let mut stdin = input.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("oddmagic").chain(args.iter().copied());
    let code = run(argv, &mut stdin, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 stdout"),
        String::from_utf8(err).expect("utf-8 stderr"),
    )
}
