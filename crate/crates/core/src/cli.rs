//! The `countable` command line: one verb per invocation, results on stdout,
//! diagnostics on stderr.
//!
//! Exit status is 0 on success, 1 on domain errors (a value outside a
//! domain, a zero denominator, an unknown guest, ...) and 2 on usage errors.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bijections::{self, GridPosition};
use crate::diagonal::{self, DigitStream, StreamList};
use crate::enumerations;
use crate::error::Error;
use crate::finite_compare::{self, FiniteSet, PairingWitness};
use crate::hotel;
use crate::numbers::{Integer, Natural, Whole};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "countable",
    version,
    about = "Explicit bijections, enumerations and diagonal constructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one of the pairing rules with N
    Bij(BijArgs),
    /// List or search a canonical enumeration
    Enum(EnumArgs),
    /// Compare two finite sets through all maximal pairings
    Compare(CompareArgs),
    /// Hilbert's hotel scripts
    Hotel {
        #[command(subcommand)]
        action: HotelAction,
    },
    /// Build the anti-diagonal of a list of digit streams
    Diagonal(DiagonalArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Rule {
    /// n <-> 2n
    Even,
    /// n <-> n - 1
    Whole,
    /// n <-> 0, 1, -1, 2, -2, ...
    Int,
    /// n <-> 2n - 1
    Odd,
    /// (row, col) <-> serpentine grid index
    Pair,
}

#[derive(Debug, Args)]
struct BijArgs {
    rule: Rule,
    /// Input value(s); `pair` takes `ROW COL`, or a single index with --inverse
    #[arg(required = true, allow_negative_numbers = true)]
    values: Vec<String>,
    /// Evaluate the inverse rule
    #[arg(long)]
    inverse: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("query").required(true).args(["take", "index_of"])))]
struct EnumArgs {
    /// One of: n, evens, odds, n0, z, grid, q+, q
    name: String,
    /// Print the first K elements as `index<TAB>value`
    #[arg(long, value_name = "K")]
    take: Option<u64>,
    /// Print the index of VALUE
    #[arg(long, value_name = "VALUE", allow_hyphen_values = true)]
    index_of: Option<String>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Comma-separated labels of the left set
    #[arg(long, allow_hyphen_values = true)]
    left: String,
    /// Comma-separated labels of the right set
    #[arg(long, allow_hyphen_values = true)]
    right: String,
    /// Print every maximal pairing
    #[arg(long)]
    witnesses: bool,
    /// Per-side size cap for the exhaustive search
    #[arg(long, default_value_t = finite_compare::DEFAULT_MAX_SIZE, conflicts_with = "no_limit")]
    max_size: usize,
    /// Lift the size cap
    #[arg(long)]
    no_limit: bool,
    /// Validate a witness file against the two sets instead of comparing
    #[arg(long, value_name = "FILE", conflicts_with = "witnesses")]
    check: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum HotelAction {
    /// Replay a script (`-` reads stdin) and answer its queries
    Run { script: PathBuf },
}

#[derive(Debug, Args)]
struct DiagonalArgs {
    /// File with one digit stream per line (`-` reads stdin)
    file: PathBuf,
    /// Number of places to construct and verify; defaults to the list length
    #[arg(long)]
    depth: Option<usize>,
    /// Use the 5/4 rule, which avoids the digits 0 and 9
    #[arg(long)]
    safe: bool,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let outcome = match cli.command {
        Command::Bij(args) => bij(args, out),
        Command::Enum(args) => enumerate(args, out),
        Command::Compare(args) => compare(args, out),
        Command::Hotel {
            action: HotelAction::Run { script },
        } => hotel_run(&script, out),
        Command::Diagonal(args) => diagonal(args, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn single<'a>(values: &'a [String], rule: &str) -> std::result::Result<&'a str, Failure> {
    match values {
        [v] => Ok(v),
        _ => Err(Failure::Usage(format!(
            "`bij {rule}` takes exactly one value"
        ))),
    }
}

fn bij(args: BijArgs, out: &mut dyn Write) -> Outcome {
    let v = &args.values;
    let answer = match (args.rule, args.inverse) {
        (Rule::Even, false) => bijections::to_even(&single(v, "even")?.parse()?).to_string(),
        (Rule::Even, true) => bijections::from_even(&single(v, "even")?.parse()?)?.to_string(),
        (Rule::Whole, false) => bijections::to_whole(&single(v, "whole")?.parse()?).to_string(),
        (Rule::Whole, true) => {
            bijections::from_whole(&single(v, "whole")?.parse::<Whole>()?).to_string()
        }
        (Rule::Int, false) => bijections::to_integer(&single(v, "int")?.parse()?).to_string(),
        (Rule::Int, true) => {
            bijections::from_integer(&single(v, "int")?.parse::<Integer>()?).to_string()
        }
        (Rule::Odd, false) => bijections::to_odd(&single(v, "odd")?.parse()?).to_string(),
        (Rule::Odd, true) => bijections::from_odd(&single(v, "odd")?.parse()?)?.to_string(),
        (Rule::Pair, false) => match v.as_slice() {
            [r, c] => {
                bijections::pair_index(&GridPosition::new(r.parse()?, c.parse()?)).to_string()
            }
            [p] => bijections::pair_index(&p.parse::<GridPosition>()?).to_string(),
            _ => return Err(Failure::Usage("`bij pair` takes ROW COL".into())),
        },
        (Rule::Pair, true) => bijections::unpair(&single(v, "pair")?.parse()?).to_string(),
    };
    writeln!(out, "{answer}")?;
    Ok(())
}

fn enumerate(args: EnumArgs, out: &mut dyn Write) -> Outcome {
    let e = enumerations::by_name(&args.name).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown enumeration {:?}; expected one of {}",
            args.name,
            enumerations::NAMES.join(", ")
        ))
    })?;
    if let Some(k) = args.take {
        let mut buf = io::BufWriter::new(&mut *out);
        for n in 1..=k {
            let idx = Natural::try_from(n).expect("n >= 1");
            writeln!(buf, "{n}\t{}", e.render_at(&idx))?;
        }
        buf.flush()?;
    }
    if let Some(value) = args.index_of {
        writeln!(out, "{}", e.index_of_text(&value)?)?;
    }
    Ok(())
}

fn read_input(path: &Path) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    }
}

fn compare(args: CompareArgs, out: &mut dyn Write) -> Outcome {
    let left = FiniteSet::from_csv(&args.left)?;
    let right = FiniteSet::from_csv(&args.right)?;
    if let Some(path) = &args.check {
        let witness = PairingWitness::parse(&read_input(path)?)?;
        return match finite_compare::check_witness(&left, &right, &witness) {
            Ok(()) => {
                writeln!(out, "valid")?;
                Ok(())
            }
            Err(defect) => Err(Failure::Domain(format!("invalid witness: {defect}"))),
        };
    }
    let cap = (!args.no_limit).then_some(args.max_size);
    let result = finite_compare::compare_capped(&left, &right, cap)?;
    writeln!(out, "{}", result.verdict)?;
    if args.witnesses {
        let all = finite_compare::all_maximal_pairings_capped(&left, &right, cap)?;
        writeln!(out, "# {} maximal pairings", all.len())?;
        for (i, w) in all.iter().enumerate() {
            writeln!(out, "# pairing {}", i + 1)?;
            write!(out, "{w}")?;
        }
    } else {
        write!(out, "{}", result.witness)?;
    }
    Ok(())
}

fn hotel_run(script: &Path, out: &mut dyn Write) -> Outcome {
    let commands = hotel::parse_script(&read_input(script)?)?;
    let mut write_err = None;
    let result = hotel::run_script(&commands, |line| {
        if write_err.is_none() {
            if let Err(e) = writeln!(out, "{line}") {
                write_err = Some(e);
            }
        }
    });
    if let Some(e) = write_err {
        return Err(e.into());
    }
    result?;
    Ok(())
}

fn diagonal(args: DiagonalArgs, out: &mut dyn Write) -> Outcome {
    let list = Arc::new(StreamList::parse(&read_input(&args.file)?)?);
    let depth = args.depth.unwrap_or(list.len());
    if depth == 0 {
        return Err(Failure::Usage(
            "the list is empty and no positive --depth was given".into(),
        ));
    }
    let candidate: Box<dyn DigitStream> = if args.safe {
        Box::new(diagonal::safe_anti_diagonal(Arc::clone(&list)))
    } else {
        Box::new(diagonal::anti_diagonal(Arc::clone(&list)))
    };
    let prefix = candidate.prefix(depth)?;
    let escapes = diagonal::verify_escape(&list, candidate.as_ref(), depth)?;
    writeln!(out, "{}", diagonal::render_prefix(&prefix))?;
    writeln!(out, "escape: {escapes} (depth {depth})")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("countable").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn bij_examples() {
        assert_eq!(
            run_str(&["bij", "int", "9"]),
            (0, "-4\n".into(), String::new())
        );
        let (code, out, err) = run_str(&["bij", "even", "7", "--inverse"]);
        assert_eq!((code, out.as_str()), (1, ""));
        assert!(err.contains("7 is not even"), "{err}");
        assert_eq!(run_str(&["bij", "int", "-4", "--inverse"]).1, "9\n");
        assert_eq!(run_str(&["bij", "pair", "4", "1"]).1, "10\n");
        assert_eq!(run_str(&["bij", "pair", "7", "--inverse"]).1, "(1,4)\n");
        assert_eq!(run_str(&["bij", "whole", "1"]).1, "0\n");
        assert_eq!(run_str(&["bij", "odd", "10"]).1, "19\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["bij", "int", "nine"]).0, 2);
        assert_eq!(run_str(&["bij", "even", "1", "2"]).0, 2);
        assert_eq!(run_str(&["enum", "reals", "--take", "3"]).0, 2);
        assert_eq!(run_str(&["enum", "q+"]).0, 2);
        assert_eq!(
            run_str(&["compare", "--left", "a", "--right", "b", "--bogus"]).0,
            2
        );
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_str(&["bij", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("--inverse"));
    }

    #[test]
    fn enum_take_and_index() {
        let (code, out, _) = run_str(&["enum", "q+", "--take", "9"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("9\t4/1"));
        assert_eq!(run_str(&["enum", "q", "--index-of", "-1/2"]).1, "5\n");
        let (code, _, err) = run_str(&["enum", "q+", "--index-of", "2/4"]);
        assert_eq!(code, 1);
        assert!(err.contains("not"), "{err}");
        assert_eq!(run_str(&["enum", "q+", "--index-of", "1/0"]).0, 1);
    }

    #[test]
    fn compare_output() {
        let (code, out, _) = run_str(&["compare", "--left", "1,2,3", "--right", "a,b,c,d"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "right-larger\n1\ta\n2\tb\n3\tc\nleft-remainder:\nright-remainder:\nd\n"
        );
        let (_, out, _) = run_str(&[
            "compare",
            "--left",
            "1,2,3",
            "--right",
            "a,b,c,d",
            "--witnesses",
        ]);
        assert!(out.contains("# 24 maximal pairings"));
        assert_eq!(out.matches("# pairing ").count(), 24);
        let (code, out, _) = run_str(&["compare", "--left", "", "--right", ""]);
        assert_eq!((code, out.lines().next()), (0, Some("equal")));
        assert_eq!(
            run_str(&["compare", "--left", "1,2,3,4,5,6,7,8,9", "--right", "a"]).0,
            1
        );
        assert_eq!(
            run_str(&[
                "compare",
                "--left",
                "1,2,3,4,5,6,7,8,9",
                "--right",
                "a",
                "--no-limit"
            ])
            .0,
            0
        );
    }
}
