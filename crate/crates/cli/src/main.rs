//! `ncpart`: counting, enumeration, the noncrossing partition transform,
//! the peak-labeled Dyck path bijection and the cross-validation suite.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncpart::bijection::{self, valid_rotations};
use ncpart::enumerate::{count_family_bruteforce, enumerate_family, enumerate_peak_labeled, Bounds, Family};
use ncpart::recurrences::CountTable;
use ncpart::structures::{parse_partition, DyckPath, PeakLabeledDyckPath};
use ncpart::transform::{
    format_sequence, ncp_inverse, ncp_transform, parse_sequence, table_row, Sequence, SequenceStyle,
};
use ncpart::verify::{run_suite, Suite};

#[derive(Parser, Debug)]
#[command(name = "ncpart", version, about = "Sets, lists and noncrossing partitions of [n]")]
struct Cli {
    /// Output layout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Largest n for brute-force enumeration (all families).
    #[arg(long, global = true, env = "NCPART_BRUTE_BOUND")]
    bound: Option<usize>,

    /// Truncate sequences to indices 0..=T, or cap the number of enumerated items.
    #[arg(long, global = true)]
    max_terms: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Closed,
    Recurrence,
    Bruteforce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of members of a family on [n].
    Count {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Counts for n = 1..=upto.
    Seq {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// List the members of a family, or all peak-labeled Dyck paths.
    Enumerate {
        #[arg(long, required_unless_present = "peak_labeled")]
        family: Option<Family>,
        #[arg(long)]
        n: usize,
        /// Enumerate peak-labeled Dyck n-paths instead of a family.
        #[arg(long)]
        peak_labeled: bool,
    },
    /// Apply the noncrossing partition transform.
    Transform(TransformArgs),
    /// Map a peak-labeled Dyck path to a set of lists, or back.
    Bijection {
        #[arg(value_enum)]
        direction: Direction,
        /// U/D step string (forward).
        #[arg(long, required_if_eq("direction", "forward"))]
        path: Option<String>,
        /// Comma-separated peak labels (forward).
        #[arg(long, required_if_eq("direction", "forward"))]
        labels: Option<String>,
        /// Set of lists in `1|3,6,8|4` form (inverse).
        #[arg(long, required_if_eq("direction", "inverse"))]
        partition: Option<String>,
        /// Print every intermediate table.
        #[arg(long)]
        trace: bool,
    },
    /// Run the cross-validation checks.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Args, Debug)]
struct TransformArgs {
    /// Sequence text, e.g. "1,1,2,5,14".
    #[arg(long, conflicts_with_all = ["input", "row"])]
    seq: Option<String>,
    /// Sequence file (`-` for stdin): one term per line, one separated line, or b-file.
    #[arg(long, conflicts_with = "row")]
    input: Option<String>,
    /// Built-in table row as input.
    #[arg(long)]
    row: Option<String>,
    #[arg(long, value_enum, default_value_t = Direction::Forward)]
    direction: Direction,
}

enum Failure {
    /// Some verification check failed: exit 1, report still printed.
    Check { report: String, failed: usize },
    /// Bad input or infeasible request: exit 2.
    Usage(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

struct Ctx {
    format: Format,
    bounds: Bounds,
    max_terms: Option<usize>,
}

impl Ctx {
    fn structured(&self) -> bool {
        self.format == Format::Structured
    }
}

fn record(out: &mut String, value: Value) {
    writeln!(out, "{value}").unwrap();
}

fn count_with(ctx: &Ctx, table: &mut CountTable, family: Family, n: usize, method: Method) -> Result<String, Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    Ok(match method {
        Method::Auto | Method::Closed => table.closed_count(family, n).to_string(),
        Method::Recurrence => table.recurrence_count(family, n).to_string(),
        Method::Bruteforce => count_family_bruteforce(family, n, &ctx.bounds).map_err(usage)?.to_string(),
    })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Auto => "auto",
        Method::Closed => "closed",
        Method::Recurrence => "recurrence",
        Method::Bruteforce => "bruteforce",
    }
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(usage)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn transform(ctx: &Ctx, args: &TransformArgs) -> Result<String, Failure> {
    let (mut seq, style) = match (&args.seq, &args.input, &args.row) {
        (Some(text), _, _) => parse_sequence(text).map_err(usage)?,
        (None, Some(path), _) => parse_sequence(&read_source(path)?).map_err(usage)?,
        (None, None, Some(name)) => {
            let row = table_row(name).map_err(usage)?;
            (row.input_sequence(ctx.max_terms.unwrap_or(10)), SequenceStyle::Commas)
        }
        (None, None, None) => return Err(Failure::Usage("one of --seq, --input or --row is required".into())),
    };
    if let Some(t) = ctx.max_terms {
        seq = seq.truncated(t);
    }
    let result: Sequence = match args.direction {
        Direction::Forward => ncp_transform(&seq),
        Direction::Inverse => ncp_inverse(&seq),
    }
    .map_err(usage)?;
    if ctx.structured() {
        let mut out = String::new();
        let direction = if args.direction == Direction::Forward { "forward" } else { "inverse" };
        for (k, (a, b)) in seq.terms().iter().zip(result.terms()).enumerate() {
            record(
                &mut out,
                json!({"command": "transform", "direction": direction, "k": k, "input": a.to_string(), "output": b.to_string()}),
            );
        }
        Ok(out)
    } else {
        Ok(format_sequence(&result, style))
    }
}

fn parse_labels(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad label {t:?}"))))
        .collect()
}

fn bijection_cmd(
    ctx: &Ctx,
    direction: Direction,
    path: Option<&str>,
    labels: Option<&str>,
    partition: Option<&str>,
    trace: bool,
) -> Result<String, Failure> {
    let mut out = String::new();
    match direction {
        Direction::Forward => {
            let path: DyckPath = path.unwrap_or_default().parse().map_err(|e| Failure::Usage(format!("path {e}")))?;
            let labels = parse_labels(labels.unwrap_or_default())?;
            let p = PeakLabeledDyckPath::new(path, labels).map_err(usage)?;
            let (image, steps) = bijection::forward_traced(&p);
            if ctx.structured() {
                record(
                    &mut out,
                    json!({"command": "bijection", "direction": "forward", "path": p.path().to_string(),
                           "labels": p.labels(), "image": image.to_string()}),
                );
            } else {
                if trace {
                    writeln!(out, "{steps}").unwrap();
                }
                writeln!(out, "{image}").unwrap();
            }
        }
        Direction::Inverse => {
            let q = parse_partition(partition.unwrap_or_default(), true, false)
                .map_err(|e| Failure::Usage(format!("partition {e}")))?;
            let p = bijection::inverse(&q).map_err(usage)?;
            if ctx.structured() {
                record(
                    &mut out,
                    json!({"command": "bijection", "direction": "inverse", "partition": q.to_string(),
                           "path": p.path().to_string(), "labels": p.labels()}),
                );
            } else {
                if trace {
                    let rotations = valid_rotations(&q).map_err(usage)?;
                    writeln!(out, "valid rotations: {rotations:?}").unwrap();
                    writeln!(out, "{}", bijection::forward_traced(&p).1).unwrap();
                }
                let labels: Vec<String> = p.labels().iter().map(|l| l.to_string()).collect();
                writeln!(out, "{} {}", p.path(), labels.join(",")).unwrap();
            }
        }
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let ctx = Ctx {
        format: cli.format,
        bounds: cli.bound.map(Bounds::uniform).unwrap_or_default(),
        max_terms: cli.max_terms,
    };
    let mut out = String::new();
    match &cli.command {
        Command::Count { family, n, method } => {
            let value = count_with(&ctx, &mut CountTable::new(), *family, *n, *method)?;
            if ctx.structured() {
                record(
                    &mut out,
                    json!({"command": "count", "family": family.code(), "n": n, "method": method_name(*method), "count": value}),
                );
            } else {
                writeln!(out, "{value}").unwrap();
            }
        }
        Command::Seq { family, upto, method } => {
            if *upto == 0 {
                return Err(Failure::Usage("upto must be at least 1".into()));
            }
            let mut table = CountTable::new();
            for n in 1..=*upto {
                let value = count_with(&ctx, &mut table, *family, n, *method)?;
                if ctx.structured() {
                    record(
                        &mut out,
                        json!({"command": "seq", "family": family.code(), "n": n, "method": method_name(*method), "count": value}),
                    );
                } else {
                    writeln!(out, "{n} {value}").unwrap();
                }
            }
        }
        Command::Enumerate { family, n, peak_labeled } => {
            let limit = ctx.max_terms.unwrap_or(usize::MAX);
            if *peak_labeled {
                for p in enumerate_peak_labeled(*n).take(limit) {
                    if ctx.structured() {
                        record(&mut out, json!({"command": "enumerate", "n": n, "path": p.path().to_string(), "labels": p.labels()}));
                    } else {
                        writeln!(out, "{p}").unwrap();
                    }
                }
            } else {
                let family = family.expect("required by clap");
                let bound = ctx.bounds.limit_for(family);
                if *n > bound {
                    return Err(Failure::Usage(format!(
                        "enumerating {family} at n = {n} exceeds the bound {bound}; raise --bound to proceed"
                    )));
                }
                for p in enumerate_family(family, *n).take(limit) {
                    if ctx.structured() {
                        record(&mut out, json!({"command": "enumerate", "family": family.code(), "n": n, "member": p.to_string()}));
                    } else {
                        writeln!(out, "{p}").unwrap();
                    }
                }
            }
        }
        Command::Transform(args) => out = transform(&ctx, args)?,
        Command::Bijection {
            direction,
            path,
            labels,
            partition,
            trace,
        } => {
            out = bijection_cmd(&ctx, *direction, path.as_deref(), labels.as_deref(), partition.as_deref(), *trace)?;
        }
        Command::Verify { suite, max_n } => {
            let results = run_suite(*suite, *max_n, &ctx.bounds);
            for r in &results {
                if ctx.structured() {
                    record(
                        &mut out,
                        json!({"command": "verify", "suite": r.suite, "check": r.name, "passed": r.passed, "detail": r.detail}),
                    );
                } else {
                    writeln!(out, "{r}").unwrap();
                }
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                return Err(Failure::Check { report: out, failed });
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            io::stdout().flush().ok();
            ExitCode::SUCCESS
        }
        Err(Failure::Check { report, failed }) => {
            print!("{report}");
            eprintln!("ncpart: {failed} check(s) failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ncpart: {msg}");
            ExitCode::from(2)
        }
    }
}
