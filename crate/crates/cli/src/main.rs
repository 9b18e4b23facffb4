//! `abacus`: inspect partitions on the p-abacus, render displays, enumerate
//! partitions and run exhaustive p×p weight-drop verification.
//!
//! Exit codes: 0 on success, 1 when a verification finds a counterexample,
//! 2 on usage or parse errors.

mod inspect;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use abacus_core::{
    abacus_display, is_p_by_p, p_by_p_depth, p_core, partitions_of, render_ascii, verify_degrees,
    BeadCount, CampaignOptions, CampaignSummary, Partition, Prime, RenderStyle,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "abacus",
    version,
    about = "Abacus calculus for integer partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the formatted output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for verification (0 = all available cores)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Core, weight, quotient, block and p×p data for one partition
    Inspect {
        /// Partition such as `20^10,10^5,5^5`
        #[arg(value_parser = parse_partition_arg)]
        partition: Partition,
        #[arg(long, value_parser = parse_prime_arg)]
        p: Prime,
        /// Bead count for the reported display (`auto` or a multiple of p)
        #[arg(long, default_value = "auto")]
        beads: BeadCount,
        /// Also report the value predicted by the open complexity conjecture
        #[arg(long)]
        conjecture: bool,
    },
    /// Draw the abacus display
    Render {
        #[arg(value_parser = parse_partition_arg)]
        partition: Partition,
        #[arg(long, value_parser = parse_prime_arg)]
        p: Prime,
        #[arg(long, default_value = "auto")]
        beads: BeadCount,
        /// Use `O` and `.` instead of `●` and `|`
        #[arg(long)]
        ascii: bool,
    },
    /// List the partitions of d in reverse-lexicographic order
    Enumerate {
        #[arg(long)]
        d: usize,
        /// Prime for filters other than `all`
        #[arg(long, value_parser = parse_prime_arg)]
        p: Option<Prime>,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
    },
    /// Check the p×p weight-drop characterisation on every partition of d ≤ max-d
    Verify {
        #[arg(long, value_parser = parse_prime_arg)]
        p: Prime,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_d: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Filter {
    All,
    Pxp,
    /// p×p with a p×p common quotient component
    PxpRecursive,
    CoreEmpty,
}

fn parse_partition_arg(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: abacus_core::Error| e.to_string())
}

fn parse_prime_arg(s: &str) -> Result<Prime, String> {
    let n: usize = s
        .parse()
        .map_err(|_| format!("`{s}` is not a positive integer"))?;
    Prime::new(n).map_err(|e| e.to_string())
}

/// A failure that ends the run with the given exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: io::Error) -> Self {
        Failure {
            code: 2,
            message: format!("cannot write {}: {err}", path.display()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Inspect {
            partition,
            p,
            beads,
            conjecture,
        } => {
            let report = inspect::build(&partition, p, beads, conjecture)
                .map_err(|e| Failure::usage(e.to_string()))?;
            let text = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => to_json(&report),
                Format::Csv => {
                    return Err(Failure::usage("inspect supports --format text or json"))
                }
            };
            emit(cli.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Render {
            partition,
            p,
            beads,
            ascii,
        } => {
            let disp =
                abacus_display(&partition, p, beads).map_err(|e| Failure::usage(e.to_string()))?;
            let text = match cli.format {
                Format::Text => {
                    let style = if ascii {
                        RenderStyle::ASCII
                    } else {
                        RenderStyle::UNICODE
                    };
                    render_ascii(&disp, style)
                }
                Format::Json => to_json(&disp),
                Format::Csv => return Err(Failure::usage("render supports --format text or json")),
            };
            emit(cli.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Enumerate { d, p, filter } => {
            let text = enumerate(d, p, filter, cli.format)?;
            emit(cli.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify { p, max_d } => {
            let summary = with_threads(cli.threads, || {
                verify_degrees(
                    p,
                    1..=max_d as usize,
                    CampaignOptions {
                        keep_rows: cli.format == Format::Csv,
                    },
                )
            })?;
            let export = match cli.format {
                Format::Text => None,
                Format::Json => Some(to_json(&summary)),
                Format::Csv => Some(verify_csv(&summary)?),
            };
            match (&cli.out, export) {
                (Some(path), Some(body)) => {
                    fs::write(path, body).map_err(|e| Failure::io(path, e))?;
                    print!("{}", summary_text(&summary));
                }
                (None, Some(body)) => print!("{body}"),
                (Some(path), None) => {
                    let text = summary_text(&summary);
                    fs::write(path, &text).map_err(|e| Failure::io(path, e))?;
                    print!("{text}");
                }
                (None, None) => print!("{}", summary_text(&summary)),
            }
            eprintln!("elapsed: {:.3}s", summary.elapsed.as_secs_f64());
            Ok(if summary.verified() { 0 } else { 1 })
        }
    }
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Failure::usage(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::io(path, e)),
        None => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report serializes");
    s.push('\n');
    s
}

fn keep(lam: &Partition, p: Option<Prime>, filter: Filter) -> bool {
    let Some(p) = p else { return true };
    match filter {
        Filter::All => true,
        Filter::Pxp => is_p_by_p(lam, p),
        Filter::PxpRecursive => p_by_p_depth(lam, p).is_none_or(|depth| depth >= 2),
        Filter::CoreEmpty => p_core(lam, p).is_empty(),
    }
}

#[derive(Serialize)]
struct EnumerateReport {
    d: usize,
    p: Option<Prime>,
    filter: Filter,
    count: usize,
    partitions: Vec<Partition>,
}

fn enumerate(
    d: usize,
    p: Option<Prime>,
    filter: Filter,
    format: Format,
) -> Result<String, Failure> {
    if filter != Filter::All && p.is_none() {
        return Err(Failure::usage("--filter other than `all` needs --p"));
    }
    let partitions: Vec<Partition> = partitions_of(d)
        .filter(|lam| keep(lam, p, filter))
        .collect();
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for lam in &partitions {
                s.push_str(&lam.to_string());
                s.push('\n');
            }
            s.push_str(&format!("count: {}\n", partitions.len()));
            s
        }
        Format::Json => to_json(&EnumerateReport {
            d,
            p,
            filter,
            count: partitions.len(),
            partitions,
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Failure::usage(e.to_string());
            w.write_record(["index", "partition"]).map_err(csv_err)?;
            for (i, lam) in partitions.iter().enumerate() {
                w.write_record([i.to_string(), lam.to_string()])
                    .map_err(csv_err)?;
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
        }
    };
    Ok(text)
}

fn summary_text(s: &CampaignSummary) -> String {
    let mut out = String::new();
    out.push_str(&format!("p = {}, d = {}..={}\n", s.p, s.d_min, s.d_max));
    out.push_str(&format!("partitions checked: {}\n", s.checked));
    out.push_str(&format!("p×p partitions: {}\n", s.pxp_cases));
    for stats in s.per_degree.iter().filter(|x| x.pxp > 0) {
        out.push_str(&format!("  d = {}: {}\n", stats.d, stats.pxp));
    }
    out.push_str(&format!("counterexamples: {}\n", s.counterexamples.len()));
    for report in &s.counterexamples {
        out.push_str(&format!(
            "  {} (weight {}, p×p {}, verdict {}, {} issues)\n",
            report.partition,
            report.weight,
            report.is_pxp,
            report.verdict,
            report.issues.len()
        ));
    }
    out.push_str(if s.verified() {
        "verified\n"
    } else {
        "FAILED\n"
    });
    out
}

fn verify_csv(s: &CampaignSummary) -> Result<String, Failure> {
    let csv_err = |e: csv::Error| Failure::usage(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "d",
        "partition",
        "is_pxp",
        "weight",
        "min_delta",
        "max_delta",
        "verdict",
    ])
    .map_err(csv_err)?;
    let opt = |x: Option<isize>| x.map(|v| v.to_string()).unwrap_or_default();
    for row in s.rows.iter().flatten() {
        w.write_record([
            row.d.to_string(),
            row.partition.clone(),
            row.is_pxp.to_string(),
            row.weight.to_string(),
            opt(row.min_delta),
            opt(row.max_delta),
            row.verdict.to_string(),
        ])
        .map_err(csv_err)?;
    }
    Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8"))
}
