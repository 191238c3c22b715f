//! `qblock`: batch analysis of graphs read as graph6 lines or edge lists.

mod commands;
mod input;
mod selftest;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qblock_core::hyperbolicity::HalfInteger;
use qblock_core::oracle::DEFAULT_CAP;
use qblock_core::par;

use commands::Record;
use input::{Format, Item};

#[derive(Debug, Parser)]
#[command(name = "qblock", version, about = "Hyperbolicity, block-graph structure and quantum automorphism groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input format.
    #[arg(long, value_enum, default_value = "graph6", global = true)]
    format: Format,

    /// Read from this file instead of standard input.
    #[arg(long = "in", value_name = "PATH", global = true)]
    input: Option<PathBuf>,

    /// One JSON object per line (default for `analyze`).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,

    /// Human-readable lines (default for every other subcommand).
    #[arg(long, global = true)]
    text: bool,

    /// Worker threads; 0 uses one per core.
    #[arg(long, env = "QBLOCK_JOBS", default_value_t = 0, global = true)]
    jobs: usize,

    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Maximum number of automorphisms the brute-force oracle enumerates.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    cap: usize,

    /// With `hyperbolicity`: print one table over the whole batch.
    #[arg(long, global = true)]
    delta_report: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
enum Command {
    /// Full report per graph.
    Analyze,
    /// Exact Gromov hyperbolicity.
    Hyperbolicity,
    /// Block graph and block-cograph recognition.
    Recognize,
    /// Anchored decomposition of a block graph, or cotree of a block-cograph.
    Decompose,
    /// Automorphism and quantum automorphism group expressions.
    Group,
    /// Brute-force Schmidt criterion.
    Schmidt,
    /// Quantum symmetry and quantum asymmetry verdicts.
    Qsym,
    /// Canonical code.
    Canon,
    /// (Quantum) isomorphism of consecutive pairs of graphs.
    Iso,
    /// Oracle equivalence checks at reduced scale.
    Selftest,
}

fn per_graph(command: Command, item: &Item, cap: usize) -> Record {
    let g = match &item.graph {
        Ok(g) => g,
        Err(e) => return Record::error(&item.id, e),
    };
    match command {
        Command::Analyze => commands::analyze_cmd(&item.id, g, cap),
        Command::Hyperbolicity => commands::hyperbolicity_cmd(&item.id, g),
        Command::Recognize => commands::recognize_cmd(&item.id, g),
        Command::Decompose => commands::decompose_cmd(&item.id, g),
        Command::Group => commands::group_cmd(&item.id, g, cap),
        Command::Schmidt => commands::schmidt_cmd(&item.id, g, cap),
        Command::Qsym => commands::qsym_cmd(&item.id, g),
        Command::Canon => commands::canon_cmd(&item.id, g),
        Command::Iso | Command::Selftest => unreachable!("handled separately"),
    }
}

fn iso_pair(pair: &[Item]) -> Record {
    match pair {
        [a, b] => match (&a.graph, &b.graph) {
            (Ok(g), Ok(h)) => commands::iso_cmd((&a.id, &b.id), g, h),
            (Err(e), _) => Record::error(&a.id, e),
            (_, Err(e)) => Record::error(&b.id, e),
        },
        [a] => Record::error(&a.id, "iso needs graphs in pairs; this one has no partner"),
        _ => unreachable!("chunks of two"),
    }
}

fn delta_rows(items: &[Item]) -> Vec<Result<commands::DeltaRow, Record>> {
    par::map(items, |item| match &item.graph {
        Ok(g) => Ok(commands::delta_row(&item.id, g)),
        Err(e) => Err(Record::error(&item.id, e)),
    })
}

fn delta_report(
    rows: &[Result<commands::DeltaRow, Record>],
    json: bool,
    out: &mut impl Write,
) -> std::io::Result<bool> {
    let mut histogram: BTreeMap<u32, usize> = BTreeMap::new();
    let mut failed = false;
    for row in rows.iter().flatten() {
        *histogram.entry(row.twice_delta).or_default() += 1;
    }
    if json {
        let table: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| match r {
                Ok(row) => serde_json::to_value(row).expect("serializable"),
                Err(rec) => rec.json.clone(),
            })
            .collect();
        let counts: BTreeMap<String, usize> =
            histogram.iter().map(|(k, v)| (HalfInteger(*k).to_string(), *v)).collect();
        failed = rows.iter().any(Result::is_err);
        writeln!(out, "{}", serde_json::json!({ "rows": table, "delta_counts": counts }))?;
        return Ok(failed);
    }
    writeln!(out, "id\tn\tm\tdelta\tblock_graph")?;
    for row in rows {
        match row {
            Ok(r) => writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                r.id,
                r.n,
                r.m,
                HalfInteger(r.twice_delta),
                r.is_block_graph
            )?,
            Err(rec) => {
                failed = true;
                writeln!(out, "{}", rec.text)?;
            }
        }
    }
    for (twice, count) in &histogram {
        writeln!(out, "# delta = {}: {count}", HalfInteger(*twice))?;
    }
    Ok(failed)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let json = if cli.command == Command::Analyze { !cli.text } else { cli.json };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());

    if cli.command == Command::Selftest {
        let results = par::with_workers(cli.jobs, || selftest::run(cli.seed, cli.cap));
        for r in &results {
            if json {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            } else {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                write!(out, "{verdict} {} ({} cases, {} failures)", r.name, r.cases, r.failures)?;
                match &r.first_failure {
                    Some(f) => writeln!(out, ": {f}")?,
                    None => writeln!(out)?,
                }
            }
        }
        out.flush()?;
        return Ok(results.iter().any(|r| !r.passed()));
    }

    let (source, text) = input::read_source(cli.input.as_deref())?;
    let items = input::parse_items(&source, &text, cli.format);

    if cli.delta_report {
        let rows = par::with_workers(cli.jobs, || delta_rows(&items));
        let failed = delta_report(&rows, json, &mut out)?;
        out.flush()?;
        return Ok(failed);
    }

    let records: Vec<Record> = par::with_workers(cli.jobs, || match cli.command {
        Command::Iso => {
            let pairs: Vec<&[Item]> = items.chunks(2).collect();
            par::map(&pairs, |pair| iso_pair(pair))
        }
        command => par::map(&items, |item| per_graph(command, item, cli.cap)),
    });
    let mut failed = false;
    for record in &records {
        failed |= record.failed;
        if json {
            writeln!(out, "{}", record.json)?;
        } else {
            writeln!(out, "{}", record.text)?;
        }
    }
    out.flush()?;
    Ok(failed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.delta_report && cli.command != Command::Hyperbolicity {
        eprintln!("error: --delta-report only applies to the hyperbolicity subcommand");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
