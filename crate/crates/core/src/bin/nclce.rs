use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use nclce::crossing::CrossingDetector;
use nclce::families::{measure, ratio_band, Family, ScalingRow, Workload};
use nclce::lyndon::lyndon_tree_checked;
use nclce::oracle::{
    gen_noncrossing_queries, naive_lce, naive_lyndon_tree, naive_runs, naive_square_count,
};
use nclce::runs::squares_in_runs;
use nclce::{
    compute_runs_with, parse_queries, Error, InputMode, LceStats, NcLce, Options, Order, Text,
};

/// Non-crossing LCE queries, Lyndon trees, runs and squares.
#[derive(Parser)]
#[command(name = "nclce", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all runs as `start end period`, sorted.
    Runs(Common),
    /// Print the Lyndon tree of `$text` in pre-order, one `a b` interval per line.
    Lyndon {
        #[command(flatten)]
        common: Common,
        /// 0 for the natural symbol order, 1 for its reverse.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        order: u8,
    },
    /// Print the number of square occurrences.
    Squares(Common),
    /// Answer a batch of LCE queries, one answer per line.
    Lce {
        #[command(flatten)]
        common: Common,
        /// Query file with one `a b` pair per line.
        #[arg(long, value_name = "FILE", conflicts_with = "generate")]
        queries: Option<String>,
        /// Generate this many random non-crossing queries instead.
        #[arg(long, value_name = "Q")]
        generate: Option<usize>,
        /// Seed for --generate.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the working sequence of every query to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Work-scaling report: comparisons / (n log2 n) per family and size.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Common {
    /// Input file; `-` reads stdin.
    #[arg(default_value = "-")]
    input: String,
    /// How input bytes become symbols.
    #[arg(long, default_value = "bytes")]
    mode: InputMode,
    /// Keep a trailing newline in bytes mode instead of dropping it.
    #[arg(long)]
    raw: bool,
    /// Reject crossing queries (exit code 2).
    #[arg(long)]
    strict: bool,
    /// Emit instrumentation counters to stderr as one JSON record.
    #[arg(long)]
    stats: bool,
    /// Compute with the brute-force oracle instead.
    #[arg(long, conflicts_with_all = ["stats", "check"])]
    oracle: bool,
    /// Verify the structural bounds and audit the level sets (exit code 3 on failure).
    #[arg(long)]
    check: bool,
    /// Write a single JSON document to stdout.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Families to measure (repeatable); all by default.
    #[arg(long = "family", value_name = "NAME")]
    families: Vec<Family>,
    /// Smallest size as a power of two.
    #[arg(long, default_value_t = 10)]
    min_exp: u32,
    /// Largest size as a power of two.
    #[arg(long, default_value_t = 16)]
    max_exp: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `runs` (full pipeline) or `lyndon` (tree construction only).
    #[arg(long, default_value = "runs")]
    workload: Workload,
    /// Verify the structural bounds on every measurement (exit code 3 on failure).
    #[arg(long)]
    check: bool,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Strict(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Crossing { .. } => Failure::Strict(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Strict(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violated: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Runs(common) => cmd_runs(&common, &mut out)?,
        Command::Lyndon { common, order } => {
            let order = Order::from_index(order).expect("clap restricts the range");
            cmd_lyndon(&common, order, &mut out)?
        }
        Command::Squares(common) => cmd_squares(&common, &mut out)?,
        Command::Lce {
            common,
            queries,
            generate,
            seed,
            trace,
        } => cmd_lce(&common, queries.as_deref(), generate, seed, trace, &mut out)?,
        Command::Bench(args) => cmd_bench(&args, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn open(path: &str) -> io::Result<Box<dyn Read>> {
    if path == "-" {
        Ok(Box::new(io::stdin().lock()))
    } else {
        File::open(path)
            .map(|f| Box::new(f) as Box<dyn Read>)
            .map_err(|e| io::Error::new(e.kind(), format!("{path}: {e}")))
    }
}

fn load(common: &Common) -> CliResult<Text> {
    let text = Text::load(open(&common.input)?, common.mode)?;
    if common.mode == InputMode::Bytes && !common.raw {
        let mut end = text.len();
        if text.get(end) == Some(u64::from(b'\n')) {
            end -= 1;
            if text.get(end) == Some(u64::from(b'\r')) {
                end -= 1;
            }
        }
        if end < text.len() {
            return Ok(Text::from_symbols(&text.symbols()[..end]));
        }
    }
    Ok(text)
}

fn options(common: &Common) -> Options {
    Options {
        strict: common.strict,
        audit: common.check,
        trace: false,
    }
}

/// Shared metadata of every single-document record.
fn metadata(
    command: &str,
    common: &Common,
    text: &Text,
    started: Instant,
    comparisons: Option<u64>,
) -> serde_json::Value {
    json!({
        "command": command,
        "n": text.len(),
        "mode": common.mode,
        "engine": if common.oracle { "oracle" } else { "noncrossing" },
        "strict": common.strict,
        "elapsed_ms": started.elapsed().as_secs_f64() * 1e3,
        "comparisons": comparisons,
    })
}

fn emit_json(
    out: &mut impl Write,
    mut meta: serde_json::Value,
    payload: serde_json::Value,
) -> CliResult {
    if let (Some(m), serde_json::Value::Object(p)) = (meta.as_object_mut(), payload) {
        m.extend(p);
    }
    serde_json::to_writer(&mut *out, &meta).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn emit_stats(record: &impl Serialize) -> CliResult {
    let line = serde_json::to_string(record).map_err(io::Error::from)?;
    eprintln!("{line}");
    Ok(())
}

fn check_stats<'a>(common: &Common, stats: impl IntoIterator<Item = &'a LceStats>) -> CliResult {
    if !common.check {
        return Ok(());
    }
    let failures: Vec<String> = stats
        .into_iter()
        .flat_map(LceStats::invariant_failures)
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Invariant(failures.join("; ")))
    }
}

fn check_audit(common: &Common, backend: &NcLce) -> CliResult {
    match backend.audit_report() {
        Some(report) if common.check && !report.is_clean() => Err(Failure::Invariant(format!(
            "level audit failed: {report:?}"
        ))),
        _ => Ok(()),
    }
}

fn cmd_runs(common: &Common, out: &mut impl Write) -> CliResult {
    let text = load(common)?;
    let started = Instant::now();
    let (runs, groups) = if common.oracle {
        (naive_runs(&text), Vec::new())
    } else {
        let outcome = compute_runs_with(&text, options(common))?;
        (outcome.runs, outcome.groups)
    };
    check_stats(common, groups.iter().map(|g| &g.stats))?;
    let comparisons =
        (!common.oracle).then(|| groups.iter().map(|g| g.stats.comparisons).sum::<u64>());
    if common.stats {
        emit_stats(
            &json!({ "n": text.len(), "runs": runs.len(), "comparisons": comparisons, "groups": groups }),
        )?;
    }
    if common.json {
        let meta = metadata("runs", common, &text, started, comparisons);
        return emit_json(out, meta, json!({ "count": runs.len(), "runs": runs }));
    }
    for r in &runs {
        writeln!(out, "{} {} {}", r.start, r.end, r.period)?;
    }
    Ok(())
}

fn cmd_lyndon(common: &Common, order: Order, out: &mut impl Write) -> CliResult {
    let text = load(common)?;
    let started = Instant::now();
    let (tree, stats) = if common.oracle {
        (naive_lyndon_tree(&text, order), None)
    } else {
        let (tree, stats) = lyndon_tree_checked(&text, order, options(common))?;
        (tree, Some(stats))
    };
    check_stats(common, stats.iter())?;
    if common.stats {
        emit_stats(&json!({ "n": text.len(), "order": order.index(), "stats": stats }))?;
    }
    let nodes = tree.tree_nodes();
    if common.json {
        let meta = metadata(
            "lyndon",
            common,
            &text,
            started,
            stats.as_ref().map(|s| s.comparisons),
        );
        let intervals: Vec<[usize; 2]> = nodes.iter().map(|i| [i.lo, i.hi]).collect();
        return emit_json(
            out,
            meta,
            json!({ "order": order.index(), "nodes": intervals }),
        );
    }
    for node in nodes {
        writeln!(out, "{} {}", node.lo, node.hi)?;
    }
    Ok(())
}

fn cmd_squares(common: &Common, out: &mut impl Write) -> CliResult {
    let text = load(common)?;
    let started = Instant::now();
    let (count, comparisons) = if common.oracle {
        (naive_square_count(&text), None)
    } else {
        let outcome = compute_runs_with(&text, options(common))?;
        check_stats(common, outcome.groups.iter().map(|g| &g.stats))?;
        if common.stats {
            emit_stats(
                &json!({ "n": text.len(), "runs": outcome.runs.len(), "groups": outcome.groups }),
            )?;
        }
        (
            squares_in_runs(&outcome.runs),
            Some(outcome.total_comparisons()),
        )
    };
    if common.json {
        let meta = metadata("squares", common, &text, started, comparisons);
        return emit_json(out, meta, json!({ "squares": count }));
    }
    writeln!(out, "{count}")?;
    Ok(())
}

fn cmd_lce(
    common: &Common,
    queries: Option<&str>,
    generate: Option<usize>,
    seed: u64,
    trace: bool,
    out: &mut impl Write,
) -> CliResult {
    let text = load(common)?;
    let queries = match (queries, generate) {
        (Some(path), _) => {
            let mut buf = String::new();
            open(path)?.read_to_string(&mut buf)?;
            parse_queries(&buf)?
        }
        (None, Some(q)) => gen_noncrossing_queries(text.len(), q, seed),
        (None, None) => {
            return Err(Failure::Usage(
                "lce needs --queries FILE or --generate Q".into(),
            ))
        }
    };
    let started = Instant::now();
    let mut answers = Vec::with_capacity(queries.len());
    let mut backend = NcLce::with_options(
        text.clone(),
        Options {
            trace,
            ..options(common)
        },
    );
    let mut detector = (common.oracle && common.strict).then(|| CrossingDetector::new(text.len()));
    for &(a, b) in &queries {
        let answer = if common.oracle {
            let answer = naive_lce(&text, a, b)?;
            if let Some(d) = detector.as_mut() {
                let current = (a.min(b), a.max(b));
                if let Some(earlier) = d.find_crossing(current.0, current.1) {
                    return Err(Error::Crossing { earlier, current }.into());
                }
                d.insert(current.0, current.1);
            }
            answer
        } else {
            backend.lce(a, b)?
        };
        if trace {
            for step in backend.last_trace() {
                emit_stats(step)?;
            }
        }
        answers.push(answer);
    }
    let stats = (!common.oracle).then(|| backend.stats());
    check_stats(common, stats.iter())?;
    check_audit(common, &backend)?;
    if common.stats {
        // the bound only constrains levels i >= 1
        let bounds: Vec<Option<f64>> = stats
            .as_ref()
            .map(|s| {
                (0..s.levels.len())
                    .map(|i| (i > 0).then(|| s.query_bound(i)))
                    .collect()
            })
            .unwrap_or_default();
        emit_stats(
            &json!({ "stats": stats, "level_bounds": bounds, "audit": backend.audit_report() }),
        )?;
    }
    if common.json {
        let meta = metadata(
            "lce",
            common,
            &text,
            started,
            stats.as_ref().map(|s| s.comparisons),
        );
        let pairs: Vec<[usize; 3]> = queries
            .iter()
            .zip(&answers)
            .map(|(&(a, b), &l)| [a, b, l])
            .collect();
        return emit_json(
            out,
            meta,
            json!({ "seed": seed, "answers": pairs, "stats": stats }),
        );
    }
    for answer in answers {
        writeln!(out, "{answer}")?;
    }
    Ok(())
}

fn cmd_bench(args: &BenchArgs, out: &mut impl Write) -> CliResult {
    if args.min_exp > args.max_exp || args.max_exp > 24 {
        return Err(Failure::Usage("need min-exp <= max-exp <= 24".into()));
    }
    let families = if args.families.is_empty() {
        Family::ALL.to_vec()
    } else {
        args.families.clone()
    };
    let mut table: Vec<(Family, Vec<ScalingRow>)> = Vec::new();
    for &family in &families {
        let rows = (args.min_exp..=args.max_exp)
            .map(|e| measure(family, 1 << e, args.seed, args.workload))
            .collect::<Result<Vec<_>, _>>()?;
        if args.check {
            let failures: Vec<String> = rows
                .iter()
                .flat_map(|r| r.stats.invariant_failures())
                .collect();
            if !failures.is_empty() {
                return Err(Failure::Invariant(failures.join("; ")));
            }
        }
        table.push((family, rows));
    }
    if args.json {
        let families: Vec<_> = table
            .iter()
            .map(|(f, rows)| json!({ "family": f, "band": ratio_band(rows), "rows": rows }))
            .collect();
        let doc = json!({ "command": "bench", "workload": args.workload, "seed": args.seed, "families": families });
        serde_json::to_writer(&mut *out, &doc).map_err(io::Error::from)?;
        writeln!(out)?;
        return Ok(());
    }
    writeln!(
        out,
        "{:<11} {:>8} {:>10} {:>12} {:>14} {:>8} {:>7}",
        "family", "n", "queries", "comparisons", "n*log2(n)", "ratio", "runs"
    )?;
    for (_, rows) in &table {
        for r in rows {
            let runs = r.runs.map_or_else(|| "-".to_string(), |k| k.to_string());
            writeln!(
                out,
                "{:<11} {:>8} {:>10} {:>12} {:>14.0} {:>8.4} {:>7}",
                r.family.to_string(),
                r.n,
                r.queries,
                r.comparisons,
                r.n_log2_n,
                r.ratio,
                runs
            )?;
        }
    }
    writeln!(out)?;
    for (family, rows) in &table {
        writeln!(
            out,
            "{:<11} band max/min = {:.3}",
            family.to_string(),
            ratio_band(rows)
        )?;
    }
    Ok(())
}
