//! Command-line front end: enumerate objects, map them through bijections,
//! evaluate counting formulas, tabulate joint counts and run verification
//! suites.
//!
//! Exit status is 0 on success, 1 when data or a check fails, and 2 on a
//! usage error.

use std::collections::BTreeMap;
use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use plane_trees::bijections::Bijection;
use plane_trees::counting::{
    catalan, count_old, count_old_young, count_young, motzkin, narayana, old_young_table,
};
use plane_trees::identities::Variant;
use plane_trees::objects::{enumerate, for_each_tree, ObjectKind};
use plane_trees::statistics::{
    drops, factor_count, peaks_at_even_height, perm_stats, tree_stats, triple_falls, PermStats, TreeStats,
};
use plane_trees::verify::{run_suite, Suite};
use plane_trees::{Error, LatticePath, PathKind, Permutation, PlaneTree};

const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "plane-trees",
    version,
    about = "Plane trees counted by old and young leaves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every object of a kind and size, one per line.
    Enumerate {
        #[arg(long, value_parser = parse_kind)]
        object: ObjectKind,
        /// Edges for trees, semilength for Dyck paths, length for Motzkin
        /// paths, size for permutations.
        #[arg(long)]
        n: usize,
        /// Keep only trees with this many old leaves.
        #[arg(long)]
        old: Option<usize>,
        /// Keep only trees with this many young leaves.
        #[arg(long)]
        young: Option<usize>,
        #[arg(long, value_enum, default_value_t = LineFormat::Compact)]
        format: LineFormat,
        #[arg(long, default_value_t = 15)]
        max_n: usize,
    },
    /// Apply a bijection to each line of standard input.
    Map {
        #[arg(long, value_parser = parse_bijection)]
        bijection: Bijection,
        #[arg(long)]
        inverse: bool,
    },
    /// Evaluate a counting formula.
    Count {
        #[arg(long, value_enum)]
        formula: Formula,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        i: Option<u64>,
        #[arg(long)]
        j: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Tabulate trees by old and young leaves against the closed form.
    Table {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long, default_value_t = 13)]
        max_n: u64,
    },
    /// Print statistics for each object on standard input, as JSON lines.
    Stats {
        #[arg(long, value_enum, default_value_t = StatsObject::Tree)]
        object: StatsObject,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_parser = parse_variant, default_value = "corrected")]
        variant: Variant,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LineFormat {
    Compact,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsObject {
    Tree,
    Dyck,
    Perm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    Catalan,
    Motzkin,
    Narayana,
    OldYoung,
    Old,
    Young,
}

fn parse_kind(s: &str) -> Result<ObjectKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_bijection(s: &str) -> Result<Bijection, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

fn data(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        data(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Enumerate {
            object,
            n,
            old,
            young,
            format,
            max_n,
        } => cmd_enumerate(&mut out, object, n, old, young, format, max_n),
        Command::Map { bijection, inverse } => cmd_map(&mut out, bijection, inverse),
        Command::Count { formula, n, i, j, k } => cmd_count(&mut out, formula, n, i, j, k),
        Command::Table { n, format, max_n } => cmd_table(&mut out, n, format, max_n),
        Command::Stats { object } => cmd_stats(&mut out, object),
        Command::Verify {
            suite,
            n_max,
            variant,
        } => cmd_verify(&mut out, suite, n_max, variant),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        (Err(f), _) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

#[derive(Serialize)]
struct EnumeratedTree<'a> {
    index: usize,
    encoding: &'a str,
    edges: usize,
    old_leaves: usize,
    young_leaves: usize,
}

#[derive(Serialize)]
struct EnumeratedObject<'a> {
    index: usize,
    encoding: &'a str,
}

fn cmd_enumerate(
    out: &mut impl Write,
    kind: ObjectKind,
    n: usize,
    old: Option<usize>,
    young: Option<usize>,
    format: LineFormat,
    max_n: usize,
) -> Result<(), Failure> {
    if n > max_n {
        return Err(usage(format!("--n {n} exceeds --max-n {max_n}")));
    }
    if kind != ObjectKind::Tree {
        if old.is_some() || young.is_some() {
            return Err(usage("--old and --young only apply to --object tree"));
        }
        for (index, obj) in enumerate(kind, n).enumerate() {
            let encoding = obj.render();
            match format {
                LineFormat::Compact => writeln!(out, "{encoding}")?,
                LineFormat::Json => writeln!(
                    out,
                    "{}",
                    json(&EnumeratedObject {
                        index,
                        encoding: &encoding
                    })
                )?,
            }
        }
        return Ok(());
    }
    let mut index = 0;
    let mut status = Ok(());
    for_each_tree(n, |t| {
        if status.is_err() {
            return;
        }
        let s = tree_stats(&t);
        if old.is_some_and(|v| v != s.old_leaves) || young.is_some_and(|v| v != s.young_leaves) {
            return;
        }
        let encoding = t.render();
        status = match format {
            LineFormat::Compact => writeln!(out, "{encoding}"),
            LineFormat::Json => writeln!(
                out,
                "{}",
                json(&EnumeratedTree {
                    index,
                    encoding: &encoding,
                    edges: s.edges,
                    old_leaves: s.old_leaves,
                    young_leaves: s.young_leaves,
                })
            ),
        };
        index += 1;
    });
    Ok(status?)
}

fn json(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn cmd_map(out: &mut impl Write, bijection: Bijection, inverse: bool) -> Result<(), Failure> {
    let mut failed = 0usize;
    for (k, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        match bijection.apply_text(&line, inverse) {
            Ok(image) => writeln!(out, "{image}")?,
            Err(e) => {
                failed += 1;
                eprintln!("line {}: {e}", k + 1);
            }
        }
    }
    if failed > 0 {
        return Err(data(format!("{failed} line(s) could not be mapped")));
    }
    Ok(())
}

fn cmd_count(
    out: &mut impl Write,
    formula: Formula,
    n: u64,
    i: Option<u64>,
    j: Option<u64>,
    k: Option<u64>,
) -> Result<(), Failure> {
    let need = |v: Option<u64>, flag: &str| v.ok_or_else(|| usage(format!("this formula needs --{flag}")));
    let value: Result<BigInt, Error> = match formula {
        Formula::Catalan => Ok(catalan(n)),
        Formula::Motzkin => Ok(motzkin(n)),
        Formula::Narayana => narayana(n, need(k, "k")?),
        Formula::OldYoung => count_old_young(n, need(i, "i")?, need(j, "j")?),
        Formula::Old => count_old(n, need(k, "k")?),
        Formula::Young => count_young(n, need(k, "k")?),
    };
    let value = value.map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{value}")?;
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    old: u64,
    young: u64,
    enumerated: u64,
    formula: String,
}

#[derive(Serialize)]
struct Table {
    n: u64,
    agree: bool,
    rows: Vec<TableRow>,
}

fn cmd_table(out: &mut impl Write, n: u64, format: TableFormat, max_n: u64) -> Result<(), Failure> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if n > max_n {
        return Err(usage(format!("--n {n} exceeds --max-n {max_n}")));
    }
    let mut hist = BTreeMap::<(u64, u64), u64>::new();
    for_each_tree(n as usize, |t| {
        let s = tree_stats(&t);
        *hist
            .entry((s.old_leaves as u64, s.young_leaves as u64))
            .or_default() += 1;
    });
    let closed: BTreeMap<(u64, u64), BigInt> = old_young_table(n)
        .map_err(|e| data(e.to_string()))?
        .into_iter()
        .collect();
    let mut keys: Vec<(u64, u64)> = hist.keys().chain(closed.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let rows: Vec<TableRow> = keys
        .into_iter()
        .map(|(i, j)| TableRow {
            old: i,
            young: j,
            enumerated: hist.get(&(i, j)).copied().unwrap_or(0),
            formula: closed.get(&(i, j)).cloned().unwrap_or_default().to_string(),
        })
        .collect();
    let agree = rows.iter().all(|r| r.enumerated.to_string() == r.formula);
    match format {
        TableFormat::Csv => {
            writeln!(out, "old,young,enumerated,formula")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.old, r.young, r.enumerated, r.formula)?;
            }
        }
        TableFormat::Json => {
            let table = Table { n, agree, rows };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&table).expect("plain data serializes")
            )?;
        }
    }
    if agree {
        Ok(())
    } else {
        Err(data("enumeration and closed form disagree"))
    }
}

#[derive(Serialize)]
struct DyckStats {
    semilength: usize,
    peaks_at_even_height: usize,
    dud: usize,
    udu: usize,
    drops: usize,
    triple_falls: usize,
}

#[derive(Serialize)]
#[serde(untagged)]
enum AnyStats {
    Tree(TreeStats),
    Dyck(DyckStats),
    Perm(PermStats),
}

fn stats_of(line: &str, object: StatsObject) -> Result<AnyStats, Error> {
    Ok(match object {
        StatsObject::Tree => AnyStats::Tree(tree_stats(&PlaneTree::parse(line)?)),
        StatsObject::Perm => AnyStats::Perm(perm_stats(&Permutation::parse(line)?)),
        StatsObject::Dyck => {
            let p = LatticePath::parse(line, PathKind::Dyck)?;
            AnyStats::Dyck(DyckStats {
                semilength: p.len() / 2,
                peaks_at_even_height: peaks_at_even_height(&p)?,
                dud: factor_count(&p, "DUD"),
                udu: factor_count(&p, "UDU"),
                drops: drops(&p)?,
                triple_falls: triple_falls(&p)?,
            })
        }
    })
}

fn cmd_stats(out: &mut impl Write, object: StatsObject) -> Result<(), Failure> {
    let mut failed = 0usize;
    for (k, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        match stats_of(&line, object) {
            Ok(s) => writeln!(out, "{}", json(&s))?,
            Err(e) => {
                failed += 1;
                eprintln!("line {}: {e}", k + 1);
            }
        }
    }
    if failed > 0 {
        return Err(data(format!("{failed} line(s) could not be read")));
    }
    Ok(())
}

fn cmd_verify(out: &mut impl Write, suite: Suite, n_max: u64, variant: Variant) -> Result<(), Failure> {
    let report = run_suite(suite, n_max, variant).map_err(|e| usage(e.to_string()))?;
    out.write_all(report.render().as_bytes())?;
    eprintln!("wall time {:.3}s", report.elapsed.as_secs_f64());
    if report.passed() {
        Ok(())
    } else {
        Err(data(String::new()))
    }
}
