//! Command-line front end. Bulk output is JSON lines, canonically sorted, so
//! results do not depend on the worker count.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use crate::cells::{approx_cells, cross_validated_cells, rs_cells, rs_insert, CellPartition};
use crate::classify::{
    a5_ideal_check, exceptional_tableaux, interval_classification_check, is_cell_ideal_generating,
    is_maximal_tableau, verify_main_theorem_with, weak_interval, CellOracle, Method,
};
use crate::dot::weak_order_dot;
use crate::error::Error;
use crate::parabolic::{in_dj, longest_element, min_left_coset_reps};
use crate::perm::{GenSet, Permutation, RankCap, DEFAULT_RANK_CAP};
use crate::tableaux::{
    canonical_tableau, enumerate_std, is_squashed, squash, tau_col, tau_top, SkewShape, SkewTableau,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cellscope",
    version,
    about = "Left cells, skew tableaux and weak-order intervals in Sym(n)"
)]
pub struct Cli {
    /// Largest rank for whole-group computations.
    #[arg(long, global = true, env = "CELLSCOPE_RANK_CAP", default_value_t = DEFAULT_RANK_CAP)]
    pub rank_cap: usize,

    /// Worker threads for `verify` (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    pub output: Output,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Approx,
    Rs,
    Local,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Approx => Method::Approx,
            MethodArg::Rs => Method::Rs,
            MethodArg::Local => Method::Local,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the left cells of Sym(n), one JSON object per cell.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Approx)]
        method: MethodArg,
    },
    /// Enumerate standard tableaux of a shape, or print a canonical one.
    Tableaux {
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        which: WhichTableaux,
        /// Target offset m (entries m+1..m+n).
        #[arg(long, default_value_t = 0)]
        m: usize,
    },
    /// Squash a standard tableau read from a JSON file.
    Sqsh {
        #[arg(long)]
        shape: String,
        /// JSON array of [row, col, value] triples, or a tableau object.
        #[arg(long)]
        entries: PathBuf,
    },
    /// Classify a single pair (w, J).
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        j: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Approx)]
        method: MethodArg,
    },
    /// Exhaustively check the classification at rank n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Approx)]
        method: MethodArg,
    },
    /// The two exceptional non-cell-ideal-generating tableaux at rank n.
    Counterexamples {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Approx)]
        method: MethodArg,
    },
    /// The union of left cells in Sym(6) that forms a weak-order ideal.
    A5,
    /// D_J w_J as a DOT graph colored by left cell.
    Dot {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        j: String,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct WhichTableaux {
    /// All standard tableaux (default).
    #[arg(long)]
    pub std: bool,
    /// The row-filled maximal tableau.
    #[arg(long)]
    pub top: bool,
    /// The column-filled tableau.
    #[arg(long)]
    pub col: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = std::result::Result<i32, Failure>;

/// Runs one subcommand, writing results to `out` and diagnostics to `err`.
/// Output is buffered and written only once the command completes. Returns
/// the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut buf = Vec::new();
    let result = match cli.threads {
        0 => dispatch(cli, &mut buf),
        t => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cli, &mut buf)),
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
    };
    let result = result.and_then(|code| {
        out.write_all(&buf)?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let cap = RankCap(cli.rank_cap);
    if cli.output == Output::Dot && !matches!(cli.command, Command::Dot { .. }) {
        return Err(Failure::Usage(
            "--output dot is only supported by the dot subcommand".into(),
        ));
    }
    let text = cli.output == Output::Text;
    match &cli.command {
        Command::Cells { n, method } => cmd_cells(*n, *method, cap, text, out),
        Command::Tableaux { shape, which, m } => cmd_tableaux(shape, which, *m, text, out),
        Command::Sqsh { shape, entries } => cmd_sqsh(shape, entries, text, out),
        Command::Check { n, w, j, method } => cmd_check(*n, w, j, *method, cap, text, out),
        Command::Verify { n, method } => cmd_verify(*n, *method, cap, text, out),
        Command::Counterexamples { n, method } => cmd_counterexamples(*n, *method, cap, text, out),
        Command::A5 => cmd_a5(text, out),
        Command::Dot { n, j } => cmd_dot(*n, j, cap, out),
    }
}

fn parse_perm(n: usize, s: &str) -> std::result::Result<Permutation, Failure> {
    let w: Permutation = s.parse()?;
    if w.rank() != n {
        return Err(Failure::Usage(format!(
            "permutation {s:?} has rank {} but --n is {n}",
            w.rank()
        )));
    }
    Ok(w)
}

fn partition_for(
    n: usize,
    method: MethodArg,
    cap: RankCap,
) -> std::result::Result<CellPartition, Failure> {
    Ok(match method {
        MethodArg::Approx => cross_validated_cells(n, cap)?,
        MethodArg::Rs => rs_cells(n, cap)?,
        MethodArg::Local => {
            return Err(Failure::Usage(
                "the local method does not build a cell partition".into(),
            ))
        }
    })
}

fn cmd_cells(
    n: usize,
    method: MethodArg,
    cap: RankCap,
    text: bool,
    out: &mut dyn Write,
) -> CliResult {
    let cp = match method {
        MethodArg::Approx => approx_cells(n, cap)?,
        other => partition_for(n, other, cap)?,
    };
    for (id, cell) in cp.cells().iter().enumerate() {
        let first = cell.iter().next().expect("cells are nonempty");
        let q = rs_insert(first).q;
        let members: Vec<String> = cell.iter().map(|w| w.to_string()).collect();
        if text {
            writeln!(
                out,
                "cell {id} (size {}): {}",
                cell.len(),
                members.join(" ")
            )?;
        } else {
            let line = json!({
                "cell_id": id,
                "size": cell.len(),
                "q_symbol": q,
                "members": members,
            });
            writeln!(out, "{line}")?;
        }
    }
    Ok(EXIT_OK)
}

fn write_tableau(t: &SkewTableau, text: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if text {
        writeln!(out, "{t:?}")
    } else {
        writeln!(
            out,
            "{}",
            serde_json::to_string(t).expect("tableaux serialize")
        )
    }
}

fn cmd_tableaux(
    shape: &str,
    which: &WhichTableaux,
    m: usize,
    text: bool,
    out: &mut dyn Write,
) -> CliResult {
    let shape: SkewShape = shape.parse()?;
    if which.top {
        write_tableau(&tau_top(&shape, m), text, out)?;
    } else if which.col {
        write_tableau(&tau_col(&shape, m), text, out)?;
    } else {
        for t in enumerate_std(&shape, m)? {
            write_tableau(&t, text, out)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum EntriesFile {
    Triples(Vec<[usize; 3]>),
    Object {
        #[serde(default)]
        m: usize,
        entries: Vec<[usize; 3]>,
    },
}

fn cmd_sqsh(shape: &str, path: &PathBuf, text: bool, out: &mut dyn Write) -> CliResult {
    let shape: SkewShape = shape.parse()?;
    let raw = std::fs::read_to_string(path)?;
    let (m, triples) = match serde_json::from_str::<EntriesFile>(&raw)? {
        EntriesFile::Triples(t) => (0, t),
        EntriesFile::Object { m, entries } => (m, entries),
    };
    let entries: Vec<_> = triples.iter().map(|e| (e[0], e[1], e[2])).collect();
    let t = SkewTableau::from_entries(shape, m, &entries)?;
    write_tableau(&squash(&t)?, text, out)?;
    Ok(EXIT_OK)
}

fn cmd_check(
    n: usize,
    w: &str,
    j: &str,
    method: MethodArg,
    cap: RankCap,
    text: bool,
    out: &mut dyn Write,
) -> CliResult {
    cap.check(n)?;
    let w = parse_perm(n, w)?;
    let j = GenSet::parse(n, j)?;
    let oracle = CellOracle::build(n, method.into(), cap)?;
    let interval = weak_interval(&w, &j)?;
    let union = oracle.test().is_union(&interval)?;
    let qualifying = !interval.is_empty() && union;
    let shape = if qualifying {
        Some(canonical_tableau(&j, &w)?.shape().to_string())
    } else {
        None
    };
    if text {
        writeln!(
            out,
            "w={w} J={{{j}}} interval_size={} union_of_cells={union} qualifying={qualifying} shape={}",
            interval.len(),
            shape.as_deref().unwrap_or("-")
        )?;
    } else {
        let line = json!({
            "w": w.to_string(),
            "j": j.to_string(),
            "in_dj": in_dj(&w, &j),
            "interval": interval.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "interval_size": interval.len(),
            "union_of_cells": union,
            "qualifying": qualifying,
            "shape": shape,
        });
        writeln!(out, "{line}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    n: usize,
    method: MethodArg,
    cap: RankCap,
    text: bool,
    out: &mut dyn Write,
) -> CliResult {
    let oracle = CellOracle::build(n, method.into(), cap)?;
    let main = verify_main_theorem_with(n, oracle.test(), cap)?;
    let intervals = interval_classification_check(n, oracle.test(), cap)?;
    let holds = main.holds() && intervals.holds();
    if text {
        writeln!(
            out,
            "n={n} pairs={} mismatches={} qualifying={} basic_shapes={} interval_pairs={} interval_qualifying={} unexpected={} missing={} bijection_failures={} => {}",
            main.records.len(),
            main.mismatches.len(),
            main.qualifying_count,
            main.basic_shape_count,
            intervals.pairs_checked,
            intervals.qualifying.len(),
            intervals.unexpected.len(),
            intervals.missing.len(),
            intervals.bijection_failures.len(),
            if holds { "HOLDS" } else { "FAILS" }
        )?;
    } else {
        let line = json!({
            "n": n,
            "method": Method::from(method),
            "holds": holds,
            "main_theorem": main,
            "interval_classification": intervals,
        });
        writeln!(out, "{line}")?;
    }
    Ok(if holds { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_counterexamples(
    n: usize,
    method: MethodArg,
    cap: RankCap,
    text: bool,
    out: &mut dyn Write,
) -> CliResult {
    let (t, u) = exceptional_tableaux(n)?;
    let oracle = CellOracle::build(n, method.into(), cap)?;
    let mut all_fail = true;
    for (name, tab) in [("t", &t), ("u", &u)] {
        let cig = is_cell_ideal_generating(tab, oracle.test())?;
        all_fail &= !cig;
        let squashed = is_squashed(tab)?;
        let maximal = is_maximal_tableau(tab)?;
        if text {
            writeln!(
                out,
                "{name}: {tab:?} squashed={squashed} maximal={maximal} cell_ideal_generating={cig}"
            )?;
        } else {
            let line = json!({
                "name": name,
                "n": n,
                "tableau": tab,
                "squashed": squashed,
                "maximal": maximal,
                "cell_ideal_generating": cig,
            });
            writeln!(out, "{line}")?;
        }
    }
    Ok(if all_fail { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_a5(text: bool, out: &mut dyn Write) -> CliResult {
    let report = a5_ideal_check()?;
    if text {
        writeln!(
            out,
            "listed={} distinct={} union_size={} is_weak_ideal={} is_union_of_left_cells={} w_graph_ideal={}",
            report.listed,
            report.distinct.len(),
            report.union_size,
            report.is_weak_ideal,
            report.is_union_of_left_cells,
            report.w_graph_ideal
        )?;
        for t in &report.one_tableau_extensions {
            writeln!(out, "extension making an ideal: {t:?}")?;
        }
    } else {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    }
    Ok(if report.holds() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn cmd_dot(n: usize, j: &str, cap: RankCap, out: &mut dyn Write) -> CliResult {
    let j = GenSet::parse(n, j)?;
    let cp = rs_cells(n, cap)?;
    let wj = longest_element(&j, n)?;
    let set = min_left_coset_reps(&j, n, cap)?.right_translate(&wj)?;
    out.write_all(weak_order_dot(&format!("D_J w_J, n={n}, J={{{j}}}"), &set, &cp).as_bytes())?;
    Ok(EXIT_OK)
}
