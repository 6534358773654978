//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails (formula differs
//! from the oracle, or the structure check finds a violation), 2 on usage
//! or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::connectivity::{brute_force_min_cut, edge_connectivity, CutResult};
use crate::edgelist;
use crate::exec::Exec;
use crate::formula::{lambda_product_formula, verify_formula_with, Oracle};
use crate::frustration::{frustration, max_cut_exact, psi, rho};
use crate::generate::{self, Family};
use crate::graph::{Graph, VertexSet};
use crate::product::direct_product;
use crate::structure::{check_structure_theorem, classify_black_side, CutTypeSet};
use crate::sweep::{self, RandomSuite, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "prodcut", version, about = "Edge connectivity of direct products of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write G × H as an edge list.
    Product(Pair),
    /// Edge connectivity of G, or of G × H when --h is given.
    Lambda {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: Option<PathBuf>,
        /// Use the exhaustive bipartition scan instead of Stoer–Wagner.
        #[arg(long)]
        oracle: bool,
    },
    /// Bipartite edge frustration and maximum cut of G.
    Frustration(Single),
    /// The partition functional rho(G) with its witnesses.
    Rho(Single),
    /// psi(G, H) = rho(G)|E(H)| + 2 phi(H)|E(G)|.
    Psi(Pair),
    /// All five terms of the closed form and a witness cut.
    Formula(Pair),
    /// Structural types of a given cut, or of every minimum cut of G × H.
    Classify {
        #[command(flatten)]
        pair: Pair,
        /// Black side as comma-separated product vertex ids (g * |V(H)| + h).
        #[arg(long)]
        black: Option<String>,
    },
    /// Compare the closed form with an oracle for every (G, H) combination.
    Verify {
        #[arg(long, required = true, num_args = 1..)]
        g: Vec<PathBuf>,
        #[arg(long, required = true, num_args = 1..)]
        h: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = OracleArg::Auto)]
        oracle: OracleArg,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exhaustive (or seeded random) sweep over factor pairs, emitting CSV.
    Sweep(SweepArgs),
    /// Generate a graph from a named family.
    Gen {
        #[command(subcommand)]
        family: FamilyArg,
    },
}

#[derive(Debug, Args)]
struct Single {
    #[arg(long)]
    g: PathBuf,
}

#[derive(Debug, Args)]
struct Pair {
    #[arg(long)]
    g: PathBuf,
    #[arg(long)]
    h: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleArg {
    Auto,
    Bipartitions,
    Mincut,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 2)]
    min_n: usize,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = OracleArg::Bipartitions)]
    oracle: OracleArg,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Sample this many random connected pairs instead of enumerating.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    edge_probability: f64,
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write a JSON summary here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum FamilyArg {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Hypercube { d: u32 },
    Petersen,
    Random {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    edgelist::parse(&text).with_context(|| format!("malformed edge list {}", path.display()))
}

fn file_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn oracle_for(arg: OracleArg, product_order: usize) -> Oracle {
    match arg {
        OracleArg::Auto => Oracle::auto(product_order),
        OracleArg::Bipartitions => Oracle::BruteForce,
        OracleArg::Mincut => Oracle::MinCutAlgorithm,
    }
}

fn cut_json(res: &CutResult) -> serde_json::Value {
    match &res.witness {
        Some(w) => json!({
            "lambda": res.lambda,
            "black": w.black,
            "white": w.white,
            "cut_edges": w.edges,
        }),
        None => json!({
            "lambda": res.lambda,
            "black": null,
            "white": null,
            "cut_edges": [],
        }),
    }
}

fn types_json(black: &VertexSet, cut_size: usize, t: &CutTypeSet) -> serde_json::Value {
    json!({
        "black": black,
        "cut_size": cut_size,
        "matched": t.matched,
        "canonical": t.canonical,
        "witnesses": t.witnesses,
    })
}

fn parse_black(list: &str, n: usize) -> anyhow::Result<VertexSet> {
    let mut ids = Vec::new();
    for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        ids.push(
            tok.parse::<usize>()
                .with_context(|| format!("`{tok}` is not a vertex id"))?,
        );
    }
    Ok(VertexSet::from_vertices(n, ids)?)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Product(pair) => {
            let (g, h) = (read_graph(&pair.g)?, read_graph(&pair.h)?);
            let p = direct_product(&g, &h)?;
            let (n_g, n_h) = p.factor_orders();
            let comment = format!(
                "direct product: nG={n_g} nH={n_h} encoding: (g,h) -> g*{n_h}+h"
            );
            write!(out, "{}", edgelist::write_with_comments(p.graph(), &[comment]))?;
        }
        Command::Lambda { g, h, oracle } => {
            let g = read_graph(&g)?;
            let target = match h {
                Some(h) => direct_product(&g, &read_graph(&h)?)?.into_graph(),
                None => g,
            };
            let res = if oracle {
                brute_force_min_cut(&target)?
            } else {
                edge_connectivity(&target)?
            };
            emit_json(out, &cut_json(&res))?;
        }
        Command::Frustration(single) => {
            let g = read_graph(&single.g)?;
            let f = frustration(&g)?;
            let mc = max_cut_exact(&g)?;
            emit_json(
                out,
                &json!({
                    "phi": f.phi,
                    "max_cut": mc.value,
                    "coloring": [f.witness_coloring.0, f.witness_coloring.1],
                    "frustrated_edges": f.frustrated_edges,
                }),
            )?;
        }
        Command::Rho(single) => {
            let r = rho(&read_graph(&single.g)?)?;
            emit_json(
                out,
                &json!({
                    "rho": r.rho,
                    "a": r.witness_a,
                    "b": r.witness_b,
                    "a1": r.witness_a1,
                    "a2": r.witness_a2,
                }),
            )?;
        }
        Command::Psi(pair) => {
            let p = psi(&read_graph(&pair.g)?, &read_graph(&pair.h)?)?;
            emit_json(out, &p)?;
        }
        Command::Formula(pair) => {
            let f = lambda_product_formula(&read_graph(&pair.g)?, &read_graph(&pair.h)?)?;
            let witness = f.witness.as_ref().map(|w| {
                json!({
                    "black": w.black,
                    "cut_edges": w.edges,
                })
            });
            let achieving: Vec<&str> = f.achieving_terms.iter().map(|t| t.label()).collect();
            emit_json(
                out,
                &json!({
                    "terms": {
                        "type1": f.term_type1,
                        "type2": f.term_type2,
                        "delta": f.term_delta,
                        "psi_gh": f.term_psi_gh,
                        "psi_hg": f.term_psi_hg,
                    },
                    "lambda": f.lambda,
                    "achieving": achieving,
                    "witness": witness,
                }),
            )?;
        }
        Command::Classify { pair, black } => {
            let (g, h) = (read_graph(&pair.g)?, read_graph(&pair.h)?);
            match black {
                Some(list) => {
                    let p = direct_product(&g, &h)?;
                    let black = parse_black(&list, p.graph().vertex_count())?;
                    let t = classify_black_side(&g, &h, &black)?;
                    let size = p.graph().boundary_size(&black);
                    emit_json(out, &types_json(&black, size, &t))?;
                }
                None => {
                    let r = check_structure_theorem(&g, &h)?;
                    let cuts: Vec<_> = r
                        .cuts
                        .iter()
                        .map(|c| types_json(&c.cut.black, c.cut.size(), &c.types))
                        .collect();
                    emit_json(
                        out,
                        &json!({
                            "lambda": r.lambda,
                            "exempt": r.exempt,
                            "violation": r.violation,
                            "low_type_exists": r.low_type_exists,
                            "unstructured": r.unstructured,
                            "cuts": cuts,
                        }),
                    )?;
                    if r.violation {
                        return Ok(EXIT_VERIFICATION_FAILED);
                    }
                }
            }
        }
        Command::Verify { g, h, oracle, csv } => {
            let gs = g
                .iter()
                .map(|p| Ok((file_id(p), read_graph(p)?)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let hs = h
                .iter()
                .map(|p| Ok((file_id(p), read_graph(p)?)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let mut rows = Vec::new();
            let mut all_equal = true;
            for (gid, gg) in &gs {
                for (hid, hh) in &hs {
                    let kind = oracle_for(oracle, gg.vertex_count() * hh.vertex_count());
                    let r = verify_formula_with(gg, hh, kind)?;
                    all_equal &= r.equal;
                    writeln!(
                        err,
                        "{} {gid} x {hid}: formula={} oracle={}",
                        if r.equal { "PASS" } else { "FAIL" },
                        r.formula,
                        r.oracle
                    )?;
                    rows.push([
                        gid.clone(),
                        hid.clone(),
                        r.formula.to_string(),
                        r.oracle.to_string(),
                        r.equal.to_string(),
                    ]);
                }
            }
            let sink: Box<dyn Write + '_> = match &csv {
                Some(path) => Box::new(
                    fs::File::create(path)
                        .with_context(|| format!("cannot create {}", path.display()))?,
                ),
                None => Box::new(&mut *out),
            };
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(["g_id", "h_id", "formula", "oracle", "equal"])?;
            for r in rows {
                w.write_record(r)?;
            }
            w.flush()?;
            if !all_equal {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
        }
        Command::Sweep(args) => return run_sweep_command(args, out, err),
        Command::Gen { family } => {
            let fam = match family {
                FamilyArg::Path { n } => Family::Path(n),
                FamilyArg::Cycle { n } => Family::Cycle(n),
                FamilyArg::Complete { n } => Family::Complete(n),
                FamilyArg::CompleteBipartite { a, b } => Family::CompleteBipartite(a, b),
                FamilyArg::Hypercube { d } => Family::Hypercube(d),
                FamilyArg::Petersen => Family::Petersen,
                FamilyArg::Random { n, p, seed } => Family::Random { n, p, seed },
            };
            write!(out, "{}", edgelist::write(&generate::generate(&fam)?))?;
        }
    }
    Ok(EXIT_OK)
}

fn run_sweep_command(args: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let random = args.random.map(|count| RandomSuite {
        count,
        min_n: args.min_n,
        max_n: args.max_n,
        edge_probability: args.edge_probability,
    });
    let oracle = match args.oracle {
        OracleArg::Auto => Oracle::auto(args.max_n * args.max_n),
        OracleArg::Bipartitions => Oracle::BruteForce,
        OracleArg::Mincut => Oracle::MinCutAlgorithm,
    };
    let config = SweepConfig {
        min_factor_vertices: args.min_n,
        max_factor_vertices: args.max_n,
        oracle,
        workers: args.workers,
        seed: args.seed,
        random,
        csv_path: args.csv,
        json_path: args.json,
    };
    config.validate()?;
    let rows = run_in_pool(&config)?;

    match &config.csv_path {
        Some(path) => sweep::write_csv(
            &rows,
            fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )?,
        None => sweep::write_csv(&rows, &mut *out)?,
    }
    let summary = sweep::summarize(&rows);
    if let Some(path) = &config.json_path {
        fs::write(path, serde_json::to_string_pretty(&summary)? + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    writeln!(
        err,
        "{} pairs, {} formula mismatches, {} structure violations, {} without a type 1-6 minimum cut",
        summary.pairs, summary.formula_mismatches, summary.structure_violations, summary.missing_low_type
    )?;
    Ok(if summary.passed {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    })
}

#[cfg(feature = "parallel")]
fn run_in_pool(config: &SweepConfig) -> anyhow::Result<Vec<sweep::SweepRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()?;
    Ok(pool.install(|| sweep::run_sweep(config, Exec::Parallel))?)
}

#[cfg(not(feature = "parallel"))]
fn run_in_pool(config: &SweepConfig) -> anyhow::Result<Vec<sweep::SweepRow>> {
    Ok(sweep::run_sweep(config, Exec::Sequential)?)
}
