//! Batch verification over many factor pairs.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::connectivity::BRUTE_FORCE_CAP;
use crate::enumerate::{connected_range, pair_list, Labeled};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::formula::{verify_formula_with, Oracle};
use crate::generate::random_connected;
use crate::graph::Graph;
use crate::structure::check_structure_theorem;

pub const CSV_HEADER: [&str; 8] = [
    "g_id",
    "h_id",
    "n_product",
    "formula",
    "oracle",
    "equal",
    "structure_ok",
    "low_type_exists",
];

/// Seeded random factor pairs, checked against the formula only.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomSuite {
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub edge_probability: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub min_factor_vertices: usize,
    pub max_factor_vertices: usize,
    pub oracle: Oracle,
    pub workers: usize,
    pub seed: u64,
    pub random: Option<RandomSuite>,
    pub csv_path: Option<PathBuf>,
    pub json_path: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            min_factor_vertices: 2,
            max_factor_vertices: 4,
            oracle: Oracle::BruteForce,
            workers: 1,
            seed: 0,
            random: None,
            csv_path: None,
            json_path: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::InvalidParameter("workers must be at least 1".into()));
        }
        let (lo, hi) = match &self.random {
            None => (self.min_factor_vertices, self.max_factor_vertices),
            Some(r) => (r.min_n, r.max_n),
        };
        if lo < 1 || lo > hi {
            return Err(Error::InvalidParameter(format!(
                "factor size range {lo}..={hi} is empty or starts below 1"
            )));
        }
        if self.random.is_none() && hi * hi > BRUTE_FORCE_CAP {
            return Err(Error::CapExceeded {
                what: "exhaustive sweep (product order for min-cut enumeration)",
                n: hi * hi,
                cap: BRUTE_FORCE_CAP,
            });
        }
        if let Some(r) = &self.random {
            if hi > 16 {
                return Err(Error::CapExceeded {
                    what: "random factor order",
                    n: hi,
                    cap: 16,
                });
            }
            if !(r.edge_probability > 0.0 && r.edge_probability <= 1.0) {
                return Err(Error::InvalidParameter("edge probability must be in (0, 1]".into()));
            }
            if self.oracle == Oracle::BruteForce && hi * hi > BRUTE_FORCE_CAP {
                return Err(Error::CapExceeded {
                    what: "brute-force oracle",
                    n: hi * hi,
                    cap: BRUTE_FORCE_CAP,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub g_id: String,
    pub h_id: String,
    pub n_product: usize,
    pub formula: usize,
    pub oracle: usize,
    pub equal: bool,
    /// `None` when the structure check was not run.
    pub structure_ok: Option<bool>,
    pub low_type_exists: Option<bool>,
}

impl SweepRow {
    pub fn passed(&self) -> bool {
        self.equal
            && self.structure_ok != Some(false)
            && !(self.formula > 0 && self.low_type_exists == Some(false))
    }

    pub fn record(&self) -> [String; 8] {
        let opt = |b: Option<bool>| b.map_or_else(|| "NA".to_string(), |b| b.to_string());
        [
            self.g_id.clone(),
            self.h_id.clone(),
            self.n_product.to_string(),
            self.formula.to_string(),
            self.oracle.to_string(),
            self.equal.to_string(),
            opt(self.structure_ok),
            opt(self.low_type_exists),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub pairs: usize,
    pub formula_mismatches: usize,
    pub structure_violations: usize,
    pub missing_low_type: usize,
    pub passed: bool,
}

pub fn summarize(rows: &[SweepRow]) -> SweepSummary {
    let formula_mismatches = rows.iter().filter(|r| !r.equal).count();
    let structure_violations = rows.iter().filter(|r| r.structure_ok == Some(false)).count();
    let missing_low_type = rows
        .iter()
        .filter(|r| r.formula > 0 && r.low_type_exists == Some(false))
        .count();
    SweepSummary {
        pairs: rows.len(),
        formula_mismatches,
        structure_violations,
        missing_low_type,
        passed: rows.iter().all(SweepRow::passed),
    }
}

fn labeled(graph: Graph) -> Labeled {
    let mask = pair_list(graph.vertex_count())
        .iter()
        .enumerate()
        .filter(|(_, e)| graph.has_edge(e.u, e.v))
        .fold(0u64, |m, (k, _)| m | 1 << k);
    Labeled { mask, graph }
}

/// The factor pairs a configuration covers, in row order.
pub fn instances(config: &SweepConfig) -> Result<Vec<(Labeled, Labeled)>> {
    config.validate()?;
    match &config.random {
        None => {
            let graphs = connected_range(config.min_factor_vertices, config.max_factor_vertices)?;
            Ok(graphs
                .iter()
                .flat_map(|g| graphs.iter().map(move |h| (g.clone(), h.clone())))
                .collect())
        }
        Some(r) => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let mut out = Vec::with_capacity(r.count);
            for _ in 0..r.count {
                let ng = rng.gen_range(r.min_n..=r.max_n);
                let nh = rng.gen_range(r.min_n..=r.max_n);
                let g = random_connected(ng, r.edge_probability, &mut rng)?;
                let h = random_connected(nh, r.edge_probability, &mut rng)?;
                out.push((labeled(g), labeled(h)));
            }
            Ok(out)
        }
    }
}

pub fn evaluate_pair(g: &Labeled, h: &Labeled, oracle: Oracle, structure: bool) -> Result<SweepRow> {
    let report = verify_formula_with(&g.graph, &h.graph, oracle)?;
    let (structure_ok, low_type_exists) = if structure {
        let s = check_structure_theorem(&g.graph, &h.graph)?;
        (Some(!s.violation), Some(s.low_type_exists))
    } else {
        (None, None)
    };
    Ok(SweepRow {
        g_id: g.id(),
        h_id: h.id(),
        n_product: g.graph.vertex_count() * h.graph.vertex_count(),
        formula: report.formula,
        oracle: report.oracle,
        equal: report.equal,
        structure_ok,
        low_type_exists,
    })
}

/// Evaluates every instance. Row order is the instance order regardless of `exec`.
pub fn run_sweep(config: &SweepConfig, exec: Exec) -> Result<Vec<SweepRow>> {
    let pairs = instances(config)?;
    let structure = config.random.is_none();
    let rows = exec.map_indexed(pairs.len(), |i| {
        let (g, h) = &pairs[i];
        evaluate_pair(g, h, config.oracle, structure)
    });
    rows.into_iter().collect()
}

pub fn write_csv<W: std::io::Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record(r.record())?;
    }
    w.flush()
}
