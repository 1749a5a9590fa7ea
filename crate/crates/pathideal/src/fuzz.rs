//! Seeded cross-validation harness: classify random trees and check every
//! verdict against the exhaustive-search and homology oracles.

use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::classify::{classify_verified, ClassifyError, Disagreement, OracleCaps, Verdict};
use crate::graph::random_tree;
use crate::ideal::path_ideal;

/// Configuration of a fuzz run. All randomness flows from `seed` through
/// one ChaCha8 stream per instance (stream id packs the cell and index).
#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub vertices: RangeInclusive<usize>,
    pub n_values: RangeInclusive<usize>,
    /// Instances per (vertex count, n) cell.
    pub count: usize,
    pub seed: u64,
    pub caps: OracleCaps,
    /// Worker threads; 0 uses the process-wide default pool.
    pub threads: usize,
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.vertices.is_empty() || self.n_values.is_empty() {
            return Err("vertex and n ranges must be nonempty".into());
        }
        if *self.vertices.start() < 2 {
            return Err("trees need at least 2 vertices".into());
        }
        if *self.n_values.start() < 4 {
            return Err("the classifier needs n >= 4".into());
        }
        if self.count == 0 {
            return Err("count must be at least 1".into());
        }
        Ok(())
    }
}

/// Aggregated outcome of a fuzz run. `disagreements` must be empty for a
/// healthy build; each entry carries a full reproduction bundle.
#[derive(Clone, Debug)]
pub struct FuzzReport {
    pub instances: usize,
    pub linear_quotients: usize,
    pub not_linear_quotients: usize,
    pub zero_ideal: usize,
    /// Instances whose exhaustive-search check was skipped over the cap
    /// (still classified and tallied above, never silently dropped).
    pub skipped_cap: usize,
    pub disagreements: Vec<Disagreement>,
    pub wall_time_ms: u128,
}

impl FuzzReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let disagreements: Vec<serde_json::Value> = self
            .disagreements
            .iter()
            .map(|d| json!({ "edges": d.edges, "n": d.n, "detail": d.detail }))
            .collect();
        json!({
            "instances": self.instances,
            "verdicts": {
                "linear_quotients": self.linear_quotients,
                "not_linear_quotients": self.not_linear_quotients,
                "zero_ideal": self.zero_ideal,
            },
            "skipped_cap": self.skipped_cap,
            "disagreements": disagreements,
            "wall_time_ms": self.wall_time_ms,
        })
    }
}

#[derive(Clone, Copy, Debug)]
struct InstanceKey {
    vertices: usize,
    n: usize,
    index: usize,
}

struct InstanceOutcome {
    verdict: Option<Verdict>,
    skipped_cap: bool,
    disagreement: Option<Disagreement>,
}

fn instance_seed(master: u64, key: InstanceKey) -> u64 {
    let stream = (key.vertices as u64) << 48 | (key.n as u64) << 40 | key.index as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(stream);
    rng.next_u64()
}

fn run_instance(config: &FuzzConfig, key: InstanceKey) -> InstanceOutcome {
    let seed = instance_seed(config.seed, key);
    let tree = random_tree(key.vertices, seed);
    match classify_verified(&tree, key.n, &config.caps) {
        Ok(outcome) => InstanceOutcome {
            verdict: Some(outcome.classification.verdict),
            skipped_cap: !outcome.lq_oracle_ran,
            disagreement: None,
        },
        Err(ClassifyError::OracleDisagreement(mut d)) => {
            d.detail = format!("{} [instance seed {seed}]", d.detail);
            InstanceOutcome { verdict: None, skipped_cap: false, disagreement: Some(*d) }
        }
        Err(other) => InstanceOutcome {
            verdict: None,
            skipped_cap: false,
            disagreement: Some(Disagreement {
                edges: tree.to_edge_list_document(),
                n: key.n,
                detail: format!("classifier error: {other} [instance seed {seed}]"),
            }),
        },
    }
}

fn keys(config: &FuzzConfig) -> Vec<InstanceKey> {
    let mut keys = Vec::new();
    for vertices in config.vertices.clone() {
        for n in config.n_values.clone() {
            for index in 0..config.count {
                keys.push(InstanceKey { vertices, n, index });
            }
        }
    }
    keys
}

fn aggregate(outcomes: Vec<InstanceOutcome>, started: Instant) -> FuzzReport {
    let mut report = FuzzReport {
        instances: outcomes.len(),
        linear_quotients: 0,
        not_linear_quotients: 0,
        zero_ideal: 0,
        skipped_cap: 0,
        disagreements: Vec::new(),
        wall_time_ms: 0,
    };
    for o in outcomes {
        match o.verdict {
            Some(Verdict::LinearQuotients) => report.linear_quotients += 1,
            Some(Verdict::NotLinearQuotients) => report.not_linear_quotients += 1,
            Some(Verdict::ZeroIdeal) => report.zero_ideal += 1,
            None => {}
        }
        if o.skipped_cap {
            report.skipped_cap += 1;
        }
        if let Some(d) = o.disagreement {
            report.disagreements.push(d);
        }
    }
    report.wall_time_ms = started.elapsed().as_millis();
    report
}

/// Runs every instance sequentially on the calling thread.
pub fn run_sequential(config: &FuzzConfig) -> FuzzReport {
    let started = Instant::now();
    let outcomes = keys(config)
        .iter()
        .map(|&k| run_instance(config, k))
        .collect();
    aggregate(outcomes, started)
}

/// Runs instances on a rayon pool (`config.threads` workers, 0 = default).
#[cfg(feature = "parallel")]
pub fn run_parallel(config: &FuzzConfig) -> FuzzReport {
    use rayon::prelude::*;
    let started = Instant::now();
    let keys = keys(config);
    let work = || -> Vec<InstanceOutcome> {
        keys.par_iter().map(|&k| run_instance(config, k)).collect()
    };
    let outcomes = if config.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .expect("thread pool construction")
            .install(work)
    } else {
        work()
    };
    aggregate(outcomes, started)
}

/// Runs the harness: parallel when the `parallel` feature is enabled,
/// sequential otherwise.
pub fn run(config: &FuzzConfig) -> FuzzReport {
    #[cfg(feature = "parallel")]
    {
        run_parallel(config)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_sequential(config)
    }
}

/// Reproduces one instance's tree for debugging from a report bundle.
pub fn reproduce_instance(vertices: usize, n: usize, index: usize, master_seed: u64) -> (crate::graph::Tree, usize) {
    let key = InstanceKey { vertices, n, index };
    let seed = instance_seed(master_seed, key);
    let tree = random_tree(vertices, seed);
    let gens = path_ideal(&tree, n).num_generators();
    (tree, gens)
}
