//! Seeded experiment harness.
//!
//! Trial `i` draws from `split(master_seed, [i])`; strategy `s` inside trial
//! `i` draws from `split(master_seed, [i, s])`. Trials run in parallel and
//! are collected by index, so every output is independent of scheduling.

pub mod stats;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criticality::{articulation_points, CriticalityMap};
use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;
use crate::graph::{Graph, NodeId};
use crate::rng::{self, split, SimRng};
use crate::strategies::{apply_sequence, plan, DeltaOptions, RemovalParams, StrategySpec};

use self::stats::{format_sig, mean, round_sig, std_dev, Ecdf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    /// Remove random nodes without repair until the graph splits.
    Depletion,
    /// One random departure per trial, handled by every strategy.
    CostComparison,
    /// Remove random nodes with repair until one node is left.
    FullDepletionWithRepair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RemovalPolicy {
    #[default]
    UniformRandomLiveNode,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub generator: GeneratorSpec,
    pub trials: usize,
    pub master_seed: u64,
    #[serde(default)]
    pub strategies: Vec<StrategySpec>,
    #[serde(default)]
    pub removal_policy: RemovalPolicy,
    #[serde(default)]
    pub delta_options: DeltaOptions,
}

impl ExperimentConfig {
    pub fn depletion(generator: GeneratorSpec, trials: usize, master_seed: u64) -> Self {
        ExperimentConfig {
            experiment: ExperimentKind::Depletion,
            generator,
            trials,
            master_seed,
            strategies: Vec::new(),
            removal_policy: RemovalPolicy::default(),
            delta_options: DeltaOptions::default(),
        }
    }

    pub fn cost_comparison(
        generator: GeneratorSpec,
        trials: usize,
        master_seed: u64,
        strategies: Vec<StrategySpec>,
    ) -> Self {
        ExperimentConfig {
            experiment: ExperimentKind::CostComparison,
            strategies,
            ..Self::depletion(generator, trials, master_seed)
        }
    }

    pub fn full_depletion(
        generator: GeneratorSpec,
        trials: usize,
        master_seed: u64,
        strategies: Vec<StrategySpec>,
    ) -> Self {
        ExperimentConfig {
            experiment: ExperimentKind::FullDepletionWithRepair,
            strategies,
            ..Self::depletion(generator, trials, master_seed)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        if self.experiment != ExperimentKind::Depletion && self.strategies.is_empty() {
            return Err(Error::InvalidConfig(
                "at least one strategy is required".into(),
            ));
        }
        for s in &self.strategies {
            if let Some(0) = s.delta() {
                return Err(Error::InvalidDelta(0));
            }
        }
        self.generator.validate()
    }
}

/// Pre-removal shape of a trial's graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphStats {
    pub diameter: usize,
    pub mean_degree: f64,
}

impl GraphStats {
    pub fn of(g: &Graph) -> Result<Self> {
        Ok(GraphStats {
            diameter: g.diameter()?,
            mean_degree: g.degree_stats()?.mean_degree,
        })
    }
}

/// Cost of one strategy within a trial. For full depletion this is the total
/// over every departure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrategyCost {
    pub strategy: StrategySpec,
    pub cost: u64,
    /// Departures handled; 1 for a cost comparison.
    pub removals: u64,
    /// Departures after which the graph was disconnected.
    pub violations: u64,
    /// Sequences that ended on a critical node.
    pub critical_terminals: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialResult {
    pub trial_index: usize,
    /// Removal count at the first disconnection.
    pub i_dis: Option<u64>,
    /// Depletion finished without ever disconnecting.
    pub censored: bool,
    pub costs: Vec<StrategyCost>,
    pub graph_stats: Option<GraphStats>,
    /// Generation or strategy failure; the trial carries no data.
    pub error: Option<String>,
}

impl TrialResult {
    fn failed(trial_index: usize, e: Error) -> Self {
        TrialResult {
            trial_index,
            i_dis: None,
            censored: false,
            costs: Vec::new(),
            graph_stats: None,
            error: Some(e.to_string()),
        }
    }

    pub fn is_failed(&self) -> bool {
        self.error.is_some()
    }
}

/// Runs `cfg` on the current rayon pool.
pub fn run(cfg: &ExperimentConfig) -> Result<Vec<TrialResult>> {
    match cfg.experiment {
        ExperimentKind::Depletion => run_depletion(cfg),
        ExperimentKind::CostComparison => run_cost_comparison(cfg),
        ExperimentKind::FullDepletionWithRepair => run_full_depletion_with_repair(cfg),
    }
}

/// Runs `f` on a dedicated pool of `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn expect_kind(cfg: &ExperimentConfig, kind: ExperimentKind) -> Result<()> {
    if cfg.experiment != kind {
        return Err(Error::InvalidConfig(format!(
            "expected a {kind:?} config, got {:?}",
            cfg.experiment
        )));
    }
    cfg.validate()
}

fn trials<F>(cfg: &ExperimentConfig, f: F) -> Vec<TrialResult>
where
    F: Fn(usize) -> Result<TrialResult> + Sync,
{
    (0..cfg.trials)
        .into_par_iter()
        .map(|i| f(i).unwrap_or_else(|e| TrialResult::failed(i, e)))
        .collect()
}

fn random_live<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> NodeId {
    let live: Vec<NodeId> = g.nodes().collect();
    live[rng::index(rng, live.len())]
}

pub fn run_depletion(cfg: &ExperimentConfig) -> Result<Vec<TrialResult>> {
    expect_kind(cfg, ExperimentKind::Depletion)?;
    Ok(trials(cfg, |i| {
        let mut rng = split(cfg.master_seed, &[i as u64]);
        let g = cfg.generator.generate(&mut rng)?;
        depletion_trial(i, g, &mut rng)
    }))
}

/// Removes random live nodes from `g` until it splits or one node is left.
pub fn depletion_trial<R: Rng + ?Sized>(
    trial_index: usize,
    mut g: Graph,
    rng: &mut R,
) -> Result<TrialResult> {
    let graph_stats = GraphStats::of(&g)?;
    let mut i_dis = None;
    let mut removed = 0;
    while g.live_count() > 1 {
        let v = random_live(&g, rng);
        g.remove_node_in_place(v)?;
        removed += 1;
        if !g.is_connected() {
            i_dis = Some(removed);
            break;
        }
    }
    Ok(TrialResult {
        trial_index,
        censored: i_dis.is_none(),
        i_dis,
        costs: Vec::new(),
        graph_stats: Some(graph_stats),
        error: None,
    })
}

pub fn run_cost_comparison(cfg: &ExperimentConfig) -> Result<Vec<TrialResult>> {
    expect_kind(cfg, ExperimentKind::CostComparison)?;
    Ok(trials(cfg, |i| {
        let mut rng = split(cfg.master_seed, &[i as u64]);
        let g = cfg.generator.generate(&mut rng)?;
        let graph_stats = GraphStats::of(&g)?;
        let origin = random_live(&g, &mut rng);
        let maps = criticality_maps(&g, &cfg.strategies)?;
        let critical = articulation_points(&g);
        let mut costs = Vec::with_capacity(cfg.strategies.len());
        for (s, &strategy) in cfg.strategies.iter().enumerate() {
            let mut srng = split(cfg.master_seed, &[i as u64, s as u64]);
            let params = RemovalParams {
                criticality: strategy.delta().map(|d| &maps[&d]),
                delta_options: cfg.delta_options,
            };
            let seq = plan(&g, origin, strategy, &params, &mut srng)?;
            let after = apply_sequence(&g, &seq)?;
            costs.push(StrategyCost {
                strategy,
                cost: seq.cost() as u64,
                removals: 1,
                violations: u64::from(!after.is_connected()),
                critical_terminals: u64::from(critical[seq.terminal().index()]),
            });
        }
        Ok(TrialResult {
            trial_index: i,
            i_dis: None,
            censored: false,
            costs,
            graph_stats: Some(graph_stats),
            error: None,
        })
    }))
}

fn criticality_maps(
    g: &Graph,
    strategies: &[StrategySpec],
) -> Result<BTreeMap<u32, CriticalityMap>> {
    let mut maps = BTreeMap::new();
    for d in strategies.iter().filter_map(|s| s.delta()) {
        if let std::collections::btree_map::Entry::Vacant(slot) = maps.entry(d) {
            slot.insert(CriticalityMap::compute(g, d)?);
        }
    }
    Ok(maps)
}

/// Runs every strategy through a full depletion of the same starting graph.
///
/// Fails hard if any departure disconnects the graph or any sequence ends on
/// a critical node.
pub fn run_full_depletion_with_repair(cfg: &ExperimentConfig) -> Result<Vec<TrialResult>> {
    expect_kind(cfg, ExperimentKind::FullDepletionWithRepair)?;
    let results = trials(cfg, |i| {
        let mut rng = split(cfg.master_seed, &[i as u64]);
        let g = cfg.generator.generate(&mut rng)?;
        let graph_stats = if g.live_count() > 0 {
            Some(GraphStats::of(&g)?)
        } else {
            None
        };
        let mut costs = Vec::with_capacity(cfg.strategies.len());
        for (s, &strategy) in cfg.strategies.iter().enumerate() {
            let mut srng = split(cfg.master_seed, &[i as u64, s as u64]);
            costs.push(full_depletion(&g, strategy, cfg.delta_options, &mut srng)?);
        }
        Ok(TrialResult {
            trial_index: i,
            i_dis: None,
            censored: false,
            costs,
            graph_stats,
            error: None,
        })
    });
    for r in &results {
        for c in &r.costs {
            if c.violations > 0 || c.critical_terminals > 0 {
                return Err(Error::InvariantViolation(format!(
                    "trial {}: {} produced {} disconnections and {} critical terminals",
                    r.trial_index, c.strategy, c.violations, c.critical_terminals
                )));
            }
        }
    }
    Ok(results)
}

/// Removes random live nodes from `g`, repairing each departure with
/// `strategy`, until at most one node is left.
pub fn full_depletion(
    g: &Graph,
    strategy: StrategySpec,
    delta_options: DeltaOptions,
    rng: &mut SimRng,
) -> Result<StrategyCost> {
    let mut g = g.clone();
    let mut out = StrategyCost {
        strategy,
        cost: 0,
        removals: 0,
        violations: 0,
        critical_terminals: 0,
    };
    while g.live_count() > 1 {
        let origin = random_live(&g, rng);
        let crit = match strategy.delta() {
            Some(d) => Some(CriticalityMap::compute(&g, d)?),
            None => None,
        };
        let params = RemovalParams {
            criticality: crit.as_ref(),
            delta_options,
        };
        let seq = plan(&g, origin, strategy, &params, rng)?;
        if articulation_points(&g)[seq.terminal().index()] {
            out.critical_terminals += 1;
        }
        let after = apply_sequence(&g, &seq)?;
        out.cost += seq.cost() as u64;
        out.removals += 1;
        if !after.is_connected() {
            // Later departures would need a connected graph; stop here.
            out.violations += 1;
            break;
        }
        g = after;
    }
    Ok(out)
}

/// Statistics for one series of integer samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesStats {
    pub label: String,
    pub count: usize,
    pub mean: Option<f64>,
    pub std: Option<f64>,
    pub ecdf: Ecdf,
}

impl SeriesStats {
    fn new(label: String, samples: &[u64]) -> Self {
        let xs: Vec<f64> = samples.iter().map(|&x| x as f64).collect();
        SeriesStats {
            label,
            count: samples.len(),
            mean: mean(&xs),
            std: std_dev(&xs),
            ecdf: Ecdf::new(samples),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryStats {
    /// `i_dis` for depletion, one series per strategy otherwise.
    pub series: Vec<SeriesStats>,
    pub trials: usize,
    pub censored_count: usize,
    pub failed_trials: usize,
    pub mean_diameter: Option<f64>,
    pub mean_degree: Option<f64>,
}

impl SummaryStats {
    pub fn get(&self, label: &str) -> Option<&SeriesStats> {
        self.series.iter().find(|s| s.label == label)
    }

    pub fn mean_of(&self, label: &str) -> Option<f64> {
        self.get(label).and_then(|s| s.mean)
    }
}

/// Series label for a strategy, e.g. `dmps:2`.
pub fn label(strategy: StrategySpec) -> String {
    strategy.to_string()
}

pub fn summarize(results: &[TrialResult]) -> Result<SummaryStats> {
    if results.is_empty() {
        return Err(Error::EmptyInput);
    }
    let ok: Vec<&TrialResult> = results.iter().filter(|r| !r.is_failed()).collect();
    let mut series = Vec::new();
    if ok.iter().any(|r| r.costs.is_empty()) || ok.is_empty() {
        let samples: Vec<u64> = ok.iter().filter_map(|r| r.i_dis).collect();
        series.push(SeriesStats::new("i_dis".into(), &samples));
    } else {
        for s in 0..ok[0].costs.len() {
            let samples: Vec<u64> = ok.iter().map(|r| r.costs[s].cost).collect();
            series.push(SeriesStats::new(label(ok[0].costs[s].strategy), &samples));
        }
    }
    let stat = |f: fn(&GraphStats) -> f64| {
        let xs: Vec<f64> = ok
            .iter()
            .filter_map(|r| r.graph_stats.as_ref().map(f))
            .collect();
        mean(&xs)
    };
    Ok(SummaryStats {
        series,
        trials: results.len(),
        censored_count: ok.iter().filter(|r| r.censored).count(),
        failed_trials: results.len() - ok.len(),
        mean_diameter: stat(|g| g.diameter as f64),
        mean_degree: stat(|g| g.mean_degree),
    })
}

/// Fraction of successful depletion trials that split within `k` removals.
/// Censored trials count as never splitting.
pub fn disconnect_probability(results: &[TrialResult], k: u64) -> Option<f64> {
    let ok: Vec<&TrialResult> = results.iter().filter(|r| !r.is_failed()).collect();
    if ok.is_empty() {
        return None;
    }
    let hits = ok
        .iter()
        .filter(|r| r.i_dis.is_some_and(|x| x <= k))
        .count();
    Some(hits as f64 / ok.len() as f64)
}

/// Removal count tracked by the depletion summary.
pub const DISCONNECT_WITHIN: u64 = 10;

pub fn depletion_csv(results: &[TrialResult]) -> String {
    let mut out = String::from("trial,i_dis,censored,diameter,mean_degree\n");
    for r in results {
        if r.is_failed() {
            writeln!(out, "{},,,,", r.trial_index).unwrap();
            continue;
        }
        let (d, m) = stats_cells(r);
        let i_dis = r.i_dis.map(|x| x.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{}",
            r.trial_index, i_dis, r.censored, d, m
        )
        .unwrap();
    }
    out
}

pub fn comparison_csv(results: &[TrialResult]) -> String {
    let mut out = String::from("trial,strategy,delta,cost,diameter,mean_degree\n");
    for r in results {
        let (d, m) = stats_cells(r);
        for c in &r.costs {
            let delta = c
                .strategy
                .delta()
                .map(|x| x.to_string())
                .unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.trial_index,
                c.strategy.name(),
                delta,
                c.cost,
                d,
                m
            )
            .unwrap();
        }
    }
    out
}

pub fn full_depletion_csv(results: &[TrialResult]) -> String {
    let mut out =
        String::from("trial,strategy,delta,removals,cost,violations,critical_terminals\n");
    for r in results {
        for c in &r.costs {
            let delta = c
                .strategy
                .delta()
                .map(|x| x.to_string())
                .unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.trial_index,
                c.strategy.name(),
                delta,
                c.removals,
                c.cost,
                c.violations,
                c.critical_terminals
            )
            .unwrap();
        }
    }
    out
}

fn stats_cells(r: &TrialResult) -> (String, String) {
    match &r.graph_stats {
        Some(g) => (g.diameter.to_string(), format_sig(g.mean_degree, 6)),
        None => (String::new(), String::new()),
    }
}

/// Trial CSV matching the experiment kind.
pub fn trials_csv(kind: ExperimentKind, results: &[TrialResult]) -> String {
    match kind {
        ExperimentKind::Depletion => depletion_csv(results),
        ExperimentKind::CostComparison => comparison_csv(results),
        ExperimentKind::FullDepletionWithRepair => full_depletion_csv(results),
    }
}

/// Summary document: config echo, per-series means, stds and ECDF points,
/// censoring and the crate version. Floats carry 6 significant digits.
pub fn summary_json(cfg: &ExperimentConfig, results: &[TrialResult]) -> Result<serde_json::Value> {
    use serde_json::{json, Map, Value};

    let summary = summarize(results)?;
    let num = |x: Option<f64>| x.map(|v| json!(round_sig(v, 6))).unwrap_or(Value::Null);
    let mut means = Map::new();
    let mut stds = Map::new();
    let mut ecdf = Map::new();
    for s in &summary.series {
        means.insert(s.label.clone(), num(s.mean));
        stds.insert(s.label.clone(), num(s.std));
        let points: Vec<Value> = s
            .ecdf
            .points
            .iter()
            .map(|&(x, f)| json!([x, round_sig(f, 6)]))
            .collect();
        ecdf.insert(s.label.clone(), Value::Array(points));
    }
    let mut doc = json!({
        "config": cfg,
        "means": means,
        "stds": stds,
        "ecdf": ecdf,
        "censored_count": summary.censored_count,
        "failed_trials": summary.failed_trials,
        "trials": summary.trials,
        "mean_diameter": num(summary.mean_diameter),
        "mean_degree": num(summary.mean_degree),
        "version": crate::VERSION,
    });
    if cfg.experiment == ExperimentKind::Depletion {
        doc["p_i_dis_le_10"] = num(disconnect_probability(results, DISCONNECT_WITHIN));
    }
    Ok(doc)
}

/// Pretty-printed [`summary_json`] with a trailing newline.
pub fn summary_json_string(cfg: &ExperimentConfig, results: &[TrialResult]) -> Result<String> {
    let doc = summary_json(cfg, results)?;
    let mut s =
        serde_json::to_string_pretty(&doc).map_err(|e| Error::InvalidConfig(e.to_string()))?;
    s.push('\n');
    Ok(s)
}
