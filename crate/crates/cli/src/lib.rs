//! Command-line front end for the `netmend` library.

pub mod args;
pub mod config;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::{CommandFactory, Parser};
use netmend::criticality::CriticalityMap;
use netmend::generators::GeneratorSpec;
use netmend::graph::parse_edge_list;
use netmend::montecarlo::{self, ExperimentConfig, ExperimentKind, TrialResult};
use netmend::rng::split;
use netmend::strategies::{
    apply_sequence, plan, render_trace, trace, DeltaOptions, RemovalParams, TieBreak,
};
use netmend::{Error, Graph, NodeId, StrategySpec};

use crate::args::{
    Cli, Command, CompareArgs, CriticalityArgs, DemoArgs, DepletionArgs, RepairArgs, TieBreakArg,
};

/// Process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Unreadable input, malformed file.
    Io(String),
    /// Bad flags or values outside the domain.
    Usage(String),
    /// The library broke one of its own guarantees.
    Invariant(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Invariant(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Usage(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Io(e.to_string()),
            Error::InvariantViolation(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let mut args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    if let Some(path) = config::config_path(&args) {
        let path = Path::new(&path).to_path_buf();
        let loaded = fs::read_to_string(&path)
            .map_err(|e| format!("{}: {e}", path.display()))
            .and_then(|text| config::config_args(&text, &path));
        match loaded {
            Ok(extra) => args = config::splice(args, extra),
            Err(m) => {
                eprintln!("error: {m}");
                return 1;
            }
        }
    }
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let out = std::io::stdout();
    let mut out = out.lock();
    let result = match &cli.command {
        Command::Demo(a) => demo(a, &mut out),
        Command::Depletion(a) => depletion(a, cli.verbose, &mut out),
        Command::Compare(a) => compare(a, cli.verbose, &mut out),
        Command::Repair(a) => repair(a, cli.verbose, &mut out),
        Command::Criticality(a) => criticality(a, &mut out),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message());
            if matches!(f, Failure::Usage(_)) {
                let name = subcommand_name(&cli.command);
                if let Some(sub) = Cli::command().find_subcommand_mut(name) {
                    eprintln!("\n{}", sub.render_usage());
                }
            }
            f.code()
        }
    }
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Demo(_) => "demo",
        Command::Depletion(_) => "depletion",
        Command::Compare(_) => "compare",
        Command::Repair(_) => "repair",
        Command::Criticality(_) => "criticality",
    }
}

/// Collects every problem with the flags before anything runs.
#[derive(Default)]
struct Problems(Vec<String>);

impl Problems {
    fn check<T>(&mut self, r: Result<T, String>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(m) => {
                self.0.push(m);
                None
            }
        }
    }

    fn push(&mut self, m: impl Into<String>) {
        self.0.push(m.into());
    }

    fn finish(self) -> CmdResult {
        match self.0.len() {
            0 => Ok(()),
            1 => Err(Failure::Usage(self.0.into_iter().next().unwrap())),
            _ => Err(Failure::Usage(format!(
                "invalid arguments:\n  - {}",
                self.0.join("\n  - ")
            ))),
        }
    }
}

/// Accepts `v3`, `3`, or a single letter with `a` as node 0.
pub fn parse_node_label(label: &str) -> Result<usize, String> {
    let bad = || format!("cannot read node label {label:?}; use v<k>, an integer, or a letter");
    let digits = label.strip_prefix('v').unwrap_or(label);
    if let Ok(k) = digits.parse::<usize>() {
        return Ok(k);
    }
    match label.as_bytes() {
        [c @ b'a'..=b'z'] => Ok((c - b'a') as usize),
        _ => Err(bad()),
    }
}

pub fn parse_strategy_list(list: &str) -> Result<Vec<StrategySpec>, String> {
    let specs: Result<Vec<StrategySpec>, String> = list
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<StrategySpec>().map_err(|e| e.to_string()))
        .collect();
    let specs = specs?;
    if specs.is_empty() {
        return Err("--strategies lists no strategy".into());
    }
    Ok(specs)
}

fn tie_break(t: TieBreakArg) -> TieBreak {
    match t {
        TieBreakArg::Uniform => TieBreak::Uniform,
        TieBreakArg::SmallestId => TieBreak::SmallestId,
    }
}

fn generator_spec(
    name: &str,
    n: usize,
    p: f64,
    max_attempts: u64,
) -> Result<GeneratorSpec, String> {
    let mut spec = match name {
        "er" | "erdos-renyi" => GeneratorSpec::erdos_renyi(n, p),
        "tree" => GeneratorSpec::random_tree(n),
        "cycle" => GeneratorSpec::cycle(n),
        "path" => GeneratorSpec::path(n),
        "complete" => GeneratorSpec::complete(n),
        "star" => GeneratorSpec::star(n),
        other => match other.strip_prefix("fixture:") {
            Some(f) => GeneratorSpec::fixture(f).map_err(|e| e.to_string())?,
            None => return Err(format!("unknown generator {other:?}")),
        },
    };
    if spec.p.is_some() {
        spec.max_attempts = Some(max_attempts);
    }
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::Io(e.to_string())
}

fn demo(a: &DemoArgs, out: &mut impl Write) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let mut problems = Problems::default();
    let origin = problems.check(parse_node_label(&a.remove)).and_then(|k| {
        let v = NodeId::new(k);
        problems
            .check(g.neighbors(v).map_err(|e| e.to_string()))
            .map(|_| v)
    });
    let strategy = problems.check(a.strategy.parse::<StrategySpec>().or_else(|e| {
        // Bare `dmps` takes its radius from --delta.
        if a.strategy == "dmps" {
            Ok(StrategySpec::DeltaMps {
                delta: a.delta.unwrap_or(1),
            })
        } else {
            Err(e.to_string())
        }
    }));
    if let (Some(StrategySpec::DeltaMps { delta }), Some(d)) = (strategy, a.delta) {
        if d != delta {
            problems.push(format!(
                "--strategy {} conflicts with --delta {d}",
                a.strategy
            ));
        }
    }
    if a.delta == Some(0) {
        problems.push("--delta must be at least 1");
    }
    if !g.is_connected() {
        problems.push("the graph is not connected");
    }
    problems.finish()?;
    let (origin, strategy) = (origin.unwrap(), strategy.unwrap());

    let crit = strategy
        .delta()
        .map(|d| CriticalityMap::compute(&g, d))
        .transpose()?;
    let params = RemovalParams {
        criticality: crit.as_ref(),
        delta_options: DeltaOptions {
            tie_break: tie_break(a.tie_break),
            stop_if_origin_safe: a.origin_check,
        },
    };
    let seq = plan(&g, origin, strategy, &params, &mut split(a.seed, &[]))?;
    let after = apply_sequence(&g, &seq)?;
    let connected = after.is_connected();
    out.write_all(render_trace(&trace(&g, &seq), &seq, connected).as_bytes())
        .map_err(io_err)?;
    if !connected {
        return Err(Failure::Invariant(format!(
            "graph disconnected after removing {}",
            seq.terminal()
        )));
    }
    Ok(())
}

fn criticality(a: &CriticalityArgs, out: &mut impl Write) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let map = CriticalityMap::compute(&g, a.delta)?;
    let mut text = String::from("node,global_critical,delta,delta_critical\n");
    for v in g.nodes() {
        text += &format!(
            "{v},{},{},{}\n",
            map.is_critical(v),
            a.delta,
            map.is_delta_critical(v)
        );
    }
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn execute(cfg: &ExperimentConfig, workers: usize) -> Result<Vec<TrialResult>, Failure> {
    let results = if workers == 0 {
        montecarlo::run(cfg)
    } else {
        montecarlo::with_workers(workers, || montecarlo::run(cfg))?
    }?;
    if let Some(e) = results
        .iter()
        .all(TrialResult::is_failed)
        .then(|| results[0].error.clone())
        .flatten()
    {
        return Err(Failure::Usage(format!(
            "every trial failed; first error: {e}"
        )));
    }
    Ok(results)
}

fn write_outputs(
    dir: &Path,
    stem: &str,
    cfg: &ExperimentConfig,
    results: &[TrialResult],
) -> CmdResult {
    fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
    let csv = dir.join(format!("{stem}.csv"));
    fs::write(&csv, montecarlo::trials_csv(cfg.experiment, results))
        .map_err(|e| Failure::Io(format!("{}: {e}", csv.display())))?;
    let json = dir.join(format!("{stem}_summary.json"));
    fs::write(&json, montecarlo::summary_json_string(cfg, results)?)
        .map_err(|e| Failure::Io(format!("{}: {e}", json.display())))?;
    Ok(())
}

fn report(
    cfg: &ExperimentConfig,
    results: &[TrialResult],
    verbose: bool,
    out: &mut impl Write,
) -> CmdResult {
    use netmend::montecarlo::stats::format_sig;

    let s = montecarlo::summarize(results)?;
    let sig = |x: Option<f64>| x.map_or("-".to_string(), |v| format_sig(v, 6));
    let mut text = format!(
        "trials {} failed {} censored {}\nmean diameter {} mean degree {}\n",
        s.trials,
        s.failed_trials,
        s.censored_count,
        sig(s.mean_diameter),
        sig(s.mean_degree)
    );
    if cfg.experiment == ExperimentKind::Depletion {
        let p = montecarlo::disconnect_probability(results, montecarlo::DISCONNECT_WITHIN);
        text += &format!("P(i_dis <= {}) {}\n", montecarlo::DISCONNECT_WITHIN, sig(p));
    }
    for series in &s.series {
        text += &format!(
            "{} mean {} std {} n {}\n",
            series.label,
            sig(series.mean),
            sig(series.std),
            series.count
        );
    }
    out.write_all(text.as_bytes()).map_err(io_err)?;
    if verbose {
        for r in results.iter().filter(|r| r.is_failed()) {
            eprintln!(
                "trial {}: {}",
                r.trial_index,
                r.error.as_deref().unwrap_or_default()
            );
        }
    }
    Ok(())
}

fn depletion(a: &DepletionArgs, verbose: bool, out: &mut impl Write) -> CmdResult {
    let mut problems = Problems::default();
    let p = match a.target_degree {
        Some(t) => netmend::generators::p_for_mean_degree(a.n, t),
        None => a.p,
    };
    let generator = problems.check(generator_spec(&a.generator, a.n, p, a.run.max_attempts));
    if a.trials < 1 {
        problems.push("--trials must be at least 1");
    }
    problems.finish()?;
    let cfg = ExperimentConfig::depletion(generator.unwrap(), a.trials, a.run.seed);
    let results = execute(&cfg, a.run.workers)?;
    write_outputs(&a.run.out, "depletion", &cfg, &results)?;
    report(&cfg, &results, verbose, out)
}

struct StrategyRun<'a> {
    kind: ExperimentKind,
    generator: &'a str,
    n: usize,
    target_degree: f64,
    p: Option<f64>,
    trials: usize,
    strategy: &'a crate::args::StrategyArgs,
    run: &'a crate::args::ExperimentArgs,
}

fn strategy_experiment(
    r: StrategyRun<'_>,
    stem: &str,
    verbose: bool,
    out: &mut impl Write,
) -> CmdResult {
    let mut problems = Problems::default();
    let p =
        r.p.unwrap_or_else(|| netmend::generators::p_for_mean_degree(r.n, r.target_degree));
    let generator = problems.check(generator_spec(r.generator, r.n, p, r.run.max_attempts));
    let strategies = problems.check(parse_strategy_list(&r.strategy.strategies));
    if r.trials < 1 {
        problems.push("--trials must be at least 1");
    }
    problems.finish()?;
    let cfg = ExperimentConfig {
        experiment: r.kind,
        generator: generator.unwrap(),
        trials: r.trials,
        master_seed: r.run.seed,
        strategies: strategies.unwrap(),
        removal_policy: Default::default(),
        delta_options: DeltaOptions {
            tie_break: tie_break(r.strategy.tie_break),
            stop_if_origin_safe: r.strategy.origin_check,
        },
    };
    let results = execute(&cfg, r.run.workers)?;
    write_outputs(&r.run.out, stem, &cfg, &results)?;
    report(&cfg, &results, verbose, out)
}

fn compare(a: &CompareArgs, verbose: bool, out: &mut impl Write) -> CmdResult {
    let r = StrategyRun {
        kind: ExperimentKind::CostComparison,
        generator: &a.generator,
        n: a.n,
        target_degree: a.target_degree,
        p: a.p,
        trials: a.trials,
        strategy: &a.strategy,
        run: &a.run,
    };
    strategy_experiment(r, "compare", verbose, out)
}

fn repair(a: &RepairArgs, verbose: bool, out: &mut impl Write) -> CmdResult {
    let r = StrategyRun {
        kind: ExperimentKind::FullDepletionWithRepair,
        generator: &a.generator,
        n: a.n,
        target_degree: a.target_degree,
        p: a.p,
        trials: a.trials,
        strategy: &a.strategy,
        run: &a.run,
    };
    strategy_experiment(r, "repair", verbose, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_labels() {
        assert_eq!(parse_node_label("v0"), Ok(0));
        assert_eq!(parse_node_label("v12"), Ok(12));
        assert_eq!(parse_node_label("7"), Ok(7));
        assert_eq!(parse_node_label("a"), Ok(0));
        assert_eq!(parse_node_label("c"), Ok(2));
        assert!(parse_node_label("vx").is_err());
        assert!(parse_node_label("ab").is_err());
        assert!(parse_node_label("").is_err());
    }

    #[test]
    fn strategy_lists() {
        let s = parse_strategy_list("central, mps,dmps:2").unwrap();
        assert_eq!(
            s,
            vec![
                StrategySpec::Centralized,
                StrategySpec::Mps,
                StrategySpec::DeltaMps { delta: 2 }
            ]
        );
        assert!(parse_strategy_list("mps,bogus").is_err());
        assert!(parse_strategy_list(",").is_err());
        assert!(parse_strategy_list("dmps:0").is_err());
    }

    #[test]
    fn generator_names() {
        assert!(generator_spec("er", 20, 0.2, 10).unwrap().max_attempts == Some(10));
        assert!(generator_spec("fixture:c6", 0, 0.0, 10).is_ok());
        assert!(generator_spec("fixture:nope", 0, 0.0, 10).is_err());
        assert!(generator_spec("er", 20, 0.0, 10).is_err());
        assert!(generator_spec("lattice", 20, 0.1, 10).is_err());
    }

    #[test]
    fn problems_are_aggregated() {
        let mut p = Problems::default();
        p.push("one");
        p.push("two");
        let Err(Failure::Usage(m)) = p.finish() else {
            panic!()
        };
        assert!(m.contains("one") && m.contains("two"));
    }
}
