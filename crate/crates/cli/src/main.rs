use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ordermetrics::enumerate::graphs_up_to_iso;
use ordermetrics::families::{gen_fence, generate, random_width2, verify_family_claims};
use ordermetrics::laws::{run_suite, trial_seed, PosetSource, NEGATIVE_CONTROLS, SUITE_LAWS};
use ordermetrics::path::{longest_induced_path_with_budget, longest_isometric_path, oscillation_distance, verify_width2_metric_bounds};
use ordermetrics::patterns::{
    classify_pattern, embeds_induced_with_budget, gen_pattern, is_bipartite_permutation,
    is_bipartite_permutation_brute_force, PatternParams,
};
use ordermetrics::{parse_poset, write_poset, Family, IncGraph, PatternKind, Poset, SearchOutcome, VertexSet, DEFAULT_BUDGET};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "ordermetrics", version, about = "Metric properties of incomparability graphs")]
struct Cli {
    /// Node budget for exact path and embedding searches.
    #[arg(long, global = true, env = "ORDERMETRICS_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member or random poset in poset v1 format.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Edge probability for `random`.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summarize a poset and its incomparability graph.
    Analyze { file: String },
    /// Run a single metric query.
    Query {
        file: String,
        #[command(subcommand)]
        query: Query,
    },
    /// Run law and claim suites. Exits 1 on any unexpected result.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        exhaustive_n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 10)]
        random_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 7)]
        oracle_n: usize,
        /// Largest fence and random width-2 size in the width2 suite.
        #[arg(long, default_value_t = 12)]
        width2_n: usize,
        #[arg(long, default_value_t = 200)]
        width2_trials: usize,
    },
    /// Print the incomparability graph.
    Export {
        file: String,
        #[arg(long, required = true)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum Query {
    Dist { x: String, y: String },
    Ball { x: String, r: usize },
    HullOrder { xs: Vec<String> },
    HullMetric { xs: Vec<String> },
    Detour {
        #[arg(long)]
        from: Option<String>,
    },
    Isometric {
        #[arg(long)]
        from: Option<String>,
    },
    /// Oscillation distance in a poset of width at most 2.
    Dp { x: String, y: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Convexity,
    Width2,
    Families,
    Patterns,
    All,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: ordermetrics::Error| e.to_string())
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<ordermetrics::Error> for Failure {
    fn from(e: ordermetrics::Error) -> Self {
        Failure { code: 2, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

#[derive(Serialize)]
struct Report {
    schema: u32,
    version: &'static str,
    command: Vec<String>,
    seed: Option<u64>,
    results: Value,
    wall_time_ms: f64,
}

fn emit(seed: Option<u64>, results: Value, start: Instant) {
    let report = Report {
        schema: SCHEMA,
        version: env!("CARGO_PKG_VERSION"),
        command: std::env::args().skip(1).collect(),
        seed,
        results,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    write_stdout(&format!("{}\n", serde_json::to_string_pretty(&report).expect("report serializes")));
}

/// Writes to stdout, ignoring a closed pipe.
fn write_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn read_poset(path: &str) -> Result<Poset, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
    }
    Ok(parse_poset(&text)?)
}

fn names(p: &Poset, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| p.label(v)).collect()
}

fn resolve_all(p: &Poset, xs: &[String]) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::new(p.len());
    for x in xs {
        set.insert(p.resolve(x)?);
    }
    Ok(set)
}

fn search_json(p: &Poset, out: &SearchOutcome) -> Value {
    json!({
        "length": out.witness.length(),
        "witness": names(p, out.witness.vertices.iter().copied()),
        "optimal": out.optimal,
        "nodes": out.nodes,
    })
}

fn shortest_path(g: &IncGraph, x: usize, y: usize) -> Option<Vec<usize>> {
    let row = g.distances_from(y);
    let mut d = row[x].finite()?;
    let mut path = vec![x];
    let mut cur = x;
    while d > 0 {
        cur = g.neighbors(cur).iter().find(|&w| row[w].finite() == Some(d - 1))?;
        path.push(cur);
        d -= 1;
    }
    Some(path)
}

fn cmd_analyze(p: &Poset, budget: u64) -> Value {
    let g = IncGraph::from_poset(p);
    let detour = longest_induced_path_with_budget(&g, None, None, budget);
    json!({
        "elements": p.len(),
        "labels": names(p, 0..p.len()),
        "comparable_pairs": p.strict_pairs().count(),
        "width": p.width(),
        "interval_order": p.is_interval_order(),
        "bipartite_permutation": is_bipartite_permutation(&g),
        "edges": g.edge_count(),
        "components": g.components().len(),
        "diameter": g.diameter(),
        "detour": search_json(p, &detour),
        "degree_histogram": g.degree_histogram(),
    })
}

fn cmd_query(p: &Poset, q: &Query, budget: u64) -> Result<Value, Failure> {
    let g = IncGraph::from_poset(p);
    Ok(match q {
        Query::Dist { x, y } => {
            let (a, b) = (p.resolve(x)?, p.resolve(y)?);
            let path = shortest_path(&g, a, b);
            json!({
                "query": "dist",
                "x": p.label(a),
                "y": p.label(b),
                "distance": g.dist(a, b),
                "witness": path.map(|w| names(p, w)),
            })
        }
        Query::Ball { x, r } => {
            let a = p.resolve(x)?;
            json!({ "query": "ball", "center": p.label(a), "r": r, "members": names(p, g.ball(a, *r).iter()) })
        }
        Query::HullOrder { xs } => {
            let set = resolve_all(p, xs)?;
            json!({ "query": "hull-order", "input": names(p, set.iter()), "hull": names(p, p.order_convex_hull(&set).iter()) })
        }
        Query::HullMetric { xs } => {
            let set = resolve_all(p, xs)?;
            json!({ "query": "hull-metric", "input": names(p, set.iter()), "hull": names(p, g.metric_convex_hull(&set).iter()) })
        }
        Query::Detour { from } => {
            let start = from.as_deref().map(|v| p.resolve(v)).transpose()?;
            let out = longest_induced_path_with_budget(&g, start, None, budget);
            json!({ "query": "detour", "from": start.map(|v| p.label(v)), "result": search_json(p, &out) })
        }
        Query::Isometric { from } => {
            let start = from.as_deref().map(|v| p.resolve(v)).transpose()?;
            let out = longest_isometric_path(&g, start);
            json!({ "query": "isometric", "from": start.map(|v| p.label(v)), "result": search_json(p, &out) })
        }
        Query::Dp { x, y } => {
            let (a, b) = (p.resolve(x)?, p.resolve(y)?);
            json!({ "query": "dp", "x": p.label(a), "y": p.label(b), "distance": oscillation_distance(p, a, b)? })
        }
    })
}

struct SuiteArgs {
    exhaustive_n: usize,
    trials: usize,
    random_n: usize,
    seed: u64,
    family: Option<Family>,
    n: Option<usize>,
    oracle_n: usize,
    width2_n: usize,
    width2_trials: usize,
    budget: u64,
}

/// Results of one suite and how many unexpected outcomes it had.
struct SuiteOutput {
    value: Value,
    violations: usize,
}

fn suite_convexity(a: &SuiteArgs) -> Result<SuiteOutput, Failure> {
    let ids: Vec<&str> = SUITE_LAWS.iter().chain(NEGATIVE_CONTROLS.iter()).copied().collect();
    let exhaustive = run_suite(&ids, &PosetSource::Exhaustive { max_n: a.exhaustive_n })?;
    let random = run_suite(
        &ids,
        &PosetSource::Random {
            n: a.random_n,
            trials: a.trials,
            seed: a.seed,
        },
    )?;
    let negcontrol = run_suite(&NEGATIVE_CONTROLS, &PosetSource::Explicit(vec![Poset::two_plus_two()]))?;
    Ok(SuiteOutput {
        violations: exhaustive.violations + random.violations + negcontrol.violations,
        value: json!({ "exhaustive": exhaustive, "random": random, "two_plus_two": negcontrol }),
    })
}

fn suite_width2(a: &SuiteArgs) -> Result<SuiteOutput, Failure> {
    let mut failures = Vec::new();
    let mut fences = 0;
    for n in 2..=a.width2_n {
        let t = gen_fence(n)?;
        let v = verify_width2_metric_bounds(&t.poset)?;
        fences += 1;
        if v.failed() {
            failures.push(json!({ "source": format!("fence({n})"), "verdict": v }));
        }
    }
    let mut random = 0;
    let mut draws = 0u64;
    let top = a.width2_n.max(2);
    while random < a.width2_trials {
        let s = trial_seed(a.seed, draws);
        draws += 1;
        if draws > 1000 * a.width2_trials as u64 + 1000 {
            return Err(usage("could not draw enough connected width-2 posets"));
        }
        let n = 2 + (s % (top as u64 - 1)) as usize;
        let t = random_width2(n, s)?;
        if !IncGraph::from_poset(&t.poset).is_connected() {
            continue;
        }
        random += 1;
        let v = verify_width2_metric_bounds(&t.poset)?;
        if v.failed() {
            failures.push(json!({ "source": format!("random_width2(n={n}, seed={s})"), "verdict": v }));
        }
    }
    Ok(SuiteOutput {
        violations: failures.len(),
        value: json!({ "fences": fences, "random": random, "failures": failures }),
    })
}

fn default_n(f: Family) -> usize {
    match f {
        Family::Width3NoPath => 8,
        Family::Nn2NoIsometric => 6,
        Family::IntervalStaircase => 8,
        _ => 12,
    }
}

fn suite_families(a: &SuiteArgs) -> Result<SuiteOutput, Failure> {
    let families = match a.family {
        Some(f) => vec![f],
        None => vec![Family::Width3NoPath, Family::Nn2NoIsometric, Family::IntervalStaircase, Family::Fence],
    };
    let mut reports = Vec::new();
    let mut violations = 0;
    for f in families {
        let r = verify_family_claims(f, a.n.unwrap_or_else(|| default_n(f)))?;
        violations += r.claims.iter().filter(|c| !c.passed()).count();
        reports.push(r);
    }
    Ok(SuiteOutput {
        violations,
        value: json!({ "reports": reports }),
    })
}

fn round_trip_cases() -> Vec<(PatternKind, PatternParams)> {
    let mut cases = Vec::new();
    for s in 4..=12 {
        cases.push((PatternKind::Path, PatternParams::new(s, &[])));
        for mask in 0u32..1 << s {
            let teeth: Vec<usize> = (0..s).filter(|i| mask >> i & 1 == 1).collect();
            cases.push((PatternKind::Comb, PatternParams::new(s, &teeth)));
        }
        for i in 0..s {
            cases.push((PatternKind::Caterpillar, PatternParams::new(s, &[i, i])));
            cases.push((PatternKind::Caterpillar, PatternParams::new(s, &[i, i, i, (i + 2) % s])));
        }
        for (kind, gap) in [(PatternKind::Kite1, 1), (PatternKind::Kite2, 2), (PatternKind::Kite3, 2)] {
            for i in 0..s {
                cases.push((kind, PatternParams::new(s, &[i])));
                cases.push((kind, PatternParams::new(s, &[i, i + gap + 1])));
                let every: Vec<usize> = (i..s).step_by(gap).filter(|p| p + gap < s).collect();
                cases.push((kind, PatternParams::new(s, &every)));
            }
        }
    }
    for k in 1..=8 {
        cases.push((PatternKind::DoubleFork, PatternParams::new(k, &[])));
    }
    for n in 2..=5 {
        cases.push((PatternKind::DirectSumPaths, PatternParams::new(n, &[])));
        if n >= 3 {
            cases.push((PatternKind::CompleteSumPaths, PatternParams::new(n, &[])));
        }
    }
    cases
}

fn suite_patterns(a: &SuiteArgs) -> Result<SuiteOutput, Failure> {
    let mut mismatches = Vec::new();
    let mut graphs = 0;
    for n in 0..=a.oracle_n {
        for g in graphs_up_to_iso(n) {
            graphs += 1;
            let fast = is_bipartite_permutation(&g);
            if fast != is_bipartite_permutation_brute_force(&g) {
                mismatches.push(json!({ "graph": g.edges(), "recognizer": fast }));
            }
        }
    }
    let mut sweep = 0;
    let mut misclassified = Vec::new();
    for (kind, params) in round_trip_cases() {
        let Ok(g) = gen_pattern(kind, &params) else {
            continue;
        };
        sweep += 1;
        let got = classify_pattern(&g);
        if got != Some(kind) {
            misclassified.push(json!({ "kind": kind, "params": params, "classified": got }));
        }
    }
    let mut fork_embeddings = Vec::new();
    for i in 2..=5 {
        for j in 2..=5 {
            let (a_df, b_df) = (
                gen_pattern(PatternKind::DoubleFork, &PatternParams::new(i, &[]))?,
                gen_pattern(PatternKind::DoubleFork, &PatternParams::new(j, &[]))?,
            );
            if i != j && embeds_induced_with_budget(&a_df, &b_df, a.budget)?.is_some() {
                fork_embeddings.push(json!([i, j]));
            }
        }
    }
    Ok(SuiteOutput {
        violations: mismatches.len() + misclassified.len() + fork_embeddings.len(),
        value: json!({
            "recognizer": { "graphs": graphs, "mismatches": mismatches },
            "round_trip": { "cases": sweep, "misclassified": misclassified },
            "double_forks": { "range": [2, 5], "embeddings": fork_embeddings },
        }),
    })
}

fn run() -> Result<u8, Failure> {
    let cli = Cli::try_parse().map_err(|e| {
        let code = if e.use_stderr() { 2 } else { 0 };
        let _ = e.print();
        Failure { code, msg: String::new() }
    })?;
    let start = Instant::now();
    match &cli.command {
        Command::Gen { family, n, p, seed, out } => {
            let t = generate(*family, *n, *p, *seed)?;
            let text = write_poset(&t.poset);
            match out {
                Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => write_stdout(&text),
            }
        }
        Command::Analyze { file } => {
            let p = read_poset(file)?;
            emit(None, cmd_analyze(&p, cli.budget), start);
        }
        Command::Query { file, query } => {
            let p = read_poset(file)?;
            emit(None, cmd_query(&p, query, cli.budget)?, start);
        }
        Command::Export { file, .. } => {
            let p = read_poset(file)?;
            write_stdout(&IncGraph::from_poset(&p).to_dot());
        }
        Command::Verify {
            suite,
            exhaustive_n,
            trials,
            random_n,
            seed,
            family,
            n,
            oracle_n,
            width2_n,
            width2_trials,
        } => {
            let args = SuiteArgs {
                exhaustive_n: *exhaustive_n,
                trials: *trials,
                random_n: *random_n,
                seed: *seed,
                family: *family,
                n: *n,
                oracle_n: *oracle_n,
                width2_n: *width2_n,
                width2_trials: *width2_trials,
                budget: cli.budget,
            };
            let mut results = serde_json::Map::new();
            let mut violations = 0;
            let runs: [(Suite, &str, fn(&SuiteArgs) -> Result<SuiteOutput, Failure>); 4] = [
                (Suite::Convexity, "convexity", suite_convexity),
                (Suite::Width2, "width2", suite_width2),
                (Suite::Families, "families", suite_families),
                (Suite::Patterns, "patterns", suite_patterns),
            ];
            for (which, name, f) in runs {
                if *suite == which || *suite == Suite::All {
                    let out = f(&args)?;
                    violations += out.violations;
                    results.insert(name.to_string(), json!({ "violations": out.violations, "results": out.value }));
                }
            }
            results.insert("violations".into(), json!(violations));
            emit(Some(*seed), Value::Object(results), start);
            return Ok(if violations == 0 { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if !f.msg.is_empty() {
                eprintln!("error: {}", f.msg);
            }
            ExitCode::from(f.code)
        }
    }
}
