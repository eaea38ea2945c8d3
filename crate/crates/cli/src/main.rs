use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hubcover::bench::{self, RunRecord, RunStatus};
use hubcover::generators::{desk_corpus, parse_dims, parse_manifest, GenClass, GenSpec};
use hubcover::io::{format_solution, parse_graph, parse_solution, write_graph};
use hubcover::matcher::{build_indices, choose_plan, find_solutions, format_match, order_graphlets, GraphStats, MatchMode};
use hubcover::solvers::{solve, Algorithm, SolverConfig};
use hubcover::{verify_solution, Error, Graph, HubCoverSolution, SolveStatus};
use serde_json::json;

#[derive(Parser)]
#[command(name = "hubcover", version, about = "Minimum hub cover solvers, generators and graphlet matching")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a benchmark graph
    Gen(GenArgs),
    /// Print the default benchmark corpus as a manifest
    Corpus {
        /// Keep only instances with at most this many vertices
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute a hub cover
    Solve(SolveArgs),
    /// Check a solution against its graph
    Verify {
        graph: PathBuf,
        /// Solution file written by `solve` (text or json); `-` for stdin
        solution: PathBuf,
    },
    /// List the matches of a query graph in a data graph
    Match {
        query: PathBuf,
        data: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Structural)]
        mode: Mode,
        /// Print only the number of matches
        #[arg(long)]
        count: bool,
    },
    /// Show the hub-cover query plan of a graph
    Plan {
        query: PathBuf,
        /// Data graph for the selectivity estimates (defaults to the query)
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Structural)]
        mode: Mode,
        /// Use this hub cover (comma-separated vertex names) instead of the cheapest one
        #[arg(long, value_delimiter = ',')]
        cover: Option<Vec<String>>,
    },
    /// Run solvers over a corpus manifest and write results.csv
    Bench {
        manifest: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = vec![Algo::Exact, Algo::Gr1, Algo::Gr2, Algo::Mbh, Algo::Lslp])]
        solvers: Vec<Algo>,
        #[arg(long, default_value_t = 60.0)]
        time_limit: f64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(short, long, default_value = "results.csv")]
        output: PathBuf,
    },
    /// Performance profile (solver,tau,fraction) from results.csv
    Profile {
        results: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve-time histogram from results.csv
    Hist {
        results: PathBuf,
        /// Bucket lower edges in seconds, strictly increasing
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.0, 0.05, 0.5, 5.0, 60.0])]
        buckets: Vec<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    class: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    eta: Option<f64>,
    #[arg(long)]
    valence: Option<usize>,
    #[arg(long)]
    rewire: Option<f64>,
    /// Mesh side lengths, e.g. 4x4 or 3x3x3
    #[arg(long)]
    dims: Option<String>,
    #[arg(long)]
    rho: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file, `-` for stdin
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Exact)]
    algo: Algo,
    #[arg(long, default_value_t = 60.0)]
    time_limit: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Exact,
    Gr1,
    Gr2,
    Mbh,
    Lslp,
    Oracle,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Exact => Algorithm::Exact,
            Algo::Gr1 => Algorithm::Gr1,
            Algo::Gr2 => Algorithm::Gr2,
            Algo::Mbh => Algorithm::Mbh,
            Algo::Lslp => Algorithm::Lslp,
            Algo::Oracle => Algorithm::Oracle,
        }
    }
}

impl std::fmt::Display for Algo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(Algorithm::from(*self).as_str())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Structural,
    Label,
    Match,
}

impl From<Mode> for MatchMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Structural => MatchMode::Structural,
            Mode::Label => MatchMode::Label,
            Mode::Match => MatchMode::Match,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidParameter(_) => 1,
            Error::Parse { .. } | Error::Io(_) | Error::Csv(_) | Error::LabelCount { .. } => 2,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::from(e).into()
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn read_input(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            message: format!("{}: {e}", path.display()),
        })
    }
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    parse_graph(&read_input(path)?).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn emit(output: Option<&Path>, text: &str) -> CliResult {
    match output {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn gen_spec(a: &GenArgs) -> CliResult<GenSpec> {
    let class: GenClass = a.class.parse().map_err(|e: Error| usage(e.to_string()))?;
    let need = |name: &str| usage(format!("class {class} needs --{name}"));
    let n = || a.n.ok_or_else(|| need("n"));
    let dims = || -> CliResult<Vec<usize>> {
        let d = a.dims.as_deref().ok_or_else(|| need("dims"))?;
        parse_dims(d).map_err(|e| usage(e.to_string()))
    };
    Ok(match class {
        GenClass::Random => GenSpec::Random { n: n()?, eta: a.eta.ok_or_else(|| need("eta"))? },
        GenClass::BoundedValence => GenSpec::BoundedValence {
            n: n()?,
            valence: a.valence.ok_or_else(|| need("valence"))?,
        },
        GenClass::IrregularBoundedValence => GenSpec::IrregularBoundedValence {
            n: n()?,
            valence: a.valence.ok_or_else(|| need("valence"))?,
            rewire: a.rewire.ok_or_else(|| need("rewire"))?,
        },
        GenClass::Mesh2D | GenClass::Mesh3D | GenClass::Mesh4D => {
            let d = dims()?;
            let want = match class {
                GenClass::Mesh2D => 2,
                GenClass::Mesh3D => 3,
                _ => 4,
            };
            if d.len() != want {
                return Err(usage(format!("class {class} needs {want} dimensions")));
            }
            GenSpec::Mesh { dims: d }
        }
        GenClass::IrregularMesh => GenSpec::IrregularMesh { dims: dims()?, rho: a.rho.ok_or_else(|| need("rho"))? },
        GenClass::ScaleFree => GenSpec::ScaleFree {
            n: n()?,
            alpha: a.alpha.ok_or_else(|| need("alpha"))?,
            beta: a.beta.ok_or_else(|| need("beta"))?,
        },
    })
}

fn solution_json(g: &Graph, s: &HubCoverSolution) -> String {
    let cover: Vec<String> = s.cover.iter().map(|&v| g.name(v)).collect();
    json!({
        "cover": cover,
        "objective": s.objective,
        "status": s.status.to_string(),
        "lower_bound": s.lower_bound,
        "time_s": s.solve_time,
        "best_time_s": s.best_time,
    })
    .to_string()
}

fn solution_from_json(g: &Graph, text: &str) -> CliResult<HubCoverSolution> {
    let bad = |m: &str| Failure { code: 2, message: format!("solution: {m}") };
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    let names = v["cover"].as_array().ok_or_else(|| bad("missing cover"))?;
    let mut cover = Vec::new();
    for n in names {
        let name = n.as_str().ok_or_else(|| bad("cover entries must be strings"))?;
        cover.push(g.vertex_by_name(name).ok_or_else(|| bad(&format!("unknown vertex `{name}`")))?);
    }
    let status: SolveStatus = v["status"].as_str().unwrap_or("Feasible").parse().map_err(|e: String| bad(&e))?;
    let mut s = HubCoverSolution::new(cover, status, v["lower_bound"].as_f64().unwrap_or(0.0), v["time_s"].as_f64().unwrap_or(0.0));
    if let Some(o) = v["objective"].as_u64() {
        s.objective = o as usize;
    }
    Ok(s)
}

fn cmd_solve(a: &SolveArgs) -> CliResult {
    let g = read_graph(&a.graph)?;
    let algo = Algorithm::from(a.algo);
    let cfg = SolverConfig::default().with_time_limit(a.time_limit).with_seed(a.seed);
    let s = solve(&g, algo, &cfg)?;
    if !s.has_incumbent() {
        return Err(Failure { code: 3, message: format!("{algo}: no cover found ({})", s.status) });
    }
    let text = match a.format {
        Format::Text => format_solution(&g, &s),
        Format::Json => solution_json(&g, &s) + "\n",
        Format::Csv => {
            let name = a.graph.file_stem().map_or("-".into(), |s| s.to_string_lossy().into_owned());
            let rec = RunRecord {
                instance_id: name,
                class: "file".into(),
                n: g.n(),
                params: String::new(),
                seed: a.seed,
                solver: algo.to_string(),
                status: s.status.into(),
                objective: Some(s.objective),
                lower_bound: s.lower_bound.is_finite().then_some(s.lower_bound),
                time_s: s.solve_time,
                best_time_s: s.best_time,
            };
            let mut buf = Vec::new();
            bench::write_results(&[rec], &mut buf)?;
            String::from_utf8(buf).expect("csv is utf-8")
        }
    };
    emit(None, &text)
}

fn cmd_verify(graph: &Path, solution: &Path) -> CliResult {
    let g = read_graph(graph)?;
    let text = read_input(solution)?;
    let s = if text.trim_start().starts_with('{') {
        solution_from_json(&g, &text)?
    } else {
        parse_solution(&g, &text).map_err(|e| Failure { code: 2, message: format!("{}: {e}", solution.display()) })?
    };
    if verify_solution(&g, &s) {
        emit(None, &format!("valid hub cover of size {}\n", s.cover.len()))
    } else {
        Err(Failure { code: 3, message: "invalid: not a hub cover, or objective does not match the cover".into() })
    }
}

fn cmd_match(query: &Path, data: &Path, mode: MatchMode, count: bool) -> CliResult {
    let q = read_graph(query)?;
    let d = read_graph(data)?;
    let stats = GraphStats::new(&d);
    let plan = choose_plan(&q, &stats, mode)?;
    let (h, s) = build_indices(&d);
    let found = find_solutions(&plan, &q, &d, &h, &s, mode)?;
    let mut out = String::new();
    if count {
        out = format!("{}\n", found.len());
    } else {
        for m in &found {
            out.push_str(&format_match(&q, &d, m));
            out.push('\n');
        }
    }
    emit(None, &out)
}

fn cmd_plan(query: &Path, data: Option<&Path>, mode: MatchMode, cover: Option<&[String]>) -> CliResult {
    let q = read_graph(query)?;
    let d = match data {
        Some(p) => read_graph(p)?,
        None => q.clone(),
    };
    let stats = GraphStats::new(&d);
    let plan = match cover {
        Some(names) => {
            let mut c = Vec::new();
            for n in names {
                c.push(q.vertex_by_name(n).ok_or_else(|| usage(format!("unknown vertex `{n}`")))?);
            }
            order_graphlets(&q, &c, &stats, mode)?
        }
        None => choose_plan(&q, &stats, mode)?,
    };
    let names: Vec<String> = plan.cover.iter().map(|&v| q.name(v)).collect();
    let mut out = format!("cover {}\n", names.join(" "));
    out.push_str(&format!("cost {}\n", plan.estimated_cost(&q, &stats, mode)));
    out.push_str(&plan.describe(&q));
    emit(None, &out)
}

fn cmd_bench(manifest: &Path, solvers: &[Algo], time_limit: f64, threads: usize, output: &Path) -> CliResult {
    let text = read_input(manifest)?;
    let instances = parse_manifest(&text).map_err(|e| Failure { code: 2, message: format!("{}: {e}", manifest.display()) })?;
    let algos: Vec<Algorithm> = solvers.iter().map(|&a| a.into()).collect();
    let cfg = SolverConfig::default().with_time_limit(time_limit);
    let mut file = fs::File::create(output)?;
    let recs = bench::run_corpus(&instances, &algos, &cfg, threads, Some(&mut file))?;
    let failed = recs.iter().filter(|r| r.status == RunStatus::Error).count();
    eprintln!("{} runs written to {} ({failed} failed)", recs.len(), output.display());
    Ok(())
}

fn read_records(path: &Path) -> CliResult<Vec<RunRecord>> {
    let text = read_input(path)?;
    bench::read_results(text.as_bytes()).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
}

fn cmd_profile(results: &Path, output: Option<&Path>) -> CliResult {
    let recs = read_records(results)?;
    let points = bench::performance_profile(&recs, &bench::solvers_in(&recs));
    let mut buf = Vec::new();
    bench::write_profile(&points, &mut buf)?;
    emit(output, &String::from_utf8(buf).expect("csv is utf-8"))
}

fn cmd_hist(results: &Path, buckets: &[f64], output: Option<&Path>) -> CliResult {
    let recs = read_records(results)?;
    let h = bench::time_histogram(&recs, buckets)?;
    let mut buf = Vec::new();
    bench::write_histogram(&h, &mut buf)?;
    emit(output, &String::from_utf8(buf).expect("csv is utf-8"))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen(a) => {
            let spec = gen_spec(&a)?;
            let g = spec.generate(a.seed)?;
            emit(a.output.as_deref(), &write_graph(&g))
        }
        Command::Corpus { max_n, output } => {
            let text: String = desk_corpus()
                .iter()
                .filter(|i| max_n.is_none_or(|m| i.spec.n() <= m))
                .map(|i| i.to_manifest_line() + "\n")
                .collect();
            emit(output.as_deref(), &text)
        }
        Command::Solve(a) => cmd_solve(&a),
        Command::Verify { graph, solution } => cmd_verify(&graph, &solution),
        Command::Match { query, data, mode, count } => cmd_match(&query, &data, mode.into(), count),
        Command::Plan { query, data, mode, cover } => cmd_plan(&query, data.as_deref(), mode.into(), cover.as_deref()),
        Command::Bench { manifest, solvers, time_limit, threads, output } => {
            cmd_bench(&manifest, &solvers, time_limit, threads, &output)
        }
        Command::Profile { results, output } => cmd_profile(&results, output.as_deref()),
        Command::Hist { results, buckets, output } => cmd_hist(&results, &buckets, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
