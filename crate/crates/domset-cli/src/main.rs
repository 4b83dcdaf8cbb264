//! Benchmark CLI for the dominating-set toolkit.

use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use domset::{
    brute_force_mds, exact_mds, friedman_mean_ranks, gen_geometric, gen_planted, greedy_mds,
    is_dominating, load_graph_path, pairwise_wilcoxon_holm, run_hcsa, sign_summary,
    wilcoxon_signed_rank, GeometricSpec, Graph, GraphFormat, HcsaParams, PairedSamples,
    PlantedSpec, write_edgelist,
};
use domset_cli::{report_to_csv, report_to_json, run_experiment, ExperimentConfig};

#[derive(Parser)]
#[command(name = "domset", version, about = "Minimum dominating set solver and benchmark harness")]
struct Cli {
    /// Worker threads for the harness (env: DOMSET_THREADS; default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the hybrid solver once on a graph file.
    Solve(SolveArgs),
    /// Certify the domination number with the branch-and-bound oracle.
    Exact(ExactArgs),
    /// Run the covering greedy baseline.
    Greedy(GraphArgs),
    /// Emit benchmark instances as edge-list files.
    Generate(GenerateArgs),
    /// Run a config-driven experiment suite and write CSV/JSON reports.
    Bench(BenchArgs),
    /// Nonparametric comparisons over a per-instance results CSV.
    Stats(StatsArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file (DIMACS `.col`/`.clq`/`.dimacs`, edge list otherwise).
    #[arg(long)]
    graph: PathBuf,
    /// Force the format: `dimacs` or `edgelist`.
    #[arg(long)]
    graph_format: Option<String>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    population: usize,
    #[arg(long, default_value_t = 500)]
    generations: usize,
    #[arg(long, default_value_t = 0.25)]
    pa: f64,
    /// Print the full run result as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Search-tree node budget.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    /// Use the subset-enumeration oracle (n <= 25) instead.
    #[arg(long)]
    brute_force: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    kind: GenerateKind,
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Connected random geometric graphs.
    Geometric {
        #[arg(long)]
        n: usize,
        /// Side length of the placement square.
        #[arg(long)]
        area: f64,
        /// Connection radius.
        #[arg(long)]
        range: f64,
        #[arg(long, default_value_t = 1000)]
        max_attempts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of instances (seeds seed..seed+count-1).
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Planted-domination-number graphs.
    Planted {
        #[arg(long)]
        n: usize,
        /// Planted domination number.
        #[arg(long)]
        d: usize,
        /// Non-dominator edge probability.
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Experiment configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Override the solver base seed from the config.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for report files.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Restrict the report to one format: `csv` or `json` (default: both).
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct StatsArgs {
    /// Input CSV with a header row of column names.
    #[arg(long)]
    input: PathBuf,
    /// Two columns `a,b`: count pairs with a>b / a<b / a=b.
    #[arg(long)]
    sign: Option<String>,
    /// Two columns `a,b`: Wilcoxon signed-rank test on the pairs.
    #[arg(long)]
    wilcoxon: Option<String>,
    /// Two or more columns: Friedman mean ranks plus the Holm-adjusted
    /// pairwise Wilcoxon table.
    #[arg(long)]
    friedman: Option<String>,
    /// Also write the rank/pairwise tables as CSV into this directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> anyhow::Result<()> {
    // Die quietly when a downstream pipe closes (e.g. `domset stats | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    configure_threads(cli.threads)?;
    match cli.command {
        Command::Solve(args) => solve(args),
        Command::Exact(args) => exact(args),
        Command::Greedy(args) => greedy(args),
        Command::Generate(args) => generate(args.kind),
        Command::Bench(args) => bench(args),
        Command::Stats(args) => stats(args),
    }
}

fn configure_threads(cli_threads: Option<usize>) -> anyhow::Result<()> {
    let threads = cli_threads.or_else(|| {
        std::env::var("DOMSET_THREADS").ok().and_then(|v| v.parse().ok())
    });
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("thread pool already initialized")?;
    }
    Ok(())
}

fn load(args: &GraphArgs) -> anyhow::Result<Graph> {
    let format: Option<GraphFormat> = args.graph_format.as_deref().map(str::parse).transpose()?;
    load_graph_path(&args.graph, format)
        .with_context(|| format!("loading {}", args.graph.display()))
}

fn solve(args: SolveArgs) -> anyhow::Result<()> {
    let g = load(&args.graph)?;
    let params = HcsaParams {
        population: args.population,
        max_generations: args.generations,
        pa: args.pa,
        seed: args.seed,
        ..Default::default()
    };
    let r = run_hcsa(&g, &params)?;
    debug_assert!(is_dominating(&g, &r.best)?);
    if args.json {
        let value = serde_json::json!({
            "best_size": r.best_size,
            "dominators": r.best.indices(),
            "bitstring": r.best.to_bitstring(),
            "generation_of_best": r.generation_of_best,
            "generations_run": r.generations_run,
            "history": r.history,
            "wall_time": r.wall_time,
            "seed": args.seed,
        });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("graph: {} vertices, {} edges", g.n(), g.edge_count());
        println!("best size: {}", r.best_size);
        println!("dominators: {}", join(&r.best.indices()));
        println!(
            "found at generation {} of {} ({:.3}s)",
            r.generation_of_best, r.generations_run, r.wall_time
        );
    }
    Ok(())
}

fn exact(args: ExactArgs) -> anyhow::Result<()> {
    let g = load(&args.graph)?;
    let r = if args.brute_force {
        brute_force_mds(&g)?
    } else {
        exact_mds(&g, args.budget)?
    };
    println!("gamma: {}", r.gamma);
    println!("witness: {}", join(&r.witness.indices()));
    println!("nodes explored: {}", r.nodes_explored);
    Ok(())
}

fn greedy(args: GraphArgs) -> anyhow::Result<()> {
    let g = load(&args)?;
    let s = greedy_mds(&g);
    println!("size: {}", s.size());
    println!("dominators: {}", join(&s.indices()));
    Ok(())
}

fn generate(kind: GenerateKind) -> anyhow::Result<()> {
    use rand::SeedableRng;
    match kind {
        GenerateKind::Geometric { n, area, range, max_attempts, seed, count, out } => {
            std::fs::create_dir_all(&out)?;
            let spec = GeometricSpec { n, area, range, max_attempts };
            for i in 0..count {
                let s = seed + i as u64;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(s);
                let g = gen_geometric(&spec, &mut rng)?;
                let header = vec![format!(
                    "generator: geometric n={n} area={area} range={range} max_attempts={max_attempts} seed={s}"
                )];
                let path = out.join(format!("geometric-n{n}-r{range}-s{s}.edges"));
                std::fs::write(&path, write_edgelist(&g, &header))?;
                println!("wrote {} ({} edges)", path.display(), g.edge_count());
            }
        }
        GenerateKind::Planted { n, d, p, seed, count, out } => {
            std::fs::create_dir_all(&out)?;
            let spec = PlantedSpec { n, d, p };
            for i in 0..count {
                let s = seed + i as u64;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(s);
                let (g, dom) = gen_planted(&spec, &mut rng)?;
                let header = vec![
                    format!("generator: planted n={n} d={d} p={p} seed={s}"),
                    format!("planted_set: {}", dom.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")),
                ];
                let path = out.join(format!("planted-n{n}-d{d}-p{p}-s{s}.edges"));
                std::fs::write(&path, write_edgelist(&g, &header))?;
                println!("wrote {} ({} edges)", path.display(), g.edge_count());
            }
        }
    }
    Ok(())
}

fn bench(args: BenchArgs) -> anyhow::Result<()> {
    let mut cfg = ExperimentConfig::load(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.solver.seed = seed;
    }
    let report = run_experiment(&cfg)?;
    std::fs::create_dir_all(&args.out)?;
    let (want_csv, want_json) = match args.format.as_deref() {
        None => (true, true),
        Some("csv") => (true, false),
        Some("json") => (false, true),
        Some(other) => anyhow::bail!("unknown report format {other:?} (expected csv or json)"),
    };
    let csv = report_to_csv(&report);
    if want_csv {
        let path = args.out.join("report.csv");
        std::fs::write(&path, &csv)?;
        println!("wrote {}", path.display());
    }
    if want_json {
        let path = args.out.join("report.json");
        std::fs::write(&path, serde_json::to_string_pretty(&report_to_json(&report))?)?;
        println!("wrote {}", path.display());
    }
    print!("{csv}");
    for failure in &report.failures {
        eprintln!("instance {} failed: {}", failure.name, failure.error);
    }
    Ok(())
}

fn stats(args: StatsArgs) -> anyhow::Result<()> {
    let table = CsvTable::load(&args.input)?;
    if args.sign.is_none() && args.wilcoxon.is_none() && args.friedman.is_none() {
        anyhow::bail!("nothing to do: pass --sign, --wilcoxon, and/or --friedman");
    }
    if let Some(cols) = &args.sign {
        let (a, b) = two_columns(cols)?;
        let samples = table.paired(&a, &b)?;
        let (greater, less, equal) = sign_summary(&samples);
        println!("sign {a} vs {b}: greater={greater} less={less} equal={equal}");
    }
    if let Some(cols) = &args.wilcoxon {
        let (a, b) = two_columns(cols)?;
        let samples = table.paired(&a, &b)?;
        let r = wilcoxon_signed_rank(&samples)?;
        println!(
            "wilcoxon {a} vs {b}: N={} z={:.3} p={:.3e} (greater={} less={} equal={})",
            r.n_greater + r.n_less,
            r.z,
            r.p_value,
            r.n_greater,
            r.n_less,
            r.n_equal
        );
    }
    if let Some(cols) = &args.friedman {
        let labels: Vec<String> = cols.split(',').map(|s| s.trim().to_string()).collect();
        if labels.len() < 2 {
            anyhow::bail!("--friedman needs at least two columns");
        }
        let matrix = table.matrix(&labels)?;
        let r = friedman_mean_ranks(&matrix)?;
        println!("friedman chi-square: {:.4}", r.chi_square);
        println!("mean ranks (1 = best):");
        for (label, rank) in labels.iter().zip(&r.mean_ranks) {
            println!("  {label}: {rank:.4}");
        }
        let pairwise = pairwise_wilcoxon_holm(&matrix, &labels)?;
        println!("pairwise Wilcoxon (Holm-adjusted):");
        println!("  a,b,z,p,p_holm");
        for row in &pairwise {
            println!("  {},{},{:.3},{:.3e},{:.3e}", row.a, row.b, row.z, row.p_value, row.p_holm);
        }
        if let Some(dir) = &args.out {
            std::fs::create_dir_all(dir)?;
            let mut ranks_csv = String::from("algorithm,mean_rank\n");
            for (label, rank) in labels.iter().zip(&r.mean_ranks) {
                ranks_csv.push_str(&format!("{label},{rank:.4}\n"));
            }
            std::fs::write(dir.join("cd_ranks.csv"), ranks_csv)?;
            let mut pw_csv = String::from("a,b,z,p,p_holm\n");
            for row in &pairwise {
                pw_csv.push_str(&format!(
                    "{},{},{:.6},{:.6e},{:.6e}\n",
                    row.a, row.b, row.z, row.p_value, row.p_holm
                ));
            }
            std::fs::write(dir.join("cd_pairwise.csv"), pw_csv)?;
            println!("wrote {} and {}", dir.join("cd_ranks.csv").display(), dir.join("cd_pairwise.csv").display());
        }
    }
    Ok(())
}

fn two_columns(spec: &str) -> anyhow::Result<(String, String)> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        anyhow::bail!("expected two comma-separated column names, got {spec:?}");
    }
    Ok((parts[0].to_string(), parts[1].to_string()))
}

fn join(indices: &[usize]) -> String {
    indices.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

/// A named-column numeric table read from CSV.
struct CsvTable {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl CsvTable {
    fn load(path: &Path) -> anyhow::Result<Self> {
        let mut reader = csv::Reader::from_path(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record?;
            rows.push(record.iter().map(str::to_string).collect());
        }
        Ok(Self { header, rows })
    }

    fn column(&self, name: &str) -> anyhow::Result<Vec<f64>> {
        let idx = self
            .header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| anyhow::anyhow!("no column {name:?}; available: {}", self.header.join(", ")))?;
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row[idx]
                    .parse()
                    .map_err(|_| anyhow::anyhow!("row {}: non-numeric value {:?} in column {name}", i + 2, row[idx]))
            })
            .collect()
    }

    fn paired(&self, a: &str, b: &str) -> anyhow::Result<PairedSamples> {
        let ca = self.column(a)?;
        let cb = self.column(b)?;
        Ok(PairedSamples::new(ca.into_iter().zip(cb).collect())?)
    }

    fn matrix(&self, labels: &[String]) -> anyhow::Result<Vec<Vec<f64>>> {
        let cols: Vec<Vec<f64>> = labels.iter().map(|l| self.column(l)).collect::<anyhow::Result<_>>()?;
        Ok((0..self.rows.len())
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect())
    }
}
