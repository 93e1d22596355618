use std::path::{Path, PathBuf};

use beehive::harness::{compare_table, format_sci, summarize, ComparisonTable, Experiment};
use beehive::{run_experiment, ExperimentStats, Problem, Strategy, TerminationRule, VariantConfig};

use crate::args::{BenchArgs, Cli, Command, CompareArgs, ExperimentArgs, Format, RunArgs, Suite};
use crate::error::{CliError, CliResult};
use crate::output::{write_comparison_csv, write_json, write_stats_csv, write_trace_csv, Sink};
use crate::settings::{parse_variant, FileConfig, ProblemRef, Settings};

/// Budget used for the engineering problems by `bench`.
pub const ENGINEERING_MAX_NFE: u64 = 240_000;

/// Variants in the comparison tables, featured one last.
pub const TABLE_VARIANTS: [Strategy; 4] = [
    Strategy::Basic,
    Strategy::Sac,
    Strategy::Sac1,
    Strategy::Sac2,
];

pub fn dispatch(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Run(a) => cmd_run(&a),
        Command::Compare(a) => cmd_compare(&a),
        Command::Bench(a) => cmd_bench(&a),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> CliResult<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {n} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn load_file(args: &ExperimentArgs) -> CliResult<FileConfig> {
    match &args.config {
        Some(p) => FileConfig::load(p),
        None => Ok(FileConfig::default()),
    }
}

fn experiment(
    problem: &Problem,
    config: &VariantConfig,
    term: &TerminationRule,
    settings: &Settings,
) -> CliResult<Experiment> {
    let mut e = run_experiment(problem, config, term, settings.runs, settings.seed)?;
    e.stats = summarize(problem, config.strategy.name(), &e.results, settings.sd)?;
    Ok(e)
}

fn summary_line(s: &ExperimentStats) -> String {
    format!(
        "{} D={} {}: best {} mean {} sd {} nfe {}",
        s.problem,
        s.dim,
        s.variant,
        format_sci(s.best),
        format_sci(s.mean),
        format_sci(s.sd),
        format_sci(s.mean_nfe)
    )
}

fn write_stats(path: Option<&Path>, format: Format, stats: &[ExperimentStats]) -> CliResult<()> {
    let sink = Sink::open(path)?;
    match format {
        Format::Csv => write_stats_csv(sink, stats),
        Format::Json => write_json(sink, &stats),
    }
}

fn write_comparison(path: Option<&Path>, format: Format, table: &ComparisonTable) -> CliResult<()> {
    let sink = Sink::open(path)?;
    match format {
        Format::Csv => write_comparison_csv(sink, table),
        Format::Json => write_json(sink, table),
    }
}

pub fn trace_file_name(stats: &ExperimentStats, seed: u64, format: Format) -> String {
    let ext = match format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    format!(
        "{}_d{}_{}_seed{}.{ext}",
        stats.problem, stats.dim, stats.variant, seed
    )
}

fn write_traces(dir: &Path, format: Format, e: &Experiment) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|err| CliError::io(dir, err))?;
    for r in &e.results {
        let path = dir.join(trace_file_name(&e.stats, r.seed, format));
        let sink = Sink::open(Some(&path))?;
        match format {
            Format::Csv => write_trace_csv(sink, r)?,
            Format::Json => write_json(sink, &r.trace)?,
        }
    }
    Ok(())
}

pub fn cmd_run(a: &RunArgs) -> CliResult<()> {
    let file = load_file(&a.experiment)?;
    let settings = Settings::resolve(&a.experiment, &file)?;
    let name = a
        .problem
        .clone()
        .or(file.problem.clone())
        .ok_or_else(|| CliError::Usage("--problem is required".into()))?;
    let problem = ProblemRef {
        name,
        dim: a.dim.or(file.dim),
        atoms: a.atoms.or(file.atoms),
    }
    .build()?;
    let variant = a
        .variant
        .clone()
        .or(file.variant.clone())
        .unwrap_or_else(|| "basic".into());
    let config = settings.variant_config(parse_variant(&variant)?)?;
    let term = settings.termination(&problem);

    let e = with_jobs(a.experiment.jobs, || {
        experiment(&problem, &config, &term, &settings)
    })??;
    write_stats(a.out.as_deref(), a.format, std::slice::from_ref(&e.stats))?;
    if let Some(dir) = &a.traces_dir {
        write_traces(dir, a.format, &e)?;
    }
    if a.out.is_some() {
        println!("{}", summary_line(&e.stats));
    }
    Ok(())
}

/// Every (problem, variant) experiment, problems outermost.
fn grid(
    problems: &[Problem],
    variants: &[Strategy],
    settings_for: impl Fn(&Problem) -> Settings,
) -> CliResult<Vec<ExperimentStats>> {
    let mut out = Vec::with_capacity(problems.len() * variants.len());
    for p in problems {
        let settings = settings_for(p);
        let term = settings.termination(p);
        for &v in variants {
            let config = settings.variant_config(v)?;
            let e = experiment(p, &config, &term, &settings)?;
            eprintln!("{}", summary_line(&e.stats));
            out.push(e.stats);
        }
    }
    Ok(out)
}

pub fn cmd_compare(a: &CompareArgs) -> CliResult<()> {
    let file = load_file(&a.experiment)?;
    let settings = Settings::resolve(&a.experiment, &file)?;
    let problems = a
        .problems
        .iter()
        .map(|t| ProblemRef::parse(t)?.build())
        .collect::<CliResult<Vec<_>>>()?;
    let mut variants = Vec::new();
    for v in &a.variants {
        let s = parse_variant(v)?;
        if !variants.contains(&s) {
            variants.push(s);
        }
    }
    if variants.len() < 2 {
        return Err(CliError::Usage(
            "compare needs at least two distinct variants".into(),
        ));
    }
    let baseline = parse_variant(&a.baseline)?;
    if !variants.contains(&baseline) {
        return Err(CliError::Usage(format!(
            "baseline `{}` is not among the compared variants",
            a.baseline
        )));
    }
    let stats = with_jobs(a.experiment.jobs, || {
        grid(&problems, &variants, |_| settings.clone())
    })??;
    let table = compare_table(&stats, baseline.name())?;
    if let Some(p) = &a.stats_out {
        write_stats(Some(p), a.format, &stats)?;
    }
    write_comparison(a.out.as_deref(), a.format, &table)
}

/// Problems of a suite at the sizes the bench command covers.
pub fn suite_problems(suite: Suite) -> CliResult<Vec<Problem>> {
    let refs: Vec<&str> = match suite {
        Suite::Benchmarks => vec![
            "sphere:30",
            "sphere:60",
            "griewank:30",
            "griewank:60",
            "ackley:30",
            "ackley:60",
            "rastrigin:30",
            "rastrigin:60",
            "schaffer:2",
            "schaffer:3",
        ],
        Suite::Engineering => vec![
            "gas_production",
            "air_heater",
            "gear_train",
            "lennard_jones",
            "gas_compressor",
        ],
        Suite::All => {
            let mut v = suite_problems(Suite::Benchmarks)?;
            v.extend(suite_problems(Suite::Engineering)?);
            return Ok(v);
        }
    };
    refs.into_iter()
        .map(|r| ProblemRef::parse(r)?.build())
        .collect()
}

fn bench_one(a: &BenchArgs, suite: Suite, dir: &Path) -> CliResult<()> {
    let problems = suite_problems(suite)?;
    let budget = a.max_nfe.unwrap_or(match suite {
        Suite::Engineering => ENGINEERING_MAX_NFE,
        _ => crate::settings::DEFAULT_MAX_NFE,
    });
    let base = Settings::resolve(
        &ExperimentArgs {
            runs: Some(a.runs),
            seed: Some(a.seed),
            max_nfe: Some(budget),
            ..ExperimentArgs::default()
        },
        &FileConfig::default(),
    )?;
    let stats = grid(&problems, &Strategy::ALL, |_| base.clone())?;
    let table_stats: Vec<ExperimentStats> = stats
        .iter()
        .filter(|s| TABLE_VARIANTS.iter().any(|v| v.name() == s.variant))
        .cloned()
        .collect();
    let table = compare_table(&table_stats, Strategy::Sac2.name())?;
    let stem = match suite {
        Suite::Benchmarks => "benchmarks",
        _ => "engineering",
    };
    let path = |suffix: &str| -> PathBuf { dir.join(format!("{stem}_{suffix}")) };
    write_stats(Some(&path("stats.csv")), Format::Csv, &stats)?;
    write_stats(Some(&path("stats.json")), Format::Json, &stats)?;
    write_comparison(Some(&path("comparison.csv")), Format::Csv, &table)?;
    write_comparison(Some(&path("comparison.json")), Format::Json, &table)
}

pub fn cmd_bench(a: &BenchArgs) -> CliResult<()> {
    if a.runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".into()));
    }
    std::fs::create_dir_all(&a.out_dir).map_err(|e| CliError::io(&a.out_dir, e))?;
    let suites: &[Suite] = match a.suite {
        Suite::All => &[Suite::Benchmarks, Suite::Engineering],
        Suite::Benchmarks => &[Suite::Benchmarks],
        Suite::Engineering => &[Suite::Engineering],
    };
    with_jobs(a.jobs, || {
        suites.iter().try_for_each(|&s| bench_one(a, s, &a.out_dir))
    })?
}
