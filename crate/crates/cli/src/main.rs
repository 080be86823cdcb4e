use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperfree::analysis::{fmt_rational, to_f64};
use hyperfree::gnp::{self, DEFAULT_CLUSTER_BUDGET};
use hyperfree::harness::{self, fit_svg, fit_with_log_term, parse_csv, SweepOptions};
use hyperfree::process::{
    run_process_with, verify_f_free, verify_maximal, ProcessOptions, DEFAULT_MEM_BUDGET,
};
use hyperfree::{
    analyze, builtin, predicted_exponents, select_root, Aggregate, EmbedOptions, Pattern, Quantity,
    RootedPattern,
};

#[derive(Parser)]
#[command(
    name = "hyperfree",
    version,
    about = "Random greedy F-free hypergraph process"
)]
struct Cli {
    /// Base random seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Memory budget in bytes for a birth order.
    #[arg(long, global = true, default_value_t = DEFAULT_MEM_BUDGET)]
    mem_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Densities, balance and predicted exponents of a pattern.
    Analyze {
        #[command(flatten)]
        pattern: PatternArg,
        /// Print only the key=value record line.
        #[arg(long)]
        record: bool,
    },
    /// Run the greedy process once.
    Run {
        #[command(flatten)]
        pattern: PatternArg,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1.0)]
        p_stop: f64,
        /// Write the trajectory CSV here.
        #[arg(long)]
        trajectory: Option<PathBuf>,
        /// Write the final hypergraph here.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Check F-freeness (and maximality at p_stop = 1) by full search.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        prune: bool,
    },
    /// Sample H(n,p) and its pattern-free reduction.
    Gnp {
        #[command(flatten)]
        pattern: PatternArg,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        prob: ProbArg,
        #[arg(long)]
        dump_base: Option<PathBuf>,
        #[arg(long)]
        dump_reduced: Option<PathBuf>,
    },
    /// Cluster report for each edge of a sampled H(n,p).
    Clusters {
        #[command(flatten)]
        pattern: PatternArg,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        prob: ProbArg,
        /// Cluster size to search for.
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_CLUSTER_BUDGET)]
        budget: u64,
        /// Report at most this many edges.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Repeated runs over a list of n, written as CSV.
    Sweep {
        #[command(flatten)]
        pattern: PatternArg,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<u32>,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 1.0)]
        p_stop: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall-clock runtime (makes the CSV non-reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        prune: bool,
    },
    /// Log-log least-squares fit of a sweep CSV.
    Fit {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = QuantityArg::Edges)]
        quantity: QuantityArg,
        #[arg(long)]
        median: bool,
        /// Compare the slope against this pattern's predicted exponent.
        #[arg(long)]
        pattern: Option<String>,
        /// Also fit ln y = a ln n + b ln ln n + c.
        #[arg(long)]
        two_term: bool,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PatternArg {
    /// Builtin name (e.g. triangle, k4-3, cycle:2:4:3) or a pattern file.
    #[arg(long)]
    pattern: String,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ProbArg {
    /// Edge probability.
    #[arg(long)]
    p: Option<f64>,
    /// Use the default p with this constant.
    #[arg(long)]
    c2: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantityArg {
    Edges,
    Codegree,
}

fn load_pattern(spec: &str) -> Result<Pattern> {
    if Path::new(spec).is_file() {
        return Pattern::load(spec).with_context(|| format!("reading pattern {spec}"));
    }
    Ok(builtin(spec.strip_prefix("builtin:").unwrap_or(spec))?)
}

fn resolve_p(n: u32, pattern: &Pattern, prob: &ProbArg) -> Result<f64> {
    match (prob.p, prob.c2) {
        (Some(p), _) => Ok(p),
        (None, Some(c2)) => {
            let c = gnp::default_p(n, &analyze(pattern)?, c2)?;
            if c.clamped {
                eprintln!("note: default p clamped to 1");
            }
            Ok(c.value)
        }
        (None, None) => bail!("one of --p or --c2 is required"),
    }
}

fn embed_options(prune: bool) -> EmbedOptions {
    EmbedOptions {
        prune_automorphisms: prune,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn execute(cli: Cli) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze { pattern, record } => {
            let p = load_pattern(&pattern.pattern)?;
            let profile = analyze(&p)?;
            if record {
                writeln!(out, "{}", profile.to_record())?;
                return Ok(());
            }
            write!(out, "{profile}")?;
            for reason in predicted_exponents(&profile).reasons {
                writeln!(out, "caveat             {reason}")?;
            }
            if let Ok(rp) = select_root(&p) {
                write_root(&mut out, &rp)?;
            }
            writeln!(out, "{}", profile.to_record())?;
        }
        Command::Run {
            pattern,
            n,
            p_stop,
            trajectory,
            dump,
            verify,
            prune,
        } => {
            let p = load_pattern(&pattern.pattern)?;
            let r = run_process_with(
                n,
                &p,
                cli.seed,
                ProcessOptions {
                    p_stop,
                    mem_budget: cli.mem_budget,
                    embed: embed_options(prune),
                },
            )?;
            write!(
                out,
                "pattern={} n={} seed={} p_stop={} examined={} accepted={} max_codegree={}",
                r.pattern, r.n, r.seed, p_stop, r.examined, r.accepted, r.max_codegree
            )?;
            if verify {
                write!(out, " f_free={}", verify_f_free(&r.final_graph, &p))?;
                if p_stop >= 1.0 {
                    write!(out, " maximal={}", verify_maximal(&r.final_graph, &p))?;
                }
            }
            writeln!(out)?;
            if let Some(path) = trajectory {
                fs::write(&path, r.trajectory_csv()).with_context(|| path.display().to_string())?;
            }
            if let Some(path) = dump {
                fs::write(&path, r.final_graph.to_text())
                    .with_context(|| path.display().to_string())?;
            }
        }
        Command::Gnp {
            pattern,
            n,
            prob,
            dump_base,
            dump_reduced,
        } => {
            let pat = load_pattern(&pattern.pattern)?;
            let p = resolve_p(n, &pat, &prob)?;
            let s = gnp::sample_gnp(n, p, &pat, cli.seed)?;
            writeln!(
                out,
                "pattern={} n={} seed={} p={} base_edges={} reduced_edges={} removed_edges={}",
                pat.name(),
                n,
                s.seed,
                p,
                s.base.edge_count(),
                s.reduced.edge_count(),
                s.removed_edges
            )?;
            if let Some(path) = dump_base {
                fs::write(&path, s.base.to_text()).with_context(|| path.display().to_string())?;
            }
            if let Some(path) = dump_reduced {
                fs::write(&path, s.reduced.to_text())
                    .with_context(|| path.display().to_string())?;
            }
        }
        Command::Clusters {
            pattern,
            n,
            prob,
            r,
            budget,
            limit,
        } => {
            let pat = load_pattern(&pattern.pattern)?;
            let p = resolve_p(n, &pat, &prob)?;
            let s = gnp::sample_gnp(n, p, &pat, cli.seed)?;
            for e in s
                .base
                .edge_list()
                .into_iter()
                .take(limit.unwrap_or(usize::MAX))
            {
                let rep = gnp::cluster_report(&s.base, &pat, &e, r, budget)?;
                writeln!(out, "{}", rep.to_record())?;
            }
        }
        Command::Sweep {
            pattern,
            n_list,
            trials,
            p_stop,
            out: path,
            timing,
            prune,
        } => {
            let pat = load_pattern(&pattern.pattern)?;
            let options = SweepOptions {
                p_stop,
                mem_budget: cli.mem_budget,
                embed: embed_options(prune),
                threads: cli.threads,
                record_timing: timing,
            };
            let result = harness::sweep_with(&pat, &n_list, trials, cli.seed, options, |r| {
                eprintln!("{}", r.to_csv_row());
            })?;
            for f in &result.failures {
                eprintln!("failed: n={} seed={} {}", f.n, f.seed, f.error);
            }
            match path {
                Some(path) => {
                    fs::write(&path, result.to_csv()).with_context(|| path.display().to_string())?
                }
                None => out.write_all(result.to_csv().as_bytes())?,
            }
        }
        Command::Fit {
            input,
            quantity,
            median,
            pattern,
            two_term,
            svg,
        } => {
            let text = fs::read_to_string(&input).with_context(|| input.display().to_string())?;
            let records = parse_csv(&text)?;
            let quantity = match quantity {
                QuantityArg::Edges => Quantity::Edges,
                QuantityArg::Codegree => Quantity::Codegree,
            };
            let predicted = match pattern {
                Some(spec) => {
                    let e = analyze(&load_pattern(&spec)?)?.exponents;
                    Some(match quantity {
                        Quantity::Edges => e.edges_upper,
                        Quantity::Codegree => e.codegree_upper,
                    })
                }
                None => None,
            };
            let aggregate = if median {
                Aggregate::Median
            } else {
                Aggregate::Mean
            };
            let f = harness::fit(&records, quantity, aggregate, predicted)?;
            writeln!(out, "{}", f.to_record())?;
            writeln!(out, "n,trials,mean,median,std")?;
            for g in &f.per_n {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    g.n, g.trials, g.mean, g.median, g.std
                )?;
            }
            if let Some(p) = &f.predicted_slope {
                writeln!(out, "predicted {} = {:.6}", fmt_rational(p), to_f64(p))?;
            }
            if two_term {
                let (a, b, c) = fit_with_log_term(&records, quantity)?;
                writeln!(out, "two_term a={a:.6} b={b:.6} c={c:.6}")?;
            }
            if let Some(path) = svg {
                let title = records.first().map_or("fit", |r| r.pattern.as_str());
                fs::write(&path, fit_svg(&f, title)).with_context(|| path.display().to_string())?;
            }
        }
    }
    Ok(())
}

fn write_root(out: &mut impl Write, rp: &RootedPattern) -> io::Result<()> {
    let join = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    writeln!(out, "root U             {{{}}}", join(&rp.root))?;
    writeln!(
        out,
        "N_F(U)             {{{}}}",
        join(&rp.root_neighborhood)
    )?;
    writeln!(out, "rooted edges       {}", rp.base.h())
}
