//! Seeded sweeps over `n`, CSV records, and log-log exponent fits.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::analysis::{to_f64, Rational};
use crate::embed::EmbedOptions;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::process::{check_budget, run_process_with, ProcessOptions, DEFAULT_MEM_BUDGET};
use crate::rng::trial_seed;

pub const CSV_HEADER: &str = "pattern,n,seed,accepted_edges,max_codegree,runtime_ms";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    pub pattern: String,
    pub n: u32,
    pub seed: u64,
    pub accepted_edges: usize,
    pub max_codegree: usize,
    pub runtime_ms: u64,
}

impl SweepRecord {
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.pattern,
            self.n,
            self.seed,
            self.accepted_edges,
            self.max_codegree,
            self.runtime_ms
        )
    }

    pub fn parse_csv_row(line: &str, lineno: usize) -> Result<SweepRecord> {
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 6 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected 6 fields, found {}", fields.len()),
            });
        }
        fn num<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T> {
            s.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad {what} '{s}'"),
            })
        }
        Ok(SweepRecord {
            pattern: fields[0].to_string(),
            n: num(fields[1], lineno, "n")?,
            seed: num(fields[2], lineno, "seed")?,
            accepted_edges: num(fields[3], lineno, "accepted_edges")?,
            max_codegree: num(fields[4], lineno, "max_codegree")?,
            runtime_ms: num(fields[5], lineno, "runtime_ms")?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepFailure {
    pub n: u32,
    pub seed: u64,
    pub error: String,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutput {
    /// Sorted by `(n, seed)`.
    pub records: Vec<SweepRecord>,
    pub failures: Vec<SweepFailure>,
}

impl SweepOutput {
    pub fn to_csv(&self) -> String {
        records_to_csv(&self.records)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub p_stop: f64,
    pub mem_budget: u64,
    pub embed: EmbedOptions,
    /// Worker threads; 0 uses the global rayon pool.
    pub threads: usize,
    /// Wall-clock times are written only when set, so the default CSV is reproducible.
    pub record_timing: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            p_stop: 1.0,
            mem_budget: DEFAULT_MEM_BUDGET,
            embed: EmbedOptions::default(),
            threads: 0,
            record_timing: false,
        }
    }
}

pub fn records_to_csv(records: &[SweepRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.to_csv_row());
        out.push('\n');
    }
    out
}

pub fn parse_csv(text: &str) -> Result<Vec<SweepRecord>> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, header)) if header.trim() == CSV_HEADER => {}
        Some((i, _)) => {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("expected header '{CSV_HEADER}'"),
            })
        }
        None => return Ok(Vec::new()),
    }
    lines
        .map(|(i, l)| SweepRecord::parse_csv_row(l, i + 1))
        .collect()
}

pub fn sweep(
    pattern: &Pattern,
    n_list: &[u32],
    trials: usize,
    base_seed: u64,
    options: SweepOptions,
) -> Result<SweepOutput> {
    sweep_with(pattern, n_list, trials, base_seed, options, |_| {})
}

/// Like [`sweep`], calling `on_record` as each run finishes (in completion order).
pub fn sweep_with<C>(
    pattern: &Pattern,
    n_list: &[u32],
    trials: usize,
    base_seed: u64,
    options: SweepOptions,
    on_record: C,
) -> Result<SweepOutput>
where
    C: Fn(&SweepRecord) + Sync,
{
    for &n in n_list {
        check_budget(n, pattern.k(), options.mem_budget)?;
    }
    let jobs: Vec<(u32, u64)> = n_list
        .iter()
        .flat_map(|&n| (0..trials as u64).map(move |t| (n, trial_seed(base_seed, t))))
        .collect();
    let run = |&(n, seed): &(u32, u64)| {
        let start = Instant::now();
        let result = run_process_with(
            n,
            pattern,
            seed,
            ProcessOptions {
                p_stop: options.p_stop,
                mem_budget: options.mem_budget,
                embed: options.embed,
            },
        );
        match result {
            Ok(r) => {
                let record = SweepRecord {
                    pattern: pattern.name().to_string(),
                    n,
                    seed,
                    accepted_edges: r.accepted,
                    max_codegree: r.max_codegree,
                    runtime_ms: if options.record_timing {
                        start.elapsed().as_millis() as u64
                    } else {
                        0
                    },
                };
                on_record(&record);
                Ok(record)
            }
            Err(e) => Err(SweepFailure {
                n,
                seed,
                error: e.to_string(),
            }),
        }
    };
    let results: Vec<std::result::Result<SweepRecord, SweepFailure>> = if options.threads == 0 {
        jobs.par_iter().map(run).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::Dimensions(format!("thread pool: {e}")))?
            .install(|| jobs.par_iter().map(run).collect())
    };
    let mut out = SweepOutput::default();
    for r in results {
        match r {
            Ok(rec) => out.records.push(rec),
            Err(f) => out.failures.push(f),
        }
    }
    out.records.sort_by_key(|r| (r.n, r.seed));
    out.failures.sort_by_key(|f| (f.n, f.seed));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Edges,
    Codegree,
}

impl Quantity {
    fn of(self, r: &SweepRecord) -> f64 {
        match self {
            Quantity::Edges => r.accepted_edges as f64,
            Quantity::Codegree => r.max_codegree as f64,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Edges => "edges",
            Quantity::Codegree => "codegree",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Aggregate {
    #[default]
    Mean,
    Median,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerN {
    pub n: u32,
    pub trials: usize,
    pub mean: f64,
    pub median: f64,
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub quantity: Quantity,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub n_values: Vec<u32>,
    pub trials_per_n: Vec<usize>,
    pub per_n: Vec<PerN>,
    pub predicted_slope: Option<Rational>,
    pub deviation: Option<f64>,
}

impl FitResult {
    pub fn to_record(&self) -> String {
        let mut s = format!(
            "quantity={} slope={:.6} intercept={:.6} r2={:.6} n_values={}",
            self.quantity.as_str(),
            self.slope,
            self.intercept,
            self.r_squared,
            self.n_values.len()
        );
        if let (Some(p), Some(d)) = (self.predicted_slope, self.deviation) {
            write!(
                s,
                " predicted={} deviation={:+.6}",
                crate::analysis::fmt_rational(&p),
                d
            )
            .unwrap();
        }
        s
    }
}

/// Per-`n` summaries in ascending `n`.
pub fn summarize(records: &[SweepRecord], quantity: Quantity) -> Vec<PerN> {
    let mut groups: BTreeMap<u32, Vec<f64>> = BTreeMap::new();
    for r in records {
        groups.entry(r.n).or_default().push(quantity.of(r));
    }
    groups
        .into_iter()
        .map(|(n, mut ys)| {
            // sorting first makes the sums independent of record order
            ys.sort_by(f64::total_cmp);
            let m = ys.len() as f64;
            let mean = ys.iter().sum::<f64>() / m;
            let median = if ys.len() % 2 == 1 {
                ys[ys.len() / 2]
            } else {
                (ys[ys.len() / 2 - 1] + ys[ys.len() / 2]) / 2.0
            };
            let std = if ys.len() > 1 {
                (ys.iter().map(|y| (y - mean).powi(2)).sum::<f64>() / (m - 1.0)).sqrt()
            } else {
                0.0
            };
            PerN {
                n,
                trials: ys.len(),
                mean,
                median,
                std,
            }
        })
        .collect()
}

/// Ordinary least squares of `ln y` on `ln n`, one point per distinct `n`.
pub fn fit(
    records: &[SweepRecord],
    quantity: Quantity,
    aggregate: Aggregate,
    predicted: Option<Rational>,
) -> Result<FitResult> {
    let per_n = summarize(records, quantity);
    if per_n.len() < 3 {
        return Err(Error::DegenerateFit(format!(
            "need at least 3 distinct n, found {}",
            per_n.len()
        )));
    }
    let mut xs = Vec::with_capacity(per_n.len());
    let mut ys = Vec::with_capacity(per_n.len());
    for g in &per_n {
        let y = match aggregate {
            Aggregate::Mean => g.mean,
            Aggregate::Median => g.median,
        };
        if y <= 0.0 || g.n == 0 {
            return Err(Error::DegenerateFit(format!(
                "non-positive {} at n={}",
                quantity.as_str(),
                g.n
            )));
        }
        xs.push(f64::from(g.n).ln());
        ys.push(y.ln());
    }
    let (slope, intercept, r_squared) = ols(&xs, &ys)?;
    Ok(FitResult {
        quantity,
        slope,
        intercept,
        r_squared,
        n_values: per_n.iter().map(|g| g.n).collect(),
        trials_per_n: per_n.iter().map(|g| g.trials).collect(),
        deviation: predicted.map(|p| slope - to_f64(&p)),
        predicted_slope: predicted,
        per_n,
    })
}

pub fn ols(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx <= f64::EPSILON * m {
        return Err(Error::DegenerateFit("all n values are equal".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy / (sxx * syy)).clamp(0.0, 1.0)
    };
    Ok((slope, intercept, r_squared))
}

/// Coefficients `(a, b, c)` of `ln y = a ln n + b ln ln n + c` on per-`n` means.
pub fn fit_with_log_term(records: &[SweepRecord], quantity: Quantity) -> Result<(f64, f64, f64)> {
    let per_n = summarize(records, quantity);
    if per_n.len() < 4 {
        return Err(Error::DegenerateFit(
            "two-term fit needs at least 4 distinct n".into(),
        ));
    }
    if per_n.iter().any(|g| g.n < 3 || g.mean <= 0.0) {
        return Err(Error::DegenerateFit(
            "two-term fit needs n >= 3 and positive means".into(),
        ));
    }
    let rows = per_n.len();
    let design = DMatrix::from_fn(rows, 3, |i, j| {
        let ln = f64::from(per_n[i].n).ln();
        match j {
            0 => ln,
            1 => ln.ln(),
            _ => 1.0,
        }
    });
    let target = DVector::from_iterator(rows, per_n.iter().map(|g| g.mean.ln()));
    let coef = design
        .svd(true, true)
        .solve(&target, 1e-12)
        .map_err(|e| Error::DegenerateFit(e.to_string()))?;
    Ok((coef[0], coef[1], coef[2]))
}

/// A log-log scatter of per-`n` means with the fitted line, as standalone SVG.
pub fn fit_svg(fit: &FitResult, title: &str) -> String {
    const W: f64 = 480.0;
    const H: f64 = 360.0;
    const PAD: f64 = 48.0;
    let pts: Vec<(f64, f64)> = fit
        .per_n
        .iter()
        .map(|g| (f64::from(g.n).ln(), g.mean.max(f64::MIN_POSITIVE).ln()))
        .collect();
    let (x0, x1) = bounds(pts.iter().map(|p| p.0));
    let line_y = |x: f64| fit.slope * x + fit.intercept;
    let (y0, y1) = bounds(pts.iter().map(|p| p.1).chain([line_y(x0), line_y(x1)]));
    let sx = |x: f64| PAD + (x - x0) / (x1 - x0).max(1e-12) * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y - y0) / (y1 - y0).max(1e-12) * (H - 2.0 * PAD);
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r#"<text x="{PAD}" y="24" font-family="sans-serif" font-size="14">{} (slope {:.3})</text>"#,
        xml_escape(title),
        fit.slope
    )
    .unwrap();
    writeln!(
        s,
        r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="steelblue" stroke-width="2"/>"#,
        sx(x0),
        sy(line_y(x0)),
        sx(x1),
        sy(line_y(x1))
    )
    .unwrap();
    for (x, y) in &pts {
        writeln!(
            s,
            r#"<circle cx="{:.1}" cy="{:.1}" r="4" fill="black"/>"#,
            sx(*x),
            sy(*y)
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12">ln n</text>"#,
        W / 2.0,
        H - 12.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="8" y="{:.1}" font-family="sans-serif" font-size="12">ln {}</text>"#,
        H / 2.0,
        fit.quantity.as_str()
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
