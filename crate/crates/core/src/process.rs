//! The random greedy F-free process driven by a seeded birth order.

use std::fmt::Write as _;

use crate::combinatorics::{binomial, Ranker};
use crate::embed::{EmbedOptions, Embedder};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::pattern::Pattern;
use crate::rng;

pub const DEFAULT_MEM_BUDGET: u64 = 2 << 30;

/// `C(n, k)` and the bytes a run over `K_n^k` needs (rank array plus presence bitmap).
pub fn memory_estimate(n: u32, k: usize) -> Result<(u64, u64)> {
    let edges = binomial(u64::from(n), k as u64)
        .ok_or_else(|| Error::Dimensions(format!("C({n},{k}) overflows")))?;
    let bytes = edges.saturating_mul(8).saturating_add(edges / 8);
    Ok((edges, bytes))
}

pub fn check_budget(n: u32, k: usize, budget: u64) -> Result<u64> {
    let (edges, needed) = memory_estimate(n, k)?;
    if needed > budget {
        return Err(Error::MemoryBudget {
            edges,
            needed,
            budget,
        });
    }
    Ok(edges)
}

/// A uniformly random ordering of the edge ranks of `K_n^k`, fixed by `(seed, n, k)`.
///
/// The edge at position `j` has nominal birthtime `(j+1)/C(n,k)`; the prefix born
/// by time `p` is the binomial hypergraph `H_{n,p}`.
#[derive(Debug, Clone)]
pub struct BirthOrder {
    seed: u64,
    n: u32,
    k: usize,
    permutation: Vec<u64>,
}

impl BirthOrder {
    pub fn new(seed: u64, n: u32, k: usize) -> Result<BirthOrder> {
        BirthOrder::with_budget(seed, n, k, DEFAULT_MEM_BUDGET)
    }

    pub fn with_budget(seed: u64, n: u32, k: usize, budget: u64) -> Result<BirthOrder> {
        let edges = check_budget(n, k, budget)?;
        let mut permutation: Vec<u64> = (0..edges).collect();
        rng::shuffle(&mut rng::stream(seed), &mut permutation);
        Ok(BirthOrder {
            seed,
            n,
            k,
            permutation,
        })
    }

    /// An explicit order; `permutation` must list every rank of `K_n^k` once.
    pub fn from_permutation(
        seed: u64,
        n: u32,
        k: usize,
        permutation: Vec<u64>,
    ) -> Result<BirthOrder> {
        let edges = check_budget(n, k, u64::MAX)?;
        let mut seen = vec![false; permutation.len()];
        let valid = permutation.len() as u64 == edges
            && permutation
                .iter()
                .all(|&r| r < edges && !std::mem::replace(&mut seen[r as usize], true));
        if !valid {
            return Err(Error::Dimensions(format!(
                "not a permutation of the {edges} edge ranks of K_{n}^{k}"
            )));
        }
        Ok(BirthOrder {
            seed,
            n,
            k,
            permutation,
        })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    pub fn permutation(&self) -> &[u64] {
        &self.permutation
    }

    /// Number of edges with nominal birthtime at most `p`: `⌊p·C(n,k)⌋`.
    pub fn prefix_len(&self, p: f64) -> usize {
        let n = self.permutation.len();
        if p >= 1.0 {
            return n;
        }
        ((p.max(0.0) * n as f64).floor() as usize).min(n)
    }

    pub fn birthtime(&self, position: usize) -> f64 {
        (position + 1) as f64 / self.permutation.len() as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrajectoryPoint {
    pub steps_examined: u64,
    pub accepted: usize,
    pub max_codegree: usize,
}

#[derive(Debug, Clone)]
pub struct ProcessResult {
    pub final_graph: Hypergraph,
    pub accepted: usize,
    pub examined: u64,
    pub max_codegree: usize,
    pub trajectory: Vec<TrajectoryPoint>,
    pub seed: u64,
    pub n: u32,
    pub pattern: String,
}

impl ProcessResult {
    /// `steps_examined,accepted,max_codegree` rows with header.
    pub fn trajectory_csv(&self) -> String {
        let mut out = String::from("steps_examined,accepted,max_codegree\n");
        for t in &self.trajectory {
            writeln!(
                out,
                "{},{},{}",
                t.steps_examined, t.accepted, t.max_codegree
            )
            .unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ProcessOptions {
    pub p_stop: f64,
    pub mem_budget: u64,
    pub embed: EmbedOptions,
}

impl Default for ProcessOptions {
    fn default() -> Self {
        ProcessOptions {
            p_stop: 1.0,
            mem_budget: DEFAULT_MEM_BUDGET,
            embed: EmbedOptions::default(),
        }
    }
}

/// Checkpoints `⌈N / 2^j⌉`, ascending and deduplicated.
fn checkpoints(total: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut j = 0;
    while j < 64 {
        let c = total.div_ceil(1u64 << j);
        if out.last() == Some(&c) {
            break;
        }
        out.push(c);
        if c <= 1 {
            break;
        }
        j += 1;
    }
    out.reverse();
    out.dedup();
    out
}

/// `R_{n,p}` for `p = p_stop`: the greedy process up to the given time.
pub fn run_process(n: u32, p_stop: f64, pattern: &Pattern, seed: u64) -> Result<ProcessResult> {
    run_process_with(
        n,
        pattern,
        seed,
        ProcessOptions {
            p_stop,
            ..ProcessOptions::default()
        },
    )
}

pub fn run_process_with(
    n: u32,
    pattern: &Pattern,
    seed: u64,
    options: ProcessOptions,
) -> Result<ProcessResult> {
    if !(options.p_stop > 0.0 && options.p_stop <= 1.0) {
        return Err(Error::Probability(options.p_stop));
    }
    let order = BirthOrder::with_budget(seed, n, pattern.k(), options.mem_budget)?;
    run_on_order(&order, pattern, options.p_stop, options.embed)
}

/// Runs the process over the first `⌊p_stop·C(n,k)⌋` edges of `order`.
pub fn run_on_order(
    order: &BirthOrder,
    pattern: &Pattern,
    p_stop: f64,
    embed: EmbedOptions,
) -> Result<ProcessResult> {
    if order.k() != pattern.k() {
        return Err(Error::Dimensions(format!(
            "birth order is {}-uniform, pattern is {}-uniform",
            order.k(),
            pattern.k()
        )));
    }
    let k = pattern.k();
    let n = order.n();
    let ranker = Ranker::new(n, k)?;
    let embedder = Embedder::with_options(pattern, embed);
    let mut host = Hypergraph::new(n, k)?;
    let limit = order.prefix_len(p_stop);
    let marks = checkpoints(order.len() as u64);
    let mut next_mark = 0;
    let mut trajectory = Vec::with_capacity(marks.len() + 1);
    let mut edge = vec![0u32; k];

    for (j, &rank) in order.permutation()[..limit].iter().enumerate() {
        ranker.unrank_into(rank, &mut edge);
        if !embedder.creates_copy_with_anchor(&host, &edge) {
            host.insert_unchecked(&edge, rank);
        }
        let examined = j as u64 + 1;
        if marks.get(next_mark) == Some(&examined) {
            trajectory.push(TrajectoryPoint {
                steps_examined: examined,
                accepted: host.edge_count(),
                max_codegree: host.max_codegree(),
            });
            next_mark += 1;
        }
    }
    let examined = limit as u64;
    if trajectory.last().map(|t| t.steps_examined) != Some(examined) {
        trajectory.push(TrajectoryPoint {
            steps_examined: examined,
            accepted: host.edge_count(),
            max_codegree: host.max_codegree(),
        });
    }
    Ok(ProcessResult {
        accepted: host.edge_count(),
        max_codegree: host.max_codegree(),
        examined,
        trajectory,
        seed: order.seed(),
        n,
        pattern: pattern.name().to_string(),
        final_graph: host,
    })
}

/// No copy of `pattern` anywhere in `h` (full unanchored search).
pub fn verify_f_free(h: &Hypergraph, pattern: &Pattern) -> bool {
    !Embedder::new(pattern).contains_copy(h)
}

/// Every non-edge of `K_n^k` would complete a copy of `pattern` together with `h`.
pub fn verify_maximal(h: &Hypergraph, pattern: &Pattern) -> bool {
    let embedder = Embedder::new(pattern);
    let mut edge = vec![0u32; h.k()];
    (0..h.rank_space()).all(|r| {
        if h.contains_rank(r) {
            return true;
        }
        h.ranker().unrank_into(r, &mut edge);
        embedder.creates_copy_with_anchor(h, &edge)
    })
}
