//! The binomial hypergraph `H_{n,p}` and its pattern-free reduction `H_{n,p}⁻`,
//! both read off the same birth order as the greedy process, together with the
//! cluster and rooted-extension measurements made on them.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::analysis::{PatternProfile, RootedPattern};
use crate::combinatorics::Ranker;
use crate::embed::{distinct_extension_copies, enumerate_rooted_extensions, Embedder};
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph};
use crate::pattern::Pattern;
use crate::process::BirthOrder;

/// `H_{n,p}` and `H_{n,p}⁻` from one seed.
#[derive(Debug, Clone)]
pub struct GnpSample {
    pub base: Hypergraph,
    pub reduced: Hypergraph,
    pub p: f64,
    pub seed: u64,
    pub removed_edges: usize,
    /// For each removed edge rank, the edge ranks of one copy through it.
    pub certificates: Vec<(u64, Vec<u64>)>,
}

/// Edges of `order` born by time `p`.
pub fn binomial_prefix(order: &BirthOrder, p: f64) -> Result<Hypergraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Probability(p));
    }
    let ranker = Ranker::new(order.n(), order.k())?;
    let mut host = Hypergraph::new(order.n(), order.k())?;
    let mut edge = vec![0u32; order.k()];
    for &rank in &order.permutation()[..order.prefix_len(p)] {
        ranker.unrank_into(rank, &mut edge);
        host.insert_unchecked(&edge, rank);
    }
    Ok(host)
}

/// Deletes every edge of `base` lying in some copy of `pattern` within `base`.
///
/// Deleting edges creates no new copies, so one pass over `base` suffices.
pub fn reduce(base: &Hypergraph, pattern: &Pattern) -> (Hypergraph, Vec<(u64, Vec<u64>)>) {
    let embedder = Embedder::new(pattern);
    let mut reduced = Hypergraph::new(base.n(), base.k()).expect("same dimensions as base");
    let mut certificates = Vec::new();
    for (e, &rank) in base.edges().zip(base.edge_ranks()) {
        let mut witness = None;
        let _ = embedder.for_each_anchored(base, e, |map| {
            witness = Some(embedder.image_ranks(base, map));
            ControlFlow::Break(())
        });
        match witness {
            Some(copy) => certificates.push((rank, copy)),
            None => reduced.insert_unchecked(e, rank),
        }
    }
    (reduced, certificates)
}

pub fn sample_gnp(n: u32, p: f64, pattern: &Pattern, seed: u64) -> Result<GnpSample> {
    let order = BirthOrder::new(seed, n, pattern.k())?;
    sample_from_order(&order, p, pattern)
}

pub fn sample_from_order(order: &BirthOrder, p: f64, pattern: &Pattern) -> Result<GnpSample> {
    if order.k() != pattern.k() {
        return Err(Error::Dimensions(
            "birth order and pattern uniformity differ".into(),
        ));
    }
    let base = binomial_prefix(order, p)?;
    let (reduced, certificates) = reduce(&base, pattern);
    Ok(GnpSample {
        removed_edges: certificates.len(),
        base,
        reduced,
        p,
        seed: order.seed(),
        certificates,
    })
}

/// A floating-point parameter, possibly clamped into `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Clamped {
    pub value: f64,
    pub clamped: bool,
}

fn require_applicable(n: u32, profile: &PatternProfile) -> Result<()> {
    if !profile.theorem_applicable {
        return Err(Error::NotApplicable(format!(
            "pattern {} fails the theorem hypotheses",
            profile.name
        )));
    }
    if n < 3 {
        return Err(Error::Dimensions("need n >= 3 so that ln n > 1".into()));
    }
    Ok(())
}

/// `p = 1 / (c₂ (n^{v-k} ln n)^{1/(h-1)})`, clamped to at most 1.
pub fn default_p(n: u32, profile: &PatternProfile, c2: f64) -> Result<Clamped> {
    require_applicable(n, profile)?;
    if c2 <= 0.0 || !c2.is_finite() {
        return Err(Error::Dimensions(format!("c2 must be positive, got {c2}")));
    }
    let nf = f64::from(n);
    let exponent = 1.0 / (profile.h as f64 - 1.0);
    let inner = nf.powi(profile.v as i32 - profile.k as i32) * nf.ln();
    let p = 1.0 / (c2 * inner.powf(exponent));
    Ok(if p > 1.0 {
        Clamped {
            value: 1.0,
            clamped: true,
        }
    } else {
        Clamped {
            value: p,
            clamped: false,
        }
    })
}

/// `t = c₁ n p (ln n)^{3/(d-1)}` with `p = default_p(n, profile, c₂)`.
pub fn default_t(n: u32, profile: &PatternProfile, c1: f64, c2: f64) -> Result<f64> {
    if profile.codeg < 2 {
        return Err(Error::NotApplicable(
            "t needs maximum co-degree d >= 2".into(),
        ));
    }
    let p = default_p(n, profile, c2)?.value;
    let nf = f64::from(n);
    Ok(c1 * nf * p * nf.ln().powf(3.0 / (profile.codeg as f64 - 1.0)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterReport {
    pub f: Vec<u32>,
    /// `Z_{1,f}`
    pub copies_through_f: usize,
    pub max_cluster_found: usize,
    /// Copy indices (into the sorted copy list) of the largest cluster found, in order.
    pub witness: Vec<usize>,
    pub copies: Vec<Vec<u64>>,
    pub budget_exhausted: bool,
}

impl ClusterReport {
    pub fn to_record(&self) -> String {
        let f: Vec<String> = self.f.iter().map(u32::to_string).collect();
        format!(
            "f={} z1={} max_cluster={} exact={}",
            f.join("-"),
            self.copies_through_f,
            self.max_cluster_found,
            !self.budget_exhausted
        )
    }
}

pub const DEFAULT_CLUSTER_BUDGET: u64 = 1_000_000;

/// Whether `copies[order]` is an (r, f)-cluster: each copy after the first has
/// an edge absent from every earlier copy.
pub fn is_cluster(copies: &[Vec<u64>], order: &[usize]) -> bool {
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for (i, &c) in order.iter().enumerate() {
        if i > 0 && copies[c].iter().all(|e| seen.contains(e)) {
            return false;
        }
        if order[..i].contains(&c) {
            return false;
        }
        seen.extend(copies[c].iter().copied());
    }
    true
}

struct ClusterSearch<'a> {
    copies: &'a [Vec<u64>],
    target: usize,
    budget: u64,
    states: u64,
    exhausted: bool,
    best: Vec<usize>,
}

impl ClusterSearch<'_> {
    fn grow(&mut self, chain: &mut Vec<usize>, union: &mut BTreeSet<u64>, used: &mut [bool]) {
        if chain.len() > self.best.len() {
            self.best = chain.clone();
        }
        if self.best.len() >= self.target {
            return;
        }
        let mut candidates: Vec<(usize, usize)> = (0..self.copies.len())
            .filter(|&c| !used[c])
            .map(|c| {
                (
                    self.copies[c].iter().filter(|e| !union.contains(e)).count(),
                    c,
                )
            })
            .filter(|&(fresh, _)| fresh > 0 || chain.is_empty())
            .collect();
        if chain.len() + candidates.len() <= self.best.len() {
            return;
        }
        // fewest new edges first keeps the union small
        candidates.sort_unstable();
        for (_, c) in candidates {
            if self.states >= self.budget {
                self.exhausted = true;
                return;
            }
            self.states += 1;
            let added: Vec<u64> = self.copies[c]
                .iter()
                .copied()
                .filter(|e| union.insert(*e))
                .collect();
            used[c] = true;
            chain.push(c);
            self.grow(chain, union, used);
            chain.pop();
            used[c] = false;
            for e in added {
                union.remove(&e);
            }
            if self.best.len() >= self.target || self.exhausted {
                return;
            }
        }
    }
}

/// Counts copies through `f` and searches for an `(r_target, f)`-cluster among them.
pub fn cluster_report(
    h: &Hypergraph,
    pattern: &Pattern,
    f: &Edge,
    r_target: usize,
    budget: u64,
) -> Result<ClusterReport> {
    if !h.contains(f) {
        return Err(Error::MissingEdge(f.vertices().to_vec()));
    }
    let copies = Embedder::new(pattern).copies_containing(h, f.vertices());
    let mut search = ClusterSearch {
        copies: &copies,
        target: r_target,
        budget,
        states: 0,
        exhausted: false,
        best: Vec::new(),
    };
    search.grow(
        &mut Vec::new(),
        &mut BTreeSet::new(),
        &mut vec![false; copies.len()],
    );
    let (witness, exhausted) = (search.best, search.exhausted);
    Ok(ClusterReport {
        f: f.vertices().to_vec(),
        copies_through_f: copies.len(),
        max_cluster_found: witness.len(),
        witness,
        copies,
        budget_exhausted: exhausted,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionCounts {
    /// `X`: distinct copies of `F̂` in `H_{n,p}`.
    pub x: usize,
    /// `X⁻`: distinct copies in `H_{n,p}⁻`.
    pub x_minus: usize,
    pub x_labeled: usize,
    pub x_minus_labeled: usize,
}

pub fn count_extensions(
    sample: &GnpSample,
    rp: &RootedPattern,
    roots: &[u32],
    target: &[u32],
) -> Result<ExtensionCounts> {
    let full = enumerate_rooted_extensions(&sample.base, rp, roots, target)?;
    let reduced = enumerate_rooted_extensions(&sample.reduced, rp, roots, target)?;
    Ok(ExtensionCounts {
        x: distinct_extension_copies(&sample.base, rp, &full),
        x_minus: distinct_extension_copies(&sample.reduced, rp, &reduced),
        x_labeled: full.len(),
        x_minus_labeled: reduced.len(),
    })
}
