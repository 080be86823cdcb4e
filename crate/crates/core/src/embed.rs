//! Embedding search of a pattern into a host hypergraph.
//!
//! A copy of `F` in `H` is an injective vertex map under which every pattern
//! edge lands on a host edge (not necessarily induced). The search maps pattern
//! edges one at a time in a fixed plan order: an edge with `k-1` vertices
//! already placed draws its last vertex from the host co-degree list, an edge
//! with fewer placed vertices scans the host edges through one placed vertex
//! (or all host edges when nothing is placed yet), and a fully placed edge is a
//! membership test.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use itertools::Itertools;

use crate::analysis::RootedPattern;
use crate::error::{Error, Result};
use crate::hypergraph::{sorted_into, Edge, Hypergraph};
use crate::pattern::{Pattern, MAX_PATTERN_VERTICES};

const UNMAPPED: u32 = u32::MAX;
const MAXV: usize = MAX_PATTERN_VERTICES as usize;

/// Placement constraint on one pattern vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Domain {
    Any,
    /// Must land in the target set `T`.
    Inside,
    /// Must land outside `T`.
    Outside,
}

#[derive(Debug, Clone)]
struct Step {
    vertices: Vec<u32>,
    mapped: Vec<u32>,
    fresh: Vec<u32>,
}

/// Order in which pattern edges are matched, given the initially placed vertices.
#[derive(Debug, Clone)]
struct Plan {
    steps: Vec<Step>,
    /// Vertices placed by no step: isolated ones, matched against free host vertices.
    tail: Vec<u32>,
}

impl Plan {
    /// Greedy most-constrained order: the next edge is the one with the most
    /// placed vertices, ties to the lowest edge index.
    fn build(edges: &[Vec<u32>], v: u32, premapped: &[u32], skip: Option<usize>) -> Plan {
        let mut placed = vec![false; v as usize];
        for &x in premapped {
            placed[x as usize] = true;
        }
        let mut pending: Vec<usize> = (0..edges.len()).filter(|&i| Some(i) != skip).collect();
        let mut steps = Vec::with_capacity(pending.len());
        while !pending.is_empty() {
            let (slot, _) = pending
                .iter()
                .enumerate()
                .map(|(slot, &i)| {
                    (
                        slot,
                        edges[i].iter().filter(|&&x| placed[x as usize]).count(),
                    )
                })
                .max_by_key(|&(slot, c)| (c, std::cmp::Reverse(slot)))
                .expect("nonempty");
            let i = pending.remove(slot);
            let (mapped, fresh): (Vec<u32>, Vec<u32>) =
                edges[i].iter().partition(|&&x| placed[x as usize]);
            for &x in &fresh {
                placed[x as usize] = true;
            }
            steps.push(Step {
                vertices: edges[i].clone(),
                mapped,
                fresh,
            });
        }
        let tail = (0..v).filter(|&x| !placed[x as usize]).collect();
        Plan { steps, tail }
    }
}

struct Engine<'a, V> {
    host: &'a Hypergraph,
    plan: &'a Plan,
    domains: &'a [Domain],
    /// Sorted target set `T`.
    target: &'a [u32],
    assign: [u32; MAXV],
    v: usize,
    visit: V,
}

impl<'a, V> Engine<'a, V>
where
    V: FnMut(&[u32]) -> ControlFlow<()>,
{
    fn new(host: &'a Hypergraph, plan: &'a Plan, v: usize, visit: V) -> Self {
        Engine {
            host,
            plan,
            domains: &[],
            target: &[],
            assign: [UNMAPPED; MAXV],
            v,
            visit,
        }
    }

    #[inline]
    fn admissible(&self, pv: u32, x: u32) -> bool {
        if self.assign[..self.v].contains(&x) {
            return false;
        }
        match self
            .domains
            .get(pv as usize)
            .copied()
            .unwrap_or(Domain::Any)
        {
            Domain::Any => true,
            Domain::Inside => self.target.binary_search(&x).is_ok(),
            Domain::Outside => self.target.binary_search(&x).is_err(),
        }
    }

    fn run(&mut self, depth: usize) -> ControlFlow<()> {
        let plan = self.plan;
        let host = self.host;
        if depth == plan.steps.len() {
            return self.tail(0);
        }
        let step = &plan.steps[depth];
        let mut buf = [0u32; MAXV];
        if step.fresh.is_empty() {
            let image = sorted_into(
                step.vertices.iter().map(|&x| self.assign[x as usize]),
                &mut buf,
            );
            if host.contains_sorted(image) {
                return self.run(depth + 1);
            }
            return ControlFlow::Continue(());
        }
        if step.fresh.len() == 1 {
            let key = sorted_into(
                step.mapped.iter().map(|&x| self.assign[x as usize]),
                &mut buf,
            );
            let pv = step.fresh[0];
            for &x in host.neighbors_sorted(key) {
                if self.admissible(pv, x) {
                    self.assign[pv as usize] = x;
                    let flow = self.run(depth + 1);
                    self.assign[pv as usize] = UNMAPPED;
                    flow?;
                }
            }
            return ControlFlow::Continue(());
        }
        // Fewer than k-1 placed: scan host edges through a placed vertex.
        let images: Vec<u32> = step
            .mapped
            .iter()
            .map(|&x| self.assign[x as usize])
            .collect();
        let mut rest = [0u32; MAXV];
        let mut try_edge = |this: &mut Self, e: &[u32]| -> ControlFlow<()> {
            if !images.iter().all(|x| e.contains(x)) {
                return ControlFlow::Continue(());
            }
            let mut len = 0;
            for &x in e {
                if !images.contains(&x) {
                    rest[len] = x;
                    len += 1;
                }
            }
            this.permute(depth, &step.fresh, &mut rest[..len], 0)
        };
        match images.first() {
            Some(&pivot) => {
                for &pos in host.incident(pivot) {
                    try_edge(self, host.edge_at(pos as usize))?;
                }
            }
            None => {
                for e in host.edges() {
                    try_edge(self, e)?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn permute(
        &mut self,
        depth: usize,
        fresh: &[u32],
        rest: &mut [u32],
        i: usize,
    ) -> ControlFlow<()> {
        if i == fresh.len() {
            return self.run(depth + 1);
        }
        for j in i..rest.len() {
            rest.swap(i, j);
            let x = rest[i];
            if self.admissible(fresh[i], x) {
                self.assign[fresh[i] as usize] = x;
                let flow = self.permute(depth, fresh, rest, i + 1);
                self.assign[fresh[i] as usize] = UNMAPPED;
                if flow.is_break() {
                    rest.swap(i, j);
                    return flow;
                }
            }
            rest.swap(i, j);
        }
        ControlFlow::Continue(())
    }

    fn tail(&mut self, i: usize) -> ControlFlow<()> {
        let plan = self.plan;
        if i == plan.tail.len() {
            return (self.visit)(&self.assign[..self.v]);
        }
        let pv = plan.tail[i];
        for x in 0..self.host.n() {
            if self.admissible(pv, x) {
                self.assign[pv as usize] = x;
                let flow = self.tail(i + 1);
                self.assign[pv as usize] = UNMAPPED;
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Switches for [`Embedder`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EmbedOptions {
    /// Try only one anchor assignment per automorphism orbit in containment
    /// queries. Enumeration and counting always use every anchor.
    pub prune_automorphisms: bool,
}

#[derive(Debug, Clone)]
struct Anchor {
    edge: usize,
    /// `tuple[j]` is the pattern vertex sent to the j-th smallest vertex of the host edge.
    tuple: Vec<u32>,
}

/// A pattern compiled for repeated queries against changing hosts.
#[derive(Debug, Clone)]
pub struct Embedder {
    pattern: Pattern,
    anchors: Vec<Anchor>,
    /// Anchor indices used by containment queries.
    containment_anchors: Vec<usize>,
    /// Plan per pattern edge, for searches anchored on that edge.
    anchored_plans: Vec<Plan>,
    free_plan: Plan,
}

impl Embedder {
    pub fn new(pattern: &Pattern) -> Embedder {
        Embedder::with_options(pattern, EmbedOptions::default())
    }

    pub fn with_options(pattern: &Pattern, options: EmbedOptions) -> Embedder {
        let edges = pattern.edges();
        let v = pattern.v();
        let anchors: Vec<Anchor> = edges
            .iter()
            .enumerate()
            .flat_map(|(i, e)| {
                e.iter()
                    .copied()
                    .permutations(e.len())
                    .map(move |tuple| Anchor { edge: i, tuple })
            })
            .collect();
        let anchored_plans = (0..edges.len())
            .map(|i| Plan::build(edges, v, &edges[i], Some(i)))
            .collect();
        let free_plan = Plan::build(edges, v, &[], None);
        let mut embedder = Embedder {
            pattern: pattern.clone(),
            containment_anchors: (0..anchors.len()).collect(),
            anchors,
            anchored_plans,
            free_plan,
        };
        if options.prune_automorphisms {
            embedder.containment_anchors = embedder.orbit_representatives();
        }
        embedder
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    /// Anchors tried by containment queries (all of them unless pruned).
    pub fn containment_anchor_count(&self) -> usize {
        self.containment_anchors.len()
    }

    fn orbit_representatives(&self) -> Vec<usize> {
        let autos = automorphisms(&self.pattern);
        self.anchors
            .iter()
            .enumerate()
            .filter(|(_, a)| {
                autos.iter().all(|sigma| {
                    let image: Vec<u32> = a.tuple.iter().map(|&x| sigma[x as usize]).collect();
                    a.tuple <= image
                })
            })
            .map(|(i, _)| i)
            .collect()
    }

    fn check_host(&self, host: &Hypergraph) {
        assert_eq!(
            host.k(),
            self.pattern.k(),
            "pattern and host uniformity differ"
        );
    }

    fn run_anchor<V>(
        &self,
        host: &Hypergraph,
        anchor: &Anchor,
        e: &[u32],
        visit: V,
    ) -> ControlFlow<()>
    where
        V: FnMut(&[u32]) -> ControlFlow<()>,
    {
        let plan = &self.anchored_plans[anchor.edge];
        let mut engine = Engine::new(host, plan, self.pattern.v() as usize, visit);
        for (&pv, &x) in anchor.tuple.iter().zip(e) {
            engine.assign[pv as usize] = x;
        }
        engine.run(0)
    }

    /// Whether `host` has a copy of the pattern whose image uses the edge `e`
    /// (sorted). `e` itself is never looked up, so it may or may not be present.
    pub fn creates_copy_with_anchor(&self, host: &Hypergraph, e: &[u32]) -> bool {
        self.check_host(host);
        self.containment_anchors.iter().any(|&a| {
            self.run_anchor(host, &self.anchors[a], e, |_| ControlFlow::Break(()))
                .is_break()
        })
    }

    /// Visits every labeled embedding whose image uses `e`, each exactly once.
    pub fn for_each_anchored<V>(
        &self,
        host: &Hypergraph,
        e: &[u32],
        mut visit: V,
    ) -> ControlFlow<()>
    where
        V: FnMut(&[u32]) -> ControlFlow<()>,
    {
        self.check_host(host);
        for anchor in &self.anchors {
            self.run_anchor(host, anchor, e, &mut visit)?;
        }
        ControlFlow::Continue(())
    }

    /// Visits every labeled embedding of the pattern into `host`.
    pub fn for_each_embedding<V>(&self, host: &Hypergraph, visit: V) -> ControlFlow<()>
    where
        V: FnMut(&[u32]) -> ControlFlow<()>,
    {
        self.check_host(host);
        Engine::new(host, &self.free_plan, self.pattern.v() as usize, visit).run(0)
    }

    pub fn contains_copy(&self, host: &Hypergraph) -> bool {
        self.for_each_embedding(host, |_| ControlFlow::Break(()))
            .is_break()
    }

    /// Sorted host edge ranks of the image of `map`.
    pub fn image_ranks(&self, host: &Hypergraph, map: &[u32]) -> Vec<u64> {
        image_ranks(self.pattern.edges(), host, map)
    }

    /// Distinct copies (image edge sets) through `f`, sorted.
    pub fn copies_containing(&self, host: &Hypergraph, f: &[u32]) -> Vec<Vec<u64>> {
        let mut copies = BTreeSet::new();
        let _ = self.for_each_anchored(host, f, |map| {
            copies.insert(self.image_ranks(host, map));
            ControlFlow::Continue(())
        });
        copies.into_iter().collect()
    }

    /// Distinct copies in `host`, sorted.
    pub fn all_copies(&self, host: &Hypergraph) -> Vec<Vec<u64>> {
        let mut copies = BTreeSet::new();
        let _ = self.for_each_embedding(host, |map| {
            copies.insert(self.image_ranks(host, map));
            ControlFlow::Continue(())
        });
        copies.into_iter().collect()
    }
}

fn image_ranks(edges: &[Vec<u32>], host: &Hypergraph, map: &[u32]) -> Vec<u64> {
    let mut buf = [0u32; MAXV];
    let mut ranks: Vec<u64> = edges
        .iter()
        .map(|e| {
            host.ranker()
                .rank(sorted_into(e.iter().map(|&x| map[x as usize]), &mut buf))
        })
        .collect();
    ranks.sort_unstable();
    ranks
}

/// Automorphisms of `p` as vertex permutations (labeled self-embeddings).
pub fn automorphisms(p: &Pattern) -> Vec<Vec<u32>> {
    let host = p.to_hypergraph();
    let mut out = Vec::new();
    let _ = Embedder::new(p).for_each_embedding(&host, |m| {
        out.push(m.to_vec());
        ControlFlow::Continue(())
    });
    out
}

fn sorted_edge(host: &Hypergraph, e: &Edge) -> Result<Vec<u32>> {
    let v = e.vertices();
    if v.len() != host.k() || v.iter().any(|&x| x >= host.n()) {
        return Err(Error::InvalidEdge {
            vertices: v.to_vec(),
            reason: format!("not a {}-set of [0, {})", host.k(), host.n()),
        });
    }
    Ok(v.to_vec())
}

/// Whether some copy of `p` in `h` uses `e`. `e` need not be inserted.
pub fn creates_copy_with_anchor(h: &Hypergraph, p: &Pattern, e: &Edge) -> bool {
    match sorted_edge(h, e) {
        Ok(e) => Embedder::new(p).creates_copy_with_anchor(h, &e),
        Err(_) => false,
    }
}

/// `Z_{1,f}`: distinct copies of `p` in `h` containing `f`.
pub fn count_copies_containing(h: &Hypergraph, p: &Pattern, f: &Edge) -> usize {
    match sorted_edge(h, f) {
        Ok(f) => Embedder::new(p).copies_containing(h, &f).len(),
        Err(_) => 0,
    }
}

pub fn contains_copy(h: &Hypergraph, p: &Pattern) -> bool {
    Embedder::new(p).contains_copy(h)
}

/// Number of labeled embeddings of `p` into `h`.
pub fn count_embeddings(h: &Hypergraph, p: &Pattern) -> usize {
    let mut count = 0;
    let _ = Embedder::new(p).for_each_embedding(h, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Labeled embeddings of the rooted pattern `F̂` that send the root tuple to
/// `roots`, the root neighbourhood into `target`, and every other vertex
/// outside `target`. Each embedding is indexed by pattern vertex.
pub fn enumerate_rooted_extensions(
    h: &Hypergraph,
    rp: &RootedPattern,
    roots: &[u32],
    target: &[u32],
) -> Result<Vec<Vec<u32>>> {
    let base = &rp.base;
    if base.k() != h.k() {
        return Err(Error::Dimensions(
            "pattern and host uniformity differ".into(),
        ));
    }
    if roots.len() != rp.root.len() || !roots.iter().all_unique() {
        return Err(Error::InvalidSet {
            vertices: roots.to_vec(),
            reason: format!("need {} distinct root images", rp.root.len()),
        });
    }
    let mut target = target.to_vec();
    target.sort_unstable();
    target.dedup();
    if let Some(&x) = roots.iter().chain(&target).find(|&&x| x >= h.n()) {
        return Err(Error::InvalidSet {
            vertices: vec![x],
            reason: format!("vertex out of range for n = {}", h.n()),
        });
    }
    if let Some(&x) = roots.iter().find(|x| target.binary_search(x).is_ok()) {
        return Err(Error::RootOverlap(x));
    }
    let v = base.v();
    let mut domains = vec![Domain::Outside; v as usize];
    for &x in &rp.root {
        domains[x as usize] = Domain::Any;
    }
    for &x in &rp.root_neighborhood {
        domains[x as usize] = Domain::Inside;
    }
    let plan = Plan::build(base.edges(), v, &rp.root, None);
    let mut out = Vec::new();
    let mut engine = Engine::new(h, &plan, v as usize, |m: &[u32]| {
        out.push(m.to_vec());
        ControlFlow::Continue(())
    });
    engine.domains = &domains;
    engine.target = &target;
    for (&pv, &x) in rp.root.iter().zip(roots) {
        engine.assign[pv as usize] = x;
    }
    let _ = engine.run(0);
    Ok(out)
}

/// Distinct image edge sets among rooted extension embeddings.
pub fn distinct_extension_copies(
    h: &Hypergraph,
    rp: &RootedPattern,
    embeddings: &[Vec<u32>],
) -> usize {
    embeddings
        .iter()
        .map(|m| image_ranks(rp.base.edges(), h, m))
        .collect::<BTreeSet<_>>()
        .len()
}

/// A family of pairwise edge-disjoint copies, by index into the input list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub size: usize,
    pub witness: Vec<usize>,
    /// True when `size` is the maximum, not merely maximal.
    pub exact: bool,
}

/// Copies at most this many are packed exactly.
pub const EXACT_PACKING_LIMIT: usize = 20;

fn disjoint(a: &[u64], b: &[u64]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

fn normalized(copies: &[Vec<u64>]) -> Vec<Vec<u64>> {
    copies
        .iter()
        .map(|c| c.iter().copied().sorted().dedup().collect())
        .collect()
}

/// Maximal edge-disjoint family: copies in increasing (size, edge ids) order,
/// each kept when disjoint from those already kept.
pub fn greedy_packing(copies: &[Vec<u64>]) -> Packing {
    let sets = normalized(copies);
    let order = (0..sets.len())
        .sorted_by(|&a, &b| (sets[a].len(), &sets[a]).cmp(&(sets[b].len(), &sets[b])));
    let mut kept: Vec<usize> = Vec::new();
    for i in order {
        if kept.iter().all(|&j| disjoint(&sets[i], &sets[j])) {
            kept.push(i);
        }
    }
    kept.sort_unstable();
    Packing {
        size: kept.len(),
        witness: kept,
        exact: false,
    }
}

/// Largest edge-disjoint family; exact up to [`EXACT_PACKING_LIMIT`] copies,
/// greedy beyond.
pub fn max_edge_disjoint_packing(copies: &[Vec<u64>]) -> Packing {
    if copies.len() > EXACT_PACKING_LIMIT {
        return greedy_packing(copies);
    }
    let sets = normalized(copies);
    let m = sets.len();
    let mut conflict = vec![0u32; m];
    for i in 0..m {
        for j in 0..m {
            if i != j && !disjoint(&sets[i], &sets[j]) {
                conflict[i] |= 1 << j;
            }
        }
    }
    fn search(i: usize, chosen: u32, banned: u32, conflict: &[u32], best: &mut u32) {
        let m = conflict.len();
        if i == m {
            if chosen.count_ones() > best.count_ones() {
                *best = chosen;
            }
            return;
        }
        let remaining = (m - i) as u32;
        if chosen.count_ones() + remaining <= best.count_ones() {
            return;
        }
        if banned & (1 << i) == 0 {
            search(
                i + 1,
                chosen | (1 << i),
                banned | conflict[i],
                conflict,
                best,
            );
        }
        search(i + 1, chosen, banned, conflict, best);
    }
    let mut best = 0u32;
    search(0, 0, 0, &conflict, &mut best);
    let witness: Vec<usize> = (0..m).filter(|&i| best & (1 << i) != 0).collect();
    Packing {
        size: witness.len(),
        witness,
        exact: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::select_root;
    use crate::pattern::{builtin, make_clique, make_ell_cycle};

    fn graph(n: u32, edges: &[[u32; 2]]) -> Hypergraph {
        Hypergraph::from_edges(n, 2, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    fn edge(v: &[u32]) -> Edge {
        Edge::new(v.to_vec()).unwrap()
    }

    #[test]
    fn path_plus_chord_makes_triangle() {
        let tri = make_clique(3, 2).unwrap();
        let mut h = graph(3, &[[0, 1], [1, 2]]);
        assert!(creates_copy_with_anchor(&h, &tri, &edge(&[0, 2])));
        h.add_edge(&edge(&[0, 2])).unwrap();
        assert!(creates_copy_with_anchor(&h, &tri, &edge(&[0, 2])));
    }

    #[test]
    fn star_is_triangle_free() {
        let tri = make_clique(3, 2).unwrap();
        let mut h = graph(5, &[[0, 1], [0, 2], [0, 3]]);
        h.add_edge(&edge(&[0, 4])).unwrap();
        assert!(!creates_copy_with_anchor(&h, &tri, &edge(&[0, 4])));
        assert!(!contains_copy(&h, &tri));
    }

    #[test]
    fn k4_3_minus_one_triple() {
        let k43 = make_clique(4, 3).unwrap();
        let h =
            Hypergraph::from_edges(4, 3, [vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]]).unwrap();
        assert!(creates_copy_with_anchor(&h, &k43, &edge(&[1, 2, 3])));
        assert!(!contains_copy(&h, &k43));
        assert!(!creates_copy_with_anchor(&h, &k43, &edge(&[1, 2, 4])));
    }

    #[test]
    fn copies_through_an_edge() {
        let tri = make_clique(3, 2).unwrap();
        let k4 = Hypergraph::complete(4, 2).unwrap();
        let k5 = Hypergraph::complete(5, 2).unwrap();
        let one = graph(3, &[[0, 1], [1, 2], [0, 2]]);
        for e in k4.edge_list() {
            assert_eq!(count_copies_containing(&k4, &tri, &e), 2);
        }
        for e in k5.edge_list() {
            assert_eq!(count_copies_containing(&k5, &tri, &e), 3);
        }
        assert_eq!(count_copies_containing(&one, &tri, &edge(&[0, 1])), 1);
    }

    #[test]
    fn labeled_embeddings_in_complete_graphs() {
        // K_3 into K_5: 5*4*3 labeled maps.
        let tri = make_clique(3, 2).unwrap();
        assert_eq!(
            count_embeddings(&Hypergraph::complete(5, 2).unwrap(), &tri),
            60
        );
        assert_eq!(automorphisms(&tri).len(), 6);
        assert_eq!(automorphisms(&make_clique(4, 3).unwrap()).len(), 24);
        assert_eq!(automorphisms(&make_ell_cycle(1, 5, 2).unwrap()).len(), 10);
    }

    #[test]
    fn pruning_keeps_one_anchor_per_orbit() {
        let tri = make_clique(3, 2).unwrap();
        let opts = EmbedOptions {
            prune_automorphisms: true,
        };
        assert_eq!(
            Embedder::with_options(&tri, opts).containment_anchor_count(),
            1
        );
        assert_eq!(Embedder::new(&tri).containment_anchor_count(), 6);
        let k43 = make_clique(4, 3).unwrap();
        assert_eq!(
            Embedder::with_options(&k43, opts).containment_anchor_count(),
            1
        );
        // loose 3-cycle: every edge has two degree-2 vertices and one degree-1 vertex
        let c = make_ell_cycle(1, 3, 3).unwrap();
        assert_eq!(
            Embedder::with_options(&c, opts).containment_anchor_count(),
            3
        );
    }

    #[test]
    fn loose_patterns_use_edge_scans() {
        // two disjoint edges: the second edge has no placed vertex
        let p = builtin("disjoint-edges").unwrap();
        let h = graph(4, &[[0, 1], [2, 3]]);
        assert!(creates_copy_with_anchor(&h, &p, &edge(&[0, 1])));
        let h2 = graph(4, &[[0, 1], [1, 2]]);
        assert!(!creates_copy_with_anchor(&h2, &p, &edge(&[0, 1])));
        assert_eq!(count_embeddings(&h, &p), 8);
        let c = make_ell_cycle(1, 3, 3).unwrap();
        let host =
            Hypergraph::from_edges(7, 3, [vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap();
        assert!(contains_copy(&host, &c));
        assert_eq!(count_copies_containing(&host, &c, &edge(&[2, 3, 4])), 1);
    }

    #[test]
    fn isolated_pattern_vertices_need_free_host_vertices() {
        let p = Pattern::new(2, 4, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let path = graph(3, &[[0, 1], [1, 2]]);
        assert!(!contains_copy(&path, &p));
        let roomy = graph(4, &[[0, 1], [1, 2]]);
        assert!(contains_copy(&roomy, &p));
    }

    #[test]
    fn rooted_triangle_extensions() {
        let rp = select_root(&make_clique(3, 2).unwrap()).unwrap();
        let h = graph(4, &[[1, 2]]);
        let ext = enumerate_rooted_extensions(&h, &rp, &[0], &[1, 2]).unwrap();
        assert_eq!(ext.len(), 2);
        assert!(ext.contains(&vec![0, 1, 2]) && ext.contains(&vec![0, 2, 1]));
        assert_eq!(distinct_extension_copies(&h, &rp, &ext), 1);
        assert!(enumerate_rooted_extensions(&h, &rp, &[0], &[])
            .unwrap()
            .is_empty());
        let empty = graph(4, &[]);
        assert!(enumerate_rooted_extensions(&empty, &rp, &[0], &[1, 2])
            .unwrap()
            .is_empty());
        assert_eq!(
            enumerate_rooted_extensions(&h, &rp, &[1], &[1, 2]),
            Err(Error::RootOverlap(1))
        );
    }

    #[test]
    fn packing_examples() {
        let two = vec![vec![1, 2, 3], vec![4, 5, 6]];
        assert_eq!(max_edge_disjoint_packing(&two).size, 2);
        let shared = vec![vec![1, 2, 3], vec![3, 4, 5]];
        assert_eq!(max_edge_disjoint_packing(&shared).size, 1);
        let tri = make_clique(3, 2).unwrap();
        let k4 = Hypergraph::complete(4, 2).unwrap();
        let copies = Embedder::new(&tri).all_copies(&k4);
        assert_eq!(copies.len(), 4);
        let p = max_edge_disjoint_packing(&copies);
        assert_eq!((p.size, p.exact), (1, true));
        assert_eq!(greedy_packing(&copies).size, 1);
    }

    #[test]
    fn greedy_packing_is_maximal_not_maximum() {
        // the small middle set blocks both large ones
        let copies = vec![vec![1, 2, 3], vec![3, 4], vec![4, 5, 6]];
        assert_eq!(greedy_packing(&copies).witness, vec![1]);
        assert_eq!(max_edge_disjoint_packing(&copies).witness, vec![0, 2]);
        let many: Vec<Vec<u64>> = (0..30).map(|i| vec![i]).collect();
        let p = max_edge_disjoint_packing(&many);
        assert_eq!((p.size, p.exact), (30, false));
    }
}
