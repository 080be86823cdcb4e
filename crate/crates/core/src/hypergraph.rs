//! k-uniform hypergraphs on `{0, ..., n-1}` with a co-degree index.
//!
//! Edges are identified by their colex rank. Every (k-1)-subset `U` of a present
//! edge maps to the list of vertices `x` with `U ∪ {x}` present, so `|index[U]|`
//! is the co-degree `d_H(U)`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::combinatorics::{sort_small, validate_sorted_set, Ranker};
use crate::error::{Error, Result};

/// Rank spaces up to this many bits use a dense presence bitmap.
const DENSE_EDGE_BITS: u64 = 1 << 30;
/// (k-1)-set spaces up to this size use a dense co-degree table.
const DENSE_INDEX_SLOTS: u64 = 1 << 22;

/// A strictly increasing k-tuple of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vec<u32>);

impl Edge {
    /// Wraps an ascending, duplicate-free vertex list.
    pub fn new(vertices: Vec<u32>) -> Result<Edge> {
        validate_sorted_set(&vertices, u32::MAX)?;
        if vertices.is_empty() {
            return Err(Error::InvalidEdge {
                vertices,
                reason: "empty edge".into(),
            });
        }
        Ok(Edge(vertices))
    }

    /// Sorts `vertices` first; repeated vertices are still rejected.
    pub fn from_unsorted(mut vertices: Vec<u32>) -> Result<Edge> {
        vertices.sort_unstable();
        Edge::new(vertices)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl From<Edge> for Vec<u32> {
    fn from(e: Edge) -> Vec<u32> {
        e.0
    }
}

/// Colex rank of `edge` among the `|edge|`-subsets of `[0, n)`.
pub fn edge_rank(edge: &Edge, n: u32) -> Result<u64> {
    crate::combinatorics::colex_rank(edge.vertices(), n)
}

pub fn edge_unrank(rank: u64, n: u32, k: usize) -> Result<Edge> {
    crate::combinatorics::colex_unrank(rank, n, k).map(Edge)
}

#[derive(Debug, Clone)]
enum EdgeSet {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl EdgeSet {
    fn with_space(space: u64) -> Self {
        if space <= DENSE_EDGE_BITS {
            EdgeSet::Dense(vec![0; space.div_ceil(64) as usize])
        } else {
            EdgeSet::Sparse(HashSet::new())
        }
    }

    #[inline]
    fn contains(&self, rank: u64) -> bool {
        match self {
            EdgeSet::Dense(bits) => bits[(rank >> 6) as usize] & (1 << (rank & 63)) != 0,
            EdgeSet::Sparse(set) => set.contains(&rank),
        }
    }

    fn insert(&mut self, rank: u64) {
        match self {
            EdgeSet::Dense(bits) => bits[(rank >> 6) as usize] |= 1 << (rank & 63),
            EdgeSet::Sparse(set) => {
                set.insert(rank);
            }
        }
    }
}

#[derive(Debug, Clone)]
enum CodegreeIndex {
    Dense(Vec<Vec<u32>>),
    Sparse(HashMap<u64, Vec<u32>>),
}

impl CodegreeIndex {
    fn with_space(space: u64) -> Self {
        if space <= DENSE_INDEX_SLOTS {
            CodegreeIndex::Dense(vec![Vec::new(); space as usize])
        } else {
            CodegreeIndex::Sparse(HashMap::new())
        }
    }

    #[inline]
    fn get(&self, key: u64) -> &[u32] {
        match self {
            CodegreeIndex::Dense(slots) => &slots[key as usize],
            CodegreeIndex::Sparse(map) => map.get(&key).map_or(&[], Vec::as_slice),
        }
    }

    fn push(&mut self, key: u64, x: u32) -> usize {
        let list = match self {
            CodegreeIndex::Dense(slots) => &mut slots[key as usize],
            CodegreeIndex::Sparse(map) => map.entry(key).or_default(),
        };
        list.push(x);
        list.len()
    }

    fn total_len(&self) -> usize {
        match self {
            CodegreeIndex::Dense(slots) => slots.iter().map(Vec::len).sum(),
            CodegreeIndex::Sparse(map) => map.values().map(Vec::len).sum(),
        }
    }
}

/// A k-uniform hypergraph on vertex set `{0, ..., n-1}`.
///
/// Single writer during construction; read-only sharing afterwards.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    n: u32,
    k: usize,
    ranker: Ranker,
    /// Flattened sorted edges in insertion order, `k` vertices each.
    flat: Vec<u32>,
    ranks: Vec<u64>,
    present: EdgeSet,
    codegree: CodegreeIndex,
    /// Vertex -> positions (in insertion order) of incident edges.
    incidence: Vec<Vec<u32>>,
    max_codegree: usize,
}

impl Hypergraph {
    pub fn new(n: u32, k: usize) -> Result<Hypergraph> {
        if k == 0 || k > 64 {
            return Err(Error::Dimensions(format!("uniformity {k} outside 1..=64")));
        }
        let ranker = Ranker::new(n, k)?;
        let present = EdgeSet::with_space(ranker.count(k));
        let codegree = CodegreeIndex::with_space(ranker.count(k - 1));
        Ok(Hypergraph {
            n,
            k,
            ranker,
            flat: Vec::new(),
            ranks: Vec::new(),
            present,
            codegree,
            incidence: vec![Vec::new(); n as usize],
            max_codegree: 0,
        })
    }

    pub fn from_edges<I, E>(n: u32, k: usize, edges: I) -> Result<Hypergraph>
    where
        I: IntoIterator<Item = E>,
        E: Into<Vec<u32>>,
    {
        let mut h = Hypergraph::new(n, k)?;
        for e in edges {
            h.add_edge(&Edge::from_unsorted(e.into())?)?;
        }
        Ok(h)
    }

    /// The complete k-uniform hypergraph `K_n^k`.
    pub fn complete(n: u32, k: usize) -> Result<Hypergraph> {
        let mut h = Hypergraph::new(n, k)?;
        let mut buf = vec![0; k];
        for r in 0..h.ranker.count(k) {
            h.ranker.unrank_into(r, &mut buf);
            h.insert_unchecked(&buf, r);
        }
        Ok(h)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranker(&self) -> &Ranker {
        &self.ranker
    }

    /// Number of vertex k-sets, `C(n, k)`.
    pub fn rank_space(&self) -> u64 {
        self.ranker.count(self.k)
    }

    fn check_edge(&self, vertices: &[u32]) -> Result<()> {
        if vertices.len() != self.k {
            return Err(Error::InvalidEdge {
                vertices: vertices.to_vec(),
                reason: format!("expected {} vertices", self.k),
            });
        }
        validate_sorted_set(vertices, self.n)
    }

    pub fn add_edge(&mut self, edge: &Edge) -> Result<()> {
        let v = edge.vertices();
        self.check_edge(v)?;
        let rank = self.ranker.rank(v);
        if self.present.contains(rank) {
            return Err(Error::DuplicateEdge(v.to_vec()));
        }
        self.insert_unchecked(v, rank);
        Ok(())
    }

    /// Inserts a sorted, in-range, absent edge with its precomputed rank.
    pub(crate) fn insert_unchecked(&mut self, sorted: &[u32], rank: u64) {
        debug_assert!(self.check_edge(sorted).is_ok());
        debug_assert!(!self.present.contains(rank));
        let pos = self.ranks.len() as u32;
        self.present.insert(rank);
        self.ranks.push(rank);
        self.flat.extend_from_slice(sorted);
        let mut sub = [0u32; 64];
        let sub = &mut sub[..self.k - 1];
        for skip in 0..self.k {
            let mut j = 0;
            for (i, &x) in sorted.iter().enumerate() {
                if i != skip {
                    sub[j] = x;
                    j += 1;
                }
            }
            let len = self.codegree.push(self.ranker.rank(sub), sorted[skip]);
            self.max_codegree = self.max_codegree.max(len);
        }
        for &x in sorted {
            self.incidence[x as usize].push(pos);
        }
    }

    pub fn contains(&self, edge: &Edge) -> bool {
        self.check_edge(edge.vertices()).is_ok() && self.contains_sorted(edge.vertices())
    }

    /// Membership for a sorted in-range k-slice; unchecked beyond debug builds.
    #[inline]
    pub fn contains_sorted(&self, sorted: &[u32]) -> bool {
        debug_assert!(self.check_edge(sorted).is_ok());
        self.present.contains(self.ranker.rank(sorted))
    }

    #[inline]
    pub fn contains_rank(&self, rank: u64) -> bool {
        rank < self.rank_space() && self.present.contains(rank)
    }

    /// `{x : U ∪ {x} ∈ E}` for a (k-1)-set `U` given in any order.
    pub fn neighbors_of(&self, u: &[u32]) -> Result<&[u32]> {
        if u.len() + 1 != self.k {
            return Err(Error::InvalidSet {
                vertices: u.to_vec(),
                reason: format!("expected {} vertices", self.k - 1),
            });
        }
        let mut sorted = u.to_vec();
        sorted.sort_unstable();
        validate_sorted_set(&sorted, self.n).map_err(|_| Error::InvalidSet {
            vertices: u.to_vec(),
            reason: "repeated or out-of-range vertex".into(),
        })?;
        Ok(self.neighbors_sorted(&sorted))
    }

    /// Co-degree list for a sorted (k-1)-slice; unchecked.
    #[inline]
    pub fn neighbors_sorted(&self, sorted: &[u32]) -> &[u32] {
        self.codegree.get(self.ranker.rank(sorted))
    }

    /// `d_H(U)` for a (k-1)-set.
    pub fn codegree(&self, u: &[u32]) -> Result<usize> {
        self.neighbors_of(u).map(<[u32]>::len)
    }

    /// `Δ_{k-1}(H)`, maintained incrementally.
    pub fn max_codegree(&self) -> usize {
        self.max_codegree
    }

    /// `Δ_i(H)`: the largest number of edges containing a common i-set.
    pub fn max_i_degree(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.k {
            return Err(Error::DegreeOrder { i, k: self.k });
        }
        if self.is_empty() {
            return Ok(0);
        }
        if i == self.k {
            return Ok(1);
        }
        if i == self.k - 1 {
            return Ok(self.max_codegree);
        }
        let mut counts: HashMap<u64, usize> = HashMap::new();
        let mut best = 0;
        for e in self.edges() {
            for pos in 0..(1u32 << self.k) {
                if pos.count_ones() as usize != i {
                    continue;
                }
                let sub: Vec<u32> = (0..self.k)
                    .filter(|b| pos & (1 << b) != 0)
                    .map(|b| e[b])
                    .collect();
                let c = counts.entry(self.ranker.rank(&sub)).or_insert(0);
                *c += 1;
                best = best.max(*c);
            }
        }
        Ok(best)
    }

    /// Edges as sorted slices, in insertion order.
    pub fn edges(&self) -> std::slice::ChunksExact<'_, u32> {
        self.flat.chunks_exact(self.k)
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().map(|e| Edge(e.to_vec())).collect()
    }

    /// Colex ranks of the edges, in insertion order.
    pub fn edge_ranks(&self) -> &[u64] {
        &self.ranks
    }

    #[inline]
    pub fn edge_at(&self, pos: usize) -> &[u32] {
        &self.flat[pos * self.k..(pos + 1) * self.k]
    }

    /// Insertion positions of the edges containing `v`.
    #[inline]
    pub fn incident(&self, v: u32) -> &[u32] {
        &self.incidence[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.incidence.get(v as usize).map_or(0, Vec::len)
    }

    /// Sum of co-degree list lengths; equals `k * |E|`.
    pub fn index_total(&self) -> usize {
        self.codegree.total_len()
    }

    /// True when every edge of `self` is an edge of `other` (same n and k).
    pub fn is_subgraph_of(&self, other: &Hypergraph) -> bool {
        self.n == other.n
            && self.k == other.k
            && self.ranks.iter().all(|&r| other.present.contains(r))
    }

    /// Text form: `"n k"` then one ascending edge per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n, self.k).unwrap();
        for e in self.edges() {
            let mut first = true;
            for v in e {
                if !first {
                    out.push(' ');
                }
                first = false;
                write!(out, "{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(self.to_text().as_bytes())?;
        Ok(())
    }

    pub fn from_text(text: &str) -> Result<Hypergraph> {
        Self::read_text(text.as_bytes())
    }

    pub fn read_text<R: BufRead>(r: R) -> Result<Hypergraph> {
        let mut lines = r.lines().enumerate();
        let (n, k) = loop {
            let Some((i, line)) = lines.next() else {
                return Err(Error::Parse {
                    line: 1,
                    msg: "missing header \"n k\"".into(),
                });
            };
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let nums = parse_numbers(&line, i + 1)?;
            if nums.len() != 2 {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "header must be \"n k\"".into(),
                });
            }
            break (nums[0], nums[1] as usize);
        };
        let mut h = Hypergraph::new(n, k)?;
        for (i, line) in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let nums = parse_numbers(&line, i + 1)?;
            h.check_edge(&nums).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })?;
            h.add_edge(&Edge(nums)).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })?;
        }
        Ok(h)
    }
}

pub(crate) fn parse_numbers(line: &str, lineno: usize) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u32>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("not a vertex index: {t:?}"),
            })
        })
        .collect()
}

/// Copies `image` into `buf`, sorts it, and returns the sorted prefix.
#[inline]
pub(crate) fn sorted_into(image: impl Iterator<Item = u32>, buf: &mut [u32]) -> &[u32] {
    let mut len = 0;
    for x in image {
        buf[len] = x;
        len += 1;
    }
    sort_small(&mut buf[..len]);
    &buf[..len]
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn edge(v: &[u32]) -> Edge {
        Edge::new(v.to_vec()).unwrap()
    }

    #[test]
    fn add_edge_updates_codegree() {
        let mut h = Hypergraph::new(5, 3).unwrap();
        h.add_edge(&edge(&[0, 1, 2])).unwrap();
        assert_eq!(h.codegree(&[0, 1]).unwrap(), 1);
        h.add_edge(&edge(&[0, 1, 3])).unwrap();
        assert_eq!(h.codegree(&[0, 1]).unwrap(), 2);
        assert_eq!(h.neighbors_of(&[1, 0]).unwrap(), &[2, 3]);
        assert_eq!(h.neighbors_of(&[2, 4]).unwrap(), &[] as &[u32]);
    }

    #[test]
    fn duplicate_and_invalid_edges_rejected() {
        let mut h = Hypergraph::new(5, 3).unwrap();
        h.add_edge(&edge(&[0, 1, 2])).unwrap();
        assert_eq!(
            h.add_edge(&edge(&[0, 1, 2])),
            Err(Error::DuplicateEdge(vec![0, 1, 2]))
        );
        assert!(h.add_edge(&edge(&[0, 1])).is_err());
        assert!(h.add_edge(&edge(&[0, 1, 5])).is_err());
        assert!(Edge::new(vec![2, 1, 3]).is_err());
        assert!(Edge::from_unsorted(vec![2, 1, 1]).is_err());
        assert!(h.neighbors_of(&[0]).is_err());
        assert!(h.neighbors_of(&[0, 0]).is_err());
    }

    #[test]
    fn complete_k4_3_codegrees() {
        let h = Hypergraph::complete(4, 3).unwrap();
        assert_eq!(h.edge_count(), 4);
        for pair in (0..4u32).combinations(2) {
            // brute-force count of triples containing the pair
            let count = h
                .edges()
                .filter(|e| pair.iter().all(|v| e.contains(v)))
                .count();
            assert_eq!(count, 2);
            assert_eq!(h.codegree(&pair).unwrap(), 2);
        }
        assert_eq!(h.max_i_degree(2).unwrap(), 2);
        assert_eq!(h.max_i_degree(1).unwrap(), 3);
        assert_eq!(h.max_i_degree(3).unwrap(), 1);
    }

    #[test]
    fn max_degree_edge_cases() {
        let h = Hypergraph::new(6, 3).unwrap();
        for i in 1..=3 {
            assert_eq!(h.max_i_degree(i).unwrap(), 0);
        }
        assert_eq!(h.max_i_degree(0), Err(Error::DegreeOrder { i: 0, k: 3 }));
        assert!(h.max_i_degree(4).is_err());
        let one = Hypergraph::from_edges(6, 3, [vec![1, 3, 5]]).unwrap();
        for i in 1..=3 {
            assert_eq!(one.max_i_degree(i).unwrap(), 1);
        }
    }

    #[test]
    fn complete_neighbors() {
        let h = Hypergraph::complete(5, 3).unwrap();
        let mut nb = h.neighbors_of(&[0, 1]).unwrap().to_vec();
        nb.sort_unstable();
        assert_eq!(nb, vec![2, 3, 4]);
    }

    #[test]
    fn text_round_trip_is_byte_exact() {
        let text = "7 3\n0 1 2\n2 4 6\n1 3 5\n";
        let h = Hypergraph::from_text(text).unwrap();
        assert_eq!(h.to_text(), text);
        let empty = "4 2\n";
        assert_eq!(Hypergraph::from_text(empty).unwrap().to_text(), empty);
    }

    #[test]
    fn text_parse_errors() {
        assert!(matches!(
            Hypergraph::from_text("4 2\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(Hypergraph::from_text("4\n").is_err());
        assert!(Hypergraph::from_text("4 2\n0 x\n").is_err());
        assert!(Hypergraph::from_text("4 2\n0 1\n0 1\n").is_err());
        assert!(Hypergraph::from_text("").is_err());
    }

    #[test]
    fn sparse_storage_behaves_like_dense() {
        // C(3000, 3) exceeds the dense bitmap threshold.
        let mut h = Hypergraph::new(3000, 3).unwrap();
        assert!(matches!(h.present, EdgeSet::Sparse(_)));
        h.add_edge(&edge(&[1, 2, 2999])).unwrap();
        h.add_edge(&edge(&[1, 2, 7])).unwrap();
        assert!(h.contains(&edge(&[1, 2, 2999])));
        assert!(!h.contains(&edge(&[1, 3, 2999])));
        assert_eq!(h.neighbors_of(&[1, 2]).unwrap(), &[2999, 7]);
        let big = Hypergraph::new(5000, 4).unwrap();
        assert!(matches!(big.present, EdgeSet::Sparse(_)));
        assert!(matches!(big.codegree, CodegreeIndex::Sparse(_)));
    }
}
