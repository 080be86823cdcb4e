//! The forbidden pattern `F` and the standard families it is drawn from.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypergraph::{parse_numbers, Hypergraph};

/// Pattern vertex counts are capped so that subset enumeration stays at `2^16`.
pub const MAX_PATTERN_VERTICES: u32 = 16;

/// A fixed k-uniform hypergraph on vertex set `{0, ..., v-1}`.
///
/// Edges are stored sorted, in the order given at construction. Vertices that
/// lie in no edge are kept (they count towards `v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    k: usize,
    v: u32,
    edges: Vec<Vec<u32>>,
}

impl Pattern {
    pub fn new(k: usize, v: u32, edges: Vec<Vec<u32>>) -> Result<Pattern> {
        if k < 2 {
            return Err(Error::InvalidPattern(format!("uniformity {k} < 2")));
        }
        if v < k as u32 + 1 {
            return Err(Error::InvalidPattern(format!(
                "{v} vertices, need at least k+1 = {}",
                k + 1
            )));
        }
        if v > MAX_PATTERN_VERTICES {
            return Err(Error::InvalidPattern(format!(
                "{v} vertices exceeds the cap of {MAX_PATTERN_VERTICES}"
            )));
        }
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e.len() != k {
                return Err(Error::InvalidPattern(format!(
                    "edge {e:?} does not have {k} vertices"
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidPattern(format!(
                    "edge {e:?} repeats a vertex"
                )));
            }
            if e[k - 1] >= v {
                return Err(Error::InvalidPattern(format!(
                    "edge {e:?} leaves vertex range [0, {v})"
                )));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::InvalidPattern(format!("duplicate edge {e:?}")));
            }
            normalized.push(e);
        }
        Ok(Pattern {
            name: "custom".into(),
            k,
            v,
            edges: normalized,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Pattern {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    /// Number of edges, `e(F)`.
    pub fn h(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// Vertices in no edge; these are legal but usually a modelling mistake.
    pub fn isolated_vertices(&self) -> Vec<u32> {
        let covered: BTreeSet<u32> = self.edges.iter().flatten().copied().collect();
        (0..self.v).filter(|x| !covered.contains(x)).collect()
    }

    /// Edge bitmasks over the vertex set.
    pub(crate) fn edge_masks(&self) -> Vec<u32> {
        self.edges
            .iter()
            .map(|e| e.iter().fold(0u32, |m, &x| m | (1 << x)))
            .collect()
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_edges(self.v, self.k, self.edges.iter().cloned())
            .expect("pattern edges are validated")
    }

    /// Applies the vertex map `x -> perm[x]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Pattern> {
        let sorted: Vec<u32> = perm.iter().copied().sorted().collect();
        if sorted != (0..self.v).collect::<Vec<_>>() {
            return Err(Error::InvalidPattern(format!(
                "{perm:?} is not a permutation of 0..{}",
                self.v
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&x| perm[x as usize]).collect())
            .collect();
        Ok(Pattern::new(self.k, self.v, edges)?.with_name(self.name.clone()))
    }

    /// Text form: `"k v"` then one ascending edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.k, self.v);
        for e in &self.edges {
            writeln!(out, "{}", e.iter().join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Pattern> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (i, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header \"k v\"".into(),
        })?;
        let nums = parse_numbers(header, i + 1)?;
        if nums.len() != 2 {
            return Err(Error::Parse {
                line: i + 1,
                msg: "header must be \"k v\"".into(),
            });
        }
        let (k, v) = (nums[0] as usize, nums[1]);
        let mut edges = Vec::new();
        for (i, line) in lines {
            let e = parse_numbers(line, i + 1)?;
            if e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "edge vertices must be strictly ascending".into(),
                });
            }
            edges.push(e);
        }
        Pattern::new(k, v, edges)
    }

    /// Resolves `builtin:NAME` or reads a pattern file.
    pub fn load(spec: &str) -> Result<Pattern> {
        if let Some(name) = spec.strip_prefix("builtin:") {
            return builtin(name);
        }
        let path = Path::new(spec);
        let text = std::fs::read_to_string(path)?;
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("file")
            .replace([',', ' '], "_");
        Ok(Pattern::from_text(&text)?.with_name(stem))
    }
}

fn params(constraint: impl Into<String>) -> Error {
    Error::PatternParameters {
        constraint: constraint.into(),
    }
}

/// The clique `K_v^k`: all k-subsets of `v` vertices.
pub fn make_clique(v: u32, k: usize) -> Result<Pattern> {
    if k < 2 {
        return Err(params("k >= 2"));
    }
    if v < k as u32 + 1 {
        return Err(params("v >= k+1"));
    }
    if v > MAX_PATTERN_VERTICES {
        return Err(params(format!("v <= {MAX_PATTERN_VERTICES}")));
    }
    let edges = (0..v).combinations(k).collect();
    Ok(Pattern::new(k, v, edges)?.with_name(format!("clique:{v}:{k}")))
}

/// The ℓ-cycle `C_{ℓ,h}`: vertices `0..h(k-ℓ)` in cyclic order, edge `i` is the
/// window of `k` consecutive vertices starting at `i(k-ℓ)`.
pub fn make_ell_cycle(ell: usize, h: usize, k: usize) -> Result<Pattern> {
    if k < 2 {
        return Err(params("k >= 2"));
    }
    if ell < 1 || ell >= k {
        return Err(params("1 <= ell < k"));
    }
    let v = h * (k - ell);
    if v < k + 1 {
        return Err(params("h(k-ell) >= k+1"));
    }
    if v > MAX_PATTERN_VERTICES as usize {
        return Err(params(format!("h(k-ell) <= {MAX_PATTERN_VERTICES}")));
    }
    let edges = (0..h)
        .map(|i| (0..k).map(|j| ((i * (k - ell) + j) % v) as u32).collect())
        .collect();
    Ok(Pattern::new(k, v as u32, edges)?.with_name(format!("cycle:{ell}:{h}:{k}")))
}

/// Balanced complete `parts`-partite k-graph with `part_size` vertices per part:
/// every k-set whose vertices lie in k distinct parts.
pub fn make_complete_multipartite(part_size: u32, parts: u32, k: usize) -> Result<Pattern> {
    if k < 2 {
        return Err(params("k >= 2"));
    }
    if part_size < 1 {
        return Err(params("part size r >= 1"));
    }
    if (parts as usize) < k {
        return Err(params("parts >= k"));
    }
    let v = part_size * parts;
    if (v as usize) < k + 1 {
        return Err(params("r * parts >= k+1"));
    }
    if v > MAX_PATTERN_VERTICES {
        return Err(params(format!("r * parts <= {MAX_PATTERN_VERTICES}")));
    }
    let edges = (0..v)
        .combinations(k)
        .filter(|e| e.iter().map(|x| x / part_size).all_unique())
        .collect();
    Ok(Pattern::new(k, v, edges)?.with_name(format!("multipartite:{part_size}:{parts}:{k}")))
}

/// `K_4` minus one edge.
pub fn diamond() -> Pattern {
    Pattern::new(
        2,
        4,
        vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
    )
    .expect("static pattern")
    .with_name("diamond")
}

/// Two vertex-disjoint graph edges.
pub fn disjoint_edges() -> Pattern {
    Pattern::new(2, 4, vec![vec![0, 1], vec![2, 3]])
        .expect("static pattern")
        .with_name("disjoint-edges")
}

fn parse_args(rest: &str, count: usize) -> Result<Vec<usize>> {
    let args: Vec<usize> = rest
        .split(':')
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidPattern(format!("bad builtin arguments {rest:?}")))?;
    if args.len() != count {
        return Err(Error::InvalidPattern(format!(
            "expected {count} arguments in {rest:?}"
        )));
    }
    Ok(args)
}

/// Builtin patterns: `triangle`, `k4`, `k4-3`, `diamond`, `disjoint-edges`, `c4`,
/// `c5`, `clique:V:K`, `cycle:ELL:H:K`, `multipartite:R:PARTS:K`.
pub fn builtin(name: &str) -> Result<Pattern> {
    let to_u32 = |x: usize| u32::try_from(x).map_err(|_| params("argument fits u32"));
    match name {
        "triangle" | "k3" => make_clique(3, 2),
        "k4" => make_clique(4, 2),
        "k4-3" => make_clique(4, 3),
        "diamond" => Ok(diamond()),
        "disjoint-edges" => Ok(disjoint_edges()),
        "c4" => make_ell_cycle(1, 4, 2),
        "c5" => make_ell_cycle(1, 5, 2),
        _ => {
            if let Some(rest) = name.strip_prefix("clique:") {
                let a = parse_args(rest, 2)?;
                make_clique(to_u32(a[0])?, a[1])
            } else if let Some(rest) = name.strip_prefix("cycle:") {
                let a = parse_args(rest, 3)?;
                make_ell_cycle(a[0], a[1], a[2])
            } else if let Some(rest) = name.strip_prefix("multipartite:") {
                let a = parse_args(rest, 3)?;
                make_complete_multipartite(to_u32(a[0])?, to_u32(a[1])?, a[2])
            } else {
                Err(Error::InvalidPattern(format!("unknown builtin {name:?}")))
            }
        }
    }
}
