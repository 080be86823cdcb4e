//! Brute-force oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls into the embedder or the analysis code: subsets and maps
//! are enumerated directly and compared against the library's answers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperfree::{Hypergraph, Pattern};

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: u32, r: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, r: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// `h_i` for `i = k+1 ..= v`: densest proper subgraph on `i` vertices, from
/// every `i`-subset of the vertex set.
pub fn h_table_by_vertex_subsets(p: &Pattern) -> Vec<usize> {
    let k = p.k();
    (k + 1..=p.v() as usize)
        .map(|i| {
            if i == p.v() as usize {
                // the only proper subgraphs on all v vertices drop at least one edge
                return p.h() - 1;
            }
            subsets(p.v(), i)
                .iter()
                .map(|s| {
                    p.edges()
                        .iter()
                        .filter(|e| e.iter().all(|x| s.contains(x)))
                        .count()
                })
                .max()
                .unwrap_or(0)
        })
        .collect()
}

/// The same table from every proper subset of edges, for patterns with few edges.
pub fn h_table_by_edge_subsets(p: &Pattern) -> Vec<usize> {
    let k = p.k();
    let h = p.h();
    assert!(h <= 20, "edge-subset oracle is exponential in h");
    let mut best = vec![0usize; p.v() as usize + 1];
    for mask in 0u32..(1 << h) {
        let size = mask.count_ones() as usize;
        let verts: BTreeSet<u32> = (0..h)
            .filter(|j| mask >> j & 1 == 1)
            .flat_map(|j| p.edges()[j].iter().copied())
            .collect();
        // a subgraph on fewer vertices also lives on any superset of them;
        // on all v vertices it is proper only if some edge is dropped
        let v = p.v() as usize;
        for (i, slot) in best.iter_mut().enumerate().skip(verts.len().max(k + 1)) {
            if i < v || size < h {
                *slot = (*slot).max(size);
            }
        }
    }
    best[k + 1..].to_vec()
}

/// Strict balance by integer cross-multiplication.
pub fn strictly_balanced_oracle(p: &Pattern, h_table: &[usize]) -> bool {
    let (k, v, h) = (p.k() as i64, i64::from(p.v()), p.h() as i64);
    h_table.iter().enumerate().all(|(j, &hi)| {
        let i = k + 1 + j as i64;
        i == v || hi == 0 || (h - 1) * (i - k) > (hi as i64 - 1) * (v - k)
    })
}

pub fn max_codegree_oracle(p: &Pattern) -> usize {
    subsets(p.v(), p.k() - 1)
        .iter()
        .map(|u| {
            p.edges()
                .iter()
                .filter(|e| u.iter().all(|x| e.contains(x)))
                .count()
        })
        .max()
        .unwrap_or(0)
}

fn sorted(mut e: Vec<u32>) -> Vec<u32> {
    e.sort_unstable();
    e
}

/// Calls `visit` with every injective map `0..v -> 0..n` satisfying `allowed`.
pub fn injective_maps(
    v: usize,
    n: u32,
    allowed: &dyn Fn(usize, u32) -> bool,
    visit: &mut dyn FnMut(&[u32]),
) {
    fn go(
        i: usize,
        v: usize,
        n: u32,
        map: &mut Vec<u32>,
        allowed: &dyn Fn(usize, u32) -> bool,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if i == v {
            visit(map);
            return;
        }
        for x in 0..n {
            if !map.contains(&x) && allowed(i, x) {
                map.push(x);
                go(i + 1, v, n, map, allowed, visit);
                map.pop();
            }
        }
    }
    go(0, v, n, &mut Vec::with_capacity(v), allowed, visit);
}

fn image(p_edges: &[Vec<u32>], map: &[u32]) -> Vec<Vec<u32>> {
    let mut img: Vec<Vec<u32>> = p_edges
        .iter()
        .map(|e| sorted(e.iter().map(|&x| map[x as usize]).collect()))
        .collect();
    img.sort();
    img
}

/// Every copy of `p` in `h`, identified by its image edge set.
pub fn all_copies(h: &Hypergraph, p: &Pattern) -> BTreeSet<Vec<Vec<u32>>> {
    let mut out = BTreeSet::new();
    injective_maps(p.v() as usize, h.n(), &|_, _| true, &mut |m| {
        let img = image(p.edges(), m);
        if img.iter().all(|e| h.contains_sorted(e)) {
            out.insert(img);
        }
    });
    out
}

pub fn copies_through(h: &Hypergraph, p: &Pattern, f: &[u32]) -> usize {
    all_copies(h, p)
        .iter()
        .filter(|c| c.iter().any(|e| e == f))
        .count()
}

pub fn has_copy(h: &Hypergraph, p: &Pattern) -> bool {
    let mut found = false;
    injective_maps(p.v() as usize, h.n(), &|_, _| true, &mut |m| {
        if !found
            && p.edges()
                .iter()
                .all(|e| h.contains_sorted(&sorted(e.iter().map(|&x| m[x as usize]).collect())))
        {
            found = true;
        }
    });
    found
}

/// `(distinct copies, labeled embeddings)` of the rooted pattern with the given
/// root, neighbourhood and edge list, constrained as an extension of `(roots, target)`.
pub fn extensions(
    h: &Hypergraph,
    v: u32,
    edges: &[Vec<u32>],
    root: &[u32],
    neighborhood: &[u32],
    roots: &[u32],
    target: &[u32],
) -> (usize, usize) {
    let mut labeled = 0;
    let mut copies = BTreeSet::new();
    let allowed = |i: usize, x: u32| {
        let i = i as u32;
        if let Some(pos) = root.iter().position(|&u| u == i) {
            x == roots[pos]
        } else if neighborhood.contains(&i) {
            target.contains(&x)
        } else {
            !target.contains(&x)
        }
    };
    injective_maps(v as usize, h.n(), &allowed, &mut |m| {
        let img = image(edges, m);
        if img.iter().all(|e| h.contains_sorted(e)) {
            labeled += 1;
            copies.insert(img);
        }
    });
    (copies.len(), labeled)
}

/// The ordered-cluster condition, checked on explicit edge lists.
pub fn is_cluster(copies: &[Vec<u64>], order: &[usize], f: u64) -> bool {
    let mut seen = BTreeSet::new();
    let distinct: BTreeSet<usize> = order.iter().copied().collect();
    if distinct.len() != order.len() {
        return false;
    }
    for (i, &c) in order.iter().enumerate() {
        if !copies[c].contains(&f) {
            return false;
        }
        if i > 0 && !copies[c].iter().any(|e| !seen.contains(e)) {
            return false;
        }
        seen.extend(copies[c].iter().copied());
    }
    true
}

/// A seeded `G(n, p)`-style host built edge by edge, independent of the crate's birth orders.
pub fn random_host(n: u32, k: usize, p: f64, seed: u64) -> Hypergraph {
    let mut state = seed ^ 0x5DEE_CE66_D1CE_4E5B;
    let mut next = || {
        state = state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let edges: Vec<Vec<u32>> = subsets(n, k).into_iter().filter(|_| next() < p).collect();
    Hypergraph::from_edges(n, k, edges).unwrap()
}
