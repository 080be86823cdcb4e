//! Exact pattern calculus: k-density, strict k-balance, the subgraph edge
//! maxima `h_i`, the gaps `δ_i`, and the scaling exponents they predict.
//!
//! Everything on the verdict path is an exact rational; no floating point.

use std::fmt;

use itertools::Itertools;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::pattern::Pattern;

pub type Rational = Ratio<i64>;

fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Formats as `p/q` (always with a denominator).
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exponents of `n` and `log n` in the upper bound on `Δ_{k-1}(R_{n,1})` and
/// `e(R_{n,1})`, and in the matching lower bound on `e(R_{n,1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSet {
    /// `1 - (v-k)/(h-1)`
    pub codegree_upper: Rational,
    /// `k - (v-k)/(h-1)`
    pub edges_upper: Rational,
    /// `3/(d-1) - 1/(h-1)`; undefined when `d = 1`.
    pub log_upper: Option<Rational>,
    /// `k - (v-k)/(h-1)`
    pub edges_lower: Rational,
    /// `1/(h-1)`
    pub log_lower: Rational,
}

impl ExponentSet {
    fn compute(k: usize, v: u32, h: usize, d: usize) -> ExponentSet {
        let (k, v, h, d) = (k as i64, i64::from(v), h as i64, d as i64);
        let shrink = ratio(v - k, h - 1);
        ExponentSet {
            codegree_upper: Rational::from_integer(1) - shrink,
            edges_upper: Rational::from_integer(k) - shrink,
            log_upper: (d > 1).then(|| ratio(3, d - 1) - ratio(1, h - 1)),
            edges_lower: Rational::from_integer(k) - shrink,
            log_lower: ratio(1, h - 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternProfile {
    pub name: String,
    pub k: usize,
    pub v: u32,
    pub h: usize,
    /// `(h-1)/(v-k)`
    pub k_density: Rational,
    /// `h_i` for `i = k+1 ..= v`.
    pub h_table: Vec<usize>,
    /// `δ_i` for `i = k+1 ..= v`.
    pub delta_table: Vec<Rational>,
    pub delta: Rational,
    /// `d = Δ_{k-1}(F)`
    pub codeg: usize,
    pub strictly_balanced: bool,
    pub theorem_applicable: bool,
    pub exponents: ExponentSet,
    pub warnings: Vec<String>,
}

impl PatternProfile {
    /// `h_i`, for `k+1 <= i <= v`.
    pub fn h_i(&self, i: usize) -> Option<usize> {
        i.checked_sub(self.k + 1)
            .and_then(|j| self.h_table.get(j))
            .copied()
    }

    pub fn delta_i(&self, i: usize) -> Option<Rational> {
        i.checked_sub(self.k + 1)
            .and_then(|j| self.delta_table.get(j))
            .copied()
    }

    /// Single-line `key=value` record; rationals as `p/q`.
    pub fn to_record(&self) -> String {
        let h_table = self.h_table.iter().join(";");
        let delta_table = self.delta_table.iter().map(fmt_rational).join(";");
        let e = &self.exponents;
        format!(
            "pattern={} k={} v={} h={} k_density={} h_table={} delta_table={} delta={} codeg={} \
             strictly_balanced={} theorem_applicable={} codegree_upper={} edges_upper={} \
             log_upper={} edges_lower={} log_lower={}",
            self.name,
            self.k,
            self.v,
            self.h,
            fmt_rational(&self.k_density),
            h_table,
            delta_table,
            fmt_rational(&self.delta),
            self.codeg,
            self.strictly_balanced,
            self.theorem_applicable,
            fmt_rational(&e.codegree_upper),
            fmt_rational(&e.edges_upper),
            e.log_upper
                .as_ref()
                .map_or("undefined".into(), fmt_rational),
            fmt_rational(&e.edges_lower),
            fmt_rational(&e.log_lower),
        )
    }
}

impl fmt::Display for PatternProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pattern            {}", self.name)?;
        writeln!(f, "k, v, h            {}, {}, {}", self.k, self.v, self.h)?;
        writeln!(f, "k-density          {}", fmt_rational(&self.k_density))?;
        writeln!(f, "max co-degree d    {}", self.codeg)?;
        writeln!(f, "strictly balanced  {}", self.strictly_balanced)?;
        writeln!(f, "theorem applies    {}", self.theorem_applicable)?;
        writeln!(f, "  i   h_i   delta_i")?;
        for (j, (hi, di)) in self.h_table.iter().zip(&self.delta_table).enumerate() {
            writeln!(f, "{:>3} {:>5}   {}", self.k + 1 + j, hi, fmt_rational(di))?;
        }
        writeln!(f, "delta              {}", fmt_rational(&self.delta))?;
        let e = &self.exponents;
        writeln!(
            f,
            "edges   ~ n^{} (log n)^{}   [upper]",
            fmt_rational(&e.edges_upper),
            e.log_upper.as_ref().map_or("?".into(), fmt_rational)
        )?;
        writeln!(
            f,
            "codeg   ~ n^{} (log n)^{}   [upper]",
            fmt_rational(&e.codegree_upper),
            e.log_upper.as_ref().map_or("?".into(), fmt_rational)
        )?;
        writeln!(
            f,
            "edges   ~ n^{} (log n)^{}   [lower]",
            fmt_rational(&e.edges_lower),
            fmt_rational(&e.log_lower)
        )?;
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

/// Maximum edge count of a subgraph on exactly `i` vertices, for every `i`.
///
/// A densest subgraph on a given vertex count can always be taken vertex-induced,
/// so enumerating vertex subsets suffices.
fn induced_maxima(p: &Pattern) -> Vec<usize> {
    let masks = p.edge_masks();
    let v = p.v();
    let mut best = vec![0usize; v as usize + 1];
    for s in 0u32..(1 << v) {
        let inside = masks.iter().filter(|&&m| m & !s == 0).count();
        let size = s.count_ones() as usize;
        best[size] = best[size].max(inside);
    }
    best
}

pub fn analyze(p: &Pattern) -> Result<PatternProfile> {
    let (k, v, h) = (p.k(), p.v(), p.h());
    if v as usize <= k {
        return Err(Error::InvalidPattern(format!("v = {v} <= k = {k}")));
    }
    if h < 2 {
        return Err(Error::InvalidPattern(format!(
            "pattern has {h} edge(s); the k-density needs h >= 2"
        )));
    }
    let maxima = induced_maxima(p);
    let vi = v as usize;
    let h_table: Vec<usize> = (k + 1..=vi)
        .map(|i| if i == vi { h - 1 } else { maxima[i] })
        .collect();

    let (ki, vi64, hi64) = (k as i64, i64::from(v), h as i64);
    let k_density = ratio(hi64 - 1, vi64 - ki);
    let strictly_balanced = (k + 1..vi).all(|i| {
        let hi = h_table[i - k - 1] as i64;
        k_density > ratio(hi - 1, i as i64 - ki)
    });
    let delta_table: Vec<Rational> = (k + 1..=vi)
        .map(|i| {
            let hi = h_table[i - k - 1] as i64;
            Rational::from_integer(i as i64 - ki) - ratio((hi - 1) * (vi64 - ki), hi64 - 1)
        })
        .collect();
    let delta = *delta_table.iter().min().expect("v >= k+1");

    let codeg = p.to_hypergraph().max_codegree();
    let theorem_applicable = strictly_balanced && h + k > vi && codeg >= 2;
    debug_assert!(!strictly_balanced || delta_table.iter().all(Signed::is_positive));

    let warnings = p
        .isolated_vertices()
        .iter()
        .map(|x| format!("vertex {x} lies in no edge"))
        .collect();

    Ok(PatternProfile {
        name: p.name().to_string(),
        k,
        v,
        h,
        k_density,
        h_table,
        delta_table,
        delta,
        codeg,
        strictly_balanced,
        theorem_applicable,
        exponents: ExponentSet::compute(k, v, h, codeg),
        warnings,
    })
}

/// Exponents together with the reasons they may not be backed by the theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub exponents: ExponentSet,
    pub theorem_applicable: bool,
    pub reasons: Vec<String>,
}

pub fn predicted_exponents(profile: &PatternProfile) -> Prediction {
    let mut reasons = Vec::new();
    if !profile.strictly_balanced {
        reasons.push("pattern is not strictly k-balanced".to_string());
    }
    if profile.h + profile.k <= profile.v as usize {
        reasons.push(format!(
            "h = {} < v - k + 1 = {}",
            profile.h,
            profile.v as usize + 1 - profile.k
        ));
    }
    if profile.codeg < 2 {
        reasons.push(format!(
            "maximum co-degree {} < 2 (log exponent undefined)",
            profile.codeg
        ));
    }
    Prediction {
        exponents: profile.exponents.clone(),
        theorem_applicable: profile.theorem_applicable,
        reasons,
    }
}

/// Conjectured edge exponent `hℓ/(h-1)` for the ℓ-cycle of length `h`.
pub fn conjectured_cycle_exponent(ell: usize, h: usize) -> Result<Rational> {
    if h < 2 {
        return Err(Error::InvalidPattern("cycle length must be >= 2".into()));
    }
    Ok(ratio((h * ell) as i64, h as i64 - 1))
}

/// `F̂`: the pattern minus every edge through the root (k-1)-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedPattern {
    pub base: Pattern,
    /// Ascending root tuple `U = (u_1, ..., u_{k-1})`.
    pub root: Vec<u32>,
    /// `N_F(U)`, ascending.
    pub root_neighborhood: Vec<u32>,
    pub removed_edge_count: usize,
}

impl RootedPattern {
    /// Roots `p` at an explicit ascending (k-1)-set.
    pub fn with_root(p: &Pattern, root: &[u32]) -> Result<RootedPattern> {
        let k = p.k();
        if root.len() + 1 != k || root.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSet {
                vertices: root.to_vec(),
                reason: format!("root must be an ascending {}-set", k - 1),
            });
        }
        if root.iter().any(|&x| x >= p.v()) {
            return Err(Error::InvalidSet {
                vertices: root.to_vec(),
                reason: "root vertex outside the pattern".into(),
            });
        }
        let (through, rest): (Vec<_>, Vec<_>) = p
            .edges()
            .iter()
            .cloned()
            .partition(|e| root.iter().all(|u| e.contains(u)));
        let mut neighborhood: Vec<u32> = through
            .iter()
            .map(|e| *e.iter().find(|x| !root.contains(x)).expect("k > k-1"))
            .collect();
        neighborhood.sort_unstable();
        let base = Pattern::new(k, p.v(), rest)?.with_name(format!("{}-rooted", p.name()));
        Ok(RootedPattern {
            base,
            root: root.to_vec(),
            root_neighborhood: neighborhood,
            removed_edge_count: through.len(),
        })
    }

    /// Pattern vertices outside the root and its neighbourhood.
    pub fn outer_vertices(&self) -> Vec<u32> {
        (0..self.base.v())
            .filter(|x| !self.root.contains(x) && !self.root_neighborhood.contains(x))
            .collect()
    }
}

/// Roots `p` at the lexicographically smallest (k-1)-set of maximum co-degree.
pub fn select_root(p: &Pattern) -> Result<RootedPattern> {
    let hg = p.to_hypergraph();
    let d = hg.max_codegree();
    if d == 0 {
        return Err(Error::InvalidPattern("pattern has no edges to root".into()));
    }
    let root = (0..p.v())
        .combinations(p.k() - 1)
        .find(|u| hg.neighbors_sorted(u).len() == d)
        .expect("a (k-1)-set attains the maximum");
    RootedPattern::with_root(p, &root)
}

/// Nearest `f64` to a rational.
pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl ExponentSet {
    pub fn is_consistent(&self, k: usize) -> bool {
        (self.edges_upper - self.codegree_upper - Rational::from_integer(k as i64 - 1)).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{
        builtin, diamond, disjoint_edges, make_clique, make_complete_multipartite, make_ell_cycle,
    };

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn k4_graph_profile() {
        let prof = analyze(&make_clique(4, 2).unwrap()).unwrap();
        assert_eq!(prof.k_density, r(5, 2));
        assert!(prof.strictly_balanced);
        assert_eq!(prof.codeg, 3);
        assert_eq!(prof.h_i(3), Some(3));
        assert_eq!(prof.h_i(4), Some(5));
        assert_eq!(prof.delta_i(3), Some(r(1, 5)));
        assert_eq!(prof.delta_i(4), Some(r(2, 5)));
        assert_eq!(prof.delta, r(1, 5));
        assert!(prof.theorem_applicable);
    }

    #[test]
    fn diamond_not_strictly_balanced() {
        let prof = analyze(&diamond()).unwrap();
        assert!(!prof.strictly_balanced);
        assert!(!prof.theorem_applicable);
    }

    #[test]
    fn loose_cycle_fails_codegree_condition() {
        let prof = analyze(&make_ell_cycle(1, 3, 3).unwrap()).unwrap();
        assert!(prof.strictly_balanced);
        assert_eq!(prof.codeg, 1);
        assert!(!prof.theorem_applicable);
        assert_eq!(prof.exponents.log_upper, None);
        let pred = predicted_exponents(&prof);
        assert!(!pred.theorem_applicable);
        assert!(pred.reasons.iter().any(|s| s.contains("co-degree")));
    }

    #[test]
    fn disjoint_edges_not_applicable() {
        let prof = analyze(&disjoint_edges()).unwrap();
        assert_eq!(prof.codeg, 1);
        assert!(!prof.theorem_applicable);
        assert_eq!(predicted_exponents(&prof).reasons.len(), 2);
    }

    #[test]
    fn exponent_examples() {
        let tri = analyze(&make_clique(3, 2).unwrap()).unwrap().exponents;
        assert_eq!(tri.edges_upper, r(3, 2));
        assert_eq!(tri.codegree_upper, r(1, 2));
        assert_eq!(tri.log_lower, r(1, 2));
        // 3/(2-1) - 1/2
        assert_eq!(tri.log_upper, Some(r(5, 2)));

        let k43 = analyze(&make_clique(4, 3).unwrap()).unwrap().exponents;
        assert_eq!(k43.edges_upper, r(8, 3));
        assert_eq!(k43.codegree_upper, r(2, 3));

        let c24 = analyze(&make_ell_cycle(2, 4, 3).unwrap())
            .unwrap()
            .exponents;
        assert_eq!(c24.edges_upper, r(8, 3));
        assert_eq!(conjectured_cycle_exponent(2, 4).unwrap(), r(8, 3));
    }

    #[test]
    fn conjecture_matches_edge_exponent_for_cycles() {
        for k in 2..=5usize {
            for ell in 1..k {
                for h in 2..=8usize {
                    let Ok(c) = make_ell_cycle(ell, h, k) else {
                        continue;
                    };
                    let prof = analyze(&c).unwrap();
                    assert_eq!(
                        prof.exponents.edges_upper,
                        conjectured_cycle_exponent(ell, h).unwrap(),
                        "ell={ell} h={h} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_degenerate_patterns() {
        let single = crate::pattern::Pattern::new(2, 3, vec![vec![0, 1]]).unwrap();
        assert!(analyze(&single).is_err());
    }

    #[test]
    fn multipartite_is_strictly_balanced() {
        for (r_, parts, k) in [(2, 2, 2), (2, 3, 2), (2, 3, 3), (3, 3, 3), (2, 4, 3)] {
            let p = make_complete_multipartite(r_, parts, k).unwrap();
            let prof = analyze(&p).unwrap();
            assert!(prof.strictly_balanced, "{}", p.name());
            assert!(prof.theorem_applicable, "{}", p.name());
            assert!(prof.codeg >= r_ as usize);
        }
    }

    #[test]
    fn root_selection() {
        let tri = select_root(&make_clique(3, 2).unwrap()).unwrap();
        assert_eq!(tri.root, vec![0]);
        assert_eq!(tri.root_neighborhood, vec![1, 2]);
        assert_eq!(tri.base.edges(), &[vec![1, 2]]);

        let k43 = select_root(&make_clique(4, 3).unwrap()).unwrap();
        assert_eq!(k43.root, vec![0, 1]);
        assert_eq!(k43.root_neighborhood, vec![2, 3]);
        assert_eq!(k43.base.edges(), &[vec![0, 2, 3], vec![1, 2, 3]]);
        assert_eq!(k43.removed_edge_count, 2);

        let cyc = select_root(&make_ell_cycle(2, 4, 3).unwrap()).unwrap();
        assert_eq!(cyc.root, vec![0, 1]);
        assert_eq!(cyc.root_neighborhood, vec![2, 3]);
        assert_eq!(cyc.base.h(), 2);
    }

    #[test]
    fn rooted_pattern_invariants() {
        for name in [
            "k4",
            "k4-3",
            "clique:5:3",
            "cycle:1:3:3",
            "multipartite:2:3:3",
        ] {
            let p = builtin(name).unwrap();
            let rp = select_root(&p).unwrap();
            let d = p.to_hypergraph().max_codegree();
            assert_eq!(rp.removed_edge_count, d);
            assert_eq!(rp.root_neighborhood.len(), d);
            assert_eq!(rp.base.h(), p.h() - d);
            assert!(rp
                .base
                .edges()
                .iter()
                .all(|e| !rp.root.iter().all(|u| e.contains(u))));
            for &x in &rp.root_neighborhood {
                let mut e = rp.root.clone();
                e.push(x);
                e.sort_unstable();
                assert!(p.edges().contains(&e));
            }
        }
    }

    #[test]
    fn record_format() {
        let prof = analyze(&make_clique(3, 2).unwrap()).unwrap();
        let rec = prof.to_record();
        assert!(rec.starts_with("pattern=clique:3:2 k=2 v=3 h=3 k_density=2/1"));
        assert!(rec.contains("edges_upper=3/2"));
        assert!(!rec.contains('\n'));
        assert!(prof.exponents.is_consistent(2));
    }
}
