//! Binomial coefficients and the colexicographic combinatorial number system.
//!
//! A sorted k-set `v_0 < v_1 < ... < v_{k-1}` has colex rank
//! `C(v_0, 1) + C(v_1, 2) + ... + C(v_{k-1}, k)`, a bijection onto `[0, C(n, k))`.

use crate::error::{Error, Result};

/// Largest number of k-sets addressable by a 64-bit rank.
pub const MAX_RANK_SPACE: u64 = 1 << 63;

/// `C(n, k)`, or `None` on u64 overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// Precomputed Pascal rows `C(v, j)` for `v <= n`, `j <= k`, used to rank and
/// unrank sets of size at most `k` over `[0, n)` without recomputing binomials.
#[derive(Debug, Clone)]
pub struct Ranker {
    n: u32,
    k: usize,
    stride: usize,
    table: Vec<u64>,
}

impl Ranker {
    pub fn new(n: u32, k: usize) -> Result<Self> {
        let total = binomial(u64::from(n), k as u64).unwrap_or(u64::MAX);
        if total >= MAX_RANK_SPACE {
            return Err(Error::Dimensions(format!(
                "C({n},{k}) does not fit a 63-bit rank"
            )));
        }
        let stride = n as usize + 1;
        let mut table = vec![0u64; stride * (k + 1)];
        table[..stride].fill(1);
        for j in 1..=k {
            for v in 1..stride {
                let above = table[(j - 1) * stride + v - 1];
                let left = table[j * stride + v - 1];
                table[j * stride + v] = above.saturating_add(left);
            }
        }
        Ok(Ranker {
            n,
            k,
            stride,
            table,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `C(v, j)` for `v <= n`, `j <= k`.
    #[inline]
    pub fn choose(&self, v: u32, j: usize) -> u64 {
        self.table[j * self.stride + v as usize]
    }

    /// Number of `j`-subsets of `[0, n)`.
    pub fn count(&self, j: usize) -> u64 {
        self.choose(self.n, j)
    }

    /// Colex rank of a strictly increasing slice; no validation.
    #[inline]
    pub fn rank(&self, sorted: &[u32]) -> u64 {
        let mut r = 0;
        for (j, &v) in sorted.iter().enumerate() {
            r += self.table[(j + 1) * self.stride + v as usize];
        }
        r
    }

    /// Inverse of [`Ranker::rank`] for sets of size `out.len()`.
    pub fn unrank_into(&self, mut rank: u64, out: &mut [u32]) {
        let mut upper = self.stride - 1;
        for j in (1..=out.len()).rev() {
            let row = &self.table[j * self.stride..j * self.stride + upper];
            let v = row.partition_point(|&c| c <= rank) - 1;
            rank -= row[v];
            out[j - 1] = v as u32;
            upper = v;
        }
    }

    pub fn unrank(&self, rank: u64, size: usize) -> Vec<u32> {
        let mut out = vec![0; size];
        self.unrank_into(rank, &mut out);
        out
    }
}

/// Checks that `vertices` is strictly increasing and bounded by `n`.
pub fn validate_sorted_set(vertices: &[u32], n: u32) -> Result<()> {
    if let Some(w) = vertices.windows(2).find(|w| w[0] >= w[1]) {
        let reason = if w[0] == w[1] {
            "repeated vertex"
        } else {
            "vertices not ascending"
        };
        return Err(Error::InvalidEdge {
            vertices: vertices.to_vec(),
            reason: reason.into(),
        });
    }
    if let Some(&last) = vertices.last() {
        if last >= n {
            return Err(Error::InvalidEdge {
                vertices: vertices.to_vec(),
                reason: format!("vertex {last} out of range for n = {n}"),
            });
        }
    }
    Ok(())
}

/// Colex rank of a strictly increasing vertex set over `[0, n)`.
pub fn colex_rank(vertices: &[u32], n: u32) -> Result<u64> {
    validate_sorted_set(vertices, n)?;
    let mut r = 0u64;
    for (j, &v) in vertices.iter().enumerate() {
        let c = binomial(u64::from(v), j as u64 + 1)
            .ok_or_else(|| Error::Dimensions("rank overflow".into()))?;
        r = r
            .checked_add(c)
            .ok_or_else(|| Error::Dimensions("rank overflow".into()))?;
    }
    Ok(r)
}

/// Colex unrank of `rank` into a `k`-set over `[0, n)`.
pub fn colex_unrank(rank: u64, n: u32, k: usize) -> Result<Vec<u32>> {
    let ranker = Ranker::new(n, k)?;
    if rank >= ranker.count(k) {
        return Err(Error::Dimensions(format!(
            "rank {rank} out of range for C({n},{k})"
        )));
    }
    Ok(ranker.unrank(rank, k))
}

/// Small insertion sort for the short vertex buffers used on hot paths.
#[inline]
pub fn sort_small(buf: &mut [u32]) {
    for i in 1..buf.len() {
        let x = buf[i];
        let mut j = i;
        while j > 0 && buf[j - 1] > x {
            buf[j] = buf[j - 1];
            j -= 1;
        }
        buf[j] = x;
    }
}
