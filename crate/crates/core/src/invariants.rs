//! Closed-form invariants of Veronese embeddings: projective dimension,
//! regularity bounds, the Gorenstein criterion with its Betti-table symmetry,
//! and the highest syzygy read off by counting, not by homology.

use rayon::prelude::*;
use serde_json::json;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::lattice::{GeneratorSet, MultiDegree, WeightsVector};

/// Projective dimension N - n for a set of N+1 generators in n+1 coordinates.
/// Valid when the coordinate ring is Cohen-Macaulay, which holds for every
/// Veronese set; custom sets should trust the table instead.
pub fn projective_dimension(set: &GeneratorSet) -> i64 {
    set.top_index()
}

/// Largest homological index carrying a nonzero entry of a computed table.
pub fn projective_dimension_from_table(table: &BettiTable) -> i64 {
    table.max_index()
}

/// Castelnuovo-Mumford regularity data for the Veronese of weights q in
/// degree d, with s = dr:
///
/// * `bound`: n + 1 - ceil(sum q / s), an upper bound for the regularity;
/// * `rho`: ceil(sum q / s) * s - sum q, the defect of the rounding;
/// * `equality_certified`: true when rho is a nonnegative integer combination
///   of the weights, which forces the bound to be attained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub bound: i64,
    pub rho: i64,
    pub equality_certified: bool,
    pub lower_bound_from_top_syzygy: Option<i64>,
}

impl RegularityReport {
    /// Attach the lower bound max(zdegree) - (N - n) read off a highest
    /// syzygy scan of the same embedding.
    pub fn with_syzygy(mut self, syzygy: &HighestSyzygyReport) -> Self {
        self.lower_bound_from_top_syzygy = syzygy.regularity_lower_bound();
        self
    }

    pub fn to_value(&self) -> serde_json::Value {
        json!({
            "bound": self.bound,
            "rho": self.rho,
            "equality_certified": self.equality_certified,
            "lower_bound_from_top_syzygy": self.lower_bound_from_top_syzygy,
        })
    }
}

/// Regularity bound for the degree-d Veronese of weights q.
pub fn regularity_bound(weights: &WeightsVector, d: i64) -> Result<RegularityReport> {
    if d <= 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    let s = d * weights.r();
    let sum = weights.sum();
    let n = weights.len() as i64 - 1;
    let ceil = (sum + s - 1) / s;
    let rho = ceil * s - sum;
    debug_assert!((0..s).contains(&rho));
    let equality_certified = partition_count(weights.weights(), rho)? > 0;
    Ok(RegularityReport {
        bound: n + 1 - ceil,
        rho,
        equality_certified,
        lower_bound_from_top_syzygy: None,
    })
}

/// Number of b >= 0 with q . b = k (the weighted partition count).
pub fn partition_count(weights: &[i64], k: i64) -> Result<u128> {
    for &q in weights {
        if q <= 0 {
            return Err(Error::NonPositiveWeight(q));
        }
    }
    if k < 0 {
        return Ok(0);
    }
    let k = k as usize;
    let mut dp = vec![0u128; k + 1];
    dp[0] = 1;
    for &q in weights {
        let q = q as usize;
        for v in q..=k {
            dp[v] = dp[v]
                .checked_add(dp[v - q])
                .expect("partition count exceeds u128");
        }
    }
    Ok(dp[k])
}

/// True when s = dr divides sum q; the Veronese ring is Gorenstein exactly
/// then.
pub fn gorenstein_condition(weights: &WeightsVector, d: i64) -> Result<bool> {
    if d <= 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    Ok(weights.sum() % (d * weights.r()) == 0)
}

/// Outcome of checking the self-duality beta_{i,j} = beta_{p-i,delta-j} of a
/// Z-graded table, with p the top homological index and delta the top
/// Z-degree, both read off the table itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub p: i64,
    pub delta: i64,
    pub holds: bool,
    /// Entries (i, j, beta_{i,j}, beta_{p-i,delta-j}) violating the symmetry.
    pub failures: Vec<(i64, i64, usize, usize)>,
}

impl SymmetryReport {
    pub fn to_value(&self) -> serde_json::Value {
        json!({
            "p": self.p,
            "delta": self.delta,
            "holds": self.holds,
            "failures": self.failures,
        })
    }
}

/// Stanley's symmetry test on a computed table: a graded Cohen-Macaulay
/// quotient is Gorenstein exactly when the table is its own reflection
/// through (p, delta). Purely table-driven, so it applies to custom sets too;
/// the divisibility test predicts the verdict for Veronese input.
pub fn gorenstein_symmetry_check(table: &BettiTable) -> Result<SymmetryReport> {
    let z: std::collections::BTreeMap<(i64, i64), usize> = table
        .zgraded()?
        .into_iter()
        .map(|(i, j, b)| ((i, j), b))
        .collect();
    if z.is_empty() {
        return Err(Error::IncompleteTable);
    }
    let p = z.keys().map(|&(i, _)| i).max().unwrap();
    let delta = z.keys().map(|&(_, j)| j).max().unwrap();
    let mut failures = Vec::new();
    let mut keys: Vec<(i64, i64)> = z.keys().copied().collect();
    keys.extend(z.keys().map(|&(i, j)| (p - i, delta - j)));
    keys.sort_unstable();
    keys.dedup();
    for (i, j) in keys {
        let here = z.get(&(i, j)).copied().unwrap_or(0);
        let there = z.get(&(p - i, delta - j)).copied().unwrap_or(0);
        if here != there {
            failures.push((i, j, here, there));
        }
    }
    Ok(SymmetryReport {
        p,
        delta,
        holds: failures.is_empty(),
        failures,
    })
}

/// The highest syzygy module of a Veronese embedding, found by scanning the
/// box prod [0, s/q_i - 1] for exponent vectors b that dominate no generator:
/// each such b with t - b - 1 in the degree lattice contributes one generator
/// of the last module in the resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestSyzygyReport {
    /// N - n, the homological index of the last nonzero module.
    pub homological_index: i64,
    /// Generator degrees with their zdegrees, sorted by degree.
    pub generators: Vec<(MultiDegree, i64)>,
}

impl HighestSyzygyReport {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn max_zdegree(&self) -> Option<i64> {
        self.generators.iter().map(|&(_, z)| z).max()
    }

    /// reg >= max zdegree - (N - n), a lower bound matching the upper bound
    /// exactly when the regularity bound is attained at the top.
    pub fn regularity_lower_bound(&self) -> Option<i64> {
        self.max_zdegree().map(|z| z - self.homological_index)
    }

    pub fn to_value(&self) -> serde_json::Value {
        let generators: Vec<serde_json::Value> = self
            .generators
            .iter()
            .map(|(c, z)| json!({ "c": c.coords(), "zdeg": z }))
            .collect();
        json!({
            "homological_index": self.homological_index,
            "rank": self.rank(),
            "generators": generators,
        })
    }
}

const SCAN_CELL_BUDGET: u128 = 200_000_000;

/// Scan for the highest syzygy of the degree-d Veronese of weights q.
///
/// beta_{N-n,c} counts the degrees c in the lattice whose complement
/// b = t - c - 1 lies in the scan box and dominates no generator; the scan
/// enumerates the box directly, so no homology is computed. Boxes beyond an
/// internal cell budget are rejected rather than attempted.
pub fn highest_syzygy(weights: &WeightsVector, d: i64) -> Result<HighestSyzygyReport> {
    let set = crate::lattice::veronese_generators(weights, d)?;
    let s = d * weights.r();
    let q = weights.weights();
    let dim = q.len();
    let t = set.t().coords().to_vec();

    let radix: Vec<i64> = q.iter().map(|&qi| s / qi).collect();
    let cells: u128 = radix.iter().map(|&m| m as u128).product();
    if cells > SCAN_CELL_BUDGET {
        return Err(Error::BoxTooLarge {
            cells,
            budget: SCAN_CELL_BUDGET,
        });
    }

    // only points inside the box can ever be dominated by a box vector
    let boxed_points: Vec<&[i64]> = set
        .points()
        .iter()
        .map(|p| p.coords())
        .filter(|p| p.iter().zip(&radix).all(|(&a, &m)| a < m))
        .collect();
    let q_dot_t: i64 = q.iter().zip(&t).map(|(&w, &x)| w * x).sum();
    let sum_q: i64 = q.iter().sum();
    let target = (q_dot_t - sum_q).rem_euclid(s);

    let mut generators: Vec<(MultiDegree, i64)> = (0..cells as u64)
        .into_par_iter()
        .filter_map(|cell| {
            let mut b = vec![0i64; dim];
            let mut rest = cell;
            for i in (0..dim).rev() {
                b[i] = (rest % radix[i] as u64) as i64;
                rest /= radix[i] as u64;
            }
            let q_dot_b: i64 = q.iter().zip(&b).map(|(&w, &x)| w * x).sum();
            if q_dot_b.rem_euclid(s) != target {
                return None;
            }
            if boxed_points
                .iter()
                .any(|a| a.iter().zip(&b).all(|(&x, &y)| y >= x))
            {
                return None;
            }
            let c: Vec<i64> = t.iter().zip(&b).map(|(&ti, &bi)| ti - bi - 1).collect();
            let z = (q_dot_t - q_dot_b - sum_q) / s;
            Some((MultiDegree::new(c), z))
        })
        .collect();
    generators.sort();
    Ok(HighestSyzygyReport {
        homological_index: set.top_index(),
        generators,
    })
}

/// Rank of the highest syzygy of the degree-d Veronese of ordinary projective
/// n-space, in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PnHighestRank {
    pub value: u128,
    /// d = 1 is the identity embedding: the resolution stops at index 0 and
    /// the counting formula does not apply.
    pub degenerate: bool,
}

impl PnHighestRank {
    pub fn to_value(&self) -> serde_json::Value {
        let value = match u64::try_from(self.value) {
            Ok(v) => json!(v),
            Err(_) => json!(self.value.to_string()),
        };
        json!({ "value": value, "degenerate": self.degenerate })
    }
}

/// binomial(m, k) in u128; inputs large enough to overflow are a caller bug.
fn binomial(m: u128, k: u128) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc
            .checked_mul(m - k + i)
            .expect("binomial coefficient exceeds u128")
            / i;
    }
    acc
}

/// Closed-form rank of the highest syzygy for the d-th Veronese of P^n:
/// binomial(dn - d*delta + d - 1, n) with delta = n + 1 - ceil((n+1)/d).
pub fn pn_highest_rank(n: u32, d: i64) -> Result<PnHighestRank> {
    if d <= 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    if d == 1 {
        return Ok(PnHighestRank {
            value: 0,
            degenerate: true,
        });
    }
    let n = n as i64;
    let delta = n + 1 - (n + d) / d;
    let m = d * n - d * delta + d - 1;
    debug_assert!(m >= 0);
    Ok(PnHighestRank {
        value: binomial(m as u128, n as u128),
        degenerate: false,
    })
}
