//! Weighted projective data: weight vectors, multidegrees, and generator sets.
//!
//! A generator set A is a finite list of distinct points of N^(n+1), ordered
//! lexicographically descending. The standard sets come from a weight vector q
//! and an embedding degree d: A consists of all a with q.a = d*r, where r is
//! the least common multiple of the weights. Custom sets are accepted as-is
//! and carry a homogenizing functional omega (omega.a = 1 for every a) when
//! one exists.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, SmithForm};

/// Positive weights with gcd 1, together with r = lcm of the weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightsVector {
    q: Vec<i64>,
    r: i64,
}

/// Validates weights: all positive, gcd 1.
pub fn make_weights(raw: &[i64]) -> Result<WeightsVector> {
    if raw.is_empty() {
        return Err(Error::EmptySet);
    }
    for &w in raw {
        if w <= 0 {
            return Err(Error::NonPositiveWeight(w));
        }
    }
    let g = raw.iter().fold(0i64, |acc, &w| acc.gcd(&w));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    let r = raw.iter().fold(1i64, |acc, &w| acc.lcm(&w));
    Ok(WeightsVector { q: raw.to_vec(), r })
}

impl WeightsVector {
    pub fn weights(&self) -> &[i64] {
        &self.q
    }

    /// lcm of the weights.
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.q.iter().sum()
    }
}

impl fmt::Display for WeightsVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.q.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Integer vector in the grading group; coordinates may be negative.
///
/// The derived `Ord` is lexicographic and is used for deterministic
/// orderings only; the componentwise partial order is exposed via [`MultiDegree::leq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiDegree(Vec<i64>);

impl MultiDegree {
    pub fn new(coords: Vec<i64>) -> Self {
        MultiDegree(coords)
    }

    pub fn zeros(len: usize) -> Self {
        MultiDegree(vec![0; len])
    }

    pub fn ones(len: usize) -> Self {
        MultiDegree(vec![1; len])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise partial order.
    pub fn leq(&self, other: &MultiDegree) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        debug_assert_eq!(self.len(), other.len());
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &MultiDegree) -> MultiDegree {
        debug_assert_eq!(self.len(), other.len());
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn dot(&self, weights: &[i64]) -> i64 {
        debug_assert_eq!(self.len(), weights.len());
        self.0.iter().zip(weights).map(|(a, w)| a * w).sum()
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// How a generator set was built; standard sets remember their weights and degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Veronese { weights: WeightsVector, d: i64 },
    Custom,
}

/// Finite set of lattice points generating the semigroup under study.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    points: Vec<MultiDegree>,
    ambient: usize,
    t: MultiDegree,
    omega: Option<Vec<BigRational>>,
    snf: SmithForm,
    provenance: Provenance,
}

impl PartialEq for GeneratorSet {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.provenance == other.provenance
    }
}

impl Eq for GeneratorSet {}

/// All points a in N^(n+1) with q.a = target, lexicographically descending.
pub fn weighted_degree_points(weights: &[i64], target: i64) -> Vec<MultiDegree> {
    fn rec(weights: &[i64], target: i64, prefix: &mut Vec<i64>, out: &mut Vec<MultiDegree>) {
        if weights.len() == 1 {
            if target >= 0 && target % weights[0] == 0 {
                prefix.push(target / weights[0]);
                out.push(MultiDegree::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for a in (0..=target / weights[0]).rev() {
            prefix.push(a);
            rec(&weights[1..], target - weights[0] * a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if target >= 0 && !weights.is_empty() {
        rec(weights, target, &mut Vec::new(), &mut out);
    }
    out
}

fn build_set(points: Vec<MultiDegree>, provenance: Provenance) -> Result<GeneratorSet> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let ambient = points[0].len();
    if ambient == 0 {
        return Err(Error::EmptySet);
    }
    for p in &points {
        if p.len() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                got: p.len(),
            });
        }
        if !p.is_nonnegative() {
            return Err(Error::NegativeCoordinate);
        }
    }
    let mut sorted = points;
    sorted.sort_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicatePoint);
    }
    let t = sorted
        .iter()
        .fold(MultiDegree::zeros(ambient), |acc, p| acc.add(p));
    let rows: Vec<Vec<i64>> = sorted.iter().map(|p| p.coords().to_vec()).collect();
    let omega = linalg::solve_all_ones(&rows, ambient);
    let snf = linalg::smith_normal_form(&rows, ambient);
    Ok(GeneratorSet {
        points: sorted,
        ambient,
        t,
        omega,
        snf,
        provenance,
    })
}

/// Standard generator set of the degree-d embedding for weights q.
pub fn veronese_generators(weights: &WeightsVector, d: i64) -> Result<GeneratorSet> {
    if d <= 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    let points = weighted_degree_points(weights.weights(), d * weights.r());
    build_set(
        points,
        Provenance::Veronese {
            weights: weights.clone(),
            d,
        },
    )
}

/// Generator set from explicit points. Points must be distinct with
/// nonnegative coordinates; omega is solved for and may be absent.
pub fn custom_generators(points: Vec<MultiDegree>) -> Result<GeneratorSet> {
    build_set(points, Provenance::Custom)
}

impl GeneratorSet {
    pub fn points(&self) -> &[MultiDegree] {
        &self.points
    }

    /// Ambient dimension n+1.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// n, the projective dimension of the underlying space.
    pub fn n(&self) -> usize {
        self.ambient - 1
    }

    /// N, where the set has N+1 points.
    pub fn index_bound(&self) -> usize {
        self.points.len() - 1
    }

    /// N - n, the homological index of the highest syzygy.
    pub fn top_index(&self) -> i64 {
        self.index_bound() as i64 - self.n() as i64
    }

    /// Componentwise sum of all points.
    pub fn t(&self) -> &MultiDegree {
        &self.t
    }

    pub fn omega(&self) -> Option<&[BigRational]> {
        self.omega.as_deref()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.omega.is_some()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Rank of the lattice spanned by the points.
    pub fn lattice_rank(&self) -> usize {
        self.snf.rank
    }

    /// The complement degree t - c - 1. An involution on multidegrees.
    pub fn check_complement(&self, c: &MultiDegree) -> Result<MultiDegree> {
        if c.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: c.len(),
            });
        }
        Ok(self.t.sub(c).sub(&MultiDegree::ones(self.ambient)))
    }

    /// True iff every axis has a positive multiple of its unit vector in the set.
    pub fn cone_contains_orthant(&self) -> bool {
        (0..self.ambient).all(|i| {
            self.points.iter().any(|p| {
                p.coords()[i] > 0
                    && p.coords()
                        .iter()
                        .enumerate()
                        .all(|(j, &x)| j == i || x == 0)
            })
        })
    }

    /// Membership in the group ZA generated by the points.
    pub fn in_lattice(&self, c: &MultiDegree) -> bool {
        assert_eq!(c.len(), self.ambient, "degree has the ambient dimension");
        self.snf.contains(c.coords())
    }

    /// Membership in the semigroup NA; convenience wrapper over a fresh oracle.
    pub fn in_semigroup(&self, b: &MultiDegree) -> bool {
        self.semigroup_oracle().contains(b)
    }

    /// Memoized semigroup membership. The memo is owned by the oracle, so
    /// concurrent callers each build their own.
    pub fn semigroup_oracle(&self) -> SemigroupOracle<'_> {
        SemigroupOracle {
            set: self,
            memo: HashMap::new(),
        }
    }

    /// omega . c; errors when the set is inhomogeneous.
    pub fn zdegree(&self, c: &MultiDegree) -> Result<BigRational> {
        if c.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: c.len(),
            });
        }
        let omega = self.omega.as_ref().ok_or(Error::InhomogeneousSet)?;
        let mut acc = BigRational::zero();
        for (x, w) in c.coords().iter().zip(omega) {
            acc += BigRational::from_integer(BigInt::from(*x)) * w;
        }
        Ok(acc)
    }

    /// Canonical JSON form: points, weights (null for custom), d (null for custom).
    pub fn to_value(&self) -> serde_json::Value {
        let points: Vec<Vec<i64>> = self.points.iter().map(|p| p.coords().to_vec()).collect();
        match &self.provenance {
            Provenance::Veronese { weights, d } => serde_json::json!({
                "points": points,
                "weights": weights.weights(),
                "d": d,
            }),
            Provenance::Custom => serde_json::json!({
                "points": points,
                "weights": null,
                "d": null,
            }),
        }
    }
}

/// Serialized form of a generator set; see [`GeneratorSet::to_value`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorSetSpec {
    #[serde(default)]
    pub points: Vec<Vec<i64>>,
    #[serde(default)]
    pub weights: Option<Vec<i64>>,
    #[serde(default)]
    pub d: Option<i64>,
}

impl GeneratorSetSpec {
    pub fn build(&self) -> Result<GeneratorSet> {
        match (&self.weights, self.d) {
            (Some(w), Some(d)) => {
                let set = veronese_generators(&make_weights(w)?, d)?;
                if !self.points.is_empty() {
                    let mut given: Vec<MultiDegree> = self
                        .points
                        .iter()
                        .map(|p| MultiDegree::new(p.clone()))
                        .collect();
                    given.sort_by(|a, b| b.cmp(a));
                    if given != set.points {
                        return Err(Error::SpecMismatch);
                    }
                }
                Ok(set)
            }
            (None, None) => custom_generators(
                self.points
                    .iter()
                    .map(|p| MultiDegree::new(p.clone()))
                    .collect(),
            ),
            _ => Err(Error::SpecMismatch),
        }
    }
}

/// Memoized membership testing for the semigroup NA.
pub struct SemigroupOracle<'a> {
    set: &'a GeneratorSet,
    memo: HashMap<Vec<i64>, bool>,
}

impl SemigroupOracle<'_> {
    pub fn contains(&mut self, b: &MultiDegree) -> bool {
        assert_eq!(
            b.len(),
            self.set.ambient,
            "degree has the ambient dimension"
        );
        if !b.is_nonnegative() {
            return false;
        }
        if b.is_zero() {
            return true;
        }
        if let Some(&hit) = self.memo.get(b.coords()) {
            return hit;
        }
        let mut found = false;
        for a in &self.set.points {
            // descent: b in NA iff b - a in NA for some generator a <= b
            if !a.is_zero() && a.leq(b) && self.contains(&b.sub(a)) {
                found = true;
                break;
            }
        }
        self.memo.insert(b.coords().to_vec(), found);
        found
    }
}

/// All integer vectors in the box [lo, hi], ascending lexicographically.
/// Empty when some interval is empty.
pub fn degrees_in_box(lo: &[i64], hi: &[i64]) -> Vec<MultiDegree> {
    debug_assert_eq!(lo.len(), hi.len());
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<i64> = lo.to_vec();
    loop {
        out.push(MultiDegree::new(cur.clone()));
        let mut i = cur.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                for j in i + 1..cur.len() {
                    cur[j] = lo[j];
                }
                break;
            }
        }
    }
}

/// Number of cells in the box [lo, hi] (0 when empty).
pub fn box_cells(lo: &[i64], hi: &[i64]) -> u128 {
    let mut cells: u128 = 1;
    for (l, h) in lo.iter().zip(hi) {
        if l > h {
            return 0;
        }
        cells = cells.saturating_mul((h - l + 1) as u128);
    }
    cells
}
