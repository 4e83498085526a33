//! Simplicial complexes on small vertex sets, stored as bitmask face lists.
//!
//! Two complexes are attached to a generator set A and a degree c: the pile
//! complex (faces are subsets whose componentwise sum stays below c) and the
//! divisor complex (the remainder must lie in the semigroup NA). The void
//! complex, which has no faces at all, is distinct from the complex whose only
//! face is the empty set.

use crate::error::{Error, Result};
use crate::lattice::{GeneratorSet, MultiDegree, SemigroupOracle};

/// Faces are u64 bitmasks, so complexes cap out at 63 vertices.
pub const MAX_VERTICES: usize = 63;

/// Brute-force Alexander duals enumerate all subsets; cap the vertex count.
pub const ALEXANDER_MAX_VERTICES: usize = 24;

/// A finite simplicial complex. `faces[k]` lists the faces with k vertices
/// (dimension k-1); an empty outer list is the void complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: Vec<Vec<u64>>,
}

fn vertices_of(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        out.push(v);
        m &= m - 1;
    }
    out
}

fn sort_level(level: &mut [u64]) {
    // lexicographic on vertex lists, which for equal-cardinality masks is
    // numeric order on the reversed bit pattern of the lowest set bits; plain
    // vertex-list comparison keeps it obvious
    level.sort_by_key(|&mask| vertices_of(mask));
}

impl SimplicialComplex {
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: Vec::new(),
        }
    }

    /// The complex whose only face is the empty set.
    pub fn empty_face_only(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: vec![vec![0]],
        }
    }

    /// Downward closure of the given generating faces. Duplicates are fine;
    /// an empty list yields the void complex.
    pub fn from_maximal_faces(vertex_count: usize, generators: &[Vec<usize>]) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: vertex_count,
                cap: MAX_VERTICES,
            });
        }
        if generators.is_empty() {
            return Ok(Self::void(vertex_count));
        }
        let mut by_card: Vec<std::collections::BTreeSet<u64>> = Vec::new();
        for gen in generators {
            let mut mask = 0u64;
            for &v in gen {
                if v >= vertex_count {
                    return Err(Error::DimensionMismatch {
                        expected: vertex_count,
                        got: v + 1,
                    });
                }
                mask |= 1 << v;
            }
            // enumerate all submasks of mask, including 0
            let mut sub = mask;
            loop {
                let card = sub.count_ones() as usize;
                if by_card.len() <= card {
                    by_card.resize_with(card + 1, Default::default);
                }
                by_card[card].insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        let mut faces: Vec<Vec<u64>> = by_card
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        for level in &mut faces {
            sort_level(level);
        }
        Ok(SimplicialComplex {
            vertex_count,
            faces,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension of the complex; None when void, -1 for the empty-face complex.
    pub fn dim(&self) -> Option<i64> {
        if self.is_void() {
            None
        } else {
            Some(self.faces.len() as i64 - 2)
        }
    }

    /// Faces with `card` vertices, sorted; empty slice out of range.
    pub fn faces_of_card(&self, card: usize) -> &[u64] {
        self.faces.get(card).map_or(&[], |v| v.as_slice())
    }

    /// Largest face cardinality present; None when void.
    pub fn max_card(&self) -> Option<usize> {
        if self.is_void() {
            None
        } else {
            Some(self.faces.len() - 1)
        }
    }

    pub fn contains_face(&self, mask: u64) -> bool {
        let card = mask.count_ones() as usize;
        self.faces.get(card).is_some_and(|level| {
            level
                .binary_search_by_key(&vertices_of(mask), |&f| vertices_of(f))
                .is_ok()
        })
    }

    /// Count of all faces, the empty face included.
    pub fn face_count(&self) -> usize {
        self.faces.iter().map(|l| l.len()).sum()
    }

    /// Face counts by cardinality starting at the empty face; empty when void.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(|l| l.len()).collect()
    }

    /// Maximal faces as sorted vertex lists, lexicographically ordered.
    pub fn maximal_faces(&self) -> Vec<Vec<usize>> {
        if self.is_void() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for card in 0..self.faces.len() {
            let above = self.faces.get(card + 1);
            for &f in &self.faces[card] {
                let covered = above
                    .map(|lvl| lvl.iter().any(|&g| g & f == f))
                    .unwrap_or(false);
                if !covered {
                    out.push(vertices_of(f));
                }
            }
        }
        out.sort();
        out
    }

    /// Every subset of a face must be a face; exposed for property tests.
    pub fn is_downward_closed(&self) -> bool {
        if self.is_void() {
            return true;
        }
        if self.faces[0] != vec![0] {
            return false;
        }
        for card in 1..self.faces.len() {
            for &f in &self.faces[card] {
                for v in vertices_of(f) {
                    if !self.contains_face(f & !(1 << v)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// JSON form: vertex count plus maximal faces; `expanded` adds the full
    /// face list keyed by dimension.
    pub fn to_value(&self, expanded: bool) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "vertices": self.vertex_count,
            "maximal_faces": self.maximal_faces(),
        });
        if expanded {
            let mut by_dim = serde_json::Map::new();
            for (card, level) in self.faces.iter().enumerate() {
                let dim = card as i64 - 1;
                let faces: Vec<Vec<usize>> = level.iter().map(|&f| vertices_of(f)).collect();
                by_dim.insert(dim.to_string(), serde_json::json!(faces));
            }
            obj["faces_by_dimension"] = serde_json::Value::Object(by_dim);
        }
        obj
    }
}

fn check_degree(set: &GeneratorSet, c: &MultiDegree) -> Result<()> {
    if c.len() != set.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: set.ambient_dim(),
            got: c.len(),
        });
    }
    if set.points().len() > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: set.points().len(),
            cap: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Grow faces level by level: a candidate S + {v} with v above max(S) is kept
/// iff `admit` accepts its point sum. Downward closure of both target
/// complexes makes this exhaustive.
fn grow_complex<F>(set: &GeneratorSet, mut admit: F) -> SimplicialComplex
where
    F: FnMut(&MultiDegree) -> bool,
{
    let m = set.points().len();
    let mut faces: Vec<Vec<u64>> = vec![vec![0]];
    let mut frontier: Vec<(u64, MultiDegree)> = vec![(0, MultiDegree::zeros(set.ambient_dim()))];
    loop {
        let mut next: Vec<(u64, MultiDegree)> = Vec::new();
        for (mask, sum) in &frontier {
            let start = if *mask == 0 {
                0
            } else {
                64 - mask.leading_zeros() as usize
            };
            for v in start..m {
                let s2 = sum.add(&set.points()[v]);
                if admit(&s2) {
                    next.push((mask | 1 << v, s2));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let mut level: Vec<u64> = next.iter().map(|(m, _)| *m).collect();
        sort_level(&mut level);
        faces.push(level);
        frontier = next;
    }
    SimplicialComplex {
        vertex_count: m,
        faces,
    }
}

/// Pile complex: subsets of A whose sum is componentwise at most c.
/// Void exactly when c has a negative coordinate.
pub fn pile_complex(set: &GeneratorSet, c: &MultiDegree) -> Result<SimplicialComplex> {
    check_degree(set, c)?;
    if !c.is_nonnegative() {
        return Ok(SimplicialComplex::void(set.points().len()));
    }
    Ok(grow_complex(set, |sum| sum.leq(c)))
}

/// Divisor complex: subsets of A with c minus the sum in the semigroup NA.
/// Void exactly when c itself is outside NA.
pub fn divisor_complex(set: &GeneratorSet, c: &MultiDegree) -> Result<SimplicialComplex> {
    let mut oracle = set.semigroup_oracle();
    divisor_complex_with(set, c, &mut oracle)
}

/// Divisor complex sharing a caller-owned semigroup oracle across degrees.
pub fn divisor_complex_with(
    set: &GeneratorSet,
    c: &MultiDegree,
    oracle: &mut SemigroupOracle<'_>,
) -> Result<SimplicialComplex> {
    check_degree(set, c)?;
    if !oracle.contains(c) {
        return Ok(SimplicialComplex::void(set.points().len()));
    }
    Ok(grow_complex(set, |sum| oracle.contains(&c.sub(sum))))
}

/// Combinatorial Alexander dual: faces are complements of non-faces.
pub fn alexander_dual(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    let m = k.vertex_count();
    if m > ALEXANDER_MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: m,
            cap: ALEXANDER_MAX_VERTICES,
        });
    }
    let full: u64 = if m == 64 { u64::MAX } else { (1 << m) - 1 };
    let mut is_face = vec![false; 1 << m];
    for level in &k.faces {
        for &f in level {
            is_face[f as usize] = true;
        }
    }
    let mut by_card: Vec<Vec<u64>> = vec![Vec::new(); m + 1];
    let mut any = false;
    for mask in 0..=full {
        if !is_face[(full ^ mask) as usize] {
            by_card[mask.count_ones() as usize].push(mask);
            any = true;
        }
    }
    if !any {
        return Ok(SimplicialComplex::void(m));
    }
    while by_card.last().is_some_and(|l| l.is_empty()) {
        by_card.pop();
    }
    for level in &mut by_card {
        sort_level(level);
    }
    debug_assert!(!by_card.is_empty() && by_card[0] == vec![0]);
    Ok(SimplicialComplex {
        vertex_count: m,
        faces: by_card,
    })
}
