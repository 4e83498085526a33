//! Reduced simplicial homology over a chosen coefficient field.
//!
//! Chain complexes are augmented: the empty face spans the degree -1 chain
//! group, and the boundary of a vertex is the empty face. Conventions: the
//! void complex has zero homology everywhere, and the empty-face complex has
//! one dimension in degree -1.

use std::collections::BTreeMap;
use std::collections::HashMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{self, SparseIntMatrix};

/// Sparse signed incidence matrix of one boundary map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    /// Homological degree k of the source: the map sends k-faces to (k-1)-faces.
    pub source_dim: i64,
    pub rows: usize,
    pub cols: usize,
    /// (row, col, sign) with sign in {-1, +1}.
    pub entries: Vec<(usize, usize, i64)>,
}

impl BoundaryMatrix {
    pub fn to_sparse(&self) -> SparseIntMatrix {
        SparseIntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.clone(),
        }
    }
}

fn vertices_of(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Boundary map out of the dimension-k chain group. Orientation follows the
/// sorted vertex order: dropping the j-th smallest vertex contributes (-1)^j.
/// Out-of-range dimensions give an empty matrix.
pub fn boundary_matrix(k: &SimplicialComplex, dim: i64) -> Result<BoundaryMatrix> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let card = dim + 1; // number of vertices in a source face
    let cols_faces = if card >= 0 {
        k.faces_of_card(card as usize)
    } else {
        &[]
    };
    let rows_faces = if card >= 1 {
        k.faces_of_card(card as usize - 1)
    } else {
        &[]
    };
    let mut entries = Vec::new();
    if !rows_faces.is_empty() && !cols_faces.is_empty() {
        let row_index: HashMap<u64, usize> = rows_faces
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        for (j, &g) in cols_faces.iter().enumerate() {
            for (pos, v) in vertices_of(g).into_iter().enumerate() {
                let f = g & !(1 << v);
                let i = row_index[&f];
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                entries.push((i, j, sign));
            }
        }
    }
    Ok(BoundaryMatrix {
        source_dim: dim,
        rows: rows_faces.len(),
        cols: cols_faces.len(),
        entries,
    })
}

/// Dimensions of reduced homology, keyed by degree; zero entries are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub field: FieldSpec,
    dims: BTreeMap<i64, usize>,
}

impl HomologyProfile {
    pub fn dim(&self, i: i64) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims.iter().map(|(&i, &d)| (i, d))
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    /// JSON form: field label plus a map from degree to dimension.
    pub fn to_value(&self) -> serde_json::Value {
        let dims: serde_json::Map<String, serde_json::Value> = self
            .dims
            .iter()
            .map(|(i, d)| (i.to_string(), serde_json::json!(d)))
            .collect();
        serde_json::json!({ "field": self.field.label(), "dims": dims })
    }
}

fn boundary_ranks(k: &SimplicialComplex, field: &FieldSpec, transpose: bool) -> Vec<usize> {
    let max_card = k.max_card().expect("nonvoid");
    let mut ranks = vec![0usize; max_card + 2];
    for card in 1..=max_card {
        let b = boundary_matrix(k, card as i64 - 1).expect("nonvoid");
        let m = if transpose {
            b.to_sparse().transpose()
        } else {
            b.to_sparse()
        };
        ranks[card] = linalg::rank(&m, field);
    }
    ranks
}

/// Reduced homology dimensions of a complex over the field.
pub fn reduced_betti_dims(k: &SimplicialComplex, field: &FieldSpec) -> HomologyProfile {
    let mut dims = BTreeMap::new();
    if !k.is_void() {
        let max_card = k.max_card().expect("nonvoid");
        let ranks = boundary_ranks(k, field, false);
        for card in 0..=max_card {
            let faces = k.faces_of_card(card).len();
            let h = faces - ranks[card] - ranks[card + 1];
            if h > 0 {
                dims.insert(card as i64 - 1, h);
            }
        }
    }
    HomologyProfile {
        field: *field,
        dims,
    }
}

/// Reduced cohomology dimensions, computed from transposed boundary maps.
/// Over a field these match [`reduced_betti_dims`]; keeping the transposed
/// route separate lets duality checks exercise both.
pub fn reduced_cohomology_dims(k: &SimplicialComplex, field: &FieldSpec) -> HomologyProfile {
    let mut dims = BTreeMap::new();
    if !k.is_void() {
        let max_card = k.max_card().expect("nonvoid");
        let ranks = boundary_ranks(k, field, true);
        for card in 0..=max_card {
            let faces = k.faces_of_card(card).len();
            let h = faces - ranks[card] - ranks[card + 1];
            if h > 0 {
                dims.insert(card as i64 - 1, h);
            }
        }
    }
    HomologyProfile {
        field: *field,
        dims,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::pile_complex;
    use crate::lattice::{make_weights, veronese_generators, MultiDegree};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn closure(m: usize, gens: &[Vec<usize>]) -> SimplicialComplex {
        SimplicialComplex::from_maximal_faces(m, gens).unwrap()
    }

    #[test]
    fn single_edge_boundary_signs() {
        let k = closure(2, &[vec![0, 1]]);
        let b1 = boundary_matrix(&k, 1).unwrap();
        // d{0,1} = {1} - {0}; entries are emitted in dropped-position order
        assert_eq!(b1.entries, vec![(1, 0, 1), (0, 0, -1)]);
        let b0 = boundary_matrix(&k, 0).unwrap();
        assert_eq!(b0.entries, vec![(0, 0, 1), (0, 1, 1)]); // augmentation row
        assert!(boundary_matrix(&k, 5).unwrap().entries.is_empty());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = closure(5, &[vec![0, 1, 2, 3], vec![2, 3, 4]]);
        let max = k.max_card().unwrap() as i64 - 1;
        for dim in 0..=max {
            let low = boundary_matrix(&k, dim - 1).unwrap();
            let high = boundary_matrix(&k, dim).unwrap();
            // compose over the integers
            let mut product = vec![vec![0i64; high.cols]; low.rows.max(1)];
            for &(i, j, v) in &high.entries {
                for &(r, c, w) in &low.entries {
                    if c == i {
                        product[r][j] += w * v;
                    }
                }
            }
            assert!(
                product.iter().flatten().all(|&x| x == 0),
                "dd != 0 at dim {dim}"
            );
        }
    }

    #[test]
    fn homology_of_basic_shapes() {
        let void = SimplicialComplex::void(3);
        assert!(reduced_betti_dims(&void, &Q).is_trivial());
        assert!(matches!(boundary_matrix(&void, 0), Err(Error::VoidComplex)));

        let empty = SimplicialComplex::empty_face_only(3);
        let h = reduced_betti_dims(&empty, &Q);
        assert_eq!(h.dim(-1), 1);
        assert_eq!(h.total(), 1);

        let two_points = closure(2, &[vec![0], vec![1]]);
        let h = reduced_betti_dims(&two_points, &Q);
        assert_eq!(h.dim(0), 1);

        let circle = closure(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let h = reduced_betti_dims(&circle, &Q);
        assert_eq!(h.dim(1), 1);
        assert_eq!(h.total(), 1);

        let disk = closure(3, &[vec![0, 1, 2]]);
        assert!(reduced_betti_dims(&disk, &Q).is_trivial());

        let sphere = closure(
            4,
            &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        );
        let h = reduced_betti_dims(&sphere, &Q);
        assert_eq!(h.dim(2), 1);
        assert_eq!(h.total(), 1);
    }

    #[test]
    fn surface_pile_homology_from_the_table() {
        let set = veronese_generators(&make_weights(&[1, 1, 1]).unwrap(), 2).unwrap();
        let k = pile_complex(&set, &MultiDegree::new(vec![2, 2, 2])).unwrap();
        let h = reduced_betti_dims(&k, &Q);
        assert_eq!(h.dim(1), 2);
        assert_eq!(h.total(), 2);
        let k1 = pile_complex(&set, &MultiDegree::new(vec![1, 1, 1])).unwrap();
        let h1 = reduced_betti_dims(&k1, &Q);
        assert_eq!(h1.dim(0), 2);
        assert_eq!(h1.total(), 2);
    }

    #[test]
    fn cohomology_matches_homology_over_fields() {
        let shapes = [
            closure(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]),
            closure(4, &[vec![0, 1, 2], vec![2, 3]]),
            SimplicialComplex::empty_face_only(2),
        ];
        for k in &shapes {
            for f in [Q, FieldSpec::Prime(2), FieldSpec::Prime(32003)] {
                assert_eq!(reduced_betti_dims(k, &f), reduced_cohomology_dims(k, &f));
            }
        }
    }

    #[test]
    fn real_projective_plane_feels_characteristic_two() {
        // minimal 6-vertex triangulation of RP^2: antipodal icosahedron
        let rp2 = closure(
            6,
            &[
                vec![0, 1, 2],
                vec![0, 2, 3],
                vec![0, 3, 4],
                vec![0, 4, 5],
                vec![0, 5, 1],
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![3, 4, 1],
                vec![4, 5, 2],
                vec![5, 1, 3],
            ],
        );
        assert_eq!(rp2.f_vector(), vec![1, 6, 15, 10]);
        let hq = reduced_betti_dims(&rp2, &Q);
        assert!(hq.is_trivial());
        let h2 = reduced_betti_dims(&rp2, &FieldSpec::Prime(2));
        assert_eq!(h2.dim(1), 1);
        assert_eq!(h2.dim(2), 1);
        let h3 = reduced_betti_dims(&rp2, &FieldSpec::Prime(3));
        assert!(h3.is_trivial());
    }

    #[test]
    fn profile_json_omits_zeros() {
        let empty = SimplicialComplex::empty_face_only(1);
        let v = reduced_betti_dims(&empty, &Q).to_value();
        assert_eq!(v["field"], "Q");
        assert_eq!(v["dims"]["-1"], 1);
        assert!(v["dims"].get("0").is_none());
    }
}
