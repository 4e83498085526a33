//! Cross-validation on the named corpus: field independence of homology,
//! field independence of whole Betti tables, the Mayer-Vietoris covering
//! description of the Alexander dual, and the ring-condition verdicts.

use pilehom::betti::{betti_table, Method, TableOptions};
use pilehom::complex::{alexander_dual, divisor_complex, pile_complex, SimplicialComplex};
use pilehom::field::FieldSpec;
use pilehom::homology::reduced_betti_dims;
use pilehom::lattice::{
    custom_generators, degrees_in_box, make_weights, veronese_generators, GeneratorSet, MultiDegree,
};
use pilehom::verify::verify_conditions;

const Q: FieldSpec = FieldSpec::Rationals;

fn veronese(q: &[i64], d: i64) -> GeneratorSet {
    veronese_generators(&make_weights(q).unwrap(), d).unwrap()
}

fn sublattice_example() -> GeneratorSet {
    let points = [
        vec![4, 0, 0],
        vec![2, 2, 0],
        vec![1, 1, 1],
        vec![0, 4, 0],
        vec![0, 0, 2],
    ];
    custom_generators(points.into_iter().map(MultiDegree::new).collect()).unwrap()
}

/// The named sets every recorded cross-check runs over.
fn corpus() -> Vec<GeneratorSet> {
    vec![
        veronese(&[1, 1], 2),
        veronese(&[1, 1], 3),
        veronese(&[1, 1], 4),
        veronese(&[1, 1, 2], 1),
        veronese(&[1, 1, 1], 2),
        veronese(&[2, 3], 1),
        sublattice_example(),
    ]
}

fn window(set: &GeneratorSet) -> Vec<MultiDegree> {
    let lo = vec![-1i64; set.ambient_dim()];
    let hi = set.t().coords().to_vec();
    degrees_in_box(&lo, &hi)
}

#[test]
fn homology_profiles_are_field_independent_on_corpus() {
    let fields = [
        FieldSpec::Prime(2),
        FieldSpec::Prime(3),
        FieldSpec::Prime(32003),
    ];
    for set in corpus() {
        for c in window(&set) {
            let gamma = pile_complex(&set, &c).unwrap();
            let delta = divisor_complex(&set, &c).unwrap();
            for k in [&gamma, &delta] {
                let rational = reduced_betti_dims(k, &Q);
                for p in &fields {
                    let modular = reduced_betti_dims(k, p);
                    assert_eq!(
                        rational.iter().collect::<Vec<_>>(),
                        modular.iter().collect::<Vec<_>>(),
                        "profiles differ over {p:?} at c={c}"
                    );
                }
            }
        }
    }
}

#[test]
fn betti_tables_are_field_independent_on_corpus() {
    for set in corpus() {
        let opts = TableOptions::default();
        let rational = betti_table(&set, &Q, Method::Both, &opts).unwrap();
        assert!(rational.disagreements().is_empty());
        for p in [FieldSpec::Prime(2), FieldSpec::Prime(32003)] {
            let modular = betti_table(&set, &p, Method::Both, &opts).unwrap();
            assert!(modular.disagreements().is_empty());
            assert_eq!(
                rational.entries().collect::<Vec<_>>(),
                modular.entries().collect::<Vec<_>>(),
                "tables differ over {p:?}"
            );
        }
    }
}

/// The proof of the duality theorem covers the Alexander dual of a pile
/// complex by the complexes at degrees c^(j): coordinate j cut to
/// t_j - c_j - 1, the rest released to t. The union of the covers must equal
/// the dual computed by non-face complementation.
#[test]
fn alexander_dual_equals_covering_union() {
    for set in corpus() {
        let t = set.t().coords().to_vec();
        for c in window(&set) {
            let gamma = pile_complex(&set, &c).unwrap();
            let dual = alexander_dual(&gamma).unwrap();
            let mut cover_faces: Vec<Vec<usize>> = Vec::new();
            for j in 0..set.ambient_dim() {
                let mut cj = t.clone();
                cj[j] = t[j] - c.coords()[j] - 1;
                let cover = pile_complex(&set, &MultiDegree::new(cj)).unwrap();
                cover_faces.extend(cover.maximal_faces());
            }
            let union =
                SimplicialComplex::from_maximal_faces(set.points().len(), &cover_faces).unwrap();
            assert_eq!(dual, union, "covering mismatch at c={c}");
        }
    }
}

#[test]
fn ring_conditions_hold_on_veronese_corpus_and_sublattice() {
    for set in corpus() {
        let report = verify_conditions(&set).unwrap();
        assert!(report.homogeneous, "{:?}", set.provenance());
        assert!(report.cone_contains_orthant);
        assert!(report.saturation);
        assert!(report.equivalence);
        assert!(report.agree);
        assert_eq!(report.witness, None);
    }
}
