//! Verifiers for the duality theorem, its hypotheses, and the combinatorial
//! facts the Betti formulas rest on. Each verifier recomputes both sides of
//! an identity through independent code paths and reports rather than trusts.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::complex::{alexander_dual, divisor_complex_with, pile_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{reduced_betti_dims, reduced_cohomology_dims, HomologyProfile};
use crate::lattice::{box_cells, custom_generators, degrees_in_box, GeneratorSet, MultiDegree};

const VERIFY_CELL_BUDGET: u128 = 4_000_000;

/// Dimension maps keyed by homological index i, zero entries omitted.
pub type IndexDims = BTreeMap<i64, usize>;

fn dims_json(dims: &IndexDims) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = dims
        .iter()
        .map(|(&i, &d)| (i.to_string(), json!(d)))
        .collect();
    serde_json::Value::Object(map)
}

/// Both sides of the duality at one degree: dim H~_{i-1}(Gamma_c) on the
/// left, dim H~_{(N-n)-i-1}(Gamma_{t-c-1}) on the right, compared over every
/// index where either side is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCheck {
    pub c: MultiDegree,
    pub complement: MultiDegree,
    pub lhs: IndexDims,
    pub rhs: IndexDims,
    pub holds: bool,
}

impl DualityCheck {
    pub fn to_value(&self) -> serde_json::Value {
        json!({
            "c": self.c.coords(),
            "complement": self.complement.coords(),
            "lhs_dims": dims_json(&self.lhs),
            "rhs_dims": dims_json(&self.rhs),
            "holds": self.holds,
        })
    }
}

/// Check the duality at a single degree. Requires the cone of A to contain
/// the orthant (for A in the nonnegative orthant this means an axis multiple
/// per coordinate), the hypothesis under which the duality is stated.
pub fn verify_duality(
    set: &GeneratorSet,
    c: &MultiDegree,
    field: &FieldSpec,
) -> Result<DualityCheck> {
    if !set.cone_contains_orthant() {
        return Err(Error::ConeConditionFailed);
    }
    let complement = set.check_complement(c)?;
    let left = reduced_betti_dims(&pile_complex(set, c)?, field);
    let right = reduced_betti_dims(&pile_complex(set, &complement)?, field);
    let top = set.top_index();
    let mut lhs = IndexDims::new();
    for (h, dim) in left.iter() {
        lhs.insert(h + 1, dim);
    }
    let mut rhs = IndexDims::new();
    for (h, dim) in right.iter() {
        rhs.insert(top - h - 1, dim);
    }
    let holds = lhs == rhs;
    Ok(DualityCheck {
        c: c.clone(),
        complement,
        lhs,
        rhs,
        holds,
    })
}

/// Shape of a randomized duality run.
#[derive(Debug, Clone, Copy)]
pub struct FuzzConfig {
    /// Largest projective dimension n to draw; ambient dimension is n + 1.
    pub max_n: usize,
    /// Largest number of extra points beyond the injected axis multiples.
    pub max_points: usize,
    /// Coordinate cap; also the scale of the injected axis points.
    pub max_coordinate: i64,
    pub trials: usize,
    pub seed: u64,
    pub field: FieldSpec,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            max_n: 2,
            max_points: 7,
            max_coordinate: 4,
            trials: 200,
            seed: 1,
            field: FieldSpec::Rationals,
        }
    }
}

/// One failed trial, with enough data to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzFailure {
    pub trial: usize,
    pub points: Vec<Vec<i64>>,
    pub c: Vec<i64>,
    pub lhs: IndexDims,
    pub rhs: IndexDims,
}

/// Outcome of a randomized run; `failures` is empty on success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub trials: usize,
    pub seed: u64,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_value(&self) -> serde_json::Value {
        let failures: Vec<serde_json::Value> = self
            .failures
            .iter()
            .map(|f| {
                json!({
                    "trial": f.trial,
                    "A": f.points,
                    "c": f.c,
                    "lhs_dims": dims_json(&f.lhs),
                    "rhs_dims": dims_json(&f.rhs),
                })
            })
            .collect();
        json!({
            "trials": self.trials,
            "seed": self.seed,
            "failures": failures,
        })
    }
}

/// Random set satisfying the cone hypothesis: one axis point
/// max_coordinate * e_i per coordinate, plus random distinct extras.
pub fn random_generator_set<R: Rng>(
    rng: &mut R,
    max_n: usize,
    max_points: usize,
    max_coordinate: i64,
) -> GeneratorSet {
    let dim = rng.gen_range(1..=max_n + 1);
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..dim {
        let mut axis = vec![0i64; dim];
        axis[i] = max_coordinate.max(1);
        seen.insert(axis);
    }
    let extras = rng.gen_range(0..=max_points);
    for _ in 0..extras {
        let p: Vec<i64> = (0..dim)
            .map(|_| rng.gen_range(0..=max_coordinate))
            .collect();
        if p.iter().any(|&x| x > 0) {
            seen.insert(p);
        }
    }
    let points = seen.into_iter().map(MultiDegree::new).collect();
    custom_generators(points).expect("random points are distinct and nonnegative")
}

/// Random degree with coordinates in [-1, t_i], the range where pile
/// complexes change shape.
pub fn random_degree<R: Rng>(rng: &mut R, set: &GeneratorSet) -> MultiDegree {
    let c: Vec<i64> = set
        .t()
        .coords()
        .iter()
        .map(|&ti| rng.gen_range(-1..=ti))
        .collect();
    MultiDegree::new(c)
}

/// Randomized duality run: deterministic for a fixed config (each trial is
/// seeded from the master stream independently of scheduling).
pub fn fuzz_duality(config: &FuzzConfig) -> Result<FuzzReport> {
    let mut master = ChaCha8Rng::seed_from_u64(config.seed);
    let seeds: Vec<u64> = (0..config.trials).map(|_| master.gen()).collect();
    let outcomes: Result<Vec<Option<FuzzFailure>>> = seeds
        .par_iter()
        .enumerate()
        .map(|(trial, &seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let set = random_generator_set(
                &mut rng,
                config.max_n,
                config.max_points,
                config.max_coordinate,
            );
            let c = random_degree(&mut rng, &set);
            let check = verify_duality(&set, &c, &config.field)?;
            if check.holds {
                Ok(None)
            } else {
                Ok(Some(FuzzFailure {
                    trial,
                    points: set.points().iter().map(|p| p.coords().to_vec()).collect(),
                    c: c.coords().to_vec(),
                    lhs: check.lhs,
                    rhs: check.rhs,
                }))
            }
        })
        .collect();
    Ok(FuzzReport {
        trials: config.trials,
        seed: config.seed,
        failures: outcomes?.into_iter().flatten().collect(),
    })
}

/// Acyclicity at a degree that maxes out some coordinate: when b_j = t_j the
/// pile complex is a cone, so all reduced homology vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarLemmaCheck {
    pub b: MultiDegree,
    pub profile: HomologyProfile,
    pub holds: bool,
}

impl StarLemmaCheck {
    pub fn to_value(&self) -> serde_json::Value {
        json!({
            "b": self.b.coords(),
            "homology": self.profile.to_value(),
            "holds": self.holds,
        })
    }
}

/// Verify the vanishing hypothesis behind the duality proof at one degree.
/// Needs the cone condition (take A = {(1,2),(2,1)}, b = (3,0): b_1 = t_1 yet
/// Gamma_b = {emptyset} has nonzero reduced homology) and b_j = t_j for some
/// j, else [`Error::HypothesisNotMet`].
pub fn verify_star_lemma(
    set: &GeneratorSet,
    b: &MultiDegree,
    field: &FieldSpec,
) -> Result<StarLemmaCheck> {
    if b.len() != set.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: set.ambient_dim(),
            got: b.len(),
        });
    }
    if !set.cone_contains_orthant() {
        return Err(Error::ConeConditionFailed);
    }
    if !b
        .coords()
        .iter()
        .zip(set.t().coords())
        .any(|(&bj, &tj)| bj == tj)
    {
        return Err(Error::HypothesisNotMet);
    }
    let profile = reduced_betti_dims(&pile_complex(set, b)?, field);
    let holds = profile.is_trivial();
    Ok(StarLemmaCheck {
        b: b.clone(),
        profile,
        holds,
    })
}

/// Face-for-face comparison of divisor and pile complexes over the lattice
/// degrees of the box [0, t].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub degrees_checked: usize,
    pub equivalent: bool,
    pub witness: Option<MultiDegree>,
}

impl EquivalenceReport {
    pub fn to_value(&self) -> serde_json::Value {
        json!({
            "degrees_checked": self.degrees_checked,
            "equivalent": self.equivalent,
            "witness": self.witness.as_ref().map(|c| c.coords().to_vec()),
        })
    }
}

struct ConditionSweep {
    degrees_checked: usize,
    saturation: bool,
    equivalence: bool,
    witness: Option<MultiDegree>,
}

fn condition_sweep(set: &GeneratorSet) -> Result<ConditionSweep> {
    let dim = set.ambient_dim();
    let lo = vec![0i64; dim];
    let hi = set.t().coords().to_vec();
    let cells = box_cells(&lo, &hi);
    if cells > VERIFY_CELL_BUDGET {
        return Err(Error::BoxTooLarge {
            cells,
            budget: VERIFY_CELL_BUDGET,
        });
    }
    let mut oracle = set.semigroup_oracle();
    let mut sweep = ConditionSweep {
        degrees_checked: 0,
        saturation: true,
        equivalence: true,
        witness: None,
    };
    for c in degrees_in_box(&lo, &hi) {
        if !set.in_lattice(&c) {
            continue;
        }
        sweep.degrees_checked += 1;
        let sat_ok = oracle.contains(&c);
        let delta = divisor_complex_with(set, &c, &mut oracle)?;
        let gamma = pile_complex(set, &c)?;
        let equiv_ok = delta == gamma;
        if !sat_ok {
            sweep.saturation = false;
        }
        if !equiv_ok {
            sweep.equivalence = false;
        }
        if (!sat_ok || !equiv_ok) && sweep.witness.is_none() {
            sweep.witness = Some(c);
        }
    }
    Ok(sweep)
}

/// Check divisor = pile over the lattice degrees of [0, t]; the first
/// mismatching degree is returned as witness.
pub fn verify_equivalence(set: &GeneratorSet) -> Result<EquivalenceReport> {
    let sweep = condition_sweep(set)?;
    Ok(EquivalenceReport {
        degrees_checked: sweep.degrees_checked,
        equivalent: sweep.equivalence,
        witness: if sweep.equivalence {
            None
        } else {
            sweep.witness
        },
    })
}

/// Verdicts on the hypotheses of the dual Betti formula, checked over the
/// box [0, t]:
///
/// * `saturation`: every lattice degree of the box lies in the semigroup;
/// * `equivalence`: divisor and pile complexes agree at those degrees;
/// * `agree`: the two verdicts match (they are equivalent claims, computed
///   through different code paths);
/// * `homogeneous` and `cone_contains_orthant` report the remaining
///   hypotheses without failing the check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub homogeneous: bool,
    pub cone_contains_orthant: bool,
    pub saturation: bool,
    pub equivalence: bool,
    pub agree: bool,
    pub degrees_checked: usize,
    pub witness: Option<MultiDegree>,
}

impl ConditionReport {
    /// True when every hypothesis of the dual formula is verified.
    pub fn all_met(&self) -> bool {
        self.homogeneous && self.cone_contains_orthant && self.saturation && self.equivalence
    }

    pub fn to_value(&self) -> serde_json::Value {
        json!({
            "homogeneous": self.homogeneous,
            "cone_contains_orthant": self.cone_contains_orthant,
            "saturation": self.saturation,
            "equivalence": self.equivalence,
            "agree": self.agree,
            "degrees_checked": self.degrees_checked,
            "witness": self.witness.as_ref().map(|c| c.coords().to_vec()),
            "all_met": self.all_met(),
        })
    }
}

/// Verify the hypotheses of the dual formula for a generator set. Errors
/// with [`Error::NotSpanning`] when the points do not span the ambient
/// lattice rationally; inhomogeneous sets still receive verdicts.
pub fn verify_conditions(set: &GeneratorSet) -> Result<ConditionReport> {
    let rank = set.lattice_rank();
    if rank < set.ambient_dim() {
        return Err(Error::NotSpanning {
            rank,
            dim: set.ambient_dim(),
        });
    }
    let sweep = condition_sweep(set)?;
    Ok(ConditionReport {
        homogeneous: set.is_homogeneous(),
        cone_contains_orthant: set.cone_contains_orthant(),
        saturation: sweep.saturation,
        equivalence: sweep.equivalence,
        agree: sweep.saturation == sweep.equivalence,
        degrees_checked: sweep.degrees_checked,
        witness: sweep.witness,
    })
}

/// Both sides of combinatorial Alexander duality for one complex on M
/// vertices: dim H~_i of the dual against dim H~^{M-i-3} of the complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderCheck {
    pub vertices: usize,
    pub lhs: IndexDims,
    pub rhs: IndexDims,
    pub holds: bool,
}

impl AlexanderCheck {
    pub fn to_value(&self) -> serde_json::Value {
        json!({
            "vertices": self.vertices,
            "lhs_dims": dims_json(&self.lhs),
            "rhs_dims": dims_json(&self.rhs),
            "holds": self.holds,
        })
    }
}

/// Check Alexander duality for one complex over one field. The left side is
/// homology of the combinatorial dual; the right side is cohomology of the
/// complex itself, computed from transposed boundary matrices.
pub fn verify_alexander(k: &SimplicialComplex, field: &FieldSpec) -> Result<AlexanderCheck> {
    let m = k.vertex_count() as i64;
    let dual = alexander_dual(k)?;
    let mut lhs = IndexDims::new();
    for (h, dim) in reduced_betti_dims(&dual, field).iter() {
        lhs.insert(h, dim);
    }
    let mut rhs = IndexDims::new();
    for (h, dim) in reduced_cohomology_dims(k, field).iter() {
        rhs.insert(m - h - 3, dim);
    }
    let holds = lhs == rhs;
    Ok(AlexanderCheck {
        vertices: k.vertex_count(),
        lhs,
        rhs,
        holds,
    })
}

/// Random complex given as downward closure of random faces; occasionally
/// void or a bare empty face, the two boundary cases of the duality.
pub fn random_complex<R: Rng>(rng: &mut R, max_vertices: usize) -> SimplicialComplex {
    let vertices = rng.gen_range(1..=max_vertices.max(1));
    match rng.gen_range(0..16) {
        0 => SimplicialComplex::void(vertices),
        1 => SimplicialComplex::empty_face_only(vertices),
        _ => {
            let count = rng.gen_range(1..=2 * vertices);
            let faces: Vec<Vec<usize>> = (0..count)
                .map(|_| (0..vertices).filter(|_| rng.gen_bool(0.5)).collect())
                .collect();
            SimplicialComplex::from_maximal_faces(vertices, &faces)
                .expect("random faces are in range")
        }
    }
}

/// One failed Alexander trial with the witnessing complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderFailure {
    pub trial: usize,
    pub vertices: usize,
    pub maximal_faces: Vec<Vec<usize>>,
    pub lhs: IndexDims,
    pub rhs: IndexDims,
}

/// Outcome of a randomized Alexander run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderFuzzReport {
    pub trials: usize,
    pub seed: u64,
    pub failures: Vec<AlexanderFailure>,
}

impl AlexanderFuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_value(&self) -> serde_json::Value {
        let failures: Vec<serde_json::Value> = self
            .failures
            .iter()
            .map(|f| {
                json!({
                    "trial": f.trial,
                    "vertices": f.vertices,
                    "maximal_faces": f.maximal_faces,
                    "lhs_dims": dims_json(&f.lhs),
                    "rhs_dims": dims_json(&f.rhs),
                })
            })
            .collect();
        json!({
            "trials": self.trials,
            "seed": self.seed,
            "failures": failures,
        })
    }
}

/// Randomized Alexander duality run on complexes with at most `max_vertices`
/// vertices; deterministic for a fixed seed.
pub fn fuzz_alexander(
    trials: usize,
    seed: u64,
    max_vertices: usize,
    field: &FieldSpec,
) -> Result<AlexanderFuzzReport> {
    let cap = max_vertices.min(crate::complex::ALEXANDER_MAX_VERTICES);
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..trials).map(|_| master.gen()).collect();
    let outcomes: Result<Vec<Option<AlexanderFailure>>> = seeds
        .par_iter()
        .enumerate()
        .map(|(trial, &s)| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let k = random_complex(&mut rng, cap);
            let check = verify_alexander(&k, field)?;
            if check.holds {
                Ok(None)
            } else {
                Ok(Some(AlexanderFailure {
                    trial,
                    vertices: k.vertex_count(),
                    maximal_faces: k.maximal_faces(),
                    lhs: check.lhs,
                    rhs: check.rhs,
                }))
            }
        })
        .collect();
    Ok(AlexanderFuzzReport {
        trials,
        seed,
        failures: outcomes?.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{make_weights, veronese_generators};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn md(v: &[i64]) -> MultiDegree {
        MultiDegree::new(v.to_vec())
    }

    fn surface() -> GeneratorSet {
        veronese_generators(&make_weights(&[1, 1, 1]).unwrap(), 2).unwrap()
    }

    fn sublattice_example() -> GeneratorSet {
        custom_generators(vec![
            md(&[4, 0, 0]),
            md(&[2, 2, 0]),
            md(&[1, 1, 1]),
            md(&[0, 4, 0]),
            md(&[0, 0, 2]),
        ])
        .unwrap()
    }

    #[test]
    fn duality_at_surface_degrees() {
        let set = surface();
        let check = verify_duality(&set, &md(&[2, 2, 2]), &Q).unwrap();
        assert!(check.holds);
        assert_eq!(check.lhs, IndexDims::from([(2, 2)]));
        assert_eq!(check.complement, md(&[1, 1, 1]));
        let check = verify_duality(&set, &md(&[4, 4, 4]), &Q).unwrap();
        assert!(check.holds);
        assert!(check.lhs.is_empty() && check.rhs.is_empty());
        for c in [md(&[0, 0, 0]), md(&[3, 1, 2]), md(&[-1, 4, 0])] {
            assert!(verify_duality(&set, &c, &Q).unwrap().holds, "c={c}");
        }
    }

    #[test]
    fn duality_requires_cone_condition() {
        let set = custom_generators(vec![md(&[2, 1]), md(&[1, 2])]).unwrap();
        assert_eq!(
            verify_duality(&set, &md(&[1, 1]), &Q).unwrap_err(),
            Error::ConeConditionFailed
        );
    }

    #[test]
    fn fuzz_duality_is_clean_and_deterministic() {
        let config = FuzzConfig {
            trials: 40,
            seed: 7,
            ..FuzzConfig::default()
        };
        let a = fuzz_duality(&config).unwrap();
        assert!(a.passed(), "failures: {:?}", a.failures);
        let b = fuzz_duality(&config).unwrap();
        assert_eq!(a.to_value(), b.to_value());
    }

    #[test]
    fn star_lemma_on_surface() {
        let set = surface();
        let check = verify_star_lemma(&set, &md(&[4, 2, 2]), &Q).unwrap();
        assert!(check.holds);
        assert!(check.profile.is_trivial());
        // a maxed coordinate plus a negative one: the void complex, trivially acyclic
        assert!(verify_star_lemma(&set, &md(&[4, -1, 0]), &Q).unwrap().holds);
        assert_eq!(
            verify_star_lemma(&set, &md(&[3, 2, 2]), &Q).unwrap_err(),
            Error::HypothesisNotMet
        );
        assert_eq!(
            verify_star_lemma(&set, &md(&[4, 2]), &Q).unwrap_err(),
            Error::DimensionMismatch {
                expected: 3,
                got: 2
            }
        );
    }

    #[test]
    fn star_lemma_requires_cone_condition() {
        // without an axis multiple per coordinate the lemma is false:
        // b = (3, 0) maxes b_1 yet Gamma_b = {emptyset} is not acyclic
        let set = custom_generators(vec![md(&[1, 2]), md(&[2, 1])]).unwrap();
        assert_eq!(
            verify_star_lemma(&set, &md(&[3, 0]), &Q).unwrap_err(),
            Error::ConeConditionFailed
        );
    }

    #[test]
    fn star_lemma_across_the_surface_facet() {
        let set = surface();
        let t = set.t().clone();
        for c in degrees_in_box(&[0, 0, 0], &[t.coords()[0], t.coords()[1], t.coords()[2]]) {
            if c.coords().iter().zip(t.coords()).any(|(&bj, &tj)| bj == tj) {
                assert!(
                    verify_star_lemma(&set, &c, &Q).unwrap().holds,
                    "b={c} should be acyclic"
                );
            }
        }
    }

    #[test]
    fn equivalence_on_surface_box() {
        let report = verify_equivalence(&surface()).unwrap();
        assert_eq!(report.degrees_checked, 63);
        assert!(report.equivalent);
        assert!(report.witness.is_none());
    }

    #[test]
    fn conditions_on_sublattice_example() {
        let report = verify_conditions(&sublattice_example()).unwrap();
        assert!(report.homogeneous);
        assert!(report.cone_contains_orthant);
        assert!(report.saturation);
        assert!(report.equivalence);
        assert!(report.agree);
        assert!(report.all_met());
        assert!(report.witness.is_none());
    }

    #[test]
    fn conditions_on_numerical_semigroup() {
        let set = custom_generators(vec![md(&[2]), md(&[3])]).unwrap();
        let report = verify_conditions(&set).unwrap();
        assert!(!report.homogeneous);
        assert!(report.cone_contains_orthant);
        assert!(!report.saturation);
        assert!(!report.equivalence);
        assert!(report.agree);
        assert!(!report.all_met());
        assert_eq!(report.witness, Some(md(&[1])));
    }

    #[test]
    fn conditions_require_spanning() {
        let set = custom_generators(vec![md(&[1, 1])]).unwrap();
        assert_eq!(
            verify_conditions(&set).unwrap_err(),
            Error::NotSpanning { rank: 1, dim: 2 }
        );
    }

    #[test]
    fn alexander_on_fixed_complexes() {
        let triangle =
            SimplicialComplex::from_maximal_faces(3, &[vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        for field in [Q, FieldSpec::Prime(2), FieldSpec::Prime(32003)] {
            assert!(verify_alexander(&triangle, &field).unwrap().holds);
        }
        let disk =
            SimplicialComplex::from_maximal_faces(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(verify_alexander(&disk, &Q).unwrap().holds);
        assert!(
            verify_alexander(&SimplicialComplex::void(3), &Q)
                .unwrap()
                .holds
        );
        assert!(
            verify_alexander(&SimplicialComplex::empty_face_only(4), &Q)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn alexander_sees_torsion_fields() {
        let rp2 = SimplicialComplex::from_maximal_faces(
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
        )
        .unwrap();
        for field in [Q, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
            let check = verify_alexander(&rp2, &field).unwrap();
            assert!(check.holds, "field {field:?}: {check:?}");
        }
    }

    #[test]
    fn fuzz_alexander_is_clean_and_deterministic() {
        let a = fuzz_alexander(40, 11, 8, &Q).unwrap();
        assert!(a.passed(), "failures: {:?}", a.failures);
        let b = fuzz_alexander(40, 11, 8, &Q).unwrap();
        assert_eq!(a.to_value(), b.to_value());
        let c = fuzz_alexander(40, 11, 8, &FieldSpec::Prime(2)).unwrap();
        assert!(c.passed(), "failures: {:?}", c.failures);
    }
}
