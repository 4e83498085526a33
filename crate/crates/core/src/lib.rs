//! Multigraded Betti tables of Veronese embeddings of weighted projective
//! spaces, computed from the homology of two families of simplicial
//! complexes.
//!
//! For a finite generator set A in N^(n+1) and a degree c, the divisor
//! complex collects the subsets S of A with c - sum(S) in the semigroup NA,
//! while the pile complex only asks sum(S) <= c componentwise. The Betti
//! number beta_{i,c} of the toric ring k[A] is the reduced homology of the
//! divisor complex at c in degree i-1; for sets satisfying the saturation
//! conditions it equals the homology of the pile complex at the complement
//! degree t - c - 1 in degree (N-n)-i-1, where t is the sum of all points
//! and the set has N+1 points spanning a rank-(n+1) lattice. The library
//! computes tables by both routes and cross-checks them entry by entry.
//!
//! Modules:
//!
//! * [`lattice`]: weight vectors, multidegrees, generator sets, and the
//!   lattice and semigroup membership tests behind everything else;
//! * [`complex`]: pile, divisor, and Alexander-dual complexes as explicit
//!   bitmask simplicial complexes;
//! * [`homology`]: boundary matrices and reduced (co)homology dimensions
//!   over Q or a prime field;
//! * [`linalg`]: exact rank computations, dense and sparse, plus the Smith
//!   normal form used for lattice membership;
//! * [`betti`]: the two Betti formulas and full table sweeps;
//! * [`invariants`]: projective dimension, regularity bounds, Gorenstein
//!   symmetry, and the highest syzygy by direct counting;
//! * [`verify`]: randomized and exhaustive verifiers for the duality and
//!   its hypotheses.
//!
//! ```
//! use pilehom::{betti_table, make_weights, veronese_generators};
//! use pilehom::{FieldSpec, Method, TableOptions};
//!
//! let weights = make_weights(&[1, 1, 1]).unwrap();
//! let set = veronese_generators(&weights, 2).unwrap();
//! let table = betti_table(
//!     &set,
//!     &FieldSpec::Rationals,
//!     Method::Both,
//!     &TableOptions::default(),
//! )
//! .unwrap();
//! assert!(table.disagreements().is_empty());
//! assert_eq!(table.total(3), 3);
//! ```

pub mod betti;
pub mod complex;
pub mod error;
pub mod field;
pub mod homology;
pub mod invariants;
pub mod lattice;
pub mod linalg;
pub mod verify;

pub use betti::{
    betti_bh, betti_column, betti_dual, betti_table, betti_table_cached, table_degrees,
    BettiColumn, BettiTable, BettiValue, BettiWarning, DegreeCache, Disagreement, Method,
    MethodKind, TableOptions,
};
pub use complex::{
    alexander_dual, divisor_complex, divisor_complex_with, pile_complex, SimplicialComplex,
};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use homology::{boundary_matrix, reduced_betti_dims, reduced_cohomology_dims, HomologyProfile};
pub use invariants::{
    gorenstein_condition, gorenstein_symmetry_check, highest_syzygy, partition_count,
    pn_highest_rank, projective_dimension, projective_dimension_from_table, regularity_bound,
    HighestSyzygyReport, PnHighestRank, RegularityReport, SymmetryReport,
};
pub use lattice::{
    custom_generators, make_weights, veronese_generators, weighted_degree_points, GeneratorSet,
    GeneratorSetSpec, MultiDegree, Provenance, WeightsVector,
};
pub use verify::{
    fuzz_alexander, fuzz_duality, verify_alexander, verify_conditions, verify_duality,
    verify_equivalence, verify_star_lemma, AlexanderCheck, AlexanderFuzzReport, ConditionReport,
    DualityCheck, EquivalenceReport, FuzzConfig, FuzzReport, StarLemmaCheck,
};
