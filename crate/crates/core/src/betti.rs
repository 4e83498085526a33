//! Multigraded Betti numbers by two independent routes.
//!
//! The first route reads beta_{i,c} off the divisor complex at c in homological
//! degree i-1. The second reads it off the pile complex at the complement
//! degree t-c-1 in degree N-n-i-1; it is valid for generator sets that satisfy
//! the saturation conditions (standard Veronese sets always do). Running both
//! and comparing entry by entry is the library's main self-check.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{divisor_complex_with, pile_complex};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::reduced_betti_dims;
use crate::lattice::{box_cells, degrees_in_box, GeneratorSet, MultiDegree, Provenance};

/// Which formula(s) to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    BrunsHerzog,
    Dual,
    Both,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Method::BrunsHerzog => "bruns-herzog",
            Method::Dual => "dual",
            Method::Both => "both",
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "bh" | "bruns-herzog" => Ok(Method::BrunsHerzog),
            "dual" => Ok(Method::Dual),
            "both" => Ok(Method::Both),
            other => Err(format!("unknown method `{other}` (expected bh|dual|both)")),
        }
    }
}

/// One of the two concrete formulas (the table runs them separately).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MethodKind {
    BrunsHerzog,
    Dual,
}

impl MethodKind {
    pub fn label(&self) -> &'static str {
        match self {
            MethodKind::BrunsHerzog => "bh",
            MethodKind::Dual => "dual",
        }
    }
}

/// Non-fatal notes attached to a Betti evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BettiWarning {
    /// c is outside ZA; the value is 0 by convention.
    NotInLattice,
    /// Custom set whose saturation conditions were not checked; the dual
    /// formula is only guaranteed for condition-satisfying sets.
    ConditionsUnverified,
}

/// Betti value plus any warnings raised while evaluating it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiValue {
    pub value: usize,
    pub warnings: Vec<BettiWarning>,
}

/// Full column of Betti numbers in one multidegree: map from i to beta_{i,c}.
pub type BettiColumn = BTreeMap<i64, usize>;

fn column_bh(set: &GeneratorSet, c: &MultiDegree, field: &FieldSpec) -> Result<BettiColumn> {
    let mut oracle = set.semigroup_oracle();
    let k = divisor_complex_with(set, c, &mut oracle)?;
    let profile = reduced_betti_dims(&k, field);
    let mut col = BettiColumn::new();
    for (h, dim) in profile.iter() {
        let i = h + 1;
        if i >= 0 {
            col.insert(i, dim);
        }
    }
    Ok(col)
}

fn column_dual(set: &GeneratorSet, c: &MultiDegree, field: &FieldSpec) -> Result<BettiColumn> {
    let complement = set.check_complement(c)?;
    let k = pile_complex(set, &complement)?;
    let profile = reduced_betti_dims(&k, field);
    let top = set.top_index();
    let mut col = BettiColumn::new();
    for (h, dim) in profile.iter() {
        let i = top - h - 1;
        if i >= 0 {
            col.insert(i, dim);
        }
    }
    Ok(col)
}

/// Betti column in degree c by one formula. Callers sweeping a table should
/// prefer this to per-(i,c) queries: one homology run yields the whole column.
pub fn betti_column(
    set: &GeneratorSet,
    c: &MultiDegree,
    field: &FieldSpec,
    kind: MethodKind,
) -> Result<BettiColumn> {
    match kind {
        MethodKind::BrunsHerzog => column_bh(set, c, field),
        MethodKind::Dual => column_dual(set, c, field),
    }
}

/// beta_{i,c} from the divisor complex at c.
pub fn betti_bh(
    set: &GeneratorSet,
    c: &MultiDegree,
    i: i64,
    field: &FieldSpec,
) -> Result<BettiValue> {
    if !set.in_lattice(c) {
        return Ok(BettiValue {
            value: 0,
            warnings: vec![BettiWarning::NotInLattice],
        });
    }
    let col = column_bh(set, c, field)?;
    Ok(BettiValue {
        value: col.get(&i).copied().unwrap_or(0),
        warnings: Vec::new(),
    })
}

/// beta_{i,c} from the pile complex at the complement degree.
pub fn betti_dual(
    set: &GeneratorSet,
    c: &MultiDegree,
    i: i64,
    field: &FieldSpec,
) -> Result<BettiValue> {
    let mut warnings = Vec::new();
    if matches!(set.provenance(), Provenance::Custom) {
        warnings.push(BettiWarning::ConditionsUnverified);
    }
    if !set.in_lattice(c) {
        warnings.insert(0, BettiWarning::NotInLattice);
        return Ok(BettiValue { value: 0, warnings });
    }
    let col = column_dual(set, c, field)?;
    Ok(BettiValue {
        value: col.get(&i).copied().unwrap_or(0),
        warnings,
    })
}

/// Hook for reusing per-degree columns across runs (the CLI backs this with a
/// content-addressed directory). Implementations must be safe to call from
/// parallel sweeps.
pub trait DegreeCache: Sync {
    fn get(&self, c: &MultiDegree, kind: MethodKind) -> Option<BettiColumn>;
    fn put(&self, c: &MultiDegree, kind: MethodKind, column: &BettiColumn);
}

/// Limits for the table sweep.
#[derive(Debug, Clone, Copy)]
pub struct TableOptions {
    /// Maximum number of cells in the degree box [0, t-1].
    pub cell_budget: u128,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            cell_budget: 4_000_000,
        }
    }
}

/// Entry-level disagreement between the two formulas; any occurrence is an
/// internal invariant breach.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub i: i64,
    pub c: MultiDegree,
    pub bh: usize,
    pub dual: usize,
}

/// Multigraded Betti table over the box [0, t-1] intersected with ZA.
#[derive(Debug, Clone)]
pub struct BettiTable {
    set: GeneratorSet,
    field: FieldSpec,
    method: Method,
    entries: BTreeMap<(i64, MultiDegree), usize>,
    disagreements: Vec<Disagreement>,
}

/// Degrees swept by the table: ZA intersected with the box [0, t-1].
pub fn table_degrees(set: &GeneratorSet, options: &TableOptions) -> Result<Vec<MultiDegree>> {
    let dim = set.ambient_dim();
    let lo = vec![0i64; dim];
    let hi: Vec<i64> = set.t().coords().iter().map(|&x| x - 1).collect();
    let cells = box_cells(&lo, &hi);
    if cells > options.cell_budget {
        return Err(Error::BoxTooLarge {
            cells,
            budget: options.cell_budget,
        });
    }
    let mut degrees: Vec<MultiDegree> = degrees_in_box(&lo, &hi)
        .into_iter()
        .filter(|c| set.in_lattice(c))
        .collect();
    let zero = MultiDegree::zeros(dim);
    if !degrees.contains(&zero) {
        // the trivial entry beta_{0,0} = 1 always belongs to the table
        degrees.push(zero);
        degrees.sort();
    }
    Ok(degrees)
}

/// Sweep the full table. With [`Method::Both`] the two formulas run
/// independently and any entry-level disagreement is recorded.
pub fn betti_table(
    set: &GeneratorSet,
    field: &FieldSpec,
    method: Method,
    options: &TableOptions,
) -> Result<BettiTable> {
    betti_table_cached(set, field, method, options, None)
}

/// [`betti_table`] with an optional per-degree column cache.
pub fn betti_table_cached(
    set: &GeneratorSet,
    field: &FieldSpec,
    method: Method,
    options: &TableOptions,
    cache: Option<&dyn DegreeCache>,
) -> Result<BettiTable> {
    let degrees = table_degrees(set, options)?;

    let run = |c: &MultiDegree, kind: MethodKind| -> Result<BettiColumn> {
        if let Some(cache) = cache {
            if let Some(hit) = cache.get(c, kind) {
                return Ok(hit);
            }
        }
        let col = betti_column(set, c, field, kind)?;
        if let Some(cache) = cache {
            cache.put(c, kind, &col);
        }
        Ok(col)
    };

    let per_degree: Result<Vec<(MultiDegree, BettiColumn, Vec<Disagreement>)>> = degrees
        .par_iter()
        .map(|c| {
            let (col, disputes) = match method {
                Method::BrunsHerzog => (run(c, MethodKind::BrunsHerzog)?, Vec::new()),
                Method::Dual => (run(c, MethodKind::Dual)?, Vec::new()),
                Method::Both => {
                    let bh = run(c, MethodKind::BrunsHerzog)?;
                    let dual = run(c, MethodKind::Dual)?;
                    let mut disputes = Vec::new();
                    let mut indices: Vec<i64> = bh.keys().chain(dual.keys()).copied().collect();
                    indices.sort_unstable();
                    indices.dedup();
                    for i in indices {
                        let b = bh.get(&i).copied().unwrap_or(0);
                        let d = dual.get(&i).copied().unwrap_or(0);
                        if b != d {
                            disputes.push(Disagreement {
                                i,
                                c: c.clone(),
                                bh: b,
                                dual: d,
                            });
                        }
                    }
                    (bh, disputes)
                }
            };
            Ok((c.clone(), col, disputes))
        })
        .collect();

    let mut entries = BTreeMap::new();
    let mut disagreements = Vec::new();
    for (c, col, disputes) in per_degree? {
        for (i, beta) in col {
            if beta > 0 {
                entries.insert((i, c.clone()), beta);
            }
        }
        disagreements.extend(disputes);
    }
    disagreements.sort_by(|a, b| (a.i, &a.c).cmp(&(b.i, &b.c)));
    Ok(BettiTable {
        set: set.clone(),
        field: *field,
        method,
        entries,
        disagreements,
    })
}

impl BettiTable {
    pub fn set(&self) -> &GeneratorSet {
        &self.set
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn disagreements(&self) -> &[Disagreement] {
        &self.disagreements
    }

    /// Nonzero entries sorted by (i, c).
    pub fn entries(&self) -> impl Iterator<Item = (i64, &MultiDegree, usize)> + '_ {
        self.entries.iter().map(|((i, c), &b)| (*i, c, b))
    }

    pub fn get(&self, i: i64, c: &MultiDegree) -> usize {
        self.entries.get(&(i, c.clone())).copied().unwrap_or(0)
    }

    /// Total Betti number in homological index i.
    pub fn total(&self, i: i64) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_index(&self) -> i64 {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Aggregate to Z-graded Betti numbers (i, j, beta), j the zdegree.
    pub fn zgraded(&self) -> Result<Vec<(i64, i64, usize)>> {
        let mut agg: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for ((i, c), beta) in &self.entries {
            let z = self.set.zdegree(c)?;
            debug_assert!(z.is_integer(), "lattice degrees have integral zdegree");
            let j_big = z.to_integer();
            let j = i64::try_from(&j_big)
                .unwrap_or_else(|_| panic!("zdegree {j_big} out of i64 range"));
            *agg.entry((*i, j)).or_insert(0) += beta;
        }
        Ok(agg.into_iter().map(|((i, j), b)| (i, j, b)).collect())
    }

    /// JSON form with the generator set, both gradings, and any disagreements.
    pub fn to_value(&self) -> serde_json::Value {
        let multigraded: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((i, c), beta)| serde_json::json!({ "i": i, "c": c.coords(), "beta": beta }))
            .collect();
        let zgraded: serde_json::Value = match self.zgraded() {
            Ok(z) => serde_json::json!(z),
            Err(_) => serde_json::Value::Null,
        };
        let mut v = serde_json::json!({
            "generators": self.set.to_value(),
            "field": self.field.label(),
            "method": self.method.label(),
            "multigraded": multigraded,
            "zgraded": zgraded,
        });
        if !self.disagreements.is_empty() {
            v["disagreements"] = serde_json::json!(self.disagreements);
        }
        v
    }

    /// Text diagram in the usual layout: rows are j-i, columns are i.
    pub fn diagram(&self) -> Result<String> {
        let z = self.zgraded()?;
        let max_i = z.iter().map(|&(i, _, _)| i).max().unwrap_or(0);
        let max_row = z.iter().map(|&(i, j, _)| j - i).max().unwrap_or(0);
        let mut grid: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for (i, j, b) in z {
            *grid.entry((j - i, i)).or_insert(0) += b;
        }
        let width = grid
            .values()
            .map(|b| b.to_string().len())
            .max()
            .unwrap_or(1)
            .max(max_i.to_string().len())
            + 2;
        let mut out = String::new();
        let _ = write!(out, "{:>6}", "");
        for i in 0..=max_i {
            let _ = write!(out, "{i:>width$}");
        }
        out.push('\n');
        for row in 0..=max_row {
            let _ = write!(out, "{:>5}:", row);
            for i in 0..=max_i {
                match grid.get(&(row, i)) {
                    Some(b) => {
                        let _ = write!(out, "{b:>width$}");
                    }
                    None => {
                        let _ = write!(out, "{:>width$}", ".");
                    }
                }
            }
            out.push('\n');
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{custom_generators, make_weights, veronese_generators};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn md(v: &[i64]) -> MultiDegree {
        MultiDegree::new(v.to_vec())
    }

    fn surface() -> GeneratorSet {
        veronese_generators(&make_weights(&[1, 1, 1]).unwrap(), 2).unwrap()
    }

    #[test]
    fn surface_entry_by_both_formulas() {
        let set = surface();
        let c = md(&[2, 2, 2]);
        assert_eq!(betti_bh(&set, &c, 2, &Q).unwrap().value, 2);
        assert_eq!(betti_dual(&set, &c, 2, &Q).unwrap().value, 2);
        assert_eq!(betti_bh(&set, &md(&[2, 2, 0]), 1, &Q).unwrap().value, 1);
    }

    #[test]
    fn out_of_lattice_degree_warns() {
        let set = surface();
        let v = betti_bh(&set, &md(&[1, 1, 1]), 1, &Q).unwrap();
        assert_eq!(v.value, 0);
        assert_eq!(v.warnings, vec![BettiWarning::NotInLattice]);
    }

    #[test]
    fn dual_on_custom_set_warns_about_conditions() {
        let set = custom_generators(vec![md(&[2, 0]), md(&[1, 1]), md(&[0, 2])]).unwrap();
        let v = betti_dual(&set, &md(&[2, 2]), 1, &Q).unwrap();
        assert_eq!(v.value, 1);
        assert_eq!(v.warnings, vec![BettiWarning::ConditionsUnverified]);
    }

    #[test]
    fn surface_table_with_both_methods() {
        let set = surface();
        let table = betti_table(&set, &Q, Method::Both, &TableOptions::default()).unwrap();
        assert!(table.disagreements().is_empty());
        assert_eq!(
            (
                table.total(0),
                table.total(1),
                table.total(2),
                table.total(3)
            ),
            (1, 6, 8, 3)
        );
        assert_eq!(table.get(2, &md(&[2, 2, 2])), 2);
        assert_eq!(table.max_index(), set.top_index());
        assert_eq!(
            table.zgraded().unwrap(),
            vec![(0, 0, 1), (1, 2, 6), (2, 3, 8), (3, 4, 3)]
        );
    }

    #[test]
    fn hypersurface_table() {
        // q=(1,1,2), d=1: one quadric relation
        let set = veronese_generators(&make_weights(&[1, 1, 2]).unwrap(), 1).unwrap();
        let table = betti_table(&set, &Q, Method::Both, &TableOptions::default()).unwrap();
        assert!(table.disagreements().is_empty());
        assert_eq!(table.total(0), 1);
        assert_eq!(table.total(1), 1);
        assert_eq!(table.get(1, &md(&[2, 2, 0])), 1);
        assert_eq!(table.zgraded().unwrap(), vec![(0, 0, 1), (1, 2, 1)]);
    }

    #[test]
    fn identity_embedding_has_trivial_table() {
        let set = veronese_generators(&make_weights(&[1, 1]).unwrap(), 1).unwrap();
        let table = betti_table(&set, &Q, Method::Both, &TableOptions::default()).unwrap();
        assert_eq!(table.entries().count(), 1);
        assert_eq!(table.get(0, &md(&[0, 0])), 1);
    }

    #[test]
    fn box_budget_is_enforced() {
        let set = surface();
        let err = betti_table(
            &set,
            &Q,
            Method::BrunsHerzog,
            &TableOptions { cell_budget: 10 },
        )
        .unwrap_err();
        assert!(matches!(err, Error::BoxTooLarge { cells: 64, .. }));
    }

    #[test]
    fn diagram_renders_surface() {
        let set = surface();
        let table = betti_table(&set, &Q, Method::BrunsHerzog, &TableOptions::default()).unwrap();
        let diagram = table.diagram().unwrap();
        let lines: Vec<&str> = diagram.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].trim_start().starts_with("0:"));
        assert!(lines[1].contains('1'));
        assert!(lines[2].contains('6') && lines[2].contains('8') && lines[2].contains('3'));
    }
}
