//! The chain complex of free multigraded modules computing `H_n(F, R)`.
//!
//! For a multifiltered complex `F` and degree `n` this builds
//!
//! ```text
//!   KF_n ⊕ GF_{n+1}  --f-->  GF_n  --g-->  D_{n-1}
//! ```
//!
//! where `GF_n` has one generator `⟨x^v⟩` per simplex `σ ∈ X_n` and birth
//! `v ∈ gen(σ)`, `KF_n` has one generator `⟨x^{v0 ∨ v1}⟩` per unordered pair of
//! births of the same simplex, and `D_{n-1}` is free on the `(n-1)`-simplices
//! in grade zero. `f = [π0 − π1 | Σ(−1)^i d̄_i]` and `g = Σ(−1)^j α_j`; the
//! homology at `GF_n` is the persistence module.
//!
//! Matrices follow the usual graded convention: entry `(i, j)` may be nonzero
//! only when the grade of column `j` dominates the grade of row `i`, and a
//! nonzero entry `c` stands for `c · x^{col − row}`.
//!
//! The lifted face maps `d̄_i` pick, among the births of `d_i(σ)` below `v`,
//! the lexicographically smallest. This choice is not compatible with
//! composition of morphisms, so it is applied only to face maps and never
//! composed.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grades::GradeVector;
use crate::simplicial::{MultifilteredComplex, Simplex};

/// One generator of a free graded module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    /// The simplex (or set element) the generator belongs to.
    pub block: String,
    /// Which birth or pair of births inside the block.
    pub index: String,
    pub grade: GradeVector,
}

/// A free `N^r`-graded module given by an ordered list of generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeGradedModule {
    generators: Vec<Generator>,
}

impl FreeGradedModule {
    pub fn new(generators: Vec<Generator>) -> Self {
        FreeGradedModule { generators }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn grades(&self) -> impl Iterator<Item = &GradeVector> {
        self.generators.iter().map(|g| &g.grade)
    }

    /// Generator grades sorted lexicographically, i.e. the grade multiset.
    pub fn grade_multiset(&self) -> Vec<GradeVector> {
        let mut out: Vec<_> = self.grades().cloned().collect();
        out.sort();
        out
    }

    fn concat(&self, other: &FreeGradedModule) -> FreeGradedModule {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        FreeGradedModule { generators }
    }
}

/// A degree-preserving map between free graded modules.
///
/// Columns are the generators of the source, rows those of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    rows: FreeGradedModule,
    cols: FreeGradedModule,
    // row-major
    entries: Vec<i64>,
}

impl GradedMatrix {
    /// Fails if the entry count is wrong or the matrix is not homogeneous.
    pub fn new(rows: FreeGradedModule, cols: FreeGradedModule, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != rows.rank() * cols.rank() {
            return Err(Error::Shape(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows.rank(),
                cols.rank()
            )));
        }
        let m = GradedMatrix { rows, cols, entries };
        m.check_homogeneous()?;
        Ok(m)
    }

    pub fn zero(rows: FreeGradedModule, cols: FreeGradedModule) -> Self {
        let entries = vec![0; rows.rank() * cols.rank()];
        GradedMatrix { rows, cols, entries }
    }

    /// Builds from `(row, col, value)` triples; repeated positions add up.
    pub fn from_triples(
        rows: FreeGradedModule,
        cols: FreeGradedModule,
        triples: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self> {
        let mut m = GradedMatrix::zero(rows, cols);
        for (i, j, v) in triples {
            if i >= m.nrows() || j >= m.ncols() {
                return Err(Error::Shape(format!(
                    "entry ({i}, {j}) outside a {}x{} matrix",
                    m.nrows(),
                    m.ncols()
                )));
            }
            let k = i * m.ncols() + j;
            m.entries[k] += v;
        }
        m.check_homogeneous()?;
        Ok(m)
    }

    fn check_homogeneous(&self) -> Result<()> {
        for (i, row) in self.rows.generators.iter().enumerate() {
            for (j, col) in self.cols.generators.iter().enumerate() {
                if self.get(i, j) != 0 && !row.grade.leq(&col.grade)? {
                    return Err(Error::NotHomogeneous {
                        row: i,
                        col: j,
                        row_grade: row.grade.to_string(),
                        col_grade: col.grade.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn nrows(&self) -> usize {
        self.rows.rank()
    }

    pub fn ncols(&self) -> usize {
        self.cols.rank()
    }

    pub fn rows(&self) -> &FreeGradedModule {
        &self.rows
    }

    pub fn cols(&self) -> &FreeGradedModule {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.ncols() + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        let w = self.ncols();
        &self.entries[i * w..(i + 1) * w]
    }

    /// Dense rows.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.nrows()).map(|i| self.row(i).to_vec()).collect()
    }

    /// Nonzero entries in row-major order.
    pub fn triples(&self) -> Vec<(usize, usize, i64)> {
        let w = self.ncols();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(k, v)| (k / w, k % w, *v))
            .collect()
    }

    /// Whether every entry lies in `{-1, 0, 1}`.
    pub fn has_unit_entries(&self) -> bool {
        self.entries.iter().all(|v| v.abs() <= 1)
    }

    /// `[self | other]`; both must share the same rows.
    pub fn hconcat(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.rows != other.rows {
            return Err(Error::Shape("horizontal concatenation needs identical rows".into()));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        for i in 0..self.nrows() {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(other.row(i));
        }
        Ok(GradedMatrix {
            rows: self.rows.clone(),
            cols: self.cols.concat(&other.cols),
            entries,
        })
    }

    /// Integer product `self · rhs`, rows of `self` by columns of `rhs`.
    pub fn product(&self, rhs: &GradedMatrix) -> Result<Vec<Vec<i64>>> {
        if self.ncols() != rhs.nrows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                rhs.nrows(),
                rhs.ncols()
            )));
        }
        let mut out = vec![vec![0i64; rhs.ncols()]; self.nrows()];
        for (i, row) in out.iter_mut().enumerate() {
            for k in 0..self.ncols() {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// The scalar matrix of this map in grade `v`: rows and columns whose
    /// grade is `≤ v`.
    pub fn evaluate_at(&self, v: &GradeVector) -> Result<Vec<Vec<i64>>> {
        let keep = |m: &FreeGradedModule| -> Result<Vec<usize>> {
            let mut idx = Vec::new();
            for (i, g) in m.generators.iter().enumerate() {
                if g.grade.leq(v)? {
                    idx.push(i);
                }
            }
            Ok(idx)
        };
        let rows = keep(&self.rows)?;
        let cols = keep(&self.cols)?;
        Ok(rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j)).collect())
            .collect())
    }
}

impl fmt::Display for GradedMatrix {
    /// Human-readable dump: column labels and grades on top, one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = |g: &Generator| format!("{} {}", g.block, g.grade);
        let row_heads: Vec<String> = self.rows.generators.iter().map(head).collect();
        let col_heads: Vec<String> = self.cols.generators.iter().map(head).collect();
        let lead = row_heads.iter().map(String::len).max().unwrap_or(0);
        let width = col_heads.iter().map(String::len).max().unwrap_or(0).max(2);
        write!(f, "{:lead$}", "")?;
        for c in &col_heads {
            write!(f, " {c:>width$}")?;
        }
        writeln!(f)?;
        for (i, r) in row_heads.iter().enumerate() {
            write!(f, "{r:lead$}")?;
            for v in self.row(i) {
                write!(f, " {v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct DenseJson {
    entries: Vec<Vec<i64>>,
    row_grades: Vec<GradeVector>,
    col_grades: Vec<GradeVector>,
    row_labels: Vec<BlockLabel>,
    col_labels: Vec<BlockLabel>,
}

#[derive(Serialize, Deserialize)]
struct BlockLabel {
    block: String,
    index: String,
}

/// Sparse interchange form of a [`GradedMatrix`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrix {
    pub rows: FreeGradedModule,
    pub cols: FreeGradedModule,
    /// `(row, col, value)` for every nonzero entry, row-major.
    pub entries: Vec<(usize, usize, i64)>,
}

impl GradedMatrix {
    /// Dense JSON with `entries`, `row_grades`, `col_grades`, `row_labels`, `col_labels`.
    pub fn to_dense_json(&self) -> serde_json::Value {
        let labels = |m: &FreeGradedModule| {
            m.generators
                .iter()
                .map(|g| BlockLabel {
                    block: g.block.clone(),
                    index: g.index.clone(),
                })
                .collect()
        };
        let dense = DenseJson {
            entries: self.to_rows(),
            row_grades: self.rows.grades().cloned().collect(),
            col_grades: self.cols.grades().cloned().collect(),
            row_labels: labels(&self.rows),
            col_labels: labels(&self.cols),
        };
        serde_json::to_value(dense).expect("plain data serializes")
    }

    pub fn from_dense_json(value: serde_json::Value) -> Result<Self> {
        let dense: DenseJson = serde_json::from_value(value)?;
        let module = |grades: Vec<GradeVector>, labels: Vec<BlockLabel>| -> Result<FreeGradedModule> {
            if grades.len() != labels.len() {
                return Err(Error::Schema("grade and label lists differ in length".into()));
            }
            Ok(FreeGradedModule::new(
                grades
                    .into_iter()
                    .zip(labels)
                    .map(|(grade, l)| Generator {
                        block: l.block,
                        index: l.index,
                        grade,
                    })
                    .collect(),
            ))
        };
        let rows = module(dense.row_grades, dense.row_labels)?;
        let cols = module(dense.col_grades, dense.col_labels)?;
        if dense.entries.len() != rows.rank() || dense.entries.iter().any(|r| r.len() != cols.rank()) {
            return Err(Error::Schema("dense entries do not match the grade lists".into()));
        }
        GradedMatrix::new(rows, cols, dense.entries.concat())
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.triples(),
        }
    }

    pub fn from_sparse(sparse: SparseMatrix) -> Result<Self> {
        GradedMatrix::from_triples(sparse.rows, sparse.cols, sparse.entries)
    }
}

/// Two composable graded maps `f: A → B`, `g: B → C` with `g · f = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationComplex {
    n: usize,
    f: GradedMatrix,
    g: GradedMatrix,
}

impl PresentationComplex {
    /// Checks that the middle modules agree and that `g · f` vanishes.
    pub fn new(n: usize, f: GradedMatrix, g: GradedMatrix) -> Result<Self> {
        if f.rows() != g.cols() {
            return Err(Error::Shape("target of f differs from source of g".into()));
        }
        let composite = g.product(&f)?;
        for (row, line) in composite.iter().enumerate() {
            if let Some(col) = line.iter().position(|&x| x != 0) {
                return Err(Error::NonZeroComposition { row, col });
            }
        }
        Ok(PresentationComplex { n, f, g })
    }

    /// Homological degree.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> &GradedMatrix {
        &self.f
    }

    pub fn g(&self) -> &GradedMatrix {
        &self.g
    }

    /// `A = KF_n ⊕ GF_{n+1}`.
    pub fn source(&self) -> &FreeGradedModule {
        self.f.cols()
    }

    /// `B = GF_n`.
    pub fn middle(&self) -> &FreeGradedModule {
        self.f.rows()
    }

    /// `C = D_{n-1}`.
    pub fn target(&self) -> &FreeGradedModule {
        self.g.rows()
    }

    /// Number of parameters, if any module is nonempty.
    pub fn parameters(&self) -> Option<usize> {
        [self.source(), self.middle(), self.target()]
            .into_iter()
            .flat_map(|m| m.grades())
            .map(GradeVector::dim)
            .next()
    }
}

fn grade_index(v: &GradeVector) -> String {
    v.to_string()
}

/// `GF_n`: one generator per `(σ ∈ X_n, v ∈ gen(σ))`.
pub fn build_gf(m: &MultifilteredComplex, n: usize) -> FreeGradedModule {
    let mut gens = Vec::new();
    for s in m.ordered_simplices(n) {
        let block = m.label(&s);
        for v in m.births(&s) {
            gens.push(Generator {
                block: block.clone(),
                index: grade_index(v),
                grade: v.clone(),
            });
        }
    }
    FreeGradedModule::new(gens)
}

/// `KF_n`: one generator of grade `v0 ∨ v1` per pair `v0 <lex v1` in `gen(σ)`.
pub fn build_kf(m: &MultifilteredComplex, n: usize) -> FreeGradedModule {
    let mut gens = Vec::new();
    for s in m.ordered_simplices(n) {
        let block = m.label(&s);
        let births = m.births(&s).elements();
        for (i, v0) in births.iter().enumerate() {
            for v1 in &births[i + 1..] {
                gens.push(Generator {
                    block: block.clone(),
                    index: format!("{v0} {v1}"),
                    grade: v0.join_unchecked(v1),
                });
            }
        }
    }
    FreeGradedModule::new(gens)
}

/// `D_{n-1}`: one grade-zero generator per `(n-1)`-simplex; empty for `n = 0`.
pub fn build_d(m: &MultifilteredComplex, n: usize) -> FreeGradedModule {
    let Some(below) = n.checked_sub(1) else {
        return FreeGradedModule::default();
    };
    let zero = GradeVector::zero(m.parameters());
    FreeGradedModule::new(
        m.ordered_simplices(below)
            .iter()
            .map(|s| Generator {
                block: m.label(s),
                index: grade_index(&zero),
                grade: zero.clone(),
            })
            .collect(),
    )
}

/// First row of each simplex block in `GF_n`.
fn block_offsets(m: &MultifilteredComplex, n: usize) -> BTreeMap<Simplex, usize> {
    let mut offsets = BTreeMap::new();
    let mut next = 0;
    for s in m.ordered_simplices(n) {
        let len = m.births(&s).len();
        offsets.insert(s, next);
        next += len;
    }
    offsets
}

/// The block-diagonal matrix of `π0 − π1: KF_n → GF_n`.
pub fn matrix_pi(m: &MultifilteredComplex, n: usize) -> Result<GradedMatrix> {
    let rows = build_gf(m, n);
    let cols = build_kf(m, n);
    let mut triples = Vec::with_capacity(2 * cols.rank());
    let mut col = 0;
    let mut offset = 0;
    for s in m.ordered_simplices(n) {
        let k = m.births(&s).len();
        for i in 0..k {
            for j in i + 1..k {
                triples.push((offset + i, col, 1));
                triples.push((offset + j, col, -1));
                col += 1;
            }
        }
        offset += k;
    }
    GradedMatrix::from_triples(rows, cols, triples)
}

/// The matrix of `Σ(−1)^i d̄_i: GF_{n+1} → GF_n`.
pub fn matrix_dbar(m: &MultifilteredComplex, n: usize) -> Result<GradedMatrix> {
    let rows = build_gf(m, n);
    let cols = build_gf(m, n + 1);
    let offsets = block_offsets(m, n);
    let mut triples = Vec::new();
    let mut col = 0;
    for sigma in m.ordered_simplices(n + 1) {
        let faces = sigma.faces();
        debug_assert!(
            faces.windows(2).all(|w| w[0] != w[1]),
            "faces of a simplex are distinct"
        );
        for v in m.births(&sigma) {
            for (i, tau) in faces.iter().enumerate() {
                let births = m.births(tau);
                let w = births.lex_min_below(v).map_err(|_| Error::FaceCondition {
                    sigma: m.label(&sigma),
                    tau: m.label(tau),
                    grade: v.to_string(),
                })?;
                let pos = births.elements().binary_search(w).expect("w is a birth of tau");
                triples.push((offsets[tau] + pos, col, sign(i)));
            }
            col += 1;
        }
    }
    GradedMatrix::from_triples(rows, cols, triples)
}

/// The matrix of `Σ(−1)^j α_j: GF_n → D_{n-1}`.
pub fn matrix_alpha(m: &MultifilteredComplex, n: usize) -> Result<GradedMatrix> {
    let rows = build_d(m, n);
    let cols = build_gf(m, n);
    if n == 0 {
        return Ok(GradedMatrix::zero(rows, cols));
    }
    let row_of: BTreeMap<Simplex, usize> = m
        .ordered_simplices(n - 1)
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut triples = Vec::new();
    let mut col = 0;
    for sigma in m.ordered_simplices(n) {
        let faces = sigma.faces();
        for _ in m.births(&sigma) {
            for (j, tau) in faces.iter().enumerate() {
                triples.push((row_of[tau], col, sign(j)));
            }
            col += 1;
        }
    }
    GradedMatrix::from_triples(rows, cols, triples)
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The presentation complex in degree `n`: `f = [π0 − π1 | d̄]`, `g = α`.
///
/// Fails on a face-condition violation, or with
/// [`Error::NonZeroComposition`] if `g · f ≠ 0`, which never happens for a
/// valid multifiltration.
pub fn build_complex(m: &MultifilteredComplex, n: usize) -> Result<PresentationComplex> {
    let f = matrix_pi(m, n)?.hconcat(&matrix_dbar(m, n)?)?;
    let g = matrix_alpha(m, n)?;
    PresentationComplex::new(n, f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example4;

    fn g(c: &[u64]) -> GradeVector {
        GradeVector::new(c.to_vec())
    }

    fn multiset(m: &FreeGradedModule) -> Vec<String> {
        m.grade_multiset().iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn module_tables_of_worked_example() {
        let m = example4();
        assert_eq!(
            multiset(&build_kf(&m, 1)),
            ["(1,2)", "(1,2)", "(2,1)", "(2,2)", "(2,2)"]
        );
        assert_eq!(
            multiset(&build_gf(&m, 1)),
            ["(0,2)", "(0,2)", "(0,2)", "(0,2)", "(1,1)", "(1,1)", "(1,1)", "(2,0)", "(2,0)", "(2,0)"]
        );
        assert_eq!(multiset(&build_gf(&m, 2)), ["(1,2)", "(2,1)"]);
        assert_eq!(multiset(&build_d(&m, 1)), ["(0,0)"; 4]);
        assert!(build_gf(&m, 3).is_empty());
        assert_eq!(multiset(&build_kf(&m, 2)), ["(2,2)"]);
        assert!(build_kf(&m, 3).is_empty());
        assert!(build_d(&m, 0).is_empty());
    }

    #[test]
    fn pi_columns_have_one_plus_and_one_minus() {
        let m = example4();
        let pi = matrix_pi(&m, 1).unwrap();
        assert_eq!((pi.nrows(), pi.ncols()), (10, 5));
        for j in 0..pi.ncols() {
            let col: Vec<(usize, i64)> = (0..pi.nrows())
                .filter(|&i| pi.get(i, j) != 0)
                .map(|i| (i, pi.get(i, j)))
                .collect();
            assert_eq!(col.len(), 2);
            assert_eq!((col[0].1, col[1].1), (1, -1));
            assert_eq!(
                pi.rows().generators()[col[0].0].block,
                pi.rows().generators()[col[1].0].block
            );
        }
    }

    #[test]
    fn one_critical_input_has_no_pi_columns() {
        let m = crate::fixtures::one_critical_triangle();
        assert_eq!(matrix_pi(&m, 1).unwrap().ncols(), 0);
        assert_eq!(matrix_pi(&m, 0).unwrap().ncols(), 0);
        let c = build_complex(&m, 1).unwrap();
        assert_eq!(c.f(), &matrix_dbar(&m, 1).unwrap());
    }

    #[test]
    fn dbar_columns_carry_n_plus_two_entries() {
        let m = example4();
        let d = matrix_dbar(&m, 1).unwrap();
        assert_eq!((d.nrows(), d.ncols()), (10, 2));
        for j in 0..2 {
            assert_eq!((0..10).filter(|&i| d.get(i, j) != 0).count(), 3);
        }
        assert!(d.has_unit_entries());
        let empty = matrix_dbar(&m, 2).unwrap();
        assert_eq!((empty.nrows(), empty.ncols()), (2, 0));
    }

    #[test]
    fn alpha_is_constant_along_column_blocks() {
        let m = example4();
        let a = matrix_alpha(&m, 1).unwrap();
        let cols = a.cols().generators();
        for i in 0..a.nrows() {
            for j in 1..a.ncols() {
                if cols[j].block == cols[j - 1].block {
                    assert_eq!(a.get(i, j), a.get(i, j - 1));
                }
            }
        }
        assert!(a.rows().grades().all(|v| *v == g(&[0, 0])));
        let a0 = matrix_alpha(&m, 0).unwrap();
        assert_eq!((a0.nrows(), a0.ncols()), (0, 10));
    }

    #[test]
    fn degree_zero_complex() {
        let m = example4();
        let c = build_complex(&m, 0).unwrap();
        assert_eq!(c.target().rank(), 0);
        assert_eq!(c.middle().rank(), 10);
        // 4 vertices with 2 + 3 + 3 + 2 births give 1 + 3 + 3 + 1 pairs, then 10 edge births
        assert_eq!(c.source().rank(), 8 + 10);
    }

    #[test]
    fn trivial_complexes() {
        let k = crate::simplicial::SimplicialComplex::closure(vec![0], []).unwrap();
        let births = [(
            Simplex::new(vec![0]).unwrap(),
            crate::grades::Antichain::singleton(g(&[0, 0])),
        )]
        .into();
        let m = MultifilteredComplex::new(2, k, births).unwrap();
        let c = build_complex(&m, 1).unwrap();
        assert!(c.source().is_empty() && c.middle().is_empty());
        assert_eq!(c.target().rank(), 1);
        let c2 = build_complex(&m, 2).unwrap();
        assert!(c2.source().is_empty() && c2.middle().is_empty() && c2.target().is_empty());
    }

    #[test]
    fn homogeneity_is_enforced_at_construction() {
        let rows = FreeGradedModule::new(vec![Generator {
            block: "a".into(),
            index: String::new(),
            grade: g(&[1, 0]),
        }]);
        let cols = FreeGradedModule::new(vec![Generator {
            block: "b".into(),
            index: String::new(),
            grade: g(&[0, 1]),
        }]);
        assert!(matches!(
            GradedMatrix::new(rows.clone(), cols.clone(), vec![1]),
            Err(Error::NotHomogeneous { row: 0, col: 0, .. })
        ));
        assert!(GradedMatrix::new(rows.clone(), cols.clone(), vec![0]).is_ok());
        assert!(matches!(GradedMatrix::new(rows, cols, vec![]), Err(Error::Shape(_))));
    }

    #[test]
    fn face_condition_failure_surfaces_in_dbar() {
        let m = crate::fixtures::triangle_before_edges();
        assert!(matches!(matrix_dbar(&m, 1), Err(Error::FaceCondition { .. })));
    }

    #[test]
    fn evaluate_at_keeps_generators_below() {
        let m = example4();
        let c = build_complex(&m, 1).unwrap();
        let at11 = c.f().evaluate_at(&g(&[1, 1])).unwrap();
        // rows of grade (1,1) survive, no column does
        assert_eq!(at11.len(), 3);
        assert!(at11.iter().all(Vec::is_empty));
        assert_eq!(c.f().evaluate_at(&g(&[2, 2])).unwrap(), c.f().to_rows());
        assert!(c.f().evaluate_at(&g(&[2])).is_err());
    }

    #[test]
    fn json_forms_round_trip() {
        let c = build_complex(&example4(), 1).unwrap();
        let dense = c.f().to_dense_json();
        assert_eq!(dense["entries"].as_array().unwrap().len(), 10);
        assert_eq!(dense["row_labels"][0]["block"], "0<1");
        assert_eq!(GradedMatrix::from_dense_json(dense).unwrap(), *c.f());
        assert_eq!(GradedMatrix::from_sparse(c.g().to_sparse()).unwrap(), *c.g());
    }
}
