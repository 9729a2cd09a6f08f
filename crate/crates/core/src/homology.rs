//! Grade-wise evaluation of presentation complexes over a field.
//!
//! At a grade `v` a free module `⊕⟨x^{w_i}⟩` is the vector space spanned by
//! the generators with `w_i ≤ v`, and a graded matrix restricts to the
//! corresponding submatrix. The homology of the presentation complex at `v`
//! is then `dim ker g_v − rank f_v`. [`simplicial_homology_dim`] computes the
//! same number straight from the complex `F(v)` and serves as an oracle.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::FieldSpec;
use crate::grades::GradeVector;
use crate::presentation::{build_complex, GradedMatrix, PresentationComplex};
use crate::simplicial::MultifilteredComplex;

/// The submatrix of `m` in grade `v`.
pub fn evaluate_at(m: &GradedMatrix, v: &GradeVector) -> Result<Vec<Vec<i64>>> {
    m.evaluate_at(v)
}

/// `dim H(C)_v` over `field`.
pub fn homology_dim_at(c: &PresentationComplex, v: &GradeVector, field: FieldSpec) -> Result<usize> {
    let f_v = c.f().evaluate_at(v)?;
    let g_v = c.g().evaluate_at(v)?;
    let middle = c.middle().grades().filter(|w| w.leq_unchecked(v)).count();
    // g_v is (#target rows) x middle; its rank is taken on that shape
    let rank_g = field.rank(&g_v)?;
    let rank_f = field.rank(&f_v)?;
    Ok(middle - rank_g - rank_f)
}

/// Dimensions of a graded module on the box `{v ≤ bound}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertTable {
    #[serde(rename = "box")]
    pub bound: GradeVector,
    #[serde(with = "table_entries")]
    pub values: BTreeMap<GradeVector, usize>,
}

mod table_entries {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        grade: GradeVector,
        dim: usize,
    }

    pub fn serialize<S: Serializer>(
        values: &BTreeMap<GradeVector, usize>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = values
            .iter()
            .map(|(grade, dim)| Entry {
                grade: grade.clone(),
                dim: *dim,
            })
            .collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<GradeVector, usize>, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        Ok(entries.into_iter().map(|e| (e.grade, e.dim)).collect())
    }
}

impl HilbertTable {
    pub fn get(&self, v: &GradeVector) -> Option<usize> {
        self.values.get(v).copied()
    }

    /// One line `v_1,...,v_r,dim` per grade, in lexicographic order.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (v, d) in &self.values {
            for c in v.coords() {
                out.push_str(&c.to_string());
                out.push(',');
            }
            out.push_str(&d.to_string());
            out.push('\n');
        }
        out
    }

    /// For `r = 2`: rows of the grid from the top (`x2` largest) down, each
    /// row listing `x1 = 0, 1, ...` left to right. `None` for other `r`.
    pub fn grid(&self) -> Option<Vec<Vec<usize>>> {
        let [w, h] = self.bound.coords() else {
            return None;
        };
        Some(
            (0..=*h)
                .rev()
                .map(|y| (0..=*w).map(|x| self.values[&GradeVector::new(vec![x, y])]).collect())
                .collect(),
        )
    }
}

impl fmt::Display for HilbertTable {
    /// Aligned grid for two parameters, CSV otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(rows) = self.grid() else {
            return write!(f, "{}", self.to_csv());
        };
        let width = self.values.values().map(|d| d.to_string().len()).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|d| format!("{d:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `homology_dim_at` on every grade of the box.
pub fn hilbert(c: &PresentationComplex, bound: &GradeVector, field: FieldSpec) -> Result<HilbertTable> {
    hilbert_with_jobs(c, bound, field, 1)
}

/// As [`hilbert`], spreading grades over `jobs` worker threads.
pub fn hilbert_with_jobs(
    c: &PresentationComplex,
    bound: &GradeVector,
    field: FieldSpec,
    jobs: usize,
) -> Result<HilbertTable> {
    field.validate()?;
    if let Some(r) = c.parameters() {
        bound.check_dim(r)?;
    }
    let grades = bound.box_grades();
    let values = map_grades(&grades, jobs, |v| homology_dim_at(c, v, field))?;
    Ok(HilbertTable {
        bound: bound.clone(),
        values: grades.into_iter().zip(values).collect(),
    })
}

fn map_grades<T, F>(grades: &[GradeVector], jobs: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&GradeVector) -> Result<T> + Sync,
{
    if jobs <= 1 {
        return grades.iter().map(&f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| grades.par_iter().map(&f).collect())
}

/// `dim H_n(F(v))` computed from simplicial boundary matrices of `F(v)`.
pub fn simplicial_homology_dim(m: &MultifilteredComplex, v: &GradeVector, n: usize, field: FieldSpec) -> Result<usize> {
    let k = m.complex_at(v)?;
    let chains = |d: usize| k.ordered_simplices(d);
    let cells_n = chains(n);
    let boundary = |d: usize| -> Vec<Vec<i64>> {
        // rows: (d-1)-simplices, columns: d-simplices
        let rows = chains(d - 1);
        let cols = chains(d);
        let index: BTreeMap<_, _> = rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut out = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, s) in cols.iter().enumerate() {
            for (i, face) in s.faces().iter().enumerate() {
                out[index[face]][j] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        out
    };
    let rank_out = if n == 0 { 0 } else { field.rank(&boundary(n))? };
    let rank_in = field.rank(&boundary(n + 1))?;
    Ok(cells_n.len() - rank_out - rank_in)
}

/// First grade where the two computations disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub grade: GradeVector,
    pub presentation: usize,
    pub simplicial: usize,
}

/// Result of [`oracle_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub checked: usize,
    pub mismatch: Option<Mismatch>,
}

impl OracleReport {
    pub fn is_ok(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "ok: {} grades agree", self.checked),
            Some(m) => write!(
                f,
                "mismatch at {}: presentation gives {}, simplicial homology gives {}",
                m.grade, m.presentation, m.simplicial
            ),
        }
    }
}

/// Compares the presentation complex against direct simplicial homology on
/// every grade of the box.
pub fn oracle_check(m: &MultifilteredComplex, n: usize, bound: &GradeVector, field: FieldSpec) -> Result<OracleReport> {
    oracle_check_with_jobs(m, n, bound, field, 1)
}

pub fn oracle_check_with_jobs(
    m: &MultifilteredComplex,
    n: usize,
    bound: &GradeVector,
    field: FieldSpec,
    jobs: usize,
) -> Result<OracleReport> {
    field.validate()?;
    bound.check_dim(m.parameters())?;
    let c = build_complex(m, n)?;
    let grades = bound.box_grades();
    let pairs = map_grades(&grades, jobs, |v| {
        Ok((homology_dim_at(&c, v, field)?, simplicial_homology_dim(m, v, n, field)?))
    })?;
    let mismatch = grades
        .iter()
        .zip(&pairs)
        .find(|(_, (a, b))| a != b)
        .map(|(v, (a, b))| Mismatch {
            grade: v.clone(),
            presentation: *a,
            simplicial: *b,
        });
    Ok(OracleReport {
        checked: grades.len(),
        mismatch,
    })
}
