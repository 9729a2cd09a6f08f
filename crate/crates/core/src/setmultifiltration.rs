//! Compact multifiltrations of sets in canonical form.
//!
//! A compact multifiltration `F: N^r → Sets` decomposes uniquely into
//! indecomposable pieces, one per element `x` of its colimit, and each piece
//! is determined by the minimal grades at which `x` is present. So `F` is
//! stored as a map from labels to birth antichains. Its `R`-span is the sum of
//! monomial ideals generated by those antichains.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grades::{check_parameter_count, minimal_elements, Antichain, GradeVector};
use crate::presentation::{FreeGradedModule, Generator, GradedMatrix};

/// A set multifiltration: every colimit element with its birth antichain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SetMultifiltrationJson", into = "SetMultifiltrationJson")]
pub struct SetMultifiltration {
    r: usize,
    elements: BTreeMap<String, Antichain>,
}

#[derive(Serialize, Deserialize)]
struct SetMultifiltrationJson {
    r: usize,
    elements: BTreeMap<String, Antichain>,
}

impl TryFrom<SetMultifiltrationJson> for SetMultifiltration {
    type Error = Error;

    fn try_from(json: SetMultifiltrationJson) -> Result<Self> {
        SetMultifiltration::new(json.r, json.elements)
    }
}

impl From<SetMultifiltration> for SetMultifiltrationJson {
    fn from(f: SetMultifiltration) -> Self {
        SetMultifiltrationJson {
            r: f.r,
            elements: f.elements,
        }
    }
}

impl SetMultifiltration {
    pub fn new(r: usize, elements: BTreeMap<String, Antichain>) -> Result<Self> {
        check_parameter_count(r)?;
        for (label, gens) in &elements {
            match gens.dim() {
                None => return Err(Error::EmptyBirths(label.clone())),
                Some(d) if d != r => return Err(Error::DimensionMismatch { expected: r, found: d }),
                _ => {}
            }
        }
        Ok(SetMultifiltration { r, elements })
    }

    /// Reads a multifiltration tabulated on the box `{v ≤ bound}`.
    ///
    /// Outside the box the multifiltration is taken to be constant. Fails if
    /// a grade of the box is missing, or if some label present at `v` is
    /// absent at a larger grade.
    pub fn from_tabulated(
        r: usize,
        grid: &BTreeMap<GradeVector, BTreeSet<String>>,
        bound: &GradeVector,
    ) -> Result<Self> {
        check_parameter_count(r)?;
        bound.check_dim(r)?;
        for v in grid.keys() {
            v.check_dim(r)?;
            if !v.leq_unchecked(bound) {
                return Err(Error::OutsideBox {
                    grade: v.to_string(),
                    bound: bound.to_string(),
                });
            }
        }
        let grades = bound.box_grades();
        for v in &grades {
            let here = grid.get(v).ok_or_else(|| Error::MissingGrade(v.to_string()))?;
            for i in 0..r {
                if v.coords()[i] == bound.coords()[i] {
                    continue;
                }
                let mut up = v.coords().to_vec();
                up[i] += 1;
                let w = GradeVector::new(up);
                let there = grid.get(&w).ok_or_else(|| Error::MissingGrade(w.to_string()))?;
                if let Some(x) = here.difference(there).next() {
                    return Err(Error::NotAMultifiltration {
                        label: x.clone(),
                        present: v.to_string(),
                        absent: w.to_string(),
                    });
                }
            }
        }
        let mut seen: BTreeMap<String, Vec<GradeVector>> = BTreeMap::new();
        for (v, labels) in grid {
            for x in labels {
                seen.entry(x.clone()).or_default().push(v.clone());
            }
        }
        let elements = seen
            .into_iter()
            .map(|(x, vs)| Ok((x, minimal_elements(&vs)?)))
            .collect::<Result<_>>()?;
        SetMultifiltration::new(r, elements)
    }

    /// Values of the multifiltration on every grade of the box.
    pub fn tabulate(&self, bound: &GradeVector) -> Result<BTreeMap<GradeVector, BTreeSet<String>>> {
        bound
            .box_grades()
            .into_iter()
            .map(|v| {
                let labels = self.support_at(&v)?;
                Ok((v, labels))
            })
            .collect()
    }

    pub fn parameters(&self) -> usize {
        self.r
    }

    pub fn elements(&self) -> &BTreeMap<String, Antichain> {
        &self.elements
    }

    /// The labels present at grade `v`.
    pub fn support_at(&self, v: &GradeVector) -> Result<BTreeSet<String>> {
        v.check_dim(self.r)?;
        Ok(self
            .elements
            .iter()
            .filter(|(_, gens)| gens.sat_contains_unchecked(v))
            .map(|(x, _)| x.clone())
            .collect())
    }

    /// Free exactly when every element has a single birth.
    pub fn is_one_critical(&self) -> bool {
        self.elements.values().all(|g| g.len() == 1)
    }

    /// Componentwise maximum of all births (the origin if there are none).
    pub fn bounding_grade(&self) -> GradeVector {
        self.elements
            .values()
            .filter_map(Antichain::join_all)
            .fold(GradeVector::zero(self.r), |acc, v| acc.join_unchecked(&v))
    }

    /// The birth antichains as a list, one per label in label order.
    pub fn antichains(&self) -> Vec<Antichain> {
        self.elements.values().cloned().collect()
    }

    /// The free presentation of the `R`-span as the cokernel of `π0 − π1`.
    pub fn free_presentation(&self) -> Result<SetPresentation> {
        let mut generators = Vec::new();
        let mut relations = Vec::new();
        let mut triples = Vec::new();
        for (x, gens) in &self.elements {
            let offset = generators.len();
            let births = gens.elements();
            for v in births {
                generators.push(Generator {
                    block: x.clone(),
                    index: v.to_string(),
                    grade: v.clone(),
                });
            }
            for (i, v0) in births.iter().enumerate() {
                for (j, v1) in births.iter().enumerate().skip(i + 1) {
                    let col = relations.len();
                    triples.push((offset + i, col, 1));
                    triples.push((offset + j, col, -1));
                    relations.push(Generator {
                        block: x.clone(),
                        index: format!("{v0} {v1}"),
                        grade: v0.join_unchecked(v1),
                    });
                }
            }
        }
        let matrix = GradedMatrix::from_triples(
            FreeGradedModule::new(generators),
            FreeGradedModule::new(relations),
            triples,
        )?;
        Ok(SetPresentation { matrix })
    }
}

/// Minimal monomial generators `x^v`, `v ∈ T`, of the ideal attached to `T`.
pub fn to_monomial_ideal(t: &Antichain) -> Result<Vec<Vec<u64>>> {
    if t.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    Ok(t.iter().map(|v| v.coords().to_vec()).collect())
}

/// Renders an exponent vector as a monomial in `x1, ..., xr`, e.g. `x1*x2^2`.
pub fn monomial_string(exponents: &[u64]) -> String {
    let factors: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, e)| match e {
            1 => format!("x{}", i + 1),
            _ => format!("x{}^{}", i + 1, e),
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Whether two direct sums of monomial ideals are isomorphic.
///
/// Isomorphic sums have the same summands up to order, so this compares the
/// two lists as multisets.
pub fn modules_isomorphic(a: &[Antichain], b: &[Antichain]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a == b
}

/// A free presentation of the `R`-span of a set multifiltration.
///
/// Rows are the generators `(x, v)`, `v ∈ gen(x)`; columns are the relations
/// `(x, {v0, v1})` in grade `v0 ∨ v1`, with `+1` on `v0` and `−1` on `v1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPresentation {
    matrix: GradedMatrix,
}

impl SetPresentation {
    pub fn generators(&self) -> &[Generator] {
        self.matrix.rows().generators()
    }

    pub fn relations(&self) -> &[Generator] {
        self.matrix.cols().generators()
    }

    pub fn matrix(&self) -> &GradedMatrix {
        &self.matrix
    }
}

/// `free_presentation` as a free function.
pub fn free_presentation(f: &SetMultifiltration) -> Result<SetPresentation> {
    f.free_presentation()
}
