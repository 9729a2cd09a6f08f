//! Finite simplicial complexes and their multifiltrations.
//!
//! Vertices are numbered by their position in the input vertex list; that
//! order is the vertex order used for every ordered simplex, face map and
//! matrix layout. The original vertex ids are kept only for display.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::grades::{check_parameter_count, minimal_elements, Antichain, GradeVector};

/// Most vertices a simplex may have (dimension 31).
pub const MAX_SIMPLEX_VERTICES: usize = 32;

/// A strictly increasing sequence of vertex positions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts `vertices`; fails on repeats, emptiness, or more than 32 vertices.
    pub fn new(vertices: impl Into<Vec<usize>>) -> Result<Self> {
        let mut v = vertices.into();
        if v.len() > MAX_SIMPLEX_VERTICES {
            return Err(Error::SimplexTooLarge(v.len()));
        }
        v.sort_unstable();
        let before = v.len();
        v.dedup();
        if v.is_empty() || v.len() != before {
            return Err(Error::MalformedSimplex(format!("{v:?}")));
        }
        Ok(Simplex(v))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Dimension `n` of an `n`-simplex.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The face `d_i`, obtained by forgetting the `i`-th vertex.
    pub fn face(&self, i: usize) -> Result<Simplex> {
        if i >= self.0.len() || self.0.len() == 1 {
            return Err(Error::FaceIndexOutOfRange {
                index: i,
                len: self.0.len(),
            });
        }
        let mut v = self.0.clone();
        v.remove(i);
        Ok(Simplex(v))
    }

    /// `d_0, ..., d_n` in order; empty for a vertex.
    pub fn faces(&self) -> Vec<Simplex> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0.clone();
                v.remove(i);
                Simplex(v)
            })
            .collect()
    }

    /// All nonempty subsets, including the simplex itself.
    fn subsets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| Simplex((0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect()))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join("<"))
    }
}

/// `face` as a free function.
pub fn face(s: &Simplex, i: usize) -> Result<Simplex> {
    s.face(i)
}

/// A finite, downward-closed family of simplices over a fixed vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    names: Vec<u64>,
    simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    /// The downward closure of `generators`, together with every named vertex.
    pub fn closure(names: Vec<u64>, generators: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        check_unique_names(&names)?;
        let mut simplices: BTreeSet<Simplex> = (0..names.len()).map(|i| Simplex(vec![i])).collect();
        for s in generators {
            if let Some(&bad) = s.0.iter().find(|&&v| v >= names.len()) {
                return Err(Error::UnknownVertex(format!("#{bad}")));
            }
            simplices.extend(s.subsets());
        }
        Ok(SimplicialComplex { names, simplices })
    }

    /// A complex from an explicit simplex list, which must already be closed.
    pub fn from_simplices(names: Vec<u64>, simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        check_unique_names(&names)?;
        let mut set: BTreeSet<Simplex> = (0..names.len()).map(|i| Simplex(vec![i])).collect();
        for s in simplices {
            if let Some(&bad) = s.0.iter().find(|&&v| v >= names.len()) {
                return Err(Error::UnknownVertex(format!("#{bad}")));
            }
            set.insert(s);
        }
        let out = SimplicialComplex { names, simplices: set };
        for s in &out.simplices {
            for f in s.faces() {
                if !out.simplices.contains(&f) {
                    return Err(Error::NotClosed {
                        simplex: out.label(s),
                        face: out.label(&f),
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn vertex_names(&self) -> &[u64] {
        &self.names
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// All simplices, ordered lexicographically by vertex sequence.
    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    /// The `n`-simplices in lexicographic order.
    pub fn ordered_simplices(&self, n: usize) -> Vec<Simplex> {
        self.simplices.iter().filter(|s| s.dim() == n).cloned().collect()
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.simplices.iter().map(Simplex::dim).max()
    }

    /// Simplices that are not a proper face of any other simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.simplices
            .iter()
            .filter(|s| {
                !self
                    .simplices
                    .iter()
                    .any(|t| t.0.len() == s.0.len() + 1 && is_subset(s, t))
            })
            .cloned()
            .collect()
    }

    /// Display label such as `1<2<3`, using the original vertex ids.
    pub fn label(&self, s: &Simplex) -> String {
        let parts: Vec<String> =
            s.0.iter()
                .map(|&i| self.names.get(i).map_or_else(|| format!("#{i}"), u64::to_string))
                .collect();
        parts.join("<")
    }

    /// Position of the vertex with id `name`.
    pub fn position(&self, name: u64) -> Option<usize> {
        self.names.iter().position(|&n| n == name)
    }

    fn restrict(&self, keep: impl Fn(&Simplex) -> bool) -> SimplicialComplex {
        SimplicialComplex {
            names: self.names.clone(),
            simplices: self.simplices.iter().filter(|s| keep(s)).cloned().collect(),
        }
    }
}

fn check_unique_names(names: &[u64]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::DuplicateVertex(n.to_string()));
        }
    }
    Ok(())
}

fn is_subset(small: &Simplex, big: &Simplex) -> bool {
    small.0.iter().all(|v| big.0.binary_search(v).is_ok())
}

/// `ordered_simplices` as a free function.
pub fn ordered_simplices(k: &SimplicialComplex, n: usize) -> Vec<Simplex> {
    k.ordered_simplices(n)
}

/// A face-condition failure: `grade` is a birth of `sigma`, yet its facet
/// `tau` is not present at `grade`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub sigma: String,
    pub tau: String,
    pub grade: GradeVector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} is born at {} but its face {} is not present there",
            self.sigma, self.grade, self.tau
        )
    }
}

/// Outcome of [`MultifilteredComplex::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::Validation(self.violations))
        }
    }
}

/// A compact multifiltration of simplicial complexes: the colimit complex
/// with the birth antichain `gen(σ)` of every simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultifilteredComplex {
    r: usize,
    complex: SimplicialComplex,
    births: BTreeMap<Simplex, Antichain>,
}

impl MultifilteredComplex {
    /// Fails if a simplex lacks births, an antichain is empty or of the
    /// wrong dimension, or a birth is given for a simplex outside the complex.
    /// The face condition is checked separately by [`Self::validate`].
    pub fn new(r: usize, complex: SimplicialComplex, births: BTreeMap<Simplex, Antichain>) -> Result<Self> {
        check_parameter_count(r)?;
        for (s, gens) in &births {
            if !complex.contains(s) {
                return Err(Error::Schema(format!(
                    "births given for {} which is not in the complex",
                    complex.label(s)
                )));
            }
            match gens.dim() {
                None => return Err(Error::EmptyBirths(complex.label(s))),
                Some(d) if d != r => return Err(Error::DimensionMismatch { expected: r, found: d }),
                _ => {}
            }
        }
        if let Some(s) = complex.simplices().find(|s| !births.contains_key(*s)) {
            return Err(Error::MissingBirths(complex.label(s)));
        }
        Ok(MultifilteredComplex { r, complex, births })
    }

    /// Completes births for faces not listed in `partial`.
    ///
    /// `births(τ)` becomes the minimal elements of `partial(τ)` together with
    /// the births of every coface, processed from the top dimension down.
    /// Every maximal simplex must carry births.
    pub fn close_births(r: usize, complex: SimplicialComplex, partial: &BTreeMap<Simplex, Antichain>) -> Result<Self> {
        check_parameter_count(r)?;
        for s in complex.maximal_simplices() {
            if partial.get(&s).is_none_or(Antichain::is_empty) {
                return Err(Error::MissingBirths(complex.label(&s)));
            }
        }
        let mut pool: BTreeMap<Simplex, Vec<GradeVector>> = BTreeMap::new();
        for (s, gens) in partial {
            pool.entry(s.clone()).or_default().extend(gens.iter().cloned());
        }
        let top = complex.max_dim().unwrap_or(0);
        let mut births = BTreeMap::new();
        for n in (0..=top).rev() {
            for s in complex.ordered_simplices(n) {
                let gens = minimal_elements(pool.get(&s).into_iter().flatten())?;
                for f in s.faces() {
                    pool.entry(f).or_default().extend(gens.iter().cloned());
                }
                births.insert(s, gens);
            }
        }
        MultifilteredComplex::new(r, complex, births)
    }

    pub fn parameters(&self) -> usize {
        self.r
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// `gen(σ)`; panics if `s` is not a simplex of the complex.
    pub fn births(&self, s: &Simplex) -> &Antichain {
        &self.births[s]
    }

    pub fn all_births(&self) -> &BTreeMap<Simplex, Antichain> {
        &self.births
    }

    pub fn ordered_simplices(&self, n: usize) -> Vec<Simplex> {
        self.complex.ordered_simplices(n)
    }

    pub fn label(&self, s: &Simplex) -> String {
        self.complex.label(s)
    }

    /// Whether any birth antichain was normalized on construction.
    pub fn was_normalized(&self) -> bool {
        self.births.values().any(Antichain::was_normalized)
    }

    /// Whether every simplex has a single birth grade.
    pub fn is_one_critical(&self) -> bool {
        self.births.values().all(|g| g.len() == 1)
    }

    /// Componentwise maximum of every birth grade: a box on which the
    /// filtration has stabilized.
    pub fn bounding_grade(&self) -> GradeVector {
        self.births
            .values()
            .filter_map(Antichain::join_all)
            .fold(GradeVector::zero(self.r), |acc, v| acc.join_unchecked(&v))
    }

    /// Checks that `F(v)` is a subcomplex at every grade.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (sigma, gens) in &self.births {
            for tau in sigma.faces() {
                let face_gens = &self.births[&tau];
                for v in gens {
                    if !face_gens.sat_contains_unchecked(v) {
                        violations.push(Violation {
                            sigma: self.label(sigma),
                            tau: self.label(&tau),
                            grade: v.clone(),
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// The complex `F(v)`.
    pub fn complex_at(&self, v: &GradeVector) -> Result<SimplicialComplex> {
        v.check_dim(self.r)?;
        Ok(self.complex.restrict(|s| self.births[s].sat_contains_unchecked(v)))
    }
}

/// `validate` as a free function.
pub fn validate(m: &MultifilteredComplex) -> ValidationReport {
    m.validate()
}

/// `close_births` as a free function.
pub fn close_births(
    r: usize,
    k: SimplicialComplex,
    partial: &BTreeMap<Simplex, Antichain>,
) -> Result<MultifilteredComplex> {
    MultifilteredComplex::close_births(r, k, partial)
}

/// `complex_at` as a free function.
pub fn complex_at(m: &MultifilteredComplex, v: &GradeVector) -> Result<SimplicialComplex> {
    m.complex_at(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example4;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn g(c: &[u64]) -> GradeVector {
        GradeVector::new(c.to_vec())
    }

    fn ac(cs: &[&[u64]]) -> Antichain {
        Antichain::new(cs.iter().map(|c| g(c))).unwrap()
    }

    fn labels(m: &MultifilteredComplex, n: usize) -> Vec<String> {
        m.ordered_simplices(n).iter().map(|x| m.label(x)).collect()
    }

    #[test]
    fn ordered_simplices_of_worked_example() {
        let m = example4();
        assert_eq!(labels(&m, 0), ["0", "1", "2", "3"]);
        assert_eq!(labels(&m, 1), ["0<1", "0<2", "1<2", "1<3", "2<3"]);
        assert_eq!(labels(&m, 2), ["1<2<3"]);
        assert!(labels(&m, 3).is_empty());
    }

    #[test]
    fn vertex_order_follows_input_not_ids() {
        let k = SimplicialComplex::closure(vec![7, 3, 5], [s(&[0, 2]), s(&[1, 2])]).unwrap();
        let edges: Vec<String> = k.ordered_simplices(1).iter().map(|x| k.label(x)).collect();
        assert_eq!(edges, ["7<5", "3<5"]);
    }

    #[test]
    fn face_maps() {
        let t = s(&[1, 2, 3]);
        assert_eq!(face(&t, 0).unwrap(), s(&[2, 3]));
        assert_eq!(face(&t, 1).unwrap(), s(&[1, 3]));
        assert_eq!(face(&t, 2).unwrap(), s(&[1, 2]));
        assert!(matches!(
            face(&t, 3),
            Err(Error::FaceIndexOutOfRange { index: 3, len: 3 })
        ));
        assert!(face(&s(&[4]), 0).is_err());
    }

    #[test]
    fn simplex_construction_errors() {
        assert!(matches!(Simplex::new(vec![1, 1]), Err(Error::MalformedSimplex(_))));
        assert!(Simplex::new(Vec::new()).is_err());
        assert!(matches!(
            Simplex::new((0..33).collect::<Vec<_>>()),
            Err(Error::SimplexTooLarge(33))
        ));
        assert!(Simplex::new((0..32).collect::<Vec<_>>()).is_ok());
    }

    #[test]
    fn explicit_complex_must_be_closed() {
        let err = SimplicialComplex::from_simplices(vec![0, 1, 2], [s(&[0, 1, 2])]).unwrap_err();
        assert!(matches!(err, Error::NotClosed { .. }));
        assert!(matches!(
            SimplicialComplex::closure(vec![0, 1], [s(&[0, 5])]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn worked_example_validates() {
        assert!(example4().validate().is_ok());
    }

    #[test]
    fn triangle_born_before_edge_is_reported() {
        let k = SimplicialComplex::closure(vec![0, 1, 2], [s(&[0, 1, 2])]).unwrap();
        let mut births = BTreeMap::new();
        for x in k.simplices() {
            births.insert(x.clone(), ac(&[&[1, 1]]));
        }
        births.insert(s(&[0, 1, 2]), ac(&[&[0, 0]]));
        let m = MultifilteredComplex::new(2, k, births).unwrap();
        let report = m.validate();
        assert_eq!(report.violations.len(), 3);
        assert!(report.violations.contains(&Violation {
            sigma: "0<1<2".into(),
            tau: "0<1".into(),
            grade: g(&[0, 0]),
        }));
        assert!(matches!(report.into_result(), Err(Error::Validation(_))));
    }

    #[test]
    fn missing_births_is_a_construction_error() {
        let k = SimplicialComplex::closure(vec![0, 1], [s(&[0, 1])]).unwrap();
        let births: BTreeMap<_, _> = [(s(&[0]), ac(&[&[0, 0]])), (s(&[1]), ac(&[&[0, 0]]))].into();
        assert!(matches!(
            MultifilteredComplex::new(2, k, births),
            Err(Error::MissingBirths(label)) if label == "0<1"
        ));
    }

    #[test]
    fn close_births_pushes_births_down() {
        let k = SimplicialComplex::closure(vec![0, 1, 2], [s(&[0, 1, 2])]).unwrap();
        let tri = ac(&[&[1, 2], &[2, 1]]);
        let mut partial = BTreeMap::new();
        partial.insert(s(&[0, 1, 2]), tri.clone());
        partial.insert(s(&[0]), ac(&[&[0, 0]]));
        let m = close_births(2, k, &partial).unwrap();
        for e in m.ordered_simplices(1) {
            assert_eq!(m.births(&e), &tri);
        }
        assert_eq!(m.births(&s(&[0])), &ac(&[&[0, 0]]));
        assert_eq!(m.births(&s(&[1])), &tri);
        assert!(m.validate().is_ok());
    }

    #[test]
    fn close_births_is_identity_on_closed_input() {
        let m = example4();
        let again = close_births(2, m.complex().clone(), m.all_births()).unwrap();
        assert_eq!(again, m);
        let twice = close_births(2, again.complex().clone(), again.all_births()).unwrap();
        assert_eq!(twice, again);
    }

    #[test]
    fn close_births_needs_maximal_simplices() {
        let k = SimplicialComplex::closure(vec![0, 1, 2], [s(&[0, 1]), s(&[2])]).unwrap();
        let partial: BTreeMap<_, _> = [(s(&[0, 1]), ac(&[&[1, 0]]))].into();
        assert!(matches!(
            close_births(2, k, &partial),
            Err(Error::MissingBirths(label)) if label == "2"
        ));
    }

    #[test]
    fn complex_at_grades_of_worked_example() {
        let m = example4();
        assert_eq!(m.complex_at(&g(&[2, 2])).unwrap(), *m.complex());
        assert!(m.complex_at(&g(&[0, 0])).unwrap().is_empty());
        let mid = m.complex_at(&g(&[1, 1])).unwrap();
        let present: Vec<String> = mid.simplices().map(|x| m.label(x)).collect();
        assert_eq!(present, ["1", "1<2", "1<3", "2", "2<3", "3"]);
        assert!(m.complex_at(&g(&[1])).is_err());
    }

    #[test]
    fn complex_at_is_monotone_and_closed() {
        let m = example4();
        let bound = g(&[3, 3]);
        for v in bound.box_grades() {
            let here = m.complex_at(&v).unwrap();
            for x in here.simplices() {
                for f in x.faces() {
                    assert!(here.contains(&f));
                }
            }
            for i in 0..2 {
                let mut up = v.coords().to_vec();
                up[i] += 1;
                let there = m.complex_at(&GradeVector::new(up)).unwrap();
                assert!(here.simplices().all(|x| there.contains(x)));
            }
        }
    }
}
