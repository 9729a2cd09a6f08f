//! The lattice `N^r` of multigrades.
//!
//! A [`GradeVector`] is an `r`-tuple of natural numbers ordered componentwise.
//! Upward-closed ("saturated") subsets of `N^r` are always handled through their
//! finite set of minimal elements, an [`Antichain`]. The derived `Ord` on both
//! types is the lexicographic order, used wherever a canonical ordering is
//! needed; the product order is exposed through [`GradeVector::leq`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported number of filtration parameters.
pub const MAX_PARAMETERS: usize = 32;

/// Checks that `r` is a supported parameter count.
pub fn check_parameter_count(r: usize) -> Result<()> {
    if (1..=MAX_PARAMETERS).contains(&r) {
        Ok(())
    } else {
        Err(Error::InvalidParameterCount(r))
    }
}

/// An element of `N^r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GradeVector(Vec<u64>);

impl GradeVector {
    pub fn new(coords: impl Into<Vec<u64>>) -> Self {
        GradeVector(coords.into())
    }

    /// The origin of `N^r`.
    pub fn zero(r: usize) -> Self {
        GradeVector(vec![0; r])
    }

    /// The unit vector `e_i`.
    pub fn unit(r: usize, i: usize) -> Self {
        let mut coords = vec![0; r];
        coords[i] = 1;
        GradeVector(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn check_dim(&self, r: usize) -> Result<()> {
        if self.dim() == r {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: r,
                found: self.dim(),
            })
        }
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &GradeVector) -> Result<bool> {
        other.check_dim(self.dim())?;
        Ok(self.leq_unchecked(other))
    }

    /// Componentwise maximum, the least upper bound in `N^r`.
    pub fn join(&self, other: &GradeVector) -> Result<GradeVector> {
        other.check_dim(self.dim())?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &GradeVector) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn join_unchecked(&self, other: &GradeVector) -> GradeVector {
        debug_assert_eq!(self.dim(), other.dim());
        GradeVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self < other` in the product order.
    pub(crate) fn strictly_below(&self, other: &GradeVector) -> bool {
        self != other && self.leq_unchecked(other)
    }

    /// All grades `v` with `0 <= v <= self`, in lexicographic order.
    pub fn box_grades(&self) -> Vec<GradeVector> {
        let mut out = vec![GradeVector(Vec::with_capacity(self.dim()))];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=bound).map(move |c| {
                        let mut next = prefix.0.clone();
                        next.push(c);
                        GradeVector(next)
                    })
                })
                .collect();
        }
        out
    }
}

impl From<Vec<u64>> for GradeVector {
    fn from(coords: Vec<u64>) -> Self {
        GradeVector(coords)
    }
}

impl<const N: usize> From<[u64; N]> for GradeVector {
    fn from(coords: [u64; N]) -> Self {
        GradeVector(coords.to_vec())
    }
}

impl fmt::Debug for GradeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GradeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for GradeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradeVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<u64>::deserialize(deserializer).map(GradeVector)
    }
}

/// Componentwise `v <= w`.
pub fn leq(v: &GradeVector, w: &GradeVector) -> Result<bool> {
    v.leq(w)
}

/// Componentwise maximum of `v` and `w`.
pub fn join(v: &GradeVector, w: &GradeVector) -> Result<GradeVector> {
    v.join(w)
}

/// The elements of `set` not strictly dominated by another element of `set`.
///
/// Duplicates collapse. The empty set yields the empty antichain.
pub fn minimal_elements<'a, I>(set: I) -> Result<Antichain>
where
    I: IntoIterator<Item = &'a GradeVector>,
{
    let mut grades: Vec<GradeVector> = set.into_iter().cloned().collect();
    if let Some(first) = grades.first() {
        let r = first.dim();
        for g in &grades {
            g.check_dim(r)?;
        }
    }
    grades.sort();
    grades.dedup();
    let minimal = grades
        .iter()
        .filter(|v| !grades.iter().any(|w| w.strictly_below(v)))
        .cloned()
        .collect();
    Ok(Antichain {
        elements: minimal,
        normalized: false,
    })
}

/// A finite set of pairwise incomparable grades, sorted lexicographically.
///
/// Represents the saturated set `sat(T) = {v | u <= v for some u in T}`.
#[derive(Clone, Default)]
pub struct Antichain {
    elements: Vec<GradeVector>,
    // set when construction had to drop dominated or repeated grades
    normalized: bool,
}

impl Antichain {
    /// Builds an antichain, silently discarding dominated and repeated grades.
    ///
    /// [`Antichain::was_normalized`] reports whether anything was discarded.
    pub fn new(grades: impl IntoIterator<Item = GradeVector>) -> Result<Self> {
        let grades: Vec<GradeVector> = grades.into_iter().collect();
        let mut out = minimal_elements(&grades)?;
        out.normalized = out.elements.len() != grades.len();
        Ok(out)
    }

    pub fn empty() -> Self {
        Antichain::default()
    }

    /// The antichain `{v}`.
    pub fn singleton(v: GradeVector) -> Self {
        Antichain {
            elements: vec![v],
            normalized: false,
        }
    }

    pub fn was_normalized(&self) -> bool {
        self.normalized
    }

    pub fn elements(&self) -> &[GradeVector] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GradeVector> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Common dimension of the elements, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.elements.first().map(GradeVector::dim)
    }

    /// Whether `v` belongs to the upward closure of this antichain.
    pub fn sat_contains(&self, v: &GradeVector) -> Result<bool> {
        if let Some(r) = self.dim() {
            v.check_dim(r)?;
        }
        Ok(self.sat_contains_unchecked(v))
    }

    pub(crate) fn sat_contains_unchecked(&self, v: &GradeVector) -> bool {
        self.elements.iter().any(|u| u.leq_unchecked(v))
    }

    /// The lexicographically smallest element `w` with `w <= v`.
    pub fn lex_min_below(&self, v: &GradeVector) -> Result<&GradeVector> {
        if let Some(r) = self.dim() {
            v.check_dim(r)?;
        }
        // elements are lex-sorted, so the first hit is the minimum
        self.elements
            .iter()
            .find(|w| w.leq_unchecked(v))
            .ok_or_else(|| Error::NoGeneratorBelow {
                antichain: self.to_string(),
                grade: v.to_string(),
            })
    }

    /// Componentwise maximum of all elements, `None` when empty.
    pub fn join_all(&self) -> Option<GradeVector> {
        let mut it = self.elements.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, v| acc.join_unchecked(v)))
    }
}

impl PartialEq for Antichain {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Antichain {}

impl PartialOrd for Antichain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Antichain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl Hash for Antichain {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl<'a> IntoIterator for &'a Antichain {
    type Item = &'a GradeVector;
    type IntoIter = std::slice::Iter<'a, GradeVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl fmt::Debug for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Antichain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Antichain {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let grades = Vec::<GradeVector>::deserialize(deserializer)?;
        Antichain::new(grades).map_err(serde::de::Error::custom)
    }
}

/// `sat_contains` as a free function.
pub fn sat_contains(t: &Antichain, v: &GradeVector) -> Result<bool> {
    t.sat_contains(v)
}

/// `lex_min_below` as a free function.
pub fn lex_min_below(t: &Antichain, v: &GradeVector) -> Result<GradeVector> {
    t.lex_min_below(v).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(c: &[u64]) -> GradeVector {
        GradeVector::new(c.to_vec())
    }

    fn ac(cs: &[&[u64]]) -> Antichain {
        Antichain::new(cs.iter().map(|c| g(c))).unwrap()
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&g(&[1, 1]), &g(&[1, 2])).unwrap());
        assert!(!leq(&g(&[0, 2]), &g(&[2, 0])).unwrap());
        assert!(leq(&g(&[2, 2]), &g(&[2, 2])).unwrap());
        assert!(matches!(
            leq(&g(&[1]), &g(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&g(&[0, 2]), &g(&[2, 0])).unwrap(), g(&[2, 2]));
        assert_eq!(join(&g(&[1, 1]), &g(&[2, 0])).unwrap(), g(&[2, 1]));
        assert_eq!(join(&g(&[3, 5]), &GradeVector::zero(2)).unwrap(), g(&[3, 5]));
        assert!(join(&g(&[1, 2, 3]), &g(&[1])).is_err());
    }

    #[test]
    fn minimal_elements_examples() {
        let set = [g(&[0, 2]), g(&[1, 1]), g(&[2, 0]), g(&[2, 2]), g(&[1, 2])];
        assert_eq!(
            minimal_elements(&set).unwrap().elements(),
            &[g(&[0, 2]), g(&[1, 1]), g(&[2, 0])]
        );
        assert_eq!(minimal_elements(&[g(&[3, 3])]).unwrap().elements(), &[g(&[3, 3])]);
        assert!(minimal_elements(&[]).unwrap().is_empty());
        assert!(minimal_elements(&[g(&[1]), g(&[1, 1])]).is_err());
    }

    #[test]
    fn principal_upset_has_single_generator() {
        let v = g(&[1, 2]);
        let up: Vec<_> = g(&[3, 3])
            .box_grades()
            .into_iter()
            .filter(|w| v.leq_unchecked(w))
            .collect();
        assert_eq!(minimal_elements(&up).unwrap().elements(), &[v]);
    }

    #[test]
    fn antichain_normalization_flag() {
        let t = ac(&[&[2, 2], &[0, 2], &[1, 1], &[0, 2]]);
        assert!(t.was_normalized());
        assert_eq!(t.elements(), &[g(&[0, 2]), g(&[1, 1])]);
        let clean = ac(&[&[1, 1], &[0, 2]]);
        assert!(!clean.was_normalized());
        assert_eq!(t, clean);
    }

    #[test]
    fn sat_contains_examples() {
        assert!(sat_contains(&ac(&[&[0, 2], &[1, 1]]), &g(&[2, 1])).unwrap());
        assert!(!sat_contains(&ac(&[&[1, 1]]), &g(&[0, 2])).unwrap());
        assert!(!sat_contains(&Antichain::empty(), &g(&[7, 7])).unwrap());
        assert!(sat_contains(&ac(&[&[1, 1]]), &g(&[1])).is_err());
    }

    #[test]
    fn lex_min_below_examples() {
        let t = ac(&[&[0, 2], &[1, 1]]);
        assert_eq!(lex_min_below(&t, &g(&[1, 2])).unwrap(), g(&[0, 2]));
        assert_eq!(lex_min_below(&t, &g(&[2, 1])).unwrap(), g(&[1, 1]));
        let v = g(&[4, 0, 1]);
        assert_eq!(lex_min_below(&Antichain::singleton(v.clone()), &v).unwrap(), v);
        assert!(matches!(
            lex_min_below(&t, &g(&[1, 0])),
            Err(Error::NoGeneratorBelow { .. })
        ));
    }

    #[test]
    fn box_grades_enumerates_lexicographically() {
        let grades = g(&[1, 2]).box_grades();
        assert_eq!(grades.len(), 6);
        assert_eq!(grades[0], g(&[0, 0]));
        assert_eq!(grades[5], g(&[1, 2]));
        assert!(grades.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&g(&[1, 2])).unwrap(), "[1,2]");
        let t: Antichain = serde_json::from_str("[[1,1],[0,2]]").unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[0,2],[1,1]]");
    }

    fn grade(r: usize) -> impl Strategy<Value = GradeVector> {
        prop::collection::vec(0u64..5, r).prop_map(GradeVector::new)
    }

    proptest! {
        #[test]
        fn join_is_a_semilattice(a in grade(3), b in grade(3), c in grade(3)) {
            prop_assert_eq!(a.join_unchecked(&b), b.join_unchecked(&a));
            prop_assert_eq!(a.join_unchecked(&a), a.clone());
            prop_assert_eq!(
                a.join_unchecked(&b).join_unchecked(&c),
                a.join_unchecked(&b.join_unchecked(&c))
            );
            prop_assert!(a.leq_unchecked(&a.join_unchecked(&b)));
        }

        #[test]
        fn saturation_is_monotone(
            gens in prop::collection::vec(grade(2), 0..4),
            v in grade(2),
            bump in grade(2),
        ) {
            let t = Antichain::new(gens).unwrap();
            let w = v.join_unchecked(&bump);
            if t.sat_contains_unchecked(&v) {
                prop_assert!(t.sat_contains_unchecked(&w));
            }
        }

        #[test]
        fn gen_of_sat_is_identity(gens in prop::collection::vec(grade(3), 1..5)) {
            let t = Antichain::new(gens).unwrap();
            let bound = t.join_all().unwrap();
            let sat: Vec<_> = bound
                .box_grades()
                .into_iter()
                .filter(|v| t.sat_contains_unchecked(v))
                .collect();
            prop_assert_eq!(minimal_elements(&sat).unwrap(), t);
        }

        #[test]
        fn sat_of_gen_is_identity_on_upsets(seeds in prop::collection::vec(grade(2), 0..4)) {
            // an up-set of the box (4,4) given by an arbitrary membership rule
            let bound = GradeVector::new(vec![4, 4]);
            let member = |v: &GradeVector| seeds.iter().any(|s| s.leq_unchecked(v));
            let inside: Vec<_> = bound.box_grades().into_iter().filter(|v| member(v)).collect();
            let t = minimal_elements(&inside).unwrap();
            for v in bound.box_grades() {
                prop_assert_eq!(t.sat_contains_unchecked(&v), member(&v));
            }
        }

        #[test]
        fn lex_min_below_is_a_lower_member(
            gens in prop::collection::vec(grade(2), 1..5),
            v in grade(2),
        ) {
            let t = Antichain::new(gens).unwrap();
            if let Ok(w) = t.lex_min_below(&v) {
                prop_assert!(t.elements().contains(w));
                prop_assert!(w.leq_unchecked(&v));
            } else {
                prop_assert!(!t.sat_contains_unchecked(&v));
            }
        }
    }
}
