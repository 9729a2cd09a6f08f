//! Small multifiltrations used throughout the tests and documentation.

use std::collections::{BTreeMap, BTreeSet};

use crate::grades::{Antichain, GradeVector};
use crate::simplicial::{MultifilteredComplex, Simplex, SimplicialComplex};

fn antichain(grades: &[[u64; 2]]) -> Antichain {
    Antichain::new(grades.iter().map(|g| GradeVector::from(*g))).expect("fixture grades share r")
}

fn simplex(v: &[usize]) -> Simplex {
    Simplex::new(v.to_vec()).expect("fixture simplices are well formed")
}

/// A bifiltration on four vertices whose colimit is the complex with edges
/// `0<1, 0<2, 1<2, 1<3, 2<3` and the triangle `1<2<3`, constant beyond
/// `(2,2)`. Its first homology is one-dimensional exactly at the grades
/// `(2,0), (1,1), (2,1), (0,2), (1,2), (2,2)` of the box.
pub fn example4() -> MultifilteredComplex {
    let table: [(&[usize], &[[u64; 2]]); 10] = [
        (&[0], &[[0, 2], [2, 0]]),
        (&[1], &[[0, 2], [1, 1], [2, 0]]),
        (&[2], &[[0, 2], [1, 1], [2, 0]]),
        (&[3], &[[0, 2], [1, 1]]),
        (&[0, 1], &[[0, 2], [2, 0]]),
        (&[0, 2], &[[0, 2], [2, 0]]),
        (&[1, 2], &[[1, 1], [2, 0]]),
        (&[1, 3], &[[0, 2], [1, 1]]),
        (&[2, 3], &[[0, 2], [1, 1]]),
        (&[1, 2, 3], &[[1, 2], [2, 1]]),
    ];
    let births: BTreeMap<_, _> = table.iter().map(|(s, g)| (simplex(s), antichain(g))).collect();
    let complex =
        SimplicialComplex::from_simplices(vec![0, 1, 2, 3], births.keys().cloned()).expect("fixture complex is closed");
    MultifilteredComplex::new(2, complex, births).expect("fixture is complete")
}

/// A filled triangle built one simplex at a time: vertices at `(0,0)`,
/// `(1,0)`, `(0,1)`, edges at `(1,1)`, `(2,1)`, `(1,2)`, the face at `(2,2)`.
pub fn one_critical_triangle() -> MultifilteredComplex {
    let table: [(&[usize], [u64; 2]); 7] = [
        (&[0], [0, 0]),
        (&[1], [1, 0]),
        (&[2], [0, 1]),
        (&[0, 1], [1, 1]),
        (&[0, 2], [1, 2]),
        (&[1, 2], [2, 1]),
        (&[0, 1, 2], [2, 2]),
    ];
    let births: BTreeMap<_, _> = table
        .iter()
        .map(|(s, g)| (simplex(s), Antichain::singleton(GradeVector::from(*g))))
        .collect();
    let complex =
        SimplicialComplex::from_simplices(vec![0, 1, 2], births.keys().cloned()).expect("fixture complex is closed");
    MultifilteredComplex::new(2, complex, births).expect("fixture is complete")
}

/// A triangle born at `(0,0)` whose edges and vertices appear only at `(1,1)`.
/// Fails validation.
pub fn triangle_before_edges() -> MultifilteredComplex {
    let complex = SimplicialComplex::closure(vec![0, 1, 2], [simplex(&[0, 1, 2])]).expect("fixture complex is closed");
    let mut births: BTreeMap<_, _> = complex.simplices().map(|s| (s.clone(), antichain(&[[1, 1]]))).collect();
    births.insert(simplex(&[0, 1, 2]), antichain(&[[0, 0]]));
    MultifilteredComplex::new(2, complex, births).expect("fixture is complete")
}

/// Tabulation on `N` of a set functor whose structure maps are not
/// injective: `{a,b,c,d}` at 0, `{e,f}` at 1, `{g}` from 2 on.
pub fn non_injective_tabulation() -> (GradeVector, BTreeMap<GradeVector, BTreeSet<String>>) {
    let labels = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    let grid = BTreeMap::from([
        (GradeVector::from([0]), labels(&["a", "b", "c", "d"])),
        (GradeVector::from([1]), labels(&["e", "f"])),
        (GradeVector::from([2]), labels(&["g"])),
    ]);
    (GradeVector::from([2]), grid)
}
