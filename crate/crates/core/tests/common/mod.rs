//! Random instance generators shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use multipres::grades::minimal_elements;
use multipres::{Antichain, GradeVector, MultifilteredComplex, SetMultifiltration, Simplex, SimplicialComplex};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_grade<R: Rng>(rng: &mut R, r: usize, max: u64) -> GradeVector {
    GradeVector::new((0..r).map(|_| rng.gen_range(0..=max)).collect::<Vec<_>>())
}

/// An antichain of at most `max_len` elements (at least one).
pub fn random_antichain<R: Rng>(rng: &mut R, r: usize, max: u64, max_len: usize) -> Antichain {
    let k = rng.gen_range(1..=max_len);
    let grades: Vec<_> = (0..k).map(|_| random_grade(rng, r, max)).collect();
    minimal_elements(&grades).unwrap()
}

/// A valid multifiltered complex with `r` parameters, at most `max_vertices`
/// vertices, simplices of dimension at most 3 and at most 3 births each.
///
/// Births are generated bottom-up: every birth of a simplex is the join of
/// a random grade with one birth of each facet, so the face condition holds.
pub fn random_complex<R: Rng>(rng: &mut R, r: usize, max_vertices: usize, max_coord: u64) -> MultifilteredComplex {
    let nv = rng.gen_range(1..=max_vertices);
    let names: Vec<u64> = (0..nv as u64).collect();
    let tops = rng.gen_range(1..=4);
    let mut generators = Vec::new();
    for _ in 0..tops {
        let size = rng.gen_range(1..=nv.min(4));
        let mut vs: Vec<usize> = (0..nv).collect();
        vs.shuffle(rng);
        vs.truncate(size);
        generators.push(Simplex::new(vs).unwrap());
    }
    let complex = SimplicialComplex::closure(names, generators).unwrap();
    let top = complex.max_dim().unwrap_or(0);
    let mut births: BTreeMap<Simplex, Antichain> = BTreeMap::new();
    for n in 0..=top {
        for s in complex.ordered_simplices(n) {
            let k = rng.gen_range(1..=3);
            let mut grades = Vec::with_capacity(k);
            for _ in 0..k {
                let mut v = random_grade(rng, r, max_coord);
                for f in s.faces() {
                    let face_births = births[&f].elements();
                    let w = face_births.choose(rng).unwrap();
                    v = v.join(w).unwrap();
                }
                grades.push(v);
            }
            births.insert(s, minimal_elements(&grades).unwrap());
        }
    }
    let m = MultifilteredComplex::new(r, complex, births).unwrap();
    assert!(m.validate().is_ok());
    m
}

pub fn random_set_multifiltration<R: Rng>(rng: &mut R, r: usize, max_coord: u64) -> SetMultifiltration {
    let count = rng.gen_range(0..=5);
    let elements = (0..count)
        .map(|i| (format!("x{i}"), random_antichain(rng, r, max_coord, 4)))
        .collect();
    SetMultifiltration::new(r, elements).unwrap()
}

/// Whether some bijection pairs equal antichains, by augmenting paths.
pub fn perfect_matching_exists(a: &[Antichain], b: &[Antichain]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| a[i] == b[j]).collect()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(i: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|k| augment(k, adj, seen, owner)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    (0..n).all(|i| augment(i, &adj, &mut vec![false; n], &mut owner))
}

/// Nonzero entry implies column grade dominates row grade.
pub fn is_homogeneous(m: &multipres::GradedMatrix) -> bool {
    let rows = m.rows().generators();
    let cols = m.cols().generators();
    m.triples()
        .iter()
        .all(|&(i, j, _)| rows[i].grade.leq(&cols[j].grade).unwrap())
}

pub fn labels(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}
