//! Free presentations of multiparameter persistent homology.
//!
//! Given a compact multifiltration `F: N^r → Spaces` of simplicial complexes,
//! described by the birth antichain of every simplex, this crate builds the
//! complex of free `N^r`-graded `k[x1, ..., xr]`-modules
//!
//! ```text
//!   KF_n ⊕ GF_{n+1}  --f-->  GF_n  --g-->  D_{n-1}
//! ```
//!
//! whose middle homology is `H_n(F)`. It evaluates that complex grade by grade
//! to Hilbert functions over `Q` or `Z/p`, cross-checks the result against
//! simplicial homology of each `F(v)`, and exports the complex to computer
//! algebra systems.
//!
//! ```
//! use multipres::{build_complex, fixtures, hilbert, FieldSpec, GradeVector};
//!
//! let m = fixtures::example4();
//! let c = build_complex(&m, 1).unwrap();
//! let t = hilbert(&c, &GradeVector::from([2, 2]), FieldSpec::Prime(2)).unwrap();
//! assert_eq!(t.grid().unwrap(), [[1, 1, 1], [0, 1, 1], [0, 0, 1]]);
//! ```
//!
//! Linear algebra is generic over the coefficient field (see [`field::Field`]);
//! the aliases below name the instances used in practice.

pub mod cli;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod grades;
pub mod homology;
pub mod io;
pub mod presentation;
pub mod setmultifiltration;
pub mod simplicial;

pub use error::{Error, Result};
pub use field::{Exact, Field, FieldSpec, Fp, PrimeField};
pub use grades::{Antichain, GradeVector};
pub use homology::{hilbert, homology_dim_at, oracle_check, simplicial_homology_dim, HilbertTable};
pub use io::{export_cas, import_filtration, ExportDialect, ImportOptions};
pub use presentation::{build_complex, FreeGradedModule, GradedMatrix, PresentationComplex};
pub use setmultifiltration::{modules_isomorphic, SetMultifiltration, SetPresentation};
pub use simplicial::{MultifilteredComplex, Simplex, SimplicialComplex};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// The field of rational numbers with exact arithmetic.
pub type Rationals = Exact<Rational>;
/// Elements of `Z/2`.
pub type Gf2 = Fp<2>;
/// Elements of `Z/3`.
pub type Gf3 = Fp<3>;
