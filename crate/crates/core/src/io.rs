//! Input files and exports.
//!
//! Filtration files:
//!
//! ```json
//! {"r": 2, "vertices": [0, 1, 2, 3],
//!  "simplices": [{"v": [1, 2, 3], "births": [[1, 2], [2, 1]]}, ...]}
//! ```
//!
//! Tabulated set multifiltrations:
//!
//! ```json
//! {"r": 2, "box": [2, 2], "grid": [{"grade": [0, 0], "labels": ["a"]}, ...]}
//! ```
//!
//! A presentation complex exports either as a Macaulay2 script or as a JSON
//! bundle that imports back to the identical complex. In both, a matrix entry
//! `c` in row grade `w` and column grade `v` denotes `c · x^(v − w)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::grades::{check_parameter_count, Antichain, GradeVector};
use crate::presentation::{FreeGradedModule, GradedMatrix, PresentationComplex};
use crate::setmultifiltration::SetMultifiltration;
use crate::simplicial::{MultifilteredComplex, Simplex, SimplicialComplex};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FiltrationFile {
    r: usize,
    vertices: Vec<u64>,
    simplices: Vec<SimplexEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SimplexEntry {
    v: Vec<u64>,
    births: Vec<GradeVector>,
}

/// Options for [`import_filtration`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ImportOptions {
    /// Derive births of omitted faces from their cofaces.
    pub close_births: bool,
}

/// Parses a filtration file without checking the face condition.
pub fn parse_filtration(text: &str, options: ImportOptions) -> Result<MultifilteredComplex> {
    let file: FiltrationFile = serde_json::from_str(text)?;
    check_parameter_count(file.r)?;
    let positions: BTreeMap<u64, usize> = file.vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    if positions.len() != file.vertices.len() {
        let mut seen = BTreeSet::new();
        let dup = file
            .vertices
            .iter()
            .find(|v| !seen.insert(**v))
            .expect("a repeat exists");
        return Err(Error::DuplicateVertex(dup.to_string()));
    }
    let mut births = BTreeMap::new();
    for (k, entry) in file.simplices.iter().enumerate() {
        let context = |msg: String| Error::Schema(format!("simplices[{k}] {:?}: {msg}", entry.v));
        let mut vertices = Vec::with_capacity(entry.v.len());
        for id in &entry.v {
            let pos = positions
                .get(id)
                .ok_or_else(|| context(format!("unknown vertex {id}")))?;
            vertices.push(*pos);
        }
        let simplex = Simplex::new(vertices).map_err(|e| context(e.to_string()))?;
        for g in &entry.births {
            if g.dim() != file.r {
                return Err(context(format!("birth {g} does not have {} coordinates", file.r)));
            }
        }
        if entry.births.is_empty() {
            return Err(context("empty birth list".into()));
        }
        let gens = Antichain::new(entry.births.iter().cloned())?;
        if births.insert(simplex, gens).is_some() {
            return Err(Error::DuplicateSimplex(format!("{:?}", entry.v)));
        }
    }
    if options.close_births {
        let complex = SimplicialComplex::closure(file.vertices, births.keys().cloned())?;
        MultifilteredComplex::close_births(file.r, complex, &births)
    } else {
        let complex = SimplicialComplex::from_simplices(file.vertices, births.keys().cloned())?;
        MultifilteredComplex::new(file.r, complex, births)
    }
}

/// Serializes a multifiltered complex in the filtration file format.
pub fn filtration_to_json(m: &MultifilteredComplex) -> String {
    let names = m.complex().vertex_names();
    let file = FiltrationFile {
        r: m.parameters(),
        vertices: names.to_vec(),
        simplices: m
            .all_births()
            .iter()
            .map(|(s, gens)| SimplexEntry {
                v: s.vertices().iter().map(|&i| names[i]).collect(),
                births: gens.elements().to_vec(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

/// Reads, optionally closes, and validates a filtration file.
pub fn import_filtration(path: impl AsRef<Path>, options: ImportOptions) -> Result<MultifilteredComplex> {
    let text = std::fs::read_to_string(path)?;
    let m = parse_filtration(&text, options)?;
    m.validate().into_result()?;
    Ok(m)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TabulatedFile {
    r: usize,
    #[serde(rename = "box")]
    bound: GradeVector,
    grid: Vec<GridCell>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridCell {
    grade: GradeVector,
    labels: Vec<String>,
}

/// Parses a tabulated set multifiltration.
pub fn parse_tabulated(text: &str) -> Result<SetMultifiltration> {
    let file: TabulatedFile = serde_json::from_str(text)?;
    let mut grid = BTreeMap::new();
    for cell in file.grid {
        let key = cell.grade.to_string();
        if grid
            .insert(cell.grade, cell.labels.into_iter().collect::<BTreeSet<_>>())
            .is_some()
        {
            return Err(Error::DuplicateGrade(key));
        }
    }
    SetMultifiltration::from_tabulated(file.r, &grid, &file.bound)
}

/// Output dialect of [`export_cas`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportDialect {
    Macaulay2,
    Json,
}

impl FromStr for ExportDialect {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cas" | "m2" | "macaulay2" => Ok(ExportDialect::Macaulay2),
            "json" => Ok(ExportDialect::Json),
            _ => Err(Error::UnsupportedDialect(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub r: usize,
    pub variables: Vec<String>,
    pub coefficients: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleModules {
    pub source: FreeGradedModule,
    pub middle: FreeGradedModule,
    pub target: FreeGradedModule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleMatrices {
    pub f: TripleMatrix,
    pub g: TripleMatrix,
}

/// Everything an external system needs to rebuild a presentation complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportBundle {
    pub ring: RingSpec,
    pub degree: usize,
    pub modules: BundleModules,
    pub matrices: BundleMatrices,
}

impl ExportBundle {
    pub fn new(c: &PresentationComplex, r: usize, field: FieldSpec) -> Self {
        let triples = |m: &GradedMatrix| TripleMatrix {
            rows: m.nrows(),
            cols: m.ncols(),
            entries: m.triples(),
        };
        ExportBundle {
            ring: RingSpec {
                r,
                variables: (1..=r).map(|i| format!("x{i}")).collect(),
                coefficients: field.to_string(),
            },
            degree: c.degree(),
            modules: BundleModules {
                source: c.source().clone(),
                middle: c.middle().clone(),
                target: c.target().clone(),
            },
            matrices: BundleMatrices {
                f: triples(c.f()),
                g: triples(c.g()),
            },
        }
    }

    /// Rebuilds the complex, re-checking shapes, homogeneity and `g · f = 0`.
    pub fn to_complex(&self) -> Result<PresentationComplex> {
        let m = &self.modules;
        for module in [&m.source, &m.middle, &m.target] {
            for g in module.grades() {
                g.check_dim(self.ring.r)?;
            }
        }
        let matrix = |rows: &FreeGradedModule, cols: &FreeGradedModule, t: &TripleMatrix| {
            if t.rows != rows.rank() || t.cols != cols.rank() {
                return Err(Error::Schema(format!(
                    "matrix is {}x{} but its modules have ranks {} and {}",
                    t.rows,
                    t.cols,
                    rows.rank(),
                    cols.rank()
                )));
            }
            GradedMatrix::from_triples(rows.clone(), cols.clone(), t.entries.iter().copied())
        };
        let f = matrix(&m.middle, &m.source, &self.matrices.f)?;
        let g = matrix(&m.target, &m.middle, &self.matrices.g)?;
        PresentationComplex::new(self.degree, f, g)
    }
}

/// Reads a JSON bundle back into a presentation complex.
pub fn import_bundle(text: &str) -> Result<PresentationComplex> {
    let bundle: ExportBundle = serde_json::from_str(text)?;
    bundle.to_complex()
}

/// Renders the complex in the requested dialect over `field`.
///
/// `r` is the number of parameters; it fixes the ring even when every module
/// is zero.
pub fn export_cas(c: &PresentationComplex, r: usize, dialect: ExportDialect, field: FieldSpec) -> Result<String> {
    check_parameter_count(r)?;
    field.validate()?;
    Ok(match dialect {
        ExportDialect::Json => {
            let mut s = serde_json::to_string_pretty(&ExportBundle::new(c, r, field))?;
            s.push('\n');
            s
        }
        ExportDialect::Macaulay2 => macaulay2_script(c, r, field),
    })
}

fn m2_degrees(m: &FreeGradedModule) -> String {
    if m.is_empty() {
        return "R^0".to_string();
    }
    let degs: Vec<String> = m
        .grades()
        .map(|g| {
            let parts: Vec<String> = g
                .coords()
                .iter()
                .map(|&c| if c == 0 { "0".to_string() } else { format!("-{c}") })
                .collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    format!("R^{{{}}}", degs.join(", "))
}

fn m2_entry(value: i64, row: &GradeVector, col: &GradeVector) -> String {
    if value == 0 {
        return "0".to_string();
    }
    let mut factors = Vec::new();
    if value.abs() != 1 {
        factors.push(value.abs().to_string());
    }
    for (i, (a, b)) in row.coords().iter().zip(col.coords()).enumerate() {
        match b - a {
            0 => {}
            1 => factors.push(format!("x{}", i + 1)),
            e => factors.push(format!("x{}^{}", i + 1, e)),
        }
    }
    let body = if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    };
    if value < 0 {
        format!("-{body}")
    } else {
        body
    }
}

fn m2_matrix(m: &GradedMatrix) -> String {
    if m.triples().is_empty() {
        return "0".to_string();
    }
    let rows = m.rows().generators();
    let cols = m.cols().generators();
    let lines: Vec<String> = (0..m.nrows())
        .map(|i| {
            let cells: Vec<String> = (0..m.ncols())
                .map(|j| m2_entry(m.get(i, j), &rows[i].grade, &cols[j].grade))
                .collect();
            format!("  {{{}}}", cells.join(", "))
        })
        .collect();
    format!("{{\n{}\n}}", lines.join(",\n"))
}

fn generator_comment(name: &str, m: &FreeGradedModule) -> String {
    let mut out = format!("-- {name}: {} generator(s)\n", m.rank());
    for g in m.generators() {
        let _ = writeln!(out, "--   {} {} in degree {}", g.block, g.index, g.grade);
    }
    out
}

fn macaulay2_script(c: &PresentationComplex, r: usize, field: FieldSpec) -> String {
    let n = c.degree();
    let coefficients = match field {
        FieldSpec::Rational => "QQ".to_string(),
        FieldSpec::Prime(p) => format!("ZZ/{p}"),
    };
    let variables: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
    let degrees: Vec<String> = (0..r)
        .map(|i| {
            let unit: Vec<String> = (0..r).map(|j| if i == j { "1" } else { "0" }.to_string()).collect();
            format!("{{{}}}", unit.join(","))
        })
        .collect();
    let mut s = String::new();
    let _ = writeln!(s, "-- presentation complex A --f--> B --g--> C; H_{n} = ker g / im f");
    s.push_str(&generator_comment(&format!("A = KF_{n} + GF_{}", n + 1), c.source()));
    s.push_str(&generator_comment(&format!("B = GF_{n}"), c.middle()));
    s.push_str(&generator_comment(&format!("C = D_{}", n as i64 - 1), c.target()));
    let _ = writeln!(
        s,
        "R = {coefficients}[{}, Degrees => {{{}}}];",
        variables.join(", "),
        degrees.join(", ")
    );
    let _ = writeln!(s, "A = {};", m2_degrees(c.source()));
    let _ = writeln!(s, "B = {};", m2_degrees(c.middle()));
    let _ = writeln!(s, "C = {};", m2_degrees(c.target()));
    let _ = writeln!(s, "f = map(B, A, {});", m2_matrix(c.f()));
    let _ = writeln!(s, "g = map(C, B, {});", m2_matrix(c.g()));
    s.push_str("assert(isHomogeneous f and isHomogeneous g);\n");
    s.push_str("assert(g * f == 0);\n");
    s.push_str("H = homology(g, f);\n");
    s.push_str("P = minimalPresentation H;\n");
    s.push_str("print P;\n");
    s.push_str("print betti res P;\n");
    s
}
