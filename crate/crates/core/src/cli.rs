//! Command-line front end: `validate`, `present`, `hilbert`, `check`, `export`.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 validation failure,
//! 3 parse failure, 4 oracle mismatch in `check`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::grades::GradeVector;
use crate::homology::{hilbert_with_jobs, oracle_check_with_jobs};
use crate::io::{export_cas, parse_filtration, parse_tabulated, ExportDialect, ImportOptions};
use crate::presentation::{build_complex, GradedMatrix};
use crate::simplicial::MultifilteredComplex;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "multipres",
    version,
    about = "Free presentations of multiparameter persistent homology"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the face condition of a filtration (or monotonicity of a tabulated set file).
    Validate(InputArgs),
    /// Print the matrices f and g of the presentation complex.
    Present {
        #[command(flatten)]
        input: InputArgs,
        /// Homological degree.
        #[arg(short = 'n', long, default_value_t = 0)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
    },
    /// Hilbert function of H_n on a box of grades.
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = TableFormat::Grid)]
        format: TableFormat,
    },
    /// Compare the presentation against direct simplicial homology.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Emit the presentation complex for a computer algebra system.
    Export {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'n', long, default_value_t = 0)]
        n: usize,
        /// `cas` (Macaulay2 script) or `json` (bundle).
        #[arg(long, default_value = "cas")]
        format: String,
        /// Coefficient field of the exported ring.
        #[arg(long, default_value = "gf:2")]
        field: String,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input JSON file.
    pub input: PathBuf,
    /// Derive births of faces omitted from the input.
    #[arg(long)]
    pub close_births: bool,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(short = 'n', long, default_value_t = 0)]
    pub n: usize,
    /// Upper corner of the box, e.g. `2,2`; defaults to the join of all births.
    #[arg(long = "box")]
    pub bound: Option<String>,
    /// `q` or `gf:<prime>`.
    #[arg(long, default_value = "gf:2")]
    pub field: String,
    /// Worker threads for the grade loop.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Text,
    Json,
    Sparse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Grid,
    Csv,
    Json,
}

/// Exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Json(_)
        | Error::Schema(_)
        | Error::DimensionMismatch { .. }
        | Error::InvalidParameterCount(_)
        | Error::UnknownVertex(_)
        | Error::DuplicateVertex(_)
        | Error::DuplicateSimplex(_)
        | Error::MalformedSimplex(_)
        | Error::SimplexTooLarge(_)
        | Error::DuplicateGrade(_)
        | Error::EmptyBirths(_) => EXIT_PARSE,
        Error::Validation(_)
        | Error::FaceCondition { .. }
        | Error::NotAMultifiltration { .. }
        | Error::MissingBirths(_)
        | Error::NotClosed { .. }
        | Error::MissingGrade(_)
        | Error::OutsideBox { .. } => EXIT_VALIDATION,
        _ => EXIT_USAGE,
    }
}

fn parse_box(text: &str) -> Result<GradeVector> {
    let coords = text
        .split(',')
        .map(|c| c.trim().parse::<u64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Schema(format!("`{text}` is not a comma-separated list of naturals")))?;
    Ok(GradeVector::new(coords))
}

fn load(input: &InputArgs) -> Result<MultifilteredComplex> {
    let text = std::fs::read_to_string(&input.input)?;
    let m = parse_filtration(
        &text,
        ImportOptions {
            close_births: input.close_births,
        },
    )?;
    m.validate().into_result()?;
    Ok(m)
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn resolve_box(grid: &GridArgs, m: &MultifilteredComplex) -> Result<GradeVector> {
    let bound = match &grid.bound {
        Some(b) => parse_box(b)?,
        None => m.bounding_grade(),
    };
    bound.check_dim(m.parameters())?;
    Ok(bound)
}

fn matrix_text(name: &str, m: &GradedMatrix, format: MatrixFormat) -> serde_json::Value {
    match format {
        MatrixFormat::Json => m.to_dense_json(),
        MatrixFormat::Sparse => serde_json::to_value(m.to_sparse()).expect("plain data serializes"),
        MatrixFormat::Text => serde_json::Value::String(format!("{name} ({}x{}):\n{m}", m.nrows(), m.ncols())),
    }
}

fn is_tabulated(path: &Path) -> Result<bool> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    Ok(value.get("grid").is_some())
}

/// Runs a parsed command, writing normal output to `stdout`. Returns the exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Validate(input) => {
            if is_tabulated(&input.input)? {
                let f = parse_tabulated(&std::fs::read_to_string(&input.input)?)?;
                let text = format!("ok: set multifiltration with {} element(s)\n", f.elements().len());
                emit(&input.out, &text, stdout)?;
                return Ok(EXIT_OK);
            }
            let text = std::fs::read_to_string(&input.input)?;
            let m = parse_filtration(
                &text,
                ImportOptions {
                    close_births: input.close_births,
                },
            )?;
            let report = m.validate();
            let mut out = String::new();
            if m.was_normalized() {
                out.push_str("note: comparable birth grades were normalized\n");
            }
            if report.is_ok() {
                out.push_str(&format!("ok: {} simplices\n", m.complex().len()));
            } else {
                for v in &report.violations {
                    out.push_str(&format!("violation: {v}\n"));
                }
            }
            emit(&input.out, &out, stdout)?;
            Ok(if report.is_ok() { EXIT_OK } else { EXIT_VALIDATION })
        }
        Command::Present { input, n, format } => {
            let m = load(input)?;
            let c = build_complex(&m, *n)?;
            let text = match format {
                MatrixFormat::Text => {
                    let pi = crate::presentation::matrix_pi(&m, *n)?;
                    let dbar = crate::presentation::matrix_dbar(&m, *n)?;
                    let mut s = String::new();
                    for (name, mx) in [
                        (format!("pi0 - pi1: KF_{n} -> GF_{n}"), &pi),
                        (format!("dbar: GF_{} -> GF_{n}", n + 1), &dbar),
                        (format!("alpha: GF_{n} -> D_{}", *n as i64 - 1), c.g()),
                    ] {
                        if let serde_json::Value::String(t) = matrix_text(&name, mx, *format) {
                            s.push_str(&t);
                            s.push('\n');
                        }
                    }
                    s
                }
                _ => {
                    let value = serde_json::json!({
                        "n": n,
                        "f": matrix_text("f", c.f(), *format),
                        "g": matrix_text("g", c.g(), *format),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value)?)
                }
            };
            emit(&input.out, &text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Hilbert { input, grid, format } => {
            let field: FieldSpec = grid.field.parse()?;
            let m = load(input)?;
            let bound = resolve_box(grid, &m)?;
            let c = build_complex(&m, grid.n)?;
            let table = hilbert_with_jobs(&c, &bound, field, grid.jobs)?;
            let text = match format {
                TableFormat::Grid => table.to_string(),
                TableFormat::Csv => table.to_csv(),
                TableFormat::Json => format!("{}\n", serde_json::to_string_pretty(&table)?),
            };
            emit(&input.out, &text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Check { input, grid } => {
            let field: FieldSpec = grid.field.parse()?;
            let m = load(input)?;
            let bound = resolve_box(grid, &m)?;
            let report = oracle_check_with_jobs(&m, grid.n, &bound, field, grid.jobs)?;
            emit(&input.out, &format!("{report}\n"), stdout)?;
            Ok(if report.is_ok() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Export {
            input,
            n,
            format,
            field,
        } => {
            let dialect: ExportDialect = format.parse()?;
            let field: FieldSpec = field.parse()?;
            let m = load(input)?;
            let c = build_complex(&m, *n)?;
            let text = export_cas(&c, m.parameters(), dialect, field)?;
            emit(&input.out, &text, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args`, runs, and reports errors on `stderr`. Returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
            } else {
                let _ = write!(stdout, "{e}");
            }
            return code;
        }
    };
    match run(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
