//! Command-line frontend for `colorwitt`.
//!
//! `run` is the whole program; the binary only wires it to the process
//! streams and exit code. Exit status 0 means success, 1 a failed
//! verification suite, 2 a usage or validation error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use colorwitt::group::{dim_by_group_degree, g_character_free, group_fiber};
use colorwitt::operators::{free_restricted_character, free_super_character};
use colorwitt::schreier::schreier_generators_series;
use colorwitt::witt::{dim_multidegree, dim_multidegree_p, dimension_table};
use colorwitt::{GradingSpec, GroupElement, Multidegree, Prime, Rational, Series};
use num_bigint::BigUint;

pub mod poly;
pub mod spec_file;
pub mod suites;
pub mod table;

pub use spec_file::SpecFile;
pub use suites::{run_suite, Suite, SuiteReport};
pub use table::{DimensionTable, Metadata, Method, Row};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] colorwitt::Error),
}

#[derive(Parser, Debug)]
#[command(name = "colorwitt", version, about = "Dimensions and characters of free color Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form dimensions of homogeneous components.
    Dims {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
        /// A single multidegree, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "group_element")]
        multidegree: Option<Vec<u32>>,
        /// Restricted dimensions in characteristic P.
        #[arg(long)]
        p: Option<u64>,
        /// Sum over every multidegree of the given group degree.
        #[arg(long, value_delimiter = ',')]
        group_element: Option<Vec<u32>>,
        /// With --group-element, only this total degree.
        #[arg(long, requires = "group_element")]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Coefficients of the free character.
    Series {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long, conflicts_with = "group")]
        p: Option<u64>,
        /// Group-algebra valued character.
        #[arg(long)]
        group: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Generating function of free generators of a subalgebra.
    Schreier {
        #[arg(long)]
        hx: String,
        #[arg(long)]
        hquot: String,
        #[arg(long)]
        max_degree: u32,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_degree: Option<u32>,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            match rendered.lines().next() {
                Some(line) if line.starts_with("error") => {
                    let _ = writeln!(err, "{line}");
                }
                _ => {
                    let _ = writeln!(err, "error: missing subcommand, see --help");
                }
            }
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = match command {
        Command::Dims { spec, max_degree, multidegree, p, group_element, degree, format } => {
            let file = SpecFile::load(&spec)?;
            let table = dims(&file, max_degree, multidegree, p, group_element, degree)?;
            render(&table, format)
        }
        Command::Series { spec, max_degree, p, group, format } => {
            let file = SpecFile::load(&spec)?;
            render(&series(&file, max_degree, p, group)?, format)
        }
        Command::Schreier { hx, hquot, max_degree } => {
            let coefficients = schreier(&hx, &hquot, max_degree)?;
            let numbers: Vec<serde_json::Value> = coefficients
                .iter()
                .map(|c| serde_json::Value::Number(c.to_string().parse().expect("integer")))
                .collect();
            format!("{}\n", serde_json::Value::Array(numbers))
        }
        Command::Verify { suite, seed, max_degree } => {
            let report = run_suite(suite, seed, max_degree)?;
            let status = if report.passed() { 0 } else { 1 };
            let _ = writeln!(out, "{}", describe_suite(&report, seed));
            return Ok(status);
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| CliError::Usage(format!("cannot write output: {e}")))?;
    Ok(0)
}

fn render(table: &DimensionTable, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", table.to_json()),
        Format::Csv => table.to_csv(),
    }
}

pub fn describe_suite(report: &SuiteReport, seed: u64) -> String {
    match &report.counterexample {
        None => format!(
            "suite {} (max degree {}, seed {seed}): {} checks passed",
            report.suite, report.max_degree, report.checks
        ),
        Some(c) => format!(
            "suite {} (max degree {}, seed {seed}): FAILED at check {}: {c}",
            report.suite, report.max_degree, report.checks
        ),
    }
}

fn prime(p: Option<u64>) -> Result<Option<Prime>, CliError> {
    Ok(p.map(Prime::new).transpose()?)
}

fn dimension(c: &Rational, at: &Multidegree) -> Result<BigUint, CliError> {
    if c.is_integer() {
        if let Some(d) = c.to_integer().to_biguint() {
            return Ok(d);
        }
    }
    Err(colorwitt::Error::NotADimension { at: at.clone(), value: c.clone() }.into())
}

fn element_of(spec: &GradingSpec, alpha: &Multidegree) -> Option<Vec<u32>> {
    spec.group_degree(alpha).map(|g| g.residues().to_vec())
}

fn closed_form_row(spec: &GradingSpec, alpha: Multidegree, p: Option<Prime>) -> Result<Row, CliError> {
    let dim = match p {
        Some(p) => dim_multidegree_p(spec, &alpha, p)?,
        None => dim_multidegree(spec, &alpha)?,
    };
    Ok(Row {
        group_element: element_of(spec, &alpha),
        total_degree: alpha.total(),
        multidegree: Some(alpha.exponents().to_vec()),
        dim,
        method: Method::ClosedForm,
    })
}

/// The table printed by `dims`.
pub fn dims(
    file: &SpecFile,
    max_degree: Option<u32>,
    multidegree: Option<Vec<u32>>,
    p: Option<u64>,
    group_element: Option<Vec<u32>>,
    degree: Option<u32>,
) -> Result<DimensionTable, CliError> {
    let spec = file.grading_spec(max_degree)?;
    let p = prime(p)?;
    if p.is_some() && !spec.all_even() {
        return Err(colorwitt::Error::OddClassPresent.into());
    }
    let n = spec.max_degree();
    let mut rows = Vec::new();
    if let Some(exps) = multidegree {
        let alpha = Multidegree::new(exps);
        spec.check_multidegree(&alpha)?;
        if alpha.total() > n {
            return Err(colorwitt::Error::DegreeOutOfRange { degree: alpha.total(), max: n }.into());
        }
        rows.push(closed_form_row(&spec, alpha, p)?);
    } else if let Some(residues) = group_element {
        if spec.group().is_none() {
            return Err(CliError::Usage("--group-element needs a spec with a group block".into()));
        }
        let g = GroupElement::new(residues);
        let degrees = match degree {
            Some(d) if d == 0 || d > n => return Err(colorwitt::Error::DegreeOutOfRange { degree: d, max: n }.into()),
            Some(d) => d..=d,
            None => 1..=n,
        };
        for total in degrees {
            rows.push(Row {
                multidegree: None,
                total_degree: total,
                group_element: Some(g.residues().to_vec()),
                dim: dim_by_group_degree(&spec, total, &g, p)?,
                method: Method::ClosedForm,
            });
            for alpha in group_fiber(&spec, total, &g)? {
                rows.push(closed_form_row(&spec, alpha, p)?);
            }
        }
    } else {
        for (alpha, dim) in dimension_table(&spec, p)? {
            rows.push(Row {
                group_element: element_of(&spec, &alpha),
                total_degree: alpha.total(),
                multidegree: Some(alpha.exponents().to_vec()),
                dim,
                method: Method::ClosedForm,
            });
        }
    }
    Ok(DimensionTable::new(Metadata::new(file.digest(), n, p.map(Prime::get)), rows))
}

/// The table printed by `series`: nonzero coefficients of the character.
pub fn series(file: &SpecFile, max_degree: Option<u32>, p: Option<u64>, group: bool) -> Result<DimensionTable, CliError> {
    let spec = file.grading_spec(max_degree)?;
    let p = prime(p)?;
    let mut rows = Vec::new();
    if group {
        if p.is_some() {
            return Err(CliError::Usage("--group and --p cannot be combined".into()));
        }
        if spec.group().is_none() {
            return Err(CliError::Usage("--group needs a spec with a group block".into()));
        }
        for (alpha, g, c) in g_character_free(&spec)?.terms() {
            rows.push(Row {
                multidegree: Some(alpha.exponents().to_vec()),
                total_degree: alpha.total(),
                group_element: Some(g.residues().to_vec()),
                dim: dimension(c, alpha)?,
                method: Method::Series,
            });
        }
    } else {
        let ch = match p {
            Some(p) => free_restricted_character(&spec, p)?,
            None => free_super_character(&spec)?,
        };
        for (alpha, c) in ch.terms() {
            rows.push(Row {
                multidegree: Some(alpha.exponents().to_vec()),
                total_degree: alpha.total(),
                group_element: element_of(&spec, alpha),
                dim: dimension(c, alpha)?,
                method: Method::Series,
            });
        }
    }
    Ok(DimensionTable::new(Metadata::new(file.digest(), spec.max_degree(), p.map(Prime::get)), rows))
}

fn univariate_input(text: &str, max_degree: u32) -> Result<Series, CliError> {
    let coefficients = poly::parse_poly(text)?;
    if let Some(d) = coefficients.iter().rposition(|&c| c != 0) {
        if d as u64 > u64::from(max_degree) {
            return Err(colorwitt::Error::DegreeOutOfRange { degree: d as u32, max: max_degree }.into());
        }
    }
    Ok(Series::univariate(max_degree, &coefficients)?)
}

/// Coefficients of `H(Z)` in degrees `0..=max_degree`.
pub fn schreier(hx: &str, hquot: &str, max_degree: u32) -> Result<Vec<BigUint>, CliError> {
    let hz = schreier_generators_series(&univariate_input(hx, max_degree)?, &univariate_input(hquot, max_degree)?)?;
    hz.univariate_coefficients()?
        .iter()
        .enumerate()
        .map(|(n, c)| dimension(c, &Multidegree::new(vec![n as u32])))
        .collect()
}
