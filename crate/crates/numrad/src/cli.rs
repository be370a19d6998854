//! Command-line front end: polynomial and matrix bound reports, numerical
//! range boundary data, and the spectral-radius bound for operator sums.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{matrix_bound_report, upper_thm27_spectral, BoundKind, BoundValue};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, EngineConfig};
use crate::numrange::range_boundary;
use crate::polyzero::{zero_bound_report, Polynomial};

/// Numerical-radius bounds for matrices and polynomial zero localization.
#[derive(Debug, Parser)]
#[command(name = "numrad", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: GlobalOptions,
}

#[derive(Debug, Args)]
pub struct GlobalOptions {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Number of grid points for the angle sweep.
    #[arg(long, global = true)]
    pub theta_grid: Option<usize>,

    /// Relative off-diagonal tolerance of the eigensolver.
    #[arg(long, global = true)]
    pub eig_tol: Option<f64>,

    /// Iteration cap for eigensolver sweeps and root iteration.
    #[arg(long, global = true)]
    pub max_iter: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zero bounds for a monic polynomial (coefficients in descending degree).
    PolyBounds {
        /// Comma/space-separated complex coefficients, e.g. "1 1 0 0 0 -2".
        coeffs: String,
    },
    /// All numerical-radius bounds for a matrix read from a JSON file.
    MatrixBounds {
        /// Path to {"rows": n, "cols": n, "entries": [[re, im], ...]}.
        file: PathBuf,
    },
    /// Boundary samples of the numerical range, as CSV plot data.
    RangeData {
        /// Path to the matrix JSON file.
        file: PathBuf,

        /// Number of boundary samples (defaults to the theta grid size).
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Spectral-radius bound for sum A_i B_i over matrix-pair files A1 B1 A2 B2 ...
    SpectralBound {
        /// Even-length list of matrix JSON files, alternating A_i and B_i.
        files: Vec<PathBuf>,
    },
}

impl GlobalOptions {
    fn engine_config(&self) -> Result<EngineConfig> {
        let mut cfg = EngineConfig::default();
        if let Some(g) = self.theta_grid {
            cfg.theta_grid = g;
        }
        if let Some(t) = self.eig_tol {
            cfg.eig_tol = t;
        }
        if let Some(m) = self.max_iter {
            cfg.max_iter = m;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parse one complex literal: "a", "bi", "i", "-i", "a+bi", "a-bi".
pub fn parse_complex(token: &str, position: usize) -> Result<Complex64> {
    let err = || Error::ParseComplex {
        token: token.to_string(),
        position,
    };
    let s = token.trim();
    if s.is_empty() {
        return Err(err());
    }
    let parse_imag = |body: &str| -> Option<f64> {
        match body {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => body.parse::<f64>().ok(),
        }
    };
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // split off a trailing imaginary part at the last interior sign
        // that is not part of an exponent
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(k, c)| {
                (c == '+' || c == '-')
                    && !matches!(body.as_bytes()[k - 1], b'e' | b'E')
            })
            .map(|(k, _)| k)
            .last();
        return match split {
            Some(k) => {
                let re = body[..k].parse::<f64>().map_err(|_| err())?;
                let im = parse_imag(&body[k..]).ok_or_else(err)?;
                Ok(Complex64::new(re, im))
            }
            None => Ok(Complex64::new(0.0, parse_imag(body).ok_or_else(err)?)),
        };
    }
    let re = s.parse::<f64>().map_err(|_| err())?;
    Ok(Complex64::new(re, 0.0))
}

/// Parse descending-degree coefficients separated by commas and/or spaces.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let tokens: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.len() < 3 {
        return Err(Error::TooFewCoefficients { got: tokens.len() });
    }
    let coeffs = tokens
        .iter()
        .enumerate()
        .map(|(k, t)| parse_complex(t, k))
        .collect::<Result<Vec<_>>>()?;
    Polynomial::from_descending(coeffs)
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

/// Read a matrix from {"rows": n, "cols": n, "entries": [[re, im], ...]}.
pub fn parse_matrix(path: &std::path::Path) -> Result<ComplexMatrix> {
    let text = std::fs::read_to_string(path)?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| Error::BadMatrixFile(format!("{}: {e}", path.display())))?;
    let entries: Vec<Complex64> = file
        .entries
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    ComplexMatrix::new(file.rows, file.cols, entries)
}

#[derive(Debug, Serialize)]
struct JsonBound<'a> {
    name: &'a str,
    kind: BoundKind,
    value: f64,
}

#[derive(Debug, Serialize)]
struct JsonReport<'a> {
    input: String,
    bounds: Vec<JsonBound<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    w: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    roots: Option<Vec<[f64; 2]>>,
}

fn json_bounds(bounds: &[BoundValue]) -> Vec<JsonBound<'_>> {
    bounds
        .iter()
        .map(|b| JsonBound {
            name: &b.name,
            kind: b.kind,
            value: b.value,
        })
        .collect()
}

fn write_table(
    out: &mut dyn Write,
    title: &str,
    bounds: &[BoundValue],
    extra: &[(String, String)],
) -> std::io::Result<()> {
    writeln!(out, "{title}")?;
    let width = bounds
        .iter()
        .map(|b| b.name.len())
        .chain(extra.iter().map(|(k, _)| k.len()))
        .max()
        .unwrap_or(0)
        .max(5);
    writeln!(out, "{:width$}  {:>5}  {}", "bound", "kind", "value")?;
    for b in bounds {
        let kind = match b.kind {
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
        };
        writeln!(out, "{:width$}  {kind:>5}  {}", b.name, sig6(b.value))?;
    }
    for (k, v) in extra {
        writeln!(out, "{k:width$}  {:>5}  {v}", "")?;
    }
    Ok(())
}

/// Format with 6 significant digits, the table-mode precision.
fn sig6(v: f64) -> String {
    format!("{v:.6e}")
        .parse::<f64>()
        .map(|x| {
            if x == 0.0 || (1e-3..1e9).contains(&x.abs()) {
                let mag = if x == 0.0 { 0 } else { x.abs().log10().floor() as i32 };
                format!("{x:.*}", (5 - mag).max(0) as usize)
            } else {
                format!("{x:.5e}")
            }
        })
        .unwrap_or_else(|_| v.to_string())
}

fn csv_bounds(out: &mut dyn Write, bounds: &[BoundValue]) -> std::io::Result<()> {
    writeln!(out, "name,kind,value")?;
    for b in bounds {
        let kind = match b.kind {
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
        };
        writeln!(out, "{},{kind},{}", b.name, b.value)?;
    }
    Ok(())
}

fn run_inner(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let cfg = cli.options.engine_config()?;
    match &cli.command {
        Command::PolyBounds { coeffs } => {
            let p = parse_polynomial(coeffs)?;
            let report = zero_bound_report(&p, &cfg)?;
            let w = report
                .bounds
                .iter()
                .find(|b| b.name == "numerical_radius_exactish")
                .map(|b| b.value);
            match cli.options.format {
                Format::Json => {
                    let json = JsonReport {
                        input: report.polynomial.to_string(),
                        bounds: json_bounds(&report.bounds),
                        w,
                        roots: Some(
                            report.roots.iter().map(|z| [z.re, z.im]).collect(),
                        ),
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?;
                }
                Format::Table => {
                    let extra = vec![(
                        "max_root_modulus".to_string(),
                        sig6(report.max_root_modulus),
                    )];
                    write_table(
                        out,
                        &format!("zero bounds for {}", report.polynomial),
                        &report.bounds,
                        &extra,
                    )?;
                }
                Format::Csv => csv_bounds(out, &report.bounds)?,
            }
        }
        Command::MatrixBounds { file } => {
            let t = parse_matrix(file)?;
            let report = matrix_bound_report(&t, &cfg)?;
            match cli.options.format {
                Format::Json => {
                    let json = JsonReport {
                        input: file.display().to_string(),
                        bounds: json_bounds(&report.bounds),
                        w: Some(report.w),
                        roots: None,
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?;
                }
                Format::Table => {
                    let extra = vec![("w".to_string(), sig6(report.w))];
                    write_table(
                        out,
                        &format!("numerical-radius bounds for {}", file.display()),
                        &report.bounds,
                        &extra,
                    )?;
                }
                Format::Csv => csv_bounds(out, &report.bounds)?,
            }
        }
        Command::RangeData { file, samples } => {
            let t = parse_matrix(file)?;
            let n_samples = samples.unwrap_or(cfg.theta_grid);
            let rows = range_boundary(&t, n_samples, &cfg)?;
            writeln!(out, "theta,lambda_max,re,im")?;
            for s in rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    s.theta, s.lambda_max, s.boundary_point.re, s.boundary_point.im
                )?;
            }
        }
        Command::SpectralBound { files } => {
            if files.is_empty() || files.len() % 2 != 0 {
                return Err(Error::BadRequest(format!(
                    "spectral-bound needs an even, nonzero number of matrix files, got {}",
                    files.len()
                )));
            }
            let pairs = files
                .chunks(2)
                .map(|pair| Ok((parse_matrix(&pair[0])?, parse_matrix(&pair[1])?)))
                .collect::<Result<Vec<_>>>()?;
            let bound = upper_thm27_spectral(&pairs, &cfg)?;
            match cli.options.format {
                Format::Json => {
                    let json = JsonReport {
                        input: files
                            .iter()
                            .map(|f| f.display().to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                        bounds: json_bounds(std::slice::from_ref(&bound)),
                        w: None,
                        roots: None,
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?;
                }
                Format::Table => write_table(
                    out,
                    "spectral-radius bound for sum of products",
                    std::slice::from_ref(&bound),
                    &[],
                )?,
                Format::Csv => csv_bounds(out, std::slice::from_ref(&bound))?,
            }
        }
    }
    Ok(())
}

/// Execute a parsed command, writing results to `out` and errors to `err`.
/// Returns the process exit code: 0 success, 2 parse error, 3 numerical failure.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_parse_error() {
                2
            } else {
                3
            }
        }
    }
}
