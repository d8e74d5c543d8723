//! Command-line front end.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::dimension::{
    fit_corner, phi_reflexive, psi, reflexive_gap, strength_report, verify_gap, DimensionError, DimensionOptions, Grid,
    IdealPresentation,
};
use crate::dsl::{parse_poly, parse_problem, DslError, Mode, ProblemFile};
use crate::lattice::{omega, stability_threshold, LatticeError, MultiIndex, PointSet};
use crate::oracle::{counts_csv, enumerate_counts, trdeg_grid, OracleError};
use crate::reduction::{reduce, AutoreducedSet, ReductionError};

/// Samples drawn by `gap --check`.
pub const GAP_SAMPLES: usize = 50;

#[derive(Debug, Parser)]
#[command(
    name = "dsdim",
    version,
    about = "Dimension polynomials of linear difference-differential ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Staircase polynomial of a point set (`points:` statement).
    Omega(Common),
    /// Dimension polynomial of the reflexive closure.
    Phi(Common),
    /// Dimension polynomial of the ideal, with breakdown.
    Psi(Common),
    /// Reflexive gap `k`.
    Gap(Common),
    /// Strength report.
    Strength(Common),
    /// Reduce targets modulo the charset.
    Reduce {
        #[command(flatten)]
        common: Common,
        /// Extra polynomial to reduce (repeatable).
        #[arg(long = "poly")]
        polys: Vec<String>,
    },
    /// Count table and elimination-oracle values over a grid.
    Oracle(Common),
    /// Run the mode named in the file.
    Run(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Problem file (statement syntax or JSON); `-` reads standard input.
    pub file: PathBuf,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Compare results with the elimination oracle.
    #[arg(long)]
    pub check: bool,
    /// Grid `r0:r1,s0:s1` for fitting and checks.
    #[arg(long, value_parser = parse_grid)]
    pub grid: Option<Grid>,
    /// Fail instead of moving the fit grid outward.
    #[arg(long)]
    pub no_fit_widen: bool,
}

pub fn parse_grid(text: &str) -> Result<Grid, String> {
    let bad = || format!("expected r0:r1,s0:s1, got '{text}'");
    let (r, s) = text.split_once(',').ok_or_else(bad)?;
    let range = |p: &str| -> Result<(u32, u32), String> {
        let (a, b) = p.split_once(':').ok_or_else(bad)?;
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        Ok((a, b))
    };
    let (r0, r1) = range(r)?;
    let (s0, s1) = range(s)?;
    Ok(Grid::new(r0, r1, s0, s1))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Dimension(#[from] DimensionError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Usage(String),
    #[error("gap verification failed: {0}")]
    GapMismatch(String),
}

impl CliError {
    /// 2 parse, 3 certification, 4 fit, 5 oracle mismatch, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        use DimensionError as D;
        match self {
            CliError::Dsl(_) | CliError::Usage(_) => 2,
            CliError::Reduction(_) => 3,
            CliError::Dimension(d) => match d {
                D::Certification(_) | D::ShiftCountMismatch { .. } | D::ShiftNotFound { .. } => 3,
                D::FitUnstable { .. } | D::ClosedFormMismatch { .. } => 4,
                D::OracleMismatch { .. } => 5,
                _ => 1,
            },
            CliError::GapMismatch(_) => 5,
            _ => 1,
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))
}

fn presentation(pf: &ProblemFile) -> Result<IdealPresentation, CliError> {
    if !pf.charset.is_empty() || pf.generators.is_empty() {
        Ok(IdealPresentation::new(pf.m, pf.n, pf.charset_polys(), pf.shifts())?)
    } else {
        Ok(IdealPresentation::from_generators(pf.m, pf.n, &pf.generators)?)
    }
}

fn options(pf: &ProblemFile, common: &Common) -> DimensionOptions {
    DimensionOptions {
        oracle_check: common.check || pf.option_bool("oracle").unwrap_or(false),
        grid: common.grid,
        widen: !common.no_fit_widen && pf.option_bool("widen").unwrap_or(true),
        ..Default::default()
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Runs one mode on a parsed problem and returns the rendered output.
pub fn run_mode(mode: Mode, pf: &ProblemFile, common: &Common, extra: &[String]) -> Result<String, CliError> {
    let fmt = common.format;
    match mode {
        Mode::Omega => {
            let pts = PointSet::new(pf.m, pf.points.iter().cloned().map(MultiIndex::new).collect())?;
            let w = omega(&pts)?;
            let (r0, s0) = stability_threshold(&pts);
            Ok(match fmt {
                Format::Json => pretty(&serde_json::json!({
                    "omega": w.to_json(),
                    "text": w.power_form(),
                    "binomial": w.binomial_form(),
                    "stability": [r0, s0],
                })),
                Format::Latex => format!("{}\n", w.latex()),
                _ => format!("{}\n", w.power_form()),
            })
        }
        Mode::Phi => {
            let pres = presentation(pf)?;
            let phi = phi_reflexive(&pres, &options(pf, common))?;
            Ok(match fmt {
                Format::Json => pretty(&serde_json::json!({ "phi": phi.to_json(), "text": phi.power_form() })),
                Format::Latex => format!("{}\n", phi.latex()),
                _ => format!("{}\n", phi.power_form()),
            })
        }
        Mode::Psi => {
            let pres = presentation(pf)?;
            let res = psi(&pres, &options(pf, common))?;
            Ok(match fmt {
                Format::Json => pretty(&res.to_json()),
                Format::Latex => format!("{}\n", res.psi.latex()),
                _ => format!("{}\n", res.psi.power_form()),
            })
        }
        Mode::Gap => {
            let pres = presentation(pf)?;
            let k = reflexive_gap(&pres);
            let verification = if options(pf, common).oracle_check {
                let v = verify_gap(&pres, GAP_SAMPLES, 0)?;
                if !v.holds() {
                    return Err(CliError::GapMismatch(format!("{v:?}")));
                }
                Some(v)
            } else {
                None
            };
            Ok(match fmt {
                Format::Json => pretty(&serde_json::json!({
                    "k": k,
                    "shifts": pres.shifts(),
                    "verified_samples": verification.as_ref().map(|v| v.samples),
                })),
                _ => format!("k = {k}\n"),
            })
        }
        Mode::Strength => {
            let pres = presentation(pf)?;
            let rep = strength_report(&pres, &options(pf, common))?;
            Ok(match fmt {
                Format::Json => pretty(&serde_json::json!({
                    "result": rep.result.to_json(),
                    "leading_t2_coefficient": rep.leading_t2_coefficient.to_string(),
                    "report": rep.lines,
                })),
                Format::Latex => format!("S_{{rs}} = {}\n", rep.result.psi.latex()),
                _ => rep.lines.iter().map(|l| format!("{l}\n")).collect(),
            })
        }
        Mode::Reduce => {
            let set = AutoreducedSet::new(pf.charset_polys())?;
            let mut targets = pf.targets.clone();
            for p in extra {
                targets.push(parse_poly(p, pf.m, pf.n)?);
            }
            if targets.is_empty() {
                return Err(CliError::Usage(
                    "nothing to reduce: add target: statements or --poly".into(),
                ));
            }
            let certs = targets.iter().map(|t| reduce(t, &set)).collect::<Result<Vec<_>, _>>()?;
            Ok(match fmt {
                Format::Json => pretty(&serde_json::json!({
                    "charset": set.elements().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "certificates": certs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                })),
                _ => certs.iter().map(|c| format!("{}\n", c.remainder)).collect(),
            })
        }
        Mode::Oracle => {
            let pres = presentation(pf)?;
            let grid = match common.grid {
                Some(g) => g,
                None => {
                    let (r0, s0) = fit_corner(&pres);
                    Grid::new(r0, r0 + 4, s0, s0 + 4)
                }
            };
            let rows = enumerate_counts(&pres, grid.r.0..=grid.r.1, grid.s.0..=grid.s.1);
            let gens = pres.generators_of_p();
            let trdeg = trdeg_grid(pf.m, pf.n, &gens, grid.r.0..=grid.r.1, grid.s.0..=grid.s.1)?;
            Ok(match fmt {
                Format::Json => pretty(&serde_json::json!({
                    "grid": grid,
                    "rows": rows.iter().zip(&trdeg).map(|(row, (_, t))| serde_json::json!({
                        "r": row.r, "s": row.s,
                        "u_prime": row.u_prime, "u_dprime": row.u_dprime, "lambda": row.lambda,
                        "total": row.total(), "trdeg": t,
                    })).collect::<Vec<_>>(),
                })),
                _ => counts_csv(&rows, Some(&trdeg)),
            })
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(String, Option<PathBuf>), CliError> {
    let (mode, common, extra): (Option<Mode>, &Common, &[String]) = match &cli.command {
        Command::Omega(c) => (Some(Mode::Omega), c, &[]),
        Command::Phi(c) => (Some(Mode::Phi), c, &[]),
        Command::Psi(c) => (Some(Mode::Psi), c, &[]),
        Command::Gap(c) => (Some(Mode::Gap), c, &[]),
        Command::Strength(c) => (Some(Mode::Strength), c, &[]),
        Command::Reduce { common, polys } => (Some(Mode::Reduce), common, polys),
        Command::Oracle(c) => (Some(Mode::Oracle), c, &[]),
        Command::Run(c) => (None, c, &[]),
    };
    let pf = parse_problem(&read_input(&common.file)?)?;
    let mode = match mode.or(pf.mode) {
        Some(m) => m,
        None => return Err(CliError::Usage("the file names no mode; add a `mode` statement".into())),
    };
    Ok((run_mode(mode, &pf, common, extra)?, common.out.clone()))
}

/// Parses arguments, runs, and maps failures to exit codes.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(&cli) {
        Ok((text, None)) => {
            let _ = io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Ok((text, Some(path))) => match fs::write(&path, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: writing {}: {e}", path.display());
                ExitCode::from(1)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_flag() {
        assert_eq!(parse_grid("2:6,1:4").unwrap(), Grid::new(2, 6, 1, 4));
        assert!(parse_grid("6:2,1:4").is_err());
        assert!(parse_grid("2:6").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
