//! Command-line front-end. [`run`] takes parsed arguments and explicit
//! streams so it can be driven from tests without spawning a process.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use polycomplete::crosscut::{analyze, layer_size_bounds};
use polycomplete::fixtures::{self, FixtureSpec};
use polycomplete::geometry::{extract_incidence, validate_instance};
use polycomplete::pulling::{find_certificate, find_pulling_facet, verify_certificate};
use polycomplete::{IncidenceMinor, PullingFacet, SideChoice};
use thiserror::Error;

use crate::format::{self, ParseError};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

const DEFAULT_MAX_FACES: u64 = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "polycomplete",
    version,
    about = "Decide whether a 0/1 matrix is the complete vertex-facet incidence matrix of a polytope"
)]
pub struct Cli {
    /// Print single-line key=value output instead of prose.
    #[arg(long, global = true)]
    pub machine: bool,
    /// Report sizes, timings and the pulling facet on stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide completeness with the homology test.
    Check {
        /// Incidence file; `-` or omitted reads stdin.
        input: Option<PathBuf>,
        /// Override the dimension from the file header.
        #[arg(long)]
        dim: Option<usize>,
        /// Which of J and its transpose to build the complex from.
        #[arg(long, value_enum, default_value_t = SideArg::Auto)]
        side: SideArg,
        /// Refuse inputs whose face layers may exceed this many faces.
        #[arg(long, default_value_t = DEFAULT_MAX_FACES)]
        max_faces: u64,
    },
    /// Print a pulling-complex certificate of incompleteness, or COMPLETE.
    Certify {
        input: Option<PathBuf>,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Check a certificate against an incidence file.
    Verify {
        input: PathBuf,
        certificate: PathBuf,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Validate a geometric instance and write its incidence matrix.
    Extract {
        input: Option<PathBuf>,
        /// Write the matrix even if validation fails.
        #[arg(long)]
        force: bool,
        /// Output file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a fixture: `simplex D`, `cube D`, `cross D`, `cyclic D N`,
    /// `cube-km`, or `prism <fixture>`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        /// Emit points and halfspaces instead of the incidence matrix.
        #[arg(long)]
        geometry: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Auto,
    Primal,
    Dual,
}

impl From<SideArg> for SideChoice {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Auto => SideChoice::Auto,
            SideArg::Primal => SideChoice::Primal,
            SideArg::Dual => SideChoice::Dual,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Core(#[from] polycomplete::Error),
    #[error("{0}")]
    Usage(String),
}

/// Standard streams, injectable for tests.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Runs a command and returns the process exit code.
pub fn run(cli: &Cli, io: &mut Streams<'_>) -> u8 {
    match dispatch(cli, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Streams<'_>) -> Result<u8, CliError> {
    match &cli.command {
        Command::Check {
            input,
            dim,
            side,
            max_faces,
        } => check(cli, io, input.as_deref(), *dim, *side, *max_faces),
        Command::Certify { input, dim } => certify(cli, io, input.as_deref(), *dim),
        Command::Verify {
            input,
            certificate,
            dim,
        } => verify(io, input, certificate, *dim),
        Command::Extract {
            input,
            force,
            output,
        } => extract(cli, io, input.as_deref(), *force, output.as_deref()),
        Command::Gen { family, geometry } => generate(io, family, *geometry),
    }
}

fn read_input(io: &mut Streams<'_>, path: Option<&Path>) -> Result<(String, String), CliError> {
    match path {
        None => read_stdin(io),
        Some(p) if p.as_os_str() == "-" => read_stdin(io),
        Some(p) => {
            let name = p.display().to_string();
            fs::read_to_string(p)
                .map(|text| (name.clone(), text))
                .map_err(|source| CliError::Io { path: name, source })
        }
    }
}

fn read_stdin(io: &mut Streams<'_>) -> Result<(String, String), CliError> {
    let mut text = String::new();
    io.stdin
        .read_to_string(&mut text)
        .map_err(|source| CliError::Io {
            path: "<stdin>".into(),
            source,
        })?;
    Ok(("<stdin>".into(), text))
}

fn load_minor(
    io: &mut Streams<'_>,
    path: Option<&Path>,
    dim: Option<usize>,
) -> Result<IncidenceMinor, CliError> {
    let (name, text) = read_input(io, path)?;
    let j =
        format::parse_incidence(&text).map_err(|source| CliError::Parse { path: name, source })?;
    Ok(match dim {
        Some(d) => j.with_dim(d),
        None => j,
    })
}

fn write_out(io: &mut Streams<'_>, text: &str) -> Result<(), CliError> {
    io.stdout
        .write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
}

fn check(
    cli: &Cli,
    io: &mut Streams<'_>,
    path: Option<&Path>,
    dim: Option<usize>,
    side: SideArg,
    max_faces: u64,
) -> Result<u8, CliError> {
    let j = load_minor(io, path, dim)?;
    let d = j.dim();
    let stats = j.size_stats();
    let bounds = match side {
        SideArg::Auto if stats.s > stats.s_col => layer_size_bounds(d, &j.transpose()),
        SideArg::Dual => layer_size_bounds(d, &j.transpose()),
        _ => layer_size_bounds(d, &j),
    };
    let largest = bounds.0.max(bounds.1).max(bounds.2);
    if largest > u128::from(max_faces) {
        return Err(CliError::Usage(format!(
            "face layers may reach {largest} faces, above --max-faces {max_faces}"
        )));
    }
    if cli.verbose > 0 {
        let _ = writeln!(
            io.stderr,
            "size: d={d} m={} n={} s={} s_col={} s'={} layer bounds {}/{}/{}",
            j.num_rows(),
            j.num_cols(),
            stats.s,
            stats.s_col,
            stats.s_prime,
            bounds.0,
            bounds.1,
            bounds.2
        );
    }
    let start = Instant::now();
    let report = analyze(d, &j, side.into());
    if cli.verbose > 0 {
        let _ = writeln!(io.stderr, "time: {:.3?}", start.elapsed());
    }
    let answer = if report.complete { "yes" } else { "no" };
    let (ur, uc) = report.upper_shape;
    let (lr, lc) = report.lower_shape;
    let text = if cli.machine {
        format!(
            "{answer} d={d} side={} upper={ur}x{uc} rank={} lower={lr}x{lc} nullity={} betti={}\n",
            report.side,
            report.rank_upper,
            report.nullity_lower,
            report.reduced_betti()
        )
    } else {
        let mut text = format!("{answer}\nside: {}\n", report.side);
        if d >= 1 {
            text += &format!(
                "boundary {d}: {ur} x {uc}, rank {}\nboundary {}: {lr} x {lc}, nullity {}\nreduced betti {}: {}\n",
                report.rank_upper,
                d - 1,
                report.nullity_lower,
                d - 1,
                report.reduced_betti()
            );
        }
        text
    };
    write_out(io, &text)?;
    Ok(if report.complete { EXIT_YES } else { EXIT_NO })
}

fn certify(
    cli: &Cli,
    io: &mut Streams<'_>,
    path: Option<&Path>,
    dim: Option<usize>,
) -> Result<u8, CliError> {
    let j = load_minor(io, path, dim)?;
    let d = j.dim();
    if cli.verbose > 0 {
        match find_pulling_facet(d, &j) {
            PullingFacet::Facet(f) => {
                let _ = writeln!(io.stderr, "pulling facet: {f}");
            }
            PullingFacet::Incomplete => {
                let _ = writeln!(io.stderr, "pulling facet: none");
            }
        }
    }
    match find_certificate(d, &j) {
        Some(cert) => {
            write_out(io, &format::write_certificate(&cert))?;
            Ok(EXIT_NO)
        }
        None => {
            write_out(io, "COMPLETE\n")?;
            Ok(EXIT_YES)
        }
    }
}

fn verify(
    io: &mut Streams<'_>,
    input: &Path,
    certificate: &Path,
    dim: Option<usize>,
) -> Result<u8, CliError> {
    if input.as_os_str() == "-" && certificate.as_os_str() == "-" {
        return Err(CliError::Usage(
            "matrix and certificate cannot both be read from stdin".into(),
        ));
    }
    let j = load_minor(io, Some(input), dim)?;
    let (name, text) = read_input(io, Some(certificate))?;
    let cert = format::parse_certificate(&text)
        .map_err(|source| CliError::Parse { path: name, source })?;
    let ok = verify_certificate(j.dim(), &j, &cert)?;
    write_out(io, if ok { "accept\n" } else { "reject\n" })?;
    Ok(if ok { EXIT_YES } else { EXIT_NO })
}

fn extract(
    cli: &Cli,
    io: &mut Streams<'_>,
    path: Option<&Path>,
    force: bool,
    output: Option<&Path>,
) -> Result<u8, CliError> {
    let (name, text) = read_input(io, path)?;
    let inst =
        format::parse_geometry(&text).map_err(|source| CliError::Parse { path: name, source })?;
    let report = validate_instance(&inst)?;
    for (check, failures) in report.checks() {
        let _ = if cli.machine {
            writeln!(
                io.stderr,
                "check={check} status={} failures={}",
                if failures.is_empty() { "ok" } else { "failed" },
                failures.len()
            )
        } else if failures.is_empty() {
            writeln!(io.stderr, "{check}: ok")
        } else {
            writeln!(io.stderr, "{check}: FAILED")
        };
        if !cli.machine {
            for f in failures {
                let _ = writeln!(io.stderr, "  {f}");
            }
        }
    }
    if !report.passed() && !force {
        return Err(CliError::Usage(
            "validation failed; pass --force to extract anyway".into(),
        ));
    }
    let matrix = format::write_incidence(&extract_incidence(&inst)?);
    match output {
        Some(p) => fs::write(p, matrix).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        })?,
        None => write_out(io, &matrix)?,
    }
    Ok(EXIT_YES)
}

/// Parses fixture words such as `prism cyclic 3 6`.
pub fn parse_fixture(words: &[String]) -> Result<FixtureSpec, CliError> {
    let mut rest = words;
    let spec = parse_fixture_prefix(&mut rest)?;
    if let Some(extra) = rest.first() {
        return Err(CliError::Usage(format!(
            "unexpected fixture argument {extra:?}"
        )));
    }
    Ok(spec)
}

fn parse_fixture_prefix(rest: &mut &[String]) -> Result<FixtureSpec, CliError> {
    let (head, tail) = rest
        .split_first()
        .ok_or_else(|| CliError::Usage("missing fixture family".into()))?;
    *rest = tail;
    let mut number = |what: &str| -> Result<usize, CliError> {
        let (tok, tail) = rest
            .split_first()
            .ok_or_else(|| CliError::Usage(format!("{head}: missing {what}")))?;
        *rest = tail;
        tok.parse().map_err(|_| {
            CliError::Usage(format!(
                "{head}: {what} must be a non-negative integer, got {tok:?}"
            ))
        })
    };
    Ok(match head.as_str() {
        "simplex" => FixtureSpec::Simplex {
            d: number("dimension")?,
        },
        "cube" => FixtureSpec::Cube {
            d: number("dimension")?,
        },
        "cross" => FixtureSpec::CrossPolytope {
            d: number("dimension")?,
        },
        "cyclic" => {
            let d = number("dimension")?;
            let n = number("vertex count")?;
            FixtureSpec::Cyclic { d, n }
        }
        "cube-km" => FixtureSpec::CubeKm,
        "prism" => FixtureSpec::PrismOf(Box::new(parse_fixture_prefix(rest)?)),
        other => return Err(CliError::Usage(format!("unknown fixture family {other:?}"))),
    })
}

fn generate(io: &mut Streams<'_>, words: &[String], geometry: bool) -> Result<u8, CliError> {
    let spec = parse_fixture(words)?;
    let text = if geometry {
        format::write_geometry(&fixtures::geometric_fixture(&spec)?)
    } else {
        format::write_incidence(&spec.incidence()?)
    };
    write_out(io, &text)?;
    Ok(EXIT_YES)
}
