//! Command line front end: classifies density matrices from JSON files,
//! projects them onto the GHZ-symmetric family, and exports border curves,
//! class maps, thresholds and verification reports.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or input
//! format error, 3 a state invariant is violated.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ghzsym::geometry::{
    classify, solve_thresholds, w_curve, x_bisep, x_edge, x_sep, x_sep_pure, x_w, CurveParamV,
    GeometryError, Y_BISEP_EDGE, Y_W_EDGE,
};
use ghzsym::json::{density_from_json_str, density_to_json_string, to_json_string_17, JsonError};
use ghzsym::oracle::{containment_test, maximize_x_at_y, OracleError};
use ghzsym::twirl::{coords_of_density, is_ghz_symmetric, twirl};
use ghzsym::{DensityMatrix8, SloccClass, TriangleCoords, Y_MAX, Y_MIN};
use serde::Serialize;

/// Two GHZ-symmetric states closer than this in Hilbert-Schmidt distance
/// count as the same state for the symmetry witness.
const SYMMETRY_TOL: f64 = 1e-12;

/// Border tolerance used when rasterizing the class map.
const MAP_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "ghzsym",
    version,
    about = "SLOCC classification of three-qubit GHZ-symmetric states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a density matrix and report the symmetrization witness
    Classify {
        /// Density-matrix JSON file
        #[arg(long)]
        input: PathBuf,
        /// Border tolerance for the classification
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Project a density matrix onto the GHZ-symmetric family
    Twirl {
        /// Density-matrix JSON file
        #[arg(long)]
        input: PathBuf,
        /// Output path; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample one border curve as CSV
    Boundary {
        /// Border to sample
        #[arg(long, value_enum)]
        class: Border,
        /// Number of rows (at least 2)
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Output path; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Rasterize the class map over the bounding box as CSV
    Map {
        /// Grid points along x in [-1/2, 1/2]
        #[arg(long, default_value_t = 400)]
        xres: usize,
        /// Grid points along y in [-1/(4 sqrt 3), sqrt(3)/4]
        #[arg(long, default_value_t = 400)]
        yres: usize,
        /// Output path; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the Werner-line thresholds
    Thresholds,
    /// Re-derive a containment or border claim numerically
    Verify {
        /// Class to verify (sep, bisep or w)
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Sample count (containment) or number of border heights (boundary)
        #[arg(long)]
        samples: usize,
        /// RNG seed
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// What to verify
        #[arg(long, value_enum)]
        mode: VerifyMode,
        /// Classification tolerance for containment checks
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Border {
    Sep,
    SepPure,
    Bisep,
    W,
    Edge,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Sep,
    Bisep,
    W,
    Ghz,
}

impl ClassArg {
    fn to_class(self) -> SloccClass {
        match self {
            Self::Sep => SloccClass::Separable,
            Self::Bisep => SloccClass::Biseparable,
            Self::W => SloccClass::W,
            Self::Ghz => SloccClass::Ghz,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Containment,
    Boundary,
}

/// Failure with its exit code: Check = 1, Usage = 2, Invariant = 3.
enum Failure {
    Check(String),
    Usage(String),
    Invariant(String),
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        match e {
            JsonError::Format(_) => Self::Usage(e.to_string()),
            JsonError::Invariant(_) => Self::Invariant(e.to_string()),
        }
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::InvalidParameter(_)
            | GeometryError::InvalidCurveParam(_)
            | GeometryError::OutOfRange { .. } => Self::Usage(e.to_string()),
            _ => Self::Invariant(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::InvalidTarget(_)
            | OracleError::InvalidParameter(_)
            | OracleError::OutOfRange { .. } => Self::Usage(e.to_string()),
            OracleError::ConvergenceFailure { .. } => Self::Check(e.to_string()),
            OracleError::SamplerFailure { .. } => Self::Invariant(e.to_string()),
            OracleError::Geometry(g) => g.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Check(m) => (1, m),
                Failure::Usage(m) => (2, m),
                Failure::Invariant(m) => (3, m),
            };
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Classify { input, tolerance } => cmd_classify(&input, tolerance),
        Command::Twirl { input, output } => cmd_twirl(&input, output.as_deref()),
        Command::Boundary {
            class,
            samples,
            output,
        } => cmd_boundary(class, samples, output.as_deref()),
        Command::Map { xres, yres, output } => cmd_map(xres, yres, output.as_deref()),
        Command::Thresholds => cmd_thresholds(),
        Command::Verify {
            class,
            samples,
            seed,
            mode,
            tolerance,
        } => cmd_verify(class, samples, seed, mode, tolerance),
    }
}

fn read_density(path: &Path) -> Result<DensityMatrix8, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(density_from_json_str(&text)?)
}

fn with_output(
    target: Option<&Path>,
    write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), Failure> {
    let io_failure = |e: io::Error| Failure::Usage(format!("cannot write output: {e}"));
    match target {
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", path.display())))?;
            let mut out = BufWriter::new(file);
            write(&mut out)
                .and_then(|()| out.flush())
                .map_err(io_failure)
        }
        None => {
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            write(&mut out)
                .and_then(|()| out.flush())
                .map_err(io_failure)
        }
    }
}

/// Signed margins to the borders at the point's height: positive means the
/// point lies on the less entangled side of that border.
#[derive(Serialize)]
struct Distances {
    sep: f64,
    bisep: f64,
    w: f64,
    edge: f64,
}

#[derive(Serialize)]
struct ClassificationOut {
    x: f64,
    y: f64,
    slocc_lower_bound: &'static str,
    ghz_symmetric: bool,
    distances: Distances,
    note: &'static str,
}

fn cmd_classify(input: &Path, tolerance: f64) -> Result<(), Failure> {
    let rho = read_density(input)?;
    let coords = coords_of_density(&rho);
    let class = classify(coords, tolerance)?;
    let symmetric = is_ghz_symmetric(&rho, SYMMETRY_TOL);
    // valid states map into the triangle; clamp away rounding residue only
    let y = coords.y.clamp(Y_MIN, Y_MAX);
    let a = coords.x.abs();
    let result = ClassificationOut {
        x: coords.x,
        y: coords.y,
        slocc_lower_bound: class.short_name(),
        ghz_symmetric: symmetric,
        distances: Distances {
            sep: x_sep(y)? - a,
            bisep: x_bisep(y)? - a,
            w: x_w(y)? - a,
            edge: x_edge(y)? - a,
        },
        note: if symmetric {
            "GHZ-symmetric input: the class is exact"
        } else {
            "asymmetric input: symmetrization never raises the class, so this is a lower bound"
        },
    };
    println!("{}", to_json_string_17(&result));
    Ok(())
}

fn cmd_twirl(input: &Path, output: Option<&Path>) -> Result<(), Failure> {
    let rho = read_density(input)?;
    let projected = density_to_json_string(&twirl(&rho));
    with_output(output, |out| writeln!(out, "{projected}"))
}

fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn cmd_boundary(class: Border, samples: usize, output: Option<&Path>) -> Result<(), Failure> {
    if samples < 2 {
        return Err(Failure::Usage(format!(
            "--samples must be at least 2, got {samples}"
        )));
    }
    let n = samples as f64 - 1.0;
    let rows: Result<Vec<String>, Failure> = (0..samples)
        .map(|i| {
            let t = i as f64 / n;
            Ok(match class {
                Border::W => {
                    let v = CurveParamV::new(t)?;
                    let c = w_curve(v);
                    format!("{},{},{}", fmt17(t), fmt17(c.y), fmt17(c.x))
                }
                Border::Sep | Border::SepPure => {
                    let y = t * Y_MAX;
                    let x = match class {
                        Border::Sep => x_sep(y)?,
                        _ => x_sep_pure(y)?,
                    };
                    format!("{},{}", fmt17(y), fmt17(x))
                }
                Border::Bisep => {
                    let y = Y_BISEP_EDGE + t * (Y_MAX - Y_BISEP_EDGE);
                    format!("{},{}", fmt17(y), fmt17(x_bisep(y)?))
                }
                Border::Edge => {
                    let y = Y_MIN + t * (Y_MAX - Y_MIN);
                    format!("{},{}", fmt17(y), fmt17(x_edge(y)?))
                }
            })
        })
        .collect();
    let rows = rows?;
    let header = match class {
        Border::W => "v,y,x",
        _ => "y,x",
    };
    with_output(output, |out| {
        writeln!(out, "{header}")?;
        for row in rows {
            writeln!(out, "{row}")?;
        }
        Ok(())
    })
}

fn cmd_map(xres: usize, yres: usize, output: Option<&Path>) -> Result<(), Failure> {
    if xres < 2 || yres < 2 {
        return Err(Failure::Usage(format!(
            "--xres and --yres must be at least 2, got {xres} x {yres}"
        )));
    }
    let mut rows = Vec::with_capacity(xres * yres);
    for j in 0..yres {
        let y = Y_MIN + (Y_MAX - Y_MIN) * j as f64 / (yres - 1) as f64;
        for i in 0..xres {
            let x = -0.5 + i as f64 / (xres - 1) as f64;
            let label = match classify(TriangleCoords::new(x, y), MAP_TOL) {
                Ok(class) => class.short_name(),
                Err(GeometryError::OutsideTriangle { .. }) => "outside",
                Err(e) => return Err(e.into()),
            };
            rows.push(format!("{},{},{label}", fmt17(x), fmt17(y)));
        }
    }
    with_output(output, |out| {
        writeln!(out, "x,y,class")?;
        for row in rows {
            writeln!(out, "{row}")?;
        }
        Ok(())
    })
}

fn cmd_thresholds() -> Result<(), Failure> {
    let t = solve_thresholds(1e-14)?;
    println!(
        "{{\"p_sep\":{:.12},\"p_bisep\":{:.12},\"p_w\":{:.12},\"v_w\":{:.12}}}",
        t.p_sep, t.p_bisep, t.p_w, t.v_w
    );
    Ok(())
}

#[derive(Serialize)]
struct ContainmentReport {
    mode: &'static str,
    class: &'static str,
    samples: usize,
    seed: u64,
    fraction: f64,
    pass: bool,
}

#[derive(Serialize)]
struct BorderPoint {
    y: f64,
    x_found: f64,
    x_expected: f64,
    margin: f64,
    pass: bool,
}

#[derive(Serialize)]
struct BorderReport {
    mode: &'static str,
    class: &'static str,
    samples: usize,
    seed: u64,
    tolerance: f64,
    points: Vec<BorderPoint>,
    pass: bool,
}

fn cmd_verify(
    class: ClassArg,
    samples: usize,
    seed: u64,
    mode: VerifyMode,
    tolerance: f64,
) -> Result<(), Failure> {
    let target = class.to_class();
    if target == SloccClass::Ghz {
        return Err(Failure::Usage(
            "the GHZ class reaches the triangle edge and has no outer border; \
             choose sep, bisep or w"
                .into(),
        ));
    }
    match mode {
        VerifyMode::Containment => {
            let fraction = containment_test(target, samples, seed, tolerance)?;
            let pass = fraction == 1.0;
            let report = ContainmentReport {
                mode: "containment",
                class: target.short_name(),
                samples,
                seed,
                fraction,
                pass,
            };
            println!("{}", to_json_string_17(&report));
            if pass {
                Ok(())
            } else {
                Err(Failure::Check(format!(
                    "containment fraction {fraction} below 1"
                )))
            }
        }
        VerifyMode::Boundary => {
            if samples == 0 {
                return Err(Failure::Usage("--samples must be positive".into()));
            }
            let (lo, restarts, pass_tol) = match target {
                SloccClass::Separable => (0.0, 20, 1e-6),
                SloccClass::Biseparable => (Y_BISEP_EDGE, 20, 1e-6),
                SloccClass::W => (Y_W_EDGE, 50, 1e-3),
                SloccClass::Ghz => unreachable!("rejected above"),
            };
            let expected = |y: f64| match target {
                SloccClass::Separable => x_sep_pure(y),
                SloccClass::Biseparable => x_bisep(y),
                _ => x_w(y),
            };
            let mut points = Vec::with_capacity(samples);
            let mut all_pass = true;
            for k in 0..samples {
                let y = lo + (Y_MAX - lo) * (k + 1) as f64 / (samples + 1) as f64;
                let report = maximize_x_at_y(target, y, restarts, seed + k as u64)?;
                let x_expected = expected(y)?;
                let margin = report.x_found - x_expected;
                let pass = margin.abs() <= pass_tol;
                all_pass &= pass;
                points.push(BorderPoint {
                    y,
                    x_found: report.x_found,
                    x_expected,
                    margin,
                    pass,
                });
            }
            let report = BorderReport {
                mode: "boundary",
                class: target.short_name(),
                samples,
                seed,
                tolerance: pass_tol,
                points,
                pass: all_pass,
            };
            println!("{}", to_json_string_17(&report));
            if all_pass {
                Ok(())
            } else {
                Err(Failure::Check(
                    "at least one border height missed the expected curve".into(),
                ))
            }
        }
    }
}
