use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use horizontal_chords::chordset::chord_set;
use horizontal_chords::constructions::{
    make_mountain_valley, sn_intervals, sn_realization, verify_chordset_equals, Manifest,
};
use horizontal_chords::family::{
    classify_closed_form, cross_validate, monte_carlo, SamplingConvention, TwoMountainParams,
};
use horizontal_chords::interval::IntervalSet;
use horizontal_chords::plfunc::PLFunction;
use horizontal_chords::rational::Rational;
use horizontal_chords::report::ChordReport;
use horizontal_chords::svg;

/// Exact horizontal chord sets of piecewise-linear functions.
#[derive(Parser)]
#[command(name = "hchord", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chord set, complement, measure and Hopf checks for a function file.
    Compute {
        function: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Also compare with the direct oracle at k/N, k = 0..=N.
        #[arg(long, value_name = "N")]
        oracle_grid: Option<u32>,
    },
    /// Closed-form full-chord verdict for two mountains around a valley.
    Classify(ClassifyArgs),
    /// Estimate the fraction of the family with the full chord property.
    Montecarlo {
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "default")]
        convention: SamplingConvention,
    },
    /// Compare the closed form against the exact engine on sampled tuples.
    Crossvalidate {
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "default")]
        convention: SamplingConvention,
    },
    /// Write a named set or function.
    Construct {
        #[command(flatten)]
        what: ConstructArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a function has a given chord set.
    Verify {
        #[arg(required_unless_present = "manifest")]
        function: Option<PathBuf>,
        #[arg(required_unless_present = "manifest")]
        intervals: Option<PathBuf>,
        #[arg(long, conflicts_with_all = ["function", "intervals"])]
        manifest: Option<PathBuf>,
    },
    /// SVG of the function graph with its chord set underneath.
    Plot {
        function: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    /// Parameter file; otherwise give all of --widths, --ascents, --heights.
    #[arg(required_unless_present_all = ["widths", "ascents", "heights"])]
    params: Option<PathBuf>,
    /// Left, valley, right widths, e.g. 1/5,1/5,3/5.
    #[arg(long, value_delimiter = ',', conflicts_with = "params")]
    widths: Option<Vec<Rational>>,
    /// Width of each piece's first side.
    #[arg(long, value_delimiter = ',', conflicts_with = "params", allow_hyphen_values = true)]
    ascents: Option<Vec<Rational>>,
    /// Left height, valley depth (negative), right height.
    #[arg(long, value_delimiter = ',', conflicts_with = "params", allow_hyphen_values = true)]
    heights: Option<Vec<Rational>>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ConstructArgs {
    /// The sharp interval set S_n.
    #[arg(long, value_name = "N")]
    sn: Option<u32>,
    /// A function whose chord set is S_n.
    #[arg(long, value_name = "N")]
    sn_function: Option<u32>,
    /// Mountain of width W1 at the left, valley of width W2 at the right.
    #[arg(long, num_args = 4, value_names = ["W1", "W2", "H", "DEPTH"], allow_hyphen_values = true)]
    mountain_valley: Option<Vec<Rational>>,
}

/// Failure with its exit code: 1 for input problems, 2 for failed checks.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(1, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(1, format!("{}: {e}", path.display())))
}

fn load_function(path: &Path) -> Result<PLFunction, Failure> {
    PLFunction::from_json(&read(path)?).map_err(|e| Failure(1, format!("{}: {e}", path.display())))
}

fn print(text: &str) -> Outcome {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure(1, format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure(1, format!("{}: {e}", path.display()))),
        None => print(&format!("{}\n", text.trim_end())),
    }
}

fn compute(function: &Path, report: Option<&Path>, oracle_grid: Option<u32>) -> Outcome {
    let f = load_function(function)?;
    let r = match oracle_grid {
        Some(n) => ChordReport::compute_with_oracle(&f, n),
        None => ChordReport::compute(&f),
    };
    emit(report, &r.to_json())?;
    if let Some(o) = r.oracle.as_ref().filter(|o| !o.mismatches.is_empty()) {
        return Err(Failure(2, format!("oracle disagrees at {} grid points, first {}", o.mismatches.len(), o.mismatches[0])));
    }
    if let Some(v) = &r.hopf.violation {
        return Err(Failure(2, format!("complement not additive: {} + {} = {}", v.a, v.b, v.sum)));
    }
    Ok(())
}

fn classify(args: ClassifyArgs) -> Outcome {
    let p = match (args.params, args.widths, args.ascents, args.heights) {
        (Some(path), ..) => TwoMountainParams::from_json(&read(&path)?)?,
        (None, Some(w), Some(a), Some(h)) => {
            let arr = |v: Vec<Rational>| -> Result<[Rational; 3], Failure> {
                v.try_into().map_err(|_| Failure(1, "each of --widths, --ascents, --heights takes three values".into()))
            };
            TwoMountainParams::new(arr(w)?, arr(a)?, arr(h)?)?
        }
        _ => return Err(Failure(1, "give a parameter file or --widths, --ascents and --heights".into())),
    };
    emit(None, &serde_json::to_string_pretty(&classify_closed_form(&p))?)
}

const REFERENCE_FRACTION: f64 = 0.704;

fn montecarlo(samples: u64, seed: u64, convention: SamplingConvention) -> Outcome {
    let r = monte_carlo(samples, seed, convention);
    let deviation = r.fraction - REFERENCE_FRACTION;
    let text = format!(
        "{{\n  \"fraction\": {:.4},\n  \"halfwidth\": {:.6},\n  \"samples\": {},\n  \"full_count\": {},\n  \"seed\": {},\n  \"convention\": \"{}\",\n  \"reference\": {REFERENCE_FRACTION},\n  \"deviation_from_reference\": {:.4},\n  \"within_reference_band\": {}\n}}",
        r.fraction,
        r.halfwidth,
        r.samples,
        r.full_count,
        r.seed,
        r.convention.name(),
        deviation,
        deviation.abs() <= 0.03
    );
    emit(None, &text)
}

fn crossvalidate(samples: u64, seed: u64, convention: SamplingConvention) -> Outcome {
    let r = cross_validate(samples, seed, convention);
    emit(None, &serde_json::to_string_pretty(&r)?)?;
    if !r.is_clean() {
        return Err(Failure(
            2,
            format!("{} disagreements, {} complement mismatches", r.disagreements.len(), r.complement_mismatches.len()),
        ));
    }
    Ok(())
}

fn construct(args: ConstructArgs, out: Option<&Path>) -> Outcome {
    if let Some(n) = args.sn {
        return emit(out, &sn_intervals(n)?.to_json());
    }
    if let Some(n) = args.sn_function {
        return emit(out, &sn_realization(n)?.to_json());
    }
    let v = args.mountain_valley.expect("clap requires one option");
    emit(out, &make_mountain_valley(&v[0], &v[1], &v[2], &v[3])?.to_json())
}

fn verify(function: Option<PathBuf>, intervals: Option<PathBuf>, manifest: Option<PathBuf>) -> Outcome {
    let results = match manifest {
        Some(path) => {
            let dir = path.parent().unwrap_or(Path::new("."));
            Manifest::load(&path)?.check(dir)?
        }
        None => {
            let f = load_function(&function.expect("clap requires a function"))?;
            let target = IntervalSet::from_json(&read(&intervals.expect("clap requires intervals"))?)?;
            vec![horizontal_chords::constructions::FixtureCheck {
                name: "function".into(),
                discrepancy: verify_chordset_equals(&f, &target),
            }]
        }
    };
    emit(None, &serde_json::to_string_pretty(&results)?)?;
    let bad = results.iter().filter(|r| r.discrepancy.is_some()).count();
    if bad > 0 {
        return Err(Failure(2, format!("{bad} of {} chord sets differ from the expected set", results.len())));
    }
    Ok(())
}

fn plot(function: &Path, out: Option<&Path>) -> Outcome {
    let f = load_function(function)?;
    let text = svg::render(&f, &chord_set(&f));
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure(1, format!("{}: {e}", path.display()))),
        None => print(&text),
    }
}

fn main() -> ExitCode {
    let outcome = match Cli::parse().command {
        Command::Compute { function, report, oracle_grid } => compute(&function, report.as_deref(), oracle_grid),
        Command::Classify(args) => classify(args),
        Command::Montecarlo { samples, seed, convention } => montecarlo(samples, seed, convention),
        Command::Crossvalidate { samples, seed, convention } => crossvalidate(samples, seed, convention),
        Command::Construct { what, out } => construct(what, out.as_deref()),
        Command::Verify { function, intervals, manifest } => verify(function, intervals, manifest),
        Command::Plot { function, out } => plot(&function, out.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("hchord: {msg}");
            ExitCode::from(code)
        }
    }
}
