//! Command-line front end: Betti tables, syzygy counting, closed-form
//! invariants, and theorem verifiers over weighted Veronese generator sets.
//!
//! Exit codes: 0 success or verdict delivered, 1 input validation,
//! 2 resource budget exceeded, 3 internal invariant breach (a cross-check
//! between independent formulas failed).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use pilehom::betti::{
    betti_table_cached, BettiColumn, DegreeCache, Method, MethodKind, TableOptions,
};
use pilehom::complex::pile_complex;
use pilehom::error::Error;
use pilehom::field::FieldSpec;
use pilehom::invariants::{
    gorenstein_condition, highest_syzygy, partition_count, projective_dimension, regularity_bound,
};
use pilehom::lattice::{
    make_weights, veronese_generators, GeneratorSet, GeneratorSetSpec, MultiDegree,
};
use pilehom::verify::{
    fuzz_alexander, fuzz_duality, verify_alexander, verify_conditions, verify_star_lemma,
    FuzzConfig,
};

#[derive(Parser)]
#[command(
    name = "pilehom",
    version,
    about = "Multigraded Betti tables of Veronese embeddings via pile-complex homology"
)]
struct Cli {
    /// Weights of the ambient weighted projective space, comma separated.
    #[arg(
        long,
        global = true,
        value_delimiter = ',',
        conflicts_with = "points_file"
    )]
    weights: Option<Vec<i64>>,

    /// JSON file holding a generator set: {"points": [[..]..], "weights": .., "d": ..}.
    #[arg(long, global = true)]
    points_file: Option<PathBuf>,

    /// Veronese degree; required with --weights for set-based commands.
    #[arg(long, global = true)]
    d: Option<i64>,

    /// Coefficient field: q for the rationals, fp:<p> for a prime field.
    #[arg(long, global = true, default_value = "q")]
    field: String,

    /// Betti formula: bh (Bruns-Herzog), dual, or both (cross-checked).
    #[arg(long, global = true, default_value = "both")]
    method: String,

    /// Output format: json or text.
    #[arg(long, global = true, default_value = "json")]
    out: String,

    /// Directory for the per-degree result cache.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Worker threads for the parallel sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the full multigraded Betti table.
    Betti,
    /// Count the generators of the highest syzygy module (no homology).
    HighestSyzygy,
    /// Projective dimension, regularity report, and the Gorenstein test.
    Invariants,
    /// Number of ways to write k as a nonnegative combination of the weights.
    PartitionCount {
        #[arg(long)]
        k: i64,
    },
    /// Recheck the duality and its supporting lemmas, here or on random input.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Randomized check of the pile-complex duality theorem.
    Duality {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        max_n: usize,
        #[arg(long, default_value_t = 7)]
        max_points: usize,
        #[arg(long, default_value_t = 4)]
        max_coordinate: i64,
    },
    /// Saturation and divisor-pile equivalence verdicts for the given set.
    Conditions,
    /// Acyclicity at a degree with some coordinate maxed out.
    Star {
        /// Degree to test, comma separated; some b_j must equal t_j.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b: Vec<i64>,
    },
    /// Alexander duality, either at one pile-complex degree or fuzzed.
    Alexander {
        /// Degree of the pile complex to check; omit to run random complexes.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Option<Vec<i64>>,
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
    },
}

/// A failed run: message for stderr plus the process exit code.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::BoxTooLarge { .. } | Error::TooManyVertices { .. } => 2,
            _ => 1,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{err}");
                    ExitCode::from(1)
                }
            };
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("--jobs must be at least 1");
            return ExitCode::from(1);
        }
        // a failure here means a pool already exists, which is fine
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let field = parse_field(&cli.field)?;
    match &cli.command {
        Cmd::Betti => cmd_betti(cli, &field),
        Cmd::HighestSyzygy => cmd_highest_syzygy(cli),
        Cmd::Invariants => cmd_invariants(cli),
        Cmd::PartitionCount { k } => cmd_partition_count(cli, *k),
        Cmd::Verify { what } => cmd_verify(cli, &field, what),
    }
}

fn parse_field(text: &str) -> Result<FieldSpec, Failure> {
    FieldSpec::from_str(text).map_err(|e| Failure::validation(e.to_string()))
}

fn parse_method(text: &str) -> Result<Method, Failure> {
    Method::from_str(text).map_err(Failure::validation)
}

/// Resolve the generator set from --weights/--d or from a points file.
fn resolve_set(cli: &Cli) -> Result<GeneratorSet, Failure> {
    match (&cli.weights, &cli.points_file) {
        (Some(w), None) => {
            let d = cli
                .d
                .ok_or_else(|| Failure::validation("--d is required with --weights"))?;
            Ok(veronese_generators(&make_weights(w)?, d)?)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::validation(format!("cannot read {}: {e}", path.display())))?;
            let spec: GeneratorSetSpec = serde_json::from_str(&text).map_err(|e| {
                Failure::validation(format!("cannot parse {}: {e}", path.display()))
            })?;
            Ok(spec.build()?)
        }
        (None, None) => Err(Failure::validation(
            "one of --weights or --points-file is required",
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn require_weights(cli: &Cli) -> Result<(Vec<i64>, i64), Failure> {
    let weights = cli
        .weights
        .clone()
        .ok_or_else(|| Failure::validation("this command needs --weights"))?;
    let d = cli
        .d
        .ok_or_else(|| Failure::validation("--d is required with --weights"))?;
    Ok((weights, d))
}

fn want_json(cli: &Cli) -> Result<bool, Failure> {
    match cli.out.as_str() {
        "json" => Ok(true),
        "text" => Ok(false),
        other => Err(Failure::validation(format!(
            "unknown output format `{other}` (expected json|text)"
        ))),
    }
}

fn emit(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("valid JSON")
    );
}

// -------------------------------------------------------------------- cache

/// One JSON file per (generator set, degree, field, formula), named by a
/// content hash so distinct inputs can never collide; written atomically.
struct FileCache {
    dir: PathBuf,
    instance_key: String,
}

impl FileCache {
    fn open(dir: &Path, set: &GeneratorSet, field: &FieldSpec) -> Result<Self, Failure> {
        fs::create_dir_all(dir).map_err(|e| {
            Failure::validation(format!("cannot create cache dir {}: {e}", dir.display()))
        })?;
        let canonical = format!("{}|{}", set.to_value(), field.label());
        let mut hasher = Sha256::new();
        hasher.update(canonical.as_bytes());
        Ok(FileCache {
            dir: dir.to_path_buf(),
            instance_key: format!("{:x}", hasher.finalize()),
        })
    }

    fn path(&self, c: &MultiDegree, kind: MethodKind) -> PathBuf {
        let mut hasher = Sha256::new();
        hasher.update(self.instance_key.as_bytes());
        hasher.update(format!("|{:?}", c.coords()).as_bytes());
        let digest = format!("{:x}", hasher.finalize());
        self.dir.join(format!("{digest}.{}.json", kind.label()))
    }
}

impl DegreeCache for FileCache {
    fn get(&self, c: &MultiDegree, kind: MethodKind) -> Option<BettiColumn> {
        let text = fs::read_to_string(self.path(c, kind)).ok()?;
        serde_json::from_str(&text).ok()
    }

    fn put(&self, c: &MultiDegree, kind: MethodKind, column: &BettiColumn) {
        let final_path = self.path(c, kind);
        let tmp_path = final_path.with_extension(format!("tmp.{}", std::process::id()));
        let Ok(text) = serde_json::to_string(column) else {
            return;
        };
        // best effort: a cold recomputation is always available
        if fs::write(&tmp_path, text).is_ok() {
            let _ = fs::rename(&tmp_path, &final_path);
        }
    }
}

// ----------------------------------------------------------------- commands

fn cmd_betti(cli: &Cli, field: &FieldSpec) -> Result<u8, Failure> {
    let set = resolve_set(cli)?;
    let method = parse_method(&cli.method)?;
    let json = want_json(cli)?;
    let cache = match &cli.cache {
        Some(dir) => Some(FileCache::open(dir, &set, field)?),
        None => None,
    };
    let table = betti_table_cached(
        &set,
        field,
        method,
        &TableOptions::default(),
        cache.as_ref().map(|c| c as &dyn DegreeCache),
    )?;
    if json {
        emit(&table.to_value());
    } else {
        let mut text = String::new();
        let _ = writeln!(
            text,
            "{} generators, field {}, method {}",
            set.points().len(),
            field.label(),
            table.method().label()
        );
        match table.diagram() {
            Ok(diagram) => text.push_str(&diagram),
            Err(_) => {
                // inhomogeneous custom sets have no Z-grading to draw
                for (i, c, beta) in table.entries() {
                    let _ = writeln!(text, "i={i} c={c} beta={beta}");
                }
            }
        }
        print!("{text}");
    }
    if table.disagreements().is_empty() {
        Ok(0)
    } else {
        eprintln!(
            "error: the two formulas disagree at {} degrees",
            table.disagreements().len()
        );
        Ok(3)
    }
}

fn cmd_highest_syzygy(cli: &Cli) -> Result<u8, Failure> {
    let (weights, d) = require_weights(cli)?;
    let report = highest_syzygy(&make_weights(&weights)?, d)?;
    if want_json(cli)? {
        emit(&report.to_value());
    } else {
        println!(
            "rank {} at homological index {}",
            report.rank(),
            report.homological_index
        );
        let mut histogram: std::collections::BTreeMap<i64, usize> = Default::default();
        for &(_, z) in &report.generators {
            *histogram.entry(z).or_insert(0) += 1;
        }
        for (z, count) in histogram.iter().rev() {
            println!("zdeg {z}: {count} generators");
        }
    }
    Ok(0)
}

fn cmd_invariants(cli: &Cli) -> Result<u8, Failure> {
    let (weights_raw, d) = require_weights(cli)?;
    let weights = make_weights(&weights_raw)?;
    let set = veronese_generators(&weights, d)?;
    let mut regularity = regularity_bound(&weights, d)?;
    // the counting scan is cheap whenever its box fits; skip it otherwise
    match highest_syzygy(&weights, d) {
        Ok(syzygy) => regularity = regularity.with_syzygy(&syzygy),
        Err(Error::BoxTooLarge { .. }) => {}
        Err(other) => return Err(other.into()),
    }
    let rho_count = partition_count(weights.weights(), regularity.rho)?;
    let value = serde_json::json!({
        "weights": weights.weights(),
        "d": d,
        "points": set.points().len(),
        "projective_dimension": projective_dimension(&set),
        "regularity": regularity.to_value(),
        "gorenstein": gorenstein_condition(&weights, d)?,
        "rho_partition_count": u64::try_from(rho_count)
            .map(serde_json::Value::from)
            .unwrap_or_else(|_| serde_json::Value::String(rho_count.to_string())),
    });
    if want_json(cli)? {
        emit(&value);
    } else {
        let obj = value.as_object().expect("object by construction");
        for (key, val) in obj {
            println!("{key}: {val}");
        }
    }
    Ok(0)
}

fn cmd_partition_count(cli: &Cli, k: i64) -> Result<u8, Failure> {
    let weights = cli
        .weights
        .clone()
        .ok_or_else(|| Failure::validation("partition-count needs --weights"))?;
    let count = partition_count(&weights, k)?;
    if want_json(cli)? {
        emit(&serde_json::json!({
            "weights": weights,
            "k": k,
            "count": u64::try_from(count)
                .map(serde_json::Value::from)
                .unwrap_or_else(|_| serde_json::Value::String(count.to_string())),
        }));
    } else {
        println!("{count}");
    }
    Ok(0)
}

fn cmd_verify(cli: &Cli, field: &FieldSpec, what: &VerifyCmd) -> Result<u8, Failure> {
    let json = want_json(cli)?;
    match what {
        VerifyCmd::Duality {
            trials,
            seed,
            max_n,
            max_points,
            max_coordinate,
        } => {
            let config = FuzzConfig {
                max_n: *max_n,
                max_points: *max_points,
                max_coordinate: *max_coordinate,
                trials: *trials,
                seed: *seed,
                field: *field,
            };
            let report = fuzz_duality(&config)?;
            if json {
                emit(&report.to_value());
            } else {
                println!(
                    "trials {} seed {} failures {}",
                    report.trials,
                    report.seed,
                    report.failures.len()
                );
            }
            Ok(if report.passed() { 0 } else { 3 })
        }
        VerifyCmd::Conditions => {
            let set = resolve_set(cli)?;
            let report = verify_conditions(&set)?;
            if json {
                emit(&report.to_value());
            } else {
                println!("homogeneous: {}", report.homogeneous);
                println!("cone_contains_orthant: {}", report.cone_contains_orthant);
                println!("saturation: {}", report.saturation);
                println!("equivalence: {}", report.equivalence);
                println!("degrees_checked: {}", report.degrees_checked);
            }
            // a negative verdict is still a delivered verdict; only the
            // internal cross-check of the two sweeps may not disagree
            Ok(if report.agree { 0 } else { 3 })
        }
        VerifyCmd::Star { b } => {
            let set = resolve_set(cli)?;
            let check = verify_star_lemma(&set, &MultiDegree::new(b.clone()), field)?;
            if json {
                emit(&check.to_value());
            } else {
                println!("b={} holds: {}", check.b, check.holds);
            }
            Ok(if check.holds { 0 } else { 3 })
        }
        VerifyCmd::Alexander {
            c,
            trials,
            seed,
            max_vertices,
        } => match c {
            Some(coords) => {
                let set = resolve_set(cli)?;
                let gamma = pile_complex(&set, &MultiDegree::new(coords.clone()))?;
                let check = verify_alexander(&gamma, field)?;
                if json {
                    emit(&check.to_value());
                } else {
                    println!("vertices {} holds: {}", check.vertices, check.holds);
                }
                Ok(if check.holds { 0 } else { 3 })
            }
            None => {
                let report = fuzz_alexander(*trials, *seed, *max_vertices, field)?;
                if json {
                    emit(&report.to_value());
                } else {
                    println!(
                        "trials {} seed {} failures {}",
                        report.trials,
                        report.seed,
                        report.failures.len()
                    );
                }
                Ok(if report.passed() { 0 } else { 3 })
            }
        },
    }
}
