use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use mulspec::battery::{run_battery, BatterySpec, HypothesisMode};
use mulspec::enumerate::{enumerate_mul_lattices, sample_mul_lattices};
use mulspec::instances::{
    group_normal_lattice, ring_ideal_lattice, semigroup_ideal_lattice, semiring_ideal_lattice,
    three_element_monoid, zn_ring, AlgebraTable, Instance, CARRIER_CAP,
};
use mulspec::json::{lattice_from_json, lattice_to_json, MorphismJson};
use mulspec::morphisms::{
    com_factorization_report, frame_factorization_report, op_compatibility_report, spec_map,
    spec_map_report,
};
use mulspec::solvability::ClosureTables;
use mulspec::spectra::{spec, spectrum_summary};
use mulspec::{
    BatteryError, InstanceError, LatticeError, MorphismError, MulLattice, SolvabilityError,
    SpectraError, TheoremReport,
};

/// Prime spectra, radicals and solvability closures of finite
/// multiplicative lattices. Every file argument accepts `-` for stdin.
#[derive(Parser)]
#[command(name = "mulspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file holds a valid multiplicative lattice.
    Validate { lattice: String },
    /// Print the prime spectrum, radicals and topology report.
    Spec {
        lattice: String,
        /// Write the specialisation order as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Also write the report to a file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print every closure of one element.
    Closures {
        lattice: String,
        #[arg(long)]
        element: usize,
    },
    /// Build a lattice of ideals or normal subgroups and print it as JSON.
    Instance {
        #[command(subcommand)]
        kind: InstanceKind,
    },
    /// Run the theorem battery; exits 1 if any check fails.
    Verify {
        lattice: String,
        /// `all` or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        battery: String,
        /// `strict` skips checks whose hypotheses fail; `forced` runs them.
        #[arg(long, default_value = "strict")]
        mode: String,
    },
    /// Enumerate small lattices and optional random samples.
    Enumerate {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, value_delimiter = ',', default_value = "6,7")]
        sizes: Vec<usize>,
        /// Run the battery on each lattice and print only failures.
        #[arg(long)]
        verify: bool,
    },
    /// Load an adjunction and print its flags.
    Morphism {
        morphism: String,
        /// Also certify the induced map of spectra.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Subcommand)]
enum InstanceKind {
    /// Ideals of the integers modulo N.
    Zn { n: usize },
    Ring { file: String },
    Group { file: String },
    Semiring { file: String },
    Semigroup { file: String },
    /// The three-element monoid {1, x, x²} with x³ = x².
    #[command(name = "paper-3-5d")]
    Paper35d,
}

enum CliError {
    Input(String),
    Cap(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Cap(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<InstanceError> for CliError {
    fn from(e: InstanceError) -> Self {
        match e {
            InstanceError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            InstanceError::Lattice(e) => e.into(),
            InstanceError::Postcondition(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<MorphismError> for CliError {
    fn from(e: MorphismError) -> Self {
        match e {
            MorphismError::Lattice(e) => e.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<SolvabilityError> for CliError {
    fn from(e: SolvabilityError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<BatteryError> for CliError {
    fn from(e: BatteryError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult = Result<ExitCode, CliError>;

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
    }
}

fn load_lattice(path: &str) -> Result<MulLattice, CliError> {
    Ok(lattice_from_json(&read_input(path)?)?)
}

fn load_algebra(path: &str) -> Result<AlgebraTable, CliError> {
    Ok(AlgebraTable::from_json(&read_input(path)?)?)
}

fn print_json(v: &Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)
}

fn status(failed: bool) -> ExitCode {
    ExitCode::from(u8::from(failed))
}

fn validate(path: &str) -> CliResult {
    match lattice_from_json(&read_input(path)?) {
        Ok(l) => {
            print_json(&json!({
                "valid": true,
                "n": l.len(),
                "bottom": l.bottom(),
                "top": l.top(),
                "profile": l.condition_profile(),
            }))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(LatticeError::Json(e)) => Err(CliError::Input(format!("invalid JSON: {e}"))),
        Err(e @ LatticeError::CapExceeded { .. }) => Err(e.into()),
        Err(e) => {
            print_json(&json!({ "valid": false, "error": e.to_string() }))?;
            Ok(ExitCode::from(1))
        }
    }
}

fn spectrum(path: &str, dot: Option<&Path>, out: Option<&Path>) -> CliResult {
    let l = load_lattice(path)?;
    let report = serde_json::to_value(spectrum_summary(&l)).map_err(|e| CliError::Internal(e.to_string()))?;
    if let Some(dot) = dot {
        fs::write(dot, spec(&l).to_dot(&l))?;
    }
    if let Some(out) = out {
        fs::write(out, format!("{}\n", serde_json::to_string_pretty(&report).expect("value serialises")))?;
    }
    print_json(&report)?;
    Ok(ExitCode::SUCCESS)
}

fn closures(path: &str, k: usize) -> CliResult {
    let l = load_lattice(path)?;
    if k >= l.len() {
        return Err(CliError::Input(format!("element {k} is outside a lattice of {} elements", l.len())));
    }
    let t = ClosureTables::compute(&l)?;
    print_json(&json!({
        "element": k,
        "radical": t.radical[k],
        "sp": t.sp[k],
        "solv": t.solv[k],
        "loc_solv": t.loc_solv[k],
        "Solv": t.big_solv[k],
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn instance(kind: &InstanceKind) -> CliResult {
    let built: Instance = match kind {
        InstanceKind::Zn { n: 0 } => return Err(CliError::Input("n must be positive".into())),
        InstanceKind::Zn { n } if *n > CARRIER_CAP => {
            return Err(InstanceError::CapExceeded { size: *n, cap: CARRIER_CAP }.into())
        }
        InstanceKind::Zn { n } => ring_ideal_lattice(&zn_ring(*n))?,
        InstanceKind::Ring { file } => ring_ideal_lattice(&load_algebra(file)?)?,
        InstanceKind::Group { file } => group_normal_lattice(&load_algebra(file)?)?,
        InstanceKind::Semiring { file } => semiring_ideal_lattice(&load_algebra(file)?)?,
        InstanceKind::Semigroup { file } => semigroup_ideal_lattice(&load_algebra(file)?)?,
        InstanceKind::Paper35d => {
            println!("{}", lattice_to_json(&three_element_monoid()));
            return Ok(ExitCode::SUCCESS);
        }
    };
    println!("{}", lattice_to_json(&built.lattice));
    Ok(ExitCode::SUCCESS)
}

fn battery_spec(battery: &str, mode: &str) -> Result<BatterySpec, CliError> {
    let mode: HypothesisMode = mode.parse()?;
    Ok(if battery == "all" { BatterySpec::all(mode) } else { BatterySpec::parse(battery, mode)? })
}

fn verify(path: &str, battery: &str, mode: &str) -> CliResult {
    let spec = battery_spec(battery, mode)?;
    let l = load_lattice(path)?;
    let reports = run_battery(&l, &spec);
    let mut out = io::stdout().lock();
    for r in &reports {
        writeln!(out, "{}", r.to_json())?;
    }
    Ok(status(reports.iter().any(TheoremReport::is_failure)))
}

fn enumerate(
    max_size: usize,
    seed: Option<u64>,
    samples: usize,
    sizes: &[usize],
    verify: bool,
) -> CliResult {
    let mut lattices: Vec<MulLattice> = enumerate_mul_lattices(max_size, &[])?.collect();
    if samples > 0 {
        let seed = seed.ok_or_else(|| CliError::Input("--samples needs --seed".into()))?;
        lattices.extend(sample_mul_lattices(sizes, samples, seed)?);
    }
    let mut out = io::stdout().lock();
    if !verify {
        for l in &lattices {
            writeln!(out, "{}", lattice_to_json(l))?;
        }
        return Ok(ExitCode::SUCCESS);
    }
    let spec = BatterySpec::all(HypothesisMode::Strict);
    // Collecting an indexed parallel iterator keeps the input order.
    let failures: Vec<Vec<TheoremReport>> = lattices
        .par_iter()
        .map(|l| run_battery(l, &spec).into_iter().filter(TheoremReport::is_failure).collect())
        .collect();
    let mut count = 0;
    for (i, (l, reports)) in lattices.iter().zip(&failures).enumerate() {
        for r in reports {
            count += 1;
            let line = json!({
                "index": i,
                "lattice": serde_json::from_str::<Value>(&lattice_to_json(l)).expect("valid JSON"),
                "report": r,
            });
            writeln!(out, "{line}")?;
        }
    }
    writeln!(out, "{}", json!({ "visited": lattices.len(), "failures": count }))?;
    Ok(status(count > 0))
}

fn morphism(path: &str, check: bool) -> CliResult {
    let text = read_input(path)?;
    let parsed: MorphismJson =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let base = match Path::new(path).parent() {
        Some(dir) if path != "-" => dir.to_path_buf(),
        _ => PathBuf::new(),
    };
    let adj = parsed.into_adjunction(|name| {
        let file = base.join(name);
        let s = fs::read_to_string(&file)
            .map_err(|e| LatticeError::Shape(format!("{}: {e}", file.display())))?;
        lattice_from_json(&s)
    })?;
    let mut report = json!({
        "f": adj.f_map(),
        "u": adj.u_map(),
        "flags": adj.flags(),
    });
    if !check {
        print_json(&report)?;
        return Ok(ExitCode::SUCCESS);
    }
    let certificates = vec![
        spec_map_report(&adj),
        op_compatibility_report(&adj),
        com_factorization_report(&adj),
        frame_factorization_report(&adj),
    ];
    report["spec_map"] = match spec_map(&adj) {
        Ok(m) => json!(m),
        Err(e) => json!(e.to_string()),
    };
    report["certificates"] = json!(certificates);
    print_json(&report)?;
    Ok(status(certificates.iter().any(TheoremReport::is_failure)))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Validate { lattice } => validate(&lattice),
        Command::Spec { lattice, dot, json } => spectrum(&lattice, dot.as_deref(), json.as_deref()),
        Command::Closures { lattice, element } => closures(&lattice, element),
        Command::Instance { kind } => instance(&kind),
        Command::Verify { lattice, battery, mode } => verify(&lattice, &battery, &mode),
        Command::Enumerate { max_size, seed, samples, sizes, verify } => {
            enumerate(max_size, seed, samples, &sizes, verify)
        }
        Command::Morphism { morphism: path, check } => morphism(&path, check),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
