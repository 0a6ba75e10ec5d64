use clap::{Parser, Subcommand};
use spbw_cli::commands::{self, CmdOutput, Format};
use spbw_core::Caps;

#[derive(Parser)]
#[command(
    name = "spbw",
    version,
    about = "Skew PBW extension engine: normal forms, property decisions, theorem checks"
)]
struct Cli {
    /// Degree bound for bounded searches and probes.
    #[arg(long, global = true, default_value_t = 1)]
    degree: u32,
    /// Output format: human | json-like-tree.
    #[arg(long, global = true, default_value = "human")]
    format: String,
    /// Cap on the number of coefficient pairs a bounded search may visit.
    #[arg(long = "cap-multiplications", global = true)]
    cap_multiplications: Option<u64>,
    /// Largest admitted finite coefficient ring.
    #[arg(long = "cap-ring-size", global = true)]
    cap_ring_size: Option<u32>,
    /// Seed for structured-ring sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a definition file.
    Validate { file: String },
    /// Normalize an expression over the file's extension.
    Eval { file: String, expr: String },
    /// Decide a property.
    Check { file: String, property: String },
    /// Decide a property and print its witness, if any.
    Witness { file: String, property: String },
    /// Verify one theorem on the instance.
    Verify { file: String, theorem: String },
    /// Run every decider and check the implication chains.
    Report { file: String },
    /// Operate on a named catalog entry: `catalog list`, or
    /// `catalog <name> <validate|eval|check|witness|verify|report|run-all|export|expected> [args]`.
    Catalog {
        name: String,
        rest: Vec<String>,
    },
}

fn caps_from(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Some(m) = cli.cap_multiplications {
        caps.multiplications = m;
    }
    if let Some(r) = cli.cap_ring_size {
        caps.ring_size = r;
        caps.ideal_ring_size = caps.ideal_ring_size.min(r);
    }
    if let Some(s) = cli.seed {
        caps.sample_seed = s;
    }
    caps
}

fn run(cli: Cli) -> CmdOutput {
    let format = match Format::from_flag(&cli.format) {
        Ok(f) => f,
        Err(e) => {
            return CmdOutput {
                exit: commands::EXIT_USAGE,
                stdout: String::new(),
                stderr: e.to_string(),
            }
        }
    };
    let caps = caps_from(&cli);
    let degree = cli.degree;
    let load = |file: &str| commands::load_file(file, caps);
    match &cli.command {
        Command::Validate { file } => match load(file) {
            Ok(instance) => commands::cmd_validate(&instance, format),
            Err(e) => bad_definition(e),
        },
        Command::Eval { file, expr } => match load(file) {
            Ok(instance) => commands::cmd_eval(&instance, expr, format),
            Err(e) => bad_definition(e),
        },
        Command::Check { file, property } => match load(file) {
            Ok(instance) => commands::cmd_check(&instance, property, degree, format),
            Err(e) => bad_definition(e),
        },
        Command::Witness { file, property } => match load(file) {
            Ok(instance) => commands::cmd_witness(&instance, property, degree, format),
            Err(e) => bad_definition(e),
        },
        Command::Verify { file, theorem } => match load(file) {
            Ok(instance) => commands::cmd_verify(&instance, theorem, degree, format),
            Err(e) => bad_definition(e),
        },
        Command::Report { file } => match load(file) {
            Ok(instance) => commands::cmd_report(&instance, degree, format),
            Err(e) => bad_definition(e),
        },
        Command::Catalog { name, rest } => catalog_dispatch(name, rest, degree, caps, format),
    }
}

fn bad_definition(e: spbw_core::Error) -> CmdOutput {
    CmdOutput {
        exit: commands::EXIT_BAD_DEFINITION,
        stdout: String::new(),
        stderr: format!("definition invalid: {e}"),
    }
}

fn usage(message: String) -> CmdOutput {
    CmdOutput {
        exit: commands::EXIT_USAGE,
        stdout: String::new(),
        stderr: message,
    }
}

fn catalog_dispatch(
    name: &str,
    rest: &[String],
    degree: u32,
    caps: Caps,
    format: Format,
) -> CmdOutput {
    if name == "list" && rest.is_empty() {
        return commands::cmd_catalog_list(format);
    }
    let Some(op) = rest.first() else {
        return usage("catalog needs an operation, e.g. `spbw catalog weyl-z5 check sigma-rigid`".into());
    };
    match op.as_str() {
        "export" => return commands::cmd_catalog_export(name, format),
        "expected" => return commands::cmd_catalog_expected(name, format),
        _ => {}
    }
    let instance = match commands::load_catalog(name, caps) {
        Ok(i) => i,
        Err(e) => return usage(e.to_string()),
    };
    match (op.as_str(), rest.get(1)) {
        ("validate", None) => commands::cmd_validate(&instance, format),
        ("eval", Some(expr)) => commands::cmd_eval(&instance, expr, format),
        ("check", Some(property)) => commands::cmd_check(&instance, property, degree, format),
        ("witness", Some(property)) => {
            commands::cmd_witness(&instance, property, degree, format)
        }
        ("verify", Some(theorem)) => commands::cmd_verify(&instance, theorem, degree, format),
        ("report", None) => commands::cmd_report(&instance, degree, format),
        ("run-all", None) => commands::cmd_run_all(&instance, degree, format),
        _ => usage(format!("unknown or incomplete catalog operation '{op}'")),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own help/version output stays on the usual streams;
            // argument mistakes map to the usage exit code.
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    std::process::exit(0);
                }
                _ => {
                    eprint!("{e}");
                    std::process::exit(commands::EXIT_USAGE);
                }
            }
        }
    };
    let output = run(cli);
    if !output.stdout.is_empty() {
        println!("{}", output.stdout);
    }
    if !output.stderr.is_empty() {
        eprintln!("{}", output.stderr);
    }
    std::process::exit(output.exit);
}
