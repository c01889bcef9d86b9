//! Command-line interface: level means, norms, multiplication-operator
//! reports and the named scenarios, over JSON function documents.
//!
//! Exit codes: 0 success (including `Inconclusive` verdicts), 1 a scenario
//! assertion backed by a theorem failed, 2 invalid input, 3 a level exceeded
//! the enumeration cap, 4 unknown scenario.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hardy_tree::scenarios::{self, AssertionClass};
use hardy_tree::serialize;
use hardy_tree::space::SpaceKind;
use hardy_tree::{ops, Error, Exponent64, FunctionRep64, Symbol64, TreeGeometry, DEFAULT_CAP};

#[derive(Parser)]
#[command(name = "hardy-tree", version, about = "Level means, norms and multiplication operators on tree Hardy spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Function document (JSON file, or `-` for stdin)
    #[arg(long)]
    input: String,
    /// Cap on vertices enumerated per level
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the level means M_p(n, f) for n up to the depth
    Means {
        #[command(flatten)]
        input: InputArgs,
        /// Exponent p (a positive number, or `inf`)
        #[arg(long, default_value = "2")]
        p: String,
        #[arg(long, default_value_t = 8)]
        depth: u64,
        /// Output format: `json` or `csv`
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Compute the norm, optionally with a membership verdict
    Norm {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "2")]
        p: String,
        #[arg(long, default_value_t = 8)]
        depth: u64,
        /// Also test membership: `full` (T_p) or `little` (T_{p,0})
        #[arg(long)]
        space: Option<String>,
    },
    /// Analyze the multiplication operator with the input as its symbol
    OpAnalyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 8)]
        depth: u64,
        /// Tolerance for equality of floating-point values
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// List or run the named worked examples
    Scenario {
        #[command(subcommand)]
        action: ScenarioAction,
    },
}

#[derive(Subcommand)]
enum ScenarioAction {
    /// List scenario names
    List,
    /// Run one scenario and report each assertion
    Run {
        name: String,
        /// Branching parameter q
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long, default_value_t = 6)]
        depth: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Output format: `json` or `text`
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::LevelTooLarge { .. } => 3,
        Error::UnknownScenario(_) => 4,
        _ => 2,
    }
}

fn read_function(args: &InputArgs) -> Result<(TreeGeometry, FunctionRep64), Error> {
    let text = if args.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidDocument(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&args.input)
            .map_err(|e| Error::InvalidDocument(format!("reading {}: {e}", args.input)))?
    };
    let doc: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidDocument(format!("invalid JSON: {e}")))?;
    serialize::function_from_document(&doc)
}

fn run() -> Result<Option<u8>, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Means {
            input,
            p,
            depth,
            format,
        } => {
            let (geo, f) = read_function(&input)?;
            let p = Exponent64::parse(&p)?;
            let method = f.mean_method();
            let mut rows = Vec::new();
            for n in 0..=depth {
                rows.push((n, f.level_mean(&geo, n, p, input.cap)?));
            }
            match format.as_str() {
                "csv" => {
                    println!("n,mean,method");
                    for (n, mean) in rows {
                        println!("{n},{mean},{method}");
                    }
                }
                "json" => {
                    let out = json!({
                        "q": geo.q(),
                        "p": p.to_string(),
                        "means": rows.iter().map(|&(n, m)| json!({
                            "n": n, "mean": m, "method": method,
                        })).collect::<Vec<_>>(),
                    });
                    println!("{out}");
                }
                other => {
                    return Err(Error::InvalidDocument(format!(
                        "unknown format `{other}` (expected json or csv)"
                    )))
                }
            }
        }
        Command::Norm {
            input,
            p,
            depth,
            space,
        } => {
            let (geo, f) = read_function(&input)?;
            let p = Exponent64::parse(&p)?;
            let report = f.norm(&geo, p, depth, input.cap)?;
            let mut out = json!({
                "q": geo.q(),
                "p": p.to_string(),
                "norm": serialize::norm_report_json(&report),
            });
            if let Some(space) = space {
                let kind = match space.as_str() {
                    "full" => SpaceKind::Full,
                    "little" => SpaceKind::Little,
                    other => {
                        return Err(Error::InvalidDocument(format!(
                            "unknown space `{other}` (expected full or little)"
                        )))
                    }
                };
                let m = f.membership(&geo, p, kind, depth, input.cap)?;
                out["membership"] = serialize::membership_json(&m);
            }
            println!("{out}");
        }
        Command::OpAnalyze { input, depth, tol } => {
            let (geo, psi) = read_function(&input)?;
            let analysis = ops::analyze(&Symbol64::new(psi), &geo, depth, input.cap, tol)?;
            println!("{}", serialize::operator_report_json(&analysis));
        }
        Command::Scenario { action } => match action {
            ScenarioAction::List => {
                for name in scenarios::SCENARIOS {
                    println!("{name}");
                }
            }
            ScenarioAction::Run {
                name,
                q,
                depth,
                cap,
                tol,
                format,
            } => {
                let report = scenarios::run_scenario(&name, q, depth, cap, tol)?;
                match format.as_str() {
                    "json" => println!("{}", serialize::scenario_report_json(&report)),
                    "text" => {
                        println!("scenario {} (q = {})", report.name, report.q);
                        for a in &report.assertions {
                            println!(
                                "  {} [{}] {}: {}",
                                if a.passed { "PASS" } else { "FAIL" },
                                a.class,
                                a.name,
                                a.detail
                            );
                        }
                    }
                    other => {
                        return Err(Error::InvalidDocument(format!(
                            "unknown format `{other}` (expected json or text)"
                        )))
                    }
                }
                if report.theorem_failures() > 0 {
                    return Ok(Some(1));
                }
                for a in &report.assertions {
                    if !a.passed && a.class != AssertionClass::Theorem {
                        eprintln!("warning: non-theorem assertion failed: {}", a.name);
                    }
                }
            }
        },
    }
    Ok(None)
}

fn main() -> ExitCode {
    match run() {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(code)) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
