use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

mod commands;
mod suites;

use commands::{Outcome, Status};

/// Ultracontacts over finite Boolean algebras.
///
/// Exit codes: 0 when everything holds, 1 when a violation was found (the
/// counterexample is printed as JSON), 2 on input errors.
#[derive(Parser)]
#[command(name = "uclab", version)]
struct Cli {
    /// Also write a machine-readable report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Target {
    StackSystem,
    Uc,
    Complex,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the axioms of a uc, stack-system, contact, hypercontact,
    /// complex, family or space document.
    Check {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// List stacks, grills, ultracontacts or complexes on n atoms.
    #[command(group(ArgGroup::new("what").required(true).args(["stacks", "grills", "ucs", "complexes"])))]
    Enumerate {
        #[arg(long)]
        stacks: bool,
        #[arg(long)]
        grills: bool,
        #[arg(long)]
        ucs: bool,
        #[arg(long)]
        complexes: bool,
        #[arg(long, value_name = "N")]
        atoms: usize,
    },
    /// Re-encode an ultracontact as a uc, stack-system or complex document.
    Convert {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Derive the contact or hypercontact of an ultracontact.
    #[command(group(ArgGroup::new("what").required(true).args(["contact", "hypercontact"])))]
    Derive {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        contact: bool,
        #[arg(long)]
        hypercontact: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Join or meet of ultracontacts on the same algebra.
    #[command(group(ArgGroup::new("op").required(true).args(["join", "meet"])))]
    Lattice {
        #[arg(long)]
        join: bool,
        #[arg(long)]
        meet: bool,
        #[arg(required = true, value_name = "FILE")]
        inputs: Vec<PathBuf>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Extend an ultracontact by grills, by atoms, or by an arbitrary family.
    /// Families are written like "a, bc, a+d".
    #[command(group(ArgGroup::new("by").required(true).args(["grill", "atoms", "set"])))]
    Extend {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FAMILY")]
        grill: Vec<String>,
        #[arg(long, value_name = "FAMILY")]
        atoms: Option<String>,
        #[arg(long, value_name = "FAMILY")]
        set: Option<String>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Ultracontact of common-point families of regular closed sets.
    TopologyUc {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Run one named verification suite, or all of them.
    #[command(group(ArgGroup::new("which").required(true).args(["theorem", "all", "list"])))]
    Verify {
        #[arg(long, value_name = "ID")]
        theorem: Option<String>,
        #[arg(long)]
        all: bool,
        /// Print the suite ids.
        #[arg(long)]
        list: bool,
    },
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Check { input } => commands::check(input),
        Command::Enumerate {
            stacks,
            grills,
            ucs,
            complexes,
            atoms,
        } => {
            let what = match (stacks, grills, ucs, complexes) {
                (true, ..) => commands::Listing::Stacks,
                (_, true, ..) => commands::Listing::Grills,
                (_, _, true, _) => commands::Listing::Ucs,
                _ => commands::Listing::Complexes,
            };
            commands::enumerate(what, *atoms)
        }
        Command::Convert { input, to, out } => commands::convert(input, *to, out.as_deref()),
        Command::Derive {
            input,
            hypercontact,
            out,
            ..
        } => commands::derive(input, *hypercontact, out.as_deref()),
        Command::Lattice { meet, inputs, out, .. } => commands::lattice(inputs, *meet, out.as_deref()),
        Command::Extend {
            input,
            grill,
            atoms,
            set,
            out,
        } => {
            let how = if let Some(a) = atoms {
                commands::Extension::Atoms(a.clone())
            } else if let Some(m) = set {
                commands::Extension::Set(m.clone())
            } else {
                commands::Extension::Grills(grill.clone())
            };
            commands::extend(input, how, out.as_deref())
        }
        Command::TopologyUc { input, out } => commands::topology_uc(input, out.as_deref()),
        Command::Verify { theorem, list, .. } => {
            if *list {
                commands::list_suites()
            } else {
                commands::verify(theorem.as_deref())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => match e.downcast_ref::<uclab_core::Error>().and_then(|c| c.violation()) {
            Some(v) => Outcome::violation(format!("violation: {v}"), serde_json::to_value(v).unwrap()),
            None => {
                eprintln!("error: {e:#}");
                if let Some(path) = &cli.json {
                    let report = serde_json::json!({"status": "error", "message": format!("{e:#}")});
                    let _ = std::fs::write(path, serde_json::to_string_pretty(&report).unwrap() + "\n");
                }
                return ExitCode::from(2);
            }
        },
    };
    // a closed pipe (`uclab ... | head`) is not an error
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(outcome.text.as_bytes());
    if let Some(cx) = &outcome.counterexample {
        let _ = writeln!(out, "counterexample:\n{}", serde_json::to_string_pretty(cx).unwrap());
    }
    drop(out);
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, serde_json::to_string_pretty(&outcome.report()).unwrap() + "\n") {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    match outcome.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Violation => ExitCode::from(1),
    }
}
