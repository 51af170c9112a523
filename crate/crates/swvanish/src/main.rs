use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use swvanish::gmanifold::load_spec;
use swvanish::report::{analyze, analyze_cut, render_characters, render_index_table, render_text, Report};
use swvanish::vanishing::{dimension_audit, CutSpec, Status};
use swvanish::{corpus, Error};

#[derive(Parser)]
#[command(name = "swvanish", version, about = "Mod-p vanishing criterion checker for Seiberg-Witten invariants of 4-manifolds with cyclic symmetry")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the main vanishing criterion on a spec file
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Also run the independent brute-force partition search
        #[arg(long)]
        partition: bool,
        /// Print the per-component dimension/rank audit
        #[arg(long)]
        audit: bool,
    },
    /// Compute and print the index table only
    Index {
        file: PathBuf,
        /// Also print the exact character values per power of the generator
        #[arg(long)]
        characters: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the torus-cut variant of the criterion
    Cut {
        file: PathBuf,
        #[arg(long)]
        dt: u32,
        #[arg(long)]
        dtg: u32,
        /// The torus of classes is preserved by the action
        #[arg(long)]
        invariant: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the built-in example corpus as a regression suite
    Corpus {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn verdict_exit(status: Status) -> u8 {
    match status {
        Status::VanishesModP | Status::VanishesTrivially => 0,
        Status::Inconclusive => 1,
        Status::NotApplicable => 2,
    }
}

fn error_exit(e: &Error) -> u8 {
    match e {
        Error::NotApplicable(_) => 2,
        _ => 3,
    }
}

fn emit_report(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", render_text(report)),
        Format::Json => println!("{}", serde_json::to_string_pretty(report).unwrap()),
    }
}

fn print_audit(report: &Report) {
    let d = report
        .verdict
        .witness_partition
        .clone()
        .unwrap_or_else(|| report.e_vector.clone());
    // per-component audit needs the quotient Betti numbers; reconstruct
    // b1_G from m = 1 - b1_G + bplus_G is not possible here, so audit with
    // the difference form: gap holds iff 2 k_j^l < 2 d_j + m
    let m = report.orbit.m_quantity;
    println!("dimension audit (gap must hold for every component and weight):");
    for (label, row) in report
        .index_table
        .labels
        .iter()
        .zip(&report.index_table.rows)
    {
        for (j, k) in row.iter().enumerate() {
            let a = dimension_audit(*k, 0, 0, d[j], 0, m - 1);
            println!(
                "  {label} weight {}: dim {} rank {} gap_holds {}",
                report.index_table.weights()[j],
                a.dim,
                a.rank,
                a.gap_holds
            );
        }
    }
}

fn run(cli: Cli) -> u8 {
    match cli.cmd {
        Cmd::Check { file, format, partition, audit } => {
            let document = match std::fs::read_to_string(&file) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 3;
                }
            };
            match analyze(&document, partition) {
                Ok(report) => {
                    emit_report(&report, format);
                    if audit && format == Format::Text {
                        print_audit(&report);
                    }
                    verdict_exit(report.verdict.status)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    error_exit(&e)
                }
            }
        }
        Cmd::Index { file, characters, format } => {
            let outcome = std::fs::read_to_string(&file)
                .map_err(Error::from)
                .and_then(|document| {
                    let spec = load_spec(&document)?;
                    let table = swvanish::index_engine::build_index_table(&spec)?;
                    match format {
                        Format::Text => {
                            print!("{}", render_index_table(&table));
                            if characters {
                                print!("{}", render_characters(&spec)?);
                            }
                        }
                        Format::Json => println!("{}", serde_json::to_string_pretty(&table)?),
                    }
                    Ok(())
                });
            match outcome {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: {e}");
                    error_exit(&e)
                }
            }
        }
        Cmd::Cut { file, dt, dtg, invariant, format } => {
            let cut = CutSpec { d_t: dt, d_t_g: dtg, invariant };
            let outcome = std::fs::read_to_string(&file)
                .map_err(Error::from)
                .and_then(|document| analyze_cut(&document, &cut));
            match outcome {
                Ok(report) => {
                    emit_report(&report, format);
                    verdict_exit(report.verdict.status)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    error_exit(&e)
                }
            }
        }
        Cmd::Corpus { format } => {
            let results = corpus::run(0);
            let all_pass = results.iter().all(|r| r.passed);
            match format {
                Format::Text => {
                    for r in &results {
                        if r.passed {
                            println!("PASS {}", r.id);
                        } else {
                            println!("FAIL {} ({})", r.id, r.failures.join("; "));
                        }
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&results).unwrap()),
            }
            if all_pass {
                0
            } else {
                1
            }
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}
