use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coxeter_core::analysis::{classify_graph, growth_probe, verify_suite, Budgets, Status};
use coxeter_core::signature::{default_precedence, image_with};
use coxeter_core::words::is_reduced;
use coxeter_core::{enumerate_elements, parse_graph, CoxeterGraph, ElementProfile, Error};

const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "coxeter",
    version,
    about = "Reduced words, commutation classes and braid combinatorics of simply laced Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a graph file and print it in normal form.
    Parse { graph: PathBuf },
    /// Report everything known about the element of one word.
    Analyze {
        graph: PathBuf,
        /// Comma-separated vertex names, e.g. `1,2,1`.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        word_budget: usize,
    },
    /// List every element up to a length, one reduced word each.
    Enumerate {
        graph: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Label each connected component as A, D, E or other.
    Classify { graph: PathBuf },
    /// Count all, fully commutative and freely braided elements per length.
    Probe {
        graph: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        word_budget: usize,
    },
    /// Run every structural check on every element up to a length.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        word_budget: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

/// A failure together with the exit status it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_budget() { 3 } else { 2 };
        Failure {
            code,
            error: e.into(),
        }
    }
}

fn input_error(error: anyhow::Error) -> Failure {
    Failure { code: 2, error }
}

fn load(path: &Path) -> Result<CoxeterGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(input_error)?;
    parse_graph(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(input_error)
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("json value serializes")
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Parse { graph } => {
            let g = load(&graph)?;
            println!("{}", g.to_json());
            Ok(0)
        }
        Command::Analyze {
            graph,
            word,
            word_budget,
        } => {
            let g = load(&graph)?;
            let w = g.parse_word(&word)?;
            print_json(&analyze(&g, &w, word_budget)?);
            Ok(0)
        }
        Command::Enumerate {
            graph,
            max_len,
            format,
            budget,
        } => {
            let g = load(&graph)?;
            let layers = enumerate_elements(&g, max_len, budget)?;
            let rows = layers
                .iter()
                .flatten()
                .map(|e| (e.length(), g.word_names(&e.reduced_word(&g))));
            match format {
                Format::Tsv => {
                    println!("length\tword");
                    for (len, word) in rows {
                        println!("{len}\t{}", word.join(","));
                    }
                }
                Format::Json => {
                    let v: Vec<Value> = rows
                        .map(|(len, word)| json!({ "length": len, "word": word }))
                        .collect();
                    print_json(&Value::Array(v));
                }
            }
            Ok(0)
        }
        Command::Classify { graph } => {
            let g = load(&graph)?;
            let c = classify_graph(&g);
            print_json(&json!({
                "components": c.components.iter().map(|t| json!({
                    "type": t.to_string(),
                    "label": t.label,
                    "n": t.n,
                    "vertices": t.vertices,
                })).collect::<Vec<_>>(),
                "verdict": c.verdict,
            }));
            Ok(0)
        }
        Command::Probe {
            graph,
            max_len,
            budget,
            word_budget,
        } => {
            let g = load(&graph)?;
            let table = growth_probe(&g, max_len, budget, word_budget)?;
            print_json(&serde_json::to_value(&table).expect("table serializes"));
            Ok(0)
        }
        Command::Verify {
            graph,
            max_len,
            budget,
            word_budget,
        } => {
            let g = load(&graph)?;
            let budgets = Budgets {
                elements: budget,
                words: word_budget,
            };
            let report = verify_suite(&g, max_len, budgets);
            for c in &report.checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::BudgetExceeded => "budget-exceeded",
                };
                eprintln!("{status:>15}  {}  ({} elements)", c.name, c.elements);
            }
            print_json(&serde_json::to_value(&report).expect("report serializes"));
            Ok(if report.failed() {
                1
            } else if report.budget_exceeded() {
                3
            } else {
                0
            })
        }
    }
}

fn analyze(g: &CoxeterGraph, w: &coxeter_core::Word, cap: usize) -> Result<Value, Failure> {
    let e = g.element_of(w)?;
    let reduced = is_reduced(g, w)?;
    let p = ElementProfile::new(g, &e, cap)?;
    let image = image_with(g, &p, &default_precedence(&p.inversion_set))?;
    let names = |w: &coxeter_core::Word| g.word_names(w).join(",");

    let root_sequence = if reduced {
        let k = p.word_index(w).expect("reduced word is in the profile");
        json!(p.sequences[k].roots)
    } else {
        Value::Null
    };
    let triples: Vec<Value> = p
        .triples
        .iter()
        .map(|t| {
            json!({
                "roots": t,
                "contractible": p.contractible.contains(t),
            })
        })
        .collect();
    let classes: Vec<Value> = p
        .classes
        .iter()
        .zip(&image.per_class)
        .map(|(members, sig)| {
            let words: Vec<_> = members.iter().map(|&k| names(&p.words[k])).collect();
            json!({
                "representative": words[0],
                "size": words.len(),
                "words": words,
                "signature": sig,
            })
        })
        .collect();

    Ok(json!({
        "word": names(w),
        "length": e.length(),
        "reduced": reduced,
        "reduced_word": names(&e.reduced_word(g)),
        "root_sequence": root_sequence,
        "inversion_set": p.inversion_set,
        "triples": triples,
        "n": p.n(),
        "freely_braided": p.is_freely_braided(),
        "fully_commutative": p.class_count() == 1,
        "class_count": p.class_count(),
        "classes": classes,
        "image": {
            "size": image.image.len(),
            "injective": image.is_injective(),
            "surjective": image.is_surjective(),
        },
    }))
}
