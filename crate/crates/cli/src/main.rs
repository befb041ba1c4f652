use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use skein_core::annulus::{entries, expand_closure, verify_identity_decomposition, verify_ringhom_with, ClosureExpander, Report};
use skein_core::hecke::{idempotent, MAX_DENSE_WIDTH};
use skein_core::partitions::{c_lambda, lr_coeffs};
use skein_core::trace::homfly;
use skein_core::verify::{run_all, Bounds};
use skein_core::{parse_braid, HeckeElement, Partition};

const GRAMMAR: &str = "\
Input grammar:
  braid      whitespace-separated signed generator indices (\"1 -2 1\"),
             or tokens s<i> and s<i>' for the inverse (\"s1 s2'\")
  partition  comma-separated weakly decreasing positive integers (\"3,2,1\");
             \"0\" or \"\" is the empty partition";

#[derive(Parser)]
#[command(name = "skein", version, about = "Exact Hecke algebra and annulus skein computations", after_help = GRAMMAR)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = "SKEIN_FORMAT", default_value = "plain")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Framed Homfly polynomial of a braid closure
    Homfly {
        braid: String,
        /// Number of strands; defaults to one more than the largest index
        #[arg(long)]
        width: Option<usize>,
    },
    /// The idempotent E_λ in the permutation basis
    Idempotent { partition: String },
    /// Expansion of a braid closure in the Q_λ basis
    ExpandClosure {
        #[arg(long)]
        braid: String,
        #[arg(long)]
        width: Option<usize>,
    },
    /// Littlewood-Richardson coefficients of S_λ S_μ
    Lr { lambda: String, mu: String },
    /// The meridian eigenvalue c_λ
    MeridianEigenvalue { partition: String },
    /// Run verification suites
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// E_λ ⊗ E_μ closes to the LR expansion, for every pair up to the bound
    Ringhom {
        #[arg(long, default_value_t = 5)]
        max_cells: usize,
    },
    /// 1_n closes to Σ d_λ Q_λ for n up to the bound
    Identity {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// All acceptance criteria, with Hecke widths capped at the bound
    All {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Compute(String),
}

type Outcome = Result<(String, bool), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn compute(e: impl std::fmt::Display) -> Failure {
    Failure::Compute(e.to_string())
}

/// Largest closure width: the meridian works one strand wider.
const MAX_CLOSURE_WIDTH: usize = MAX_DENSE_WIDTH - 1;

fn bounded(what: &str, n: usize, max: usize) -> Result<(), Failure> {
    if n > max {
        return Err(Failure::Usage(format!("{what} {n} exceeds the supported maximum of {max}")));
    }
    Ok(())
}

fn partition(text: &str) -> Result<Partition, Failure> {
    text.parse().map_err(usage)
}

fn braid_element(text: &str, width: Option<usize>) -> Result<HeckeElement, Failure> {
    let word = parse_braid(text, width).map_err(usage)?;
    HeckeElement::from_braid(&word).map_err(usage)
}

fn expansion_json(expansion: &skein_core::annulus::Expansion) -> Value {
    serde_json::to_value(entries(expansion)).expect("entries serialise")
}

fn expansion_plain(expansion: &skein_core::annulus::Expansion) -> String {
    if expansion.is_empty() {
        return "0".into();
    }
    expansion.iter().map(|(p, c)| format!("{p} : {c}")).collect::<Vec<_>>().join("\n")
}

fn reports(format: Format, reports: &[Report]) -> (String, bool) {
    let pass = reports.iter().all(|r| r.pass);
    let out = match format {
        Format::Plain => {
            let mut lines: Vec<String> = reports.iter().map(Report::render_plain).collect();
            lines.push(if pass { "PASS".into() } else { "FAIL".into() });
            lines.join("\n")
        }
        Format::Json => json!({ "reports": reports, "pass": pass }).to_string(),
    };
    (out, pass)
}

fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Homfly { braid, width } => {
            let x = braid_element(braid, *width)?;
            bounded("width", x.width(), MAX_DENSE_WIDTH)?;
            let h = homfly(&x).map_err(compute)?;
            Ok(match f {
                Format::Plain => (h.to_string(), true),
                Format::Json => (json!({ "braid": braid, "width": x.width(), "homfly": h.to_string() }).to_string(), true),
            })
        }
        Command::Idempotent { partition: text } => {
            let l = partition(text)?;
            bounded("size", l.size(), MAX_DENSE_WIDTH)?;
            let e = idempotent(&l).map_err(compute)?;
            Ok(match f {
                Format::Plain => (e.render().trim_end().to_string(), true),
                Format::Json => {
                    let terms: Vec<Value> =
                        e.terms().map(|(p, c)| json!({ "perm": p.images(), "coeff": c.to_string() })).collect();
                    (json!({ "partition": l, "terms": terms }).to_string(), true)
                }
            })
        }
        Command::ExpandClosure { braid, width } => {
            let x = braid_element(braid, *width)?;
            bounded("width", x.width(), MAX_CLOSURE_WIDTH)?;
            let a = expand_closure(&x).map_err(compute)?;
            Ok(match f {
                Format::Plain => (expansion_plain(&a), true),
                Format::Json => {
                    (json!({ "braid": braid, "width": x.width(), "expansion": expansion_json(&a) }).to_string(), true)
                }
            })
        }
        Command::Lr { lambda, mu } => {
            let (l, m) = (partition(lambda)?, partition(mu)?);
            let coeffs = lr_coeffs(&l, &m);
            Ok(match f {
                Format::Plain => {
                    let lines: Vec<String> = coeffs.iter().map(|(p, c)| format!("{p} : {c}")).collect();
                    (lines.join("\n"), true)
                }
                Format::Json => {
                    let list: Vec<Value> = coeffs.iter().map(|(p, c)| json!({ "partition": p, "coeff": c })).collect();
                    (json!({ "lambda": l, "mu": m, "coeffs": list }).to_string(), true)
                }
            })
        }
        Command::MeridianEigenvalue { partition: text } => {
            let l = partition(text)?;
            let c = c_lambda(&l);
            Ok(match f {
                Format::Plain => (c.to_string(), true),
                Format::Json => (json!({ "partition": l, "eigenvalue": c.to_string() }).to_string(), true),
            })
        }
        Command::Verify { suite } => verify(f, suite),
    }
}

fn verify(f: Format, suite: &Suite) -> Outcome {
    match suite {
        Suite::Ringhom { max_cells } => {
            bounded("--max-cells", *max_cells, MAX_CLOSURE_WIDTH)?;
            let mut out = Vec::new();
            for n in 1..=*max_cells {
                let expander = ClosureExpander::new(n).map_err(compute)?;
                for a in 0..=n {
                    for l in Partition::all(a) {
                        for m in Partition::all(n - a) {
                            out.push(verify_ringhom_with(&expander, &l, &m).map_err(compute)?);
                        }
                    }
                }
            }
            Ok(reports(f, &out))
        }
        Suite::Identity { max_n } => {
            bounded("--max-n", *max_n, MAX_CLOSURE_WIDTH)?;
            let out = (1..=*max_n).map(verify_identity_decomposition).collect::<Result<Vec<_>, _>>().map_err(compute)?;
            Ok(reports(f, &out))
        }
        Suite::All { max_n } => {
            bounded("--max-n", *max_n, MAX_CLOSURE_WIDTH)?;
            let results = run_all(&Bounds::capped(*max_n));
            let pass = results.iter().all(|r| r.pass);
            let out = match f {
                Format::Plain => {
                    let mut lines: Vec<String> = results.iter().map(|r| r.summary()).collect();
                    lines.push(if pass { "PASS".into() } else { "FAIL".into() });
                    lines.join("\n")
                }
                Format::Json => {
                    let list: Vec<Value> = results
                        .iter()
                        .map(|r| json!({ "criterion": r.id, "name": r.name, "pass": r.pass, "detail": r.detail }))
                        .collect();
                    json!({ "criteria": list, "pass": pass }).to_string()
                }
            };
            Ok((out, pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, pass)) => {
            println!("{out}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\n{GRAMMAR}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
