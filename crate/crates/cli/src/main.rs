//! Command-line front end for the identity verification harness.
//!
//! Exit codes: 0 when every report passes, 1 when any check fails,
//! 2 on usage or parameter errors, 3 when nothing fails but at least one
//! probe comes back inconclusive.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rrcheck_core::harness::{
    probe_speculation, run_all, table2_class_lines, verify_borwein, verify_cauchy_restricted,
    verify_finite_identity, verify_genthm, verify_macmahon, verify_proposition_rsk, verify_rr,
    verify_rr_sum_rewrite, verify_table1, verify_table2, verify_xyrr, HarnessError,
    IdentityReport, RrWhich, SpeculationSolution, Status,
};
use rrcheck_core::tableaux::Alphabet;

#[derive(Parser)]
#[command(
    name = "rrcheck",
    version,
    about = "Exact verification of Rogers-Ramanujan-type identities",
    after_help = "Exit codes: 0 all checks pass; 1 a check fails; 2 usage or \
                  parameter error; 3 no failures but a probe was inconclusive."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Series order: checks compare coefficients of q^0 through q^ORDER.
    #[arg(long, global = true, default_value_t = 100, value_name = "ORDER")]
    order: usize,

    /// Emit reports as a JSON array instead of text lines.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Worker threads for the suite runner (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a single identity check.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Search for exact coefficients instead of checking a known identity.
    Probe {
        #[command(subcommand)]
        target: Probe,
    },
    /// Run the full verification suite at its default parameters.
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    First,
    Second,
}

#[derive(Subcommand)]
enum Check {
    /// Rogers-Ramanujan sum sides against their mod-5 product sides.
    Rr {
        /// Check only the first or only the second identity.
        #[arg(long, value_enum)]
        which: Option<Which>,
    },
    /// Termwise rewrite of the sum side over the five-family denominator.
    RrRewrite,
    /// Row-restricted Cauchy expansion against the first product side.
    Cauchy,
    /// Mod-5 pair classification of partitions of weight 1 mod 5.
    Table1,
    /// Mod-5 pair classification of weight 4 mod 5, with the 25 class
    /// formulas (printed in text mode).
    Table2,
    /// Insertion bijection between residue partitions and tableau pairs.
    Rsk {
        /// Largest weight checked exhaustively.
        #[arg(long, default_value_t = 40, value_name = "N")]
        n_max: usize,
    },
    /// Two-marker refinement of the product side.
    Xyrr {
        /// Largest tracked total marker degree.
        #[arg(long, default_value_t = 8, value_name = "D")]
        degree_cap: usize,
    },
    /// Finite q-binomial identity, exact polynomial comparison.
    Finite {
        /// Largest upper index checked.
        #[arg(long, default_value_t = 30, value_name = "N")]
        n_max: usize,
    },
    /// Modulus-(2k+3) expansion with exact rational coefficients.
    Genthm {
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Removed residue (its mirror 2k+3-i is removed with it).
        #[arg(long, default_value_t = 2)]
        i: usize,
    },
    /// Signed two-column Schur expansion of the cubic product pair.
    Borwein {
        /// Largest product index checked.
        #[arg(long, default_value_t = 12, value_name = "N")]
        n_max: usize,
    },
    /// Gap-2 partition counts against mod-5 residue counts.
    Macmahon {
        /// Largest weight counted on both sides.
        #[arg(long, default_value_t = 100, value_name = "N")]
        n_max: usize,
    },
}

#[derive(Subcommand)]
enum Probe {
    /// Fit exact rational coefficients for a row-restricted decomposition
    /// into products over residue subsets.
    Speculation {
        #[arg(long)]
        k: usize,
        /// Removed residue (its mirror 2k+3-i is removed with it).
        #[arg(long)]
        i: usize,
        /// Row bound R of the restricted sum, 1 through 2k.
        #[arg(long, value_name = "R")]
        rows: usize,
        /// Ansatz denominator (q;q)_D; defaults to D = 2k+1.
        #[arg(long, value_name = "D")]
        denominator_degree: Option<usize>,
        /// Allow a residue to repeat inside one subset.
        #[arg(long)]
        allow_repeats: bool,
    },
}

/// One report plus the extra payloads some commands carry.
struct Outcome {
    report: IdentityReport,
    solution: Option<SpeculationSolution>,
    /// Extra text lines printed before the report line in text mode.
    preface: Vec<String>,
}

impl Outcome {
    fn plain(report: IdentityReport) -> Self {
        Outcome {
            report,
            solution: None,
            preface: Vec::new(),
        }
    }
}

#[derive(Serialize)]
struct MismatchJson {
    exponent: usize,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct TermJson {
    residues: Vec<usize>,
    coefficient: String,
}

#[derive(Serialize)]
struct SolutionJson {
    k: usize,
    i: usize,
    rows: usize,
    terms: Vec<TermJson>,
    residual_order: usize,
}

/// Field order is the output order; `elapsed_ms` stays last so the rest
/// of the document is byte-identical across reruns of one invocation.
#[derive(Serialize)]
struct ReportJson {
    identity: String,
    params: BTreeMap<String, i64>,
    order: usize,
    status: String,
    first_mismatch: Option<MismatchJson>,
    solution: Option<SolutionJson>,
    elapsed_ms: u128,
}

fn report_json(o: &Outcome) -> ReportJson {
    let r = &o.report;
    ReportJson {
        identity: r.identity_name.clone(),
        params: r.params.clone(),
        order: r.order,
        status: r.status.to_string().to_lowercase(),
        first_mismatch: r.first_mismatch.as_ref().map(|m| MismatchJson {
            exponent: m.exponent,
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
        }),
        solution: o.solution.as_ref().map(|s| SolutionJson {
            k: s.k,
            i: s.i,
            rows: s.rows,
            terms: s
                .subsets
                .iter()
                .map(|t| TermJson {
                    residues: t.residues.clone(),
                    coefficient: t.coefficient.to_string(),
                })
                .collect(),
            residual_order: s.residual_order,
        }),
        elapsed_ms: r.elapsed_ms,
    }
}

fn render(outcomes: &[Outcome], json: bool) -> String {
    if json {
        let docs: Vec<ReportJson> = outcomes.iter().map(report_json).collect();
        let mut s = serde_json::to_string_pretty(&docs).expect("reports serialize");
        s.push('\n');
        return s;
    }
    let mut s = String::new();
    for o in outcomes {
        for line in &o.preface {
            let _ = writeln!(s, "{line}");
        }
        let _ = writeln!(s, "{}", o.report);
        if let Some(sol) = &o.solution {
            for t in &sol.subsets {
                let rs: Vec<String> = t.residues.iter().map(|r| r.to_string()).collect();
                let _ = writeln!(s, "  residues {{{}}}: {}", rs.join(", "), t.coefficient);
            }
        }
    }
    s
}

fn run_command(cli: &Cli) -> Result<Vec<Outcome>, HarnessError> {
    let order = cli.order;
    let outcomes = match &cli.command {
        Command::Verify { check } => match check {
            Check::Rr { which } => match which {
                Some(Which::First) => vec![Outcome::plain(verify_rr(RrWhich::First, order))],
                Some(Which::Second) => vec![Outcome::plain(verify_rr(RrWhich::Second, order))],
                None => vec![
                    Outcome::plain(verify_rr(RrWhich::First, order)),
                    Outcome::plain(verify_rr(RrWhich::Second, order)),
                ],
            },
            Check::RrRewrite => vec![Outcome::plain(verify_rr_sum_rewrite(order))],
            Check::Cauchy => {
                let x = Alphabet::geometric(0, 5);
                let y = Alphabet::finite_exponents(&[1, 4]);
                vec![Outcome::plain(verify_cauchy_restricted(&x, &y, order, 2))]
            }
            Check::Table1 => vec![Outcome::plain(verify_table1(order))],
            Check::Table2 => vec![Outcome {
                report: verify_table2(order),
                solution: None,
                preface: table2_class_lines(),
            }],
            Check::Rsk { n_max } => vec![Outcome::plain(verify_proposition_rsk(*n_max))],
            Check::Xyrr { degree_cap } => vec![Outcome::plain(verify_xyrr(order, *degree_cap))],
            Check::Finite { n_max } => vec![Outcome::plain(verify_finite_identity(*n_max))],
            Check::Genthm { k, i } => vec![Outcome::plain(verify_genthm(*k, *i, order)?)],
            Check::Borwein { n_max } => vec![Outcome::plain(verify_borwein(*n_max, order))],
            Check::Macmahon { n_max } => vec![Outcome::plain(verify_macmahon(*n_max))],
        },
        Command::Probe { target } => match target {
            Probe::Speculation {
                k,
                i,
                rows,
                denominator_degree,
                allow_repeats,
            } => {
                let probe =
                    probe_speculation(*k, *i, *rows, order, *denominator_degree, *allow_repeats)?;
                vec![Outcome {
                    report: probe.base,
                    solution: probe.solution,
                    preface: Vec::new(),
                }]
            }
        },
        Command::All => run_all(order).into_iter().map(Outcome::plain).collect(),
    };
    Ok(outcomes)
}

fn exit_code(outcomes: &[Outcome]) -> ExitCode {
    let statuses: Vec<Status> = outcomes.iter().map(|o| o.report.status).collect();
    if statuses.iter().any(|&s| s == Status::Fail) {
        ExitCode::from(1)
    } else if statuses.iter().any(|&s| s == Status::Inconclusive) {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        // Ignore the error from a pool that is already configured; the
        // builder can only win the race once per process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }

    let outcomes = match run_command(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let text = render(&outcomes, cli.json);
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    exit_code(&outcomes)
}
