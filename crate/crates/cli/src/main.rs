//! `diamond-cone`: tableaux, push/pull, super jeu de taquin, straightening and verification for sl(m,n).

mod cone;
mod input;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use diamond_cone::extraction::{
    enumerate_quasistandard, is_quasistandard, largest_extractable_pair, pull, push,
};
use diamond_cone::superspace::{star_product, straighten, Budget};
use diamond_cone::tableaux::{count_semistandard, enumerate_semistandard};
use diamond_cone::taquin::{Frame, SkewTableau};
use diamond_cone::verify::{run_all, run_suite, SuiteReport, SUITES};
use diamond_cone::{Error, FormalCombination, HookShape, HookTableau};
use serde::Serialize;
use serde_json::json;

use input::{SigFlags, SlideInput};

/// Why a command stopped.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
    /// Verification ran but some suite failed.
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

#[derive(Parser)]
#[command(
    name = "diamond-cone",
    version,
    about = "Semistandard and quasistandard tableaux for sl(m,n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Sig {
    /// Number of even letters, used when the JSON omits "m".
    #[arg(long)]
    m: Option<usize>,
    /// Number of odd letters, used when the JSON omits "n".
    #[arg(long)]
    n: Option<usize>,
}

impl From<Sig> for SigFlags {
    fn from(s: Sig) -> Self {
        SigFlags { m: s.m, n: s.n }
    }
}

#[derive(Args)]
struct Output {
    /// Human-readable output instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct ShapeArg {
    /// Hook shape as JSON, inline or a file path.
    #[arg(long)]
    shape: String,
}

#[derive(Args)]
struct TableauArg {
    /// Tableau as JSON, inline or a file path.
    #[arg(long)]
    tableau: String,
}

#[derive(Args)]
struct BudgetArg {
    /// Largest number of boxes handled by the tensor computations.
    #[arg(long, default_value_t = Budget::default().max_boxes)]
    max_boxes: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List the semistandard tableaux of a shape.
    Enumerate {
        #[command(flatten)]
        sig: Sig,
        #[command(flatten)]
        shape: ShapeArg,
        #[command(flatten)]
        out: Output,
    },
    /// Count the semistandard tableaux of a shape.
    Count {
        #[command(flatten)]
        sig: Sig,
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// Remove the largest extractable trivial pair.
    Push {
        #[command(flatten)]
        sig: Sig,
        #[command(flatten)]
        tableau: TableauArg,
        #[command(flatten)]
        out: Output,
    },
    /// Prepend a trivial pair to a quasistandard tableau, filling the shape given by --shape.
    Pull {
        #[command(flatten)]
        sig: Sig,
        #[command(flatten)]
        tableau: TableauArg,
        #[command(flatten)]
        shape: ShapeArg,
        #[command(flatten)]
        out: Output,
    },
    /// List the quasistandard tableaux of --shape, or test --tableau.
    Quasistandard {
        #[command(flatten)]
        sig: Sig,
        #[arg(long, required_unless_present = "tableau", conflicts_with = "tableau")]
        shape: Option<String>,
        #[arg(long)]
        tableau: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Slide a skew tableau (or T minus its largest trivial pair) to a straight one.
    Sjdt {
        #[command(flatten)]
        sig: Sig,
        #[command(flatten)]
        tableau: TableauArg,
        /// Print every frame, then a line tagged "result".
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Express e_W in the semistandard basis.
    Straighten {
        #[command(flatten)]
        sig: Sig,
        #[command(flatten)]
        tableau: TableauArg,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        out: Output,
    },
    /// The shape-algebra product S ⋆ T of two semistandard tableaux.
    Star {
        #[command(flatten)]
        sig: Sig,
        /// The two factors, in order.
        #[arg(long, num_args = 1, required = true)]
        tableau: Vec<String>,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        out: Output,
    },
    /// Run verification suites.
    Verify {
        /// A suite name or "all".
        #[arg(value_parser = suite_names())]
        suite: String,
        /// Lower every suite's box bound to this value.
        #[arg(long)]
        max_boxes: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// The diamond cone below a shape, as JSON or DOT.
    Cone {
        #[command(flatten)]
        sig: Sig,
        #[command(flatten)]
        shape: ShapeArg,
        #[command(flatten)]
        budget: BudgetArg,
        /// Emit a DOT digraph.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Serialize)]
struct FrameLine<'a> {
    slide: usize,
    frame: &'a Frame,
}

#[derive(Serialize)]
struct ResultLine<'a> {
    result: &'a HookTableau,
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&'static str> = SUITES.to_vec();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

fn print_json<T: Serialize>(v: &T) {
    let line = serde_json::to_string(v).expect("serializable");
    let _ = writeln!(io::stdout().lock(), "{line}");
}

fn print_tableaux(list: &[HookTableau], pretty: bool) {
    if pretty {
        for (k, t) in list.iter().enumerate() {
            if k > 0 {
                println!();
            }
            println!(
                "{}",
                if t.boxes() == 0 {
                    "0".to_string()
                } else {
                    t.to_string()
                }
            );
        }
    } else {
        print_json(&list);
    }
}

fn print_tableau(t: &HookTableau, pretty: bool) {
    if pretty {
        println!(
            "{}",
            if t.boxes() == 0 {
                "0".to_string()
            } else {
                t.to_string()
            }
        );
    } else {
        print_json(t);
    }
}

fn print_combination(c: &FormalCombination, pretty: bool) {
    if pretty {
        println!("{c}");
    } else {
        print_json(c);
    }
}

fn print_reports(reports: &[SuiteReport], pretty: bool) {
    if pretty {
        for r in reports {
            let status = if r.pass { "PASS" } else { "FAIL" };
            println!(
                "{status} {} ({} checks, {} failed)",
                r.name, r.checked, r.failed
            );
            for f in &r.failures {
                println!("    {f}");
            }
            for n in &r.notes {
                println!("    note: {n}");
            }
        }
    } else {
        print_json(&reports);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate { sig, shape, out } => {
            let l = input::shape("--shape", &shape.shape, sig.into())?;
            print_tableaux(&enumerate_semistandard(&l), out.pretty);
        }
        Command::Count { sig, shape } => {
            let l = input::shape("--shape", &shape.shape, sig.into())?;
            print_json(&json!({ "ss": count_semistandard(&l) }));
        }
        Command::Push { sig, tableau, out } => {
            let t = input::tableau("--tableau", &tableau.tableau, sig.into())?;
            if !t.is_semistandard() {
                return Err(Error::NotSemistandard.into());
            }
            print_tableau(&push(&t), out.pretty);
        }
        Command::Pull {
            sig,
            tableau,
            shape,
            out,
        } => {
            let u = input::tableau("--tableau", &tableau.tableau, sig.into())?;
            let l = input::shape("--shape", &shape.shape, sig.into())?;
            if u.sig() != l.sig() {
                let (a, b) = (u.sig(), l.sig());
                return Err(Error::SignatureMismatch(a.m, a.n, b.m, b.n).into());
            }
            print_tableau(&pull(&u, &l)?, out.pretty);
        }
        Command::Quasistandard {
            sig,
            shape,
            tableau,
            out,
        } => match (shape, tableau) {
            (Some(s), _) => {
                let mu: HookShape = input::shape("--shape", &s, sig.into())?;
                print_tableaux(&enumerate_quasistandard(&mu), out.pretty);
            }
            (None, Some(t)) => {
                let t = input::tableau("--tableau", &t, sig.into())?;
                let qs = t.is_semistandard() && is_quasistandard(&t);
                if out.pretty {
                    println!("{qs}");
                } else {
                    print_json(&json!({ "quasistandard": qs }));
                }
            }
            (None, None) => unreachable!("clap requires one of the two"),
        },
        Command::Sjdt {
            sig,
            tableau,
            trace,
            out,
        } => {
            let skew = match input::slide_input("--tableau", &tableau.tableau, sig.into())? {
                SlideInput::Skew(s) => s,
                SlideInput::Straight(t) => {
                    if !t.is_semistandard() {
                        return Err(Error::NotSemistandard.into());
                    }
                    SkewTableau::from_pair(&t, &largest_extractable_pair(&t))?
                }
            };
            if !skew.is_semistandard() {
                return Err(Error::NotSemistandard.into());
            }
            let (slides, result) = skew.maxjdt_trace()?;
            if trace {
                for (k, s) in slides.iter().enumerate() {
                    for f in &s.frames {
                        if out.pretty {
                            println!(
                                "slide {} star {}\n{}\n",
                                k + 1,
                                f.star,
                                f.tableau.render(Some(f.star))
                            );
                        } else {
                            print_json(&FrameLine {
                                slide: k + 1,
                                frame: f,
                            });
                        }
                    }
                }
                if out.pretty {
                    println!(
                        "result\n{}",
                        if result.boxes() == 0 {
                            "0".to_string()
                        } else {
                            result.to_string()
                        }
                    );
                } else {
                    print_json(&ResultLine { result: &result });
                }
            } else {
                print_tableau(&result, out.pretty);
            }
        }
        Command::Straighten {
            sig,
            tableau,
            budget,
            out,
        } => {
            let w = input::tableau("--tableau", &tableau.tableau, sig.into())?;
            print_combination(&straighten(&w, Budget::new(budget.max_boxes))?, out.pretty);
        }
        Command::Star {
            sig,
            tableau,
            budget,
            out,
        } => {
            if tableau.len() != 2 {
                return Err(Failure::Usage(format!(
                    "--tableau: expected two factors, got {}",
                    tableau.len()
                )));
            }
            let s = input::tableau("--tableau", &tableau[0], sig.into())?;
            let t = input::tableau("--tableau", &tableau[1], sig.into())?;
            print_combination(
                &star_product(&s, &t, Budget::new(budget.max_boxes))?,
                out.pretty,
            );
        }
        Command::Verify {
            suite,
            max_boxes,
            out,
        } => {
            let reports = if suite == "all" {
                run_all(max_boxes)
            } else {
                vec![run_suite(&suite, max_boxes)?]
            };
            print_reports(&reports, out.pretty);
            if !reports.iter().all(|r| r.pass) {
                return Err(Failure::Checks);
            }
        }
        Command::Cone {
            sig,
            shape,
            budget,
            dot,
        } => {
            let l = input::shape("--shape", &shape.shape, sig.into())?;
            let c = cone::build(&l, Budget::new(budget.max_boxes))?;
            if !c.complete {
                eprintln!(
                    "warning: {} boxes exceed the tensor budget of {}; edges omitted",
                    l.boxes(),
                    budget.max_boxes
                );
            }
            if dot {
                print!("{}", cone::to_dot(&c));
            } else {
                print_json(&c);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.kind());
            ExitCode::from(1)
        }
        Err(Failure::Checks) => ExitCode::from(1),
    }
}
