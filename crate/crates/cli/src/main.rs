//! `glso` — B-orbit graphs and the Chow group of GL(2n)/SO(2n).
//!
//! Exit codes: 0 success, 1 invariant or verification failure, 2 usage
//! error (clap's default).

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use glso_core::{
    build_orbit_graph, certificate, chow_group, enumerate_orbits, export_dot, export_json,
    fiber_dimension, fibration_image, fibration_pullback, strata_summary, DotStyle, GraphOptions,
    Involution,
};

#[derive(Parser)]
#[command(name = "glso", version, about = "B-orbit graphs and the Chow group of GL(2n)/SO(2n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// List involutions of S_2n with codimension, stratum and fpf data
    Involutions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        fpf_only: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Build the orbit graph with codimension-1 closure edges
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        fpf_only: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
        /// Lift the size caps (2n <= 12 fpf, 2n <= 10 otherwise)
        #[arg(long)]
        max_n_override: bool,
        /// Compare vertex pairs in parallel
        #[arg(long)]
        parallel: bool,
    },
    /// Per-stratum orbit counts and minimal codimensions
    Strata {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        fpf_only: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Fiber dimension of the stratum fibration f_i, and spot queries for
    /// its action on orbits (cycle notation, e.g. "(1 6)(2 5)(3 4)")
    Fiber {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        /// Apply f_i to this involution of size 2n (its stratum must be i)
        #[arg(long)]
        image: Option<String>,
        /// Pull this involution of size 2n-2 back through f_i
        #[arg(long)]
        pullback: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Graded Chow group of GL(2n)/SO(2n)
    Chow {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Emit the machine-checkable certificate of the computation
    Certify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Run the invariant suite; nonzero exit on any failure
    Verify {
        #[arg(long, default_value = "4")]
        up_to: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Involutions {
            n,
            fpf_only,
            format,
            out,
        } => {
            let orbits = enumerate_orbits(n, fpf_only)?;
            let text = match format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = orbits
                        .iter()
                        .map(|o| {
                            serde_json::json!({
                                "one_line": o.w.one_line(),
                                "cycles": o.w.cycles_string(),
                                "codim": o.codim,
                                "stratum": o.stratum,
                                "fpf": o.fpf,
                            })
                        })
                        .collect();
                    format!("{}\n", serde_json::to_string_pretty(&rows)?)
                }
                _ => {
                    let mut t = format!("{:<20} {:>6} {:>8} {:>5}\n", "orbit", "codim", "stratum", "fpf");
                    for o in &orbits {
                        t.push_str(&format!(
                            "O_{:<18} {:>6} {:>8} {:>5}\n",
                            o.w.cycles_string(),
                            o.codim,
                            o.stratum,
                            o.fpf
                        ));
                    }
                    t
                }
            };
            emit(&text, out.as_deref())?;
        }
        Command::Graph {
            n,
            fpf_only,
            format,
            out,
            max_n_override,
            parallel,
        } => {
            let g = build_orbit_graph(
                n,
                fpf_only,
                GraphOptions {
                    allow_large: max_n_override,
                    parallel,
                    ..Default::default()
                },
            )?;
            let text = match format {
                Format::Json => export_json(&g),
                _ => export_dot(&g, &DotStyle::default()),
            };
            emit(&text, out.as_deref())?;
        }
        Command::Strata {
            n,
            fpf_only,
            format,
            out,
        } => {
            let orbits = enumerate_orbits(n, fpf_only)?;
            let summary = strata_summary(n, &orbits);
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&summary)?),
                _ => {
                    let mut t = format!(
                        "{:>7} {:>7} {:>10} {:>9}\n",
                        "stratum", "orbits", "fpf_orbits", "min_codim"
                    );
                    for s in &summary {
                        t.push_str(&format!(
                            "{:>7} {:>7} {:>10} {:>9}\n",
                            s.stratum,
                            s.orbits,
                            s.fpf_orbits,
                            s.min_codim.map_or("-".into(), |c| c.to_string())
                        ));
                    }
                    t
                }
            };
            emit(&text, out.as_deref())?;
        }
        Command::Fiber {
            n,
            i,
            image,
            pullback,
            format,
            out,
        } => {
            let dim = fiber_dimension(n, i)?;
            let image_result = image
                .map(|s| -> Result<String, Box<dyn std::error::Error>> {
                    let w = Involution::from_cycles(&s, 2 * n)?;
                    if glso_core::stratum_index(&w) != i {
                        return Err(format!(
                            "orbit O_{} lies in stratum {}, not {i}",
                            w.cycles_string(),
                            glso_core::stratum_index(&w)
                        )
                        .into());
                    }
                    Ok(fibration_image(&w)?.cycles_string())
                })
                .transpose()?;
            let pullback_result = pullback
                .map(|s| -> Result<String, Box<dyn std::error::Error>> {
                    let w = Involution::from_cycles(&s, 2 * n - 2)?;
                    Ok(fibration_pullback(n, i, &w)?.cycles_string())
                })
                .transpose()?;
            let text = match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "n": n,
                        "i": i,
                        "fiber_dim": dim,
                        "image": image_result,
                        "pullback": pullback_result,
                    }))?
                ),
                _ => {
                    let mut t = format!("f_{i}: X_{i} -> GL({})/SO({})\n", 2 * n - 2, 2 * n - 2);
                    t.push_str(&format!("fiber dimension: {dim}\n"));
                    if let Some(s) = image_result {
                        t.push_str(&format!("image: O_{s}\n"));
                    }
                    if let Some(s) = pullback_result {
                        t.push_str(&format!("pullback: O_{s}\n"));
                    }
                    t
                }
            };
            emit(&text, out.as_deref())?;
        }
        Command::Chow { n, format, out } => {
            let g = chow_group(n)?;
            let text = match format {
                Format::Table => {
                    let mut t = format!("{:>6} {:>5} {:>8}\n", "degree", "rank", "torsion");
                    for (d, c) in &g.groups {
                        t.push_str(&format!(
                            "{:>6} {:>5} {:>8}\n",
                            d,
                            c.rank,
                            if c.torsion.is_empty() {
                                "-".to_string()
                            } else {
                                format!("{:?}", c.torsion)
                            }
                        ));
                    }
                    t
                }
                _ => format!("{}\n", serde_json::to_string_pretty(&g)?),
            };
            emit(&text, out.as_deref())?;
        }
        Command::Certify { n, out } => {
            let cert = certificate(n)?;
            let text = format!("{}\n", serde_json::to_string_pretty(&cert)?);
            emit(&text, out.as_deref())?;
        }
        Command::Verify { up_to } => {
            let checks = glso_core::verify::run_verification(up_to);
            let mut failed = false;
            for c in &checks {
                println!("{}: {} ({})", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
                failed |= !c.pass;
            }
            if failed {
                return Ok(ExitCode::from(1));
            }
            println!("all {} checks passed", checks.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(text: &str, out: Option<&str>) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}
