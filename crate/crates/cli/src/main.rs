use std::fs;
use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kshape_core::kshape_tableau::{charge_kshape, cocharge_kshape, KShapeTableau};
use kshape_core::verify::{init_workers, run_check, CheckParams, CHECKS};
use kshape_core::weak::{charge_any_weight, charge_standard, cocharge_standard};
use kshape_core::{enumerate_paths, equivalence_classes, full_descent, weak_bijection_standard, Error, Filling};
use kshape_core::{Partition, Poset, WeakTableau};

/// k-shapes, charge on k-tableaux and the weak bijection.
///
/// Partitions are written as comma-separated parts (`4,2,1`, `-` for the
/// empty one). Tableaux are written row by row from the bottom, rows
/// separated by `/`, e.g. `1 2 3 / 3`.
#[derive(Parser)]
#[command(name = "kshape", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertices and moves of the poset of k-shapes with boundary size N.
    Poset {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        size: usize,
        /// Write the covering relations in DOT format to FILE.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Paths between two k-shapes.
    Paths {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        from: Partition,
        #[arg(long)]
        to: Partition,
        /// Group the paths into diamond classes.
        #[arg(long)]
        classes: bool,
    },
    /// Charge of a weak tableau, or of a standard k-shape tableau.
    Charge {
        #[arg(long)]
        k: usize,
        /// File holding the tableau, `-` for stdin.
        #[arg(long, value_name = "FILE")]
        tableau: String,
        #[arg(long)]
        cocharge: bool,
        /// Read the tableau as a chain of k-shapes joined by covers.
        #[arg(long)]
        kshape: bool,
    },
    /// The weak bijection on a standard k-tableau.
    Bijection {
        /// Required unless `--descend` is given.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_name = "FILE")]
        tableau: String,
        /// Treat the tableau as a standard Young tableau and descend from
        /// k = n down to 2.
        #[arg(long)]
        descend: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification sweep.
    Verify {
        /// Check name, or `list`.
        #[arg(long)]
        check: String,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        vars: Option<usize>,
        /// Write the report as JSON to FILE.
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
}

macro_rules! wl {
    ($out:expr, $($t:tt)*) => {
        let _ = writeln!($out, $($t)*);
    };
}

enum Failure {
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrity(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn io_err(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_tableau(src: &str) -> Result<Filling, Failure> {
    let mut text = String::new();
    if src == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(io_err)?;
    } else {
        text = fs::read_to_string(src).map_err(|e| Failure::Usage(format!("{src}: {e}")))?;
    }
    let rows: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    Ok(rows.join(" / ").parse()?)
}

fn run(cli: Cli, out: &mut String) -> Result<(), Failure> {
    match cli.command {
        Command::Poset { k, size, dot } => {
            let ps = Poset::build(k, size)?;
            wl!(out, "k={k} N={size}: {} vertices, {} moves, {} covering", ps.vertices.len(), ps.edges.len(), ps.hasse_edges().len());
            for v in &ps.vertices {
                wl!(out, "  {v}");
            }
            for m in &ps.edges {
                wl!(out, "  {} -> {} {m}", m.source, m.target);
            }
            if let Some(f) = dot {
                fs::write(&f, ps.to_dot()).map_err(io_err)?;
            }
        }
        Command::Paths { k, from, to, classes } => {
            let paths = enumerate_paths(&from, &to, k)?;
            if classes {
                let cs = equivalence_classes(&paths)?;
                wl!(out, "{} paths in {} classes", paths.len(), cs.len());
                for c in cs {
                    wl!(out, "charge {} cocharge {} size {}: {}", c.charge(), c.cocharge(), c.members.len(), c.representative.text());
                }
            } else {
                for p in paths {
                    wl!(out, "charge {} cocharge {}: {}", p.charge(), p.cocharge(), p.text());
                }
            }
        }
        Command::Charge { k, tableau, cocharge, kshape } => {
            let f = read_tableau(&tableau)?;
            if kshape {
                let t = KShapeTableau::from_chain(k, f.chain()?)?;
                wl!(out, "charge {}", charge_kshape(&t)?);
                if cocharge {
                    wl!(out, "cocharge {}", cocharge_kshape(&t)?);
                }
            } else {
                let t = WeakTableau::from_filling(k, &f)?;
                if t.is_standard() {
                    wl!(out, "charge {}", charge_standard(&t)?);
                    if cocharge {
                        wl!(out, "cocharge {}", cocharge_standard(&t)?);
                    }
                } else {
                    if cocharge {
                        return Err(Failure::Usage("cocharge is only defined for standard tableaux".into()));
                    }
                    wl!(out, "charge {}", charge_any_weight(&t)?);
                }
            }
        }
        Command::Bijection { k, tableau, descend, json } => {
            let f = read_tableau(&tableau)?;
            if descend {
                let r = full_descent(&f)?;
                if json {
                    wl!(out, "{}", serde_json::to_string_pretty(&r).map_err(io_err)?);
                } else {
                    out.push_str(&r.text());
                }
            } else {
                let k = k.ok_or_else(|| Failure::Usage("--k is required without --descend".into()))?;
                let q = WeakTableau::from_filling(k, &f)?;
                let b = weak_bijection_standard(&q)?;
                let v = serde_json::json!({
                    "k": k,
                    "tableau": q.filling().to_string(),
                    "lower": b.lower_filling().to_string(),
                    "path": b.path.text(),
                    "charge": b.path.charge(),
                    "cocharge": b.path.cocharge(),
                });
                if json {
                    wl!(out, "{}", serde_json::to_string_pretty(&v).map_err(io_err)?);
                } else {
                    wl!(out, "lower {}", v["lower"].as_str().unwrap_or_default());
                    wl!(out, "path {}", b.path.text());
                    wl!(out, "charge {} cocharge {}", b.path.charge(), b.path.cocharge());
                }
            }
        }
        Command::Verify { check, k_max, n_max, vars, report } => {
            if check == "list" {
                for c in CHECKS {
                    wl!(out, "{:<26} {:?}  {}", c.name, c.mode, c.about);
                }
                return Ok(());
            }
            let r = run_check(&check, CheckParams { k_max, n_max, vars })?;
            wl!(out, "{}", r.line());
            for n in &r.notes {
                wl!(out, "  note: {n}");
            }
            for e in &r.counterexamples {
                wl!(out, "  {e}");
            }
            if let Some(f) = report {
                fs::write(&f, serde_json::to_string_pretty(&r).map_err(io_err)?).map_err(io_err)?;
            }
            if !r.passed {
                return Err(Failure::Check(format!("{check} failed")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_workers() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let mut out = String::new();
    let res = run(cli, &mut out);
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
