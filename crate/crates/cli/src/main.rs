//! `homsuper`: analyze hom-Lie superalgebras given by structure-constant files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homsuper::algebra::{catalog, validate, HomSuperalgebra, Property};
use homsuper::completeness::{
    check_theorems, decompose, holomorph, is_complete, DecomposeOptions, DecompositionKind, Status,
};
use homsuper::derivations::{der_space, inner_space};
use homsuper::io::{analyze, parse, serialize, status_word, AnalyzeOptions, Format};
use homsuper::linalg::Mat;
use serde_json::json;

#[derive(Parser)]
#[command(name = "homsuper", version, about = "Exact analysis of hom-Lie superalgebras")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = OutFormat::Human)]
    format: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and print the first witnesses.
    Validate { file: PathBuf },
    /// Every invariant, verdict and theorem check.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        s: u32,
        /// Report completeness for s = 0..=SWEEP.
        #[arg(long, default_value_t = 2)]
        sweep: u32,
    },
    /// Bases of the α^s-derivations.
    Derivations {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        s: u32,
        /// Also print the inner derivations ad_s.
        #[arg(long)]
        inner: bool,
    },
    /// Completeness verdict for one exponent.
    Complete {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        s: u32,
    },
    /// Build the holomorph and write it as an algebra file.
    Holomorph {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Split into indecomposable (or simply complete) hom-ideals.
    Decompose {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long)]
        simply_complete: bool,
    },
    /// Run the structural theorem checks that apply to the input.
    CheckTheorems {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        s: u32,
    },
    /// Write a catalog algebra to a file.
    Catalog {
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A failure with its exit code.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(1, e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn load(path: &Path) -> Result<HomSuperalgebra, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(1, format!("{}: {e}", path.display())))?;
    let loaded = parse(&text).map_err(|e| Failure(1, format!("{}: {e}", path.display())))?;
    if let Some(v) = loaded
        .validation
        .violations
        .first()
        .filter(|_| !loaded.validation.is_hom_lie())
    {
        return Err(Failure(
            1,
            format!(
                "{}: not a hom-Lie superalgebra: {:?} at {:?}",
                path.display(),
                v.property,
                v.witness
            ),
        ));
    }
    Ok(loaded.algebra)
}

fn seed() -> Result<DecomposeOptions, Failure> {
    let mut opts = DecomposeOptions::default();
    if let Ok(raw) = std::env::var("HOMSUPER_SEED") {
        opts.seed = raw
            .trim()
            .parse()
            .map_err(|_| Failure(2, format!("HOMSUPER_SEED must be an unsigned integer, got {raw:?}")))?;
    }
    Ok(opts)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn matrix_rows(m: &Mat) -> Vec<String> {
    m.to_string().lines().map(str::to_string).collect()
}

fn run_validate(file: &Path, format: OutFormat) -> Outcome {
    let text = fs::read_to_string(file).map_err(|e| Failure(1, format!("{}: {e}", file.display())))?;
    let loaded = parse(&text).map_err(|e| Failure(1, format!("{}: {e}", file.display())))?;
    let r = &loaded.validation;
    match format {
        OutFormat::Machine => print_json(&serde_json::to_value(r)?),
        OutFormat::Human => {
            println!("algebra: {}", loaded.algebra.name());
            println!("grading: {}", r.grading_ok);
            println!("supersymmetry: {}", r.supersymmetry_ok);
            println!("hom-jacobi: {}", r.hom_jacobi_ok);
            println!("multiplicative: {}", r.multiplicative);
            println!("regular: {}", r.regular);
        }
    }
    if r.is_multiplicative_hom_lie() {
        return Ok(ExitCode::SUCCESS);
    }
    let broken = r.violations.iter().filter(|v| v.property != Property::Regularity);
    for v in broken.take(5) {
        eprintln!(
            "violation: {:?} witness {:?} residual {}",
            v.property, v.witness, v.residual
        );
    }
    Ok(ExitCode::from(1))
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Validate { file } => run_validate(&file, format),
        Command::Analyze { file, s, sweep } => {
            let g = load(&file)?;
            let opts = AnalyzeOptions {
                s,
                sweep,
                decompose: seed()?,
            };
            let report = analyze(&g, &opts);
            let fmt = match format {
                OutFormat::Human => Format::Human,
                OutFormat::Machine => Format::Machine,
            };
            print!("{}", report.render(fmt));
            for e in &report.errors {
                eprintln!("{e}");
            }
            let failed = report.theorems.iter().any(|t| t.status == Status::Fail);
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Derivations { file, s, inner } => {
            let g = load(&file)?;
            let der = der_space(&g, s)?;
            let inner = inner.then(|| inner_space(&g, s));
            match format {
                OutFormat::Machine => {
                    let grid = |m: &Mat| {
                        m.row_vecs()
                            .map(|r| r.iter().map(homsuper::linalg::format_scalar).collect::<Vec<_>>())
                            .collect::<Vec<_>>()
                    };
                    let mut v = json!({
                        "s": s,
                        "even_dim": der.dims().0,
                        "odd_dim": der.dims().1,
                        "even_basis": der.even_basis.iter().map(grid).collect::<Vec<_>>(),
                        "odd_basis": der.odd_basis.iter().map(grid).collect::<Vec<_>>(),
                    });
                    if let Some(i) = &inner {
                        v["inner_dim"] = json!(i.dim());
                        v["inner_contained_in_next"] =
                            json!(der_space(&g, s + 1)?.as_subspace.contains(&i.as_subspace)?);
                    }
                    print_json(&v);
                }
                OutFormat::Human => {
                    println!("Der_(alpha^{s}): even {} odd {}", der.dims().0, der.dims().1);
                    for (k, (m, p)) in der.basis().enumerate() {
                        println!("D{k} ({p}):");
                        for row in matrix_rows(m) {
                            println!("  {row}");
                        }
                    }
                    if let Some(i) = &inner {
                        let next = der_space(&g, s + 1)?;
                        println!("ad_{s}: dim {}", i.dim());
                        println!(
                            "ad_{s} inside Der_(alpha^{}): {}",
                            s + 1,
                            next.as_subspace.contains(&i.as_subspace)?
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Complete { file, s } => {
            let g = load(&file)?;
            let v = is_complete(&g, s)?;
            match format {
                OutFormat::Machine => print_json(&serde_json::to_value(&v)?),
                OutFormat::Human => {
                    println!("algebra: {}", g.name());
                    println!("s: {s}");
                    println!("center_dim: {}", v.center_dim);
                    println!("der_dim: {}|{}", v.der_dim.0, v.der_dim.1);
                    println!("inner_dim: {}", v.inner_dim);
                    println!("complete: {}", v.complete);
                    println!(
                        "simply_complete: {}",
                        v.simply_complete.map_or("n/a".into(), |b| b.to_string())
                    );
                    for d in &v.diagnostics {
                        println!("note: {d}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Holomorph { file, s, out } => {
            let g = load(&file)?;
            let h = holomorph(&g, s)?;
            fs::write(&out, serialize(&h.algebra)).map_err(|e| Failure(1, format!("{}: {e}", out.display())))?;
            let summary = json!({
                "dim_even": h.algebra.dim_even(),
                "dim_odd": h.algebra.dim_odd(),
                "der_dim": [h.der.dims().0, h.der.dims().1],
                "hom_lie": h.is_hom_lie(),
                "out": out.display().to_string(),
            });
            match format {
                OutFormat::Machine => print_json(&summary),
                OutFormat::Human => {
                    println!("holomorph: {}|{}", h.algebra.dim_even(), h.algebra.dim_odd());
                    println!("hom-lie: {}", h.is_hom_lie());
                    println!("written: {}", out.display());
                }
            }
            if !h.is_hom_lie() {
                eprintln!("warning: the holomorph does not satisfy the hom-Lie axioms");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose {
            file,
            s,
            simply_complete,
        } => {
            let g = load(&file)?;
            let kind = if simply_complete {
                DecompositionKind::SimplyCompleteFactors
            } else {
                DecompositionKind::IndecomposableFactors
            };
            let d = decompose(&g, s, kind, &seed()?)?;
            let summands: Vec<_> = d
                .summands
                .iter()
                .map(|x| {
                    json!({
                        "dim_even": x.algebra.dim_even(),
                        "dim_odd": x.algebra.dim_odd(),
                        "pivots": x.subspace.pivots(),
                        "complete": x.complete,
                    })
                })
                .collect();
            match format {
                OutFormat::Machine => print_json(&json!({
                    "kind": d.kind,
                    "summands": summands,
                    "over_rationals_only_flag": d.over_rationals_only_flag,
                })),
                OutFormat::Human => {
                    println!("summands: {}", d.summands.len());
                    for (k, x) in d.summands.iter().enumerate() {
                        let c = x.complete.map_or(String::new(), |b| format!(", complete: {b}"));
                        println!(
                            "  {k}: dim {}|{}, pivots {:?}{c}",
                            x.algebra.dim_even(),
                            x.algebra.dim_odd(),
                            x.subspace.pivots()
                        );
                    }
                    println!("over_rationals_only: {}", d.over_rationals_only_flag);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckTheorems { file, s } => {
            let g = load(&file)?;
            let checks = check_theorems(&g, s, &seed()?);
            match format {
                OutFormat::Machine => print_json(&serde_json::to_value(&checks)?),
                OutFormat::Human => {
                    for c in &checks {
                        println!("{:<8} {:<34} {}", status_word(c.status), c.name, c.detail);
                    }
                }
            }
            let failed = checks.iter().any(|c| c.status == Status::Fail);
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Catalog { name, out } => {
            let g = catalog(&name)?;
            debug_assert!(validate(&g).is_hom_lie());
            fs::write(&out, serialize(&g)).map_err(|e| Failure(1, format!("{}: {e}", out.display())))?;
            if let OutFormat::Human = format {
                println!("written: {}", out.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
