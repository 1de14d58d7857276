//! Command-line interface: normal forms, products, basis enumeration,
//! (co)homology dimensions, the four calculus operations, and the
//! verification suites with report emission.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ttcalc::calculus::{cap, connes_b0, cup, gerstenhaber};
use ttcalc::freealg::{basis_words, multiply, normal_form, parse_poly};
use ttcalc::homology::{cohomology_space, hh0_express, homology_space};
use ttcalc::paperdata::{instantiate, ClassLabel, Instantiated};
use ttcalc::verify::{
    render_csv, render_json, render_latex, render_text, run_suite, Config, VerdictReport,
};

#[derive(Parser)]
#[command(
    name = "ttcalc",
    about = "Exact Hochschild homology, cohomology and Tamarkin-Tsygan calculus of k<x,y,z>/(x^2+yx, xz, zy)",
    version
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Weight bound W for per-weight sweeps.
    #[arg(long, default_value_t = 10, global = true)]
    max_weight: u32,
    /// Bound on family exponents when instantiating classes.
    #[arg(long, default_value_t = 3, global = true)]
    param_bound: i64,
    /// Bound on the block counts p, q.
    #[arg(long, default_value_t = 2, global = true)]
    pq_bound: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for the randomized rewriting checks.
    #[arg(long, default_value_t = 2024, global = true)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a polynomial expression to its normal form in A.
    Nf { expr: String },
    /// Multiply two expressions in A.
    Mul { left: String, right: String },
    /// List the monomial basis of A at one weight, with family types.
    Basis {
        #[arg(long)]
        weight: u32,
    },
    /// Dimension and class data of HH_n at one weight.
    Homology {
        #[arg(long)]
        degree: u8,
        #[arg(long)]
        weight: u32,
    },
    /// Dimension and class data of HH^degree at one internal weight.
    Cohomology {
        #[arg(long, allow_hyphen_values = true)]
        degree: i8,
        #[arg(long, allow_hyphen_values = true)]
        weight: i64,
    },
    /// Cup product of two named cohomology classes.
    Cup { left: String, right: String },
    /// Cap product of a named cohomology class on a named homology class.
    Cap { cochain: String, chain: String },
    /// Connes differential of a named degree-0 class (or an expression).
    Connes { class: String },
    /// Gerstenhaber bracket of two named cohomology classes.
    Bracket { left: String, right: String },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Emit the verified table records of one suite (LaTeX by default).
    Emit {
        #[arg(long)]
        suite: String,
    },
}

fn config_of(g: &GlobalOpts) -> Config {
    Config {
        max_weight: g.max_weight,
        param_bound: g.param_bound,
        pq_bound: g.pq_bound,
        seed: g.seed,
        ..Config::default()
    }
}

fn parse_label(text: &str) -> Result<ClassLabel> {
    ClassLabel::parse(text).map_err(|e| anyhow!("{e}"))
}

fn cochain_of(text: &str) -> Result<ttcalc::koszul::KoszulCochain> {
    let label = parse_label(text)?;
    match instantiate(&label).map_err(|e| anyhow!("{e}"))? {
        Instantiated::Cochain(c) => Ok(c),
        Instantiated::Chain(_) => bail!("'{text}' names a homology class, not a cohomology class"),
    }
}

fn chain_of(text: &str) -> Result<ttcalc::koszul::KoszulChain> {
    let label = parse_label(text)?;
    match instantiate(&label).map_err(|e| anyhow!("{e}"))? {
        Instantiated::Chain(c) => Ok(c),
        Instantiated::Cochain(_) => {
            bail!("'{text}' names a cohomology class, not a homology class")
        }
    }
}

fn emit_report(report: &VerdictReport, format: Format) {
    let rendered = match format {
        Format::Text => render_text(report),
        Format::Json => render_json(report),
        Format::Csv => render_csv(report),
        Format::Latex => render_latex(report),
    };
    print!("{rendered}");
}

fn print_class(coords: Option<ttcalc::homology::CohClassCoords>, format: Format) {
    match format {
        Format::Json => match coords {
            None => println!("{}", serde_json::json!({"expressed": false})),
            Some(c) => println!(
                "{}",
                serde_json::json!({"expressed": true, "class": c.to_combination().to_json()})
            ),
        },
        _ => match coords {
            None => println!("<not expressible in the named basis at this weight>"),
            Some(c) => {
                let comb = c.to_combination();
                if comb.is_zero() {
                    println!("0");
                } else {
                    println!("{comb}");
                }
            }
        },
    }
}

fn run(cli: Cli) -> Result<i32> {
    let config = config_of(&cli.global);
    let budget = config.solve_budget;
    match cli.command {
        Command::Nf { expr } => {
            let p = parse_poly(&expr).context("parsing expression")?;
            println!("{}", normal_form(&p));
        }
        Command::Mul { left, right } => {
            let l = normal_form(&parse_poly(&left).context("parsing left factor")?);
            let r = normal_form(&parse_poly(&right).context("parsing right factor")?);
            println!("{}", multiply(&l, &r));
        }
        Command::Basis { weight } => {
            let basis = basis_words(weight);
            match cli.global.format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = basis
                        .iter()
                        .map(|t| {
                            serde_json::json!({
                                "monomial": t.expand().to_string(),
                                "type": t.type_id,
                                "n": t.ns,
                                "m": t.ms,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({"weight": weight, "dim": basis.len(), "basis": rows})
                    );
                }
                _ => {
                    println!("dim A_{weight} = {}", basis.len());
                    for t in &basis {
                        println!("{}  ({t})", t.expand());
                    }
                }
            }
        }
        Command::Homology { degree, weight } => {
            if degree > 5 {
                bail!("homological degree must be at most 5");
            }
            let slice = homology_space(degree, weight);
            if cli.global.format == Format::Json {
                println!(
                    "{}",
                    serde_json::json!({
                        "degree": degree,
                        "weight": weight,
                        "dim": slice.dim,
                        "cycles": slice.cycles.dim(),
                        "boundaries": slice.boundaries.dim(),
                    })
                );
            } else {
                println!(
                    "HH_{degree} at weight {weight}: dimension {} (cycles {}, boundaries {})",
                    slice.dim,
                    slice.cycles.dim(),
                    slice.boundaries.dim()
                );
            }
        }
        Command::Cohomology { degree, weight } => {
            if !(-4..=0).contains(&degree) {
                bail!("cohomological degree must lie in -4..=0");
            }
            let slice = cohomology_space((-degree) as u8, weight);
            if cli.global.format == Format::Json {
                println!(
                    "{}",
                    serde_json::json!({
                        "degree": degree,
                        "weight": weight,
                        "dim": slice.dim,
                        "cocycles": slice.cycles.dim(),
                        "coboundaries": slice.boundaries.dim(),
                    })
                );
            } else {
                println!(
                    "HH^{degree} at internal weight {weight}: dimension {} (cocycles {}, coboundaries {})",
                    slice.dim,
                    slice.cycles.dim(),
                    slice.boundaries.dim()
                );
            }
        }
        Command::Cup { left, right } => {
            let f = cochain_of(&left)?;
            let g = cochain_of(&right)?;
            if usize::from(f.degree) + usize::from(g.degree) > 4 {
                // V_{m+n} = 0 past homological degree 4
                print_class(
                    Some(ttcalc::homology::CohClassCoords {
                        degree: 0,
                        weight: 0,
                        coords: vec![],
                    }),
                    cli.global.format,
                );
                return Ok(0);
            }
            let c = cup(&f, &g);
            if c.is_zero() {
                print_class(
                    Some(ttcalc::homology::CohClassCoords {
                        degree: -((f.degree + g.degree) as i8),
                        weight: 0,
                        coords: vec![],
                    }),
                    cli.global.format,
                );
            } else {
                let coords = ttcalc::homology::express_in_paper_basis(
                    &Instantiated::Cochain(c.clone()),
                    budget,
                );
                print_class(coords, cli.global.format);
            }
        }
        Command::Cap { cochain, chain } => {
            let f = cochain_of(&cochain)?;
            let z = chain_of(&chain)?;
            if f.degree > z.degree {
                print_class(
                    Some(ttcalc::homology::CohClassCoords {
                        degree: 0,
                        weight: 0,
                        coords: vec![],
                    }),
                    cli.global.format,
                );
                return Ok(0);
            }
            let c = cap(&f, &z);
            if c.degree == 0 {
                let comb = hh0_express(&c.into_poly());
                if cli.global.format == Format::Json {
                    println!(
                        "{}",
                        serde_json::json!({"expressed": true, "class": comb.to_json()})
                    );
                } else if comb.is_zero() {
                    println!("0");
                } else {
                    println!("{comb}");
                }
            } else {
                let coords = ttcalc::homology::express_in_paper_basis(
                    &Instantiated::Chain(c.clone()),
                    budget,
                );
                print_class(coords, cli.global.format);
            }
        }
        Command::Connes { class } => {
            let poly = match parse_label(&class) {
                Ok(label) if label.family.degree() == 0 => instantiate(&label)
                    .map_err(|e| anyhow!("{e}"))?
                    .chain()
                    .into_poly(),
                _ => normal_form(&parse_poly(&class).context("parsing expression")?),
            };
            let b = connes_b0(&poly);
            let coords =
                ttcalc::homology::express_in_paper_basis(&Instantiated::Chain(b.clone()), budget);
            print_class(coords, cli.global.format);
        }
        Command::Bracket { left, right } => {
            let f = cochain_of(&left)?;
            let g = cochain_of(&right)?;
            if usize::from(f.degree) + usize::from(g.degree) > 5 {
                bail!("bracket target degree exceeds 4");
            }
            let r = gerstenhaber(&f, &g, budget);
            print_class(r.coords, cli.global.format);
        }
        Command::Verify { suite } => {
            let report =
                run_suite(&suite, &config).ok_or_else(|| anyhow!("unknown suite '{suite}'"))?;
            emit_report(&report, cli.global.format);
            return Ok(if report.all_passed() { 0 } else { 1 });
        }
        Command::Emit { suite } => {
            let report =
                run_suite(&suite, &config).ok_or_else(|| anyhow!("unknown suite '{suite}'"))?;
            let format = if cli.global.format == Format::Text {
                Format::Latex
            } else {
                cli.global.format
            };
            emit_report(&report, format);
            return Ok(if report.all_passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() {
    // dying quietly on a closed pipe is friendlier than a panic for
    // `ttcalc basis | head`-style usage
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if cli.global.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.global.jobs)
            .build_global()
            .ok();
    }
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
