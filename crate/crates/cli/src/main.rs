//! Command-line surface for the quasi-crystal graph toolkit: insertion,
//! operators, component/graph construction, isomorphism checks, skeleton
//! analysis, exact expansions, and the one-shot verification battery.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcg_core::crystal::{kashiwara_e, kashiwara_f, quasi_kashiwara_e, quasi_kashiwara_f};
use qcg_core::error::Error;
use qcg_core::graph::{
    build_component, build_delta, isomorphic, unlabelled_isomorphism, GraphKind, IsoMode,
    LabeledDigraph, UnlabelledOutcome,
};
use qcg_core::insertion::{hypoplactic_insert, schensted_insert};
use qcg_core::qsym::{fundamental_poly, monomial_poly, schur_poly, schur_to_fundamental};
use qcg_core::skeleton::{report, skeleton, SkeletonGraph};
use qcg_core::tableau::highest_weight_quasi_ribbon;
use qcg_core::verify::run_verify;
use qcg_core::word::{Composition, Partition, Word};

#[derive(Parser)]
#[command(
    name = "qcg",
    version,
    about = "Crystal and quasi-crystal graph toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InsertionKind {
    Plac,
    Hypo,
}

#[derive(Clone, Copy, ValueEnum)]
enum OperatorDirection {
    E,
    F,
}

#[derive(Clone, Copy, ValueEnum)]
enum WordGraphKind {
    Plac,
    Hypo,
}

impl From<WordGraphKind> for GraphKind {
    fn from(kind: WordGraphKind) -> GraphKind {
        match kind {
            WordGraphKind::Plac => GraphKind::Plac,
            WordGraphKind::Hypo => GraphKind::Hypo,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoModeArg {
    LabelledWeighted,
    Labelled,
    Unlabelled,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyBasis {
    /// Fundamental quasi-symmetric polynomial.
    #[value(name = "F", alias = "f")]
    F,
    /// Monomial quasi-symmetric polynomial.
    #[value(name = "M", alias = "m")]
    M,
    /// Schur polynomial.
    Schur,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a word and print the resulting tableau.
    Insert {
        #[arg(value_enum)]
        kind: InsertionKind,
        word: String,
    },
    /// Apply a raising (e) or lowering (f) operator to a word.
    Op {
        #[arg(value_enum)]
        direction: OperatorDirection,
        #[arg(value_enum)]
        kind: InsertionKind,
        index: u32,
        word: String,
    },
    /// Build the connected component of a seed word.
    Component(ComponentArgs),
    /// Build the quasi-array graph of a given size within a rank.
    Delta(DeltaArgs),
    /// Compare two exported graphs.
    Iso {
        #[arg(long, value_enum, default_value = "labelled-weighted")]
        mode: IsoModeArg,
        first: PathBuf,
        second: PathBuf,
    },
    /// Build and analyse the skeleton of a crystal component.
    Skeleton(SkeletonArgs),
    /// Expand a Schur function into fundamental quasi-symmetric functions.
    Expand {
        /// Expansion to compute; only `schur-to-F` is available.
        what: String,
        #[arg(long)]
        shape: String,
    },
    /// Print a polynomial expansion on a fixed number of variables.
    Poly {
        #[arg(value_enum)]
        basis: PolyBasis,
        /// Composition, for the quasi-symmetric bases.
        #[arg(long)]
        comp: Option<String>,
        /// Partition, for the Schur basis.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        vars: usize,
    },
    /// Run the verification battery; exit 0 iff every check passes.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_weight: u32,
        #[arg(long, default_value_t = 4)]
        max_rank: u32,
    },
    /// Write artifacts to disk.
    Export(ExportArgs),
}

#[derive(Args)]
struct ComponentArgs {
    #[arg(long, value_enum)]
    kind: WordGraphKind,
    #[arg(long)]
    rank: u32,
    #[arg(long)]
    seed: String,
    #[arg(long, value_enum, default_value = "json")]
    out: OutputFormat,
}

#[derive(Args)]
struct DeltaArgs {
    #[arg(long)]
    rank: u32,
    #[arg(long)]
    size: usize,
    #[arg(long, value_enum, default_value = "json")]
    out: OutputFormat,
}

#[derive(Args)]
struct SkeletonArgs {
    #[arg(long)]
    shape: String,
    #[arg(long)]
    rank: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    out: OutputFormat,
    /// Print per-level structure instead of the graph itself.
    #[arg(long)]
    report: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// What to export: component, delta or skeleton.
    #[arg(long, conflicts_with = "seed_figures")]
    artifact: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    #[arg(long)]
    path: Option<PathBuf>,
    #[arg(long, value_enum)]
    kind: Option<WordGraphKind>,
    #[arg(long)]
    rank: Option<u32>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    shape: Option<String>,
    /// Write every figure artifact of the reference graphs into a directory.
    #[arg(long)]
    seed_figures: bool,
    #[arg(long)]
    dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::TheoremViolation(_) | Error::Structure(_) => ExitCode::from(3),
        Error::Io { .. } => ExitCode::from(4),
        _ => ExitCode::from(2),
    }
}

fn dispatch(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Insert { kind, word } => {
            let w: Word = word.parse()?;
            match kind {
                InsertionKind::Plac => {
                    let t = schensted_insert(&w);
                    print!("{}", t.render());
                    println!("{}", serde_json::to_string(&t).expect("serializable"));
                }
                InsertionKind::Hypo => {
                    let t = hypoplactic_insert(&w);
                    print!("{}", t.render());
                    println!("{}", serde_json::to_string(&t).expect("serializable"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Op {
            direction,
            kind,
            index,
            word,
        } => {
            if index == 0 {
                return Err(Error::Parameter("operator index must be at least 1".into()));
            }
            let w: Word = word.parse()?;
            let result = match (kind, direction) {
                (InsertionKind::Plac, OperatorDirection::E) => kashiwara_e(&w, index),
                (InsertionKind::Plac, OperatorDirection::F) => kashiwara_f(&w, index),
                (InsertionKind::Hypo, OperatorDirection::E) => quasi_kashiwara_e(&w, index),
                (InsertionKind::Hypo, OperatorDirection::F) => quasi_kashiwara_f(&w, index),
            };
            match result {
                Some(v) => println!("{v}"),
                None => println!("undefined"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Component(args) => {
            let g = component_from(&args)?;
            print_graph(&g, args.out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Delta(args) => {
            let g = build_delta(args.rank, args.size)?;
            print_graph(&g, args.out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso {
            mode,
            first,
            second,
        } => {
            let g1 = read_graph(&first)?;
            let g2 = read_graph(&second)?;
            match mode {
                IsoModeArg::Unlabelled => match unlabelled_isomorphism(&g1, &g2) {
                    UnlabelledOutcome::Witness(w) => {
                        println!("isomorphic: true");
                        println!("map: {:?}", w.vertex_map);
                    }
                    UnlabelledOutcome::CertifiedNonIsomorphic(reason) => {
                        println!("isomorphic: false ({reason})");
                    }
                    UnlabelledOutcome::NoWitnessFound => {
                        println!("isomorphic: unknown (no witness found by the constructed maps)");
                    }
                },
                other => {
                    let iso_mode = match other {
                        IsoModeArg::LabelledWeighted => IsoMode::LabelledWeighted,
                        _ => IsoMode::Labelled,
                    };
                    match isomorphic(&g1, &g2, iso_mode) {
                        Some(w) => {
                            println!("isomorphic: true");
                            println!("map: {:?}", w.vertex_map);
                        }
                        None => println!("isomorphic: false"),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Skeleton(args) => {
            let s = skeleton_from(&args)?;
            if args.report {
                print!("{}", report(&s));
            } else {
                match args.out {
                    OutputFormat::Json => println!("{}", s.to_json()),
                    OutputFormat::Dot => print!("{}", s.to_dot()),
                    OutputFormat::Text => print!("{}", report(&s)),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { what, shape } => {
            if what != "schur-to-F" && what != "schur-to-f" {
                return Err(Error::Parameter(format!("unknown expansion `{what}`")));
            }
            let lambda: Partition = shape.parse()?;
            print!("{}", schur_to_fundamental(&lambda));
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly {
            basis,
            comp,
            shape,
            vars,
        } => {
            if vars == 0 {
                return Err(Error::Parameter("variable count must be at least 1".into()));
            }
            let poly = match basis {
                PolyBasis::F => {
                    let alpha: Composition = required(comp, "--comp")?.parse()?;
                    fundamental_poly(&alpha, vars)
                }
                PolyBasis::M => {
                    let beta: Composition = required(comp, "--comp")?.parse()?;
                    monomial_poly(&beta, vars)
                }
                PolyBasis::Schur => {
                    let lambda: Partition = required(shape, "--shape")?.parse()?;
                    schur_poly(&lambda, vars)
                }
            };
            print!("{poly}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_weight,
            max_rank,
        } => {
            let report = run_verify(max_weight, max_rank)?;
            print!("{}", report.render());
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Command::Export(args) => run_export(args),
    }
}

fn required(value: Option<String>, flag: &str) -> Result<String, Error> {
    value.ok_or_else(|| Error::Parameter(format!("{flag} is required here")))
}

fn component_from(args: &ComponentArgs) -> Result<LabeledDigraph, Error> {
    let seed: Word = args.seed.parse()?;
    build_component(&seed, args.kind.into(), args.rank)
}

fn skeleton_from(args: &SkeletonArgs) -> Result<SkeletonGraph, Error> {
    let lambda: Partition = args.shape.parse()?;
    skeleton(&lambda, args.rank)
}

fn print_graph(g: &LabeledDigraph, format: OutputFormat) {
    print!("{}", render_graph(g, format));
}

fn render_graph(g: &LabeledDigraph, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!("{}\n", g.to_json()),
        OutputFormat::Dot => g.to_dot(),
        OutputFormat::Text => {
            let mut out = String::new();
            for (i, p) in g.vertices().iter().enumerate() {
                out.push_str(&format!("{i}: {}\n", p.label_text()));
            }
            for e in g.edges() {
                out.push_str(&format!("{} -> {} [{}]\n", e.src, e.dst, e.label));
            }
            out
        }
    }
}

fn read_graph(path: &Path) -> Result<LabeledDigraph, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    LabeledDigraph::from_json(&text)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn run_export(args: ExportArgs) -> Result<ExitCode, Error> {
    if args.seed_figures {
        let dir = args
            .dir
            .ok_or_else(|| Error::Parameter("--dir is required with --seed-figures".into()))?;
        std::fs::create_dir_all(&dir).map_err(|source| Error::Io {
            path: dir.display().to_string(),
            source,
        })?;
        seed_figures(&dir)?;
        return Ok(ExitCode::SUCCESS);
    }

    let artifact = args
        .artifact
        .as_deref()
        .ok_or_else(|| Error::Parameter("--artifact or --seed-figures is required".into()))?;
    let path = args
        .path
        .as_deref()
        .ok_or_else(|| Error::Parameter("--path is required".into()))?;
    let contents = match artifact {
        "component" => {
            let component = ComponentArgs {
                kind: args
                    .kind
                    .ok_or_else(|| Error::Parameter("--kind is required".into()))?,
                rank: args
                    .rank
                    .ok_or_else(|| Error::Parameter("--rank is required".into()))?,
                seed: required(args.seed, "--seed")?,
                out: args.format,
            };
            let g = component_from(&component)?;
            render_graph(&g, args.format)
        }
        "delta" => {
            let g = build_delta(
                args.rank
                    .ok_or_else(|| Error::Parameter("--rank is required".into()))?,
                args.size
                    .ok_or_else(|| Error::Parameter("--size is required".into()))?,
            )?;
            render_graph(&g, args.format)
        }
        "skeleton" => {
            let lambda: Partition = required(args.shape, "--shape")?.parse()?;
            let s = skeleton(&lambda, args.rank)?;
            match args.format {
                OutputFormat::Json => format!("{}\n", s.to_json()),
                OutputFormat::Dot => s.to_dot(),
                OutputFormat::Text => report(&s),
            }
        }
        other => return Err(Error::Parameter(format!("unknown artifact `{other}`"))),
    };
    write_file(path, &contents)?;
    Ok(ExitCode::SUCCESS)
}

/// Writes the reference figure set: the rank-3 components and their crystal
/// union, a rank-6 truncation of the infinite-rank picture, the size-4
/// quasi-array graph, the pair of transport-isomorphic components, the row
/// and hook lattice components with coordinates, and the skeleton of
/// (3,2,2).
fn seed_figures(dir: &Path) -> Result<(), Error> {
    let mut jobs: Vec<(String, LabeledDigraph)> = Vec::new();

    for (name, seed, kind, rank) in [
        ("crystal_quasicrystal_hypo3_211", "211", GraphKind::Hypo, 3),
        ("crystal_quasicrystal_hypo3_212", "212", GraphKind::Hypo, 3),
        ("crystal_quasicrystal_plac3_211", "211", GraphKind::Plac, 3),
        (
            "quasicrystal_truncated_hypo6_211",
            "211",
            GraphKind::Hypo,
            6,
        ),
        (
            "quasicrystal_truncated_hypo6_212",
            "212",
            GraphKind::Hypo,
            6,
        ),
        (
            "quasicrystal_truncated_plac6_211",
            "211",
            GraphKind::Plac,
            6,
        ),
        ("isom_pair_hypo5_1321", "1321", GraphKind::Hypo, 5),
        ("isom_pair_hypo4_1121", "1121", GraphKind::Hypo, 4),
    ] {
        let word: Word = seed.parse()?;
        jobs.push((name.to_string(), build_component(&word, kind, rank)?));
    }
    jobs.push(("delta_qa3_4".to_string(), build_delta(3, 4)?));

    let row = build_component(&"111".parse::<Word>()?, GraphKind::Hypo, 4)?;
    let hook_seed = highest_weight_quasi_ribbon(&Composition::new(vec![2, 1])?).column_reading();
    let hook = build_component(&hook_seed, GraphKind::Hypo, 5)?;
    for (name, g) in [("gamma_hypo_4_3", &row), ("gamma_hypo_4_21_shifted", &hook)] {
        let coords = g.polytope_coordinates()?;
        let text = serde_json::to_string(&coords).expect("serializable");
        write_file(
            &dir.join(format!("{name}_coords.json")),
            &format!("{text}\n"),
        )?;
    }
    jobs.push(("gamma_hypo_4_3".to_string(), row));
    jobs.push(("gamma_hypo_4_21_shifted".to_string(), hook));

    for (name, g) in &jobs {
        write_file(
            &dir.join(format!("{name}.json")),
            &format!("{}\n", g.to_json()),
        )?;
        write_file(&dir.join(format!("{name}.dot")), &g.to_dot())?;
    }

    let skel = skeleton(&Partition::new(vec![3, 2, 2])?, None)?;
    write_file(&dir.join("skel_322.json"), &format!("{}\n", skel.to_json()))?;
    write_file(&dir.join("skel_322.dot"), &skel.to_dot())?;
    write_file(&dir.join("skel_322_report.txt"), &report(&skel))?;
    Ok(())
}
