use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use softtop::connectivity::{is_soft_connected, is_soft_connected_subset, is_soft_path, is_soft_path_connected};
use softtop::enumerate::enumerate_soft_topologies;
use softtop::io::{load_space, read_document};
use softtop::soft_group::{product_soft_top_group, verify_soft_topological_group};
use softtop::suite::{format_report, run_suite, search_counterexample, SearchOutcome};
use softtop::topology::{inverse_images_all_open, is_soft_continuous, product_topology};
use softtop::{Error, MappingDocument, PathDocument, Result, SoftTopGroup, SpaceDocument, SuiteConfig};

#[derive(Parser)]
#[command(name = "softtop", version, about = "Check soft topologies, soft topological groups and their morphisms")]
struct Cli {
    /// Worker threads for suite and search runs.
    #[arg(long, env = "SOFTTOP_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the soft topology axioms for a space document.
    CheckTopology { file: PathBuf },
    /// Check soft continuity and open preimages for a mapping document.
    CheckContinuity { mapfile: PathBuf },
    /// Check soft connectedness (and path connectedness) of a space or subset.
    CheckConnected {
        file: PathBuf,
        /// Comma-separated element labels.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<String>>,
    },
    /// Check that a step path is a soft path.
    CheckPath { pathfile: PathBuf },
    /// Verify that a space document with a group block is a soft topological group.
    CheckGroup { file: PathBuf },
    /// Verify a morphism of soft topological groups.
    CheckMorphism { file: PathBuf },
    /// Print the product of two spaces (or groups) as a space document.
    Product { left: PathBuf, right: PathBuf },
    /// Print every soft topology on a universe of N points with M parameters.
    Enumerate {
        #[arg(long)]
        universe: usize,
        #[arg(long)]
        params: usize,
    },
    /// Run the property suite.
    Suite {
        #[arg(long = "prop")]
        props: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = SuiteConfig::default().budget)]
        budget: usize,
    },
    /// Search for a counterexample to one property.
    Search {
        #[arg(long)]
        prop: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = SuiteConfig::default().budget)]
        budget: usize,
    },
}

/// Did the checked statement hold?
type Outcome = Result<bool>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let threads = cli.threads;
    match cli.command {
        Command::CheckTopology { file } => check_topology(&file),
        Command::CheckContinuity { mapfile } => check_continuity(&mapfile),
        Command::CheckConnected { file, subset } => check_connected(&file, subset.as_deref()),
        Command::CheckPath { pathfile } => check_path(&pathfile),
        Command::CheckGroup { file } => check_group(&file),
        Command::CheckMorphism { file } => check_morphism(&file),
        Command::Product { left, right } => product(&left, &right),
        Command::Enumerate { universe, params } => enumerate(universe, params),
        Command::Suite { props, seed, budget } => {
            let cfg = SuiteConfig { seed, budget, threads };
            let cases = run_suite(&props, &cfg)?;
            print!("{}", format_report(&cases, &cfg));
            Ok(cases.iter().all(|c| c.holds()))
        }
        Command::Search { prop, seed, budget } => match search_counterexample(&prop, budget, seed, threads)? {
            SearchOutcome::Found(case) => {
                println!("{}", case.line());
                Ok(false)
            }
            SearchOutcome::Exhausted { tried } => {
                println!("exhausted {prop} tried={tried} seed={seed} budget={budget}");
                Ok(true)
            }
        },
    }
}

fn check_topology(file: &Path) -> Outcome {
    let (text, _) = read_document(file)?;
    let report = SpaceDocument::parse(&text)?.check()?;
    println!("{report}");
    Ok(report.is_valid())
}

fn check_continuity(file: &Path) -> Outcome {
    let (text, dir) = read_document(file)?;
    let (s, t, m) = MappingDocument::parse(&text)?.to_mapping(dir.as_deref())?;
    let (s, t) = (s.topology, t.topology);
    let continuous = is_soft_continuous(&m, &s, &t)?;
    match continuous.witness() {
        None => println!("soft continuous: true"),
        Some((x, w)) => println!("soft continuous: false (at {}, open {w})", s.universe().label(*x)),
    }
    match inverse_images_all_open(&m, &s, &t)?.witness() {
        None => println!("inverse images open: true"),
        Some(w) => println!("inverse images open: false (preimage of {w} is not open)"),
    }
    Ok(continuous.holds())
}

fn check_connected(file: &Path, subset: Option<&[String]>) -> Outcome {
    let t = load_space(file)?.topology;
    let (report, target) = match subset {
        None => (is_soft_connected(&t), t.clone()),
        Some(names) => {
            let a = t.universe().subset_of(names)?;
            let sub = softtop::topology::subspace_topology(&t, a)?;
            (is_soft_connected_subset(&t, a)?, sub)
        }
    };
    match report.witness {
        None => println!("soft connected: true"),
        Some((a, b)) => {
            let u = target.universe();
            println!("soft connected: false (separated by {{{}}} and {{{}}})", u.names(a).join(","), u.names(b).join(","));
        }
    }
    match is_soft_path_connected(&target).witness() {
        None => println!("soft path connected: true"),
        Some((x, y)) => {
            let u = target.universe();
            println!("soft path connected: false (no soft path from {} to {})", u.label(*x), u.label(*y));
        }
    }
    Ok(report.connected)
}

fn check_path(file: &Path) -> Outcome {
    let (text, dir) = read_document(file)?;
    let (space, p) = PathDocument::parse(&text)?.to_path(dir.as_deref())?;
    let v = is_soft_path(&p, &space.topology)?;
    match v.witness() {
        None => println!("soft path: true"),
        Some(f) => println!("soft path: false ({f})"),
    }
    Ok(v.holds())
}

fn check_group(file: &Path) -> Outcome {
    let space = load_space(file)?;
    let g = space.group.ok_or_else(|| Error::Schema("group: missing group block".into()))?;
    let v = verify_soft_topological_group(&g, &space.topology)?;
    match v.witness() {
        None => println!("soft topological group: true"),
        Some(w) => println!("soft topological group: false ({})", w.describe(&g)),
    }
    Ok(v.holds())
}

fn check_morphism(file: &Path) -> Outcome {
    let (text, dir) = read_document(file)?;
    match MappingDocument::parse(&text)?.to_morphism(dir.as_deref()) {
        Ok(_) => {
            println!("morphism: true");
            Ok(true)
        }
        Err(e @ (Error::NotHomomorphism(_) | Error::NotContinuous(_))) => {
            println!("morphism: false ({e})");
            Ok(false)
        }
        Err(e) => Err(e),
    }
}

fn product(left: &Path, right: &Path) -> Outcome {
    let (a, b) = (load_space(left)?, load_space(right)?);
    let doc = match (a.group, b.group) {
        (Some(ga), Some(gb)) => {
            let sa = SoftTopGroup::new(ga, a.topology)?;
            let sb = SoftTopGroup::new(gb, b.topology)?;
            SpaceDocument::from_group(&product_soft_top_group(&sa, &sb)?)
        }
        _ => SpaceDocument::from_topology(&product_topology(&a.topology, &b.topology)?),
    };
    println!("{}", doc.to_json());
    Ok(true)
}

fn enumerate(universe: usize, params: usize) -> Outcome {
    let all = enumerate_soft_topologies(universe, params)?;
    for t in &all {
        println!("{}", compact_line(&SpaceDocument::from_topology(t)));
    }
    eprintln!("{} soft topologies", all.len());
    Ok(true)
}

/// One document per line.
fn compact_line(doc: &SpaceDocument) -> String {
    doc.to_json().lines().map(str::trim).collect::<Vec<_>>().join("")
}
