mod io;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use cycle_systems::bijection::{
    basis_to_coparking, build_dc_tree, coparking_to_basis, generalized_dc_tree, leaves,
    leaves_tsv, tree_dot, GroundOrdering,
};
use cycle_systems::cycle_system::{
    find_fundamental_circuit_system, firing_matrix, search_circuit_systems, CycleSystem,
    SearchBudget, SearchMode,
};
use cycle_systems::graph::MultiGraph;
use cycle_systems::matroid::Matroid;
use cycle_systems::{coparking, tutte, Error, Result};
use rayon::prelude::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cyclesys", version, about = "Cycle systems on matroids: searches, coparking functions, Tutte polynomials, and basis bijections")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Output format where the command supports more than one
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Time budget in milliseconds for searches and Tutte computation
    #[arg(long, global = true, value_name = "MS")]
    budget_ms: Option<u64>,

    /// Directory for search/census checkpoints (resumed when present)
    #[arg(long, global = true, value_name = "DIR")]
    checkpoint: Option<PathBuf>,

    /// Seed for randomized cross-checks (reserved; commands here are deterministic)
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    seed: u64,

    /// Ground-set order ξ as a comma-separated label list, smallest first
    #[arg(long, global = true, value_name = "LABELS")]
    ordering: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    First,
    All,
    Count,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the circuits of the input matroid as JSON lines
    Circuits { input: PathBuf },

    /// Search for circuit systems
    Search {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
        /// Print only the number of systems (same as --mode count)
        #[arg(long)]
        count: bool,
        /// Re-verify structural theorems on every hit
        #[arg(long)]
        check_theorems: bool,
    },

    /// Per-graph survey over a file of graph6 lines
    Census { input: PathBuf },

    /// Full JSON report: Tutte data plus cycle-system diagnostics
    Report {
        input: PathBuf,
        /// Cycle system JSON; when absent the first found circuit system is used
        #[arg(long)]
        system: Option<PathBuf>,
    },

    /// Coparking functions of a cycle system
    Coparking {
        #[command(subcommand)]
        sub: CoparkingCmd,
    },

    /// Basis ↔ coparking bijection (deletion/contraction algorithms)
    Bijection {
        #[command(subcommand)]
        sub: BijectionCmd,
    },

    /// Tutte polynomial, h-vector, and f-vector
    Tutte { input: PathBuf },

    /// Deletion/contraction tree of a cycle system
    Dctree {
        input: PathBuf,
        #[arg(long)]
        system: PathBuf,
        /// Relax the verification: any cycle family with nonempty unique
        /// unions along the way; prints leaf vectors only
        #[arg(long)]
        generalized: bool,
    },
}

#[derive(Subcommand)]
enum CoparkingCmd {
    /// Run the burning loop on one vector
    Verify {
        input: PathBuf,
        #[arg(long)]
        system: PathBuf,
        /// Candidate vector, e.g. "2,0,2"
        #[arg(long)]
        vector: String,
    },
    /// Enumerate all coparking functions
    Enumerate {
        input: PathBuf,
        #[arg(long)]
        system: PathBuf,
    },
}

#[derive(Subcommand)]
enum BijectionCmd {
    /// Map a basis to its coparking function
    ToCoparking {
        input: PathBuf,
        #[arg(long)]
        system: PathBuf,
        /// Basis as comma-separated labels, e.g. "1,3,6,7"
        #[arg(long)]
        basis: String,
    },
    /// Map a coparking function to its basis
    ToBasis {
        input: PathBuf,
        #[arg(long)]
        system: PathBuf,
        /// Coparking vector, e.g. "2,0,2"
        #[arg(long)]
        vector: String,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::Budget { .. } => 3,
        Error::Domain(_) | Error::Precondition(_) | Error::Stall { .. } => 4,
        Error::Internal(_) | Error::Io(_) => 1,
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(exit_code(&e));
    }
}

fn ordering_of(m: &Matroid, spec: &Option<String>) -> Result<GroundOrdering> {
    match spec {
        Some(s) => GroundOrdering::from_labels(m.ground(), io::parse_labels(s)),
        None => Ok(GroundOrdering::natural(m.ground())),
    }
}

fn budget_of(cli_budget: Option<u64>) -> SearchBudget {
    SearchBudget {
        time_limit: cli_budget.map(Duration::from_millis),
        max_level_size: None,
    }
}

fn run(cli: Cli) -> Result<()> {
    match &cli.cmd {
        Cmd::Circuits { input } => {
            let m = io::load_matroid(input)?;
            for c in m.circuits() {
                println!("{}", json!(m.ground().labels_of(&c)));
            }
            Ok(())
        }
        Cmd::Search { input, mode, count, check_theorems } => {
            let m = io::load_matroid(input)?;
            let mode = if *count {
                SearchMode::Count
            } else {
                match mode {
                    Mode::First => SearchMode::First,
                    Mode::All => SearchMode::All,
                    Mode::Count => SearchMode::Count,
                }
            };
            let outcome = search_circuit_systems(
                &m,
                mode,
                &budget_of(cli.budget_ms),
                cli.checkpoint.as_deref(),
            )?;
            if mode == SearchMode::Count {
                println!("{}", outcome.count);
                return Ok(());
            }
            for key in &outcome.systems {
                let cs = outcome.system(&m, key);
                if *check_theorems {
                    check_system_theorems(&m, &cs)?;
                }
                println!("{}", json!({ "cycles": cs.cycles_as_labels() }));
            }
            Ok(())
        }
        Cmd::Census { input } => census(input, &cli),
        Cmd::Report { input, system } => report(input, system.as_deref(), &cli),
        Cmd::Coparking { sub } => match sub {
            CoparkingCmd::Verify { input, system, vector } => {
                let m = io::load_matroid(input)?;
                let cs = io::load_system(system, &m)?;
                let a = io::parse_vector(vector)?;
                match coparking::verify(&cs, &a)? {
                    coparking::Verify::Accepted { removal_order } => {
                        let order: Vec<usize> = removal_order.iter().map(|i| i + 1).collect();
                        println!("{}", json!({ "coparking": true, "removal_order": order }));
                    }
                    coparking::Verify::Rejected { stuck } => {
                        let witness: Vec<usize> = stuck.iter().map(|i| i + 1).collect();
                        println!("{}", json!({ "coparking": false, "witness": witness }));
                    }
                }
                Ok(())
            }
            CoparkingCmd::Enumerate { input, system } => {
                let m = io::load_matroid(input)?;
                let cs = io::load_system(system, &m)?;
                if cli.format == Format::Dot {
                    print!("{}", coparking::hasse_dot(&cs));
                    return Ok(());
                }
                for a in coparking::enumerate(&cs) {
                    let d = coparking::degree(&a);
                    println!("{}", json!({ "a": a, "degree": d }));
                }
                Ok(())
            }
        },
        Cmd::Bijection { sub } => match sub {
            BijectionCmd::ToCoparking { input, system, basis } => {
                let m = io::load_matroid(input)?;
                let cs = io::load_system(system, &m)?;
                let xi = ordering_of(&m, &cli.ordering)?;
                let b = m.ground().subset_of_labels(io::parse_labels(basis))?;
                let a = basis_to_coparking(&cs, &xi, &b)?;
                println!("{}", json!({ "a": a }));
                Ok(())
            }
            BijectionCmd::ToBasis { input, system, vector } => {
                let m = io::load_matroid(input)?;
                let cs = io::load_system(system, &m)?;
                let xi = ordering_of(&m, &cli.ordering)?;
                let a = io::parse_vector(vector)?;
                let b = coparking_to_basis(&cs, &xi, &a)?;
                println!("{}", json!({ "basis": m.ground().labels_of(&b) }));
                Ok(())
            }
        },
        Cmd::Tutte { input } => {
            let m = io::load_matroid(input)?;
            let t = tutte::tutte_with_budget(&m, cli.budget_ms.map(Duration::from_millis))?;
            println!(
                "{}",
                json!({
                    "tutte": t.to_json(),
                    "h_vector": tutte::h_vector(&m)?,
                    "f_vector": tutte::f_vector(&m),
                    "bases": t.eval(1, 1),
                })
            );
            Ok(())
        }
        Cmd::Dctree { input, system, generalized } => {
            let m = io::load_matroid(input)?;
            let xi = ordering_of(&m, &cli.ordering)?;
            if *generalized {
                let cycles = io::load_cycles_unverified(system, &m)?;
                for a in generalized_dc_tree(&m, &cycles, &xi)? {
                    println!("{}", json!({ "a": a }));
                }
                return Ok(());
            }
            let cs = io::load_system(system, &m)?;
            let tree = build_dc_tree(&cs, &xi)?;
            match cli.format {
                Format::Dot => print!("{}", tree_dot(&tree)),
                Format::Tsv => print!("{}", leaves_tsv(&tree)),
                Format::Json => {
                    for (basis, a) in leaves(&tree) {
                        println!(
                            "{}",
                            json!({ "basis": m.ground().labels_of(&basis), "a": a })
                        );
                    }
                }
            }
            Ok(())
        }
    }
}

/// Sanity assertions requested by `search --check-theorems`: every member of
/// a hit is a circuit, and the cycles span a g-dimensional GF(2) space.
fn check_system_theorems(m: &Matroid, cs: &CycleSystem) -> Result<()> {
    for c in cs.cycles() {
        if !m.is_dependent(c) {
            return Err(Error::Internal("search hit contains an independent set".into()));
        }
        // minimal dependent: every proper subset independent
        if c.iter().any(|e| m.is_dependent(&c.without(e))) {
            return Err(Error::Internal("search hit contains a non-circuit".into()));
        }
    }
    if m.circuit_space_rank(cs.cycles()) != m.corank() {
        return Err(Error::Internal(
            "system cycles do not span the cycle space".into(),
        ));
    }
    Ok(())
}

// ----- report -----

fn report(input: &std::path::Path, system: Option<&std::path::Path>, cli: &Cli) -> Result<()> {
    let m = io::load_matroid(input)?;
    let t = tutte::tutte_with_budget(&m, cli.budget_ms.map(Duration::from_millis))?;
    let h = tutte::h_vector(&m)?;
    let mut out = json!({
        "ground": m.ground().labels(),
        "rank": m.full_rank(),
        "corank": m.corank(),
        "tutte": t.to_json(),
        "h_vector": h,
        "f_vector": tutte::f_vector(&m),
    });
    let cs = match system {
        Some(path) => Some(io::load_system(path, &m)?),
        None => {
            let outcome = search_circuit_systems(
                &m,
                SearchMode::First,
                &budget_of(cli.budget_ms),
                cli.checkpoint.as_deref(),
            )?;
            outcome
                .systems
                .first()
                .map(|key| outcome.system(&m, key))
        }
    };
    if let Some(cs) = cs {
        let xi = ordering_of(&m, &cli.ordering)?;
        let fm = firing_matrix(&cs);
        let copark = coparking::enumerate(&cs);
        let mut table = Vec::new();
        for b in m.bases() {
            let a = basis_to_coparking(&cs, &xi, &b)?;
            table.push(json!({
                "basis": m.ground().labels_of(&b),
                "a": a,
                "degree": coparking::degree(&a),
            }));
        }
        let obj = out.as_object_mut().unwrap();
        obj.insert("cycles".into(), json!(cs.cycles_as_labels()));
        obj.insert("fundamental".into(), json!(cs.is_fundamental()));
        obj.insert("degree_vector".into(), json!(coparking::degree_vector(&cs)));
        obj.insert("pure".into(), json!(coparking::is_pure(&cs)));
        obj.insert("coparking_count".into(), json!(copark.len()));
        obj.insert("max_degree".into(), json!(coparking::max_degree(&cs)));
        obj.insert(
            "main_theorem".into(),
            json!(tutte::check_main_theorem(&m, &cs)?),
        );
        obj.insert("firing_matrix".into(), json!(fm.entries));
        obj.insert("m_matrix".into(), json!(fm.is_m_matrix()));
        obj.insert("bijection".into(), json!(table));
    }
    let pretty =
        serde_json::to_string_pretty(&out).map_err(|e| Error::Internal(e.to_string()))?;
    println!("{pretty}");
    Ok(())
}

// ----- census -----

struct CensusRow {
    graph6: String,
    body: String,
}

fn census_row(line: &str, budget_ms: Option<u64>) -> CensusRow {
    let start = Instant::now();
    let body = (|| -> Result<String> {
        let g = MultiGraph::parse_graph6(line)?;
        let m = Matroid::graphic(g)?;
        let circuits = m.circuits();
        let budget = budget_of(budget_ms);
        let has_system = search_circuit_systems(&m, SearchMode::First, &budget, None)?
            .count
            > 0;
        let has_fundamental = find_fundamental_circuit_system(&m).is_some();
        Ok(format!(
            "{}\t{}\t{}\t{}",
            m.corank(),
            circuits.len(),
            has_system,
            has_fundamental
        ))
    })();
    let elapsed = start.elapsed().as_millis();
    let body = match body {
        Ok(b) => format!("{b}\t{elapsed}"),
        Err(e) => format!("error: {e}"),
    };
    CensusRow {
        graph6: line.to_string(),
        body,
    }
}

fn census(input: &std::path::Path, cli: &Cli) -> Result<()> {
    let text = std::fs::read_to_string(input)?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();

    // resume: previously finished rows keyed by graph6 string
    let ckpt_file = cli.checkpoint.as_ref().map(|d| d.join("census.tsv"));
    let mut done: std::collections::HashMap<String, String> = std::collections::HashMap::new();
    if let Some(f) = &ckpt_file {
        if let Ok(prev) = std::fs::read_to_string(f) {
            for row in prev.lines() {
                if let Some((g6, body)) = row.split_once('\t') {
                    done.insert(g6.to_string(), body.to_string());
                }
            }
        }
    }

    let rows: Vec<CensusRow> = lines
        .par_iter()
        .map(|line| match done.get(*line) {
            Some(body) => CensusRow {
                graph6: line.to_string(),
                body: body.clone(),
            },
            None => census_row(line, cli.budget_ms),
        })
        .collect();

    println!("graph6\tcorank\tcircuits\thas_circuit_system\thas_fundamental\telapsed_ms");
    let mut ckpt_out = String::new();
    for row in &rows {
        println!("{}\t{}", row.graph6, row.body);
        ckpt_out.push_str(&format!("{}\t{}\n", row.graph6, row.body));
    }
    if let Some(f) = &ckpt_file {
        if let Some(dir) = f.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(f, ckpt_out)?;
    }
    Ok(())
}
