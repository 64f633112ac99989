//! Input loading: graphs from graph6 or edge lists, matroids from JSON,
//! cycle systems from JSON.

use std::path::Path;

use cycle_systems::cycle_system::CycleSystem;
use cycle_systems::graph::MultiGraph;
use cycle_systems::matroid::Matroid;
use cycle_systems::subset::Subset;
use cycle_systems::{Error, Result};
use serde::Deserialize;

#[derive(Deserialize)]
struct MatroidJson {
    #[serde(default)]
    ground: Option<Vec<String>>,
    #[serde(default)]
    circuits: Option<Vec<Vec<String>>>,
    #[serde(default)]
    uniform: Option<(usize, usize)>,
    #[serde(default)]
    graph: Option<GraphJson>,
}

#[derive(Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize, String)>,
}

#[derive(Deserialize)]
struct SystemJson {
    cycles: Vec<Vec<String>>,
}

fn parse_err(msg: impl std::fmt::Display) -> Error {
    Error::Parse {
        line: 0,
        message: msg.to_string(),
    }
}

/// Load a matroid. Format by extension: `.g6` graph6 (first line),
/// `.json` matroid JSON, anything else an edge list (`label u v` per line).
pub fn load_matroid(path: &Path) -> Result<Matroid> {
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| parse_err("empty graph6 file"))?;
            Matroid::graphic(MultiGraph::parse_graph6(line.trim())?)
        }
        Some("json") => {
            let spec: MatroidJson = serde_json::from_str(&text).map_err(parse_err)?;
            if let Some((m, n)) = spec.uniform {
                return Matroid::uniform(m, n);
            }
            if let Some(g) = spec.graph {
                let edges: Vec<(usize, usize, String)> = g.edges;
                return Matroid::graphic(MultiGraph::new(g.vertices, edges)?);
            }
            match (spec.ground, spec.circuits) {
                (Some(ground), Some(circuits)) => {
                    let ground = cycle_systems::subset::GroundSet::new(ground)?;
                    let subs: Result<Vec<Subset>> = circuits
                        .iter()
                        .map(|c| ground.subset_of_labels(c.iter().map(|s| s.as_str())))
                        .collect();
                    Matroid::from_circuits(ground, subs?)
                }
                _ => Err(parse_err(
                    "matroid JSON needs \"uniform\", \"graph\", or \"ground\"+\"circuits\"",
                )),
            }
        }
        _ => Matroid::graphic(MultiGraph::parse_edge_list(&text)?),
    }
}

/// Load a cycle system for `m` from JSON `{"cycles": [[labels], ...]}` and
/// verify it.
pub fn load_system(path: &Path, m: &Matroid) -> Result<CycleSystem> {
    let text = std::fs::read_to_string(path)?;
    let spec: SystemJson = serde_json::from_str(&text).map_err(parse_err)?;
    let cycles = cycles_from_labels(m, &spec.cycles)?;
    CycleSystem::new(m.clone(), cycles)
}

/// Same, but without the cycle-system verification (generalized trees take
/// arbitrary cycle families).
pub fn load_cycles_unverified(path: &Path, m: &Matroid) -> Result<Vec<Subset>> {
    let text = std::fs::read_to_string(path)?;
    let spec: SystemJson = serde_json::from_str(&text).map_err(parse_err)?;
    cycles_from_labels(m, &spec.cycles)
}

fn cycles_from_labels(m: &Matroid, cycles: &[Vec<String>]) -> Result<Vec<Subset>> {
    cycles
        .iter()
        .map(|c| m.ground().subset_of_labels(c.iter().map(|s| s.as_str())))
        .collect()
}

/// Comma-separated label list.
pub fn parse_labels(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}

/// Comma-separated non-negative integers.
pub fn parse_vector(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Domain(format!("bad vector entry {t:?}: {e}")))
        })
        .collect()
}
