//! Cycle systems: the unique-union operator, verification, exhaustive
//! search over circuit families, the deletion/contraction and 2-sum
//! transforms, cone/cographic constructions, and firing matrices.

use std::collections::{HashMap, HashSet};
use std::path::Path;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::MultiGraph;
use crate::matroid::Matroid;
use crate::subset::{Ground, Subset};
use crate::{Error, Result};

/// Elements with multiplicity exactly 1 in the multiset union of the family.
pub fn unique_union<'a>(ground: &Ground, family: impl IntoIterator<Item = &'a Subset>) -> Subset {
    let mut once = ground.empty_subset();
    let mut more = ground.empty_subset();
    for s in family {
        uu_step(&mut once, &mut more, s);
    }
    once
}

/// Fold one set into a (seen-once, seen-more) accumulator pair.
fn uu_step(once: &mut Subset, more: &mut Subset, s: &Subset) {
    let repeats = once.intersection(s);
    more.union_assign(&repeats);
    once.xor_assign(s);
    *once = once.difference(more);
}

/// Map a subset of one ground set into another by label.
pub fn relabel(s: &Subset, from: &Ground, to: &Ground) -> Result<Subset> {
    let labels: Vec<&str> = s.iter().map(|i| from.label(i)).collect();
    to.subset_of_labels(labels)
}

/// True iff the restriction M|K has no bridges, i.e. every element of K lies
/// on a circuit inside K.
pub fn is_cycle(m: &Matroid, k: &Subset) -> bool {
    let r = m.rank(k);
    k.iter().all(|e| m.rank(&k.without(e)) == r)
}

/// First nonempty σ (as sorted indices into `family`) whose unique union is
/// independent, or `None` when the family has the unique-union property.
pub fn unique_union_failure(m: &Matroid, family: &[Subset]) -> Option<Vec<usize>> {
    let ground = m.ground().clone();
    let mut chosen = Vec::new();
    fn rec(
        m: &Matroid,
        family: &[Subset],
        idx: usize,
        once: &Subset,
        more: &Subset,
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if idx == family.len() {
            if !chosen.is_empty() && m.is_independent(once) {
                return Some(chosen.clone());
            }
            return None;
        }
        let mut once2 = once.clone();
        let mut more2 = more.clone();
        uu_step(&mut once2, &mut more2, &family[idx]);
        chosen.push(idx);
        if let Some(w) = rec(m, family, idx + 1, &once2, &more2, chosen) {
            return Some(w);
        }
        chosen.pop();
        rec(m, family, idx + 1, once, more, chosen)
    }
    rec(
        m,
        family,
        0,
        &ground.empty_subset(),
        &ground.empty_subset(),
        &mut chosen,
    )
}

pub fn has_unique_union_property(m: &Matroid, family: &[Subset]) -> bool {
    unique_union_failure(m, family).is_none()
}

pub fn is_cycle_system(m: &Matroid, family: &[Subset]) -> bool {
    family.len() == m.corank()
        && family.iter().all(|k| !k.is_empty() && is_cycle(m, k))
        && has_unique_union_property(m, family)
}

#[derive(Debug, Clone)]
pub struct CycleSystem {
    matroid: Matroid,
    cycles: Vec<Subset>,
}

impl CycleSystem {
    /// Build and verify. The error message names the first failing condition,
    /// including the failing σ when the unique-union property breaks.
    pub fn new(matroid: Matroid, cycles: Vec<Subset>) -> Result<CycleSystem> {
        let g = matroid.corank();
        if cycles.len() != g {
            return Err(Error::Domain(format!(
                "expected {} cycles (the corank), got {}",
                g,
                cycles.len()
            )));
        }
        for (i, k) in cycles.iter().enumerate() {
            if k.is_empty() {
                return Err(Error::Domain(format!("cycle {} is empty", i + 1)));
            }
            if !is_cycle(&matroid, k) {
                return Err(Error::Domain(format!(
                    "set {} ({}) is not a cycle: its restriction has a bridge",
                    i + 1,
                    matroid.ground().format_subset(k)
                )));
            }
        }
        if let Some(sigma) = unique_union_failure(&matroid, &cycles) {
            let human: Vec<String> = sigma.iter().map(|i| (i + 1).to_string()).collect();
            return Err(Error::Domain(format!(
                "unique union of σ = {{{}}} is independent",
                human.join(",")
            )));
        }
        Ok(CycleSystem { matroid, cycles })
    }

    /// Skip verification; for callers that have already established validity.
    pub fn new_unchecked(matroid: Matroid, cycles: Vec<Subset>) -> CycleSystem {
        CycleSystem { matroid, cycles }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn cycles(&self) -> &[Subset] {
        &self.cycles
    }

    pub fn g(&self) -> usize {
        self.cycles.len()
    }

    /// 𝒞_σ for σ given as 0-based cycle indices.
    pub fn unique_union_of(&self, sigma: impl IntoIterator<Item = usize>) -> Subset {
        let sel: Vec<&Subset> = sigma.into_iter().map(|i| &self.cycles[i]).collect();
        unique_union(self.matroid.ground(), sel)
    }

    pub fn cycles_as_labels(&self) -> Vec<Vec<String>> {
        self.cycles
            .iter()
            .map(|c| self.matroid.ground().labels_of(c))
            .collect()
    }

    /// True iff the cycles are exactly the fundamental circuits of some basis.
    pub fn is_fundamental(&self) -> bool {
        let mut target: Vec<Subset> = self.cycles.clone();
        target.sort_by(|a, b| a.cmp_canonical(b));
        for basis in self.matroid.bases() {
            let mut fcs: Vec<Subset> = (0..self.matroid.size())
                .filter(|&e| !basis.contains(e))
                .map(|e| {
                    self.matroid
                        .fundamental_circuit(&basis, e)
                        .expect("e outside a verified basis")
                })
                .collect();
            fcs.sort_by(|a, b| a.cmp_canonical(b));
            if fcs == target {
                return true;
            }
        }
        false
    }
}

/// The fundamental circuits of some basis, if any basis yields a family with
/// the unique-union property. Cycles are ordered by their non-basis element.
pub fn find_fundamental_circuit_system(m: &Matroid) -> Option<CycleSystem> {
    for basis in m.bases() {
        let fcs: Vec<Subset> = (0..m.size())
            .filter(|&e| !basis.contains(e))
            .map(|e| {
                m.fundamental_circuit(&basis, e)
                    .expect("e outside an enumerated basis")
            })
            .collect();
        if has_unique_union_property(m, &fcs) {
            return Some(CycleSystem::new_unchecked(m.clone(), fcs));
        }
    }
    None
}

// ----- transforms -----

/// Prop-style deletion: `e` must lie in exactly one cycle (e ∈ 𝒞_{[g]}); that
/// cycle is dropped and `e` is deleted from the matroid. Returns the new
/// system together with the dropped 0-based index, which the coparking
/// correspondence needs.
pub fn delete_transform(cs: &CycleSystem, e: usize) -> Result<(CycleSystem, usize)> {
    let containers: Vec<usize> = (0..cs.g()).filter(|&i| cs.cycles[i].contains(e)).collect();
    if containers.len() != 1 {
        return Err(Error::Precondition(format!(
            "element {} lies in {} cycles; deletion needs exactly one",
            cs.matroid.ground().label(e),
            containers.len()
        )));
    }
    let i = containers[0];
    let removed = cs.matroid.ground().subset_of_indices([e]);
    let child = cs.matroid.delete(&removed);
    let mut cycles = Vec::with_capacity(cs.g() - 1);
    for (j, c) in cs.cycles.iter().enumerate() {
        if j != i {
            cycles.push(relabel(c, cs.matroid.ground(), child.ground())?);
        }
    }
    Ok((CycleSystem::new(child, cycles)?, i))
}

/// Contraction: `e` must not be a loop; every cycle loses `e`.
pub fn contract_transform(cs: &CycleSystem, e: usize) -> Result<CycleSystem> {
    let single = cs.matroid.ground().subset_of_indices([e]);
    if cs.matroid.rank(&single) == 0 {
        return Err(Error::Precondition(format!(
            "element {} is a loop and cannot be contracted",
            cs.matroid.ground().label(e)
        )));
    }
    let child = cs.matroid.contract(&single);
    let mut cycles = Vec::with_capacity(cs.g());
    for c in &cs.cycles {
        cycles.push(relabel(&c.without(e), cs.matroid.ground(), child.ground())?);
    }
    CycleSystem::new(child, cycles)
}

// ----- constructions -----

/// Circuit system of the cone over G: one triangle {f_u, e, f_v} through the
/// apex per original edge e = uv. Loops in G are rejected; parallel edges
/// each contribute their own triangle.
pub fn cone_circuit_system(g: &MultiGraph) -> Result<CycleSystem> {
    for e in 0..g.edge_count() {
        if g.is_loop(e) {
            return Err(Error::Domain(format!(
                "input graph has a loop ({}); the cone construction needs loop-free input",
                g.labels()[e]
            )));
        }
    }
    let cone = g.cone()?;
    let m = Matroid::graphic(cone)?;
    let ground = m.ground().clone();
    let mut cycles = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        let c = ground.subset_of_labels([
            format!("f{u}").as_str(),
            g.labels()[e].as_str(),
            format!("f{v}").as_str(),
        ])?;
        cycles.push(c);
    }
    CycleSystem::new(m, cycles).map_err(|e| match e {
        Error::Domain(msg) => Error::Internal(format!("cone construction failed its own verification: {msg}")),
        other => other,
    })
}

/// Circuit system of M(G)* from the vertex stars of every non-root vertex.
/// The stated construction is returned as-is and verified; a failure (e.g.
/// from bridges producing dual loops outside any cocircuit) is reported.
pub fn cographic_circuit_system(g: &MultiGraph, root: usize) -> Result<CycleSystem> {
    if root >= g.vertices() {
        return Err(Error::Domain(format!("root vertex {root} out of range")));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("input graph must be connected".into()));
    }
    let m = Matroid::graphic(g.clone())?.dual();
    let ground = m.ground().clone();
    let mut cycles = Vec::new();
    for v in 0..g.vertices() {
        if v == root {
            continue;
        }
        cycles.push(ground.subset_of_indices(g.star(v)));
    }
    CycleSystem::new(m, cycles)
}

/// Cycle system of the 2-sum along `p` (a label present in both systems):
/// the unique C_i containing p is dropped from 𝒞 and spliced, minus p, into
/// every D_j containing p. Output order: remaining 𝒞, then transformed 𝒟.
pub fn two_sum_cycle_system(cs_m: &CycleSystem, cs_n: &CycleSystem, p: &str) -> Result<CycleSystem> {
    let m = &cs_m.matroid;
    let n = &cs_n.matroid;
    let pm = m
        .ground()
        .index_of(p)
        .ok_or_else(|| Error::Precondition(format!("element {p:?} not in the first ground set")))?;
    let pn = n
        .ground()
        .index_of(p)
        .ok_or_else(|| Error::Precondition(format!("element {p:?} not in the second ground set")))?;
    let m_containers: Vec<usize> = (0..cs_m.g()).filter(|&i| cs_m.cycles[i].contains(pm)).collect();
    if m_containers.len() != 1 {
        return Err(Error::Precondition(format!(
            "element {p:?} lies in {} cycles of the first system; need exactly one",
            m_containers.len()
        )));
    }
    if !cs_n.cycles.iter().any(|d| d.contains(pn)) {
        return Err(Error::Precondition(format!(
            "element {p:?} lies in no cycle of the second system"
        )));
    }
    let ci = m_containers[0];
    let sum = Matroid::two_sum(m, n, p)?;
    let ground = sum.ground().clone();
    let mut cycles = Vec::new();
    for (j, c) in cs_m.cycles.iter().enumerate() {
        if j != ci {
            cycles.push(relabel(c, m.ground(), &ground)?);
        }
    }
    let splice = cs_m.cycles[ci].without(pm);
    for d in &cs_n.cycles {
        if d.contains(pn) {
            let merged = relabel(&splice, m.ground(), &ground)?
                .union(&relabel(&d.without(pn), n.ground(), &ground)?);
            cycles.push(merged);
        } else {
            cycles.push(relabel(d, n.ground(), &ground)?);
        }
    }
    CycleSystem::new(sum, cycles)
}

// ----- circuit system search -----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    First,
    All,
    Count,
}

#[derive(Debug, Clone, Default)]
pub struct SearchBudget {
    pub time_limit: Option<Duration>,
    /// Cap on the number of families retained in any one level.
    pub max_level_size: Option<usize>,
}

#[derive(Debug)]
pub struct SearchOutcome {
    /// Canonical circuit list the index keys refer to.
    pub circuits: Vec<Subset>,
    /// Found systems as sorted indices into `circuits`; empty in Count mode.
    pub systems: Vec<Vec<usize>>,
    pub count: usize,
    pub levels_completed: usize,
}

impl SearchOutcome {
    pub fn system(&self, m: &Matroid, key: &[usize]) -> CycleSystem {
        let cycles: Vec<Subset> = key.iter().map(|&i| self.circuits[i].clone()).collect();
        CycleSystem::new_unchecked(m.clone(), cycles)
    }
}

#[derive(Serialize, Deserialize)]
struct CheckpointMeta {
    circuits: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct CheckpointLevel {
    level: usize,
    families: Vec<Vec<usize>>,
}

struct DepCache<'a> {
    m: &'a Matroid,
    memo: HashMap<Subset, bool>,
}

impl<'a> DepCache<'a> {
    fn dependent(&mut self, s: &Subset) -> bool {
        if let Some(&d) = self.memo.get(s) {
            return d;
        }
        let d = self.m.is_dependent(s);
        self.memo.insert(s.clone(), d);
        d
    }
}

/// Level-by-level search for circuit systems (families of g circuits with
/// the unique-union property). L_1 holds all singletons; A ∈ L_k extends by
/// a circuit C past its largest index when ∗(A ∪ {C}) is dependent and every
/// k-subset of A ∪ {C} through C already sits in L_k. `First` mode switches
/// to depth-first extension with the full subset table carried along the
/// chain, so no level is materialized.
pub fn search_circuit_systems(
    m: &Matroid,
    mode: SearchMode,
    budget: &SearchBudget,
    checkpoint: Option<&Path>,
) -> Result<SearchOutcome> {
    let g = m.corank();
    let circuits = m.circuits();
    if g == 0 {
        // the empty family is the unique (trivial) circuit system
        return Ok(SearchOutcome {
            circuits,
            systems: if mode == SearchMode::Count { vec![] } else { vec![vec![]] },
            count: 1,
            levels_completed: 0,
        });
    }
    if circuits.len() < g {
        return Ok(SearchOutcome {
            circuits,
            systems: vec![],
            count: 0,
            levels_completed: 0,
        });
    }
    let deadline = budget.time_limit.map(|d| Instant::now() + d);
    let mut cache = DepCache { m, memo: HashMap::new() };

    if mode == SearchMode::First {
        return search_first(m, circuits, g, deadline, &mut cache);
    }

    // level state: family key -> (once, more) accumulator for its unique union
    type Level = HashMap<Vec<usize>, (Subset, Subset)>;
    let empty = m.ground().empty_subset();

    let mut level: Level = HashMap::new();
    let mut k = 1usize;
    let mut resumed = false;
    if let Some(dir) = checkpoint {
        if let Some((lvl, families)) = load_checkpoint(dir, m, &circuits)? {
            level = rebuild_level(&families, &circuits, &empty);
            k = lvl;
            resumed = true;
        }
    }
    if !resumed {
        for (i, c) in circuits.iter().enumerate() {
            // every circuit is dependent, so each singleton qualifies
            let mut once = empty.clone();
            let mut more = empty.clone();
            uu_step(&mut once, &mut more, c);
            level.insert(vec![i], (once, more));
        }
        if let Some(dir) = checkpoint {
            save_checkpoint(dir, m, &circuits, 1, &level)?;
        }
    }

    while k < g {
        if level.is_empty() {
            break;
        }
        let keys: HashSet<&Vec<usize>> = level.keys().collect();
        let mut next: Level = HashMap::new();
        for (key, (once, more)) in &level {
            if let Some(d) = deadline {
                if Instant::now() > d {
                    return Err(Error::Budget {
                        message: "time budget exhausted during circuit-system search".into(),
                        levels_completed: k,
                    });
                }
            }
            let max = *key.last().expect("level keys are nonempty");
            for c in max + 1..circuits.len() {
                let mut once2 = once.clone();
                let mut more2 = more.clone();
                uu_step(&mut once2, &mut more2, &circuits[c]);
                if !cache.dependent(&once2) {
                    continue;
                }
                // every k-subset through c must already be in the level
                let mut ok = true;
                if key.len() > 1 {
                    let mut probe: Vec<usize> = Vec::with_capacity(key.len());
                    for skip in 0..key.len() {
                        probe.clear();
                        probe.extend(key.iter().enumerate().filter(|&(t, _)| t != skip).map(|(_, &v)| v));
                        probe.push(c);
                        if !keys.contains(&probe) {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    continue;
                }
                let mut new_key = key.clone();
                new_key.push(c);
                next.insert(new_key, (once2, more2));
                if let Some(cap) = budget.max_level_size {
                    if next.len() > cap {
                        return Err(Error::Budget {
                            message: format!("level size cap {cap} exceeded at level {}", k + 1),
                            levels_completed: k,
                        });
                    }
                }
            }
        }
        level = next;
        k += 1;
        if let Some(dir) = checkpoint {
            save_checkpoint(dir, m, &circuits, k, &level)?;
        }
    }

    let mut systems: Vec<Vec<usize>> = if k == g {
        level.keys().cloned().collect()
    } else {
        vec![]
    };
    systems.sort();
    let count = systems.len();
    if mode == SearchMode::Count {
        systems.clear();
    }
    Ok(SearchOutcome {
        circuits,
        systems,
        count,
        levels_completed: k,
    })
}

fn search_first(
    m: &Matroid,
    circuits: Vec<Subset>,
    g: usize,
    deadline: Option<Instant>,
    cache: &mut DepCache,
) -> Result<SearchOutcome> {
    let empty = m.ground().empty_subset();
    // states[mask] = unique-union accumulator of the sub-family selected by mask
    let mut states: Vec<(Subset, Subset)> = vec![(empty.clone(), empty)];
    let mut chain: Vec<usize> = Vec::new();
    let found = dfs_first(m, &circuits, g, deadline, cache, &mut states, &mut chain, 0)?;
    Ok(SearchOutcome {
        circuits,
        systems: found.iter().cloned().collect(),
        count: usize::from(found.is_some()),
        levels_completed: 0,
    })
}

#[allow(clippy::too_many_arguments)]
fn dfs_first(
    m: &Matroid,
    circuits: &[Subset],
    g: usize,
    deadline: Option<Instant>,
    cache: &mut DepCache,
    states: &mut Vec<(Subset, Subset)>,
    chain: &mut Vec<usize>,
    start: usize,
) -> Result<Option<Vec<usize>>> {
    if chain.len() == g {
        return Ok(Some(chain.clone()));
    }
    if let Some(d) = deadline {
        if Instant::now() > d {
            return Err(Error::Budget {
                message: "time budget exhausted during circuit-system search".into(),
                levels_completed: chain.len(),
            });
        }
    }
    let k = chain.len();
    for c in start..circuits.len() {
        if circuits.len() - c < g - k {
            break;
        }
        // extend every stored sub-family state by circuit c
        let base = states.len();
        let mut all_dependent = true;
        for mask in 0..base {
            let (mut once, mut more) = states[mask].clone();
            uu_step(&mut once, &mut more, &circuits[c]);
            if !cache.dependent(&once) {
                all_dependent = false;
                states.truncate(base);
                break;
            }
            states.push((once, more));
        }
        if !all_dependent {
            continue;
        }
        chain.push(c);
        let hit = dfs_first(m, circuits, g, deadline, cache, states, chain, c + 1)?;
        chain.pop();
        states.truncate(base);
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

fn checkpoint_meta(m: &Matroid, circuits: &[Subset]) -> CheckpointMeta {
    CheckpointMeta {
        circuits: circuits.iter().map(|c| m.ground().labels_of(c)).collect(),
    }
}

fn save_checkpoint(
    dir: &Path,
    m: &Matroid,
    circuits: &[Subset],
    level: usize,
    families: &HashMap<Vec<usize>, (Subset, Subset)>,
) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let meta = checkpoint_meta(m, circuits);
    std::fs::write(
        dir.join("meta.json"),
        serde_json::to_string(&meta).map_err(|e| Error::Internal(e.to_string()))?,
    )?;
    let mut keys: Vec<Vec<usize>> = families.keys().cloned().collect();
    keys.sort();
    let payload = CheckpointLevel { level, families: keys };
    std::fs::write(
        dir.join(format!("level_{level}.json")),
        serde_json::to_string(&payload).map_err(|e| Error::Internal(e.to_string()))?,
    )?;
    Ok(())
}

fn load_checkpoint(
    dir: &Path,
    m: &Matroid,
    circuits: &[Subset],
) -> Result<Option<(usize, Vec<Vec<usize>>)>> {
    let meta_path = dir.join("meta.json");
    if !meta_path.exists() {
        return Ok(None);
    }
    let meta: CheckpointMeta = serde_json::from_str(&std::fs::read_to_string(&meta_path)?)
        .map_err(|e| Error::Parse { line: 0, message: format!("checkpoint meta: {e}") })?;
    if meta.circuits != checkpoint_meta(m, circuits).circuits {
        return Ok(None); // checkpoint belongs to a different matroid
    }
    let mut best: Option<CheckpointLevel> = None;
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
        if name.starts_with("level_") && name.ends_with(".json") {
            let lvl: CheckpointLevel = serde_json::from_str(&std::fs::read_to_string(&path)?)
                .map_err(|e| Error::Parse { line: 0, message: format!("checkpoint {name}: {e}") })?;
            if best.as_ref().map_or(true, |b| lvl.level > b.level) {
                best = Some(lvl);
            }
        }
    }
    Ok(best.map(|b| (b.level, b.families)))
}

fn rebuild_level(
    families: &[Vec<usize>],
    circuits: &[Subset],
    empty: &Subset,
) -> HashMap<Vec<usize>, (Subset, Subset)> {
    families
        .iter()
        .map(|key| {
            let mut once = empty.clone();
            let mut more = empty.clone();
            for &i in key {
                uu_step(&mut once, &mut more, &circuits[i]);
            }
            (key.clone(), (once, more))
        })
        .collect()
}

// ----- firing matrix -----

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiringMatrix {
    pub entries: Vec<Vec<i64>>,
}

pub fn firing_matrix(cs: &CycleSystem) -> FiringMatrix {
    let g = cs.g();
    let mut entries = vec![vec![0i64; g]; g];
    for i in 0..g {
        for j in 0..g {
            entries[i][j] = if i == j {
                cs.cycles()[i].len() as i64
            } else {
                -(cs.cycles()[i].intersection(&cs.cycles()[j]).len() as i64)
            };
        }
    }
    FiringMatrix { entries }
}

impl FiringMatrix {
    /// Nonsingular with entrywise non-negative inverse, decided by exact
    /// rational Gauss–Jordan elimination. The empty matrix qualifies.
    pub fn is_m_matrix(&self) -> bool {
        let g = self.entries.len();
        if g == 0 {
            return true;
        }
        // augmented [A | I]
        let mut rows: Vec<Vec<BigRational>> = (0..g)
            .map(|i| {
                (0..2 * g)
                    .map(|j| {
                        let v = if j < g {
                            self.entries[i][j]
                        } else {
                            i64::from(j - g == i)
                        };
                        BigRational::from(BigInt::from(v))
                    })
                    .collect()
            })
            .collect();
        for col in 0..g {
            let Some(pivot) = (col..g).find(|&r| !rows[r][col].is_zero()) else {
                return false; // singular
            };
            rows.swap(col, pivot);
            let inv = rows[col][col].clone();
            for v in rows[col].iter_mut() {
                *v /= inv.clone();
            }
            for r in 0..g {
                if r != col && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    for j in 0..2 * g {
                        let delta = &factor * &rows[col][j];
                        rows[r][j] -= delta;
                    }
                }
            }
        }
        rows.iter()
            .all(|row| row[g..].iter().all(|v| !v.is_negative()))
    }
}

impl std::ops::Index<(usize, usize)> for FiringMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.entries[i][j]
    }
}
