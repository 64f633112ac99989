//! Shared fixtures for the integration tests: the corpus of
//! (matroid, cycle system) pairs, the graph6 catalogs, random instances,
//! and the brute-force property suites.

use std::collections::HashSet;
use std::path::PathBuf;

use cycle_systems::coparking;
use cycle_systems::cycle_system::{
    cone_circuit_system, contract_transform, delete_transform, search_circuit_systems,
    unique_union,CycleSystem, SearchBudget, SearchMode,
};
use cycle_systems::graph::MultiGraph;
use cycle_systems::instances::*;
use cycle_systems::matroid::Matroid;
use cycle_systems::subset::Subset;
use cycle_systems::tutte::{tutte, TuttePolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 20260826;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

/// Cycle graph on n vertices.
pub fn cycle_graph(n: usize) -> MultiGraph {
    let edges: Vec<(usize, usize, String)> =
        (0..n).map(|i| (i, (i + 1) % n, format!("c{i}"))).collect();
    MultiGraph::new(n, edges).unwrap()
}

/// K4 on "vertices" 1,2,6,7 and K5 on 2,3,4,5,6 with edge labels "uv",
/// their cone-style triangle systems, and the 2-sum along p = "26".
pub fn two_sum_fixture() -> CycleSystem {
    let k4 = labeled_complete(&[1, 2, 6, 7]);
    let k5 = labeled_complete(&[2, 3, 4, 5, 6]);
    let cs4 = triangle_system(&k4, &[1, 2, 6, 7], 1);
    let cs5 = triangle_system(&k5, &[2, 3, 4, 5, 6], 4);
    cycle_systems::cycle_system::two_sum_cycle_system(&cs4, &cs5, "26").unwrap()
}

fn labeled_complete(names: &[usize]) -> MultiGraph {
    let n = names.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (names[i].min(names[j]), names[i].max(names[j]));
            edges.push((i, j, format!("{a}{b}")));
        }
    }
    MultiGraph::new(n, edges).unwrap()
}

/// Triangles through the named apex vertex.
fn triangle_system(g: &MultiGraph, names: &[usize], apex: usize) -> CycleSystem {
    let m = Matroid::graphic(g.clone()).unwrap();
    let gr = m.ground();
    let edge = |a: usize, b: usize| format!("{}{}", a.min(b), a.max(b));
    let mut cycles = Vec::new();
    let others: Vec<usize> = names.iter().copied().filter(|&v| v != apex).collect();
    for i in 0..others.len() {
        for j in i + 1..others.len() {
            let (u, v) = (others[i], others[j]);
            cycles.push(
                gr.subset_of_labels(
                    [edge(apex, u), edge(apex, v), edge(u, v)].iter().map(|s| s.as_str()),
                )
                .unwrap(),
            );
        }
    }
    CycleSystem::new(m, cycles).unwrap()
}

/// Named corpus of verified (matroid, cycle system) pairs.
pub fn corpus_systems() -> Vec<(String, CycleSystem)> {
    vec![
        ("intro graph".to_string(), wheel_like_system()),
        ("doubled triangle".to_string(), doubled_triangle_system()),
        (
            "cone over C4".to_string(),
            cone_circuit_system(&cycle_graph(4)).unwrap(),
        ),
        (
            "cone over K4".to_string(),
            cone_circuit_system(&MultiGraph::complete(4)).unwrap(),
        ),
        (
            "cone over K5".to_string(),
            cone_circuit_system(&MultiGraph::complete(5)).unwrap(),
        ),
        ("2-sum of K4 and K5".to_string(), two_sum_fixture()),
    ]
}

/// Lines of the bundled connected-graph catalogs for the given vertex counts.
pub fn catalog_lines(sizes: &[usize]) -> Vec<String> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let mut lines = Vec::new();
    for n in sizes {
        let text = std::fs::read_to_string(data.join(format!("connected_{n}.g6")))
            .expect("catalog file present");
        lines.extend(text.lines().map(|l| l.trim().to_string()).filter(|l| !l.is_empty()));
    }
    lines
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_vertices: usize) -> MultiGraph {
    loop {
        let n = rng.gen_range(3..=max_vertices);
        let mut edges = Vec::new();
        let mut id = 0usize;
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.6) {
                    edges.push((u, v, format!("e{id}")));
                }
                id += 1;
            }
        }
        let g = MultiGraph::new(n, edges).unwrap();
        if g.edge_count() > 0 && g.is_connected() {
            return g;
        }
    }
}

// ----- property suites (criterion 9) -----

type Suite = (&'static str, Vec<String>);

pub fn property_suites() -> Vec<Suite> {
    vec![
        ("size bound for unique-union families", suite_size_bound()),
        ("every circuit is a sub-family unique union", suite_circuit_realizability()),
        ("non-bridge coverage", suite_non_bridge_coverage()),
        ("connected systems consist of circuits", suite_circuits_only()),
        ("component-wise existence", suite_component_decomposition()),
        ("cycles span a g-dimensional GF(2) space", suite_circuit_space_rank()),
        ("coparking multicomplexes are pure", suite_purity()),
        ("deletion/contraction partitions P*", suite_partition()),
        ("burning loop matches the defining inequality", suite_burning_vs_definition()),
        ("burning verdict is removal-order independent", suite_removal_order()),
        ("Tutte recursion matches the subset expansion", suite_tutte_subset_sum()),
        ("dual Tutte swaps the variables", suite_tutte_duality()),
    ]
}

fn suite_size_bound() -> Vec<String> {
    let mut failures = Vec::new();
    let mut rng = rng();
    for trial in 0..40 {
        let m = Matroid::graphic(random_connected_graph(&mut rng, 6)).unwrap();
        let circuits = m.circuits();
        if circuits.is_empty() {
            continue;
        }
        let g = m.corank();
        for _ in 0..25 {
            let size = rng.gen_range(1..=g + 2);
            let family: Vec<Subset> = (0..size)
                .map(|_| circuits[rng.gen_range(0..circuits.len())].clone())
                .collect();
            let mut keys: Vec<String> = family.iter().map(|c| format!("{c:?}")).collect();
            keys.sort();
            keys.dedup();
            if keys.len() != family.len() {
                continue; // multiset with repeats is not a family
            }
            if cycle_systems::cycle_system::has_unique_union_property(&m, &family)
                && family.len() > g
            {
                failures.push(format!(
                    "trial {trial}: family of {} exceeds corank {g}",
                    family.len()
                ));
            }
        }
    }
    failures
}

fn suite_circuit_realizability() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, cs) in corpus_systems() {
        let m = cs.matroid();
        let g = cs.g();
        assert!(g <= 12);
        let realized: HashSet<Subset> = (1u32..1 << g)
            .map(|mask| cs.unique_union_of((0..g).filter(|i| mask >> i & 1 == 1)))
            .collect();
        for d in m.circuits() {
            if !realized.contains(&d) {
                failures.push(format!(
                    "{name}: circuit {} is no sub-family unique union",
                    m.ground().format_subset(&d)
                ));
            }
        }
    }
    failures
}

fn suite_non_bridge_coverage() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, cs) in corpus_systems() {
        let m = cs.matroid();
        let (_, bridges) = m.loops_and_bridges();
        for e in 0..m.size() {
            let covered = cs.cycles().iter().any(|c| c.contains(e));
            if covered == bridges.contains(e) {
                failures.push(format!(
                    "{name}: element {} covered={covered}, bridge={}",
                    m.ground().label(e),
                    bridges.contains(e)
                ));
            }
        }
    }
    failures
}

fn suite_circuits_only() -> Vec<String> {
    let mut failures = Vec::new();
    let mut rng = rng();
    for trial in 0..25 {
        let m = Matroid::graphic(random_connected_graph(&mut rng, 6)).unwrap();
        if !m.is_connected() {
            continue;
        }
        let outcome =
            search_circuit_systems(&m, SearchMode::First, &SearchBudget::default(), None)
                .unwrap();
        let Some(key) = outcome.systems.first() else { continue };
        let cs = outcome.system(&m, key);
        for c in cs.cycles() {
            let minimal = m.is_dependent(c) && c.iter().all(|e| m.is_independent(&c.without(e)));
            if !minimal {
                failures.push(format!("trial {trial}: member is not a circuit"));
            }
        }
    }
    failures
}

fn suite_component_decomposition() -> Vec<String> {
    let mut failures = Vec::new();
    let mut rng = rng();
    let count = |m: &Matroid| {
        search_circuit_systems(m, SearchMode::First, &SearchBudget::default(), None)
            .unwrap()
            .count
    };
    for trial in 0..12 {
        let a = Matroid::graphic(random_connected_graph(&mut rng, 5)).unwrap();
        let b = Matroid::graphic(random_connected_graph(&mut rng, 5)).unwrap();
        let b = relabeled(&b, "x");
        let sum = Matroid::direct_sum(vec![a.clone(), b.clone()]).unwrap();
        let whole = count(&sum) > 0;
        let parts = count(&a) > 0 && count(&b) > 0;
        if whole != parts {
            failures.push(format!("trial {trial}: sum={whole}, components={parts}"));
        }
    }
    failures
}

fn relabeled(m: &Matroid, prefix: &str) -> Matroid {
    let labels: Vec<String> = m
        .ground()
        .labels()
        .iter()
        .map(|l| format!("{prefix}{l}"))
        .collect();
    let gr = cycle_systems::subset::GroundSet::new(labels).unwrap();
    Matroid::from_circuits(gr, m.circuits()).unwrap()
}

fn suite_circuit_space_rank() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, cs) in corpus_systems() {
        let m = cs.matroid();
        if m.circuit_space_rank(cs.cycles()) != m.corank() {
            failures.push(format!("{name}: cycles do not span"));
        }
    }
    failures
}

fn suite_purity() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, cs) in corpus_systems() {
        if !coparking::is_pure(&cs) {
            failures.push(format!("{name}: P* is not pure"));
        }
        let want = coparking::max_degree(&cs);
        for a in coparking::maximal_elements(&cs) {
            if coparking::degree(&a) != want {
                failures.push(format!("{name}: maximal element of degree {} ≠ {want}",
                    coparking::degree(&a)));
            }
        }
    }
    failures
}

fn suite_partition() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, cs) in corpus_systems() {
        let m = cs.matroid();
        let (loops, bridges) = m.loops_and_bridges();
        let total = coparking::enumerate(&cs).len();
        for e in 0..m.size() {
            if loops.contains(e) || bridges.contains(e) {
                continue;
            }
            let Ok((del, _)) = delete_transform(&cs, e) else { continue };
            let Ok(con) = contract_transform(&cs, e) else { continue };
            let d = coparking::enumerate(&del).len();
            let c = coparking::enumerate(&con).len();
            if d + c != total {
                failures.push(format!(
                    "{name}, e={}: {d} + {c} ≠ {total}",
                    m.ground().label(e)
                ));
            }
        }
    }
    failures
}

/// Definition check: every nonempty σ has some i ∈ σ with a_i < |C_i ∩ 𝒞_σ|.
fn is_coparking_by_definition(cs: &CycleSystem, a: &[usize]) -> bool {
    let g = cs.g();
    (1u32..1 << g).all(|mask| {
        let sigma: Vec<usize> = (0..g).filter(|i| mask >> i & 1 == 1).collect();
        let uu = cs.unique_union_of(sigma.iter().copied());
        sigma
            .iter()
            .any(|&i| a[i] < cs.cycles()[i].intersection(&uu).len())
    })
}

fn suite_burning_vs_definition() -> Vec<String> {
    let mut failures = Vec::new();
    for (name, cs) in corpus_systems() {
        let g = cs.g();
        // candidate box: 0..=|C_i| in each coordinate
        let dims: Vec<usize> = cs.cycles().iter().map(|c| c.len() + 1).collect();
        let mut a = vec![0usize; g];
        loop {
            let burning = coparking::is_coparking(&cs, &a).unwrap();
            if burning != is_coparking_by_definition(&cs, &a) {
                failures.push(format!("{name}: disagreement at {a:?}"));
            }
            let mut k = 0;
            while k < g {
                a[k] += 1;
                if a[k] < dims[k] {
                    break;
                }
                a[k] = 0;
                k += 1;
            }
            if k == g {
                break;
            }
        }
    }
    failures
}

/// Burning loop with a randomly chosen eligible index at each step.
fn verify_random_order(cs: &CycleSystem, a: &[usize], rng: &mut ChaCha8Rng) -> bool {
    let ground = cs.matroid().ground();
    let mut sigma: Vec<usize> = (0..cs.g()).collect();
    loop {
        if sigma.is_empty() {
            return true;
        }
        let uu = unique_union(ground, sigma.iter().map(|&i| &cs.cycles()[i]));
        let eligible: Vec<usize> = (0..sigma.len())
            .filter(|&p| a[sigma[p]] < cs.cycles()[sigma[p]].intersection(&uu).len())
            .collect();
        if eligible.is_empty() {
            return false;
        }
        sigma.remove(eligible[rng.gen_range(0..eligible.len())]);
    }
}

fn suite_removal_order() -> Vec<String> {
    let mut failures = Vec::new();
    let mut rng = rng();
    for (name, cs) in corpus_systems() {
        let dims: Vec<usize> = cs.cycles().iter().map(|c| c.len() + 1).collect();
        for _ in 0..200 {
            let a: Vec<usize> = dims.iter().map(|&d| rng.gen_range(0..d)).collect();
            let canonical = coparking::is_coparking(&cs, &a).unwrap();
            for _ in 0..5 {
                if verify_random_order(&cs, &a, &mut rng) != canonical {
                    failures.push(format!("{name}: order-dependent verdict at {a:?}"));
                }
            }
        }
    }
    failures
}

/// Corank-nullity subset expansion evaluated at one point.
fn tutte_by_subsets(m: &Matroid, x: i128, y: i128) -> i128 {
    let n = m.size();
    assert!(n <= 12);
    let r = m.full_rank() as i128;
    let mut total = 0i128;
    for mask in 0u32..1 << n {
        let s = m
            .ground()
            .subset_of_indices((0..n).filter(|i| mask >> i & 1 == 1));
        let rs = m.rank(&s) as i128;
        total += (x - 1).pow((r - rs) as u32) * (y - 1).pow((s.len() as i128 - rs) as u32);
    }
    total
}

fn eval_signed(t: &TuttePolynomial, x: i128, y: i128) -> i128 {
    t.coefficients
        .iter()
        .map(|(&(i, j), &c)| c as i128 * x.pow(i as u32) * y.pow(j as u32))
        .sum()
}

fn suite_tutte_subset_sum() -> Vec<String> {
    let mut failures = Vec::new();
    let mut rng = rng();
    let mut instances: Vec<(String, Matroid)> = vec![
        ("intro graph".into(), Matroid::graphic(wheel_like_graph()).unwrap()),
        ("doubled triangle".into(), Matroid::graphic(doubled_triangle_graph()).unwrap()),
        ("U(2,4)".into(), Matroid::uniform(2, 4).unwrap()),
        ("K4".into(), Matroid::graphic(MultiGraph::complete(4)).unwrap()),
    ];
    for trial in 0..10 {
        loop {
            let g = random_connected_graph(&mut rng, 5);
            if g.edge_count() <= 12 {
                instances.push((format!("random {trial}"), Matroid::graphic(g).unwrap()));
                break;
            }
        }
    }
    let points = [(0, 0), (1, 1), (2, 2), (3, 1), (1, 3), (2, 0), (0, 2), (3, 3)];
    for (name, m) in &instances {
        let t = tutte(m).unwrap();
        for (x, y) in points {
            if eval_signed(&t, x, y) != tutte_by_subsets(m, x, y) {
                failures.push(format!("{name}: mismatch at ({x},{y})"));
            }
        }
    }
    failures
}

fn suite_tutte_duality() -> Vec<String> {
    let mut failures = Vec::new();
    let mut rng = rng();
    let mut instances = vec![
        Matroid::graphic(wheel_like_graph()).unwrap(),
        Matroid::uniform(2, 4).unwrap(),
    ];
    for _ in 0..8 {
        instances.push(Matroid::graphic(random_connected_graph(&mut rng, 5)).unwrap());
    }
    for m in &instances {
        let t = tutte(m).unwrap();
        let td = tutte(&m.dual()).unwrap();
        if td != t.transpose() {
            failures.push(format!("dual Tutte mismatch on {} elements", m.size()));
        }
    }
    failures
}
