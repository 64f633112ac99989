//! Coparking functions of a cycle system: verification by the burning loop,
//! enumeration of P*, degree vectors, purity, and the lifts matching the
//! deletion/contraction transforms.

use std::collections::{HashSet, VecDeque};

use crate::cycle_system::{unique_union, CycleSystem};
use crate::{Error, Result};

/// Verdict of the burning loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verify {
    /// σ emptied; records the order in which indices were removed.
    Accepted { removal_order: Vec<usize> },
    /// No index of the remaining σ was removable.
    Rejected { stuck: Vec<usize> },
}

impl Verify {
    pub fn accepted(&self) -> bool {
        matches!(self, Verify::Accepted { .. })
    }
}

/// Burning loop: start from σ = all indices; repeatedly delete the smallest
/// i ∈ σ with a_i < |C_i ∩ 𝒞_σ|. Accepts iff σ empties. The verdict does not
/// depend on the removal order; taking the smallest index makes witnesses
/// and removal listings deterministic.
pub fn verify(cs: &CycleSystem, a: &[usize]) -> Result<Verify> {
    if a.len() != cs.g() {
        return Err(Error::Domain(format!(
            "vector has length {}, system has {} cycles",
            a.len(),
            cs.g()
        )));
    }
    let ground = cs.matroid().ground();
    let mut sigma: Vec<usize> = (0..cs.g()).collect();
    let mut removal_order = Vec::with_capacity(cs.g());
    loop {
        if sigma.is_empty() {
            return Ok(Verify::Accepted { removal_order });
        }
        let uu = unique_union(ground, sigma.iter().map(|&i| &cs.cycles()[i]));
        let Some(pos) = sigma
            .iter()
            .position(|&i| a[i] < cs.cycles()[i].intersection(&uu).len())
        else {
            return Ok(Verify::Rejected { stuck: sigma });
        };
        removal_order.push(sigma.remove(pos));
    }
}

pub fn is_coparking(cs: &CycleSystem, a: &[usize]) -> Result<bool> {
    Ok(verify(cs, a)?.accepted())
}

pub fn degree(a: &[usize]) -> usize {
    a.iter().sum()
}

/// All coparking functions, found by breadth-first closure from the zero
/// vector (P* is an order ideal, so every member is reachable by unit
/// increments). Result ordered by degree, then lexicographically.
pub fn enumerate(cs: &CycleSystem) -> Vec<Vec<usize>> {
    let g = cs.g();
    let zero = vec![0usize; g];
    if !verify(cs, &zero).expect("zero vector has the right length").accepted() {
        // cannot happen for a verified cycle system, but stay total
        return Vec::new();
    }
    // a_i ≥ |C_i| already fails at σ = {i}, so cap each coordinate
    let caps: Vec<usize> = cs.cycles().iter().map(|c| c.len() - 1).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([zero.clone()]);
    let mut queue: VecDeque<Vec<usize>> = VecDeque::from([zero]);
    let mut out: Vec<Vec<usize>> = Vec::new();
    while let Some(a) = queue.pop_front() {
        for i in 0..g {
            if a[i] >= caps[i] {
                continue;
            }
            let mut b = a.clone();
            b[i] += 1;
            if seen.contains(&b) {
                continue;
            }
            if verify(cs, &b).expect("lengths match").accepted() {
                seen.insert(b.clone());
                queue.push_back(b);
            } else {
                seen.insert(b);
            }
        }
        out.push(a);
    }
    // `out` holds only accepted vectors: rejected ones never enter the queue
    out.sort_by(|x, y| degree(x).cmp(&degree(y)).then_with(|| x.cmp(y)));
    out
}

/// Histogram (d₀, d₁, ..., d_s) of degrees over P*.
pub fn degree_vector(cs: &CycleSystem) -> Vec<usize> {
    let all = enumerate(cs);
    let top = all.iter().map(|a| degree(a)).max().unwrap_or(0);
    let mut d = vec![0usize; top + 1];
    for a in &all {
        d[degree(a)] += 1;
    }
    d
}

/// Members of P* with no coordinate increment staying inside P*.
pub fn maximal_elements(cs: &CycleSystem) -> Vec<Vec<usize>> {
    let all = enumerate(cs);
    let set: HashSet<&Vec<usize>> = all.iter().collect();
    all.iter()
        .filter(|a| {
            (0..a.len()).all(|i| {
                let mut b = (*a).clone();
                b[i] += 1;
                !set.contains(&b)
            })
        })
        .cloned()
        .collect()
}

/// The common degree of all maximal elements: r(M) minus the number of
/// bridges.
pub fn max_degree(cs: &CycleSystem) -> usize {
    let (_, bridges) = cs.matroid().loops_and_bridges();
    cs.matroid().full_rank() - bridges.len()
}

/// True iff every maximal element of P* has degree r(M) − β.
pub fn is_pure(cs: &CycleSystem) -> bool {
    let top = max_degree(cs);
    maximal_elements(cs).iter().all(|a| degree(a) == top)
}

/// A maximal element c ≥ a, built from the removal listing i₁..i_g of the
/// burning run on a: with U_k = C_{i_k} ∩ 𝒞_{{i_k,...,i_g}}, set
/// c_{i_k} = |U_k| − 1.
pub fn maximal_from_run(cs: &CycleSystem, a: &[usize]) -> Result<Vec<usize>> {
    let order = match verify(cs, a)? {
        Verify::Accepted { removal_order } => removal_order,
        Verify::Rejected { .. } => {
            return Err(Error::Domain("vector is not a coparking function".into()))
        }
    };
    let ground = cs.matroid().ground();
    let mut c = vec![0usize; cs.g()];
    for (k, &ik) in order.iter().enumerate() {
        let rest: Vec<&crate::subset::Subset> =
            order[k..].iter().map(|&j| &cs.cycles()[j]).collect();
        let uu = unique_union(ground, rest);
        c[ik] = cs.cycles()[ik].intersection(&uu).len() - 1;
    }
    Ok(c)
}

/// Lift of a coparking function of the deletion transform's system (which
/// dropped coordinate i): insert 0 at position i.
pub fn lift_from_deletion(cs: &CycleSystem, i: usize, a_child: &[usize]) -> Result<Vec<usize>> {
    if a_child.len() + 1 != cs.g() || i >= cs.g() {
        return Err(Error::Domain("lift index/length mismatch".into()));
    }
    let mut a = a_child.to_vec();
    a.insert(i, 0);
    if !verify(cs, &a)?.accepted() {
        return Err(Error::Internal(
            "deletion lift produced a non-coparking vector".into(),
        ));
    }
    Ok(a)
}

/// Lift of a coparking function of the contraction transform's system for
/// the element whose unique container is i: increment coordinate i.
pub fn lift_from_contraction(cs: &CycleSystem, i: usize, a_child: &[usize]) -> Result<Vec<usize>> {
    if a_child.len() != cs.g() || i >= cs.g() {
        return Err(Error::Domain("lift index/length mismatch".into()));
    }
    let mut a = a_child.to_vec();
    a[i] += 1;
    if !verify(cs, &a)?.accepted() {
        return Err(Error::Internal(
            "contraction lift produced a non-coparking vector".into(),
        ));
    }
    Ok(a)
}

/// DOT rendering of the Hasse diagram of P* (covers = unit increments).
pub fn hasse_dot(cs: &CycleSystem) -> String {
    let all = enumerate(cs);
    let set: HashSet<&Vec<usize>> = all.iter().collect();
    let name = |a: &[usize]| {
        let parts: Vec<String> = a.iter().map(|v| v.to_string()).collect();
        format!("\"({})\"", parts.join(","))
    };
    let mut out = String::from("digraph coparking {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for a in &all {
        out.push_str(&format!("  {};\n", name(a)));
    }
    for a in &all {
        for i in 0..a.len() {
            let mut b = a.clone();
            b[i] += 1;
            if set.contains(&b) {
                out.push_str(&format!("  {} -> {};\n", name(a), name(&b)));
            }
        }
    }
    out.push_str("}\n");
    out
}
