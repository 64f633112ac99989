//! Matroids with rank/independence oracles.
//!
//! Concrete backends: graphic (cycle matroid of a multigraph), uniform, and
//! circuit-defined. Derived views: dual, minor (deletion/contraction by the
//! rank formula), and direct sum. Everything is immutable after construction
//! and cheap to clone.

use std::sync::Arc;

use crate::graph::{MultiGraph, UnionFind};
use crate::subset::{Ground, GroundSet, Subset};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Matroid {
    ground: Ground,
    backend: Arc<Backend>,
}

#[derive(Debug)]
enum Backend {
    Graphic(MultiGraph),
    Uniform { rank: usize },
    Circuits { circuits: Vec<Subset> },
    Dual(Matroid),
    Minor {
        parent: Matroid,
        /// Parent index of each surviving element, in parent ground order.
        kept: Vec<usize>,
        /// Contracted elements, in parent indices.
        contracted: Subset,
    },
    DirectSum {
        parts: Vec<Matroid>,
        /// Index offset of each part in the combined ground set.
        offsets: Vec<usize>,
    },
}

impl Matroid {
    // ----- constructors -----

    /// Cycle matroid of a multigraph; ground set is the edge label list.
    pub fn graphic(graph: MultiGraph) -> Result<Matroid> {
        let ground = GroundSet::new(graph.labels().iter().cloned())?;
        Ok(Matroid {
            ground,
            backend: Arc::new(Backend::Graphic(graph)),
        })
    }

    /// Uniform matroid U(m, n) on labels `1..=n`.
    pub fn uniform(m: usize, n: usize) -> Result<Matroid> {
        if m > n {
            return Err(Error::Domain(format!("uniform({m},{n}): rank exceeds size")));
        }
        let ground = GroundSet::new((1..=n).map(|i| i.to_string()))?;
        Ok(Matroid {
            ground,
            backend: Arc::new(Backend::Uniform { rank: m }),
        })
    }

    /// Free matroid (every set independent) on the given labels.
    pub fn free<S: Into<String>>(labels: Vec<S>) -> Result<Matroid> {
        let ground = GroundSet::new(labels)?;
        let rank = ground.size();
        Ok(Matroid {
            ground,
            backend: Arc::new(Backend::Uniform { rank }),
        })
    }

    /// Circuit-defined matroid. The listed circuits must be nonempty and form
    /// an antichain; both are checked here.
    pub fn from_circuits(ground: Ground, circuits: Vec<Subset>) -> Result<Matroid> {
        for c in &circuits {
            if c.is_empty() {
                return Err(Error::Domain("empty set listed as a circuit".into()));
            }
        }
        let mut circuits = circuits;
        circuits.sort_by(|a, b| a.cmp_canonical(b));
        circuits.dedup();
        for (i, c) in circuits.iter().enumerate() {
            for (j, d) in circuits.iter().enumerate() {
                if i != j && c.is_subset_of(d) {
                    return Err(Error::Domain(
                        "circuit list contains a set and a proper superset".into(),
                    ));
                }
            }
        }
        Ok(Matroid {
            ground,
            backend: Arc::new(Backend::Circuits { circuits }),
        })
    }

    // ----- basics -----

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.size()
    }

    pub fn full_rank(&self) -> usize {
        self.rank(&self.ground.full_subset())
    }

    /// Corank g(M) = |E| - r(M).
    pub fn corank(&self) -> usize {
        self.size() - self.full_rank()
    }

    pub fn rank(&self, s: &Subset) -> usize {
        match &*self.backend {
            Backend::Graphic(g) => {
                let mut uf = UnionFind::new(g.vertices());
                let mut r = 0;
                for e in s.iter() {
                    let (u, v) = g.endpoints(e);
                    if uf.union(u, v) {
                        r += 1;
                    }
                }
                r
            }
            Backend::Uniform { rank } => s.len().min(*rank),
            Backend::Circuits { circuits } => {
                // Greedy: a maximal independent subset of S has size r(S).
                let mut indep = self.ground.empty_subset();
                let mut r = 0;
                for e in s.iter() {
                    indep.insert(e);
                    if circuits.iter().any(|c| c.is_subset_of(&indep)) {
                        indep.remove(e);
                    } else {
                        r += 1;
                    }
                }
                r
            }
            Backend::Dual(m) => {
                let full = m.ground.full_subset();
                s.len() + m.rank(&full.difference(s)) - m.rank(&full)
            }
            Backend::Minor {
                parent,
                kept,
                contracted,
            } => {
                let mut up = contracted.clone();
                for i in s.iter() {
                    up.insert(kept[i]);
                }
                parent.rank(&up) - parent.rank(contracted)
            }
            Backend::DirectSum { parts, offsets } => {
                let mut r = 0;
                for (k, part) in parts.iter().enumerate() {
                    let mut sub = part.ground.empty_subset();
                    for i in s.iter() {
                        if i >= offsets[k] && i < offsets[k] + part.size() {
                            sub.insert(i - offsets[k]);
                        }
                    }
                    r += part.rank(&sub);
                }
                r
            }
        }
    }

    pub fn is_independent(&self, s: &Subset) -> bool {
        self.rank(s) == s.len()
    }

    pub fn is_dependent(&self, s: &Subset) -> bool {
        !self.is_independent(s)
    }

    // ----- circuits and bases -----

    /// All circuits, in canonical order (cardinality, then lexicographic in
    /// ground order). Computed by cardinality-increasing subset search,
    /// pruning every superset of a circuit already found; for circuit-defined
    /// backends the stored list is returned directly.
    pub fn circuits(&self) -> Vec<Subset> {
        if let Backend::Circuits { circuits } = &*self.backend {
            return circuits.clone();
        }
        let n = self.size();
        let mut found: Vec<Subset> = Vec::new();
        for k in 1..=n {
            for_each_combination(n, k, |indices| {
                let s = self.ground.subset_of_indices(indices.iter().copied());
                if found.iter().any(|c| c.is_subset_of(&s)) {
                    return;
                }
                if self.rank(&s) < k {
                    found.push(s);
                }
            });
        }
        found
    }

    /// The unique circuit contained in `B ∪ {e}` for a basis `B` and `e ∉ B`.
    pub fn fundamental_circuit(&self, basis: &Subset, e: usize) -> Result<Subset> {
        if e >= self.size() {
            return Err(Error::Domain(format!("element index {e} out of range")));
        }
        if basis.contains(e) {
            return Err(Error::Domain(format!(
                "element {} lies in the basis",
                self.ground.label(e)
            )));
        }
        if !self.is_basis(basis) {
            return Err(Error::Domain("set is not a basis".into()));
        }
        let be = basis.with(e);
        let mut circuit = self.ground.empty_subset();
        circuit.insert(e);
        // x lies on the unique circuit iff removing it restores independence
        for x in basis.iter() {
            if self.is_independent(&be.without(x)) {
                circuit.insert(x);
            }
        }
        Ok(circuit)
    }

    pub fn is_basis(&self, s: &Subset) -> bool {
        s.len() == self.full_rank() && self.is_independent(s)
    }

    /// Loops (rank-0 singletons) and bridges (elements in every basis).
    pub fn loops_and_bridges(&self) -> (Subset, Subset) {
        let full = self.ground.full_subset();
        let r = self.rank(&full);
        let mut loops = self.ground.empty_subset();
        let mut bridges = self.ground.empty_subset();
        for e in 0..self.size() {
            let single = self.ground.subset_of_indices([e]);
            if self.rank(&single) == 0 {
                loops.insert(e);
            } else if self.rank(&full.without(e)) == r - 1 {
                bridges.insert(e);
            }
        }
        (loops, bridges)
    }

    /// Every basis, in canonical (lexicographic) order, with a cap on how
    /// many may be produced.
    pub fn bases_capped(&self, cap: usize) -> Result<Vec<Subset>> {
        let r = self.full_rank();
        let n = self.size();
        let mut out = Vec::new();
        let mut current = self.ground.empty_subset();
        self.bases_rec(0, 0, r, n, &mut current, cap, &mut out)?;
        Ok(out)
    }

    pub fn bases(&self) -> Vec<Subset> {
        self.bases_capped(usize::MAX)
            .expect("uncapped basis enumeration cannot exceed its cap")
    }

    fn bases_rec(
        &self,
        next: usize,
        chosen: usize,
        r: usize,
        n: usize,
        current: &mut Subset,
        cap: usize,
        out: &mut Vec<Subset>,
    ) -> Result<()> {
        if chosen == r {
            if out.len() >= cap {
                return Err(Error::Budget {
                    message: format!("basis enumeration cap {cap} exceeded"),
                    levels_completed: 0,
                });
            }
            out.push(current.clone());
            return Ok(());
        }
        if n - next < r - chosen {
            return Ok(());
        }
        for e in next..n {
            if n - e < r - chosen {
                break;
            }
            current.insert(e);
            if self.is_independent(current) {
                self.bases_rec(e + 1, chosen + 1, r, n, current, cap, out)?;
            }
            current.remove(e);
        }
        Ok(())
    }

    // ----- views -----

    pub fn delete(&self, s: &Subset) -> Matroid {
        self.minor(s, &self.ground.empty_subset())
    }

    /// Contraction by the rank formula r_{M/T}(S) = r(S ∪ T) - r(T); defined
    /// for arbitrary T (loops in T behave as deletions).
    pub fn contract(&self, s: &Subset) -> Matroid {
        self.minor(s, s)
    }

    fn minor(&self, removed: &Subset, contracted: &Subset) -> Matroid {
        let kept: Vec<usize> = (0..self.size()).filter(|&i| !removed.contains(i)).collect();
        let labels: Vec<String> = kept
            .iter()
            .map(|&i| self.ground.label(i).to_string())
            .collect();
        let ground = GroundSet::new(labels).expect("labels of a minor stay distinct");
        Matroid {
            ground,
            backend: Arc::new(Backend::Minor {
                parent: self.clone(),
                kept,
                contracted: contracted.clone(),
            }),
        }
    }

    pub fn dual(&self) -> Matroid {
        if let Backend::Dual(inner) = &*self.backend {
            return inner.clone();
        }
        Matroid {
            ground: self.ground.clone(),
            backend: Arc::new(Backend::Dual(self.clone())),
        }
    }

    // ----- connectivity -----

    /// Connected components: non-loop, non-bridge elements grouped by
    /// shared circuits; each loop and each bridge forms its own singleton.
    pub fn components(&self) -> Vec<Subset> {
        let n = self.size();
        let mut uf = UnionFind::new(n);
        for c in self.circuits() {
            if let Some(first) = c.min_index() {
                for e in c.iter() {
                    uf.union(first, e);
                }
            }
        }
        let mut comps: std::collections::BTreeMap<usize, Subset> = Default::default();
        for e in 0..n {
            let root = uf.find(e);
            comps
                .entry(root)
                .or_insert_with(|| self.ground.empty_subset())
                .insert(e);
        }
        let mut out: Vec<Subset> = comps.into_values().collect();
        out.sort_by(|a, b| {
            a.min_index()
                .cmp(&b.min_index())
        });
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.size() <= 1 {
            return true;
        }
        self.components().len() == 1
    }

    // ----- sums and connections -----

    pub fn direct_sum(parts: Vec<Matroid>) -> Result<Matroid> {
        let mut labels = Vec::new();
        let mut offsets = Vec::new();
        for p in &parts {
            offsets.push(labels.len());
            labels.extend(p.ground.labels().iter().cloned());
        }
        let ground = GroundSet::new(labels)?;
        Ok(Matroid {
            ground,
            backend: Arc::new(Backend::DirectSum { parts, offsets }),
        })
    }

    /// Parallel connection of two matroids whose ground sets share exactly
    /// the element labeled `p`, which must be neither a loop nor a bridge in
    /// either. The result is circuit-defined by
    /// cir(M) ∪ cir(N) ∪ {(C ∪ D) \ p : p ∈ C ∈ cir(M), p ∈ D ∈ cir(N)}.
    pub fn parallel_connection(m: &Matroid, n: &Matroid, p: &str) -> Result<Matroid> {
        let (ground, circuits) = connection_circuits(m, n, p)?;
        Matroid::from_circuits(ground, circuits)
    }

    /// The 2-sum M ⊕₂ N: the parallel connection along `p` with `p` deleted.
    pub fn two_sum(m: &Matroid, n: &Matroid, p: &str) -> Result<Matroid> {
        let (ground, circuits) = connection_circuits(m, n, p)?;
        let p_idx = ground.index_of(p).expect("p is in the connection ground");
        // Circuits of a deletion are exactly the circuits avoiding the
        // deleted element.
        let kept_labels: Vec<String> = ground
            .labels()
            .iter()
            .filter(|l| l.as_str() != p)
            .cloned()
            .collect();
        let small = GroundSet::new(kept_labels)?;
        let mut mapped = Vec::new();
        for c in circuits {
            if c.contains(p_idx) {
                continue;
            }
            let s = small.subset_of_labels(
                c.iter().map(|i| ground.label(i)).collect::<Vec<_>>().iter().map(|s| &**s),
            )?;
            mapped.push(s);
        }
        Matroid::from_circuits(small, mapped)
    }

    // ----- GF(2) circuit space -----

    /// Rank over GF(2) of the indicator vectors, by bitwise elimination.
    pub fn circuit_space_rank(&self, vectors: &[Subset]) -> usize {
        let mut pivots: Vec<Subset> = Vec::new();
        for v in vectors {
            let mut row = v.clone();
            loop {
                let Some(lead) = row.min_index() else { break };
                match pivots.iter().find(|p| p.min_index() == Some(lead)) {
                    Some(p) => row.xor_assign(p),
                    None => {
                        pivots.push(row);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

fn connection_circuits(m: &Matroid, n: &Matroid, p: &str) -> Result<(Ground, Vec<Subset>)> {
    let pm = m
        .ground
        .index_of(p)
        .ok_or_else(|| Error::Domain(format!("element {p:?} not in the first ground set")))?;
    let pn = n
        .ground
        .index_of(p)
        .ok_or_else(|| Error::Domain(format!("element {p:?} not in the second ground set")))?;
    for l in m.ground.labels() {
        if l != p && n.ground.index_of(l).is_some() {
            return Err(Error::Domain(format!(
                "ground sets share {l:?} in addition to {p:?}"
            )));
        }
    }
    for (mat, idx, side) in [(m, pm, "first"), (n, pn, "second")] {
        let (loops, bridges) = mat.loops_and_bridges();
        if loops.contains(idx) || bridges.contains(idx) {
            return Err(Error::Domain(format!(
                "element {p:?} is a loop or bridge in the {side} matroid"
            )));
        }
    }
    let mut labels: Vec<String> = m.ground.labels().to_vec();
    labels.extend(n.ground.labels().iter().filter(|l| l.as_str() != p).cloned());
    let ground = GroundSet::new(labels)?;
    let lift = |mat: &Matroid, s: &Subset| -> Subset {
        ground
            .subset_of_labels(
                s.iter()
                    .map(|i| mat.ground.label(i))
                    .collect::<Vec<_>>()
                    .iter()
                    .map(|l| &**l),
            )
            .expect("connection ground contains both label sets")
    };
    let p_idx = ground.index_of(p).unwrap();
    let m_circuits = m.circuits();
    let n_circuits = n.circuits();
    let mut circuits: Vec<Subset> = Vec::new();
    for c in &m_circuits {
        circuits.push(lift(m, c));
    }
    for d in &n_circuits {
        circuits.push(lift(n, d));
    }
    for c in &m_circuits {
        if !c.contains(pm) {
            continue;
        }
        for d in &n_circuits {
            if !d.contains(pn) {
                continue;
            }
            circuits.push(lift(m, c).union(&lift(n, d)).without(p_idx));
        }
    }
    // Enforce containment-minimality across the combined list.
    let minimal: Vec<Subset> = circuits
        .iter()
        .filter(|c| {
            !circuits
                .iter()
                .any(|d| d != *c && d.is_subset_of(c) && d.len() < c.len())
        })
        .cloned()
        .collect();
    Ok((ground, minimal))
}

/// Visit every k-combination of 0..n in lexicographic order.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
