//! DC-trees and the basis ↔ coparking bijections they induce, plus the
//! generalized tree that only needs nonempty unique unions at each node.

use crate::coparking;
use crate::cycle_system::{unique_union, CycleSystem};
use crate::matroid::Matroid;
use crate::subset::{Ground, Subset};
use crate::{Error, Result};

/// A total order ξ on the ground set.
#[derive(Debug, Clone)]
pub struct GroundOrdering {
    /// pos[e] = rank of element e under ξ (larger = later).
    pos: Vec<usize>,
}

impl GroundOrdering {
    /// Ground-set order as given.
    pub fn natural(ground: &Ground) -> GroundOrdering {
        GroundOrdering {
            pos: (0..ground.size()).collect(),
        }
    }

    /// Order given as the full label list, smallest first.
    pub fn from_labels<'a, I: IntoIterator<Item = &'a str>>(
        ground: &Ground,
        labels: I,
    ) -> Result<GroundOrdering> {
        let mut pos = vec![usize::MAX; ground.size()];
        let mut seen = 0usize;
        for (rank, l) in labels.into_iter().enumerate() {
            let i = ground
                .index_of(l)
                .ok_or_else(|| Error::Domain(format!("ordering names unknown element {l:?}")))?;
            if pos[i] != usize::MAX {
                return Err(Error::Domain(format!("ordering repeats element {l:?}")));
            }
            pos[i] = rank;
            seen += 1;
        }
        if seen != ground.size() {
            return Err(Error::Domain(format!(
                "ordering lists {} of {} elements",
                seen,
                ground.size()
            )));
        }
        Ok(GroundOrdering { pos })
    }

    pub fn max_of(&self, s: &Subset) -> Option<usize> {
        s.iter().max_by_key(|&e| self.pos[e])
    }
}

#[derive(Debug)]
pub struct DCTree {
    /// Ground set of the root matroid; leaf bases live here.
    pub ground: Ground,
    pub root: DCNode,
}

#[derive(Debug)]
pub struct DCNode {
    /// Surviving elements of this minor, as root-ground labels.
    pub elements: Vec<String>,
    pub kind: DCNodeKind,
}

#[derive(Debug)]
pub enum DCNodeKind {
    Leaf {
        /// basis of the root matroid: leaf bridges ∪ contracted path elements
        basis: Subset,
        /// coordinate counts of right-edge labels along the root path
        a: Vec<usize>,
    },
    Branch {
        /// element branched on (root-ground label)
        e: String,
        /// root coordinate of its container cycle
        container: usize,
        /// deletion child
        left: Box<DCNode>,
        /// contraction child
        right: Box<DCNode>,
    },
}

/// How a node's unique union is allowed to degenerate.
#[derive(Clone, Copy, PartialEq, Eq)]
enum TreeMode {
    /// valid cycle systems: an empty 𝒞_σ indicates a bug
    Strict,
    /// arbitrary cycle families: an empty 𝒞_σ is a reported stall
    Generalized,
}

struct TreeBuilder<'a> {
    root_ground: Ground,
    xi: &'a GroundOrdering,
    mode: TreeMode,
    deleted: Vec<String>,
    contracted: Vec<String>,
}

impl TreeBuilder<'_> {
    /// One node of the recursion. `cycles` live on `m`'s ground; `to_root`
    /// maps the node's elements and `coord` its cycle indices back to the
    /// root; `acc` counts contractions per root coordinate so far.
    fn build(
        &mut self,
        m: &Matroid,
        cycles: &[Subset],
        to_root: &[usize],
        coord: &[usize],
        acc: &[usize],
    ) -> Result<DCNode> {
        let elements: Vec<String> = to_root
            .iter()
            .map(|&r| self.root_ground.label(r).to_string())
            .collect();
        let (loops, bridges) = m.loops_and_bridges();
        if loops.len() + bridges.len() == m.size() {
            let mut basis = self.root_ground.empty_subset();
            for e in bridges.iter() {
                basis.insert(to_root[e]);
            }
            for l in &self.contracted {
                basis.insert(self.root_ground.index_of(l).expect("path labels are root labels"));
            }
            return Ok(DCNode {
                elements,
                kind: DCNodeKind::Leaf { basis, a: acc.to_vec() },
            });
        }
        // steps (2)-(4): drop loop containers from σ until the ξ-max of 𝒞_σ
        // is branchable
        let mut sigma: Vec<usize> = (0..cycles.len()).collect();
        let (e, i_node) = loop {
            let uu = unique_union(m.ground(), sigma.iter().map(|&i| &cycles[i]));
            if uu.is_empty() {
                return match self.mode {
                    TreeMode::Strict => Err(Error::Internal(
                        "unique union emptied below a verified cycle system".into(),
                    )),
                    TreeMode::Generalized => Err(Error::Stall {
                        deleted: self.deleted.clone(),
                        contracted: self.contracted.clone(),
                        sigma: sigma.iter().map(|&i| coord[i]).collect(),
                    }),
                };
            }
            let e = uu
                .iter()
                .max_by_key(|&x| self.xi.pos[to_root[x]])
                .expect("nonempty unique union");
            let i = *sigma
                .iter()
                .find(|&&i| cycles[i].contains(e))
                .expect("element of the unique union has a container in σ");
            if m.rank(&m.ground().subset_of_indices([e])) == 0 {
                sigma.retain(|&j| j != i);
                if sigma.is_empty() {
                    return Err(Error::Internal(
                        "σ emptied while loops remained; node should have been a leaf".into(),
                    ));
                }
            } else {
                break (e, i);
            }
        };
        let e_label = self.root_ground.label(to_root[e]).to_string();
        let single = m.ground().subset_of_indices([e]);
        let child_to_root: Vec<usize> = to_root
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != e)
            .map(|(_, &r)| r)
            .collect();

        // left: delete e, drop the container (stripping e from every
        // remaining cycle; a no-op for genuine cycle systems)
        let del = m.delete(&single);
        let del_cycles: Vec<Subset> = cycles
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i_node)
            .map(|(_, c)| shift_out(&c.without(e), e, del.ground()))
            .collect();
        let del_coord: Vec<usize> = coord
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i_node)
            .map(|(_, &r)| r)
            .collect();
        self.deleted.push(e_label.clone());
        let left = self.build(&del, &del_cycles, &child_to_root, &del_coord, acc)?;
        self.deleted.pop();

        // right: contract e, strip it from every cycle
        let con = m.contract(&single);
        let con_cycles: Vec<Subset> = cycles
            .iter()
            .map(|c| shift_out(&c.without(e), e, con.ground()))
            .collect();
        let mut acc2 = acc.to_vec();
        acc2[coord[i_node]] += 1;
        self.contracted.push(e_label.clone());
        let right = self.build(&con, &con_cycles, &child_to_root, coord, &acc2)?;
        self.contracted.pop();

        Ok(DCNode {
            elements,
            kind: DCNodeKind::Branch {
                e: e_label,
                container: coord[i_node],
                left: Box::new(left),
                right: Box::new(right),
            },
        })
    }
}

/// Re-index a subset after element `e` leaves the ground set.
fn shift_out(s: &Subset, e: usize, child_ground: &Ground) -> Subset {
    child_ground.subset_of_indices(s.iter().map(|x| if x > e { x - 1 } else { x }))
}

/// The DC-tree T(𝒞, ξ).
pub fn build_dc_tree(cs: &CycleSystem, xi: &GroundOrdering) -> Result<DCTree> {
    let ground = cs.matroid().ground().clone();
    let mut builder = TreeBuilder {
        root_ground: ground.clone(),
        xi,
        mode: TreeMode::Strict,
        deleted: Vec::new(),
        contracted: Vec::new(),
    };
    let g = cs.g();
    let to_root: Vec<usize> = (0..ground.size()).collect();
    let coord: Vec<usize> = (0..g).collect();
    let root = builder.build(cs.matroid(), cs.cycles(), &to_root, &coord, &vec![0; g])?;
    Ok(DCTree { ground, root })
}

/// Leaf labels in depth-first (left before right) order.
pub fn leaves(tree: &DCTree) -> Vec<(Subset, Vec<usize>)> {
    fn walk<'t>(node: &'t DCNode, out: &mut Vec<(Subset, Vec<usize>)>) {
        match &node.kind {
            DCNodeKind::Leaf { basis, a } => out.push((basis.clone(), a.clone())),
            DCNodeKind::Branch { left, right, .. } => {
                walk(left, out);
                walk(right, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(&tree.root, &mut out);
    out
}

/// Run the DC-tree construction demanding only that each node's 𝒞_σ be
/// nonempty; input need not be a cycle system. Returns the leaf coordinate
/// vectors (the multicomplex P*), or a stall error naming the failing minor.
pub fn generalized_dc_tree(
    m: &Matroid,
    cycles: &[Subset],
    xi: &GroundOrdering,
) -> Result<Vec<Vec<usize>>> {
    if cycles.len() != m.corank() {
        return Err(Error::Domain(format!(
            "expected {} cycles (the corank), got {}",
            m.corank(),
            cycles.len()
        )));
    }
    let ground = m.ground().clone();
    let mut builder = TreeBuilder {
        root_ground: ground.clone(),
        xi,
        mode: TreeMode::Generalized,
        deleted: Vec::new(),
        contracted: Vec::new(),
    };
    let to_root: Vec<usize> = (0..ground.size()).collect();
    let coord: Vec<usize> = (0..cycles.len()).collect();
    let root = builder.build(m, cycles, &to_root, &coord, &vec![0; cycles.len()])?;
    let tree = DCTree { ground, root };
    Ok(leaves(&tree).into_iter().map(|(_, a)| a).collect())
}

/// Algorithm: σ ← [g]; take e = max_ξ(𝒞_σ) with container i; if e ∉ B drop i
/// from σ, else count it in a_i and shrink the working C_i.
pub fn basis_to_coparking(
    cs: &CycleSystem,
    xi: &GroundOrdering,
    basis: &Subset,
) -> Result<Vec<usize>> {
    if !cs.matroid().is_basis(basis) {
        return Err(Error::Domain("set is not a basis".into()));
    }
    let ground = cs.matroid().ground();
    let mut cycles: Vec<Subset> = cs.cycles().to_vec();
    let mut sigma: Vec<usize> = (0..cs.g()).collect();
    let mut a = vec![0usize; cs.g()];
    while !sigma.is_empty() {
        let uu = unique_union(ground, sigma.iter().map(|&i| &cycles[i]));
        let Some(e) = xi.max_of(&uu) else {
            return Err(Error::Internal(
                "unique union emptied during basis-to-coparking".into(),
            ));
        };
        let i = *sigma
            .iter()
            .find(|&&i| cycles[i].contains(e))
            .expect("element of the unique union has a container");
        if !basis.contains(e) {
            sigma.retain(|&j| j != i);
        } else {
            a[i] += 1;
            cycles[i].remove(e);
        }
    }
    Ok(a)
}

/// Algorithm: B ← E; take e = max_ξ(𝒞_σ) with container i and decrement a_i;
/// when it goes negative, drop i from σ and e from B, else shrink C_i.
pub fn coparking_to_basis(
    cs: &CycleSystem,
    xi: &GroundOrdering,
    a: &[usize],
) -> Result<Subset> {
    if !coparking::verify(cs, a)?.accepted() {
        return Err(Error::Domain("vector is not a coparking function".into()));
    }
    let ground = cs.matroid().ground();
    let mut cycles: Vec<Subset> = cs.cycles().to_vec();
    let mut sigma: Vec<usize> = (0..cs.g()).collect();
    let mut budget: Vec<i64> = a.iter().map(|&v| v as i64).collect();
    let mut basis = ground.full_subset();
    while !sigma.is_empty() {
        let uu = unique_union(ground, sigma.iter().map(|&i| &cycles[i]));
        let Some(e) = xi.max_of(&uu) else {
            return Err(Error::Internal(
                "unique union emptied during coparking-to-basis".into(),
            ));
        };
        let i = *sigma
            .iter()
            .find(|&&i| cycles[i].contains(e))
            .expect("element of the unique union has a container");
        budget[i] -= 1;
        if budget[i] < 0 {
            sigma.retain(|&j| j != i);
            basis.remove(e);
        } else {
            cycles[i].remove(e);
        }
    }
    Ok(basis)
}

/// DOT rendering; right (contraction) edges carry "e:C_i" labels.
pub fn tree_dot(tree: &DCTree) -> String {
    fn walk(node: &DCNode, ground: &Ground, id: &mut usize, out: &mut String) -> usize {
        let me = *id;
        *id += 1;
        match &node.kind {
            DCNodeKind::Leaf { basis, a } => {
                let parts: Vec<String> = a.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!(
                    "  n{me} [shape=box,label=\"B={{{}}}\\na=({})\"];\n",
                    ground.format_subset(basis),
                    parts.join(",")
                ));
            }
            DCNodeKind::Branch { e, container, left, right } => {
                out.push_str(&format!(
                    "  n{me} [label=\"{{{}}}\"];\n",
                    node.elements.join(",")
                ));
                let l = walk(left, ground, id, out);
                out.push_str(&format!("  n{me} -> n{l};\n"));
                let r = walk(right, ground, id, out);
                out.push_str(&format!(
                    "  n{me} -> n{r} [label=\"{}:C{}\"];\n",
                    e,
                    container + 1
                ));
            }
        }
        me
    }
    let mut out = String::from("digraph dctree {\n");
    let mut id = 0;
    walk(&tree.root, &tree.ground, &mut id, &mut out);
    out.push_str("}\n");
    out
}

/// Leaf table as TSV: basis, coparking vector, degree.
pub fn leaves_tsv(tree: &DCTree) -> String {
    let mut out = String::from("basis\tcoparking\tdegree\n");
    for (basis, a) in leaves(tree) {
        let parts: Vec<String> = a.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!(
            "{}\t({})\t{}\n",
            tree.ground.format_subset(&basis),
            parts.join(","),
            coparking::degree(&a)
        ));
    }
    out
}
