//! Small named instances used in docs and throughout the test-suite.

use crate::cycle_system::CycleSystem;
use crate::graph::MultiGraph;
use crate::matroid::Matroid;

/// Plane graph on 5 vertices and 7 edges whose three bounded faces
/// {3,4,7}, {2,3,6}, {1,2,5} form a circuit system. Edges: 1 = v0v1,
/// 2 = v0v2, 3 = v0v3, 4 = v0v4, 5 = v1v2, 6 = v2v3, 7 = v3v4.
pub fn wheel_like_graph() -> MultiGraph {
    MultiGraph::new(
        5,
        vec![
            (0, 1, "1"),
            (0, 2, "2"),
            (0, 3, "3"),
            (0, 4, "4"),
            (1, 2, "5"),
            (2, 3, "6"),
            (3, 4, "7"),
        ],
    )
    .expect("static edge list is well-formed")
}

pub fn wheel_like_system() -> CycleSystem {
    let m = Matroid::graphic(wheel_like_graph()).expect("static graph");
    let g = m.ground().clone();
    let cycles = vec![
        g.subset_of_labels(["3", "4", "7"]).unwrap(),
        g.subset_of_labels(["2", "3", "6"]).unwrap(),
        g.subset_of_labels(["1", "2", "5"]).unwrap(),
    ];
    CycleSystem::new(m, cycles).expect("known circuit system")
}

/// Triangle a = v0v1, b = v0v2, c = v1v2 plus an edge d parallel to c.
/// Carries the cycle system {a,b,c}, {c,d}.
pub fn doubled_triangle_graph() -> MultiGraph {
    MultiGraph::new(
        3,
        vec![(0, 1, "a"), (0, 2, "b"), (1, 2, "c"), (1, 2, "d")],
    )
    .expect("static edge list is well-formed")
}

pub fn doubled_triangle_system() -> CycleSystem {
    let m = Matroid::graphic(doubled_triangle_graph()).expect("static graph");
    let g = m.ground().clone();
    let cycles = vec![
        g.subset_of_labels(["a", "b", "c"]).unwrap(),
        g.subset_of_labels(["c", "d"]).unwrap(),
    ];
    CycleSystem::new(m, cycles).expect("known cycle system")
}

/// Complete bipartite graph K₃,₃ on parts {0,1,2} and {3,4,5};
/// edge u-v labeled "u-v".
pub fn k33_graph() -> MultiGraph {
    let mut edges = Vec::new();
    for u in 0..3usize {
        for v in 3..6usize {
            edges.push((u, v, format!("{u}-{v}")));
        }
    }
    MultiGraph::new(6, edges).expect("static edge list is well-formed")
}

/// Graph on 7 vertices and 13 edges with exactly one circuit system:
/// {3476, 145, 245, 745, 134, 234, 567}. Vertices 1..7 (0 unused is
/// avoided by 0-indexing v1..v7 as 0..6); edge "uv" joins v_u and v_v.
pub fn unique_system_graph() -> MultiGraph {
    let pairs = [
        (4, 1),
        (4, 2),
        (4, 3),
        (4, 5),
        (4, 7),
        (1, 3),
        (1, 5),
        (2, 3),
        (2, 5),
        (3, 6),
        (5, 6),
        (5, 7),
        (6, 7),
    ];
    let edges: Vec<(usize, usize, String)> = pairs
        .iter()
        .map(|&(u, v)| (u - 1, v - 1, format!("{u}{v}")))
        .collect();
    MultiGraph::new(7, edges).expect("static edge list is well-formed")
}
