//! Multigraphs with labeled edges, plus the two text formats used for input:
//! a plain edge list (`label u v`, one per line, `#` comments) and the
//! standard graph6 encoding for catalogs of simple graphs.

use crate::{Error, Result};

/// A multigraph on vertices `0..vertices` with labeled edges. Loops and
/// parallel edges are allowed; labels must be distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<String>,
}

impl MultiGraph {
    pub fn new<S: Into<String>>(vertices: usize, edges: Vec<(usize, usize, S)>) -> Result<Self> {
        let mut ends = Vec::with_capacity(edges.len());
        let mut labels = Vec::with_capacity(edges.len());
        for (u, v, l) in edges {
            if u >= vertices || v >= vertices {
                return Err(Error::Domain(format!(
                    "edge endpoint out of range: ({u},{v}) with {vertices} vertices"
                )));
            }
            ends.push((u, v));
            labels.push(l.into());
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::Domain(format!("duplicate edge label {l:?}")));
            }
        }
        Ok(MultiGraph {
            vertices,
            edges: ends,
            labels,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    /// Edge indices incident to `v`, excluding loops at `v`.
    pub fn star(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                (a == v) != (b == v)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices <= 1 {
            return true;
        }
        let mut uf = UnionFind::new(self.vertices);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let root = uf.find(0);
        (1..self.vertices).all(|v| uf.find(v) == root)
    }

    /// The cone over this graph: a new vertex joined to every existing
    /// vertex by an edge labeled `f<i>`.
    pub fn cone(&self) -> Result<MultiGraph> {
        let apex = self.vertices;
        let mut edges: Vec<(usize, usize, String)> = self
            .edges
            .iter()
            .zip(&self.labels)
            .map(|(&(u, v), l)| (u, v, l.clone()))
            .collect();
        for v in 0..self.vertices {
            edges.push((v, apex, format!("f{v}")));
        }
        MultiGraph::new(apex + 1, edges)
    }

    /// Complete graph on `n` vertices with edges labeled `u-v` (u < v).
    pub fn complete(n: usize) -> MultiGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v, format!("{u}-{v}")));
            }
        }
        MultiGraph::new(n, edges).expect("complete graph is well-formed")
    }

    /// Parse the edge-list format: one `label u v` per line, `#` comments.
    pub fn parse_edge_list(text: &str) -> Result<MultiGraph> {
        let mut edges: Vec<(usize, usize, String)> = Vec::new();
        let mut max_vertex = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected `label u v`, got {line:?}"),
                });
            }
            let u: usize = parts[1].parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("bad vertex {:?}", parts[1]),
            })?;
            let v: usize = parts[2].parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("bad vertex {:?}", parts[2]),
            })?;
            max_vertex = max_vertex.max(u).max(v);
            edges.push((u, v, parts[0].to_string()));
        }
        let vertices = if edges.is_empty() { 0 } else { max_vertex + 1 };
        MultiGraph::new(vertices, edges)
    }

    /// Parse one graph6 line (simple graph). Edges are labeled `u-v`.
    pub fn parse_graph6(line: &str) -> Result<MultiGraph> {
        let bytes = line.trim().as_bytes();
        let bad = |message: String| Error::Parse { line: 1, message };
        if bytes.is_empty() {
            return Err(bad("empty graph6 line".into()));
        }
        let mut pos = 0usize;
        if bytes[0] == b'>' {
            // optional ">>graph6<<" header
            let header = b">>graph6<<";
            if bytes.len() >= header.len() && &bytes[..header.len()] == header {
                pos = header.len();
            } else {
                return Err(bad("malformed graph6 header".into()));
            }
        }
        let val = |b: u8| -> Result<u64> {
            if (63..=126).contains(&b) {
                Ok((b - 63) as u64)
            } else {
                Err(bad(format!("invalid graph6 byte {b}")))
            }
        };
        if pos >= bytes.len() {
            return Err(bad("truncated graph6 line".into()));
        }
        let n: usize = if bytes[pos] == 126 {
            if pos + 1 < bytes.len() && bytes[pos + 1] == 126 {
                // 8-byte form for n >= 258048
                if bytes.len() < pos + 8 {
                    return Err(bad("truncated graph6 size".into()));
                }
                let mut n = 0u64;
                for i in 2..8 {
                    n = n << 6 | val(bytes[pos + i])?;
                }
                pos += 8;
                n as usize
            } else {
                if bytes.len() < pos + 4 {
                    return Err(bad("truncated graph6 size".into()));
                }
                let mut n = 0u64;
                for i in 1..4 {
                    n = n << 6 | val(bytes[pos + i])?;
                }
                pos += 4;
                n as usize
            }
        } else {
            let n = val(bytes[pos])? as usize;
            pos += 1;
            n
        };
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        if bytes.len() < pos + nbytes {
            return Err(bad(format!(
                "graph6 body too short: need {nbytes} bytes after size"
            )));
        }
        let mut edges: Vec<(usize, usize, String)> = Vec::new();
        let mut bit = 0usize;
        // bits fill the upper triangle column by column: (0,1), (0,2), (1,2), ...
        for v in 1..n {
            for u in 0..v {
                let byte = val(bytes[pos + bit / 6])?;
                if byte >> (5 - bit % 6) & 1 == 1 {
                    edges.push((u, v, format!("{u}-{v}")));
                }
                bit += 1;
            }
        }
        MultiGraph::new(n, edges)
    }

    /// graph6 encoding (simple graphs only; parallel edges and loops are
    /// rejected).
    pub fn to_graph6(&self) -> Result<String> {
        let n = self.vertices;
        if n > 62 {
            return Err(Error::Domain("graph6 writer supports n <= 62".into()));
        }
        let mut adj = vec![false; n * n];
        for &(u, v) in &self.edges {
            if u == v || adj[u * n + v] {
                return Err(Error::Domain(
                    "graph6 cannot encode loops or parallel edges".into(),
                ));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let mut out = vec![(n as u8) + 63];
        let mut acc = 0u8;
        let mut nb = 0;
        for v in 1..n {
            for u in 0..v {
                acc = acc << 1 | u8::from(adj[u * n + v]);
                nb += 1;
                if nb == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    nb = 0;
                }
            }
        }
        if nb > 0 {
            out.push((acc << (6 - nb)) + 63);
        }
        Ok(String::from_utf8(out).unwrap())
    }
}

/// Plain union-find over vertex indices.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two elements were in different classes.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            false
        } else {
            self.parent[ra] = rb;
            true
        }
    }
}
