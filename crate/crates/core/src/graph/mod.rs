//! Simple undirected graphs on at most 64 vertices, stored as bitset rows.

mod canon;
mod cycles;
mod enumerate;
mod families;
mod graph6;
mod theta;

use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, CANON_MAX_VERTICES};
pub use cycles::cycles_through;
pub(crate) use cycles::for_each_cycle_through;
pub use enumerate::{enumerate_connected_bipartite, ENUMERATION_MAX_VERTICES};
pub use families::{build_rooted_tree, make_named, Family, RootedTreeSpec, TreeShape};
pub use graph6::{graph6_decode, graph6_encode};
pub use theta::{contains_even_subdivision_k23, ThetaWitness, THETA_SEARCH_MAX_VERTICES};

pub const MAX_VERTICES: usize = 64;

/// Bitmask with the low `n` bits set.
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                size: n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Appends `extra` isolated vertices.
    pub fn grow(&self, extra: usize) -> Result<Graph> {
        let mut g = Graph::new(self.n + extra)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| i64::from(self.has_edge(u, v)))
                    .collect()
            })
            .collect()
    }

    pub(crate) fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & within;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let comp = self.reach(left.trailing_zeros() as usize, left);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// The graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `mask`, relabelled in increasing vertex order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |r, w| r | 1 << index[w]))
            .collect();
        Graph { n: keep.len(), adj }
    }

    /// `G - S`, vertices relabelled contiguously.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<Graph> {
        let mut mask = self.vertex_mask();
        for &v in s {
            self.check_vertex(v)?;
            mask &= !(1 << v);
        }
        Ok(self.induced(mask))
    }

    /// Replaces edge `{u, v}` by a path through `times` new vertices, which
    /// are numbered `n, n+1, ...` from the `u` end.
    pub fn subdivide_edge(&self, u: usize, v: usize, times: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        if times == 0 {
            return Ok(self.clone());
        }
        let mut g = self.clone();
        let n = g.n + times;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                size: n,
                cap: MAX_VERTICES,
            });
        }
        g.n = n;
        g.adj.resize(n, 0);
        g.remove_edge(u, v);
        let mut prev = u;
        for w in self.n..n {
            g.add_edge(prev, w)?;
            prev = w;
        }
        g.add_edge(prev, v)?;
        Ok(g)
    }

    /// Two-colouring by BFS, or `None` when an odd cycle exists.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let (left, right) = (0..self.n).partition(|&v| color[v] == 0);
        Some(Bipartition { left, right })
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        let mut index = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| bits(self.adj[v]).fold(0u64, |r, w| r | 1 << index[w]))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v`. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let nums = parse_pair(header)?;
        let (n, m) = (nums.0, nums.1);
        let mut g = Graph::new(n)?;
        let mut seen = 0;
        for line in lines {
            let (u, v) = parse_pair(line)?;
            g.add_edge(u, v)?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse(format!(
                "header announces {m} edges, found {seen}"
            )));
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    let bad = || Error::Parse(format!("expected two integers, got {line:?}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let a = parts[0].parse().map_err(|_| bad())?;
    let b = parts[1].parse().map_err(|_| bad())?;
    Ok((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<RootedGraph> {
        graph.check_vertex(root)?;
        Ok(RootedGraph { graph, root })
    }

    /// `K_1` rooted at its only vertex.
    pub fn single_vertex() -> RootedGraph {
        RootedGraph {
            graph: Graph { n: 1, adj: vec![0] },
            root: 0,
        }
    }

    /// `G - r`.
    pub fn without_root(&self) -> Graph {
        self.graph
            .induced(self.graph.vertex_mask() & !(1 << self.root))
    }
}

/// Identifies the root of `g2` with the root of `g1`. Vertices of `g1` keep
/// their labels; the other vertices of `g2` follow in order.
pub fn coalesce(g1: &RootedGraph, g2: &RootedGraph) -> Result<RootedGraph> {
    let n1 = g1.graph.n;
    let n = n1 + g2.graph.n - 1;
    let mut g = Graph::new(n)?;
    g.adj[..n1].copy_from_slice(&g1.graph.adj);
    let map = |v: usize| -> usize {
        match v.cmp(&g2.root) {
            std::cmp::Ordering::Equal => g1.root,
            std::cmp::Ordering::Less => n1 + v,
            std::cmp::Ordering::Greater => n1 + v - 1,
        }
    };
    for (u, v) in g2.graph.edges() {
        g.add_edge(map(u), map(v))?;
    }
    Ok(RootedGraph {
        graph: g,
        root: g1.root,
    })
}
