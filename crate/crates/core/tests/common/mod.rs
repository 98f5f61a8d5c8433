#![allow(dead_code)]

use perspectra::graph::{make_named, Family, Graph, RootedGraph};
use rand::Rng;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits.get(i).copied().unwrap_or(false) {
                g.add_edge(u, v).unwrap();
            }
            i += 1;
        }
    }
    g
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let bits: Vec<bool> = (0..n * n.saturating_sub(1) / 2)
        .map(|_| rng.gen_bool(density))
        .collect();
    graph_from_bits(n, &bits)
}

pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra: f64) -> Graph {
    let mut g = random_tree(rng, n);
    for v in 1..n {
        for u in 0..v {
            if !g.has_edge(u, v) && rng.gen_bool(extra) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    prufer_tree(n, &seq)
}

pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut g = Graph::new(n).unwrap();
    if n < 2 {
        return g;
    }
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, s).unwrap();
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

pub fn random_rooted<R: Rng>(rng: &mut R, max_n: usize) -> RootedGraph {
    let n = rng.gen_range(1..=max_n);
    let g = random_connected_graph(rng, n, 0.3);
    let root = rng.gen_range(0..n);
    RootedGraph::new(g, root).unwrap()
}

pub fn named(f: Family) -> Graph {
    make_named(f).unwrap()
}
