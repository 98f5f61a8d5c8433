use std::collections::HashMap;

use super::{bits, Graph};
use crate::error::{Error, Result};

pub const THETA_SEARCH_MAX_VERTICES: usize = 16;

/// A theta subgraph: three internally disjoint `u`–`v` paths, each listed
/// from `u` to `v` and each of even length at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaWitness {
    pub u: usize,
    pub v: usize,
    pub paths: [Vec<usize>; 3],
}

/// Searches for a subgraph that is a theta graph with all path lengths even
/// (an even subdivision of `K_{2,3}`).
pub fn contains_even_subdivision_k23(g: &Graph) -> Result<Option<ThetaWitness>> {
    let n = g.vertex_count();
    if n > THETA_SEARCH_MAX_VERTICES {
        return Err(Error::BruteForceCap {
            size: n,
            cap: THETA_SEARCH_MAX_VERTICES,
        });
    }
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    for (i, &u) in branch.iter().enumerate() {
        for &v in &branch[i + 1..] {
            let paths = even_paths(g, u, v);
            if let Some(found) = three_disjoint(&paths) {
                return Ok(Some(ThetaWitness { u, v, paths: found }));
            }
        }
    }
    Ok(None)
}

/// Simple `u`–`v` paths of even length >= 2, one per set of internal
/// vertices (paths with equal interiors are interchangeable here).
fn even_paths(g: &Graph, u: usize, v: usize) -> Vec<(u64, Vec<usize>)> {
    let mut by_interior: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut path = vec![u];
    walk(g, v, 1 << u, &mut path, &mut by_interior);
    let mut out: Vec<_> = by_interior.into_iter().collect();
    out.sort_by_key(|(mask, p)| (mask.count_ones(), p.clone()));
    out
}

fn walk(
    g: &Graph,
    target: usize,
    used: u64,
    path: &mut Vec<usize>,
    out: &mut HashMap<u64, Vec<usize>>,
) {
    let end = *path.last().expect("nonempty path");
    for w in bits(g.row(end) & !used) {
        if w == target {
            // edges = path.len(); even and at least 2
            if path.len() >= 2 && path.len().is_multiple_of(2) {
                let interior = used & !(1 << path[0]);
                out.entry(interior).or_insert_with(|| {
                    let mut p = path.clone();
                    p.push(w);
                    p
                });
            }
            continue;
        }
        path.push(w);
        walk(g, target, used | 1 << w, path, out);
        path.pop();
    }
}

fn three_disjoint(paths: &[(u64, Vec<usize>)]) -> Option<[Vec<usize>; 3]> {
    for (i, (a, pa)) in paths.iter().enumerate() {
        for (j, (b, pb)) in paths.iter().enumerate().skip(i + 1) {
            if a & b != 0 {
                continue;
            }
            let ab = a | b;
            if let Some((_, pc)) = paths[j + 1..].iter().find(|(c, _)| c & ab == 0) {
                return Some([pa.clone(), pb.clone(), pc.clone()]);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_rooted_tree, make_named, Family, RootedTreeSpec};

    fn check_witness(g: &Graph, w: &ThetaWitness) {
        let mut interiors = 0u64;
        for p in &w.paths {
            assert_eq!(p.first(), Some(&w.u));
            assert_eq!(p.last(), Some(&w.v));
            let len = p.len() - 1;
            assert!(len >= 2 && len % 2 == 0);
            for pair in p.windows(2) {
                assert!(g.has_edge(pair[0], pair[1]));
            }
            for &x in &p[1..p.len() - 1] {
                assert_eq!(interiors >> x & 1, 0, "paths share vertex {x}");
                interiors |= 1 << x;
            }
        }
    }

    #[test]
    fn g8_has_witness() {
        let g8 = make_named(Family::G8).unwrap();
        let w = contains_even_subdivision_k23(&g8)
            .unwrap()
            .expect("witness");
        check_witness(&g8, &w);
    }

    #[test]
    fn k23_contains_itself() {
        let g = make_named(Family::CompleteBipartite(2, 3)).unwrap();
        let w = contains_even_subdivision_k23(&g).unwrap().expect("witness");
        check_witness(&g, &w);
        assert!(w.paths.iter().all(|p| p.len() == 3));
    }

    #[test]
    fn trees_and_odd_thetas() {
        let t = build_rooted_tree(RootedTreeSpec::starlike(3, 3)).graph;
        assert_eq!(contains_even_subdivision_k23(&t).unwrap(), None);
        // parameters 2,2,2 give path lengths 3,3,3
        let odd = make_named(Family::Theta(2, 2, 2)).unwrap();
        assert_eq!(contains_even_subdivision_k23(&odd).unwrap(), None);
        let even = make_named(Family::Theta(3, 1, 5)).unwrap();
        assert!(contains_even_subdivision_k23(&even).unwrap().is_some());
    }

    #[test]
    fn size_guard() {
        let g = make_named(Family::Path(17)).unwrap();
        assert!(matches!(
            contains_even_subdivision_k23(&g),
            Err(Error::BruteForceCap { size: 17, cap: 16 })
        ));
    }
}
