use super::{bits, Graph};
use crate::error::Result;

/// Calls `visit(path, mask)` once per simple cycle through `u` that stays
/// inside `allowed`. `path` starts at `u`; of the two traversal directions
/// only the one with `path[1] < path[last]` is reported.
pub(crate) fn for_each_cycle_through<F>(g: &Graph, u: usize, allowed: u64, visit: &mut F)
where
    F: FnMut(&[usize], u64),
{
    let allowed = allowed | 1 << u;
    let mut path = vec![u];
    extend(g, u, allowed, 1 << u, &mut path, visit);
}

fn extend<F>(g: &Graph, u: usize, allowed: u64, used: u64, path: &mut Vec<usize>, visit: &mut F)
where
    F: FnMut(&[usize], u64),
{
    let end = *path.last().expect("path starts at u");
    let row = g.row(end) & allowed;
    if path.len() >= 3 && row >> u & 1 == 1 && path[1] < end {
        visit(path, used);
    }
    for w in bits(row & !used) {
        path.push(w);
        extend(g, u, allowed, used | 1 << w, path, visit);
        path.pop();
    }
}

/// Every simple cycle of length at least 3 through `u`, each exactly once.
///
/// Cycles are rotated to start at their smallest vertex and oriented so the
/// second vertex is smaller than the last; the list is sorted.
pub fn cycles_through(g: &Graph, u: usize) -> Result<Vec<Vec<usize>>> {
    g.check_vertex(u)?;
    let mut out = Vec::new();
    for_each_cycle_through(g, u, g.vertex_mask(), &mut |path, _| {
        out.push(canonical_rotation(path));
    });
    out.sort();
    Ok(out)
}

fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap_or(0);
    let forward: Vec<usize> = (0..len).map(|i| cycle[(start + i) % len]).collect();
    if forward[1] < forward[len - 1] {
        forward
    } else {
        let mut back = vec![forward[0]];
        back.extend(forward[1..].iter().rev());
        back
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_rooted_tree, make_named, Family, RootedTreeSpec};

    /// Brute force: every vertex sequence starting at `u` that is a closed
    /// walk without repeats, deduplicated as vertex/edge sets.
    fn brute_force_count(g: &Graph, u: usize) -> usize {
        use std::collections::BTreeSet;
        let n = g.vertex_count();
        let mut found = BTreeSet::new();
        fn rec(
            g: &Graph,
            n: usize,
            u: usize,
            path: &mut Vec<usize>,
            found: &mut std::collections::BTreeSet<Vec<(usize, usize)>>,
        ) {
            let last = *path.last().unwrap();
            if path.len() >= 3 && g.has_edge(last, u) {
                let mut edges: Vec<(usize, usize)> = path
                    .windows(2)
                    .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                    .collect();
                edges.push((last.min(u), last.max(u)));
                edges.sort();
                found.insert(edges);
            }
            for w in 0..n {
                if g.has_edge(last, w) && !path.contains(&w) {
                    path.push(w);
                    rec(g, n, u, path, found);
                    path.pop();
                }
            }
        }
        rec(g, n, u, &mut vec![u], &mut found);
        found.len()
    }

    #[test]
    fn cycle_graph_has_one() {
        let c5 = make_named(Family::Cycle(5)).unwrap();
        for v in 0..5 {
            let cs = cycles_through(&c5, v).unwrap();
            assert_eq!(cs, vec![vec![0, 1, 2, 3, 4]]);
        }
    }

    #[test]
    fn k23_degree_three_vertex() {
        let g = make_named(Family::CompleteBipartite(2, 3)).unwrap();
        let cs = cycles_through(&g, 0).unwrap();
        assert_eq!(cs.len(), brute_force_count(&g, 0));
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn trees_have_none() {
        let t = build_rooted_tree(RootedTreeSpec::pathlike(3, 3)).graph;
        assert!(cycles_through(&t, 0).unwrap().is_empty());
        assert!(cycles_through(&t, 5).unwrap().is_empty());
    }

    #[test]
    fn agrees_with_brute_force_on_dense_graphs() {
        for g in [
            make_named(Family::Complete(5)).unwrap(),
            make_named(Family::CompleteBipartite(3, 3)).unwrap(),
            make_named(Family::G8).unwrap(),
        ] {
            for u in 0..g.vertex_count() {
                let cs = cycles_through(&g, u).unwrap();
                assert_eq!(cs.len(), brute_force_count(&g, u));
                let unique: std::collections::BTreeSet<_> = cs.iter().collect();
                assert_eq!(unique.len(), cs.len());
            }
        }
    }

    #[test]
    fn out_of_range() {
        let g = make_named(Family::Cycle(4)).unwrap();
        assert!(cycles_through(&g, 4).is_err());
    }
}
