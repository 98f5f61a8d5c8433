use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{canonical_labeling, full_mask, Graph};
use crate::error::{Error, Result};

pub const ENUMERATION_MAX_VERTICES: usize = 9;

/// One graph per isomorphism class of connected bipartite graphs on `n`
/// vertices, each in canonical labelling, sorted by edge count and then by
/// canonical graph6 string.
///
/// For a part split `(a, n-a)` with `a <= n-a`, candidates are the
/// biadjacency matrices whose rows, read as bitmasks, are nondecreasing.
/// Every bipartite graph has such a representative (sort the rows), so the
/// class list is complete; duplicates are removed by canonical form.
pub fn enumerate_connected_bipartite(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "built-in enumeration",
            size: n,
            cap: ENUMERATION_MAX_VERTICES,
        });
    }
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![Graph::new(1)?]),
        _ => {}
    }
    let found: Vec<BTreeMap<String, Graph>> = (1..=n / 2)
        .into_par_iter()
        .map(|a| classes_for_split(a, n - a))
        .collect();
    let mut all = BTreeMap::new();
    for part in found {
        all.extend(part);
    }
    let mut out: Vec<(usize, String, Graph)> = all
        .into_iter()
        .map(|(code, g)| (g.edge_count(), code, g))
        .collect();
    out.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

fn classes_for_split(a: usize, b: usize) -> BTreeMap<String, Graph> {
    let mut classes = BTreeMap::new();
    let mut rows = Vec::with_capacity(a);
    let columns = full_mask(b);
    choose_rows(a, b, 1, &mut rows, &mut |rows| {
        if rows.iter().fold(0, |m, r| m | r) != columns {
            return;
        }
        let g = from_biadjacency(a, b, rows);
        if !g.is_connected() {
            return;
        }
        let (order, code) = canonical_labeling(&g).expect("within canonical-form cap");
        classes.entry(code).or_insert_with(|| g.permuted(&order));
    });
    classes
}

/// Nondecreasing sequences of `a` nonzero row masks over `b` columns.
fn choose_rows<F: FnMut(&[u64])>(a: usize, b: usize, min: u64, rows: &mut Vec<u64>, visit: &mut F) {
    if rows.len() == a {
        visit(rows);
        return;
    }
    for r in min..=full_mask(b) {
        rows.push(r);
        choose_rows(a, b, r, rows, visit);
        rows.pop();
    }
}

fn from_biadjacency(a: usize, b: usize, rows: &[u64]) -> Graph {
    let mut g = Graph::new(a + b).expect("within vertex cap");
    for (i, &row) in rows.iter().enumerate() {
        for j in super::bits(row) {
            g.add_edge(i, a + j).expect("valid vertex");
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use std::collections::BTreeSet;

    #[test]
    fn small_counts() {
        // connected bipartite graphs on 1..=7 vertices
        let expected = [1, 1, 1, 3, 5, 17, 44];
        for (i, &count) in expected.iter().enumerate() {
            let gs = enumerate_connected_bipartite(i + 1).unwrap();
            assert_eq!(gs.len(), count, "n = {}", i + 1);
        }
    }

    #[test]
    fn n5_by_brute_force() {
        // All labelled graphs on 5 vertices, filtered and deduplicated.
        let n = 5;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut forms = BTreeSet::new();
        for subset in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| subset >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() && g.is_bipartite().is_some() {
                forms.insert(canonical_form(&g).unwrap());
            }
        }
        let listed: BTreeSet<_> = enumerate_connected_bipartite(n)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(forms.len(), 5);
        assert_eq!(forms, listed);
    }

    #[test]
    fn outputs_are_distinct_connected_bipartite() {
        let gs = enumerate_connected_bipartite(7).unwrap();
        let forms: BTreeSet<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), gs.len());
        assert!(gs
            .iter()
            .all(|g| g.is_connected() && g.is_bipartite().is_some()));
    }

    #[test]
    fn guard() {
        assert!(enumerate_connected_bipartite(10).unwrap_err().is_cap());
        assert!(enumerate_connected_bipartite(0).unwrap().is_empty());
    }
}
