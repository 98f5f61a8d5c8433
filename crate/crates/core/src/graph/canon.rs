//! Canonical labelling for small graphs.
//!
//! The vertex set is split into cells by degree and refined until every
//! vertex in a cell sees the same number of neighbours in each cell. While
//! some cell has more than one vertex, each of its vertices is tried as a
//! singleton in front of the rest and the search recurses. Every leaf is a
//! vertex order; the canonical form is the smallest graph6 string over all
//! leaves. Vertices with identical neighbourhoods are interchangeable, so
//! only one of each such group is tried per cell.

use super::{graph6_encode, Graph};
use crate::error::{Error, Result};

pub const CANON_MAX_VERTICES: usize = 10;

type Partition = Vec<Vec<usize>>;

/// Isomorphism-invariant byte string: the graph6 encoding of the graph
/// relabelled into canonical order.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonical_labeling(g)?.1.into_bytes())
}

/// Canonical vertex order (old labels, in new-label order) together with
/// the graph6 string of the relabelled graph.
pub fn canonical_labeling(g: &Graph) -> Result<(Vec<usize>, String)> {
    let n = g.vertex_count();
    if n > CANON_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "canonical form",
            size: n,
            cap: CANON_MAX_VERTICES,
        });
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let mut start: Partition = Vec::new();
    for v in by_degree {
        match start.last_mut() {
            Some(cell) if g.degree(cell[0]) == g.degree(v) => cell.push(v),
            _ => start.push(vec![v]),
        }
    }
    let mut best: Option<(String, Vec<usize>)> = None;
    search(g, start, &mut best);
    let (code, order) = best.unwrap_or_else(|| (graph6_encode(g), Vec::new()));
    Ok((order, code))
}

/// Splits cells by neighbour counts into every cell until stable. Splits
/// depend only on counts, never on labels, so the result is equivariant.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let signature =
            |v: usize| -> Vec<u32> { masks.iter().map(|m| (g.row(v) & m).count_ones()).collect() };
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            for (i, (sig, v)) in keyed.iter().enumerate() {
                if i > 0 && keyed[i - 1].0 != *sig {
                    next.push(std::mem::take(&mut group));
                }
                group.push(*v);
            }
            next.push(group);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins(g: &Graph, a: usize, b: usize) -> bool {
    g.row(a) & !(1 << b) == g.row(b) & !(1 << a)
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(String, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = graph6_encode(&g.permuted(&order));
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        if tried.iter().any(|&t| twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend(cells[..target].iter().cloned());
        child.push(vec![v]);
        child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        child.extend(cells[target + 1..].iter().cloned());
        search(g, child, best);
    }
}
