//! `b_k = (−1)^k Σ 2^{c(U)}` over Sachs subgraphs `U` on `k` vertices.

use crate::graph::{for_each_cycle_through, Graph};
use crate::poly::IntPoly;

pub(super) fn per_poly_sachs(g: &Graph) -> IntPoly {
    let n = g.vertex_count();
    let mut counts = vec![0u128; n + 1];
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    branch(g, all, 0, 0, &mut counts);
    super::from_signed_counts(n, &counts)
}

/// Decides the lowest vertex of `open`: left uncovered, matched by an edge,
/// or covered by a cycle inside `open`. Every Sachs subgraph is produced
/// exactly once.
fn branch(g: &Graph, open: u64, covered: usize, cycles: u32, counts: &mut [u128]) {
    if open == 0 {
        counts[covered] += 1u128 << cycles;
        return;
    }
    let v = open.trailing_zeros() as usize;
    let rest = open & !(1 << v);
    branch(g, rest, covered, cycles, counts);
    let mut w_mask = g.row(v) & rest;
    while w_mask != 0 {
        let w = w_mask.trailing_zeros();
        w_mask &= w_mask - 1;
        branch(g, rest & !(1 << w), covered + 2, cycles, counts);
    }
    let mut found: Vec<(u64, usize)> = Vec::new();
    for_each_cycle_through(g, v, rest, &mut |path, mask| found.push((mask, path.len())));
    for (mask, len) in found {
        branch(g, open & !mask, covered + len, cycles + 1, counts);
    }
}
