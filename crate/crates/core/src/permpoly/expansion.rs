//! `b_k = (−1)^k Σ_{|S|=k} per(A[S])`, one Ryser permanent per subset.

use rayon::prelude::*;

use super::permanent::principal_permanent;
use crate::graph::Graph;
use crate::poly::IntPoly;

pub(super) fn per_poly_expansion(g: &Graph) -> IntPoly {
    let n = g.vertex_count();
    let counts = (0u64..1 << n)
        .into_par_iter()
        .fold(
            || vec![0i128; n + 1],
            |mut acc, mask| {
                acc[mask.count_ones() as usize] += principal_permanent(g, mask);
                acc
            },
        )
        .reduce(
            || vec![0i128; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    super::from_signed_counts(n, &counts)
}
