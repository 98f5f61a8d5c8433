//! Closed forms for stars, paths, theta graphs and rooted trees.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::graph::{bits, RootedGraph};
use crate::poly::IntPoly;

/// `π(K_{1,n}) = x^{n−1}(x² + n)`; `K_{1,0}` is a single vertex.
pub fn star_poly(n: usize) -> IntPoly {
    if n == 0 {
        return IntPoly::x();
    }
    let mut coeffs = vec![BigInt::from(0); n + 2];
    coeffs[n - 1] = BigInt::from(n);
    coeffs[n + 1] = BigInt::from(1);
    IntPoly::from_coeffs(coeffs)
}

/// `π(P_n) = Σ_m C(n−m, m) x^{n−2m}`, with `π(P_0) = 1`.
pub fn path_poly(n: usize) -> IntPoly {
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for m in 0..=n / 2 {
        coeffs[n - 2 * m] = binomial(BigInt::from(n - m), BigInt::from(m));
    }
    IntPoly::from_coeffs(coeffs)
}

/// `π(Θ_{a,b,c})`, where the three branch paths have `a`, `b`, `c`
/// internal vertices.
///
/// Expanding at one branch vertex `w` leaves a star-like tree of three paths
/// hanging from the other branch vertex, while each of the three cycles
/// through `w` leaves a bare path.
pub fn theta_poly(a: usize, b: usize, c: usize) -> Result<IntPoly> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::InvalidFamilyParameter(format!(
            "theta parameters must be at least 1, got ({a}, {b}, {c})"
        )));
    }
    let p = |n: isize| -> IntPoly {
        if n < 0 {
            IntPoly::zero()
        } else {
            path_poly(n as usize)
        }
    };
    // π of a vertex joined to the ends of paths with p, q, r vertices
    let spider = |p_: isize, q: isize, r: isize| -> IntPoly {
        (p(p_) * p(q) * p(r)).shift(1)
            + p(p_ - 1) * p(q) * p(r)
            + p(p_) * p(q - 1) * p(r)
            + p(p_) * p(q) * p(r - 1)
    };
    let (a, b, c) = (a as isize, b as isize, c as isize);
    let mut out =
        spider(a, b, c).shift(1) + spider(a - 1, b, c) + spider(a, b - 1, c) + spider(a, b, c - 1);
    // the cycle through paths i and j has a+b+2 vertices and leaves P_c
    for (i, j, rest) in [(a, b, c), (a, c, b), (b, c, a)] {
        let sign = if (i + j) % 2 == 0 { 2 } else { -2 };
        out = out + p(rest).scale(&BigInt::from(sign));
    }
    Ok(out)
}

/// `π` of a tree by the rooted recursion
/// `P(v) = x·Q(v) + Σ_c Q(c)·Π_{c'≠c} P(c')` with `Q(v) = Π_c P(c)`,
/// where `c` ranges over the children of `v`. Isomorphic subtrees share
/// one cache entry.
pub fn per_poly_rooted_tree(t: &RootedGraph) -> Result<IntPoly> {
    let g = &t.graph;
    let n = g.vertex_count();
    if n == 0 || g.edge_count() != n - 1 || !g.is_connected() {
        return Err(Error::NotATree);
    }
    let mut memo = HashMap::new();
    Ok(subtree(t, t.root, None, &mut memo).1 .0)
}

type Pair = (IntPoly, IntPoly);

/// Returns the subtree's structure code and `(P, Q)`.
fn subtree(
    t: &RootedGraph,
    v: usize,
    parent: Option<usize>,
    memo: &mut HashMap<String, Pair>,
) -> (String, Pair) {
    let mut children: Vec<(String, Pair)> = bits(t.graph.row(v))
        .filter(|&c| Some(c) != parent)
        .map(|c| subtree(t, c, Some(v), memo))
        .collect();
    children.sort_by(|x, y| x.0.cmp(&y.0));
    let code = format!(
        "({})",
        children.iter().map(|c| c.0.as_str()).collect::<String>()
    );
    if let Some(pair) = memo.get(&code) {
        return (code, pair.clone());
    }
    let q: IntPoly = children.iter().map(|c| c.1 .0.clone()).product();
    let mut p = q.shift(1);
    for (i, (_, (_, qc))) in children.iter().enumerate() {
        let others: IntPoly = children
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| c.1 .0.clone())
            .product();
        p = p + qc * &others;
    }
    memo.insert(code.clone(), (p.clone(), q.clone()));
    (code, (p, q))
}
