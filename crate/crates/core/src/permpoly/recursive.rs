//! Vertex expansion: for any vertex `u`,
//! `π(G) = x·π(G−u) + Σ_{v~u} π(G−u−v) + 2 Σ_{C∋u} (−1)^{|C|} π(G−V(C))`,
//! applied per connected component with a cache keyed by isomorphism class.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::RECURSIVE_MEMO_CAPACITY;
use crate::graph::{bits, canonical_form, for_each_cycle_through, Graph, CANON_MAX_VERTICES};
use crate::poly::IntPoly;

pub(super) fn per_poly_recursive(g: &Graph) -> IntPoly {
    let mut memo = HashMap::new();
    let all = g.vertex_mask();
    poly_of(g, all, &mut memo)
}

type Memo = HashMap<Vec<u8>, IntPoly>;

/// `π` of the subgraph of `g` induced by `mask`.
fn poly_of(g: &Graph, mask: u64, memo: &mut Memo) -> IntPoly {
    let mut out = IntPoly::one();
    let mut left = mask;
    while left != 0 {
        let comp = g.reach(left.trailing_zeros() as usize, left);
        left &= !comp;
        out = out * component_poly(g, comp, memo);
    }
    out
}

fn component_poly(g: &Graph, comp: u64, memo: &mut Memo) -> IntPoly {
    match comp.count_ones() {
        1 => return IntPoly::x(),
        2 => return IntPoly::from_i64s(&[1, 0, 1]),
        _ => {}
    }
    let key = if comp.count_ones() as usize <= CANON_MAX_VERTICES {
        let key = canonical_form(&g.induced(comp)).expect("within canonical-form cap");
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        Some(key)
    } else {
        None
    };
    // expanding at a vertex of maximum degree removes the most edges
    let u = bits(comp)
        .max_by_key(|&v| ((g.row(v) & comp).count_ones(), std::cmp::Reverse(v)))
        .expect("nonempty component");
    let rest = comp & !(1 << u);
    let mut p = poly_of(g, rest, memo).shift(1);
    for v in bits(g.row(u) & rest) {
        p = p + poly_of(g, rest & !(1 << v), memo);
    }
    let mut cycles: Vec<u64> = Vec::new();
    for_each_cycle_through(g, u, rest, &mut |_, mask| cycles.push(mask));
    for mask in cycles {
        let sign = if mask.count_ones() % 2 == 0 { 2 } else { -2 };
        p = p + poly_of(g, comp & !mask, memo).scale(&BigInt::from(sign));
    }
    if let Some(key) = key {
        if memo.len() < RECURSIVE_MEMO_CAPACITY {
            memo.insert(key, p.clone());
        }
    }
    p
}
