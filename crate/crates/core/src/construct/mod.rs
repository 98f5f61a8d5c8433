//! Coalescence of a rooted host graph with starlike or pathlike rooted
//! trees, and scans of the `(l, k)` parameter grid.
//!
//! With `T'` the repeated branch of the tree and `u'` its attachment vertex,
//! `π(G₁·T) = π(T')^{k−1} · H` where
//! `H = π(G₁)π(T') + k·π(G₁−r₁)π(T'−u')`, so membership of the coalescence
//! reduces to the roots of `H`.

mod scan;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

pub use scan::{scan, ScanFamily, ScanGrid};

use crate::error::{Error, Result};
use crate::graph::{
    build_rooted_tree, coalesce, make_named, Family, RootedGraph, RootedTreeSpec, TreeShape,
};
use crate::permpoly::{path_poly, per_poly, star_poly, EngineKind};
use crate::poly::IntPoly;

/// Host graphs with a known theorem or remark attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HostKind {
    /// `K_{2,3}` rooted at a vertex of degree 3.
    K23Deg3,
    /// `K_{2,3}` rooted at a vertex of degree 2.
    K23Deg2,
    /// `K_{3,3}`; vertex-transitive, rooted at vertex 0.
    K33,
}

impl HostKind {
    pub const ALL: [HostKind; 3] = [HostKind::K23Deg3, HostKind::K23Deg2, HostKind::K33];

    pub fn rooted(self) -> RootedGraph {
        let (family, root) = match self {
            // parts are {0,1} and {2,3,4}
            HostKind::K23Deg3 => (Family::CompleteBipartite(2, 3), 0),
            HostKind::K23Deg2 => (Family::CompleteBipartite(2, 3), 2),
            HostKind::K33 => (Family::CompleteBipartite(3, 3), 0),
        };
        RootedGraph {
            graph: make_named(family).expect("fixed host family"),
            root,
        }
    }
}

impl fmt::Display for HostKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HostKind::K23Deg3 => "K23deg3",
            HostKind::K23Deg2 => "K23deg2",
            HostKind::K33 => "K33",
        })
    }
}

impl FromStr for HostKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<HostKind> {
        match s.to_ascii_lowercase().as_str() {
            "k23deg3" => Ok(HostKind::K23Deg3),
            "k23deg2" => Ok(HostKind::K23Deg2),
            "k33" => Ok(HostKind::K33),
            _ => Err(Error::Parse(format!("unknown host {s:?}"))),
        }
    }
}

/// Hosts for which membership has a closed-form characterisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    K23Deg3,
    K23Deg2,
}

/// Closed-form membership of `K_{2,3}` coalesced with `Starlike(l, k)`.
pub fn thm_predicate(root_kind: RootKind, l: usize, k: usize) -> bool {
    match root_kind {
        RootKind::K23Deg3 => (l <= 3 && l + k >= 4) || (l >= 4 && k + 4 >= 2 * l),
        RootKind::K23Deg2 => l + k >= 4 && l <= 2,
    }
}

/// `π(G₁·G₂) = π(G₁)π(G₂−r₂) + π(G₁−r₁)π(G₂) − xπ(G₁−r₁)π(G₂−r₂)`.
pub fn schwenk_coalescence_poly(g1: &RootedGraph, g2: &RootedGraph) -> Result<IntPoly> {
    let p1 = per_poly(&g1.graph, EngineKind::Sachs)?;
    let p2 = per_poly(&g2.graph, EngineKind::Sachs)?;
    let q1 = per_poly(&g1.without_root(), EngineKind::Sachs)?;
    let q2 = per_poly(&g2.without_root(), EngineKind::Sachs)?;
    Ok(&p1 * &q2 + &q1 * &p2 - (&q1 * &q2).shift(1))
}

/// `(π(T'), π(T'−u'))` for the branch of `spec`.
pub fn branch_polys(spec: RootedTreeSpec) -> (IntPoly, IntPoly) {
    match spec.shape {
        TreeShape::Starlike => (
            star_poly(spec.l),
            IntPoly::monomial(BigInt::from(1), spec.l),
        ),
        TreeShape::Pathlike => (path_poly(spec.l + 1), path_poly(spec.l)),
    }
}

/// `H = π(G₁)π(T') + k·π(G₁−r₁)π(T'−u')`.
pub fn h_poly(g1: &RootedGraph, spec: RootedTreeSpec) -> Result<IntPoly> {
    let host = per_poly(&g1.graph, EngineKind::Sachs)?;
    let host_minus_root = per_poly(&g1.without_root(), EngineKind::Sachs)?;
    Ok(h_from_parts(&host, &host_minus_root, spec))
}

pub(crate) fn h_from_parts(
    host: &IntPoly,
    host_minus_root: &IntPoly,
    spec: RootedTreeSpec,
) -> IntPoly {
    let (t, t_minus_u) = branch_polys(spec);
    host * &t + (host_minus_root * &t_minus_u).scale(&BigInt::from(spec.k))
}

/// Checks `π(G₁·T) = π(T')^{k−1}·H` against a direct computation of the
/// coalescence. For `k = 0` the equivalent `π(G₁·T)·π(T') = H` is checked.
pub fn verify_factorization(g1: &RootedGraph, spec: RootedTreeSpec) -> Result<bool> {
    let direct = per_poly(
        &coalesce(g1, &build_rooted_tree(spec))?.graph,
        EngineKind::Sachs,
    )?;
    let h = h_poly(g1, spec)?;
    let (t, _) = branch_polys(spec);
    Ok(match spec.k {
        0 => direct * t == h,
        k => t.pow(k as u32 - 1) * h == direct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn xl(l: usize) -> IntPoly {
        IntPoly::monomial(BigInt::from(1), l)
    }

    fn ints(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn closed_h_polynomials() {
        for l in 0..5i64 {
            for k in 0..6i64 {
                let spec = RootedTreeSpec::starlike(l as usize, k as usize);
                let h3 = h_poly(&HostKind::K23Deg3.rooted(), spec).unwrap();
                let want3 =
                    xl(l as usize) * ints(&[12 * l, 0, 6 * l + 3 * k + 12, 0, l + k + 6, 0, 1]);
                assert_eq!(h3, want3, "deg3 l={l} k={k}");
                let h2 = h_poly(&HostKind::K23Deg2.rooted(), spec).unwrap();
                let want2 = xl(l as usize)
                    * ints(&[12 * l + 4 * k, 0, 6 * l + 4 * k + 12, 0, l + k + 6, 0, 1]);
                assert_eq!(h2, want2, "deg2 l={l} k={k}");
                // x^{l−1}(x^8 + ...); multiply through by x to stay integral at l = 0
                let h33 = h_poly(&HostKind::K33.rooted(), spec).unwrap();
                let want33 = xl(l as usize)
                    * ints(&[
                        36 * l,
                        0,
                        12 * k + 36 * l + 36,
                        0,
                        6 * k + 9 * l + 36,
                        0,
                        k + l + 9,
                        0,
                        1,
                    ]);
                assert_eq!(h33.shift(1), want33, "K33 l={l} k={k}");
            }
        }
        let h = h_poly(&HostKind::K23Deg3.rooted(), RootedTreeSpec::starlike(0, 4)).unwrap();
        assert_eq!(h, p("x^6+10*x^4+24*x^2"));
        assert_eq!(h, p("x^2") * p("x^2+4") * p("x^2+6"));
    }

    #[test]
    fn schwenk_examples() {
        let k1 = RootedGraph::single_vertex();
        let c5 = RootedGraph::new(make_named(Family::Cycle(5)).unwrap(), 2).unwrap();
        let direct = per_poly(&c5.graph, EngineKind::Sachs).unwrap();
        assert_eq!(schwenk_coalescence_poly(&k1, &c5).unwrap(), direct);
        let p2 = RootedGraph::new(make_named(Family::Path(2)).unwrap(), 0).unwrap();
        assert_eq!(schwenk_coalescence_poly(&p2, &p2).unwrap(), path_poly(3));
        let host = HostKind::K23Deg3.rooted();
        let star = RootedGraph::new(make_named(Family::Star(4)).unwrap(), 0).unwrap();
        let glued = coalesce(&host, &star).unwrap();
        assert_eq!(glued.graph.vertex_count(), 9);
        assert_eq!(
            schwenk_coalescence_poly(&host, &star).unwrap(),
            per_poly(&glued.graph, EngineKind::Expansion).unwrap()
        );
    }

    #[test]
    fn factorization_examples() {
        let cases = [
            (HostKind::K23Deg3, RootedTreeSpec::starlike(2, 3)),
            (HostKind::K23Deg2, RootedTreeSpec::pathlike(3, 1)),
            (HostKind::K33, RootedTreeSpec::pathlike(1, 5)),
            (HostKind::K33, RootedTreeSpec::starlike(0, 0)),
            (HostKind::K23Deg3, RootedTreeSpec::pathlike(2, 0)),
        ];
        for (host, spec) in cases {
            assert!(
                verify_factorization(&host.rooted(), spec).unwrap(),
                "{host} {spec:?}"
            );
        }
    }

    #[test]
    fn predicates() {
        assert!(thm_predicate(RootKind::K23Deg3, 0, 4));
        assert!(!thm_predicate(RootKind::K23Deg3, 3, 0));
        assert!(!thm_predicate(RootKind::K23Deg2, 3, 10));
        assert!(thm_predicate(RootKind::K23Deg3, 4, 4));
        assert!(!thm_predicate(RootKind::K23Deg3, 5, 5));
        assert!(thm_predicate(RootKind::K23Deg3, 5, 6));
        assert!(thm_predicate(RootKind::K23Deg2, 2, 2));
    }
}
