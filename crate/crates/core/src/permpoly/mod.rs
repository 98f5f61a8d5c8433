//! Permanental polynomials `π(G,x) = per(xI − A(G))`.
//!
//! Three independent engines compute the same coefficients; closed forms
//! cover stars, paths, theta graphs and rooted trees.

mod closed;
mod expansion;
mod permanent;
mod recursive;
mod sachs;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

pub use closed::{path_poly, per_poly_rooted_tree, star_poly, theta_poly};
pub use permanent::{permanent, PERMANENT_MAX_ORDER};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;

pub const SACHS_MAX_VERTICES: usize = 20;
pub const EXPANSION_MAX_VERTICES: usize = 14;
pub const RECURSIVE_MAX_VERTICES: usize = 20;
/// Entries kept by the recursive engine's isomorphism-class cache.
pub const RECURSIVE_MEMO_CAPACITY: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EngineKind {
    Sachs,
    Expansion,
    Recursive,
}

impl EngineKind {
    pub const ALL: [EngineKind; 3] = [
        EngineKind::Sachs,
        EngineKind::Expansion,
        EngineKind::Recursive,
    ];

    pub fn max_vertices(self) -> usize {
        match self {
            EngineKind::Sachs => SACHS_MAX_VERTICES,
            EngineKind::Expansion => EXPANSION_MAX_VERTICES,
            EngineKind::Recursive => RECURSIVE_MAX_VERTICES,
        }
    }

    fn label(self) -> &'static str {
        match self {
            EngineKind::Sachs => "Sachs engine",
            EngineKind::Expansion => "expansion engine",
            EngineKind::Recursive => "recursive engine",
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineKind::Sachs => "sachs",
            EngineKind::Expansion => "expansion",
            EngineKind::Recursive => "recursive",
        })
    }
}

impl FromStr for EngineKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<EngineKind> {
        match s.to_ascii_lowercase().as_str() {
            "sachs" => Ok(EngineKind::Sachs),
            "expansion" => Ok(EngineKind::Expansion),
            "recursive" => Ok(EngineKind::Recursive),
            _ => Err(Error::Parse(format!("unknown engine {s:?}"))),
        }
    }
}

pub fn per_poly(g: &Graph, engine: EngineKind) -> Result<IntPoly> {
    let n = g.vertex_count();
    if n > engine.max_vertices() {
        return Err(Error::TooLarge {
            what: engine.label(),
            size: n,
            cap: engine.max_vertices(),
        });
    }
    Ok(match engine {
        EngineKind::Sachs => sachs::per_poly_sachs(g),
        EngineKind::Expansion => expansion::per_poly_expansion(g),
        EngineKind::Recursive => recursive::per_poly_recursive(g),
    })
}

/// `Σ_k (−1)^k counts[k] x^{n−k}`.
fn from_signed_counts<T: Into<BigInt> + Copy>(n: usize, counts: &[T]) -> IntPoly {
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (k, &c) in counts.iter().enumerate() {
        let c: BigInt = c.into();
        coeffs[n - k] = if k % 2 == 0 { c } else { -c };
    }
    IntPoly::from_coeffs(coeffs)
}
