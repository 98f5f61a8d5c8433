use std::fmt;
use std::str::FromStr;

use super::{Graph, RootedGraph};
use crate::error::{Error, Result};

/// Named graph families. Vertex numbering is fixed per family and documented
/// on each variant, since rooted constructions refer to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_{m,n}`: parts `0..m` and `m..m+n`.
    CompleteBipartite(usize, usize),
    /// `P_n` on `n` vertices, numbered along the path.
    Path(usize),
    /// `C_n`, numbered around the cycle.
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n}` with centre `0`.
    Star(usize),
    /// `Θ_{a,b,c}`: branch vertices `0` and `1`, then the internal vertices
    /// of the three paths in order.
    Theta(usize, usize, usize),
    /// `n` isolated vertices.
    Empty(usize),
    /// `K_{2,4}` with edge `{0,2}` subdivided twice.
    G8,
    /// `K_{3,3}` with edges `{0,3}` and `{0,4}` subdivided twice each and a
    /// pendant vertex `10` attached at `0`.
    G11,
}

fn invalid(what: &str) -> Error {
    Error::InvalidFamilyParameter(what.to_string())
}

pub fn make_named(kind: Family) -> Result<Graph> {
    match kind {
        Family::CompleteBipartite(m, n) => {
            if m == 0 || n == 0 {
                return Err(invalid("complete bipartite parts must be nonempty"));
            }
            let mut g = Graph::new(m + n)?;
            for u in 0..m {
                for v in m..m + n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Family::Path(n) => {
            if n == 0 {
                return Err(invalid("path needs at least one vertex"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle needs at least three vertices"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete(n) => {
            if n == 0 {
                return Err(invalid("complete graph needs at least one vertex"));
            }
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n, &edges)
        }
        Family::Star(n) => {
            let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
            Graph::from_edges(n + 1, &edges)
        }
        Family::Theta(a, b, c) => {
            if a == 0 || b == 0 || c == 0 {
                return Err(invalid("theta parameters must be at least 1"));
            }
            let mut g = Graph::new(a + b + c + 2)?;
            let mut next = 2;
            for len in [a, b, c] {
                let mut prev = 0;
                for _ in 0..len {
                    g.add_edge(prev, next)?;
                    prev = next;
                    next += 1;
                }
                g.add_edge(prev, 1)?;
            }
            Ok(g)
        }
        Family::Empty(n) => Graph::new(n),
        Family::G8 => make_named(Family::CompleteBipartite(2, 4))?.subdivide_edge(0, 2, 2),
        Family::G11 => {
            let mut g = make_named(Family::CompleteBipartite(3, 3))?
                .subdivide_edge(0, 3, 2)?
                .subdivide_edge(0, 4, 2)?
                .grow(1)?;
            g.add_edge(0, 10)?;
            Ok(g)
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::CompleteBipartite(m, n) => write!(f, "K_{{{m},{n}}}"),
            Family::Path(n) => write!(f, "P_{n}"),
            Family::Cycle(n) => write!(f, "C_{n}"),
            Family::Complete(n) => write!(f, "K_{n}"),
            Family::Star(n) => write!(f, "S_{n}"),
            Family::Theta(a, b, c) => write!(f, "Theta_{{{a},{b},{c}}}"),
            Family::Empty(n) => write!(f, "E_{n}"),
            Family::G8 => f.write_str("G_8"),
            Family::G11 => f.write_str("G_11"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `K_{m,n}`, `K_n`, `P_n`, `C_n`, `S_n` (star `K_{1,n}`),
    /// `Theta_{a,b,c}`, `E_n`, `G_8` and `G_11`; underscores and braces
    /// are optional.
    fn from_str(s: &str) -> Result<Family> {
        let compact: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | ' '))
            .collect();
        let split = compact
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))?;
        let (name, args) = compact.split_at(split);
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad family parameters in {s:?}")))?;
        let family = match (name.to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("k", &[m, n]) => Family::CompleteBipartite(m, n),
            ("k", &[n]) => Family::Complete(n),
            ("p", &[n]) => Family::Path(n),
            ("c", &[n]) => Family::Cycle(n),
            ("s", &[n]) => Family::Star(n),
            ("e", &[n]) => Family::Empty(n),
            ("theta", &[a, b, c]) => Family::Theta(a, b, c),
            ("g", &[8]) => Family::G8,
            ("g", &[11]) => Family::G11,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        };
        Ok(family)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeShape {
    /// Root joined to the centres of `k` copies of `K_{1,l}`.
    Starlike,
    /// Root joined to an end of `k` copies of `P_{l+1}`.
    Pathlike,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootedTreeSpec {
    pub shape: TreeShape,
    pub l: usize,
    pub k: usize,
}

impl RootedTreeSpec {
    pub fn starlike(l: usize, k: usize) -> RootedTreeSpec {
        RootedTreeSpec {
            shape: TreeShape::Starlike,
            l,
            k,
        }
    }

    pub fn pathlike(l: usize, k: usize) -> RootedTreeSpec {
        RootedTreeSpec {
            shape: TreeShape::Pathlike,
            l,
            k,
        }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.k * (self.l + 1)
    }

    /// The repeated branch `T'` rooted at the vertex joined to the root.
    pub fn branch(&self) -> RootedGraph {
        let graph = match self.shape {
            TreeShape::Starlike => make_named(Family::Star(self.l)),
            TreeShape::Pathlike => make_named(Family::Path(self.l + 1)),
        }
        .expect("branch families are total for l >= 0");
        RootedGraph { graph, root: 0 }
    }
}

impl FromStr for TreeShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<TreeShape> {
        match s.to_ascii_lowercase().as_str() {
            "starlike" | "star" => Ok(TreeShape::Starlike),
            "pathlike" | "path" => Ok(TreeShape::Pathlike),
            _ => Err(Error::Parse(format!("unknown tree shape {s:?}"))),
        }
    }
}

impl fmt::Display for TreeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeShape::Starlike => "Starlike",
            TreeShape::Pathlike => "Pathlike",
        })
    }
}

/// Builds the rooted tree with root `0`; branch `i` occupies vertices
/// `1 + i(l+1) ..= (i+1)(l+1)`, its attachment vertex first.
pub fn build_rooted_tree(spec: RootedTreeSpec) -> RootedGraph {
    let n = spec.vertex_count();
    let mut g = Graph::new(n).expect("rooted tree exceeds vertex cap");
    for i in 0..spec.k {
        let base = 1 + i * (spec.l + 1);
        g.add_edge(0, base).expect("valid vertex");
        for j in 1..=spec.l {
            let prev = match spec.shape {
                TreeShape::Starlike => base,
                TreeShape::Pathlike => base + j - 1,
            };
            g.add_edge(prev, base + j).expect("valid vertex");
        }
    }
    RootedGraph { graph: g, root: 0 }
}
