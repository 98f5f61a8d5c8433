use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;

use super::{h_from_parts, HostKind};
use crate::error::{Error, Result};
use crate::graph::{RootedTreeSpec, TreeShape};
use crate::permpoly::{per_poly, EngineKind};
use crate::spectra::is_purely_imaginary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScanFamily {
    pub host: HostKind,
    pub shape: TreeShape,
}

impl ScanFamily {
    pub fn all() -> Vec<ScanFamily> {
        HostKind::ALL
            .iter()
            .flat_map(|&host| {
                [TreeShape::Starlike, TreeShape::Pathlike].map(|shape| ScanFamily { host, shape })
            })
            .collect()
    }

    pub fn spec(&self, l: usize, k: usize) -> RootedTreeSpec {
        RootedTreeSpec {
            shape: self.shape,
            l,
            k,
        }
    }
}

impl fmt::Display for ScanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.host, self.shape)
    }
}

impl FromStr for ScanFamily {
    type Err = Error;
    /// Accepts `K23deg3xStarlike`, `K23deg3×Starlike` or `K23deg3*Starlike`.
    fn from_str(s: &str) -> Result<ScanFamily> {
        let bad = || Error::Parse(format!("unknown scan family {s:?}"));
        let s = s.replace(['×', '*'], "x");
        let lower = s.to_ascii_lowercase();
        for suffix in ["starlike", "pathlike"] {
            if let Some(host) = lower.strip_suffix(suffix).and_then(|h| h.strip_suffix('x')) {
                return Ok(ScanFamily {
                    host: host.parse().map_err(|_| bad())?,
                    shape: suffix.parse()?,
                });
            }
        }
        Err(bad())
    }
}

/// Membership of every coalescence `host · T(l, k)` for `l ≤ l_max`,
/// `k ≤ k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanGrid {
    pub family: ScanFamily,
    pub l_max: usize,
    pub k_max: usize,
    /// Indexed `[l][k]`.
    pub cells: Vec<Vec<bool>>,
}

impl ScanGrid {
    pub fn get(&self, l: usize, k: usize) -> Option<bool> {
        self.cells.get(l)?.get(k).copied()
    }

    /// Header `family,l,k,in_G`; rows ordered by `l`, then `k`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,l,k,in_G\n");
        for (l, row) in self.cells.iter().enumerate() {
            for (k, cell) in row.iter().enumerate() {
                writeln!(out, "{},{l},{k},{cell}", self.family).expect("writing to a String");
            }
        }
        out
    }

    /// Scatter plot with `l` across and `k` upwards; members are filled dots.
    pub fn to_svg(&self) -> String {
        const PITCH: usize = 20;
        const MARGIN: usize = 40;
        let width = 2 * MARGIN + self.l_max * PITCH;
        let height = 2 * MARGIN + self.k_max * PITCH;
        let x = |l: usize| MARGIN + l * PITCH;
        let y = |k: usize| height - MARGIN - k * PITCH;
        let mut out = String::new();
        let mut w = |s: String| out.push_str(&s);
        w(format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
        ));
        w(format!("<title>{}</title>\n", self.family));
        w(format!(
            "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n\
             <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\n\
             <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>\n",
            x0 = x(0),
            y0 = y(0),
            x1 = x(self.l_max),
            y1 = y(self.k_max),
        ));
        w(format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">l</text>\n\
             <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">k</text>\n",
            x(self.l_max) + MARGIN / 2,
            y(0) + 4,
            x(0),
            y(self.k_max) - MARGIN / 2,
        ));
        for l in 0..=self.l_max {
            w(format!(
                "<text x=\"{}\" y=\"{}\" font-size=\"9\" text-anchor=\"middle\">{l}</text>\n",
                x(l),
                y(0) + 16
            ));
        }
        for k in (0..=self.k_max).step_by(5) {
            w(format!(
                "<text x=\"{}\" y=\"{}\" font-size=\"9\" text-anchor=\"end\">{k}</text>\n",
                x(0) - 8,
                y(k) + 3
            ));
        }
        for (l, row) in self.cells.iter().enumerate() {
            for (k, &cell) in row.iter().enumerate() {
                if cell {
                    w(format!(
                        "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"black\"/>\n",
                        x(l),
                        y(k)
                    ));
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Exact classification of every cell. Cells are computed in parallel and
/// assembled in grid order, so the result does not depend on scheduling.
pub fn scan(family: ScanFamily, l_max: usize, k_max: usize) -> Result<ScanGrid> {
    let host = family.host.rooted();
    let p_host = per_poly(&host.graph, EngineKind::Sachs)?;
    let p_minus_root = per_poly(&host.without_root(), EngineKind::Sachs)?;
    let cells = (0..=l_max)
        .into_par_iter()
        .map(|l| {
            (0..=k_max)
                .map(|k| {
                    is_purely_imaginary(&h_from_parts(&p_host, &p_minus_root, family.spec(l, k)))
                })
                .collect::<Result<Vec<bool>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanGrid {
        family,
        l_max,
        k_max,
        cells,
    })
}
