//! Per-class records for connected bipartite graphs: membership, even
//! subdivisions of `K_{2,3}`, and the permanental polynomial.

use std::fmt::Write as _;
use std::io::BufRead;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{
    contains_even_subdivision_k23, enumerate_connected_bipartite, graph6_decode, graph6_encode,
    Graph,
};
use crate::spectra::is_in_G;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub graph6: String,
    pub n: usize,
    pub in_g: bool,
    pub bipartite: bool,
    pub has_even_subdiv_k23: bool,
    pub perpoly: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusSummary {
    pub total: usize,
    pub in_g: usize,
    pub in_g_with_even_subdiv_k23: usize,
    pub not_in_g: usize,
}

impl CensusSummary {
    pub fn from_records(records: &[CensusRecord]) -> CensusSummary {
        let in_g = records.iter().filter(|r| r.in_g).count();
        CensusSummary {
            total: records.len(),
            in_g,
            in_g_with_even_subdiv_k23: records
                .iter()
                .filter(|r| r.in_g && r.has_even_subdiv_k23)
                .count(),
            not_in_g: records.len() - in_g,
        }
    }
}

impl std::fmt::Display for CensusSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "total={} in_G={} in_G_with_even_subdiv_k23={} not_in_G={}",
            self.total, self.in_g, self.in_g_with_even_subdiv_k23, self.not_in_g
        )
    }
}

pub const CENSUS_CSV_HEADER: &str = "graph6,n,in_G,bipartite,has_even_subdiv_k23,perpoly";

pub fn census_record(g: &Graph) -> Result<CensusRecord> {
    let report = is_in_G(g)?;
    Ok(CensusRecord {
        graph6: graph6_encode(g),
        n: g.vertex_count(),
        in_g: report.is_purely_imaginary,
        bipartite: g.is_bipartite().is_some(),
        has_even_subdiv_k23: contains_even_subdivision_k23(g)?.is_some(),
        perpoly: report.poly.to_string(),
    })
}

/// Records for the given graphs, in input order.
pub fn census_of(graphs: &[Graph]) -> Result<Vec<CensusRecord>> {
    graphs.par_iter().map(census_record).collect()
}

/// One record per isomorphism class of connected bipartite graphs on `n`
/// vertices, from the built-in enumeration.
pub fn census(n: usize) -> Result<Vec<CensusRecord>> {
    census_of(&enumerate_connected_bipartite(n)?)
}

/// Reads one graph6 string per line (blank lines and a leading
/// `>>graph6<<` marker are skipped). Every graph must have `n` vertices.
pub fn read_graph6_stream<R: BufRead>(reader: R, n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))?;
        let text = line.trim().trim_start_matches(">>graph6<<");
        if text.is_empty() {
            continue;
        }
        let g = graph6_decode(text).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))?;
        if g.vertex_count() != n {
            return Err(Error::Parse(format!(
                "line {}: graph has {} vertices, expected {n}",
                i + 1,
                g.vertex_count()
            )));
        }
        out.push(g);
    }
    Ok(out)
}

pub fn census_to_csv(records: &[CensusRecord]) -> String {
    let mut out = format!("{CENSUS_CSV_HEADER}\n");
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.graph6, r.n, r.in_g, r.bipartite, r.has_even_subdiv_k23, r.perpoly
        )
        .expect("writing to a String");
    }
    out
}
