use std::fs;
use std::io::{self, BufReader, Write};
use std::path::Path;

use perspectra::census::{census, census_of, census_to_csv, read_graph6_stream, CensusSummary};
use perspectra::construct::{
    branch_polys, h_poly, scan, schwenk_coalescence_poly, HostKind, ScanFamily,
};
use perspectra::graph::{
    build_rooted_tree, coalesce, graph6_decode, graph6_encode, make_named, Family, RootedTreeSpec,
    TreeShape,
};
use perspectra::permpoly::SACHS_MAX_VERTICES;
use perspectra::spectra::classify_perspec;
use perspectra::{per_poly, EngineKind, Graph, PerSpecReport, RootedGraph};

use crate::args::{ConstructArgs, Engine, GraphSource};
use crate::error::{CliError, CliResult};
use crate::render;

/// `println!` that reports a closed stdout as an output error instead of
/// panicking.
macro_rules! say {
    ($($arg:tt)*) => {
        writeln!(io::stdout(), $($arg)*)
            .map_err(|e| CliError::Output(format!("cannot write to stdout: {e}")))?
    };
}

fn family_graph(name: &str) -> CliResult<Graph> {
    Ok(make_named(name.parse::<Family>()?)?)
}

fn load_graph(source: &GraphSource) -> CliResult<Graph> {
    if let Some(name) = &source.family {
        family_graph(name)
    } else if let Some(code) = &source.graph6 {
        Ok(graph6_decode(code)?)
    } else if let Some(path) = &source.edges {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Ok(Graph::parse_edge_list(&text)?)
    } else {
        Err(CliError::Usage(
            "one of --family, --graph6, --edges is required".into(),
        ))
    }
}

fn engine_kind(e: Engine) -> EngineKind {
    match e {
        Engine::Sachs => EngineKind::Sachs,
        Engine::Expansion => EngineKind::Expansion,
        Engine::Recursive => EngineKind::Recursive,
    }
}

fn write_output(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents)
        .map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display())))
}

fn emit(out: Option<&Path>, contents: &str) -> CliResult<()> {
    match out {
        Some(path) => write_output(path, contents),
        None => io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|e| CliError::Output(format!("cannot write to stdout: {e}"))),
    }
}

pub fn poly(source: &GraphSource, engine: Engine, verify: bool) -> CliResult<()> {
    let g = load_graph(source)?;
    let p = per_poly(&g, engine_kind(engine))?;
    say!("{p}");
    if verify {
        let mut parts = Vec::new();
        let mut mismatch = false;
        for e in EngineKind::ALL {
            if g.vertex_count() > e.max_vertices() {
                parts.push(format!("{e}=skipped(cap {})", e.max_vertices()));
                continue;
            }
            let ok = per_poly(&g, e)? == p;
            mismatch |= !ok;
            parts.push(format!("{e}={}", if ok { "agree" } else { "DISAGREE" }));
        }
        say!("engines: {}", parts.join(" "));
        if mismatch {
            return Err(CliError::Check("engines disagree".into()));
        }
    }
    Ok(())
}

fn print_report(r: &PerSpecReport, full_precision: bool) -> CliResult<()> {
    say!("poly: {}", r.poly);
    say!("in_G: {}", r.is_purely_imaginary);
    say!("zero_multiplicity: {}", r.zero_multiplicity);
    say!("bipartite_by_coeffs: {}", r.is_bipartite_by_coeffs);
    match &r.numeric_roots {
        Some(roots) => say!("roots: {}", render::roots(roots, full_precision)),
        None => say!("roots: unavailable"),
    }
    Ok(())
}

pub fn classify(source: &GraphSource, full_precision: bool) -> CliResult<()> {
    let g = load_graph(source)?;
    let report = classify_perspec(&per_poly(&g, EngineKind::Sachs)?)?;
    say!("graph6: {}", graph6_encode(&g));
    print_report(&report, full_precision)?;
    Ok(())
}

pub fn scan_cmd(
    family: &str,
    l_max: usize,
    k_max: usize,
    out: Option<&Path>,
    svg: Option<&Path>,
) -> CliResult<()> {
    let family: ScanFamily = family.parse()?;
    let grid = scan(family, l_max, k_max)?;
    emit(out, &grid.to_csv())?;
    if let Some(path) = svg {
        write_output(path, &grid.to_svg())?;
    }
    Ok(())
}

/// Rows go to `out` (or stdout); the summary line always goes to stderr.
pub fn census_cmd(n: usize, stream: Option<&Path>, out: Option<&Path>) -> CliResult<()> {
    let records = match stream {
        None => census(n)?,
        Some(path) => {
            let graphs = if path == Path::new("-") {
                read_graph6_stream(io::stdin().lock(), n)?
            } else {
                let file = fs::File::open(path)
                    .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
                read_graph6_stream(BufReader::new(file), n)?
            };
            census_of(&graphs)?
        }
    };
    emit(out, &census_to_csv(&records))?;
    eprintln!("summary: n={n} {}", CensusSummary::from_records(&records));
    Ok(())
}

fn fixed_host(name: &str) -> CliResult<RootedGraph> {
    Ok(name.parse::<HostKind>()?.rooted())
}

fn rooted(graph: Graph, root: Option<usize>) -> CliResult<RootedGraph> {
    let root = root.ok_or_else(|| CliError::Usage("a root vertex is required".into()))?;
    Ok(RootedGraph::new(graph, root)?)
}

pub fn construct(a: &ConstructArgs) -> CliResult<()> {
    let (host, host_label) = if let Some(name) = &a.host {
        (fixed_host(name)?, name.clone())
    } else if let Some(name) = &a.family {
        (rooted(family_graph(name)?, a.root)?, name.clone())
    } else if let Some(code) = &a.graph6 {
        (rooted(graph6_decode(code)?, a.root)?, code.clone())
    } else {
        return Err(CliError::Usage("a host is required".into()));
    };
    say!(
        "host: {host_label} root={} n={} graph6={}",
        host.root,
        host.graph.vertex_count(),
        graph6_encode(&host.graph)
    );

    if let Some(shape) = &a.tree {
        let shape: TreeShape = shape.parse()?;
        let (l, k) = (a.l.unwrap_or(0), a.k.unwrap_or(0));
        return construct_tree(&host, RootedTreeSpec { shape, l, k }, a.full_precision);
    }
    let other = if let Some(name) = &a.attach_host {
        fixed_host(name)?
    } else if let Some(name) = &a.attach_family {
        rooted(family_graph(name)?, a.attach_root)?
    } else if let Some(code) = &a.attach_graph6 {
        rooted(graph6_decode(code)?, a.attach_root)?
    } else {
        return Err(CliError::Usage("an attachment is required".into()));
    };
    say!(
        "attach: root={} n={} graph6={}",
        other.root,
        other.graph.vertex_count(),
        graph6_encode(&other.graph)
    );
    let glued = coalesce(&host, &other)?;
    say!(
        "coalescence: n={} graph6={}",
        glued.graph.vertex_count(),
        graph6_encode(&glued.graph)
    );
    let direct = per_poly(&glued.graph, EngineKind::Sachs)?;
    let schwenk = schwenk_coalescence_poly(&host, &other)?;
    say!(
        "schwenk: {}",
        if schwenk == direct { "ok" } else { "MISMATCH" }
    );
    print_report(&classify_perspec(&direct)?, a.full_precision)?;
    if schwenk != direct {
        return Err(CliError::Check("coalescence identity failed".into()));
    }
    Ok(())
}

fn construct_tree(host: &RootedGraph, spec: RootedTreeSpec, full_precision: bool) -> CliResult<()> {
    say!("tree: {}(l={},k={})", spec.shape, spec.l, spec.k);
    let h = h_poly(host, spec)?;
    let (t, _) = branch_polys(spec);
    // the factorisation also covers coalescences too large to build
    let pi = if spec.k == 0 {
        per_poly(&host.graph, EngineKind::Sachs)?
    } else {
        t.pow(spec.k as u32 - 1) * &h
    };
    let n = host.graph.vertex_count() + spec.vertex_count() - 1;
    say!("coalescence: n={n}");
    say!("H: {h}");
    if n <= SACHS_MAX_VERTICES {
        let glued = coalesce(host, &build_rooted_tree(spec))?;
        let direct = per_poly(&glued.graph, EngineKind::Sachs)?;
        let ok = direct == pi;
        say!("factorization: {}", if ok { "ok" } else { "MISMATCH" });
        if !ok {
            print_report(&classify_perspec(&direct)?, full_precision)?;
            return Err(CliError::Check("factorization check failed".into()));
        }
    } else {
        say!("factorization: skipped (direct engines stop at {SACHS_MAX_VERTICES} vertices)");
    }
    print_report(&classify_perspec(&pi)?, full_precision)?;
    Ok(())
}
