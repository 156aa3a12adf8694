use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use kodag::cobweb::{cobweb_edges, realizer, CobwebTruncation, CobwebVertex, LevelSequence};
use kodag::digraph::{is_dag, is_odag, is_regular, Chain, Digraph, DigraphError};
use kodag::format::{parse_digraph, write_digraph};
use kodag::oracle::verify_theorem1;
use serde::Serialize;

use crate::dot::cobweb_dot;

fn truncation(seq: &str, levels: usize) -> Result<CobwebTruncation> {
    let sequence = LevelSequence::parse(seq)?;
    Ok(CobwebTruncation::new(sequence, levels)?)
}

fn read_graph(path: &Path) -> Result<Digraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_digraph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

/// `<out>.vertices.json`
pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".vertices.json");
    PathBuf::from(name)
}

#[derive(Serialize)]
struct VertexMap<'a> {
    sequence: String,
    levels: usize,
    vertices: &'a [CobwebVertex],
}

#[derive(Serialize)]
struct GenerateSummary<'a> {
    vertices: usize,
    arcs: usize,
    graph: &'a Path,
    vertex_map: &'a Path,
}

pub fn generate(seq: &str, levels: usize, out: &Path) -> Result<String> {
    let t = truncation(seq, levels)?;
    let g = cobweb_edges(&t);
    write_file(out, &write_digraph(&g))?;

    let vertices: Vec<CobwebVertex> = t.vertices().collect();
    let map = VertexMap {
        sequence: t.sequence().to_string(),
        levels,
        vertices: &vertices,
    };
    let sidecar = sidecar_path(out);
    write_file(&sidecar, &json_line(&map)?)?;

    json_line(&GenerateSummary {
        vertices: g.vertex_count(),
        arcs: g.arc_count(),
        graph: out,
        vertex_map: &sidecar,
    })
}

#[derive(Serialize)]
struct RealizerReport {
    x: Vec<CobwebVertex>,
    y: Vec<CobwebVertex>,
    verified: bool,
}

pub fn realizer_json(seq: &str, levels: usize) -> Result<String> {
    let t = truncation(seq, levels)?;
    let r = realizer(&t)?;
    let labels = |c: &Chain| c.order().iter().map(|&i| t.vertex(i)).collect();
    json_line(&RealizerReport {
        x: labels(&r.x),
        y: labels(&r.y),
        verified: true,
    })
}

#[derive(Serialize)]
struct CheckReport {
    dag: bool,
    regular: bool,
    vertices: usize,
    arcs: usize,
}

pub fn check(graph: &Path) -> Result<String> {
    let g = read_graph(graph)?;
    let dag = is_dag(&g);
    let regular = dag && is_regular(&g)?;
    json_line(&CheckReport {
        dag,
        regular,
        vertices: g.vertex_count(),
        arcs: g.arc_count(),
    })
}

pub fn odag(graph: &Path, bound: usize) -> Result<String> {
    let g = read_graph(graph)?;
    match is_odag(&g, bound) {
        Ok(result) => json_line(&result),
        Err(e @ DigraphError::SearchBoundExceeded { .. }) => {
            bail!("{e}; rerun with a larger --bound (the search is exponential)")
        }
        Err(e) => Err(e.into()),
    }
}

pub fn theorem1(n: usize) -> Result<(String, bool)> {
    let report = verify_theorem1(n)?;
    Ok((json_line(&report)?, report.counterexamples.is_empty()))
}

pub fn export_dot(seq: &str, levels: usize, out: Option<&Path>) -> Result<String> {
    let dot = cobweb_dot(&truncation(seq, levels)?);
    match out {
        Some(path) => {
            write_file(path, &dot)?;
            Ok(String::new())
        }
        None => Ok(dot),
    }
}
