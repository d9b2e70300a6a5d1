//! DIMACS-style graph files, triangle-split instance files, pattern names and
//! JSON reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::compose::TriangleSplitInstance;
use crate::error::{Error, Result};
use crate::graph::{pattern_analyze, twin_decomposition, Graph, PatternGraph, VertexId};
use crate::constraints::count_all_constraints;
use crate::kernel::{kernel_size_bound, KernelResult, KernelStats};

pub const REPORT_VERSION: u32 = 1;

/// Exit status of `kernelize` when a twin class is larger than `ω(H)`.
pub const EXIT_TRIVIAL_NO: i32 = 10;

/// Marker written instead of a kernel for trivial no-instances.
pub const TRIVIAL_NO_MARKER: &str = "TRIVIAL-NO";

/// Parses `p edge <n> <m>` followed by `e <u> <v>` lines (1-based). Lines
/// starting with `c` are comments.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::parse(line_no, "second problem line"));
                }
                let format = fields.next();
                if !matches!(format, Some("edge") | Some("col")) {
                    return Err(Error::parse(line_no, "expected `p edge <vertices> <edges>`"));
                }
                let n = parse_number(fields.next(), line_no, "vertex count")?;
                parse_number(fields.next(), line_no, "edge count")?;
                graph = Some(Graph::empty(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(line_no, "edge before the problem line"))?;
                let u = parse_vertex(fields.next(), g.vertex_count(), line_no)?;
                let v = parse_vertex(fields.next(), g.vertex_count(), line_no)?;
                if u == v {
                    return Err(Error::parse(line_no, format!("self-loop on vertex {}", u + 1)));
                }
                g.add_edge(u, v)?;
            }
            Some(other) => {
                return Err(Error::parse(line_no, format!("unknown line type `{other}`")));
            }
        }
    }
    graph.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing problem line"))
}

fn parse_number(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    field
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("missing or malformed {what}")))
}

fn parse_vertex(field: Option<&str>, n: usize, line: usize) -> Result<VertexId> {
    let v = parse_number(field, line, "vertex id")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} is outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Canonical text: header, then edges in sorted order. Graphs whose ids are
/// not `0..n` are renumbered, and a `c vertex <new> <old>` comment (both
/// 1-based) records every original id.
pub fn emit_graph(g: &Graph) -> String {
    emit_labeled_graph(g, &BTreeMap::new())
}

/// [`emit_graph`] with a `c label <vertex> <text>` comment per label.
pub fn emit_labeled_graph(g: &Graph, labels: &BTreeMap<VertexId, String>) -> String {
    let (dense, order) = g.relabeled_dense();
    let renumbered = order.iter().enumerate().any(|(i, &v)| i != v);
    let mut out = String::new();
    if renumbered {
        for (i, &v) in order.iter().enumerate() {
            writeln!(out, "c vertex {} {}", i + 1, v + 1).unwrap();
        }
    }
    for (i, &v) in order.iter().enumerate() {
        if let Some(label) = labels.get(&v) {
            writeln!(out, "c label {} {}", i + 1, label).unwrap();
        }
    }
    writeln!(out, "p edge {} {}", dense.vertex_count(), dense.edge_count()).unwrap();
    for (u, v) in dense.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

/// Pattern by name (`K3`…`K9`, `C5`, `C7`, `petersen`) or graph file path.
pub fn resolve_pattern(spec: &str) -> Result<PatternGraph> {
    let lower = spec.to_ascii_lowercase();
    let named = match lower.as_str() {
        "petersen" => Some(Graph::petersen()),
        "c5" => Some(Graph::cycle(5)),
        "c7" => Some(Graph::cycle(7)),
        _ => lower
            .strip_prefix('k')
            .and_then(|q| q.parse::<usize>().ok())
            .filter(|q| (3..=9).contains(q))
            .map(Graph::complete),
    };
    match named {
        Some(h) => pattern_analyze(&h),
        None if Path::new(spec).is_file() => pattern_analyze(&read_graph(Path::new(spec))?),
        None => Err(Error::InvalidPattern(format!(
            "`{spec}` is neither a known pattern (K3..K9, C5, C7, petersen) nor a readable file"
        ))),
    }
}

/// Parses `p tsd <m> <n> <edges>` followed by `e <u> <v>` lines with
/// `1 ≤ u ≤ m` and `1 ≤ v ≤ 3n`.
pub fn parse_tsd(text: &str) -> Result<TriangleSplitInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if fields.next() != Some("tsd") || header.is_some() {
                    return Err(Error::parse(line_no, "expected one `p tsd <m> <n> <edges>`"));
                }
                let m = parse_number(fields.next(), line_no, "independent set size")?;
                let n = parse_number(fields.next(), line_no, "triangle count")?;
                parse_number(fields.next(), line_no, "edge count")?;
                header = Some((m, n));
            }
            Some("e") => {
                let (m, n) =
                    header.ok_or_else(|| Error::parse(line_no, "edge before the problem line"))?;
                let u = parse_vertex(fields.next(), m, line_no)?;
                let v = parse_vertex(fields.next(), 3 * n, line_no)?;
                edges.push((u, v));
            }
            Some(other) => {
                return Err(Error::parse(line_no, format!("unknown line type `{other}`")));
            }
        }
    }
    let (m, n) = header.ok_or_else(|| Error::parse(1, "missing problem line"))?;
    TriangleSplitInstance::new(m, n, edges)
}

pub fn emit_tsd(inst: &TriangleSplitInstance) -> String {
    let mut out = format!(
        "p tsd {} {} {}\n",
        inst.m(),
        inst.n(),
        inst.cross_edges().len()
    );
    for &(u, v) in inst.cross_edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Machine-readable summary of one kernelization run.
#[derive(Clone, Debug, Serialize)]
pub struct StatsReport {
    pub version: u32,
    pub pattern_vertices: usize,
    pub pattern_max_degree: usize,
    pub pattern_clique_number: usize,
    pub twin_classes: usize,
    /// `|L_Π(G)|` of the input.
    pub constraints: u128,
    pub trivial_no: bool,
    /// Exact minimum twin cover of the input, when it was computed.
    pub twin_cover: Option<usize>,
    pub kernel_vertex_bound: Option<u128>,
    #[serde(flatten)]
    pub kernel: KernelStats,
}

impl StatsReport {
    pub fn new(g: &Graph, h: &PatternGraph, result: &KernelResult, twin_cover: Option<usize>) -> Self {
        let pi = twin_decomposition(g);
        StatsReport {
            version: REPORT_VERSION,
            pattern_vertices: h.color_count(),
            pattern_max_degree: h.max_degree(),
            pattern_clique_number: h.clique_number(),
            twin_classes: pi.len(),
            constraints: count_all_constraints(g, h, &pi),
            trivial_no: result.is_trivial_no(),
            twin_cover,
            kernel_vertex_bound: twin_cover
                .map(|k| kernel_size_bound(k, h))
                .filter(|b| !b.saturated)
                .map(|b| b.value),
            kernel: result.stats.clone(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, to_json(value)? + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(parse_graph("c hi\np edge 2 0\n").unwrap(), Graph::empty(2));
        let err = parse_graph("p edge 2 1\ne 1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(parse_graph("e 1 1").is_err());
    }

    #[test]
    fn parse_errors_carry_lines() {
        for (text, line) in [
            ("p edge 2 1\ne 1 3\n", 2),
            ("p edge x 1\n", 1),
            ("p edge 2 0\nq\n", 2),
            ("e 1 2\n", 1),
        ] {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_graph("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn emit_examples() {
        assert_eq!(emit_graph(&Graph::new()), "p edge 0 0\n");
        assert_eq!(
            emit_graph(&Graph::complete(3)),
            "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
        );
        let mut g = Graph::path(3);
        g.remove_vertex(0);
        let text = emit_graph(&g);
        assert!(text.starts_with("c vertex 1 2\nc vertex 2 3\n"));
        assert_eq!(parse_graph(&text).unwrap(), Graph::path(2));
    }

    #[test]
    fn patterns() {
        let k3 = resolve_pattern("K3").unwrap();
        assert_eq!((k3.max_degree(), k3.clique_number()), (2, 3));
        let p = resolve_pattern("petersen").unwrap();
        assert_eq!((p.max_degree(), p.clique_number()), (3, 2));
        assert!(resolve_pattern("K2").is_err());
        assert!(resolve_pattern("no-such-file").is_err());
    }

    #[test]
    fn tsd_roundtrip() {
        let x = TriangleSplitInstance::new(2, 1, vec![(0, 2), (1, 0)]).unwrap();
        assert_eq!(parse_tsd(&emit_tsd(&x)).unwrap(), x);
        assert!(parse_tsd("p tsd 1 1 1\ne 2 1\n").is_err());
    }
}
