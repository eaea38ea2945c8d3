//! Plain-text graph files and solution records.
//!
//! ```text
//! # comment
//! graph <n> <m> [labeled]
//! v <id> [label]
//! e <i> <j>
//! ```
//!
//! Vertex ids are either all integers in `0..n`, or symbolic names (`u1`,
//! `v2`, ...). Names are assigned ids in order of first appearance, so a file
//! that lists its `v` lines first controls the numbering. A labeled file
//! gives every vertex a label on its `v` line.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::cover::{HubCoverSolution, SolveStatus};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

struct Header {
    n: usize,
    m: usize,
    labeled: bool,
}

enum Line<'a> {
    Vertex(&'a str, Option<&'a str>),
    Edge(&'a str, &'a str),
}

fn parse_header(line: usize, toks: &[&str]) -> Result<Header> {
    let num = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::parse(line, format!("invalid {what} `{s}`")))
    };
    match toks {
        ["graph", n, m] => Ok(Header { n: num(n, "vertex count")?, m: num(m, "edge count")?, labeled: false }),
        ["graph", n, m, "labeled"] => Ok(Header { n: num(n, "vertex count")?, m: num(m, "edge count")?, labeled: true }),
        _ => Err(Error::parse(line, "expected `graph <n> <m> [labeled]`")),
    }
}

/// Parses a graph file.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header = None;
    let mut body: Vec<(usize, Line<'_>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if header.is_none() {
            header = Some(parse_header(line, &toks)?);
            continue;
        }
        let parsed = match toks.as_slice() {
            ["v", id] => Line::Vertex(id, None),
            ["v", id, label] => Line::Vertex(id, Some(label)),
            ["e", a, b] => Line::Edge(a, b),
            ["graph", ..] => return Err(Error::parse(line, "duplicate header")),
            _ => return Err(Error::parse(line, format!("unrecognised line `{content}`"))),
        };
        body.push((line, parsed));
    }
    let Header { n, m, labeled } = header.ok_or_else(|| Error::parse(0, "missing `graph` header"))?;

    let tokens = body.iter().flat_map(|(_, l)| match l {
        Line::Vertex(v, _) => vec![*v],
        Line::Edge(a, b) => vec![*a, *b],
    });
    let named = tokens.clone().any(|t| t.parse::<usize>().is_err());
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<&str, Vertex> = HashMap::new();
    if named {
        for t in tokens {
            if !ids.contains_key(t) {
                ids.insert(t, names.len());
                names.push(t.to_string());
            }
        }
        if names.len() != n {
            return Err(Error::parse(0, format!("header declares {n} vertices, file names {}", names.len())));
        }
    }
    let resolve = |line: usize, t: &str| -> Result<Vertex> {
        let v = if named { ids[t] } else { t.parse::<usize>().expect("checked numeric") };
        if v >= n {
            return Err(Error::parse(line, format!("vertex {v} out of range 0..{n}")));
        }
        Ok(v)
    };

    let mut labels: Vec<Option<String>> = vec![None; n];
    let mut edges = Vec::with_capacity(m);
    for (line, l) in &body {
        match l {
            Line::Vertex(t, label) => {
                let v = resolve(*line, t)?;
                if let Some(label) = label {
                    if !labeled {
                        return Err(Error::parse(*line, "label in an unlabeled graph"));
                    }
                    if labels[v].replace(label.to_string()).is_some() {
                        return Err(Error::parse(*line, format!("vertex `{t}` labeled twice")));
                    }
                }
            }
            Line::Edge(a, b) => edges.push((*line, resolve(*line, a)?, resolve(*line, b)?)),
        }
    }
    if edges.len() != m {
        return Err(Error::parse(0, format!("header declares {m} edges, file has {}", edges.len())));
    }
    let mut g = Graph::new(n, edges.iter().map(|&(_, a, b)| (a, b))).map_err(|e| {
        let line = match e {
            Error::SelfLoop(v) => edges.iter().find(|&&(_, a, b)| a == v && b == v).map(|x| x.0),
            Error::DuplicateEdge(a, b) => edges
                .iter()
                .filter(|&&(_, x, y)| (x.min(y), x.max(y)) == (a, b))
                .nth(1)
                .map(|x| x.0),
            _ => None,
        };
        Error::parse(line.unwrap_or(0), e.to_string())
    })?;
    if labeled {
        let missing = labels.iter().position(Option::is_none);
        if let Some(v) = missing {
            return Err(Error::parse(0, format!("vertex {v} has no label")));
        }
        g = g.with_labels(labels.into_iter().map(Option::unwrap))?;
    }
    if named {
        g = g.with_names(names)?;
    }
    Ok(g)
}

/// Writes a graph in canonical form: vertex lines by id, edges in
/// lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let labeled = if g.is_labeled() { " labeled" } else { "" };
    writeln!(out, "graph {} {}{labeled}", g.n(), g.edge_count()).unwrap();
    if g.is_labeled() || g.names().is_some() {
        for v in 0..g.n() {
            match g.label(v) {
                Some(l) => writeln!(out, "v {} {l}", g.name(v)).unwrap(),
                None => writeln!(out, "v {}", g.name(v)).unwrap(),
            }
        }
    }
    for &(a, b) in g.edges() {
        writeln!(out, "e {} {}", g.name(a), g.name(b)).unwrap();
    }
    out
}

pub fn read_graph_file(path: &std::path::Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

/// Human-readable solution record; cover members use the graph's names.
pub fn format_solution(g: &Graph, s: &HubCoverSolution) -> String {
    let mut out = String::new();
    writeln!(out, "objective {}", s.objective).unwrap();
    writeln!(out, "status {}", s.status).unwrap();
    writeln!(out, "bound {}", s.lower_bound).unwrap();
    writeln!(out, "time {:.6}", s.solve_time).unwrap();
    if let Some(b) = s.best_time {
        writeln!(out, "best_time {b:.6}").unwrap();
    }
    let names: Vec<String> = s.cover.iter().map(|&v| g.name(v)).collect();
    writeln!(out, "cover {}", names.join(" ")).unwrap();
    out
}

/// Reads a record written by [`format_solution`] back, resolving cover
/// members against the graph.
pub fn parse_solution(g: &Graph, text: &str) -> Result<HubCoverSolution> {
    let mut objective = None;
    let mut status = SolveStatus::Feasible;
    let mut bound = 0.0;
    let mut time = 0.0;
    let mut best_time = None;
    let mut cover = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        let Some((key, rest)) = content.split_once(' ').or(Some((content, ""))).filter(|(k, _)| !k.is_empty()) else {
            continue;
        };
        let rest = rest.trim();
        let float = |s: &str| s.parse::<f64>().map_err(|_| Error::parse(line, format!("invalid number `{s}`")));
        match key {
            "objective" => {
                objective = Some(rest.parse::<usize>().map_err(|_| Error::parse(line, "invalid objective"))?)
            }
            "status" => status = rest.parse().map_err(|e: String| Error::parse(line, e))?,
            "bound" => bound = float(rest)?,
            "time" => time = float(rest)?,
            "best_time" => best_time = Some(float(rest)?),
            "cover" => {
                let mut c = Vec::new();
                for t in rest.split_whitespace() {
                    let v = match g.vertex_by_name(t) {
                        Some(v) => v,
                        None => t
                            .parse::<usize>()
                            .ok()
                            .filter(|&v| v < g.n() && g.names().is_none())
                            .ok_or_else(|| Error::parse(line, format!("unknown vertex `{t}`")))?,
                    };
                    c.push(v);
                }
                cover = Some(c);
            }
            other => return Err(Error::parse(line, format!("unknown key `{other}`"))),
        }
    }
    let cover = cover.ok_or_else(|| Error::parse(0, "missing `cover` line"))?;
    let mut s = HubCoverSolution::new(cover, status, bound, time);
    if let Some(o) = objective {
        s.objective = o;
    }
    s.best_time = best_time;
    Ok(s)
}
