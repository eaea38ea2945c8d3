//! Graphlet-based subgraph matching.
//!
//! A query is answered by ordering the graphlets of one of its hub covers
//! into a plan and expanding the plan depth-first against the data graph.
//! Matches are injective vertex maps that send every query edge to a data
//! edge (non-induced); the mode decides how vertex labels must agree.

mod index;
mod plan;
mod search;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use index::{build_indices, HashIndex, SetIndex};
pub use plan::{choose_plan, order_graphlets, GraphStats, Mark, PlanEntry, QueryPlan};
pub use search::{find_solutions, graphlet_matches};

/// One match: entry `i` is the data vertex assigned to query vertex `i`.
pub type VertexMap = Vec<Vertex>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatchMode {
    /// Labels are ignored.
    Structural,
    /// Labels are renamed consistently: equal query labels map to one data
    /// label and distinct query labels to distinct data labels.
    Label,
    /// Labels must be equal.
    Match,
}

impl MatchMode {
    pub const ALL: [MatchMode; 3] = [MatchMode::Structural, MatchMode::Label, MatchMode::Match];

    pub fn as_str(self) -> &'static str {
        match self {
            MatchMode::Structural => "structural",
            MatchMode::Label => "label",
            MatchMode::Match => "match",
        }
    }
}

impl fmt::Display for MatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for MatchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MatchMode::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown match mode `{s}`")))
    }
}

/// Partial injective map from query to data vertices, plus the label
/// renaming built so far in `Label` mode.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    map: Vec<Option<Vertex>>,
    image: HashMap<Vertex, Vertex>,
    labels: HashMap<String, String>,
    labels_back: HashMap<String, String>,
}

impl Substitution {
    pub fn new(query_vertices: usize) -> Self {
        Substitution {
            map: vec![None; query_vertices],
            ..Default::default()
        }
    }

    pub fn get(&self, q: Vertex) -> Option<Vertex> {
        self.map[q]
    }

    /// Query vertex currently mapped onto data vertex `d`.
    pub fn preimage(&self, d: Vertex) -> Option<Vertex> {
        self.image.get(&d).copied()
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Binds `q -> d` if that keeps the map injective and the labels
    /// compatible under `mode`. Rebinding to the same target succeeds.
    pub fn bind(&mut self, q: Vertex, d: Vertex, ql: Option<&str>, dl: Option<&str>, mode: MatchMode) -> bool {
        if let Some(cur) = self.map[q] {
            return cur == d;
        }
        if self.image.contains_key(&d) {
            return false;
        }
        let (ql, dl) = (ql.unwrap_or(""), dl.unwrap_or(""));
        match mode {
            MatchMode::Structural => {}
            MatchMode::Match => {
                if ql != dl {
                    return false;
                }
            }
            MatchMode::Label => match (self.labels.get(ql), self.labels_back.get(dl)) {
                (Some(a), _) if a != dl => return false,
                (_, Some(b)) if b != ql => return false,
                (Some(_), Some(_)) => {}
                _ => {
                    self.labels.insert(ql.to_string(), dl.to_string());
                    self.labels_back.insert(dl.to_string(), ql.to_string());
                }
            },
        }
        self.map[q] = Some(d);
        self.image.insert(d, q);
        true
    }

    /// The complete map, when every query vertex is bound.
    pub fn to_map(&self) -> Option<VertexMap> {
        self.map.iter().copied().collect()
    }
}

/// Whether a complete vertex map is a match of `q` in `d` under `mode`.
pub fn is_match(q: &Graph, d: &Graph, map: &[Vertex], mode: MatchMode) -> bool {
    if map.len() != q.n() {
        return false;
    }
    let mut sub = Substitution::new(q.n());
    for (v, &x) in map.iter().enumerate() {
        if x >= d.n() || !sub.bind(v, x, q.label(v), d.label(x), mode) {
            return false;
        }
    }
    q.edges().iter().all(|&(a, b)| d.has_edge(map[a], map[b]))
}

pub const BRUTE_FORCE_QUERY_LIMIT: usize = 8;
pub const BRUTE_FORCE_DATA_LIMIT: usize = 14;

/// Every match of `q` in `d`, by assigning query vertices in id order and
/// checking each edge as soon as both ends are placed.
pub fn brute_force_matches(q: &Graph, d: &Graph, mode: MatchMode) -> Result<BTreeSet<VertexMap>> {
    if q.n() > BRUTE_FORCE_QUERY_LIMIT {
        return Err(Error::OracleLimit { n: q.n(), limit: BRUTE_FORCE_QUERY_LIMIT });
    }
    if d.n() > BRUTE_FORCE_DATA_LIMIT {
        return Err(Error::OracleLimit { n: d.n(), limit: BRUTE_FORCE_DATA_LIMIT });
    }
    fn go(q: &Graph, d: &Graph, mode: MatchMode, v: Vertex, sub: &Substitution, out: &mut BTreeSet<VertexMap>) {
        if v == q.n() {
            out.insert(sub.to_map().expect("all bound"));
            return;
        }
        for x in 0..d.n() {
            let mut next = sub.clone();
            if !next.bind(v, x, q.label(v), d.label(x), mode) {
                continue;
            }
            let ok = q
                .neighbors(v)
                .iter()
                .filter(|&&u| u < v)
                .all(|&u| d.has_edge(next.get(u).unwrap(), x));
            if ok {
                go(q, d, mode, v + 1, &next, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    go(q, d, mode, 0, &Substitution::new(q.n()), &mut out);
    Ok(out)
}

/// All matches of `q` in `d` using the cheapest hub-cover plan.
pub fn match_graphs(q: &Graph, d: &Graph, mode: MatchMode) -> Result<BTreeSet<VertexMap>> {
    let stats = GraphStats::new(d);
    let plan = choose_plan(q, &stats, mode)?;
    let (h, s) = build_indices(d);
    find_solutions(&plan, q, d, &h, &s, mode)
}

/// `qname=dname` pairs in query-id order.
pub fn format_match(q: &Graph, d: &Graph, map: &[Vertex]) -> String {
    map.iter()
        .enumerate()
        .map(|(v, &x)| format!("{}={}", q.name(v), d.name(x)))
        .collect::<Vec<_>>()
        .join(" ")
}
