//! Undirected simple graphs with optional vertex labels, and the per-vertex
//! graphlet view `⟨v, N_v, B_v⟩` used by the solvers and the matcher.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Dense vertex id in `0..n`.
pub type Vertex = usize;

/// Undirected edge stored as `(lo, hi)` with `lo < hi`.
pub type Edge = (Vertex, Vertex);

#[inline]
pub fn canonical(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable undirected simple graph.
///
/// The edge list is kept sorted lexicographically and every adjacency list
/// is sorted, so two graphs built from the same edge set compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
    names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = canonical(u, v);
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            list.push(e);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        list.sort_unstable();
        Ok(Graph {
            adjacency,
            edges: list,
            labels: None,
            names: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
            labels: None,
            names: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    /// Attaches one label per vertex.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n() {
            return Err(Error::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Attaches external vertex names (`u1`, `v2`, ...).
    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.n() {
            return Err(Error::LabelCount {
                expected: self.n(),
                got: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Vertices adjacent to both `u` and `v`, ascending.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    pub fn is_labeled(&self) -> bool {
        self.labels.is_some()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// External name of `v`, or its numeric id when the graph is unnamed.
    pub fn name(&self, v: Vertex) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks up a vertex by external name (or numeric id for unnamed graphs).
    pub fn vertex_by_name(&self, name: &str) -> Option<Vertex> {
        match &self.names {
            Some(names) => names.iter().position(|s| s == name),
            None => name.parse().ok().filter(|&v| v < self.n()),
        }
    }

    pub fn graphlet(&self, v: Vertex) -> Result<Graphlet> {
        self.check_vertex(v)?;
        Ok(Graphlet::of(self, v))
    }

    pub fn graphlets(&self) -> Vec<Graphlet> {
        (0..self.n()).map(|v| Graphlet::of(self, v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Hub record `⟨v, N_v, B_v⟩`: the hub vertex, its neighbours, and the edges
/// running between two neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graphlet {
    pub hub: Vertex,
    /// Sorted neighbour ids.
    pub neighbors: Vec<Vertex>,
    /// Sorted canonical edges with both endpoints in `neighbors`.
    pub cross_edges: Vec<Edge>,
    pub label: Option<String>,
    /// Labels aligned with `neighbors`.
    pub neighbor_labels: Option<Vec<String>>,
}

impl Graphlet {
    fn of(g: &Graph, v: Vertex) -> Self {
        let neighbors = g.neighbors(v).to_vec();
        let mut cross_edges = Vec::new();
        for (i, &a) in neighbors.iter().enumerate() {
            for &b in &neighbors[i + 1..] {
                if g.has_edge(a, b) {
                    cross_edges.push((a, b));
                }
            }
        }
        let label = g.label(v).map(str::to_owned);
        let neighbor_labels = g
            .labels()
            .map(|l| neighbors.iter().map(|&u| l[u].clone()).collect());
        Graphlet {
            hub: v,
            neighbors,
            cross_edges,
            label,
            neighbor_labels,
        }
    }

    pub fn degree(&self) -> usize {
        self.neighbors.len()
    }

    pub fn has_neighbor(&self, u: Vertex) -> bool {
        self.neighbors.binary_search(&u).is_ok()
    }

    pub fn has_cross_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.cross_edges.binary_search(&canonical(a, b)).is_ok()
    }

    pub fn neighbor_label(&self, u: Vertex) -> Option<&str> {
        let labels = self.neighbor_labels.as_ref()?;
        let i = self.neighbors.binary_search(&u).ok()?;
        Some(labels[i].as_str())
    }
}
