//! Integer-programming model of the minimum hub cover problem.
//!
//! Each edge `(i, j)` contributes the coverage set `{i, j} ∪ (N(i) ∩ N(j))`:
//! the cover must contain at least one of its members. Identical sets are
//! merged and a set that strictly contains another one is implied by it, so
//! only the inclusion-minimal sets are kept as rows. For the six-vertex query
//! `q1` this leaves four rows for seven edges.

use std::collections::HashMap;

use crate::graph::{Edge, Graph, Vertex};
use crate::lp::{Fix, LpProblem};

#[derive(Clone, Debug)]
pub struct IpModel<'g> {
    graph: &'g Graph,
    rows: Vec<Vec<Vertex>>,
    row_edges: Vec<Vec<Edge>>,
}

/// Coverage set of every edge, aligned with `g.edges()`.
pub fn coverage_sets(g: &Graph) -> Vec<Vec<Vertex>> {
    g.edges()
        .iter()
        .map(|&(s, d)| {
            let mut set = g.common_neighbors(s, d);
            set.push(s);
            set.push(d);
            set.sort_unstable();
            set
        })
        .collect()
}

fn is_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

pub fn build_ip(g: &Graph) -> IpModel<'_> {
    let sets = coverage_sets(g);

    let mut distinct: Vec<Vec<Vertex>> = sets.clone();
    distinct.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    distinct.dedup();

    // keep inclusion-minimal sets; shorter sets are examined first
    let mut kept: Vec<Vec<Vertex>> = Vec::new();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for set in distinct {
        let mut hits: HashMap<usize, usize> = HashMap::new();
        let mut dominated = false;
        for &v in &set {
            for &k in &containing[v] {
                let c = hits.entry(k).or_insert(0);
                *c += 1;
                if *c == kept[k].len() {
                    dominated = true;
                }
            }
        }
        if !dominated {
            for &v in &set {
                containing[v].push(kept.len());
            }
            kept.push(set);
        }
    }
    kept.sort_unstable();

    let index: HashMap<&[Vertex], usize> = kept
        .iter()
        .enumerate()
        .map(|(i, r)| (r.as_slice(), i))
        .collect();
    let mut row_edges = vec![Vec::new(); kept.len()];
    for (e, set) in g.edges().iter().zip(&sets) {
        let row = match index.get(set.as_slice()) {
            Some(&i) => i,
            // a dominated edge joins the lexicographically last row it contains
            None => (0..kept.len())
                .rev()
                .find(|&i| is_subset(&kept[i], set))
                .expect("every coverage set contains a minimal row"),
        };
        row_edges[row].push(*e);
    }
    IpModel {
        graph: g,
        rows: kept,
        row_edges,
    }
}

impl<'g> IpModel<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn num_vars(&self) -> usize {
        self.graph.n()
    }

    /// Sorted rows in lexicographic order.
    pub fn rows(&self) -> &[Vec<Vertex>] {
        &self.rows
    }

    /// Edges represented by each row.
    pub fn row_edges(&self) -> &[Vec<Edge>] {
        &self.row_edges
    }

    pub fn is_feasible(&self, cover: &[Vertex]) -> bool {
        let mut in_c = vec![false; self.num_vars()];
        for &v in cover {
            in_c[v] = true;
        }
        self.rows.iter().all(|r| r.iter().any(|&v| in_c[v]))
    }

    /// LP relaxation with optional fixings.
    pub fn to_lp(&self, fixings: Option<Vec<Option<Fix>>>) -> LpProblem {
        let p = LpProblem::covering(self.num_vars(), self.rows.clone());
        match fixings {
            Some(f) => p.with_fixings(f),
            None => p,
        }
    }

    /// Rows containing each variable.
    pub fn column_rows(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.num_vars()];
        for (i, r) in self.rows.iter().enumerate() {
            for &v in r {
                cols[v].push(i);
            }
        }
        cols
    }
}
