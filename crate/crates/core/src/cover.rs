//! Hub-coverage semantics and the solution record shared by every solver.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{canonical, Edge, Graph, Vertex};

/// Every edge incident to `v` plus every edge joining two neighbours of `v`,
/// sorted canonically.
pub fn hub_covered_edges(g: &Graph, v: Vertex) -> Result<Vec<Edge>> {
    g.check_vertex(v)?;
    let nb = g.neighbors(v);
    let mut out: Vec<Edge> = nb.iter().map(|&u| canonical(u, v)).collect();
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if g.has_edge(a, b) {
                out.push((a, b));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn membership(g: &Graph, m: &[Vertex]) -> Vec<bool> {
    let mut in_m = vec![false; g.n()];
    for &v in m {
        if v < g.n() {
            in_m[v] = true;
        }
    }
    in_m
}

/// Whether `(s, d)` is covered by the vertex set marked in `in_m`.
#[inline]
pub(crate) fn edge_hub_covered(g: &Graph, in_m: &[bool], s: Vertex, d: Vertex) -> bool {
    if in_m[s] || in_m[d] {
        return true;
    }
    let (a, b) = if g.degree(s) <= g.degree(d) { (s, d) } else { (d, s) };
    g.neighbors(a).iter().any(|&c| in_m[c] && g.has_edge(c, b))
}

/// True iff every edge `(s, d)` has `s ∈ m`, `d ∈ m`, or a common neighbour
/// in `m`. Ids outside the graph are ignored.
pub fn is_hub_cover(g: &Graph, m: &[Vertex]) -> bool {
    let in_m = membership(g, m);
    g.edges()
        .iter()
        .all(|&(s, d)| edge_hub_covered(g, &in_m, s, d))
}

pub fn is_vertex_cover(g: &Graph, m: &[Vertex]) -> bool {
    let in_m = membership(g, m);
    g.edges().iter().all(|&(s, d)| in_m[s] || in_m[d])
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(s, d)| g.common_neighbors(s, d).is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SolveStatus {
    Optimal,
    Feasible,
    TimeLimit,
    Infeasible,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolveStatus::Optimal => "Optimal",
            SolveStatus::Feasible => "Feasible",
            SolveStatus::TimeLimit => "TimeLimit",
            SolveStatus::Infeasible => "Infeasible",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for SolveStatus {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Optimal" => Ok(SolveStatus::Optimal),
            "Feasible" => Ok(SolveStatus::Feasible),
            "TimeLimit" => Ok(SolveStatus::TimeLimit),
            "Infeasible" => Ok(SolveStatus::Infeasible),
            other => Err(format!("unknown status `{other}`")),
        }
    }
}

/// A hub cover produced by some solver, with its metadata.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HubCoverSolution {
    /// Sorted vertex ids.
    pub cover: Vec<Vertex>,
    pub objective: usize,
    pub status: SolveStatus,
    /// Seconds spent inside the solver.
    pub solve_time: f64,
    /// Best proven lower bound on the optimum.
    pub lower_bound: f64,
    /// Seconds until the returned cover was first found (LSLP only).
    pub best_time: Option<f64>,
}

impl HubCoverSolution {
    pub fn new(mut cover: Vec<Vertex>, status: SolveStatus, lower_bound: f64, solve_time: f64) -> Self {
        cover.sort_unstable();
        cover.dedup();
        HubCoverSolution {
            objective: cover.len(),
            cover,
            status,
            solve_time,
            lower_bound,
            best_time: None,
        }
    }

    pub fn has_incumbent(&self) -> bool {
        !matches!(self.status, SolveStatus::Infeasible)
    }
}

/// Re-checks that the solution is a hub cover and that its objective
/// matches the cover size.
pub fn verify_solution(g: &Graph, s: &HubCoverSolution) -> bool {
    s.objective == s.cover.len()
        && s.cover.iter().all(|&v| v < g.n())
        && is_hub_cover(g, &s.cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{q1, u};

    #[test]
    fn hub_u5_covers_six_edges() {
        let g = q1();
        let got = hub_covered_edges(&g, u(5)).unwrap();
        let want: Vec<Edge> = {
            let mut e = vec![
                canonical(u(1), u(5)),
                canonical(u(1), u(2)),
                canonical(u(2), u(5)),
                canonical(u(2), u(3)),
                canonical(u(3), u(5)),
                canonical(u(5), u(6)),
            ];
            e.sort_unstable();
            e
        };
        assert_eq!(got, want);
    }

    #[test]
    fn hub_u3_covers_four_edges() {
        let g = q1();
        let got = hub_covered_edges(&g, u(3)).unwrap();
        let mut want = vec![
            canonical(u(3), u(2)),
            canonical(u(5), u(2)),
            canonical(u(3), u(5)),
            canonical(u(3), u(4)),
        ];
        want.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn isolated_vertex_covers_nothing() {
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert!(hub_covered_edges(&g, 3).unwrap().is_empty());
        assert!(hub_covered_edges(&g, 7).is_err());
    }

    #[test]
    fn hub_cover_examples() {
        let g = q1();
        assert!(is_hub_cover(&g, &[u(5), u(3)]));
        assert!(is_hub_cover(&g, &[u(2), u(6), u(4)]));
        assert!(is_hub_cover(&g, &[u(1), u(5), u(4)]));
        assert!(!is_hub_cover(&g, &[u(6)]));
        assert!(is_hub_cover(&Graph::empty(3), &[]));
        assert!(!is_hub_cover(&Graph::path(2), &[]));
    }

    #[test]
    fn vertex_cover_examples() {
        let g = q1();
        // (u3,u4) has no endpoint in {u2,u5}
        assert!(!is_vertex_cover(&g, &[u(2), u(5)]));
        assert!(is_vertex_cover(&g, &[u(2), u(3), u(5)]));
        assert!(!is_vertex_cover(&g, &[u(5), u(3)]));
        assert!(is_vertex_cover(&Graph::empty(4), &[]));
    }

    #[test]
    fn triangle_free_examples() {
        assert!(is_triangle_free(&Graph::cycle(4)));
        assert!(!is_triangle_free(&Graph::complete(3)));
        assert!(!is_triangle_free(&q1()));
    }

    #[test]
    fn verify_rejects_tampered_objective_and_cover() {
        let g = q1();
        let good = HubCoverSolution::new(vec![u(3), u(5)], SolveStatus::Optimal, 2.0, 0.0);
        assert!(verify_solution(&g, &good));
        let mut wrong_count = good.clone();
        wrong_count.objective = 3;
        assert!(!verify_solution(&g, &wrong_count));
        let dropped = HubCoverSolution::new(vec![u(5)], SolveStatus::Feasible, 0.0, 0.0);
        assert!(!verify_solution(&g, &dropped));
        let empty = HubCoverSolution::new(vec![], SolveStatus::Optimal, 0.0, 0.0);
        assert!(verify_solution(&Graph::empty(5), &empty));
    }
}
