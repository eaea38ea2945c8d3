use std::fmt;

use crate::cover::is_hub_cover;
use crate::error::{Error, Result};
use crate::graph::{Graph, Graphlet, Vertex};
use crate::ip::build_ip;
use crate::oracle::{brute_force_all_mhc, ORACLE_LIMIT};
use crate::solvers::{solve_exact, SolverConfig};

use super::MatchMode;

/// Per-vertex sizes of the data graph used by the selectivity estimates.
#[derive(Clone, Debug)]
pub struct GraphStats {
    degree: Vec<usize>,
    cross: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl GraphStats {
    pub fn new(d: &Graph) -> Self {
        let graphlets = d.graphlets();
        GraphStats {
            degree: graphlets.iter().map(Graphlet::degree).collect(),
            cross: graphlets.iter().map(|r| r.cross_edges.len()).collect(),
            labels: d.labels().map(<[String]>::to_vec),
        }
    }

    fn count(&self, pred: impl Fn(usize) -> bool) -> usize {
        (0..self.degree.len()).filter(|&y| pred(y)).count()
    }

    /// Data graphlets at least as large as `r` in both neighbours and cross
    /// edges; in `Match` mode the hub labels must also agree.
    pub fn selectivity_node(&self, r: &Graphlet, mode: MatchMode) -> usize {
        let label = r.label.as_deref().unwrap_or("");
        self.count(|y| {
            self.degree[y] >= r.degree()
                && self.cross[y] >= r.cross_edges.len()
                && (mode != MatchMode::Match
                    || self.labels.as_ref().map_or("", |l| l[y].as_str()) == label)
        })
    }

    pub fn selectivity_structural(&self, r: &Graphlet) -> usize {
        self.count(|y| self.degree[y] >= r.degree() && self.cross[y] >= r.cross_edges.len())
    }

    pub fn selectivity_neighbor(&self, r: &Graphlet) -> usize {
        self.count(|y| self.degree[y] >= r.degree())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mark {
    /// Candidates come from a scan of all data graphlets.
    Top,
    /// The hub is a neighbour of an earlier hub, so it is already bound.
    Dot,
    /// The hub shares a neighbour with an earlier hub.
    Star,
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mark::Top => "Top",
            Mark::Dot => "Dot",
            Mark::Star => "Star",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlanEntry {
    pub vertex: Vertex,
    pub mark: Mark,
}

/// Ordered hub-cover graphlets of a query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryPlan {
    pub entries: Vec<PlanEntry>,
    /// Sorted cover the plan was built from.
    pub cover: Vec<Vertex>,
}

fn check_cover(q: &Graph, cover: &[Vertex]) -> Result<Vec<Vertex>> {
    for &v in cover {
        q.check_vertex(v)?;
    }
    if !is_hub_cover(q, cover) {
        return Err(Error::NotHubCover);
    }
    let mut c = cover.to_vec();
    c.sort_unstable();
    c.dedup();
    Ok(c)
}

fn relation(q: &Graph, placed: &[PlanEntry], x: Vertex) -> Mark {
    if placed.iter().any(|e| q.has_edge(e.vertex, x)) {
        return Mark::Dot;
    }
    let shares = placed.iter().any(|e| {
        q.neighbors(x)
            .iter()
            .any(|&w| q.has_edge(e.vertex, w))
    });
    if shares {
        Mark::Star
    } else {
        Mark::Top
    }
}

impl QueryPlan {
    /// Plan with the given hub order; each mark follows from the hubs placed
    /// before it, with Dot taking precedence over Star.
    pub fn from_order(q: &Graph, order: &[Vertex]) -> Result<QueryPlan> {
        let cover = check_cover(q, order)?;
        if cover.len() != order.len() {
            return Err(Error::InvalidParameter("plan order repeats a vertex".into()));
        }
        let mut entries: Vec<PlanEntry> = Vec::with_capacity(order.len());
        for &v in order {
            let mark = relation(q, &entries, v);
            entries.push(PlanEntry { vertex: v, mark });
        }
        Ok(QueryPlan { entries, cover })
    }

    /// Product of the per-step candidate estimates: a scan for Top, one bound
    /// graphlet for Dot, and the neighbour-selectivity count for Star.
    pub fn estimated_cost(&self, q: &Graph, stats: &GraphStats, mode: MatchMode) -> f64 {
        self.entries
            .iter()
            .map(|e| {
                let r = q.graphlet(e.vertex).expect("plan vertex in range");
                match e.mark {
                    Mark::Top => stats.selectivity_node(&r, mode) as f64,
                    Mark::Dot => 1.0,
                    Mark::Star => stats.selectivity_neighbor(&r) as f64,
                }
            })
            .product()
    }

    /// One `name Mark` line per entry.
    pub fn describe(&self, q: &Graph) -> String {
        self.entries
            .iter()
            .map(|e| format!("{} {}\n", q.name(e.vertex), e.mark))
            .collect()
    }
}

/// Orders the graphlets of `cover`: start from the most node-selective
/// graphlet, then repeatedly append the best neighbour of a placed hub
/// (Dot), else the best hub sharing a neighbour with a placed hub (Star),
/// else start a new component (Top). Ties go to the smaller id.
pub fn order_graphlets(q: &Graph, cover: &[Vertex], stats: &GraphStats, mode: MatchMode) -> Result<QueryPlan> {
    let cover = check_cover(q, cover)?;
    let graphlets: Vec<Graphlet> = cover.iter().map(|&v| q.graphlet(v)).collect::<Result<_>>()?;
    let node: Vec<usize> = graphlets.iter().map(|r| stats.selectivity_node(r, mode)).collect();
    let structural: Vec<usize> = graphlets.iter().map(|r| stats.selectivity_structural(r)).collect();
    let neighbor: Vec<usize> = graphlets.iter().map(|r| stats.selectivity_neighbor(r)).collect();

    let mut placed = vec![false; cover.len()];
    let mut entries: Vec<PlanEntry> = Vec::with_capacity(cover.len());
    while entries.len() < cover.len() {
        let marks: Vec<Option<Mark>> = (0..cover.len())
            .map(|i| (!placed[i]).then(|| relation(q, &entries, cover[i])))
            .collect();
        let pick = |want: Mark, key: &dyn Fn(usize) -> (usize, usize)| {
            (0..cover.len()).filter(|&i| marks[i] == Some(want)).min_by_key(|&i| key(i))
        };
        let chosen = if entries.is_empty() {
            None
        } else {
            pick(Mark::Dot, &|i| (node[i], structural[i]))
                .map(|i| (i, Mark::Dot))
                .or_else(|| pick(Mark::Star, &|i| (neighbor[i], structural[i])).map(|i| (i, Mark::Star)))
        };
        let (i, mark) = chosen.unwrap_or_else(|| {
            let i = (0..cover.len())
                .filter(|&i| !placed[i])
                .min_by_key(|&i| (node[i], structural[i]))
                .expect("an unplaced graphlet remains");
            (i, Mark::Top)
        });
        placed[i] = true;
        entries.push(PlanEntry { vertex: cover[i], mark });
    }
    Ok(QueryPlan { entries, cover })
}

/// Cheapest plan over the minimum hub covers of `q`. All of them are tried
/// when `q` is small enough for enumeration; otherwise the cover found by the
/// exact solver is used.
pub fn choose_plan(q: &Graph, stats: &GraphStats, mode: MatchMode) -> Result<QueryPlan> {
    let covers = if q.n() <= ORACLE_LIMIT {
        brute_force_all_mhc(q)?
    } else {
        let cfg = SolverConfig::default().with_time_limit(10.0);
        vec![solve_exact(&build_ip(q), &cfg)?.cover]
    };
    let mut best: Option<(f64, QueryPlan)> = None;
    for c in covers {
        let plan = order_graphlets(q, &c, stats, mode)?;
        let cost = plan.estimated_cost(q, stats, mode);
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, plan));
        }
    }
    Ok(best.expect("at least one minimum hub cover").1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{q1, u};

    fn marks(p: &QueryPlan) -> Vec<(Vertex, Mark)> {
        p.entries.iter().map(|e| (e.vertex, e.mark)).collect()
    }

    #[test]
    fn node_selectivity_on_q1() {
        let g = q1();
        let stats = GraphStats::new(&g);
        let r5 = g.graphlet(u(5)).unwrap();
        // u5 is the only vertex of degree 4; u2 and u3 have degree 3
        assert_eq!(stats.selectivity_node(&r5, MatchMode::Structural), 1);
        let empty = Graph::empty(1).graphlet(0).unwrap();
        assert_eq!(stats.selectivity_node(&empty, MatchMode::Structural), 6);
        assert_eq!(stats.selectivity_neighbor(&empty), 6);
        for r in g.graphlets() {
            assert!(stats.selectivity_neighbor(&r) >= stats.selectivity_structural(&r));
        }
    }

    #[test]
    fn q1_plans() {
        let g = q1();
        let stats = GraphStats::new(&g);
        let p = order_graphlets(&g, &[u(4), u(5)], &stats, MatchMode::Structural).unwrap();
        assert_eq!(marks(&p), vec![(u(5), Mark::Top), (u(4), Mark::Star)]);
        let p = order_graphlets(&g, &[u(3), u(5)], &stats, MatchMode::Structural).unwrap();
        assert_eq!(marks(&p), vec![(u(5), Mark::Top), (u(3), Mark::Dot)]);
        let star = Graph::star(3);
        let p = order_graphlets(&star, &[0], &GraphStats::new(&star), MatchMode::Structural).unwrap();
        assert_eq!(marks(&p), vec![(0, Mark::Top)]);
    }

    #[test]
    fn rejects_non_covers() {
        let g = q1();
        let stats = GraphStats::new(&g);
        assert!(matches!(
            order_graphlets(&g, &[u(6)], &stats, MatchMode::Structural),
            Err(Error::NotHubCover)
        ));
    }

    #[test]
    fn disconnected_query_gets_two_tops() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let p = order_graphlets(&g, &[0, 2], &GraphStats::new(&g), MatchMode::Structural).unwrap();
        assert_eq!(marks(&p), vec![(0, Mark::Top), (2, Mark::Top)]);
    }

    #[test]
    fn from_order_marks() {
        let g = q1();
        let p = QueryPlan::from_order(&g, &[u(4), u(5)]).unwrap();
        assert_eq!(marks(&p), vec![(u(4), Mark::Top), (u(5), Mark::Star)]);
        assert_eq!(p.describe(&g), "u4 Top\nu5 Star\n");
    }

    #[test]
    fn chosen_plan_uses_a_minimum_cover() {
        let g = q1();
        let p = choose_plan(&g, &GraphStats::new(&g), MatchMode::Structural).unwrap();
        assert_eq!(p.cover.len(), 2);
        assert!(is_hub_cover(&g, &p.cover));
    }
}
