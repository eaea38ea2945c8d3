use std::collections::BTreeSet;

use crate::cover::is_hub_cover;
use crate::error::{Error, Result};
use crate::graph::{Graph, Graphlet, Vertex};

use super::index::{HashIndex, SetIndex};
use super::plan::{Mark, QueryPlan};
use super::{MatchMode, Substitution, VertexMap};

/// Every extension of `theta` that maps the hub of `rq` onto the hub of `rd`
/// and the neighbours of `rq` injectively onto neighbours of `rd`, with each
/// cross edge of `rq` landing on a cross edge of `rd`.
pub fn graphlet_matches(rq: &Graphlet, rd: &Graphlet, theta: &Substitution, mode: MatchMode) -> Vec<Substitution> {
    if rd.degree() < rq.degree() || rd.cross_edges.len() < rq.cross_edges.len() {
        return Vec::new();
    }
    let mut start = theta.clone();
    if !start.bind(rq.hub, rd.hub, rq.label.as_deref(), rd.label.as_deref(), mode) {
        return Vec::new();
    }
    // already-bound neighbours first: they cannot branch
    let mut order: Vec<Vertex> = rq.neighbors.clone();
    order.sort_by_key(|&u| theta.get(u).is_none());

    fn extend(
        rq: &Graphlet,
        rd: &Graphlet,
        order: &[Vertex],
        k: usize,
        sub: Substitution,
        mode: MatchMode,
        out: &mut Vec<Substitution>,
    ) {
        let Some(&u) = order.get(k) else {
            out.push(sub);
            return;
        };
        let edges_ok = |s: &Substitution, x: Vertex| {
            order[..k]
                .iter()
                .filter(|&&w| rq.has_cross_edge(u, w))
                .all(|&w| rd.has_cross_edge(x, s.get(w).expect("placed earlier")))
        };
        let ql = rq.neighbor_label(u);
        match sub.get(u) {
            Some(x) => {
                if rd.has_neighbor(x) && edges_ok(&sub, x) {
                    extend(rq, rd, order, k + 1, sub, mode, out);
                }
            }
            None => {
                for &x in &rd.neighbors {
                    let mut next = sub.clone();
                    if next.bind(u, x, ql, rd.neighbor_label(x), mode) && edges_ok(&next, x) {
                        extend(rq, rd, order, k + 1, next, mode, out);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    extend(rq, rd, &order, 0, start, mode, &mut out);
    out
}

struct Search<'a> {
    q: &'a Graph,
    d: &'a Graph,
    plan: &'a QueryPlan,
    query: Vec<Graphlet>,
    hash: &'a HashIndex,
    set: &'a SetIndex,
    mode: MatchMode,
}

impl Search<'_> {
    fn candidates(&self, i: usize, theta: &Substitution) -> Vec<&Graphlet> {
        let rv = &self.query[i];
        let scan = || {
            self.hash
                .all()
                .iter()
                .filter(|rx| rx.degree() >= rv.degree() && rx.cross_edges.len() >= rv.cross_edges.len())
                .collect()
        };
        match self.plan.entries[i].mark {
            Mark::Dot => match theta.get(rv.hub) {
                Some(x) => self.hash.get(x).into_iter().collect(),
                None => scan(),
            },
            Mark::Star => {
                let mapped: Vec<Vertex> = rv.neighbors.iter().filter_map(|&u| theta.get(u)).collect();
                if mapped.is_empty() {
                    return scan();
                }
                self.set
                    .query(&mapped, rv.degree())
                    .into_iter()
                    .filter_map(|y| self.hash.get(y))
                    .collect()
            }
            Mark::Top => scan(),
        }
    }

    fn run(&self, i: usize, theta: Substitution, out: &mut BTreeSet<VertexMap>) {
        if i == self.query.len() {
            self.finish(0, theta, out);
            return;
        }
        for rx in self.candidates(i, &theta) {
            for next in graphlet_matches(&self.query[i], rx, &theta, self.mode) {
                self.run(i + 1, next, out);
            }
        }
    }

    /// Binds the query vertices no hub reached (isolated ones) to every
    /// remaining compatible data vertex.
    fn finish(&self, v: Vertex, theta: Substitution, out: &mut BTreeSet<VertexMap>) {
        if v == self.q.n() {
            out.insert(theta.to_map().expect("all bound"));
            return;
        }
        if theta.get(v).is_some() {
            self.finish(v + 1, theta, out);
            return;
        }
        debug_assert_eq!(self.q.degree(v), 0);
        for x in 0..self.d.n() {
            let mut next = theta.clone();
            if next.bind(v, x, self.q.label(v), self.d.label(x), self.mode) {
                self.finish(v + 1, next, out);
            }
        }
    }
}

/// Expands `plan` depth-first against `d` and returns every match of `q`.
pub fn find_solutions(
    plan: &QueryPlan,
    q: &Graph,
    d: &Graph,
    hash: &HashIndex,
    set: &SetIndex,
    mode: MatchMode,
) -> Result<BTreeSet<VertexMap>> {
    let query = plan
        .entries
        .iter()
        .map(|e| q.graphlet(e.vertex))
        .collect::<Result<Vec<_>>>()?;
    let hubs: Vec<Vertex> = plan.entries.iter().map(|e| e.vertex).collect();
    if !is_hub_cover(q, &hubs) {
        return Err(Error::NotHubCover);
    }
    let s = Search {
        q,
        d,
        plan,
        query,
        hash,
        set,
        mode,
    };
    let mut out = BTreeSet::new();
    s.run(0, Substitution::new(q.n()), &mut out);
    Ok(out)
}
