//! LP-based branch-and-bound.
//!
//! Nodes are explored depth-first. Each child's relaxation is solved when the
//! child is created, so the two children of a node can be pushed with the
//! weaker bound underneath and the better bound explored first. Branching is
//! on the most fractional variable. Before every relaxation, rows with a
//! single free member force that member to one.

use crate::cover::{HubCoverSolution, SolveStatus};
use crate::error::Result;
use crate::graph::Vertex;
use crate::ip::IpModel;
use crate::lp::{solve_lp_interruptible, Fix, LpSolution, LpStatus, LpTolerances};

use super::greedy::solve_gr1;
use super::support::{greedy_complete, remove_redundant};
use super::{Deadline, SolverConfig};

const INT_TOL: f64 = 1e-6;

fn ceil_bound(b: f64) -> usize {
    (b - INT_TOL).ceil().max(0.0) as usize
}

struct Node {
    fixings: Vec<Option<Fix>>,
    lp: LpSolution,
}

enum Outcome {
    Node(Node),
    Infeasible,
    Interrupted,
}

/// Unit propagation: a row whose only non-zero member is free forces it to
/// one. Returns false if some row has every member fixed to zero.
fn propagate(rows: &[Vec<Vertex>], fixings: &mut [Option<Fix>]) -> bool {
    loop {
        let mut changed = false;
        for row in rows {
            if row.iter().any(|&v| fixings[v] == Some(Fix::One)) {
                continue;
            }
            let mut free = row.iter().filter(|&&v| fixings[v].is_none());
            match (free.next(), free.next()) {
                (None, _) => return false,
                (Some(&v), None) => {
                    fixings[v] = Some(Fix::One);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn make_node(model: &IpModel<'_>, mut fixings: Vec<Option<Fix>>, deadline: &Deadline) -> Result<Outcome> {
    if !propagate(model.rows(), &mut fixings) {
        return Ok(Outcome::Infeasible);
    }
    let lp = model.to_lp(Some(fixings.clone()));
    match solve_lp_interruptible(&lp, &LpTolerances::default(), &|| deadline.expired())? {
        None => Ok(Outcome::Interrupted),
        Some(sol) if sol.status == LpStatus::Infeasible => Ok(Outcome::Infeasible),
        Some(sol) => Ok(Outcome::Node(Node { fixings, lp: sol })),
    }
}

/// Size of a greedily built family of pairwise disjoint rows; each needs its
/// own cover vertex.
pub(crate) fn disjoint_row_bound(model: &IpModel<'_>, allowed: Option<&[bool]>) -> usize {
    let mut used = vec![false; model.num_vars()];
    let mut rows: Vec<&Vec<Vertex>> = model.rows().iter().collect();
    rows.sort_by_key(|r| r.len());
    let mut k = 0;
    for r in rows {
        let members = r.iter().filter(|&&v| allowed.is_none_or(|a| a[v]));
        let members: Vec<Vertex> = members.copied().collect();
        if members.iter().all(|&v| !used[v]) {
            members.iter().for_each(|&v| used[v] = true);
            k += 1;
        }
    }
    k
}

/// Exact minimum hub cover of the model.
pub fn solve_exact(model: &IpModel<'_>, cfg: &SolverConfig) -> Result<HubCoverSolution> {
    solve_restricted(model, cfg, None)
}

/// Exact optimum over the columns marked in `allowed` (all columns when
/// `None`). A restriction that leaves some row without members yields status
/// `Infeasible`.
pub fn solve_restricted(
    model: &IpModel<'_>,
    cfg: &SolverConfig,
    allowed: Option<&[bool]>,
) -> Result<HubCoverSolution> {
    cfg.validate()?;
    let deadline = Deadline::new(cfg);
    let n = model.num_vars();
    let col_rows = model.column_rows();

    let finish = |cover: Vec<Vertex>, status, lb: f64| {
        HubCoverSolution::new(cover, status, lb, deadline.elapsed())
    };

    if model.rows().is_empty() {
        return Ok(finish(Vec::new(), SolveStatus::Optimal, 0.0));
    }

    let start = match allowed {
        None => Some(solve_gr1(model.graph()).cover),
        Some(a) => greedy_complete(model, &col_rows, &[], Some(a)),
    };
    let Some(mut best) = start else {
        return Ok(finish(Vec::new(), SolveStatus::Infeasible, f64::INFINITY));
    };
    remove_redundant(model, &col_rows, &mut best);
    let trivial = disjoint_row_bound(model, allowed) as f64;

    let mut root_fix = vec![None; n];
    if let Some(a) = allowed {
        for v in 0..n {
            if !a[v] {
                root_fix[v] = Some(Fix::Zero);
            }
        }
    }
    let root = match make_node(model, root_fix, &deadline)? {
        Outcome::Node(node) => node,
        Outcome::Infeasible => return Ok(finish(Vec::new(), SolveStatus::Infeasible, f64::INFINITY)),
        Outcome::Interrupted => return Ok(finish(best, SolveStatus::TimeLimit, trivial)),
    };
    let root_bound = root.lp.objective.max(trivial);

    let mut stack = vec![root];
    let mut nodes = 0usize;
    let mut interrupted = false;
    while let Some(node) = stack.pop() {
        if deadline.expired() || cfg.node_limit.is_some_and(|l| nodes >= l) {
            stack.push(node);
            interrupted = true;
            break;
        }
        nodes += 1;
        if ceil_bound(node.lp.objective) >= best.len() {
            continue;
        }
        let x = &node.lp.primal;

        // rounding: keep the (near) ones and complete greedily
        let base: Vec<Vertex> = (0..n).filter(|&j| x[j] >= 1.0 - INT_TOL).collect();
        let usable: Vec<bool> = node.fixings.iter().map(|f| *f != Some(Fix::Zero)).collect();
        if let Some(mut c) = greedy_complete(model, &col_rows, &base, Some(&usable)) {
            remove_redundant(model, &col_rows, &mut c);
            if c.len() < best.len() {
                best = c;
            }
        }
        if ceil_bound(node.lp.objective) >= best.len() {
            continue;
        }

        let branch = (0..n)
            .filter(|&j| node.fixings[j].is_none() && x[j] > INT_TOL && x[j] < 1.0 - INT_TOL)
            .min_by(|&a, &b| {
                (x[a] - 0.5)
                    .abs()
                    .partial_cmp(&(x[b] - 0.5).abs())
                    .unwrap()
                    .then(a.cmp(&b))
            });
        let Some(j) = branch else {
            // integral relaxation
            let c: Vec<Vertex> = (0..n).filter(|&v| x[v] > 0.5).collect();
            if c.len() < best.len() {
                best = c;
            }
            continue;
        };

        let mut children = Vec::with_capacity(2);
        for fix in [Fix::One, Fix::Zero] {
            let mut f = node.fixings.clone();
            f[j] = Some(fix);
            match make_node(model, f, &deadline)? {
                Outcome::Node(child) => children.push(child),
                Outcome::Infeasible => {}
                Outcome::Interrupted => {
                    interrupted = true;
                }
            }
        }
        if interrupted {
            stack.push(node);
            break;
        }
        // better bound on top; on ties the fix-to-one child goes first
        children.sort_by(|a, b| b.lp.objective.partial_cmp(&a.lp.objective).unwrap());
        if children.len() == 2
            && (children[0].lp.objective - children[1].lp.objective).abs() <= INT_TOL
            && children[1].fixings[j] == Some(Fix::Zero)
        {
            children.swap(0, 1);
        }
        for c in children {
            if ceil_bound(c.lp.objective) < best.len() {
                stack.push(c);
            }
        }
    }

    best.sort_unstable();
    if interrupted {
        let open = stack
            .iter()
            .map(|nd| nd.lp.objective)
            .fold(f64::INFINITY, f64::min)
            .max(root_bound.min(best.len() as f64));
        let lb = (ceil_bound(open.min(best.len() as f64)) as f64).max(trivial);
        let lb = lb.min(best.len() as f64);
        let status = if ceil_bound(lb) >= best.len() {
            SolveStatus::Optimal
        } else {
            SolveStatus::TimeLimit
        };
        Ok(finish(best, status, lb))
    } else {
        let k = best.len() as f64;
        Ok(finish(best, SolveStatus::Optimal, k))
    }
}
