//! Model-based heuristic: the LP relaxation singles out promising columns and
//! the integer program restricted to them is solved exactly.

use crate::cover::{HubCoverSolution, SolveStatus};
use crate::error::Result;
use crate::ip::IpModel;
use crate::lp::{solve_lp_interruptible, LpSolution, LpStatus, LpTolerances};

use super::exact::{disjoint_row_bound, solve_restricted};
use super::greedy::solve_gr1;
use super::{Deadline, MbhParams, RepairMode, SolverConfig};

/// Columns whose reduced cost is at most the threshold, completed so that
/// every row keeps at least one member.
pub fn promising_columns(model: &IpModel<'_>, lp: &LpSolution, params: &MbhParams) -> Vec<bool> {
    let n = model.num_vars();
    let mut keep: Vec<bool> = (0..n)
        .map(|j| lp.reduced_costs[j] <= params.reduced_cost_threshold)
        .collect();
    let rows = model.rows();
    let col_rows = model.column_rows();
    let mut open: Vec<bool> = rows.iter().map(|r| !r.iter().any(|&v| keep[v])).collect();
    while let Some(r) = open.iter().position(|&o| o) {
        let score = |v: usize| -> f64 {
            let uncovered = col_rows[v].iter().filter(|&&i| open[i]);
            match params.repair {
                RepairMode::DualWeighted => uncovered.map(|&i| lp.duals[i]).sum(),
                RepairMode::Coverage => uncovered.count() as f64,
            }
        };
        let v = *rows[r]
            .iter()
            .max_by(|&&a, &&b| score(a).total_cmp(&score(b)).then(b.cmp(&a)))
            .expect("rows are non-empty");
        keep[v] = true;
        for &i in &col_rows[v] {
            open[i] = false;
        }
    }
    keep
}

/// LP relaxation of the full model, or `None` when the deadline passes first.
pub(crate) fn root_lp(model: &IpModel<'_>, deadline: &Deadline) -> Result<Option<LpSolution>> {
    let sol = solve_lp_interruptible(&model.to_lp(None), &LpTolerances::default(), &|| {
        deadline.expired()
    })?;
    Ok(sol.filter(|s| s.status == LpStatus::Optimal))
}

pub(crate) fn lp_ceiling(lp: &LpSolution) -> f64 {
    (lp.objective - 1e-6).ceil().max(0.0)
}

pub fn solve_mbh(model: &IpModel<'_>, cfg: &SolverConfig) -> Result<HubCoverSolution> {
    cfg.validate()?;
    let deadline = Deadline::new(cfg);
    if model.rows().is_empty() {
        return Ok(HubCoverSolution::new(Vec::new(), SolveStatus::Optimal, 0.0, deadline.elapsed()));
    }
    let Some(lp) = root_lp(model, &deadline)? else {
        let fallback = solve_gr1(model.graph());
        let lb = disjoint_row_bound(model, None) as f64;
        return Ok(HubCoverSolution::new(fallback.cover, SolveStatus::TimeLimit, lb, deadline.elapsed()));
    };
    let keep = promising_columns(model, &lp, &cfg.mbh);
    let mut sub = cfg.clone();
    sub.time_limit = deadline.remaining().max(1e-3);
    let r = solve_restricted(model, &sub, Some(&keep))?;
    let bound = lp_ceiling(&lp);
    let status = match r.status {
        SolveStatus::Optimal if r.objective as f64 <= bound => SolveStatus::Optimal,
        SolveStatus::Optimal => SolveStatus::Feasible,
        s => s,
    };
    Ok(HubCoverSolution::new(r.cover, status, bound, deadline.elapsed()))
}
