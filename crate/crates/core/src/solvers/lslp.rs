//! META-RAPS local search over the LP-selected column pool.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cover::{HubCoverSolution, SolveStatus};
use crate::error::Result;
use crate::generators::rng_from_seed;
use crate::graph::Vertex;
use crate::ip::IpModel;

use super::exact::disjoint_row_bound;
use super::greedy::solve_gr1;
use super::mbh::{lp_ceiling, promising_columns, root_lp};
use super::support::remove_redundant;
use super::{Deadline, LslpParams, SolverConfig};

struct Search<'a, 'g> {
    model: &'a IpModel<'g>,
    col_rows: Vec<Vec<usize>>,
    pool: Vec<Vertex>,
    in_pool: Vec<bool>,
}

impl Search<'_, '_> {
    /// One randomized greedy construction.
    fn construct(&self, params: &LslpParams, rng: &mut ChaCha8Rng) -> Vec<Vertex> {
        let rows = self.model.rows();
        let g = self.model.graph();
        let mut gain: Vec<usize> = (0..self.model.num_vars())
            .map(|v| if self.in_pool[v] { self.col_rows[v].len() } else { 0 })
            .collect();
        let mut covered = vec![false; rows.len()];
        let mut open = rows.len();
        let mut cover = Vec::new();
        let mut cand: Vec<Vertex> = Vec::new();
        while open > 0 {
            cand.clear();
            cand.extend(self.pool.iter().copied().filter(|&v| gain[v] > 0));
            cand.sort_unstable_by(|&a, &b| {
                gain[b]
                    .cmp(&gain[a])
                    .then(g.degree(b).cmp(&g.degree(a)))
                    .then(a.cmp(&b))
            });
            let v = if rng.gen::<f64>() * 100.0 < params.priority_pct {
                cand[0]
            } else {
                let k = ((cand.len() as f64 * params.restriction_pct / 100.0).ceil() as usize)
                    .clamp(1, cand.len());
                cand[rng.gen_range(0..k)]
            };
            cover.push(v);
            for &r in &self.col_rows[v] {
                if !covered[r] {
                    covered[r] = true;
                    open -= 1;
                    for &w in &rows[r] {
                        if self.in_pool[w] {
                            gain[w] -= 1;
                        }
                    }
                }
            }
        }
        cover
    }

    /// Replace one member by a single pool column covering the rows it leaves
    /// open, then drop anything redundant. Plateau moves are accepted.
    fn improve(&self, cover: &mut Vec<Vertex>, iterations: usize, rng: &mut ChaCha8Rng) {
        let rows = self.model.rows();
        for _ in 0..iterations {
            if cover.is_empty() {
                return;
            }
            let mut count = vec![0usize; rows.len()];
            for &v in cover.iter() {
                for &r in &self.col_rows[v] {
                    count[r] += 1;
                }
            }
            let out = rng.gen_range(0..cover.len());
            let removed = cover[out];
            let lost: Vec<usize> = self.col_rows[removed]
                .iter()
                .copied()
                .filter(|&r| count[r] == 1)
                .collect();
            let mut options: Vec<Vertex> = match lost.first() {
                None => Vec::new(),
                Some(&r0) => rows[r0]
                    .iter()
                    .copied()
                    .filter(|&w| w != removed && self.in_pool[w])
                    .filter(|&w| lost.iter().all(|&r| rows[r].binary_search(&w).is_ok()))
                    .collect(),
            };
            if lost.is_empty() {
                cover.swap_remove(out);
                continue;
            }
            options.shuffle(rng);
            let Some(&add) = options.first() else { continue };
            if cover.contains(&add) {
                continue;
            }
            cover[out] = add;
            remove_redundant(self.model, &self.col_rows, cover);
        }
        cover.sort_unstable();
    }
}

pub fn solve_lslp(model: &IpModel<'_>, cfg: &SolverConfig) -> Result<HubCoverSolution> {
    cfg.validate()?;
    let deadline = Deadline::new(cfg);
    if model.rows().is_empty() {
        let mut s = HubCoverSolution::new(Vec::new(), SolveStatus::Optimal, 0.0, deadline.elapsed());
        s.best_time = Some(s.solve_time);
        return Ok(s);
    }
    let Some(lp) = root_lp(model, &deadline)? else {
        let fallback = solve_gr1(model.graph());
        let lb = disjoint_row_bound(model, None) as f64;
        let mut s = HubCoverSolution::new(fallback.cover, SolveStatus::TimeLimit, lb, deadline.elapsed());
        s.best_time = Some(s.solve_time);
        return Ok(s);
    };
    let in_pool = promising_columns(model, &lp, &cfg.mbh);
    let search = Search {
        model,
        col_rows: model.column_rows(),
        pool: (0..model.num_vars()).filter(|&v| in_pool[v]).collect(),
        in_pool,
    };
    let bound = lp_ceiling(&lp);
    let mut rng = rng_from_seed(cfg.seed);
    let mut best: Option<Vec<Vertex>> = None;
    let mut best_time = 0.0;
    let mut timed_out = false;
    for _ in 0..cfg.lslp.total_iterations.max(1) {
        if best.is_some() && deadline.expired() {
            timed_out = true;
            break;
        }
        let mut c = search.construct(&cfg.lslp, &mut rng);
        remove_redundant(model, &search.col_rows, &mut c);
        search.improve(&mut c, cfg.lslp.improvement_iterations, &mut rng);
        if best.as_ref().is_none_or(|b| c.len() < b.len()) {
            best = Some(c);
            best_time = deadline.elapsed();
        }
        if best.as_ref().is_some_and(|b| b.len() as f64 <= bound) {
            break;
        }
    }
    let best = best.expect("at least one construction runs");
    let status = if best.len() as f64 <= bound {
        SolveStatus::Optimal
    } else if timed_out {
        SolveStatus::TimeLimit
    } else {
        SolveStatus::Feasible
    };
    let mut s = HubCoverSolution::new(best, status, bound, deadline.elapsed());
    s.best_time = Some(best_time.min(s.solve_time));
    Ok(s)
}
