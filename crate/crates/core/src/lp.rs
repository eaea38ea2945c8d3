//! Bounded-variable primal simplex for covering LPs
//! `min cᵀx  s.t.  Σ_{j∈row} x_j ≥ 1,  0 ≤ x ≤ 1`.
//!
//! Fixed variables are eliminated before solving: rows containing a
//! fixed-to-one variable are dropped and fixed-to-zero columns removed. The
//! remaining problem starts from the feasible basis "all structurals at their
//! upper bound, every surplus basic", so no phase one is needed. Pricing is
//! Dantzig's rule until the degenerate-pivot budget is spent, then Bland's
//! rule, which cannot cycle.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Pinned tolerances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LpTolerances {
    pub feasibility: f64,
    pub gap: f64,
    pub complementary_slackness: f64,
    pub pivot: f64,
}

impl Default for LpTolerances {
    fn default() -> Self {
        LpTolerances {
            feasibility: 1e-7,
            gap: 1e-6,
            complementary_slackness: 1e-6,
            pivot: 1e-9,
        }
    }
}

const DUAL_TOL: f64 = 1e-9;
const TIE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fix {
    Zero,
    One,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpProblem {
    pub num_vars: usize,
    /// Per-variable cost.
    pub objective: Vec<f64>,
    /// Each row lists the variables whose sum must be at least one.
    pub rows: Vec<Vec<usize>>,
    /// Optional per-variable fixing.
    pub fixings: Vec<Option<Fix>>,
}

impl LpProblem {
    /// Unit costs and no fixings.
    pub fn covering(num_vars: usize, rows: Vec<Vec<usize>>) -> Self {
        LpProblem {
            num_vars,
            objective: vec![1.0; num_vars],
            rows,
            fixings: vec![None; num_vars],
        }
    }

    pub fn with_fixings(mut self, fixings: Vec<Option<Fix>>) -> Self {
        assert_eq!(fixings.len(), self.num_vars);
        self.fixings = fixings;
        self
    }

    /// Plain-text listing in the usual LP-file layout.
    pub fn to_lp_listing(&self) -> String {
        let mut s = String::from("minimize\n obj:");
        for (j, c) in self.objective.iter().enumerate() {
            let _ = write!(s, " {}{} x{j}", if j == 0 { "" } else { "+ " }, c);
        }
        s.push_str("\nsubject to\n");
        for (i, row) in self.rows.iter().enumerate() {
            let terms: Vec<String> = row.iter().map(|j| format!("x{j}")).collect();
            let _ = writeln!(s, " r{i}: {} >= 1", terms.join(" + "));
        }
        s.push_str("bounds\n");
        for j in 0..self.num_vars {
            let _ = match self.fixings[j] {
                None => writeln!(s, " 0 <= x{j} <= 1"),
                Some(Fix::Zero) => writeln!(s, " x{j} = 0"),
                Some(Fix::One) => writeln!(s, " x{j} = 1"),
            };
        }
        s.push_str("end\n");
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub objective: f64,
    pub primal: Vec<f64>,
    /// One per input row, non-negative.
    pub duals: Vec<f64>,
    /// `c_j − Σ_{rows ∋ j} dual_row`.
    pub reduced_costs: Vec<f64>,
    pub iterations: usize,
}

impl LpSolution {
    fn infeasible(p: &LpProblem) -> Self {
        LpSolution {
            status: LpStatus::Infeasible,
            objective: f64::INFINITY,
            primal: vec![0.0; p.num_vars],
            duals: vec![0.0; p.rows.len()],
            reduced_costs: p.objective.clone(),
            iterations: 0,
        }
    }

    /// `Σ duals − Σ max(0, −reduced cost)` over free columns, plus the cost of
    /// columns fixed to one.
    pub fn dual_objective(&self, p: &LpProblem) -> f64 {
        let mut v: f64 = self.duals.iter().sum();
        for j in 0..p.num_vars {
            match p.fixings[j] {
                Some(Fix::One) => v += self.reduced_costs[j],
                Some(Fix::Zero) => {}
                None => v -= (-self.reduced_costs[j]).max(0.0),
            }
        }
        v
    }
}

pub fn solve_lp(p: &LpProblem) -> Result<LpSolution> {
    solve_lp_with(p, &LpTolerances::default())
}

pub fn solve_lp_with(p: &LpProblem, tol: &LpTolerances) -> Result<LpSolution> {
    solve_lp_interruptible(p, tol, &|| false).map(|s| s.expect("never interrupted"))
}

/// Like [`solve_lp_with`], but polls `stop` before every pivot and returns
/// `Ok(None)` once it fires.
pub fn solve_lp_interruptible(
    p: &LpProblem,
    tol: &LpTolerances,
    stop: &dyn Fn() -> bool,
) -> Result<Option<LpSolution>> {
    if p.objective.len() != p.num_vars || p.fixings.len() != p.num_vars {
        return Err(Error::InvalidParameter("objective/fixings length mismatch".into()));
    }
    if let Some(&j) = p.rows.iter().flatten().find(|&&j| j >= p.num_vars) {
        return Err(Error::InvalidParameter(format!("row references variable {j}")));
    }

    // eliminate fixed variables
    let mut col_of = vec![usize::MAX; p.num_vars];
    let mut cols = Vec::new();
    let mut constant = 0.0;
    for j in 0..p.num_vars {
        match p.fixings[j] {
            None => {
                col_of[j] = cols.len();
                cols.push(j);
            }
            Some(Fix::One) => constant += p.objective[j],
            Some(Fix::Zero) => {}
        }
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut row_origin = Vec::new();
    for (i, row) in p.rows.iter().enumerate() {
        if row.iter().any(|&j| p.fixings[j] == Some(Fix::One)) {
            continue;
        }
        let mut r: Vec<usize> = row
            .iter()
            .filter(|&&j| p.fixings[j].is_none())
            .map(|&j| col_of[j])
            .collect();
        if r.is_empty() {
            return Ok(Some(LpSolution::infeasible(p)));
        }
        r.sort_unstable();
        r.dedup();
        rows.push(r);
        row_origin.push(i);
    }
    let costs: Vec<f64> = cols.iter().map(|&j| p.objective[j]).collect();

    let mut tableau = Tableau::new(&costs, &rows);
    let Some(iterations) = tableau.run(tol, stop)? else {
        return Ok(None);
    };

    let x_reduced = tableau.structural_values();
    let mut primal = vec![0.0; p.num_vars];
    for j in 0..p.num_vars {
        primal[j] = match p.fixings[j] {
            Some(Fix::One) => 1.0,
            Some(Fix::Zero) => 0.0,
            None => x_reduced[col_of[j]].clamp(0.0, 1.0),
        };
    }
    let mut duals = vec![0.0; p.rows.len()];
    for (k, &i) in row_origin.iter().enumerate() {
        duals[i] = tableau.surplus_reduced_cost(k).max(0.0);
    }
    let mut reduced_costs = p.objective.clone();
    for (i, row) in p.rows.iter().enumerate() {
        for &j in row {
            reduced_costs[j] -= duals[i];
        }
    }
    let objective = constant + costs.iter().zip(&x_reduced).map(|(c, x)| c * x.clamp(0.0, 1.0)).sum::<f64>();

    let sol = LpSolution {
        status: LpStatus::Optimal,
        objective,
        primal,
        duals,
        reduced_costs,
        iterations,
    };
    check_certificate(p, &sol, tol)?;
    Ok(Some(sol))
}

fn check_certificate(p: &LpProblem, s: &LpSolution, tol: &LpTolerances) -> Result<()> {
    for (i, row) in p.rows.iter().enumerate() {
        let act: f64 = row.iter().map(|&j| s.primal[j]).sum();
        if act < 1.0 - tol.feasibility {
            return Err(Error::Numerical(format!("row {i} activity {act} below 1")));
        }
        if s.duals[i] > tol.complementary_slackness && act > 1.0 + tol.complementary_slackness {
            return Err(Error::Numerical(format!(
                "row {i} has dual {} but slack {}",
                s.duals[i],
                act - 1.0
            )));
        }
    }
    let gap = (s.objective - s.dual_objective(p)).abs();
    if gap > tol.gap {
        return Err(Error::Numerical(format!("duality gap {gap}")));
    }
    Ok(())
}

/// Dense tableau `B⁻¹[A −I]` with the reduced-cost row.
struct Tableau {
    m: usize,
    n: usize,
    width: usize,
    t: Vec<f64>,
    d: Vec<f64>,
    beta: Vec<f64>,
    basis: Vec<usize>,
    /// For nonbasic columns: sitting at the upper bound?
    at_upper: Vec<bool>,
    is_basic: Vec<bool>,
}

impl Tableau {
    fn new(costs: &[f64], rows: &[Vec<usize>]) -> Self {
        let m = rows.len();
        let n = costs.len();
        let width = n + m;
        let mut t = vec![0.0; m * width];
        let mut beta = vec![0.0; m];
        for (i, row) in rows.iter().enumerate() {
            for &j in row {
                t[i * width + j] = -1.0;
            }
            t[i * width + n + i] = 1.0;
            beta[i] = row.len() as f64 - 1.0;
        }
        let mut d = vec![0.0; width];
        d[..n].copy_from_slice(costs);
        let mut at_upper = vec![false; width];
        at_upper[..n].iter_mut().for_each(|u| *u = true);
        let mut is_basic = vec![false; width];
        is_basic[n..].iter_mut().for_each(|b| *b = true);
        Tableau {
            m,
            n,
            width,
            t,
            d,
            beta,
            basis: (n..n + m).collect(),
            at_upper,
            is_basic,
        }
    }

    fn upper(&self, j: usize) -> f64 {
        if j < self.n {
            1.0
        } else {
            f64::INFINITY
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.t[i * self.width + j]
    }

    fn entering(&self, bland: bool) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for j in 0..self.width {
            if self.is_basic[j] {
                continue;
            }
            let dj = self.d[j];
            let improving = if self.at_upper[j] { dj > DUAL_TOL } else { dj < -DUAL_TOL };
            if !improving {
                continue;
            }
            if bland {
                return Some(j);
            }
            if best.is_none_or(|(_, v)| dj.abs() > v) {
                best = Some((j, dj.abs()));
            }
        }
        best.map(|(j, _)| j)
    }

    fn run(&mut self, tol: &LpTolerances, stop: &dyn Fn() -> bool) -> Result<Option<usize>> {
        let budget = 5 * self.m.max(1);
        let max_iter = 50 * (self.width + 10);
        let mut degenerate = 0usize;
        let mut bland = false;
        for iter in 0..max_iter {
            if stop() {
                return Ok(None);
            }
            let Some(q) = self.entering(bland) else {
                return Ok(Some(iter));
            };
            let dir = if self.at_upper[q] { -1.0 } else { 1.0 };
            // ratio test
            let mut step = self.upper(q);
            let mut leave: Option<usize> = None;
            let mut leave_alpha = 0.0;
            for i in 0..self.m {
                let alpha = dir * self.at(i, q);
                let b = self.basis[i];
                let limit = if alpha > tol.pivot {
                    self.beta[i].max(0.0) / alpha
                } else if alpha < -tol.pivot {
                    let u = self.upper(b);
                    if u.is_infinite() {
                        continue;
                    }
                    (u - self.beta[i]).max(0.0) / -alpha
                } else {
                    continue;
                };
                if limit < step - TIE {
                    step = limit;
                    leave = Some(i);
                    leave_alpha = alpha.abs();
                } else if limit <= step + TIE {
                    // ties with a bound flip keep the flip
                    if let Some(r) = leave {
                        let wins = if bland {
                            b < self.basis[r]
                        } else {
                            alpha.abs() > leave_alpha
                        };
                        if wins {
                            step = step.min(limit);
                            leave = Some(i);
                            leave_alpha = alpha.abs();
                        }
                    }
                }
            }
            if step.is_infinite() {
                return Err(Error::Numerical("unbounded direction in covering LP".into()));
            }
            if step <= 1e-12 {
                degenerate += 1;
                if degenerate > budget {
                    bland = true;
                }
            }
            for i in 0..self.m {
                let a = self.at(i, q);
                if a != 0.0 {
                    self.beta[i] -= dir * step * a;
                }
            }
            match leave {
                None => {
                    // bound flip
                    self.at_upper[q] = !self.at_upper[q];
                }
                Some(r) => {
                    let entering_value = if self.at_upper[q] {
                        self.upper(q) - step
                    } else {
                        step
                    };
                    let out = self.basis[r];
                    let alpha = dir * self.at(r, q);
                    self.is_basic[out] = false;
                    self.at_upper[out] = alpha < 0.0;
                    self.is_basic[q] = true;
                    self.at_upper[q] = false;
                    self.basis[r] = q;
                    self.beta[r] = entering_value;
                    self.pivot(r, q);
                }
            }
        }
        Err(Error::Numerical(format!(
            "no convergence after {max_iter} iterations"
        )))
    }

    fn pivot(&mut self, r: usize, q: usize) {
        let w = self.width;
        let p = self.t[r * w + q];
        {
            let row = &mut self.t[r * w..(r + 1) * w];
            for v in row.iter_mut() {
                *v /= p;
            }
            row[q] = 1.0;
        }
        let pivot_row: Vec<f64> = self.t[r * w..(r + 1) * w].to_vec();
        let nz: Vec<usize> = (0..w).filter(|&j| pivot_row[j] != 0.0).collect();
        for i in 0..self.m {
            if i == r {
                continue;
            }
            let f = self.t[i * w + q];
            if f == 0.0 {
                continue;
            }
            let row = &mut self.t[i * w..(i + 1) * w];
            for &j in &nz {
                row[j] -= f * pivot_row[j];
            }
            row[q] = 0.0;
        }
        let f = self.d[q];
        if f != 0.0 {
            for &j in &nz {
                self.d[j] -= f * pivot_row[j];
            }
            self.d[q] = 0.0;
        }
    }

    fn structural_values(&self) -> Vec<f64> {
        let mut x: Vec<f64> = (0..self.n)
            .map(|j| if self.at_upper[j] { 1.0 } else { 0.0 })
            .collect();
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                x[b] = self.beta[i];
            }
        }
        x
    }

    fn surplus_reduced_cost(&self, row: usize) -> f64 {
        self.d[self.n + row]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_invariants(p: &LpProblem, s: &LpSolution) {
        let tol = LpTolerances::default();
        assert!(s.duals.iter().all(|&y| y >= 0.0));
        for j in 0..p.num_vars {
            let sum: f64 = p
                .rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.contains(&j))
                .map(|(i, _)| s.duals[i])
                .sum();
            assert!((s.reduced_costs[j] - (p.objective[j] - sum)).abs() < 1e-12);
        }
        assert!((s.objective - s.dual_objective(p)).abs() <= tol.gap);
        for x in &s.primal {
            assert!((-1e-12..=1.0 + 1e-12).contains(x));
        }
    }

    #[test]
    fn single_row() {
        let p = LpProblem::covering(2, vec![vec![0, 1]]);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert!((s.objective - 1.0).abs() < 1e-9);
        assert!((s.primal[0] + s.primal[1] - 1.0).abs() < 1e-9);
        check_invariants(&p, &s);
    }

    #[test]
    fn no_rows() {
        let p = LpProblem::covering(3, vec![]);
        let s = solve_lp(&p).unwrap();
        assert_eq!(s.objective, 0.0);
        assert_eq!(s.primal, vec![0.0; 3]);
    }

    #[test]
    fn odd_cycle_is_half_integral() {
        // C5 vertex-cover LP: optimum 2.5 at x = 1/2.
        let rows = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
        let p = LpProblem::covering(5, rows);
        let s = solve_lp(&p).unwrap();
        assert!((s.objective - 2.5).abs() < 1e-9, "{}", s.objective);
        check_invariants(&p, &s);
    }

    #[test]
    fn fixings_are_respected() {
        let p = LpProblem::covering(3, vec![vec![0, 1], vec![1, 2]])
            .with_fixings(vec![Some(Fix::Zero), None, Some(Fix::Zero)]);
        let s = solve_lp(&p).unwrap();
        assert!((s.objective - 1.0).abs() < 1e-9);
        assert_eq!(s.primal[1], 1.0);
        check_invariants(&p, &s);

        let p = LpProblem::covering(3, vec![vec![0, 1], vec![1, 2]])
            .with_fixings(vec![Some(Fix::One), Some(Fix::Zero), None]);
        let s = solve_lp(&p).unwrap();
        assert!((s.objective - 2.0).abs() < 1e-9);
        check_invariants(&p, &s);

        let p = LpProblem::covering(2, vec![vec![0, 1]])
            .with_fixings(vec![Some(Fix::Zero), Some(Fix::Zero)]);
        assert_eq!(solve_lp(&p).unwrap().status, LpStatus::Infeasible);
    }

    #[test]
    fn weighted_costs() {
        let mut p = LpProblem::covering(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        p.objective = vec![1.0, 3.0, 1.0];
        let s = solve_lp(&p).unwrap();
        // x0 = x2 = 1 costs 2; fractional x = 1/2 costs 2.5.
        assert!((s.objective - 2.0).abs() < 1e-9);
        check_invariants(&p, &s);
    }

    #[test]
    fn listing_mentions_rows_and_bounds() {
        let p = LpProblem::covering(2, vec![vec![0, 1]]).with_fixings(vec![Some(Fix::One), None]);
        let text = p.to_lp_listing();
        assert!(text.contains("r0: x0 + x1 >= 1"));
        assert!(text.contains("x0 = 1"));
        assert!(text.contains("0 <= x1 <= 1"));
    }

    #[test]
    fn deterministic() {
        let rows: Vec<Vec<usize>> = (0..12).map(|i| vec![i, (i + 1) % 12, (i + 5) % 12]).collect();
        let p = LpProblem::covering(12, rows);
        let a = solve_lp(&p).unwrap();
        let b = solve_lp(&p).unwrap();
        assert_eq!(a, b);
        check_invariants(&p, &a);
    }
}
