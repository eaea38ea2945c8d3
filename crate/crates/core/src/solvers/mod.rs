//! Minimum hub cover solvers: exact branch-and-bound, two greedy heuristics,
//! and the LP-dual based MBH and LSLP heuristics.

mod exact;
mod greedy;
mod lslp;
mod mbh;
mod support;

use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use web_time::{Duration, Instant};

use crate::cover::HubCoverSolution;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ip::build_ip;
use crate::oracle::brute_force_mhc;

pub use exact::{solve_exact, solve_restricted};
pub use greedy::{solve_gr1, solve_gr2};
pub use lslp::solve_lslp;
pub use mbh::{promising_columns, solve_mbh};

/// How MBH completes a column pool that leaves some row uncovered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepairMode {
    /// Add the row member with the largest sum of duals over its rows.
    DualWeighted,
    /// Add the row member appearing in the most still-uncovered rows.
    Coverage,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MbhParams {
    /// Columns with reduced cost at most this value enter the pool.
    pub reduced_cost_threshold: f64,
    pub repair: RepairMode,
}

impl Default for MbhParams {
    fn default() -> Self {
        MbhParams {
            reduced_cost_threshold: 1e-6,
            repair: RepairMode::DualWeighted,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LslpParams {
    pub total_iterations: usize,
    pub improvement_iterations: usize,
    /// Chance (in percent) of taking the best-priority column.
    pub priority_pct: f64,
    /// Size (in percent) of the restricted candidate list.
    pub restriction_pct: f64,
}

impl Default for LslpParams {
    fn default() -> Self {
        LslpParams {
            total_iterations: 200,
            improvement_iterations: 50,
            priority_pct: 80.0,
            restriction_pct: 20.0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Wall-clock limit in seconds.
    pub time_limit: f64,
    pub node_limit: Option<usize>,
    pub mbh: MbhParams,
    pub lslp: LslpParams,
    pub seed: u64,
    /// Checked at every branch-and-bound node and heuristic iteration.
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            time_limit: 60.0,
            node_limit: None,
            mbh: MbhParams::default(),
            lslp: LslpParams::default(),
            seed: 0,
            cancel: None,
        }
    }
}

impl SolverConfig {
    pub fn with_time_limit(mut self, seconds: f64) -> Self {
        self.time_limit = seconds;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.time_limit > 0.0) {
            return Err(Error::InvalidParameter("time limit must be positive".into()));
        }
        for (name, p) in [
            ("priority", self.lslp.priority_pct),
            ("restriction", self.lslp.restriction_pct),
        ] {
            if !(p > 0.0 && p <= 100.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} percentage must lie in (0, 100], got {p}"
                )));
            }
        }
        Ok(())
    }
}

/// Time limit plus cooperative cancellation.
#[derive(Clone, Debug)]
pub(crate) struct Deadline {
    start: Instant,
    limit: Duration,
    cancel: Option<Arc<AtomicBool>>,
}

impl Deadline {
    pub(crate) fn new(cfg: &SolverConfig) -> Self {
        Deadline {
            start: Instant::now(),
            limit: Duration::from_secs_f64(cfg.time_limit.min(1e9)),
            cancel: cfg.cancel.clone(),
        }
    }

    pub(crate) fn elapsed(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }

    pub(crate) fn remaining(&self) -> f64 {
        (self.limit.as_secs_f64() - self.elapsed()).max(0.0)
    }

    pub(crate) fn expired(&self) -> bool {
        self.start.elapsed() >= self.limit
            || self
                .cancel
                .as_ref()
                .is_some_and(|c| c.load(Ordering::Relaxed))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Exact,
    Gr1,
    Gr2,
    Mbh,
    Lslp,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Exact,
        Algorithm::Gr1,
        Algorithm::Gr2,
        Algorithm::Mbh,
        Algorithm::Lslp,
        Algorithm::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Gr1 => "gr1",
            Algorithm::Gr2 => "gr2",
            Algorithm::Mbh => "mbh",
            Algorithm::Lslp => "lslp",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm `{s}`")))
    }
}

/// Runs one algorithm on a graph.
pub fn solve(g: &Graph, algo: Algorithm, cfg: &SolverConfig) -> Result<HubCoverSolution> {
    cfg.validate()?;
    match algo {
        Algorithm::Exact => solve_exact(&build_ip(g), cfg),
        Algorithm::Gr1 => Ok(solve_gr1(g)),
        Algorithm::Gr2 => Ok(solve_gr2(g, cfg.seed)),
        Algorithm::Mbh => solve_mbh(&build_ip(g), cfg),
        Algorithm::Lslp => solve_lslp(&build_ip(g), cfg),
        Algorithm::Oracle => brute_force_mhc(g),
    }
}
