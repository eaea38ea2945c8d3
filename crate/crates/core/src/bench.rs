//! Batch experiments: run solvers over a corpus, then summarise the records
//! as performance profiles and solve-time histograms.
//!
//! The performance ratio of solver `s` on instance `p` is its objective
//! divided by the smallest objective any solver reached on `p`; instances no
//! solver solved are left out.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{Read, Write};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use serde::{Deserialize, Serialize};

use crate::cover::SolveStatus;
use crate::error::{Error, Result};
use crate::generators::Instance;
use crate::solvers::{solve, Algorithm, SolverConfig};

/// Outcome of one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RunStatus {
    Optimal,
    Feasible,
    TimeLimit,
    Infeasible,
    Error,
}

impl From<SolveStatus> for RunStatus {
    fn from(s: SolveStatus) -> Self {
        match s {
            SolveStatus::Optimal => RunStatus::Optimal,
            SolveStatus::Feasible => RunStatus::Feasible,
            SolveStatus::TimeLimit => RunStatus::TimeLimit,
            SolveStatus::Infeasible => RunStatus::Infeasible,
        }
    }
}

/// One row of `results.csv`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub instance_id: String,
    pub class: String,
    pub n: usize,
    pub params: String,
    pub seed: u64,
    pub solver: String,
    pub status: RunStatus,
    /// Cover size; empty when the run produced no cover.
    pub objective: Option<usize>,
    pub lower_bound: Option<f64>,
    pub time_s: f64,
    pub best_time_s: Option<f64>,
}

/// Name under which the best-found times of LSLP appear in histograms.
pub const LSLP_BEST: &str = "lslp-best";

fn run_one(inst: &Instance, algo: Algorithm, cfg: &SolverConfig) -> RunRecord {
    let mut rec = RunRecord {
        instance_id: inst.id.clone(),
        class: inst.spec.class().to_string(),
        n: inst.spec.n(),
        params: inst.spec.params(),
        seed: inst.seed,
        solver: algo.to_string(),
        status: RunStatus::Error,
        objective: None,
        lower_bound: None,
        time_s: 0.0,
        best_time_s: None,
    };
    let cfg = cfg.clone().with_seed(inst.seed);
    let Ok(g) = inst.generate() else { return rec };
    if let Ok(s) = solve(&g, algo, &cfg) {
        rec.status = s.status.into();
        rec.objective = s.has_incumbent().then_some(s.objective);
        rec.lower_bound = s.lower_bound.is_finite().then_some(s.lower_bound);
        rec.time_s = s.solve_time;
        rec.best_time_s = s.best_time;
    }
    rec
}

/// Runs every (instance, solver) pair on `threads` workers. Each record is
/// appended to `sink` (with a header first) and flushed as soon as it
/// finishes; the returned records are in manifest order, solvers in the order
/// given. Failures are recorded with status `Error`.
pub fn run_corpus(
    instances: &[Instance],
    solvers: &[Algorithm],
    cfg: &SolverConfig,
    threads: usize,
    sink: Option<&mut dyn Write>,
) -> Result<Vec<RunRecord>> {
    if solvers.is_empty() {
        return Err(Error::InvalidParameter("no solvers given".into()));
    }
    cfg.validate()?;
    let jobs: Vec<(usize, usize)> = (0..instances.len())
        .flat_map(|i| (0..solvers.len()).map(move |s| (i, s)))
        .collect();
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<RunRecord>> = vec![None; jobs.len()];
    let mut writer = sink.map(csv::Writer::from_writer);
    let (tx, rx) = mpsc::channel::<(usize, RunRecord)>();
    let threads = threads.clamp(1, jobs.len().max(1));

    let appended: Result<()> = std::thread::scope(|scope| {
        for _ in 0..threads {
            let tx = tx.clone();
            let (next, jobs) = (&next, &jobs);
            scope.spawn(move || loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(i, s)) = jobs.get(k) else { break };
                if tx.send((k, run_one(&instances[i], solvers[s], cfg))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        for (k, rec) in rx {
            if let Some(w) = writer.as_mut() {
                w.serialize(&rec)?;
                w.flush()?;
            }
            slots[k] = Some(rec);
        }
        Ok(())
    });
    appended?;
    Ok(slots.into_iter().map(|r| r.expect("every job reports")).collect())
}

pub fn write_results<W: Write>(records: &[RunRecord], w: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(w);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_results<R: Read>(r: R) -> Result<Vec<RunRecord>> {
    let mut rd = csv::Reader::from_reader(r);
    rd.deserialize().map(|r| r.map_err(Error::from)).collect()
}

/// Ratio of each solver's objective to the best objective among `records`,
/// which should all belong to one instance. Solvers without a cover get no
/// entry; the map is empty when nobody solved the instance.
pub fn performance_ratio(records: &[&RunRecord]) -> BTreeMap<String, f64> {
    let best = records.iter().filter_map(|r| r.objective).min();
    let Some(best) = best else { return BTreeMap::new() };
    records
        .iter()
        .filter_map(|r| {
            let o = r.objective?;
            let ratio = if best == 0 { if o == 0 { 1.0 } else { f64::INFINITY } } else { o as f64 / best as f64 };
            Some((r.solver.clone(), ratio))
        })
        .collect()
}

fn by_instance(records: &[RunRecord]) -> BTreeMap<&str, Vec<&RunRecord>> {
    let mut map: BTreeMap<&str, Vec<&RunRecord>> = BTreeMap::new();
    for r in records {
        map.entry(r.instance_id.as_str()).or_default().push(r);
    }
    map
}

/// One point of a performance profile.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfilePoint {
    pub solver: String,
    pub tau: f64,
    pub fraction: f64,
}

/// For each solver and each distinct ratio value `tau`, the fraction of the
/// solved instances on which the solver's ratio is at most `tau`.
pub fn performance_profile(records: &[RunRecord], solvers: &[String]) -> Vec<ProfilePoint> {
    let ratios: Vec<BTreeMap<String, f64>> = by_instance(records)
        .values()
        .map(|recs| performance_ratio(recs))
        .filter(|r| !r.is_empty())
        .collect();
    if ratios.is_empty() {
        return Vec::new();
    }
    let mut taus: Vec<f64> = ratios.iter().flat_map(|r| r.values().copied()).filter(|t| t.is_finite()).collect();
    taus.sort_by(f64::total_cmp);
    taus.dedup();
    let total = ratios.len() as f64;
    let mut out = Vec::new();
    for s in solvers {
        for &tau in &taus {
            let hits = ratios.iter().filter(|r| r.get(s).is_some_and(|&x| x <= tau)).count();
            out.push(ProfilePoint {
                solver: s.clone(),
                tau,
                fraction: hits as f64 / total,
            });
        }
    }
    out
}

pub fn write_profile<W: Write>(points: &[ProfilePoint], w: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(w);
    for p in points {
        w.serialize(p)?;
    }
    w.flush()?;
    Ok(())
}

/// Fraction of one solver's runs in one time bucket. The last bucket of each
/// solver is open-ended (`upper` is empty).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HistogramBucket {
    pub solver: String,
    pub lower: f64,
    pub upper: Option<f64>,
    pub fraction: f64,
}

/// Buckets run times at `edges` (strictly increasing): bucket `i` holds times
/// in `[edges[i], edges[i+1])`, times below `edges[0]` count in the first
/// bucket and a final bucket collects everything from the last edge on.
/// Failed runs are skipped. LSLP runs are reported a second time under
/// [`LSLP_BEST`] using the time the best cover was found.
pub fn time_histogram(records: &[RunRecord], edges: &[f64]) -> Result<Vec<HistogramBucket>> {
    if edges.is_empty() || edges.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidParameter("bucket edges must be strictly increasing".into()));
    }
    let mut series: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.status != RunStatus::Error) {
        series.entry(r.solver.clone()).or_default().push(r.time_s);
        if r.solver == Algorithm::Lslp.as_str() {
            series
                .entry(LSLP_BEST.to_string())
                .or_default()
                .push(r.best_time_s.unwrap_or(r.time_s));
        }
    }
    let mut out = Vec::new();
    for (solver, times) in series {
        let mut counts = vec![0usize; edges.len()];
        for t in &times {
            let i = edges.partition_point(|e| e <= t).saturating_sub(1);
            counts[i] += 1;
        }
        for (i, c) in counts.into_iter().enumerate() {
            out.push(HistogramBucket {
                solver: solver.clone(),
                lower: edges[i],
                upper: edges.get(i + 1).copied(),
                fraction: c as f64 / times.len() as f64,
            });
        }
    }
    Ok(out)
}

pub fn write_histogram<W: Write>(buckets: &[HistogramBucket], w: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(w);
    for b in buckets {
        w.serialize(b)?;
    }
    w.flush()?;
    Ok(())
}

/// Distinct solver names in first-appearance order.
pub fn solvers_in(records: &[RunRecord]) -> Vec<String> {
    let mut seen = BTreeSet::new();
    records
        .iter()
        .filter(|r| seen.insert(r.solver.clone()))
        .map(|r| r.solver.clone())
        .collect()
}
