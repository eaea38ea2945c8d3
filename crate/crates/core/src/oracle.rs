//! Exhaustive subset-enumeration oracles for tiny graphs.
//!
//! These are deliberately independent of the IP model and the LP/B&B code:
//! coverage sets are rebuilt here from the raw adjacency as bitmasks and every
//! subset is tested in increasing cardinality, lexicographic order.

use web_time::Instant;

use crate::cover::{HubCoverSolution, SolveStatus};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default vertex limit for subset enumeration.
pub const ORACLE_LIMIT: usize = 20;

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit || g.n() > 63 {
        Err(Error::OracleLimit {
            n: g.n(),
            limit: limit.min(63),
        })
    } else {
        Ok(())
    }
}

/// One bitmask per edge: which vertices cover it.
fn edge_masks(g: &Graph, hub: bool) -> Vec<u64> {
    let mut masks: Vec<u64> = g
        .edges()
        .iter()
        .map(|&(s, d)| {
            let mut m = (1u64 << s) | (1u64 << d);
            if hub {
                for c in 0..g.n() {
                    if c != s && c != d && g.has_edge(c, s) && g.has_edge(c, d) {
                        m |= 1u64 << c;
                    }
                }
            }
            m
        })
        .collect();
    masks.sort_unstable();
    masks.dedup();
    masks
}

/// Lexicographic k-combinations of `items`, calling `f` until it returns true.
fn for_each_combination(items: &[Vertex], k: usize, mut f: impl FnMut(&[Vertex]) -> bool) -> bool {
    let n = items.len();
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut chosen: Vec<Vertex> = idx.iter().map(|&i| items[i]).collect();
    loop {
        if f(&chosen) {
            return true;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        i -= 1;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..k {
            chosen[j] = items[idx[j]];
        }
    }
}

fn to_mask(set: &[Vertex]) -> u64 {
    set.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

fn smallest_cover(g: &Graph, hub: bool, limit: usize) -> Result<Vec<Vertex>> {
    check_limit(g, limit)?;
    let masks = edge_masks(g, hub);
    let candidates: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    for k in 0..=candidates.len() {
        let mut found = None;
        for_each_combination(&candidates, k, |set| {
            let m = to_mask(set);
            if masks.iter().all(|&row| row & m != 0) {
                found = Some(set.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(c) = found {
            return Ok(c);
        }
    }
    unreachable!("the set of all non-isolated vertices covers every edge")
}

/// A minimum hub cover by exhaustive search; lexicographically smallest among
/// the minimum-size covers.
pub fn brute_force_mhc(g: &Graph) -> Result<HubCoverSolution> {
    brute_force_mhc_with_limit(g, ORACLE_LIMIT)
}

pub fn brute_force_mhc_with_limit(g: &Graph, limit: usize) -> Result<HubCoverSolution> {
    let start = Instant::now();
    let cover = smallest_cover(g, true, limit)?;
    let k = cover.len() as f64;
    Ok(HubCoverSolution::new(
        cover,
        SolveStatus::Optimal,
        k,
        start.elapsed().as_secs_f64(),
    ))
}

/// Every minimum-cardinality hub cover, each sorted, in lexicographic order.
pub fn brute_force_all_mhc(g: &Graph) -> Result<Vec<Vec<Vertex>>> {
    brute_force_all_mhc_with_limit(g, ORACLE_LIMIT)
}

pub fn brute_force_all_mhc_with_limit(g: &Graph, limit: usize) -> Result<Vec<Vec<Vertex>>> {
    let k = smallest_cover(g, true, limit)?.len();
    let masks = edge_masks(g, true);
    let candidates: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let mut all = Vec::new();
    for_each_combination(&candidates, k, |set| {
        let m = to_mask(set);
        if masks.iter().all(|&row| row & m != 0) {
            all.push(set.to_vec());
        }
        false
    });
    Ok(all)
}

/// A minimum vertex cover by exhaustive search, same tie-break as
/// [`brute_force_mhc`].
pub fn brute_force_mvc(g: &Graph) -> Result<Vec<Vertex>> {
    smallest_cover(g, false, ORACLE_LIMIT)
}

pub fn brute_force_mvc_with_limit(g: &Graph, limit: usize) -> Result<Vec<Vertex>> {
    smallest_cover(g, false, limit)
}
