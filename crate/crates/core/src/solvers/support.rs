//! Set-covering helpers shared by the model-based solvers.

use crate::graph::Vertex;
use crate::ip::IpModel;

/// Row-weighted greedy completion of `start` using only `allowed` columns.
/// Row weights are the number of edges a row represents, so on the
/// unrestricted model this tracks the GR1 rule. Returns `None` when some row
/// has no allowed member.
pub(crate) fn greedy_complete(
    model: &IpModel<'_>,
    col_rows: &[Vec<usize>],
    start: &[Vertex],
    allowed: Option<&[bool]>,
) -> Option<Vec<Vertex>> {
    let rows = model.rows();
    let weight: Vec<usize> = model.row_edges().iter().map(Vec::len).collect();
    let mut covered = vec![false; rows.len()];
    let mut in_cover = vec![false; model.num_vars()];
    let mut cover = Vec::new();
    for &v in start {
        if !in_cover[v] {
            in_cover[v] = true;
            cover.push(v);
            for &r in &col_rows[v] {
                covered[r] = true;
            }
        }
    }
    let ok = |v: Vertex| allowed.is_none_or(|a| a[v]);
    let mut gain: Vec<usize> = (0..model.num_vars())
        .map(|v| col_rows[v].iter().filter(|&&r| !covered[r]).map(|&r| weight[r]).sum())
        .collect();
    let mut open = covered.iter().filter(|c| !**c).count();
    let g = model.graph();
    while open > 0 {
        let v = (0..model.num_vars())
            .filter(|&v| !in_cover[v] && ok(v) && gain[v] > 0)
            .max_by(|&a, &b| {
                gain[a]
                    .cmp(&gain[b])
                    .then(g.degree(a).cmp(&g.degree(b)))
                    .then(b.cmp(&a))
            })?;
        in_cover[v] = true;
        cover.push(v);
        for &r in &col_rows[v] {
            if !covered[r] {
                covered[r] = true;
                open -= 1;
                for &w in &rows[r] {
                    gain[w] -= weight[r];
                }
            }
        }
    }
    Some(cover)
}

/// Drops columns whose rows are all covered by other members. Columns in
/// fewer rows are tried first, ties by larger id.
pub(crate) fn remove_redundant(model: &IpModel<'_>, col_rows: &[Vec<usize>], cover: &mut Vec<Vertex>) {
    let mut count = vec![0usize; model.rows().len()];
    for &v in cover.iter() {
        for &r in &col_rows[v] {
            count[r] += 1;
        }
    }
    let mut order = cover.clone();
    order.sort_unstable_by(|&a, &b| col_rows[a].len().cmp(&col_rows[b].len()).then(b.cmp(&a)));
    let mut drop = vec![false; model.num_vars()];
    for v in order {
        if col_rows[v].iter().all(|&r| count[r] >= 2) {
            drop[v] = true;
            for &r in &col_rows[v] {
                count[r] -= 1;
            }
        }
    }
    cover.retain(|&v| !drop[v]);
    cover.sort_unstable();
}
