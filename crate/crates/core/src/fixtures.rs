//! Small named graphs used throughout tests, docs and the demo page.

use crate::graph::{Graph, Vertex};

/// Internal id of the query vertex named `u<k>` in [`q1`].
pub const fn u(k: usize) -> Vertex {
    k - 1
}

/// Six-vertex query graph with edges u1u2, u1u5, u2u3, u2u5, u3u4, u3u5,
/// u5u6. Two triangles meet at u2u5 and u3u5; u4 and u6 are leaves.
pub fn q1() -> Graph {
    let edges = [(1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (5, 6)];
    Graph::new(6, edges.iter().map(|&(a, b)| (u(a), u(b))))
        .and_then(|g| g.with_names((1..=6).map(|k| format!("u{k}"))))
        .expect("q1 is a valid graph")
}

/// The 3×3 grid with row-major ids.
pub fn grid3x3() -> Graph {
    let mut edges = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            let v = r * 3 + c;
            if c + 1 < 3 {
                edges.push((v, v + 1));
            }
            if r + 1 < 3 {
                edges.push((v, v + 3));
            }
        }
    }
    Graph::new(9, edges).expect("grid is simple")
}
