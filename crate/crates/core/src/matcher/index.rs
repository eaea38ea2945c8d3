use crate::graph::{Graph, Graphlet, Vertex};

/// Vertex id to graphlet.
#[derive(Clone, Debug)]
pub struct HashIndex {
    graphlets: Vec<Graphlet>,
}

impl HashIndex {
    pub fn get(&self, v: Vertex) -> Option<&Graphlet> {
        self.graphlets.get(v)
    }

    pub fn all(&self) -> &[Graphlet] {
        &self.graphlets
    }
}

/// Graphlets by contained neighbours: `query(vs, k)` returns the hubs whose
/// neighbour set contains every vertex of `vs` and has at least `k` members.
#[derive(Clone, Debug)]
pub struct SetIndex {
    /// For each vertex, the hubs that list it as a neighbour (sorted).
    postings: Vec<Vec<Vertex>>,
    degree: Vec<usize>,
}

impl SetIndex {
    pub fn query(&self, vs: &[Vertex], min_neighbors: usize) -> Vec<Vertex> {
        let mut lists: Vec<&Vec<Vertex>> = vs.iter().map(|&v| &self.postings[v]).collect();
        let Some(first) = lists.iter().map(|l| l.len()).enumerate().min_by_key(|&(_, l)| l).map(|(i, _)| i)
        else {
            return (0..self.degree.len())
                .filter(|&y| self.degree[y] >= min_neighbors)
                .collect();
        };
        let shortest = lists.swap_remove(first);
        shortest
            .iter()
            .copied()
            .filter(|&y| self.degree[y] >= min_neighbors)
            .filter(|y| lists.iter().all(|l| l.binary_search(y).is_ok()))
            .collect()
    }
}

pub fn build_indices(d: &Graph) -> (HashIndex, SetIndex) {
    let graphlets = d.graphlets();
    // u is a neighbour of y exactly when y is a neighbour of u
    let postings = (0..d.n()).map(|u| d.neighbors(u).to_vec()).collect();
    let degree = (0..d.n()).map(|u| d.degree(u)).collect();
    (HashIndex { graphlets }, SetIndex { postings, degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{q1, u};

    #[test]
    fn hash_index_is_identity() {
        let g = q1();
        let (h, _) = build_indices(&g);
        for v in 0..g.n() {
            assert_eq!(h.get(v).unwrap().hub, v);
        }
    }

    #[test]
    fn set_index_matches_linear_scan() {
        let g = q1();
        let (h, s) = build_indices(&g);
        let queries: [&[Vertex]; 5] = [&[], &[u(5)], &[u(2), u(5)], &[u(3)], &[u(1), u(3)]];
        for vs in queries {
            for k in 0..6 {
                let scan: Vec<Vertex> = h
                    .all()
                    .iter()
                    .filter(|r| r.degree() >= k && vs.iter().all(|&v| r.has_neighbor(v)))
                    .map(|r| r.hub)
                    .collect();
                assert_eq!(s.query(vs, k), scan, "{vs:?} {k}");
            }
        }
        assert_eq!(s.query(&[u(2), u(5)], 1), vec![u(1), u(3)]);
    }
}
