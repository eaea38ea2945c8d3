//! Seeded generators for the benchmark problem classes.
//!
//! Every generator draws from a single `ChaCha8Rng` seeded with
//! `seed_from_u64(seed)`; identical `(spec, seed)` pairs yield identical
//! graphs on every platform.

use std::collections::HashSet;
use std::fmt;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph, Vertex};

/// Restart budget for the regular-graph pairing procedure.
pub const REGULAR_RETRIES: usize = 1000;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `⌊x⌋` tolerant to representation error in products such as `0.29 * 100`.
fn floor_count(x: f64) -> usize {
    (x + 1e-9).floor().max(0.0) as usize
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Erdős–Rényi `G(n, η)`: every pair is an edge independently with
/// probability `eta`.
pub fn gen_random(n: usize, eta: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if !(eta > 0.0 && eta < 1.0) {
        return Err(invalid(format!("eta must lie in (0, 1), got {eta}")));
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(eta) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

fn check_regular(n: usize, valence: usize) -> Result<()> {
    if valence == 0 {
        return Err(invalid("valence must be at least 1"));
    }
    if valence >= n {
        return Err(invalid(format!("valence {valence} must be below n = {n}")));
    }
    if (n * valence) % 2 != 0 {
        return Err(invalid(format!("n * valence = {} is odd", n * valence)));
    }
    Ok(())
}

/// One attempt of the stub-pairing procedure. Unpairable stubs are re-shuffled
/// among themselves; `None` when no legal pair remains.
fn try_regular(n: usize, valence: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Edge>> {
    let mut edges: HashSet<Edge> = HashSet::new();
    let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, valence)).collect();
    while !stubs.is_empty() {
        let mut leftover = vec![0usize; n];
        stubs.shuffle(rng);
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0], pair[1]);
            if a != b && !edges.contains(&canonical(a, b)) {
                edges.insert(canonical(a, b));
            } else {
                leftover[a] += 1;
                leftover[b] += 1;
            }
        }
        let open: Vec<Vertex> = (0..n).filter(|&v| leftover[v] > 0).collect();
        if !open.is_empty() {
            let pairable = open.iter().enumerate().any(|(i, &a)| {
                open[i + 1..]
                    .iter()
                    .any(|&b| !edges.contains(&canonical(a, b)))
            });
            if !pairable {
                return None;
            }
        }
        stubs = open
            .iter()
            .flat_map(|&v| std::iter::repeat_n(v, leftover[v]))
            .collect();
    }
    let mut out: Vec<Edge> = edges.into_iter().collect();
    out.sort_unstable();
    Some(out)
}

fn regular_edges(n: usize, valence: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Edge>> {
    check_regular(n, valence)?;
    for _ in 0..REGULAR_RETRIES {
        if let Some(edges) = try_regular(n, valence, rng) {
            return Ok(edges);
        }
    }
    Err(Error::Generation(format!(
        "no {valence}-regular graph on {n} vertices after {REGULAR_RETRIES} restarts"
    )))
}

/// Uniformly random simple `valence`-regular graph.
pub fn gen_bounded_valence(n: usize, valence: usize, seed: u64) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    Graph::new(n, regular_edges(n, valence, &mut rng)?)
}

/// Pairs not in `present`, in lexicographic order.
fn non_edges(n: usize, present: &HashSet<Edge>) -> Vec<Edge> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !present.contains(&(i, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

fn sample_non_edges(n: usize, edges: &[Edge], k: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Edge>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    let present: HashSet<Edge> = edges.iter().copied().collect();
    let pool = non_edges(n, &present);
    if pool.len() < k {
        return Err(invalid(format!(
            "need {k} new edges but only {} non-edges exist",
            pool.len()
        )));
    }
    Ok(index::sample(rng, pool.len(), k)
        .into_iter()
        .map(|i| pool[i])
        .collect())
}

/// A `valence`-regular graph with `⌊fraction·|E|⌋` edges moved to
/// uniformly chosen non-edges.
pub fn gen_irregular_bounded_valence(n: usize, valence: usize, rewire_fraction: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&rewire_fraction) {
        return Err(invalid(format!("rewire fraction must lie in [0, 1], got {rewire_fraction}")));
    }
    let mut rng = rng_from_seed(seed);
    let edges = regular_edges(n, valence, &mut rng)?;
    let k = floor_count(rewire_fraction * edges.len() as f64);
    if k == 0 {
        return Graph::new(n, edges);
    }
    let added = sample_non_edges(n, &edges, k, &mut rng)?;
    let removed: HashSet<usize> = index::sample(&mut rng, edges.len(), k).into_iter().collect();
    let kept = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, &e)| e);
    Graph::new(n, kept.chain(added))
}

fn check_dims(dims: &[usize]) -> Result<()> {
    if !(2..=4).contains(&dims.len()) {
        return Err(invalid(format!("mesh needs 2 to 4 dimensions, got {}", dims.len())));
    }
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(invalid(format!("mesh side {d} is below 2")));
    }
    Ok(())
}

fn mesh_edges(dims: &[usize]) -> Vec<Edge> {
    let n: usize = dims.iter().product();
    let mut strides = Vec::with_capacity(dims.len());
    let mut s = 1;
    for &d in dims {
        strides.push(s);
        s *= d;
    }
    let mut edges = Vec::new();
    for v in 0..n {
        for (k, &d) in dims.iter().enumerate() {
            let coord = (v / strides[k]) % d;
            if coord + 1 < d {
                edges.push((v, v + strides[k]));
            }
        }
    }
    edges
}

/// Non-periodic grid on `∏ dims` lattice points; the first coordinate varies
/// fastest in the vertex numbering.
pub fn gen_mesh(dims: &[usize]) -> Result<Graph> {
    check_dims(dims)?;
    Graph::new(dims.iter().product(), mesh_edges(dims))
}

/// A mesh plus `⌊rho·|V|⌋` uniformly chosen extra edges.
pub fn gen_irregular_mesh(dims: &[usize], rho: f64, seed: u64) -> Result<Graph> {
    check_dims(dims)?;
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(invalid(format!("rho must be non-negative, got {rho}")));
    }
    let n: usize = dims.iter().product();
    let edges = mesh_edges(dims);
    let mut rng = rng_from_seed(seed);
    let added = sample_non_edges(n, &edges, floor_count(rho * n as f64), &mut rng)?;
    Graph::new(n, edges.into_iter().chain(added))
}

/// Power-law out-degree construction. Vertex `v` receives credit
/// `⌊β·x_v^(−α)⌋` (capped at `n−1`) with `x_v` uniform on `[1, n]`; random
/// pairs of credited vertices become edges until credit runs out or every
/// remaining credited pair is already adjacent.
pub fn gen_scale_free(n: usize, alpha: f64, beta: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if !(alpha > 0.0 && alpha.is_finite()) || !(beta > 0.0 && beta.is_finite()) {
        return Err(invalid(format!("alpha and beta must be positive, got {alpha}, {beta}")));
    }
    let mut rng = rng_from_seed(seed);
    let mut credit: Vec<usize> = (0..n)
        .map(|_| {
            let x: f64 = rng.gen_range(1.0..=n as f64);
            let c = (beta * x.powf(-alpha)).floor();
            (c.min((n - 1) as f64)) as usize
        })
        .collect();
    let mut active: Vec<Vertex> = (0..n).filter(|&v| credit[v] > 0).collect();
    let mut edges: HashSet<Edge> = HashSet::new();
    let mut misses = 0usize;
    while active.len() >= 2 {
        let i = rng.gen_range(0..active.len());
        let mut j = rng.gen_range(0..active.len() - 1);
        if j >= i {
            j += 1;
        }
        let (a, b) = (active[i], active[j]);
        let e = canonical(a, b);
        if edges.contains(&e) {
            misses += 1;
            if misses > 4 * active.len() {
                let any_open = active.iter().enumerate().any(|(p, &x)| {
                    active[p + 1..]
                        .iter()
                        .any(|&y| !edges.contains(&canonical(x, y)))
                });
                if !any_open {
                    break;
                }
                misses = 0;
            }
            continue;
        }
        misses = 0;
        edges.insert(e);
        credit[a] -= 1;
        credit[b] -= 1;
        // remove the higher index first so the lower one stays valid
        for idx in [i.max(j), i.min(j)] {
            if credit[active[idx]] == 0 {
                active.swap_remove(idx);
            }
        }
    }
    let mut list: Vec<Edge> = edges.into_iter().collect();
    list.sort_unstable();
    Graph::new(n, list)
}

/// Benchmark problem class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenClass {
    Random,
    BoundedValence,
    IrregularBoundedValence,
    Mesh2D,
    Mesh3D,
    Mesh4D,
    IrregularMesh,
    ScaleFree,
}

impl GenClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GenClass::Random => "random",
            GenClass::BoundedValence => "bounded-valence",
            GenClass::IrregularBoundedValence => "irregular-bounded-valence",
            GenClass::Mesh2D => "mesh2d",
            GenClass::Mesh3D => "mesh3d",
            GenClass::Mesh4D => "mesh4d",
            GenClass::IrregularMesh => "irregular-mesh",
            GenClass::ScaleFree => "scale-free",
        }
    }
}

impl fmt::Display for GenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for GenClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c = match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "random" => GenClass::Random,
            "bounded-valence" => GenClass::BoundedValence,
            "irregular-bounded-valence" => GenClass::IrregularBoundedValence,
            "mesh2d" => GenClass::Mesh2D,
            "mesh3d" => GenClass::Mesh3D,
            "mesh4d" => GenClass::Mesh4D,
            "irregular-mesh" => GenClass::IrregularMesh,
            "scale-free" => GenClass::ScaleFree,
            other => return Err(invalid(format!("unknown class `{other}`"))),
        };
        Ok(c)
    }
}

/// Class plus class-specific parameters of one benchmark graph.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Random { n: usize, eta: f64 },
    BoundedValence { n: usize, valence: usize },
    IrregularBoundedValence { n: usize, valence: usize, rewire: f64 },
    Mesh { dims: Vec<usize> },
    IrregularMesh { dims: Vec<usize>, rho: f64 },
    ScaleFree { n: usize, alpha: f64, beta: f64 },
}

pub fn format_dims(dims: &[usize]) -> String {
    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("x")
}

pub fn parse_dims(s: &str) -> Result<Vec<usize>> {
    s.split(['x', 'X'])
        .map(|p| p.trim().parse::<usize>().map_err(|_| invalid(format!("bad dims `{s}`"))))
        .collect()
}

impl GenSpec {
    pub fn class(&self) -> GenClass {
        match self {
            GenSpec::Random { .. } => GenClass::Random,
            GenSpec::BoundedValence { .. } => GenClass::BoundedValence,
            GenSpec::IrregularBoundedValence { .. } => GenClass::IrregularBoundedValence,
            GenSpec::Mesh { dims } => match dims.len() {
                2 => GenClass::Mesh2D,
                3 => GenClass::Mesh3D,
                _ => GenClass::Mesh4D,
            },
            GenSpec::IrregularMesh { .. } => GenClass::IrregularMesh,
            GenSpec::ScaleFree { .. } => GenClass::ScaleFree,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            GenSpec::Random { n, .. }
            | GenSpec::BoundedValence { n, .. }
            | GenSpec::IrregularBoundedValence { n, .. }
            | GenSpec::ScaleFree { n, .. } => *n,
            GenSpec::Mesh { dims } | GenSpec::IrregularMesh { dims, .. } => dims.iter().product(),
        }
    }

    /// Class parameters as `key=value` pairs joined by `;`.
    pub fn params(&self) -> String {
        match self {
            GenSpec::Random { eta, .. } => format!("eta={eta}"),
            GenSpec::BoundedValence { valence, .. } => format!("valence={valence}"),
            GenSpec::IrregularBoundedValence { valence, rewire, .. } => {
                format!("valence={valence};rewire={rewire}")
            }
            GenSpec::Mesh { dims } => format!("dims={}", format_dims(dims)),
            GenSpec::IrregularMesh { dims, rho } => format!("dims={};rho={rho}", format_dims(dims)),
            GenSpec::ScaleFree { alpha, beta, .. } => format!("alpha={alpha};beta={beta}"),
        }
    }

    pub fn generate(&self, seed: u64) -> Result<Graph> {
        match self {
            GenSpec::Random { n, eta } => gen_random(*n, *eta, seed),
            GenSpec::BoundedValence { n, valence } => gen_bounded_valence(*n, *valence, seed),
            GenSpec::IrregularBoundedValence { n, valence, rewire } => {
                gen_irregular_bounded_valence(*n, *valence, *rewire, seed)
            }
            GenSpec::Mesh { dims } => gen_mesh(dims),
            GenSpec::IrregularMesh { dims, rho } => gen_irregular_mesh(dims, *rho, seed),
            GenSpec::ScaleFree { n, alpha, beta } => gen_scale_free(*n, *alpha, *beta, seed),
        }
    }
}

/// One manifest entry.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub id: String,
    pub spec: GenSpec,
    pub seed: u64,
}

impl Instance {
    pub fn generate(&self) -> Result<Graph> {
        self.spec.generate(self.seed)
    }

    /// `id=... class=... n=... <params> seed=...` on one line.
    pub fn to_manifest_line(&self) -> String {
        let mut parts = vec![format!("id={}", self.id), format!("class={}", self.spec.class())];
        match &self.spec {
            GenSpec::Mesh { .. } | GenSpec::IrregularMesh { .. } => {}
            other => parts.push(format!("n={}", other.n())),
        }
        parts.extend(self.spec.params().split(';').map(str::to_owned));
        parts.push(format!("seed={}", self.seed));
        parts.join(" ")
    }
}

/// Parses a corpus manifest: one instance per line as whitespace-separated
/// `key=value` tokens; blank lines and `#` comments are skipped. Missing ids
/// default to `<class>-<line>`.
pub fn parse_manifest(text: &str) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut kv = std::collections::HashMap::new();
        for tok in body.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::parse(line, format!("expected key=value, got `{tok}`")))?;
            kv.insert(k.to_ascii_lowercase(), v.to_owned());
        }
        let get = |k: &str| -> Result<&String> {
            kv.get(k)
                .ok_or_else(|| Error::parse(line, format!("missing `{k}`")))
        };
        let num = |k: &str| -> Result<usize> {
            get(k)?
                .parse()
                .map_err(|_| Error::parse(line, format!("`{k}` is not an integer")))
        };
        let real = |k: &str| -> Result<f64> {
            get(k)?
                .parse()
                .map_err(|_| Error::parse(line, format!("`{k}` is not a number")))
        };
        let class: GenClass = get("class")?
            .parse()
            .map_err(|e: Error| Error::parse(line, e.to_string()))?;
        let dims = || -> Result<Vec<usize>> {
            parse_dims(get("dims")?).map_err(|e| Error::parse(line, e.to_string()))
        };
        let spec = match class {
            GenClass::Random => GenSpec::Random { n: num("n")?, eta: real("eta")? },
            GenClass::BoundedValence => GenSpec::BoundedValence {
                n: num("n")?,
                valence: num("valence")?,
            },
            GenClass::IrregularBoundedValence => GenSpec::IrregularBoundedValence {
                n: num("n")?,
                valence: num("valence")?,
                rewire: real("rewire")?,
            },
            GenClass::Mesh2D | GenClass::Mesh3D | GenClass::Mesh4D => {
                let dims = dims()?;
                let spec = GenSpec::Mesh { dims };
                if spec.class() != class {
                    return Err(Error::parse(line, format!("dims do not match class {class}")));
                }
                spec
            }
            GenClass::IrregularMesh => GenSpec::IrregularMesh {
                dims: dims()?,
                rho: real("rho")?,
            },
            GenClass::ScaleFree => GenSpec::ScaleFree {
                n: num("n")?,
                alpha: real("alpha")?,
                beta: real("beta")?,
            },
        };
        let seed = match kv.get("seed") {
            Some(s) => s
                .parse()
                .map_err(|_| Error::parse(line, "`seed` is not an integer"))?,
            None => 0,
        };
        let id = kv
            .get("id")
            .cloned()
            .unwrap_or_else(|| format!("{}-{line}", class));
        out.push(Instance { id, spec, seed });
    }
    Ok(out)
}

/// Seeds per randomised configuration in [`desk_corpus`].
pub const DESK_SEEDS: u64 = 5;

/// The default benchmark corpus: every class at 16 to 200 vertices, with
/// [`DESK_SEEDS`] seeds per randomised configuration and one per regular mesh.
pub fn desk_corpus() -> Vec<Instance> {
    let mut specs = Vec::new();
    for n in [16, 40, 80, 160] {
        for eta in [0.01, 0.05, 0.1] {
            specs.push(GenSpec::Random { n, eta });
        }
    }
    for n in [20, 40, 60, 80, 100, 200] {
        for valence in [3, 6, 9] {
            specs.push(GenSpec::BoundedValence { n, valence });
            specs.push(GenSpec::IrregularBoundedValence { n, valence, rewire: 0.1 });
        }
    }
    for dims in [
        &[4, 4][..],
        &[6, 6],
        &[8, 8],
        &[10, 10],
        &[14, 14],
        &[3, 3, 3],
        &[4, 4, 4],
        &[5, 5, 5],
        &[2, 2, 2, 2],
        &[3, 3, 3, 3],
    ] {
        specs.push(GenSpec::Mesh { dims: dims.to_vec() });
    }
    for dims in [&[6, 6][..], &[10, 10], &[4, 4, 4]] {
        specs.push(GenSpec::IrregularMesh { dims: dims.to_vec(), rho: 0.1 });
    }
    for n in [50, 100, 200] {
        for alpha in [1.5, 2.0, 2.5] {
            specs.push(GenSpec::ScaleFree { n, alpha, beta: 100.0 * n as f64 });
        }
    }
    let mut out = Vec::new();
    for spec in specs {
        let seeds = if matches!(spec, GenSpec::Mesh { .. }) { 1 } else { DESK_SEEDS };
        for seed in 0..seeds {
            let id = format!("{}-{}-{}-s{seed}", spec.class(), spec.n(), spec.params().replace(';', "-"));
            out.push(Instance { id, spec: spec.clone(), seed });
        }
    }
    out
}
