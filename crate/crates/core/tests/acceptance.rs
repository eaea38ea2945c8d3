//! Acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so the summary lines always reach the
//! terminal. Known unattainable sub-claims are reported as FAIL but only fail
//! the process when `ACCEPTANCE_STRICT=1` is set.

use std::collections::{BTreeSet, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use hubcover::bench::{self, HistogramBucket, ProfilePoint, RunRecord, RunStatus, LSLP_BEST};
use hubcover::fixtures::{q1, u};
use hubcover::generators::{desk_corpus, GenClass, GenSpec, Instance};
use hubcover::lp::solve_lp;
use hubcover::matcher::{
    brute_force_matches, build_indices, find_solutions, order_graphlets, GraphStats, MatchMode, QueryPlan,
};
use hubcover::oracle::{brute_force_all_mhc, brute_force_mhc, brute_force_mvc};
use hubcover::solvers::{solve, solve_exact, solve_gr2, Algorithm, SolverConfig};
use hubcover::{build_ip, is_hub_cover, is_triangle_free, is_vertex_cover, Graph, SolveStatus, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Verdict {
    Pass(String),
    /// The criterion as written cannot hold; everything attainable passed.
    KnownFail(String),
}

fn names(g: &Graph, vs: &[Vertex]) -> BTreeSet<String> {
    vs.iter().map(|&v| g.name(v)).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let g = q1();
    let model = build_ip(&g);
    let rows: BTreeSet<BTreeSet<String>> = model.rows().iter().map(|r| names(&g, r)).collect();
    let want: BTreeSet<BTreeSet<String>> = [
        set(&["u1", "u2", "u5"]),
        set(&["u2", "u3", "u5"]),
        set(&["u3", "u4"]),
        set(&["u5", "u6"]),
    ]
    .into();
    assert_eq!(model.rows().len(), 4);
    assert_eq!(rows, want);

    let s = solve_exact(&model, &SolverConfig::default()).unwrap();
    assert_eq!((s.objective, s.status), (2, SolveStatus::Optimal));
    assert!(is_hub_cover(&g, &s.cover));
    let gamma: BTreeSet<BTreeSet<String>> = brute_force_all_mhc(&g).unwrap().iter().map(|c| names(&g, c)).collect();
    assert!(gamma.contains(&set(&["u3", "u5"])));
    assert!(gamma.contains(&set(&["u4", "u5"])));
    assert!(gamma.iter().all(|c| c.len() == 2));

    let mvc = brute_force_mvc(&g).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 1.0, "{elapsed} s");

    let claimed = [u(2), u(5)];
    assert!(!is_vertex_cover(&g, &claimed), "claimed MVC became valid");
    assert!(g.has_edge(u(3), u(4)));
    assert_eq!(mvc.len(), 3);
    Verdict::KnownFail(format!(
        "rows, MHC=2 and Gamma passed in {elapsed:.3} s; claimed MVC {{u2,u5}} misses edge (u3,u4), true MVC has size 3 ({:?})",
        names(&g, &mvc)
    ))
}

fn small_instances() -> Vec<(GenClass, Graph)> {
    let mut out = Vec::new();
    let mut push = |spec: GenSpec, seed: u64| {
        let g = spec.generate(seed).unwrap();
        out.push((spec.class(), g));
    };
    for i in 0..100u64 {
        let n = 4 + (i % 9) as usize;
        push(GenSpec::Random { n, eta: [0.15, 0.3, 0.5][(i / 9 % 3) as usize] }, i);
        let want = 1 + (i / 9 % 5) as usize;
        // rewiring needs room among the non-edges, so the irregular class stays sparse
        let valence = |max: usize| {
            let v = want.min(max);
            match (n * v % 2, v) {
                (0, _) => v,
                (_, 1) => 2,
                _ => v - 1,
            }
        };
        push(GenSpec::BoundedValence { n, valence: valence(n - 1) }, i);
        push(
            GenSpec::IrregularBoundedValence {
                n,
                valence: valence(n / 2),
                rewire: [0.1, 0.25, 0.5][(i % 3) as usize],
            },
            i,
        );
        push(
            GenSpec::ScaleFree {
                n,
                alpha: [1.5, 2.0, 2.5][(i % 3) as usize],
                beta: [10.0, 100.0][(i / 3 % 2) as usize] * n as f64,
            },
            i,
        );
    }
    let meshes: [&[usize]; 9] = [&[2, 2], &[2, 3], &[2, 4], &[2, 5], &[2, 6], &[3, 3], &[3, 4], &[2, 2, 2], &[2, 2, 3]];
    for dims in meshes {
        push(GenSpec::Mesh { dims: dims.to_vec() }, 0);
    }
    for i in 0..100u64 {
        let dims = meshes[(i % 9) as usize].to_vec();
        push(GenSpec::IrregularMesh { dims, rho: [0.1, 0.25, 0.5][(i / 9 % 3) as usize] }, i);
    }
    out
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let corpus = small_instances();
    // the three regular mesh dimensions form one problem class
    let classes: HashSet<&str> = corpus
        .iter()
        .map(|(c, _)| match c {
            GenClass::Mesh2D | GenClass::Mesh3D | GenClass::Mesh4D => "mesh",
            other => other.as_str(),
        })
        .collect();
    assert!(corpus.len() >= 500, "{}", corpus.len());
    assert_eq!(classes.len(), 6);
    for (class, g) in &corpus {
        assert!(g.n() <= 12);
        let s = solve_exact(&build_ip(g), &SolverConfig::default()).unwrap();
        let o = brute_force_mhc(g).unwrap();
        assert_eq!(s.objective, o.objective, "{class} {g:?}");
        assert!(is_hub_cover(g, &s.cover));
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 600.0);
    Verdict::Pass(format!("{} instances over 6 classes agree with the oracle in {elapsed:.1} s", corpus.len()))
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    Graph::new(n, (1..n).map(|v| (rng.gen_range(0..v), v))).unwrap()
}

fn random_bipartite(a: usize, b: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in a..a + b {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(a + b, edges).unwrap()
}

fn triangle_free_instances() -> Vec<(&'static str, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut out = Vec::new();
    for a in 2..=4 {
        for b in a..=16 / a {
            out.push(("mesh2d", GenSpec::Mesh { dims: vec![a, b] }.generate(0).unwrap()));
        }
    }
    for k in (4..=16).step_by(2) {
        out.push(("even cycle", Graph::cycle(k)));
    }
    for _ in 0..90 {
        let n = rng.gen_range(2..=16);
        out.push(("tree", random_tree(n, &mut rng)));
    }
    for i in 0..90 {
        let a = rng.gen_range(1..=8);
        let b = rng.gen_range(1..=16 - a);
        out.push(("bipartite", random_bipartite(a, b, [0.2, 0.35, 0.5][i % 3], &mut rng)));
    }
    let mut seed = 0;
    while out.len() < 230 {
        let g = GenSpec::IrregularMesh { dims: vec![4, 4], rho: 0.2 }.generate(seed).unwrap();
        seed += 1;
        if is_triangle_free(&g) {
            out.push(("irregular mesh", g));
        }
    }
    out
}

fn criterion_3() -> Verdict {
    let corpus = triangle_free_instances();
    assert!(corpus.len() >= 200);
    for (kind, g) in &corpus {
        assert!(g.n() <= 16 && is_triangle_free(g), "{kind}");
        let mhc = brute_force_mhc(g).unwrap().objective;
        let mvc = brute_force_mvc(g).unwrap().len();
        assert_eq!(mhc, mvc, "{kind} {g:?}");
        let s = solve_exact(&build_ip(g), &SolverConfig::default()).unwrap();
        assert_eq!(s.objective, mvc, "{kind} {g:?}");
        assert!(is_vertex_cover(g, &s.cover), "{kind}: a hub cover of a triangle-free graph is a vertex cover");
    }
    Verdict::Pass(format!("|MHC| = |MVC| on {} triangle-free instances", corpus.len()))
}

struct DeskRun {
    inst: Instance,
    lp: f64,
    exact: hubcover::HubCoverSolution,
    heuristics: Vec<(Algorithm, usize)>,
}

/// Instances of the default corpus small enough for the test suite.
const DESK_MAX_N: usize = 64;

fn desk_runs() -> &'static [DeskRun] {
    static RUNS: std::sync::OnceLock<Vec<DeskRun>> = std::sync::OnceLock::new();
    RUNS.get_or_init(|| {
        desk_corpus()
            .into_iter()
            .filter(|i| i.spec.n() <= DESK_MAX_N)
            .map(|inst| {
                let g = inst.generate().unwrap();
                let model = build_ip(&g);
                let cfg = SolverConfig::default().with_time_limit(60.0).with_seed(inst.seed);
                let lp = solve_lp(&model.to_lp(None)).unwrap().objective;
                let exact = solve(&g, Algorithm::Exact, &cfg).unwrap();
                let heuristics = [Algorithm::Gr1, Algorithm::Gr2, Algorithm::Mbh, Algorithm::Lslp]
                    .into_iter()
                    .map(|a| {
                        let s = solve(&g, a, &cfg).unwrap();
                        assert!(is_hub_cover(&g, &s.cover), "{a} on {}", inst.id);
                        (a, s.objective)
                    })
                    .collect();
                DeskRun { inst, lp, exact, heuristics }
            })
            .collect()
    })
}

fn criterion_4() -> Verdict {
    let runs = desk_runs();
    let mut solved = 0;
    for r in runs.iter().filter(|r| r.exact.status == SolveStatus::Optimal) {
        solved += 1;
        let floor = (r.lp - 1e-6).ceil() as usize;
        assert!(floor <= r.exact.objective, "{}: LP {} > {}", r.inst.id, r.lp, r.exact.objective);
        for &(a, obj) in &r.heuristics {
            assert!(r.exact.objective <= obj, "{}: {a} {obj} < exact {}", r.inst.id, r.exact.objective);
        }
    }
    assert!(solved > 0);
    Verdict::Pass(format!(
        "0 violations on {solved}/{} desk instances with n <= {DESK_MAX_N} solved to optimality",
        runs.len()
    ))
}

fn criterion_5() -> Verdict {
    let corpus = triangle_free_instances();
    let mut worst: f64 = 0.0;
    for (kind, g) in &corpus {
        let opt = brute_force_mvc(g).unwrap().len();
        for seed in 0..50 {
            let s = solve_gr2(g, seed);
            assert!(is_hub_cover(g, &s.cover));
            assert!(s.objective <= 2 * opt, "{kind} seed {seed}: {} > 2*{opt}", s.objective);
            if opt > 0 {
                worst = worst.max(s.objective as f64 / opt as f64);
            }
        }
    }
    let mut sf_worst: f64 = 0.0;
    let mut above_two = 0;
    for inst in desk_corpus().iter().filter(|i| i.spec.class() == GenClass::ScaleFree && i.spec.n() <= 50) {
        let g = inst.generate().unwrap();
        let opt = solve_exact(&build_ip(&g), &SolverConfig::default()).unwrap().objective;
        for seed in 0..50 {
            let r = solve_gr2(&g, seed).objective as f64 / opt.max(1) as f64;
            sf_worst = sf_worst.max(r);
            above_two += usize::from(r > 2.0);
        }
    }
    Verdict::Pass(format!(
        "GR2 <= 2*opt over {} triangle-free instances x 50 seeds (worst {worst:.2}); scale-free n=50 observed worst ratio {sf_worst:.2}, {above_two} runs above 2",
        corpus.len()
    ))
}

fn criterion_6() -> Verdict {
    let runs = desk_runs();
    let in_scope = |c: GenClass| {
        matches!(
            c,
            GenClass::BoundedValence | GenClass::IrregularBoundedValence | GenClass::Mesh2D | GenClass::Mesh3D | GenClass::Mesh4D
        )
    };
    let mut per_class: std::collections::BTreeMap<String, (usize, usize, usize)> = Default::default();
    for r in runs.iter().filter(|r| in_scope(r.inst.spec.class()) && r.exact.status == SolveStatus::Optimal) {
        let opt = r.exact.objective;
        let get = |a: Algorithm| r.heuristics.iter().find(|h| h.0 == a).unwrap().1;
        let lslp = get(Algorithm::Lslp);
        assert!(lslp <= opt + 2, "{}: LSLP {lslp} vs {opt}", r.inst.id);
        let e = per_class.entry(r.inst.spec.class().to_string()).or_default();
        e.0 += 1;
        e.1 += usize::from(get(Algorithm::Mbh) == opt);
        e.2 = e.2.max(lslp - opt);
    }
    let total: usize = per_class.values().map(|e| e.0).sum();
    let hits: usize = per_class.values().map(|e| e.1).sum();
    let breakdown: Vec<String> = per_class
        .iter()
        .map(|(c, (n, h, gap))| format!("{c} {h}/{n} lslp+{gap}"))
        .collect();
    let share = hits as f64 / total as f64;
    assert!(total > 0);
    assert!(share >= 0.9, "MBH optimal on {hits}/{total}: {}", breakdown.join(", "));
    Verdict::Pass(format!("MBH optimal on {hits}/{total} ({:.0}%): {}", 100.0 * share, breakdown.join(", ")))
}

fn random_labels(n: usize, alphabet: usize, rng: &mut ChaCha8Rng) -> Vec<String> {
    (0..n).map(|_| ((b'A' + rng.gen_range(0..alphabet) as u8) as char).to_string()).collect()
}

/// Plans over every minimum hub cover of `q`, plus the reversed orders.
fn distinct_plans(q: &Graph, stats: &GraphStats, mode: MatchMode) -> Vec<QueryPlan> {
    let mut plans: Vec<QueryPlan> = Vec::new();
    for c in brute_force_all_mhc(q).unwrap() {
        let p = order_graphlets(q, &c, stats, mode).unwrap();
        let order: Vec<Vertex> = p.entries.iter().rev().map(|e| e.vertex).collect();
        for p in [p, QueryPlan::from_order(q, &order).unwrap()] {
            if !plans.contains(&p) {
                plans.push(p);
            }
        }
    }
    plans
}

struct Triple {
    q: Graph,
    d: Graph,
    mode: MatchMode,
}

fn matcher_triples() -> Vec<Triple> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut out = Vec::new();
    while out.len() < 1000 {
        let mode = MatchMode::ALL[out.len() % 3];
        let alphabet = rng.gen_range(1..=3);
        let nq = rng.gen_range(2..=6);
        let qp = rng.gen_range(0.3..0.8);
        let q_edges: Vec<(usize, usize)> =
            (0..nq).flat_map(|i| (i + 1..nq).map(move |j| (i, j))).filter(|_| rng.gen_bool(qp)).collect();
        let q_labels = random_labels(nq, alphabet, &mut rng);
        let q = Graph::new(nq, q_edges.clone()).unwrap().with_labels(q_labels.clone()).unwrap();

        let nd = rng.gen_range(nq.max(4)..=12);
        let dp = rng.gen_range(0.15..0.5);
        let mut d_edges: BTreeSet<(usize, usize)> =
            (0..nd).flat_map(|i| (i + 1..nd).map(move |j| (i, j))).filter(|_| rng.gen_bool(dp)).collect();
        let mut d_labels = random_labels(nd, alphabet, &mut rng);
        if rng.gen_bool(0.6) {
            let mut slots: Vec<usize> = (0..nd).collect();
            slots.shuffle(&mut rng);
            for &(a, b) in &q_edges {
                let (x, y) = (slots[a], slots[b]);
                d_edges.insert((x.min(y), x.max(y)));
            }
            for v in 0..nq {
                d_labels[slots[v]] = q_labels[v].clone();
            }
        }
        let d = Graph::new(nd, d_edges).unwrap().with_labels(d_labels).unwrap();
        if distinct_plans(&q, &GraphStats::new(&d), mode).len() < 2 {
            continue;
        }
        out.push(Triple { q, d, mode });
    }
    out
}

fn criterion_7() -> Verdict {
    let triples = matcher_triples();
    let (mut plans_run, mut nonempty) = (0, 0);
    for (i, t) in triples.iter().enumerate() {
        let want = brute_force_matches(&t.q, &t.d, t.mode).unwrap();
        nonempty += usize::from(!want.is_empty());
        let stats = GraphStats::new(&t.d);
        let (h, s) = build_indices(&t.d);
        let plans = distinct_plans(&t.q, &stats, t.mode);
        assert!(plans.len() >= 2);
        for p in &plans {
            let got = find_solutions(p, &t.q, &t.d, &h, &s, t.mode).unwrap();
            assert_eq!(got, want, "triple {i}, mode {}, plan {}", t.mode.as_str(), p.describe(&t.q));
            plans_run += 1;
        }
    }
    Verdict::Pass(format!(
        "0 mismatches over {} triples ({nonempty} with matches), {plans_run} plan executions",
        triples.len()
    ))
}

fn criterion_8() -> Verdict {
    let triples = matcher_triples();
    let mut strict = [0usize; 2];
    for t in &triples {
        let get = |m| brute_force_matches(&t.q, &t.d, m).unwrap();
        let (s, l, m) = (get(MatchMode::Structural), get(MatchMode::Label), get(MatchMode::Match));
        assert!(m.is_subset(&l));
        assert!(l.is_subset(&s));
        strict[0] += usize::from(m.len() < l.len());
        strict[1] += usize::from(l.len() < s.len());
    }
    Verdict::Pass(format!(
        "Match <= Label <= Structural on {} labeled triples (strict: {} Match<Label, {} Label<Structural)",
        triples.len(),
        strict[0],
        strict[1]
    ))
}

const FROZEN_RESULTS: &str = "\
instance_id,class,n,params,seed,solver,status,objective,lower_bound,time_s,best_time_s
p1,random,10,eta=0.1,0,exact,Optimal,10,10.0,0.1,
p1,random,10,eta=0.1,0,gr1,Feasible,12,,0.01,
p1,random,10,eta=0.1,0,lslp,Feasible,10,,1.0,0.2
p1,random,10,eta=0.1,0,gr2,Error,,,0.0,
p2,scale-free,20,alpha=2;beta=2000,1,exact,TimeLimit,20,18.5,60.0,
p2,scale-free,20,alpha=2;beta=2000,1,gr1,Feasible,25,,0.02,
p2,scale-free,20,alpha=2;beta=2000,1,lslp,Feasible,22,,3.0,0.6
p2,scale-free,20,alpha=2;beta=2000,1,gr2,Feasible,30,,0.001,
p3,mesh2d,16,dims=4x4,0,exact,Error,,,0.0,
p3,mesh2d,16,dims=4x4,0,gr1,Error,,,0.0,
p3,mesh2d,16,dims=4x4,0,lslp,Error,,,0.0,
p3,mesh2d,16,dims=4x4,0,gr2,Error,,,0.0,
";

fn criterion_9() -> Verdict {
    let recs = bench::read_results(FROZEN_RESULTS.as_bytes()).unwrap();
    assert_eq!(recs.len(), 12);
    let mut buf = Vec::new();
    bench::write_results(&recs, &mut buf).unwrap();
    assert_eq!(String::from_utf8(buf).unwrap(), FROZEN_RESULTS);

    let of = |id: &str| recs.iter().filter(|r| r.instance_id == id).collect::<Vec<&RunRecord>>();
    let r1 = bench::performance_ratio(&of("p1"));
    assert_eq!(r1.into_iter().collect::<Vec<_>>(), vec![
        ("exact".to_string(), 1.0),
        ("gr1".to_string(), 1.2),
        ("lslp".to_string(), 1.0)
    ]);
    let r2 = bench::performance_ratio(&of("p2"));
    assert_eq!(r2.into_iter().collect::<Vec<_>>(), vec![
        ("exact".to_string(), 1.0),
        ("gr1".to_string(), 1.25),
        ("gr2".to_string(), 1.5),
        ("lslp".to_string(), 1.1)
    ]);
    assert!(bench::performance_ratio(&of("p3")).is_empty());

    let solvers = bench::solvers_in(&recs);
    assert_eq!(solvers, ["exact", "gr1", "lslp", "gr2"]);
    let profile = bench::performance_profile(&recs, &solvers);
    let taus = [1.0, 1.1, 1.2, 1.25, 1.5];
    let expected: [(&str, [f64; 5]); 4] = [
        ("exact", [1.0, 1.0, 1.0, 1.0, 1.0]),
        ("gr1", [0.0, 0.0, 0.5, 1.0, 1.0]),
        ("lslp", [0.5, 1.0, 1.0, 1.0, 1.0]),
        ("gr2", [0.0, 0.0, 0.0, 0.0, 0.5]),
    ];
    let want: Vec<ProfilePoint> = expected
        .iter()
        .flat_map(|(s, fr)| {
            taus.iter().zip(fr).map(|(&tau, &fraction)| ProfilePoint { solver: s.to_string(), tau, fraction })
        })
        .collect();
    assert_eq!(profile, want);

    let hist = bench::time_histogram(&recs, &[0.0, 0.5, 5.0]).unwrap();
    let expected: [(&str, [f64; 3]); 5] = [
        ("exact", [0.5, 0.0, 0.5]),
        ("gr1", [1.0, 0.0, 0.0]),
        ("gr2", [1.0, 0.0, 0.0]),
        ("lslp", [0.0, 1.0, 0.0]),
        (LSLP_BEST, [0.5, 0.5, 0.0]),
    ];
    let bounds = [(0.0, Some(0.5)), (0.5, Some(5.0)), (5.0, None)];
    let want: Vec<HistogramBucket> = expected
        .iter()
        .flat_map(|(s, fr)| {
            bounds.iter().zip(fr).map(|(&(lower, upper), &fraction)| HistogramBucket {
                solver: s.to_string(),
                lower,
                upper,
                fraction,
            })
        })
        .collect();
    assert_eq!(hist, want);
    assert_eq!(recs.iter().filter(|r| r.status == RunStatus::Error).count(), 5);
    Verdict::Pass("ratios, profile and histogram equal the hand-computed values".into())
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2.0
    }
}

fn exact_median(pred: impl Fn(&GenSpec) -> bool) -> f64 {
    let times: Vec<f64> = desk_corpus()
        .iter()
        .filter(|i| pred(&i.spec))
        .map(|i| {
            let g = i.generate().unwrap();
            let s = solve_exact(&build_ip(&g), &SolverConfig::default()).unwrap();
            assert_eq!(s.status, SolveStatus::Optimal, "{}", i.id);
            s.solve_time
        })
        .collect();
    assert!(!times.is_empty());
    median(times)
}

fn criterion_10() -> Verdict {
    let random: Vec<f64> = [0.01, 0.05, 0.1]
        .iter()
        .map(|&e| exact_median(|s| matches!(*s, GenSpec::Random { n: 80, eta } if eta == e)))
        .collect();
    assert!(random[0] < random[1] && random[1] < random[2], "{random:?}");
    let sf: Vec<f64> = [1.5, 2.5]
        .iter()
        .map(|&a| exact_median(|s| matches!(*s, GenSpec::ScaleFree { n: 50, alpha, .. } if alpha == a)))
        .collect();
    assert!(sf[1] < sf[0], "{sf:?}");
    let ms = |v: &[f64]| v.iter().map(|t| format!("{:.2}", t * 1e3)).collect::<Vec<_>>().join(" < ");
    Verdict::Pass(format!(
        "random n=80 medians (ms) {}; scale-free n=50 alpha 2.5 {:.2} ms < alpha 1.5 {:.2} ms",
        ms(&random),
        sf[1] * 1e3,
        sf[0] * 1e3
    ))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let criteria: [Criterion; 10] = [
        ("1 worked example", criterion_1),
        ("2 oracle equivalence", criterion_2),
        ("3 triangle-free coincidence", criterion_3),
        ("4 relaxation sandwich", criterion_4),
        ("5 GR2 bound", criterion_5),
        ("6 heuristic quality", criterion_6),
        ("7 matcher correctness", criterion_7),
        ("8 mode nesting", criterion_8),
        ("9 methodology fixture", criterion_9),
        ("10 scale trend", criterion_10),
    ];
    let mut failed = false;
    for (name, check) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(Verdict::Pass(msg)) => println!("criterion {name}: PASS ({secs:.1} s) {msg}"),
            Ok(Verdict::KnownFail(msg)) => {
                println!("criterion {name}: FAIL (known, unattainable as stated) {msg}");
                failed |= strict;
            }
            Err(_) => {
                println!("criterion {name}: FAIL ({secs:.1} s)");
                failed = true;
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
