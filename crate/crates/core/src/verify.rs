//! Verification suites. Each suite runs a batch of seeded instances and
//! reports pass counts; every failure carries the seed needed to replay it.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::elekes_sharir::{collinearity_residual, phi, recover_motion, rotation_at, to_line, PointPair};
use crate::error::{Error, Result};
use crate::geometry::{
    classify_triple, common_plane, common_point, intersection_graph, lines_through_point, meet_residual,
    Concurrency, Line, LineConfig, Point3, TripleKind,
};
use crate::graph::{generate, Edge, Graph};
use crate::numeric::families::Family;
use crate::numeric::{
    global_rigidity_oracle, line_system_dimension, numeric_rank, pair_system_dimension, rank_exact, Embedding,
};
use crate::sampler::{
    sample_collinear_congruent_pair, sample_congruent_pair, sample_knn, sample_laman_lines, sample_triple,
    transversal_base, transversal_jacobian, transversal_variation_rank, DEFAULT_MAX_RETRIES,
};
use crate::seed;
use crate::sparsity::{is_hendrickson, sparsity_rank};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    TheoremMain,
    TheoremMainnec,
    LemmaComplete,
    Lemma3Lines,
    LemmaCong,
    FourLines,
    HendricksonOracle,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::TheoremMain,
        Suite::TheoremMainnec,
        Suite::LemmaComplete,
        Suite::Lemma3Lines,
        Suite::LemmaCong,
        Suite::FourLines,
        Suite::HendricksonOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremMain => "theorem-main",
            Suite::TheoremMainnec => "theorem-mainnec",
            Suite::LemmaComplete => "lemma-complete",
            Suite::Lemma3Lines => "lemma-3lines",
            Suite::LemmaCong => "lemma-cong",
            Suite::FourLines => "four-lines",
            Suite::HendricksonOracle => "hendrickson-oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite `{s}`")))
    }
}

/// Knobs shared by the suites. Which fields a suite reads is listed on
/// [`run_suite`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub seed: u64,
    pub tol: f64,
    /// Instance count for the trial-based suites.
    pub trials: usize,
    /// Random trials inside the global-rigidity oracle.
    pub oracle_trials: usize,
    pub n_max: usize,
    /// Instance count for the graph-based suites.
    pub seeds: usize,
    pub exact: bool,
}

impl VerifyOptions {
    pub fn for_suite(suite: Suite) -> Self {
        let base = VerifyOptions {
            seed: 0,
            tol: crate::geometry::DEFAULT_TOL,
            trials: 100,
            oracle_trials: 5,
            n_max: 10,
            seeds: 20,
            exact: false,
        };
        match suite {
            Suite::TheoremMain => VerifyOptions { seeds: 50, ..base },
            Suite::LemmaCong => VerifyOptions { trials: 1000, ..base },
            Suite::FourLines => VerifyOptions { trials: 10_000, ..base },
            Suite::HendricksonOracle => VerifyOptions { n_max: 8, ..base },
            _ => base,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteFailure {
    pub instance: String,
    pub seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<SuiteFailure>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            passed: 0,
            total: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total && self.failures.is_empty()
    }

    fn record(&mut self, instance: impl Into<String>, seed: u64, outcome: std::result::Result<(), String>) {
        self.total += 1;
        match outcome {
            Ok(()) => self.passed += 1,
            Err(detail) => self.failures.push(SuiteFailure {
                instance: instance.into(),
                seed,
                detail,
            }),
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} passed", self.suite, self.passed, self.total)?;
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        for fail in &self.failures {
            write!(f, "\n  FAIL {} (seed {}): {}", fail.instance, fail.seed, fail.detail)?;
        }
        Ok(())
    }
}

/// Runs one suite.
///
/// - `theorem-main`: `seeds` random Laman graphs with `2 <= n <= n_max`.
/// - `theorem-mainnec`: `seeds` flexible graphs with `n <= n_max`.
/// - `lemma-complete`: `seeds` parameter draws per family and `2 <= n <= n_max`.
/// - `lemma-3lines`: `trials` triples per class.
/// - `lemma-cong`: `trials` instances of each transform check.
/// - `four-lines`: `trials` quadruples.
/// - `hendrickson-oracle`: the catalog up to `n_max`, `oracle_trials` per graph.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(suite);
    match suite {
        Suite::TheoremMain => theorem_main(opts, &mut report)?,
        Suite::TheoremMainnec => theorem_mainnec(opts, &mut report)?,
        Suite::LemmaComplete => lemma_complete(opts, &mut report)?,
        Suite::Lemma3Lines => lemma_3lines(opts, &mut report),
        Suite::LemmaCong => lemma_cong(opts, &mut report),
        Suite::FourLines => four_lines(opts, &mut report),
        Suite::HendricksonOracle => hendrickson_oracle(opts, &mut report)?,
    }
    Ok(report)
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Err(msg())
    } else {
        Ok(())
    }
}

fn theorem_main(opts: &VerifyOptions, report: &mut SuiteReport) -> Result<()> {
    if opts.n_max < 2 {
        return Err(Error::Domain("theorem-main needs n_max >= 2".into()));
    }
    let mut attempts = 0;
    for i in 0..opts.seeds {
        let s = seed::derive(opts.seed, i as u64);
        let n = 2 + (s % (opts.n_max as u64 - 1)) as usize;
        let g = generate("laman_random", &[n as u64, s])?;
        let outcome = sample_laman_lines(&g, s, DEFAULT_MAX_RETRIES)
            .map_err(|e| e.to_string())
            .and_then(|sample| {
                attempts += sample.attempts;
                line_system_dimension(&g, &sample.config, opts.tol, opts.exact).map_err(|e| e.to_string())
            })
            .and_then(|rep| {
                fail_if(!rep.certified || rep.local_dim_estimate != 2 * n + 3, || {
                    format!(
                        "rank {} (exact {:?}), local dim {} != {}",
                        rep.jacobian_rank,
                        rep.exact_rank,
                        rep.local_dim_estimate,
                        2 * n + 3
                    )
                })
            });
        report.record(format!("laman_random({n}, {s})"), s, outcome);
    }
    if opts.seeds > 0 {
        report.notes.push(format!(
            "sampler attempts: {attempts} for {} instances (retry rate {:.3})",
            opts.seeds,
            (attempts - report.total.min(attempts)) as f64 / opts.seeds as f64
        ));
    }
    Ok(())
}

/// Random tree on `n` vertices plus `extra` random non-edges.
fn tree_plus_edges(n: usize, extra: usize, rng: &mut impl Rng) -> Result<Graph> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<Edge> = (1..n)
        .map(|k| {
            let parent = order[rng.gen_range(0..k)];
            (parent.min(order[k]), parent.max(order[k]))
        })
        .collect();
    let mut missing: Vec<Edge> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|e| !edges.contains(e))
        .collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra));
    Graph::new(n, edges)
}

/// Complete graphs on `a` and `b` vertices sharing one vertex: rigid
/// pieces joined at a hinge.
pub fn hinge(a: usize, b: usize) -> Result<Graph> {
    let n = a + b - 1;
    let first = (0..a).flat_map(|i| (i + 1..a).map(move |j| (i, j)));
    let second_vertices: Vec<usize> = std::iter::once(0).chain(a..n).collect();
    let second: Vec<Edge> = second_vertices
        .iter()
        .enumerate()
        .flat_map(|(k, &i)| second_vertices[k + 1..].iter().map(move |&j| (i.min(j), i.max(j))))
        .collect();
    Graph::new(n, first.chain(second))
}

/// A flexible graph for instance `i`: cycles, trees with extra edges, and
/// hinged complete graphs in rotation.
pub fn flexible_instance(i: usize, n_max: usize, s: u64) -> Result<(String, Graph)> {
    let mut rng = seed::rng(s, 0);
    let n_max = n_max.max(5);
    Ok(match i % 3 {
        0 => {
            let n = rng.gen_range(4..=n_max);
            (format!("cycle({n})"), generate("cycle", &[n as u64])?)
        }
        1 => {
            let n = rng.gen_range(4..=n_max);
            let extra = rng.gen_range(0..=n - 3);
            (format!("tree({n}) + {extra} edges"), tree_plus_edges(n, extra, &mut rng)?)
        }
        _ => {
            let a = rng.gen_range(3..=(n_max - 2).min(5));
            let b = rng.gen_range(3..=(n_max + 1 - a).min(5));
            (format!("hinge(K{a}, K{b})"), hinge(a, b)?)
        }
    })
}

fn theorem_mainnec(opts: &VerifyOptions, report: &mut SuiteReport) -> Result<()> {
    for i in 0..opts.seeds {
        let s = seed::derive(opts.seed, i as u64);
        let (name, g) = flexible_instance(i, opts.n_max, s)?;
        let n = g.n();
        let full = 2 * n - 3;
        if sparsity_rank(&g)?.rank >= full {
            return Err(Error::InvariantViolation(format!("{name} is not flexible")));
        }
        let orientation = if i % 2 == 0 { 1 } else { -1 };
        let (p, q) = sample_congruent_pair(n, orientation, s);
        let outcome = pair_system_dimension(&g, &p, &q, opts.tol, opts.exact)
            .map_err(|e| e.to_string())
            .and_then(|rep| {
                let exact_ok = rep.exact_rank.map_or(true, |r| rep.ambient_dim - r >= 2 * n + 4);
                fail_if(rep.local_dim_estimate < 2 * n + 4 || !exact_ok, || {
                    format!(
                        "local dim {} (exact rank {:?}) < {}",
                        rep.local_dim_estimate,
                        rep.exact_rank,
                        2 * n + 4
                    )
                })
            });
        report.record(name, s, outcome);
    }
    Ok(())
}

fn lemma_complete(opts: &VerifyOptions, report: &mut SuiteReport) -> Result<()> {
    for family in Family::ALL {
        for n in 2..=opts.n_max {
            for k in 0..opts.seeds {
                let s = seed::derive(opts.seed, (n * 1000 + k) as u64);
                let mut rng = seed::rng(s, family as u64);
                let ints = family.random_params(n, 100, &mut rng);
                let floats: Vec<f64> = ints.iter().map(|&v| v as f64).collect();
                let want = family.parameter_count(n);
                let exact = rank_exact(&family.jacobian_int(n, &ints)?);
                let mut jac = family.jacobian(n, &floats)?;
                // unit columns; the coplanar chart mixes 1/mu and 1/mu^2 scales
                for mut col in jac.column_iter_mut() {
                    let norm = col.norm();
                    if norm > 0.0 {
                        col /= norm;
                    }
                }
                let float = numeric_rank(&jac, opts.tol);
                let complete = intersection_graph(&sample_knn(n, family, s)?, opts.tol).is_complete();
                let outcome = fail_if(exact != want || float != want || !complete, || {
                    format!("exact rank {exact}, float rank {float}, want {want}; K_n sample complete: {complete}")
                });
                report.record(format!("{}(n={n})", family.name()), s, outcome);
            }
        }
    }
    Ok(())
}

const TRIPLE_KINDS: [TripleKind; 5] = [
    TripleKind::ConcurrentAndCoplanar,
    TripleKind::ConcurrentOnly,
    TripleKind::CoplanarOnly,
    TripleKind::TwoConcurrentMixed,
    TripleKind::PairwiseSkew,
];

fn lemma_3lines(opts: &VerifyOptions, report: &mut SuiteReport) {
    for (k, kind) in TRIPLE_KINDS.into_iter().enumerate() {
        for i in 0..opts.trials {
            let s = seed::derive(opts.seed, (k * 1_000_000 + i) as u64);
            let lines = sample_triple(kind, s);
            let outcome = (|| {
                let class = classify_triple(&lines[0], &lines[1], &lines[2], opts.tol).map_err(|e| e.to_string())?;
                fail_if(class.kind != kind, || format!("classified as {:?}", class.kind))?;
                let base = transversal_base(&lines, &class, s).map_err(|e| e.to_string())?;
                let varied = transversal_variation_rank(&lines, &base, s).map_err(|e| e.to_string())?;
                let tangent = 4 - numeric_rank(&transversal_jacobian(&lines, &base), opts.tol);
                fail_if(varied != class.family_dim || tangent != class.family_dim, || {
                    format!(
                        "sampled dimension {varied}, tangent dimension {tangent}, expected {}",
                        class.family_dim
                    )
                })
            })();
            report.record(format!("{kind:?} #{i}"), s, outcome);
        }
    }
}

fn sq(v: [i64; 2]) -> i64 {
    v[0] * v[0] + v[1] * v[1]
}

fn pt(v: [i64; 2]) -> [f64; 2] {
    [v[0] as f64, v[1] as f64]
}

/// `|a - c| = |b - d|` iff the lines of `(a, b)` and `(c, d)` meet, checked
/// exactly on integer points; half of the draws are forced equidistant.
fn distance_incidence(rng: &mut impl Rng, forced: bool) -> std::result::Result<(), String> {
    let mut p = || [rng.gen_range(-1000..=1000i64), rng.gen_range(-1000..=1000i64)];
    let (a, b) = (p(), p());
    let (c, d) = if forced {
        let w = [rng.gen_range(-20..=20i64), rng.gen_range(-20..=20i64)];
        let (u, v) = (rng.gen_range(1..=20i64), rng.gen_range(0..=20i64));
        let (cos, sin, scale) = (u * u - v * v, 2 * u * v, u * u + v * v);
        (
            [a[0] + scale * w[0], a[1] + scale * w[1]],
            [b[0] + cos * w[0] - sin * w[1], b[1] + sin * w[0] + cos * w[1]],
        )
    } else {
        let mut q = || [rng.gen_range(-1000..=1000i64), rng.gen_range(-1000..=1000i64)];
        (q(), q())
    };
    let ac = sq([a[0] - c[0], a[1] - c[1]]);
    let bd = sq([b[0] - d[0], b[1] - d[1]]);
    let g = meet_residual(
        &to_line(&PointPair::new(pt(a), pt(b))),
        &to_line(&PointPair::new(pt(c), pt(d))),
    );
    fail_if((ac == bd) != (g == 0.0), || {
        format!("a={a:?} b={b:?} c={c:?} d={d:?}: |ac|^2={ac}, |bd|^2={bd}, g={g}")
    })?;
    fail_if(4.0 * g != (bd - ac) as f64, || format!("4g = {} but |bd|^2 - |ac|^2 = {}", 4.0 * g, bd - ac))
}

fn no_shared_source(rng: &mut impl Rng) -> std::result::Result<(), String> {
    let mut p = || [rng.gen_range(-1000..=1000i64) as f64, rng.gen_range(-1000..=1000i64) as f64];
    let (a, b) = (p(), p());
    let mut c = p();
    while c == b {
        c = p();
    }
    let g = meet_residual(&to_line(&PointPair::new(a, b)), &to_line(&PointPair::new(a, c)));
    fail_if(g == 0.0, || format!("lines from {a:?} to {b:?} and {c:?} meet"))
}

fn max_gap(x: &[[f64; 2]], y: &[[f64; 2]]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(u, v)| (u[0] - v[0]).abs().max((u[1] - v[1]).abs()))
        .fold(0.0, f64::max)
}

fn coord_scale(e: &Embedding) -> f64 {
    1.0 + e.points.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Concurrent and coplanar images both found only for collinear sources.
fn both_imply_collinear(p: &Embedding, lines: &LineConfig, tol: f64) -> std::result::Result<bool, String> {
    let point = common_point(lines, tol).map_err(|e| e.to_string())?;
    let plane = common_plane(lines, tol).map_err(|e| e.to_string())?;
    let both = point.is_some() && plane.is_some();
    if both {
        let r = collinearity_residual(&p.points);
        fail_if(r > tol * coord_scale(p), || format!("concurrent and coplanar but collinearity residual {r:e}"))?;
    }
    Ok(both)
}

/// Both embeddings divided by a power of two at least their largest
/// coordinate. Exact, and keeps the image lines away from horizontal.
fn shrink(p: &Embedding, q: &Embedding) -> (Embedding, Embedding) {
    let factor = coord_scale(p).max(coord_scale(q)).log2().ceil().exp2();
    let down = |e: &Embedding| Embedding::new(e.points.iter().map(|&[x, y]| [x / factor, y / factor]).collect());
    (down(p), down(q))
}

fn rotation_case(s: u64, tol: f64) -> std::result::Result<(), String> {
    let (p, q) = sample_congruent_pair(4, 1, s);
    let (sp, sq) = shrink(&p, &q);
    let lines = phi(&sp, &sq).map_err(|e| e.to_string())?;
    both_imply_collinear(&sp, &lines, tol)?;
    let Some(Concurrency::At { point }) = common_point(&lines, tol).map_err(|e| e.to_string())? else {
        return Err("image of a rotation is not concurrent".into());
    };
    let rot = rotation_at(&Point3::from(point));
    let mapped: Vec<[f64; 2]> = sp.points.iter().map(|&a| rot.apply(a)).collect();
    let gap = max_gap(&mapped, &sq.points);
    fail_if(gap > 1e-9 * coord_scale(&sp).max(coord_scale(&sq)), || {
        format!("rotation at {point:?} misses by {gap:e}")
    })?;
    let scale = coord_scale(&p).max(coord_scale(&q));
    let motion = recover_motion(&p.points, &q.points, 1, tol).map_err(|e| e.to_string())?;
    let moved: Vec<[f64; 2]> = p.points.iter().map(|&a| motion.apply(a)).collect();
    let gap = max_gap(&moved, &q.points);
    fail_if(gap > 1e-9 * scale, || format!("recovered motion misses by {gap:e}"))
}

fn reflection_case(s: u64, tol: f64) -> std::result::Result<(), String> {
    let (p, q) = sample_congruent_pair(4, -1, s);
    let (sp, sq) = shrink(&p, &q);
    let lines = phi(&sp, &sq).map_err(|e| e.to_string())?;
    both_imply_collinear(&sp, &lines, tol)?;
    if common_plane(&lines, tol).map_err(|e| e.to_string())?.is_none() {
        return Err("image of a reflection is not coplanar".into());
    }
    let motion = recover_motion(&p.points, &q.points, -1, tol).map_err(|e| e.to_string())?;
    let moved: Vec<[f64; 2]> = p.points.iter().map(|&a| motion.apply(a)).collect();
    let gap = max_gap(&moved, &q.points);
    let scale = coord_scale(&p).max(coord_scale(&q));
    fail_if(gap > 1e-9 * scale, || format!("recovered reflection misses by {gap:e}"))
}

fn collinear_case(s: u64, tol: f64) -> std::result::Result<(), String> {
    let orientation = if s % 2 == 0 { 1 } else { -1 };
    let (p, q) = sample_collinear_congruent_pair(4, orientation, s);
    let (sp, sq) = shrink(&p, &q);
    let lines = phi(&sp, &sq).map_err(|e| e.to_string())?;
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p.points[i] != p.points[j]));
    if distinct && !both_imply_collinear(&sp, &lines, tol)? {
        return Err("collinear source but image not both concurrent and coplanar".into());
    }
    for o in [1, -1] {
        recover_motion(&p.points, &q.points, o, tol).map_err(|e| format!("orientation {o}: {e}"))?;
    }
    Ok(())
}

fn lemma_cong(opts: &VerifyOptions, report: &mut SuiteReport) {
    for i in 0..opts.trials {
        let s = seed::derive(opts.seed, i as u64);
        let mut rng = seed::rng(s, 0);
        report.record(format!("distance-incidence #{i}"), s, distance_incidence(&mut rng, i % 2 == 0));
        report.record(format!("shared-source #{i}"), s, no_shared_source(&mut rng));
        report.record(format!("rotation #{i}"), s, rotation_case(s, opts.tol));
        report.record(format!("reflection #{i}"), s, reflection_case(s, opts.tol));
        report.record(format!("collinear #{i}"), s, collinear_case(s, opts.tol));
    }
}

/// Four distinct pairwise-meeting lines: concurrent, parallel, in a
/// (possibly vertical) plane, or concurrent inside a plane.
pub fn meeting_quadruple(s: u64) -> Vec<Line> {
    let mut rng = seed::rng(s, 0);
    let mut r = |h: f64| rng.gen_range(-h..h);
    let point = Point3::new(r(5.0), r(5.0), r(5.0));
    let mode = s % 5;
    match mode {
        0 => lines_through_point(&point, &[(r(3.0), r(3.0)), (r(3.0), r(3.0)), (r(3.0), r(3.0)), (r(3.0), r(3.0))]),
        1 => {
            let (c, d) = (r(3.0), r(3.0));
            (0..4).map(|_| Line::new(r(5.0), r(5.0), c, d)).collect()
        }
        2 => {
            let (lambda, mu, nu) = (r(2.0), r(2.0), r(2.0));
            let mut params = vec![lambda, mu, nu];
            params.extend((0..8).map(|_| r(3.0)));
            Family::Coplanar.evaluate(4, &params).expect("parameter count").lines
        }
        3 => {
            // vertical plane x = k y + h
            let (k, h) = (r(2.0), r(2.0));
            (0..4)
                .map(|_| {
                    let (b, d) = (r(5.0), r(3.0));
                    Line::new(k * b + h, b, k * d, d)
                })
                .collect()
        }
        _ => {
            let (lambda, mu) = (r(2.0), r(2.0));
            let dirs: Vec<(f64, f64)> = (0..4)
                .map(|_| {
                    let c = r(3.0);
                    (c, (1.0 - lambda * c) / mu)
                })
                .collect();
            lines_through_point(&point, &dirs)
        }
    }
}

fn four_lines(opts: &VerifyOptions, report: &mut SuiteReport) {
    for i in 0..opts.trials {
        let s = seed::derive(opts.seed, i as u64);
        let config = LineConfig::new(meeting_quadruple(s));
        let outcome = (|| {
            fail_if(!intersection_graph(&config, opts.tol).is_complete(), || {
                "construction does not pairwise meet".to_string()
            })?;
            let point = common_point(&config, opts.tol).map_err(|e| e.to_string())?;
            let plane = common_plane(&config, opts.tol).map_err(|e| e.to_string())?;
            fail_if(point.is_none() && plane.is_none(), || {
                "pairwise meeting but neither concurrent nor coplanar".to_string()
            })
        })();
        report.record(format!("quadruple #{i} (mode {})", s % 5), s, outcome);
    }
}

/// Named graphs on at most `n_max` vertices: complete graphs, wheels,
/// cycles, paths, hinges, and seeded Laman and Hendrickson graphs.
pub fn catalog(n_max: usize) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.push((format!("complete({n})"), generate("complete", &[n as u64])?));
        out.push((format!("path({n})"), generate("path", &[n as u64])?));
        if n >= 3 {
            out.push((format!("cycle({n})"), generate("cycle", &[n as u64])?));
        }
        if n >= 4 {
            out.push((format!("wheel({n})"), generate("wheel", &[n as u64])?));
        }
        for s in 0..3u64 {
            out.push((format!("laman_random({n}, {s})"), generate("laman_random", &[n as u64, s])?));
            if n >= 4 {
                out.push((
                    format!("hendrickson_random({n}, {s})"),
                    generate("hendrickson_random", &[n as u64, s])?,
                ));
            }
        }
    }
    for a in 3..=5 {
        for b in a..=5 {
            if a + b - 1 <= n_max {
                out.push((format!("hinge(K{a}, K{b})"), hinge(a, b)?));
            }
        }
    }
    if n_max >= 6 {
        // two K4 sharing an edge: redundant but 2-connected
        let mut edges = Graph::complete(4).edges().to_vec();
        edges.extend([(0, 4), (0, 5), (1, 4), (1, 5), (4, 5)]);
        out.push(("k4-k4 on an edge".to_string(), Graph::new(6, edges)?));
    }
    Ok(out)
}

fn hendrickson_oracle(opts: &VerifyOptions, report: &mut SuiteReport) -> Result<()> {
    let mut skipped = 0;
    for (k, (name, g)) in catalog(opts.n_max)?.into_iter().enumerate() {
        if g.n() < 4 || sparsity_rank(&g)?.rank < 2 * g.n() - 3 {
            skipped += 1;
            continue;
        }
        let s = seed::derive(opts.seed, k as u64);
        let outcome = (|| {
            let combinatorial = is_hendrickson(&g).map_err(|e| e.to_string())?;
            let oracle = global_rigidity_oracle(&g, opts.oracle_trials, s).map_err(|e| e.to_string())?;
            fail_if(combinatorial != oracle, || {
                format!("is_hendrickson = {combinatorial}, oracle = {oracle}")
            })
        })();
        report.record(name, s, outcome);
    }
    report
        .notes
        .push(format!("{skipped} catalog graphs skipped (n < 4 or flexible)"));
    Ok(())
}
