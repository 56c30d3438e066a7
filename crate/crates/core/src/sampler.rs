//! Points on the line and point-pair varieties: constructive Henneberg
//! replays refined by Gauss–Newton, the pairwise-meeting families, and
//! exactly congruent integer embeddings.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    self, line_through, lines_through_point, meet_residual, pair_scale, transversal, Concurrency, Line,
    LineConfig, Point3, TransversalFailure, TripleClass, TripleKind,
};
use crate::graph::Graph;
use crate::henneberg::{extract_henneberg, HennebergStep};
use crate::linalg::{singular_values, Svd};
use crate::numeric::families::Family;
use crate::numeric::{line_system_dimension, line_system_jacobian, worst_line_residual, Embedding};
use crate::seed;
use crate::sparsity::is_laman;

pub const DEFAULT_MAX_RETRIES: usize = 32;
pub const DEFAULT_MAX_ITER: usize = 50;

/// Relative residual every sampled configuration meets.
pub const SAMPLE_RESIDUAL: f64 = 1e-10;

/// Least-norm Gauss–Newton on `residual(x) = 0`.
///
/// Stops as soon as `measure(x) <= tol`; returns the point and the number
/// of iterations taken.
pub fn gauss_newton<R, J, M>(
    x0: DVector<f64>,
    residual: R,
    jacobian: J,
    measure: M,
    tol: f64,
    max_iter: usize,
) -> Result<(DVector<f64>, usize)>
where
    R: Fn(&DVector<f64>) -> DVector<f64>,
    J: Fn(&DVector<f64>) -> DMatrix<f64>,
    M: Fn(&DVector<f64>) -> f64,
{
    let mut x = x0;
    let mut current = measure(&x);
    for iter in 0..max_iter {
        if current <= tol {
            return Ok((x, iter));
        }
        if !current.is_finite() {
            break;
        }
        let Some(svd) = Svd::new(&jacobian(&x)) else {
            break;
        };
        x -= svd.solve(&residual(&x), 1e-12 * svd.max());
        current = measure(&x);
    }
    if current <= tol {
        return Ok((x, max_iter));
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual: current,
    })
}

/// Projects `x0` onto the incidence system of `g`.
pub fn gauss_newton_project(g: &Graph, x0: &LineConfig, tol: f64, max_iter: usize) -> Result<LineConfig> {
    if x0.len() != g.n() {
        return Err(Error::Domain(format!(
            "configuration has {} lines but the graph has {} vertices",
            x0.len(),
            g.n()
        )));
    }
    let to_config = |x: &DVector<f64>| LineConfig::from_flat(x.as_slice());
    let residual = |x: &DVector<f64>| {
        let c = to_config(x);
        DVector::from_iterator(
            g.m(),
            g.edges().iter().map(|&(i, j)| meet_residual(&c.lines[i], &c.lines[j])),
        )
    };
    let jacobian = |x: &DVector<f64>| line_system_jacobian(g, &to_config(x)).expect("sizes match");
    let measure = |x: &DVector<f64>| worst_line_residual(g, &to_config(x)).expect("sizes match").0;
    let (x, _) = gauss_newton(DVector::from_vec(x0.to_flat()), residual, jacobian, measure, tol, max_iter)?;
    Ok(to_config(&x))
}

/// A certified sample together with how many attempts it took.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LineSample {
    pub config: LineConfig,
    pub attempts: usize,
    /// Why earlier attempts were discarded.
    pub log: Vec<String>,
}

const STEP_DRAWS: usize = 8;
const COORD_LIMIT: f64 = 1e3;

fn random_point(rng: &mut impl Rng, half: i64) -> Point3 {
    Point3::new(
        rng.gen_range(-half..=half) as f64,
        rng.gen_range(-half..=half) as f64,
        rng.gen_range(-half..=half) as f64,
    )
}

fn usable(line: &Line, existing: &[Line]) -> bool {
    line.max_abs() < COORD_LIMIT && existing.iter().all(|l| !l.approx_eq(line, 1e-6))
}

/// Where two meeting, non-parallel lines cross.
fn crossing(l1: &Line, l2: &Line) -> Option<Point3> {
    if !geometry::meets(l1, l2, 1e-9) {
        return None;
    }
    let (dc, dd) = (l1.c - l2.c, l1.d - l2.d);
    let t = if dc.abs() >= dd.abs() {
        (l2.a - l1.a) / dc
    } else {
        (l2.b - l1.b) / dd
    };
    t.is_finite().then(|| l1.point_at(t))
}

fn random_direction(rng: &mut impl Rng) -> (f64, f64) {
    (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))
}

/// A line in the plane of `q` and `l`, through `q`. Used when the three
/// lines of an `Ext1` step are coplanar and every line of that plane
/// through `q` is a transversal.
fn in_plane_through(q: &Point3, l: &Line, rng: &mut impl Rng) -> Option<Line> {
    let normal = (l.point_at(0.0) - q).cross(&l.direction());
    let other = Point3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let dir = normal.cross(&other);
    if dir.z.abs() <= 1e-6 * dir.norm() {
        return None;
    }
    let (c, d) = (dir.x / dir.z, dir.y / dir.z);
    Some(Line::new(q.x - c * q.z, q.y - d * q.z, c, d))
}

fn through_crossing(three: [Line; 3], rng: &mut impl Rng) -> Option<Line> {
    let pick = rng.gen_range(0..3);
    (0..3).map(|k| (pick + k) % 3).find_map(|k| {
        let p = crossing(&three[(k + 1) % 3], &three[(k + 2) % 3])?;
        if three[k].contains_point(&p, 1e-9) {
            return Some(lines_through_point(&p, &[random_direction(rng)])[0]);
        }
        let q = three[k].point_at(rng.gen_range(-3.0..3.0));
        line_through(&p, &q).ok().flatten()
    })
}

fn build_line(step: &HennebergStep, lines: &[Line], rng: &mut impl Rng) -> Option<Line> {
    for _ in 0..STEP_DRAWS {
        let candidate = match *step {
            HennebergStep::Ext0 { u, v } => match crossing(&lines[u], &lines[v]) {
                // lines meeting two crossing lines either pass through the
                // crossing or lie in their plane; draw from both
                Some(p) if rng.gen_bool(0.5) => Some(lines_through_point(&p, &[random_direction(rng)])[0]),
                _ => {
                    let p = lines[u].point_at(rng.gen_range(-3.0..3.0));
                    let q = lines[v].point_at(rng.gen_range(-3.0..3.0));
                    line_through(&p, &q).ok().flatten()
                }
            },
            HennebergStep::Ext1 { u, v, w } => {
                let s = rng.gen_range(-3.0..3.0);
                match transversal(&lines[u], &lines[v], &lines[w], s, 1e-9) {
                    Ok(line) => Some(line),
                    Err(TransversalFailure::Coplanar) => in_plane_through(&lines[w].point_at(s), &lines[u], rng)
                        .filter(|l| [u, v, w].iter().all(|&i| geometry::meets(l, &lines[i], 1e-9))),
                    Err(_) => None,
                }
            }
        };
        if let Some(line) = candidate.filter(|l| usable(l, lines)) {
            return Some(line);
        }
        if let HennebergStep::Ext1 { u, v, w } = *step {
            // the transversal through q may be one of the three lines
            // itself; a line through the crossing of two of them and a
            // point of the third also meets all three (any line through
            // the crossing when the three are concurrent)
            let fallback = through_crossing([u, v, w].map(|i| lines[i]), rng);
            if let Some(line) = fallback.filter(|l| usable(l, lines)) {
                return Some(line);
            }
        }
    }
    None
}

fn construct(steps: &[HennebergStep], rng: &mut impl Rng) -> std::result::Result<Vec<Line>, String> {
    let base = random_point(rng, 10);
    let mut dirs = [(0.0, 0.0); 2];
    while dirs[0] == dirs[1] {
        for d in &mut dirs {
            *d = (rng.gen_range(-5..=5) as f64, rng.gen_range(-5..=5) as f64);
        }
    }
    let mut lines = lines_through_point(&base, &dirs);
    for (pos, step) in steps.iter().enumerate() {
        match build_line(step, &lines, rng) {
            Some(line) => lines.push(line),
            None => return Err(format!("step {pos} ({step:?}) stayed degenerate")),
        }
    }
    Ok(lines)
}

/// Samples a line configuration on the incidence variety of the Laman graph
/// `g` by replaying a Henneberg sequence geometrically, perturbing, and
/// projecting back with Gauss–Newton. Only configurations whose Jacobian has
/// full row rank are returned.
pub fn sample_laman_lines(g: &Graph, seed: u64, max_retries: usize) -> Result<LineSample> {
    if !is_laman(g)? {
        return Err(Error::Precondition("graph is not Laman".into()));
    }
    let extraction = extract_henneberg(g)?;
    let mut log = Vec::new();
    for attempt in 0..max_retries.max(1) {
        let mut rng = seed::rng(seed, attempt as u64);
        let built = match construct(&extraction.steps, &mut rng) {
            Ok(lines) => lines,
            Err(reason) => {
                log.push(format!("attempt {attempt}: {reason}"));
                continue;
            }
        };
        let ordered: Vec<Line> = extraction.relabel.iter().map(|&r| built[r]).collect();
        let perturbed: Vec<f64> = LineConfig::new(ordered)
            .to_flat()
            .into_iter()
            .map(|v| v + 1e-2 * rng.gen_range(-1.0..1.0) * (1.0 + v.abs()))
            .collect();
        let config = match gauss_newton_project(g, &LineConfig::from_flat(&perturbed), 1e-13, DEFAULT_MAX_ITER) {
            Ok(c) => c,
            Err(e) => {
                log.push(format!("attempt {attempt}: {e}"));
                continue;
            }
        };
        let report = line_system_dimension(g, &config, geometry::DEFAULT_TOL, false)?;
        if report.certified && report.max_residual <= SAMPLE_RESIDUAL {
            return Ok(LineSample {
                config,
                attempts: attempt + 1,
                log,
            });
        }
        log.push(format!(
            "attempt {attempt}: jacobian rank {} < {}",
            report.jacobian_rank, report.constraint_count
        ));
    }
    Err(Error::SamplingExhausted {
        attempts: max_retries.max(1),
        log: log.join("; "),
    })
}

/// `n` pairwise-meeting lines from one of the three families, drawn from
/// integer parameters with pairwise-distinct lines.
pub fn sample_knn(n: usize, family: Family, seed: u64) -> Result<LineConfig> {
    if n == 0 {
        return Err(Error::Domain("need at least one line".into()));
    }
    for round in 0.. {
        let mut rng = seed::rng(seed, round);
        let params: Vec<f64> = family
            .random_params(n, 10, &mut rng)
            .into_iter()
            .map(|v| v as f64)
            .collect();
        let config = family.evaluate(n, &params)?;
        let distinct = (0..n).all(|i| (i + 1..n).all(|j| !config.lines[i].approx_eq(&config.lines[j], 1e-9)));
        if distinct {
            return Ok(config);
        }
    }
    unreachable!("the draw loop only exits by returning")
}

/// Random Pythagorean rotation `(u^2 - v^2, 2uv)` with `u, v >= 1`; its
/// entries over `u^2 + v^2` are an exact rational rotation.
fn pythagorean(rng: &mut impl Rng) -> (i64, i64, i64) {
    let u: i64 = rng.gen_range(1..=40);
    let v: i64 = rng.gen_range(1..=40);
    (u * u - v * v, 2 * u * v, u * u + v * v)
}

fn congruent_image(p0: &[[i64; 2]], orientation: i8, rng: &mut impl Rng) -> (Embedding, Embedding) {
    let (cos, sin, scale) = pythagorean(rng);
    let t = [rng.gen_range(-100..=100i64), rng.gen_range(-100..=100i64)];
    let p = p0.iter().map(|q| [(scale * q[0]) as f64, (scale * q[1]) as f64]).collect();
    let p_prime = p0
        .iter()
        .map(|&[x, y]| {
            let (px, py) = if orientation >= 0 {
                (cos * x - sin * y, sin * x + cos * y)
            } else {
                (cos * x + sin * y, sin * x - cos * y)
            };
            [(px + scale * t[0]) as f64, (py + scale * t[1]) as f64]
        })
        .collect();
    (Embedding::new(p), Embedding::new(p_prime))
}

/// An integer embedding `p` and its image under a random rigid motion of
/// the given orientation, also with integer coordinates. Every pairwise
/// distance agrees exactly.
pub fn sample_congruent_pair(n: usize, orientation: i8, seed: u64) -> (Embedding, Embedding) {
    let mut rng = seed::rng(seed, 0);
    let p0: Vec<[i64; 2]> = (0..n)
        .map(|_| [rng.gen_range(-100..=100), rng.gen_range(-100..=100)])
        .collect();
    congruent_image(&p0, orientation, &mut rng)
}

/// As [`sample_congruent_pair`] with all points of `p` on one line.
pub fn sample_collinear_congruent_pair(n: usize, orientation: i8, seed: u64) -> (Embedding, Embedding) {
    let mut rng = seed::rng(seed, 0);
    let base = [rng.gen_range(-50..=50i64), rng.gen_range(-50..=50i64)];
    let mut dir = [0i64, 0];
    while dir == [0, 0] {
        dir = [rng.gen_range(-5..=5), rng.gen_range(-5..=5)];
    }
    let p0: Vec<[i64; 2]> = (0..n)
        .map(|_| {
            let k = rng.gen_range(-10..=10i64);
            [base[0] + k * dir[0], base[1] + k * dir[1]]
        })
        .collect();
    congruent_image(&p0, orientation, &mut rng)
}

fn random_real_line(rng: &mut impl Rng) -> Line {
    let mut c = || rng.gen_range(-5.0..5.0);
    Line::new(c(), c(), c(), c())
}

/// Three lines of the requested kind from real-valued random data.
pub fn sample_triple(kind: TripleKind, seed: u64) -> [Line; 3] {
    let mut rng = seed::rng(seed, 0);
    let point = Point3::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
    let mut dir = || (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    match kind {
        TripleKind::ConcurrentAndCoplanar => {
            // directions (c, d, 1) inside the plane z = lambda x + mu y + nu,
            // i.e. lambda c + mu d = 1
            let (lambda, mu) = dir();
            let dirs: Vec<(f64, f64)> = (0..3)
                .map(|_| {
                    let c = rng.gen_range(-3.0..3.0);
                    (c, (1.0 - lambda * c) / mu)
                })
                .collect();
            let l = lines_through_point(&point, &dirs);
            [l[0], l[1], l[2]]
        }
        TripleKind::ConcurrentOnly => {
            let l = lines_through_point(&point, &[dir(), dir(), dir()]);
            [l[0], l[1], l[2]]
        }
        TripleKind::CoplanarOnly => {
            let (lambda, mu) = dir();
            let nu = rng.gen_range(-3.0..3.0);
            let mut params = vec![lambda, mu, nu];
            params.extend((0..6).map(|_| rng.gen_range(-3.0..3.0)));
            let l = Family::Coplanar.evaluate(3, &params).expect("parameter count");
            [l.lines[0], l.lines[1], l.lines[2]]
        }
        TripleKind::TwoConcurrentMixed => {
            let l = lines_through_point(&point, &[dir(), dir()]);
            [l[0], l[1], random_real_line(&mut rng)]
        }
        TripleKind::PairwiseSkew => [
            random_real_line(&mut rng),
            random_real_line(&mut rng),
            random_real_line(&mut rng),
        ],
    }
}

/// A line meeting all three inputs at which the transversal family is
/// locally smooth: a line through the common point, a line in the common
/// plane, or a transversal through a random point of the third line.
pub fn transversal_base(lines: &[Line; 3], class: &TripleClass, seed: u64) -> Result<Line> {
    let mut rng = seed::rng(seed, 1);
    for _ in 0..64 {
        let candidate = match (class.point, class.plane) {
            (Some(Concurrency::At { point }), _) => {
                let dir = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                Some(lines_through_point(&Point3::from(point), &[dir])[0])
            }
            (Some(Concurrency::Parallel { c, d }), _) => {
                let p = Point3::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), 0.0);
                Some(lines_through_point(&p, &[(c, d)])[0])
            }
            (None, Some(plane)) => {
                let n = Point3::from(plane.normal);
                let origin = -plane.offset * n;
                let helper = if n.x.abs() < 0.9 { Point3::x() } else { Point3::y() };
                let e1 = n.cross(&helper).normalize();
                let e2 = n.cross(&e1);
                let mut pick = || origin + rng.gen_range(-3.0..3.0) * e1 + rng.gen_range(-3.0..3.0) * e2;
                line_through(&pick(), &pick())?
            }
            (None, None) => transversal(&lines[0], &lines[1], &lines[2], rng.gen_range(-3.0..3.0), 1e-9).ok(),
        };
        if let Some(line) = candidate.filter(|l| usable(l, lines)) {
            return Ok(line);
        }
    }
    Err(Error::SamplingExhausted {
        attempts: 64,
        log: "no usable transversal".into(),
    })
}

fn transversal_residual(lines: &[Line; 3], w: &Line) -> DVector<f64> {
    DVector::from_iterator(3, lines.iter().map(|l| meet_residual(w, l)))
}

/// Rows `dg(w, l_k)/dw` of the three incidence conditions on `w`.
pub fn transversal_jacobian(lines: &[Line; 3], w: &Line) -> DMatrix<f64> {
    let mut jac = DMatrix::zeros(3, 4);
    for (k, l) in lines.iter().enumerate() {
        let grad = [w.d - l.d, l.c - w.c, l.b - w.b, w.a - l.a];
        for (col, v) in grad.into_iter().enumerate() {
            jac[(k, col)] = v;
        }
    }
    jac
}

/// Dimension of the family of lines meeting all three inputs near `base`,
/// estimated from the variation of sampled members: small random
/// perturbations of `base` are projected back onto the family, and the
/// significant singular values of the displacements are counted.
pub fn transversal_variation_rank(lines: &[Line; 3], base: &Line, seed: u64) -> Result<usize> {
    const SAMPLES: usize = 16;
    let mut rng = seed::rng(seed, 2);
    let to_line = |x: &DVector<f64>| Line::new(x[0], x[1], x[2], x[3]);
    let eps = 1e-6 * (1.0 + base.max_abs());
    let mut moves = DMatrix::zeros(SAMPLES, 4);
    for k in 0..SAMPLES {
        let start = DVector::from_fn(4, |i, _| base.coords()[i] + eps * rng.gen_range(-1.0..1.0));
        let (x, _) = gauss_newton(
            start,
            |x| transversal_residual(lines, &to_line(x)),
            |x| transversal_jacobian(lines, &to_line(x)),
            |x| {
                let w = to_line(x);
                lines
                    .iter()
                    .map(|l| meet_residual(&w, l).abs() / pair_scale(&w, l))
                    .fold(0.0, f64::max)
            },
            1e-13,
            DEFAULT_MAX_ITER,
        )?;
        for i in 0..4 {
            moves[(k, i)] = x[i] - base.coords()[i];
        }
    }
    let sv = singular_values(&moves);
    let max = sv.first().copied().unwrap_or(0.0);
    Ok(sv.iter().filter(|&&s| s > 1e-3 * max).count())
}
