//! Non-horizontal lines in three-space in the chart
//! `l(t) = (a, b, 0) + t (c, d, 1)`, the incidence polynomial, and the
//! concurrency / coplanarity / transversal predicates built on it.
//!
//! Predicates use relative tolerances of the form `tol * (1 + max |coord|)`.

use nalgebra::{DMatrix, DVector, Vector3, Vector4};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::Svd;

pub type Point3 = Vector3<f64>;

pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Line {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl From<[f64; 4]> for Line {
    fn from(v: [f64; 4]) -> Self {
        Line::new(v[0], v[1], v[2], v[3])
    }
}

impl From<Line> for [f64; 4] {
    fn from(l: Line) -> Self {
        l.coords()
    }
}

impl Line {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Line { a, b, c, d }
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Point at height `t`.
    pub fn point_at(&self, t: f64) -> Point3 {
        Point3::new(self.a + t * self.c, self.b + t * self.d, t)
    }

    pub fn direction(&self) -> Point3 {
        Point3::new(self.c, self.d, 1.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.coords().iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Coordinate-wise equality up to `tol * (1 + max |coord|)`.
    pub fn approx_eq(&self, other: &Line, tol: f64) -> bool {
        let scale = 1.0 + self.max_abs().max(other.max_abs());
        self.coords()
            .iter()
            .zip(other.coords())
            .all(|(x, y)| (x - y).abs() <= tol * scale)
    }

    pub fn contains_point(&self, p: &Point3, tol: f64) -> bool {
        let q = self.point_at(p.z);
        let scale = (1.0 + self.max_abs()) * (1.0 + p.amax());
        (q.x - p.x).abs() <= tol * scale && (q.y - p.y).abs() <= tol * scale
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineConfig {
    pub lines: Vec<Line>,
}

impl LineConfig {
    pub fn new(lines: Vec<Line>) -> Self {
        LineConfig { lines }
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// The configuration as a point of `R^{4n}`.
    pub fn to_flat(&self) -> Vec<f64> {
        self.lines.iter().flat_map(|l| l.coords()).collect()
    }

    pub fn from_flat(x: &[f64]) -> Self {
        assert_eq!(x.len() % 4, 0, "flat line vector length must be a multiple of 4");
        LineConfig {
            lines: x
                .chunks_exact(4)
                .map(|c| Line::new(c[0], c[1], c[2], c[3]))
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("line config serialization cannot fail")
    }
}

/// The incidence polynomial `(a1-a2)(d1-d2) - (b1-b2)(c1-c2)`. Vanishes iff
/// the lines meet, are parallel, or coincide.
pub fn meet_residual(l1: &Line, l2: &Line) -> f64 {
    (l1.a - l2.a) * (l1.d - l2.d) - (l1.b - l2.b) * (l1.c - l2.c)
}

/// `1 + max |coord|` over both lines.
pub fn pair_scale(l1: &Line, l2: &Line) -> f64 {
    1.0 + l1.max_abs().max(l2.max_abs())
}

/// `|meet_residual| / pair_scale`.
pub fn relative_residual(l1: &Line, l2: &Line) -> f64 {
    meet_residual(l1, l2).abs() / pair_scale(l1, l2)
}

pub fn meets(l1: &Line, l2: &Line, tol: f64) -> bool {
    relative_residual(l1, l2) <= tol
}

/// Graph on line indices with an edge for every meeting (or parallel) pair.
pub fn intersection_graph(config: &LineConfig, tol: f64) -> Graph {
    let n = config.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if meets(&config.lines[i], &config.lines[j], tol) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("pairs i < j are valid edges")
}

fn config_scale(lines: &[Line]) -> f64 {
    1.0 + lines.iter().fold(0.0f64, |m, l| m.max(l.max_abs()))
}

fn check_predicate_args(lines: &[Line], tol: f64) -> Result<()> {
    if lines.len() < 2 {
        return Err(Error::Domain(format!(
            "need at least two lines, got {}",
            lines.len()
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

/// Where a family of lines meets.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Concurrency {
    At { point: [f64; 3] },
    /// All lines share the direction `(c, d, 1)`: they meet at infinity.
    Parallel { c: f64, d: f64 },
}

impl Concurrency {
    pub fn point(&self) -> Option<Point3> {
        match self {
            Concurrency::At { point } => Some(Point3::from(*point)),
            Concurrency::Parallel { .. } => None,
        }
    }
}

/// Least-squares common point of the lines, accepted when the worst
/// incidence residual is at most `tol * (1 + max |coord|) * (1 + |point|)`.
/// A family of parallel lines is reported as [`Concurrency::Parallel`].
pub fn common_point(config: &LineConfig, tol: f64) -> Result<Option<Concurrency>> {
    let lines = &config.lines;
    check_predicate_args(lines, tol)?;
    let scale = config_scale(lines);
    let (c0, d0) = (lines[0].c, lines[0].d);
    let dir_scale = 1.0 + lines.iter().fold(0.0f64, |m, l| m.max(l.c.abs()).max(l.d.abs()));
    if lines
        .iter()
        .all(|l| (l.c - c0).abs() <= tol * dir_scale && (l.d - d0).abs() <= tol * dir_scale)
    {
        return Ok(Some(Concurrency::Parallel { c: c0, d: d0 }));
    }
    // a_i = x - c_i z, b_i = y - d_i z
    let n = lines.len();
    let mut m = DMatrix::zeros(2 * n, 3);
    let mut rhs = DVector::zeros(2 * n);
    for (i, l) in lines.iter().enumerate() {
        m[(2 * i, 0)] = 1.0;
        m[(2 * i, 2)] = -l.c;
        rhs[2 * i] = l.a;
        m[(2 * i + 1, 1)] = 1.0;
        m[(2 * i + 1, 2)] = -l.d;
        rhs[2 * i + 1] = l.b;
    }
    // equilibrate the z column
    let mut scaled = m.clone();
    scaled.column_mut(2).unscale_mut(dir_scale);
    let svd = Svd::new(&scaled).ok_or_else(|| Error::InvariantViolation("SVD did not converge".into()))?;
    let mut sol = svd.solve(&rhs, f64::EPSILON * svd.max());
    sol[2] /= dir_scale;
    let point = Point3::new(sol[0], sol[1], sol[2]);
    let worst = (&m * &sol - &rhs).amax();
    if worst <= tol * scale * (1.0 + point.amax()) {
        Ok(Some(Concurrency::At {
            point: [point.x, point.y, point.z],
        }))
    } else {
        Ok(None)
    }
}

/// A plane `normal . x + offset = 0` with unit normal.
///
/// Vertical planes are allowed; [`Plane::chart`] gives the `z = λx + μy + ν`
/// form when it exists.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Plane {
    pub normal: [f64; 3],
    pub offset: f64,
}

impl Plane {
    /// From homogeneous coefficients; `None` when the normal vanishes.
    pub fn from_coefficients(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Option<Plane> {
        let norm = (alpha * alpha + beta * beta + gamma * gamma).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return None;
        }
        Some(Plane {
            normal: [alpha / norm, beta / norm, gamma / norm],
            offset: delta / norm,
        })
    }

    /// The plane `z = λx + μy + ν`.
    pub fn from_chart(lambda: f64, mu: f64, nu: f64) -> Plane {
        Plane::from_coefficients(lambda, mu, -1.0, nu).expect("non-zero normal")
    }

    /// `(λ, μ, ν)` with `z = λx + μy + ν`, or `None` for a vertical plane.
    pub fn chart(&self) -> Option<(f64, f64, f64)> {
        let [a, b, g] = self.normal;
        if g.abs() < 1e-12 {
            return None;
        }
        Some((-a / g, -b / g, -self.offset / g))
    }

    pub fn signed_distance(&self, p: &Point3) -> f64 {
        Point3::from(self.normal).dot(p) + self.offset
    }

    /// The two linear incidence residuals of line `l` against this plane.
    pub fn line_residuals(&self, l: &Line) -> (f64, f64) {
        let [al, be, ga] = self.normal;
        (
            al * l.a + be * l.b + self.offset,
            al * l.c + be * l.d + ga,
        )
    }

    pub fn contains_line(&self, l: &Line, tol: f64) -> bool {
        let (r0, r1) = self.line_residuals(l);
        let scale = 1.0 + l.max_abs().max(self.offset.abs());
        r0.abs() <= tol * scale && r1.abs() <= tol * scale
    }
}

/// Plane containing every line, found as the least singular direction of
/// the homogeneous system `α a_i + β b_i + δ = 0`, `α c_i + β d_i + γ = 0`.
pub fn common_plane(config: &LineConfig, tol: f64) -> Result<Option<Plane>> {
    let lines = &config.lines;
    check_predicate_args(lines, tol)?;
    let n = lines.len();
    let mut m = DMatrix::zeros(2 * n, 4);
    for (i, l) in lines.iter().enumerate() {
        m[(2 * i, 0)] = l.a;
        m[(2 * i, 1)] = l.b;
        m[(2 * i, 3)] = 1.0;
        m[(2 * i + 1, 0)] = l.c;
        m[(2 * i + 1, 1)] = l.d;
        m[(2 * i + 1, 2)] = 1.0;
    }
    let col_scale: Vec<f64> = (0..4)
        .map(|j| m.column(j).amax().max(1.0))
        .collect();
    for (j, &c) in col_scale.iter().enumerate() {
        m.column_mut(j).unscale_mut(c);
    }
    let svd = Svd::new(&m).ok_or_else(|| Error::InvariantViolation("SVD did not converge".into()))?;
    let mut row: Vector4<f64> = svd.v.column(3).fixed_rows::<4>(0).into();
    for (j, &c) in col_scale.iter().enumerate() {
        row[j] /= c;
    }
    let Some(plane) = Plane::from_coefficients(row[0], row[1], row[2], row[3]) else {
        return Ok(None);
    };
    let scale = config_scale(lines).max(1.0 + plane.offset.abs());
    let ok = lines.iter().all(|l| {
        let (r0, r1) = plane.line_residuals(l);
        r0.abs() <= tol * scale && r1.abs() <= tol * scale
    });
    Ok(ok.then_some(plane))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TripleKind {
    ConcurrentAndCoplanar,
    ConcurrentOnly,
    CoplanarOnly,
    /// Neither concurrent nor coplanar, but some pair meets.
    TwoConcurrentMixed,
    PairwiseSkew,
}

impl TripleKind {
    /// Dimension of the family of lines meeting all three.
    pub fn transversal_dim(self) -> usize {
        match self {
            TripleKind::ConcurrentAndCoplanar
            | TripleKind::ConcurrentOnly
            | TripleKind::CoplanarOnly => 2,
            TripleKind::TwoConcurrentMixed | TripleKind::PairwiseSkew => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TripleClass {
    pub kind: TripleKind,
    pub point: Option<Concurrency>,
    pub plane: Option<Plane>,
    pub family_dim: usize,
}

/// Case analysis of three distinct lines by concurrency and coplanarity.
pub fn classify_triple(l1: &Line, l2: &Line, l3: &Line, tol: f64) -> Result<TripleClass> {
    let trio = [*l1, *l2, *l3];
    for i in 0..3 {
        for j in i + 1..3 {
            if trio[i].approx_eq(&trio[j], tol) {
                return Err(Error::Domain(format!("lines {i} and {j} coincide")));
            }
        }
    }
    let config = LineConfig::new(trio.to_vec());
    let point = common_point(&config, tol)?;
    let plane = common_plane(&config, tol)?;
    let kind = match (point.is_some(), plane.is_some()) {
        (true, true) => TripleKind::ConcurrentAndCoplanar,
        (true, false) => TripleKind::ConcurrentOnly,
        (false, true) => TripleKind::CoplanarOnly,
        (false, false) => {
            let any_meet = meets(l1, l2, tol) || meets(l1, l3, tol) || meets(l2, l3, tol);
            if any_meet {
                TripleKind::TwoConcurrentMixed
            } else {
                TripleKind::PairwiseSkew
            }
        }
    };
    Ok(TripleClass {
        kind,
        point,
        plane,
        family_dim: kind.transversal_dim(),
    })
}

/// Why [`transversal`] produced no line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransversalFailure {
    /// The base point lies on the first line.
    OnFirstLine,
    /// The base point lies on the second line.
    OnSecondLine,
    /// The base point and both lines are coplanar; the transversal through
    /// it is not unique.
    Coplanar,
    /// The transversal through the base point is horizontal.
    Horizontal,
    /// The constructed line fails the incidence check numerically.
    Residual,
}

/// The line through `q = l3(s)` meeting `l1` and `l2`: the intersection of
/// the planes spanned by `q` with each of them.
pub fn transversal(
    l1: &Line,
    l2: &Line,
    l3: &Line,
    s: f64,
    tol: f64,
) -> std::result::Result<Line, TransversalFailure> {
    let q = l3.point_at(s);
    let span_normal = |l: &Line| {
        let offset = l.point_at(0.0) - q;
        let dir = l.direction();
        (offset.cross(&dir), (1.0 + offset.norm()) * dir.norm())
    };
    let (n1, s1) = span_normal(l1);
    if n1.norm() <= tol * s1 {
        return Err(TransversalFailure::OnFirstLine);
    }
    let (n2, s2) = span_normal(l2);
    if n2.norm() <= tol * s2 {
        return Err(TransversalFailure::OnSecondLine);
    }
    let dir = n1.cross(&n2);
    if dir.norm() <= tol * n1.norm() * n2.norm() {
        return Err(TransversalFailure::Coplanar);
    }
    if dir.z.abs() <= tol * dir.norm() {
        return Err(TransversalFailure::Horizontal);
    }
    let (c, d) = (dir.x / dir.z, dir.y / dir.z);
    let line = Line::new(q.x - c * q.z, q.y - d * q.z, c, d);
    if [l1, l2, l3].iter().all(|l| meets(&line, l, tol)) {
        Ok(line)
    } else {
        Err(TransversalFailure::Residual)
    }
}

/// The line through `p` and `q`; `None` when it is horizontal.
pub fn line_through(p: &Point3, q: &Point3) -> Result<Option<Line>> {
    if p == q {
        return Err(Error::Domain("line_through needs two distinct points".into()));
    }
    let dz = q.z - p.z;
    if dz == 0.0 {
        return Ok(None);
    }
    let c = (q.x - p.x) / dz;
    let d = (q.y - p.y) / dz;
    Ok(Some(Line::new(p.x - c * p.z, p.y - d * p.z, c, d)))
}

/// Lines through `point` with directions `(c_i, d_i, 1)`.
pub fn lines_through_point(point: &Point3, directions: &[(f64, f64)]) -> Vec<Line> {
    directions
        .iter()
        .map(|&(c, d)| Line::new(point.x - c * point.z, point.y - d * point.z, c, d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORIGIN_VERTICAL: Line = Line::new(0.0, 0.0, 0.0, 0.0);

    #[test]
    fn residual_examples() {
        assert_eq!(meet_residual(&ORIGIN_VERTICAL, &Line::new(0.0, 0.0, 1.0, 0.0)), 0.0);
        // the z-axis and (1, t, t) never meet
        assert_eq!(meet_residual(&ORIGIN_VERTICAL, &Line::new(1.0, 0.0, 0.0, 1.0)), 1.0);
        let l = Line::new(1.5, -2.0, 0.25, 3.0);
        assert_eq!(meet_residual(&l, &l), 0.0);
    }

    #[test]
    fn residual_is_symmetric() {
        let l1 = Line::new(1.25, -3.5, 0.75, 2.0);
        let l2 = Line::new(-0.5, 4.0, -1.25, 0.125);
        assert_eq!(meet_residual(&l1, &l2), meet_residual(&l2, &l1));
    }

    #[test]
    fn intersection_graph_examples() {
        let through_origin = LineConfig::new(lines_through_point(
            &Point3::zeros(),
            &[(0.0, 0.0), (1.0, 0.0), (0.5, -2.0)],
        ));
        assert_eq!(
            intersection_graph(&through_origin, DEFAULT_TOL),
            Graph::complete(3)
        );
        let skew = LineConfig::new(vec![ORIGIN_VERTICAL, Line::new(1.0, 0.0, 0.0, 1.0)]);
        assert_eq!(intersection_graph(&skew, DEFAULT_TOL).m(), 0);
    }

    #[test]
    fn common_point_examples() {
        let pair = LineConfig::new(vec![ORIGIN_VERTICAL, Line::new(0.0, 0.0, 1.0, 0.0)]);
        let p = common_point(&pair, DEFAULT_TOL).unwrap().unwrap().point().unwrap();
        assert!(p.norm() < 1e-12);
        let parallel = LineConfig::new(vec![
            Line::new(0.0, 0.0, 1.0, 2.0),
            Line::new(3.0, 1.0, 1.0, 2.0),
            Line::new(-1.0, 5.0, 1.0, 2.0),
        ]);
        assert_eq!(
            common_point(&parallel, DEFAULT_TOL).unwrap(),
            Some(Concurrency::Parallel { c: 1.0, d: 2.0 })
        );
        let skew = LineConfig::new(vec![ORIGIN_VERTICAL, Line::new(1.0, 0.0, 0.0, 1.0)]);
        assert_eq!(common_point(&skew, DEFAULT_TOL).unwrap(), None);
        assert!(common_point(&LineConfig::new(vec![ORIGIN_VERTICAL]), DEFAULT_TOL).is_err());
    }

    #[test]
    fn common_plane_examples() {
        // (x, 0, y, 0) lies in the vertical plane y = 0
        let in_xz = LineConfig::new(vec![
            Line::new(1.0, 0.0, 2.0, 0.0),
            Line::new(-3.0, 0.0, 0.5, 0.0),
            Line::new(0.0, 0.0, -1.0, 0.0),
        ]);
        let plane = common_plane(&in_xz, DEFAULT_TOL).unwrap().unwrap();
        assert!((plane.normal[1].abs() - 1.0).abs() < 1e-12);
        assert!(plane.offset.abs() < 1e-12);
        assert!(plane.chart().is_none());

        let two = LineConfig::new(lines_through_point(
            &Point3::new(1.0, 2.0, 3.0),
            &[(0.5, 1.0), (-1.0, 2.0)],
        ));
        let plane = common_plane(&two, DEFAULT_TOL).unwrap().unwrap();
        assert!(plane.signed_distance(&Point3::new(1.0, 2.0, 3.0)).abs() < 1e-12);

        let skew = LineConfig::new(vec![ORIGIN_VERTICAL, Line::new(1.0, 0.0, 0.0, 1.0)]);
        assert!(common_plane(&skew, DEFAULT_TOL).unwrap().is_none());
    }

    #[test]
    fn chart_plane_round_trip() {
        let plane = Plane::from_chart(0.5, -2.0, 3.0);
        let (l, m, n) = plane.chart().unwrap();
        assert!((l - 0.5).abs() < 1e-12 && (m + 2.0).abs() < 1e-12 && (n - 3.0).abs() < 1e-12);
        // a line with 1 = λc + μd and -ν = λa + μb
        let line = Line::new(2.0, 2.0, 0.0, -0.5);
        assert!(plane.contains_line(&line, 1e-12));
    }

    #[test]
    fn classify_examples() {
        let origin = Point3::zeros();
        let conc = lines_through_point(&origin, &[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]);
        let class = classify_triple(&conc[0], &conc[1], &conc[2], DEFAULT_TOL).unwrap();
        assert_eq!(class.kind, TripleKind::ConcurrentOnly);
        assert_eq!(class.family_dim, 2);

        let copl = [
            Line::new(0.0, 0.0, 1.0, 0.0),
            Line::new(1.0, 0.0, -1.0, 0.0),
            Line::new(5.0, 0.0, 1.0, 0.0),
        ];
        // lines 0 and 2 are parallel, 1 crosses both: coplanar, no common point
        let class = classify_triple(&copl[0], &copl[1], &copl[2], DEFAULT_TOL).unwrap();
        assert_eq!(class.kind, TripleKind::CoplanarOnly);

        let skew = [
            Line::new(0.0, 0.0, 0.0, 0.0),
            Line::new(1.0, 0.0, 0.0, 1.0),
            Line::new(0.0, 2.0, 1.0, 0.0),
        ];
        let class = classify_triple(&skew[0], &skew[1], &skew[2], DEFAULT_TOL).unwrap();
        assert_eq!(class.kind, TripleKind::PairwiseSkew);
        assert_eq!(class.family_dim, 1);

        assert!(classify_triple(&skew[0], &skew[0], &skew[1], DEFAULT_TOL).is_err());
    }

    #[test]
    fn transversal_through_common_point() {
        let p = Point3::new(1.0, -2.0, 0.5);
        let ls = lines_through_point(&p, &[(0.3, 0.1), (-1.0, 2.0), (0.7, -0.4)]);
        let t = transversal(&ls[0], &ls[1], &ls[2], 3.0, DEFAULT_TOL).unwrap();
        assert!(t.contains_point(&p, 1e-10));
        assert!(t.contains_point(&ls[2].point_at(3.0), 1e-10));
        // s = p.z puts the base point on the shared point
        assert_eq!(
            transversal(&ls[0], &ls[1], &ls[2], 0.5, DEFAULT_TOL),
            Err(TransversalFailure::OnFirstLine)
        );
    }

    #[test]
    fn transversal_of_skew_lines() {
        let skew = [
            Line::new(0.0, 0.0, 0.0, 0.0),
            Line::new(1.0, 0.0, 0.0, 1.0),
            Line::new(0.0, 1.0, 1.0, 0.0),
        ];
        let t = transversal(&skew[0], &skew[1], &skew[2], 0.7, DEFAULT_TOL).unwrap();
        for l in &skew {
            assert!(relative_residual(&t, l) <= 1e-9);
        }
    }

    #[test]
    fn line_through_examples() {
        let l = line_through(&Point3::new(0.0, 0.0, 0.0), &Point3::new(0.0, 0.0, 1.0))
            .unwrap()
            .unwrap();
        assert_eq!(l, Line::new(0.0, 0.0, 0.0, 0.0));
        let l = line_through(&Point3::new(1.0, 0.0, 0.0), &Point3::new(1.0, 1.0, 1.0))
            .unwrap()
            .unwrap();
        assert_eq!(l, Line::new(1.0, 0.0, 0.0, 1.0));
        assert_eq!(
            line_through(&Point3::new(0.0, 0.0, 1.0), &Point3::new(1.0, 0.0, 1.0)).unwrap(),
            None
        );
        assert!(line_through(&Point3::zeros(), &Point3::zeros()).is_err());
    }

    #[test]
    fn config_json() {
        let cfg = LineConfig::from_json(r#"{"lines": [[1, 0, 0, 1], [0.5, -2, 3, 4]]}"#).unwrap();
        assert_eq!(cfg.lines[1], Line::new(0.5, -2.0, 3.0, 4.0));
        assert_eq!(cfg.to_json(), r#"{"lines":[[1.0,0.0,0.0,1.0],[0.5,-2.0,3.0,4.0]]}"#);
        assert!(LineConfig::from_json(r#"{"lines": [[1, 0, 0]]}"#).is_err());
    }
}
