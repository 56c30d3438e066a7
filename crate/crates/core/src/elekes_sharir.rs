//! The Elekes–Sharir transform between ordered pairs of planar points and
//! non-horizontal lines in three-space.
//!
//! An orientation-preserving rigid motion of the plane with centre `c` and
//! counterclockwise angle `θ` is the point `(c, cot(θ/2))`. The rotations
//! taking `a` to `b` form the line `{(u + t v, t)}` with `u = (a + b) / 2`
//! and `v = rot90ccw(b - a) / 2`. Under this map
//!
//! ```text
//! meet_residual(to_line(a, b), to_line(c, d)) = (|b - d|^2 - |a - c|^2) / 4
//! ```
//!
//! so equal distances correspond exactly to meeting lines.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Line, LineConfig, Point3};
use crate::numeric::Embedding;

pub type Point2 = [f64; 2];

fn rot90ccw(p: Point2) -> Point2 {
    [-p[1], p[0]]
}

fn rot90cw(p: Point2) -> Point2 {
    [p[1], -p[0]]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointPair {
    pub a: Point2,
    pub b: Point2,
}

impl PointPair {
    pub fn new(a: Point2, b: Point2) -> Self {
        PointPair { a, b }
    }
}

/// The line of rotations taking `a` to `b`.
pub fn to_line(pair: &PointPair) -> Line {
    let PointPair { a, b } = *pair;
    let u = [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])];
    let r = rot90ccw([b[0] - a[0], b[1] - a[1]]);
    Line::new(u[0], u[1], 0.5 * r[0], 0.5 * r[1])
}

/// Inverse of [`to_line`]: `a = u - rot90cw(v)`, `b = u + rot90cw(v)`.
pub fn from_line(line: &Line) -> PointPair {
    let w = rot90cw([line.c, line.d]);
    PointPair {
        a: [line.a - w[0], line.b - w[1]],
        b: [line.a + w[0], line.b + w[1]],
    }
}

/// Rotation about `center` by `θ = 2 arccot(cot_half)`, `θ ∈ (0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Rotation {
    pub center: Point2,
    pub cot_half: f64,
}

impl Rotation {
    pub fn angle(&self) -> f64 {
        2.0 * 1f64.atan2(self.cot_half)
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        let (s, c) = self.angle().sin_cos();
        let dx = p[0] - self.center[0];
        let dy = p[1] - self.center[1];
        [
            self.center[0] + c * dx - s * dy,
            self.center[1] + s * dx + c * dy,
        ]
    }

    /// The point of three-space representing this rotation.
    pub fn as_point(&self) -> Point3 {
        Point3::new(self.center[0], self.center[1], self.cot_half)
    }
}

pub fn rotation_at(point: &Point3) -> Rotation {
    Rotation {
        center: [point.x, point.y],
        cot_half: point.z,
    }
}

/// `x -> matrix * x + translation` with an orthogonal `matrix`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PlanarMotion {
    pub matrix: [[f64; 2]; 2],
    pub translation: Point2,
}

impl PlanarMotion {
    /// Rotation by `angle` (about the origin), optionally preceded by the
    /// reflection `(x, y) -> (x, -y)`, then translation.
    pub fn from_angle(angle: f64, orientation: i8, translation: Point2) -> Self {
        let (s, c) = angle.sin_cos();
        let f = if orientation < 0 { -1.0 } else { 1.0 };
        PlanarMotion {
            matrix: [[c, -s * f], [s, c * f]],
            translation,
        }
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        let m = &self.matrix;
        [
            m[0][0] * p[0] + m[0][1] * p[1] + self.translation[0],
            m[1][0] * p[0] + m[1][1] * p[1] + self.translation[1],
        ]
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// +1 for rotations and translations, -1 for reflections and glides.
    pub fn orientation(&self) -> i8 {
        if self.determinant() >= 0.0 {
            1
        } else {
            -1
        }
    }

    /// Orthogonality defect `max |M^T M - I|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let m = &self.matrix;
        let g00 = m[0][0] * m[0][0] + m[1][0] * m[1][0] - 1.0;
        let g11 = m[0][1] * m[0][1] + m[1][1] * m[1][1] - 1.0;
        let g01 = m[0][0] * m[0][1] + m[1][0] * m[1][1];
        g00.abs().max(g11.abs()).max(g01.abs())
    }

    /// The centre/angle form of an orientation-preserving motion; `None`
    /// for reflections and for pure translations (angle 0).
    pub fn as_rotation(&self) -> Option<Rotation> {
        if self.orientation() < 0 {
            return None;
        }
        let angle = self.matrix[1][0].atan2(self.matrix[0][0]);
        let half = 0.5 * angle;
        if half.sin().abs() < 1e-15 {
            return None;
        }
        // centre solves (I - M) c = t
        let m = &self.matrix;
        let (a, b, c, d) = (1.0 - m[0][0], -m[0][1], -m[1][0], 1.0 - m[1][1]);
        let det = a * d - b * c;
        let t = self.translation;
        Some(Rotation {
            center: [(d * t[0] - b * t[1]) / det, (a * t[1] - c * t[0]) / det],
            cot_half: half.cos() / half.sin(),
        })
    }
}

/// Componentwise transform of a pair of embeddings into a line configuration.
pub fn phi(p: &Embedding, p_prime: &Embedding) -> Result<LineConfig> {
    if p.len() != p_prime.len() {
        return Err(Error::Domain(format!(
            "embeddings differ in size: {} vs {}",
            p.len(),
            p_prime.len()
        )));
    }
    Ok(LineConfig::new(
        p.points
            .iter()
            .zip(&p_prime.points)
            .map(|(&a, &b)| to_line(&PointPair::new(a, b)))
            .collect(),
    ))
}

/// Inverse of [`phi`].
pub fn phi_inverse(config: &LineConfig) -> (Embedding, Embedding) {
    let (a, b): (Vec<Point2>, Vec<Point2>) = config
        .lines
        .iter()
        .map(|l| {
            let pair = from_line(l);
            (pair.a, pair.b)
        })
        .unzip();
    (Embedding::new(a), Embedding::new(b))
}

/// Pair file: `{"p": [[x, y], ...], "p_prime": [[x, y], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairFile {
    pub p: Vec<Point2>,
    pub p_prime: Vec<Point2>,
}

fn dist(a: Point2, b: Point2) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// The rigid motion of the requested orientation taking `a[i]` to `b[i]`.
///
/// Congruence is checked pairwise first; the motion is then the
/// orientation-constrained orthogonal Procrustes fit, accepted when every
/// point lands within `tol * (1 + max |coord|)` of its target.
pub fn recover_motion(a: &[Point2], b: &[Point2], orientation: i8, tol: f64) -> Result<PlanarMotion> {
    if a.len() != b.len() || a.len() < 2 {
        return Err(Error::Domain(format!(
            "need two point lists of equal size >= 2, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    if orientation != 1 && orientation != -1 {
        return Err(Error::Domain(format!("orientation must be +1 or -1, got {orientation}")));
    }
    let scale = 1.0
        + a.iter()
            .chain(b)
            .fold(0.0f64, |m, p| m.max(p[0].abs()).max(p[1].abs()));
    let mut worst = (0, 0, 0.0f64);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let gap = (dist(a[i], a[j]) - dist(b[i], b[j])).abs();
            if gap > worst.2 {
                worst = (i, j, gap);
            }
        }
    }
    if worst.2 > tol * scale {
        return Err(Error::NotCongruent {
            i: worst.0,
            j: worst.1,
            gap: worst.2,
        });
    }

    let n = a.len() as f64;
    let centroid = |ps: &[Point2]| {
        let s = ps.iter().fold([0.0, 0.0], |s, p| [s[0] + p[0], s[1] + p[1]]);
        [s[0] / n, s[1] / n]
    };
    let (ca, cb) = (centroid(a), centroid(b));
    let flip = if orientation < 0 { -1.0 } else { 1.0 };
    let (mut dot, mut cross) = (0.0, 0.0);
    for (p, q) in a.iter().zip(b) {
        let x = [p[0] - ca[0], flip * (p[1] - ca[1])];
        let y = [q[0] - cb[0], q[1] - cb[1]];
        dot += x[0] * y[0] + x[1] * y[1];
        cross += x[0] * y[1] - x[1] * y[0];
    }
    let angle = cross.atan2(dot);
    let linear = PlanarMotion::from_angle(angle, orientation, [0.0, 0.0]);
    let moved = linear.apply(ca);
    let motion = PlanarMotion {
        translation: [cb[0] - moved[0], cb[1] - moved[1]],
        ..linear
    };
    let residual = a
        .iter()
        .zip(b)
        .map(|(&p, &q)| dist(motion.apply(p), q))
        .fold(0.0, f64::max);
    if residual > tol * scale {
        return Err(Error::OrientationMismatch {
            orientation,
            residual,
        });
    }
    Ok(motion)
}

/// Root-mean-square distance of the points from their best-fit line.
pub fn collinearity_residual(points: &[Point2]) -> f64 {
    if points.len() < 3 {
        return 0.0;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p[0]).sum::<f64>() / n;
    let my = points.iter().map(|p| p[1]).sum::<f64>() / n;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for p in points {
        let (dx, dy) = (p[0] - mx, p[1] - my);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    let half_trace = 0.5 * (sxx + syy);
    let disc = (0.25 * (sxx - syy).powi(2) + sxy * sxy).sqrt();
    ((half_trace - disc).max(0.0) / n).sqrt()
}
