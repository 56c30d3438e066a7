//! Rigidity matrices, Jacobian ranks and local-dimension reports.
//!
//! Floating ranks threshold singular values at `tol * sigma_max *
//! max(rows, cols)`. Every rank that matters can be recomputed exactly with
//! [`exact::rank_exact`] (integer input) or [`exact::rank_exact_f64`]
//! (the exact binary value of a float matrix).

pub mod exact;
pub mod families;
mod oracle;

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::elekes_sharir::Point2;
use crate::error::{Error, Result};
use crate::geometry::{meet_residual, pair_scale, LineConfig};
use crate::graph::Graph;
use crate::seed;

pub use exact::{rank_exact, rank_exact_f64, IntMatrix};
pub use oracle::global_rigidity_oracle;

/// Half-width of the integer box random embeddings are drawn from.
pub const EMBEDDING_BOX: i64 = 10_000;

/// Planar points indexed by graph vertices. Repeated points are allowed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Embedding {
    pub points: Vec<Point2>,
}

impl Embedding {
    pub fn new(points: Vec<Point2>) -> Self {
        Embedding { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `n` points with integer coordinates drawn uniformly from
    /// `[-EMBEDDING_BOX, EMBEDDING_BOX]`.
    pub fn random_integer(n: usize, rng: &mut impl Rng) -> Self {
        let mut coord = || rng.gen_range(-EMBEDDING_BOX..=EMBEDDING_BOX) as f64;
        Embedding::new((0..n).map(|_| [coord(), coord()]).collect())
    }

    /// True when every coordinate is an integer of magnitude below `2^31`,
    /// so that rigidity-matrix entries are exact integers.
    pub fn is_integral(&self) -> bool {
        self.points
            .iter()
            .flatten()
            .all(|x| x.fract() == 0.0 && x.abs() < 2.0e9)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("line {}", e.line()), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("embedding serializes")
    }

    fn max_abs(&self) -> f64 {
        self.points.iter().flatten().fold(0.0, |m, x| m.max(x.abs()))
    }
}

/// Local-dimension certificate at a sampled point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionReport {
    pub ambient_dim: usize,
    pub constraint_count: usize,
    pub jacobian_rank: usize,
    pub local_dim_estimate: usize,
    pub tol: f64,
    /// Full row rank (and, when computed, the exact rank agrees).
    pub certified: bool,
    pub exact_rank: Option<usize>,
    pub rank_deficiency: usize,
    pub max_residual: f64,
}

impl DimensionReport {
    fn new(jac: &DMatrix<f64>, tol: f64, max_residual: f64, exact_rank: Option<usize>) -> Self {
        let rank = numeric_rank(jac, tol);
        let rows = jac.nrows();
        let full = rank == rows && exact_rank.map_or(true, |r| r == rows);
        DimensionReport {
            ambient_dim: jac.ncols(),
            constraint_count: rows,
            jacobian_rank: rank,
            local_dim_estimate: jac.ncols() - rank,
            tol,
            certified: full,
            exact_rank,
            rank_deficiency: rows - rank,
            max_residual,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Numeric rank by singular-value thresholding.
pub fn numeric_rank(m: &DMatrix<f64>, tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = crate::linalg::singular_values(m);
    let max = sv[0];
    if max == 0.0 {
        return 0;
    }
    let cut = tol * max * m.nrows().max(m.ncols()) as f64;
    sv.iter().filter(|&&s| s > cut).count()
}

fn check_size(g: &Graph, p: &Embedding, what: &str) -> Result<()> {
    if p.len() != g.n() {
        return Err(Error::Domain(format!(
            "{what} has {} points but the graph has {} vertices",
            p.len(),
            g.n()
        )));
    }
    Ok(())
}

/// Squared edge lengths in canonical edge order.
pub fn edge_function(g: &Graph, p: &Embedding) -> Result<Vec<f64>> {
    check_size(g, p, "embedding")?;
    Ok(g.edges()
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (p.points[i], p.points[j]);
            (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)
        })
        .collect())
}

/// The `m x 2n` Jacobian of [`edge_function`].
pub fn rigidity_matrix(g: &Graph, p: &Embedding) -> Result<DMatrix<f64>> {
    check_size(g, p, "embedding")?;
    let mut r = DMatrix::zeros(g.m(), 2 * g.n());
    for (row, &(i, j)) in g.edges().iter().enumerate() {
        for k in 0..2 {
            let diff = 2.0 * (p.points[i][k] - p.points[j][k]);
            r[(row, 2 * i + k)] = diff;
            r[(row, 2 * j + k)] = -diff;
        }
    }
    Ok(r)
}

/// Max over `trials` random integer embeddings of the rigidity-matrix rank.
pub fn rigidity_rank(g: &Graph, trials: usize, seed: u64) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::Domain(format!("rigidity rank needs n >= 2, got {}", g.n())));
    }
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    let mut best = 0;
    for t in 0..trials {
        let p = Embedding::random_integer(g.n(), &mut seed::rng(seed, t as u64));
        best = best.max(numeric_rank(&rigidity_matrix(g, &p)?, crate::geometry::DEFAULT_TOL));
        if best == g.m().min(2 * g.n() - 3) {
            break;
        }
    }
    Ok(best)
}

pub fn is_rigid_numeric(g: &Graph, trials: usize, seed: u64) -> Result<bool> {
    Ok(rigidity_rank(g, trials, seed)? == 2 * g.n() - 3)
}

fn check_lines(g: &Graph, x: &LineConfig) -> Result<()> {
    if x.len() != g.n() {
        return Err(Error::Domain(format!(
            "configuration has {} lines but the graph has {} vertices",
            x.len(),
            g.n()
        )));
    }
    Ok(())
}

/// Incidence residuals `g(l_i, l_j)` in canonical edge order.
pub fn line_system_residuals(g: &Graph, x: &LineConfig) -> Result<Vec<f64>> {
    check_lines(g, x)?;
    Ok(g.edges()
        .iter()
        .map(|&(i, j)| meet_residual(&x.lines[i], &x.lines[j]))
        .collect())
}

/// Largest `|g(l_i, l_j)| / pair_scale` over the edges, with the edge.
pub fn worst_line_residual(g: &Graph, x: &LineConfig) -> Result<(f64, Option<(usize, usize)>)> {
    check_lines(g, x)?;
    let mut worst = (0.0, None);
    for &(i, j) in g.edges() {
        let (li, lj) = (&x.lines[i], &x.lines[j]);
        let r = meet_residual(li, lj).abs() / pair_scale(li, lj);
        if worst.1.is_none() || r > worst.0 {
            worst = (r, Some((i, j)));
        }
    }
    Ok(worst)
}

/// The `m x 4n` Jacobian of the incidence system.
pub fn line_system_jacobian(g: &Graph, x: &LineConfig) -> Result<DMatrix<f64>> {
    check_lines(g, x)?;
    let mut jac = DMatrix::zeros(g.m(), 4 * g.n());
    for (row, &(i, j)) in g.edges().iter().enumerate() {
        let (li, lj) = (&x.lines[i], &x.lines[j]);
        let grad = [li.d - lj.d, lj.c - li.c, lj.b - li.b, li.a - lj.a];
        for k in 0..4 {
            jac[(row, 4 * i + k)] = grad[k];
            jac[(row, 4 * j + k)] = -grad[k];
        }
    }
    Ok(jac)
}

/// Rank report for the incidence system at `x`. With `exact`, the exact
/// rank of the (binary) Jacobian entries is computed as well.
pub fn line_system_dimension(g: &Graph, x: &LineConfig, tol: f64, exact: bool) -> Result<DimensionReport> {
    let (worst, edge) = worst_line_residual(g, x)?;
    if worst > tol {
        let (i, j) = edge.expect("a violated edge exists");
        return Err(Error::Precondition(format!(
            "lines {i} and {j} do not meet: relative residual {worst:e} > {tol:e}"
        )));
    }
    let jac = line_system_jacobian(g, x)?;
    let exact_rank = exact.then(|| rank_exact_f64(&jac));
    Ok(DimensionReport::new(&jac, tol, worst, exact_rank))
}

/// The `m x 4n` Jacobian of `(p, p') -> f_G(p) - f_G(p')`, columns ordered
/// as all of `p` followed by all of `p'`.
pub fn pair_system_jacobian(g: &Graph, p: &Embedding, p_prime: &Embedding) -> Result<DMatrix<f64>> {
    let r = rigidity_matrix(g, p)?;
    let r_prime = rigidity_matrix(g, p_prime)?;
    let n2 = 2 * g.n();
    let mut jac = DMatrix::zeros(g.m(), 2 * n2);
    jac.view_mut((0, 0), (g.m(), n2)).copy_from(&r);
    jac.view_mut((0, n2), (g.m(), n2)).copy_from(&(-r_prime));
    Ok(jac)
}

/// Rank report for the pair system at `(p, p')`. With `exact`, the rank is
/// recomputed exactly (integer arithmetic when both embeddings are integral).
pub fn pair_system_dimension(
    g: &Graph,
    p: &Embedding,
    p_prime: &Embedding,
    tol: f64,
    exact: bool,
) -> Result<DimensionReport> {
    check_size(g, p_prime, "second embedding")?;
    let f = edge_function(g, p)?;
    let f_prime = edge_function(g, p_prime)?;
    let scale = 1.0 + p.max_abs().max(p_prime.max_abs()).powi(2);
    let mut worst = 0.0f64;
    for (k, (a, b)) in f.iter().zip(&f_prime).enumerate() {
        let r = (a - b).abs() / scale;
        if r > tol {
            let (i, j) = g.edges()[k];
            return Err(Error::Precondition(format!(
                "edge ({i}, {j}) has different lengths: {a} vs {b}"
            )));
        }
        worst = worst.max(r);
    }
    let jac = pair_system_jacobian(g, p, p_prime)?;
    let exact_rank = exact.then(|| match IntMatrix::from_f64(&jac) {
        Some(m) => rank_exact(&m),
        None => rank_exact_f64(&jac),
    });
    Ok(DimensionReport::new(&jac, tol, worst, exact_rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Line;
    use crate::graph::generate;

    fn emb(points: &[[f64; 2]]) -> Embedding {
        Embedding::new(points.to_vec())
    }

    #[test]
    fn edge_function_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(edge_function(&k2, &emb(&[[0.0, 0.0], [3.0, 4.0]])).unwrap(), vec![25.0]);
        let c4 = generate("cycle", &[4]).unwrap();
        let square = emb(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
        assert_eq!(edge_function(&c4, &square).unwrap(), vec![1.0; 4]);
        assert!(edge_function(&c4, &emb(&[[0.0, 0.0]])).is_err());
    }

    #[test]
    fn rigidity_rank_examples() {
        assert_eq!(rigidity_rank(&Graph::complete(2), 5, 0).unwrap(), 1);
        assert_eq!(rigidity_rank(&generate("cycle", &[4]).unwrap(), 5, 0).unwrap(), 4);
        assert!(is_rigid_numeric(&Graph::complete(3), 5, 0).unwrap());
        assert!(!is_rigid_numeric(&generate("cycle", &[4]).unwrap(), 5, 0).unwrap());
        assert!(is_rigid_numeric(&Graph::complete(4), 5, 0).unwrap());
        assert!(rigidity_rank(&Graph::empty(1), 5, 0).is_err());
        assert!(rigidity_rank(&Graph::complete(3), 0, 0).is_err());
    }

    #[test]
    fn k2_line_system() {
        let k2 = Graph::complete(2);
        let x = LineConfig::new(vec![Line::new(0.0, 0.0, 0.0, 0.0), Line::new(0.0, 0.0, 1.0, 0.0)]);
        let rep = line_system_dimension(&k2, &x, 1e-8, true).unwrap();
        assert_eq!(rep.jacobian_rank, 1);
        assert_eq!(rep.local_dim_estimate, 7);
        assert!(rep.certified);
        assert_eq!(rep.exact_rank, Some(1));
    }

    #[test]
    fn line_system_rejects_skew_pair() {
        let k2 = Graph::complete(2);
        let x = LineConfig::new(vec![Line::new(0.0, 0.0, 0.0, 0.0), Line::new(1.0, 0.0, 0.0, 1.0)]);
        let err = line_system_dimension(&k2, &x, 1e-8, false).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("lines 0 and 1")));
    }

    #[test]
    fn pair_system_k2() {
        let k2 = Graph::complete(2);
        let p = emb(&[[0.0, 0.0], [3.0, 4.0]]);
        let q = emb(&[[1.0, 1.0], [6.0, 1.0]]);
        let rep = pair_system_dimension(&k2, &p, &q, 1e-8, true).unwrap();
        assert_eq!(rep.local_dim_estimate, 7);
        assert_eq!(rep.exact_rank, Some(1));
        let far = emb(&[[0.0, 0.0], [1.0, 0.0]]);
        assert!(pair_system_dimension(&k2, &p, &far, 1e-8, false).is_err());
    }

    #[test]
    fn thresholded_rank() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 1e-14]);
        assert_eq!(numeric_rank(&m, 1e-8), 1);
        assert_eq!(numeric_rank(&DMatrix::zeros(3, 2), 1e-8), 0);
        assert_eq!(numeric_rank(&DMatrix::zeros(0, 2), 1e-8), 0);
    }
}
