//! Dense SVD through `faer`, on nalgebra matrices.
//!
//! nalgebra's own bidiagonal SVD occasionally stops with singular values
//! wrong in the fifth digit, which is fatal for rank decisions.

use faer::Mat;
use nalgebra::{DMatrix, DVector};

fn to_faer(m: &DMatrix<f64>) -> Mat<f64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// Singular values in non-increasing order.
pub fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    match to_faer(m).singular_values() {
        Ok(sv) => sv,
        Err(_) => {
            let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
            sv.sort_by(|a, b| b.total_cmp(a));
            sv
        }
    }
}

/// Thin SVD `m = U diag(s) V^T`.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: DMatrix<f64>,
    pub s: Vec<f64>,
    pub v: DMatrix<f64>,
}

impl Svd {
    /// `None` when the iteration fails to converge (non-finite input).
    pub fn new(m: &DMatrix<f64>) -> Option<Svd> {
        if m.is_empty() {
            return None;
        }
        let svd = to_faer(m).thin_svd().ok()?;
        let (u, v) = (svd.U(), svd.V());
        let k = m.nrows().min(m.ncols());
        Some(Svd {
            u: DMatrix::from_fn(m.nrows(), k, |i, j| u[(i, j)]),
            s: (0..k).map(|i| svd.S()[i]).collect(),
            v: DMatrix::from_fn(m.ncols(), k, |i, j| v[(i, j)]),
        })
    }

    pub fn max(&self) -> f64 {
        self.s.first().copied().unwrap_or(0.0)
    }

    /// Least-norm solution of `m x = b`, dropping singular values `<= cut`.
    pub fn solve(&self, b: &DVector<f64>, cut: f64) -> DVector<f64> {
        let mut x = DVector::zeros(self.v.nrows());
        for (k, &s) in self.s.iter().enumerate() {
            if s > cut {
                x += self.v.column(k) * (self.u.column(k).dot(b) / s);
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accurate_on_nalgebra_trouble_case() {
        let lines = [
            [-0.04805564880371094, -0.19344520568847656, 0.008520126342773438, 0.0023784637451171875],
            [0.3523693084716797, -0.20290184020996094, -0.09970283508300781, 0.0049343109130859375],
            [0.07248115539550781, 0.2313976287841797, -0.024057388305664063, -0.11244392395019531],
            [-0.32766151428222656, -0.4651470184326172, 0.08408927917480469, 0.07581138610839844],
        ];
        let mut m = DMatrix::zeros(8, 3);
        let mut rhs = DVector::zeros(8);
        for (i, l) in lines.iter().enumerate() {
            m[(2 * i, 0)] = 1.0;
            m[(2 * i, 2)] = -l[2];
            rhs[2 * i] = l[0];
            m[(2 * i + 1, 1)] = 1.0;
            m[(2 * i + 1, 2)] = -l[3];
            rhs[2 * i + 1] = l[1];
        }
        let sv = singular_values(&m);
        assert!((sv[1] - 2.0).abs() < 1e-12, "{sv:?}");
        let svd = Svd::new(&m).unwrap();
        let x = svd.solve(&rhs, 1e-14 * svd.max());
        assert!((&m * &x - &rhs).amax() < 1e-14);
        assert!((x[2] - 3.7).abs() < 1e-12);
    }

    #[test]
    fn least_norm_on_rank_deficient() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 1.0]);
        let svd = Svd::new(&m).unwrap();
        let x = svd.solve(&DVector::from_vec(vec![2.0, 2.0]), 1e-12);
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
        assert_eq!(singular_values(&DMatrix::<f64>::zeros(0, 3)), Vec::<f64>::new());
    }
}
