//! Polynomial parametrizations of the pairwise-meeting line families:
//! lines through a common point, parallel lines, and lines in a common
//! plane `z = lambda x + mu y + nu`.
//!
//! Parameter layouts:
//! - concurrent: `(x, y, z, c_1, d_1, ..., c_n, d_n)`, lines
//!   `(x - c_i z, y - d_i z, c_i, d_i)`;
//! - parallel: `(c_0, d_0, a_1, b_1, ..., a_n, b_n)`, lines `(a_i, b_i, c_0, d_0)`;
//! - coplanar: `(lambda, mu, nu, a_1, c_1, ..., a_n, c_n)`, lines
//!   `(a_i, -(nu + lambda a_i) / mu, c_i, (1 - lambda c_i) / mu)`.

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::exact::IntMatrix;
use crate::error::{Error, Result};
use crate::geometry::{Line, LineConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Concurrent,
    Parallel,
    Coplanar,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Concurrent, Family::Parallel, Family::Coplanar];

    pub fn parameter_count(self, n: usize) -> usize {
        match self {
            Family::Concurrent | Family::Coplanar => 2 * n + 3,
            Family::Parallel => 2 * n + 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Concurrent => "concurrent",
            Family::Parallel => "parallel",
            Family::Coplanar => "coplanar",
        }
    }

    /// Integer parameters in `[-bound, bound]`; `mu` is never zero.
    pub fn random_params(self, n: usize, bound: i64, rng: &mut impl Rng) -> Vec<i64> {
        let mut params: Vec<i64> = (0..self.parameter_count(n))
            .map(|_| rng.gen_range(-bound..=bound))
            .collect();
        if self == Family::Coplanar {
            while params[1] == 0 {
                params[1] = rng.gen_range(-bound..=bound);
            }
        }
        params
    }

    fn check(self, n: usize, len: usize) -> Result<()> {
        if len != self.parameter_count(n) {
            return Err(Error::Domain(format!(
                "{} family on {n} lines takes {} parameters, got {len}",
                self.name(),
                self.parameter_count(n)
            )));
        }
        Ok(())
    }

    pub fn evaluate(self, n: usize, params: &[f64]) -> Result<LineConfig> {
        self.check(n, params.len())?;
        let lines = (0..n)
            .map(|i| match self {
                Family::Concurrent => {
                    let (x, y, z) = (params[0], params[1], params[2]);
                    let (c, d) = (params[3 + 2 * i], params[4 + 2 * i]);
                    Line::new(x - c * z, y - d * z, c, d)
                }
                Family::Parallel => Line::new(params[2 + 2 * i], params[3 + 2 * i], params[0], params[1]),
                Family::Coplanar => {
                    let (lambda, mu, nu) = (params[0], params[1], params[2]);
                    let (a, c) = (params[3 + 2 * i], params[4 + 2 * i]);
                    Line::new(a, -(nu + lambda * a) / mu, c, (1.0 - lambda * c) / mu)
                }
            })
            .collect();
        Ok(LineConfig::new(lines))
    }

    /// The `4n x k` Jacobian of [`Family::evaluate`].
    pub fn jacobian(self, n: usize, params: &[f64]) -> Result<DMatrix<f64>> {
        self.check(n, params.len())?;
        let mut jac = DMatrix::zeros(4 * n, params.len());
        for i in 0..n {
            let (ra, rb, rc, rd) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
            let (p, q) = (self.first_slot(i), self.first_slot(i) + 1);
            match self {
                Family::Concurrent => {
                    let z = params[2];
                    let (c, d) = (params[p], params[q]);
                    jac[(ra, 0)] = 1.0;
                    jac[(ra, 2)] = -c;
                    jac[(ra, p)] = -z;
                    jac[(rb, 1)] = 1.0;
                    jac[(rb, 2)] = -d;
                    jac[(rb, q)] = -z;
                    jac[(rc, p)] = 1.0;
                    jac[(rd, q)] = 1.0;
                }
                Family::Parallel => {
                    jac[(ra, p)] = 1.0;
                    jac[(rb, q)] = 1.0;
                    jac[(rc, 0)] = 1.0;
                    jac[(rd, 1)] = 1.0;
                }
                Family::Coplanar => {
                    let (lambda, mu, nu) = (params[0], params[1], params[2]);
                    let (a, c) = (params[p], params[q]);
                    let mu2 = mu * mu;
                    jac[(ra, p)] = 1.0;
                    jac[(rb, 0)] = -a / mu;
                    jac[(rb, 1)] = (nu + lambda * a) / mu2;
                    jac[(rb, 2)] = -1.0 / mu;
                    jac[(rb, p)] = -lambda / mu;
                    jac[(rc, q)] = 1.0;
                    jac[(rd, 0)] = -c / mu;
                    jac[(rd, 1)] = -(1.0 - lambda * c) / mu2;
                    jac[(rd, q)] = -lambda / mu;
                }
            }
        }
        Ok(jac)
    }

    /// Integer matrix with the same rank as the Jacobian at integer
    /// parameters. Coplanar rows are multiplied by `mu^2`.
    pub fn jacobian_int(self, n: usize, params: &[i64]) -> Result<IntMatrix> {
        self.check(n, params.len())?;
        let mut jac = IntMatrix::zeros(4 * n, params.len());
        for i in 0..n {
            let (ra, rb, rc, rd) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
            let (p, q) = (self.first_slot(i), self.first_slot(i) + 1);
            match self {
                Family::Concurrent => {
                    let z = params[2];
                    jac.set(ra, 0, 1);
                    jac.set(ra, 2, -params[p]);
                    jac.set(ra, p, -z);
                    jac.set(rb, 1, 1);
                    jac.set(rb, 2, -params[q]);
                    jac.set(rb, q, -z);
                    jac.set(rc, p, 1);
                    jac.set(rd, q, 1);
                }
                Family::Parallel => {
                    jac.set(ra, p, 1);
                    jac.set(rb, q, 1);
                    jac.set(rc, 0, 1);
                    jac.set(rd, 1, 1);
                }
                Family::Coplanar => {
                    let (lambda, mu, nu) = (params[0], params[1], params[2]);
                    if mu == 0 {
                        return Err(Error::Domain("coplanar family needs mu != 0".into()));
                    }
                    let (a, c) = (params[p], params[q]);
                    let mu2 = mu * mu;
                    jac.set(ra, p, mu2);
                    jac.set(rb, 0, -a * mu);
                    jac.set(rb, 1, nu + lambda * a);
                    jac.set(rb, 2, -mu);
                    jac.set(rb, p, -lambda * mu);
                    jac.set(rc, q, mu2);
                    jac.set(rd, 0, -c * mu);
                    jac.set(rd, 1, -(1 - lambda * c));
                    jac.set(rd, q, -lambda * mu);
                }
            }
        }
        Ok(jac)
    }

    fn first_slot(self, i: usize) -> usize {
        match self {
            Family::Concurrent | Family::Coplanar => 3 + 2 * i,
            Family::Parallel => 2 + 2 * i,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{common_plane, common_point, intersection_graph, Concurrency};
    use crate::numeric::{numeric_rank, rank_exact};
    use crate::seed;

    #[test]
    fn evaluated_families_pairwise_meet() {
        let mut rng = seed::rng(7, 0);
        for family in Family::ALL {
            let params: Vec<f64> = family
                .random_params(5, 20, &mut rng)
                .into_iter()
                .map(|v| v as f64)
                .collect();
            let config = family.evaluate(5, &params).unwrap();
            assert!(intersection_graph(&config, 1e-9).is_complete());
            match family {
                Family::Concurrent => assert!(matches!(
                    common_point(&config, 1e-9).unwrap(),
                    Some(Concurrency::At { .. })
                )),
                Family::Parallel => assert!(matches!(
                    common_point(&config, 1e-9).unwrap(),
                    Some(Concurrency::Parallel { .. })
                )),
                Family::Coplanar => assert!(common_plane(&config, 1e-9).unwrap().is_some()),
            }
        }
    }

    #[test]
    fn float_and_integer_jacobians_agree_in_rank() {
        let mut rng = seed::rng(8, 0);
        for family in Family::ALL {
            for n in 2..6 {
                let ints = family.random_params(n, 50, &mut rng);
                let floats: Vec<f64> = ints.iter().map(|&v| v as f64).collect();
                let r_float = numeric_rank(&family.jacobian(n, &floats).unwrap(), 1e-8);
                let r_exact = rank_exact(&family.jacobian_int(n, &ints).unwrap());
                assert_eq!(r_float, r_exact);
                assert_eq!(r_exact, family.parameter_count(n));
            }
        }
    }

    #[test]
    fn wrong_parameter_count() {
        assert!(Family::Parallel.evaluate(3, &[0.0; 7]).is_err());
    }
}
