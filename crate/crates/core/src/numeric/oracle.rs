//! Randomized global-rigidity test through equilibrium stresses, computed
//! exactly over a random prime field.

use super::exact::{mul_mod, random_prime, IntMatrix, ModMatrix};
use super::{is_rigid_numeric, rigidity_matrix, Embedding};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed;
use rand::Rng;

/// Rank of the stress matrix of a random equilibrium stress at a random
/// integer embedding, reduced modulo a random prime.
fn stress_rank(g: &Graph, seed: u64) -> Result<usize> {
    let mut rng = seed::rng(seed, 0);
    let p = Embedding::random_integer(g.n(), &mut rng);
    let r = IntMatrix::from_f64(&rigidity_matrix(g, &p)?)
        .ok_or_else(|| Error::InvariantViolation("rigidity matrix is not integral".into()))?;
    let prime = random_prime(&mut rng);
    let stresses = r.to_mod(prime).transpose().kernel();
    let mut omega = vec![0u64; g.m()];
    for basis in &stresses {
        let coef = rng.gen_range(1..prime);
        for (w, &b) in omega.iter_mut().zip(basis) {
            *w = (*w + mul_mod(coef, b, prime)) % prime;
        }
    }
    let mut stress = ModMatrix::zeros(g.n(), g.n(), prime);
    for (&(i, j), &w) in g.edges().iter().zip(&omega) {
        let neg = (prime - w) % prime;
        stress.set(i, j, neg);
        stress.set(j, i, neg);
        stress.set(i, i, stress.get(i, i) + w);
        stress.set(j, j, stress.get(j, j) + w);
    }
    Ok(stress.rank())
}

/// True when a random equilibrium stress has stress-matrix rank `n - 3` in a
/// majority of `trials` independent draws.
pub fn global_rigidity_oracle(g: &Graph, trials: usize, seed: u64) -> Result<bool> {
    if g.n() < 4 {
        return Err(Error::Domain(format!("oracle needs n >= 4, got {}", g.n())));
    }
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    if !is_rigid_numeric(g, 5, seed)? {
        return Err(Error::Domain("graph is flexible".into()));
    }
    let mut hits = 0;
    for t in 0..trials {
        if stress_rank(g, seed::derive(seed, t as u64 + 1))? == g.n() - 3 {
            hits += 1;
        }
    }
    Ok(2 * hits > trials)
}
