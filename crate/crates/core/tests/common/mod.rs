#![allow(dead_code)]

use linerig::graph::Edge;
use linerig::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `(2,3)`-sparsity straight from the definition: every vertex subset of
/// size at least two spans at most `2k - 3` edges of `edges`.
pub fn sparse_by_definition(n: usize, edges: &[Edge]) -> bool {
    assert!(n <= 16, "brute force is exponential");
    (0u32..1 << n).all(|mask| {
        let k = mask.count_ones() as usize;
        if k < 2 {
            return true;
        }
        let inside = edges
            .iter()
            .filter(|&&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
            .count();
        inside + 3 <= 2 * k
    })
}

/// Rank of the sparsity matroid by greedy growth, testing independence
/// with [`sparse_by_definition`].
pub fn brute_sparsity_rank(g: &Graph) -> usize {
    let mut kept: Vec<Edge> = Vec::new();
    for &e in g.edges() {
        kept.push(e);
        if !sparse_by_definition(g.n(), &kept) {
            kept.pop();
        }
    }
    kept.len()
}

pub fn brute_is_laman(g: &Graph) -> bool {
    g.n() >= 2 && g.m() == 2 * g.n() - 3 && sparse_by_definition(g.n(), g.edges())
}

/// Vertex connectivity at least `k`: no set of fewer than `k` vertices
/// disconnects the rest, and `n > k`.
pub fn brute_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    (0u32..1 << n).filter(|m| (m.count_ones() as usize) < k).all(|removed| {
        let alive: Vec<usize> = (0..n).filter(|&v| removed & (1 << v) == 0).collect();
        let mut seen = vec![false; n];
        let mut stack = vec![alive[0]];
        seen[alive[0]] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in g.edges() {
                let w = if a == v { b } else if b == v { a } else { continue };
                if removed & (1 << w) == 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        alive.iter().all(|&v| seen[v])
    })
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<Edge> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// Central difference of `f` at `x` in coordinate `j`.
pub fn central_difference(f: impl Fn(&[f64]) -> Vec<f64>, x: &[f64], j: usize, h: f64) -> Vec<f64> {
    let mut up = x.to_vec();
    let mut down = x.to_vec();
    up[j] += h;
    down[j] -= h;
    f(&up).iter().zip(f(&down)).map(|(a, b)| (a - b) / (2.0 * h)).collect()
}
