//! (2,3)-sparsity matroid rank via the pebble game, and the Laman / redundant
//! / Hendrickson decision chain built on top of it.
//!
//! A set of edges is (2,3)-sparse when every vertex subset `V'` with
//! `|V'| >= 2` spans at most `2|V'| - 3` of its edges. Laman graphs are the
//! sparse graphs with exactly `2n - 3` edges.

use serde::Serialize;

use crate::connectivity;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparsityRankResult {
    pub rank: usize,
    /// Lexicographically smallest maximum independent edge set.
    pub witness: Vec<Edge>,
}

/// Incremental (2,3)-pebble game.
///
/// Each vertex starts with two pebbles. An accepted edge is oriented away
/// from the vertex whose pebble covers it. An edge `uv` is independent of
/// the accepted set iff four pebbles can be gathered on `u` and `v`.
#[derive(Clone, Debug)]
pub struct PebbleGame {
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
    accepted: Vec<Edge>,
    // scratch for the searches
    seen: Vec<u32>,
    stamp: u32,
    parent: Vec<usize>,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame {
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
            accepted: Vec::new(),
            seen: vec![0; n],
            stamp: 0,
            parent: vec![usize::MAX; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.accepted.len()
    }

    pub fn accepted(&self) -> &[Edge] {
        &self.accepted
    }

    /// Offers edge `{u, v}`; returns whether it was accepted as independent.
    pub fn offer(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        loop {
            if self.pebbles[u] < 2 && self.gather(u, v) {
                continue;
            }
            if self.pebbles[v] < 2 && self.gather(v, u) {
                continue;
            }
            break;
        }
        if self.pebbles[u] + self.pebbles[v] < 4 {
            return false;
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        self.accepted.push((u.min(v), u.max(v)));
        true
    }

    /// Moves one free pebble to `root` by reversing a directed path. Paths may
    /// pass through `keep` but its pebbles are never taken. Returns false
    /// when no pebble is reachable.
    fn gather(&mut self, root: usize, keep: usize) -> bool {
        self.stamp += 1;
        let stamp = self.stamp;
        self.seen[root] = stamp;
        let mut stack = vec![root];
        let mut found = None;
        'search: while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if self.seen[y] == stamp {
                    continue;
                }
                self.seen[y] = stamp;
                self.parent[y] = x;
                if y != keep && self.pebbles[y] > 0 {
                    found = Some(y);
                    break 'search;
                }
                stack.push(y);
            }
        }
        let Some(mut y) = found else {
            return false;
        };
        self.pebbles[y] -= 1;
        // reverse the path root -> ... -> y
        while y != root {
            let x = self.parent[y];
            let pos = self.out[x]
                .iter()
                .position(|&t| t == y)
                .expect("path edge exists");
            self.out[x].swap_remove(pos);
            self.out[y].push(x);
            y = x;
        }
        self.pebbles[root] += 1;
        true
    }
}

fn require_two(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Domain(format!(
            "sparsity is defined for n >= 2, got n = {}",
            g.n()
        )));
    }
    Ok(())
}

/// Rank of `g`'s edge set in the (2,3)-sparsity matroid.
pub fn sparsity_rank(g: &Graph) -> Result<SparsityRankResult> {
    require_two(g)?;
    let mut game = PebbleGame::new(g.n());
    for &(u, v) in g.edges() {
        game.offer(u, v);
    }
    Ok(SparsityRankResult {
        rank: game.rank(),
        witness: game.accepted,
    })
}

pub fn is_laman(g: &Graph) -> Result<bool> {
    require_two(g)?;
    if g.m() != 2 * g.n() - 3 {
        return Ok(false);
    }
    Ok(sparsity_rank(g)?.rank == g.m())
}

/// A Laman subgraph on all of `g`'s vertices, when one exists.
pub fn spanning_laman_subgraph(g: &Graph) -> Result<Option<Graph>> {
    let res = sparsity_rank(g)?;
    if res.rank == 2 * g.n() - 3 {
        Ok(Some(g.spanning_subgraph(&res.witness)?))
    } else {
        Ok(None)
    }
}

/// True iff `g` minus any single edge still contains a spanning Laman
/// subgraph. Vacuously true for an edgeless graph.
pub fn is_redundant(g: &Graph) -> Result<bool> {
    require_two(g)?;
    let full = 2 * g.n() - 3;
    if g.m() > 0 && g.m() <= full {
        return Ok(false);
    }
    for &(u, v) in g.edges() {
        if sparsity_rank(&g.without_edge(u, v))?.rank < full {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Redundant and 3-vertex-connected.
pub fn is_hendrickson(g: &Graph) -> Result<bool> {
    if g.n() < 4 {
        return Err(Error::Domain(format!(
            "Hendrickson property needs n >= 4, got n = {}",
            g.n()
        )));
    }
    Ok(is_redundant(g)? && connectivity::is_k_connected(g, 3)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn g(n: usize, edges: &[Edge]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn k2_rank_and_witness() {
        let res = sparsity_rank(&Graph::complete(2)).unwrap();
        assert_eq!(res.rank, 1);
        assert_eq!(res.witness, vec![(0, 1)]);
    }

    #[test]
    fn small_ranks() {
        let c4 = generate("cycle", &[4]).unwrap();
        assert_eq!(sparsity_rank(&c4).unwrap().rank, 4);
        let k4 = Graph::complete(4);
        let res = sparsity_rank(&k4).unwrap();
        assert_eq!(res.rank, 5);
        // lexicographic tie-break drops the last edge
        assert_eq!(res.witness, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(sparsity_rank(&Graph::complete(7)).unwrap().rank, 11);
    }

    #[test]
    fn k4_plus_disjoint_triangle() {
        // K4 on {0..3} has one redundant edge; an isolated triangle adds 3.
        let mut edges: Vec<Edge> = Graph::complete(4).edges().to_vec();
        edges.extend([(4, 5), (5, 6), (4, 6)]);
        assert_eq!(sparsity_rank(&g(7, &edges)).unwrap().rank, 8);
    }

    #[test]
    fn rejects_tiny_graphs() {
        assert!(sparsity_rank(&Graph::empty(1)).is_err());
        assert!(is_laman(&Graph::empty(0)).is_err());
        assert!(is_hendrickson(&Graph::complete(3)).is_err());
    }

    #[test]
    fn laman_examples() {
        assert!(is_laman(&Graph::complete(2)).unwrap());
        assert!(is_laman(&Graph::complete(3)).unwrap());
        assert!(!is_laman(&Graph::complete(4)).unwrap());
        assert!(is_laman(&Graph::complete(4).without_edge(0, 1)).unwrap());
        // right count, but K4 inside plus a pendant path
        let bad = g(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(bad.m(), 7);
        assert!(!is_laman(&bad).unwrap());
    }

    #[test]
    fn spanning_laman() {
        let k4 = Graph::complete(4);
        let sub = spanning_laman_subgraph(&k4).unwrap().unwrap();
        assert_eq!(sub.m(), 5);
        assert!(is_laman(&sub).unwrap());
        let c4 = generate("cycle", &[4]).unwrap();
        assert!(spanning_laman_subgraph(&c4).unwrap().is_none());
        let k2 = Graph::complete(2);
        assert_eq!(spanning_laman_subgraph(&k2).unwrap().unwrap(), k2);
    }

    #[test]
    fn redundancy() {
        assert!(is_redundant(&Graph::complete(4)).unwrap());
        assert!(is_redundant(&generate("wheel", &[5]).unwrap()).unwrap());
        for seed in 0..10 {
            let l = generate("laman_random", &[8, seed]).unwrap();
            assert!(!is_redundant(&l).unwrap());
            assert!(!is_hendrickson(&l).unwrap());
        }
        // two K4s glued on an edge: redundant but only 2-connected
        let mut edges = Graph::complete(4).edges().to_vec();
        edges.extend([(0, 4), (0, 5), (1, 4), (1, 5), (4, 5)]);
        let glued = g(6, &edges);
        assert!(is_redundant(&glued).unwrap());
        assert!(!is_hendrickson(&glued).unwrap());
    }

    #[test]
    fn hendrickson_examples() {
        assert!(is_hendrickson(&Graph::complete(4)).unwrap());
        assert!(is_hendrickson(&generate("wheel", &[5]).unwrap()).unwrap());
        assert!(is_hendrickson(&Graph::complete(6)).unwrap());
        for seed in 0..5 {
            let h = generate("hendrickson_random", &[8, seed]).unwrap();
            assert!(is_hendrickson(&h).unwrap());
        }
    }
}
