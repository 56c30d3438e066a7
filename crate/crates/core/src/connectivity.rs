//! Vertex connectivity by exhaustive removal of small vertex sets.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Whether the graph stays connected after deleting the vertices flagged in
/// `removed`. A graph with no surviving vertex counts as connected.
pub fn is_connected_without(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == removed.iter().filter(|&&r| !r).count()
}

pub fn is_connected(g: &Graph) -> bool {
    is_connected_without(&g.adjacency(), &vec![false; g.n()])
}

/// True iff `g` is connected and stays connected after removing any set of
/// fewer than `k` vertices. Requires `n > k`.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::Domain("connectivity order k must be positive".into()));
    }
    if g.n() <= k {
        return Err(Error::Domain(format!(
            "{k}-connectivity needs n > {k}, got n = {}",
            g.n()
        )));
    }
    let adj = g.adjacency();
    let mut removed = vec![false; g.n()];
    for size in 0..k {
        for cut in (0..g.n()).combinations(size) {
            for &v in &cut {
                removed[v] = true;
            }
            let ok = is_connected_without(&adj, &removed);
            for &v in &cut {
                removed[v] = false;
            }
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn three_connectivity_examples() {
        assert!(is_k_connected(&Graph::complete(4), 3).unwrap());
        assert!(!is_k_connected(&generate("cycle", &[4]).unwrap(), 3).unwrap());
        assert!(is_k_connected(&generate("wheel", &[5]).unwrap(), 3).unwrap());
        assert!(is_k_connected(&generate("cycle", &[6]).unwrap(), 2).unwrap());
        assert!(!is_k_connected(&generate("path", &[4]).unwrap(), 2).unwrap());
    }

    #[test]
    fn disconnected_graph() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected(&g));
        assert!(!is_k_connected(&g, 1).unwrap());
    }

    #[test]
    fn domain_errors() {
        assert!(is_k_connected(&Graph::complete(3), 3).is_err());
        assert!(is_k_connected(&Graph::complete(3), 0).is_err());
    }
}
