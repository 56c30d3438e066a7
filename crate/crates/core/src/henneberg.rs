//! Construction sequences: Henneberg moves from `K2` for Laman graphs, and
//! edge additions plus 1-extensions from `K4` for Hendrickson graphs.
//!
//! Replaying a sequence creates vertex `k` at the step that grows the graph
//! to `k + 1` vertices. Extraction records where each original vertex lands
//! in the replay, so a round trip is certified by relabeling rather than by
//! a general isomorphism test.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::sparsity::{is_hendrickson, is_laman};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HennebergStep {
    /// New vertex joined to `u` and `v`.
    Ext0 { u: usize, v: usize },
    /// Edge `uv` subdivided by a new vertex that is also joined to `w`.
    Ext1 { u: usize, v: usize, w: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum JjStep {
    Edge { u: usize, v: usize },
    Ext1 { u: usize, v: usize, w: usize },
}

/// An extracted construction sequence together with the vertex map
/// `relabel[original] = replay index`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extraction<S> {
    pub steps: Vec<S>,
    pub relabel: Vec<usize>,
}

impl Extraction<HennebergStep> {
    /// Replays the steps and checks the result equals `original` relabeled.
    pub fn replay_matches(&self, original: &Graph) -> Result<bool> {
        Ok(apply_henneberg(&self.steps)? == original.relabel(&self.relabel)?)
    }
}

impl Extraction<JjStep> {
    pub fn replay_matches(&self, original: &Graph) -> Result<bool> {
        Ok(apply_jj(&self.steps)? == original.relabel(&self.relabel)?)
    }
}

fn key(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

struct Builder {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Builder {
    fn new(base: &Graph) -> Self {
        Builder {
            n: base.n(),
            edges: base.edges().iter().copied().collect(),
        }
    }

    fn check(&self, pos: usize, vs: &[usize]) -> Result<()> {
        for (i, &x) in vs.iter().enumerate() {
            if x >= self.n {
                return Err(Error::InvalidStep {
                    position: pos,
                    message: format!("vertex {x} does not exist (n = {})", self.n),
                });
            }
            if vs[..i].contains(&x) {
                return Err(Error::InvalidStep {
                    position: pos,
                    message: format!("vertex {x} repeated"),
                });
            }
        }
        Ok(())
    }

    fn ext0(&mut self, pos: usize, u: usize, v: usize) -> Result<()> {
        self.check(pos, &[u, v])?;
        let z = self.n;
        self.n += 1;
        self.edges.insert(key(u, z));
        self.edges.insert(key(v, z));
        Ok(())
    }

    fn ext1(&mut self, pos: usize, u: usize, v: usize, w: usize) -> Result<()> {
        self.check(pos, &[u, v, w])?;
        if !self.edges.remove(&key(u, v)) {
            return Err(Error::InvalidStep {
                position: pos,
                message: format!("edge ({u}, {v}) to subdivide is absent"),
            });
        }
        let z = self.n;
        self.n += 1;
        for x in [u, v, w] {
            self.edges.insert(key(x, z));
        }
        Ok(())
    }

    fn add_edge(&mut self, pos: usize, u: usize, v: usize) -> Result<()> {
        self.check(pos, &[u, v])?;
        if !self.edges.insert(key(u, v)) {
            return Err(Error::InvalidStep {
                position: pos,
                message: format!("edge ({u}, {v}) already present"),
            });
        }
        Ok(())
    }

    fn finish(self) -> Graph {
        Graph::from_set(self.n, self.edges)
    }
}

/// Applies Henneberg moves starting from `K2`.
pub fn apply_henneberg(steps: &[HennebergStep]) -> Result<Graph> {
    let mut b = Builder::new(&Graph::complete(2));
    for (pos, step) in steps.iter().enumerate() {
        match *step {
            HennebergStep::Ext0 { u, v } => b.ext0(pos, u, v)?,
            HennebergStep::Ext1 { u, v, w } => b.ext1(pos, u, v, w)?,
        }
    }
    Ok(b.finish())
}

/// Applies edge additions and 1-extensions starting from `K4`.
pub fn apply_jj(steps: &[JjStep]) -> Result<Graph> {
    let mut b = Builder::new(&Graph::complete(4));
    for (pos, step) in steps.iter().enumerate() {
        match *step {
            JjStep::Edge { u, v } => b.add_edge(pos, u, v)?,
            JjStep::Ext1 { u, v, w } => b.ext1(pos, u, v, w)?,
        }
    }
    Ok(b.finish())
}

/// Mutable graph over the original labels that supports vertex deletion.
struct Shrinking {
    alive: Vec<bool>,
    adj: Vec<BTreeSet<usize>>,
}

enum Removal {
    /// `z` removed; it was joined to `u`, `v`.
    Ext0 { z: usize, u: usize, v: usize },
    /// `z` removed and edge `uv` restored; `w` was the third neighbour.
    Ext1 { z: usize, u: usize, v: usize, w: usize },
    Edge { u: usize, v: usize },
}

impl Shrinking {
    fn new(g: &Graph) -> Self {
        Shrinking {
            alive: vec![true; g.n()],
            adj: g
                .adjacency()
                .into_iter()
                .map(|l| l.into_iter().collect())
                .collect(),
        }
    }

    fn live(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }

    fn live_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    fn edge_count(&self) -> usize {
        self.live().map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    fn compact(&self) -> Graph {
        let mut index = vec![usize::MAX; self.alive.len()];
        for (k, v) in self.live().enumerate() {
            index[v] = k;
        }
        let mut edges = BTreeSet::new();
        for u in self.live() {
            for &v in &self.adj[u] {
                if u < v {
                    edges.insert((index[u], index[v]));
                }
            }
        }
        Graph::from_set(self.live_count(), edges)
    }

    fn remove_vertex(&mut self, z: usize) {
        let nbrs = std::mem::take(&mut self.adj[z]);
        for x in nbrs {
            self.adj[x].remove(&z);
        }
        self.alive[z] = false;
    }

    fn restore_vertex(&mut self, z: usize, nbrs: &[usize]) {
        self.alive[z] = true;
        for &x in nbrs {
            self.adj[z].insert(x);
            self.adj[x].insert(z);
        }
    }

    fn toggle_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        } else {
            self.adj[u].remove(&v);
            self.adj[v].remove(&u);
        }
    }

    /// Tries the reverse 1-extensions at degree-3 vertex `z`, candidate
    /// pairs in lexicographic order; keeps the first accepted by `ok`.
    fn try_one_reduction(
        &mut self,
        z: usize,
        ok: &dyn Fn(&Graph) -> Result<bool>,
    ) -> Result<Option<Removal>> {
        let nb: Vec<usize> = self.adj[z].iter().copied().collect();
        debug_assert_eq!(nb.len(), 3);
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let (u, v, w) = (nb[i], nb[j], nb[k]);
            if self.adj[u].contains(&v) {
                continue;
            }
            self.remove_vertex(z);
            self.toggle_edge(u, v, true);
            if ok(&self.compact())? {
                return Ok(Some(Removal::Ext1 { z, u, v, w }));
            }
            self.toggle_edge(u, v, false);
            self.restore_vertex(z, &nb);
        }
        Ok(None)
    }
}

/// Turns a reduction log into replay steps plus the vertex map.
fn assemble<S>(
    n: usize,
    shrunk: &Shrinking,
    removals: &[Removal],
    mut to_step: impl FnMut(&Removal, &[usize]) -> S,
) -> Extraction<S> {
    let mut relabel = vec![usize::MAX; n];
    let mut next = 0;
    for v in shrunk.live() {
        relabel[v] = next;
        next += 1;
    }
    let mut steps = Vec::with_capacity(removals.len());
    for r in removals.iter().rev() {
        let step = to_step(r, &relabel);
        if let Removal::Ext0 { z, .. } | Removal::Ext1 { z, .. } = *r {
            relabel[z] = next;
            next += 1;
        }
        steps.push(step);
    }
    debug_assert_eq!(next, n);
    Extraction { steps, relabel }
}

/// Recovers a Henneberg sequence for a Laman graph.
///
/// Reverse moves prefer the lowest-indexed degree-2 vertex; otherwise the
/// lowest-indexed degree-3 vertex is 1-reduced with the first candidate pair
/// that leaves a Laman graph.
pub fn extract_henneberg(g: &Graph) -> Result<Extraction<HennebergStep>> {
    if g.n() < 2 || !is_laman(g)? {
        return Err(Error::Domain(format!("{g} is not a Laman graph")));
    }
    let mut work = Shrinking::new(g);
    let mut removals = Vec::with_capacity(g.n() - 2);
    while work.live_count() > 2 {
        let low = work.live().find(|&v| work.adj[v].len() == 2);
        if let Some(z) = low {
            let nb: Vec<usize> = work.adj[z].iter().copied().collect();
            work.remove_vertex(z);
            removals.push(Removal::Ext0 {
                z,
                u: nb[0],
                v: nb[1],
            });
            continue;
        }
        let z = work
            .live()
            .find(|&v| work.adj[v].len() == 3)
            .ok_or_else(|| {
                Error::InvariantViolation("Laman graph without a vertex of degree <= 3".into())
            })?;
        match work.try_one_reduction(z, &is_laman)? {
            Some(r) => removals.push(r),
            None => {
                return Err(Error::InvariantViolation(format!(
                    "no Laman-preserving 1-reduction at degree-3 vertex {z}"
                )))
            }
        }
    }
    Ok(assemble(g.n(), &work, &removals, |r, lab| match *r {
        Removal::Ext0 { u, v, .. } => HennebergStep::Ext0 {
            u: lab[u],
            v: lab[v],
        },
        Removal::Ext1 { u, v, w, .. } => HennebergStep::Ext1 {
            u: lab[u],
            v: lab[v],
            w: lab[w],
        },
        Removal::Edge { .. } => unreachable!("Henneberg reductions never delete bare edges"),
    }))
}

/// Recovers a sequence of edge additions and 1-extensions from `K4` for a
/// Hendrickson graph by exhaustive search over reverse moves.
///
/// Every candidate edge deletion is tried first (in edge order), then every
/// 1-reduction at degree-3 vertices; the first move whose result is still
/// Hendrickson is taken. Such a move always exists for a Hendrickson graph
/// other than `K4`, so failing to find one is reported as an invariant
/// violation.
pub fn extract_jj(g: &Graph) -> Result<Extraction<JjStep>> {
    if g.n() < 4 || !is_hendrickson(g)? {
        return Err(Error::Domain(format!("{g} is not a Hendrickson graph")));
    }
    let mut work = Shrinking::new(g);
    let mut removals = Vec::new();
    while !(work.live_count() == 4 && work.edge_count() == 6) {
        if let Some(r) = reverse_jj_move(&mut work)? {
            removals.push(r);
        } else {
            return Err(Error::InvariantViolation(format!(
                "no Hendrickson-preserving reverse move on {} (from {g})",
                work.compact()
            )));
        }
    }
    Ok(assemble(g.n(), &work, &removals, |r, lab| match *r {
        Removal::Edge { u, v } => JjStep::Edge {
            u: lab[u],
            v: lab[v],
        },
        Removal::Ext1 { u, v, w, .. } => JjStep::Ext1 {
            u: lab[u],
            v: lab[v],
            w: lab[w],
        },
        Removal::Ext0 { .. } => unreachable!("0-reductions are not Jackson-Jordan moves"),
    }))
}

fn reverse_jj_move(work: &mut Shrinking) -> Result<Option<Removal>> {
    let edges: Vec<Edge> = work
        .live()
        .flat_map(|u| {
            work.adj[u]
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
        .collect();
    for (u, v) in edges {
        work.toggle_edge(u, v, false);
        if is_hendrickson(&work.compact())? {
            return Ok(Some(Removal::Edge { u, v }));
        }
        work.toggle_edge(u, v, true);
    }
    let cubic: Vec<usize> = work.live().filter(|&v| work.adj[v].len() == 3).collect();
    for z in cubic {
        if let Some(r) = work.try_one_reduction(z, &|h: &Graph| {
            if h.n() < 4 {
                Ok(false)
            } else {
                is_hendrickson(h)
            }
        })? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn apply_examples() {
        assert_eq!(apply_henneberg(&[]).unwrap(), Graph::complete(2));
        assert_eq!(
            apply_henneberg(&[HennebergStep::Ext0 { u: 0, v: 1 }]).unwrap(),
            Graph::complete(3)
        );
        let g = apply_henneberg(&[
            HennebergStep::Ext0 { u: 0, v: 1 },
            HennebergStep::Ext1 { u: 0, v: 1, w: 2 },
        ])
        .unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(is_laman(&g).unwrap());
    }

    #[test]
    fn apply_rejects_bad_steps() {
        let err = apply_henneberg(&[
            HennebergStep::Ext0 { u: 0, v: 1 },
            HennebergStep::Ext1 { u: 0, v: 1, w: 3 },
        ])
        .unwrap_err();
        assert!(matches!(err, Error::InvalidStep { position: 1, .. }));
        let err = apply_henneberg(&[
            HennebergStep::Ext0 { u: 0, v: 1 },
            HennebergStep::Ext0 { u: 0, v: 2 },
            HennebergStep::Ext1 { u: 1, v: 3, w: 0 },
        ])
        .unwrap_err();
        assert!(matches!(err, Error::InvalidStep { position: 2, .. }));
        assert!(apply_henneberg(&[HennebergStep::Ext0 { u: 1, v: 1 }]).is_err());
        let err = apply_jj(&[JjStep::Edge { u: 0, v: 1 }]).unwrap_err();
        assert!(matches!(err, Error::InvalidStep { position: 0, .. }));
    }

    #[test]
    fn jj_apply_examples() {
        assert_eq!(apply_jj(&[]).unwrap(), Graph::complete(4));
        let g = apply_jj(&[JjStep::Ext1 { u: 0, v: 1, w: 2 }]).unwrap();
        assert_eq!((g.n(), g.m()), (5, 8));
        assert!(is_hendrickson(&g).unwrap());
    }

    #[test]
    fn extract_small() {
        let ex = extract_henneberg(&Graph::complete(3)).unwrap();
        assert_eq!(ex.steps, vec![HennebergStep::Ext0 { u: 0, v: 1 }]);
        let k4e = Graph::complete(4).without_edge(0, 1);
        let ex = extract_henneberg(&k4e).unwrap();
        assert_eq!(ex.steps.len(), 2);
        assert!(ex.replay_matches(&k4e).unwrap());
        assert!(extract_henneberg(&Graph::complete(4)).is_err());
    }

    #[test]
    fn extract_random_laman() {
        for seed in 0..20 {
            let g = generate("laman_random", &[10, seed]).unwrap();
            let ex = extract_henneberg(&g).unwrap();
            assert_eq!(ex.steps.len(), 8);
            assert!(ex.replay_matches(&g).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn extract_jj_examples() {
        assert!(extract_jj(&Graph::complete(4)).unwrap().steps.is_empty());
        for g in [
            generate("wheel", &[5]).unwrap(),
            Graph::complete(5),
            generate("wheel", &[7]).unwrap(),
        ] {
            let ex = extract_jj(&g).unwrap();
            assert!(!ex.steps.is_empty());
            assert!(ex.replay_matches(&g).unwrap());
        }
        let laman = generate("laman_random", &[6, 1]).unwrap();
        assert!(matches!(extract_jj(&laman), Err(Error::Domain(_))));
    }

    #[test]
    fn step_json_format() {
        let steps = vec![
            HennebergStep::Ext0 { u: 0, v: 1 },
            HennebergStep::Ext1 { u: 0, v: 1, w: 2 },
        ];
        let text = serde_json::to_string(&steps).unwrap();
        assert_eq!(
            text,
            r#"[{"kind":"ext0","u":0,"v":1},{"kind":"ext1","u":0,"v":1,"w":2}]"#
        );
        let jj: Vec<JjStep> = serde_json::from_str(r#"[{"kind":"edge","u":0,"v":3}]"#).unwrap();
        assert_eq!(jj, vec![JjStep::Edge { u: 0, v: 3 }]);
    }
}
