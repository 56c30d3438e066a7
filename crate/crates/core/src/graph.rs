//! Simple undirected graphs on `0..n`, their text formats, and the catalog of
//! named generators used throughout the crate.
//!
//! Vertices are 0-based. Edges are stored as `(i, j)` with `i < j`, sorted
//! lexicographically, so serialization is byte-stable.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::henneberg::{self, HennebergStep, JjStep};
use crate::seed;

pub type Edge = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

/// Input and output formats for graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// `{"n": 4, "edges": [[0,1], ...]}`
    Json,
    /// First line `n m`, then `m` lines `i j`.
    EdgeList,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

fn canonical(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints
    /// outside `0..n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (k, (u, v)) in edges.into_iter().enumerate() {
            let loc = format!("edges[{k}]");
            if u >= n || v >= n {
                return Err(Error::parse(
                    loc,
                    format!("endpoint of ({u}, {v}) is not below n = {n}"),
                ));
            }
            if u == v {
                return Err(Error::parse(loc, format!("self-loop at vertex {u}")));
            }
            if !set.insert(canonical(u, v)) {
                return Err(Error::parse(loc, format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Internal constructor for edge sets already known to be valid.
    pub(crate) fn from_set(n: usize, edges: BTreeSet<Edge>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        Graph {
            n,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: vec![] }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (sorted) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.binary_search(&canonical(u, v)).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// A copy with edge `{u, v}` removed (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let e = canonical(u, v);
        Graph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|&f| f != e).collect(),
        }
    }

    /// A copy with edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// The subgraph on all `n` vertices spanned by the given edges of `self`.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Result<Graph> {
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::Domain(format!("({u}, {v}) is not an edge")));
            }
        }
        Graph::new(self.n, edges.iter().copied())
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Domain(format!(
                "relabeling has length {} but graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Domain("relabeling is not a permutation".into()));
            }
        }
        Ok(Graph::from_set(
            self.n,
            self.edges
                .iter()
                .map(|&(u, v)| canonical(perm[u], perm[v]))
                .collect(),
        ))
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("graph serialization cannot fail")
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn serialize(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::Json => self.to_json(),
            GraphFormat::EdgeList => self.to_edge_list(),
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m())
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = GraphJson::deserialize(d)?;
        Graph::new(doc.n, doc.edges.iter().map(|e| (e[0], e[1]))).map_err(serde::de::Error::custom)
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Json => {
            let doc: GraphJson = serde_json::from_str(text).map_err(|e| {
                Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
            })?;
            Graph::new(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))
        }
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "missing `n m` header"))?;
    let [n, m] = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let [u, v] = parse_pair(lineno, line)?;
        edges.push((lineno, u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            format!("line {hline}"),
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    let mut set = BTreeSet::new();
    for (lineno, u, v) in edges {
        let loc = format!("line {lineno}");
        if u >= n || v >= n {
            return Err(Error::parse(loc, format!("endpoint not below n = {n}")));
        }
        if u == v {
            return Err(Error::parse(loc, format!("self-loop at vertex {u}")));
        }
        if !set.insert(canonical(u, v)) {
            return Err(Error::parse(loc, format!("duplicate edge ({u}, {v})")));
        }
    }
    Ok(Graph::from_set(n, set))
}

fn parse_pair(lineno: usize, line: &str) -> Result<[usize; 2]> {
    let loc = format!("line {lineno}");
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::parse(loc, format!("expected two integers, got `{line}`")));
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field
            .parse()
            .map_err(|_| Error::parse(loc.clone(), format!("`{field}` is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Names accepted by [`generate`].
pub const GENERATORS: [&str; 6] = [
    "complete",
    "cycle",
    "path",
    "wheel",
    "laman_random",
    "hendrickson_random",
];

/// Builds a named catalog graph.
///
/// | name                 | params      |
/// |----------------------|-------------|
/// | `complete`           | `[n]`       |
/// | `cycle`              | `[n]`, n ≥ 3 |
/// | `path`               | `[n]`, n ≥ 1 |
/// | `wheel`              | `[n]`, n ≥ 4; vertex 0 is the hub |
/// | `laman_random`       | `[n, seed?]`, n ≥ 2 |
/// | `hendrickson_random` | `[n, seed?]`, n ≥ 4 |
///
/// The random generators grow the graph forward through Henneberg moves
/// (from `K2`) or edge additions and 1-extensions (from `K4`), then apply
/// a random relabeling. A missing seed means seed 0.
pub fn generate(name: &str, params: &[u64]) -> Result<Graph> {
    let bad = |message: String| Error::InvalidParams {
        name: name.to_string(),
        message,
    };
    let size = |min: u64, max_params: usize| -> Result<usize> {
        match params.first() {
            None => Err(bad("missing vertex count".into())),
            Some(_) if params.len() > max_params => {
                Err(bad(format!("expected at most {max_params} parameters")))
            }
            Some(&n) if n < min => Err(bad(format!("need n >= {min}, got {n}"))),
            Some(&n) if n > 100_000 => Err(bad(format!("n = {n} is too large"))),
            Some(&n) => Ok(n as usize),
        }
    };
    let seed = params.get(1).copied().unwrap_or(0);
    match name {
        "complete" => Ok(Graph::complete(size(0, 1)?)),
        "cycle" => {
            let n = size(3, 1)?;
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        "path" => {
            let n = size(1, 1)?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        "wheel" => {
            let n = size(4, 1)?;
            let rim = n - 1;
            Graph::new(
                n,
                (1..n)
                    .map(|i| (0, i))
                    .chain((0..rim).map(|k| (1 + k, 1 + (k + 1) % rim))),
            )
        }
        "laman_random" => Ok(laman_random(size(2, 2)?, seed)),
        "hendrickson_random" => Ok(hendrickson_random(size(4, 2)?, seed)),
        _ => Err(Error::UnknownGenerator(name.to_string())),
    }
}

fn shuffled(g: &Graph, rng: &mut impl Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("shuffle is a permutation")
}

fn laman_random(n: usize, seed: u64) -> Graph {
    let mut rng = seed::rng(seed, 0x1a3a);
    let mut steps = Vec::with_capacity(n - 2);
    let mut current = henneberg::apply_henneberg(&[]).expect("K2");
    for k in 2..n {
        let step = if k >= 3 && rng.gen_bool(0.5) {
            let (u, v) = current.edges()[rng.gen_range(0..current.m())];
            let mut w = rng.gen_range(0..k);
            while w == u || w == v {
                w = rng.gen_range(0..k);
            }
            HennebergStep::Ext1 { u, v, w }
        } else {
            let u = rng.gen_range(0..k);
            let mut v = rng.gen_range(0..k);
            while v == u {
                v = rng.gen_range(0..k);
            }
            HennebergStep::Ext0 { u, v }
        };
        steps.push(step);
        current = henneberg::apply_henneberg(&steps).expect("generated step is valid");
    }
    shuffled(&current, &mut rng)
}

fn hendrickson_random(n: usize, seed: u64) -> Graph {
    let mut rng = seed::rng(seed, 0x4e4d);
    let mut steps: Vec<JjStep> = Vec::new();
    let mut current = Graph::complete(4);
    while current.n() < n {
        let k = current.n();
        let add_edge = !current.is_complete() && rng.gen_bool(0.3);
        let step = if add_edge {
            let non_edges: Vec<Edge> = (0..k)
                .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
                .filter(|&(u, v)| !current.has_edge(u, v))
                .collect();
            let (u, v) = non_edges[rng.gen_range(0..non_edges.len())];
            JjStep::Edge { u, v }
        } else {
            let (u, v) = current.edges()[rng.gen_range(0..current.m())];
            let mut w = rng.gen_range(0..k);
            while w == u || w == v {
                w = rng.gen_range(0..k);
            }
            JjStep::Ext1 { u, v, w }
        };
        steps.push(step);
        current = henneberg::apply_jj(&steps).expect("generated step is valid");
    }
    shuffled(&current, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k4_json() {
        let g = parse_graph(
            r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[3,0],[0,2],[1,3]]}"#,
            GraphFormat::Json,
        )
        .unwrap();
        assert_eq!(g, Graph::complete(4));
        let k2 = parse_graph(r#"{"n":2,"edges":[[0,1]]}"#, GraphFormat::Json).unwrap();
        assert_eq!(k2, Graph::complete(2));
    }

    #[test]
    fn rejects_bad_edges() {
        let dup = parse_graph(r#"{"n":3,"edges":[[0,1],[0,1]]}"#, GraphFormat::Json);
        assert!(matches!(dup, Err(Error::Parse { ref location, .. }) if location == "edges[1]"));
        let reversed_dup = parse_graph(r#"{"n":3,"edges":[[0,1],[1,0]]}"#, GraphFormat::Json);
        assert!(reversed_dup.is_err());
        assert!(parse_graph(r#"{"n":3,"edges":[[0,3]]}"#, GraphFormat::Json).is_err());
        assert!(parse_graph(r#"{"n":3,"edges":[[2,2]]}"#, GraphFormat::Json).is_err());
        assert!(parse_graph(r#"{"n":3,"edges":[[0,1]"#, GraphFormat::Json).is_err());
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        let err = parse_edge_list("3 2\n0 1\n1 1\n").unwrap_err();
        assert_eq!(
            err,
            Error::parse("line 3", "self-loop at vertex 1")
        );
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = generate("wheel", &[6]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(parse_graph(&text, GraphFormat::EdgeList).unwrap(), g);
    }

    #[test]
    fn named_generators() {
        let k4 = generate("complete", &[4]).unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let w5 = generate("wheel", &[5]).unwrap();
        assert_eq!((w5.n(), w5.m()), (5, 8));
        assert_eq!(w5.degrees(), vec![4, 3, 3, 3, 3]);
        let c4 = generate("cycle", &[4]).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        let p3 = generate("path", &[3]).unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(generate("wheel", &[4]).unwrap(), Graph::complete(4));
    }

    #[test]
    fn generator_errors() {
        assert!(matches!(
            generate("petersen", &[10]),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(generate("cycle", &[2]).is_err());
        assert!(generate("wheel", &[]).is_err());
        assert!(generate("complete", &[3, 4]).is_err());
        assert!(generate("hendrickson_random", &[3, 1]).is_err());
    }

    #[test]
    fn random_generators_are_deterministic() {
        for seed in 0..5 {
            assert_eq!(
                generate("laman_random", &[9, seed]).unwrap(),
                generate("laman_random", &[9, seed]).unwrap()
            );
            assert_eq!(
                generate("hendrickson_random", &[7, seed]).unwrap(),
                generate("hendrickson_random", &[7, seed]).unwrap()
            );
        }
        let g = generate("laman_random", &[12, 3]).unwrap();
        assert_eq!((g.n(), g.m()), (12, 21));
    }

    #[test]
    fn json_is_byte_stable() {
        let a = Graph::new(3, [(2, 1), (0, 2)]).unwrap();
        let b = Graph::new(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_json(), r#"{"n":3,"edges":[[0,2],[1,2]]}"#);
    }
}
