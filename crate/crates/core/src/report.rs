//! Combined combinatorial and numeric analysis of one graph.

use std::fmt;

use serde::Serialize;

use crate::connectivity::is_k_connected;
use crate::error::Result;
use crate::graph::Graph;
use crate::numeric::{global_rigidity_oracle, rigidity_rank};
use crate::sparsity::{is_laman, is_redundant, sparsity_rank};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub laman: bool,
    pub rigid: bool,
    pub redundant: bool,
    /// `None` when `n <= 3`.
    pub three_connected: Option<bool>,
    /// `None` when `n < 4`.
    pub hendrickson: Option<bool>,
    pub sparsity_rank: usize,
    pub rigidity_rank: usize,
    /// Stress-matrix verdict; `None` when the oracle does not apply
    /// (`n < 4` or a flexible graph).
    pub globally_rigid: Option<bool>,
    pub seed: u64,
    pub tol: f64,
    pub trials: usize,
}

pub fn analyze(g: &Graph, seed: u64, tol: f64, trials: usize) -> Result<AnalysisReport> {
    let sparsity = sparsity_rank(g)?.rank;
    let rigidity = rigidity_rank(g, trials, seed)?;
    let full = 2 * g.n() - 3;
    let redundant = is_redundant(g)?;
    let three_connected = if g.n() > 3 { Some(is_k_connected(g, 3)?) } else { None };
    let hendrickson = (g.n() >= 4).then(|| redundant && three_connected == Some(true));
    let globally_rigid = if g.n() >= 4 && rigidity == full {
        Some(global_rigidity_oracle(g, trials, seed)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        n: g.n(),
        m: g.m(),
        laman: is_laman(g)?,
        rigid: sparsity == full,
        redundant,
        three_connected,
        hendrickson,
        sparsity_rank: sparsity,
        rigidity_rank: rigidity,
        globally_rigid,
        seed,
        tol,
        trials,
    })
}

fn flag(v: Option<bool>) -> String {
    v.map_or_else(|| "n/a".to_string(), |b| b.to_string())
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices:        {}", self.n)?;
        writeln!(f, "edges:           {}", self.m)?;
        writeln!(f, "laman:           {}", self.laman)?;
        writeln!(f, "rigid:           {}", self.rigid)?;
        writeln!(f, "redundant:       {}", self.redundant)?;
        writeln!(f, "3-connected:     {}", flag(self.three_connected))?;
        writeln!(f, "hendrickson:     {}", flag(self.hendrickson))?;
        writeln!(f, "sparsity rank:   {}", self.sparsity_rank)?;
        writeln!(f, "rigidity rank:   {}", self.rigidity_rank)?;
        writeln!(f, "globally rigid:  {}", flag(self.globally_rigid))?;
        write!(f, "seed {} / tol {:e} / trials {}", self.seed, self.tol, self.trials)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn k4_report() {
        let r = analyze(&Graph::complete(4), 0, 1e-8, 5).unwrap();
        assert_eq!(r.hendrickson, Some(true));
        assert_eq!(r.globally_rigid, Some(true));
        assert!(r.rigid && r.redundant && !r.laman);
    }

    #[test]
    fn flexible_and_laman_reports() {
        let c4 = analyze(&generate("cycle", &[4]).unwrap(), 0, 1e-8, 5).unwrap();
        assert!(!c4.rigid);
        assert_eq!(c4.globally_rigid, None);
        let l = analyze(&generate("laman_random", &[8, 0]).unwrap(), 0, 1e-8, 5).unwrap();
        assert!(l.laman);
        assert_eq!(l.globally_rigid, Some(false));
        assert_eq!(l.hendrickson, Some(false));
    }
}
