//! Threshold graphs: recognition by elimination, creation sequences and weight certificates.

use std::fmt;

use serde::Serialize;

use crate::shifted::find_shifted_labeling;
use crate::{Error, Face, Graph, Result, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    /// Add an isolated vertex.
    Disjoint,
    /// Add a vertex adjacent to every earlier vertex.
    Star,
}

/// Construction order of a threshold graph; the first step is always `Disjoint`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CreationSequence {
    pub steps: Vec<(Step, Vertex)>,
}

impl CreationSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn kinds(&self) -> Vec<Step> {
        self.steps.iter().map(|s| s.0).collect()
    }

    /// Rebuilds the graph by replaying the steps.
    pub fn to_graph(&self, n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let mut placed: Vec<Vertex> = Vec::new();
        for &(step, v) in &self.steps {
            if step == Step::Star {
                for &u in &placed {
                    g.add_edge(u, v)?;
                }
            }
            placed.push(v);
        }
        Ok(g)
    }
}

impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (step, _) in &self.steps {
            f.write_str(match step {
                Step::Disjoint => "D",
                Step::Star => "S",
            })?;
        }
        Ok(())
    }
}

/// Reverse elimination: repeatedly delete an isolated vertex (preferred, smallest label first)
/// or else a dominating vertex (smallest label first). The graph is threshold iff this empties
/// it; the deletions read backwards form the creation sequence. On failure the error lists the
/// vertices left when no vertex was removable.
pub fn creation_sequence(g: &Graph) -> Result<CreationSequence> {
    let mut remaining = g.vertices();
    let mut removed: Vec<(Step, Vertex)> = Vec::with_capacity(g.n());
    while !remaining.is_empty() {
        let isolated = remaining.iter().find(|&v| g.neighbors(v).intersection(remaining).is_empty());
        let next = match isolated {
            Some(v) => (Step::Disjoint, v),
            None => {
                let dominating = remaining
                    .iter()
                    .find(|&v| g.neighbors(v).intersection(remaining) == remaining.without(v));
                match dominating {
                    Some(v) => (Step::Star, v),
                    None => return Err(Error::NotThreshold { stuck: remaining.to_vec() }),
                }
            }
        };
        removed.push(next);
        remaining = remaining.without(next.1);
    }
    removed.reverse();
    Ok(CreationSequence { steps: removed })
}

pub fn is_threshold(g: &Graph) -> bool {
    creation_sequence(g).is_ok()
}

/// Integer weights `w` and threshold `t` with `w(U) <= t` exactly for the independent sets `U`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdCertificate {
    /// `weights[v - 1]` is the weight of vertex `v`.
    pub weights: Vec<u64>,
    pub threshold: u64,
}

/// Builds a certificate from the creation sequence.
///
/// With `m` disjoint steps, the `j`-th disjoint vertex gets `2^(m-j)` and `t = 2^m - 1`. A star
/// vertex gets `t` minus the weight of the disjoint vertices added after it. Independent sets
/// are subsets of the disjoint vertices, or one star vertex together with later disjoint
/// vertices, and both kinds weigh at most `t`.
pub fn certify(g: &Graph) -> Result<ThresholdCertificate> {
    let seq = creation_sequence(g)?;
    let m = seq.steps.iter().filter(|s| s.0 == Step::Disjoint).count() as u32;
    let threshold = (1u64 << m) - 1;
    let mut weights = vec![0u64; g.n()];
    let mut later_disjoint = 0u64;
    let mut j = m;
    // right to left so the weight of later disjoint vertices is known at each star
    for &(step, v) in seq.steps.iter().rev() {
        match step {
            Step::Disjoint => {
                j -= 1;
                let w = 1u64 << (m - 1 - j);
                weights[v - 1] = w;
                later_disjoint += w;
            }
            Step::Star => weights[v - 1] = threshold - later_disjoint,
        }
    }
    Ok(ThresholdCertificate { weights, threshold })
}

/// Largest graph [`verify_certificate`] will check.
pub const CERTIFICATE_CHECK_LIMIT: usize = 20;

/// Checks the certificate against every one of the `2^n` vertex subsets.
pub fn verify_certificate(g: &Graph, cert: &ThresholdCertificate) -> Result<bool> {
    let n = g.n();
    if n > CERTIFICATE_CHECK_LIMIT {
        return Err(Error::TooLarge { what: "certificate check", n, max: CERTIFICATE_CHECK_LIMIT });
    }
    if cert.weights.len() != n {
        return Ok(false);
    }
    let size = 1usize << n;
    let mut weight = vec![0u64; size];
    let mut independent = vec![true; size];
    if cert.threshold < weight[0] {
        return Ok(false);
    }
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        weight[mask] = weight[rest].saturating_add(cert.weights[low]);
        independent[mask] = independent[rest] && g.neighbors(low + 1).mask() as usize & rest == 0;
        if independent[mask] != (weight[mask] <= cert.threshold) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest graph accepted by [`threshold_equals_shifted_graph`].
pub const SELF_TEST_LIMIT: usize = 8;

/// Threshold recognition cross-checked against a shifted labeling search on the graph's
/// 1-dimensional complex. Returns the common verdict; disagreement is an error.
pub fn threshold_equals_shifted_graph(g: &Graph) -> Result<bool> {
    if g.n() > SELF_TEST_LIMIT {
        return Err(Error::TooLarge { what: "threshold self-test", n: g.n(), max: SELF_TEST_LIMIT });
    }
    let threshold = is_threshold(g);
    let shifted = find_shifted_labeling(&g.edge_complex())?.is_some();
    if threshold != shifted {
        return Err(Error::Inconsistent(format!(
            "{g}: threshold = {threshold} but shifted edge complex = {shifted}"
        )));
    }
    Ok(threshold)
}

/// The vertices that remain when elimination gets stuck, empty for threshold graphs.
pub fn stuck_subgraph(g: &Graph) -> Face {
    match creation_sequence(g) {
        Err(Error::NotThreshold { stuck }) => Face::from_vertices(stuck, g.n()).unwrap_or_default(),
        _ => Face::EMPTY,
    }
}
