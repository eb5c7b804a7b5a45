//! Exhaustive enumeration of labeled graphs and of complexes on a fixed ground set.

use crate::{Error, Face, Graph, Result, SimplicialComplex};

/// Largest `n` for [`enumerate_graphs`].
pub const GRAPH_LIMIT: usize = 7;
/// Largest `n` for [`enumerate_complexes`].
pub const COMPLEX_LIMIT: usize = 6;

/// `2^(n choose 2)`.
pub fn graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// All labeled graphs on `1..=n`, by ascending edge mask (see [`Graph::from_edge_mask`]).
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > GRAPH_LIMIT {
        return Err(Error::TooLarge { what: "graph enumeration", n, max: GRAPH_LIMIT });
    }
    Ok((0..graph_count(n)).map(move |mask| Graph::from_edge_mask(n, mask)))
}

/// All complexes on the ground set `1..=n`, one per antichain of non-empty subsets; the empty
/// antichain stands for the complex with only the empty face. With `pure_only`, just the
/// antichains whose members share one size.
pub fn enumerate_complexes(n: usize, pure_only: bool) -> Result<Box<dyn Iterator<Item = SimplicialComplex>>> {
    if n > COMPLEX_LIMIT {
        return Err(Error::TooLarge { what: "complex enumeration", n, max: COMPLEX_LIMIT });
    }
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if pure_only {
        Ok(Box::new((0..pure_complex_count(n)).map(move |i| pure_complex_at(n, i))))
    } else {
        Ok(Box::new(Antichains::new(n)))
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Face> {
    let mut faces: Vec<Face> = (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(Face::from_mask).collect();
    faces.sort();
    faces
}

/// Number of pure complexes on `1..=n` as enumerated: `1 + sum_k (2^(n choose k) - 1)`.
pub fn pure_complex_count(n: usize) -> u64 {
    1 + (1..=n).map(|k| (1u64 << binomial(n, k)) - 1).sum::<u64>()
}

/// The `index`-th pure complex: index 0 is the empty antichain, then for `k = 1..=n` every
/// non-empty family of `k`-subsets by ascending selection mask.
pub fn pure_complex_at(n: usize, index: u64) -> SimplicialComplex {
    if index == 0 {
        return SimplicialComplex::empty_face_only(n);
    }
    let mut rest = index - 1;
    for k in 1..=n {
        let block = (1u64 << binomial(n, k)) - 1;
        if rest < block {
            let select = rest + 1;
            let faces = subsets_of_size(n, k)
                .into_iter()
                .enumerate()
                .filter(|(i, _)| select >> i & 1 == 1)
                .map(|(_, f)| f)
                .collect();
            return SimplicialComplex::generated_by(n, faces);
        }
        rest -= block;
    }
    panic!("pure complex index {index} out of range for n = {n}");
}

/// Depth-first enumeration of antichains. Candidates are the non-empty subsets; each carries a
/// mask of the candidates comparable to it, so the next addable candidate is a bit scan.
struct Antichains {
    n: usize,
    candidates: Vec<Face>,
    comparable: Vec<u64>,
    stack: Vec<(usize, u64)>,
    blocked: u64,
    started: bool,
}

impl Antichains {
    fn new(n: usize) -> Self {
        let mut candidates: Vec<Face> = (1u32..1 << n).map(Face::from_mask).collect();
        candidates.sort();
        let comparable = candidates
            .iter()
            .map(|a| {
                candidates
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| a.is_subset(**b) || b.is_subset(*a))
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        Antichains { n, candidates, comparable, stack: Vec::new(), blocked: 0, started: false }
    }

    fn every(&self) -> u64 {
        let m = self.candidates.len();
        if m == 64 {
            u64::MAX
        } else {
            (1u64 << m) - 1
        }
    }

    /// Candidates with index greater than `index`.
    fn above(&self, index: usize) -> u64 {
        self.every() & !(u64::MAX >> (63 - index))
    }

    fn push_lowest(&mut self, avail: u64) {
        let j = avail.trailing_zeros() as usize;
        self.stack.push((j, self.blocked));
        self.blocked |= self.comparable[j];
    }

    fn current(&self) -> SimplicialComplex {
        if self.stack.is_empty() {
            return SimplicialComplex::empty_face_only(self.n);
        }
        SimplicialComplex::generated_by(self.n, self.stack.iter().map(|&(j, _)| self.candidates[j]).collect())
    }
}

impl Iterator for Antichains {
    type Item = SimplicialComplex;

    fn next(&mut self) -> Option<SimplicialComplex> {
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        let from = match self.stack.last() {
            Some(&(j, _)) => self.above(j),
            None => self.every(),
        };
        let avail = !self.blocked & from;
        if avail != 0 {
            self.push_lowest(avail);
            return Some(self.current());
        }
        while let Some((j, prev)) = self.stack.pop() {
            self.blocked = prev;
            let avail = !self.blocked & self.above(j);
            if avail != 0 {
                self.push_lowest(avail);
                return Some(self.current());
            }
        }
        None
    }
}
