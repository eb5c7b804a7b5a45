//! Complexes built from a graph or from another complex, and the flag, balanced and pencil
//! predicates.

use crate::ds::DsString;
use crate::threshold::creation_sequence;
use crate::{Error, Face, Graph, Result, SimplicialComplex, Vertex};

/// Faces are the independent sets of `g`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    // maximal independent sets are the maximal cliques of the complement
    let comp = g.complement();
    let mut facets = Vec::new();
    bron_kerbosch(&comp, Face::EMPTY, g.vertices(), Face::EMPTY, &mut facets);
    SimplicialComplex::generated_by(g.n(), facets)
}

fn bron_kerbosch(g: &Graph, r: Face, p: Face, x: Face, out: &mut Vec<Face>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(p).len())
        .expect("p is non-empty");
    let mut p = p;
    let mut x = x;
    for v in p.difference(g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p = p.without(v);
        x = x.with(v);
    }
}

/// The complex whose minimal non-faces are the facets of `k`: faces are the subsets of the
/// ground set containing no facet of `k`.
///
/// Its facets are the complements of the minimal transversals of the facets of `k`, computed
/// by adding one facet at a time and keeping only inclusion-minimal transversals.
pub fn gen_independence_complex(k: &SimplicialComplex) -> SimplicialComplex {
    let mut transversals: Vec<Face> = vec![Face::EMPTY];
    for &facet in k.facets() {
        let mut next: Vec<Face> = Vec::new();
        for &t in &transversals {
            if !t.intersection(facet).is_empty() {
                next.push(t);
            } else {
                next.extend(facet.iter().map(|v| t.with(v)));
            }
        }
        transversals = minimal_sets(next);
    }
    let full = Face::full(k.n());
    let facets = transversals.into_iter().map(|t| full.difference(t)).collect();
    SimplicialComplex::generated_by(k.n(), facets)
}

fn minimal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by_key(|f| (f.len(), f.mask()));
    sets.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Largest graph [`dominance_complex`] accepts.
pub const DOMINANCE_LIMIT: usize = 20;

/// Faces are the complements of dominating sets, found by scanning all `2^n` vertex subsets.
/// The graph on zero vertices gives the void complex.
pub fn dominance_complex(g: &Graph) -> Result<SimplicialComplex> {
    let n = g.n();
    if n > DOMINANCE_LIMIT {
        return Err(Error::TooLarge { what: "dominance complex", n, max: DOMINANCE_LIMIT });
    }
    if n == 0 {
        return Ok(SimplicialComplex::void(0));
    }
    let full = Face::full(n).mask();
    let size = 1usize << n;
    let mut covered = vec![0u32; size];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        covered[mask] = covered[mask & (mask - 1)] | g.closed_neighborhood(low + 1).mask();
    }
    let mut facets = Vec::new();
    for mask in 0..size {
        if covered[mask] != full {
            continue;
        }
        let minimal = Face::from_mask(mask as u32)
            .iter()
            .all(|v| covered[mask & !(1 << (v - 1))] != full);
        if minimal {
            facets.push(Face::from_mask(full & !(mask as u32)));
        }
    }
    Ok(SimplicialComplex::generated_by(n, facets))
}

/// Faces are the vertex sets with a common neighbor; the facets are among the neighborhoods
/// `N(v)`. The graph on zero vertices gives the void complex.
pub fn neighborhood_complex(g: &Graph) -> SimplicialComplex {
    if g.n() == 0 {
        return SimplicialComplex::void(0);
    }
    let mut faces: Vec<Face> = (1..=g.n()).map(|v| g.neighbors(v)).collect();
    faces.push(Face::EMPTY);
    SimplicialComplex::generated_by(g.n(), faces)
}

/// Facets are the inclusion-minimal closed neighborhoods `N[v]`. The graph on zero vertices
/// gives the complex with only the empty face.
pub fn closed_neighborhood_complex(g: &Graph) -> SimplicialComplex {
    if g.n() == 0 {
        return SimplicialComplex::empty_face_only(0);
    }
    let closed: Vec<Face> = (1..=g.n()).map(|v| g.closed_neighborhood(v)).collect();
    SimplicialComplex::generated_by(g.n(), minimal_sets(closed))
}

/// Every minimal non-face has exactly two elements.
pub fn is_flag(k: &SimplicialComplex) -> Result<bool> {
    Ok(k.minimal_nonfaces()?.iter().all(|f| f.len() == 2))
}

/// Vertex colors `0..=d` with every face rainbow. Vertices that are not faces get color 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedColoring {
    /// `colors[v - 1]` is the color of vertex `v`.
    pub colors: Vec<usize>,
}

impl BalancedColoring {
    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v - 1]
    }

    /// True when the coloring uses colors `0..=dim k` and no face repeats a color.
    pub fn is_valid_for(&self, k: &SimplicialComplex) -> bool {
        let palette = (k.dimension() + 1).max(1) as usize;
        self.colors.len() == k.n()
            && self.colors.iter().all(|&c| c < palette)
            && k.facets().iter().all(|f| {
                let mut seen = 0u64;
                f.iter().all(|v| {
                    let bit = 1u64 << self.color(v);
                    let fresh = seen & bit == 0;
                    seen |= bit;
                    fresh
                })
            })
    }
}

/// Largest ground set [`find_balanced_coloring`] accepts.
pub const COLORING_LIMIT: usize = 12;

/// Backtracking `(d + 1)`-coloring of the 1-skeleton. A face is rainbow exactly when all of its
/// vertex pairs, which are edges, get different colors.
pub fn find_balanced_coloring(k: &SimplicialComplex) -> Result<Option<BalancedColoring>> {
    let n = k.n();
    if n > COLORING_LIMIT {
        return Err(Error::TooLarge { what: "balanced coloring search", n, max: COLORING_LIMIT });
    }
    let palette = (k.dimension() + 1).max(1) as usize;
    let skeleton = k.one_skeleton();
    let mut order: Vec<Vertex> = k.support().iter().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(skeleton.degree(v)), v));
    let mut colors = vec![usize::MAX; n];
    if color_from(&skeleton, &order, 0, palette, &mut colors) {
        for c in colors.iter_mut().filter(|c| **c == usize::MAX) {
            *c = 0;
        }
        Ok(Some(BalancedColoring { colors }))
    } else {
        Ok(None)
    }
}

fn color_from(g: &Graph, order: &[Vertex], at: usize, palette: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(at) else {
        return true;
    };
    // colors are interchangeable, so never open more than one new color at a time
    let used = order[..at].iter().map(|&u| colors[u - 1]).max().map_or(0, |m| m + 1);
    for c in 0..palette.min(used + 1) {
        if g.neighbors(v).iter().any(|u| colors[u - 1] == c) {
            continue;
        }
        colors[v - 1] = c;
        if color_from(g, order, at + 1, palette, colors) {
            return true;
        }
        colors[v - 1] = usize::MAX;
    }
    false
}

/// A pure `d`-dimensional complex on `n` vertices made of `n - d` facets that all contain a
/// common `(d-1)`-face.
pub fn is_pencil(k: &SimplicialComplex) -> bool {
    if k.is_void() || !k.is_pure() {
        return false;
    }
    let d = k.dimension();
    if d < 0 {
        return false;
    }
    let common = k.facets().iter().fold(Face::full(k.n()), |acc, f| acc.intersection(*f));
    common.len() as isize >= d && k.facets().len() as isize == k.n() as isize - d
}

/// The balanced coloring read off the construction string of a shifted flag complex.
///
/// `k` is the independence complex of the complement `G` of its 1-skeleton. When `G` is
/// threshold, its creation string mapped by `D -> |S`, `S -> D` builds `k`, and each `S` of the
/// image opens a new color shared with the `D`s after it. Returns `None` when `k` is not the
/// independence complex of a threshold graph.
pub fn flag_string_coloring(k: &SimplicialComplex) -> Option<BalancedColoring> {
    let g = k.one_skeleton().complement();
    if independence_complex(&g) != *k {
        return None;
    }
    let seq = creation_sequence(&g).ok()?;
    let image = DsString::from_creation_sequence(&seq).flag_transform().ok()?.canonicalize();
    let block = image.block_coloring();
    let mut colors = vec![0; k.n()];
    for (&(_, v), &c) in seq.steps.iter().zip(&block) {
        colors[v - 1] = c;
    }
    Some(BalancedColoring { colors })
}

/// Brute-force isomorphism test by backtracking over vertex maps, pruned by per-vertex facet
/// incidence and by pairwise co-occurrence counts.
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    let n = a.n();
    if n != b.n() || a.facets().len() != b.facets().len() {
        return false;
    }
    let sizes = |k: &SimplicialComplex| {
        let mut s: Vec<usize> = k.facets().iter().map(|f| f.len()).collect();
        s.sort();
        s
    };
    if sizes(a) != sizes(b) {
        return false;
    }
    let signature = |k: &SimplicialComplex, v: Vertex| {
        let mut s: Vec<usize> = k.facets().iter().filter(|f| f.contains(v)).map(|f| f.len()).collect();
        s.sort();
        s
    };
    let sig_a: Vec<Vec<usize>> = (1..=n).map(|v| signature(a, v)).collect();
    let sig_b: Vec<Vec<usize>> = (1..=n).map(|v| signature(b, v)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return false;
    }
    let pair_counts = |k: &SimplicialComplex| {
        let mut c = vec![0usize; n * n];
        for f in k.facets() {
            for u in f.iter() {
                for v in f.iter() {
                    c[(u - 1) * n + (v - 1)] += 1;
                }
            }
        }
        c
    };
    let iso = Iso {
        a,
        b,
        n,
        sig_a,
        sig_b,
        pair_a: pair_counts(a),
        pair_b: pair_counts(b),
    };
    let mut map = vec![0usize; n];
    iso.extend(1, &mut map, Face::EMPTY)
}

struct Iso<'a> {
    a: &'a SimplicialComplex,
    b: &'a SimplicialComplex,
    n: usize,
    sig_a: Vec<Vec<usize>>,
    sig_b: Vec<Vec<usize>>,
    pair_a: Vec<usize>,
    pair_b: Vec<usize>,
}

impl Iso<'_> {
    fn extend(&self, v: Vertex, map: &mut [usize], used: Face) -> bool {
        if v > self.n {
            return self.a.relabeled(map) == *self.b;
        }
        for w in 1..=self.n {
            if used.contains(w) || self.sig_a[v - 1] != self.sig_b[w - 1] {
                continue;
            }
            let consistent = (1..v).all(|u| {
                self.pair_a[(u - 1) * self.n + (v - 1)] == self.pair_b[(map[u - 1] - 1) * self.n + (w - 1)]
            });
            if !consistent {
                continue;
            }
            map[v - 1] = w;
            if self.extend(v + 1, map, used.with(w)) {
                return true;
            }
        }
        map[v - 1] = 0;
        false
    }
}
