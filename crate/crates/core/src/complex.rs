//! Facet-represented simplicial complexes.
//!
//! A complex carries its ground set `1..=n` explicitly. A vertex of the ground set need not be
//! a face (such a vertex is a minimal non-face of size one); this is what lets the generalized
//! independence complex turn an isolated point into a non-face and back.
//!
//! Two degenerate complexes are distinguished: the *void* complex has no faces at all and no
//! facets, while the complex consisting of the empty face alone has the single facet `{}`.

use std::collections::HashSet;
use std::fmt;

use crate::{Error, Face, Graph, Result, Vertex, ENUMERATION_LIMIT, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    /// Antichain of maximal faces in canonical order.
    facets: Vec<Face>,
}

/// Face counts by dimension `(f_0, ..., f_d)`; the empty face is not counted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<u64>);

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn reduce_to_antichain(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.mask().cmp(&b.mask())));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

fn guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::TooLarge { what, n, max })
    } else {
        Ok(())
    }
}

impl SimplicialComplex {
    /// The complex generated by `faces` (downward closure), validated against the ground set
    /// `1..=n`. The empty face is always included, so an empty input gives the complex whose
    /// only face is `{}`.
    pub fn from_facets<I: IntoIterator<Item = Face>>(faces: I, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::NoVertices);
        }
        guard("complex", n, MAX_VERTICES)?;
        let mut all = vec![Face::EMPTY];
        for f in faces {
            if f.max_vertex() > n {
                return Err(Error::LabelOutOfRange { label: f.max_vertex(), n });
            }
            all.push(f);
        }
        Ok(Self::generated_by(n, all))
    }

    /// Like [`SimplicialComplex::from_facets`] with faces given as vertex lists.
    pub fn from_vertex_lists(lists: &[Vec<Vertex>], n: usize) -> Result<Self> {
        let faces = lists
            .iter()
            .map(|l| Face::from_vertices(l.iter().copied(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(faces, n)
    }

    /// Downward closure of `faces` without validation. An empty input yields the void complex.
    pub(crate) fn generated_by(n: usize, faces: Vec<Face>) -> Self {
        debug_assert!(faces.iter().all(|f| f.max_vertex() <= n));
        SimplicialComplex { n, facets: reduce_to_antichain(faces) }
    }

    /// The complex with no faces, not even the empty one.
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex whose only face is the empty face.
    pub fn empty_face_only(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![Face::EMPTY] }
    }

    /// Full simplex on `1..=n`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![Face::full(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Union of all facets: the vertices `v` with `{v}` a face.
    pub fn support(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// True when every vertex of the ground set is a face.
    pub fn has_full_support(&self) -> bool {
        self.support() == Face::full(self.n)
    }

    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Every face, sorted by size and then lexicographically.
    pub fn all_faces(&self) -> Result<Vec<Face>> {
        guard("face enumeration", self.n, ENUMERATION_LIMIT)?;
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort();
        Ok(faces)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let faces = self.all_faces()?;
        let dim = self.dimension();
        let mut counts = vec![0u64; (dim + 1).max(0) as usize];
        for f in faces.iter().filter(|f| !f.is_empty()) {
            counts[f.len() - 1] += 1;
        }
        Ok(FVector(counts))
    }

    /// Sets of vertices that are not faces while all their proper subsets are, in canonical order.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Face>> {
        let faces = self.all_faces()?;
        if faces.is_empty() {
            return Ok(vec![Face::EMPTY]);
        }
        let index = FaceIndex::new(self);
        let mut found: HashSet<Face> = HashSet::new();
        for f in &faces {
            for v in 1..=self.n {
                if f.contains(v) {
                    continue;
                }
                let cand = f.with(v);
                if !index.contains(cand) && cand.iter().all(|u| index.contains(cand.without(u))) {
                    found.insert(cand);
                }
            }
        }
        let mut out: Vec<Face> = found.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Graph on `1..=n` whose edges are the 1-dimensional faces.
    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("n within limits");
        for f in &self.facets {
            let vs = f.to_vec();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    g.add_edge(u, v).expect("valid edge");
                }
            }
        }
        g
    }

    /// Faces contained in `keep`. Labels are not compacted; vertices outside `keep` remain in
    /// the ground set as non-faces.
    pub fn induced_subcomplex(&self, keep: Face) -> SimplicialComplex {
        let faces = self.facets.iter().map(|f| f.intersection(keep)).collect();
        SimplicialComplex::generated_by(self.n, faces)
    }

    /// Renames vertex `v` to `map[v - 1]`. `map` must be a permutation of `1..=n`.
    pub fn relabeled(&self, map: &[Vertex]) -> SimplicialComplex {
        debug_assert_eq!(map.len(), self.n);
        let faces = self
            .facets
            .iter()
            .map(|f| Face::from_mask(f.iter().fold(0u32, |m, v| m | 1 << (map[v - 1] - 1))))
            .collect();
        SimplicialComplex::generated_by(self.n, faces)
    }

    /// Same complex on the ground set `1..=n`, `n` at least the largest label used.
    pub fn with_ground_set(&self, n: usize) -> SimplicialComplex {
        debug_assert!(self.support().max_vertex() <= n);
        SimplicialComplex { n, facets: self.facets.clone() }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "n={} void", self.n);
        }
        write!(f, "n={} [", self.n)?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Constant-time face membership for small ground sets; falls back to scanning facets.
pub(crate) struct FaceIndex<'a> {
    complex: &'a SimplicialComplex,
    bits: Option<Vec<u64>>,
}

const INDEXED_LIMIT: usize = 16;

impl<'a> FaceIndex<'a> {
    pub(crate) fn new(complex: &'a SimplicialComplex) -> Self {
        let bits = (complex.n <= INDEXED_LIMIT).then(|| {
            let mut bits = vec![0u64; (1usize << complex.n).div_ceil(64)];
            for f in &complex.facets {
                for s in f.subsets() {
                    let m = s.mask() as usize;
                    bits[m / 64] |= 1 << (m % 64);
                }
            }
            bits
        });
        FaceIndex { complex, bits }
    }

    pub(crate) fn contains(&self, face: Face) -> bool {
        match &self.bits {
            Some(bits) => {
                if face.max_vertex() > self.complex.n {
                    return false;
                }
                let m = face.mask() as usize;
                bits[m / 64] >> (m % 64) & 1 == 1
            }
            None => self.complex.is_face(face),
        }
    }
}
