//! Shiftedness: checking a labeling, searching for one, and the padded componentwise order.
//!
//! Convention: a smaller label is more dominant. A complex is shifted under a labeling `l` when
//! for every face `F`, every `v` in `F` and every `w` outside `F` with `l(w) < l(v)`, the set
//! `F - v + w` is again a face.

use crate::complex::FaceIndex;
use crate::{Error, Face, Result, SimplicialComplex, Vertex, MAX_VERTICES};

/// A bijection from the vertices `1..=n` to ranks `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexLabeling {
    ranks: Vec<usize>,
}

impl VertexLabeling {
    pub fn identity(n: usize) -> Self {
        VertexLabeling { ranks: (1..=n).collect() }
    }

    /// `ranks[v - 1]` is the label of vertex `v`.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        let mut seen = vec![false; n];
        for &r in &ranks {
            if r == 0 || r > n || seen[r - 1] {
                return Err(Error::InvalidLabeling(format!("{ranks:?} is not a permutation of 1..={n}")));
            }
            seen[r - 1] = true;
        }
        Ok(VertexLabeling { ranks })
    }

    /// Labeling that assigns rank `i + 1` to `order[i]`.
    pub fn from_order(order: &[Vertex]) -> Result<Self> {
        let n = order.len();
        let mut ranks = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v > n || ranks[v - 1] != 0 {
                return Err(Error::InvalidLabeling(format!("{order:?} is not an ordering of 1..={n}")));
            }
            ranks[v - 1] = i + 1;
        }
        Ok(VertexLabeling { ranks })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, v: Vertex) -> usize {
        self.ranks[v - 1]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Vertices sorted by increasing label.
    pub fn order(&self) -> Vec<Vertex> {
        let mut order = vec![0; self.ranks.len()];
        for (i, &r) in self.ranks.iter().enumerate() {
            order[r - 1] = i + 1;
        }
        order
    }

    /// The labeling that reverses this one (`n + 1 - l(v)`).
    pub fn reversed(&self) -> Self {
        let n = self.ranks.len();
        VertexLabeling { ranks: self.ranks.iter().map(|r| n + 1 - r).collect() }
    }

    /// Renames every vertex to its label.
    pub fn apply(&self, complex: &SimplicialComplex) -> SimplicialComplex {
        complex.relabeled(&self.ranks)
    }
}

/// `w` may replace `v` in every face: for each facet `G` containing `v` but not `w`,
/// `G - v + w` is a face. Checking facets is enough since any such replacement in a smaller
/// face lies inside either `G` or `G - v + w`.
fn replaces(complex: &SimplicialComplex, index: &FaceIndex, w: Vertex, v: Vertex) -> bool {
    complex
        .facets()
        .iter()
        .filter(|g| g.contains(v) && !g.contains(w))
        .all(|g| index.contains(g.without(v).with(w)))
}

pub fn is_shifted_under(complex: &SimplicialComplex, labeling: &VertexLabeling) -> Result<bool> {
    if labeling.len() != complex.n() {
        return Err(Error::InvalidLabeling(format!(
            "labeling covers {} vertices, complex has {}",
            labeling.len(),
            complex.n()
        )));
    }
    let index = FaceIndex::new(complex);
    let order = labeling.order();
    for (i, &w) in order.iter().enumerate() {
        for &v in &order[i + 1..] {
            if !replaces(complex, &index, w, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Largest ground set accepted by [`find_shifted_labeling`].
pub const LABELING_SEARCH_LIMIT: usize = 10;

struct LabelingSearch<'a> {
    complex: &'a SimplicialComplex,
    index: FaceIndex<'a>,
    n: usize,
    /// memo[w * n + v]: 0 unknown, 1 yes, 2 no
    memo: Vec<u8>,
    candidates: Vec<Vertex>,
}

impl LabelingSearch<'_> {
    fn replaces(&mut self, w: Vertex, v: Vertex) -> bool {
        let slot = (w - 1) * self.n + (v - 1);
        if self.memo[slot] == 0 {
            self.memo[slot] = if replaces(self.complex, &self.index, w, v) { 1 } else { 2 };
        }
        self.memo[slot] == 1
    }

    fn extend(&mut self, order: &mut Vec<Vertex>, remaining: Face) -> bool {
        if remaining.is_empty() {
            return true;
        }
        for i in 0..self.candidates.len() {
            let v = self.candidates[i];
            if !remaining.contains(v) {
                continue;
            }
            let rest = remaining.without(v);
            // the next label must dominate every vertex still unlabeled
            if rest.iter().all(|u| self.replaces(v, u)) {
                order.push(v);
                if self.extend(order, rest) {
                    return true;
                }
                order.pop();
            }
        }
        false
    }
}

/// Searches for a labeling under which `complex` is shifted.
///
/// Vertices are tried in decreasing order of facet incidence; a partial labeling is abandoned
/// as soon as its newest vertex fails to dominate some unlabeled vertex.
pub fn find_shifted_labeling(complex: &SimplicialComplex) -> Result<Option<VertexLabeling>> {
    let n = complex.n();
    if n > LABELING_SEARCH_LIMIT {
        return Err(Error::TooLarge { what: "shifted labeling search", n, max: LABELING_SEARCH_LIMIT });
    }
    let mut candidates: Vec<Vertex> = (1..=n).collect();
    let incidence = |v: Vertex| complex.facets().iter().filter(|f| f.contains(v)).count();
    candidates.sort_by_key(|&v| (std::cmp::Reverse(incidence(v)), v));
    let mut search = LabelingSearch {
        complex,
        index: FaceIndex::new(complex),
        n,
        memo: vec![0; n * n],
        candidates,
    };
    let mut order = Vec::with_capacity(n);
    if !search.extend(&mut order, Face::full(n)) {
        return Ok(None);
    }
    let labeling = VertexLabeling::from_order(&order)?;
    if !is_shifted_under(complex, &labeling)? {
        return Err(Error::Inconsistent(format!("search produced a non-shifted labeling for {complex}")));
    }
    Ok(Some(labeling))
}

/// Componentwise comparison of the ascending member lists after left-padding the shorter one
/// with zeros. Reflexive.
pub fn padded_less_or_equal(x: Face, y: Face) -> bool {
    let xs = x.to_vec();
    let ys = y.to_vec();
    if xs.len() > ys.len() {
        // a positive label never fits under a padding zero
        return false;
    }
    let offset = ys.len() - xs.len();
    xs.iter().zip(&ys[offset..]).all(|(a, b)| a <= b)
}

/// True when the faces form an order ideal of the padded componentwise order.
///
/// Every relation `x <= y` is a chain of two elementary moves: deleting the smallest member,
/// or lowering one member by one while keeping the members distinct. Subsets are faces by
/// construction, so only the lowering moves need checking.
pub fn is_order_ideal(complex: &SimplicialComplex) -> Result<bool> {
    let faces = complex.all_faces()?;
    let index = FaceIndex::new(complex);
    for y in faces {
        for v in y.iter() {
            if v > 1 && !y.contains(v - 1) && !index.contains(y.without(v).with(v - 1)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `K ∪ { f + v : f ∈ K, |f| <= d }` for a vertex `v` that is not a face of `K`.
/// The ground set grows to include `v` when needed.
pub fn star_d(complex: &SimplicialComplex, v: Vertex, d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if v == 0 || v > MAX_VERTICES {
        return Err(Error::LabelOutOfRange { label: v, n: MAX_VERTICES });
    }
    if v <= complex.n() && complex.is_face(Face::singleton(v)) {
        return Err(Error::VertexPresent(v));
    }
    let n = complex.n().max(v);
    let mut faces: Vec<Face> = complex.facets().to_vec();
    for &g in complex.facets() {
        if g.len() <= d {
            faces.push(g.with(v));
        } else {
            faces.extend(g.subsets().filter(|s| s.len() == d).map(|s| s.with(v)));
        }
    }
    Ok(SimplicialComplex::generated_by(n, faces))
}

/// Cone over `complex` with apex `v`.
pub fn cone(complex: &SimplicialComplex, v: Vertex) -> Result<SimplicialComplex> {
    if v <= complex.n() && complex.is_face(Face::singleton(v)) {
        return Err(Error::VertexPresent(v));
    }
    let n = complex.n().max(v);
    let faces = complex.facets().iter().map(|g| g.with(v)).collect();
    Ok(SimplicialComplex::generated_by(n, faces))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    fn complex(list: &[&str], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets(list.iter().map(|s| Face::digits(s)), n).unwrap()
    }

    #[test]
    fn labeling_validation() {
        assert!(VertexLabeling::from_ranks(vec![2, 1, 3]).is_ok());
        assert!(VertexLabeling::from_ranks(vec![2, 2, 3]).is_err());
        assert!(VertexLabeling::from_ranks(vec![0, 1]).is_err());
        let l = VertexLabeling::from_order(&[3, 1, 2]).unwrap();
        assert_eq!(l.ranks(), &[2, 3, 1]);
        assert_eq!(l.order(), vec![3, 1, 2]);
        assert_eq!(l.reversed().ranks(), &[2, 1, 3]);
    }

    #[test]
    fn shifted_under_identity() {
        let small_shifted = complex(&["123", "14", "24"], 4);
        assert!(is_shifted_under(&small_shifted, &VertexLabeling::identity(4)).unwrap());
        let simplex = SimplicialComplex::simplex(4);
        let l = VertexLabeling::from_ranks(vec![3, 1, 4, 2]).unwrap();
        assert!(is_shifted_under(&simplex, &l).unwrap());
        let ik5 = complex(&["235", "345", "12", "13"], 5);
        assert!(!is_shifted_under(&ik5, &VertexLabeling::identity(5)).unwrap());
        assert!(is_shifted_under(&small_shifted, &VertexLabeling::identity(3)).is_err());
    }

    #[test]
    fn labeling_search() {
        let k = complex(&["123", "124", "125", "134", "45"], 5);
        let l = find_shifted_labeling(&k).unwrap().expect("shifted after relabeling");
        assert!(is_shifted_under(&k, &l).unwrap());
        let swap = VertexLabeling::from_ranks(vec![1, 2, 4, 3, 5]).unwrap();
        assert!(is_shifted_under(&k, &swap).unwrap());
        assert!(!is_shifted_under(&k, &VertexLabeling::identity(5)).unwrap());

        let ik5 = complex(&["235", "345", "12", "13"], 5);
        assert_eq!(find_shifted_labeling(&ik5).unwrap(), None);
        assert_eq!(find_shifted_labeling(&graph::path(4).edge_complex()).unwrap(), None);
        assert!(find_shifted_labeling(&SimplicialComplex::simplex(11)).is_err());
    }

    #[test]
    fn labeling_search_degenerate_complexes() {
        assert!(find_shifted_labeling(&SimplicialComplex::void(3)).unwrap().is_some());
        assert!(find_shifted_labeling(&SimplicialComplex::empty_face_only(3)).unwrap().is_some());
        // a vertex that is not a face has to come last
        let k = complex(&["12"], 3);
        let l = find_shifted_labeling(&k).unwrap().unwrap();
        assert_eq!(l.rank(3), 3);
    }

    #[test]
    fn padded_order_examples() {
        assert!(padded_less_or_equal(Face::digits("24"), Face::digits("1356")));
        assert!(padded_less_or_equal(Face::digits("14"), Face::digits("24")));
        assert!(padded_less_or_equal(Face::digits("135"), Face::digits("135")));
        assert!(!padded_less_or_equal(Face::digits("1356"), Face::digits("24")));
        assert!(!padded_less_or_equal(Face::digits("34"), Face::digits("25")));
        assert!(padded_less_or_equal(Face::EMPTY, Face::digits("1")));
    }

    #[test]
    fn order_ideal_examples() {
        assert!(is_order_ideal(&complex(&["123", "14", "24"], 4)).unwrap());
        assert!(!is_order_ideal(&complex(&["24", "1", "3"], 4)).unwrap());
        assert!(is_order_ideal(&SimplicialComplex::empty_face_only(3)).unwrap());
        assert!(is_order_ideal(&SimplicialComplex::void(3)).unwrap());
    }

    #[test]
    fn star_examples() {
        let tri = SimplicialComplex::simplex(3);
        let boundary = star_d(&tri, 4, 2).unwrap();
        assert_eq!(boundary, complex(&["123", "124", "134", "234"], 4));
        assert_eq!(star_d(&tri, 4, 3).unwrap(), SimplicialComplex::simplex(4));
        let point = complex(&["1"], 1);
        assert_eq!(star_d(&point, 2, 1).unwrap(), complex(&["12"], 2));
        let nothing = SimplicialComplex::empty_face_only(1);
        assert_eq!(star_d(&nothing, 2, 1).unwrap(), complex(&["2"], 2));
        assert_eq!(star_d(&tri, 2, 1), Err(Error::VertexPresent(2)));
        assert_eq!(star_d(&tri, 4, 0), Err(Error::ZeroDimension));
    }

    #[test]
    fn star_into_ground_set_vertex() {
        // vertex 3 is in the ground set but not a face, so it may be starred in
        let k = complex(&["12"], 3);
        assert_eq!(star_d(&k, 3, 1).unwrap(), complex(&["12", "13", "23"], 3));
    }
}
