//! Faces as vertex bitmasks.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result, MAX_VERTICES};

/// 1-based vertex label.
pub type Vertex = usize;

/// A finite set of vertices, stored as a bitmask (bit `v - 1` for vertex `v`).
///
/// The ordering is the canonical face order used for every output: by size, then
/// lexicographically on the ascending member list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u32);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_mask(mask: u32) -> Face {
        Face(mask)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub fn singleton(v: Vertex) -> Face {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        Face(1 << (v - 1))
    }

    /// All of `1..=n`.
    pub fn full(n: usize) -> Face {
        if n >= 32 {
            Face(u32::MAX)
        } else {
            Face((1u32 << n) - 1)
        }
    }

    /// Builds a face from vertex labels, rejecting labels outside `1..=n`. Duplicates collapse.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vertices: I, n: usize) -> Result<Face> {
        let mut mask = 0u32;
        for v in vertices {
            if v == 0 || v > n || v > MAX_VERTICES {
                return Err(Error::LabelOutOfRange { label: v, n });
            }
            mask |= 1 << (v - 1);
        }
        Ok(Face(mask))
    }

    /// Parses the compact digit notation `"124"` (single-digit labels only).
    pub fn digits(s: &str) -> Face {
        let mut mask = 0u32;
        for c in s.chars() {
            let v = c.to_digit(10).expect("digit label") as usize;
            assert!(v >= 1, "labels start at 1");
            mask |= 1 << (v - 1);
        }
        Face(mask)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: Vertex) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: Vertex) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: Vertex) -> Face {
        self.difference(Face::singleton(v))
    }

    /// Largest label present, 0 for the empty face.
    pub fn max_vertex(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Members in ascending order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Every subset of this face, including the empty face and the face itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(Face(cur))
        })
    }
}

pub struct FaceIter(u32);

impl Iterator for FaceIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Face) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // smallest differing vertex belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Face) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
