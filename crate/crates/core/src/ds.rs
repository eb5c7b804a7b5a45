//! Construction strings over `D` (add a disjoint vertex), `S` (star a new vertex in the current
//! dimension) and `|` (raise the star dimension by one).
//!
//! Vertices are named by the standard shifted labeling: the `k` star vertices get `1..=k` from
//! right to left, the disjoint vertices get `k+1..=n` from left to right.

use std::fmt;
use std::str::FromStr;

use crate::shifted::star_d;
use crate::threshold::{creation_sequence, CreationSequence, Step};
use crate::{Error, Face, Graph, Result, SimplicialComplex, VertexLabeling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DsToken {
    Disjoint,
    Star,
    Bar,
}

impl DsToken {
    pub fn symbol(self) -> char {
        match self {
            DsToken::Disjoint => 'D',
            DsToken::Star => 'S',
            DsToken::Bar => '|',
        }
    }

    pub fn is_vertex(self) -> bool {
        self != DsToken::Bar
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DsString {
    tokens: Vec<DsToken>,
}

/// How [`DsString::evaluate_with`] names the vertices it creates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Naming {
    /// Vertex names are the shifted labels of [`DsString::labels`].
    #[default]
    Labels,
    /// The `i`-th vertex token creates vertex `i`.
    Chronological,
}

/// Parses a construction string. Whitespace is ignored; every bar must be followed by an `S`
/// somewhere later in the string. No canonicalization is applied.
pub fn parse_ds(text: &str) -> Result<DsString> {
    let mut tokens = Vec::new();
    let mut pending_bar: Option<usize> = None;
    for (pos, ch) in text.chars().enumerate() {
        let tok = match ch {
            'D' => DsToken::Disjoint,
            'S' => {
                pending_bar = None;
                DsToken::Star
            }
            '|' => {
                pending_bar.get_or_insert(pos);
                DsToken::Bar
            }
            c if c.is_whitespace() => continue,
            c => return Err(Error::IllegalChar { ch: c, pos }),
        };
        tokens.push(tok);
    }
    if tokens.is_empty() {
        return Err(Error::EmptyString);
    }
    if let Some(pos) = pending_bar {
        return Err(Error::DanglingBar { pos });
    }
    Ok(DsString { tokens })
}

impl FromStr for DsString {
    type Err = Error;

    fn from_str(s: &str) -> Result<DsString> {
        parse_ds(s)
    }
}

impl fmt::Display for DsString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tokens {
            write!(f, "{}", t.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for DsString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DsString({self})")
    }
}

impl DsString {
    /// Wraps raw tokens without validation.
    pub fn from_tokens(tokens: Vec<DsToken>) -> DsString {
        DsString { tokens }
    }

    /// The bar-free string of a creation sequence.
    pub fn from_creation_sequence(seq: &CreationSequence) -> DsString {
        let tokens = seq
            .steps
            .iter()
            .map(|(step, _)| match step {
                Step::Disjoint => DsToken::Disjoint,
                Step::Star => DsToken::Star,
            })
            .collect();
        DsString { tokens }
    }

    pub fn tokens(&self) -> &[DsToken] {
        &self.tokens
    }

    pub fn vertex_count(&self) -> usize {
        self.tokens.iter().filter(|t| t.is_vertex()).count()
    }

    pub fn star_count(&self) -> usize {
        self.tokens.iter().filter(|&&t| t == DsToken::Star).count()
    }

    pub fn bar_count(&self) -> usize {
        self.tokens.iter().filter(|&&t| t == DsToken::Bar).count()
    }

    /// Equivalent string with a leading `D` and every bar directly in front of an `S`.
    ///
    /// A bar only changes the dimension of later stars, so disjoint vertices commute with it;
    /// bars are re-emitted right before the next star that needs them and dropped when no star
    /// follows. Starring onto an empty complex adds a lone vertex, so a leading `S` becomes `D`.
    pub fn canonicalize(&self) -> DsString {
        let mut out = Vec::with_capacity(self.tokens.len());
        let mut seen_vertex = false;
        let mut dim = 1;
        let mut emitted_dim = 1;
        for &tok in &self.tokens {
            match tok {
                DsToken::Bar => dim += 1,
                DsToken::Disjoint => {
                    out.push(DsToken::Disjoint);
                    seen_vertex = true;
                }
                DsToken::Star if !seen_vertex => {
                    out.push(DsToken::Disjoint);
                    seen_vertex = true;
                }
                DsToken::Star => {
                    while emitted_dim < dim {
                        out.push(DsToken::Bar);
                        emitted_dim += 1;
                    }
                    out.push(DsToken::Star);
                }
            }
        }
        DsString { tokens: out }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize() == *self
    }

    /// Shifted label of each vertex token, in token order.
    pub fn labels(&self) -> Vec<usize> {
        let k = self.star_count();
        let mut next_star = k;
        let mut next_disjoint = k + 1;
        let mut labels = Vec::with_capacity(self.vertex_count());
        for &tok in &self.tokens {
            match tok {
                DsToken::Star => {
                    labels.push(next_star);
                    next_star -= 1;
                }
                DsToken::Disjoint => {
                    labels.push(next_disjoint);
                    next_disjoint += 1;
                }
                DsToken::Bar => {}
            }
        }
        labels
    }

    /// The shifted labeling of the chronologically named complex: vertex `i` (the `i`-th
    /// vertex token) gets the `i`-th entry of [`DsString::labels`].
    pub fn label_from_string(&self) -> VertexLabeling {
        VertexLabeling::from_ranks(self.labels()).expect("labels form a permutation")
    }

    pub fn evaluate(&self) -> SimplicialComplex {
        self.evaluate_with(Naming::Labels)
    }

    /// Folds the string left to right: `D` adds an isolated vertex, `|` raises the star
    /// dimension (initially 1), `S` applies `star_d` with a fresh vertex.
    pub fn evaluate_with(&self, naming: Naming) -> SimplicialComplex {
        let n = self.vertex_count();
        let names: Vec<usize> = match naming {
            Naming::Labels => self.labels(),
            Naming::Chronological => (1..=n).collect(),
        };
        let mut complex = SimplicialComplex::empty_face_only(n);
        let mut dim = 1;
        let mut next = 0;
        for &tok in &self.tokens {
            match tok {
                DsToken::Bar => dim += 1,
                DsToken::Disjoint => {
                    let mut faces = complex.facets().to_vec();
                    faces.push(Face::singleton(names[next]));
                    complex = SimplicialComplex::generated_by(n, faces);
                    next += 1;
                }
                DsToken::Star => {
                    complex = star_d(&complex, names[next], dim).expect("fresh vertex");
                    next += 1;
                }
            }
        }
        complex
    }

    /// Maps a bar-free string by `D -> |S` and `S -> D`, then drops a leading bar.
    pub fn flag_transform(&self) -> Result<DsString> {
        let mut out = Vec::with_capacity(2 * self.tokens.len());
        for &tok in &self.tokens {
            match tok {
                DsToken::Bar => return Err(Error::ContainsBar),
                DsToken::Disjoint => out.extend([DsToken::Bar, DsToken::Star]),
                DsToken::Star => out.push(DsToken::Disjoint),
            }
        }
        if out.first() == Some(&DsToken::Bar) {
            out.remove(0);
        }
        Ok(DsString { tokens: out })
    }

    /// Every dimension block holds exactly one `S`. The first vertex token may be read as
    /// either `D` or `S`, so the first block passes with zero or one further star.
    pub fn is_one_star_per_dimension(&self) -> bool {
        let start = match self.tokens.iter().position(|t| t.is_vertex()) {
            Some(i) => i,
            None => return false,
        };
        let mut blocks = self.tokens[start + 1..].split(|&t| t == DsToken::Bar);
        let stars = |block: &[DsToken]| block.iter().filter(|&&t| t == DsToken::Star).count();
        let first_ok = blocks.next().map(stars).unwrap_or(0) <= 1;
        first_ok && blocks.all(|b| stars(b) == 1)
    }

    /// Color of each vertex token: the leading vertices up to the first further `S` share
    /// color 0, and each later `S` opens a new color shared with the `D`s that follow it.
    pub fn block_coloring(&self) -> Vec<usize> {
        let mut colors = Vec::with_capacity(self.vertex_count());
        let mut color = 0;
        for &tok in self.tokens.iter().filter(|t| t.is_vertex()) {
            if tok == DsToken::Star && !colors.is_empty() {
                color += 1;
            }
            colors.push(color);
        }
        colors
    }
}

/// The creation string of a threshold graph (see [`creation_sequence`] for tie-breaking).
pub fn encode_threshold(g: &Graph) -> Result<DsString> {
    Ok(DsString::from_creation_sequence(&creation_sequence(g)?))
}
