use std::fmt;

use crate::{Error, Face, Result, SimplicialComplex, Vertex, MAX_VERTICES};

/// Simple undirected graph on vertices `1..=n`, stored as neighborhood bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { what: "graph", n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let full = Face::full(n).mask();
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    /// Builds a graph from unordered pairs. Repeated edges collapse; loops and labels
    /// outside `1..=n` are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::LabelOutOfRange { label: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    /// The graph whose edge set is selected by `mask`, bit `k` standing for the `k`-th pair
    /// in the order (1,2), (1,3), ..., (1,n), (2,3), ...
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let mut adj = vec![0u32; n];
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if mask >> bit & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        Graph { n, adj }
    }

    /// Inverse of [`Graph::from_edge_mask`].
    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Face {
        Face::full(self.n)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n && self.neighbors(u).contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: Vertex) -> Face {
        Face::from_mask(self.adj[v - 1])
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: Vertex) -> Face {
        self.neighbors(v).with(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn is_independent(&self, set: Face) -> bool {
        set.iter().all(|v| self.neighbors(v).intersection(set).is_empty())
    }

    /// Every vertex lies in `set` or has a neighbor in it.
    pub fn is_dominating(&self, set: Face) -> bool {
        let mut covered = set.mask();
        for v in set.iter() {
            covered |= self.adj[v - 1];
        }
        covered & Face::full(self.n).mask() == Face::full(self.n).mask()
    }

    pub fn complement(&self) -> Graph {
        let full = Face::full(self.n).mask();
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// The graph restricted to `keep`; vertices outside it lose all their edges but keep
    /// their labels.
    pub fn restricted(&self, keep: Face) -> Graph {
        let adj = (0..self.n)
            .map(|v| if keep.mask() >> v & 1 == 1 { self.adj[v] & keep.mask() } else { 0 })
            .collect();
        Graph { n: self.n, adj }
    }

    /// The graph as a 1-dimensional complex: edges plus every edgeless vertex as a point.
    pub fn edge_complex(&self) -> SimplicialComplex {
        let mut faces: Vec<Face> = self
            .edges()
            .into_iter()
            .map(|(u, v)| Face::singleton(u).with(v))
            .collect();
        faces.extend((1..=self.n).filter(|&v| self.adj[v - 1] == 0).map(Face::singleton));
        SimplicialComplex::generated_by(self.n, faces)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Path `1 - 2 - ... - n`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

/// Cycle `1 - 2 - ... - n - 1`.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
    edges.push((n, 1));
    Graph::from_edges(n, &edges).expect("valid cycle")
}

/// Star with center 1 and leaves `2..=leaves + 1`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("valid star")
}

/// Complete bipartite graph with sides `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=a {
        for v in (a + 1)..=(a + b) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges).expect("valid bipartite graph")
}
